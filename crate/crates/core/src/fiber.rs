//! Closed-form fibers of `f_hat`, `lambda`, `g`, `g_tilde` and `G`.
//!
//! All of them reduce to the projective quadratic `C X^2 - B XY + A Y^2`: a
//! target `[A:B:C]` of `f_hat` factors as the product of its two roots. The
//! real maps are handled by complexifying `(r, s, t) -> (r + is, t)`.

use crate::error::{Error, Result};
use crate::geometry::{Cp1Point, Cp2Point, Rp2Point, Rp4Point, S2Point, S4Point, C64};
use crate::maps::{f_hat, g_real, g_tilde, gamma_inv, lambda_map, unpack_c2r, PairS2};
use crate::quadratic::{solve_homog_quadratic, QuadraticRoots};
use crate::tolerance::Tolerance;

/// `|T|` below which the `g_tilde` fiber is declared degenerate: the phase of
/// the `[z : t]` roots can no longer be fixed by making `t` real.
pub const EQUATORIAL_GUARD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberClass<T> {
    pub point: T,
    pub multiplicity: u32,
}

/// A fiber as a multiset of preimage classes. A double root is a single class
/// of multiplicity 2, never two nearby classes.
#[derive(Clone, Debug, PartialEq)]
pub struct Fiber<T> {
    pub classes: Vec<FiberClass<T>>,
    pub on_branch: bool,
}

impl<T> Fiber<T> {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Total count with multiplicity.
    pub fn degree(&self) -> u32 {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }

    pub fn points(&self) -> impl Iterator<Item = &T> {
        self.classes.iter().map(|c| &c.point)
    }

    fn symmetric_pair<U: Copy>(a: U, b: U, double: bool, pack: impl Fn(U, U) -> T) -> Self {
        let classes = if double {
            vec![FiberClass {
                point: pack(a, a),
                multiplicity: 2,
            }]
        } else {
            vec![
                FiberClass {
                    point: pack(a, b),
                    multiplicity: 1,
                },
                FiberClass {
                    point: pack(b, a),
                    multiplicity: 1,
                },
            ]
        };
        Fiber {
            classes,
            on_branch: double,
        }
    }
}

/// Roots of the quadratic whose symmetric product is `target`.
pub fn fhat_roots(target: &Cp2Point, tol: &Tolerance) -> QuadraticRoots {
    let [a, b, c] = *target.coords();
    solve_homog_quadratic(a, b, c, tol).expect("projective points are nonzero")
}

/// Fiber of `f_hat` over `target`: the ordered pairs `(r1, r2)` and `(r2, r1)`,
/// or `(r, r)` with multiplicity 2 on the conic `z1^2 = 4 z0 z2`.
pub fn fiber_fhat(target: &Cp2Point, tol: &Tolerance) -> Fiber<[Cp1Point; 2]> {
    let r = fhat_roots(target, tol);
    Fiber::symmetric_pair(r.roots[0], r.roots[1], r.double, |a, b| [a, b])
}

/// Fiber of `lambda = f_hat . (gamma x gamma)`; the two pairs are swapped by `tau`.
pub fn fiber_lambda(target: &Cp2Point, tol: &Tolerance) -> Fiber<PairS2> {
    let r = fhat_roots(target, tol);
    let (a, b) = (gamma_inv(&r.roots[0]), gamma_inv(&r.roots[1]));
    Fiber::symmetric_pair(a, b, r.double, PairS2::new)
}

/// Unit representative `(X, Y)` of a root rotated so that `Y` is real and
/// nonnegative.
fn real_last(root: &Cp1Point) -> (C64, f64) {
    let [x, y] = *root.coords();
    let n = y.norm();
    if n == 0.0 {
        return (x, 0.0);
    }
    let phase = y.conj() / n;
    (x * phase, n)
}

/// Fiber of `g : RP^2 x RP^2 -> RP^4`.
///
/// With `P = p1 + i p2`, `Q = p3 + i p4`, `T = p5`, the roots `[X:Y]` of
/// `T X^2 - Q XY + P Y^2` are rotated so that `Y` is real and read as
/// `[Re X : Im X : Y]`. A root at `Y = 0` has no such normalization; its phase
/// is chosen to make the forward image real-proportional to the target.
///
/// Over `[P : 0 : 0]` (`Q = T = 0`) the fiber is not finite: every pair of
/// points `[a], [b]` on the line at infinity with `ab` real-proportional to `P`
/// maps there. The single class `([sqrt P], [sqrt P])` is returned as a
/// representative.
pub fn fiber_g_real(target: &Rp4Point, tol: &Tolerance) -> Result<Fiber<[Rp2Point; 2]>> {
    let [p1, p2, p3, p4, p5] = *target.coords();
    let (p, q, t) = (C64::new(p1, p2), C64::new(p3, p4), C64::new(p5, 0.0));
    let roots = solve_homog_quadratic(p, q, t, tol)?;

    let mut rs = roots.roots;
    if rs[1].coords()[1].norm() > rs[0].coords()[1].norm() {
        rs.swap(0, 1);
    }
    const FLAT: f64 = 1e-12;
    let (xa, ya, xb, yb) = if rs[0].coords()[1].norm() <= FLAT {
        // both roots at infinity: target is [P : 0 : 0], X^2 must be proportional to P
        let x = if p.norm() > 0.0 { p.sqrt() / p.norm().sqrt() } else { C64::new(1.0, 0.0) };
        (x, 0.0, x, 0.0)
    } else {
        let (xa, ya) = real_last(&rs[0]);
        let (xb, yb) = if rs[1].coords()[1].norm() > FLAT {
            real_last(&rs[1])
        } else {
            let align = p * xa.conj() + q * ya;
            let phase = if align.norm() > 0.0 { align / align.norm() } else { C64::new(1.0, 0.0) };
            (rs[1].coords()[0].norm() * phase, 0.0)
        };
        (xa, ya, xb, yb)
    };
    let a = Rp2Point::new([xa.re, xa.im, ya])?;
    let b = Rp2Point::new([xb.re, xb.im, yb])?;

    let err = g_real(&a, &b).chordal_distance(target);
    if err > tol.eq_tol.sqrt() {
        return Err(Error::DegenerateFiber(format!(
            "no real representatives reproduce the target (forward error {err:e})"
        )));
    }
    Ok(Fiber::symmetric_pair(a, b, roots.double, |a, b| [a, b]))
}

fn push_distinct<T>(classes: &mut Vec<FiberClass<T>>, point: T, multiplicity: u32, same: impl Fn(&T, &T) -> bool) {
    if !classes.iter().any(|c| same(&c.point, &point)) {
        classes.push(FiberClass { point, multiplicity });
    }
}

/// Fiber of `g_tilde : S^2 x S^2 -> S^4`, generically the four pairs
/// `{p, tau p, sigma^2 p, sigma^2 tau p}`.
///
/// The target unpacks to `(Z1, Z2, T)`; the roots of `T X^2 - Z2 XY + Z1 Y^2`
/// are the classes `[z : t]` of the two factors. Fixing `t` real and the norm
/// to 1 leaves a sign per factor, resolved by forward evaluation.
pub fn fiber_g_tilde(target: &S4Point, tol: &Tolerance) -> Result<Fiber<PairS2>> {
    let (z1, z2, t) = unpack_c2r(target.coords());
    if t.abs() <= EQUATORIAL_GUARD {
        return Err(Error::DegenerateFiber(format!(
            "|T| = {:e} is within the equatorial guard {EQUATORIAL_GUARD:e}",
            t.abs()
        )));
    }
    let roots = solve_homog_quadratic(z1, z2, C64::new(t, 0.0), tol)?;
    let lift = |r: &Cp1Point| -> Result<S2Point> {
        let (x, y) = real_last(r);
        S2Point::from_zt(x, y)
    };
    let (sa, sb) = (lift(&roots.roots[0])?, lift(&roots.roots[1])?);
    let multiplicity = roots.multiplicity();

    let mut classes = Vec::with_capacity(4);
    for (a, b) in [(sa, sb), (sb, sa)] {
        for (ea, eb) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
            let pa = if ea > 0.0 { a } else { a.antipode() };
            let pb = if eb > 0.0 { b } else { b.antipode() };
            let pair = PairS2::new(pa, pb);
            // wrong sign combinations land on the antipode of the target
            if g_tilde(&pair).dot(target) > 0.0 {
                push_distinct(&mut classes, pair, multiplicity, |x, y| x.approx_eq(y, tol.eq_tol));
            }
        }
    }
    if classes.is_empty() {
        return Err(Error::DegenerateFiber("no sign combination reaches the target".into()));
    }
    Ok(Fiber {
        classes,
        on_branch: roots.double,
    })
}

/// Fiber of `G = g_tilde . lambda^-1 : CP^2 -> S^4`, generically `{z, theta^2 c2 z}`.
pub fn fiber_big_g(target: &S4Point, tol: &Tolerance) -> Result<Fiber<Cp2Point>> {
    let cover = fiber_g_tilde(target, tol)?;
    let mut classes: Vec<FiberClass<Cp2Point>> = Vec::with_capacity(2);
    for c in &cover.classes {
        let z = lambda_map(&c.point);
        match classes.iter_mut().find(|k| k.point.approx_eq(&z, tol.eq_tol.sqrt())) {
            Some(k) => k.multiplicity += c.multiplicity,
            None => classes.push(FiberClass {
                point: z,
                multiplicity: c.multiplicity,
            }),
        }
    }
    // each class of G collects a tau-pair of g_tilde preimages
    for k in &mut classes {
        k.multiplicity = (k.multiplicity / 2).max(1);
    }
    let on_branch = classes.iter().any(|k| k.multiplicity > 1);
    Ok(Fiber { classes, on_branch })
}

/// Forward chordal error of an `f_hat` preimage.
pub fn fhat_forward_error(pre: &[Cp1Point; 2], target: &Cp2Point) -> f64 {
    f_hat(&pre[0], &pre[1]).chordal_distance(target)
}
