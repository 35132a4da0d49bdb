//! Hand-derived values, each cross-checked against a second evaluation path
//! written here from the defining formulas rather than the library closed forms.

use branchcover::fiber::{fiber_fhat, fiber_g_tilde};
use branchcover::maps::{big_g, eth, eth_as_printed, f_hat, g_tilde, lambda_map};
use branchcover::sampling::{random_cproj, random_pair};
use branchcover::{proj_eq, Cp1Point, Cp2Point, PairS2, RngSpec, S2Point, Tolerance, C64};

const I: C64 = C64::new(0.0, 1.0);

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Roots `[X:Y]` of `C X^2 - B XY + A Y^2` by the textbook formula.
fn oracle_roots(a: C64, b: C64, cc: C64) -> [(C64, C64); 2] {
    if cc.norm() < 1e-300 {
        // C = 0: Y (A Y - B X) = 0
        return [(c(1.0), c(0.0)), (a, b)];
    }
    let d = (b * b - 4.0 * a * cc).sqrt();
    [((b + d) / (2.0 * cc), c(1.0)), ((b - d) / (2.0 * cc), c(1.0))]
}

/// Inverse stereographic projection `[u:v] -> (2 u v̄, |u|^2 - |v|^2) / (|u|^2 + |v|^2)`.
fn oracle_gamma_inv((u, v): (C64, C64)) -> (C64, f64) {
    let n = u.norm_sqr() + v.norm_sqr();
    (2.0 * u * v.conj() / n, (u.norm_sqr() - v.norm_sqr()) / n)
}

/// `nu(zz', zt' + tz', tt')` packed as `(Re, Im, Re, Im, real)`.
fn oracle_g_tilde((z, t): (C64, f64), (z2, t2): (C64, f64)) -> [f64; 5] {
    let a = z * z2;
    let b = z * t2 + z2 * t;
    let r = t * t2;
    let v = [a.re, a.im, b.re, b.im, r];
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

/// `G = g_tilde . lambda^-1`: split the target into its two roots and push them through.
fn oracle_big_g(z: [C64; 3]) -> [f64; 5] {
    let [r1, r2] = oracle_roots(z[0], z[1], z[2]);
    oracle_g_tilde(oracle_gamma_inv(r1), oracle_gamma_inv(r2))
}

/// `theta` from its matrix.
fn oracle_theta(x: [C64; 3]) -> [C64; 3] {
    let m = [[I, c(0.0), c(1.0)], [c(0.0), c(1.0) - I, c(0.0)], [c(1.0), c(0.0), I]];
    std::array::from_fn(|r| (0..3).map(|k| m[r][k] * x[k]).sum())
}

fn dist(a: &[f64; 5], b: &[f64; 5]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn cp2(v: [C64; 3]) -> Cp2Point {
    Cp2Point::new(v).unwrap()
}

#[test]
fn big_g_at_the_pole_of_the_last_chart() {
    let z = [c(0.0), c(0.0), c(1.0)];
    let expected = [0.0, 0.0, 0.0, 0.0, 1.0];
    assert_eq!(*big_g(&cp2(z)).coords(), expected);
    assert!(dist(&oracle_big_g(z), &expected) < 1e-15);
}

#[test]
fn big_g_at_an_on_conic_point() {
    let z = [c(1.0), c(2.0), c(1.0)];
    let expected = [1.0, 0.0, 0.0, 0.0, 0.0];
    assert!(dist(big_g(&cp2(z)).coords(), &expected) < 1e-15);
    assert!(dist(&oracle_big_g(z), &expected) < 1e-15);
}

#[test]
fn eth_at_the_first_basis_point() {
    let x = [c(1.0), c(0.0), c(0.0)];
    let expected = [0.0, 1.0, 0.0, 0.0, 0.0];
    assert!(dist(eth(&cp2(x)).coords(), &expected) < 1e-15);
    // theta [1:0:0] = [i:0:1], then G
    let tx = oracle_theta(x);
    assert_eq!(tx, [I, c(0.0), c(1.0)]);
    assert!(dist(&oracle_big_g(tx), &expected) < 1e-15);
}

#[test]
fn f_hat_fiber_of_x_squared_minus_y_squared() {
    let target = cp2([c(-1.0), c(0.0), c(1.0)]);
    let fib = fiber_fhat(&target, &Tolerance::default());
    assert_eq!(fib.len(), 2);
    assert!(!fib.on_branch);
    let a = Cp1Point::from_real([1.0, 1.0]).unwrap();
    let b = Cp1Point::from_real([1.0, -1.0]).unwrap();
    for pre in fib.points() {
        let is_ab = proj_eq(&pre[0], &a, 1e-15) && proj_eq(&pre[1], &b, 1e-15);
        let is_ba = proj_eq(&pre[0], &b, 1e-15) && proj_eq(&pre[1], &a, 1e-15);
        assert!(is_ab || is_ba);
        // forward: [uu' : uv' + u'v : vv'] with [1:1], [1:-1]
        assert!(proj_eq(&f_hat(&pre[0], &pre[1]), &target, 1e-15));
    }
    let roots = oracle_roots(c(-1.0), c(0.0), c(1.0));
    for (x, y) in roots {
        let r = Cp1Point::new([x, y]).unwrap();
        assert!(proj_eq(&r, &a, 1e-15) || proj_eq(&r, &b, 1e-15));
    }
}

#[test]
fn lambda_at_the_south_pole_pair() {
    let south = S2Point::new([0.0, 0.0, -1.0]).unwrap();
    let l = lambda_map(&PairS2::new(south, south));
    assert!(proj_eq(&l, &cp2([c(0.0), c(0.0), c(1.0)]), 1e-15));
}

#[test]
fn g_tilde_fiber_over_the_pole_is_the_diagonal_orbit() {
    let fib = fiber_g_tilde(&branchcover::S4Point::new([0.0, 0.0, 0.0, 0.0, 1.0]).unwrap(), &Tolerance::default()).unwrap();
    assert_eq!(fib.len(), 2);
    assert_eq!(fib.degree(), 4);
    for p in fib.points() {
        assert!((p.dot() - 1.0).abs() < 1e-15);
    }
}

#[test]
fn closed_form_g_matches_the_oracle_on_random_points() {
    let spec = RngSpec::new(11);
    for i in 0..2_000 {
        let z: Cp2Point = random_cproj(&mut spec.stream(i));
        let got = big_g(&z);
        let want = oracle_big_g(*z.coords());
        assert!(dist(got.coords(), &want) < 1e-9, "{z:?}");
    }
}

#[test]
fn closed_form_eth_matches_g_after_theta() {
    let spec = RngSpec::new(12);
    let mut printed_gap: f64 = 0.0;
    for i in 0..2_000 {
        let x: Cp2Point = random_cproj(&mut spec.stream(i));
        let want = oracle_big_g(oracle_theta(*x.coords()));
        assert!(dist(eth(&x).coords(), &want) < 1e-9, "{x:?}");
        printed_gap = printed_gap.max(dist(eth_as_printed(&x).coords(), &want));
    }
    // the variant with unit first scale and -v^2 is a different map
    assert!(printed_gap > 0.1, "{printed_gap}");
}

#[test]
fn g_tilde_matches_the_oracle() {
    let spec = RngSpec::new(13);
    for i in 0..2_000 {
        let p = random_pair(&mut spec.stream(i));
        let (a, b) = (p.first, p.second);
        let want = oracle_g_tilde((a.z(), a.t()), (b.z(), b.t()));
        assert!(dist(g_tilde(&p).coords(), &want) < 1e-12);
    }
}
