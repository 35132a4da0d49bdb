//! Roots of the binary quadratic form `C X^2 - B XY + A Y^2` on `CP^1`.
//!
//! The form is chosen so that its roots are exactly the two factors of a
//! target `[A:B:C]` under `([u:v],[u':v']) -> [uu' : uv'+u'v : vv']`:
//! `(vX - uY)(v'X - u'Y) = vv' X^2 - (uv'+u'v) XY + uu' Y^2`.

use crate::error::{Error, Result};
use crate::geometry::{Cp1Point, C64};
use crate::tolerance::Tolerance;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticRoots {
    pub roots: [Cp1Point; 2],
    /// `B^2 - 4AC` of the unit-normalized coefficient triple.
    pub discriminant: C64,
    /// Relative discriminant `|B^2-4AC| / (|B|^2 + |4AC|)`; 0 on a double root.
    pub relative_discriminant: f64,
    pub double: bool,
}

impl QuadraticRoots {
    pub fn multiplicity(&self) -> u32 {
        if self.double {
            2
        } else {
            1
        }
    }
}

/// Solves `C X^2 - B XY + A Y^2 = 0` projectively.
///
/// Roots are paired as `[q : C]` and `[A : q]` with `q = (B + s)/2`, where `s`
/// is the square root of the discriminant whose sign makes `|q|` largest;
/// the second root follows from the first by Vieta (`x1 x2 = A/C`) without
/// subtracting nearly equal quantities. `[1:0]` is a root when `C = 0`.
///
/// The coefficients are first scaled to unit norm, and a double root is
/// declared when `|B^2 - 4AC| <= eq_tol (|B|^2 + |4AC| + 1)`.
pub fn solve_homog_quadratic(a: C64, b: C64, c: C64, tol: &Tolerance) -> Result<QuadraticRoots> {
    let norm = (a.norm_sqr() + b.norm_sqr() + c.norm_sqr()).sqrt();
    if !(norm >= crate::geometry::ZERO_NORM) || !norm.is_finite() {
        return Err(Error::AllZero);
    }
    let (a, b, c) = (a / norm, b / norm, c / norm);
    let four_ac = 4.0 * a * c;
    let disc = b * b - four_ac;
    let scale = b.norm_sqr() + four_ac.norm();
    let relative_discriminant = if scale > 0.0 { disc.norm() / scale } else { 0.0 };
    let double = disc.norm() <= tol.eq_tol * (scale + 1.0);

    let mut s = disc.sqrt();
    if (b.conj() * s).re < 0.0 {
        s = -s;
    }
    let q = if double { b * 0.5 } else { (b + s) * 0.5 };

    // |q| >= |B|/2, so q vanishes only when B and AC (nearly) do.
    let first = [q, c];
    let second = [a, q];
    let n1 = first[0].norm_sqr() + first[1].norm_sqr();
    let n2 = second[0].norm_sqr() + second[1].norm_sqr();

    let roots = if double {
        let rep = if n1 >= n2 { first } else { second };
        let r = Cp1Point::new(rep)?;
        [r, r]
    } else {
        [Cp1Point::new(first)?, Cp1Point::new(second)?]
    };
    Ok(QuadraticRoots {
        roots,
        discriminant: disc,
        relative_discriminant,
        double,
    })
}
