//! Spherical and projective point types with metric (tolerance-aware) equality.
//!
//! Projective points are stored as a canonical representative: unit Euclidean
//! norm, and the coordinate of largest modulus rotated to be real and
//! nonnegative. The representative is only used for export and hashing; all
//! equality goes through the chordal distance, which is independent of the
//! representative chosen.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Norms below this are treated as the zero vector.
pub const ZERO_NORM: f64 = 1e-300;

/// A unit vector in `R^D`, i.e. a point of the sphere `S^(D-1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint<const D: usize> {
    coords: [f64; D],
}

pub type S2Point = SpherePoint<3>;
pub type S3Point = SpherePoint<4>;
pub type S4Point = SpherePoint<5>;
pub type S5Point = SpherePoint<6>;

/// Radial normalization `v -> v / |v|`.
pub fn radial_normalize<const D: usize>(v: [f64; D]) -> Result<SpherePoint<D>> {
    let norm = euclid_norm(&v);
    if !(norm >= ZERO_NORM) || !norm.is_finite() {
        return Err(Error::ZeroVector { norm });
    }
    if is_unit(norm) {
        // already normalized: keep the bits so normalization is idempotent
        return Ok(SpherePoint { coords: v });
    }
    Ok(SpherePoint {
        coords: v.map(|x| x / norm),
    })
}

/// Norm within rounding of 1.
fn is_unit(norm: f64) -> bool {
    (norm - 1.0).abs() <= 4.0 * f64::EPSILON
}

pub(crate) fn euclid_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub(crate) fn cplx_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

impl<const D: usize> SpherePoint<D> {
    /// Builds a sphere point by radially normalizing `coords`.
    pub fn new(coords: [f64; D]) -> Result<Self> {
        radial_normalize(coords)
    }

    pub fn coords(&self) -> &[f64; D] {
        &self.coords
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn antipode(&self) -> Self {
        Self {
            coords: self.coords.map(|x| -x),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }
}

impl S2Point {
    /// The point `(z, t)` of `S^2 ⊂ C × R`, normalized.
    pub fn from_zt(z: C64, t: f64) -> Result<Self> {
        Self::new([z.re, z.im, t])
    }

    pub fn z(&self) -> C64 {
        C64::new(self.coords[0], self.coords[1])
    }

    pub fn t(&self) -> f64 {
        self.coords[2]
    }

    pub const NORTH: Self = Self {
        coords: [0.0, 0.0, 1.0],
    };
    pub const SOUTH: Self = Self {
        coords: [0.0, 0.0, -1.0],
    };
}

/// Euclidean equality of sphere points.
pub fn sphere_eq<const D: usize>(p: &SpherePoint<D>, q: &SpherePoint<D>, tol: f64) -> bool {
    p.approx_eq(q, tol)
}

/// Point of `CP^(D-1)` in homogeneous coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CplxProjPoint<const D: usize> {
    coords: [C64; D],
}

pub type Cp1Point = CplxProjPoint<2>;
pub type Cp2Point = CplxProjPoint<3>;

fn pivot_index<T>(coords: &[T], modulus: impl Fn(&T) -> f64) -> usize {
    let mut best = 0;
    let mut best_mod = modulus(&coords[0]);
    for (i, c) in coords.iter().enumerate().skip(1) {
        let m = modulus(c);
        if m > best_mod {
            best = i;
            best_mod = m;
        }
    }
    best
}

impl<const D: usize> CplxProjPoint<D> {
    pub fn new(coords: [C64; D]) -> Result<Self> {
        let norm = cplx_norm(&coords);
        if !(norm >= ZERO_NORM) || !norm.is_finite() {
            return Err(Error::ZeroVector { norm });
        }
        let pivot = pivot_index(&coords, |z| z.norm_sqr());
        if is_unit(norm) && coords[pivot].im == 0.0 && coords[pivot].re > 0.0 {
            return Ok(Self { coords });
        }
        let unit = coords.map(|z| z / norm);
        let phase = unit[pivot].conj() / unit[pivot].norm();
        let mut coords = unit.map(|z| z * phase);
        // exactly real pivot
        coords[pivot] = C64::new(coords[pivot].norm(), 0.0);
        Ok(Self { coords })
    }

    /// Real coordinates, promoted to complex.
    pub fn from_real(coords: [f64; D]) -> Result<Self> {
        Self::new(coords.map(|x| C64::new(x, 0.0)))
    }

    /// Canonical representative.
    pub fn coords(&self) -> &[C64; D] {
        &self.coords
    }

    /// Chordal (Fubini–Study sine) distance `sqrt(1 - |<p,q>|^2)` between unit
    /// representatives, evaluated through the Lagrange identity to avoid the
    /// cancellation floor of the direct form.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        let (p, q) = (&self.coords, &other.coords);
        let mut acc = 0.0;
        for i in 0..D {
            for j in (i + 1)..D {
                acc += (p[i] * q[j] - p[j] * q[i]).norm_sqr();
            }
        }
        acc.sqrt().min(1.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.chordal_distance(other) <= tol
    }

    /// Coordinate-wise complex conjugation `c_n`.
    pub fn conj(&self) -> Self {
        Self {
            coords: self.coords.map(|z| z.conj()),
        }
    }
}

/// Point of `RP^(D-1)` in homogeneous coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealProjPoint<const D: usize> {
    coords: [f64; D],
}

pub type Rp2Point = RealProjPoint<3>;
pub type Rp4Point = RealProjPoint<5>;

impl<const D: usize> RealProjPoint<D> {
    pub fn new(coords: [f64; D]) -> Result<Self> {
        let norm = euclid_norm(&coords);
        if !(norm >= ZERO_NORM) || !norm.is_finite() {
            return Err(Error::ZeroVector { norm });
        }
        let pivot = pivot_index(&coords, |x| x.abs());
        if is_unit(norm) && coords[pivot] > 0.0 {
            return Ok(Self { coords });
        }
        let scale = if coords[pivot] < 0.0 { -norm } else { norm };
        Ok(Self {
            coords: coords.map(|x| x / scale),
        })
    }

    pub fn coords(&self) -> &[f64; D] {
        &self.coords
    }

    pub fn chordal_distance(&self, other: &Self) -> f64 {
        let (p, q) = (&self.coords, &other.coords);
        let mut acc = 0.0;
        for i in 0..D {
            for j in (i + 1)..D {
                let w = p[i] * q[j] - p[j] * q[i];
                acc += w * w;
            }
        }
        acc.sqrt().min(1.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.chordal_distance(other) <= tol
    }
}

/// Points of a projective space compared by chordal distance.
pub trait ProjectiveClass {
    fn chordal_distance(&self, other: &Self) -> f64;
}

impl<const D: usize> ProjectiveClass for CplxProjPoint<D> {
    fn chordal_distance(&self, other: &Self) -> f64 {
        CplxProjPoint::chordal_distance(self, other)
    }
}

impl<const D: usize> ProjectiveClass for RealProjPoint<D> {
    fn chordal_distance(&self, other: &Self) -> f64 {
        RealProjPoint::chordal_distance(self, other)
    }
}

/// Scale-invariant equality of projective points.
pub fn proj_eq<P: ProjectiveClass>(p: &P, q: &P, tol: f64) -> bool {
    p.chordal_distance(q) <= tol
}

/// Chordal distance between projective points given as raw slices, for
/// callers (such as a parser) whose dimension is only known at run time.
pub fn chordal_distance_dyn(p: &[C64], q: &[C64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            got: q.len(),
        });
    }
    let (np, nq) = (cplx_norm(p), cplx_norm(q));
    if np < ZERO_NORM || nq < ZERO_NORM {
        return Err(Error::ZeroVector { norm: np.min(nq) });
    }
    let mut acc = 0.0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            acc += (p[i] * q[j] - p[j] * q[i]).norm_sqr();
        }
    }
    Ok((acc.sqrt() / (np * nq)).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn radial_normalize_examples() {
        let p = radial_normalize([0.0, 0.0, 0.0, 0.0, 2.0]).unwrap();
        assert_eq!(p.coords(), &[0.0, 0.0, 0.0, 0.0, 1.0]);
        let p = radial_normalize([3.0, 4.0, 0.0, 0.0, 0.0]).unwrap();
        assert!((p.coords()[0] - 0.6).abs() < 1e-15);
        assert!((p.coords()[1] - 0.8).abs() < 1e-15);
        let p = radial_normalize([4.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.coords(), &[1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn radial_normalize_rejects_zero() {
        assert!(matches!(
            radial_normalize([0.0; 5]),
            Err(Error::ZeroVector { .. })
        ));
        assert!(radial_normalize([1e-301, 0.0]).is_err());
    }

    #[test]
    fn proj_eq_examples() {
        let a = Cp1Point::new([c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let b = Cp1Point::new([c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
        let o = Cp1Point::new([c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(proj_eq(&a, &b, 1e-9));
        assert!(!proj_eq(&a, &o, 1e-9));
        let p = Cp1Point::new([c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let q = Cp1Point::new([c(1.0, 1.0), c(1.0, 1.0)]).unwrap();
        assert!(proj_eq(&p, &q, 1e-9));
    }

    #[test]
    fn real_proj_sign_invariance() {
        let p = Rp2Point::new([1.0, -2.0, 3.0]).unwrap();
        let q = Rp2Point::new([-2.0, 4.0, -6.0]).unwrap();
        assert!(proj_eq(&p, &q, 1e-12));
        assert_eq!(p.coords(), q.coords());
        // largest-modulus pivot is positive
        assert!(p.coords()[2] > 0.0);
    }

    #[test]
    fn canonical_representative() {
        let p = Cp2Point::new([c(0.0, 1.0), c(0.0, 3.0), c(1.0, 1.0)]).unwrap();
        let n: f64 = p.coords().iter().map(|z| z.norm_sqr()).sum();
        assert!((n - 1.0).abs() < 1e-15);
        assert_eq!(p.coords()[1].im, 0.0);
        assert!(p.coords()[1].re > 0.0);
    }

    #[test]
    fn sphere_eq_examples() {
        let n = S2Point::NORTH;
        assert!(sphere_eq(&n, &n, 1e-9));
        assert!(!sphere_eq(&n, &S2Point::SOUTH, 1e-9));
        let a = S2Point::new([1.0, 0.0, 0.0]).unwrap();
        let b = S2Point::new([(1e-12f64).cos(), (1e-12f64).sin(), 0.0]).unwrap();
        assert!(sphere_eq(&a, &b, 1e-9));
    }

    #[test]
    fn chordal_has_no_cancellation_floor() {
        let eps = 1e-12;
        let a = Cp1Point::new([c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let b = Cp1Point::new([c(1.0, 0.0), c(eps, 0.0)]).unwrap();
        let d = a.chordal_distance(&b);
        assert!((d - eps).abs() < 1e-20, "{d}");
    }

    #[test]
    fn dyn_distance_checks_dimension() {
        let p = [c(1.0, 0.0), c(0.0, 0.0)];
        let q = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(matches!(
            chordal_distance_dyn(&p, &q),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(chordal_distance_dyn(&p, &[c(3.0, 1.0), c(0.0, 0.0)]).unwrap(), 0.0);
    }
}
