use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::geometry::S2Point;
use crate::tolerance::Tolerance;

/// Quaternion `w + x i + y j + z k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Purely imaginary quaternion with vector part `v`.
    pub const fn imaginary(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    pub fn vector(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if !(n >= crate::geometry::ZERO_NORM) {
            return Err(Error::ZeroVector { norm: n });
        }
        Ok(self.scale(1.0 / n))
    }

    /// Real part of `self * other.conj()`, the Euclidean inner product on `R^4`.
    pub fn inner(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn check_unit(&self, tol: &Tolerance) -> Result<()> {
        let norm = self.norm();
        if (norm - 1.0).abs() > tol.eq_tol {
            return Err(Error::NonUnitQuaternion { norm });
        }
        Ok(())
    }

    /// Conjugation action `q v q^-1` of a unit quaternion on the imaginary
    /// part of `v`. The result is purely imaginary.
    pub fn rotate_imaginary(&self, v: Quaternion, tol: &Tolerance) -> Result<Quaternion> {
        self.check_unit(tol)?;
        let v = Quaternion::imaginary(v.vector());
        let r = *self * v * self.conj();
        Ok(Quaternion::imaginary(r.vector()))
    }

    /// Point of `S^2` from the imaginary part, read as `(x, y, z)`.
    pub fn to_s2(&self) -> Result<S2Point> {
        S2Point::new(self.vector())
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

/// `q v q^-1` for unit `q` and imaginary `v`.
pub fn quat_rotate_im(q: &Quaternion, v: &Quaternion, tol: &Tolerance) -> Result<Quaternion> {
    q.rotate_imaginary(*v, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Quaternion, b: Quaternion) -> bool {
        (a.w - b.w).abs() < 1e-15
            && (a.x - b.x).abs() < 1e-15
            && (a.y - b.y).abs() < 1e-15
            && (a.z - b.z).abs() < 1e-15
    }

    #[test]
    fn hamilton_relations() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::I * Q::I, -Q::ONE);
        assert_eq!(Q::I * Q::J * Q::K, -Q::ONE);
    }

    #[test]
    fn rotation_examples() {
        let tol = Tolerance::default();
        let id = quat_rotate_im(&Quaternion::ONE, &Quaternion::I, &tol).unwrap();
        assert_eq!(id, Quaternion::I);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let q = Quaternion::new(h, 0.0, 0.0, h);
        let r = quat_rotate_im(&q, &Quaternion::I, &tol).unwrap();
        assert!(close(r, Quaternion::J), "{r:?}");
        let r = quat_rotate_im(&q, &Quaternion::J, &tol).unwrap();
        assert!(close(r, -Quaternion::I), "{r:?}");
    }

    #[test]
    fn rejects_non_unit() {
        let tol = Tolerance::default();
        let q = Quaternion::new(2.0, 0.0, 0.0, 0.0);
        assert!(matches!(
            quat_rotate_im(&q, &Quaternion::I, &tol),
            Err(Error::NonUnitQuaternion { .. })
        ));
    }
}
