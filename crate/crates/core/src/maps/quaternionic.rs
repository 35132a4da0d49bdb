use crate::error::Result;
use crate::quaternion::Quaternion;
use crate::tolerance::Tolerance;

use super::PairS2;

/// `q -> (q i q^-1, q j q^-1)`, a 2-fold covering of `C_0` by `S^3`.
pub fn s3_double_cover(q: &Quaternion, tol: &Tolerance) -> Result<PairS2> {
    let a = q.rotate_imaginary(Quaternion::I, tol)?;
    let b = q.rotate_imaginary(Quaternion::J, tol)?;
    Ok(PairS2::new(a.to_s2()?, b.to_s2()?))
}
