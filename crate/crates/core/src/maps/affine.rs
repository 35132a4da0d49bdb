use crate::geometry::C64;

/// `f(w, z) = (wz, w + z)`, the elementary symmetric functions.
pub fn f_affine(w: C64, z: C64) -> (C64, C64) {
    (w * z, w + z)
}

/// `alpha(w, z) = ((w - z)/2, (w + z)/2)`.
pub fn alpha_map(w: C64, z: C64) -> (C64, C64) {
    ((w - z) * 0.5, (w + z) * 0.5)
}

pub fn alpha_inv(a: C64, b: C64) -> (C64, C64) {
    (a + b, b - a)
}

/// `beta(w, z) = (z, z^2 - 4w)`.
pub fn beta_map(w: C64, z: C64) -> (C64, C64) {
    (z, z * z - 4.0 * w)
}

pub fn beta_inv(a: C64, b: C64) -> (C64, C64) {
    ((a * a - b) * 0.25, a)
}

/// `beta . f . alpha`, which should be `(w, z^2)`.
pub fn beta_f_alpha(w: C64, z: C64) -> (C64, C64) {
    let (a, b) = alpha_map(w, z);
    let (p, q) = f_affine(a, b);
    beta_map(p, q)
}
