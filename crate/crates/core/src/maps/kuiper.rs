use crate::geometry::C64;

/// `eta(z1, z2, z3) = (|z1|^2, |z2|^2, |z3|^2, Re z2 z̄3, Re z3 z̄1, Re z1 z̄2)`.
///
/// Invariant under `v -> zeta v` (`|zeta| = 1`) and under conjugation, so on
/// `S^5` it factors through `CP^2 / <c2>`.
pub fn eta_kuiper(v: &[C64; 3]) -> [f64; 6] {
    let [z1, z2, z3] = *v;
    [
        z1.norm_sqr(),
        z2.norm_sqr(),
        z3.norm_sqr(),
        (z2 * z3.conj()).re,
        (z3 * z1.conj()).re,
        (z1 * z2.conj()).re,
    ]
}

/// Quadratic monomials `(x1^2, x2^2, x3^2, x2x3, x3x1, x1x2)` of a real vector.
pub fn veronese(x: &[f64; 3]) -> [f64; 6] {
    [
        x[0] * x[0],
        x[1] * x[1],
        x[2] * x[2],
        x[1] * x[2],
        x[2] * x[0],
        x[0] * x[1],
    ]
}
