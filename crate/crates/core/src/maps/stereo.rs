use crate::geometry::{Cp1Point, S2Point, SpherePoint, C64};

/// Stereographic projection `(z, t) -> [z : 1 - t]`.
///
/// Near the north pole the equivalent chart `[1 + t : conj z]` is used; the two
/// agree wherever both are defined because `z conj(z) = (1 - t)(1 + t)`.
pub fn gamma(s: &S2Point) -> Cp1Point {
    let (z, t) = (s.z(), s.t());
    let coords = if (1.0 - t).abs() >= (1.0 + t).abs() {
        [z, C64::new(1.0 - t, 0.0)]
    } else {
        [C64::new(1.0 + t, 0.0), z.conj()]
    };
    Cp1Point::new(coords).expect("one chart coordinate is at least 1")
}

/// `[u:v] -> (2 u conj(v), |u|^2 - |v|^2) / (|u|^2 + |v|^2)`.
pub fn gamma_inv(p: &Cp1Point) -> S2Point {
    let [u, v] = *p.coords();
    let n = u.norm_sqr() + v.norm_sqr();
    let z = 2.0 * u * v.conj() / n;
    let t = (u.norm_sqr() - v.norm_sqr()) / n;
    S2Point::from_zt(z, t).expect("image of a unit representative has norm 1")
}

/// Antipodal map `A` on any sphere.
pub fn antipodal<const D: usize>(s: &SpherePoint<D>) -> SpherePoint<D> {
    s.antipode()
}

/// The antipodal map in harmonic coordinates: `[u:v] -> [-conj v : conj u]`.
pub fn antipodal_cp1(p: &Cp1Point) -> Cp1Point {
    let [u, v] = *p.coords();
    Cp1Point::new([-v.conj(), u.conj()]).expect("unit input")
}
