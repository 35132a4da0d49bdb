//! Maps into `S^4` and `RP^4`: `g`, its lift `g_tilde`, the induced `G`, `g+`,
//! `h`, and `eth = G . theta`.

use crate::geometry::{radial_normalize, Cp2Point, Rp2Point, Rp4Point, S4Point, C64};

use super::PairS2;

/// Packs `(c1, c2, r) in C^2 x R` as `(Re c1, Im c1, Re c2, Im c2, r)`.
pub fn pack_c2r(c1: C64, c2: C64, r: f64) -> [f64; 5] {
    [c1.re, c1.im, c2.re, c2.im, r]
}

pub fn unpack_c2r(v: &[f64; 5]) -> (C64, C64, f64) {
    (C64::new(v[0], v[1]), C64::new(v[2], v[3]), v[4])
}

/// `g([r:s:t], [r':s':t']) = [rr'-ss' : rs'+sr' : rt'+tr' : st'+ts' : tt']`.
pub fn g_real(p: &Rp2Point, q: &Rp2Point) -> Rp4Point {
    let [r, s, t] = *p.coords();
    let [r2, s2, t2] = *q.coords();
    Rp4Point::new([
        r * r2 - s * s2,
        r * s2 + s * r2,
        r * t2 + t * r2,
        s * t2 + t * s2,
        t * t2,
    ])
    .expect("g never vanishes")
}

/// The unnormalized 5-tuple `(zz', zt' + tz', tt')` behind `g_tilde`.
pub fn g_tilde_raw(p: &PairS2) -> [f64; 5] {
    let (z, t) = (p.first.z(), p.first.t());
    let (z2, t2) = (p.second.z(), p.second.t());
    pack_c2r(z * z2, z * t2 + z2 * t, t * t2)
}

/// Closed form `sqrt(1 + 2tt'(rr' + ss'))` of `|g_tilde_raw(p)|`.
pub fn norm_identity(p: &PairS2) -> f64 {
    let [r, s, t] = *p.first.coords();
    let [r2, s2, t2] = *p.second.coords();
    (1.0 + 2.0 * t * t2 * (r * r2 + s * s2)).sqrt()
}

/// Lift `S^2 x S^2 -> S^4` of `g`; invariant under `sigma^2` and `tau`.
pub fn g_tilde(p: &PairS2) -> S4Point {
    radial_normalize(g_tilde_raw(p)).expect("norm is at least 1/sqrt(2) on S2 x S2")
}

/// `g+` on `S^2 x S^2 / <sigma^2>`, evaluated on any representative.
pub fn g_plus(p: &PairS2) -> S4Point {
    g_tilde(p)
}

/// `h` on `S^2 x S^2 / <sigma>`: the class of `g_tilde(p)` in `RP^4`.
/// `sigma` negates the 5-tuple, so the class is well defined.
pub fn h_map(p: &PairS2) -> Rp4Point {
    Rp4Point::new(g_tilde_raw(p)).expect("norm is at least 1/sqrt(2) on S2 x S2")
}

/// Argument of the radial normalization in `G([z0:z1:z2])`:
/// `(4 z0 conj z2, 2 z0 conj z1 - 2 z1 conj z2,
///   |z0|^2 + |z2|^2 - |z1|^2/2 - |z1^2 - 4 z0 z2|/2)`
/// on the unit representative.
pub fn big_g_raw(p: &Cp2Point) -> [f64; 5] {
    let [z0, z1, z2] = *p.coords();
    pack_c2r(
        4.0 * z0 * z2.conj(),
        2.0 * z0 * z1.conj() - 2.0 * z1 * z2.conj(),
        z0.norm_sqr() + z2.norm_sqr() - 0.5 * z1.norm_sqr() - 0.5 * (z1 * z1 - 4.0 * z0 * z2).norm(),
    )
}

/// `G = g_tilde . lambda^-1 : CP^2 -> S^4`.
pub fn big_g(p: &Cp2Point) -> S4Point {
    radial_normalize(big_g_raw(p)).expect("G argument vanishes only at the origin")
}

/// Number of individually signed terms in [`EthFormula`].
pub const ETH_SIGN_COUNT: usize = 17;

/// Coefficient table for the closed form of `eth([u:v:w])`:
///
/// ```text
/// nu( k (s0 i uū + s1 u w̄ + s2 ū w + s3 i w w̄),
///     2 (s4 i + s5) (s6 u v̄ + s7 ū v + s8 i v w̄ + s9 i v̄ w),
///     s10 2uū + s11 2ww̄ + s12 vv̄ + s13 |s14 2u² + s15 2w² + s16 v²| )
/// ```
///
/// [`EthFormula::STANDARD`] equals `G . theta` identically. Flipping any one
/// sign breaks that identity, which is what the mutation fixture relies on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EthFormula {
    pub first_scale: f64,
    pub signs: [f64; ETH_SIGN_COUNT],
}

impl EthFormula {
    pub const STANDARD: Self = Self {
        first_scale: 4.0,
        signs: [
            1.0, 1.0, 1.0, -1.0, // first component
            1.0, -1.0, 1.0, 1.0, -1.0, -1.0, // second component
            1.0, 1.0, -1.0, -1.0, 1.0, 1.0, 1.0, // third component
        ],
    };

    /// The variant with unit first-component scale and `-v^2` inside the
    /// modulus. It is c2-invariant but does not agree with `G . theta`.
    pub const PRINTED: Self = Self {
        first_scale: 1.0,
        signs: [
            1.0, 1.0, 1.0, -1.0, //
            1.0, -1.0, 1.0, 1.0, -1.0, -1.0, //
            1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, //
        ],
    };

    /// Standard table with sign `index` flipped.
    pub fn with_flipped(index: usize) -> Option<Self> {
        let mut f = Self::STANDARD;
        *f.signs.get_mut(index)? *= -1.0;
        Some(f)
    }

    pub fn raw(&self, p: &Cp2Point) -> [f64; 5] {
        let s = &self.signs;
        let i = C64::new(0.0, 1.0);
        let [u, v, w] = *p.coords();
        let (uc, vc, wc) = (u.conj(), v.conj(), w.conj());
        let first = self.first_scale
            * (s[0] * i * u * uc + s[1] * u * wc + s[2] * uc * w + s[3] * i * w * wc);
        let second = 2.0
            * (s[4] * i + s[5])
            * (s[6] * u * vc + s[7] * uc * v + s[8] * i * v * wc + s[9] * i * vc * w);
        let third = s[10] * 2.0 * u.norm_sqr()
            + s[11] * 2.0 * w.norm_sqr()
            + s[12] * v.norm_sqr()
            + s[13] * (s[14] * 2.0 * u * u + s[15] * 2.0 * w * w + s[16] * v * v).norm();
        pack_c2r(first, second, third)
    }
}

/// `eth` with an explicit coefficient table.
pub fn eth_with(formula: &EthFormula, p: &Cp2Point) -> S4Point {
    radial_normalize(formula.raw(p)).expect("eth argument vanishes only at the origin")
}

/// `eth = G . theta`, by its closed form. Invariant under conjugation; the
/// branch locus is the real locus of `CP^2`.
pub fn eth(p: &Cp2Point) -> S4Point {
    eth_with(&EthFormula::STANDARD, p)
}

/// The printed closed form; kept only to measure its disagreement with `G . theta`.
pub fn eth_as_printed(p: &Cp2Point) -> S4Point {
    eth_with(&EthFormula::PRINTED, p)
}
