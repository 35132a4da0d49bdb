//! Every named map of the construction as a pure function on the point types.
//!
//! `S^2` is the unit sphere in `C x R`, a point `(z, t)` stored as
//! `(Re z, Im z, t)`. Values in `C^2 x R` are packed into `R^5` as
//! `(Re c1, Im c1, Re c2, Im c2, r)`; this one convention is used by
//! `g_tilde`, `big_g`, `eth` and every export.

mod affine;
mod dihedral;
mod kuiper;
mod lawson;
mod quaternionic;
mod sphere4;
mod stereo;

pub use affine::{alpha_inv, alpha_map, beta_inv, beta_map, beta_f_alpha, f_affine};
pub use dihedral::{dihedral_apply, DihedralElement};
pub use kuiper::{eta_kuiper, veronese};
pub use lawson::{conj_cp, f_hat, lambda_map, theta, theta_inv, theta_squared};
pub use quaternionic::s3_double_cover;
pub use sphere4::{
    big_g, big_g_raw, eth, eth_as_printed, eth_with, g_plus, g_real, g_tilde, g_tilde_raw,
    h_map, norm_identity, pack_c2r, unpack_c2r, EthFormula, ETH_SIGN_COUNT,
};
pub use stereo::{antipodal, antipodal_cp1, gamma, gamma_inv};

use crate::geometry::S2Point;

/// A point `(s, s')` of `S^2 x S^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairS2 {
    pub first: S2Point,
    pub second: S2Point,
}

impl PairS2 {
    pub const fn new(first: S2Point, second: S2Point) -> Self {
        Self { first, second }
    }

    /// `s . s'`, the level `x` with `(s, s')` in `C_x`.
    pub fn dot(&self) -> f64 {
        self.first.dot(&self.second)
    }

    /// Euclidean distance in `R^3 x R^3`.
    pub fn distance(&self, other: &Self) -> f64 {
        let a = self.first.distance(&other.first);
        let b = self.second.distance(&other.second);
        (a * a + b * b).sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn coords(&self) -> [f64; 6] {
        let (a, b) = (self.first.coords(), self.second.coords());
        [a[0], a[1], a[2], b[0], b[1], b[2]]
    }
}

/// `s . s'` for `p = (s, s')`; equals 1 exactly on the diagonal and -1 on the
/// graph of the antipodal map.
pub fn pair_dot(p: &PairS2) -> f64 {
    p.dot()
}
