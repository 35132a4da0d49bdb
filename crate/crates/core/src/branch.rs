//! Distances to the branch loci: the conic `V(z1^2 - 4 z0 z2)` for `f_hat`,
//! `lambda` and `G`, and the real locus of `CP^2` for `eth`.

use crate::geometry::Cp2Point;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchDistance {
    /// `|z1^2 - 4 z0 z2|` on the unit representative.
    pub conic: f64,
    /// Chordal distance from `p` to `c2(p)`.
    pub real_locus: f64,
}

pub fn conic_distance(p: &Cp2Point) -> f64 {
    let [z0, z1, z2] = *p.coords();
    (z1 * z1 - 4.0 * z0 * z2).norm()
}

pub fn real_locus_distance(p: &Cp2Point) -> f64 {
    p.chordal_distance(&p.conj())
}

pub fn branch_distance(p: &Cp2Point) -> BranchDistance {
    BranchDistance {
        conic: conic_distance(p),
        real_locus: real_locus_distance(p),
    }
}
