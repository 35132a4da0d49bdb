//! Explicit formulas for the 2-fold branched covering `CP^2 -> S^4` and the
//! lattice of quotients of `S^2 x S^2` by the dihedral group of order 8.
//!
//! - [`geometry`], [`quaternion`], [`quadratic`], [`sampling`]: point types,
//!   chordal equality, the projective quadratic solver and seeded sampling.
//! - [`maps`]: every named map (stereographic projection, the dihedral action,
//!   `f_hat`, `lambda`, `theta`, `g`, `g_tilde`, `G`, `eth`, `eta`, ...).
//! - [`quotient`], [`fiber`], [`branch`], [`lattice`]: subgroups and orbits,
//!   closed-form fiber solvers, branch-locus distances and the quotient diagram.
//! - [`suites`]: randomized verification suites producing a [`Report`].

pub mod branch;
pub mod error;
pub mod fiber;
pub mod geometry;
pub mod lattice;
pub mod maps;
pub mod quadratic;
pub mod quaternion;
pub mod quotient;
pub mod report;
pub mod sampling;
pub mod suites;
pub mod tolerance;

pub use error::{Error, Result};
pub use geometry::{
    proj_eq, radial_normalize, sphere_eq, Cp1Point, Cp2Point, CplxProjPoint, RealProjPoint,
    Rp2Point, Rp4Point, S2Point, S3Point, S4Point, S5Point, SpherePoint, C64,
};
pub use maps::{DihedralElement, PairS2};
pub use quadratic::{solve_homog_quadratic, QuadraticRoots};
pub use quaternion::{quat_rotate_im, Quaternion};
pub use report::Report;
pub use sampling::RngSpec;
pub use suites::{run_suite, SuiteId};
pub use tolerance::Tolerance;
