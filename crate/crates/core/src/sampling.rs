//! Seeded, order-independent random sampling.
//!
//! Every sample index gets its own ChaCha stream derived from `(seed, index)`,
//! so a sample is the same whether it is drawn first, last, or on another
//! thread.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::geometry::{radial_normalize, CplxProjPoint, RealProjPoint, S2Point, SpherePoint, C64};
use crate::maps::PairS2;
use crate::quaternion::Quaternion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngSpec {
    pub seed: u64,
}

impl RngSpec {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    /// Independent generator for sample `index`.
    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

fn gaussian<const D: usize, R: Rng + ?Sized>(rng: &mut R) -> [f64; D] {
    std::array::from_fn(|_| rng.sample(StandardNormal))
}

/// Uniform point of `S^(D-1)`: a Gaussian vector, radially normalized.
pub fn random_sphere<const D: usize, R: Rng + ?Sized>(rng: &mut R) -> SpherePoint<D> {
    loop {
        if let Ok(p) = radial_normalize(gaussian::<D, _>(rng)) {
            return p;
        }
    }
}

/// Fubini–Study uniform point of `CP^(D-1)`.
pub fn random_cproj<const D: usize, R: Rng + ?Sized>(rng: &mut R) -> CplxProjPoint<D> {
    loop {
        let coords: [C64; D] =
            std::array::from_fn(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        if let Ok(p) = CplxProjPoint::new(coords) {
            return p;
        }
    }
}

/// Uniform point of `RP^(D-1)`.
pub fn random_rproj<const D: usize, R: Rng + ?Sized>(rng: &mut R) -> RealProjPoint<D> {
    loop {
        if let Ok(p) = RealProjPoint::new(gaussian::<D, _>(rng)) {
            return p;
        }
    }
}

/// Uniform complex vector on `S^(2D-1) ⊂ C^D`.
pub fn random_unit_cvec<const D: usize, R: Rng + ?Sized>(rng: &mut R) -> [C64; D] {
    loop {
        let v: [C64; D] =
            std::array::from_fn(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let n = crate::geometry::cplx_norm(&v);
        if n > 1e-150 {
            return v.map(|z| z / n);
        }
    }
}

pub fn random_unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    let p = random_sphere::<4, R>(rng);
    let [w, x, y, z] = *p.coords();
    Quaternion::new(w, x, y, z)
}

pub fn random_pair<R: Rng + ?Sized>(rng: &mut R) -> PairS2 {
    PairS2::new(random_sphere(rng), random_sphere(rng))
}

pub fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// A uniform pair on the level set `C_x = {(s, s') : s . s' = x}`: `s` is
/// uniform and `s'` uniform on the circle at angle `arccos x` from `s`.
pub fn random_level_pair<R: Rng + ?Sized>(x: f64, rng: &mut R) -> PairS2 {
    let x = x.clamp(-1.0, 1.0);
    let s: S2Point = random_sphere(rng);
    let u = loop {
        let g = gaussian::<3, _>(rng);
        let d = s.coords().iter().zip(&g).map(|(a, b)| a * b).sum::<f64>();
        let perp = std::array::from_fn(|i| g[i] - d * s.coords()[i]);
        if let Ok(u) = radial_normalize::<3>(perp) {
            break u;
        }
    };
    let r = (1.0 - x * x).max(0.0).sqrt();
    let coords = std::array::from_fn(|i| x * s.coords()[i] + r * u.coords()[i]);
    // renormalize to absorb rounding; x is recovered to a few ulps
    let t = radial_normalize::<3>(coords).unwrap_or(s);
    PairS2::new(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_index() {
        let spec = RngSpec::new(1);
        let a: S2Point = random_sphere(&mut spec.stream(0));
        let b: S2Point = random_sphere(&mut spec.stream(0));
        assert_eq!(a, b);
        let c: S2Point = random_sphere(&mut spec.stream(1));
        assert_ne!(a, c);
    }

    #[test]
    fn sphere_mean_is_centered() {
        // law of large numbers on the uniform measure: std of each mean is 1/sqrt(3n)
        let spec = RngSpec::new(1);
        let n = 100_000u64;
        let mut sum = [0.0; 3];
        for i in 0..n {
            let p: S2Point = random_sphere(&mut spec.stream(i));
            for k in 0..3 {
                sum[k] += p.coords()[k];
            }
        }
        for s in sum {
            assert!((s / n as f64).abs() < 0.02);
        }
    }

    #[test]
    fn cproj_is_unit() {
        let spec = RngSpec::new(3);
        for i in 0..100 {
            let p: CplxProjPoint<3> = random_cproj(&mut spec.stream(i));
            let n: f64 = p.coords().iter().map(|z| z.norm_sqr()).sum();
            assert!((n - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn level_pairs_hit_their_level() {
        let spec = RngSpec::new(9);
        for (i, x) in [-1.0, -0.5, 0.0, 0.3, 1.0].into_iter().enumerate() {
            let p = random_level_pair(x, &mut spec.stream(i as u64));
            assert!((p.dot() - x).abs() < 1e-14);
        }
    }
}
