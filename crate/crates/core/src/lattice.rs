//! The lattice of quotients of `S^2 x S^2` by subgroups of `<sigma, tau>`.
//!
//! Nine nodes, each with a concrete model space and a representative-level
//! map from `S^2 x S^2` that is constant on orbits of the node's subgroup.
//! Edges are the maps of the diagram: `lambda`, `g+`, `G`, `g`, `h` and the
//! unlabeled 2-fold covering projections.
//!
//! Quotients with no classical name get invariant-theoretic models:
//! `S^2 x S^2 / <sigma^2>` is the outer product `s s'^T` (which determines the
//! pair up to a joint sign) and `S^2 x S^2 / <sigma>` is the symmetric square
//! of `w = s + i s'` up to sign (`sigma` multiplies `w` by `-i`).

use std::fmt;

use crate::geometry::{radial_normalize, Cp2Point, Rp2Point, Rp4Point, S2Point, S4Point, C64};
use crate::maps::{big_g, g_real, g_tilde, h_map, lambda_map, PairS2};
use crate::quotient::Subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeId {
    S2xS2,
    S2xRP2,
    RP2xS2,
    ModSigmaSquared,
    CP2,
    RP2xRP2,
    ModSigma,
    S4,
    RP4,
}

impl NodeId {
    pub const ALL: [NodeId; 9] = [
        NodeId::S2xS2,
        NodeId::S2xRP2,
        NodeId::RP2xS2,
        NodeId::ModSigmaSquared,
        NodeId::CP2,
        NodeId::RP2xRP2,
        NodeId::ModSigma,
        NodeId::S4,
        NodeId::RP4,
    ];

    pub fn subgroup(&self) -> Subgroup {
        match self {
            NodeId::S2xS2 => Subgroup::trivial(),
            NodeId::S2xRP2 => Subgroup::sigma_tau(),
            NodeId::RP2xS2 => Subgroup::tau_sigma(),
            NodeId::ModSigmaSquared => Subgroup::sigma_squared(),
            NodeId::CP2 => Subgroup::tau(),
            NodeId::RP2xRP2 => Subgroup::klein(),
            NodeId::ModSigma => Subgroup::sigma(),
            NodeId::S4 => Subgroup::sigma_squared_tau(),
            NodeId::RP4 => Subgroup::whole(),
        }
    }

    /// Direct map from a representative pair to this node's model.
    pub fn model_map(&self, p: &PairS2) -> ModelValue {
        let (s, t) = (&p.first, &p.second);
        match self {
            NodeId::S2xS2 => ModelValue::Pair(*p),
            NodeId::S2xRP2 => ModelValue::S2Rp2(*s, rp2(t.coords())),
            NodeId::RP2xS2 => ModelValue::Rp2S2(rp2(s.coords()), *t),
            NodeId::ModSigmaSquared => ModelValue::Outer(outer(s, t)),
            NodeId::CP2 => ModelValue::Cp2(lambda_map(p)),
            NodeId::RP2xRP2 => ModelValue::Rp2Rp2(rp2(s.coords()), rp2(t.coords())),
            NodeId::ModSigma => {
                let w: [C64; 3] = std::array::from_fn(|k| C64::new(s.coords()[k], t.coords()[k]));
                ModelValue::SymSquare(sym_square(&w))
            }
            NodeId::S4 => ModelValue::S4(g_tilde(p)),
            NodeId::RP4 => ModelValue::Rp4(h_map(p)),
        }
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            NodeId::S2xS2 => "S2xS2",
            NodeId::S2xRP2 => "S2xRP2",
            NodeId::RP2xS2 => "RP2xS2",
            NodeId::ModSigmaSquared => "S2xS2/<σ²>",
            NodeId::CP2 => "CP2",
            NodeId::RP2xRP2 => "RP2xRP2",
            NodeId::ModSigma => "S2xS2/<σ>",
            NodeId::S4 => "S4",
            NodeId::RP4 => "RP4",
        };
        f.write_str(name)
    }
}

fn rp2(v: &[f64; 3]) -> Rp2Point {
    Rp2Point::new(*v).expect("unit vector")
}

fn outer(s: &S2Point, t: &S2Point) -> [f64; 9] {
    std::array::from_fn(|k| s.coords()[k / 3] * t.coords()[k % 3])
}

/// Upper-triangular products `w_a w_b`, `a <= b`.
fn sym_square(w: &[C64; 3]) -> [C64; 6] {
    [
        w[0] * w[0],
        w[0] * w[1],
        w[0] * w[2],
        w[1] * w[1],
        w[1] * w[2],
        w[2] * w[2],
    ]
}

/// A point of one of the nine model spaces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ModelValue {
    Pair(PairS2),
    S2Rp2(S2Point, Rp2Point),
    Rp2S2(Rp2Point, S2Point),
    /// Row-major `s s'^T`.
    Outer([f64; 9]),
    Cp2(Cp2Point),
    Rp2Rp2(Rp2Point, Rp2Point),
    /// `(s + i s') ⊗ (s + i s')`, upper triangle, modulo an overall sign.
    SymSquare([C64; 6]),
    S4(S4Point),
    Rp4(Rp4Point),
}

impl ModelValue {
    /// Distance in the model space, or `None` for values of different spaces.
    pub fn distance(&self, other: &Self) -> Option<f64> {
        use ModelValue::*;
        let hyp = |a: f64, b: f64| (a * a + b * b).sqrt();
        Some(match (self, other) {
            (Pair(a), Pair(b)) => a.distance(b),
            (S2Rp2(a, b), S2Rp2(c, d)) => hyp(a.distance(c), b.chordal_distance(d)),
            (Rp2S2(a, b), Rp2S2(c, d)) => hyp(a.chordal_distance(c), b.distance(d)),
            (Outer(a), Outer(b)) => euclid(a.iter().zip(b).map(|(x, y)| x - y)),
            (Cp2(a), Cp2(b)) => a.chordal_distance(b),
            (Rp2Rp2(a, b), Rp2Rp2(c, d)) => hyp(a.chordal_distance(c), b.chordal_distance(d)),
            (SymSquare(a), SymSquare(b)) => {
                let minus = euclid_c(a.iter().zip(b).map(|(x, y)| x - y));
                let plus = euclid_c(a.iter().zip(b).map(|(x, y)| x + y));
                minus.min(plus)
            }
            (S4(a), S4(b)) => a.distance(b),
            (Rp4(a), Rp4(b)) => a.chordal_distance(b),
            _ => return None,
        })
    }
}

fn euclid(it: impl Iterator<Item = f64>) -> f64 {
    it.map(|x| x * x).sum::<f64>().sqrt()
}

fn euclid_c(it: impl Iterator<Item = C64>) -> f64 {
    it.map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// An edge of the diagram, acting on model values.
#[derive(Clone, Copy, Debug)]
pub struct Edge {
    pub from: NodeId,
    pub to: NodeId,
    pub label: Option<&'static str>,
}

impl Edge {
    pub fn apply(&self, v: &ModelValue) -> ModelValue {
        use ModelValue as M;
        use NodeId as N;
        match (self.from, self.to, v) {
            (N::S2xS2, N::S2xRP2, M::Pair(p)) => N::S2xRP2.model_map(p),
            (N::S2xS2, N::RP2xS2, M::Pair(p)) => N::RP2xS2.model_map(p),
            (N::S2xS2, N::ModSigmaSquared, M::Pair(p)) => N::ModSigmaSquared.model_map(p),
            (N::S2xS2, N::CP2, M::Pair(p)) => M::Cp2(lambda_map(p)),
            (N::S2xRP2, N::RP2xRP2, M::S2Rp2(s, t)) => M::Rp2Rp2(rp2(s.coords()), *t),
            (N::RP2xS2, N::RP2xRP2, M::Rp2S2(s, t)) => M::Rp2Rp2(*s, rp2(t.coords())),
            (N::ModSigmaSquared, N::RP2xRP2, M::Outer(m)) => outer_factors(m),
            (N::ModSigmaSquared, N::ModSigma, M::Outer(m)) => M::SymSquare(outer_to_sym_square(m)),
            (N::ModSigmaSquared, N::S4, M::Outer(m)) => M::S4(outer_to_s4(m)),
            (N::CP2, N::S4, M::Cp2(z)) => M::S4(big_g(z)),
            (N::RP2xRP2, N::RP4, M::Rp2Rp2(a, b)) => M::Rp4(g_real(a, b)),
            (N::ModSigma, N::RP4, M::SymSquare(q)) => M::Rp4(sym_square_to_rp4(q)),
            (N::S4, N::RP4, M::S4(x)) => M::Rp4(Rp4Point::new(*x.coords()).expect("unit vector")),
            _ => panic!("edge {} -> {} applied to a value of another space", self.from, self.to),
        }
    }
}

/// Edges of the diagram as drawn.
pub fn edges() -> Vec<Edge> {
    use NodeId as N;
    let e = |from, to, label| Edge { from, to, label };
    vec![
        e(N::S2xS2, N::S2xRP2, None),
        e(N::S2xS2, N::RP2xS2, None),
        e(N::S2xS2, N::ModSigmaSquared, None),
        e(N::S2xS2, N::CP2, Some("lambda")),
        e(N::S2xRP2, N::RP2xRP2, None),
        e(N::RP2xS2, N::RP2xRP2, None),
        e(N::ModSigmaSquared, N::ModSigma, None),
        e(N::ModSigmaSquared, N::RP2xRP2, None),
        e(N::ModSigmaSquared, N::S4, Some("g+")),
        e(N::CP2, N::S4, Some("G")),
        e(N::RP2xRP2, N::RP4, Some("g")),
        e(N::ModSigma, N::RP4, Some("h")),
        e(N::S4, N::RP4, None),
    ]
}

/// Every directed path from `S^2 x S^2` to `target`.
pub fn paths_to(target: NodeId) -> Vec<Vec<Edge>> {
    fn walk(at: NodeId, target: NodeId, all: &[Edge], path: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        if at == target {
            out.push(path.clone());
            return;
        }
        for e in all.iter().filter(|e| e.from == at) {
            path.push(*e);
            walk(e.to, target, all, path, out);
            path.pop();
        }
    }
    let all = edges();
    let mut out = Vec::new();
    walk(NodeId::S2xS2, target, &all, &mut Vec::new(), &mut out);
    out
}

pub fn apply_path(path: &[Edge], p: &PairS2) -> ModelValue {
    path.iter()
        .fold(ModelValue::Pair(*p), |v, e| e.apply(&v))
}

/// `[s]` and `[s']` from `M = s s'^T`: the largest column is a multiple of `s`,
/// the largest row a multiple of `s'`.
fn outer_factors(m: &[f64; 9]) -> ModelValue {
    let col = |j: usize| [m[j], m[3 + j], m[6 + j]];
    let row = |i: usize| [m[3 * i], m[3 * i + 1], m[3 * i + 2]];
    let sq = |v: [f64; 3]| v.iter().map(|x| x * x).sum::<f64>();
    let j = (0..3).max_by(|&a, &b| sq(col(a)).total_cmp(&sq(col(b)))).unwrap();
    let i = (0..3).max_by(|&a, &b| sq(row(a)).total_cmp(&sq(row(b)))).unwrap();
    ModelValue::Rp2Rp2(
        Rp2Point::new(col(j)).expect("nonzero column"),
        Rp2Point::new(row(i)).expect("nonzero row"),
    )
}

/// `w ⊗ w` for `w = s + i s'` from `M = s s'^T`, using
/// `s s^T = M M^T` and `s' s'^T = M^T M` (both factors are unit vectors).
fn outer_to_sym_square(m: &[f64; 9]) -> [C64; 6] {
    let at = |i: usize, j: usize| m[3 * i + j];
    let mmt = |a: usize, b: usize| (0..3).map(|k| at(a, k) * at(b, k)).sum::<f64>();
    let mtm = |a: usize, b: usize| (0..3).map(|k| at(k, a) * at(k, b)).sum::<f64>();
    let entry = |a: usize, b: usize| C64::new(mmt(a, b) - mtm(a, b), at(a, b) + at(b, a));
    [
        entry(0, 0),
        entry(0, 1),
        entry(0, 2),
        entry(1, 1),
        entry(1, 2),
        entry(2, 2),
    ]
}

/// `g+` read off `M = s s'^T`: `zz' = M00 - M11 + i(M01 + M10)`,
/// `zt' + tz' = M02 + M20 + i(M12 + M21)`, `tt' = M22`.
fn outer_to_s4(m: &[f64; 9]) -> S4Point {
    let at = |i: usize, j: usize| m[3 * i + j];
    radial_normalize([
        at(0, 0) - at(1, 1),
        at(0, 1) + at(1, 0),
        at(0, 2) + at(2, 0),
        at(1, 2) + at(2, 1),
        at(2, 2),
    ])
    .expect("norm is at least 1/sqrt(2)")
}

/// `h` read off `±(w ⊗ w)`: its imaginary part is `s s'^T + s' s^T`.
fn sym_square_to_rp4(q: &[C64; 6]) -> Rp4Point {
    Rp4Point::new([
        0.5 * (q[0].im - q[3].im),
        q[1].im,
        q[2].im,
        q[4].im,
        0.5 * q[5].im,
    ])
    .expect("norm is at least 1/sqrt(2)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::S2Point;

    fn generic() -> PairS2 {
        PairS2::new(
            S2Point::new([0.3, -0.5, 0.8]).unwrap(),
            S2Point::new([-0.9, 0.1, 0.2]).unwrap(),
        )
    }

    #[test]
    fn shape_of_the_diagram() {
        assert_eq!(edges().len(), 13);
        assert_eq!(paths_to(NodeId::S2xS2).len(), 1);
        assert_eq!(paths_to(NodeId::RP2xRP2).len(), 3);
        assert_eq!(paths_to(NodeId::S4).len(), 2);
        // RP2xRP2 (3) + ModSigma (1) + S4 (2)
        assert_eq!(paths_to(NodeId::RP4).len(), 6);
    }

    #[test]
    fn every_edge_is_an_index_two_inclusion() {
        for e in edges() {
            let (h, k) = (e.from.subgroup(), e.to.subgroup());
            assert!(h.elements().all(|x| k.contains(x)), "{} -> {}", e.from, e.to);
            assert_eq!(k.order(), 2 * h.order(), "{} -> {}", e.from, e.to);
        }
    }

    #[test]
    fn diagram_commutes_on_a_generic_pair() {
        let p = generic();
        for node in NodeId::ALL {
            let direct = node.model_map(&p);
            for path in paths_to(node) {
                let v = apply_path(&path, &p);
                assert!(v.distance(&direct).unwrap() < 1e-13, "{node}");
            }
        }
    }

    #[test]
    fn models_are_orbit_constant() {
        let p = generic();
        for node in NodeId::ALL {
            let base = node.model_map(&p);
            for e in node.subgroup().elements() {
                let v = node.model_map(&e.apply(&p));
                assert!(v.distance(&base).unwrap() < 1e-13, "{node} {e}");
            }
        }
    }

    #[test]
    fn models_separate_other_orbits() {
        // sigma is not in <sigma^2>, so the sigma^2 model must move
        let p = generic();
        let q = crate::maps::DihedralElement::SIGMA.apply(&p);
        let m = NodeId::ModSigmaSquared;
        assert!(m.model_map(&p).distance(&m.model_map(&q)).unwrap() > 0.1);
        assert!(ModelValue::Pair(p).distance(&ModelValue::Cp2(lambda_map(&p))).is_none());
    }
}
