//! Subgroups of the dihedral group acting on `S^2 x S^2`, orbits, and
//! equality in the quotient spaces.

use std::collections::BTreeSet;

use crate::maps::{DihedralElement, PairS2};

/// A subgroup of `<sigma, tau>`, stored as its element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    name: String,
    elements: BTreeSet<DihedralElement>,
}

impl Subgroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> impl Iterator<Item = &DihedralElement> {
        self.elements.iter()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: &DihedralElement) -> bool {
        self.elements.contains(e)
    }

    pub fn is_closed(&self) -> bool {
        self.elements.contains(&DihedralElement::IDENTITY)
            && self.elements.iter().all(|a| {
                self.elements.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.elements.contains(&a.compose(b)))
            })
    }

    pub fn trivial() -> Self {
        subgroup_closure(&[])
    }

    pub fn named(name: &str, generators: &[DihedralElement]) -> Self {
        let mut g = subgroup_closure(generators);
        g.name = name.to_string();
        g
    }

    /// `<sigma tau>`: quotient `S^2 x RP^2`.
    pub fn sigma_tau() -> Self {
        Self::named("<στ>", &[DihedralElement::new(1, 1)])
    }

    /// `<tau sigma>`: quotient `RP^2 x S^2`.
    pub fn tau_sigma() -> Self {
        Self::named("<τσ>", &[DihedralElement::new(3, 1)])
    }

    pub fn sigma_squared() -> Self {
        Self::named("<σ²>", &[DihedralElement::new(2, 0)])
    }

    pub fn sigma() -> Self {
        Self::named("<σ>", &[DihedralElement::SIGMA])
    }

    pub fn tau() -> Self {
        Self::named("<τ>", &[DihedralElement::TAU])
    }

    /// `<sigma tau, tau sigma>`: quotient `RP^2 x RP^2`.
    pub fn klein() -> Self {
        Self::named("<στ,τσ>", &[DihedralElement::new(1, 1), DihedralElement::new(3, 1)])
    }

    /// `<sigma^2, tau>`: quotient `S^4`.
    pub fn sigma_squared_tau() -> Self {
        Self::named("<σ²,τ>", &[DihedralElement::new(2, 0), DihedralElement::TAU])
    }

    pub fn whole() -> Self {
        Self::named("<σ,τ>", &[DihedralElement::SIGMA, DihedralElement::TAU])
    }
}

/// Smallest subgroup containing `generators`.
pub fn subgroup_closure(generators: &[DihedralElement]) -> Subgroup {
    let mut elements = BTreeSet::from([DihedralElement::IDENTITY]);
    let mut frontier: Vec<DihedralElement> = vec![DihedralElement::IDENTITY];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x.compose(g);
            if elements.insert(y) {
                frontier.push(y);
            }
        }
    }
    let name = if generators.is_empty() {
        "1".to_string()
    } else {
        let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
        format!("<{}>", gens.join(","))
    };
    Subgroup { name, elements }
}

/// Distinct points (within `tol`) of the orbit of `p`.
pub fn orbit_of(p: &PairS2, g: &Subgroup, tol: f64) -> Vec<PairS2> {
    let mut out: Vec<PairS2> = Vec::with_capacity(g.order());
    for e in g.elements() {
        let q = e.apply(p);
        if !out.iter().any(|r| r.approx_eq(&q, tol)) {
            out.push(q);
        }
    }
    out
}

/// Equality in `S^2 x S^2 / G`: some element moves `p` within `tol` of `q`.
pub fn eq_mod(p: &PairS2, q: &PairS2, g: &Subgroup, tol: f64) -> bool {
    g.elements().any(|e| e.apply(p).approx_eq(q, tol))
}

/// Orbit member that is smallest in lexicographic order of coordinates
/// rounded to multiples of `tol`. Intended for hashing and export; near
/// rounding ties two close points can pick different members, so equality
/// should go through [`eq_mod`].
pub fn canonical_rep(p: &PairS2, g: &Subgroup, tol: f64) -> PairS2 {
    let key = |q: &PairS2| -> [i64; 6] { q.coords().map(|x| (x / tol).round() as i64) };
    g.elements()
        .map(|e| e.apply(p))
        .min_by_key(key)
        .expect("subgroups contain the identity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::S2Point;

    type D = DihedralElement;

    fn generic() -> PairS2 {
        PairS2::new(
            S2Point::new([0.3, -0.5, 0.8]).unwrap(),
            S2Point::new([-0.9, 0.1, 0.2]).unwrap(),
        )
    }

    #[test]
    fn closure_examples() {
        let g = subgroup_closure(&[D::SIGMA]);
        assert_eq!(g.order(), 4);
        for k in 0..4 {
            assert!(g.contains(&D::new(k, 0)));
        }
        let g = subgroup_closure(&[D::new(1, 1), D::new(3, 1)]);
        assert_eq!(g.order(), 4);
        assert!(g.contains(&D::new(2, 0)));
        assert_eq!(D::new(1, 1).compose(&D::new(3, 1)), D::new(2, 0));
        let g = subgroup_closure(&[]);
        assert_eq!(g.order(), 1);
        assert_eq!(g.name(), "1");
    }

    #[test]
    fn all_subgroups_are_closed_and_divide_eight() {
        for g in [
            Subgroup::trivial(),
            Subgroup::sigma_tau(),
            Subgroup::tau_sigma(),
            Subgroup::sigma_squared(),
            Subgroup::sigma(),
            Subgroup::tau(),
            Subgroup::klein(),
            Subgroup::sigma_squared_tau(),
            Subgroup::whole(),
        ] {
            assert!(g.is_closed(), "{}", g.name());
            assert_eq!(8 % g.order(), 0);
        }
        assert_eq!(Subgroup::whole().order(), 8);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_of(&generic(), &Subgroup::whole(), 1e-9).len(), 8);
        let s = S2Point::new([0.1, 0.2, 0.3]).unwrap();
        let diag = PairS2::new(s, s);
        assert_eq!(orbit_of(&diag, &Subgroup::tau(), 1e-9).len(), 1);
        // the diagonal is fixed by tau, so the whole group has orbit 4 there
        assert_eq!(orbit_of(&diag, &Subgroup::whole(), 1e-9).len(), 4);
    }

    #[test]
    fn eq_mod_and_canonical_rep() {
        let p = generic();
        let g = Subgroup::sigma_squared();
        let q = D::new(2, 0).apply(&p);
        assert!(eq_mod(&p, &q, &g, 1e-9));
        assert!(!eq_mod(&p, &q, &Subgroup::tau(), 1e-9));
        let w = Subgroup::whole();
        let c = canonical_rep(&p, &w, 1e-9);
        for e in D::all() {
            assert_eq!(canonical_rep(&e.apply(&p), &w, 1e-9), c);
        }
    }
}
