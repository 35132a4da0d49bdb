use std::fmt;

use super::PairS2;

/// Element `sigma^a tau^b` of the dihedral group of order 8 generated by
/// `sigma(s, s') = (s', A s)` and `tau(s, s') = (s', s)`.
///
/// Composition uses `tau sigma = sigma^-1 tau`, so every word reduces to the
/// normal form. The element acts by `sigma^a (tau^b (p))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    a: u8,
    b: u8,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self { a: 0, b: 0 };
    pub const SIGMA: Self = Self { a: 1, b: 0 };
    pub const TAU: Self = Self { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        Self {
            a: a.rem_euclid(4) as u8,
            b: b.rem_euclid(2) as u8,
        }
    }

    pub fn sigma_power(&self) -> u8 {
        self.a
    }

    pub fn tau_power(&self) -> u8 {
        self.b
    }

    /// All eight elements in normal-form order.
    pub fn all() -> [Self; 8] {
        std::array::from_fn(|k| Self {
            a: (k % 4) as u8,
            b: (k / 4) as u8,
        })
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        let a = if self.b == 0 {
            self.a as i64 + other.a as i64
        } else {
            self.a as i64 - other.a as i64
        };
        Self::new(a, (self.b + other.b) as i64)
    }

    pub fn inverse(&self) -> Self {
        if self.b == 0 {
            Self::new(-(self.a as i64), 0)
        } else {
            *self
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::IDENTITY, |acc, _| acc.compose(self))
    }

    /// Parses a word in `s` (sigma), `S` (sigma inverse) and `t` (tau), read
    /// left to right as a product; the empty word and `1` are the identity.
    pub fn from_word(word: &str) -> Option<Self> {
        let mut acc = Self::IDENTITY;
        for ch in word.chars() {
            let g = match ch {
                's' => Self::SIGMA,
                'S' => Self::SIGMA.inverse(),
                't' => Self::TAU,
                '1' => Self::IDENTITY,
                _ => return None,
            };
            acc = acc.compose(&g);
        }
        Some(acc)
    }

    pub fn order(&self) -> u32 {
        let mut g = *self;
        let mut n = 1;
        while g != Self::IDENTITY {
            g = g.compose(self);
            n += 1;
        }
        n
    }

    pub fn apply(&self, p: &PairS2) -> PairS2 {
        let mut q = *p;
        if self.b == 1 {
            q = PairS2::new(q.second, q.first);
        }
        for _ in 0..self.a {
            q = PairS2::new(q.second, q.first.antipode());
        }
        q
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (0, 1) => write!(f, "τ"),
            (1, 0) => write!(f, "σ"),
            (1, 1) => write!(f, "στ"),
            (a, 0) => write!(f, "σ^{a}"),
            (a, _) => write!(f, "σ^{a}τ"),
        }
    }
}

pub fn dihedral_apply(e: &DihedralElement, p: &PairS2) -> PairS2 {
    e.apply(p)
}
