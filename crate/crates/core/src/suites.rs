//! Randomized verification suites.
//!
//! Every suite draws `samples` inputs, sample `i` from its own ChaCha substream
//! of `seed`, so results do not depend on how rayon splits the range. Inputs
//! that sit within [`GENERIC_GUARD`] of a branch locus, of `pair_dot = ±1` or
//! of `T = 0` are redrawn wherever a suite tests generic behaviour.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::branch::{conic_distance, real_locus_distance};
use crate::error::{Error, Result};
use crate::fiber::{fhat_forward_error, fiber_big_g, fiber_fhat, fiber_g_real, fiber_g_tilde, fiber_lambda, Fiber};
use crate::geometry::{Cp1Point, Cp2Point, Rp2Point, S2Point, S4Point, C64};
use crate::lattice::{apply_path, paths_to, NodeId};
use crate::maps::{
    antipodal_cp1, beta_f_alpha, big_g, conj_cp, eta_kuiper, eth_with, f_hat, g_real, g_tilde,
    g_tilde_raw, gamma, gamma_inv, lambda_map, norm_identity, s3_double_cover, theta, theta_inv,
    theta_squared, unpack_c2r, veronese, DihedralElement, EthFormula, PairS2,
};
use crate::quotient::{orbit_of, Subgroup};
use crate::report::{Bound, CheckDef, Report, Tally};
use crate::sampling::{
    random_complex, random_cproj, random_level_pair, random_pair, random_rproj, random_sphere,
    random_unit_cvec, random_unit_quaternion, RngSpec,
};
use crate::tolerance::Tolerance;

/// Distance from degenerate positions below which random inputs are redrawn.
pub const GENERIC_GUARD: f64 = 1e-3;

/// Minimum displacement the free-action suite requires of nonidentity elements.
pub const FREE_ACTION_MARGIN: f64 = 0.1;

/// Number of random directions in the Kuiper support-function test.
pub const SUPPORT_DIRECTIONS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    Group,
    FreeAction,
    Diagram,
    Identities,
    Covering,
    Branch,
    Partition,
    Kuiper,
}

impl SuiteId {
    /// Registry order, used by `verify all`.
    pub const ALL: [SuiteId; 8] = [
        SuiteId::Group,
        SuiteId::FreeAction,
        SuiteId::Diagram,
        SuiteId::Identities,
        SuiteId::Covering,
        SuiteId::Branch,
        SuiteId::Partition,
        SuiteId::Kuiper,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteId::Group => "group",
            SuiteId::FreeAction => "free-action",
            SuiteId::Diagram => "diagram",
            SuiteId::Identities => "identities",
            SuiteId::Covering => "covering",
            SuiteId::Branch => "branch",
            SuiteId::Partition => "partition",
            SuiteId::Kuiper => "kuiper",
        }
    }

    pub fn default_samples(&self) -> u64 {
        match self {
            SuiteId::Group | SuiteId::Identities | SuiteId::Partition | SuiteId::FreeAction => 10_000,
            SuiteId::Diagram | SuiteId::Covering | SuiteId::Branch => 1_000,
            SuiteId::Kuiper => 100_000,
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Knobs beyond sample count, seed and tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteOptions {
    /// Closed form used for `eth` in the identities suite.
    pub eth: EthFormula,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            eth: EthFormula::STANDARD,
        }
    }
}

pub fn run_suite(id: SuiteId, samples: u64, seed: u64, tol: &Tolerance) -> Report {
    run_suite_with(id, samples, seed, tol, &SuiteOptions::default())
}

/// [`run_suite`] by registry name.
pub fn run_suite_named(name: &str, samples: u64, seed: u64, tol: &Tolerance) -> Result<Report> {
    Ok(run_suite(name.parse()?, samples, seed, tol))
}

pub fn run_suite_with(id: SuiteId, samples: u64, seed: u64, tol: &Tolerance, opts: &SuiteOptions) -> Report {
    let tally = match id {
        SuiteId::Group => group(samples, seed, tol),
        SuiteId::FreeAction => free_action(samples, seed, tol),
        SuiteId::Diagram => diagram(samples, seed, tol),
        SuiteId::Identities => identities(samples, seed, tol, opts),
        SuiteId::Covering => covering(samples, seed, tol),
        SuiteId::Branch => branch(samples, seed, tol),
        SuiteId::Partition => partition(samples, seed, tol),
        SuiteId::Kuiper => kuiper(samples, seed, tol),
    };
    tally.into_report(id.name(), samples, seed, tol)
}

fn defs(list: &[(&str, Bound)]) -> Arc<Vec<CheckDef>> {
    Arc::new(list.iter().map(|(n, b)| CheckDef::new(*n, *b)).collect())
}

/// Parallel fold over sample indices with one RNG substream per index.
fn fold_samples<S, I, F, M>(samples: u64, seed: u64, init: I, step: F, merge: M) -> S
where
    S: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, u64, &mut ChaCha8Rng) + Sync + Send,
    M: Fn(S, S) -> S + Sync + Send,
{
    let spec = RngSpec::new(seed);
    (0..samples)
        .into_par_iter()
        .fold(&init, |mut state, i| {
            let mut rng = spec.stream(i);
            step(&mut state, i, &mut rng);
            state
        })
        .reduce(&init, merge)
}

fn run_tally<F>(samples: u64, seed: u64, checks: Arc<Vec<CheckDef>>, tol: &Tolerance, step: F) -> Tally
where
    F: Fn(&mut Tally, u64, &mut ChaCha8Rng) + Sync + Send,
{
    fold_samples(samples, seed, || Tally::new(checks.clone(), tol), step, Tally::merge)
}

/// Draws until `ok` accepts; gives up after a fixed number of attempts and
/// returns the last draw, which the checks then see as it is.
fn redraw<T, R: Rng>(rng: &mut R, draw: impl Fn(&mut R) -> T, ok: impl Fn(&T) -> bool) -> T {
    let mut x = draw(rng);
    for _ in 0..10_000 {
        if ok(&x) {
            break;
        }
        x = draw(rng);
    }
    x
}

fn generic_pair(p: &PairS2) -> bool {
    let d = p.dot();
    1.0 - d.abs() >= GENERIC_GUARD
        && unpack_c2r(g_tilde(p).coords()).2.abs() >= GENERIC_GUARD
        && conic_distance(&lambda_map(p)) >= GENERIC_GUARD
}

fn show<T: fmt::Debug>(x: &T) -> String {
    format!("{x:?}")
}

fn detail<A: fmt::Debug, B: fmt::Debug, C: fmt::Debug>(a: &A, b: &B, c: &C) -> (String, String, String) {
    (show(a), show(b), show(c))
}

fn hyp(a: f64, b: f64) -> f64 {
    (a * a + b * b).sqrt()
}

fn pair_chordal(p: &[Cp1Point; 2], q: &[Cp1Point; 2]) -> f64 {
    hyp(p[0].chordal_distance(&q[0]), p[1].chordal_distance(&q[1]))
}

/// The dihedral action in harmonic coordinates `(gamma s, gamma s')`.
fn sigma_hat(p: &[Cp1Point; 2]) -> [Cp1Point; 2] {
    [p[1], antipodal_cp1(&p[0])]
}

fn tau_hat(p: &[Cp1Point; 2]) -> [Cp1Point; 2] {
    [p[1], p[0]]
}

fn harmonic(p: &PairS2) -> [Cp1Point; 2] {
    [gamma(&p.first), gamma(&p.second)]
}

fn group(samples: u64, seed: u64, tol: &Tolerance) -> Tally {
    const STRUCTURE: usize = 0;
    const SIGMA4: usize = 1;
    const TAU2: usize = 2;
    const BRAID: usize = 3;
    const WORDS: usize = 4;
    const HARMONIC_SIGMA4: usize = 5;
    const HARMONIC_TAU2: usize = 6;
    const HARMONIC_BRAID: usize = 7;
    const INTERTWINE_SIGMA: usize = 8;
    const INTERTWINE_TAU: usize = 9;
    let checks = defs(&[
        ("normal form relations", Bound::Suite),
        ("σ⁴ = 1", Bound::Suite),
        ("τ² = 1", Bound::Suite),
        ("τστ = σ⁻¹", Bound::Suite),
        ("words act as their normal forms", Bound::Suite),
        ("σ⁴ = 1 in harmonic coordinates", Bound::Suite),
        ("τ² = 1 in harmonic coordinates", Bound::Suite),
        ("τστ = σ⁻¹ in harmonic coordinates", Bound::Suite),
        ("γ×γ intertwines σ", Bound::Suite),
        ("γ×γ intertwines τ", Bound::Suite),
    ]);
    run_tally(samples, seed, checks, tol, |t, i, rng| {
        type D = DihedralElement;
        if i == 0 {
            let all = D::all();
            let distinct = all.iter().enumerate().all(|(k, a)| all[..k].iter().all(|b| a != b));
            let ok = D::SIGMA.pow(4) == D::IDENTITY
                && D::TAU.pow(2) == D::IDENTITY
                && D::TAU.compose(&D::SIGMA).compose(&D::TAU) == D::SIGMA.inverse()
                && D::SIGMA.order() == 4
                && distinct;
            t.record_bool(STRUCTURE, i, ok, || "dihedral normal form".into());
        }

        let p = random_pair(rng);
        let sigma = |q: &PairS2| D::SIGMA.apply(q);
        let tau = |q: &PairS2| D::TAU.apply(q);
        let sigma_inv = PairS2::new(p.second.antipode(), p.first);

        let q = sigma(&sigma(&sigma(&sigma(&p))));
        t.record(SIGMA4, i, q.distance(&p), || detail(&p, &q, &p));
        let q = tau(&tau(&p));
        t.record(TAU2, i, q.distance(&p), || detail(&p, &q, &p));
        let q = tau(&sigma(&tau(&p)));
        t.record(BRAID, i, q.distance(&sigma_inv), || detail(&p, &q, &sigma_inv));

        let len = rng.random_range(1..=12);
        let word: String = (0..len)
            .map(|_| ['s', 'S', 't'][rng.random_range(0..3)])
            .collect();
        let literal = word.chars().rev().fold(p, |q, ch| match ch {
            's' => sigma(&q),
            'S' => sigma(&sigma(&sigma(&q))),
            _ => tau(&q),
        });
        let normal = D::from_word(&word).expect("word over s, S, t").apply(&p);
        t.record(WORDS, i, literal.distance(&normal), || {
            detail(&(word.clone(), p), &literal, &normal)
        });

        let h = harmonic(&p);
        let q = sigma_hat(&sigma_hat(&sigma_hat(&sigma_hat(&h))));
        t.record(HARMONIC_SIGMA4, i, pair_chordal(&q, &h), || detail(&h, &q, &h));
        let q = tau_hat(&tau_hat(&h));
        t.record(HARMONIC_TAU2, i, pair_chordal(&q, &h), || detail(&h, &q, &h));
        let q = tau_hat(&sigma_hat(&tau_hat(&h)));
        let expected = sigma_hat(&sigma_hat(&sigma_hat(&h)));
        t.record(HARMONIC_BRAID, i, pair_chordal(&q, &expected), || detail(&h, &q, &expected));

        let lhs = harmonic(&sigma(&p));
        let rhs = sigma_hat(&h);
        t.record(INTERTWINE_SIGMA, i, pair_chordal(&lhs, &rhs), || detail(&p, &lhs, &rhs));
        let lhs = harmonic(&tau(&p));
        let rhs = tau_hat(&h);
        t.record(INTERTWINE_TAU, i, pair_chordal(&lhs, &rhs), || detail(&p, &lhs, &rhs));
    })
}

fn free_action(samples: u64, seed: u64, tol: &Tolerance) -> Tally {
    const GENERIC: usize = 0;
    const FREE_SUBGROUPS: usize = 1;
    const SIGMA_FREE: usize = 2;
    const TAU_DIAGONAL: usize = 3;
    const SIGMA_DIAGONAL: usize = 4;
    const TAU_ANTIDIAGONAL: usize = 5;
    let checks = defs(&[
        ("nonidentity elements move generic pairs", Bound::Suite),
        ("subgroups without τ-conjugates are free", Bound::Suite),
        ("σ moves every pair", Bound::Suite),
        ("τ fixes the diagonal", Bound::Strict),
        ("σ maps the diagonal onto the antidiagonal", Bound::Strict),
        ("τ moves every antidiagonal pair", Bound::Suite),
    ]);
    // elements with fixed points are exactly the conjugates of τ: τ, σ²τ fix Δ
    // or Γ_A and στ, σ³τ fix nothing; the subgroups listed avoid τ and σ²τ
    let free: Vec<Subgroup> = vec![
        Subgroup::sigma_tau(),
        Subgroup::tau_sigma(),
        Subgroup::sigma_squared(),
        Subgroup::sigma(),
        Subgroup::klein(),
    ];
    run_tally(samples, seed, checks, tol, move |t, i, rng| {
        type D = DihedralElement;
        let margin = |q: &PairS2, elems: &mut dyn Iterator<Item = &D>| -> (f64, D) {
            elems
                .filter(|e| **e != D::IDENTITY)
                .map(|e| (e.apply(q).distance(q), *e))
                .fold((f64::INFINITY, D::IDENTITY), |a, b| if b.0 < a.0 { b } else { a })
        };

        let p = redraw(rng, random_pair, |q| q.dot().abs() <= 1.0 - FREE_ACTION_MARGIN);
        let (m, e) = margin(&p, &mut D::all().iter());
        t.record(GENERIC, i, (FREE_ACTION_MARGIN - m).max(0.0), || {
            detail(&p, &(e.to_string(), m), &format!(">= {FREE_ACTION_MARGIN}"))
        });

        let q = random_pair(rng);
        for g in &free {
            if g.contains(&D::TAU) || g.contains(&D::new(2, 1)) {
                t.record_bool(FREE_SUBGROUPS, i, false, || g.name().to_string());
                continue;
            }
            let (m, e) = margin(&q, &mut g.elements());
            t.record(FREE_SUBGROUPS, i, (FREE_ACTION_MARGIN - m).max(0.0), || {
                detail(&(g.name(), q), &(e.to_string(), m), &format!(">= {FREE_ACTION_MARGIN}"))
            });
        }
        let m = D::SIGMA.apply(&q).distance(&q);
        t.record(SIGMA_FREE, i, (FREE_ACTION_MARGIN - m).max(0.0), || {
            detail(&q, &m, &format!(">= {FREE_ACTION_MARGIN}"))
        });

        let s: S2Point = random_sphere(rng);
        let diag = PairS2::new(s, s);
        let moved = D::TAU.apply(&diag);
        t.record(TAU_DIAGONAL, i, moved.distance(&diag), || detail(&diag, &moved, &diag));
        let image = D::SIGMA.apply(&diag);
        t.record(SIGMA_DIAGONAL, i, (image.dot() + 1.0).abs(), || detail(&diag, &image.dot(), &-1.0));
        let anti = PairS2::new(s, s.antipode());
        let m = D::TAU.apply(&anti).distance(&anti);
        t.record(TAU_ANTIDIAGONAL, i, (FREE_ACTION_MARGIN - m).max(0.0), || {
            detail(&anti, &m, &format!(">= {FREE_ACTION_MARGIN}"))
        });
    })
}

fn diagram(samples: u64, seed: u64, tol: &Tolerance) -> Tally {
    let mut list: Vec<(String, Bound)> = vec![("edge structure".into(), Bound::Suite)];
    for node in NodeId::ALL {
        list.push((format!("paths to {node} commute"), Bound::Suite));
    }
    for node in NodeId::ALL {
        list.push((format!("{node} model is orbit-constant"), Bound::Suite));
    }
    let checks = Arc::new(list.into_iter().map(|(n, b)| CheckDef::new(n, b)).collect::<Vec<_>>());
    let paths: Vec<_> = NodeId::ALL.iter().map(|n| paths_to(*n)).collect();
    let groups: Vec<Subgroup> = NodeId::ALL.iter().map(|n| n.subgroup()).collect();
    let n = NodeId::ALL.len();
    run_tally(samples, seed, checks, tol, move |t, i, rng| {
        if i == 0 {
            let edges = crate::lattice::edges();
            // every unlabeled edge is a 2-fold projection: the subgroup index is 2
            let ok = edges.len() == 13
                && edges.iter().all(|e| {
                    let (a, b) = (e.from.subgroup(), e.to.subgroup());
                    a.elements().all(|x| b.contains(x))
                        && (e.label.is_some() || b.order() == 2 * a.order())
                })
                && paths.iter().all(|ps| !ps.is_empty());
            t.record_bool(0, i, ok, || "lattice edges".into());
        }
        let p = redraw(rng, random_pair, generic_pair);
        for (k, node) in NodeId::ALL.iter().enumerate() {
            let direct = node.model_map(&p);
            for path in &paths[k] {
                let v = apply_path(path, &p);
                let err = v.distance(&direct).unwrap_or(f64::INFINITY);
                t.record(1 + k, i, err, || {
                    let route: Vec<String> = path.iter().map(|e| e.to.to_string()).collect();
                    detail(&(route.join(" -> "), p), &v, &direct)
                });
            }
            for e in groups[k].elements() {
                let v = node.model_map(&e.apply(&p));
                let err = v.distance(&direct).unwrap_or(f64::INFINITY);
                t.record(1 + n + k, i, err, || detail(&(e.to_string(), p), &v, &direct));
            }
        }
    })
}

fn identities(samples: u64, seed: u64, tol: &Tolerance, opts: &SuiteOptions) -> Tally {
    const BFA: usize = 0;
    const FHAT_CONJ: usize = 1;
    const LAMBDA_TAU: usize = 2;
    const LAMBDA_SIGMA2_THETA2: usize = 3;
    const LAMBDA_SIGMA2_CONJUGATE: usize = 4;
    const THETA4: usize = 5;
    const C2_THETA_C2: usize = 6;
    const THETA_SQUARED: usize = 7;
    const THETA_INV: usize = 8;
    const G_LAMBDA: usize = 9;
    const ETH_G_THETA: usize = 10;
    const ETH_C2: usize = 11;
    const NORM: usize = 12;
    const GAMMA_ROUND_TRIP: usize = 13;
    const GAMMA_ANTIPODAL: usize = 14;
    let checks = defs(&[
        ("βfα = (w, z²)", Bound::Suite),
        ("f̂(c₁×c₁) = c₂f̂", Bound::Suite),
        ("λτ = λ", Bound::Suite),
        ("λσ² = θ²c₂λ", Bound::Suite),
        ("λσ² = θc₂θ⁻¹λ", Bound::Suite),
        ("θ⁴ = id", Bound::Suite),
        ("c₂θc₂ = θ⁻¹", Bound::Suite),
        ("θ²[u:v:w] = [w:−v:u]", Bound::Suite),
        ("θθ⁻¹ = id", Bound::Suite),
        ("Gλ = g̃", Bound::Suite),
        ("ð = Gθ", Bound::Suite),
        ("ðc₂ = ð", Bound::Suite),
        ("|g̃ raw| = √(1+2tt′(rr′+ss′))", Bound::Strict),
        ("γ⁻¹γ = id", Bound::Suite),
        ("γA = A γ", Bound::Suite),
    ]);
    let eth = opts.eth;
    run_tally(samples, seed, checks, tol, move |t, i, rng| {
        let (w, z) = (random_complex(rng), random_complex(rng));
        let (a, b) = beta_f_alpha(w, z);
        let scale = 1.0 + w.norm() + z.norm_sqr();
        let err = ((a - w).norm() + (b - z * z).norm()) / scale;
        t.record(BFA, i, err, || detail(&(w, z), &(a, b), &(w, z * z)));

        let (p, q): (Cp1Point, Cp1Point) = (random_cproj(rng), random_cproj(rng));
        let lhs = f_hat(&p.conj(), &q.conj());
        let rhs = conj_cp(&f_hat(&p, &q));
        t.record(FHAT_CONJ, i, lhs.chordal_distance(&rhs), || detail(&(p, q), &lhs, &rhs));

        type D = DihedralElement;
        let pair = random_pair(rng);
        let l = lambda_map(&pair);
        let lt = lambda_map(&D::TAU.apply(&pair));
        t.record(LAMBDA_TAU, i, lt.chordal_distance(&l), || detail(&pair, &lt, &l));
        let ls = lambda_map(&D::new(2, 0).apply(&pair));
        let via_theta2 = theta_squared(&l.conj());
        t.record(LAMBDA_SIGMA2_THETA2, i, ls.chordal_distance(&via_theta2), || {
            detail(&pair, &ls, &via_theta2)
        });
        let via_conj = theta(&theta_inv(&l).conj());
        t.record(LAMBDA_SIGMA2_CONJUGATE, i, ls.chordal_distance(&via_conj), || {
            detail(&pair, &ls, &via_conj)
        });

        let x: Cp2Point = random_cproj(rng);
        let t4 = theta(&theta(&theta(&theta(&x))));
        t.record(THETA4, i, t4.chordal_distance(&x), || detail(&x, &t4, &x));
        let ctc = theta(&x.conj()).conj();
        let ti = theta_inv(&x);
        t.record(C2_THETA_C2, i, ctc.chordal_distance(&ti), || detail(&x, &ctc, &ti));
        let tt = theta(&theta(&x));
        let closed = theta_squared(&x);
        t.record(THETA_SQUARED, i, tt.chordal_distance(&closed), || detail(&x, &tt, &closed));
        let back = theta(&ti);
        t.record(THETA_INV, i, back.chordal_distance(&x), || detail(&x, &back, &x));

        let gl = big_g(&l);
        let gt = g_tilde(&pair);
        t.record(G_LAMBDA, i, gl.distance(&gt), || detail(&pair, &gl, &gt));

        let e = eth_with(&eth, &x);
        let gth = big_g(&theta(&x));
        t.record(ETH_G_THETA, i, e.distance(&gth), || detail(&x, &e, &gth));
        let ec = eth_with(&eth, &x.conj());
        t.record(ETH_C2, i, ec.distance(&e), || detail(&x, &ec, &e));

        let raw = g_tilde_raw(&pair);
        let n = raw.iter().map(|v| v * v).sum::<f64>().sqrt();
        let closed = norm_identity(&pair);
        t.record(NORM, i, (n - closed).abs(), || detail(&pair, &n, &closed));

        let s = pair.first;
        let back = gamma_inv(&gamma(&s));
        t.record(GAMMA_ROUND_TRIP, i, back.distance(&s), || detail(&s, &back, &s));
        let lhs = gamma(&s.antipode());
        let rhs = antipodal_cp1(&gamma(&s));
        t.record(GAMMA_ANTIPODAL, i, lhs.chordal_distance(&rhs), || detail(&s, &lhs, &rhs));
    })
}

fn covering(samples: u64, seed: u64, tol: &Tolerance) -> Tally {
    const FHAT_COUNT: usize = 0;
    const FHAT_FORWARD: usize = 1;
    const LAMBDA_COUNT: usize = 2;
    const LAMBDA_FORWARD: usize = 3;
    const LAMBDA_TAU: usize = 4;
    const GT_COUNT: usize = 5;
    const GT_ORBIT: usize = 6;
    const GT_FORWARD: usize = 7;
    const BIG_G_COUNT: usize = 8;
    const BIG_G_PARTNER: usize = 9;
    const BIG_G_FORWARD: usize = 10;
    const ETH_CONJUGATE: usize = 11;
    const CONIC_COUNT: usize = 12;
    const CONIC_DISC: usize = 13;
    const CONIC_ROOT: usize = 14;
    const G_COUNT: usize = 15;
    const G_FORWARD: usize = 16;
    const G_CONTAINS: usize = 17;
    let checks = defs(&[
        ("f̂ generic fiber has 2 classes", Bound::Suite),
        ("f̂ forward error", Bound::Suite),
        ("λ generic fiber has 2 classes", Bound::Suite),
        ("λ forward error", Bound::Suite),
        ("λ fiber is a τ-pair", Bound::Suite),
        ("g̃ generic fiber has 4 pairs", Bound::Suite),
        ("g̃ fiber is the ⟨σ²,τ⟩-orbit", Bound::Suite),
        ("g̃ forward error", Bound::Suite),
        ("G generic fiber has 2 classes", Bound::Suite),
        ("G fiber is {z, θ²c₂z}", Bound::Suite),
        ("G forward error", Bound::Suite),
        ("ð fiber is {x, c₂x}", Bound::Suite),
        ("on-conic f̂ fiber is one class of multiplicity 2", Bound::Suite),
        ("on-conic relative discriminant", Bound::Suite),
        ("on-conic root is the diagonal point", Bound::Suite),
        ("g generic fiber has 2 classes", Bound::Suite),
        ("g forward error", Bound::Suite),
        ("g fiber contains the input pair", Bound::Suite),
    ]);
    let orbit_group = Subgroup::sigma_squared_tau();
    run_tally(samples, seed, checks, tol, move |t, i, rng| {
        // f_hat and lambda over random targets off the conic
        let target: Cp2Point = redraw(rng, random_cproj, |z| conic_distance(z) >= GENERIC_GUARD);
        let fib = fiber_fhat(&target, tol);
        t.record_bool(FHAT_COUNT, i, fib.len() == 2 && !fib.on_branch, || show(&target));
        for pre in fib.points() {
            let err = fhat_forward_error(pre, &target);
            t.record(FHAT_FORWARD, i, err, || detail(&target, pre, &target));
        }
        let fib = fiber_lambda(&target, tol);
        t.record_bool(LAMBDA_COUNT, i, fib.len() == 2 && !fib.on_branch, || show(&target));
        for pre in fib.points() {
            let img = lambda_map(pre);
            t.record(LAMBDA_FORWARD, i, img.chordal_distance(&target), || detail(&target, &img, &target));
        }
        if fib.len() == 2 {
            let swapped = DihedralElement::TAU.apply(&fib.classes[0].point);
            let err = swapped.distance(&fib.classes[1].point);
            t.record(LAMBDA_TAU, i, err, || detail(&target, &swapped, &fib.classes[1].point));
        }

        // g_tilde and G over images of generic pairs, where the orbit is known
        let p = redraw(rng, random_pair, generic_pair);
        let y = g_tilde(&p);
        match fiber_g_tilde(&y, tol) {
            Ok(fib) => {
                t.record_bool(GT_COUNT, i, fib.len() == 4 && !fib.on_branch, || show(&p));
                let orbit = orbit_of(&p, &orbit_group, tol.eq_tol);
                let err = set_distance(&orbit, &fib.points().copied().collect::<Vec<_>>(), |a, b| a.distance(b));
                t.record(GT_ORBIT, i, err, || detail(&p, &fib.classes, &orbit));
                for pre in fib.points() {
                    let img = g_tilde(pre);
                    t.record(GT_FORWARD, i, img.distance(&y), || detail(&y, &img, &y));
                }
            }
            Err(e) => t.record_bool(GT_COUNT, i, false, || format!("{p:?}: {e}")),
        }
        let z = lambda_map(&p);
        let gz = big_g(&z);
        match fiber_big_g(&gz, tol) {
            Ok(fib) => {
                t.record_bool(BIG_G_COUNT, i, fib.len() == 2 && fib.degree() == 2, || show(&z));
                let expected = [z, theta_squared(&z.conj())];
                let got: Vec<Cp2Point> = fib.points().copied().collect();
                let err = set_distance(&expected, &got, |a, b| a.chordal_distance(b));
                t.record(BIG_G_PARTNER, i, err, || detail(&z, &got, &expected));
                for pre in fib.points() {
                    let img = big_g(pre);
                    t.record(BIG_G_FORWARD, i, img.distance(&gz), || detail(&gz, &img, &gz));
                }
                // eth = G theta, so theta^-1 carries this fiber to the eth fiber {x, c2 x}
                let x = theta_inv(&z);
                let eth_fiber: Vec<Cp2Point> = got.iter().map(theta_inv).collect();
                let err = set_distance(&[x, x.conj()], &eth_fiber, |a, b| a.chordal_distance(b));
                t.record(ETH_CONJUGATE, i, err, || detail(&x, &eth_fiber, &[x, x.conj()]));
            }
            Err(e) => t.record_bool(BIG_G_COUNT, i, false, || format!("{z:?}: {e}")),
        }

        // on-conic targets f_hat(r, r)
        let r: Cp1Point = random_cproj(rng);
        let target = f_hat(&r, &r);
        let fib = fiber_fhat(&target, tol);
        let ok = fib.len() == 1 && fib.classes[0].multiplicity == 2 && fib.on_branch;
        t.record_bool(CONIC_COUNT, i, ok, || show(&target));
        let roots = crate::fiber::fhat_roots(&target, tol);
        t.record(CONIC_DISC, i, roots.relative_discriminant, || {
            detail(&target, &roots.relative_discriminant, &0.0)
        });
        let root = fib.classes[0].point[0];
        t.record(CONIC_ROOT, i, root.chordal_distance(&r), || detail(&target, &root, &r));

        // g on RP^2 x RP^2
        let (a, b): (Rp2Point, Rp2Point) = redraw(
            rng,
            |r| (random_rproj(r), random_rproj(r)),
            |(a, b)| {
                a.coords()[2].abs() >= GENERIC_GUARD
                    && b.coords()[2].abs() >= GENERIC_GUARD
                    && a.chordal_distance(b) >= GENERIC_GUARD
            },
        );
        let y = g_real(&a, &b);
        match fiber_g_real(&y, tol) {
            Ok(fib) => {
                t.record_bool(G_COUNT, i, fib.len() == 2 && !fib.on_branch, || show(&(a, b)));
                for pre in fib.points() {
                    let img = g_real(&pre[0], &pre[1]);
                    t.record(G_FORWARD, i, img.chordal_distance(&y), || detail(&y, &img, &y));
                }
                let err = fib
                    .points()
                    .map(|pre| hyp(pre[0].chordal_distance(&a), pre[1].chordal_distance(&b)))
                    .fold(f64::INFINITY, f64::min);
                t.record(G_CONTAINS, i, err, || detail(&y, &fib.classes, &(a, b)));
            }
            Err(e) => t.record_bool(G_COUNT, i, false, || format!("{a:?} {b:?}: {e}")),
        }
    })
}

/// Hausdorff distance between two finite sets, infinite if the sizes differ.
fn set_distance<T>(a: &[T], b: &[T], d: impl Fn(&T, &T) -> f64) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let one_way = |x: &[T], y: &[T]| {
        x.iter()
            .map(|p| y.iter().map(|q| d(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

fn branch(samples: u64, seed: u64, tol: &Tolerance) -> Tally {
    const DIAGONAL_ON_CONIC: usize = 0;
    const FHAT_DIAGONAL_ON_CONIC: usize = 1;
    const DIAGONAL_BRANCHED: usize = 2;
    const GENERIC_UNBRANCHED: usize = 3;
    const REAL_FIXED: usize = 4;
    const ETH_REAL_CONJ: usize = 5;
    const ETH_COLLAPSE: usize = 6;
    const ETH_COLLAPSE_POINT: usize = 7;
    const ETH_GENERIC: usize = 8;
    const G_DIAGONAL: usize = 9;
    let checks = defs(&[
        ("λ(Δ) lies on the conic", Bound::Strict),
        ("f̂(Δ) lies on the conic", Bound::Strict),
        ("fibers over λ(Δ) are branched", Bound::Suite),
        ("fibers off the conic are unbranched", Bound::Suite),
        ("real points are c₂-fixed", Bound::Strict),
        ("ð identifies real points with their conjugates", Bound::Strict),
        ("ð fiber over real points is one class of multiplicity 2", Bound::Suite),
        ("collapsed ð fiber is the real point", Bound::Suite),
        ("ð fiber off the real locus has 2 classes", Bound::Suite),
        ("g fiber over the diagonal is one class", Bound::Suite),
    ]);
    run_tally(samples, seed, checks, tol, move |t, i, rng| {
        let s: S2Point = random_sphere(rng);
        let l = lambda_map(&PairS2::new(s, s));
        t.record(DIAGONAL_ON_CONIC, i, conic_distance(&l), || detail(&s, &conic_distance(&l), &0.0));
        let r: Cp1Point = random_cproj(rng);
        let f = f_hat(&r, &r);
        t.record(FHAT_DIAGONAL_ON_CONIC, i, conic_distance(&f), || detail(&r, &conic_distance(&f), &0.0));
        let fib = fiber_lambda(&l, tol);
        t.record_bool(DIAGONAL_BRANCHED, i, fib.on_branch && fib.len() == 1 && fib.degree() == 2, || {
            show(&l)
        });
        let z: Cp2Point = redraw(rng, random_cproj, |z| conic_distance(z) >= GENERIC_GUARD);
        let fib = fiber_fhat(&z, tol);
        t.record_bool(GENERIC_UNBRANCHED, i, !fib.on_branch && fib.len() == 2, || show(&z));

        // real points of CP^2, away from the equator of the eth target
        let x: Cp2Point = redraw(
            rng,
            |r| {
                let v: Rp2Point = random_rproj(r);
                Cp2Point::from_real(*v.coords()).expect("unit vector")
            },
            |x| unpack_c2r(eth_with(&EthFormula::STANDARD, x).coords()).2.abs() >= GENERIC_GUARD,
        );
        t.record(REAL_FIXED, i, real_locus_distance(&x), || detail(&x, &x.conj(), &x));
        let (e, ec) = (crate::maps::eth(&x), crate::maps::eth(&x.conj()));
        t.record(ETH_REAL_CONJ, i, e.distance(&ec), || detail(&x, &ec, &e));
        match eth_fiber(&e, tol) {
            Ok(fib) => {
                let ok = fib.len() == 1 && fib.degree() == 2 && fib.on_branch;
                t.record_bool(ETH_COLLAPSE, i, ok, || show(&x));
                let err = fib.points().map(|y| y.chordal_distance(&x)).fold(f64::INFINITY, f64::min);
                t.record(ETH_COLLAPSE_POINT, i, err, || detail(&x, &fib.classes, &x));
            }
            Err(err) => t.record_bool(ETH_COLLAPSE, i, false, || format!("{x:?}: {err}")),
        }

        let y: Cp2Point = redraw(
            rng,
            random_cproj,
            |y| {
                real_locus_distance(y) >= GENERIC_GUARD
                    && conic_distance(&theta(y)) >= GENERIC_GUARD
                    && unpack_c2r(crate::maps::eth(y).coords()).2.abs() >= GENERIC_GUARD
            },
        );
        match eth_fiber(&crate::maps::eth(&y), tol) {
            Ok(fib) => t.record_bool(ETH_GENERIC, i, fib.len() == 2 && !fib.on_branch, || show(&y)),
            Err(err) => t.record_bool(ETH_GENERIC, i, false, || format!("{y:?}: {err}")),
        }

        let v: Rp2Point = redraw(rng, random_rproj, |v| v.coords()[2].abs() >= GENERIC_GUARD);
        match fiber_g_real(&g_real(&v, &v), tol) {
            Ok(fib) => t.record_bool(G_DIAGONAL, i, fib.len() == 1 && fib.on_branch, || show(&v)),
            Err(err) => t.record_bool(G_DIAGONAL, i, false, || format!("{v:?}: {err}")),
        }
    })
}

/// Fiber of `eth = G . theta`, as `theta^-1` of the fiber of `G`.
fn eth_fiber(target: &S4Point, tol: &Tolerance) -> Result<Fiber<Cp2Point>> {
    let mut fib = fiber_big_g(target, tol)?;
    for c in &mut fib.classes {
        c.point = theta_inv(&c.point);
    }
    Ok(fib)
}

fn partition(samples: u64, seed: u64, tol: &Tolerance) -> Tally {
    const SIGMA_NEGATES: usize = 0;
    const TAU_PRESERVES: usize = 1;
    const COVER_IN_C0: usize = 2;
    const COVER_EVEN: usize = 3;
    const LEVEL_CONSTRUCTION: usize = 4;
    const LEVEL_SWAP: usize = 5;
    let checks = defs(&[
        ("pair_dot∘σ = −pair_dot", Bound::Strict),
        ("pair_dot∘τ = pair_dot", Bound::Strict),
        ("S³ cover lands in C₀", Bound::Strict),
        ("S³ cover identifies ±q", Bound::Strict),
        ("C_x samples have pair_dot x", Bound::Strict),
        ("σ carries C_x to C_−x", Bound::Strict),
    ]);
    run_tally(samples, seed, checks, tol, move |t, i, rng| {
        type D = DihedralElement;
        let p = random_pair(rng);
        let (d, ds) = (p.dot(), D::SIGMA.apply(&p).dot());
        t.record(SIGMA_NEGATES, i, (ds + d).abs(), || detail(&p, &ds, &-d));
        let dt = D::TAU.apply(&p).dot();
        t.record(TAU_PRESERVES, i, (dt - d).abs(), || detail(&p, &dt, &d));

        let q = random_unit_quaternion(rng);
        match (s3_double_cover(&q, tol), s3_double_cover(&-q, tol)) {
            (Ok(a), Ok(b)) => {
                t.record(COVER_IN_C0, i, a.dot().abs(), || detail(&q, &a.dot(), &0.0));
                t.record(COVER_EVEN, i, a.distance(&b), || detail(&q, &b, &a));
            }
            (Err(e), _) | (_, Err(e)) => t.record(COVER_IN_C0, i, f64::INFINITY, || {
                detail(&q, &e.to_string(), &"a unit pair")
            }),
        }

        let x: f64 = rng.random_range(0.0..=1.0);
        let lp = random_level_pair(x, rng);
        t.record(LEVEL_CONSTRUCTION, i, (lp.dot() - x).abs(), || detail(&(x, lp), &lp.dot(), &x));
        let moved = D::SIGMA.apply(&lp).dot();
        t.record(LEVEL_SWAP, i, (moved + x).abs(), || detail(&(x, lp), &moved, &-x));
    })
}

struct KuiperState {
    tally: Tally,
    sphere: Vec<f64>,
    real: Vec<f64>,
}

fn kuiper(samples: u64, seed: u64, tol: &Tolerance) -> Tally {
    const PHASE: usize = 0;
    const CONJ: usize = 1;
    const HYPERPLANE: usize = 2;
    const VERONESE: usize = 3;
    const SUPPORT: usize = 4;
    let checks = defs(&[
        ("η(ζv) = η(v)", Bound::Strict),
        ("η(v̄) = η(v)", Bound::Strict),
        ("x₁+x₂+x₃ = 1 on S⁵", Bound::Strict),
        ("η on Σ is the Veronese map", Bound::Strict),
        ("support functions of η(S⁵) and η(Σ) agree", Bound::Hull),
    ]);
    // directions come from their own substream family so they do not depend on `samples`
    let dirs: Vec<[f64; 6]> = {
        let spec = RngSpec::new(seed ^ 0x5eed_d1e5_0000_0000);
        (0..SUPPORT_DIRECTIONS as u64)
            .map(|k| *random_sphere::<6, _>(&mut spec.stream(k)).coords())
            .collect()
    };
    let support = |out: &mut [f64], y: &[f64; 6]| {
        for (m, d) in out.iter_mut().zip(&dirs) {
            let v = d.iter().zip(y).map(|(a, b)| a * b).sum::<f64>();
            *m = m.max(v);
        }
    };
    let init = || KuiperState {
        tally: Tally::new(checks.clone(), tol),
        sphere: vec![f64::NEG_INFINITY; SUPPORT_DIRECTIONS],
        real: vec![f64::NEG_INFINITY; SUPPORT_DIRECTIONS],
    };
    let state = fold_samples(
        samples,
        seed,
        init,
        |st, i, rng| {
            let t = &mut st.tally;
            let v: [C64; 3] = random_unit_cvec(rng);
            let e = eta_kuiper(&v);
            let zeta = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
            let ez = eta_kuiper(&v.map(|c| zeta * c));
            t.record(PHASE, i, dist6(&ez, &e), || detail(&(v, zeta), &ez, &e));
            let ec = eta_kuiper(&v.map(|c| c.conj()));
            t.record(CONJ, i, dist6(&ec, &e), || detail(&v, &ec, &e));
            let sum = e[0] + e[1] + e[2];
            t.record(HYPERPLANE, i, (sum - 1.0).abs(), || detail(&v, &sum, &1.0));

            let x: S2Point = random_sphere(rng);
            let xc = x.coords().map(|c| C64::new(c, 0.0));
            let (er, ver) = (eta_kuiper(&xc), veronese(x.coords()));
            t.record(VERONESE, i, dist6(&er, &ver), || detail(&x, &er, &ver));

            support(&mut st.sphere, &e);
            support(&mut st.real, &er);
        },
        |mut a, b| {
            a.tally = a.tally.merge(b.tally);
            for (x, y) in a.sphere.iter_mut().zip(b.sphere) {
                *x = x.max(y);
            }
            for (x, y) in a.real.iter_mut().zip(b.real) {
                *x = x.max(y);
            }
            a
        },
    );
    let mut tally = state.tally;
    if samples > 0 {
        for (k, (a, b)) in state.sphere.iter().zip(&state.real).enumerate() {
            tally.record(SUPPORT, k as u64, (a - b).abs(), || detail(&dirs[k], a, b));
        }
    }
    tally
}

fn dist6(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}
