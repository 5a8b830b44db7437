//! Randomized exact checks of the rowmotion identities, conjecture probes and
//! the claw counterexample.

mod claw;
mod verdict;

use rayon::prelude::*;
use thiserror::Error;

pub use claw::{claw_counterexample, claw_labeling, claw_parameters, contract};
pub use verdict::{CheckKind, Status, TrialResult, Verdict, Witness};

use crate::algebra::{AlgebraError, PartialValue, RingDescriptor, RingElement};
use crate::check::Outcome;
use crate::poset::{antipode, ExtendedPoset, Family, PosetError, PosetSpec, RectCoord};
use crate::rowmotion::{rowmotion, Labeling, Orbit};

/// A trial stops with [`Status::Blowup`] once any numerator or denominator exceeds this.
pub const MAX_ENTRY_BITS: u64 = 100_000;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid trial configuration: {0}")]
    Config(String),
}

/// What to run: trial `t` uses the labeling drawn from seed `seed + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub poset: PosetSpec,
    pub ring: RingDescriptor,
    pub seed: u64,
    pub bound: u32,
    /// Rowmotion steps; `None` picks a default per check.
    pub max_iterations: Option<usize>,
    pub trials: usize,
}

impl TrialConfig {
    pub fn new(poset: PosetSpec, ring: RingDescriptor) -> Self {
        TrialConfig { poset, ring, seed: 0, bound: 9, max_iterations: None, trials: 20 }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn bound(mut self, bound: u32) -> Self {
        self.bound = bound;
        self
    }

    pub fn max_iterations(mut self, steps: usize) -> Self {
        self.max_iterations = Some(steps);
        self
    }

    fn validate(&self) -> Result<ExtendedPoset, VerifyError> {
        if self.trials < 1 {
            return Err(VerifyError::Config("trials must be at least 1".into()));
        }
        if self.max_iterations == Some(0) {
            return Err(VerifyError::Config("max iterations must be at least 1".into()));
        }
        if self.bound < 1 {
            return Err(VerifyError::Config("entry bound must be at least 1".into()));
        }
        Ok(ExtendedPoset::new(self.poset.build()?))
    }

    fn steps_or(&self, default: usize) -> usize {
        self.max_iterations.unwrap_or(default)
    }
}

/// Steps used when none are configured: `p+q` on rectangles, `|P|+2` elsewhere.
pub fn default_steps(poset: &ExtendedPoset) -> usize {
    poset.rectangle_shape().map_or(poset.len() + 2, |(p, q)| p + q)
}

/// An iterate had an entry wider than [`MAX_ENTRY_BITS`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("an entry exceeded {MAX_ENTRY_BITS} bits")]
pub struct Blowup;

/// `f, …, R^k f`, stopping early at an undefined iterate.
pub fn bounded_orbit(poset: &ExtendedPoset, f: &Labeling, k: usize) -> Result<Orbit, Blowup> {
    let mut states = vec![f.clone()];
    while states.len() <= k {
        let Some(next) = rowmotion(poset, states.last().expect("nonempty")) else { break };
        if next.max_bits() > MAX_ENTRY_BITS {
            return Err(Blowup);
        }
        states.push(next);
    }
    Ok(Orbit::from_prefix(states, k))
}

/// Runs `trial` on seeded random labelings (adjusted by `prepare`), in parallel,
/// and aggregates in seed order.
fn run_trials(
    check: &str,
    kind: CheckKind,
    cfg: &TrialConfig,
    poset: &ExtendedPoset,
    prepare: impl Fn(Labeling) -> Labeling + Sync,
    trial: impl Fn(&Labeling) -> TrialResult + Sync,
) -> Result<Verdict, VerifyError> {
    let results: Vec<(u64, Labeling, TrialResult)> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| {
            let seed = cfg.seed.wrapping_add(t);
            let f = prepare(Labeling::random(poset, cfg.ring, seed, cfg.bound)?);
            let result = trial(&f);
            Ok((seed, f, result))
        })
        .collect::<Result<_, AlgebraError>>()?;
    let mut verdict = Verdict::new(check, kind);
    for (seed, f, result) in results {
        verdict.record(result, |mismatch| Witness {
            poset: cfg.poset.to_string(),
            ring: cfg.ring.to_string(),
            seed: Some(seed),
            labeling: f.to_json(poset),
            mismatch,
        });
    }
    Ok(verdict)
}

fn twisted(f: &Labeling, x: &RingElement) -> PartialValue {
    let (a, b) = (f.bottom(), f.top());
    let (ai, bi) = (a.try_inverse()?, b.try_inverse()?);
    let left = &(a * &bi) * x;
    Some(&(&left * &ai) * b)
}

fn sandwich(f: &Labeling, x: &PartialValue) -> PartialValue {
    Some(&(f.bottom() * &x.as_ref()?.try_inverse()?) * f.top())
}

fn ends_invertible(f: &Labeling) -> Outcome {
    let a_inv = f.bottom().try_inverse().map(|_| f.bottom().clone());
    let b_inv = f.top().try_inverse().map(|_| f.top().clone());
    Outcome::all([
        Outcome::expect_equal("a invertible", "BOT", a_inv, Some(f.bottom().clone())),
        Outcome::expect_equal("b invertible", "TOP", b_inv, Some(f.top().clone())),
    ])
}

/// Orbit to `steps`, or the trial result to report if it is unusable.
fn full_orbit(poset: &ExtendedPoset, f: &Labeling, steps: usize) -> Result<Orbit, TrialResult> {
    match bounded_orbit(poset, f, steps) {
        Err(Blowup) => Err(TrialResult::Blowup),
        Ok(o) if o.undefined_from().is_some() => Err(TrialResult::Undefined),
        Ok(o) => Ok(o),
    }
}

/// `(R^period f)(x) = a·inv(b)·f(x')·inv(a)·b` at every `x ∈ P̂`, with `x'`
/// given by `partner` (the identity for plain twisted periodicity).
fn twisted_period_trial(
    poset: &ExtendedPoset,
    f: &Labeling,
    period: usize,
    partner: impl Fn(usize) -> usize,
) -> TrialResult {
    let orbit = match full_orbit(poset, f, period) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let last = orbit.get(period).expect("defined");
    let mut outcomes = vec![ends_invertible(f)];
    for x in 0..poset.hat_len() {
        outcomes.push(Outcome::expect_equal(
            "(R^N f)(x) = a·inv(b)·f(x')·inv(a)·b",
            format!("{} with N={period}", poset.name(x)),
            Some(last.get(x).clone()),
            twisted(f, f.get(partner(x))),
        ));
    }
    TrialResult::Checked(Outcome::all(outcomes))
}

fn require_rectangle(check: &str, poset: &ExtendedPoset) -> Option<Verdict> {
    poset.rectangle_shape().is_none().then(|| {
        let mut v = Verdict::new(check, CheckKind::Theorem);
        v.notes.push("needs a rect:PxQ poset".into());
        v
    })
}

/// `(R^{p+q} f)(x) = a·inv(b)·f(x)·inv(a)·b` on the `p×q` rectangle.
pub fn verify_periodicity(cfg: &TrialConfig) -> Result<Verdict, VerifyError> {
    let poset = cfg.validate()?;
    if let Some(na) = require_rectangle("periodicity", &poset) {
        return Ok(na);
    }
    let (p, q) = poset.rectangle_shape().expect("rectangle");
    run_trials("periodicity", CheckKind::Theorem, cfg, &poset, |f| f, |f| twisted_period_trial(&poset, f, p + q, |x| x))
}

/// `(R^ℓ f)(i,j) = a·inv((R^{ℓ−i−j+1} f)(p+1−i, q+1−j))·b` for every cell
/// and every `ℓ ≤ steps` with `ℓ−i−j+1 ≥ 0`.
pub fn verify_reciprocity(cfg: &TrialConfig) -> Result<Verdict, VerifyError> {
    let poset = cfg.validate()?;
    if let Some(na) = require_rectangle("reciprocity", &poset) {
        return Ok(na);
    }
    let (p, q) = poset.rectangle_shape().expect("rectangle");
    let steps = cfg.steps_or(p + q);
    run_trials(
        "reciprocity",
        CheckKind::Theorem,
        cfg,
        &poset,
        |f| f,
        |f| {
            let orbit = match full_orbit(&poset, f, steps) {
                Ok(o) => o,
                Err(r) => return r,
            };
            let mut outcomes = Vec::new();
            for x in 0..poset.len() {
                let c = poset.coord(x).expect("cell");
                let mirror = poset.base().at(antipode(p, q, c).expect("inside")).expect("cell");
                for ell in 0..=steps {
                    let Some(inner) = (ell + 1).checked_sub(c.i + c.j) else { continue };
                    outcomes.push(Outcome::expect_equal(
                        "(R^ℓ f)(i,j) = a·inv((R^(ℓ−i−j+1) f)(antipode))·b",
                        format!("{c} at ℓ={ell}"),
                        orbit.label(x, ell).cloned(),
                        sandwich(f, &orbit.label(mirror, inner).cloned()),
                    ));
                }
            }
            TrialResult::Checked(Outcome::all(outcomes))
        },
    )
}

/// Twisted periodicity recomputed through two applications of reciprocity:
/// `R^{p+q}f(x)`, `a·inv(R^{p+q−i−j+1}f(x~))·b` and `a·inv(a·inv(f(x))·b)·b`
/// all equal `a·inv(b)·f(x)·inv(a)·b`.
pub fn verify_reciprocity_implies_periodicity(cfg: &TrialConfig) -> Result<Verdict, VerifyError> {
    let poset = cfg.validate()?;
    let check = "reciprocity_implies_periodicity";
    if let Some(na) = require_rectangle(check, &poset) {
        return Ok(na);
    }
    let (p, q) = poset.rectangle_shape().expect("rectangle");
    run_trials(
        check,
        CheckKind::Theorem,
        cfg,
        &poset,
        |f| f,
        |f| {
            let orbit = match full_orbit(&poset, f, p + q) {
                Ok(o) => o,
                Err(r) => return r,
            };
            let mut outcomes = Vec::new();
            for x in 0..poset.len() {
                let c = poset.coord(x).expect("cell");
                let mirror = poset.base().at(antipode(p, q, c).expect("inside")).expect("cell");
                let direct = orbit.label(x, p + q).cloned();
                let expected = twisted(f, f.get(x));
                let outer = sandwich(f, &orbit.label(mirror, p + q + 1 - c.i - c.j).cloned());
                let composed = sandwich(f, &sandwich(f, &Some(f.get(x).clone())));
                let at = || c.to_string();
                outcomes.push(Outcome::expect_equal(
                    "direct = a·inv(b)·f(x)·inv(a)·b",
                    at(),
                    direct.clone(),
                    expected.clone(),
                ));
                outcomes.push(Outcome::expect_equal("direct = a·inv(R^(p+q−i−j+1)f(x~))·b", at(), direct, outer));
                outcomes.push(Outcome::expect_equal(
                    "a·inv(a·inv(f(x))·b)·b = a·inv(b)·f(x)·inv(a)·b",
                    at(),
                    composed,
                    expected,
                ));
            }
            TrialResult::Checked(Outcome::all(outcomes))
        },
    )
}

/// `b · Σ_{u⋗BOT} inv((Rf)(u)) · a = Σ_{u⋖TOP} f(u)` on any finite poset.
pub fn verify_bottom_top(cfg: &TrialConfig) -> Result<Verdict, VerifyError> {
    let poset = cfg.validate()?;
    run_trials("bottom_top", CheckKind::Theorem, cfg, &poset, |f| f, |f| bottom_top_trial(&poset, f))
}

pub fn bottom_top_trial(poset: &ExtendedPoset, f: &Labeling) -> TrialResult {
    let Some(rf) = rowmotion(poset, f) else { return TrialResult::Undefined };
    let ring = f.ring();
    let inverses: Option<Vec<RingElement>> =
        poset.upper_covers(poset.bot()).iter().map(|&u| rf.get(u).try_inverse()).collect();
    let Some(inverses) = inverses else {
        return TrialResult::Checked(Outcome::not_applicable("some (Rf)(u) with u ⋗ BOT is not invertible"));
    };
    let left = &(f.top() * &ring.sum(&inverses)) * f.bottom();
    let right = ring.sum(poset.lower_covers(poset.top()).iter().map(|&u| f.get(u)));
    TrialResult::Checked(Outcome::expect_equal("b·Σ inv(Rf(u))·a = Σ f(u)", "BOT, TOP", Some(left), Some(right)))
}

/// `Σ_{u⋖v} g(u)·inv(g(v))` over all cover pairs of `P̂`.
pub fn cover_ratio_sum(poset: &ExtendedPoset, g: &Labeling) -> PartialValue {
    let mut total = g.ring().zero();
    for v in 0..poset.hat_len() {
        let inv_v = g.get(v).try_inverse();
        for &u in poset.lower_covers(v) {
            total = &total + &(g.get(u) * inv_v.as_ref()?);
        }
    }
    Some(total)
}

/// With `f(BOT) = f(TOP) = 1`, the cover-ratio sum is the same for every
/// defined iterate of the orbit.
pub fn verify_invariant_sum(cfg: &TrialConfig) -> Result<Verdict, VerifyError> {
    let poset = cfg.validate()?;
    let steps = cfg.steps_or(default_steps(&poset));
    let unit = |f: Labeling| {
        let one = f.ring().one();
        f.with_label(poset.bot(), one.clone()).with_label(poset.top(), one)
    };
    run_trials("invariant_sum", CheckKind::Theorem, cfg, &poset, unit, |f| invariant_trial(&poset, f, steps))
}

pub fn invariant_trial(poset: &ExtendedPoset, f: &Labeling, steps: usize) -> TrialResult {
    let orbit = match bounded_orbit(poset, f, steps) {
        Err(Blowup) => return TrialResult::Blowup,
        Ok(o) => o,
    };
    if !orbit.is_defined(1) {
        return TrialResult::Undefined;
    }
    let Some(start) = cover_ratio_sum(poset, f) else {
        return TrialResult::Checked(Outcome::not_applicable("a label of f is not invertible"));
    };
    let outcomes = orbit.entries().skip(1).filter_map(|e| e.state.map(|g| (e.index, g))).map(|(ell, g)| {
        match cover_ratio_sum(poset, g) {
            None => Outcome::not_applicable("a label is not invertible"),
            sum => {
                Outcome::expect_equal("Σ g(u)·inv(g(v)) is R-invariant", format!("ℓ={ell}"), sum, Some(start.clone()))
            }
        }
    });
    TrialResult::Checked(Outcome::all(outcomes))
}

/// Families with an open periodicity conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// `Δ(p)`, period `p`, with the transpose `(i,j) ↦ (j,i)`.
    Delta(usize),
    /// `∇(p)`, period `p`, with the transpose.
    Nabla(usize),
    /// `Tria(p)`, period `2p`.
    Tria(usize),
    /// Trapezoid with parameters `(p, s)`, period `p`.
    Trapezoid(usize, usize),
}

impl Conjecture {
    pub fn for_family(family: &Family) -> Option<Conjecture> {
        match *family {
            Family::Delta(p) => Some(Conjecture::Delta(p)),
            Family::Nabla(p) => Some(Conjecture::Nabla(p)),
            Family::Tria(p) => Some(Conjecture::Tria(p)),
            Family::Trapezoid { p, s } => Some(Conjecture::Trapezoid(p, s)),
            _ => None,
        }
    }

    pub fn period(self) -> usize {
        match self {
            Conjecture::Delta(p) | Conjecture::Nabla(p) | Conjecture::Trapezoid(p, _) => p,
            Conjecture::Tria(p) => 2 * p,
        }
    }

    pub fn transposes(self) -> bool {
        matches!(self, Conjecture::Delta(_) | Conjecture::Nabla(_))
    }

    fn name(self) -> &'static str {
        match self {
            Conjecture::Delta(_) => "conjecture_delta",
            Conjecture::Nabla(_) => "conjecture_nabla",
            Conjecture::Tria(_) => "conjecture_tria",
            Conjecture::Trapezoid(..) => "conjecture_trapezoid",
        }
    }
}

/// Empirical test of the periodicity conjecture for the family of `cfg.poset`.
pub fn probe_conjecture(cfg: &TrialConfig) -> Result<Verdict, VerifyError> {
    let poset = cfg.validate()?;
    let conjecture = Conjecture::for_family(poset.base().family())
        .ok_or_else(|| VerifyError::Config(format!("{} has no periodicity conjecture", cfg.poset)))?;
    let transpose = |x: usize| match poset.coord(x) {
        Some(c) if conjecture.transposes() => poset.base().at(RectCoord::new(c.j, c.i)).expect("triangle is symmetric"),
        _ => x,
    };
    let period = conjecture.period();
    let mut verdict = run_trials(
        conjecture.name(),
        CheckKind::Conjecture,
        cfg,
        &poset,
        |f| f,
        |f| twisted_period_trial(&poset, f, period, transpose),
    )?;
    verdict.notes.push(format!("period {period}{}", if conjecture.transposes() { ", transposed" } else { "" }));
    Ok(verdict)
}

/// Over the commutative max-plus semiring the twist cancels: `R^{p+q} f = f`.
pub fn tropical_periodicity(cfg: &TrialConfig) -> Result<Verdict, VerifyError> {
    if cfg.ring != RingDescriptor::Tropical {
        return Err(VerifyError::Config(format!("tropical check needs ring trop, got {}", cfg.ring)));
    }
    let poset = cfg.validate()?;
    if let Some(na) = require_rectangle("tropical_periodicity", &poset) {
        return Ok(na);
    }
    let (p, q) = poset.rectangle_shape().expect("rectangle");
    run_trials(
        "tropical_periodicity",
        CheckKind::Theorem,
        cfg,
        &poset,
        |f| f,
        |f| {
            let orbit = match full_orbit(&poset, f, p + q) {
                Ok(o) => o,
                Err(r) => return r,
            };
            let last = orbit.get(p + q).expect("defined");
            TrialResult::Checked(Outcome::all((0..poset.hat_len()).map(|x| {
                Outcome::expect_equal(
                    "(R^(p+q) f)(x) = f(x)",
                    poset.name(x),
                    Some(last.get(x).clone()),
                    Some(f.get(x).clone()),
                )
            })))
        },
    )
}
