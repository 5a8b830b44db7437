//! Labelings, toggles, birational rowmotion and orbits.
//!
//! Rowmotion is `R = T_{v1} ∘ ⋯ ∘ T_{vm}` for the canonical linear extension
//! `(v1, …, vm)`: the top-most toggle `T_{vm}` is applied first.

mod checks;
mod labeling;

use serde_json::Value;
use thiserror::Error;

pub use checks::{
    check_definedness_ladder, check_implicit_recurrence, check_normalize_bottom, compare_labelings, normalize_bottom,
    toggle_commutes,
};
pub use labeling::Labeling;

use crate::algebra::{AlgebraError, RingDescriptor, RingElement};
use crate::poset::{is_linear_extension, ExtendedPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RowmotionError {
    #[error("cannot toggle the sentinel {0}")]
    Sentinel(String),
    #[error("not a linear extension of the poset")]
    NotAnExtension,
    #[error("labeling has {found} labels, the extended poset has {expected} elements")]
    WrongSize { expected: usize, found: usize },
    #[error("label at {vertex} is in {found}, expected {expected}")]
    RingMismatch { vertex: String, expected: RingDescriptor, found: RingDescriptor },
    #[error("labeling: {0}")]
    Schema(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// New label at `v`: `(Σ_{u⋖v} f(u)) · inv(f(v)) · inv(Σ_{u⋗v} inv(f(u)))`.
fn toggled_label(poset: &ExtendedPoset, ring: RingDescriptor, values: &[RingElement], v: usize) -> Option<RingElement> {
    let below = ring.sum(poset.lower_covers(v).iter().map(|&u| &values[u]));
    let inv_here = values[v].try_inverse()?;
    let inv_above = match poset.upper_covers(v) {
        [u] if values[*u].is_invertible() => values[*u].clone(),
        [_] => return None,
        covers => {
            let mut above = ring.zero();
            for &u in covers {
                above = &above + &values[u].try_inverse()?;
            }
            above.try_inverse()?
        }
    };
    Some(&(&below * &inv_here) * &inv_above)
}

/// The `v`-toggle. `Ok(None)` means the result is undefined.
pub fn toggle(poset: &ExtendedPoset, f: &Labeling, v: usize) -> Result<Option<Labeling>, RowmotionError> {
    if v >= poset.hat_len() {
        return Err(RowmotionError::Sentinel(format!("#{v}")));
    }
    if poset.is_sentinel(v) {
        return Err(RowmotionError::Sentinel(poset.name(v).to_string()));
    }
    Ok(toggled_label(poset, f.ring(), f.values(), v).map(|x| f.with_label(v, x)))
}

fn apply_toggles(poset: &ExtendedPoset, f: &Labeling, order: impl Iterator<Item = usize>) -> Option<Labeling> {
    let ring = f.ring();
    let mut values = f.clone().into_values();
    for v in order {
        values[v] = toggled_label(poset, ring, &values, v)?;
    }
    Some(Labeling::from_values_unchecked(ring, values))
}

/// Birational rowmotion along the canonical linear extension.
pub fn rowmotion(poset: &ExtendedPoset, f: &Labeling) -> Option<Labeling> {
    apply_toggles(poset, f, poset.extension().iter().rev().copied())
}

/// Rowmotion along a caller-supplied linear extension.
pub fn rowmotion_via_extension(
    poset: &ExtendedPoset,
    f: &Labeling,
    extension: &[usize],
) -> Result<Option<Labeling>, RowmotionError> {
    if !is_linear_extension(poset.base(), extension) {
        return Err(RowmotionError::NotAnExtension);
    }
    Ok(apply_toggles(poset, f, extension.iter().rev().copied()))
}

/// `f, Rf, …, R^k f`, where everything after the first undefined iterate is undefined.
#[derive(Clone, Debug, PartialEq)]
pub struct Orbit {
    states: Vec<Labeling>,
    steps: usize,
}

/// One iterate of an [`Orbit`]; `state` is `None` when undefined.
#[derive(Clone, Copy, Debug)]
pub struct OrbitEntry<'a> {
    pub index: usize,
    pub state: Option<&'a Labeling>,
}

impl Orbit {
    /// Orbit whose defined iterates are `states` (starting at `f`) out of `steps + 1`.
    ///
    /// # Panics
    /// If `states` is empty or longer than `steps + 1`.
    pub fn from_prefix(states: Vec<Labeling>, steps: usize) -> Self {
        assert!(!states.is_empty() && states.len() <= steps + 1, "orbit prefix length");
        Orbit { states, steps }
    }

    pub fn start(&self) -> &Labeling {
        &self.states[0]
    }

    /// Number of rowmotion steps requested.
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// `R^ℓ f`, or `None` when undefined or beyond the computed range.
    pub fn get(&self, ell: usize) -> Option<&Labeling> {
        self.states.get(ell)
    }

    /// `v_ℓ = (R^ℓ f)(v)`.
    pub fn label(&self, v: usize, ell: usize) -> Option<&RingElement> {
        self.get(ell).map(|f| f.get(v))
    }

    pub fn is_defined(&self, ell: usize) -> bool {
        ell < self.states.len()
    }

    /// First undefined index within the requested range.
    pub fn undefined_from(&self) -> Option<usize> {
        (self.states.len() <= self.steps).then_some(self.states.len())
    }

    pub fn entries(&self) -> impl Iterator<Item = OrbitEntry<'_>> {
        (0..=self.steps).map(move |index| OrbitEntry { index, state: self.get(index) })
    }

    /// JSON array of labelings, with `"undefined"` for undefined iterates.
    pub fn to_json(&self, poset: &ExtendedPoset) -> Value {
        Value::Array(
            self.entries()
                .map(|e| e.state.map_or_else(|| Value::String("undefined".into()), |f| f.to_json(poset)))
                .collect(),
        )
    }
}

/// `f, Rf, …, R^k f`.
pub fn iterate(poset: &ExtendedPoset, f: &Labeling, k: usize) -> Orbit {
    let mut states = vec![f.clone()];
    while states.len() <= k {
        match rowmotion(poset, states.last().expect("nonempty")) {
            Some(next) => states.push(next),
            None => break,
        }
    }
    Orbit { states, steps: k }
}
