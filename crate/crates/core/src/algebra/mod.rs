//! Exact ring and semiring arithmetic with fallible inversion.

mod element;
mod laws;
mod matrix;
mod random;
mod tropical;

use serde_json::Value;
use thiserror::Error;

pub use element::{parse_rational, rational_to_string, RingDescriptor, RingElement};
pub use laws::{check_inverse_laws, check_sum_inverse_identity};
pub use matrix::RatMatrix;
pub use random::{random_invertible, random_invertible_with, seeded_rng, MAX_DRAWS};
pub use tropical::Tropical;

/// A ring element or undefined (`None`). Undefined absorbs every operation.
pub type PartialValue = Option<RingElement>;

pub fn partial_add(x: &PartialValue, y: &PartialValue) -> PartialValue {
    Some(x.as_ref()? + y.as_ref()?)
}

pub fn partial_mul(x: &PartialValue, y: &PartialValue) -> PartialValue {
    Some(x.as_ref()? * y.as_ref()?)
}

pub fn partial_inverse(x: &PartialValue) -> PartialValue {
    x.as_ref()?.try_inverse()
}

/// JSON form with `"undefined"` for the undefined value.
pub fn partial_to_json(x: &PartialValue) -> Value {
    x.as_ref().map_or_else(|| Value::String("undefined".into()), RingElement::to_json)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {left} vs {right}")]
    Mismatch { left: RingDescriptor, right: RingDescriptor },
    #[error("invalid ring `{0}`: expected q, mat:N (N >= 1) or trop")]
    BadSpec(String),
    #[error("{path}: expected {expected}, found {found}")]
    Malformed { path: String, expected: String, found: String },
    #[error("no invertible element of {ring} after {draws} draws")]
    DrawLimit { ring: RingDescriptor, draws: usize },
}

impl AlgebraError {
    pub(crate) fn malformed(path: &str, expected: &str, found: &Value) -> Self {
        AlgebraError::Malformed { path: path.into(), expected: expected.into(), found: found.to_string() }
    }
}
