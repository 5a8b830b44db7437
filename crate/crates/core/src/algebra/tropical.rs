use std::fmt;

use num_rational::BigRational;

/// Max-plus value: `None` is −∞, the additive identity.
///
/// The derived `Ord` puts −∞ below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tropical(Option<BigRational>);

impl Tropical {
    pub const NEG_INF: Tropical = Tropical(None);

    pub fn finite(value: BigRational) -> Self {
        Tropical(Some(value))
    }

    pub fn value(&self) -> Option<&BigRational> {
        self.0.as_ref()
    }

    /// Tropical addition: max.
    pub fn add(&self, other: &Tropical) -> Tropical {
        std::cmp::max(self, other).clone()
    }

    /// Tropical multiplication: ordinary addition, with −∞ absorbing.
    pub fn mul(&self, other: &Tropical) -> Tropical {
        match (&self.0, &other.0) {
            (Some(x), Some(y)) => Tropical(Some(x + y)),
            _ => Tropical::NEG_INF,
        }
    }

    /// Negation; −∞ has no inverse.
    pub fn inverse(&self) -> Option<Tropical> {
        self.0.as_ref().map(|x| Tropical(Some(-x)))
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(x) => write!(f, "{x}"),
            None => write!(f, "-inf"),
        }
    }
}
