//! Outcome of a single identity check, shared by every checker.

use serde_json::{json, Value};

use crate::algebra::{partial_to_json, PartialValue};

/// Both sides of an identity that failed, with the place it failed at.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub identity: String,
    pub location: String,
    pub left: PartialValue,
    pub right: PartialValue,
}

impl Mismatch {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "location": self.location,
            "left": partial_to_json(&self.left),
            "right": partial_to_json(&self.right),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    /// Hypotheses not met; carries the reason.
    NotApplicable(String),
    Fail(Box<Mismatch>),
}

impl Outcome {
    /// Pass iff both sides are defined and equal. An undefined side is a failure.
    pub fn expect_equal(
        identity: &str,
        location: impl Into<String>,
        left: PartialValue,
        right: PartialValue,
    ) -> Outcome {
        if left.is_some() && left == right {
            Outcome::Pass
        } else {
            Outcome::fail(identity, location, left, right)
        }
    }

    /// Pass iff both sides agree, treating undefined = undefined as agreement.
    pub fn expect_same(
        identity: &str,
        location: impl Into<String>,
        left: PartialValue,
        right: PartialValue,
    ) -> Outcome {
        if left == right {
            Outcome::Pass
        } else {
            Outcome::fail(identity, location, left, right)
        }
    }

    pub fn fail(identity: &str, location: impl Into<String>, left: PartialValue, right: PartialValue) -> Outcome {
        Outcome::Fail(Box::new(Mismatch { identity: identity.to_string(), location: location.into(), left, right }))
    }

    pub fn not_applicable(reason: impl Into<String>) -> Outcome {
        Outcome::NotApplicable(reason.into())
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    /// Failure dominates, then pass, then not-applicable.
    pub fn merge(self, other: Outcome) -> Outcome {
        match (self, other) {
            (f @ Outcome::Fail(_), _) | (_, f @ Outcome::Fail(_)) => f,
            (Outcome::Pass, _) | (_, Outcome::Pass) => Outcome::Pass,
            (na, _) => na,
        }
    }

    /// Merges a sequence, stopping at the first failure.
    pub fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut acc: Option<Outcome> = None;
        for o in outcomes {
            if o.is_fail() {
                return o;
            }
            acc = Some(match acc {
                None => o,
                Some(a) => a.merge(o),
            });
        }
        acc.unwrap_or_else(|| Outcome::not_applicable("nothing to check"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingElement;

    #[test]
    fn merge_order() {
        let na = Outcome::not_applicable("x");
        assert_eq!(na.clone().merge(Outcome::Pass), Outcome::Pass);
        let f = Outcome::fail("id", "here", None, None);
        assert!(Outcome::Pass.merge(f.clone()).is_fail());
        assert!(Outcome::all([Outcome::Pass, f, na]).is_fail());
        assert!(matches!(Outcome::all([]), Outcome::NotApplicable(_)));
    }

    #[test]
    fn undefined_sides() {
        let one = Some(RingElement::from_i64(1));
        assert!(Outcome::expect_equal("id", "", None, None).is_fail());
        assert!(Outcome::expect_same("id", "", None, None).is_pass());
        assert!(Outcome::expect_same("id", "", one.clone(), None).is_fail());
        assert!(Outcome::expect_equal("id", "", one.clone(), one).is_pass());
    }
}
