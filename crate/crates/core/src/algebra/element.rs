use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{AlgebraError, RatMatrix, Tropical};

/// Which ring a labeling lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// The field of rationals.
    Rational,
    /// `dim × dim` rational matrices.
    Matrix(usize),
    /// The commutative max-plus semiring over the rationals.
    Tropical,
}

impl RingDescriptor {
    pub fn zero(self) -> RingElement {
        match self {
            RingDescriptor::Rational => RingElement::Rational(BigRational::zero()),
            RingDescriptor::Matrix(n) => RingElement::Matrix(RatMatrix::zero(n)),
            RingDescriptor::Tropical => RingElement::Tropical(Tropical::NEG_INF),
        }
    }

    pub fn one(self) -> RingElement {
        match self {
            RingDescriptor::Rational => RingElement::Rational(BigRational::one()),
            RingDescriptor::Matrix(n) => RingElement::Matrix(RatMatrix::identity(n)),
            RingDescriptor::Tropical => RingElement::Tropical(Tropical::finite(BigRational::zero())),
        }
    }

    pub fn is_commutative(self) -> bool {
        !matches!(self, RingDescriptor::Matrix(n) if n > 1)
    }

    /// Sum of the given elements; the empty sum is [`zero`](Self::zero).
    pub fn sum<'a>(self, items: impl IntoIterator<Item = &'a RingElement>) -> RingElement {
        let mut items = items.into_iter();
        match items.next() {
            None => self.zero(),
            Some(first) => items.fold(first.clone(), |acc, x| &acc + x),
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            RingDescriptor::Rational => json!({"kind": "exact_rational"}),
            RingDescriptor::Matrix(n) => json!({"kind": "rational_matrix", "dim": n}),
            RingDescriptor::Tropical => json!({"kind": "tropical_max_plus"}),
        }
    }

    pub fn from_json(value: &Value) -> Result<Self, AlgebraError> {
        let bad = |expected: &str| AlgebraError::malformed("ring", expected, value);
        let kind = value.get("kind").and_then(Value::as_str).ok_or_else(|| bad("object with a \"kind\""))?;
        match kind {
            "exact_rational" => Ok(RingDescriptor::Rational),
            "tropical_max_plus" => Ok(RingDescriptor::Tropical),
            "rational_matrix" => match value.get("dim").and_then(Value::as_u64) {
                Some(n) if n >= 1 => Ok(RingDescriptor::Matrix(n as usize)),
                _ => Err(AlgebraError::malformed("ring.dim", "positive integer", value)),
            },
            _ => Err(bad("kind exact_rational, rational_matrix or tropical_max_plus")),
        }
    }
}

/// Parses the command-line forms `q`, `mat:N` and `trop`.
impl FromStr for RingDescriptor {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "q" => Ok(RingDescriptor::Rational),
            "trop" => Ok(RingDescriptor::Tropical),
            _ => match s.strip_prefix("mat:").map(str::parse::<usize>) {
                Some(Ok(n)) if n >= 1 => Ok(RingDescriptor::Matrix(n)),
                _ => Err(AlgebraError::BadSpec(s.to_string())),
            },
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rational => write!(f, "q"),
            RingDescriptor::Matrix(n) => write!(f, "mat:{n}"),
            RingDescriptor::Tropical => write!(f, "trop"),
        }
    }
}

/// An element of one of the rings in [`RingDescriptor`].
///
/// Values are always canonical, so `==` is exact mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Rational(BigRational),
    Matrix(RatMatrix),
    Tropical(Tropical),
}

impl RingElement {
    pub fn from_i64(n: i64) -> Self {
        RingElement::Rational(BigRational::from_integer(n.into()))
    }

    pub fn rational(numer: i64, denom: i64) -> Self {
        RingElement::Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn matrix(dim: usize, entries: &[i64]) -> Self {
        RingElement::Matrix(RatMatrix::from_i64(dim, entries))
    }

    pub fn tropical(n: i64) -> Self {
        RingElement::Tropical(Tropical::finite(BigRational::from_integer(n.into())))
    }

    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            RingElement::Rational(_) => RingDescriptor::Rational,
            RingElement::Matrix(m) => RingDescriptor::Matrix(m.dim()),
            RingElement::Tropical(_) => RingDescriptor::Tropical,
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        Ok(match (self, other) {
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x + y),
            (RingElement::Matrix(x), RingElement::Matrix(y)) if x.dim() == y.dim() => RingElement::Matrix(x.add(y)),
            (RingElement::Tropical(x), RingElement::Tropical(y)) => RingElement::Tropical(x.add(y)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        Ok(match (self, other) {
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x * y),
            (RingElement::Matrix(x), RingElement::Matrix(y)) if x.dim() == y.dim() => RingElement::Matrix(x.mul(y)),
            (RingElement::Tropical(x), RingElement::Tropical(y)) => RingElement::Tropical(x.mul(y)),
            _ => return Err(self.mismatch(other)),
        })
    }

    /// Two-sided inverse, `None` (undefined) when there is none.
    pub fn try_inverse(&self) -> Option<RingElement> {
        match self {
            RingElement::Rational(x) if x.is_zero() => None,
            RingElement::Rational(x) => Some(RingElement::Rational(x.recip())),
            RingElement::Matrix(m) => m.inverse().map(RingElement::Matrix),
            RingElement::Tropical(t) => t.inverse().map(RingElement::Tropical),
        }
    }

    /// Whether [`try_inverse`](Self::try_inverse) would succeed, without computing it.
    pub fn is_invertible(&self) -> bool {
        match self {
            RingElement::Rational(x) => !x.is_zero(),
            RingElement::Matrix(m) => m.is_invertible(),
            RingElement::Tropical(t) => t.value().is_some(),
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == self.descriptor().zero()
    }

    pub fn is_one(&self) -> bool {
        *self == self.descriptor().one()
    }

    /// Largest bit length among all numerators and denominators.
    pub fn max_bits(&self) -> u64 {
        fn bits(q: &BigRational) -> u64 {
            q.numer().bits().max(q.denom().bits())
        }
        match self {
            RingElement::Rational(x) => bits(x),
            RingElement::Matrix(m) => m.max_bits(),
            RingElement::Tropical(t) => t.value().map_or(0, bits),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RingElement::Rational(x) => Value::String(rational_to_string(x)),
            RingElement::Matrix(m) => {
                Value::Array(m.entries().iter().map(|e| Value::String(rational_to_string(e))).collect())
            }
            RingElement::Tropical(t) => match t.value() {
                Some(x) => json!({"t": rational_to_string(x)}),
                None => json!({"t": "-inf"}),
            },
        }
    }

    /// Reads an element of `ring`; `path` names the JSON location in errors.
    pub fn from_json(ring: RingDescriptor, value: &Value, path: &str) -> Result<Self, AlgebraError> {
        match ring {
            RingDescriptor::Rational => Ok(RingElement::Rational(parse_rational_value(value, path)?)),
            RingDescriptor::Matrix(n) => {
                let items = value.as_array().filter(|a| a.len() == n * n).ok_or_else(|| {
                    AlgebraError::malformed(path, &format!("array of {} rational strings", n * n), value)
                })?;
                let entries = items
                    .iter()
                    .enumerate()
                    .map(|(k, v)| parse_rational_value(v, &format!("{path}[{k}]")))
                    .collect::<Result<_, _>>()?;
                Ok(RingElement::Matrix(RatMatrix::new(n, entries)))
            }
            RingDescriptor::Tropical => {
                let inner =
                    value.get("t").ok_or_else(|| AlgebraError::malformed(path, "object {\"t\": ...}", value))?;
                if inner.as_str() == Some("-inf") {
                    Ok(RingElement::Tropical(Tropical::NEG_INF))
                } else {
                    let x = parse_rational_value(inner, &format!("{path}.t"))?;
                    Ok(RingElement::Tropical(Tropical::finite(x)))
                }
            }
        }
    }

    fn mismatch(&self, other: &RingElement) -> AlgebraError {
        AlgebraError::Mismatch { left: self.descriptor(), right: other.descriptor() }
    }
}

/// # Panics
/// If the operands come from different rings; use [`RingElement::try_add`] to get an error instead.
impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// # Panics
/// If the operands come from different rings; use [`RingElement::try_mul`] to get an error instead.
impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Rational(x) => write!(f, "{x}"),
            RingElement::Matrix(m) => write!(f, "{m}"),
            RingElement::Tropical(t) => write!(f, "{t}"),
        }
    }
}

/// Always `p/q`, also for integers.
pub fn rational_to_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `p/q` and `p`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let err = || AlgebraError::Malformed {
        path: "rational".into(),
        expected: "rational p/q with q != 0".into(),
        found: format!("{s:?}"),
    };
    BigRational::from_str(s.trim()).map_err(|_| err())
}

fn parse_rational_value(value: &Value, path: &str) -> Result<BigRational, AlgebraError> {
    value
        .as_str()
        .and_then(|s| parse_rational(s).ok())
        .ok_or_else(|| AlgebraError::malformed(path, "rational string p/q with q != 0", value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let s = &RingElement::rational(1, 2) + &RingElement::rational(1, 3);
        assert_eq!(s, RingElement::rational(5, 6));
    }

    #[test]
    fn identity_sum() {
        let i = RingDescriptor::Matrix(2).one();
        assert_eq!(&i + &i, RingElement::matrix(2, &[2, 0, 0, 2]));
    }

    #[test]
    fn tropical_ops() {
        let (x, y) = (RingElement::tropical(3), RingElement::tropical(5));
        assert_eq!(&x + &y, RingElement::tropical(5));
        assert_eq!(&x * &y, RingElement::tropical(8));
        assert!(RingDescriptor::Tropical.zero().try_inverse().is_none());
    }

    #[test]
    fn inverses() {
        assert_eq!(RingElement::from_i64(0).try_inverse(), None);
        assert_eq!(RingElement::rational(2, 3).try_inverse(), Some(RingElement::rational(3, 2)));
        assert_eq!(RingElement::matrix(2, &[1, 1, 0, 1]).try_inverse(), Some(RingElement::matrix(2, &[1, -1, 0, 1])));
    }

    #[test]
    fn mismatch_is_an_error() {
        let q = RingElement::from_i64(1);
        let m = RingDescriptor::Matrix(2).one();
        let m3 = RingDescriptor::Matrix(3).one();
        assert!(matches!(q.try_add(&m), Err(AlgebraError::Mismatch { .. })));
        assert!(m.try_mul(&m3).is_err());
    }

    #[test]
    #[should_panic]
    fn operator_panics_on_mismatch() {
        let _ = &RingElement::from_i64(1) + &RingElement::tropical(1);
    }

    #[test]
    fn spec_strings() {
        assert_eq!("q".parse::<RingDescriptor>().unwrap(), RingDescriptor::Rational);
        assert_eq!("mat:3".parse::<RingDescriptor>().unwrap(), RingDescriptor::Matrix(3));
        assert_eq!("trop".parse::<RingDescriptor>().unwrap(), RingDescriptor::Tropical);
        for bad in ["mat:0", "mat:", "mat:x", "Q", ""] {
            assert!(bad.parse::<RingDescriptor>().is_err(), "{bad}");
        }
        for r in [RingDescriptor::Rational, RingDescriptor::Matrix(2), RingDescriptor::Tropical] {
            assert_eq!(r.to_string().parse::<RingDescriptor>().unwrap(), r);
            assert_eq!(RingDescriptor::from_json(&r.to_json()).unwrap(), r);
        }
    }

    #[test]
    fn json_forms() {
        assert_eq!(RingElement::from_i64(2).to_json(), json!("2/1"));
        assert_eq!(RingElement::matrix(2, &[1, 0, 0, -1]).to_json(), json!(["1/1", "0/1", "0/1", "-1/1"]));
        assert_eq!(RingDescriptor::Tropical.zero().to_json(), json!({"t": "-inf"}));
        assert_eq!(RingElement::tropical(3).to_json(), json!({"t": "3/1"}));
        let x = RingElement::from_json(RingDescriptor::Rational, &json!("4/-6"), "x").unwrap();
        assert_eq!(x, RingElement::rational(-2, 3));
    }

    #[test]
    fn zero_denominator_rejected() {
        let err = RingElement::from_json(RingDescriptor::Rational, &json!("1/0"), "labels.BOT").unwrap_err();
        assert!(err.to_string().contains("labels.BOT"), "{err}");
        assert!(parse_rational("p/0").is_err());
        let err = RingElement::from_json(RingDescriptor::Matrix(2), &json!(["1", "2", "3"]), "m").unwrap_err();
        assert!(err.to_string().contains("4 rational strings"));
    }
}
