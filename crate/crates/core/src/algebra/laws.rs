use super::RingElement;
use crate::check::Outcome;

/// `inv(inv x) = x` and `inv(x·y) = inv(y)·inv(x)` for invertible `x`, `y`.
pub fn check_inverse_laws(x: &RingElement, y: &RingElement) -> Outcome {
    let (Some(xi), Some(yi)) = (x.try_inverse(), y.try_inverse()) else {
        return Outcome::not_applicable("x or y is not invertible");
    };
    let involution = Outcome::expect_equal("inv(inv(x)) = x", "x", xi.try_inverse(), Some(x.clone()));
    let product = Outcome::expect_equal("inv(x·y) = inv(y)·inv(x)", "x·y", (x * y).try_inverse(), Some(&yi * &xi));
    Outcome::all([involution, product])
}

/// When `a+b` is invertible: `a·inv(a+b)·b = b·inv(a+b)·a`; if also `a`, `b`
/// are invertible, `inv(inv(a)+inv(b)) = a·inv(a+b)·b`.
pub fn check_sum_inverse_identity(a: &RingElement, b: &RingElement) -> Outcome {
    let Some(s) = (a + b).try_inverse() else {
        return Outcome::not_applicable("a+b is not invertible");
    };
    let left = &(a * &s) * b;
    let right = &(b * &s) * a;
    let symmetric = Outcome::expect_equal("a·inv(a+b)·b = b·inv(a+b)·a", "a,b", Some(left.clone()), Some(right));
    let harmonic = match (a.try_inverse(), b.try_inverse()) {
        (Some(ai), Some(bi)) => {
            Outcome::expect_equal("inv(inv(a)+inv(b)) = a·inv(a+b)·b", "a,b", (&ai + &bi).try_inverse(), Some(left))
        }
        _ => Outcome::not_applicable("a or b is not invertible"),
    };
    Outcome::all([symmetric, harmonic])
}
