use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlgebraError, RatMatrix, RingDescriptor, RingElement, Tropical};

/// Draws before [`random_invertible_with`] gives up.
pub const MAX_DRAWS: usize = 1000;

/// The generator behind every seeded draw: ChaCha8 (`rand_chacha`), keyed by
/// `seed_from_u64`. Integers come from `rand` 0.8's `gen_range`.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic invertible element with small integer data bounded by `bound`.
pub fn random_invertible(ring: RingDescriptor, seed: u64, bound: u32) -> Result<RingElement, AlgebraError> {
    random_invertible_with(&mut seeded_rng(seed), ring, bound)
}

/// Rejection-samples until the draw is invertible:
/// rationals `p/q` with `0 < |p| ≤ bound`, `1 ≤ q ≤ bound`; matrices with
/// integer entries in `[-bound, bound]`; finite tropical values `p/q`.
pub fn random_invertible_with<R: Rng + ?Sized>(
    rng: &mut R,
    ring: RingDescriptor,
    bound: u32,
) -> Result<RingElement, AlgebraError> {
    let b = i64::from(bound.max(1));
    for _ in 0..MAX_DRAWS {
        let candidate = match ring {
            RingDescriptor::Rational => {
                let p = rng.gen_range(-b..=b);
                let q = rng.gen_range(1..=b);
                RingElement::rational(p, q)
            }
            RingDescriptor::Matrix(n) => {
                let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-b..=b)).collect();
                RingElement::Matrix(RatMatrix::from_i64(n, &entries))
            }
            RingDescriptor::Tropical => {
                let p = rng.gen_range(-b..=b);
                let q = rng.gen_range(1..=b);
                RingElement::Tropical(Tropical::finite(BigRational::new(p.into(), q.into())))
            }
        };
        if candidate.try_inverse().is_some() {
            return Ok(candidate);
        }
    }
    Err(AlgebraError::DrawLimit { ring, draws: MAX_DRAWS })
}
