use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{bounded_orbit, Blowup, CheckKind, TrialResult, Verdict, Witness};
use crate::algebra::{rational_to_string, RatMatrix, RingDescriptor, RingElement};
use crate::check::Outcome;
use crate::poset::{claw, ExtendedPoset};
use crate::rowmotion::Labeling;

/// Number of rowmotion steps examined.
pub const CLAW_STEPS: usize = 60;

fn unipotent(t: &BigRational) -> RingElement {
    let (zero, one) = (BigRational::zero(), BigRational::one());
    RingElement::Matrix(RatMatrix::new(2, vec![one.clone(), t.clone(), zero, one]))
}

/// The labeling with `I₂` on `BOT, TOP, p`, `diag(1,−1)` on `q2`, and the
/// unipotent matrices with corner `y` on `q1` and `z` on `q3`.
pub fn claw_labeling(poset: &ExtendedPoset, y: &BigRational, z: &BigRational) -> Labeling {
    let id = |name: &str| poset.id(name).expect("claw element");
    let (q1, q2, q3) = (id("q1"), id("q2"), id("q3"));
    Labeling::from_fn(poset, RingDescriptor::Matrix(2), |v| {
        if v == q1 {
            unipotent(y)
        } else if v == q3 {
            unipotent(z)
        } else if v == q2 {
            RingElement::matrix(2, &[1, 0, 0, -1])
        } else {
            RingElement::matrix(2, &[1, 0, 0, 1])
        }
    })
    .expect("2x2 labels")
}

/// Recovers `(y, z)` when `g` has the shape of [`claw_labeling`].
pub fn claw_parameters(poset: &ExtendedPoset, g: &Labeling) -> Option<(BigRational, BigRational)> {
    let corner = |name: &str| match g.get(poset.id(name)?) {
        RingElement::Matrix(m) if m.dim() == 2 => Some(m.get(0, 1).clone()),
        _ => None,
    };
    let (y, z) = (corner("q1")?, corner("q3")?);
    (*g == claw_labeling(poset, &y, &z)).then_some((y, z))
}

/// `(y, z) ↦ ((5y+4z)/9, (4y+5z)/9)`.
pub fn contract(y: &BigRational, z: &BigRational) -> (BigRational, BigRational) {
    let c = |a: i64, b: i64| {
        (y * BigRational::from_integer(a.into()) + z * BigRational::from_integer(b.into()))
            / BigRational::from_integer(9.into())
    };
    (c(5, 4), c(4, 5))
}

fn pair(y: &BigRational, z: &BigRational) -> String {
    format!("({}, {})", rational_to_string(y), rational_to_string(z))
}

/// The 2×2 matrix labeling of the claw whose orbit never returns: every
/// `R^m f` (`m = 1..60`) is defined and differs from `f`, and
/// `R^{6i} f` is the member of the family at `Φ^i(0, 1)`.
pub fn claw_counterexample() -> Verdict {
    let poset = ExtendedPoset::new(claw());
    let (y0, z0) = (BigRational::zero(), BigRational::one());
    let f = claw_labeling(&poset, &y0, &z0);
    let mut verdict = Verdict::new("claw_counterexample", CheckKind::Counterexample);
    let result = match bounded_orbit(&poset, &f, CLAW_STEPS) {
        Err(Blowup) => TrialResult::Blowup,
        Ok(orbit) => {
            let mut outcomes = Vec::new();
            for m in 1..=CLAW_STEPS {
                let Some(g) = orbit.get(m) else {
                    outcomes.push(Outcome::fail("R^m f is defined", format!("m={m}"), None, Some(f.get(0).clone())));
                    break;
                };
                if *g == f {
                    outcomes.push(Outcome::fail("R^m f differs from f", format!("m={m}"), None, None));
                }
            }
            let (mut y, mut z) = (y0, z0);
            for i in 1..=CLAW_STEPS / 6 {
                (y, z) = contract(&y, &z);
                let Some(g) = orbit.get(6 * i) else { break };
                let expected = claw_labeling(&poset, &y, &z);
                if let Some((gy, gz)) = claw_parameters(&poset, g) {
                    if i == 1 {
                        verdict.notes.push(format!("R^6 f carries (y,z) = {}", pair(&gy, &gz)));
                    }
                }
                let location = format!("i={i}, expected (y,z) = {}", pair(&y, &z));
                outcomes.extend((0..poset.hat_len()).map(|v| {
                    Outcome::expect_equal(
                        "R^(6i) f = f at Φ^i(0,1)",
                        format!("{location}, {}", poset.name(v)),
                        Some(g.get(v).clone()),
                        Some(expected.get(v).clone()),
                    )
                }));
            }
            TrialResult::Checked(Outcome::all(outcomes))
        }
    };
    verdict.record(result, |mismatch| Witness {
        poset: "claw".into(),
        ring: "mat:2".into(),
        seed: None,
        labeling: f.to_json(&poset),
        mismatch,
    });
    verdict
}
