use super::{rowmotion, toggle, Labeling, Orbit, RowmotionError};
use crate::algebra::{PartialValue, RingElement};
use crate::check::Outcome;
use crate::poset::ExtendedPoset;

/// Labeling-level agreement, where undefined equals undefined. On a
/// mismatch the witness is the first vertex that differs.
pub fn compare_labelings(
    identity: &str,
    poset: &ExtendedPoset,
    left: Option<&Labeling>,
    right: Option<&Labeling>,
) -> Outcome {
    match (left, right) {
        (None, None) => Outcome::Pass,
        (Some(l), Some(r)) => match (0..poset.hat_len()).find(|&v| l.get(v) != r.get(v)) {
            None => Outcome::Pass,
            Some(v) => Outcome::fail(identity, poset.name(v), Some(l.get(v).clone()), Some(r.get(v).clone())),
        },
        (l, r) => {
            Outcome::fail(identity, "whole labeling", l.map(|f| f.bottom().clone()), r.map(|f| f.bottom().clone()))
        }
    }
}

/// `T_v ∘ T_w = T_w ∘ T_v` at `f` unless `v ⋖ w` or `w ⋖ v`.
pub fn toggle_commutes(poset: &ExtendedPoset, f: &Labeling, v: usize, w: usize) -> Result<Outcome, RowmotionError> {
    if poset.upper_covers(v).contains(&w) || poset.upper_covers(w).contains(&v) {
        return Ok(Outcome::not_applicable("the two elements form a cover pair"));
    }
    let vw = match toggle(poset, f, w)? {
        Some(g) => toggle(poset, &g, v)?,
        None => None,
    };
    let wv = match toggle(poset, f, v)? {
        Some(g) => toggle(poset, &g, w)?,
        None => None,
    };
    Ok(compare_labelings("T_v∘T_w = T_w∘T_v", poset, vw.as_ref(), wv.as_ref()))
}

/// `v_{ℓ+1} = (Σ_{u⋖v} u_ℓ) · inv(v_ℓ) · inv(Σ_{u⋗v} inv(u_{ℓ+1}))` for `v ∈ P`.
pub fn check_implicit_recurrence(poset: &ExtendedPoset, orbit: &Orbit, ell: usize, v: usize) -> Outcome {
    let (Some(now), Some(next)) = (orbit.get(ell), orbit.get(ell + 1)) else {
        return Outcome::not_applicable("R^{ℓ+1} f is undefined");
    };
    if poset.is_sentinel(v) {
        return Outcome::expect_equal(
            "R fixes sentinel labels",
            poset.name(v),
            Some(next.get(v).clone()),
            Some(now.get(v).clone()),
        );
    }
    let ring = now.ring();
    let rhs = (|| {
        let below = ring.sum(poset.lower_covers(v).iter().map(|&u| now.get(u)));
        let mut above = ring.zero();
        for &u in poset.upper_covers(v) {
            above = &above + &next.get(u).try_inverse()?;
        }
        Some(&(&below * &now.get(v).try_inverse()?) * &above.try_inverse()?)
    })();
    Outcome::expect_equal(
        "v_{ℓ+1} = (Σ u_ℓ)·inv(v_ℓ)·inv(Σ inv(u_{ℓ+1}))",
        format!("{} at ℓ={ell}", poset.name(v)),
        Some(next.get(v).clone()),
        rhs,
    )
}

/// `f` with the bottom label replaced by 1.
pub fn normalize_bottom(f: &Labeling) -> Labeling {
    let bot = f.values().len() - 2;
    f.with_label(bot, f.ring().one())
}

/// With `g = normalize_bottom(f)` and `Rf` defined: `Rg` is defined,
/// `Rf(v) = Rg(v)` for non-minimal `v` and `Rf(v) = a·Rg(v)` for minimal `v`.
pub fn check_normalize_bottom(poset: &ExtendedPoset, f: &Labeling) -> Outcome {
    let Some(rf) = rowmotion(poset, f) else {
        return Outcome::not_applicable("Rf is undefined");
    };
    let Some(rg) = rowmotion(poset, &normalize_bottom(f)) else {
        return Outcome::fail("Rg defined", "whole labeling", Some(f.bottom().clone()), None);
    };
    let a = f.bottom();
    Outcome::all((0..poset.len()).map(|v| {
        let minimal = poset.base().down_covers(v).is_empty();
        let (identity, right) = if minimal {
            ("Rf(v) = a·Rg(v) for minimal v", a * rg.get(v))
        } else {
            ("Rf(v) = Rg(v) for non-minimal v", rg.get(v).clone())
        };
        Outcome::expect_equal(identity, poset.name(v), Some(rf.get(v).clone()), Some(right))
    }))
}

fn invertible(identity: &str, location: &str, x: &RingElement) -> Outcome {
    let inverse: PartialValue = x.try_inverse();
    if inverse.is_some() {
        Outcome::Pass
    } else {
        Outcome::fail(identity, location, Some(x.clone()), None)
    }
}

/// Consequences of `Rf` (and `R²f`) being defined:
/// every `f(v)` with `v ∈ P` is invertible, `f(TOP)` is invertible,
/// `R²f` defined forces `f(BOT)` invertible, `Rf(v)` is invertible for
/// non-minimal `v`, and for all `v` once `f(BOT)` is invertible.
pub fn check_definedness_ladder(poset: &ExtendedPoset, f: &Labeling) -> Outcome {
    let Some(rf) = rowmotion(poset, f) else {
        return Outcome::not_applicable("Rf is undefined");
    };
    let mut checks = Vec::new();
    for v in 0..poset.len() {
        checks.push(invertible("Rf defined ⇒ f(v) invertible", poset.name(v), f.get(v)));
        if !poset.base().down_covers(v).is_empty() {
            checks.push(invertible("Rf defined ⇒ Rf(v) invertible for non-minimal v", poset.name(v), rf.get(v)));
        }
        if f.bottom().try_inverse().is_some() {
            checks.push(invertible("Rf defined, a invertible ⇒ Rf(v) invertible", poset.name(v), rf.get(v)));
        }
    }
    if !poset.is_empty() {
        checks.push(invertible("Rf defined ⇒ f(TOP) invertible", "TOP", f.top()));
        if rowmotion(poset, &rf).is_some() {
            checks.push(invertible("R²f defined ⇒ f(BOT) invertible", "BOT", f.bottom()));
        }
    }
    Outcome::all(checks)
}
