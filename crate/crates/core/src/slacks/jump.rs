use super::{SlackError, SlackTable, MAX_PATHS, MAX_RECT_SPAN};
use crate::algebra::PartialValue;
use crate::check::Outcome;
use crate::poset::ExtendedPoset;

/// `x ▶ y`: `rank x = rank y + 1` and `x` has the larger first coordinate.
/// Only meaningful on grid posets; false elsewhere.
pub fn jumps_to(poset: &ExtendedPoset, x: usize, y: usize) -> bool {
    match (poset.coord(x), poset.coord(y)) {
        (Some(cx), Some(cy)) => cx.rank() == cy.rank() + 1 && cx.i > cy.i,
        _ => false,
    }
}

/// Paths `v0=from, …, vr=to` inside `P` that step down along covers except
/// at index `jump`, where `v_jump ▶ v_{jump+1}`.
pub fn pathjump_paths(
    poset: &ExtendedPoset,
    from: usize,
    to: usize,
    jump: usize,
) -> Result<Vec<Vec<usize>>, SlackError> {
    let (Some((p, q)), Some(cf), Some(ct)) = (poset.rectangle_shape(), poset.coord(from), poset.coord(to)) else {
        return Err(SlackError::BadArguments("path-jump-paths need two cells of a rectangle".into()));
    };
    if p + q > MAX_RECT_SPAN {
        return Err(SlackError::RectangleTooLarge(p, q));
    }
    let Some(r) = cf.rank().checked_sub(ct.rank()).filter(|&r| jump < r) else {
        return Err(SlackError::BadArguments(format!("jump index {jump} outside 0..rank span")));
    };
    let mut out = Vec::new();
    let mut stack = vec![from];
    fn walk(
        poset: &ExtendedPoset,
        to: usize,
        r: usize,
        jump: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), SlackError> {
        let step = stack.len() - 1;
        let last = *stack.last().expect("nonempty");
        if step == r {
            if last == to {
                if out.len() == MAX_PATHS {
                    return Err(SlackError::TooManyPaths);
                }
                out.push(stack.clone());
            }
            return Ok(());
        }
        let next: Vec<usize> = if step == jump {
            (0..poset.len()).filter(|&y| jumps_to(poset, last, y)).collect()
        } else {
            poset.base().down_covers(last).to_vec()
        };
        for y in next {
            stack.push(y);
            walk(poset, to, r, jump, stack, out)?;
            stack.pop();
        }
        Ok(())
    }
    walk(poset, to, r, jump, &mut stack, &mut out)?;
    Ok(out)
}

/// Sum over path-jump-paths with jump at `jump` of
/// `↓^{v0}⋯↓^{v_{jump−1}} · v_jump · inv(v_{jump+1}) · ↑^{v_{jump+2}}⋯↑^{v_r}`, all at time `ℓ`.
pub fn pathjump_sum(
    table: &SlackTable,
    from: usize,
    to: usize,
    ell: usize,
    jump: usize,
) -> Result<PartialValue, SlackError> {
    let zero = table.orbit().start().ring().zero();
    let mut total = zero;
    for path in pathjump_paths(table.poset(), from, to, jump)? {
        let mut term = table.orbit().start().ring().one();
        for (idx, &v) in path.iter().enumerate() {
            let factor = if idx < jump {
                table.down_slack(v, ell)
            } else if idx == jump {
                table.label(v, ell)
            } else if idx == jump + 1 {
                table.label(v, ell).and_then(|x| x.try_inverse())
            } else {
                table.up_slack(v, ell)
            };
            let Some(factor) = factor else { return Ok(None) };
            term = &term * &factor;
        }
        total = &total + &term;
    }
    Ok(Some(total))
}

/// For `u=(k,q)`, `d=(i,1)`, `d'=(i−1,1)`, `u'=(k−1,q)`: the jump sums from `u`
/// to `d'` do not depend on the jump index, equal `↓ℓ^{u→d}` at the last
/// index and `↑ℓ^{u'→d'}` at the first.
pub fn check_pathjump_sums(table: &SlackTable, k: usize, i: usize, ell: usize) -> Result<Outcome, SlackError> {
    let poset = table.poset();
    let Some((p, q)) = poset.rectangle_shape() else {
        return Ok(Outcome::not_applicable("not a rectangle"));
    };
    if ell < 1 || !table.orbit().is_defined(ell + 1) || table.orbit().start().bottom().try_inverse().is_none() {
        return Ok(Outcome::not_applicable("needs ℓ ≥ 1, R^{ℓ+1} f defined and a invertible"));
    }
    if !(2..=p).contains(&k) || !(2..=p).contains(&i) {
        return Ok(Outcome::not_applicable("needs 2 ≤ k, i ≤ p"));
    }
    let at = |x, y| poset.at(x, y).expect("cell");
    let (u, u_prev, d, d_prev) = (at(k, q), at(k - 1, q), at(i, 1), at(i - 1, 1));
    let r = (k + q - 1).saturating_sub(i - 1);
    if k + q < i + 1 {
        return Ok(Outcome::not_applicable("no path-jump-paths: rank span below 1"));
    }
    let sums: Vec<PartialValue> = (0..r).map(|j| pathjump_sum(table, u, d_prev, ell, j)).collect::<Result<_, _>>()?;
    let place = |j: usize| format!("u=({k},{q}) d'=({},1) jump {j} ℓ={ell}", i - 1);
    let mut outcomes = vec![
        Outcome::expect_equal(
            "jump sum at r−1 = ↓^(u→d)",
            place(r - 1),
            sums[r - 1].clone(),
            table.down_path_sum(u, d, ell),
        ),
        Outcome::expect_equal(
            "jump sum at 0 = ↑^(u'→d')",
            place(0),
            sums[0].clone(),
            table.up_path_sum(u_prev, d_prev, ell),
        ),
    ];
    for j in 0..r - 1 {
        outcomes.push(Outcome::expect_equal(
            "jump sum at j = jump sum at j+1",
            place(j),
            sums[j].clone(),
            sums[j + 1].clone(),
        ));
    }
    Ok(Outcome::all(outcomes))
}
