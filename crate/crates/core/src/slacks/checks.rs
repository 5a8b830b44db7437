use super::{Direction, SlackError, SlackTable};
use crate::algebra::{PartialValue, RingElement};
use crate::check::Outcome;

fn mul(x: &PartialValue, y: &PartialValue) -> PartialValue {
    Some(x.as_ref()? * y.as_ref()?)
}

fn inv(x: &PartialValue) -> PartialValue {
    x.as_ref()?.try_inverse()
}

fn sum(items: impl IntoIterator<Item = PartialValue>, zero: RingElement) -> PartialValue {
    items.into_iter().try_fold(zero, |acc, x| Some(&acc + &x?))
}

fn bottom_invertible(table: &SlackTable) -> bool {
    table.orbit().start().bottom().try_inverse().is_some()
}

/// Shared hypotheses: rectangle, `ℓ ≥ 1`, `R^{ℓ+1} f` defined, `a` invertible.
fn rectangle_ready(table: &SlackTable, ell: usize) -> Result<(usize, usize), Outcome> {
    let Some(shape) = table.poset().rectangle_shape() else {
        return Err(Outcome::not_applicable("not a rectangle"));
    };
    if ell < 1 || !table.orbit().is_defined(ell + 1) || !bottom_invertible(table) {
        return Err(Outcome::not_applicable("needs ℓ ≥ 1, R^{ℓ+1} f defined and a invertible"));
    }
    Ok(shape)
}

fn cell(table: &SlackTable, i: usize, j: usize) -> usize {
    table.poset().at(i, j).expect("cell inside the rectangle")
}

/// The four first-step and last-step recursions for `↓^{s→t}` and `↑^{s→t}`,
/// every term computed by path enumeration.
pub fn check_slack_recursions(table: &SlackTable, s: usize, t: usize, ell: usize) -> Result<Outcome, SlackError> {
    if s == t {
        return Ok(Outcome::not_applicable("needs s ≠ t"));
    }
    let poset = table.poset();
    let zero = table.orbit().start().ring().zero();
    let mut outcomes = Vec::new();
    for (dir, name) in [(Direction::Down, "↓"), (Direction::Up, "↑")] {
        let whole = table.enumerated_path_sum(dir, s, t, ell)?;
        let first: Vec<PartialValue> = poset
            .lower_covers(s)
            .iter()
            .map(|&u| table.enumerated_path_sum(dir, u, t, ell))
            .collect::<Result<_, _>>()?;
        let last: Vec<PartialValue> = poset
            .upper_covers(t)
            .iter()
            .map(|&u| table.enumerated_path_sum(dir, s, u, ell))
            .collect::<Result<_, _>>()?;
        let first_step = mul(&table.slack(dir, s, ell), &sum(first, zero.clone()));
        let last_step = mul(&sum(last, zero.clone()), &table.slack(dir, t, ell));
        if whole.is_none() || first_step.is_none() || last_step.is_none() {
            return Ok(Outcome::not_applicable("a term is undefined"));
        }
        let at = format!("{}→{} at ℓ={ell}", poset.name(s), poset.name(t));
        outcomes.push(Outcome::expect_equal(
            &format!("{name}^(s→t) = {name}^s Σ_(s⋗u) {name}^(u→t)"),
            at.clone(),
            whole.clone(),
            first_step,
        ));
        outcomes.push(Outcome::expect_equal(
            &format!("{name}^(s→t) = Σ_(u⋗t) {name}^(s→u) {name}^t"),
            at,
            whole,
            last_step,
        ));
    }
    Ok(Outcome::all(outcomes))
}

/// Recursive and enumerated path sums agree for every pair and both directions.
pub fn check_path_sums_agree(table: &SlackTable, ell: usize) -> Result<Outcome, SlackError> {
    let poset = table.poset();
    let mut outcomes = Vec::new();
    for dir in [Direction::Down, Direction::Up] {
        for s in 0..poset.hat_len() {
            for t in 0..poset.hat_len() {
                outcomes.push(Outcome::expect_same(
                    "recursive path sum = enumerated path sum",
                    format!("{:?} {}→{} at ℓ={ell}", dir, poset.name(s), poset.name(t)),
                    table.path_sum(dir, s, t, ell),
                    table.enumerated_path_sum(dir, s, t, ell)?,
                ));
            }
        }
    }
    Ok(Outcome::all(outcomes))
}

fn transition_ready(table: &SlackTable, ell: usize) -> Option<Outcome> {
    (ell < 1 || !table.orbit().is_defined(ell) || !bottom_invertible(table))
        .then(|| Outcome::not_applicable("needs ℓ ≥ 1, R^ℓ f defined and a invertible"))
}

/// `↑ℓ^v = ↓_{ℓ−1}^v` at every vertex, and `↑ℓ^{u→v} = ↓_{ℓ−1}^{u→v}` for every pair.
pub fn check_transition(table: &SlackTable, ell: usize) -> Outcome {
    if let Some(na) = transition_ready(table, ell) {
        return na;
    }
    let poset = table.poset();
    let n = poset.hat_len();
    let vertices = (0..n).map(|v| {
        Outcome::expect_equal(
            "↑ℓ^v = ↓(ℓ−1)^v",
            format!("{} at ℓ={ell}", poset.name(v)),
            table.up_slack(v, ell),
            table.down_slack(v, ell - 1),
        )
    });
    let pairs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).map(|(u, v)| {
        Outcome::expect_equal(
            "↑ℓ^(u→v) = ↓(ℓ−1)^(u→v)",
            format!("{}→{} at ℓ={ell}", poset.name(u), poset.name(v)),
            table.up_path_sum(u, v, ell),
            table.down_path_sum(u, v, ell - 1),
        )
    });
    Outcome::all(vertices.chain(pairs))
}

/// Under the transition hypotheses, `v_ℓ`, `v_{ℓ−1}`, `↓_{ℓ−1}^v` and `↑ℓ^v`
/// are defined and invertible for every `v ∈ P`.
pub fn check_slack_definedness(table: &SlackTable, ell: usize) -> Outcome {
    if let Some(na) = transition_ready(table, ell) {
        return na;
    }
    let poset = table.poset();
    Outcome::all((0..poset.len()).flat_map(|v| {
        [
            ("v_ℓ invertible", table.label(v, ell)),
            ("v_(ℓ−1) invertible", table.label(v, ell - 1)),
            ("↓(ℓ−1)^v invertible", table.down_slack(v, ell - 1)),
            ("↑ℓ^v invertible", table.up_slack(v, ell)),
        ]
        .into_iter()
        .map(move |(identity, x)| {
            if inv(&x).is_some() {
                Outcome::Pass
            } else {
                Outcome::fail(identity, format!("{} at ℓ={ell}", poset.name(v)), x, None)
            }
        })
    }))
}

/// Label recovery from path sums:
/// (a) `u_ℓ = inv(↑ℓ^{TOP→u})·b`, (b) `u_ℓ = ↓ℓ^{u→BOT}·a`, and on rectangles
/// (c) `u_ℓ = inv(↑ℓ^{(p,q)→u})·b`, (d) `u_ℓ = ↓ℓ^{u→(1,1)}·a`.
/// Parts (a), (c) need `ℓ ≥ 1` and `R^ℓ f` defined; (b), (d) need `R^{ℓ+1} f`.
pub fn check_path_formulas(table: &SlackTable, ell: usize) -> Outcome {
    if !bottom_invertible(table) {
        return Outcome::not_applicable("a is not invertible");
    }
    let poset = table.poset();
    let f = table.orbit().start();
    let (a, b) = (Some(f.bottom().clone()), Some(f.top().clone()));
    let upper_ok = ell >= 1 && table.orbit().is_defined(ell);
    let lower_ok = table.orbit().is_defined(ell + 1);
    let corners = poset.rectangle_shape().map(|(p, q)| (cell(table, p, q), cell(table, 1, 1)));
    let mut outcomes = Vec::new();
    for u in 0..poset.len() {
        let here = table.label(u, ell);
        let at = || format!("{} at ℓ={ell}", poset.name(u));
        if upper_ok {
            let rhs = mul(&inv(&table.up_path_sum(poset.top(), u, ell)), &b);
            outcomes.push(Outcome::expect_equal("(a) u_ℓ = inv(↑ℓ^(TOP→u))·b", at(), here.clone(), rhs));
            if let Some((max, _)) = corners {
                let rhs = mul(&inv(&table.up_path_sum(max, u, ell)), &b);
                outcomes.push(Outcome::expect_equal("(c) u_ℓ = inv(↑ℓ^((p,q)→u))·b", at(), here.clone(), rhs));
            }
        }
        if lower_ok {
            let rhs = mul(&table.down_path_sum(u, poset.bot(), ell), &a);
            outcomes.push(Outcome::expect_equal("(b) u_ℓ = ↓ℓ^(u→BOT)·a", at(), here.clone(), rhs));
            if let Some((_, min)) = corners {
                let rhs = mul(&table.down_path_sum(u, min, ell), &a);
                outcomes.push(Outcome::expect_equal("(d) u_ℓ = ↓ℓ^(u→(1,1))·a", at(), here.clone(), rhs));
            }
        }
    }
    if outcomes.is_empty() {
        return Outcome::not_applicable("orbit too short for ℓ");
    }
    Outcome::all(outcomes)
}

/// With `d=(i,j)`, `v=(i+1,j)`, `w=(i,j+1)`, `u=(i+1,j+1)`:
/// `inv(v_ℓ)·↑ℓ^d·d_ℓ = inv(u_ℓ)·↓ℓ^u·w_ℓ` and `inv(w_ℓ)·↑ℓ^d·d_ℓ = inv(u_ℓ)·↓ℓ^u·v_ℓ`.
pub fn check_four_neighbors(table: &SlackTable, i: usize, j: usize, ell: usize) -> Outcome {
    let (p, q) = match rectangle_ready(table, ell) {
        Ok(shape) => shape,
        Err(na) => return na,
    };
    if i < 1 || i >= p || j < 1 || j >= q {
        return Outcome::not_applicable("square outside the rectangle");
    }
    let (d, v, w, u) = (cell(table, i, j), cell(table, i + 1, j), cell(table, i, j + 1), cell(table, i + 1, j + 1));
    let lab = |x| table.label(x, ell);
    let left_core = mul(&table.up_slack(d, ell), &lab(d));
    let right_core = mul(&inv(&lab(u)), &table.down_slack(u, ell));
    let at = format!("({i},{j}) at ℓ={ell}");
    Outcome::all([
        Outcome::expect_equal(
            "inv(v)·↑^d·d = inv(u)·↓^u·w",
            at.clone(),
            mul(&inv(&lab(v)), &left_core),
            mul(&right_core, &lab(w)),
        ),
        Outcome::expect_equal(
            "inv(w)·↑^d·d = inv(u)·↓^u·v",
            at,
            mul(&inv(&lab(w)), &left_core),
            mul(&right_core, &lab(v)),
        ),
    ])
}

/// `↓ℓ^{(k,q)→(i,1)} = ↑ℓ^{(k−1,q)→(i−1,1)}` for `2 ≤ k, i ≤ p`.
pub fn check_conversion(table: &SlackTable, k: usize, i: usize, ell: usize) -> Outcome {
    let (p, q) = match rectangle_ready(table, ell) {
        Ok(shape) => shape,
        Err(na) => return na,
    };
    if !(2..=p).contains(&k) || !(2..=p).contains(&i) {
        return Outcome::not_applicable("needs 2 ≤ k, i ≤ p");
    }
    Outcome::expect_equal(
        "↓ℓ^((k,q)→(i,1)) = ↑ℓ^((k−1,q)→(i−1,1))",
        format!("k={k} i={i} ℓ={ell}"),
        table.down_path_sum(cell(table, k, q), cell(table, i, 1), ell),
        table.up_path_sum(cell(table, k - 1, q), cell(table, i - 1, 1), ell),
    )
}

type Square = Vec<Vec<RingElement>>;

fn square_mul(x: &Square, y: &Square, zero: &RingElement) -> Square {
    let n = x.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    (0..n).fold(zero.clone(), |acc, m| {
                        if x[r][m].is_zero() || y[m][c].is_zero() {
                            acc
                        } else {
                            &acc + &(&x[r][m] * &y[m][c])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// With `P×P` matrices `▽[x][y] = ↓^x [x⋗y]`, `△[x][y] = ↑^y [x⋗y]` and
/// `U[x][y] = x·inv(y) [x▶y]`, checks `▽^k U = U △^k` entrywise. For every
/// edge pair with rank span `k`, the `(u,d')` entries also reproduce the two
/// sides of the conversion identity.
pub fn check_matrix_conversion(table: &SlackTable, ell: usize, k: usize) -> Outcome {
    let (p, q) = match rectangle_ready(table, ell) {
        Ok(shape) => shape,
        Err(na) => return na,
    };
    let poset = table.poset();
    let n = poset.len();
    let zero = table.orbit().start().ring().zero();
    let mut down = vec![vec![zero.clone(); n]; n];
    let mut up = vec![vec![zero.clone(); n]; n];
    let mut jump = vec![vec![zero.clone(); n]; n];
    for x in 0..n {
        for &y in poset.base().down_covers(x) {
            let (Some(dx), Some(uy)) = (table.down_slack(x, ell), table.up_slack(y, ell)) else {
                return Outcome::not_applicable("a slack is undefined");
            };
            down[x][y] = dx;
            up[x][y] = uy;
        }
        for (y, slot) in jump[x].iter_mut().enumerate() {
            if super::jumps_to(poset, x, y) {
                let Some(e) = mul(&table.label(x, ell), &inv(&table.label(y, ell))) else {
                    return Outcome::not_applicable("a label is not invertible");
                };
                *slot = e;
            }
        }
    }
    let mut left = jump.clone();
    let mut right = jump;
    for _ in 0..k {
        left = square_mul(&down, &left, &zero);
        right = square_mul(&right, &up, &zero);
    }
    let mut outcomes = Vec::new();
    for x in 0..n {
        for y in 0..n {
            outcomes.push(Outcome::expect_equal(
                "(▽^k U)[x][y] = (U △^k)[x][y]",
                format!("{}, {} at k={k} ℓ={ell}", poset.name(x), poset.name(y)),
                Some(left[x][y].clone()),
                Some(right[x][y].clone()),
            ));
        }
    }
    for ku in 2..=p {
        for i in 2..=p {
            let (u, d) = (cell(table, ku, q), cell(table, i, 1));
            if (ku + q - 1).checked_sub(i) != Some(k) {
                continue;
            }
            let (u_prev, d_prev) = (cell(table, ku - 1, q), cell(table, i - 1, 1));
            let at = format!("({ku},{q}), ({},1) at ℓ={ell}", i - 1);
            outcomes.push(Outcome::expect_equal(
                "(▽^k U)[u][d'] = ↓^(u→d)",
                at.clone(),
                Some(left[u][d_prev].clone()),
                table.down_path_sum(u, d, ell),
            ));
            outcomes.push(Outcome::expect_equal(
                "(U △^k)[u][d'] = ↑^(u'→d')",
                at,
                Some(right[u][d_prev].clone()),
                table.up_path_sum(u_prev, d_prev, ell),
            ));
        }
    }
    Outcome::all(outcomes)
}
