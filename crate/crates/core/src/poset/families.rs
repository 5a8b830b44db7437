use super::{Family, Poset, PosetError, RectCoord, MAX_ELEMENTS};

/// The `p×q` rectangle `[p]×[q]` with the componentwise order.
/// Ids are row-major and names are `"(i,j)"`.
pub fn rectangle(p: usize, q: usize) -> Result<Poset, PosetError> {
    if p < 1 || q < 1 {
        return Err(PosetError::BadParameters(format!("rectangle needs p, q >= 1, got {p}x{q}")));
    }
    let n = p.checked_mul(q).filter(|&n| n <= MAX_ELEMENTS).ok_or(PosetError::TooLarge(p.saturating_mul(q)))?;
    let id = |i: usize, j: usize| (i - 1) * q + (j - 1);
    let coords: Vec<RectCoord> = cells(p, q, |_| true);
    let mut covers = Vec::with_capacity(2 * n);
    for c in &coords {
        if c.i < p {
            covers.push((id(c.i, c.j), id(c.i + 1, c.j)));
        }
        if c.j < q {
            covers.push((id(c.i, c.j), id(c.i, c.j + 1)));
        }
    }
    let names = coords.iter().map(RectCoord::to_string).collect();
    Poset::from_reduced(names, covers, Family::Rectangle { p, q }, Some(coords))
}

/// `{(i,k) ∈ [p]×[p] : i+k > p+1}`; empty for `p = 1`.
pub fn triangle_delta(p: usize) -> Result<Poset, PosetError> {
    positive(p)?;
    grid_subposet(p, p, Family::Delta(p), |c| c.i + c.j > p + 1)
}

/// `{(i,k) ∈ [p]×[p] : i+k < p+1}`.
pub fn triangle_nabla(p: usize) -> Result<Poset, PosetError> {
    positive(p)?;
    grid_subposet(p, p, Family::Nabla(p), |c| c.i + c.j < p + 1)
}

/// `{(i,k) ∈ [p]×[p] : i ≤ k}`.
pub fn triangle_right(p: usize) -> Result<Poset, PosetError> {
    positive(p)?;
    grid_subposet(p, p, Family::Tria(p), |c| c.i <= c.j)
}

/// `{(i,k) ∈ [p]×[p] : i+k > p+1, i ≤ k, k ≥ s}` for `p > 1`.
pub fn trapezoid(p: usize, s: usize) -> Result<Poset, PosetError> {
    if p <= 1 {
        return Err(PosetError::BadParameters(format!("trapezoid needs p > 1, got {p}")));
    }
    grid_subposet(p, p, Family::Trapezoid { p, s }, |c| c.i + c.j > p + 1 && c.i <= c.j && c.j >= s)
}

/// Minimum `p` below three pairwise incomparable maxima `q1`, `q2`, `q3`.
pub fn claw() -> Poset {
    let names = ["p", "q1", "q2", "q3"].map(String::from).to_vec();
    Poset::from_reduced(names, [(0, 1), (0, 2), (0, 3)], Family::Claw, None).expect("claw is valid")
}

/// `(p+1−i, q+1−j)`.
pub fn antipode(p: usize, q: usize, x: RectCoord) -> Result<RectCoord, PosetError> {
    if x.i < 1 || x.i > p || x.j < 1 || x.j > q {
        return Err(PosetError::BadParameters(format!("{x} is outside the {p}x{q} rectangle")));
    }
    Ok(RectCoord::new(p + 1 - x.i, q + 1 - x.j))
}

fn positive(p: usize) -> Result<(), PosetError> {
    if p < 1 {
        return Err(PosetError::BadParameters(format!("triangle needs p >= 1, got {p}")));
    }
    Ok(())
}

fn cells(p: usize, q: usize, keep: impl Fn(RectCoord) -> bool) -> Vec<RectCoord> {
    (1..=p).flat_map(|i| (1..=q).map(move |j| RectCoord::new(i, j))).filter(|&c| keep(c)).collect()
}

/// Induced subposet of `[p]×[q]`; `x ⋖ y` iff `y` is minimal among the kept cells above `x`.
fn grid_subposet(p: usize, q: usize, family: Family, keep: impl Fn(RectCoord) -> bool) -> Result<Poset, PosetError> {
    if p.saturating_mul(q) > MAX_ELEMENTS * 4 {
        return Err(PosetError::TooLarge(p.saturating_mul(q)));
    }
    let coords = cells(p, q, keep);
    if coords.len() > MAX_ELEMENTS {
        return Err(PosetError::TooLarge(coords.len()));
    }
    let below = |a: RectCoord, b: RectCoord| a != b && a.i <= b.i && a.j <= b.j;
    let mut covers = Vec::new();
    for (x, &cx) in coords.iter().enumerate() {
        let above: Vec<usize> = (0..coords.len()).filter(|&y| below(cx, coords[y])).collect();
        for &y in &above {
            if !above.iter().any(|&z| below(coords[z], coords[y])) {
                covers.push((x, y));
            }
        }
    }
    let names = coords.iter().map(RectCoord::to_string).collect();
    Poset::from_reduced(names, covers, family, Some(coords))
}
