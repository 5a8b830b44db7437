//! Down- and up-slacks along an orbit, path sums over the Hasse diagram of `P̂`,
//! and the identities relating them.

mod checks;
mod jump;

use std::sync::OnceLock;

use serde_json::{Map, Value};
use thiserror::Error;

pub use checks::{
    check_conversion, check_four_neighbors, check_matrix_conversion, check_path_formulas, check_path_sums_agree,
    check_slack_definedness, check_slack_recursions, check_transition,
};
pub use jump::{check_pathjump_sums, jumps_to, pathjump_paths, pathjump_sum};

use crate::algebra::{partial_to_json, PartialValue, RingElement};
use crate::poset::ExtendedPoset;
use crate::rowmotion::Orbit;

/// Enumeration is refused on rectangles with `p + q` above this.
pub const MAX_RECT_SPAN: usize = 10;
/// Enumeration stops with an error past this many paths.
pub const MAX_PATHS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlackError {
    #[error("path enumeration is limited to rectangles with p+q <= {MAX_RECT_SPAN}, got {0}x{1}")]
    RectangleTooLarge(usize, usize),
    #[error("more than {MAX_PATHS} paths")]
    TooManyPaths,
    #[error("{0}")]
    BadArguments(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Down,
    Up,
}

impl Direction {
    fn index(self) -> usize {
        match self {
            Direction::Down => 0,
            Direction::Up => 1,
        }
    }
}

/// A descending path `v0 ⋗ v1 ⋗ ⋯ ⋗ vk` in `P̂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<usize>);

/// Every descending cover path from `from` down to `to`, by depth-first search.
pub fn enumerate_paths(poset: &ExtendedPoset, from: usize, to: usize) -> Result<Vec<Path>, SlackError> {
    if let Some((p, q)) = poset.rectangle_shape() {
        if p + q > MAX_RECT_SPAN {
            return Err(SlackError::RectangleTooLarge(p, q));
        }
    }
    let mut out = Vec::new();
    let mut stack = vec![from];
    fn walk(poset: &ExtendedPoset, to: usize, stack: &mut Vec<usize>, out: &mut Vec<Path>) -> Result<(), SlackError> {
        let last = *stack.last().expect("nonempty");
        if last == to {
            if out.len() == MAX_PATHS {
                return Err(SlackError::TooManyPaths);
            }
            out.push(Path(stack.clone()));
            return Ok(());
        }
        for &next in poset.lower_covers(last) {
            stack.push(next);
            walk(poset, to, stack, out)?;
            stack.pop();
        }
        Ok(())
    }
    walk(poset, to, &mut stack, &mut out)?;
    Ok(out)
}

/// Slacks and path sums of one orbit, memoized.
///
/// Memo slots are `OnceLock`s, so the table can be shared between threads
/// and every read sees the value a sequential evaluation would produce.
pub struct SlackTable<'a> {
    poset: &'a ExtendedPoset,
    orbit: &'a Orbit,
    slacks: [Vec<OnceLock<Vec<PartialValue>>>; 2],
    sums: [Vec<OnceLock<Vec<PartialValue>>>; 2],
}

impl<'a> SlackTable<'a> {
    pub fn new(poset: &'a ExtendedPoset, orbit: &'a Orbit) -> Self {
        let iterates = orbit.steps() + 1;
        let cells = |n: usize| (0..n).map(|_| OnceLock::new()).collect::<Vec<_>>();
        SlackTable {
            poset,
            orbit,
            slacks: [cells(iterates), cells(iterates)],
            sums: [cells(iterates * poset.hat_len()), cells(iterates * poset.hat_len())],
        }
    }

    pub fn poset(&self) -> &'a ExtendedPoset {
        self.poset
    }

    pub fn orbit(&self) -> &'a Orbit {
        self.orbit
    }

    /// `v_ℓ`, undefined past the defined part of the orbit.
    pub fn label(&self, v: usize, ell: usize) -> PartialValue {
        self.orbit.label(v, ell).cloned()
    }

    /// Slack without touching the memo.
    pub fn compute_slack(&self, dir: Direction, v: usize, ell: usize) -> PartialValue {
        let f = self.orbit.get(ell)?;
        let ring = f.ring();
        if self.poset.is_sentinel(v) {
            return Some(ring.one());
        }
        match dir {
            // v_ℓ · inv(Σ_{u⋖v} u_ℓ)
            Direction::Down => {
                let below = ring.sum(self.poset.lower_covers(v).iter().map(|&u| f.get(u)));
                Some(f.get(v) * &below.try_inverse()?)
            }
            // inv(Σ_{u⋗v} inv(u_ℓ)) · inv(v_ℓ)
            Direction::Up => {
                let mut above = ring.zero();
                for &u in self.poset.upper_covers(v) {
                    above = &above + &f.get(u).try_inverse()?;
                }
                Some(&above.try_inverse()? * &f.get(v).try_inverse()?)
            }
        }
    }

    pub fn slack(&self, dir: Direction, v: usize, ell: usize) -> PartialValue {
        if ell > self.orbit.steps() {
            return self.compute_slack(dir, v, ell);
        }
        self.slacks[dir.index()][ell]
            .get_or_init(|| (0..self.poset.hat_len()).map(|u| self.compute_slack(dir, u, ell)).collect())[v]
            .clone()
    }

    /// `↓ℓ^v`.
    pub fn down_slack(&self, v: usize, ell: usize) -> PartialValue {
        self.slack(Direction::Down, v, ell)
    }

    /// `↑ℓ^v`.
    pub fn up_slack(&self, v: usize, ell: usize) -> PartialValue {
        self.slack(Direction::Up, v, ell)
    }

    /// Path sum from every source down to `to`, by the first-step recursion
    /// `S(s) = slack(s) · Σ_{s⋗x} S(x)`, processed bottom-up.
    fn sums_into(&self, dir: Direction, to: usize, ell: usize) -> Vec<PartialValue> {
        // `None` marks "no path", which stays distinct from an undefined sum.
        let mut reach: Vec<Option<PartialValue>> = vec![None; self.poset.hat_len()];
        for s in self.poset.hat_order() {
            if s == to {
                reach[s] = Some(self.slack(dir, s, ell));
                continue;
            }
            let mut total: Option<PartialValue> = None;
            for &x in self.poset.lower_covers(s) {
                if let Some(value) = &reach[x] {
                    total = Some(match (total, value) {
                        (None, v) => v.clone(),
                        (Some(Some(acc)), Some(v)) => Some(&acc + v),
                        _ => None,
                    });
                }
            }
            reach[s] = total.map(|sum| Some(&self.slack(dir, s, ell)? * &sum?));
        }
        let zero = self.orbit.start().ring().zero();
        reach.into_iter().map(|r| r.unwrap_or_else(|| Some(zero.clone()))).collect()
    }

    /// Sum over descending paths `from → to` of the ordered slack products.
    pub fn path_sum(&self, dir: Direction, from: usize, to: usize, ell: usize) -> PartialValue {
        if ell > self.orbit.steps() {
            return self.sums_into(dir, to, ell)[from].clone();
        }
        let slot = ell * self.poset.hat_len() + to;
        self.sums[dir.index()][slot].get_or_init(|| self.sums_into(dir, to, ell))[from].clone()
    }

    /// `↓ℓ^{from→to}`.
    pub fn down_path_sum(&self, from: usize, to: usize, ell: usize) -> PartialValue {
        self.path_sum(Direction::Down, from, to, ell)
    }

    /// `↑ℓ^{from→to}`.
    pub fn up_path_sum(&self, from: usize, to: usize, ell: usize) -> PartialValue {
        self.path_sum(Direction::Up, from, to, ell)
    }

    /// Ordered product of the slacks along `path`.
    pub fn path_product(&self, dir: Direction, path: &Path, ell: usize) -> PartialValue {
        let mut acc: Option<RingElement> = None;
        for &v in &path.0 {
            let s = self.slack(dir, v, ell)?;
            acc = Some(match acc {
                None => s,
                Some(a) => &a * &s,
            });
        }
        acc
    }

    /// The same path sum, by explicit enumeration of paths.
    pub fn enumerated_path_sum(
        &self,
        dir: Direction,
        from: usize,
        to: usize,
        ell: usize,
    ) -> Result<PartialValue, SlackError> {
        let ring = self.orbit.start().ring();
        let mut total = Some(ring.zero());
        for path in enumerate_paths(self.poset, from, to)? {
            let term = self.path_product(dir, &path, ell);
            total = match (total, term) {
                (Some(t), Some(x)) => Some(&t + &x),
                _ => None,
            };
        }
        Ok(total)
    }

    /// `{"<v>@<ℓ>": {"down": ..., "up": ...}}` for every vertex and every `ℓ ≤ steps`,
    /// with `"undef"` for undefined slacks.
    pub fn to_json(&self) -> Value {
        let show = |x: PartialValue| match x {
            None => Value::String("undef".into()),
            some => partial_to_json(&some),
        };
        let mut out = Map::new();
        for ell in 0..=self.orbit.steps() {
            for v in 0..self.poset.hat_len() {
                let mut entry = Map::new();
                entry.insert("down".into(), show(self.down_slack(v, ell)));
                entry.insert("up".into(), show(self.up_slack(v, ell)));
                out.insert(format!("{}@{ell}", self.poset.name(v)), Value::Object(entry));
            }
        }
        Value::Object(out)
    }
}
