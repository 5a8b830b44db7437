//! Finite posets given by their cover relations, and the extended poset `P̂`.

mod families;
mod linext;
mod spec;

use std::collections::HashMap;
use std::fmt;

use petgraph::adj::List;
use petgraph::algo::{toposort, tred};
use petgraph::graph::{DiGraph, NodeIndex};
use serde_json::{json, Value};
use thiserror::Error;

pub use families::{antipode, claw, rectangle, trapezoid, triangle_delta, triangle_nabla, triangle_right};
pub use linext::{all_linear_extensions, is_linear_extension, linear_extension, LinearExtensions};
pub use spec::PosetSpec;

/// Posets with more elements than this are refused.
pub const MAX_ELEMENTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("invalid poset parameters: {0}")]
    BadParameters(String),
    #[error("poset has {0} elements, more than the limit of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cover relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("reserved element name `{0}`")]
    ReservedName(String),
    #[error("{0}")]
    Malformed(String),
}

/// A cell `(i, j)` of a grid, both indices starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectCoord {
    pub i: usize,
    pub j: usize,
}

impl RectCoord {
    pub fn new(i: usize, j: usize) -> Self {
        RectCoord { i, j }
    }

    /// `i + j − 1`.
    pub fn rank(self) -> usize {
        self.i + self.j - 1
    }
}

impl fmt::Display for RectCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Where a poset came from; grid families also remember cell coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Rectangle { p: usize, q: usize },
    Delta(usize),
    Nabla(usize),
    Tria(usize),
    Trapezoid { p: usize, s: usize },
    Claw,
    Custom,
}

/// A finite poset on ids `0..n`, stored as its Hasse diagram.
#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    family: Family,
    coords: Option<Vec<RectCoord>>,
    index: HashMap<String, usize>,
}

impl Poset {
    /// Builds a poset from already transitively reduced, acyclic covers.
    pub(crate) fn from_reduced(
        names: Vec<String>,
        covers: impl IntoIterator<Item = (usize, usize)>,
        family: Family,
        coords: Option<Vec<RectCoord>>,
    ) -> Result<Self, PosetError> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (id, name) in names.iter().enumerate() {
            if name == "BOT" || name == "TOP" {
                return Err(PosetError::ReservedName(name.clone()));
            }
            if index.insert(name.clone(), id).is_some() {
                return Err(PosetError::DuplicateName(name.clone()));
            }
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for (x, y) in covers {
            up[x].push(y);
            down[y].push(x);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Poset { names, up, down, family, coords, index })
    }

    /// Poset generated by `pairs` (each `(x, y)` meaning `x < y`), reduced to
    /// its cover relations. Cycles, duplicate names and unknown names are errors.
    pub fn from_covers<S: AsRef<str>>(names: &[S], pairs: &[(S, S)]) -> Result<Self, PosetError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.len() > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(names.len()));
        }
        let mut index = HashMap::new();
        for (id, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), id).is_some() {
                return Err(PosetError::DuplicateName(name.clone()));
            }
        }
        let lookup =
            |s: &S| index.get(s.as_ref()).copied().ok_or_else(|| PosetError::UnknownElement(s.as_ref().to_string()));
        let mut graph = DiGraph::<(), ()>::with_capacity(names.len(), pairs.len());
        for _ in &names {
            graph.add_node(());
        }
        for (x, y) in pairs {
            graph.update_edge(NodeIndex::new(lookup(x)?), NodeIndex::new(lookup(y)?), ());
        }
        let order = toposort(&graph, None).map_err(|c| PosetError::Cycle(names[c.node_id().index()].clone()))?;
        let (sorted, _) = tred::dag_to_toposorted_adjacency_list::<_, u32>(&graph, &order);
        let (reduction, _) = tred::dag_transitive_reduction_closure::<(), u32>(&sorted);
        let covers: Vec<(usize, usize)> =
            reduced_edges(&reduction).map(|(x, y)| (order[x].index(), order[y].index())).collect();
        Poset::from_reduced(names, covers, Family::Custom, None)
    }

    /// `{"elements": [...], "covers": [[x, y], ...]}` with `x ⋖ y`.
    pub fn from_json(value: &Value) -> Result<Self, PosetError> {
        let names: Vec<String> = value
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| PosetError::Malformed("poset: missing array \"elements\"".into()))?
            .iter()
            .enumerate()
            .map(|(k, v)| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| PosetError::Malformed(format!("poset: elements[{k}] is not a string")))
            })
            .collect::<Result<_, _>>()?;
        let pairs: Vec<(String, String)> = value
            .get("covers")
            .and_then(Value::as_array)
            .ok_or_else(|| PosetError::Malformed("poset: missing array \"covers\"".into()))?
            .iter()
            .enumerate()
            .map(|(k, v)| match v.as_array().map(Vec::as_slice) {
                Some([Value::String(x), Value::String(y)]) => Ok((x.clone(), y.clone())),
                _ => Err(PosetError::Malformed(format!("poset: covers[{k}] is not a pair of names"))),
            })
            .collect::<Result<_, _>>()?;
        Poset::from_covers(&names, &pairs)
    }

    pub fn to_json(&self) -> Value {
        let covers: Vec<Value> = (0..self.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| json!([self.names[x], self.names[y]])))
            .collect();
        json!({"elements": self.names, "covers": covers})
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Elements covering `x`, sorted.
    pub fn up_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    /// Elements covered by `x`, sorted.
    pub fn down_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// `(p, q)` when this is the `p×q` rectangle.
    pub fn rectangle_shape(&self) -> Option<(usize, usize)> {
        match self.family {
            Family::Rectangle { p, q } => Some((p, q)),
            _ => None,
        }
    }

    pub fn coord(&self, x: usize) -> Option<RectCoord> {
        self.coords.as_ref().map(|c| c[x])
    }

    pub fn at(&self, c: RectCoord) -> Option<usize> {
        self.coords.as_ref()?;
        self.id(&c.to_string())
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// `x ≤ y`, by search along up-covers.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![x];
        while let Some(z) = stack.pop() {
            if z == y {
                return true;
            }
            for &w in &self.up[z] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }
}

fn reduced_edges(list: &List<(), u32>) -> impl Iterator<Item = (usize, usize)> + '_ {
    list.edge_indices().map(move |e| {
        let (a, b) = list.edge_endpoints(e).expect("edge of this list");
        (a as usize, b as usize)
    })
}

/// `P` with a global minimum `BOT` (id `n`) and maximum `TOP` (id `n+1`)
/// adjoined. Ids `0..n` are the elements of `P`.
#[derive(Clone, Debug)]
pub struct ExtendedPoset {
    base: Poset,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    extension: Vec<usize>,
}

impl ExtendedPoset {
    pub fn new(base: Poset) -> Self {
        let n = base.len();
        let (bot, top) = (n, n + 1);
        let mut up: Vec<Vec<usize>> = (0..n).map(|x| base.up_covers(x).to_vec()).collect();
        let mut down: Vec<Vec<usize>> = (0..n).map(|x| base.down_covers(x).to_vec()).collect();
        for x in 0..n {
            if down[x].is_empty() {
                down[x].push(bot);
            }
            if up[x].is_empty() {
                up[x].push(top);
            }
        }
        let mut bot_up = base.minimal_elements();
        let mut top_down = base.maximal_elements();
        if n == 0 {
            bot_up.push(top);
            top_down.push(bot);
        }
        up.push(bot_up);
        up.push(Vec::new());
        down.push(Vec::new());
        down.push(top_down);
        let extension = linear_extension(&base);
        ExtendedPoset { base, up, down, extension }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    /// Number of elements of `P` (sentinels excluded).
    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Number of elements of `P̂`.
    pub fn hat_len(&self) -> usize {
        self.base.len() + 2
    }

    pub fn bot(&self) -> usize {
        self.base.len()
    }

    pub fn top(&self) -> usize {
        self.base.len() + 1
    }

    pub fn is_sentinel(&self, v: usize) -> bool {
        v >= self.base.len()
    }

    pub fn name(&self, v: usize) -> &str {
        match v.checked_sub(self.base.len()) {
            None => self.base.name(v),
            Some(0) => "BOT",
            Some(_) => "TOP",
        }
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        match name {
            "BOT" => Some(self.bot()),
            "TOP" => Some(self.top()),
            _ => self.base.id(name),
        }
    }

    /// Elements `u ∈ P̂` with `u ⋖ v`.
    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    /// Elements `u ∈ P̂` with `v ⋖ u`.
    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    /// The canonical linear extension of `P` (Kahn, smallest name first).
    pub fn extension(&self) -> &[usize] {
        &self.extension
    }

    /// `BOT`, then the canonical extension, then `TOP`: bottom-up order on `P̂`.
    pub fn hat_order(&self) -> Vec<usize> {
        std::iter::once(self.bot()).chain(self.extension.iter().copied()).chain([self.top()]).collect()
    }

    /// Cell of `v` for grid families; `None` for sentinels.
    pub fn coord(&self, v: usize) -> Option<RectCoord> {
        if self.is_sentinel(v) {
            None
        } else {
            self.base.coord(v)
        }
    }

    pub fn at(&self, i: usize, j: usize) -> Option<usize> {
        self.base.at(RectCoord::new(i, j))
    }

    pub fn rectangle_shape(&self) -> Option<(usize, usize)> {
        self.base.rectangle_shape()
    }
}
