use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::Poset;

/// Kahn's algorithm, always taking the available element with the smallest name.
pub fn linear_extension(poset: &Poset) -> Vec<usize> {
    let mut indegree: Vec<usize> = (0..poset.len()).map(|x| poset.down_covers(x).len()).collect();
    let mut ready: BinaryHeap<Reverse<(&str, usize)>> =
        (0..poset.len()).filter(|&x| indegree[x] == 0).map(|x| Reverse((poset.name(x), x))).collect();
    let mut order = Vec::with_capacity(poset.len());
    while let Some(Reverse((_, x))) = ready.pop() {
        order.push(x);
        for &y in poset.up_covers(x) {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(Reverse((poset.name(y), y)));
            }
        }
    }
    order
}

/// Every element exactly once, and each element after everything it covers.
pub fn is_linear_extension(poset: &Poset, order: &[usize]) -> bool {
    let mut position = vec![usize::MAX; poset.len()];
    for (k, &x) in order.iter().enumerate() {
        if x >= poset.len() || position[x] != usize::MAX {
            return false;
        }
        position[x] = k;
    }
    order.len() == poset.len()
        && (0..poset.len()).all(|x| poset.up_covers(x).iter().all(|&y| position[x] < position[y]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExtensions {
    pub extensions: Vec<Vec<usize>>,
    /// More extensions exist beyond the cap.
    pub truncated: bool,
}

/// All linear extensions, at most `cap` of them, in lexicographic order of ids.
pub fn all_linear_extensions(poset: &Poset, cap: usize) -> LinearExtensions {
    struct Search<'a> {
        poset: &'a Poset,
        indegree: Vec<usize>,
        prefix: Vec<usize>,
        out: Vec<Vec<usize>>,
        cap: usize,
        truncated: bool,
    }

    impl Search<'_> {
        fn run(&mut self) {
            if self.truncated {
                return;
            }
            if self.prefix.len() == self.poset.len() {
                if self.out.len() == self.cap {
                    self.truncated = true;
                } else {
                    self.out.push(self.prefix.clone());
                }
                return;
            }
            for x in 0..self.poset.len() {
                if self.indegree[x] != 0 {
                    continue;
                }
                self.indegree[x] = usize::MAX;
                for &y in self.poset.up_covers(x) {
                    self.indegree[y] -= 1;
                }
                self.prefix.push(x);
                self.run();
                self.prefix.pop();
                for &y in self.poset.up_covers(x) {
                    self.indegree[y] += 1;
                }
                self.indegree[x] = 0;
            }
        }
    }

    let mut search = Search {
        poset,
        indegree: (0..poset.len()).map(|x| poset.down_covers(x).len()).collect(),
        prefix: Vec::with_capacity(poset.len()),
        out: Vec::new(),
        cap,
        truncated: false,
    };
    search.run();
    LinearExtensions { extensions: search.out, truncated: search.truncated }
}
