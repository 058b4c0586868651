//! Balanced separators and the recursive separator-based decomposition.
//!
//! The builder witnesses the separators-to-treewidth direction at desk
//! scale: if the brute-force search finds, for every subproblem it
//! encounters, a separator within budget that splits both the subproblem
//! and its boundary, the resulting decomposition has width at most
//! `3 * budget + 1`. The search is exhaustive over subsets, smallest size
//! first and lexicographic within a size.

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use itertools::Itertools;

/// Instances above this size are refused; the subset search is exhaustive.
pub const DESK_CAP: usize = 18;

#[derive(Clone, Debug)]
pub struct SeparatorStats {
    pub budget: usize,
    pub width: usize,
    /// Guaranteed width bound for successful runs: `3 * budget + 1`.
    pub width_bound: usize,
    pub separators_tried: u64,
}

/// True iff every connected component of `g - s` has at most
/// `floor(2n/3)` vertices.
pub fn verify_balanced_separator(g: &Graph, s: &VertexSet) -> bool {
    let members: Vec<usize> = g.vertices().filter(|&v| !s.contains(v)).collect();
    let threshold = 2 * g.n() / 3;
    components_within(g, &members).iter().all(|c| c.len() <= threshold)
}

/// Connected components of the subgraph induced by `members`.
fn components_within(g: &Graph, members: &[usize]) -> Vec<Vec<usize>> {
    let mut in_set = vec![false; g.n()];
    for &v in members {
        in_set[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &s in members {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &v in g.neighbors(u) {
                if in_set[v] && !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

struct SepBuilder<'a> {
    g: &'a Graph,
    budget: usize,
    bags: Vec<Vec<usize>>,
    parents: Vec<Option<usize>>,
    tried: u64,
}

/// Recursive separator-based decomposition of `g`.
///
/// Fails with [`Error::SeparatorBudget`] naming the stuck vertex set if
/// some subproblem has no within-budget separator that makes progress.
pub fn separator_decomposition(
    g: &Graph,
    budget: usize,
) -> Result<(TreeDecomposition, SeparatorStats)> {
    if g.n() > DESK_CAP {
        return Err(Error::OverCap { n: g.n(), cap: DESK_CAP });
    }
    let mut b = SepBuilder { g, budget, bags: Vec::new(), parents: Vec::new(), tried: 0 };
    let all: Vec<usize> = g.vertices().collect();
    let root = b.recurse(&all, &[])?;
    if b.bags.is_empty() {
        b.bags.push(Vec::new());
        b.parents.push(None);
    }
    let td = TreeDecomposition::from_parents(g.n(), b.bags, b.parents, root)?;
    debug_assert!(td.validate(g).is_ok());
    let stats = SeparatorStats {
        budget,
        width: td.width(),
        width_bound: 3 * budget + 1,
        separators_tried: b.tried,
    };
    debug_assert!(stats.width <= stats.width_bound);
    Ok((td, stats))
}

impl SepBuilder<'_> {
    fn node(&mut self, bag: Vec<usize>, children: &[usize]) -> usize {
        self.bags.push(bag);
        self.parents.push(None);
        let id = self.bags.len() - 1;
        for &c in children {
            self.parents[c] = Some(id);
        }
        id
    }

    /// Decomposes `g[w]`, guaranteeing the root bag contains `boundary`.
    /// Invariant: `boundary.len() <= 2 * budget + 1`.
    fn recurse(&mut self, w: &[usize], boundary: &[usize]) -> Result<usize> {
        debug_assert!(boundary.iter().all(|b| w.contains(b)));
        if w.len() <= (self.budget + boundary.len()).max(1) {
            return Ok(self.node(w.to_vec(), &[]));
        }
        let size_cap = 2 * w.len() / 3;
        let boundary_cap = boundary.len().div_ceil(2);
        let interior = w.len() - boundary.len();
        for size in 0..=self.budget.min(w.len()) {
            'candidates: for sep in w.iter().copied().combinations(size) {
                self.tried += 1;
                let rest: Vec<usize> = w.iter().copied().filter(|v| !sep.contains(v)).collect();
                let comps = components_within(self.g, &rest);
                for c in &comps {
                    if c.len() > size_cap {
                        continue 'candidates;
                    }
                    if c.iter().filter(|v| boundary.contains(v)).count() > boundary_cap {
                        continue 'candidates;
                    }
                }
                // children; every subproblem must shrink in (|w|, interior)
                let mut subproblems = Vec::with_capacity(comps.len());
                for c in &comps {
                    let touching: Vec<usize> = sep
                        .iter()
                        .copied()
                        .filter(|&s| self.g.neighbors(s).iter().any(|v| c.binary_search(v).is_ok()))
                        .collect();
                    let mut child_boundary: Vec<usize> =
                        c.iter().copied().filter(|v| boundary.contains(v)).collect();
                    child_boundary.extend_from_slice(&touching);
                    child_boundary.sort_unstable();
                    let mut child_w = c.clone();
                    child_w.extend_from_slice(&touching);
                    child_w.sort_unstable();
                    let child_interior = child_w.len() - child_boundary.len();
                    if child_w.len() > w.len()
                        || (child_w.len() == w.len() && child_interior >= interior)
                    {
                        continue 'candidates;
                    }
                    subproblems.push((child_w, child_boundary));
                }
                let mut children = Vec::with_capacity(subproblems.len());
                for (child_w, child_boundary) in &subproblems {
                    children.push(self.recurse(child_w, child_boundary)?);
                }
                let mut bag: Vec<usize> = boundary.to_vec();
                bag.extend_from_slice(&sep);
                bag.sort_unstable();
                bag.dedup();
                return Ok(self.node(bag, &children));
            }
        }
        Err(Error::SeparatorBudget { budget: self.budget, stuck: w.to_vec() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, path, random};

    #[test]
    fn balanced_separator_checks() {
        let p5 = path(5);
        assert!(verify_balanced_separator(&p5, &VertexSet::new([2])));
        assert!(!verify_balanced_separator(&cycle(6), &VertexSet::empty()));
        let g = random(9, 0.5, 3);
        assert!(verify_balanced_separator(&g, &VertexSet::full(9)));
    }

    #[test]
    fn paths_split_with_budget_one() {
        for n in [5, 9, 14] {
            let g = path(n);
            let (td, stats) = separator_decomposition(&g, 1).unwrap();
            td.validate(&g).unwrap();
            assert!(td.width() <= 3, "width {} on P_{}", td.width(), n);
            assert!(stats.width <= stats.width_bound);
        }
    }

    #[test]
    fn k5_fails_under_budget_one() {
        let err = separator_decomposition(&complete(5), 1).unwrap_err();
        match err {
            Error::SeparatorBudget { budget: 1, stuck } => assert_eq!(stuck.len(), 5),
            other => panic!("expected budget failure, got {other}"),
        }
    }

    #[test]
    fn k5_succeeds_under_budget_two() {
        let g = complete(5);
        let (td, _) = separator_decomposition(&g, 2).unwrap();
        td.validate(&g).unwrap();
        assert!(td.width() <= 7);
    }

    #[test]
    fn edgeless_with_zero_budget() {
        let g = crate::graph::Graph::empty(6);
        let (td, stats) = separator_decomposition(&g, 0).unwrap();
        td.validate(&g).unwrap();
        assert_eq!(td.width(), 0);
        assert_eq!(stats.width_bound, 1);
    }

    #[test]
    fn random_sparse_graphs_within_bound() {
        for seed in 0..12u64 {
            let g = random(11, 0.18, seed);
            match separator_decomposition(&g, 2) {
                Ok((td, stats)) => {
                    td.validate(&g).unwrap();
                    assert!(td.width() <= stats.width_bound);
                }
                Err(Error::SeparatorBudget { .. }) => {}
                Err(other) => panic!("unexpected error {other}"),
            }
        }
    }

    #[test]
    fn refuses_big_instances() {
        let g = crate::graph::Graph::empty(DESK_CAP + 1);
        assert!(matches!(separator_decomposition(&g, 1), Err(Error::OverCap { .. })));
    }
}
