//! Dynamic programming over nice tree decompositions.
//!
//! Two solvers live here, dispatched by target class:
//!
//! * [`degenerate::solve_degenerate`] — states `(X, sigma, f)` where `X`
//!   is the chosen part of the bag, `sigma` a linear order of `X`, and
//!   `f` budgets how many smaller solution neighbors each member of `X`
//!   may still receive from the forgotten region. Handles edgeless
//!   (d = 0), forest (d = 1), and d-degenerate targets.
//! * [`degree::solve_degree`] — states `(X, g)` where `g` counts the
//!   already-forgotten solution neighbors of each chosen bag vertex.
//!
//! Both run demand-driven by default: only states actually reachable from
//! the root query are evaluated, introduce nodes are resolved by key
//! projection without materializing tables, and nodes whose component is
//! empty answer constant zero. The alternative full engine materializes
//! every table and optionally uses the literal inequality transition
//! bounds; it exists as the reference the optimized path is tested
//! against, and for table dumps.

pub mod degenerate;
pub mod degree;

use crate::class::TargetClass;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::td::NiceTreeDecomposition;

/// Largest bag a packed DP key can describe.
pub const MAX_BAG: usize = 16;

/// Default cap on accepted decomposition widths; tables grow like
/// `2^k * k! * (d+1)^k` in the bag size `k`.
pub const DEFAULT_WIDTH_CAP: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Refuse decompositions wider than this.
    pub width_cap: usize,
    /// Materialize complete tables bottom-up instead of solving on demand.
    pub full_tables: bool,
    /// In the full engine, enumerate the literal `<=` transition bounds
    /// instead of only their equality cases.
    pub literal_transitions: bool,
    /// In the full engine, drop keys dominated by a pointwise-smaller key
    /// of equal value (lookups fall back to the dominating key).
    pub prune_dominated: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            width_cap: DEFAULT_WIDTH_CAP,
            full_tables: false,
            literal_transitions: false,
            prune_dominated: false,
        }
    }
}

/// A vertex set together with its size; producers re-check the class
/// membership certificate before returning one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub vertices: VertexSet,
    pub size: usize,
}

impl Solution {
    fn checked(vertices: VertexSet, class: TargetClass, g: &Graph) -> Result<Self> {
        let (induced, _) = g.induced_subgraph(&vertices)?;
        if !class.accepts(&induced) {
            return Err(Error::Invalid(format!(
                "internal: witness of size {} fails the {class} recognizer",
                vertices.len()
            )));
        }
        Ok(Solution { size: vertices.len(), vertices })
    }
}

/// Solves Max Induced C-Subgraph on `g` using the given decomposition.
pub fn solve(
    class: TargetClass,
    g: &Graph,
    nice: &NiceTreeDecomposition,
    opts: SolveOptions,
) -> Result<Solution> {
    let witness = match class {
        TargetClass::Edgeless => degenerate::solve_degenerate(g, nice, 0, opts)?,
        TargetClass::Forest => degenerate::solve_degenerate(g, nice, 1, opts)?,
        TargetClass::Degenerate(d) => degenerate::solve_degenerate(g, nice, d, opts)?,
        TargetClass::MaxDegree(d) => degree::solve_degree(g, nice, d, opts)?,
    };
    Solution::checked(witness, class, g)
}

fn prepare(g: &Graph, nice: &NiceTreeDecomposition, opts: &SolveOptions) -> Result<()> {
    nice.validate(g).map_err(Error::from)?;
    let width = nice.width();
    if width > opts.width_cap {
        return Err(Error::WidthCapExceeded { width, cap: opts.width_cap });
    }
    if width + 1 > MAX_BAG {
        return Err(Error::Invalid(format!(
            "bag size {} exceeds the packed-key limit {MAX_BAG}",
            width + 1
        )));
    }
    if opts.literal_transitions && !opts.full_tables {
        return Err(Error::Invalid(
            "literal transition bounds require the full-table engine".into(),
        ));
    }
    Ok(())
}

/// Renders every table of the full engine in the line-oriented debug
/// format `node <id> kind <kind> key <X|sigma|f> phi <v>`, for
/// differential testing between implementations.
pub fn dump_tables(
    class: TargetClass,
    g: &Graph,
    nice: &NiceTreeDecomposition,
    opts: SolveOptions,
) -> Result<String> {
    let opts = SolveOptions { full_tables: true, ..opts };
    match class {
        TargetClass::MaxDegree(d) => {
            let tables = degree::FullTables::build(g, nice, d, opts)?;
            Ok(tables.dump(nice))
        }
        _ => {
            let d = class.parameter();
            let tables = degenerate::FullTables::build(g, nice, d, opts)?;
            Ok(tables.dump(nice))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, grid, petersen};
    use crate::td::{heuristic, nice::make_nice};

    fn solve_with(class: TargetClass, g: &Graph) -> Solution {
        let td = heuristic::decompose_best(g);
        let nice = make_nice(&td, g).unwrap();
        solve(class, g, &nice, SolveOptions::default()).unwrap()
    }

    #[test]
    fn dispatch_goldens() {
        assert_eq!(solve_with(TargetClass::Forest, &cycle(5)).size, 4);
        assert_eq!(solve_with(TargetClass::Edgeless, &complete(6)).size, 1);
        assert_eq!(solve_with(TargetClass::Degenerate(1), &complete(4)).size, 2);
        assert_eq!(solve_with(TargetClass::Degenerate(2), &complete(5)).size, 3);
        assert_eq!(solve_with(TargetClass::MaxDegree(1), &cycle(6)).size, 4);
        assert_eq!(solve_with(TargetClass::Degenerate(1), &petersen()).size, 7);
    }

    #[test]
    fn forest_on_grid_matches_oracle() {
        let g = grid(3, 3);
        let expect = crate::oracle::brute_force_max_induced(&g, TargetClass::Forest).unwrap();
        assert_eq!(solve_with(TargetClass::Forest, &g).size, expect.size);
    }

    #[test]
    fn width_cap_refusal() {
        let g = complete(8);
        let td = heuristic::decompose_best(&g);
        let nice = make_nice(&td, &g).unwrap();
        let opts = SolveOptions { width_cap: 5, ..SolveOptions::default() };
        assert!(matches!(
            solve(TargetClass::Forest, &g, &nice, opts),
            Err(Error::WidthCapExceeded { width: 7, cap: 5 })
        ));
    }

    #[test]
    fn decomposition_graph_mismatch_is_rejected() {
        let g = cycle(5);
        let other = cycle(6);
        let td = heuristic::decompose_best(&other);
        let nice = make_nice(&td, &other).unwrap();
        assert!(solve(TargetClass::Forest, &g, &nice, SolveOptions::default()).is_err());
    }
}
