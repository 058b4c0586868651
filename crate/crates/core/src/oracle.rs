//! Brute-force ground truth for the solvers and for the reduction
//! properties. Everything here is exhaustive and deliberately independent
//! of the dynamic-programming code paths it is used to check.

use crate::class::TargetClass;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use itertools::Itertools;

/// Default size cap for the exhaustive searches.
pub const DEFAULT_CAP: usize = 20;

/// Cap for the exact treewidth computation.
pub const TREEWIDTH_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub size: usize,
    pub witness: VertexSet,
    pub subsets_examined: u64,
}

/// Exact maximum induced subgraph in `class`, by exhaustive enumeration.
///
/// Subsets are tried by descending size and lexicographically within a
/// size, so the first feasible subset found is a maximum one and the
/// returned witness is deterministic.
pub fn brute_force_max_induced(g: &Graph, class: TargetClass) -> Result<OracleResult> {
    brute_force_max_induced_capped(g, class, DEFAULT_CAP)
}

/// Same as [`brute_force_max_induced`] with an explicit size cap. Useful
/// for reduction tests on subdivided instances, where the vertex count is
/// large but the search stops after few sizes.
pub fn brute_force_max_induced_capped(
    g: &Graph,
    class: TargetClass,
    cap: usize,
) -> Result<OracleResult> {
    if g.n() > cap {
        return Err(Error::OverCap { n: g.n(), cap });
    }
    let n = g.n();
    let mut in_set = vec![false; n];
    let mut examined = 0u64;
    for size in (0..=n).rev() {
        for members in (0..n).combinations(size) {
            examined += 1;
            for &v in &members {
                in_set[v] = true;
            }
            let ok = class.accepts_masked(g, &in_set, &members);
            for &v in &members {
                in_set[v] = false;
            }
            if ok {
                return Ok(OracleResult {
                    size,
                    witness: VertexSet::new(members),
                    subsets_examined: examined,
                });
            }
        }
    }
    unreachable!("the empty subset is accepted by every class");
}

/// True iff `g` has a Hamiltonian path. Exhaustive DFS with a
/// connectivity prune.
pub fn hamiltonian_path_exists(g: &Graph) -> Result<bool> {
    if g.n() > DEFAULT_CAP {
        return Err(Error::OverCap { n: g.n(), cap: DEFAULT_CAP });
    }
    if g.n() <= 1 {
        return Ok(true);
    }
    if g.components().len() > 1 {
        return Ok(false);
    }
    let mut visited = vec![false; g.n()];
    for s in g.vertices() {
        visited[s] = true;
        if ham_dfs(g, s, 1, &mut visited) {
            return Ok(true);
        }
        visited[s] = false;
    }
    Ok(false)
}

fn ham_dfs(g: &Graph, u: usize, placed: usize, visited: &mut [bool]) -> bool {
    if placed == g.n() {
        return true;
    }
    for &v in g.neighbors(u) {
        if !visited[v] {
            visited[v] = true;
            if ham_dfs(g, v, placed + 1, visited) {
                return true;
            }
            visited[v] = false;
        }
    }
    false
}

/// Exact treewidth via dynamic programming over elimination prefixes.
///
/// `f[S]` is the best achievable maximum elimination degree when the
/// vertices of `S` are eliminated first; `q(S, v)` counts the vertices
/// outside `S + v` that `v` reaches through `S`.
pub fn exact_treewidth(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > TREEWIDTH_CAP {
        return Err(Error::OverCap { n, cap: TREEWIDTH_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    let full = (1usize << n) - 1;
    let mut f = vec![0u8; full + 1];
    for set in 1..=full {
        let mut best = u8::MAX;
        for v in 0..n {
            if set >> v & 1 == 0 {
                continue;
            }
            let rest = set & !(1 << v);
            let cand = f[rest].max(eliminate_degree(g, rest, v));
            best = best.min(cand);
        }
        f[set] = best;
    }
    Ok(f[full] as usize)
}

fn eliminate_degree(g: &Graph, through: usize, v: usize) -> u8 {
    // vertices outside `through + v` adjacent to v or reachable from v
    // via vertices of `through`
    let mut seen = 1usize << v;
    let mut stack = vec![v];
    let mut count = 0u8;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if seen >> w & 1 == 1 {
                continue;
            }
            seen |= 1 << w;
            if through >> w & 1 == 1 {
                stack.push(w);
            } else {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, grid, path, petersen, random, star};

    fn mif(g: &Graph) -> usize {
        brute_force_max_induced(g, TargetClass::Forest).unwrap().size
    }

    #[test]
    fn brute_goldens() {
        assert_eq!(mif(&cycle(5)), 4);
        for n in 1..6 {
            assert_eq!(
                brute_force_max_induced(&complete(n), TargetClass::Edgeless).unwrap().size,
                1
            );
        }
        assert_eq!(mif(&petersen()), 7);
        assert_eq!(
            brute_force_max_induced(&petersen(), TargetClass::Degenerate(1)).unwrap().size,
            7
        );
    }

    #[test]
    fn witness_is_feasible_and_deterministic() {
        let g = random(10, 0.5, 21);
        let r1 = brute_force_max_induced(&g, TargetClass::MaxDegree(1)).unwrap();
        let r2 = brute_force_max_induced(&g, TargetClass::MaxDegree(1)).unwrap();
        assert_eq!(r1.witness, r2.witness);
        assert_eq!(r1.size, r1.witness.len());
        let (sub, _) = g.induced_subgraph(&r1.witness).unwrap();
        assert!(TargetClass::MaxDegree(1).accepts(&sub));
    }

    #[test]
    fn refuses_over_cap() {
        let g = Graph::empty(DEFAULT_CAP + 1);
        assert!(matches!(
            brute_force_max_induced(&g, TargetClass::Forest),
            Err(Error::OverCap { .. })
        ));
    }

    #[test]
    fn hamiltonian_goldens() {
        assert!(hamiltonian_path_exists(&path(7)).unwrap());
        assert!(hamiltonian_path_exists(&cycle(6)).unwrap());
        assert!(!hamiltonian_path_exists(&star(3)).unwrap());
        assert!(hamiltonian_path_exists(&petersen()).unwrap());
        assert!(!hamiltonian_path_exists(&Graph::from_edges(3, [(0, 1)]).unwrap()).unwrap());
    }

    #[test]
    fn treewidth_goldens() {
        assert_eq!(exact_treewidth(&path(8)).unwrap(), 1);
        for n in 3..9 {
            assert_eq!(exact_treewidth(&cycle(n)).unwrap(), 2);
        }
        assert_eq!(exact_treewidth(&complete(4)).unwrap(), 3);
        assert_eq!(exact_treewidth(&grid(3, 3)).unwrap(), 3);
        assert_eq!(exact_treewidth(&petersen()).unwrap(), 4);
        assert_eq!(exact_treewidth(&Graph::empty(6)).unwrap(), 0);
    }
}
