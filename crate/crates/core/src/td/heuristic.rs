//! Elimination-ordering heuristics for building tree decompositions.
//!
//! No width guarantee; solver correctness never depends on the width, only
//! running time does. Output always passes [`TreeDecomposition::validate`].

use super::TreeDecomposition;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Eliminate the vertex whose neighborhood needs the fewest fill edges.
    MinFill,
    /// Eliminate a vertex of minimum current degree.
    MinDegree,
}

/// Decomposition from the elimination ordering chosen by `strategy`.
/// Ties break toward the lowest vertex id, so the result is deterministic.
pub fn decompose(g: &Graph, strategy: Strategy) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::from_parents(0, vec![Vec::new()], vec![None], 0).unwrap();
    }
    // working graph as adjacency matrix + degrees
    let mut adj: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            let mut row = vec![false; n];
            for &v in g.neighbors(u) {
                row[v] = true;
            }
            row
        })
        .collect();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();

    let fill_cost = |adj: &[Vec<bool>], alive: &[bool], u: usize| -> usize {
        let nb: Vec<usize> = (0..n).filter(|&v| alive[v] && adj[u][v]).collect();
        let mut missing = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                missing += !adj[a][b] as usize;
            }
        }
        missing
    };

    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    let mut elim_pos = vec![usize::MAX; n];
    for step in 0..n {
        let u = (0..n)
            .filter(|&u| alive[u])
            .min_by_key(|&u| match strategy {
                Strategy::MinFill => (fill_cost(&adj, &alive, u), u),
                Strategy::MinDegree => (deg[u], u),
            })
            .expect("some vertex still alive");
        let mut bag: Vec<usize> = (0..n).filter(|&v| alive[v] && adj[u][v]).collect();
        // make the neighborhood a clique, then drop u
        for (i, &a) in bag.iter().enumerate() {
            for &b in &bag[i + 1..] {
                if !adj[a][b] {
                    adj[a][b] = true;
                    adj[b][a] = true;
                    deg[a] += 1;
                    deg[b] += 1;
                }
            }
        }
        for &v in &bag {
            deg[v] -= 1;
        }
        alive[u] = false;
        bag.push(u);
        bag.sort_unstable();
        bags.push(bag);
        elim_pos[u] = step;
        order.push(u);
    }

    // node i hangs below the node of the earliest-eliminated remaining
    // bag member; a bare bag hangs below the next node
    let last = n - 1;
    let mut parent = vec![None; n];
    for (i, bag) in bags.iter().enumerate() {
        if i == last {
            break;
        }
        let next = bag
            .iter()
            .map(|&v| elim_pos[v])
            .filter(|&p| p > i)
            .min()
            .unwrap_or(i + 1);
        parent[i] = Some(next);
    }
    TreeDecomposition::from_parents(n, bags, parent, last).unwrap()
}

/// Runs both strategies and keeps the narrower decomposition (min-fill on
/// ties).
pub fn decompose_best(g: &Graph) -> TreeDecomposition {
    let fill = decompose(g, Strategy::MinFill);
    let degree = decompose(g, Strategy::MinDegree);
    if degree.width() < fill.width() {
        degree
    } else {
        fill
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, grid, random, star};
    use crate::graph::Graph;

    #[test]
    fn trees_get_width_one() {
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        for s in [Strategy::MinFill, Strategy::MinDegree] {
            let td = decompose(&tree, s);
            td.validate(&tree).unwrap();
            assert_eq!(td.width(), 1);
        }
        let st = star(5);
        assert_eq!(decompose(&st, Strategy::MinFill).width(), 1);
    }

    #[test]
    fn cycles_get_width_two() {
        for n in 3..9 {
            let g = cycle(n);
            let td = decompose(&g, Strategy::MinFill);
            td.validate(&g).unwrap();
            assert_eq!(td.width(), 2);
            assert_eq!(td.width(), crate::oracle::exact_treewidth(&g).unwrap());
        }
    }

    #[test]
    fn cliques_force_full_bags() {
        for n in 1..7 {
            let g = complete(n);
            let td = decompose(&g, Strategy::MinDegree);
            td.validate(&g).unwrap();
            assert_eq!(td.width(), n - 1);
        }
    }

    #[test]
    fn grid_and_randoms_validate() {
        let g = grid(3, 4);
        decompose(&g, Strategy::MinFill).validate(&g).unwrap();
        for seed in 0..40 {
            let g = random(11, 0.25 + 0.05 * (seed % 4) as f64, seed);
            for s in [Strategy::MinFill, Strategy::MinDegree] {
                decompose(&g, s).validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn handles_empty_and_isolated() {
        let g = Graph::empty(5);
        let td = decompose_best(&g);
        td.validate(&g).unwrap();
        assert_eq!(td.width(), 0);
        let g0 = Graph::empty(0);
        decompose_best(&g0).validate(&g0).unwrap();
    }
}
