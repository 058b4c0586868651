//! Normalization of a rooted tree decomposition into nice form.
//!
//! Multi-child nodes become balanced binary join splits; between a node
//! and its child the bags are bridged by a forget chain followed by an
//! introduce chain, both in ascending vertex order; the root is extended
//! by forgets until its bag is empty. Width never increases.

use super::{NiceTreeDecomposition, NodeKind, TreeDecomposition};
use crate::error::Result;
use crate::graph::Graph;

struct Builder {
    bags: Vec<Vec<usize>>,
    kinds: Vec<NodeKind>,
    children: Vec<Vec<usize>>,
}

impl Builder {
    fn push(&mut self, bag: Vec<usize>, kind: NodeKind, children: Vec<usize>) -> usize {
        debug_assert!(bag.windows(2).all(|w| w[0] < w[1]));
        self.bags.push(bag);
        self.kinds.push(kind);
        self.children.push(children);
        self.bags.len() - 1
    }

    /// Chain of forgets then introduces turning `from`'s bag into `target`.
    fn bridge(&mut self, mut node: usize, target: &[usize]) -> usize {
        let mut bag = self.bags[node].clone();
        let drop: Vec<usize> = bag.iter().copied().filter(|v| !target.contains(v)).collect();
        for u in drop {
            bag.retain(|&v| v != u);
            node = self.push(bag.clone(), NodeKind::Forget(u), vec![node]);
        }
        let add: Vec<usize> = target.iter().copied().filter(|v| !bag.contains(v)).collect();
        for u in add {
            let pos = bag.binary_search(&u).unwrap_err();
            bag.insert(pos, u);
            node = self.push(bag.clone(), NodeKind::Introduce(u), vec![node]);
        }
        node
    }

    /// Leaf followed by introduces building up `target`.
    fn grow_from_leaf(&mut self, target: &[usize]) -> usize {
        let node = self.push(Vec::new(), NodeKind::Leaf, Vec::new());
        self.bridge(node, target)
    }

    /// Balanced binary join over nodes that already carry equal bags.
    fn join_all(&mut self, tops: &[usize], bag: &[usize]) -> usize {
        match tops {
            [single] => *single,
            _ => {
                let (left, right) = tops.split_at(tops.len() / 2);
                let l = self.join_all(left, bag);
                let r = self.join_all(right, bag);
                self.push(bag.to_vec(), NodeKind::Join, vec![l, r])
            }
        }
    }
}

/// Converts `td` into a nice tree decomposition of the same graph and the
/// same width. Fails if `td` itself does not validate against `g`.
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition> {
    td.validate(g).map_err(crate::error::Error::from)?;
    let mut b = Builder { bags: Vec::new(), kinds: Vec::new(), children: Vec::new() };

    // bottom-up over the original tree; tops[x] realizes bag(x)
    let mut tops = vec![usize::MAX; td.len()];
    for x in td.post_order() {
        let bag = td.bag(x);
        let kids = td.children(x);
        tops[x] = if kids.is_empty() {
            b.grow_from_leaf(bag)
        } else {
            let bridged: Vec<usize> = kids.iter().map(|&c| b.bridge(tops[c], bag)).collect();
            b.join_all(&bridged, bag)
        };
    }
    let top = b.bridge(tops[td.root()], &[]);

    let mut parent = vec![None; b.bags.len()];
    for (node, children) in b.children.iter().enumerate() {
        for &c in children {
            parent[c] = Some(node);
        }
    }
    let tree = TreeDecomposition::from_parents(g.n(), b.bags, parent, top)?;
    let nice = NiceTreeDecomposition::from_parts(tree, b.kinds);
    debug_assert!(nice.validate(g).is_ok());
    Ok(nice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, grid, random};
    use crate::td::heuristic::{decompose, decompose_best, Strategy};

    #[test]
    fn single_bag_triangle_becomes_chain() {
        let g = complete(3);
        let td =
            TreeDecomposition::from_parents(3, vec![vec![0, 1, 2]], vec![None], 0).unwrap();
        let nice = make_nice(&td, &g).unwrap();
        nice.validate(&g).unwrap();
        assert_eq!(nice.width(), 2);
        let introduces =
            (0..nice.len()).filter(|&x| matches!(nice.kind(x), NodeKind::Introduce(_))).count();
        let forgets =
            (0..nice.len()).filter(|&x| matches!(nice.kind(x), NodeKind::Forget(_))).count();
        assert_eq!((introduces, forgets), (3, 3));
        assert!(nice.bag(nice.root()).is_empty());
    }

    #[test]
    fn grid_min_fill_stays_valid_and_width_equal() {
        let g = grid(3, 3);
        let td = decompose(&g, Strategy::MinFill);
        let nice = make_nice(&td, &g).unwrap();
        nice.validate(&g).unwrap();
        assert_eq!(nice.width(), td.width());
    }

    #[test]
    fn idempotent_on_already_nice_input() {
        let g = cycle(6);
        let td = decompose_best(&g);
        let nice = make_nice(&td, &g).unwrap();
        let again = make_nice(nice.as_tree(), &g).unwrap();
        again.validate(&g).unwrap();
        assert_eq!(again.width(), nice.width());
    }

    #[test]
    fn never_widens_and_stays_small_on_randoms() {
        for seed in 0..60u64 {
            let g = random(10, 0.2 + (seed % 5) as f64 * 0.15, seed);
            let td = decompose_best(&g);
            let nice = make_nice(&td, &g).unwrap();
            nice.validate(&g).unwrap();
            assert!(nice.width() <= td.width());
            // documented size constant: 4 * (width + 2) * (nodes + n + 1)
            let bound = 4 * (td.width() + 2) * (td.len() + g.n() + 1);
            assert!(nice.len() <= bound, "nice has {} nodes, bound {}", nice.len(), bound);
        }
    }

    #[test]
    fn empty_graph() {
        let g = crate::graph::Graph::empty(0);
        let td = decompose_best(&g);
        let nice = make_nice(&td, &g).unwrap();
        nice.validate(&g).unwrap();
    }
}
