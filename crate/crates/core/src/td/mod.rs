//! Rooted tree decompositions and their nice normal form.
//!
//! A decomposition is a rooted bag tree satisfying the two standard
//! conditions: the nodes holding any fixed vertex form a nonempty
//! connected subtree (T1), and every edge lives inside some bag (T2).
//! Validation reports the first violated constraint instead of panicking,
//! so builders and parsers can surface precise diagnostics.

pub mod heuristic;
pub mod nice;
pub mod separator;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use std::fmt::Write as _;

/// Rooted tree decomposition: bags plus parent/child links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
    graph_n: usize,
}

/// Node kinds of a nice tree decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// A tree decomposition where every node is leaf/introduce/forget/join
/// and the root bag is empty.
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    td: TreeDecomposition,
    kinds: Vec<NodeKind>,
}

/// First violated decomposition constraint, with the offending witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotATree { msg: String },
    BagOutOfRange { node: usize, vertex: usize },
    VertexMissing { vertex: usize },
    VertexDisconnected { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    RootBagNotEmpty { root: usize },
    BadKind { node: usize, msg: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotATree { msg } => write!(f, "node links do not form a tree: {msg}"),
            Violation::BagOutOfRange { node, vertex } => {
                write!(f, "bag of node {node} contains out-of-range vertex {vertex}")
            }
            Violation::VertexMissing { vertex } => {
                write!(f, "vertex {vertex} appears in no bag (T1)")
            }
            Violation::VertexDisconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} are disconnected (T1)")
            }
            Violation::EdgeUncovered { u, v } => {
                write!(f, "no bag contains both endpoints of edge {u}-{v} (T2)")
            }
            Violation::RootBagNotEmpty { root } => write!(f, "root bag {root} is not empty"),
            Violation::BadKind { node, msg } => write!(f, "node {node}: {msg}"),
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Error {
        Error::BadDecomposition(v.to_string())
    }
}

impl TreeDecomposition {
    /// Assembles a decomposition from bags and parent links. `parent[root]`
    /// must be `None` and every other node must point to its parent.
    pub fn from_parents(
        graph_n: usize,
        mut bags: Vec<Vec<usize>>,
        parent: Vec<Option<usize>>,
        root: usize,
    ) -> Result<Self> {
        if bags.len() != parent.len() || bags.is_empty() || root >= bags.len() {
            return Err(Error::BadDecomposition(
                "bag and parent arrays must be nonempty and of equal length".into(),
            ));
        }
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        let mut children = vec![Vec::new(); bags.len()];
        for (node, p) in parent.iter().enumerate() {
            match p {
                Some(p) => children[*p].push(node),
                None if node == root => {}
                None => {
                    return Err(Error::BadDecomposition(format!(
                        "node {node} has no parent but is not the root"
                    )))
                }
            }
        }
        let td = TreeDecomposition { bags, parent, children, root, graph_n };
        if let Err(v) = td.check_tree() {
            return Err(v.into());
        }
        Ok(td)
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn graph_n(&self) -> usize {
        self.graph_n
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        &self.bags[node]
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    /// Width: largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Children-before-parents order, ending at the root.
    pub fn post_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            order.push(x);
            stack.extend_from_slice(&self.children[x]);
        }
        order.reverse();
        order
    }

    /// The component at `x`: vertices in bags of the subtree rooted at `x`
    /// that are absent from the bag of `x` itself.
    pub fn component(&self, x: usize) -> VertexSet {
        let mut below = vec![false; self.graph_n];
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &v in &self.bags[y] {
                below[v] = true;
            }
            stack.extend_from_slice(&self.children[y]);
        }
        for &v in &self.bags[x] {
            below[v] = false;
        }
        (0..self.graph_n).filter(|&v| below[v]).collect()
    }

    fn check_tree(&self) -> std::result::Result<(), Violation> {
        if self.parent[self.root].is_some() {
            return Err(Violation::NotATree { msg: "root has a parent".into() });
        }
        // reachability from the root covers every node exactly once
        let mut seen = vec![false; self.len()];
        let mut stack = vec![self.root];
        let mut count = 0;
        while let Some(x) = stack.pop() {
            if seen[x] {
                return Err(Violation::NotATree { msg: format!("node {x} reached twice") });
            }
            seen[x] = true;
            count += 1;
            for &c in &self.children[x] {
                if self.parent[c] != Some(x) {
                    return Err(Violation::NotATree {
                        msg: format!("child link {x} -> {c} without matching parent link"),
                    });
                }
                stack.push(c);
            }
        }
        if count != self.len() {
            return Err(Violation::NotATree {
                msg: format!("{} of {} nodes reachable from root", count, self.len()),
            });
        }
        Ok(())
    }

    /// Checks T1 and T2 against `g`; reports the first violation.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        self.check_tree()?;
        if g.n() != self.graph_n {
            return Err(Violation::NotATree {
                msg: format!("decomposition built for n={}, graph has n={}", self.graph_n, g.n()),
            });
        }
        for (node, bag) in self.bags.iter().enumerate() {
            if let Some(&v) = bag.iter().find(|&&v| v >= g.n()) {
                return Err(Violation::BagOutOfRange { node, vertex: v });
            }
        }
        // T1: nonempty connected occupancy per vertex
        let mut count = vec![0usize; g.n()];
        let mut boundary = vec![0usize; g.n()]; // nodes whose parent lacks v
        for (node, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                count[v] += 1;
                let parent_has = self
                    .parent[node]
                    .map(|p| self.bags[p].binary_search(&v).is_ok())
                    .unwrap_or(false);
                if !parent_has {
                    boundary[v] += 1;
                }
            }
        }
        for v in 0..g.n() {
            if count[v] == 0 {
                return Err(Violation::VertexMissing { vertex: v });
            }
            // occupancy is a connected subtree iff exactly one occupied
            // node has an unoccupied parent
            if boundary[v] != 1 {
                return Err(Violation::VertexDisconnected { vertex: v });
            }
        }
        // T2
        'edges: for (u, v) in g.edges() {
            for bag in &self.bags {
                if bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok() {
                    continue 'edges;
                }
            }
            return Err(Violation::EdgeUncovered { u, v });
        }
        Ok(())
    }

    /// PACE-style `.td` serialization, 1-based.
    pub fn write_td(&self) -> String {
        let mut out = String::new();
        writeln!(out, "s td {} {} {}", self.len(), self.width() + 1, self.graph_n).unwrap();
        for (node, bag) in self.bags.iter().enumerate() {
            write!(out, "b {}", node + 1).unwrap();
            for &v in bag {
                write!(out, " {}", v + 1).unwrap();
            }
            out.push('\n');
        }
        for node in 0..self.len() {
            if let Some(p) = self.parent[node] {
                let (a, b) = (p.min(node) + 1, p.max(node) + 1);
                writeln!(out, "{a} {b}").unwrap();
            }
        }
        out
    }

    /// Parses the `.td` format written by [`write_td`]; the tree is rooted
    /// at bag 1.
    pub fn parse_td<R: std::io::BufRead>(reader: R) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None; // (#bags, n)
        let mut bags: Vec<Vec<usize>> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut line_no = 0usize;
        for line in reader.lines() {
            line_no += 1;
            let line = line?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            let mut tok = t.split_whitespace();
            match tok.next() {
                Some("s") => {
                    if tok.next() != Some("td") {
                        return Err(Error::Parse { line: line_no, msg: "expected `s td`".into() });
                    }
                    let nums: Vec<usize> = tok.map(|x| x.parse().unwrap_or(usize::MAX)).collect();
                    if nums.len() != 3 || nums.contains(&usize::MAX) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "expected `s td <bags> <width+1> <n>`".into(),
                        });
                    }
                    header = Some((nums[0], nums[2]));
                    bags = vec![Vec::new(); nums[0]];
                }
                Some("b") => {
                    if header.is_none() {
                        return Err(Error::Parse { line: line_no, msg: "bag before header".into() });
                    }
                    let id: usize = tok
                        .next()
                        .and_then(|x| x.parse().ok())
                        .filter(|&id| id >= 1 && id <= bags.len())
                        .ok_or(Error::Parse { line: line_no, msg: "bad bag id".into() })?;
                    for v in tok {
                        let v: usize = v
                            .parse()
                            .ok()
                            .filter(|&v| v >= 1)
                            .ok_or(Error::Parse { line: line_no, msg: "bad bag vertex".into() })?;
                        bags[id - 1].push(v - 1);
                    }
                }
                Some(a) => {
                    let a: usize = a
                        .parse()
                        .ok()
                        .ok_or(Error::Parse { line: line_no, msg: "bad tree edge".into() })?;
                    let b: usize = tok
                        .next()
                        .and_then(|x| x.parse().ok())
                        .ok_or(Error::Parse { line: line_no, msg: "bad tree edge".into() })?;
                    edges.push((a - 1, b - 1));
                }
                None => unreachable!(),
            }
        }
        let (nbags, n) = header.ok_or(Error::Parse { line: line_no, msg: "missing header".into() })?;
        // root at bag 0 and orient edges away from it
        let mut adj = vec![Vec::new(); nbags];
        for &(a, b) in &edges {
            if a >= nbags || b >= nbags {
                return Err(Error::Parse { line: line_no, msg: "tree edge out of range".into() });
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; nbags];
        let mut seen = vec![false; nbags];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    stack.push(y);
                }
            }
        }
        TreeDecomposition::from_parents(n, bags, parent, 0)
    }
}

impl NiceTreeDecomposition {
    pub(crate) fn from_parts(td: TreeDecomposition, kinds: Vec<NodeKind>) -> Self {
        NiceTreeDecomposition { td, kinds }
    }

    pub fn as_tree(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn kind(&self, node: usize) -> NodeKind {
        self.kinds[node]
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        self.td.bag(node)
    }

    pub fn root(&self) -> usize {
        self.td.root()
    }

    pub fn len(&self) -> usize {
        self.td.len()
    }

    pub fn is_empty(&self) -> bool {
        self.td.is_empty()
    }

    pub fn width(&self) -> usize {
        self.td.width()
    }

    pub fn children(&self, node: usize) -> &[usize] {
        self.td.children(node)
    }

    pub fn component(&self, node: usize) -> VertexSet {
        self.td.component(node)
    }

    /// Size of the component at each node, in one bottom-up pass: a vertex
    /// belongs to the component at `x` exactly when its unique forget node
    /// lies in the subtree of `x`.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.len()];
        for x in self.td.post_order() {
            let own = matches!(self.kinds[x], NodeKind::Forget(_)) as usize;
            sizes[x] = own + self.td.children(x).iter().map(|&c| sizes[c]).sum::<usize>();
        }
        sizes
    }

    /// Validates T1/T2 plus the nice-form constraints.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        self.td.validate(g)?;
        let root = self.td.root();
        if !self.td.bag(root).is_empty() {
            return Err(Violation::RootBagNotEmpty { root });
        }
        for node in 0..self.len() {
            let bag = self.td.bag(node);
            let children = self.td.children(node);
            let fail = |msg: String| Err(Violation::BadKind { node, msg });
            match self.kinds[node] {
                NodeKind::Leaf => {
                    if !children.is_empty() {
                        return fail("leaf with children".into());
                    }
                    if !bag.is_empty() {
                        return fail("leaf bag not empty".into());
                    }
                }
                NodeKind::Introduce(u) => {
                    if children.len() != 1 {
                        return fail("introduce needs exactly one child".into());
                    }
                    let child = self.td.bag(children[0]);
                    if child.binary_search(&u).is_ok() || bag.binary_search(&u).is_err() {
                        return fail(format!("introduce({u}) does not add {u}"));
                    }
                    let mut expect = child.to_vec();
                    expect.push(u);
                    expect.sort_unstable();
                    if expect != bag {
                        return fail(format!("introduce({u}) bag mismatch"));
                    }
                }
                NodeKind::Forget(u) => {
                    if children.len() != 1 {
                        return fail("forget needs exactly one child".into());
                    }
                    let child = self.td.bag(children[0]);
                    if child.binary_search(&u).is_err() || bag.binary_search(&u).is_ok() {
                        return fail(format!("forget({u}) does not drop {u}"));
                    }
                    let expect: Vec<usize> = child.iter().copied().filter(|&v| v != u).collect();
                    if expect != bag {
                        return fail(format!("forget({u}) bag mismatch"));
                    }
                }
                NodeKind::Join => {
                    if children.len() != 2 {
                        return fail("join needs exactly two children".into());
                    }
                    for &c in children {
                        if self.td.bag(c) != bag {
                            return fail("join child bag differs from parent".into());
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle};

    fn single_bag(g: &Graph) -> TreeDecomposition {
        TreeDecomposition::from_parents(g.n(), vec![(0..g.n()).collect()], vec![None], 0).unwrap()
    }

    #[test]
    fn single_bag_is_valid() {
        let g = complete(4);
        let td = single_bag(&g);
        td.validate(&g).unwrap();
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn t2_violation_names_the_edge() {
        let g = cycle(3);
        let td = TreeDecomposition::from_parents(
            3,
            vec![vec![0, 1], vec![1, 2]],
            vec![None, Some(0)],
            0,
        )
        .unwrap();
        assert_eq!(td.validate(&g), Err(Violation::EdgeUncovered { u: 0, v: 2 }));
    }

    #[test]
    fn t1_violation_for_disconnected_occupancy() {
        let g = crate::graph::generate::path(3);
        let td = TreeDecomposition::from_parents(
            3,
            vec![vec![0, 1], vec![1, 2], vec![0]],
            vec![None, Some(0), Some(1)],
            0,
        )
        .unwrap();
        assert_eq!(td.validate(&g), Err(Violation::VertexDisconnected { vertex: 0 }));
    }

    #[test]
    fn missing_vertex_is_reported() {
        let g = Graph::empty(2);
        let td = TreeDecomposition::from_parents(2, vec![vec![0]], vec![None], 0).unwrap();
        assert_eq!(td.validate(&g), Err(Violation::VertexMissing { vertex: 1 }));
    }

    #[test]
    fn component_at_root_with_empty_bag_is_everything() {
        let g = cycle(4);
        let td = TreeDecomposition::from_parents(
            4,
            vec![vec![], vec![0, 1, 2, 3]],
            vec![None, Some(0)],
            0,
        )
        .unwrap();
        assert_eq!(td.component(0), VertexSet::full(4));
        assert_eq!(td.component(1), VertexSet::empty());
    }

    #[test]
    fn td_round_trip() {
        let g = cycle(5);
        let td = crate::td::heuristic::decompose(&g, crate::td::heuristic::Strategy::MinFill);
        let text = td.write_td();
        let back = TreeDecomposition::parse_td(std::io::Cursor::new(&text)).unwrap();
        back.validate(&g).unwrap();
        assert_eq!(back.width(), td.width());
        let mut bags_a = td.bags.clone();
        let mut bags_b = back.bags.clone();
        bags_a.sort();
        bags_b.sort();
        assert_eq!(bags_a, bags_b);
    }
}
