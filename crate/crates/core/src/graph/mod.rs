//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! This is the universe every solver in the crate works on: no self-loops,
//! no parallel edges, adjacency kept sorted. Graphs are immutable once
//! built (construction goes through [`GraphBuilder`] or the convenience
//! constructors) and therefore safe to share across worker threads.

pub mod generate;
pub mod io;
pub mod transform;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    bits: Vec<Vec<u64>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m(), self.edges())
    }
}

impl Graph {
    /// Empty (edgeless) graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            bits: vec![vec![0u64; n.div_ceil(WORD)]; n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `uv`; a no-op if it is already present.
    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for &w in &[u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Ok(());
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.bits[u][v / WORD] |= 1 << (v % WORD);
        self.bits[v][u / WORD] |= 1 << (u % WORD);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Checks the representation invariants: sorted symmetric adjacency,
    /// no loops or duplicates, cached `m` consistent.
    pub fn check_invariants(&self) -> Result<()> {
        let mut half_degrees = 0usize;
        for u in self.vertices() {
            let row = &self.adj[u];
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invalid(format!("adjacency of {u} not sorted/unique")));
            }
            for &v in row {
                if v >= self.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
                }
                if v == u {
                    return Err(Error::Invalid(format!("self-loop at vertex {u}")));
                }
                if !self.adj[v].contains(&u) {
                    return Err(Error::Invalid(format!("edge {u}-{v} not symmetric")));
                }
                if !self.has_edge(u, v) {
                    return Err(Error::Invalid(format!("bitset misses edge {u}-{v}")));
                }
            }
            half_degrees += row.len();
        }
        if half_degrees != 2 * self.m {
            return Err(Error::Invalid(format!(
                "edge count cache {} does not match degree sum {}",
                self.m, half_degrees
            )));
        }
        Ok(())
    }

    /// Induced subgraph on `w`, plus the map from new ids to original ids.
    ///
    /// Vertices keep their relative order: new id `i` is `map[i]`.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        w.check_range(self.n())?;
        let map: Vec<usize> = w.iter().collect();
        let mut inv = vec![usize::MAX; self.n()];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut g = Graph::empty(map.len());
        for (new_u, &old_u) in map.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if inv[old_v] != usize::MAX && old_u < old_v {
                    g.add_edge(new_u, inv[old_v])?;
                }
            }
        }
        Ok((g, map))
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
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

    /// True if the graph has no cycle.
    pub fn is_acyclic(&self) -> bool {
        // forest <=> m = n - #components
        self.m + self.components().len() == self.n()
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.vertices() {
            // BFS from s; an edge closing two BFS branches gives a cycle
            // through s of length dist(u) + dist(v) + 1.
            let mut dist = vec![usize::MAX; self.n()];
            let mut parent = vec![usize::MAX; self.n()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Degeneracy and a witnessing elimination ordering.
    ///
    /// Repeatedly removes a vertex of minimum current degree (lowest id on
    /// ties); the degeneracy is the largest degree seen at removal time.
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|u| self.degree(u)).collect();
        let mut alive = vec![true; n];
        let mut order = Vec::with_capacity(n);
        let mut d = 0;
        for _ in 0..n {
            let u = (0..n)
                .filter(|&u| alive[u])
                .min_by_key(|&u| (deg[u], u))
                .expect("vertex left to remove");
            d = d.max(deg[u]);
            alive[u] = false;
            order.push(u);
            for &v in &self.adj[u] {
                if alive[v] {
                    deg[v] -= 1;
                }
            }
        }
        (d, order)
    }

    /// True if the graph contains an induced path on `t` vertices.
    ///
    /// Pruned DFS over induced paths; exponential in the worst case, meant
    /// for validating instances with n up to roughly 30.
    pub fn has_induced_path(&self, t: usize) -> bool {
        assert!(t >= 1, "path length must be positive");
        if t == 1 {
            return self.n() >= 1;
        }
        if t == 2 {
            return self.m >= 1;
        }
        let mut in_path = vec![false; self.n()];
        let mut path = Vec::with_capacity(t);
        for s in self.vertices() {
            path.push(s);
            in_path[s] = true;
            if self.extend_induced_path(&mut path, &mut in_path, t) {
                return true;
            }
            in_path[s] = false;
            path.pop();
        }
        false
    }

    fn extend_induced_path(&self, path: &mut Vec<usize>, in_path: &mut [bool], t: usize) -> bool {
        if path.len() == t {
            return true;
        }
        let tail = *path.last().unwrap();
        'next: for &u in &self.adj[tail] {
            if in_path[u] {
                continue;
            }
            // u must see only the tail among path vertices
            for &p in path.iter().take(path.len() - 1) {
                if self.has_edge(u, p) {
                    continue 'next;
                }
            }
            path.push(u);
            in_path[u] = true;
            if self.extend_induced_path(path, in_path, t) {
                return true;
            }
            in_path[u] = false;
            path.pop();
        }
        false
    }
}

/// A set of vertices inside some graph's universe, kept sorted and unique.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet { members: v }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn full(n: usize) -> Self {
        VertexSet { members: (0..n).collect() }
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.members.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, path};

    #[test]
    fn build_and_invariants() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let c5 = cycle(5);
        let (h, map) = c5.induced_subgraph(&VertexSet::new([0, 1, 2, 3])).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!(h.m(), 3);
        assert!(h.is_acyclic());
    }

    #[test]
    fn induced_subgraph_identity_and_pair() {
        let g = complete(4);
        let (all, _) = g.induced_subgraph(&VertexSet::full(4)).unwrap();
        assert_eq!(all, g);
        let (h, _) = g.induced_subgraph(&VertexSet::new([1, 3])).unwrap();
        assert_eq!((h.n(), h.m()), (2, 1));
    }

    #[test]
    fn degeneracy_of_named_graphs() {
        assert_eq!(path(6).degeneracy().0, 1);
        assert_eq!(cycle(7).degeneracy().0, 2);
        for n in 1..7 {
            assert_eq!(complete(n).degeneracy().0, n - 1);
        }
        assert_eq!(Graph::empty(4).degeneracy().0, 0);
    }

    #[test]
    fn degeneracy_ordering_witnesses() {
        let g = cycle(9);
        let (d, order) = g.degeneracy();
        // replay the ordering and confirm no removal exceeds d
        let mut alive = vec![true; g.n()];
        for &u in &order {
            let deg = g.neighbors(u).iter().filter(|&&v| alive[v]).count();
            assert!(deg <= d);
            alive[u] = false;
        }
    }

    #[test]
    fn induced_paths() {
        assert!(path(5).has_induced_path(5));
        assert!(!path(5).has_induced_path(6));
        assert!(!complete(4).has_induced_path(3));
        assert!(cycle(6).has_induced_path(5));
        assert!(!cycle(6).has_induced_path(6));
    }

    #[test]
    fn girth_of_named_graphs() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(path(9).girth(), None);
    }

    #[test]
    fn acyclic_check() {
        assert!(path(4).is_acyclic());
        assert!(!cycle(3).is_acyclic());
        assert!(Graph::empty(5).is_acyclic());
    }
}
