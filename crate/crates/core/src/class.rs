//! Target class descriptors and their recognizers.
//!
//! A [`TargetClass`] names the hereditary class C that solutions must
//! induce. Four classes are supported; each carries an explicit sparsity
//! constant `c` such that every k-vertex member has at most `c * k` edges
//! (tight for the in-scope classes), which the branching driver needs to
//! bound the size of the high-degree core.

use crate::error::Error;
use crate::graph::Graph;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "d", rename_all = "snake_case")]
pub enum TargetClass {
    /// Independent sets: no edges at all.
    Edgeless,
    /// Maximum degree at most `d`; `d = 1` is the dissociation-style
    /// hereditary closure of induced matchings (vertex-count objective).
    MaxDegree(usize),
    /// Acyclic subgraphs; complements feedback vertex sets.
    Forest,
    /// Degeneracy at most `d`; `d = 1` coincides with forests.
    Degenerate(usize),
}

impl TargetClass {
    /// The sparsity constant `c`: members on k vertices have <= c*k edges.
    pub fn sparsity(&self) -> Ratio<u64> {
        match *self {
            TargetClass::Edgeless => Ratio::from_integer(0),
            TargetClass::MaxDegree(d) => Ratio::new(d as u64, 2),
            TargetClass::Forest => Ratio::from_integer(1),
            TargetClass::Degenerate(d) => Ratio::from_integer(d as u64),
        }
    }

    /// Membership test for the whole graph.
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            TargetClass::Edgeless => g.m() == 0,
            TargetClass::MaxDegree(d) => g.max_degree() <= d,
            TargetClass::Forest => g.is_acyclic(),
            TargetClass::Degenerate(d) => g.degeneracy().0 <= d,
        }
    }

    /// Membership test for the subgraph of `g` induced by `members`,
    /// without materializing it. `in_set` must be the indicator of
    /// `members` over all of `g`'s vertices.
    pub fn accepts_masked(&self, g: &Graph, in_set: &[bool], members: &[usize]) -> bool {
        debug_assert!(members.iter().all(|&v| in_set[v]));
        match *self {
            TargetClass::Edgeless => !members
                .iter()
                .any(|&u| g.neighbors(u).iter().any(|&v| v > u && in_set[v])),
            TargetClass::MaxDegree(d) => members
                .iter()
                .all(|&u| g.neighbors(u).iter().filter(|&&v| in_set[v]).count() <= d),
            TargetClass::Forest => {
                // union-find over the edges inside the subset
                let mut parent: Vec<usize> = (0..g.n()).collect();
                fn find(parent: &mut [usize], mut x: usize) -> usize {
                    while parent[x] != x {
                        parent[x] = parent[parent[x]];
                        x = parent[x];
                    }
                    x
                }
                for &u in members {
                    for &v in g.neighbors(u) {
                        if v > u && in_set[v] {
                            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                            if ru == rv {
                                return false;
                            }
                            parent[ru] = rv;
                        }
                    }
                }
                true
            }
            TargetClass::Degenerate(d) => {
                let mut deg = vec![0usize; g.n()];
                for &u in members {
                    deg[u] = g.neighbors(u).iter().filter(|&&v| in_set[v]).count();
                }
                let mut alive: Vec<usize> = members.to_vec();
                let mut removed = vec![false; g.n()];
                while !alive.is_empty() {
                    let (pos, &u) = alive
                        .iter()
                        .enumerate()
                        .min_by_key(|&(_, &u)| (deg[u], u))
                        .unwrap();
                    if deg[u] > d {
                        return false;
                    }
                    alive.swap_remove(pos);
                    removed[u] = true;
                    for &v in g.neighbors(u) {
                        if in_set[v] && !removed[v] {
                            deg[v] -= 1;
                        }
                    }
                }
                true
            }
        }
    }

    /// Degree/degeneracy parameter, with the convention used for dispatch:
    /// edgeless is 0-degenerate, forests are 1-degenerate.
    pub fn parameter(&self) -> usize {
        match *self {
            TargetClass::Edgeless => 0,
            TargetClass::MaxDegree(d) => d,
            TargetClass::Forest => 1,
            TargetClass::Degenerate(d) => d,
        }
    }
}

impl std::fmt::Display for TargetClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            TargetClass::Edgeless => write!(f, "edgeless"),
            TargetClass::MaxDegree(d) => write!(f, "max-degree:{d}"),
            TargetClass::Forest => write!(f, "forest"),
            TargetClass::Degenerate(d) => write!(f, "degenerate:{d}"),
        }
    }
}

impl std::str::FromStr for TargetClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (head, param) = match s.split_once(':') {
            Some((h, p)) => (h, Some(p)),
            None => (s, None),
        };
        let d = |p: Option<&str>| -> Result<usize, Error> {
            p.ok_or_else(|| Error::Invalid(format!("class `{head}` needs a parameter, e.g. `{head}:1`")))?
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad class parameter in `{s}`")))
        };
        match head {
            "edgeless" => Ok(TargetClass::Edgeless),
            "forest" => Ok(TargetClass::Forest),
            "max-degree" => Ok(TargetClass::MaxDegree(d(param)?)),
            "degenerate" => Ok(TargetClass::Degenerate(d(param)?)),
            other => Err(Error::UnsupportedClass(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, path, random};
    use crate::graph::VertexSet;

    #[test]
    fn recognizer_goldens() {
        assert!(!TargetClass::Degenerate(2).accepts(&complete(4)));
        assert!(TargetClass::Degenerate(3).accepts(&complete(4)));
        assert!(TargetClass::Forest.accepts(&path(7)));
        assert!(!TargetClass::Forest.accepts(&cycle(5)));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(TargetClass::MaxDegree(1).accepts(&two_edges));
        assert!(TargetClass::Edgeless.accepts(&Graph::empty(3)));
        assert!(!TargetClass::Edgeless.accepts(&two_edges));
    }

    #[test]
    fn masked_matches_materialized() {
        for seed in 0..30u64 {
            let g = random(9, 0.4, seed);
            let members: Vec<usize> = (0..9).filter(|v| (seed >> v) & 1 == 1).collect();
            let mut in_set = vec![false; 9];
            for &v in &members {
                in_set[v] = true;
            }
            let (sub, _) = g.induced_subgraph(&VertexSet::new(members.clone())).unwrap();
            for class in [
                TargetClass::Edgeless,
                TargetClass::MaxDegree(1),
                TargetClass::MaxDegree(2),
                TargetClass::Forest,
                TargetClass::Degenerate(1),
                TargetClass::Degenerate(2),
            ] {
                assert_eq!(class.accepts_masked(&g, &in_set, &members), class.accepts(&sub));
            }
        }
    }

    #[test]
    fn sparsity_constants() {
        assert_eq!(TargetClass::Edgeless.sparsity(), Ratio::from_integer(0));
        assert_eq!(TargetClass::MaxDegree(1).sparsity(), Ratio::new(1, 2));
        assert_eq!(TargetClass::Forest.sparsity(), Ratio::from_integer(1));
        assert_eq!(TargetClass::Degenerate(2).sparsity(), Ratio::from_integer(2));
    }

    #[test]
    fn parse_and_display() {
        for s in ["edgeless", "forest", "max-degree:2", "degenerate:1"] {
            let c: TargetClass = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert!(matches!("planar".parse::<TargetClass>(), Err(Error::UnsupportedClass(_))));
        assert!("max-degree".parse::<TargetClass>().is_err());
        assert!("degenerate:x".parse::<TargetClass>().is_err());
    }
}
