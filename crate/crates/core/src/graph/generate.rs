//! Named test-family generators. All of them are deterministic; `random`
//! is deterministic given its seed.

use super::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Path on `n` vertices, edges `i — i+1`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `rows x cols` grid; vertex `(r, c)` is `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).unwrap()
}

/// Star with `leaves` leaves; the center is vertex 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// Erdos–Renyi G(n, p), deterministic for a fixed seed.
pub fn random(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability must be in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle3_is_triangle() {
        assert_eq!(cycle(3), complete(3));
    }

    #[test]
    fn random_extremes() {
        let n = 9;
        assert_eq!(random(n, 0.0, 7).m(), 0);
        assert_eq!(random(n, 1.0, 7), complete(n));
    }

    #[test]
    fn random_is_seed_deterministic() {
        assert_eq!(random(12, 0.4, 99), random(12, 0.4, 99));
    }

    #[test]
    fn named_sizes() {
        assert_eq!(grid(3, 3).m(), 12);
        assert_eq!(star(5).max_degree(), 5);
        let p = petersen();
        assert_eq!((p.n(), p.m(), p.max_degree()), (10, 15, 3));
        assert_eq!(p.girth(), Some(5));
    }
}
