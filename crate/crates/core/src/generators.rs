//! Named graph families and seeded random graphs.
//!
//! Vertex labelling is fixed per family:
//!
//! | family | labelling |
//! |---|---|
//! | `Path(n)` | `0-1-…-(n-1)` |
//! | `Cycle(n)` | path plus `(0, n-1)` |
//! | `Complete(n)` | all pairs |
//! | `Star(n)` | centre `0`, leaves `1..n` (so `Star(4)` is K_{1,3}) |
//! | `CompleteBipartite(p, q)` | parts `0..p` and `p..p+q` |
//! | `CompletePlusIsolated(n)` | K_{n-1} on `0..n-1`, vertex `n-1` isolated |
//! | `Circulant(n, k)` | vertex `i` adjacent to `i±1, …, i±k/2`, plus `i+n/2` when `k` is odd |

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SeededRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    /// K_{n-1} ∪ K_1.
    CompletePlusIsolated(usize),
    /// k-regular circulant on n vertices.
    Circulant(usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        generate_named(self)
    }
}

pub fn generate_named(family: Family) -> Result<Graph> {
    let bad = |what: &str| Err(Error::InvalidSize(what.to_string()));
    match family {
        Family::Path(n) => {
            if n < 2 {
                return bad("path needs n >= 2");
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::new(n, &edges, false)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs n >= 3");
            }
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, n - 1));
            Graph::new(n, &edges, false)
        }
        Family::Complete(n) => {
            if n < 2 {
                return bad("complete graph needs n >= 2");
            }
            Graph::new(n, &complete_edges(0, n), false)
        }
        Family::Star(n) => {
            if n < 2 {
                return bad("star needs n >= 2");
            }
            let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Graph::new(n, &edges, false)
        }
        Family::CompleteBipartite(p, q) => {
            if p == 0 || q == 0 {
                return bad("complete bipartite needs p, q >= 1");
            }
            let edges: Vec<_> = (0..p)
                .flat_map(|i| (p..p + q).map(move |j| (i, j)))
                .collect();
            Graph::new(p + q, &edges, false)
        }
        Family::CompletePlusIsolated(n) => {
            if n < 2 {
                return bad("K_{n-1} ∪ K_1 needs n >= 2");
            }
            Graph::new(n, &complete_edges(0, n - 1), true)
        }
        Family::Circulant(n, k) => {
            if k == 0 || k >= n || (n * k) % 2 == 1 {
                return bad("circulant needs 1 <= k < n with n*k even");
            }
            let mut edges = HashSet::new();
            for i in 0..n {
                for off in 1..=k / 2 {
                    let j = (i + off) % n;
                    edges.insert((i.min(j), i.max(j)));
                }
                if k % 2 == 1 {
                    let j = (i + n / 2) % n;
                    edges.insert((i.min(j), i.max(j)));
                }
            }
            let edges: Vec<_> = edges.into_iter().collect();
            Graph::new(n, &edges, false)
        }
    }
}

fn complete_edges(start: usize, end: usize) -> Vec<(usize, usize)> {
    (start..end)
        .flat_map(|i| (i + 1..end).map(move |j| (i, j)))
        .collect()
}

/// Decodes a Prüfer sequence over `0..n` into the edges of a labelled tree.
///
/// Uses the linear-time pointer scan: repeatedly attach the smallest leaf.
pub fn prufer_to_tree(n: usize, sequence: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(sequence.len(), n.saturating_sub(2));
    if n < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &v in sequence {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for &v in sequence {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}

/// Uniform labelled spanning tree from a random Prüfer sequence.
fn random_tree(n: usize, rng: &mut SeededRng) -> Vec<(usize, usize)> {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.below_usize(n)).collect();
    prufer_to_tree(n, &seq)
}

/// Partial Fisher-Yates: the first `k` entries become a uniform sample.
fn sample_without_replacement<T>(pool: &mut [T], k: usize, rng: &mut SeededRng) {
    for t in 0..k {
        let j = t + rng.below_usize(pool.len() - t);
        pool.swap(t, j);
    }
}

/// Connected simple graph with exactly `m` edges.
///
/// Procedure: a uniform random spanning tree (random Prüfer sequence), then
/// `m - (n-1)` further edges drawn uniformly without replacement from the
/// non-tree pairs, enumerated in lexicographic order.
pub fn generate_random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidSize("random connected graph needs n >= 2".into()));
    }
    let max = n * (n - 1) / 2;
    if m < n - 1 || m > max {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: n - 1,
            max,
        });
    }
    let mut rng = SeededRng::new(seed);
    let mut edges = random_tree(n, &mut rng);
    let tree: HashSet<_> = edges.iter().copied().collect();
    let mut pool: Vec<(usize, usize)> = complete_edges(0, n)
        .into_iter()
        .filter(|e| !tree.contains(e))
        .collect();
    let extra = m - (n - 1);
    sample_without_replacement(&mut pool, extra, &mut rng);
    edges.extend_from_slice(&pool[..extra]);
    Graph::new(n, &edges, false)
}

/// Connected bipartite graph with exactly `m` edges.
///
/// The random spanning tree fixes the bipartition (its 2-colouring); extra
/// edges are sampled only between the two colour classes.
pub fn generate_random_connected_bipartite(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidSize("random bipartite graph needs n >= 2".into()));
    }
    let mut rng = SeededRng::new(seed);
    let mut edges = random_tree(n, &mut rng);
    let tree_graph = Graph::new(n, &edges, false)?;
    let (x, y) = tree_graph
        .bipartition()
        .expect("trees are bipartite");
    let max = x.len() * y.len();
    if m < n - 1 || m > max {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: n - 1,
            max,
        });
    }
    let tree: HashSet<_> = edges.iter().copied().collect();
    let mut pool: Vec<(usize, usize)> = x
        .iter()
        .flat_map(|&a| y.iter().map(move |&b| (a.min(b), a.max(b))))
        .filter(|e| !tree.contains(e))
        .collect();
    pool.sort_unstable();
    let extra = m - (n - 1);
    sample_without_replacement(&mut pool, extra, &mut rng);
    edges.extend_from_slice(&pool[..extra]);
    Graph::new(n, &edges, false)
}
