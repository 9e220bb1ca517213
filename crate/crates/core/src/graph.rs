//! Simple undirected graphs and their degree data.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(i, j)` with `i < j`, sorted
/// lexicographically. Graphs are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. Pairs may be given in either orientation.
    ///
    /// Isolated vertices are rejected unless `allow_isolated` is set.
    pub fn new(n: usize, edges: &[(usize, usize)], allow_isolated: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize("a graph needs at least one vertex".into()));
        }
        let mut canonical = Vec::with_capacity(edges.len());
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            canonical.push(e);
        }
        canonical.sort_unstable();

        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in &canonical {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        if !allow_isolated {
            if let Some(v) = neighbors.iter().position(Vec::is_empty) {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(Self {
            n,
            edges: canonical,
            neighbors,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.neighbors.iter().any(Vec::is_empty)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.neighbors.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// BFS 2-colouring. Returns the colour classes `(X, Y)` when bipartite.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("queued vertices are coloured");
                for &w in &self.neighbors[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for (v, c) in colour.into_iter().enumerate() {
            if c == Some(false) {
                x.push(v);
            } else {
                y.push(v);
            }
        }
        Some((x, y))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Line graph: one vertex per edge (in canonical edge order), adjacent
    /// when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        if self.edges.is_empty() {
            return Err(Error::InvalidSize("line graph of an edgeless graph".into()));
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            incident[i].push(k);
            incident[j].push(k);
        }
        let mut pairs = HashSet::new();
        for list in &incident {
            for (a, &e) in list.iter().enumerate() {
                for &f in &list[a + 1..] {
                    pairs.insert((e.min(f), e.max(f)));
                }
            }
        }
        let pairs: Vec<_> = pairs.into_iter().collect();
        // K_2's line graph is a single vertex with no neighbours.
        Graph::new(self.edges.len(), &pairs, true)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }
}

/// Degree-derived invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    /// Minimum degree δ.
    pub min: usize,
    /// Maximum degree Δ.
    pub max: usize,
    /// Average degree 2m/n.
    pub avg: f64,
    /// First Zagreb index Σ d_i².
    pub zagreb1: u64,
    /// Second-degree vector A·d: entry i sums the degrees of i's neighbours.
    pub second_degrees: Vec<u64>,
    pub n: usize,
    pub m: usize,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        let zagreb1 = degrees.iter().map(|&d| (d * d) as u64).sum();
        let second_degrees = (0..g.order())
            .map(|i| g.neighbors(i).iter().map(|&j| degrees[j] as u64).sum())
            .collect();
        Self {
            min: g.min_degree(),
            max: g.max_degree(),
            avg: 2.0 * g.size() as f64 / g.order() as f64,
            zagreb1,
            second_degrees,
            n: g.order(),
            m: g.size(),
            degrees,
        }
    }

    /// Σ d_i³.
    pub fn cubic_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| (d * d * d) as u64).sum()
    }

    /// Σ d_i · d2_i.
    pub fn degree_second_degree_sum(&self) -> u64 {
        self.degrees
            .iter()
            .zip(&self.second_degrees)
            .map(|(&d, &s)| d as u64 * s)
            .sum()
    }

    pub fn is_regular(&self) -> bool {
        self.min == self.max
    }
}
