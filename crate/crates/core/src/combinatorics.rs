//! Exact brute-force oracles for the NP-hard invariants the bounds consume.
//!
//! All searches work on 64-bit vertex masks and refuse graphs above their
//! size limit rather than falling back to heuristics.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

pub const DEFAULT_ALPHA_LIMIT: usize = 30;
pub const DEFAULT_VERTEX_BIP_LIMIT: usize = 20;
pub const DEFAULT_EDGE_BIP_LIMIT: usize = 24;
/// Environment variable that replaces every default limit.
pub const ORACLE_LIMIT_ENV: &str = "SLQ_ORACLE_LIMIT";
const MASK_BITS: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub alpha: usize,
    pub vertex_bipartiteness: usize,
    pub edge_bipartiteness: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            alpha: DEFAULT_ALPHA_LIMIT,
            vertex_bipartiteness: DEFAULT_VERTEX_BIP_LIMIT,
            edge_bipartiteness: DEFAULT_EDGE_BIP_LIMIT,
        }
    }
}

impl OracleLimits {
    /// One cap for every oracle.
    pub fn uniform(limit: usize) -> Self {
        Self {
            alpha: limit,
            vertex_bipartiteness: limit,
            edge_bipartiteness: limit,
        }
    }

    /// Defaults, replaced by `SLQ_ORACLE_LIMIT` when it is set and parses.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::uniform)
            .unwrap_or_default()
    }
}

/// Adjacency as bit masks.
#[derive(Clone, Debug)]
pub struct BitGraph {
    n: usize,
    adj: Vec<u64>,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.order() > MASK_BITS {
            return Err(Error::OracleLimit {
                what: "bitmask",
                n: g.order(),
                limit: MASK_BITS,
            });
        }
        let adj = (0..g.order())
            .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
            .collect();
        Ok(Self { n: g.order(), adj })
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// Layered BFS 2-colouring of the subgraph induced by `keep`.
    pub fn induces_bipartite(&self, keep: u64) -> bool {
        let mut unvisited = keep;
        while unvisited != 0 {
            let start = unvisited & unvisited.wrapping_neg();
            unvisited &= !start;
            let mut classes = [start, 0u64];
            let mut layer = start;
            let mut parity = 0;
            while layer != 0 {
                let mut reach = 0u64;
                let mut bits = layer;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    reach |= self.adj[v];
                }
                reach &= keep;
                if reach & classes[parity] != 0 {
                    return false;
                }
                let next = reach & unvisited;
                unvisited &= !next;
                parity ^= 1;
                classes[parity] |= next;
                layer = next;
            }
        }
        true
    }

    /// Number of edges crossing the cut `(side, complement)`.
    pub fn cut_size(&self, side: u64) -> u32 {
        let mut bits = side;
        let mut total = 0;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            total += (self.adj[v] & !side).count_ones();
        }
        total
    }
}

fn check_limit(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    let limit = limit.min(MASK_BITS);
    if g.order() > limit {
        return Err(Error::OracleLimit {
            what,
            n: g.order(),
            limit,
        });
    }
    Ok(())
}

/// α(G), exact, by branch and bound.
pub fn independence_number(g: &Graph, limit: usize) -> Result<usize> {
    check_limit(g, "independence number", limit)?;
    let bg = BitGraph::new(g)?;
    let mut best = 0;
    mis_branch(&bg, bg.full(), 0, &mut best);
    Ok(best)
}

fn mis_branch(bg: &BitGraph, mut cands: u64, mut size: usize, best: &mut usize) {
    // Vertices of candidate-degree 0 or 1 belong to some maximum set.
    loop {
        let mut forced = None;
        let mut bits = cands;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if (bg.adj[v] & cands).count_ones() <= 1 {
                forced = Some(v);
                break;
            }
        }
        match forced {
            Some(v) => {
                cands &= !(bg.adj[v] | 1 << v);
                size += 1;
            }
            None => break,
        }
    }
    if cands == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cands.count_ones() as usize <= *best {
        return;
    }
    let mut pivot = 0;
    let mut pivot_deg = 0;
    let mut bits = cands;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (bg.adj[v] & cands).count_ones();
        if d > pivot_deg {
            pivot = v;
            pivot_deg = d;
        }
    }
    mis_branch(bg, cands & !(bg.adj[pivot] | 1 << pivot), size + 1, best);
    mis_branch(bg, cands & !(1 << pivot), size, best);
}

/// τ(G) = n − α(G).
pub fn vertex_cover_number(g: &Graph, limit: usize) -> Result<usize> {
    Ok(g.order() - independence_number(g, limit)?)
}

/// υ_b(G): fewest vertices whose deletion leaves a bipartite graph.
///
/// Deletion sets are searched by increasing size; the first size with a hit
/// is the answer.
pub fn vertex_bipartiteness(g: &Graph, limit: usize) -> Result<usize> {
    vertex_bipartiteness_with(g, limit, Exec::default())
}

pub fn vertex_bipartiteness_with(g: &Graph, limit: usize, exec: Exec) -> Result<usize> {
    check_limit(g, "vertex bipartiteness", limit)?;
    let bg = BitGraph::new(g)?;
    let n = bg.n;
    let full = bg.full();
    if bg.induces_bipartite(full) {
        return Ok(0);
    }
    let firsts: Vec<usize> = (0..n).collect();
    for k in 1..=n {
        // Split the size-k deletion sets by their smallest vertex.
        let hit = exec.any(&firsts, |&first| {
            if n - first < k {
                return false;
            }
            let rest_bits = n - first - 1;
            let base = 1u64 << first;
            for_each_subset(rest_bits, k - 1, |sub| {
                let removed = base | (sub << (first + 1));
                bg.induces_bipartite(full & !removed)
            })
        });
        if hit {
            return Ok(k);
        }
    }
    unreachable!("deleting every vertex leaves the empty graph, which is bipartite")
}

/// Calls `visit` on every `k`-subset of `0..bits` (as a mask) until it
/// returns true. Gosper's hack.
fn for_each_subset(bits: usize, k: usize, mut visit: impl FnMut(u64) -> bool) -> bool {
    if k > bits {
        return false;
    }
    if k == 0 {
        return visit(0);
    }
    let limit = 1u64 << bits;
    let mut s = (1u64 << k) - 1;
    while s < limit {
        if visit(s) {
            return true;
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    false
}

/// max-cut(G) by scanning all 2^(n−1) bipartitions with vertex n−1 fixed.
pub fn max_cut(g: &Graph, limit: usize) -> Result<usize> {
    max_cut_with(g, limit, Exec::default())
}

pub fn max_cut_with(g: &Graph, limit: usize, exec: Exec) -> Result<usize> {
    check_limit(g, "edge bipartiteness", limit)?;
    let bg = BitGraph::new(g)?;
    if bg.n <= 1 {
        return Ok(0);
    }
    let best = exec
        .max_over(0..1u64 << (bg.n - 1), |side| u64::from(bg.cut_size(side)))
        .unwrap_or(0);
    Ok(best as usize)
}

/// ε_b(G) = m − max-cut(G).
pub fn edge_bipartiteness(g: &Graph, limit: usize) -> Result<usize> {
    Ok(g.size() - max_cut(g, limit)?)
}

pub fn edge_bipartiteness_with(g: &Graph, limit: usize, exec: Exec) -> Result<usize> {
    Ok(g.size() - max_cut_with(g, limit, exec)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CombinatorialInvariants {
    pub alpha: usize,
    pub tau: usize,
    pub vb: usize,
    pub eb: usize,
}

pub fn combinatorial_invariants(g: &Graph, limits: OracleLimits) -> Result<CombinatorialInvariants> {
    let alpha = independence_number(g, limits.alpha)?;
    Ok(CombinatorialInvariants {
        alpha,
        tau: g.order() - alpha,
        vb: vertex_bipartiteness(g, limits.vertex_bipartiteness)?,
        eb: edge_bipartiteness(g, limits.edge_bipartiteness)?,
    })
}

/// The counting condition `n(n−α)(n−α−1) ≤ 8m` and its necessary form
/// `4(n−1) ≥ k(k−1)` with `k = n − α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CondReport {
    pub alpha: usize,
    pub k: usize,
    pub holds: bool,
    pub necessary_holds: bool,
}

pub fn check_condition_cond(g: &Graph, limit: usize) -> Result<CondReport> {
    let alpha = independence_number(g, limit)?;
    let n = g.order() as u64;
    let k = n - alpha as u64;
    let lhs = n * k * k.saturating_sub(1);
    Ok(CondReport {
        alpha,
        k: k as usize,
        holds: lhs <= 8 * g.size() as u64,
        necessary_holds: 4 * (n - 1) >= k * k.saturating_sub(1),
    })
}
