//! Matrices attached to a graph and the three spread invariants.

use crate::eigen::{eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{IntMatrix, SymmetricMatrix};

pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let mut a = SymmetricMatrix::zeros(g.order());
    for &(i, j) in g.edges() {
        a.set(i, j, 1.0);
    }
    a
}

/// L = D − A.
pub fn laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    degree_plus(g, -1.0)
}

/// Q = D + A.
pub fn signless_laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    degree_plus(g, 1.0)
}

fn degree_plus(g: &Graph, sign: f64) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set(v, v, g.degree(v) as f64);
    }
    for &(i, j) in g.edges() {
        m.set(i, j, sign);
    }
    m
}

/// Unsigned vertex-edge incidence matrix (n × m), edges in canonical order.
pub fn incidence_matrix(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.order(), g.size());
    for (k, &(i, j)) in g.edges().iter().enumerate() {
        m.set(i, k, 1);
        m.set(j, k, 1);
    }
    m
}

/// Oriented (0, ±1) incidence matrix. `reversed[k]` flips edge `k` from the
/// default low→high orientation. An arc `(u, v)` puts −1 at its tail `u` and
/// +1 at its head `v`.
pub fn oriented_incidence_matrix(g: &Graph, reversed: &[bool]) -> Result<IntMatrix> {
    if reversed.len() != g.size() {
        return Err(Error::DimensionMismatch {
            expected: g.size(),
            found: reversed.len(),
        });
    }
    let mut m = IntMatrix::zeros(g.order(), g.size());
    for (k, (&(i, j), &flip)) in g.edges().iter().zip(reversed).enumerate() {
        let (tail, head) = if flip { (j, i) } else { (i, j) };
        m.set(tail, k, -1);
        m.set(head, k, 1);
    }
    Ok(m)
}

/// Spectra of A, L and Q, and the derived spreads.
#[derive(Clone, Debug, PartialEq)]
pub struct SpreadReport {
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
    pub signless: Spectrum,
}

impl SpreadReport {
    /// s(G) = λ_1 − λ_n.
    pub fn adjacency_spread(&self) -> f64 {
        self.adjacency.spread()
    }

    /// s_L(G) = μ_1 − μ_{n−1}. Defined for disconnected graphs too, where
    /// μ_{n−1} = 0.
    pub fn laplacian_spread(&self) -> f64 {
        self.mu1() - self.algebraic_connectivity()
    }

    /// s_Q(G) = q_1 − q_n.
    pub fn signless_spread(&self) -> f64 {
        self.signless.spread()
    }

    pub fn q1(&self) -> f64 {
        self.signless.largest()
    }

    pub fn qn(&self) -> f64 {
        self.signless.smallest()
    }

    pub fn mu1(&self) -> f64 {
        self.laplacian.largest()
    }

    /// μ_{n−1}, the algebraic connectivity a(G).
    pub fn algebraic_connectivity(&self) -> f64 {
        let v = &self.laplacian.values;
        v[v.len() - 2]
    }

    pub fn lambda1(&self) -> f64 {
        self.adjacency.largest()
    }
}

pub fn spread_report(g: &Graph) -> Result<SpreadReport> {
    if g.order() < 2 {
        return Err(Error::InvalidSize("spreads need n >= 2".into()));
    }
    Ok(SpreadReport {
        adjacency: eigenvalues(&adjacency_matrix(g))?,
        laplacian: eigenvalues(&laplacian_matrix(g))?,
        signless: eigenvalues(&signless_laplacian_matrix(g))?,
    })
}

pub fn signless_spread(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(&signless_laplacian_matrix(g))?.spread())
}
