//! Dense real symmetric matrices and 0/±1 incidence matrices.

use crate::error::{Error, Result};

/// Dense symmetric matrix, row-major. Symmetry holds by construction: every
/// write goes to both `(i, j)` and `(j, i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds from rows, rejecting non-square or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::InvalidConfig(format!("entry ({i},{j}) is not finite")));
                }
                if j >= i {
                    if rows[j][i] != v {
                        return Err(Error::InvalidConfig(format!(
                            "matrix is not symmetric at ({i},{j})"
                        )));
                    }
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    /// y = W x.
    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: x.len(),
            });
        }
        Ok((0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn square(&self) -> SymmetricMatrix {
        let n = self.order;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = self.row(i).iter().zip(self.row(j)).map(|(a, b)| a * b).sum();
                out.set(i, j, v);
            }
        }
        out
    }

    /// Entrywise linear combination `a*self + b*other`.
    pub fn combine(&self, a: f64, other: &SymmetricMatrix, b: f64) -> Result<SymmetricMatrix> {
        if other.order != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: other.order,
            });
        }
        Ok(SymmetricMatrix {
            order: self.order,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        })
    }

    /// Sum of squared off-diagonal entries in row `i`.
    pub fn off_diagonal_row_sq(&self, i: usize) -> f64 {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, v)| v * v)
            .sum()
    }

    pub fn is_integer_valued(&self) -> bool {
        self.data.iter().all(|v| v.fract() == 0.0)
    }
}

/// Rectangular integer matrix, `rows × cols`, row-major. Used for the
/// vertex-edge incidence matrices, whose Gram products are checked exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    /// M · Mᵀ (rows × rows).
    pub fn gram_rows(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                let v = (0..self.cols).map(|k| self.get(i, k) * self.get(j, k)).sum();
                out.set(i, j, v);
            }
        }
        out
    }

    /// Mᵀ · M (cols × cols).
    pub fn gram_cols(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.cols);
        for i in 0..self.cols {
            for j in 0..self.cols {
                let v = (0..self.rows).map(|k| self.get(k, i) * self.get(k, j)).sum();
                out.set(i, j, v);
            }
        }
        out
    }

    /// Exact equality with a symmetric matrix whose entries are integers.
    pub fn equals_symmetric(&self, w: &SymmetricMatrix) -> bool {
        self.rows == self.cols
            && self.rows == w.order()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) as f64 == w.get(i, j)))
    }
}
