//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` and applies the plane
//! rotation that annihilates `w_pq`, accumulating the rotations into an
//! eigenvector basis. Sweeps stop once the off-diagonal Frobenius norm falls
//! below `n * eps * ‖W‖_F`; entries negligible next to both diagonal terms
//! are zeroed instead of rotated. The residual `max_i ‖W v_i − λ_i v_i‖` is then measured
//! on the original matrix and must stay within `1e-9 · max(1, ‖W‖_F)`.

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

const MAX_SWEEPS: usize = 100;
/// Default cap on the matrix order; dense storage only.
pub const DEFAULT_MAX_ORDER: usize = 2000;
const RESIDUAL_BUDGET: f64 = 1e-9;

/// Eigenvalues sorted descending, with the achieved residual bound.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Max eigenpair residual, floored at a rounding-level backward error
    /// `4·n·ε·max(1, ‖W‖_F)`.
    pub residual_tol: f64,
}

impl Spectrum {
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().expect("spectra are non-empty")
    }

    pub fn spread(&self) -> f64 {
        self.largest() - self.smallest()
    }

    /// One value per line, descending, 17 significant digits, LF endings.
    pub fn dump(&self) -> String {
        self.values.iter().map(|v| format!("{v:.16e}\n")).collect()
    }
}

/// Full eigen-decomposition. Eigenvectors are the columns of `vectors`
/// (row-major `n × n`), matched to `values` in the same (descending) order.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    pub vectors: Vec<f64>,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        let n = self.spectrum.values.len();
        (0..n).map(|i| self.vectors[i * n + k]).collect()
    }
}

pub fn eigenvalues(w: &SymmetricMatrix) -> Result<Spectrum> {
    eigen_decompose(w, DEFAULT_MAX_ORDER).map(|d| d.spectrum)
}

pub fn eigen_decompose(w: &SymmetricMatrix, max_order: usize) -> Result<EigenDecomposition> {
    let n = w.order();
    if n == 0 {
        return Err(Error::InvalidSize("empty matrix".into()));
    }
    if n > max_order {
        return Err(Error::TooLarge { n, limit: max_order });
    }
    let norm = w.frobenius_sq().sqrt();
    if !norm.is_finite() {
        return Err(Error::InvalidConfig("matrix has non-finite entries".into()));
    }

    let mut a: Vec<f64> = (0..n).flat_map(|i| w.row(i).to_vec()).collect();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let target = n as f64 * f64::EPSILON * norm.max(f64::MIN_POSITIVE);
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                achieved: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let g = 100.0 * apq.abs();
                if app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, n, p, q, c, s);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        off = off_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors[k * n + new] = v[k * n + old];
        }
    }

    let mut residual: f64 = 0.0;
    for (k, &lambda) in values.iter().enumerate() {
        let x: Vec<f64> = (0..n).map(|i| vectors[i * n + k]).collect();
        let wx = w.mul_vec(&x)?;
        let r = wx
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
    }
    let floor = 4.0 * n as f64 * f64::EPSILON * norm.max(1.0);
    let tolerance = RESIDUAL_BUDGET * norm.max(1.0);
    if residual > tolerance {
        return Err(Error::ResidualTooLarge {
            residual,
            tolerance,
        });
    }
    Ok(EigenDecomposition {
        spectrum: Spectrum {
            values,
            residual_tol: residual.max(floor),
        },
        vectors,
    })
}

/// Applies the rotation to rows/columns p and q of the off-diagonal part.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[k * n + p] = new_p;
        a[p * n + k] = new_p;
        a[k * n + q] = new_q;
        a[q * n + k] = new_q;
    }
}
