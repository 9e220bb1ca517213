//! Minmax lower bounds on the spread and the gradient search for η(G).
//!
//! For a symmetric `W` and unit `x`, `f(x) = 2‖Wx − (xᵀWx)x‖` is twice the
//! distance from `Wx` to the line through `x`, and never exceeds the spread
//! of `W`. The search maximizes `g = f²` over the unit sphere.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::DegreeProfile;
use crate::matrix::SymmetricMatrix;
use crate::par::Exec;
use crate::rng::SeededRng;

/// A vector of unit Euclidean length, renormalized on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVector {
    coords: Vec<f64>,
}

impl UnitVector {
    pub fn new(mut coords: Vec<f64>) -> Result<Self> {
        let norm = norm(&coords);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        coords.iter_mut().for_each(|c| *c /= norm);
        Ok(Self { coords })
    }

    /// `e / √n`.
    pub fn uniform(n: usize) -> Self {
        Self {
            coords: vec![1.0 / (n as f64).sqrt(); n],
        }
    }

    /// Coordinates drawn i.i.d. normal, then normalized.
    pub fn random(n: usize, rng: &mut SeededRng) -> Self {
        loop {
            if let Ok(v) = Self::new((0..n).map(|_| rng.normal()).collect()) {
                return v;
            }
        }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.coords
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `2‖Wx − (xᵀWx)x‖`.
pub fn f_value(w: &SymmetricMatrix, x: &UnitVector) -> Result<f64> {
    let wx = w.mul_vec(x.coords())?;
    let rho = dot(x.coords(), &wx);
    let r: Vec<f64> = wx.iter().zip(x.coords()).map(|(a, b)| a - rho * b).collect();
    Ok(2.0 * norm(&r))
}

/// `2·sqrt(xᵀW²x − (xᵀWx)²)`, radicand clamped at zero.
pub fn f_value_radicand(w: &SymmetricMatrix, x: &UnitVector) -> Result<f64> {
    let wx = w.mul_vec(x.coords())?;
    let rho = dot(x.coords(), &wx);
    Ok(2.0 * (dot(&wx, &wx) - rho * rho).max(0.0).sqrt())
}

/// `f(y/‖y‖)` written in terms of `y` and `τ = Wy`.
pub fn bound_from_vector(w: &SymmetricMatrix, y: &[f64]) -> Result<f64> {
    let tau = w.mul_vec(y)?;
    let yy = dot(y, y);
    if yy == 0.0 {
        return Err(Error::ZeroVector);
    }
    let radicand = yy * dot(&tau, &tau) - dot(y, &tau).powi(2);
    Ok(2.0 * radicand.max(0.0).sqrt() / yy)
}

/// The all-ones vector bound `(4/n)·sqrt(n·M1 − 4m²)`.
pub fn ncon_closed_form(p: &DegreeProfile) -> f64 {
    let (n, m) = (p.n as i128, p.m as i128);
    let radicand = n * p.zagreb1 as i128 - 4 * m * m;
    4.0 / p.n as f64 * (radicand.max(0) as f64).sqrt()
}

/// Degree-vector bound with `α_i = d_i² + Σ_{j~i} d_j`, which is `(Qd)_i`.
pub fn degree_vector_bound(p: &DegreeProfile) -> f64 {
    let d: Vec<f64> = p.degrees.iter().map(|&d| d as f64).collect();
    let alpha: Vec<f64> = p
        .degrees
        .iter()
        .zip(&p.second_degrees)
        .map(|(&d, &s)| (d * d) as f64 + s as f64)
        .collect();
    cs_gap_bound(&d, &alpha)
}

/// `2·sqrt(Σy²·Στ² − (Σyτ)²)/Σy²`, for a precomputed `τ`.
fn cs_gap_bound(y: &[f64], tau: &[f64]) -> f64 {
    let yy = dot(y, y);
    let radicand = yy * dot(tau, tau) - dot(y, tau).powi(2);
    2.0 * radicand.max(0.0).sqrt() / yy
}

/// Reciprocal-degree bound in its expanded form:
/// `τ_i = 1 + Σ_{j~i} 1/d_j` and `Σ y_iτ_i = Σ_i (1/d_i + Σ_{k~i} 1/(d_i d_k))`.
pub fn reciprocal_degree_bound(g: &crate::graph::Graph) -> Result<f64> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let inv: Vec<f64> = (0..g.order()).map(|v| 1.0 / g.degree(v) as f64).collect();
    let sum_y2: f64 = inv.iter().map(|y| y * y).sum();
    let mut sum_tau2 = 0.0;
    let mut sum_ytau = 0.0;
    for (i, &yi) in inv.iter().enumerate() {
        let nb: f64 = g.neighbors(i).iter().map(|&k| inv[k]).sum();
        sum_tau2 += (nb + 1.0).powi(2);
        sum_ytau += yi + g.neighbors(i).iter().map(|&k| yi * inv[k]).sum::<f64>();
    }
    let sq = 4.0 / (sum_y2 * sum_y2) * (sum_y2 * sum_tau2 - sum_ytau * sum_ytau);
    Ok(sq.max(0.0).sqrt())
}

/// `y_i = d_i^(−3)` through [`bound_from_vector`].
pub fn inverse_cube_degree_bound(g: &crate::graph::Graph, q: &SymmetricMatrix) -> Result<f64> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let y: Vec<f64> = (0..g.order()).map(|v| (g.degree(v) as f64).powi(-3)).collect();
    bound_from_vector(q, &y)
}

/// Analytic gradient of `g(x) = 4(xᵀW²x − (xᵀWx)²)`: `8W²x − 16(xᵀWx)Wx`.
pub fn grad_f_squared(w: &SymmetricMatrix, x: &[f64]) -> Result<Vec<f64>> {
    let wx = w.mul_vec(x)?;
    let w2x = w.mul_vec(&wx)?;
    let rho = dot(x, &wx);
    Ok(w2x.iter().zip(&wx).map(|(a, b)| 8.0 * a - 16.0 * rho * b).collect())
}

/// `g(x) = 4(xᵀW²x − (xᵀWx)²)` on all of Rⁿ (no normalization).
pub fn f_squared(w: &SymmetricMatrix, x: &[f64]) -> Result<f64> {
    let wx = w.mul_vec(x)?;
    Ok(4.0 * (dot(&wx, &wx) - dot(x, &wx).powi(2)))
}

/// Central finite differences of [`f_squared`] with step `h`.
pub fn numerical_gradient(w: &SymmetricMatrix, x: &[f64], h: f64) -> Result<Vec<f64>> {
    let mut probe = x.to_vec();
    let mut out = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        probe[i] = x[i] + h;
        let up = f_squared(w, &probe)?;
        probe[i] = x[i] - h;
        let down = f_squared(w, &probe)?;
        probe[i] = x[i];
        out.push((up - down) / (2.0 * h));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StepMode {
    #[default]
    Constant,
    /// `s_k = s / √k`.
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GradientMode {
    #[default]
    Analytic,
    Numerical,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub iterations: usize,
    pub step_mode: StepMode,
    pub step: f64,
    pub gradient_mode: GradientMode,
    pub fd_step: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            iterations: 10,
            step_mode: StepMode::Constant,
            step: 0.1,
            gradient_mode: GradientMode::Analytic,
            fd_step: 1e-6,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::InvalidConfig("iterations must be at least 1".into()));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::InvalidConfig("step must be positive".into()));
        }
        if !(self.fd_step > 0.0 && self.fd_step.is_finite()) {
            return Err(Error::InvalidConfig("finite-difference step must be positive".into()));
        }
        Ok(())
    }

    pub fn step_at(&self, k: usize) -> f64 {
        match self.step_mode {
            StepMode::Constant => self.step,
            StepMode::Decreasing => self.step / (k as f64).sqrt(),
        }
    }
}

/// Size of the initial kick used when the start point is stationary.
pub const START_PERTURBATION: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchTrace {
    /// `f` at `e/√n`.
    pub initial_value: f64,
    /// `f` after iteration `k` (index `k − 1`).
    pub values: Vec<f64>,
    pub best_value: f64,
    pub best_vector: Vec<f64>,
    /// 0 when the start point is best.
    pub iteration_of_best: usize,
    /// The start point was stationary and got nudged along coordinate 0.
    pub perturbed: bool,
    /// Iterations at which the tangential gradient vanished (no step taken).
    pub stagnant: Vec<usize>,
}

impl SearchTrace {
    /// Two CSV rows: `iteration,1,…,K` and `f(x),…`.
    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::from("iteration");
        for k in 1..=self.values.len() {
            let _ = write!(out, ",{k}");
        }
        out.push_str("\nf(x)");
        for v in &self.values {
            let _ = write!(out, ",{v:.precision$}");
        }
        out.push('\n');
        out
    }
}

/// Gradient of `f²` projected onto the tangent space at unit `x`.
fn tangential(w: &SymmetricMatrix, x: &[f64], cfg: &SearchConfig) -> Result<Vec<f64>> {
    let g = match cfg.gradient_mode {
        GradientMode::Analytic => grad_f_squared(w, x)?,
        GradientMode::Numerical => numerical_gradient(w, x, cfg.fd_step)?,
    };
    let radial = dot(&g, x);
    let t: Vec<f64> = g.iter().zip(x).map(|(gi, xi)| gi - radial * xi).collect();
    // Rounding noise of the gradient itself counts as zero.
    let noise = match cfg.gradient_mode {
        GradientMode::Analytic => 1e-12 * norm(&g).max(1.0),
        GradientMode::Numerical => 1e-6 * norm(&g).max(1.0),
    };
    if norm(&t) <= noise {
        Ok(vec![0.0; x.len()])
    } else {
        Ok(t)
    }
}

/// `normalize(x + s·t/‖t‖)`, or `None` for a zero direction.
fn step(x: &[f64], t: &[f64], s: f64) -> Option<UnitVector> {
    let tn = norm(t);
    if tn == 0.0 {
        return None;
    }
    UnitVector::new(x.iter().zip(t).map(|(xi, ti)| xi + s * ti / tn).collect()).ok()
}

/// Fixed-step gradient ascent on the sphere from `e/√n`. Every step is taken
/// regardless of whether `f` improves; η is the best value seen.
pub fn gradient_search(w: &SymmetricMatrix, cfg: &SearchConfig) -> Result<SearchTrace> {
    cfg.validate()?;
    let n = w.order();
    if n == 0 {
        return Err(Error::InvalidSize("empty matrix".into()));
    }
    let mut x = UnitVector::uniform(n);
    let initial_value = f_value(w, &x)?;
    let mut best_value = initial_value;
    let mut best_vector = x.coords().to_vec();
    let mut iteration_of_best = 0;
    let mut perturbed = false;

    let mut t = tangential(w, x.coords(), cfg)?;
    if norm(&t) == 0.0 && n > 1 {
        let mut c = x.coords().to_vec();
        c[0] += START_PERTURBATION;
        x = UnitVector::new(c)?;
        perturbed = true;
        t = tangential(w, x.coords(), cfg)?;
    }

    let mut values = Vec::with_capacity(cfg.iterations);
    let mut stagnant = Vec::new();
    for k in 1..=cfg.iterations {
        if k > 1 {
            t = tangential(w, x.coords(), cfg)?;
        }
        match step(x.coords(), &t, cfg.step_at(k)) {
            Some(next) => x = next,
            None => stagnant.push(k),
        }
        let v = f_value(w, &x)?;
        values.push(v);
        if v > best_value {
            best_value = v;
            best_vector = x.coords().to_vec();
            iteration_of_best = k;
        }
    }
    Ok(SearchTrace {
        initial_value,
        values,
        best_value,
        best_vector,
        iteration_of_best,
        perturbed,
        stagnant,
    })
}

/// One analytic gradient step of length `s` from `e/√n`, then `f` there.
/// Returns `f(e/√n)` when the tangential gradient vanishes.
pub fn one_step_analytic_bound(w: &SymmetricMatrix, s: f64) -> Result<f64> {
    let x0 = UnitVector::uniform(w.order());
    let cfg = SearchConfig::default();
    let t = tangential(w, x0.coords(), &cfg)?;
    match step(x0.coords(), &t, s) {
        Some(x1) => f_value(w, &x1),
        None => f_value(w, &x0),
    }
}

/// Largest `f` over `samples` random unit vectors. Sample `i` draws from its
/// own stream seeded by `(seed, i)`, so the result does not depend on `exec`.
pub fn max_f_random(w: &SymmetricMatrix, samples: usize, seed: u64, exec: Exec) -> Result<f64> {
    let n = w.order();
    let values = exec.map_range(0..samples, |i| {
        let mut rng = SeededRng::new(seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        f_value(w, &UnitVector::random(n, &mut rng))
    });
    values.into_iter().try_fold(0.0f64, |acc, v| Ok(acc.max(v?)))
}
