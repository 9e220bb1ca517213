//! Lower and upper bounds on the signless Laplacian spread `s_Q = q_1 − q_n`.
//!
//! Three layers:
//! * generic spread bounds for any real symmetric matrix,
//! * closed forms in degree data (n, m, Δ, δ, M1, second degrees),
//! * a named catalog that checks each entry's hypotheses and evaluates it
//!   against a shared [`BoundContext`], which computes every expensive input
//!   (matrix, spectra, oracles, search) at most once.
//!
//! Catalog names are stable. `meg1`, `meg2`, `liu_delta`, `liu_2.3`, `Ncon`,
//! `Z1`, `Z2` and `eta` are the usual table mnemonics; the rest are
//! descriptive.

use std::cmp::Ordering;
use std::sync::OnceLock;

use bitflags::bitflags;

use crate::combinatorics::{vertex_bipartiteness_with, OracleLimits};
use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, Graph};
use crate::matrix::SymmetricMatrix;
use crate::minmax::{self, SearchConfig, SearchTrace};
use crate::par::Exec;
use crate::spectra::{signless_laplacian_matrix, spread_report, SpreadReport};

// ---------------------------------------------------------------------------
// Generic symmetric-matrix bounds

/// Upper bound `sqrt(2‖W‖_F² − (2/n)(tr W)²)`.
pub fn mirsky_upper(w: &SymmetricMatrix) -> f64 {
    let n = w.order() as f64;
    (2.0 * w.frobenius_sq() - 2.0 / n * w.trace().powi(2)).max(0.0).sqrt()
}

/// Lower bound: max over pairs of
/// `sqrt((w_ii − w_jj)² + 2R_i + 2R_j)`, `R_i` the off-diagonal row energy.
pub fn barnes_hoffman_lower(w: &SymmetricMatrix) -> f64 {
    let n = w.order();
    let rows: Vec<f64> = (0..n).map(|i| w.off_diagonal_row_sq(i)).collect();
    let mut best: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let d = w.get(i, i) - w.get(j, j);
            best = best.max(d * d + 2.0 * rows[i] + 2.0 * rows[j]);
        }
    }
    best.sqrt()
}

/// Squared pair term of [`jiang_zhan_lower`].
pub fn jiang_zhan_pair(w: &SymmetricMatrix, i: usize, j: usize) -> f64 {
    let ri = w.off_diagonal_row_sq(i);
    let rj = w.off_diagonal_row_sq(j);
    let f = (ri - rj).abs();
    let d = w.get(i, i) - w.get(j, j);
    let e = if diagonals_equal(w, i, j) {
        2.0 * f
    } else {
        let d2 = d * d;
        (d2 + 2.0 * (d2 - f).abs()).min(f * f / d2)
    };
    d * d + 2.0 * ri + 2.0 * rj + 4.0 * e
}

/// Exact on integer-valued matrices such as Q.
fn diagonals_equal(w: &SymmetricMatrix, i: usize, j: usize) -> bool {
    let (a, b) = (w.get(i, i), w.get(j, j));
    if a.fract() == 0.0 && b.fract() == 0.0 && a.abs() < 9.0e15 && b.abs() < 9.0e15 {
        a as i64 == b as i64
    } else {
        a == b
    }
}

/// Lower bound: [`barnes_hoffman_lower`] with the extra `4e_ij` term.
pub fn jiang_zhan_lower(w: &SymmetricMatrix) -> f64 {
    let n = w.order();
    let mut best: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max(jiang_zhan_pair(w, i, j));
        }
    }
    best.sqrt()
}

/// `max_{i,j} sqrt((d_i − d_j)² + 2(d_i + d_j))`, the degree form of
/// [`barnes_hoffman_lower`] on Q.
pub fn barnes_hoffman_degree_form(p: &DegreeProfile) -> f64 {
    let d = &p.degrees;
    let mut best = 0i64;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let (a, b) = (d[i] as i64, d[j] as i64);
            best = best.max((a - b).pow(2) + 2 * (a + b));
        }
    }
    (best as f64).sqrt()
}

// ---------------------------------------------------------------------------
// Closed forms

/// `sqrt((Δ−δ)² + 2Δ + 2δ + 4)`.
pub fn meg2_closed(max: usize, min: usize) -> f64 {
    let (a, b) = (max as f64, min as f64);
    ((a - b).powi(2) + 2.0 * a + 2.0 * b + 4.0).sqrt()
}

/// `(1/(n−1))·sqrt((nΔ)² + 8(m−Δ)(2m−nΔ))`.
pub fn l2_closed(n: usize, m: usize, max: usize) -> f64 {
    let (n_, m_, d_) = (n as i128, m as i128, max as i128);
    let radicand = (n_ * d_).pow(2) + 8 * (m_ - d_) * (2 * m_ - n_ * d_);
    (radicand.max(0) as f64).sqrt() / (n as f64 - 1.0)
}

/// `(2/n)·sqrt(n·M1 − 4m² + 2mn)`.
pub fn zagreb_lower(p: &DegreeProfile) -> f64 {
    let (n, m) = (p.n as i128, p.m as i128);
    let radicand = n * p.zagreb1 as i128 - 4 * m * m + 2 * m * n;
    2.0 / p.n as f64 * (radicand.max(0) as f64).sqrt()
}

/// `max(2√Δ, sqrt((Δ−δ)² + 2Δ + 2δ))`.
pub fn degree_two_case(max: usize, min: usize) -> f64 {
    let (a, b) = (max as f64, min as f64);
    (2.0 * a.sqrt()).max(((a - b).powi(2) + 2.0 * a + 2.0 * b).sqrt())
}

/// `2 + 2cos(π/n)`, the spread of the path on n vertices.
pub fn path_spread(n: usize) -> f64 {
    2.0 + 2.0 * (std::f64::consts::PI / n as f64).cos()
}

/// `sqrt(2M1 + 4m − 8m²/n)`; the radicand is formed exactly.
pub fn mirsky_q(p: &DegreeProfile) -> f64 {
    let (n, m) = (p.n as i128, p.m as i128);
    let num = (2 * p.zagreb1 as i128 + 4 * m) * n - 8 * m * m;
    (num.max(0) as f64 / p.n as f64).sqrt()
}

/// Upper bound on M1 in terms of n, m, Δ, δ.
pub fn zagreb_upper(p: &DegreeProfile) -> f64 {
    let (n1, m, dmax, dmin) = (p.n as f64 - 1.0, p.m as f64, p.max as f64, p.min as f64);
    m * (2.0 * m / n1 + (n1 - 1.0) / n1 * dmax + (dmax - dmin) * (1.0 - dmax / n1))
}

/// [`mirsky_q`] with M1 replaced by [`zagreb_upper`].
pub fn mirsky_q_degree_only(p: &DegreeProfile) -> f64 {
    let (n, m) = (p.n as f64, p.m as f64);
    (2.0 * zagreb_upper(p) + 4.0 * m - 8.0 * m * m / n).max(0.0).sqrt()
}

/// Upper bound on the Laplacian spread: `sqrt(2M1 + 4m − 8m²/(n−1))`.
pub fn das_laplacian(p: &DegreeProfile) -> f64 {
    let (n1, m) = (p.n as i128 - 1, p.m as i128);
    let num = (2 * p.zagreb1 as i128 + 4 * m) * n1 - 8 * m * m;
    (num.max(0) as f64 / n1 as f64).sqrt()
}

/// `max_v d(v) + (1/d(v))·Σ_{u~v} d(u)` over non-isolated v.
pub fn liu_degree_avg(p: &DegreeProfile) -> f64 {
    p.degrees
        .iter()
        .zip(&p.second_degrees)
        .filter(|(&d, _)| d > 0)
        .map(|(&d, &s)| d as f64 + s as f64 / d as f64)
        .fold(0.0, f64::max)
}

/// `|(Σd³ + Σd·d2)/M1 − Υ|`, with Υ the smallest "small eigenvalue" of the
/// 2×2 blocks `[[Δ, 1], [1, d_p]]` over edges at a maximum-degree vertex.
pub fn cubic_moment(g: &Graph, p: &DegreeProfile) -> Result<f64> {
    if p.m == 0 {
        return Err(Error::InvalidSize("needs at least one edge".into()));
    }
    let dmax = p.max;
    let upsilon = g
        .edges()
        .iter()
        .filter_map(|&(a, b)| match (p.degrees[a] == dmax, p.degrees[b] == dmax) {
            (true, _) => Some(p.degrees[b]),
            (_, true) => Some(p.degrees[a]),
            _ => None,
        })
        .map(|dp| {
            let x = (dmax + dp) as f64 / 2.0;
            x - (x * x + 1.0 - (dmax * dp) as f64).sqrt()
        })
        .fold(f64::INFINITY, f64::min);
    let ratio = (p.cubic_sum() + p.degree_second_degree_sum()) as f64 / p.zagreb1 as f64;
    Ok((ratio - upsilon).abs())
}

/// The two degree-only lower bounds `L1` (= meg2) and `L2` (= liu_2.3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct L1L2Comparison {
    pub l1: f64,
    pub l2: f64,
    /// `l2.partial_cmp(l1)`.
    pub order: Ordering,
    pub regime: L1L2Regime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum L1L2Regime {
    /// k-regular: L2 ≤ L1 predicted iff `k ≤ 3` or `k = 4, n ≥ 10`.
    Regular { k: usize, predicts_l2_le_l1: bool },
    /// Connected with a pendant vertex and `(2n−1)Δ² < 7(n−1)²`: L2 < L1.
    PendantSmallDegree,
    /// Pendant vertex but the degree condition fails: no prediction.
    PendantLargeDegree,
    Unclassified,
}

pub fn compare_l1_l2(g: &Graph) -> Result<L1L2Comparison> {
    let p = g.degree_profile();
    if p.n <= 2 {
        return Err(Error::InvalidSize("the comparison needs n > 2".into()));
    }
    let l1 = meg2_closed(p.max, p.min);
    let l2 = l2_closed(p.n, p.m, p.max);
    let regime = if p.is_regular() {
        let k = p.max;
        L1L2Regime::Regular {
            k,
            predicts_l2_le_l1: k <= 3 || (k == 4 && p.n >= 10),
        }
    } else if p.min == 1 && g.is_connected() {
        let (n, d) = (p.n as u128, p.max as u128);
        if (2 * n - 1) * d * d < 7 * (n - 1) * (n - 1) {
            L1L2Regime::PendantSmallDegree
        } else {
            L1L2Regime::PendantLargeDegree
        }
    } else {
        L1L2Regime::Unclassified
    };
    Ok(L1L2Comparison {
        l1,
        l2,
        order: l2.partial_cmp(&l1).unwrap_or(Ordering::Equal),
        regime,
    })
}

// ---------------------------------------------------------------------------
// Results and catalog

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Lower,
    Upper,
}

/// Which spread a bound estimates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `q_1 − q_n`.
    SignlessSpread,
    /// `μ_1 − μ_{n−1}`.
    LaplacianSpread,
}

bitflags! {
    /// Hypotheses an entry needs before it may be evaluated.
    #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
    pub struct Assumptions: u16 {
        const CONNECTED = 1;
        const REGULAR = 1 << 1;
        const NO_ISOLATED = 1 << 2;
        const HAS_EDGE = 1 << 3;
        const MIN_ORDER_5 = 1 << 4;
        /// Needs an exact combinatorial oracle with a size limit.
        const ORACLE = 1 << 5;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub name: &'static str,
    pub value: f64,
    pub direction: Direction,
    pub target: Target,
    pub assumptions: Assumptions,
    pub inputs_used: &'static [&'static str],
    /// The underlying inequality is strict; checked as non-strict.
    pub strict: bool,
}

type Evaluator = fn(&BoundContext<'_>) -> Result<f64>;

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub direction: Direction,
    pub target: Target,
    pub assumptions: Assumptions,
    pub inputs: &'static [&'static str],
    pub strict: bool,
    /// The printed formula can overshoot on regular graphs (K_2, K_3, ...);
    /// violations there are logged rather than counted.
    pub regular_exempt: bool,
    eval: Evaluator,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("name", &self.name).finish()
    }
}

impl CatalogEntry {
    /// `None` when every hypothesis holds, else the first failing one.
    pub fn inapplicable_reason(&self, ctx: &BoundContext<'_>, include_oracle: bool) -> Option<String> {
        let g = ctx.graph;
        let a = self.assumptions;
        if a.contains(Assumptions::CONNECTED) && !g.is_connected() {
            return Some("graph is not connected".into());
        }
        if a.contains(Assumptions::REGULAR) && g.regular_degree().is_none() {
            return Some("graph is not regular".into());
        }
        if a.contains(Assumptions::NO_ISOLATED) && g.has_isolated_vertex() {
            return Some("graph has an isolated vertex".into());
        }
        if a.contains(Assumptions::HAS_EDGE) && g.size() == 0 {
            return Some("graph has no edges".into());
        }
        if a.contains(Assumptions::MIN_ORDER_5) && g.order() < 5 {
            return Some("needs n >= 5".into());
        }
        if a.contains(Assumptions::ORACLE) && !include_oracle {
            return Some("oracle bounds disabled".into());
        }
        None
    }

    fn result(&self, value: f64) -> BoundResult {
        BoundResult {
            name: self.name,
            value,
            direction: self.direction,
            target: self.target,
            assumptions: self.assumptions,
            inputs_used: self.inputs,
            strict: self.strict,
        }
    }
}

/// Inputs shared by all catalog entries for one graph, each built lazily and
/// at most once.
pub struct BoundContext<'g> {
    graph: &'g Graph,
    profile: DegreeProfile,
    limits: OracleLimits,
    search: SearchConfig,
    exec: Exec,
    q: OnceLock<SymmetricMatrix>,
    spectra: OnceLock<Result<SpreadReport>>,
    vb: OnceLock<Result<usize>>,
    trace: OnceLock<Result<SearchTrace>>,
}

impl<'g> BoundContext<'g> {
    pub fn new(graph: &'g Graph, limits: OracleLimits, search: SearchConfig, exec: Exec) -> Self {
        Self {
            graph,
            profile: graph.degree_profile(),
            limits,
            search,
            exec,
            q: OnceLock::new(),
            spectra: OnceLock::new(),
            vb: OnceLock::new(),
            trace: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    pub fn q(&self) -> &SymmetricMatrix {
        self.q.get_or_init(|| signless_laplacian_matrix(self.graph))
    }

    pub fn spectra(&self) -> Result<&SpreadReport> {
        self.spectra
            .get_or_init(|| spread_report(self.graph))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn vertex_bipartiteness(&self) -> Result<usize> {
        self.vb
            .get_or_init(|| {
                vertex_bipartiteness_with(self.graph, self.limits.vertex_bipartiteness, self.exec)
            })
            .clone()
    }

    pub fn search_trace(&self) -> Result<&SearchTrace> {
        self.trace
            .get_or_init(|| minmax::gradient_search(self.q(), &self.search))
            .as_ref()
            .map_err(Clone::clone)
    }
}

macro_rules! entry {
    ($name:expr, $desc:expr, $dir:ident, $target:ident, $assume:expr, $inputs:expr, $eval:expr) => {
        entry!($name, $desc, $dir, $target, $assume, $inputs, $eval, false, false)
    };
    ($name:expr, $desc:expr, $dir:ident, $target:ident, $assume:expr, $inputs:expr, $eval:expr,
     $strict:expr, $exempt:expr) => {
        CatalogEntry {
            name: $name,
            description: $desc,
            direction: Direction::$dir,
            target: Target::$target,
            assumptions: $assume,
            inputs: $inputs,
            strict: $strict,
            regular_exempt: $exempt,
            eval: $eval,
        }
    };
}

const NONE: Assumptions = Assumptions::empty();
const CONN: Assumptions = Assumptions::CONNECTED;
const REG: Assumptions = Assumptions::REGULAR.union(Assumptions::HAS_EDGE);
const ORACLE: Assumptions = Assumptions::ORACLE;

fn meg2_eval(c: &BoundContext<'_>) -> Result<f64> {
    Ok(meg2_closed(c.profile.max, c.profile.min))
}

fn vb_f64(c: &BoundContext<'_>) -> Result<f64> {
    c.vertex_bipartiteness().map(|v| v as f64)
}

/// Every bound, in table order: the usual table columns first, then extras.
pub static CATALOG: &[CatalogEntry] = &[
    entry!("liu_2.3", "(1/(n-1))sqrt((n D)^2 + 8(m-D)(2m-n D))", Lower, SignlessSpread, NONE,
        &["n", "m", "Delta"], |c| Ok(l2_closed(c.profile.n, c.profile.m, c.profile.max))),
    entry!("meg1", "(2/n)sqrt(n M1 - 4m^2 + 2mn)", Lower, SignlessSpread, CONN,
        &["n", "m", "M1"], |c| Ok(zagreb_lower(&c.profile))),
    entry!("meg2", "sqrt((D-d)^2 + 2D + 2d + 4)", Lower, SignlessSpread, NONE,
        &["Delta", "delta"], meg2_eval, false, true),
    entry!("Ncon", "all-ones vector in the minmax bound", Lower, SignlessSpread, NONE,
        &["n", "m", "M1"], |c| Ok(minmax::ncon_closed_form(&c.profile))),
    entry!("Z1", "reciprocal-degree vector in the minmax bound", Lower, SignlessSpread,
        Assumptions::NO_ISOLATED, &["degrees", "adjacency"], |c| minmax::reciprocal_degree_bound(c.graph)),
    entry!("Z2", "inverse-cube-degree vector in the minmax bound", Lower, SignlessSpread,
        Assumptions::NO_ISOLATED, &["degrees", "Q"], |c| minmax::inverse_cube_degree_bound(c.graph, c.q())),
    entry!("eta", "best value of the gradient search", Lower, SignlessSpread, NONE,
        &["Q"], |c| c.search_trace().map(|t| t.best_value)),
    entry!("liu_delta", "Delta + 1 - delta (strict)", Lower, SignlessSpread, CONN,
        &["Delta", "delta"], |c| Ok((c.profile.max + 1 - c.profile.min) as f64), true, false),
    entry!("deg", "degree vector in the minmax bound", Lower, SignlessSpread, NONE,
        &["degrees", "second degrees"], |c| Ok(minmax::degree_vector_bound(&c.profile))),
    entry!("one_step", "minmax bound after one analytic gradient step", Lower, SignlessSpread, NONE,
        &["Q"], |c| minmax::one_step_analytic_bound(c.q(), c.search.step)),
    entry!("L1", "same formula as meg2", Lower, SignlessSpread, NONE,
        &["Delta", "delta"], meg2_eval, false, true),
    entry!("degree_two_case", "max(2 sqrt(D), sqrt((D-d)^2 + 2D + 2d))", Lower, SignlessSpread, NONE,
        &["Delta", "delta"], |c| Ok(degree_two_case(c.profile.max, c.profile.min))),
    entry!("cubic_moment", "|(sum d^3 + sum d d2)/M1 - Y|", Lower, SignlessSpread, Assumptions::HAS_EDGE,
        &["degrees", "second degrees", "M1"], |c| cubic_moment(c.graph, &c.profile)),
    entry!("path_universal", "2 + 2cos(pi/n)", Lower, SignlessSpread, CONN,
        &["n"], |c| Ok(path_spread(c.profile.n))),
    entry!("regular_sqrt", "2 sqrt(k+1) for k-regular", Lower, SignlessSpread, REG,
        &["k"], |c| Ok(2.0 * ((c.profile.max + 1) as f64).sqrt()), false, true),
    entry!("regular_kplus1", "k + 1 for k-regular", Lower, SignlessSpread, REG,
        &["k"], |c| Ok((c.profile.max + 1) as f64)),
    entry!("bh_q", "pairwise diagonal/row-energy bound on Q", Lower, SignlessSpread, NONE,
        &["Q"], |c| Ok(barnes_hoffman_lower(c.q()))),
    entry!("mu1_minus_vb", "mu_1 - vb", Lower, SignlessSpread, ORACLE,
        &["mu_1", "vb"], |c| Ok(c.spectra()?.mu1() - vb_f64(c)?)),
    entry!("4m_over_n_minus_vb", "4m/n - vb", Lower, SignlessSpread, ORACLE,
        &["n", "m", "vb"], |c| Ok(4.0 * c.profile.m as f64 / c.profile.n as f64 - vb_f64(c)?)),
    entry!("2lambda1_minus_vb", "2 lambda_1 - vb", Lower, SignlessSpread, ORACLE,
        &["lambda_1", "vb"], |c| Ok(2.0 * c.spectra()?.lambda1() - vb_f64(c)?)),
    entry!("mirsky_q", "sqrt(2 M1 + 4m - 8m^2/n)", Upper, SignlessSpread, NONE,
        &["n", "m", "M1"], |c| Ok(mirsky_q(&c.profile))),
    entry!("mirsky_q_deg", "mirsky_q with M1 bounded by n, m, Delta, delta", Upper, SignlessSpread, NONE,
        &["n", "m", "Delta", "delta"], |c| Ok(mirsky_q_degree_only(&c.profile))),
    entry!("global_2n4", "2n - 4", Upper, SignlessSpread, Assumptions::MIN_ORDER_5,
        &["n"], |c| Ok(2.0 * c.profile.n as f64 - 4.0)),
    entry!("liu_degree_avg", "max_v d(v) + avg neighbour degree", Upper, SignlessSpread, CONN,
        &["degrees", "second degrees"], |c| Ok(liu_degree_avg(&c.profile))),
    entry!("das_laplacian", "sqrt(2 M1 + 4m - 8m^2/(n-1)) on the Laplacian spread", Upper, LaplacianSpread,
        Assumptions::MIN_ORDER_5.union(Assumptions::HAS_EDGE), &["n", "m", "M1"], |c| Ok(das_laplacian(&c.profile))),
];

pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Value(BoundResult),
    Inapplicable(String),
    Unavailable(Error),
}

#[derive(Clone, Debug)]
pub struct CatalogRecord {
    pub entry: &'static CatalogEntry,
    pub outcome: Outcome,
}

impl CatalogRecord {
    pub fn value(&self) -> Option<f64> {
        match &self.outcome {
            Outcome::Value(r) => Some(r.value),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogOptions {
    /// Names to evaluate, in the order given; `None` means the whole catalog.
    pub selection: Option<Vec<String>>,
    pub include_oracle: bool,
    pub limits: OracleLimits,
    pub search: SearchConfig,
    pub exec: Exec,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        Self {
            selection: None,
            include_oracle: true,
            limits: OracleLimits::default(),
            search: SearchConfig::default(),
            exec: Exec::default(),
        }
    }
}

impl CatalogOptions {
    pub fn entries(&self) -> Result<Vec<&'static CatalogEntry>> {
        match &self.selection {
            None => Ok(CATALOG.iter().collect()),
            Some(names) => names
                .iter()
                .map(|n| {
                    catalog_entry(n).ok_or_else(|| Error::InvalidConfig(format!("unknown bound {n:?}")))
                })
                .collect(),
        }
    }
}

/// Evaluates the selected entries. Failures stay local to their entry.
pub fn evaluate_catalog(g: &Graph, options: &CatalogOptions) -> Result<Vec<CatalogRecord>> {
    let ctx = BoundContext::new(g, options.limits, options.search, options.exec);
    evaluate_with(&ctx, &options.entries()?, options.include_oracle)
}

pub fn evaluate_with(
    ctx: &BoundContext<'_>,
    entries: &[&'static CatalogEntry],
    include_oracle: bool,
) -> Result<Vec<CatalogRecord>> {
    Ok(entries
        .iter()
        .map(|&entry| {
            let outcome = match entry.inapplicable_reason(ctx, include_oracle) {
                Some(reason) => Outcome::Inapplicable(reason),
                None => match (entry.eval)(ctx) {
                    Ok(v) if v.is_finite() => Outcome::Value(entry.result(v)),
                    Ok(v) => Outcome::Unavailable(Error::InvalidConfig(format!("non-finite value {v}"))),
                    Err(e) => Outcome::Unavailable(e),
                },
            };
            CatalogRecord { entry, outcome }
        })
        .collect())
}

/// How a bound value compares with the true spread.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Verdict {
    Holds,
    /// On the wrong side by more than the tolerance.
    Violated { excess: f64 },
    /// Violated, but the entry is exempt on regular graphs.
    Logged { excess: f64 },
}

/// Exact spreads the bounds are compared with.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Truth {
    pub signless: f64,
    pub laplacian: f64,
    pub regular: bool,
}

impl Truth {
    pub fn of(g: &Graph, report: &SpreadReport) -> Self {
        Self {
            signless: report.signless_spread(),
            laplacian: report.laplacian_spread(),
            regular: g.regular_degree().is_some(),
        }
    }
}

pub fn verdict(entry: &CatalogEntry, value: f64, truth: &Truth, tol: f64) -> Verdict {
    let actual = match entry.target {
        Target::SignlessSpread => truth.signless,
        Target::LaplacianSpread => truth.laplacian,
    };
    let excess = match entry.direction {
        Direction::Lower => value - actual,
        Direction::Upper => actual - value,
    };
    if excess <= tol {
        Verdict::Holds
    } else if entry.regular_exempt && truth.regular {
        Verdict::Logged { excess }
    } else {
        Verdict::Violated { excess }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_named, Family};

    fn named(f: Family) -> Graph {
        generate_named(f).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = CATALOG.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), CATALOG.len());
    }

    #[test]
    fn generic_bounds() {
        let k2 = SymmetricMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(close(mirsky_upper(&k2), 2.0, 1e-12));
        assert_eq!(mirsky_upper(&SymmetricMatrix::identity(4)), 0.0);
        assert!(close(barnes_hoffman_lower(&k2), 2.0, 1e-12));
        assert!(close(jiang_zhan_lower(&k2), 2.0, 1e-12));
        let diag = SymmetricMatrix::from_diagonal(&[5.0, 2.0]);
        assert!(close(barnes_hoffman_lower(&diag), 3.0, 1e-12));
        let star = signless_laplacian_matrix(&named(Family::Star(4)));
        assert!(close(barnes_hoffman_lower(&star), 12f64.sqrt(), 1e-12));
        assert!(close(jiang_zhan_lower(&star), 4.0, 1e-12));
        let k22 = signless_laplacian_matrix(&named(Family::CompleteBipartite(2, 2)));
        assert!(close(mirsky_upper(&k22), 4.0, 1e-12));
    }

    #[test]
    fn closed_forms_against_printed_values() {
        assert!(close(meg2_closed(36, 27), 14.53, 0.005));
        assert!(close(meg2_closed(23, 9), 16.25, 0.005));
        assert!(close(l2_closed(40, 634, 36), 28.68, 0.005));
        assert!(close(l2_closed(40, 322, 23), 11.06, 0.01));
        assert!(close(degree_two_case(23, 9), 260f64.sqrt(), 1e-12));
        assert_eq!(degree_two_case(1, 1), 2.0);
    }

    #[test]
    fn degree_bounds_on_small_graphs() {
        let p3 = named(Family::Path(3)).degree_profile();
        assert!(close(zagreb_lower(&p3), 2.0 / 3.0 * 14f64.sqrt(), 1e-12));
        let k2 = named(Family::Path(2)).degree_profile();
        assert!(close(zagreb_lower(&k2), 2.0, 1e-12));
        assert!(close(mirsky_q(&k2), 2.0, 1e-12));
        let star = named(Family::Star(4)).degree_profile();
        assert!(close(mirsky_q_degree_only(&star), 18f64.sqrt(), 1e-12));
        assert!(close(liu_degree_avg(&star), 4.0, 1e-12));
        assert!(close(liu_degree_avg(&p3), 3.0, 1e-12));
        let k22 = named(Family::CompleteBipartite(2, 2)).degree_profile();
        assert!(close(mirsky_q_degree_only(&k22), 4.0, 1e-12));
        let k5 = named(Family::Complete(5)).degree_profile();
        assert_eq!(das_laplacian(&k5), 0.0);
    }

    #[test]
    fn cubic_moment_regular_and_k2() {
        for k in 1..=8 {
            let g = named(Family::Complete(k + 1));
            let v = cubic_moment(&g, &g.degree_profile()).unwrap();
            assert!(close(v, (k + 1) as f64, 1e-12), "k={k}: {v}");
        }
    }

    #[test]
    fn l1_l2_regimes() {
        let c = compare_l1_l2(&named(Family::Circulant(10, 5))).unwrap();
        assert!(close(c.l2, 50.0 / 9.0, 1e-12) && c.order == Ordering::Greater);
        let c = compare_l1_l2(&named(Family::Circulant(10, 4))).unwrap();
        assert!(c.order == Ordering::Less);
        assert!(matches!(c.regime, L1L2Regime::Regular { k: 4, predicts_l2_le_l1: true }));
        assert!(compare_l1_l2(&named(Family::Path(2))).is_err());
        // (2n-1)Δ² = 7(n-1)² exactly: on the boundary, no prediction.
        let c = compare_l1_l2(&named(Family::Star(4))).unwrap();
        assert_eq!(c.regime, L1L2Regime::PendantLargeDegree);
        let c = compare_l1_l2(&named(Family::Path(5))).unwrap();
        assert_eq!(c.regime, L1L2Regime::PendantSmallDegree);
        assert!(c.l2 < c.l1);
    }

    #[test]
    fn catalog_on_k2() {
        let g = named(Family::Path(2));
        let recs = evaluate_catalog(&g, &CatalogOptions::default()).unwrap();
        let truth = Truth::of(&g, &spread_report(&g).unwrap());
        for r in &recs {
            if let Some(v) = r.value() {
                match verdict(r.entry, v, &truth, 1e-6) {
                    Verdict::Holds => {}
                    Verdict::Logged { .. } => {
                        assert!(["meg2", "L1", "regular_sqrt"].contains(&r.entry.name))
                    }
                    Verdict::Violated { excess } => panic!("{} by {excess}", r.entry.name),
                }
            }
        }
        let global = recs.iter().find(|r| r.entry.name == "global_2n4").unwrap();
        assert!(matches!(global.outcome, Outcome::Inapplicable(_)));
    }

    #[test]
    fn disconnected_flags_connected_entries() {
        let g = named(Family::CompletePlusIsolated(6));
        let recs = evaluate_catalog(&g, &CatalogOptions::default()).unwrap();
        for r in &recs {
            if r.entry.assumptions.contains(Assumptions::CONNECTED) {
                assert!(matches!(r.outcome, Outcome::Inapplicable(_)), "{}", r.entry.name);
            }
        }
    }

    #[test]
    fn oracle_limit_is_local_to_entry() {
        let g = named(Family::Cycle(25));
        let recs = evaluate_catalog(&g, &CatalogOptions::default()).unwrap();
        let vb = recs.iter().find(|r| r.entry.name == "mu1_minus_vb").unwrap();
        assert!(matches!(vb.outcome, Outcome::Unavailable(Error::OracleLimit { .. })));
        assert!(recs.iter().find(|r| r.entry.name == "meg1").unwrap().value().is_some());
    }

    #[test]
    fn selection_order_and_unknown_names() {
        let g = named(Family::Cycle(5));
        let opts = CatalogOptions {
            selection: Some(vec!["Z1".into(), "meg1".into()]),
            ..CatalogOptions::default()
        };
        let recs = evaluate_catalog(&g, &opts).unwrap();
        assert_eq!(recs.iter().map(|r| r.entry.name).collect::<Vec<_>>(), ["Z1", "meg1"]);
        let bad = CatalogOptions {
            selection: Some(vec!["nope".into()]),
            ..CatalogOptions::default()
        };
        assert!(evaluate_catalog(&g, &bad).is_err());
    }
}
