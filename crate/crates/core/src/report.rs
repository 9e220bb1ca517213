//! Graph sources, bound tables and their text/CSV rendering.

use std::fmt;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use crate::bounds::{self, BoundContext, CatalogEntry, Outcome, Truth, Verdict};
use crate::combinatorics::{edge_bipartiteness_with, independence_number, OracleLimits};
use crate::edgelist::read_edge_list;
use crate::error::{Error, Result};
use crate::generators::{generate_named, generate_random_connected, generate_random_connected_bipartite, Family};
use crate::graph::Graph;
use crate::minmax::SearchConfig;
use crate::par::Exec;

/// Sandwich tolerance used for the violations column.
pub const TABLE_TOLERANCE: f64 = 1e-6;

/// Where a graph comes from. Parses from and displays as the CLI syntax:
/// `path:5`, `cycle:6`, `complete:4`, `star:4`, `kbip:3,3`, `kn1uk1:6`,
/// `regular:10,4`, `rand:n=40,m=634,seed=1`, `randbip:n=12,m=20,seed=3`,
/// `file:PATH`. A random spec without `seed=` takes the run's default seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Named(Family),
    Random { n: usize, m: usize, seed: Option<u64> },
    RandomBipartite { n: usize, m: usize, seed: Option<u64> },
    File(PathBuf),
}

impl GraphSource {
    /// Fills a missing random seed.
    pub fn with_default_seed(self, seed: u64) -> Self {
        match self {
            Self::Random { n, m, seed: None } => Self::Random { n, m, seed: Some(seed) },
            Self::RandomBipartite { n, m, seed: None } => Self::RandomBipartite { n, m, seed: Some(seed) },
            other => other,
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Self::Random { seed, .. } | Self::RandomBipartite { seed, .. } => Some(seed.unwrap_or(0)),
            _ => None,
        }
    }

    pub fn load(&self) -> Result<Graph> {
        match self {
            Self::Named(f) => generate_named(*f),
            Self::Random { n, m, seed } => generate_random_connected(*n, *m, seed.unwrap_or(0)),
            Self::RandomBipartite { n, m, seed } => {
                generate_random_connected_bipartite(*n, *m, seed.unwrap_or(0))
            }
            Self::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                read_edge_list(&text, true)
            }
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seed = |s: &Option<u64>| s.map(|s| format!(",seed={s}")).unwrap_or_default();
        match self {
            Self::Named(Family::Path(n)) => write!(f, "path:{n}"),
            Self::Named(Family::Cycle(n)) => write!(f, "cycle:{n}"),
            Self::Named(Family::Complete(n)) => write!(f, "complete:{n}"),
            Self::Named(Family::Star(n)) => write!(f, "star:{n}"),
            Self::Named(Family::CompleteBipartite(p, q)) => write!(f, "kbip:{p},{q}"),
            Self::Named(Family::CompletePlusIsolated(n)) => write!(f, "kn1uk1:{n}"),
            Self::Named(Family::Circulant(n, k)) => write!(f, "regular:{n},{k}"),
            Self::Random { n, m, seed: s } => write!(f, "rand:n={n},m={m}{}", seed(s)),
            Self::RandomBipartite { n, m, seed: s } => write!(f, "randbip:n={n},m={m}{}", seed(s)),
            Self::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GraphSource {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidConfig(format!("graph source {spec:?}: {msg}"));
        let (kind, args) = spec.split_once(':').ok_or_else(|| bad("expected KIND:ARGS"))?;
        let ints = || -> Result<Vec<usize>> {
            args.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad("expected integers")))
                .collect()
        };
        let one = || -> Result<usize> {
            match ints()?.as_slice() {
                [n] => Ok(*n),
                _ => Err(bad("expected one integer")),
            }
        };
        let two = || -> Result<(usize, usize)> {
            match ints()?.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(bad("expected two integers")),
            }
        };
        let keyed = || -> Result<(usize, usize, Option<u64>)> {
            let (mut n, mut m, mut seed) = (None, None, None);
            for part in args.split(',') {
                let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                let v = v.trim();
                match k.trim() {
                    "n" => n = Some(v.parse().map_err(|_| bad("bad n"))?),
                    "m" => m = Some(v.parse().map_err(|_| bad("bad m"))?),
                    "seed" => seed = Some(v.parse().map_err(|_| bad("bad seed"))?),
                    other => return Err(bad(&format!("unknown key {other:?}"))),
                }
            }
            Ok((n.ok_or_else(|| bad("missing n"))?, m.ok_or_else(|| bad("missing m"))?, seed))
        };
        Ok(match kind {
            "path" => Self::Named(Family::Path(one()?)),
            "cycle" => Self::Named(Family::Cycle(one()?)),
            "complete" => Self::Named(Family::Complete(one()?)),
            "star" => Self::Named(Family::Star(one()?)),
            "kn1uk1" => Self::Named(Family::CompletePlusIsolated(one()?)),
            "kbip" => {
                let (p, q) = two()?;
                Self::Named(Family::CompleteBipartite(p, q))
            }
            "regular" => {
                let (n, k) = two()?;
                Self::Named(Family::Circulant(n, k))
            }
            "rand" => {
                let (n, m, seed) = keyed()?;
                Self::Random { n, m, seed }
            }
            "randbip" => {
                let (n, m, seed) = keyed()?;
                Self::RandomBipartite { n, m, seed }
            }
            "file" if !args.is_empty() => Self::File(PathBuf::from(args)),
            _ => return Err(bad("unknown kind")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    #[default]
    Text,
}

/// Column name of the external bound that is shown but never computed.
pub const EXTERNAL_COLUMN: &str = "liu_2.2";

/// Default table columns, after the external one.
pub const DEFAULT_BOUNDS: &[&str] = &["liu_2.3", "meg1", "meg2", "Ncon", "Z1", "Z2", "eta", "liu_delta"];

/// Bound columns of a table.
#[derive(Clone, Debug)]
pub struct BoundSelection {
    pub external_column: bool,
    pub entries: Vec<&'static CatalogEntry>,
}

impl Default for BoundSelection {
    fn default() -> Self {
        Self {
            external_column: true,
            entries: DEFAULT_BOUNDS.iter().map(|n| bounds::catalog_entry(n).expect("default names exist")).collect(),
        }
    }
}

impl FromStr for BoundSelection {
    type Err = Error;

    /// `all`, `default`, or a comma list of catalog names (`liu_2.2` allowed).
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "default" => Ok(Self::default()),
            "all" => Ok(Self {
                external_column: true,
                entries: bounds::CATALOG.iter().collect(),
            }),
            list => {
                let mut sel = Self {
                    external_column: false,
                    entries: Vec::new(),
                };
                for name in list.split(',').map(str::trim).filter(|n| !n.is_empty()) {
                    if name == EXTERNAL_COLUMN {
                        sel.external_column = true;
                    } else {
                        sel.entries.push(
                            bounds::catalog_entry(name)
                                .ok_or_else(|| Error::InvalidConfig(format!("unknown bound {name:?}")))?,
                        );
                    }
                }
                if !sel.external_column && sel.entries.is_empty() {
                    return Err(Error::InvalidConfig("empty bound selection".into()));
                }
                Ok(sel)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub sources: Vec<GraphSource>,
    pub bounds: BoundSelection,
    pub limits: OracleLimits,
    pub search: SearchConfig,
    pub oracle_columns: bool,
    pub format: OutputFormat,
    /// Decimals in text output.
    pub precision: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            sources: Vec::new(),
            bounds: BoundSelection::default(),
            limits: OracleLimits::default(),
            search: SearchConfig::default(),
            oracle_columns: true,
            format: OutputFormat::Text,
            precision: 2,
            seed: 1,
            exec: Exec::default(),
        }
    }
}

impl RunConfig {
    pub fn resolved_sources(&self) -> Vec<GraphSource> {
        self.sources.iter().cloned().map(|s| s.with_default_seed(self.seed)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Value(f64),
    /// Hypotheses not met.
    Inapplicable,
    /// Oracle over its size limit or evaluation failed.
    Unavailable,
    External,
}

impl Cell {
    pub fn value(&self) -> Option<f64> {
        match self {
            Cell::Value(v) => Some(*v),
            _ => None,
        }
    }

    fn render(&self, fmt_value: impl Fn(f64) -> String) -> String {
        match self {
            Cell::Value(v) => fmt_value(*v),
            Cell::Inapplicable => "-".into(),
            Cell::Unavailable => "n/a".into(),
            Cell::External => "ext".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// One cell per bound column, in column order.
    pub bounds: Vec<(String, Cell)>,
    pub spread: f64,
    pub alpha: Option<Cell>,
    pub vb: Option<Cell>,
    pub eb: Option<Cell>,
    pub seed: Option<u64>,
    /// `name` for a counted violation, `name(logged)` for an exempt one.
    pub violations: Vec<String>,
    pub unflagged_violation: bool,
}

fn oracle_cell<T: Into<f64>>(r: Result<T>) -> Cell {
    match r {
        Ok(v) => Cell::Value(v.into()),
        Err(_) => Cell::Unavailable,
    }
}

pub fn compute_row(source: &GraphSource, cfg: &RunConfig) -> Result<ExperimentRow> {
    let g = source.load()?;
    let ctx = BoundContext::new(&g, cfg.limits, cfg.search, cfg.exec);
    let report = ctx.spectra()?;
    let truth = Truth::of(&g, report);
    let records = bounds::evaluate_with(&ctx, &cfg.bounds.entries, true)?;

    let mut cells = Vec::new();
    if cfg.bounds.external_column {
        cells.push((EXTERNAL_COLUMN.to_string(), Cell::External));
    }
    let mut violations = Vec::new();
    let mut unflagged = false;
    for rec in &records {
        let cell = match &rec.outcome {
            Outcome::Value(r) => {
                match bounds::verdict(rec.entry, r.value, &truth, TABLE_TOLERANCE) {
                    Verdict::Holds => {}
                    Verdict::Logged { .. } => violations.push(format!("{}(logged)", rec.entry.name)),
                    Verdict::Violated { .. } => {
                        violations.push(rec.entry.name.to_string());
                        unflagged = true;
                    }
                }
                Cell::Value(r.value)
            }
            Outcome::Inapplicable(_) => Cell::Inapplicable,
            Outcome::Unavailable(_) => Cell::Unavailable,
        };
        cells.push((rec.entry.name.to_string(), cell));
    }

    let (alpha, vb, eb) = if cfg.oracle_columns {
        (
            Some(oracle_cell(independence_number(&g, cfg.limits.alpha).map(|v| v as f64))),
            Some(oracle_cell(ctx.vertex_bipartiteness().map(|v| v as f64))),
            Some(oracle_cell(
                edge_bipartiteness_with(&g, cfg.limits.edge_bipartiteness, cfg.exec).map(|v| v as f64),
            )),
        )
    } else {
        (None, None, None)
    };

    Ok(ExperimentRow {
        id: source.to_string(),
        n: g.order(),
        m: g.size(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        bounds: cells,
        spread: truth.signless,
        alpha,
        vb,
        eb,
        seed: source.seed(),
        violations,
        unflagged_violation: unflagged,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableOutput {
    pub rows: Vec<ExperimentRow>,
    pub rendered: String,
    /// Some row has a violation that is not covered by an exemption.
    pub has_violation: bool,
}

/// Computes one row per source (in parallel) and renders them in input order.
pub fn run_table(cfg: &RunConfig) -> Result<TableOutput> {
    if cfg.sources.is_empty() {
        return Err(Error::InvalidConfig("no graph sources given".into()));
    }
    cfg.search.validate()?;
    let sources = cfg.resolved_sources();
    let rows = cfg
        .exec
        .map(&sources, |s| compute_row(s, cfg))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let rendered = match cfg.format {
        OutputFormat::Text => render_text(&rows, cfg.precision),
        OutputFormat::Csv => render_csv(&rows)?,
    };
    Ok(TableOutput {
        has_violation: rows.iter().any(|r| r.unflagged_violation),
        rows,
        rendered,
    })
}

/// Header row; identical for every row of one run.
pub fn header(rows: &[ExperimentRow]) -> Vec<String> {
    let mut h: Vec<String> = ["graph", "n", "m", "Delta", "delta"].map(String::from).to_vec();
    if let Some(r) = rows.first() {
        h.extend(r.bounds.iter().map(|(name, _)| name.clone()));
        h.push("spread".into());
        if r.alpha.is_some() {
            h.extend(["alpha", "vb", "eb"].map(String::from));
        }
    }
    h.extend(["seed", "violations"].map(String::from));
    h
}

fn row_cells(r: &ExperimentRow, fmt_value: &dyn Fn(f64) -> String) -> Vec<String> {
    let mut out = vec![
        r.id.clone(),
        r.n.to_string(),
        r.m.to_string(),
        r.max_degree.to_string(),
        r.min_degree.to_string(),
    ];
    out.extend(r.bounds.iter().map(|(_, c)| c.render(fmt_value)));
    out.push(fmt_value(r.spread));
    for c in [&r.alpha, &r.vb, &r.eb].into_iter().flatten() {
        out.push(c.render(|v| format!("{v}")));
    }
    out.push(r.seed.map(|s| s.to_string()).unwrap_or_else(|| "-".into()));
    out.push(if r.violations.is_empty() { "-".into() } else { r.violations.join(";") });
    out
}

/// Right-aligned columns, `precision` decimals.
pub fn render_text(rows: &[ExperimentRow], precision: usize) -> String {
    let fmt_value = move |v: f64| format!("{v:.precision$}");
    let mut table = vec![header(rows)];
    table.extend(rows.iter().map(|r| row_cells(r, &fmt_value)));
    let widths: Vec<usize> = (0..table[0].len())
        .map(|c| table.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &table {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (cell, &w))| if i == 0 { format!("{cell:<w$}") } else { format!("{cell:>w$}") })
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// Ten significant digits in plain decimal notation.
pub fn format_sig10(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { "0".into() } else { v.to_string() };
    }
    let rounded: f64 = format!("{v:.9e}").parse().unwrap_or(v);
    let exponent = rounded.abs().log10().floor() as i32;
    let decimals = (9 - exponent).max(0) as usize;
    let s = format!("{rounded:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn render_csv(rows: &[ExperimentRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header(rows)).map_err(io)?;
    for r in rows {
        w.write_record(row_cells(r, &format_sig10)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Gradient-search trace for one graph in the two-row layout, followed by
/// `#` footer lines for the start value, the best iterate and any
/// perturbation or stagnation.
pub fn run_trace(source: &GraphSource, search: &SearchConfig, format: OutputFormat, precision: usize) -> Result<String> {
    search.validate()?;
    let g = source.load()?;
    let q = crate::spectra::signless_laplacian_matrix(&g);
    let trace = crate::minmax::gradient_search(&q, search)?;
    let mut out = match format {
        OutputFormat::Csv => trace.to_csv(precision),
        OutputFormat::Text => {
            let head: Vec<String> = (1..=trace.values.len()).map(|k| k.to_string()).collect();
            let vals: Vec<String> = trace.values.iter().map(|v| format!("{v:.precision$}")).collect();
            let w = head.iter().chain(&vals).map(String::len).max().unwrap_or(1);
            let line = |label: &str, cells: &[String]| {
                let mut s = format!("{label:<9}");
                for c in cells {
                    let _ = write!(s, "  {c:>w$}");
                }
                s
            };
            format!("{}\n{}\n", line("iteration", &head), line("f(x)", &vals))
        }
    };
    let _ = writeln!(out, "# start f(x0) = {:.precision$}", trace.initial_value);
    let _ = writeln!(out, "# best eta = {:.precision$} at iteration {}", trace.best_value, trace.iteration_of_best);
    if trace.perturbed {
        let _ = writeln!(
            out,
            "# start point was stationary; coordinate 0 perturbed by {:e}",
            crate::minmax::START_PERTURBATION
        );
    }
    if !trace.stagnant.is_empty() {
        let list: Vec<String> = trace.stagnant.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(out, "# zero gradient, no step at iterations {}", list.join(","));
    }
    Ok(out)
}

/// `key value` lines: n, m, Δ, δ, M1 and the oracle invariants.
pub fn invariants_report(source: &GraphSource, limits: OracleLimits, exec: Exec) -> Result<String> {
    let g = source.load()?;
    let p = g.degree_profile();
    let mut out = String::new();
    let _ = writeln!(out, "graph {source}");
    let _ = writeln!(out, "n {}", p.n);
    let _ = writeln!(out, "m {}", p.m);
    let _ = writeln!(out, "Delta {}", p.max);
    let _ = writeln!(out, "delta {}", p.min);
    let _ = writeln!(out, "M1 {}", p.zagreb1);
    let _ = writeln!(out, "connected {}", g.is_connected());
    let _ = writeln!(out, "bipartite {}", g.is_bipartite());
    let show = |r: Result<usize>| r.map(|v| v.to_string()).unwrap_or_else(|_| "n/a".into());
    let _ = writeln!(out, "alpha {}", show(independence_number(&g, limits.alpha)));
    let _ = writeln!(
        out,
        "vb {}",
        show(crate::combinatorics::vertex_bipartiteness_with(&g, limits.vertex_bipartiteness, exec))
    );
    let _ = writeln!(out, "eb {}", show(edge_bipartiteness_with(&g, limits.edge_bipartiteness, exec)));
    Ok(out)
}

/// Which matrix the `spectrum` output lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    #[default]
    Signless,
}

pub fn spectrum_dump(source: &GraphSource, kind: MatrixKind) -> Result<String> {
    let g = source.load()?;
    let w = match kind {
        MatrixKind::Adjacency => crate::spectra::adjacency_matrix(&g),
        MatrixKind::Laplacian => crate::spectra::laplacian_matrix(&g),
        MatrixKind::Signless => crate::spectra::signless_laplacian_matrix(&g),
    };
    Ok(crate::eigen::eigenvalues(&w)?.dump())
}
