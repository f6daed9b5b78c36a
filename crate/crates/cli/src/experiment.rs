//! Size sweeps over a graph family: one record per instance, an exponent fit
//! of the embedding bound against `m`, and the predicted exponents.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use rayon::prelude::*;
use surplus_core::bounds::{full_report, predicted_exponents, BoundKind, PredictedExponents};
use surplus_core::embedding::{Embedding, EmbeddingParams};
use surplus_core::rounding::best_of_trials;
use surplus_core::{generators, Graph, TrialPlan};

use crate::commands::{resolve_c, CPolicy, Format, CSV_VERSION_LINE};
use crate::error::{CliError, CliResult};

/// Fewest sweep sizes for which a slope is fitted.
pub const MIN_FIT_SIZES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    /// Random triangle-free process; sizes are vertex counts.
    Trianglefree,
    /// Strongly regular graphs from affine lines; sizes are primes `q`.
    Dgt,
    /// `G(n, p)`; sizes are vertex counts.
    Gnp,
    /// Polarity graphs; sizes are primes `q`.
    Polarity,
    Cycle,
    Complete,
}

impl SweepFamily {
    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::Trianglefree => "trianglefree",
            SweepFamily::Dgt => "dgt",
            SweepFamily::Gnp => "gnp",
            SweepFamily::Polarity => "polarity",
            SweepFamily::Cycle => "cycle",
            SweepFamily::Complete => "complete",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub family: SweepFamily,
    pub sizes: Vec<u64>,
    pub epsilon: f64,
    pub c: CPolicy,
    /// Rounding trials per instance; 0 skips rounding.
    pub trials: usize,
    pub seed: u64,
    pub local_search: bool,
    /// Edge probability for `gnp`.
    pub p: Option<f64>,
    /// Fixed `k` for `dgt`; default `round(q^(ε/(1-ε)))`.
    pub k: Option<usize>,
    /// Turán exponent for the second predicted exponent.
    pub alpha: Option<f64>,
}

impl ExperimentSpec {
    pub fn new(family: SweepFamily, sizes: Vec<u64>, epsilon: f64) -> Self {
        Self {
            family,
            sizes,
            epsilon,
            c: CPolicy::Auto,
            trials: 200,
            seed: 0,
            local_search: true,
            p: None,
            k: None,
            alpha: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimings {
    pub generate: Duration,
    pub audit: Duration,
    pub bounds: Duration,
    pub rounding: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub family: &'static str,
    pub size: u64,
    pub k: Option<usize>,
    pub graph_seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub epsilon: f64,
    pub c: f64,
    pub edwards: f64,
    pub embedding: Option<f64>,
    /// Expected surplus of hyperplane rounding.
    pub hyperplane_expectation: Option<f64>,
    pub degeneracy: Option<f64>,
    pub average_degree: Option<f64>,
    pub degree_power_sum: Option<f64>,
    pub eigenvalue: Option<f64>,
    pub exact: Option<f64>,
    pub best_crossing: Option<usize>,
    pub best_surplus: Option<f64>,
    /// Eigenvalue upper bound over embedding lower bound (`dgt`, `ε <= 1/3`).
    pub upper_lower_ratio: Option<f64>,
    /// lower <= achieved <= exact <= upper wherever defined.
    pub consistent: bool,
    pub timings: PhaseTimings,
}

impl ExperimentRecord {
    pub fn lower_bounds(&self) -> impl Iterator<Item = f64> + '_ {
        [
            Some(self.edwards),
            self.embedding,
            self.hyperplane_expectation,
            self.degeneracy,
            self.average_degree,
            self.degree_power_sum,
        ]
        .into_iter()
        .flatten()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub points: usize,
}

/// Ordinary least squares `y = slope · x + intercept`; `None` with fewer
/// than two distinct `x`.
pub fn ols(points: &[(f64, f64)]) -> Option<Fit> {
    let k = points.len();
    if k < 2 {
        return None;
    }
    let kf = k as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / kf;
    let my = points.iter().map(|p| p.1).sum::<f64>() / kf;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    Some(Fit {
        slope,
        intercept: my - slope * mx,
        points: k,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutput {
    pub spec: ExperimentSpec,
    pub records: Vec<ExperimentRecord>,
    /// Slope of `ln(embedding bound)` against `ln m`.
    pub fit: Option<Fit>,
    pub predicted: PredictedExponents<f64>,
    /// Largest over smallest `upper_lower_ratio` across the sweep.
    pub ratio_spread: Option<f64>,
}

fn dgt_k(q: u64, epsilon: f64) -> usize {
    let max = q as usize + 1;
    if epsilon >= 1.0 {
        return max;
    }
    let k = (q as f64).powf(epsilon / (1.0 - epsilon)).round() as usize;
    k.clamp(1, max)
}

fn build(spec: &ExperimentSpec, index: usize, size: u64) -> CliResult<(Graph, Option<usize>, Option<u64>)> {
    let n = usize::try_from(size).map_err(|_| CliError::usage(format!("size {size} too large")))?;
    let seed = spec.seed.wrapping_add(index as u64);
    Ok(match spec.family {
        SweepFamily::Trianglefree => (generators::random_triangle_free(n, seed)?, None, Some(seed)),
        SweepFamily::Gnp => {
            let p = spec.p.ok_or_else(|| CliError::usage("family 'gnp' requires --p"))?;
            (generators::gnp(n, p, seed)?, None, Some(seed))
        }
        SweepFamily::Dgt => {
            let k = spec.k.unwrap_or_else(|| dgt_k(size, spec.epsilon));
            (generators::dgt_srg(size, k)?, Some(k), None)
        }
        SweepFamily::Polarity => (generators::polarity_er(size)?, None, None),
        SweepFamily::Cycle => (generators::cycle(n)?, None, None),
        SweepFamily::Complete => (generators::complete(n)?, None, None),
    })
}

fn run_instance(spec: &ExperimentSpec, index: usize, size: u64) -> CliResult<ExperimentRecord> {
    let mut timings = PhaseTimings::default();
    let clock = Instant::now();
    let (g, k, graph_seed) = build(spec, index, size)?;
    let h = g.remove_isolated().graph;
    timings.generate = clock.elapsed();

    let clock = Instant::now();
    let c = resolve_c(&h, spec.epsilon, spec.c)?;
    timings.audit = clock.elapsed();

    let clock = Instant::now();
    let report = full_report(&h, spec.epsilon, c)?;
    timings.bounds = clock.elapsed();
    let value = |name: &str| report.get(name).map(|e| e.value);

    let clock = Instant::now();
    let (best_crossing, best_surplus) = if spec.trials > 0 && h.m() > 0 {
        let e = Embedding::new(&h, EmbeddingParams::new(spec.epsilon, c)?)?;
        let outcome = best_of_trials(&e, &TrialPlan::new(spec.seed, spec.trials), spec.local_search)?;
        (Some(outcome.cut.crossing()), Some(outcome.cut.surplus()))
    } else {
        (None, None)
    };
    timings.rounding = clock.elapsed();

    let embedding = value("embedding");
    let eigenvalue = value("eigenvalue");
    let exact = value("exact");
    let upper_lower_ratio = match (spec.family, eigenvalue, embedding) {
        (SweepFamily::Dgt, Some(up), Some(lo)) if spec.epsilon <= 1.0 / 3.0 + 1e-12 && lo > 0.0 => Some(up / lo),
        _ => None,
    };
    let tol = 1e-9;
    let lowers: Vec<f64> = report.lower_entries().map(|e| e.value).collect();
    let uppers: Vec<f64> = report
        .entries
        .iter()
        .filter(|e| e.kind == BoundKind::Upper)
        .map(|e| e.value)
        .collect();
    let below = |x: f64, ys: &[f64]| ys.iter().all(|&y| x <= y + tol);
    let mut chain: Vec<f64> = Vec::new();
    chain.extend(best_surplus);
    chain.extend(exact);
    let consistent = report.is_consistent()
        && best_surplus.is_none_or(|a| lowers.iter().all(|&l| l <= a + tol))
        && best_surplus.is_none_or(|a| exact.is_none_or(|x| a <= x + tol))
        && chain.iter().all(|&x| below(x, &uppers));

    Ok(ExperimentRecord {
        family: spec.family.name(),
        size,
        k,
        graph_seed,
        n: h.n(),
        m: h.m(),
        epsilon: spec.epsilon,
        c,
        edwards: value("edwards").unwrap_or(0.0),
        embedding,
        hyperplane_expectation: value("hyperplane_expectation"),
        degeneracy: value("degeneracy"),
        average_degree: value("average_degree"),
        degree_power_sum: value("degree_power_sum"),
        eigenvalue,
        exact,
        best_crossing,
        best_surplus,
        upper_lower_ratio,
        consistent,
        timings,
    })
}

/// Runs every instance of the sweep (concurrently; records stay in sweep
/// order) and fits the exponent.
///
/// At least [`MIN_FIT_SIZES`] sizes are required, except for `dgt`, whose
/// prime sweeps are short; there the fit is skipped below that count.
pub fn run_experiment(spec: &ExperimentSpec) -> CliResult<ExperimentOutput> {
    if spec.sizes.is_empty() {
        return Err(CliError::usage("size sweep is empty"));
    }
    if spec.sizes.len() < MIN_FIT_SIZES && spec.family != SweepFamily::Dgt {
        return Err(CliError::usage(format!(
            "exponent fit needs at least {MIN_FIT_SIZES} sizes, got {}",
            spec.sizes.len()
        )));
    }
    let predicted = predicted_exponents(spec.epsilon, spec.alpha)?;
    let records = spec
        .sizes
        .par_iter()
        .enumerate()
        .map(|(i, &size)| run_instance(spec, i, size))
        .collect::<CliResult<Vec<_>>>()?;
    let points: Vec<(f64, f64)> = records
        .iter()
        .filter_map(|r| match r.embedding {
            Some(lo) if r.m > 0 && lo > 0.0 => Some(((r.m as f64).ln(), lo.ln())),
            _ => None,
        })
        .collect();
    let fit = if spec.sizes.len() >= MIN_FIT_SIZES { ols(&points) } else { None };
    let ratios: Vec<f64> = records.iter().filter_map(|r| r.upper_lower_ratio).collect();
    let ratio_spread = if ratios.is_empty() {
        None
    } else {
        let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        Some(max / min)
    };
    Ok(ExperimentOutput {
        spec: spec.clone(),
        records,
        fit,
        predicted,
        ratio_spread,
    })
}

const COLUMNS: [&str; 20] = [
    "family",
    "size",
    "k",
    "graph_seed",
    "n",
    "m",
    "epsilon",
    "c",
    "edwards",
    "embedding",
    "hyperplane_expectation",
    "degeneracy",
    "average_degree",
    "degree_power_sum",
    "eigenvalue",
    "exact",
    "best_crossing",
    "best_surplus",
    "upper_lower_ratio",
    "consistent",
];

const TIMING_COLUMNS: [&str; 4] = ["generate_ms", "audit_ms", "bounds_ms", "rounding_ms"];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn ms(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

impl ExperimentRecord {
    fn cells(&self, timings: bool) -> Vec<String> {
        let mut cells = vec![
            self.family.to_string(),
            self.size.to_string(),
            opt(self.k),
            opt(self.graph_seed),
            self.n.to_string(),
            self.m.to_string(),
            self.epsilon.to_string(),
            self.c.to_string(),
            self.edwards.to_string(),
            opt(self.embedding),
            opt(self.hyperplane_expectation),
            opt(self.degeneracy),
            opt(self.average_degree),
            opt(self.degree_power_sum),
            opt(self.eigenvalue),
            opt(self.exact),
            opt(self.best_crossing),
            opt(self.best_surplus),
            opt(self.upper_lower_ratio),
            self.consistent.to_string(),
        ];
        if timings {
            let t = &self.timings;
            cells.extend([ms(t.generate), ms(t.audit), ms(t.bounds), ms(t.rounding)]);
        }
        cells
    }
}

impl ExperimentOutput {
    fn footer(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let mut predicted = format!("predicted_exponents,chi3,{}", self.predicted.chi3);
        if let Some(chi2) = self.predicted.chi2 {
            let _ = write!(predicted, ",chi2,{chi2}");
        }
        lines.push(predicted);
        lines.push(match self.fit {
            Some(f) => format!("fit,slope,{},intercept,{},points,{}", f.slope, f.intercept, f.points),
            None => format!("fit,skipped,fewer than {MIN_FIT_SIZES} sizes or points"),
        });
        if let Some(spread) = self.ratio_spread {
            lines.push(format!("ratio_spread,{spread}"));
        }
        lines
    }

    /// Timing columns are only emitted on request so that the default output
    /// is reproducible byte for byte.
    pub fn render(&self, format: Format, timings: bool) -> String {
        let mut header: Vec<&str> = COLUMNS.to_vec();
        if timings {
            header.extend(TIMING_COLUMNS);
        }
        let rows: Vec<Vec<String>> = self.records.iter().map(|r| r.cells(timings)).collect();
        match format {
            Format::Csv => {
                let mut out = format!("{CSV_VERSION_LINE}\n{}\n", header.join(","));
                for row in &rows {
                    let _ = writeln!(out, "{}", row.join(","));
                }
                for line in self.footer() {
                    let _ = writeln!(out, "# {line}");
                }
                out
            }
            Format::Table => {
                let widths: Vec<usize> = header
                    .iter()
                    .enumerate()
                    .map(|(i, h)| rows.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: &[&str]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                let mut out = line(&header) + "\n";
                for row in &rows {
                    let cells: Vec<&str> = row.iter().map(String::as_str).collect();
                    out.push_str(&line(&cells));
                    out.push('\n');
                }
                for l in self.footer() {
                    out.push_str(&l.replace(',', " "));
                    out.push('\n');
                }
                out
            }
        }
    }
}
