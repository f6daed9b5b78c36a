use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use surplus_core::bounds::{self, embedding_lower_bound};
use surplus_core::embedding::{Embedding, EmbeddingParams};
use surplus_core::rounding::{self, best_of_trials, dichotomy_cut, expected_cut_value, extend_cut};
use surplus_core::sparsity::{min_sparsity_constant, require_sparse};
use surplus_core::{edgelist, generators, Cut, Error, Graph, Subgraph, TrialPlan};

use crate::error::{CliError, CliResult};

/// First line of every CSV the tool writes.
pub const CSV_VERSION_LINE: &str = "# surplus-cut v1";

/// Floor applied to an audited `c_star` under `--c auto`.
pub const AUTO_C_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CPolicy {
    Fixed(f64),
    /// Audited `c_star`, floored at [`AUTO_C_FLOOR`]; 1 for triangle-free graphs.
    Auto,
}

impl FromStr for CPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(CPolicy::Auto);
        }
        match s.parse::<f64>() {
            Ok(c) if c.is_finite() && c > 0.0 => Ok(CPolicy::Fixed(c)),
            _ => Err(format!("expected a positive number or 'auto', got '{s}'")),
        }
    }
}

impl std::fmt::Display for CPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CPolicy::Fixed(c) => write!(f, "{c}"),
            CPolicy::Auto => f.write_str("auto"),
        }
    }
}

/// Resolves the sparsity constant for a graph without isolated vertices.
pub fn resolve_c(g: &Graph, epsilon: f64, policy: CPolicy) -> CliResult<f64> {
    match policy {
        CPolicy::Fixed(c) => Ok(c),
        CPolicy::Auto => {
            if g.n() == 0 {
                return Ok(1.0);
            }
            let c_star = min_sparsity_constant(g, epsilon)?.c_star;
            Ok(if c_star == 0.0 { 1.0 } else { c_star.max(AUTO_C_FLOOR) })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Cycle,
    Wheel,
    Kst,
    Gnp,
    Trianglefree,
    Dgt,
    Polarity,
}

/// Family parameters; which ones are required depends on the family.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GenParams {
    pub n: Option<usize>,
    pub p: Option<f64>,
    pub seed: Option<u64>,
    pub q: Option<u64>,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: Family) -> CliResult<T> {
    value.ok_or_else(|| {
        let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        CliError::usage(format!("family '{name}' requires --{flag}"))
    })
}

pub fn generate(family: Family, params: &GenParams) -> CliResult<Graph> {
    let f = family;
    let g = match family {
        Family::Complete => generators::complete(need(params.n, "n", f)?)?,
        Family::Cycle => generators::cycle(need(params.n, "n", f)?)?,
        Family::Wheel => generators::wheel_even(need(params.k, "k", f)?)?,
        Family::Kst => generators::complete_bipartite(need(params.s, "s", f)?, need(params.t, "t", f)?)?,
        Family::Gnp => generators::gnp(need(params.n, "n", f)?, need(params.p, "p", f)?, params.seed.unwrap_or(0))?,
        Family::Trianglefree => generators::random_triangle_free(need(params.n, "n", f)?, params.seed.unwrap_or(0))?,
        Family::Dgt => generators::dgt_srg(need(params.q, "q", f)?, need(params.k, "k", f)?)?,
        Family::Polarity => generators::polarity_er(need(params.q, "q", f)?)?,
    };
    Ok(g)
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    edgelist::parse_edge_list(&text).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

pub fn write_output(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display())))
}

/// Maps a `NotSparse` witness on a stripped graph back to original labels.
fn relabel(err: Error, stripped: &Subgraph) -> Error {
    match err {
        Error::NotSparse {
            c,
            epsilon,
            vertex,
            degree,
            nbhd_edges,
        } => Error::NotSparse {
            c,
            epsilon,
            vertex: stripped.mapping[vertex],
            degree,
            nbhd_edges,
        },
        Error::IsolatedVertex(v) => Error::IsolatedVertex(stripped.mapping[v]),
        other => other,
    }
}

/// Per-vertex audit of `g`; isolated vertices are skipped and the remaining
/// rows keep their original labels.
pub fn audit(g: &Graph, epsilon: f64, format: Format) -> CliResult<String> {
    let stripped = g.remove_isolated();
    let mut report = min_sparsity_constant(&stripped.graph, epsilon)?;
    for row in &mut report.per_vertex {
        row.vertex = stripped.mapping[row.vertex];
    }
    report.witness = report.witness.map(|w| stripped.mapping[w]);
    let skipped = g.n() - stripped.graph.n();
    Ok(match format {
        Format::Csv => {
            let mut out = format!("{CSV_VERSION_LINE}\n");
            if skipped > 0 {
                let _ = writeln!(out, "# isolated vertices skipped: {skipped}");
            }
            out + &report.to_csv()
        }
        Format::Table => {
            let mut out = report.to_table();
            if skipped > 0 {
                let _ = writeln!(out, "isolated vertices skipped: {skipped}");
            }
            out
        }
    })
}

pub fn bounds_report(g: &Graph, epsilon: f64, c: CPolicy, format: Format) -> CliResult<String> {
    let stripped = g.remove_isolated();
    let c = resolve_c(&stripped.graph, epsilon, c)?;
    let report = bounds::full_report(g, epsilon, c).map_err(|e| relabel(e, &stripped))?;
    if !report.is_consistent() {
        return Err(CliError::internal("bound report is inconsistent: a lower bound exceeds an upper bound"));
    }
    Ok(match format {
        Format::Csv => {
            let mut out = format!("{CSV_VERSION_LINE}\n# epsilon={epsilon} c={c}\n");
            out.push_str(&report.to_csv());
            for note in &report.notes {
                let _ = writeln!(out, "# note: {note}");
            }
            out
        }
        Format::Table => format!("epsilon={epsilon} c={c}\n{}", report.to_table()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Best of several hyperplane roundings of the whole graph.
    Embedding,
    /// Degenerate-or-dense-core split.
    Dichotomy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutOptions {
    pub epsilon: f64,
    pub c: CPolicy,
    pub trials: usize,
    pub seed: u64,
    pub local_search: bool,
    pub method: Method,
    /// Multiplier of the dichotomy threshold.
    pub scale: f64,
}

impl Default for CutOptions {
    fn default() -> Self {
        Self {
            epsilon: 1.0,
            c: CPolicy::Auto,
            trials: 200,
            seed: 0,
            local_search: true,
            method: Method::Embedding,
            scale: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutSummary {
    pub n: usize,
    pub m: usize,
    pub epsilon: f64,
    pub c: f64,
    pub crossing: usize,
    pub surplus: f64,
    pub expected_cut: f64,
    pub lower_bound: f64,
    pub best_trial: Option<usize>,
    pub mean_crossing: Option<f64>,
    /// `(branch, threshold, degeneracy, core size, branch bound)` for the dichotomy method.
    pub dichotomy: Option<(&'static str, f64, usize, usize, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutRun {
    pub cut: Cut,
    pub summary: CutSummary,
}

pub fn run_cut(g: &Graph, opts: &CutOptions) -> CliResult<CutRun> {
    if opts.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let stripped = g.remove_isolated();
    let h = &stripped.graph;
    let c = resolve_c(h, opts.epsilon, opts.c)?;
    let params = EmbeddingParams::new(opts.epsilon, c)?;
    require_sparse(h, c, opts.epsilon).map_err(|e| relabel(e, &stripped))?;
    let plan = TrialPlan::new(opts.seed, opts.trials);
    let mut summary = CutSummary {
        n: g.n(),
        m: g.m(),
        epsilon: opts.epsilon,
        c,
        crossing: 0,
        surplus: 0.0,
        expected_cut: 0.0,
        lower_bound: 0.0,
        best_trial: None,
        mean_crossing: None,
        dichotomy: None,
    };
    if h.m() == 0 {
        return Ok(CutRun {
            cut: Cut::all_on_one_side(g),
            summary,
        });
    }
    let e = Embedding::new(h, params)?;
    summary.expected_cut = expected_cut_value(&e)?;
    summary.lower_bound = embedding_lower_bound(h, opts.epsilon, c)?;
    let cut = match opts.method {
        Method::Embedding => {
            let outcome = best_of_trials(&e, &plan, opts.local_search)?;
            summary.best_trial = Some(outcome.stats.best_trial);
            summary.mean_crossing = Some(outcome.stats.mean_crossing);
            extend_cut(g, &stripped.mapping, &outcome.cut)?
        }
        Method::Dichotomy => {
            let out = dichotomy_cut(g, opts.epsilon, c, opts.scale, &plan, opts.local_search)?;
            summary.dichotomy = Some((out.branch.as_str(), out.threshold, out.degeneracy, out.core_size, out.bound));
            out.cut
        }
    };
    if !cut.is_consistent_with(g) {
        return Err(CliError::internal("produced cut does not match the input graph"));
    }
    summary.crossing = cut.crossing();
    summary.surplus = cut.surplus();
    Ok(CutRun { cut, summary })
}

impl CutSummary {
    pub fn render(&self, format: Format) -> String {
        let expected_surplus = self.expected_cut - self.m as f64 / 2.0;
        let mut fields: Vec<(&str, String)> = vec![
            ("n", self.n.to_string()),
            ("m", self.m.to_string()),
            ("epsilon", self.epsilon.to_string()),
            ("c", self.c.to_string()),
            ("crossing", self.crossing.to_string()),
            ("surplus", self.surplus.to_string()),
            ("expected_cut", self.expected_cut.to_string()),
            ("expected_surplus", expected_surplus.to_string()),
            ("lower_bound", self.lower_bound.to_string()),
        ];
        if let Some(t) = self.best_trial {
            fields.push(("best_trial", t.to_string()));
        }
        if let Some(mean) = self.mean_crossing {
            fields.push(("mean_crossing", mean.to_string()));
        }
        if let Some((branch, threshold, degeneracy, core, bound)) = self.dichotomy {
            fields.push(("branch", branch.to_string()));
            fields.push(("threshold", threshold.to_string()));
            fields.push(("degeneracy", degeneracy.to_string()));
            fields.push(("core_size", core.to_string()));
            fields.push(("branch_bound", bound.to_string()));
        }
        match format {
            Format::Csv => {
                let header: Vec<&str> = fields.iter().map(|f| f.0).collect();
                let values: Vec<&str> = fields.iter().map(|f| f.1.as_str()).collect();
                format!("{CSV_VERSION_LINE}\n{}\n{}\n", header.join(","), values.join(","))
            }
            Format::Table => {
                let width = fields.iter().map(|f| f.0.len()).max().unwrap_or(0);
                fields
                    .iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                    .collect()
            }
        }
    }
}

/// Validates a cut file against `g`.
pub fn read_cut(text: &str, g: &Graph) -> CliResult<Cut> {
    Ok(rounding::Cut::from_text(text, g)?)
}
