//! Closed-form surplus bounds with the explicit constants from their proofs.

use std::fmt::Write as _;

use crate::embedding::{Embedding, EmbeddingParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{self, MAX_EXACT_VERTICES};
use crate::rounding::expected_cut_value;
use crate::scalar::{pow_tau, Scalar};
use crate::sparsity::{require_sparse, validate_epsilon};

/// Tolerance handed to the eigenvalue oracle by [`eigen_upper_bound`].
pub const EIGEN_TOLERANCE: f64 = 1e-9;

/// Edwards: every graph with `m` edges has surplus at least `(√(8m+1) - 1)/8`.
pub fn edwards_bound<T: Scalar>(m: usize) -> T {
    ((T::lit(8.0) * T::from_count(m) + T::one()).sqrt() - T::one()) / T::lit(8.0)
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    match (0..g.n()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

fn degree_power_sum<T: Scalar>(g: &Graph, tau: T) -> T {
    (0..g.n())
        .filter(|&v| g.degree(v) > 0)
        .map(|v| pow_tau(T::from_count(g.degree(v)), tau))
        .sum()
}

/// `Σ_i d_i^τ` over non-isolated vertices.
pub fn degree_tau_sum<T: Scalar>(g: &Graph, epsilon: T) -> Result<T> {
    validate_epsilon(epsilon)?;
    Ok(degree_power_sum(g, epsilon.min(T::lit(0.5))))
}

/// `δ1 Σ_i d_i^τ + δ2 Σ_{ij∈E} (d_i d_j)^τ / n` for a `(c, ε)`-sparse graph
/// without isolated vertices.
pub fn embedding_lower_bound<T: Scalar>(g: &Graph, epsilon: T, c: T) -> Result<T> {
    let p = EmbeddingParams::new(epsilon, c)?;
    require_no_isolated(g)?;
    require_sparse(g, c, epsilon)?;
    Ok(embedding_bound_terms(g, &p))
}

fn embedding_bound_terms<T: Scalar>(g: &Graph, p: &EmbeddingParams<T>) -> T {
    let pow: Vec<T> = (0..g.n())
        .map(|v| pow_tau(T::from_count(g.degree(v)), p.tau))
        .collect();
    let vertex_term: T = pow.iter().copied().sum();
    let edge_term: T = g.edges().map(|(i, j)| pow[i] * pow[j]).sum::<T>() / T::from_count(g.n().max(1));
    p.delta1 * vertex_term + p.delta2 * edge_term
}

/// `δ1 · m / d^(1-τ)` with `d` the degeneracy.
pub fn degeneracy_bound<T: Scalar>(g: &Graph, epsilon: T, c: T) -> Result<T> {
    let p = EmbeddingParams::new(epsilon, c)?;
    require_sparse(g, c, epsilon)?;
    let d = g.degeneracy();
    if d == 0 {
        return Ok(T::zero());
    }
    Ok(p.delta1 * T::from_count(g.m()) / T::from_count(d).powf(T::one() - p.tau))
}

/// `δ2 / 4^(1+τ) · d^(1+2τ)` with `d = 2m/n` the average degree.
pub fn avg_degree_bound<T: Scalar>(g: &Graph, epsilon: T, c: T) -> Result<T> {
    let p = EmbeddingParams::new(epsilon, c)?;
    require_sparse(g, c, epsilon)?;
    if g.m() == 0 {
        return Ok(T::zero());
    }
    let d = T::lit(2.0) * T::from_count(g.m()) / T::from_count(g.n());
    let tau = p.tau;
    Ok(p.delta2 / T::lit(4.0).powf(T::one() + tau) * d.powf(T::one() + T::lit(2.0) * tau))
}

/// `-λ_min · n / 4` for a regular graph.
pub fn eigen_upper_bound<T: Scalar>(g: &Graph) -> Result<T> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    g.regular_degree().ok_or(Error::NotRegular)?;
    let lambda = oracle::smallest_eigenvalue(g, T::lit(EIGEN_TOLERANCE))?;
    Ok(-lambda * T::from_count(g.n()) / T::lit(4.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreePowerSumBound<T> {
    pub bound: T,
    /// `⌊(m / 2c)^(1/α)⌋`
    pub t: usize,
    /// Whether the `t` highest-degree vertices span at most `c·t^α` edges.
    pub hypothesis_checked: bool,
}

/// Lower bound on `Σ d_i^τ` when every vertex set `S` spans at most
/// `c|S|^α` edges: `C · t^(1-τ) (m - c t^α)^τ` with
/// `C = ((1-τ)^(1-τ) τ^τ)^(-1)` and `t = ⌊(m/2c)^(1/α)⌋`.
///
/// Only the prefix of the `t` highest-degree vertices (ties by index) is
/// checked against the hypothesis, since that is the only set the argument
/// uses. The bound is 0 when `t < 1` or `m <= c t^α`.
pub fn degree_power_sum_bound<T: Scalar>(g: &Graph, c: T, alpha: T, tau: T) -> Result<DegreePowerSumBound<T>> {
    if c.is_nan() || c <= T::zero() {
        return Err(Error::NonPositiveC(c.as_f64()));
    }
    if alpha.is_nan() || alpha < T::one() || alpha > T::lit(2.0) {
        return Err(Error::InvalidAlpha(alpha.as_f64()));
    }
    if tau.is_nan() || tau <= T::zero() || tau >= T::one() {
        return Err(Error::InvalidTau(tau.as_f64()));
    }
    let m = T::from_count(g.m());
    let raw_t = (m / (T::lit(2.0) * c)).powf(T::one() / alpha).floor();
    let t = raw_t.to_usize().unwrap_or(usize::MAX);
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let hypothesis_checked = if t > g.n() {
        false
    } else {
        let prefix = g.induced_subgraph(&by_degree[..t])?;
        T::from_count(prefix.graph.m()) <= c * T::from_count(t).powf(alpha) + T::check_tolerance()
    };
    let tf = T::from_count(t);
    let remainder = m - c * tf.powf(alpha);
    let bound = if t < 1 || remainder <= T::zero() {
        T::zero()
    } else {
        let one_m = T::one() - tau;
        let constant = T::one() / (one_m.powf(one_m) * tau.powf(tau));
        constant * tf.powf(one_m) * remainder.powf(tau)
    };
    Ok(DegreePowerSumBound {
        bound,
        t,
        hypothesis_checked,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PredictedExponents<T> {
    /// `(1+2τ)/(2+τ)`
    pub chi3: T,
    /// `τ + (1-τ)/(2-α)` when `α` is given
    pub chi2: Option<T>,
}

/// Exponents of `m` in the surplus lower bounds for `H`-free graphs, where
/// removing a vertex of `H` leaves a bipartite `B` with `ex(n, B) = O(n^(2-ε))`
/// and, for `chi2`, `ex(n, H) = O(n^(2-α))`.
pub fn predicted_exponents<T: Scalar>(epsilon: T, alpha: Option<T>) -> Result<PredictedExponents<T>> {
    validate_epsilon(epsilon).map_err(|_| Error::InvalidInput(format!("epsilon {epsilon} outside [0, 1]")))?;
    let tau = epsilon.min(T::lit(0.5));
    let two = T::lit(2.0);
    let chi3 = (T::one() + two * tau) / (two + tau);
    let chi2 = match alpha {
        None => None,
        Some(a) if a.is_nan() || a < T::zero() || a > T::one() => {
            return Err(Error::InvalidInput(format!("alpha {a} outside [0, 1]")));
        }
        Some(a) => Some(tau + (T::one() - tau) / (two - a)),
    };
    Ok(PredictedExponents { chi3, chi2 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry<T> {
    pub name: &'static str,
    pub value: T,
    pub kind: BoundKind,
    pub source: &'static str,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub degeneracy: usize,
    pub average_degree: f64,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub summary: GraphSummary,
    pub entries: Vec<BoundEntry<T>>,
    /// Why expected entries are absent (e.g. no eigenvalue bound for an
    /// irregular graph).
    pub notes: Vec<String>,
}

impl<T: Scalar> BoundReport<T> {
    pub fn get(&self, name: &str) -> Option<&BoundEntry<T>> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn lower_entries(&self) -> impl Iterator<Item = &BoundEntry<T>> {
        self.entries.iter().filter(|e| e.kind == BoundKind::Lower)
    }

    /// Every lower value is at most every exact/upper value (+1e-9), and the
    /// exact value is at most every upper value.
    pub fn is_consistent(&self) -> bool {
        let tol = T::check_tolerance();
        let at_least = |k: BoundKind| self.entries.iter().filter(move |e| e.kind == k);
        for lo in at_least(BoundKind::Lower) {
            for hi in at_least(BoundKind::Upper).chain(at_least(BoundKind::Exact)) {
                if lo.value > hi.value + tol {
                    return false;
                }
            }
        }
        at_least(BoundKind::Exact).all(|ex| at_least(BoundKind::Upper).all(|up| ex.value <= up.value + tol))
    }

    /// `name,kind,value,source` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,kind,value,source\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{},{:.12e},{}", e.name, e.kind.as_str(), e.value.as_f64(), e.source);
        }
        out
    }

    pub fn to_table(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "n={} m={} degeneracy={} average_degree={:.4} regular={}\n",
            s.n, s.m, s.degeneracy, s.average_degree, s.regular
        );
        let _ = writeln!(out, "{:<24} {:<6} {:>18}  {:<28} note", "name", "kind", "value", "source");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:<24} {:<6} {:>18.10}  {:<28} {}",
                e.name,
                e.kind.as_str(),
                e.value.as_f64(),
                e.source,
                e.note
            );
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

/// Every applicable bound for `g` at `(ε, c)`.
///
/// Isolated vertices are stripped first (they do not change the surplus).
/// The report always has the Edwards bound, the embedding bound, its
/// hyperplane-rounding expectation, both degeneracy-dichotomy bounds and the
/// degree-power-sum bound at `c = 1/2, α = 2` (which every graph satisfies). The
/// eigenvalue upper bound needs a regular graph; the exact surplus needs at
/// most 24 vertices.
pub fn full_report<T: Scalar>(g: &Graph, epsilon: T, c: T) -> Result<BoundReport<T>> {
    let params = EmbeddingParams::new(epsilon, c)?;
    let h = g.remove_isolated().graph;
    require_sparse(&h, c, epsilon)?;
    let degeneracy = h.degeneracy();
    let summary = GraphSummary {
        n: h.n(),
        m: h.m(),
        degeneracy,
        average_degree: if h.n() == 0 { 0.0 } else { 2.0 * h.m() as f64 / h.n() as f64 },
        regular: h.regular_degree().is_some(),
    };
    let mut entries = Vec::new();
    let mut notes = Vec::new();
    let entry = |name, value, kind, source, note: &str| BoundEntry {
        name,
        value,
        kind,
        source,
        note: note.to_string(),
    };

    entries.push(entry("edwards", edwards_bound(h.m()), BoundKind::Lower, "edwards", "universal"));
    if h.m() > 0 {
        let embedding = embedding_lower_bound(&h, epsilon, c)?;
        entries.push(entry(
            "embedding",
            embedding,
            BoundKind::Lower,
            "sdp-embedding",
            "delta1*sum d^tau + delta2*sum (d_i d_j)^tau/n",
        ));
        let e = Embedding::new(&h, params)?;
        let expected = expected_cut_value(&e)? - T::from_count(h.m()) / T::lit(2.0);
        entries.push(entry(
            "hyperplane_expectation",
            expected,
            BoundKind::Lower,
            "hyperplane-rounding",
            "expected surplus of random-hyperplane rounding",
        ));
        entries.push(entry(
            "degeneracy",
            degeneracy_bound(&h, epsilon, c)?,
            BoundKind::Lower,
            "degeneracy-dichotomy",
            "delta1*m/d^(1-tau), d = degeneracy",
        ));
        entries.push(entry(
            "average_degree",
            avg_degree_bound(&h, epsilon, c)?,
            BoundKind::Lower,
            "average-degree-dichotomy",
            "delta2/4^(1+tau)*d^(1+2tau), d = 2m/n",
        ));
        if params.tau > T::zero() {
            let app = degree_power_sum_bound(&h, T::lit(0.5), T::lit(2.0), params.tau)?;
            if app.hypothesis_checked {
                entries.push(entry(
                    "degree_power_sum",
                    params.delta1 * app.bound,
                    BoundKind::Lower,
                    "degree-power-sum",
                    "delta1 * C t^(1-tau) (m - c t^alpha)^tau at c=1/2, alpha=2 (prefix hypothesis)",
                ));
            }
        } else {
            notes.push("degree-power-sum bound needs tau > 0".into());
        }
    }
    if h.n() > 0 && summary.regular {
        entries.push(entry(
            "eigenvalue",
            eigen_upper_bound(&h)?,
            BoundKind::Upper,
            "smallest-eigenvalue",
            "-lambda_min*n/4",
        ));
    } else {
        notes.push("graph is not regular: no eigenvalue upper bound".into());
    }
    if h.n() <= MAX_EXACT_VERTICES {
        entries.push(entry(
            "exact",
            T::lit(oracle::exact_surplus(&h)?),
            BoundKind::Exact,
            "exhaustive-search",
            "mc(G) - m/2",
        ));
    } else {
        notes.push(format!("n > {MAX_EXACT_VERTICES}: exact surplus not computed"));
    }
    Ok(BoundReport {
        summary,
        entries,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use approx::assert_relative_eq;

    #[test]
    fn edwards_examples() {
        assert_eq!(edwards_bound::<f64>(3), 0.5);
        assert_eq!(edwards_bound::<f64>(10), 1.0);
        assert_eq!(edwards_bound::<f64>(0), 0.0);
        assert_eq!(oracle::exact_surplus(&generators::complete(3).unwrap()).unwrap(), 0.5);
        assert_eq!(oracle::exact_surplus(&generators::complete(5).unwrap()).unwrap(), 1.0);
    }

    #[test]
    fn embedding_bound_examples() {
        let p = generators::petersen();
        let v = embedding_lower_bound(&p, 1.0, 1.0).unwrap();
        // independent summation: 10 vertices of degree 3, 15 edges
        let direct = (1.0 / 512.0) * 10.0 * 3f64.sqrt() + (1.0 / 8192.0) * 15.0 * 3.0 / 10.0;
        assert_relative_eq!(v, direct, max_relative = 1e-14);
        assert_relative_eq!(v, 0.034378, epsilon = 1e-6);

        let k2 = generators::complete(2).unwrap();
        let v = embedding_lower_bound(&k2, 1.0, 1.0).unwrap();
        assert_relative_eq!(v, 2.0 / 512.0 + 0.5 / 8192.0, max_relative = 1e-14);
        assert_relative_eq!(v, 0.003967, epsilon = 1e-6);

        let tf = generators::random_triangle_free(60, 1).unwrap();
        let sqrt_degree_term = tf.degrees().iter().map(|&d| (d as f64).sqrt()).sum::<f64>() / 512.0;
        assert!(embedding_lower_bound(&tf, 1.0, 1.0).unwrap() >= sqrt_degree_term);

        let k4 = generators::complete(4).unwrap();
        assert!(matches!(embedding_lower_bound(&k4, 1.0, 0.5), Err(Error::NotSparse { .. })));
        let iso = Graph::from_edges(&[(0, 1)], 3).unwrap();
        assert_eq!(embedding_lower_bound(&iso, 1.0, 1.0), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn degeneracy_bound_examples() {
        let tree = generators::path(21).unwrap();
        assert_relative_eq!(degeneracy_bound(&tree, 1.0, 1.0).unwrap(), 20.0 / 512.0, max_relative = 1e-14);
        let p = generators::petersen();
        let v = degeneracy_bound(&p, 1.0, 1.0).unwrap();
        assert_relative_eq!(v, 15.0 / (512.0 * 3f64.sqrt()), max_relative = 1e-14);
        assert_relative_eq!(v, 0.016915, epsilon = 1e-6);
    }

    #[test]
    fn degeneracy_bound_dominated_on_random_graphs() {
        for seed in 0..100 {
            let g = generators::gnp(30, 0.05 + 0.004 * seed as f64, seed).unwrap().remove_isolated().graph;
            if g.m() == 0 {
                continue;
            }
            let c = crate::sparsity::min_sparsity_constant::<f64>(&g, 1.0).unwrap().c_star.max(1.0);
            let p = EmbeddingParams::new(1.0, c).unwrap();
            let degen = degeneracy_bound(&g, 1.0, c).unwrap();
            let first_term = p.delta1 * degree_tau_sum(&g, 1.0).unwrap();
            assert!(degen <= first_term + 1e-12, "seed {seed}");
            assert!(first_term <= embedding_lower_bound(&g, 1.0, c).unwrap() + 1e-12);
        }
    }

    #[test]
    fn avg_degree_examples() {
        let c9 = generators::cycle(9).unwrap();
        assert_relative_eq!(avg_degree_bound(&c9, 1.0, 1.0).unwrap(), 1.0 / 16384.0, max_relative = 1e-14);
        assert_eq!(avg_degree_bound(&Graph::empty(4), 1.0, 1.0).unwrap(), 0.0);
        let dgt = generators::dgt_srg(5, 3).unwrap();
        let c = crate::sparsity::min_sparsity_constant(&dgt, 1.0 / 3.0).unwrap().c_star;
        let v = avg_degree_bound(&dgt, 1.0 / 3.0, c).unwrap();
        assert!(v > 0.0 && v <= eigen_upper_bound(&dgt).unwrap());
    }

    #[test]
    fn eigen_bound_examples() {
        for n in [3usize, 6, 9] {
            let v: f64 = eigen_upper_bound(&generators::complete(n).unwrap()).unwrap();
            assert_relative_eq!(v, n as f64 / 4.0, epsilon = 1e-8);
        }
        let v: f64 = eigen_upper_bound(&generators::dgt_srg(5, 3).unwrap()).unwrap();
        assert_relative_eq!(v, 75.0 / 4.0, epsilon = 1e-7);
        let v: f64 = eigen_upper_bound(&generators::cycle(4).unwrap()).unwrap();
        assert_relative_eq!(v, 2.0, epsilon = 1e-8);
        assert_eq!(eigen_upper_bound::<f64>(&generators::path(4).unwrap()), Err(Error::NotRegular));
    }

    #[test]
    fn degree_power_sum_examples() {
        let k2 = generators::complete(2).unwrap();
        let r = degree_power_sum_bound(&k2, 1.0, 2.0, 0.5).unwrap();
        assert_eq!((r.t, r.bound), (0, 0.0));

        let tf = generators::random_triangle_free(500, 2).unwrap();
        let r = degree_power_sum_bound(&tf, 1.0, 1.5, 0.5).unwrap();
        let lhs: f64 = tf.degrees().iter().map(|&d| (d as f64).sqrt()).sum();
        assert!(r.t >= 1);
        if r.hypothesis_checked {
            assert!(lhs >= r.bound - 1e-9, "{lhs} < {}", r.bound);
        }
        // tau = 1/2: C = 2
        let m = tf.m() as f64;
        let t = r.t as f64;
        assert_relative_eq!(r.bound, 2.0 * t.sqrt() * (m - t.powf(1.5)).sqrt(), max_relative = 1e-12);

        assert_eq!(degree_power_sum_bound(&k2, 1.0, 2.5, 0.5), Err(Error::InvalidAlpha(2.5)));
        assert_eq!(degree_power_sum_bound(&k2, 1.0, 2.0, 1.0), Err(Error::InvalidTau(1.0)));
    }

    #[test]
    fn degree_power_sum_holds_whenever_hypothesis_checks() {
        for seed in 0..60 {
            let g = generators::gnp(40, 0.02 + 0.01 * seed as f64, seed).unwrap();
            for (c, alpha, tau) in [(0.5, 2.0, 0.5), (1.0, 1.5, 0.5), (1.0, 1.2, 0.3), (2.0, 1.0, 0.7)] {
                let r = degree_power_sum_bound(&g, c, alpha, tau).unwrap();
                if r.hypothesis_checked {
                    let lhs: f64 = g.degrees().iter().filter(|&&d| d > 0).map(|&d| (d as f64).powf(tau)).sum();
                    assert!(lhs >= r.bound - 1e-9, "seed {seed} c {c} alpha {alpha}");
                }
            }
        }
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(predicted_exponents(0.5, None).unwrap().chi3, 0.8);
        let e = predicted_exponents(1.0, Some(0.5)).unwrap();
        assert_relative_eq!(e.chi2.unwrap(), 5.0 / 6.0, max_relative = 1e-15);
        for k in 2..6 {
            let alpha = 1.0 - 1.0 / k as f64;
            let chi2 = predicted_exponents(1.0, Some(alpha)).unwrap().chi2.unwrap();
            assert_relative_eq!(chi2, (2 * k + 1) as f64 / (2 * k + 2) as f64, max_relative = 1e-14);
        }
        let mut prev = -1.0;
        for i in 0..=50 {
            let chi3 = predicted_exponents(i as f64 / 100.0, None).unwrap().chi3;
            assert!(chi3 >= prev);
            prev = chi3;
        }
        assert!(predicted_exponents(1.5, None).is_err());
        assert!(predicted_exponents(0.5, Some(1.5)).is_err());
    }

    #[test]
    fn report_examples() {
        let p = generators::petersen();
        let r = full_report(&p, 1.0, 1.0).unwrap();
        assert_eq!(r.get("exact").unwrap().value, 4.5);
        assert!(r.lower_entries().all(|e| e.value <= 4.5));
        assert!(r.is_consistent());
        assert!(r.get("eigenvalue").is_some());

        let k5 = generators::complete(5).unwrap();
        let r = full_report(&k5, 0.0, 1.0).unwrap();
        assert_eq!(r.get("edwards").unwrap().value, r.get("exact").unwrap().value);
        assert_eq!(r.get("exact").unwrap().value, 1.0);

        let dgt = generators::dgt_srg(5, 3).unwrap();
        let c = crate::sparsity::min_sparsity_constant(&dgt, 1.0 / 3.0).unwrap().c_star;
        let r = full_report(&dgt, 1.0 / 3.0, c).unwrap();
        let up = r.get("eigenvalue").unwrap().value;
        assert_relative_eq!(up, 18.75, epsilon = 1e-7);
        assert!(r.lower_entries().all(|e| e.value <= up));
        assert!(r.get("exact").is_none());

        let path = generators::path(5).unwrap();
        let r = full_report(&path, 1.0, 1.0).unwrap();
        assert!(r.get("eigenvalue").is_none());
        assert!(r.notes.iter().any(|n| n.contains("not regular")));
        let csv = r.to_csv();
        assert!(csv.starts_with("name,kind,value,source\nedwards,lower,"));
    }

    #[test]
    fn lower_entries_below_eigenvalue_on_regular_graphs() {
        let mut graphs = vec![generators::petersen(), generators::cycle(12).unwrap(), generators::complete(7).unwrap()];
        for (q, k) in [(5, 2), (5, 3), (7, 3), (7, 4)] {
            graphs.push(generators::dgt_srg(q, k).unwrap());
        }
        for g in &graphs {
            for eps in [0.0, 1.0 / 3.0, 0.5, 1.0] {
                let c = crate::sparsity::min_sparsity_constant::<f64>(g, eps).unwrap().c_star.max(1e-3);
                let r = full_report(g, eps, c).unwrap();
                let up = r.get("eigenvalue").unwrap().value;
                assert!(r.lower_entries().all(|e| e.value <= up + 1e-9), "n {} eps {eps}", g.n());
                assert!(r.is_consistent());
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (2usize..40, 0.05f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| {
                generators::gnp(n, p, seed).unwrap().remove_isolated().graph
            })
        }

        proptest! {
            #[test]
            fn dominance_chain(g in arb_graph(), eps in 0.0f64..=1.0, slack in 1.0f64..2.0) {
                prop_assume!(g.m() > 0);
                let c = crate::sparsity::min_sparsity_constant(&g, eps).unwrap().c_star.max(1e-3) * slack;
                let p = EmbeddingParams::new(eps, c).unwrap();
                let degen = degeneracy_bound(&g, eps, c).unwrap();
                let first = p.delta1 * degree_tau_sum(&g, eps).unwrap();
                let emb = embedding_lower_bound(&g, eps, c).unwrap();
                prop_assert!(degen <= first + 1e-12);
                prop_assert!(first <= emb + 1e-12);
                let e = Embedding::new(&g, p).unwrap();
                let expected = expected_cut_value(&e).unwrap() - g.m() as f64 / 2.0;
                prop_assert!(emb <= expected + 1e-9, "embedding {} expected {}", emb, expected);
            }

            #[test]
            fn report_consistent_with_exact(g in (2usize..16, 0.1f64..0.9, any::<u64>()).prop_map(|(n, p, s)| generators::gnp(n, p, s).unwrap()), eps in 0.0f64..=1.0) {
                let h = g.remove_isolated().graph;
                prop_assume!(h.m() > 0);
                let c = crate::sparsity::min_sparsity_constant(&h, eps).unwrap().c_star.max(1e-3);
                let r = full_report(&g, eps, c).unwrap();
                prop_assert!(r.get("exact").is_some());
                prop_assert!(r.is_consistent());
            }
        }
    }
}
