//! Auditing `(c, ε)`-sparsity: a graph is `(c, ε)`-sparse when every
//! neighbourhood spans at most `c · d(v)^(2-ε)` edges.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{pow_tau, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct VertexSparsity<T> {
    pub vertex: usize,
    pub degree: usize,
    pub nbhd_edges: usize,
    /// `nbhd_edges / degree^(2-ε)`, or 0 when the neighbourhood is independent.
    pub local_c: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SparsityReport<T> {
    pub epsilon: T,
    pub per_vertex: Vec<VertexSparsity<T>>,
    /// Least `c` for which the graph is `(c, ε)`-sparse.
    pub c_star: T,
    /// Lowest-index vertex attaining `c_star`; `None` on the empty graph.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SparseVerdict {
    Sparse,
    Violated { vertex: usize },
}

impl SparseVerdict {
    pub fn holds(self) -> bool {
        self == SparseVerdict::Sparse
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CodegreeSum<T> {
    /// `Σ_{ij ∈ E} (d_i d_j)^(τ-1) d_ij`
    pub lhs: T,
    /// `c · Σ_i d_i^τ`
    pub rhs: T,
    pub holds: bool,
}

pub(crate) fn validate_epsilon<T: Scalar>(epsilon: T) -> Result<()> {
    if epsilon.is_nan() || epsilon < T::zero() || epsilon > T::one() {
        return Err(Error::InvalidEpsilon(epsilon.as_f64()));
    }
    Ok(())
}

fn edge_budget<T: Scalar>(degree: usize, epsilon: T) -> T {
    T::from_count(degree).powf(T::lit(2.0) - epsilon)
}

pub fn min_sparsity_constant<T: Scalar>(g: &Graph, epsilon: T) -> Result<SparsityReport<T>> {
    validate_epsilon(epsilon)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let per_vertex: Vec<VertexSparsity<T>> = (0..g.n())
        .map(|v| {
            let degree = g.degree(v);
            let nbhd_edges = g.neighborhood_edge_count(v);
            let local_c = if nbhd_edges == 0 {
                T::zero()
            } else {
                T::from_count(nbhd_edges) / edge_budget(degree, epsilon)
            };
            VertexSparsity {
                vertex: v,
                degree,
                nbhd_edges,
                local_c,
            }
        })
        .collect();
    let mut c_star = T::zero();
    let mut witness = None;
    for row in &per_vertex {
        if witness.is_none() || row.local_c > c_star {
            c_star = row.local_c;
            witness = Some(row.vertex);
        }
    }
    Ok(SparsityReport {
        epsilon,
        per_vertex,
        c_star,
        witness,
    })
}

/// Checks `e(G[N(v)]) <= c · d_v^(2-ε) + 1e-9` at every vertex and reports
/// the first vertex that fails.
pub fn is_sparse<T: Scalar>(g: &Graph, c: T, epsilon: T) -> SparseVerdict {
    for v in 0..g.n() {
        let e = g.neighborhood_edge_count(v);
        if e == 0 {
            continue;
        }
        let budget = c * edge_budget(g.degree(v), epsilon);
        if T::from_count(e) > budget + T::check_tolerance() {
            return SparseVerdict::Violated { vertex: v };
        }
    }
    SparseVerdict::Sparse
}

/// `is_sparse` as a `Result`, carrying the witness in the error.
pub fn require_sparse<T: Scalar>(g: &Graph, c: T, epsilon: T) -> Result<()> {
    match is_sparse(g, c, epsilon) {
        SparseVerdict::Sparse => Ok(()),
        SparseVerdict::Violated { vertex } => Err(Error::NotSparse {
            c: c.as_f64(),
            epsilon: epsilon.as_f64(),
            vertex,
            degree: g.degree(vertex),
            nbhd_edges: g.neighborhood_edge_count(vertex),
        }),
    }
}

/// Evaluates both sides of the codegree-sum inequality
/// `Σ_{ij∈E} (d_i d_j)^(τ-1) d_ij <= c Σ_i d_i^τ` with `τ = min(ε, 1/2)`.
///
/// The right-hand sum runs over non-isolated vertices.
pub fn codegree_sum_check<T: Scalar>(g: &Graph, c: T, epsilon: T) -> Result<CodegreeSum<T>> {
    validate_epsilon(epsilon)?;
    require_sparse(g, c, epsilon)?;
    let tau = epsilon.min(T::lit(0.5));
    let pow: Vec<T> = (0..g.n())
        .map(|v| pow_tau(T::from_count(g.degree(v)), tau))
        .collect();
    let lhs: T = g
        .edges()
        .map(|(i, j)| {
            let dij = g.codegree(i, j);
            if dij == 0 {
                return T::zero();
            }
            let di = T::from_count(g.degree(i));
            let dj = T::from_count(g.degree(j));
            (pow[i] / di) * (pow[j] / dj) * T::from_count(dij)
        })
        .sum();
    let rhs = c * (0..g.n())
        .filter(|&v| g.degree(v) > 0)
        .map(|v| pow[v])
        .sum::<T>();
    Ok(CodegreeSum {
        lhs,
        rhs,
        holds: lhs <= rhs + T::check_tolerance(),
    })
}

/// Number of triangles, computed from neighbourhood edge counts and
/// cross-checked against the per-edge codegree sum.
pub fn triangle_count(g: &Graph) -> usize {
    let by_vertex: usize = (0..g.n()).map(|v| g.neighborhood_edge_count(v)).sum();
    let by_edge: usize = g.edges().map(|(u, v)| g.codegree(u, v)).sum();
    assert_eq!(by_vertex, by_edge, "triangle counts disagree");
    by_vertex / 3
}

/// Whether `g` contains `K_{s,t}` as a subgraph, i.e. some `s` vertices with
/// at least `t` common neighbours. Supports `1 <= s <= t`, `s <= 3`, `t <= 4`.
pub fn contains_kst(g: &Graph, s: usize, t: usize) -> Result<bool> {
    if s == 0 || s > t || s > 3 || t > 4 {
        return Err(Error::KstTooLarge { s, t });
    }
    let n = g.n();
    Ok(match s {
        1 => (0..n).any(|v| g.degree(v) >= t),
        2 => (0..n).any(|u| (u + 1..n).any(|v| g.codegree(u, v) >= t)),
        _ => {
            for u in 0..n {
                for v in u + 1..n {
                    if g.codegree(u, v) < t {
                        continue;
                    }
                    let common: Vec<usize> = g
                        .neighbors(u)
                        .iter()
                        .copied()
                        .filter(|w| g.neighbors(v).binary_search(w).is_ok())
                        .collect();
                    for w in v + 1..n {
                        let shared = common
                            .iter()
                            .filter(|x| g.neighbors(w).binary_search(x).is_ok())
                            .count();
                        if shared >= t {
                            return Ok(true);
                        }
                    }
                }
            }
            false
        }
    })
}

impl<T: Scalar> SparsityReport<T> {
    /// CSV with header `vertex,degree,nbhd_edges,local_c` and a footer row
    /// `c_star,<value>,witness,<vertex>`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,degree,nbhd_edges,local_c\n");
        for r in &self.per_vertex {
            let _ = writeln!(out, "{},{},{},{:.12e}", r.vertex, r.degree, r.nbhd_edges, r.local_c.as_f64());
        }
        let witness = self.witness.map_or_else(|| "none".to_string(), |w| w.to_string());
        let _ = writeln!(out, "c_star,{:.12e},witness,{witness}", self.c_star.as_f64());
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{:>8} {:>8} {:>12} {:>16}\n", "vertex", "degree", "nbhd_edges", "local_c");
        for r in &self.per_vertex {
            let _ = writeln!(
                out,
                "{:>8} {:>8} {:>12} {:>16.10}",
                r.vertex,
                r.degree,
                r.nbhd_edges,
                r.local_c.as_f64()
            );
        }
        let witness = self.witness.map_or_else(|| "none".to_string(), |w| w.to_string());
        let _ = writeln!(
            out,
            "epsilon = {}  c_star = {:.10}  witness = {witness}",
            self.epsilon.as_f64(),
            self.c_star.as_f64()
        );
        out
    }
}
