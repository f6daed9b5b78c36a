//! Degree-weighted vector embedding of a graph.
//!
//! Vertex `i` (degree `d_i`) is mapped to the vector `x^i ∈ R^n` with
//!
//! ```text
//! x^i_i = 1 + ρ d_i^τ / n
//! x^i_j = -ρ d_i^(τ-1)        for j ∈ N(i)
//! x^i_j = ρ d_i^τ / n         otherwise
//! ```
//!
//! Equivalently `x^i = (ρ d_i^τ / n)·1 + e_i - (ρ d_i^(τ-1) + ρ d_i^τ / n)·χ_N(i)`,
//! so a projection `⟨x^i, z⟩` only needs `Σ z`, `z_i` and the neighbour sum
//! of `z`. Vectors are never materialised: norms and edge inner products have
//! closed forms in `(n, d_i, d_j, d_ij)`, and projecting all vertices onto a
//! direction costs O(n + m).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{pow_tau, Scalar};
use crate::sparsity::validate_epsilon;

/// Constants of the construction, all derived from `(ε, c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbeddingParams<T> {
    pub epsilon: T,
    pub c: T,
    /// `min(ε, 1/2)`
    pub tau: T,
    /// `min(c/32, 1/(32c))`
    pub rho: T,
    /// `ρ/16`, coefficient of `Σ d_i^τ` in the surplus bound
    pub delta1: T,
    /// `ρ²/8`, coefficient of `Σ_{ij∈E} (d_i d_j)^τ / n`
    pub delta2: T,
}

impl<T: Scalar> EmbeddingParams<T> {
    pub fn new(epsilon: T, c: T) -> Result<Self> {
        validate_epsilon(epsilon)?;
        if c.is_nan() || c <= T::zero() || c.is_infinite() {
            return Err(Error::NonPositiveC(c.as_f64()));
        }
        let tau = epsilon.min(T::lit(0.5));
        let thirty_two = T::lit(32.0);
        let rho = (c / thirty_two).min(T::one() / (thirty_two * c));
        Ok(Self {
            epsilon,
            c,
            tau,
            rho,
            delta1: rho / T::lit(16.0),
            delta2: rho * rho / T::lit(8.0),
        })
    }
}

impl<T: Scalar> fmt::Display for EmbeddingParams<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "epsilon={}", self.epsilon)?;
        writeln!(f, "c={}", self.c)?;
        writeln!(f, "tau={}", self.tau)?;
        writeln!(f, "rho={}", self.rho)?;
        writeln!(f, "delta1={}", self.delta1)?;
        write!(f, "delta2={}", self.delta2)
    }
}

/// The embedding of one graph. Holds only per-vertex scalars.
#[derive(Debug, Clone)]
pub struct Embedding<'g, T> {
    params: EmbeddingParams<T>,
    graph: &'g Graph,
    n: T,
    degree: Vec<T>,
    /// `d_i^τ`
    pow_tau: Vec<T>,
    /// `d_i^(τ-1)`
    pow_tau_m1: Vec<T>,
    norm: Vec<T>,
}

impl<'g, T: Scalar> Embedding<'g, T> {
    /// Fails with `IsolatedVertex` if some vertex has degree 0.
    pub fn new(graph: &'g Graph, params: EmbeddingParams<T>) -> Result<Self> {
        if let Some(v) = (0..graph.n()).find(|&v| graph.degree(v) == 0) {
            return Err(Error::IsolatedVertex(v));
        }
        let n = T::from_count(graph.n());
        let rho = params.rho;
        let degree: Vec<T> = graph.degrees().into_iter().map(T::from_count).collect();
        let pow_tau: Vec<T> = degree.iter().map(|&d| self::pow_tau(d, params.tau)).collect();
        let pow_tau_m1: Vec<T> = pow_tau.iter().zip(&degree).map(|(&p, &d)| p / d).collect();
        let two = T::lit(2.0);
        let norm = degree
            .iter()
            .zip(&pow_tau)
            .zip(&pow_tau_m1)
            .map(|((&d, &p), &pm1)| {
                // ρ² d^(2τ-1) (1 + d/n - d²/n²), with d^(2τ-1) = d^τ · d^(τ-1)
                let spread = T::one() + d / n - (d * d) / (n * n);
                (T::one() + two * rho * p / n + rho * rho * p * pm1 * spread).sqrt()
            })
            .collect();
        Ok(Self {
            params,
            graph,
            n,
            degree,
            pow_tau,
            pow_tau_m1,
            norm,
        })
    }

    pub fn params(&self) -> &EmbeddingParams<T> {
        &self.params
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// `‖x^i‖`
    pub fn vertex_norm(&self, i: usize) -> T {
        self.norm[i]
    }

    /// `⟨x^i, x^j⟩` for an edge `ij`:
    ///
    /// `-ρ d_i^(τ-1) - ρ d_j^(τ-1) + ρ² (d_i d_j)^τ [d_ij (1/n + 1/d_i)(1/n + 1/d_j) - (n + d_i + d_j)/n²]`
    pub fn edge_inner_product(&self, i: usize, j: usize) -> Result<T> {
        if i == j || !self.graph.has_edge(i, j) {
            return Err(Error::NotAnEdge(i, j));
        }
        Ok(self.edge_inner_product_unchecked(i, j, self.graph.codegree(i, j)))
    }

    pub(crate) fn edge_inner_product_unchecked(&self, i: usize, j: usize, codegree: usize) -> T {
        let rho = self.params.rho;
        let n = self.n;
        let (di, dj) = (self.degree[i], self.degree[j]);
        let dij = T::from_count(codegree);
        let inv_n = T::one() / n;
        let bracket = dij * (inv_n + T::one() / di) * (inv_n + T::one() / dj) - (n + di + dj) / (n * n);
        -rho * self.pow_tau_m1[i] - rho * self.pow_tau_m1[j]
            + rho * rho * self.pow_tau[i] * self.pow_tau[j] * bracket
    }

    /// Normalised inner product `⟨x^i, x^j⟩ / (‖x^i‖ ‖x^j‖)` on an edge.
    pub(crate) fn edge_cosine(&self, i: usize, j: usize, codegree: usize) -> T {
        self.edge_inner_product_unchecked(i, j, codegree) / (self.norm[i] * self.norm[j])
    }

    /// `out[i] = ⟨x^i, z⟩` for every vertex, in O(n + m).
    pub fn project_all(&self, z: &[T]) -> Result<Vec<T>> {
        let mut out = vec![T::zero(); z.len()];
        self.project_all_into(z, &mut out)?;
        Ok(out)
    }

    pub fn project_all_into(&self, z: &[T], out: &mut [T]) -> Result<()> {
        let n = self.graph.n();
        if z.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: z.len() });
        }
        if out.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: out.len() });
        }
        let rho = self.params.rho;
        let total: T = z.iter().copied().sum();
        for (i, slot) in out.iter_mut().enumerate() {
            let uniform = rho * self.pow_tau[i] / self.n;
            let nbr_sum: T = self.graph.neighbors(i).iter().map(|&j| z[j]).sum();
            *slot = uniform * total + z[i] - (rho * self.pow_tau_m1[i] + uniform) * nbr_sum;
        }
        Ok(())
    }

    /// The literal n-dimensional vector `x^i`. O(n); meant for checks.
    pub fn materialize(&self, i: usize) -> Vec<T> {
        let rho = self.params.rho;
        let base = rho * self.pow_tau[i] / self.n;
        let mut x = vec![base; self.graph.n()];
        x[i] = T::one() + base;
        for &j in self.graph.neighbors(i) {
            x[j] = -rho * self.pow_tau_m1[i];
        }
        x
    }
}
