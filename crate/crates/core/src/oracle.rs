//! Ground truth for small graphs: exhaustive MaxCut and the smallest
//! adjacency eigenvalue.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rounding::Cut;
use crate::scalar::Scalar;

pub const MAX_EXACT_VERTICES: usize = 24;
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMaxCut {
    pub mc: usize,
    /// Maximiser with the smallest side mask `Σ_{v ∈ B} 2^v` (vertex 0 in A).
    pub witness: Cut,
}

/// Exhaustive MaxCut over the `2^(n-1)` bipartitions with vertex 0 on side
/// A, walked in Gray-code order so each step flips one vertex and updates the
/// crossing count in O(1) from neighbour bitmasks.
pub fn exact_maxcut(g: &Graph) -> Result<ExactMaxCut> {
    let n = g.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_EXACT_VERTICES });
    }
    if n <= 1 {
        return Ok(ExactMaxCut {
            mc: 0,
            witness: Cut::all_on_one_side(g),
        });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    let mut mask: u32 = 0;
    let mut crossing: i64 = 0;
    let mut best = (0i64, 0u32);
    let steps: u64 = 1 << (n - 1);
    for i in 1..steps {
        let v = i.trailing_zeros() as usize + 1;
        let bit = 1u32 << v;
        let same = if mask & bit != 0 {
            (nbr[v] & mask).count_ones()
        } else {
            (nbr[v] & !mask).count_ones()
        } as i64;
        let cross = g.degree(v) as i64 - same;
        mask ^= bit;
        crossing += same - cross;
        if crossing > best.0 || (crossing == best.0 && mask < best.1) {
            best = (crossing, mask);
        }
    }
    let side = (0..n).map(|v| best.1 >> v & 1 == 1).collect();
    let witness = Cut::new(g, side)?;
    debug_assert_eq!(witness.crossing() as i64, best.0);
    Ok(ExactMaxCut {
        mc: best.0 as usize,
        witness,
    })
}

/// `mc(G) - m/2`.
pub fn exact_surplus(g: &Graph) -> Result<f64> {
    Ok(exact_maxcut(g)?.witness.surplus())
}

/// Smallest adjacency eigenvalue within `±tol`.
///
/// Power iteration on `Δ·I - A` (`Δ` the maximum degree), whose spectrum is
/// `Δ - λ ≥ 0`, so its dominant eigenvalue is `Δ - λ_min`. Iteration stops
/// once the residual `‖Bv - μv‖` drops to `tol`, which bounds the distance
/// from the Rayleigh quotient `μ` to the spectrum. The start vector is a
/// fixed pseudo-random sequence; if an iterate collapses to zero the
/// iteration restarts from the next sequence.
pub fn smallest_eigenvalue<T: Scalar>(g: &Graph, tol: T) -> Result<T> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    if tol.is_nan() || tol <= T::zero() {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    if g.m() == 0 {
        return Ok(T::zero());
    }
    let shift = T::from_count(g.max_degree());
    let apply = |v: &[T], out: &mut [T]| {
        for (i, slot) in out.iter_mut().enumerate() {
            let nbr: T = g.neighbors(i).iter().map(|&j| v[j]).sum();
            *slot = shift * v[i] - nbr;
        }
    };
    let norm = |v: &[T]| v.iter().map(|&x| x * x).sum::<T>().sqrt();

    const RESTARTS: u64 = 4;
    let mut iterations = 0usize;
    for restart in 0..RESTARTS {
        let mut v = start_vector::<T>(n, restart);
        let s = norm(&v);
        v.iter_mut().for_each(|x| *x = *x / s);
        let mut w = vec![T::zero(); n];
        loop {
            if iterations >= MAX_POWER_ITERATIONS {
                return Err(Error::NoConvergence(iterations));
            }
            iterations += 1;
            apply(&v, &mut w);
            let mu: T = v.iter().zip(&w).map(|(&a, &b)| a * b).sum();
            let residual = v
                .iter()
                .zip(&w)
                .map(|(&a, &b)| (b - mu * a) * (b - mu * a))
                .sum::<T>()
                .sqrt();
            if residual <= tol {
                return Ok(shift - mu);
            }
            let wn = norm(&w);
            if wn <= T::epsilon() * shift {
                break;
            }
            for (a, &b) in v.iter_mut().zip(&w) {
                *a = b / wn;
            }
        }
    }
    Err(Error::NoConvergence(iterations))
}

fn start_vector<T: Scalar>(n: usize, stream: u64) -> Vec<T> {
    // xorshift64*, deterministic and dependency-free
    let mut state = 0x2545_F491_4F6C_DD1D ^ (stream.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    (0..n)
        .map(|_| {
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            let r = state.wrapping_mul(0x2545_F491_4F6C_DD1D) >> 11;
            T::lit(r as f64 / (1u64 << 53) as f64 - 0.5)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use nalgebra::DMatrix;

    /// Plain enumeration of every side mask, recounting all edges.
    fn naive_maxcut(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .map(|mask| g.edges().filter(|&(u, v)| (mask >> u & 1) != (mask >> v & 1)).count())
            .max()
            .unwrap_or(0)
    }

    fn dense_smallest(g: &Graph) -> f64 {
        let n = g.n();
        let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
        a.symmetric_eigen().eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn maxcut_examples() {
        assert_eq!(exact_maxcut(&generators::cycle(5).unwrap()).unwrap().mc, 4);
        assert_eq!(exact_maxcut(&generators::complete(5).unwrap()).unwrap().mc, 6);
        let p = generators::petersen();
        let r = exact_maxcut(&p).unwrap();
        assert_eq!(r.mc, 12);
        assert_eq!(naive_maxcut(&p), 12);
        assert_eq!(r.witness.crossing(), 12);
        assert!(!r.witness.in_b(0));
        assert!(matches!(
            exact_maxcut(&generators::cycle(25).unwrap()),
            Err(Error::TooLarge { n: 25, max: 24 })
        ));
        assert_eq!(exact_maxcut(&Graph::empty(1)).unwrap().mc, 0);
    }

    #[test]
    fn witness_is_smallest_mask() {
        // C_4: optimal masks with vertex 0 in A: only {1, 3} in B
        let c4 = generators::cycle(4).unwrap();
        let r = exact_maxcut(&c4).unwrap();
        assert_eq!(r.witness.side(), &[false, true, false, true]);
        // K_3: any single vertex alone; smallest mask puts vertex 1 in B
        let k3 = generators::complete(3).unwrap();
        assert_eq!(exact_maxcut(&k3).unwrap().witness.side(), &[false, true, false]);
    }

    #[test]
    fn surplus_examples() {
        assert_eq!(exact_surplus(&generators::complete(3).unwrap()).unwrap(), 0.5);
        assert_eq!(exact_surplus(&generators::complete_bipartite(2, 3).unwrap()).unwrap(), 3.0);
        assert_eq!(exact_surplus(&generators::petersen()).unwrap(), 4.5);
    }

    #[test]
    fn maxcut_agrees_with_naive_enumeration() {
        for seed in 0..20 {
            let g = generators::gnp(11, 0.4, seed).unwrap();
            assert_eq!(exact_maxcut(&g).unwrap().mc, naive_maxcut(&g), "seed {seed}");
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let tol: f64 = 1e-8;
        for n in [2usize, 3, 6, 10] {
            let l = smallest_eigenvalue(&generators::complete(n).unwrap(), tol).unwrap();
            assert!((l + 1.0).abs() <= tol, "K_{n}: {l}");
        }
        let l = smallest_eigenvalue(&generators::cycle(4).unwrap(), tol).unwrap();
        assert!((l + 2.0).abs() <= tol);
        let l = smallest_eigenvalue(&generators::dgt_srg(5, 3).unwrap(), tol).unwrap();
        assert!((l + 3.0).abs() <= tol);
        assert_eq!(smallest_eigenvalue(&Graph::empty(3), tol).unwrap(), 0.0);
        assert!(smallest_eigenvalue(&Graph::empty(0), tol).is_err());
        assert!(smallest_eigenvalue(&generators::cycle(4).unwrap(), 0.0).is_err());
    }

    #[test]
    fn eigenvalue_matches_dense_solver() {
        let tol = 1e-7;
        let mut graphs = vec![generators::petersen(), generators::wheel_even(3).unwrap(), generators::polarity_er(3).unwrap()];
        for seed in 0..12 {
            graphs.push(generators::gnp(30 + 5 * seed as usize, 0.15, seed).unwrap());
        }
        for g in &graphs {
            let fast = smallest_eigenvalue(g, tol).unwrap();
            let dense = dense_smallest(g);
            assert!((fast - dense).abs() <= 10.0 * tol, "power {fast} dense {dense}");
        }
    }
}
