//! Graph families used as examples, tightness witnesses and test instances.
//!
//! Seeded generators draw from `ChaCha8Rng::seed_from_u64(seed)` so a given
//! seed yields the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of the strongly regular graph on `GF(q)^2` whose adjacency is
/// "difference lies on one of `k` chosen lines through the origin".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub q: u64,
    pub k: usize,
}

impl SrgParams {
    pub fn new(q: u64, k: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        let max = q as usize + 1;
        if k == 0 || k > max {
            return Err(Error::KOutOfRange { k, max });
        }
        Ok(Self { q, k })
    }

    pub fn n(&self) -> usize {
        (self.q * self.q) as usize
    }

    pub fn degree(&self) -> usize {
        self.k * (self.q as usize - 1)
    }

    pub fn lambda_min(&self) -> i64 {
        -(self.k as i64)
    }

    /// Common neighbours of any adjacent pair: `q - 2 + (k-1)(k-2)`.
    pub fn adjacent_codegree(&self) -> usize {
        self.q as usize - 2 + (self.k - 1) * self.k.saturating_sub(2)
    }
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidSize("complete graph needs n >= 1".into()));
    }
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).collect())
        .collect();
    Ok(Graph::from_sorted_adjacency(adjacency))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSize("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(&edges, n)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidSize("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(&edges, n)
}

/// Even wheel `W_{2k}`: vertices `0..2k` form a cycle, vertex `2k` is the apex.
pub fn wheel_even(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidSize("even wheel needs k >= 2".into()));
    }
    let rim = 2 * k;
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Graph::from_edges(&edges, rim + 1)
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(Error::InvalidSize("complete bipartite graph needs s, t >= 1".into()));
    }
    let edges: Vec<_> = (0..s)
        .flat_map(|a| (s..s + t).map(move |b| (a, b)))
        .collect();
    Graph::from_edges(&edges, s + t)
}

/// Petersen graph: outer cycle `0..5`, spokes `i - (i+5)`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(&edges, 10).expect("petersen edges are valid")
}

/// Erdős–Rényi `G(n, p)`: pairs `(u, v)`, `u < v`, are visited in
/// lexicographic order and kept when a uniform draw in `[0, 1)` is below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(&edges, n)
}

/// Greedy triangle-free process: all pairs are shuffled with the seeded RNG
/// and each is added unless it would close a triangle. The result is a
/// maximal triangle-free graph.
pub fn random_triangle_free(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidSize("triangle-free process needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let words = n.div_ceil(64);
    let mut bits = vec![0u64; n * words];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        let (u, v) = (u as usize, v as usize);
        let row_u = &bits[u * words..(u + 1) * words];
        let row_v = &bits[v * words..(v + 1) * words];
        if row_u.iter().zip(row_v).any(|(a, b)| a & b != 0) {
            continue;
        }
        bits[u * words + v / 64] |= 1 << (v % 64);
        bits[v * words + u / 64] |= 1 << (u % 64);
        edges.push((u, v));
    }
    Graph::from_edges(&edges, n)
}

/// Strongly regular graph on `GF(q)^2`, `q` prime.
///
/// Vertex `(a, b)` has index `a*q + b`. The `q + 1` lines through the origin
/// are listed as directions `(1, s)` for `s = 0..q` followed by `(0, 1)`; the
/// first `k` of them are the adjacency lines. `x ~ y` iff `x != y` and `x - y`
/// lies on one of those lines.
pub fn dgt_srg(q: u64, k: usize) -> Result<Graph> {
    let params = SrgParams::new(q, k)?;
    let q = params.q as usize;
    let n = q * q;
    let directions: Vec<(usize, usize)> = (0..q)
        .map(|s| (1, s))
        .chain(std::iter::once((0, 1)))
        .take(k)
        .collect();
    let mut adjacency = vec![Vec::with_capacity(params.degree()); n];
    for a in 0..q {
        for b in 0..q {
            let x = a * q + b;
            for &(da, db) in &directions {
                for t in 1..q {
                    let y = ((a + t * da) % q) * q + (b + t * db) % q;
                    adjacency[x].push(y);
                }
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adjacency))
}

/// Points of the projective plane over `GF(q)` in normalised form (first
/// non-zero coordinate equal to 1), in the order `(1, a, b)`, `(0, 1, a)`,
/// `(0, 0, 1)`.
pub fn projective_points(q: u64) -> Result<Vec<[u64; 3]>> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut pts = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    pts.push([0, 0, 1]);
    Ok(pts)
}

/// Erdős–Rényi polarity graph `ER_q`: `x ~ y` iff `x · y ≡ 0 (mod q)` and
/// `x != y`. Absolute points (`x · x ≡ 0`) keep their other edges and have
/// degree `q`; all other points have degree `q + 1`.
pub fn polarity_er(q: u64) -> Result<Graph> {
    let pts = projective_points(q)?;
    let n = pts.len();
    let dot = |x: &[u64; 3], y: &[u64; 3]| (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q;
    let adjacency = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && dot(&pts[i], &pts[j]) == 0)
                .collect()
        })
        .collect();
    Ok(Graph::from_sorted_adjacency(adjacency))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparsity::{contains_kst, triangle_count};

    #[test]
    fn small_families() {
        let w = wheel_even(2).unwrap();
        assert_eq!((w.n(), w.m()), (5, 8));
        assert_eq!(complete(5).unwrap().m(), 10);
        let kst = complete_bipartite(2, 3).unwrap();
        assert_eq!((kst.n(), kst.m()), (5, 6));
        let p = petersen();
        assert_eq!((p.n(), p.m(), p.regular_degree()), (10, 15, Some(3)));
        assert!(cycle(2).is_err());
        assert!(wheel_even(1).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(gnp(12, 0.0, 3).unwrap().m(), 0);
        assert_eq!(gnp(12, 1.0, 3).unwrap(), complete(12).unwrap());
        assert_eq!(gnp(30, 0.3, 7).unwrap(), gnp(30, 0.3, 7).unwrap());
        assert_ne!(gnp(30, 0.3, 7).unwrap(), gnp(30, 0.3, 8).unwrap());
        assert_eq!(gnp(5, 1.5, 0), Err(Error::InvalidProbability(1.5)));
    }

    #[test]
    fn triangle_free_process() {
        assert_eq!(random_triangle_free(3, 11).unwrap().m(), 2);
        let a = random_triangle_free(200, 5).unwrap();
        assert_eq!(a, random_triangle_free(200, 5).unwrap());
        assert_eq!(triangle_count(&a), 0);
        // maximality: every non-edge closes a triangle
        for u in 0..60 {
            for v in u + 1..60 {
                if !a.has_edge(u, v) {
                    assert!(a.codegree(u, v) > 0, "{u}-{v} could be added");
                }
            }
        }
    }

    #[test]
    fn dgt_5_3() {
        let g = dgt_srg(5, 3).unwrap();
        assert_eq!(g.n(), 25);
        assert_eq!(g.regular_degree(), Some(12));
        assert_eq!(g.m(), 150);
        assert!(g.edges().all(|(u, v)| g.codegree(u, v) == 5));
        assert_eq!(dgt_srg(6, 2), Err(Error::NotPrime(6)));
        assert_eq!(dgt_srg(5, 7), Err(Error::KOutOfRange { k: 7, max: 6 }));
        assert_eq!(dgt_srg(5, 0), Err(Error::KOutOfRange { k: 0, max: 6 }));
    }

    #[test]
    fn dgt_matches_derived_params() {
        for q in [3u64, 5, 7, 11, 13] {
            for k in 1..=(q as usize + 1) {
                let p = SrgParams::new(q, k).unwrap();
                let g = dgt_srg(q, k).unwrap();
                assert_eq!(g.regular_degree(), Some(p.degree()), "q={q} k={k}");
                assert!(
                    g.edges().all(|(u, v)| g.codegree(u, v) == p.adjacent_codegree()),
                    "q={q} k={k}"
                );
                // non-adjacent pairs share exactly k(k-1) neighbours
                if k <= q as usize {
                    let non_adjacent = (1..g.n()).find(|&v| !g.has_edge(0, v)).unwrap();
                    assert_eq!(g.codegree(0, non_adjacent), k * (k - 1));
                }
            }
        }
    }

    #[test]
    fn polarity_graphs() {
        let fano = polarity_er(2).unwrap();
        assert_eq!(fano.n(), 7);
        for u in 0..7 {
            for v in u + 1..7 {
                assert!(fano.codegree(u, v) <= 1);
            }
        }
        for q in [2u64, 3, 5, 7] {
            let g = polarity_er(q).unwrap();
            let n = (q * q + q + 1) as usize;
            assert_eq!(g.n(), n);
            let absolute = projective_points(q)
                .unwrap()
                .iter()
                .filter(|x| (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) % q == 0)
                .count();
            let deg_q = (0..n).filter(|&v| g.degree(v) == q as usize).count();
            let deg_q1 = (0..n).filter(|&v| g.degree(v) == q as usize + 1).count();
            assert_eq!(deg_q, absolute, "q={q}");
            assert_eq!(deg_q + deg_q1, n, "q={q}");
        }
        assert!(!contains_kst(&polarity_er(5).unwrap(), 2, 2).unwrap());
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
