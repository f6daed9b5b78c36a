//! Turning the embedding into actual cuts.
//!
//! A random direction `z` with i.i.d. standard normal coordinates splits the
//! vertices by the sign of `⟨x^v, z⟩` (projection exactly 0 goes to side A).
//! Only signs matter, so `z` is not normalised; its direction is uniform on
//! the sphere. The expected size of that cut has the closed form
//! `m/2 - (1/π) Σ_{ij∈E} arcsin(⟨x^i,x^j⟩ / ‖x^i‖‖x^j‖)`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::embedding::{Embedding, EmbeddingParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::sparsity::require_sparse;

/// A bipartition `(A, B)` of the vertex set. `side[v] == false` means A.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    side: Vec<bool>,
    crossing: usize,
    m: usize,
}

impl Cut {
    pub fn new(g: &Graph, side: Vec<bool>) -> Result<Self> {
        if side.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                found: side.len(),
            });
        }
        let crossing = g.edges().filter(|&(u, v)| side[u] != side[v]).count();
        Ok(Self {
            side,
            crossing,
            m: g.m(),
        })
    }

    pub fn all_on_one_side(g: &Graph) -> Self {
        Self {
            side: vec![false; g.n()],
            crossing: 0,
            m: g.m(),
        }
    }

    pub fn side(&self) -> &[bool] {
        &self.side
    }

    pub fn in_b(&self, v: usize) -> bool {
        self.side[v]
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn crossing(&self) -> usize {
        self.crossing
    }

    /// `2·crossing - m`, the surplus in exact half-units.
    pub fn surplus_doubled(&self) -> i64 {
        2 * self.crossing as i64 - self.m as i64
    }

    pub fn surplus(&self) -> f64 {
        self.surplus_doubled() as f64 / 2.0
    }

    /// Recounts crossing edges against `g`; true when the cached count agrees.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        self.side.len() == g.n()
            && self.m == g.m()
            && g.edges().filter(|&(u, v)| self.side[u] != self.side[v]).count() == self.crossing
    }

    /// Two lines: the side string (`0` = A, `1` = B, vertex `i` at position
    /// `i`) and `crossing=<int> surplus=<decimal>`.
    pub fn to_text(&self) -> String {
        let mut out: String = self.side.iter().map(|&b| if b { '1' } else { '0' }).collect();
        let _ = writeln!(out);
        let _ = writeln!(out, "crossing={} surplus={:.1}", self.crossing, self.surplus());
        out
    }

    /// Parses the side string of [`Cut::to_text`] and recounts against `g`.
    pub fn from_text(text: &str, g: &Graph) -> Result<Self> {
        let first = text.lines().next().unwrap_or("").trim();
        let side = first
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 1,
                    msg: format!("unexpected side character {other:?}"),
                }),
            })
            .collect::<Result<Vec<bool>>>()?;
        Cut::new(g, side)
    }

    fn flip(&mut self, v: usize, same: usize, cross: usize) {
        self.side[v] = !self.side[v];
        self.crossing = self.crossing + same - cross;
    }
}

/// How per-trial seeds are derived from one master seed.
///
/// Trial `i` uses `splitmix64(master_seed + (i + 1) · 0x9E3779B97F4A7C15)`
/// (wrapping arithmetic) to seed a `ChaCha8Rng`. The seed of a trial depends
/// only on `(master_seed, i)`, so results do not depend on scheduling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialPlan {
    pub master_seed: u64,
    pub trials: usize,
}

impl TrialPlan {
    pub fn new(master_seed: u64, trials: usize) -> Self {
        Self { master_seed, trials }
    }

    pub fn trial_seed(&self, index: usize) -> u64 {
        splitmix64(
            self.master_seed
                .wrapping_add((index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        )
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Exact expected crossing count of the random-hyperplane cut.
pub fn expected_cut_value<T: Scalar>(e: &Embedding<'_, T>) -> Result<T> {
    let g = e.graph();
    let slack = T::lit(1e-12);
    let mut arcsin_sum = T::zero();
    for (i, j) in g.edges() {
        let cos = e.edge_cosine(i, j, g.codegree(i, j));
        if cos.abs() > T::one() + slack || cos.is_nan() {
            return Err(Error::ArcsinDomain {
                u: i,
                v: j,
                ratio: cos.as_f64(),
            });
        }
        arcsin_sum = arcsin_sum + cos.max(-T::one()).min(T::one()).asin();
    }
    Ok(T::from_count(g.m()) / T::lit(2.0) - arcsin_sum / T::PI())
}

/// One random-hyperplane cut, drawn from `ChaCha8Rng::seed_from_u64(seed)`.
pub fn hyperplane_cut<T>(e: &Embedding<'_, T>, seed: u64) -> Cut
where
    T: Scalar,
    StandardNormal: Distribution<T>,
{
    let g = e.graph();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z: Vec<T> = (0..g.n()).map(|_| rng.sample(StandardNormal)).collect();
    let proj = e.project_all(&z).expect("direction has length n");
    let side = proj.iter().map(|&p| p < T::zero()).collect();
    Cut::new(g, side).expect("side vector has length n")
}

/// Flips any vertex with strictly more neighbours on its own side than across
/// until none is left. Crossing never decreases and ends at least `⌈m/2⌉`.
pub fn local_search_refine(g: &Graph, cut: &Cut) -> Cut {
    let mut cut = cut.clone();
    let n = g.n();
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let side = cut.side[v];
        let same = g.neighbors(v).iter().filter(|&&u| cut.side[u] == side).count();
        let cross = g.degree(v) - same;
        if same > cross {
            cut.flip(v, same, cross);
            for &u in g.neighbors(v) {
                if !queued[u] {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    cut
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialStats {
    pub trials: usize,
    /// Trial that produced the returned cut.
    pub best_trial: usize,
    pub min_crossing: usize,
    pub max_crossing: usize,
    pub mean_crossing: f64,
    /// Mean crossing of the raw hyperplane cuts, before refinement.
    pub rounded_mean_crossing: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub cut: Cut,
    pub stats: TrialStats,
}

struct Acc {
    best: (usize, usize, Cut),
    min: usize,
    max: usize,
    sum: u128,
    raw_sum: u128,
}

impl Acc {
    fn merge(self, other: Acc) -> Acc {
        let best = {
            let (a, b) = (self.best, other.best);
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                b
            } else {
                a
            }
        };
        Acc {
            best,
            min: self.min.min(other.min),
            max: self.max.max(other.max),
            sum: self.sum + other.sum,
            raw_sum: self.raw_sum + other.raw_sum,
        }
    }
}

/// Runs every trial of `plan` (in parallel) and keeps the cut with most
/// crossing edges; ties go to the lowest trial index.
pub fn best_of_trials<T>(e: &Embedding<'_, T>, plan: &TrialPlan, refine: bool) -> Result<TrialOutcome>
where
    T: Scalar,
    StandardNormal: Distribution<T>,
{
    if plan.trials == 0 {
        return Err(Error::InvalidInput("at least one trial is required".into()));
    }
    let g = e.graph();
    let acc = (0..plan.trials)
        .into_par_iter()
        .map(|i| {
            let raw = hyperplane_cut(e, plan.trial_seed(i));
            let raw_crossing = raw.crossing();
            let cut = if refine { local_search_refine(g, &raw) } else { raw };
            let c = cut.crossing();
            Acc {
                best: (c, i, cut),
                min: c,
                max: c,
                sum: c as u128,
                raw_sum: raw_crossing as u128,
            }
        })
        .reduce_with(Acc::merge)
        .expect("at least one trial");
    let trials = plan.trials;
    Ok(TrialOutcome {
        stats: TrialStats {
            trials,
            best_trial: acc.best.1,
            min_crossing: acc.min,
            max_crossing: acc.max,
            mean_crossing: acc.sum as f64 / trials as f64,
            rounded_mean_crossing: acc.raw_sum as f64 / trials as f64,
        },
        cut: acc.best.2,
    })
}

/// Extends a cut of `G[u]` to all of `g` without lowering the surplus.
///
/// `u` is read as a set; `partial` indexes its members in ascending order
/// (the order of [`Graph::induced_subgraph`]'s mapping). Remaining vertices
/// are placed greedily, always taking the unplaced vertex with most placed
/// neighbours (ties: lowest index), on the side holding fewer of those
/// neighbours (ties: side A). Each placement cuts at least half of its new
/// edges.
pub fn extend_cut(g: &Graph, u: &[usize], partial: &Cut) -> Result<Cut> {
    let sub = g
        .induced_subgraph(u)
        .map_err(|e| Error::InvalidPartialCut(e.to_string()))?;
    if !partial.is_consistent_with(&sub.graph) {
        return Err(Error::InvalidPartialCut(format!(
            "cut on {} vertices / {} edges does not match G[U] with {} vertices / {} edges",
            partial.n(),
            partial.m(),
            sub.graph.n(),
            sub.graph.m()
        )));
    }
    let n = g.n();
    let mut placed = vec![false; n];
    let mut side = vec![false; n];
    for (local, &v) in sub.mapping.iter().enumerate() {
        placed[v] = true;
        side[v] = partial.in_b(local);
    }
    let mut placed_nbrs = vec![0usize; n];
    for &v in &sub.mapping {
        for &w in g.neighbors(v) {
            placed_nbrs[w] += 1;
        }
    }
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = (0..n)
        .filter(|&v| !placed[v])
        .map(|v| (placed_nbrs[v], Reverse(v)))
        .collect();
    while let Some((count, Reverse(v))) = heap.pop() {
        if placed[v] || count != placed_nbrs[v] {
            continue;
        }
        let in_b = g
            .neighbors(v)
            .iter()
            .filter(|&&w| placed[w] && side[w])
            .count();
        let in_a = count - in_b;
        // join the side with fewer placed neighbours
        side[v] = in_b < in_a;
        placed[v] = true;
        for &w in g.neighbors(v) {
            if !placed[w] {
                placed_nbrs[w] += 1;
                heap.push((placed_nbrs[w], Reverse(w)));
            }
        }
    }
    Cut::new(g, side)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Degeneracy at most the threshold: the whole graph is rounded.
    Degenerate,
    /// A dense core was rounded and the cut extended to the rest.
    DenseCore,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Degenerate => "degenerate",
            Branch::DenseCore => "dense-core",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DichotomyOutcome<T> {
    pub cut: Cut,
    pub branch: Branch,
    /// `scale · m^(1/(2+τ))`
    pub threshold: T,
    pub degeneracy: usize,
    /// Vertices of the rounded subgraph (all non-isolated vertices on the
    /// degenerate branch).
    pub core_size: usize,
    /// Surplus guaranteed for the branch taken.
    pub bound: T,
}

/// Degenerate-or-dense dichotomy with threshold `d = scale · m^(1/(2+τ))`.
///
/// If the degeneracy is at most `d`, the whole graph is rounded and the
/// branch bound is `δ1 · m / d^(1-τ)`. Otherwise the `⌈d/2⌉`-core is rounded,
/// extended to the whole graph, and the bound is `δ2 / 4^(1+τ) · d^(1+2τ)`.
/// Isolated vertices are stripped first and end up on side A.
pub fn dichotomy_cut<T>(
    g: &Graph,
    epsilon: T,
    c: T,
    scale: T,
    plan: &TrialPlan,
    refine: bool,
) -> Result<DichotomyOutcome<T>>
where
    T: Scalar,
    StandardNormal: Distribution<T>,
{
    let params = EmbeddingParams::new(epsilon, c)?;
    if scale.is_nan() || scale <= T::zero() {
        return Err(Error::InvalidInput(format!("scale must be positive, got {scale}")));
    }
    let stripped = g.remove_isolated();
    let h = &stripped.graph;
    require_sparse(h, c, epsilon).map_err(|e| match e {
        Error::NotSparse { c, epsilon, vertex, degree, nbhd_edges } => Error::NotSparse {
            c,
            epsilon,
            vertex: stripped.mapping[vertex],
            degree,
            nbhd_edges,
        },
        other => other,
    })?;
    let tau = params.tau;
    let m = T::from_count(h.m());
    let threshold = scale * m.powf(T::one() / (T::lit(2.0) + tau));
    let degeneracy = h.degeneracy();

    if h.m() == 0 {
        return Ok(DichotomyOutcome {
            cut: Cut::all_on_one_side(g),
            branch: Branch::Degenerate,
            threshold,
            degeneracy,
            core_size: 0,
            bound: T::zero(),
        });
    }

    let (cut_h, branch, core_size, bound) = if T::from_count(degeneracy) <= threshold {
        let e = Embedding::new(h, params)?;
        let outcome = best_of_trials(&e, plan, refine)?;
        let bound = params.delta1 * m / threshold.powf(T::one() - tau);
        (outcome.cut, Branch::Degenerate, h.n(), bound)
    } else {
        let t = (threshold / T::lit(2.0)).ceil().to_usize().unwrap_or(usize::MAX).max(1);
        let core = h.min_degree_peel(t);
        debug_assert!(!core.is_empty(), "degeneracy above threshold implies a non-empty core");
        let sub = h.induced_subgraph(&core)?;
        let e = Embedding::new(&sub.graph, params)?;
        let outcome = best_of_trials(&e, plan, refine)?;
        let cut = extend_cut(h, &core, &outcome.cut)?;
        let four = T::lit(4.0);
        let bound = params.delta2 / four.powf(T::one() + tau) * threshold.powf(T::one() + T::lit(2.0) * tau);
        (cut, Branch::DenseCore, core.len(), bound)
    };
    let cut = extend_cut(g, &stripped.mapping, &cut_h)?;
    Ok(DichotomyOutcome {
        cut,
        branch,
        threshold,
        degeneracy,
        core_size,
        bound,
    })
}
