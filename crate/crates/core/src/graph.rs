//! Immutable simple undirected graphs and the structural primitives the rest
//! of the crate is built on: codegrees, neighbourhood edge counts, induced
//! subgraphs, degeneracy orderings and core peeling.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are sorted ascending, there are no loops and no parallel
/// edges. The graph never changes after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

/// An induced subgraph together with the original label of each of its
/// vertices: `mapping[new] = old`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub mapping: Vec<usize>,
}

/// Vertex ordering in which every vertex has at most `degeneracy` neighbours
/// placed before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<usize>,
    /// `back_degrees[i]` counts neighbours of `order[i]` among `order[..i]`.
    pub back_degrees: Vec<usize>,
    pub degeneracy: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation and any order, but each unordered pair at most once.
    pub fn from_edges(pairs: &[(usize, usize)], n: usize) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self {
            adjacency,
            m: pairs.len(),
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds from already-validated sorted adjacency lists.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let twice: usize = adjacency.iter().map(Vec::len).sum();
        debug_assert!(twice.is_multiple_of(2));
        Self {
            adjacency,
            m: twice / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|l| l.len() == first)
            .then_some(first)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// `|N(u) ∩ N(v)|` by merging the two sorted lists.
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        sorted_intersection_len(&self.adjacency[u], &self.adjacency[v])
    }

    /// Number of edges spanned by the neighbourhood of `v`.
    pub fn neighborhood_edge_count(&self, v: usize) -> usize {
        let twice: usize = self.adjacency[v]
            .iter()
            .map(|&j| self.codegree(v, j))
            .sum();
        debug_assert!(twice.is_multiple_of(2));
        twice / 2
    }

    /// The subgraph induced by `vertices` (duplicates are ignored).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        let n = self.n();
        let mut mapping = vertices.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        if let Some(&bad) = mapping.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut index = vec![usize::MAX; n];
        for (new, &old) in mapping.iter().enumerate() {
            index[old] = new;
        }
        let adjacency = mapping
            .iter()
            .map(|&old| {
                // old neighbours are sorted and `index` is monotone on the kept set
                self.adjacency[old]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Ok(Subgraph {
            graph: Graph::from_sorted_adjacency(adjacency),
            mapping,
        })
    }

    /// Drops every degree-0 vertex.
    pub fn remove_isolated(&self) -> Subgraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) > 0).collect();
        self.induced_subgraph(&keep)
            .expect("kept vertices are in range")
    }

    /// Min-degree-greedy ordering, reversed, computed with a bucket queue in
    /// O(n + m).
    pub fn degeneracy_ordering(&self) -> DegeneracyOrdering {
        let n = self.n();
        let mut deg = self.degrees();
        let max_deg = self.max_degree();
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
        for v in (0..n).rev() {
            buckets[deg[v]].push(v);
        }
        let mut removed = vec![false; n];
        let mut removal = Vec::with_capacity(n);
        let mut remaining_degree = Vec::with_capacity(n);
        let mut level = 0usize;
        for _ in 0..n {
            let v = loop {
                while buckets[level].is_empty() {
                    level += 1;
                }
                let v = buckets[level].pop().expect("bucket is non-empty");
                if !removed[v] && deg[v] == level {
                    break v;
                }
            };
            removed[v] = true;
            removal.push(v);
            remaining_degree.push(deg[v]);
            for &u in &self.adjacency[v] {
                if !removed[u] {
                    deg[u] -= 1;
                    buckets[deg[u]].push(u);
                }
            }
            level = level.saturating_sub(1);
        }
        let degeneracy = remaining_degree.iter().copied().max().unwrap_or(0);
        removal.reverse();
        remaining_degree.reverse();
        DegeneracyOrdering {
            order: removal,
            back_degrees: remaining_degree,
            degeneracy,
        }
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy_ordering().degeneracy
    }

    /// The `threshold`-core: the unique maximal vertex set whose induced
    /// subgraph has minimum degree at least `threshold`. Sorted; possibly empty.
    pub fn min_degree_peel(&self, threshold: usize) -> Vec<usize> {
        let n = self.n();
        let mut deg = self.degrees();
        let mut removed = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] < threshold).collect();
        for &v in &queue {
            removed[v] = true;
        }
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] < threshold {
                        removed[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        (0..n).filter(|&v| !removed[v]).collect()
    }
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
