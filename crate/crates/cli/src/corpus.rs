//! Seeded graph collections used by the end-to-end checks.

use surplus_core::{generators, Graph};

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

/// 100 seeded random graphs on at most 200 vertices, isolated vertices
/// stripped: 25 small `G(n, p)` (n <= 16), 55 larger `G(n, p)` over a range
/// of densities, and 20 triangle-free process graphs.
pub fn random_corpus() -> Vec<NamedGraph> {
    const DENSITIES: [f64; 11] = [0.02, 0.04, 0.06, 0.08, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5, 0.7];
    let mut out = Vec::with_capacity(100);
    let mut push = |name: String, g: Graph| {
        let graph = g.remove_isolated().graph;
        if graph.m() > 0 {
            out.push(NamedGraph { name, graph });
            true
        } else {
            false
        }
    };
    let mut seed = 1u64;
    let mut i = 0;
    while i < 25 {
        let n = 5 + i % 12;
        let p = [0.25, 0.4, 0.55, 0.7, 0.85][i % 5];
        seed += 1;
        if push(format!("gnp-{n}-{p}-{seed}"), generators::gnp(n, p, seed).unwrap()) {
            i += 1;
        }
    }
    let mut i = 0;
    while i < 55 {
        let n = 20 + (i * 37) % 181;
        let p = DENSITIES[i % DENSITIES.len()];
        // keep dense instances small enough for the materialized checks
        let n = if p >= 0.3 { n.min(90) } else { n };
        seed += 1;
        if push(format!("gnp-{n}-{p}-{seed}"), generators::gnp(n, p, seed).unwrap()) {
            i += 1;
        }
    }
    for i in 0..20 {
        let n = 20 + i * 9;
        seed += 1;
        push(format!("trianglefree-{n}-{seed}"), generators::random_triangle_free(n, seed).unwrap());
    }
    out
}

/// C_5, K_5, the Petersen graph and the wheel with a 4-cycle rim.
pub fn named_graphs() -> Vec<NamedGraph> {
    vec![
        NamedGraph {
            name: "C5".into(),
            graph: generators::cycle(5).unwrap(),
        },
        NamedGraph {
            name: "K5".into(),
            graph: generators::complete(5).unwrap(),
        },
        NamedGraph {
            name: "Petersen".into(),
            graph: generators::petersen(),
        },
        NamedGraph {
            name: "W4".into(),
            graph: generators::wheel_even(2).unwrap(),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = random_corpus();
        assert_eq!(c.len(), 100);
        assert!(c.iter().all(|g| g.graph.n() <= 200 && g.graph.m() > 0 && g.graph.min_degree() > 0));
        assert!(c.iter().filter(|g| g.graph.n() <= 16).count() >= 25);
        let again = random_corpus();
        assert!(c.iter().zip(&again).all(|(a, b)| a.graph == b.graph && a.name == b.name));
    }
}
