//! Seeded generators for randomized checks.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64`, so a seed
//! reproduces the same corpus on any platform for a given build of this
//! crate.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{build_h, build_hprime};
use crate::formulas::max_degree_param;
use crate::graph::Graph;
use crate::hamilton::{is_hamiltonian, LinearForest};

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("n ≥ 1");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g = g.with_edge(u, v).expect("in range");
            }
        }
    }
    g
}

fn drop_edges(rng: &mut ChaCha8Rng, g: &Graph, p: f64) -> Graph {
    g.edges()
        .filter(|_| rng.gen_bool(p))
        .fold(g.clone(), |acc, (u, v)| {
            acc.without_edge(u, v).expect("edge present")
        })
}

/// A nonhamiltonian graph on `n ≥ 3` vertices, drawn from a mix of
/// structured families (subgraphs of the extremal graphs, graphs with a
/// cut vertex or a vertex of degree at most one, unbalanced bipartite
/// graphs) and rejection-sampled `G(n, p)`, then randomly relabeled.
pub fn random_nonhamiltonian(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 3, "nonhamiltonian sampling needs n ≥ 3");
    let max_d = max_degree_param(n as u64) as usize;
    let g = match rng.gen_range(0..5) {
        0 => {
            let d = rng.gen_range(1..=max_d);
            let base = if rng.gen_bool(0.5) {
                build_h(n, d)
            } else {
                build_hprime(n, d)
            };
            let p = rng.gen_range(0.0..0.3);
            drop_edges(rng, &base.expect("valid parameters").graph, p)
        }
        1 => {
            let mut g = {
                let p = rng.gen_range(0.2..0.95);
                random_graph(rng, n, p)
            };
            let v = rng.gen_range(0..n);
            for w in g.neighbors(v).iter().skip(1).collect::<Vec<_>>() {
                g = g.without_edge(v, w).expect("edge present");
            }
            g
        }
        2 => {
            // Vertex `split` separates the lower and upper labels.
            let split = rng.gen_range(1..n - 1);
            let mut g = {
                let p = rng.gen_range(0.3..1.0);
                random_graph(rng, n, p)
            };
            for u in 0..split {
                for w in split + 1..n {
                    if g.has_edge(u, w) {
                        g = g.without_edge(u, w).expect("edge present");
                    }
                }
            }
            g
        }
        3 => {
            let small = rng.gen_range(1..=(n - 1) / 2);
            let mut g = Graph::empty(n).expect("n ≥ 1");
            for u in 0..small {
                for v in small..n {
                    if rng.gen_bool(0.8) {
                        g = g.with_edge(u, v).expect("in range");
                    }
                }
            }
            for u in 0..small {
                for v in u + 1..small {
                    if rng.gen_bool(0.5) {
                        g = g.with_edge(u, v).expect("in range");
                    }
                }
            }
            g
        }
        _ => loop {
            let g = {
                let p = rng.gen_range(0.1..0.7);
                random_graph(rng, n, p)
            };
            if is_hamiltonian(&g).is_none() {
                break g;
            }
        },
    };
    debug_assert!(is_hamiltonian(&g).is_none());
    g.relabel(&random_permutation(rng, n))
}

/// A graph with `d(u) + d(v) ≥ n + ℓ` on every non-edge together with an
/// `ℓ`-edge linear forest inside it; `ℓ` is drawn from `1..n`.
pub fn random_posa_instance(rng: &mut ChaCha8Rng, n: usize) -> (Graph, LinearForest) {
    assert!(n >= 3, "the degree-sum condition needs n ≥ 3");
    loop {
        let l = rng.gen_range(1..n);
        let mut g = {
            let p = rng.gen_range(0.3..1.0);
            random_graph(rng, n, p)
        };
        loop {
            let bad: Vec<_> = g
                .non_edges()
                .filter(|&(u, v)| g.degree(u) + g.degree(v) < n + l)
                .collect();
            let Some(&(u, v)) = bad.choose(rng) else {
                break;
            };
            g = g.with_edge(u, v).expect("non-edge");
        }
        if let Some(forest) = random_linear_forest(rng, &g, l) {
            return (g, forest);
        }
    }
}

/// Greedy random linear forest with exactly `l` edges of `g`, if the
/// shuffled greedy pass reaches `l`.
pub fn random_linear_forest(rng: &mut ChaCha8Rng, g: &Graph, l: usize) -> Option<LinearForest> {
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(rng);
    let mut degree = vec![0usize; n];
    let mut component: Vec<usize> = (0..n).collect();
    let mut chosen = Vec::with_capacity(l);
    for (u, v) in edges {
        if chosen.len() == l {
            break;
        }
        if degree[u] == 2 || degree[v] == 2 || component[u] == component[v] {
            continue;
        }
        let (keep, gone) = (component[u], component[v]);
        component
            .iter_mut()
            .filter(|c| **c == gone)
            .for_each(|c| *c = keep);
        degree[u] += 1;
        degree[v] += 1;
        chosen.push((u, v));
    }
    (chosen.len() == l).then(|| LinearForest::new(chosen).expect("acyclic with degree ≤ 2"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posa::posa2_condition_holds;
    use rand::SeedableRng;

    #[test]
    fn nonhamiltonian_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..200 {
            let n = 3 + i % 10;
            let g = random_nonhamiltonian(&mut rng, n);
            assert_eq!(g.order(), n);
            assert!(is_hamiltonian(&g).is_none());
        }
    }

    #[test]
    fn posa_samples_meet_the_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..200 {
            let n = 3 + i % 10;
            let (g, f) = random_posa_instance(&mut rng, n);
            assert!(posa2_condition_holds(&g, f.len()).unwrap());
            assert!(f.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        }
    }

    #[test]
    fn seeds_reproduce() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| random_nonhamiltonian(&mut rng, 9))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(5), draw(5));
        assert_ne!(draw(5), draw(6));
    }
}
