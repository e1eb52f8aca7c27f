//! Saturated (edge-maximal nonhamiltonian) graphs.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;
use crate::hamilton::{CycleWitness, HamiltonError, Solver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturationError {
    #[error("input graph is hamiltonian")]
    AlreadyHamiltonian,
    #[error("saturation needs at least 3 vertices, got {0}")]
    OrderTooSmall(usize),
    #[error(transparent)]
    Hamilton(#[from] HamiltonError),
}

/// Nonhamiltonian, and every added edge creates a hamiltonian cycle.
///
/// Graphs on fewer than three vertices are reported as not saturated.
pub fn is_saturated(g: &Graph) -> bool {
    is_saturated_with(g, &Solver::default()).expect("no cancellation token")
}

pub fn is_saturated_with(g: &Graph, solver: &Solver) -> Result<bool, HamiltonError> {
    if g.order() < 3 || solver.cycle(g)?.is_some() {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        let plus = g.with_edge(u, v).expect("non-edge of a simple graph");
        if solver.cycle(&plus)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deterministic saturated supergraph of a nonhamiltonian graph.
///
/// Non-edges are scanned in lexicographic order; an edge is added when the
/// graph stays nonhamiltonian. Passes repeat until one adds nothing.
pub fn saturate(g: &Graph) -> Result<Graph, SaturationError> {
    saturate_with(g, &Solver::default())
}

pub fn saturate_with(g: &Graph, solver: &Solver) -> Result<Graph, SaturationError> {
    let n = g.order();
    if n < 3 {
        return Err(SaturationError::OrderTooSmall(n));
    }
    if solver.cycle(g)?.is_some() {
        return Err(SaturationError::AlreadyHamiltonian);
    }
    // A cycle found in G + uv stays a cycle of every later G' + uv.
    let mut rejected: HashMap<(usize, usize), CycleWitness> = HashMap::new();
    let mut current = g.clone();
    loop {
        let mut added = false;
        let candidates: Vec<_> = current.non_edges().collect();
        for (u, v) in candidates {
            let plus = current.with_edge(u, v).expect("non-edge of a simple graph");
            if let Some(w) = rejected.get(&(u, v)) {
                debug_assert!(w.validates(&plus));
                continue;
            }
            match solver.cycle(&plus)? {
                Some(w) => {
                    rejected.insert((u, v), w);
                }
                None => {
                    current = plus;
                    added = true;
                }
            }
        }
        if !added {
            return Ok(current);
        }
    }
}

/// First non-edge (lexicographically) with `d(u) + d(v) ≥ n`, if any.
///
/// Saturated graphs never have one.
pub fn check_ore_property(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    g.non_edges().find(|&(u, v)| g.degree(u) + g.degree(v) >= n)
}
