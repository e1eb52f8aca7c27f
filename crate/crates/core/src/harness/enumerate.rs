//! Isomorph-free generation of small graphs by vertex augmentation.

use std::collections::HashSet;

use thiserror::Error;

use super::canon::canonical_form;
use crate::formulas::pairs;
use crate::graph::Graph;

/// Largest order [`enumerate_graphs`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices, got {0}")]
    Order(usize),
}

/// One canonical representative per isomorphism class of `n`-vertex graphs
/// with `min_edges ≤ e ≤ max_edges`, sorted by canonical rows.
///
/// Level `k` holds the canonical forms of all `k`-vertex graphs that can
/// still grow into a graph within the bounds; level `k+1` adds a vertex
/// with every admissible neighborhood and deduplicates by canonical form.
pub fn enumerate_graphs(
    n: usize,
    max_edges: Option<usize>,
    min_edges: Option<usize>,
) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::Order(n));
    }
    let max_edges = max_edges.unwrap_or(usize::MAX);
    let min_edges = min_edges.unwrap_or(0);
    let total = pairs(n as u64) as usize;
    let reachable = |k: usize, e: usize| e + total - pairs(k as u64) as usize >= min_edges;

    let mut level = vec![Graph::empty(1).expect("one vertex")];
    if !reachable(1, 0) {
        level.clear();
    }
    for k in 1..n {
        let mut next: HashSet<Graph> = HashSet::new();
        for g in &level {
            let e = g.edge_count();
            for mask in 0u64..1 << k {
                let e2 = e + mask.count_ones() as usize;
                if e2 > max_edges || !reachable(k + 1, e2) {
                    continue;
                }
                next.insert(canonical_form(&extend(g, mask)));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level)
}

fn extend(g: &Graph, mask: u64) -> Graph {
    let k = g.order();
    let mut rows: Vec<u64> = g
        .rows()
        .iter()
        .enumerate()
        .map(|(v, &r)| r | (mask >> v & 1) << k)
        .collect();
    rows.push(mask);
    Graph::from_rows_unchecked(rows)
}
