//! Pósa's degree conditions.
//!
//! A nonhamiltonian graph on `n ≥ 3` vertices always has, for some
//! `1 ≤ k ≤ ⌊(n−1)/2⌋`, at least `k` vertices of degree at most `k`. The
//! certifier needs the *largest* such `k`, so that is what
//! [`posa_witness_max`] returns.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PosaWitness {
    pub k: usize,
    /// All vertices of degree at most `k`; may hold more than `k` of them.
    pub low: VertexSet,
}

impl PosaWitness {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        self.k >= 1
            && self.k <= n.saturating_sub(1) / 2
            && self.low.len() >= self.k
            && self.low.is_subset(g.vertices())
            && self.low.iter().all(|v| g.degree(v) <= self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("ℓ = {l} is outside 1..{n}")]
pub struct ForestSizeError {
    pub l: usize,
    pub n: usize,
}

pub fn posa_witness_max(g: &Graph) -> Option<PosaWitness> {
    let n = g.order();
    let degrees = g.degrees();
    (1..=n.saturating_sub(1) / 2).rev().find_map(|k| {
        let low: VertexSet = (0..n).filter(|&v| degrees[v] <= k).collect();
        (low.len() >= k).then_some(PosaWitness { k, low })
    })
}

/// `d(u) + d(v) ≥ n + ℓ` for every non-edge `uv`.
pub fn posa2_condition_holds(g: &Graph, l: usize) -> Result<bool, ForestSizeError> {
    let n = g.order();
    if l == 0 || l >= n {
        return Err(ForestSizeError { l, n });
    }
    Ok(g.non_edges()
        .all(|(u, v)| g.degree(u) + g.degree(v) >= n + l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_h;
    use crate::graph::tests::cycle;

    #[test]
    fn witness_examples() {
        let h = build_h(11, 3).unwrap();
        let w = posa_witness_max(&h.graph).unwrap();
        assert_eq!(w.k, 3);
        assert_eq!(w.low, VertexSet::full(11) - VertexSet::full(8));
        assert!(w.is_valid_for(&h.graph));

        assert_eq!(posa_witness_max(&Graph::complete(6).unwrap()), None);

        let c5 = cycle(5);
        let w = posa_witness_max(&c5).unwrap();
        assert_eq!((w.k, w.low), (2, VertexSet::full(5)));
    }

    #[test]
    fn condition_examples() {
        assert_eq!(
            posa2_condition_holds(&Graph::complete(5).unwrap(), 2),
            Ok(true)
        );
        let mut cocktail = Graph::complete(6).unwrap();
        for i in [0, 2, 4] {
            cocktail = cocktail.without_edge(i, i + 1).unwrap();
        }
        assert_eq!(posa2_condition_holds(&cocktail, 1), Ok(true));
        assert_eq!(posa2_condition_holds(&cocktail, 2), Ok(true));
        assert_eq!(posa2_condition_holds(&cocktail, 3), Ok(false));
        assert_eq!(posa2_condition_holds(&cycle(5), 1), Ok(false));
        assert_eq!(
            posa2_condition_holds(&cycle(5), 0),
            Err(ForestSizeError { l: 0, n: 5 })
        );
        assert_eq!(
            posa2_condition_holds(&cycle(5), 5),
            Err(ForestSizeError { l: 5, n: 5 })
        );
    }
}
