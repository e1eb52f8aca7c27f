//! The extremal graphs, with fixed vertex labelings.
//!
//! | family | vertices |
//! |---|---|
//! | `H_{n,d}` | clique `A = {0..n−d}`, `S = {0..d}` ⊆ `A`, independent `D = {n−d..n}` joined to `S` |
//! | `H'_{n,d}` | clique `A = {0..n−d}`, clique `B = {0} ∪ {n−d..n}`, cut vertex `0` |
//! | `K_n − E(K_r)` | `r = ⌈(n+1)/2⌉`, removed clique on the last `r` vertices |
//!
//! For odd `n` the last family coincides, label for label, with
//! `H_{n,(n−1)/2}`. For `d = 1`, `H_{n,1}` and `H'_{n,1}` are the same labeled
//! graph (`K_{n−1}` with vertex `n−1` pendant at `0`); only the reported parts
//! differ.

use serde::Serialize;
use thiserror::Error;

use crate::formulas::{max_degree_param, FormulaError};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Parameter(#[from] FormulaError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    H,
    #[serde(rename = "hprime")]
    HPrime,
    #[serde(rename = "kminus")]
    KMinusClique,
}

/// Named vertex classes of a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Parts {
    /// `A` is the clique, `S ⊆ A` the attachment set, `D` the added vertices.
    H {
        a: VertexSet,
        s: VertexSet,
        d: VertexSet,
    },
    /// `A` and `B` are cliques meeting in `{cut}`.
    #[serde(rename = "hprime")]
    HPrime {
        a: VertexSet,
        b: VertexSet,
        cut: usize,
    },
    #[serde(rename = "kminus")]
    KMinusClique { removed: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledConstruction {
    pub graph: Graph,
    pub family: Family,
    pub d: Option<usize>,
    pub parts: Parts,
}

fn check(n: usize, d: usize) -> Result<(), ConstructionError> {
    let max = max_degree_param(n as u64);
    if d == 0 || d as u64 > max {
        return Err(FormulaError::DegreeOutOfRange {
            n: n as u64,
            d: d as u64,
            max,
        }
        .into());
    }
    Ok(())
}

fn clique_rows(rows: &mut [u64], s: VertexSet) {
    for v in s {
        rows[v] |= s.without(v).bits();
    }
}

/// `H_{n,d}`: a `K_{n−d}` plus `d` vertices joined to the same `d` clique vertices.
pub fn build_h(n: usize, d: usize) -> Result<LabeledConstruction, ConstructionError> {
    check(n, d)?;
    let a = VertexSet::full(n - d);
    let s = VertexSet::full(d);
    let added = VertexSet::full(n) - a;
    let mut rows = vec![0u64; n];
    clique_rows(&mut rows, a);
    for v in added {
        rows[v] |= s.bits();
    }
    for v in s {
        rows[v] |= added.bits();
    }
    let graph = Graph::from_rows(rows)?;
    Ok(LabeledConstruction {
        graph,
        family: Family::H,
        d: Some(d),
        parts: Parts::H { a, s, d: added },
    })
}

/// `H'_{n,d}`: cliques `K_{n−d}` and `K_{d+1}` sharing exactly one vertex.
pub fn build_hprime(n: usize, d: usize) -> Result<LabeledConstruction, ConstructionError> {
    check(n, d)?;
    let a = VertexSet::full(n - d);
    let b = (VertexSet::full(n) - a).with(0);
    let mut rows = vec![0u64; n];
    clique_rows(&mut rows, a);
    clique_rows(&mut rows, b);
    let graph = Graph::from_rows(rows)?;
    Ok(LabeledConstruction {
        graph,
        family: Family::HPrime,
        d: Some(d),
        parts: Parts::HPrime { a, b, cut: 0 },
    })
}

/// `K_n − E(K_{⌈(n+1)/2⌉})`, the removed clique on the highest labels.
pub fn build_k_minus_clique(n: usize) -> Result<LabeledConstruction, ConstructionError> {
    if n < 3 {
        return Err(FormulaError::OrderTooSmall(n as u64).into());
    }
    let r = (n + 2) / 2;
    let removed = VertexSet::full(n) - VertexSet::full(n - r);
    let mut rows = Graph::complete(n)?.rows().to_vec();
    for v in removed {
        rows[v] &= !removed.bits();
    }
    let graph = Graph::from_rows(rows)?;
    Ok(LabeledConstruction {
        graph,
        family: Family::KMinusClique,
        d: None,
        parts: Parts::KMinusClique { removed },
    })
}
