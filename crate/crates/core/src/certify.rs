//! Stability certificates: a nonhamiltonian graph with minimum degree at
//! least `d` and more than `e(n, d+1)` edges is a spanning subgraph of
//! `H_{n,d}` or `H'_{n,d}`, and this module finds the embedding.
//!
//! The pipeline mirrors the structural argument step by step:
//!
//! 1. saturate the input (any embedding of the closure restricts to it);
//! 2. check that no non-edge of the closure has degree sum `≥ n`;
//! 3. take the maximal Pósa witness `(k, D)` and check `|D| = k` and that
//!    `V ∖ D` is a clique;
//! 4. check `k = d`;
//! 5. let `W` be the neighbors of `D` outside `D`; every `u ∈ D` must see
//!    exactly `W` outside `D`. `|W| = 1` gives `H'_{n,d}`, `|W| = d` gives
//!    `H_{n,d}`, nothing else can occur.
//!
//! A failed check in steps 2–5 is reported as [`CertifyError::InvariantViolated`]
//! carrying the offending graph: it would be a counterexample to the theory,
//! not a user error.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{build_h, build_hprime};
use crate::formulas::{d0, e_bound, h_edges, max_degree_param};
use crate::graph::{Graph, VertexSet};
use crate::graph6::decode_graph6;
use crate::hamilton::{HamiltonError, Solver};
use crate::posa::posa_witness_max;
use crate::saturation::{check_ore_property, is_saturated_with, saturate_with, SaturationError};

/// Largest order accepted by the brute-force containment oracles.
pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("parameter out of range: need n ≥ 3 and 1 ≤ d < ⌊(n−1)/2⌋, got n = {n}, d = {d}")]
    ParameterOutOfRange { n: usize, d: usize },
    #[error("input graph is hamiltonian")]
    HamiltonianInput,
    #[error("minimum degree {min_degree} is below d = {d}")]
    MinDegreeBelowD { min_degree: usize, d: usize },
    #[error("{edges} edges do not exceed e(n, d+1) = {bound}")]
    NotEnoughEdges { edges: usize, bound: u64 },
    #[error("input graph is not saturated")]
    NotSaturated,
    #[error("{edges} edges do not exceed h(n, ⌊(n−1)/2⌋) = {bound}")]
    SplitHypothesis { edges: usize, bound: u64 },
    #[error("split size k = {k} differs from the minimum degree {min_degree} or from d = {d}")]
    DegreeMismatch {
        k: usize,
        min_degree: usize,
        d: usize,
    },
    #[error("oracle search is limited to {ORACLE_MAX_ORDER} vertices, got {0}")]
    TooLarge(usize),
    #[error("internal invariant violated ({what}) on graph {graph6}")]
    InvariantViolated { what: String, graph6: String },
    #[error(transparent)]
    Hamilton(#[from] HamiltonError),
}

impl CertifyError {
    /// Stable name of the violated hypothesis, for machine consumers.
    pub fn kind(&self) -> &'static str {
        match self {
            CertifyError::ParameterOutOfRange { .. } => "ParameterOutOfRange",
            CertifyError::HamiltonianInput => "HamiltonianInput",
            CertifyError::MinDegreeBelowD { .. } => "MinDegreeBelowD",
            CertifyError::NotEnoughEdges { .. } => "NotEnoughEdges",
            CertifyError::NotSaturated => "NotSaturated",
            CertifyError::SplitHypothesis { .. } => "SplitHypothesis",
            CertifyError::DegreeMismatch { .. } => "DegreeMismatch",
            CertifyError::TooLarge(_) => "TooLarge",
            CertifyError::InvariantViolated { .. } => "InvariantViolated",
            CertifyError::Hamilton(_) => "Hamilton",
        }
    }

    fn violated(what: impl Into<String>, g: &Graph) -> Self {
        CertifyError::InvariantViolated {
            what: what.into(),
            graph6: g.to_graph6(),
        }
    }
}

impl From<SaturationError> for CertifyError {
    fn from(e: SaturationError) -> Self {
        match e {
            SaturationError::AlreadyHamiltonian => CertifyError::HamiltonianInput,
            SaturationError::OrderTooSmall(n) => CertifyError::ParameterOutOfRange { n, d: 0 },
            SaturationError::Hamilton(h) => CertifyError::Hamilton(h),
        }
    }
}

/// A clique `V ∖ low` plus `k` low-degree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub k: usize,
    pub low: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Embedding {
    /// `low` is independent and sends edges only into `attach`.
    H { low: VertexSet, attach: VertexSet },
    /// Edges leaving `block` all go through `cut`.
    HPrime { block: VertexSet, cut: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CertificateJson", try_from = "CertificateJson")]
pub struct StabilityCertificate {
    pub d: usize,
    pub embedding: Embedding,
    /// The saturated supergraph the structure was read from.
    pub saturated_graph: Graph,
}

impl StabilityCertificate {
    pub fn is_h(&self) -> bool {
        matches!(self.embedding, Embedding::H { .. })
    }

    /// For `d = 1` the two extremal graphs coincide.
    pub fn coincident(&self) -> bool {
        self.d == 1
    }

    /// A relabeling sending the certified graph into the constructions'
    /// fixed labeling: `D ↦ {n−d..n}`, `S ↦ {0..d}` for `H`; `c ↦ 0`,
    /// `B ∖ {c} ↦ {n−d..n}` for `H'`. Remaining vertices fill the gap in
    /// increasing order.
    pub fn relabeling(&self) -> Vec<usize> {
        let n = self.saturated_graph.order();
        let (front, back): (Vec<usize>, Vec<usize>) = match self.embedding {
            Embedding::H { low, attach } => (attach.to_vec(), low.to_vec()),
            Embedding::HPrime { block, cut } => (vec![cut], block.without(cut).to_vec()),
        };
        let placed: VertexSet = front.iter().chain(&back).copied().collect();
        let middle = (VertexSet::full(n) - placed).to_vec();
        let mut perm = vec![0; n];
        for (label, v) in front.into_iter().chain(middle).chain(back).enumerate() {
            perm[v] = label;
        }
        perm
    }

    fn target(&self) -> Option<Graph> {
        let n = self.saturated_graph.order();
        let built = match self.embedding {
            Embedding::H { .. } => build_h(n, self.d),
            Embedding::HPrime { .. } => build_hprime(n, self.d),
        };
        built.ok().map(|c| c.graph)
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    variant: String,
    d: usize,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none", default)]
    low: Option<VertexSet>,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none", default)]
    attach: Option<VertexSet>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none", default)]
    block: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    c: Option<usize>,
    saturated_graph6: String,
    #[serde(default)]
    coincident: bool,
}

impl From<StabilityCertificate> for CertificateJson {
    fn from(c: StabilityCertificate) -> Self {
        let coincident = c.coincident();
        let saturated_graph6 = c.saturated_graph.to_graph6();
        match c.embedding {
            Embedding::H { low, attach } => CertificateJson {
                variant: "H".into(),
                d: c.d,
                low: Some(low),
                attach: Some(attach),
                block: None,
                c: None,
                saturated_graph6,
                coincident,
            },
            Embedding::HPrime { block, cut } => CertificateJson {
                variant: "HPRIME".into(),
                d: c.d,
                low: None,
                attach: None,
                block: Some(block),
                c: Some(cut),
                saturated_graph6,
                coincident,
            },
        }
    }
}

impl TryFrom<CertificateJson> for StabilityCertificate {
    type Error = String;

    fn try_from(j: CertificateJson) -> Result<Self, String> {
        let saturated_graph =
            decode_graph6(j.saturated_graph6.as_bytes()).map_err(|e| e.to_string())?;
        let embedding = match (j.variant.as_str(), j.low, j.attach, j.block, j.c) {
            ("H", Some(low), Some(attach), None, None) => Embedding::H { low, attach },
            ("HPRIME", None, None, Some(block), Some(cut)) => Embedding::HPrime { block, cut },
            _ => return Err(format!("inconsistent fields for variant {:?}", j.variant)),
        };
        Ok(StabilityCertificate {
            d: j.d,
            embedding,
            saturated_graph,
        })
    }
}

/// The maximal Pósa witness of a saturated graph with more than
/// `h(n, ⌊(n−1)/2⌋)` edges, checked to split off a clique.
pub fn extract_split(g_sat: &Graph) -> Result<Split, CertifyError> {
    extract_split_with(g_sat, &Solver::default())
}

pub fn extract_split_with(g_sat: &Graph, solver: &Solver) -> Result<Split, CertifyError> {
    let n = g_sat.order();
    if n < 3 {
        return Err(CertifyError::ParameterOutOfRange { n, d: 0 });
    }
    if !is_saturated_with(g_sat, solver)? {
        return Err(CertifyError::NotSaturated);
    }
    let bound = h_edges(n as u64, max_degree_param(n as u64)).expect("d ≤ n");
    let edges = g_sat.edge_count();
    if edges as u64 <= bound {
        return Err(CertifyError::SplitHypothesis { edges, bound });
    }
    split_unchecked(g_sat)
}

fn split_unchecked(g: &Graph) -> Result<Split, CertifyError> {
    let w = posa_witness_max(g)
        .ok_or_else(|| CertifyError::violated("nonhamiltonian graph without a Pósa witness", g))?;
    if w.low.len() != w.k {
        return Err(CertifyError::violated(
            format!("maximal witness has |D| = {} ≠ k = {}", w.low.len(), w.k),
            g,
        ));
    }
    if !g.is_clique(g.vertices() - w.low) {
        return Err(CertifyError::violated("G − D is not complete", g));
    }
    Ok(Split { k: w.k, low: w.low })
}

/// Identifies a saturated graph whose split size equals its minimum degree
/// `d` as `H_{n,d}` or `H'_{n,d}`.
pub fn classify_saturated(g_sat: &Graph, d: usize) -> Result<StabilityCertificate, CertifyError> {
    let split = extract_split(g_sat)?;
    let min_degree = g_sat.min_degree();
    if split.k != min_degree || split.k != d {
        return Err(CertifyError::DegreeMismatch {
            k: split.k,
            min_degree,
            d,
        });
    }
    classify_unchecked(g_sat, split)
}

fn classify_unchecked(g: &Graph, split: Split) -> Result<StabilityCertificate, CertifyError> {
    let d = split.k;
    let low = split.low;
    let w = g.union_neighborhood(low);
    for u in low {
        if g.neighbors(u) - low != w {
            return Err(CertifyError::violated(
                format!("vertex {u} of D does not see exactly W outside D"),
                g,
            ));
        }
    }
    let embedding = if w.len() == 1 {
        let cut = w.first().expect("|W| = 1");
        Embedding::HPrime {
            block: low.with(cut),
            cut,
        }
    } else if w.len() == d {
        if !g.is_independent(low) {
            return Err(CertifyError::violated("D is not independent", g));
        }
        Embedding::H { low, attach: w }
    } else {
        return Err(CertifyError::violated(
            format!("|W| = {} is neither 1 nor d = {d}", w.len()),
            g,
        ));
    };
    let cert = StabilityCertificate {
        d,
        embedding,
        saturated_graph: g.clone(),
    };
    let target = cert
        .target()
        .ok_or_else(|| CertifyError::violated("d out of range", g))?;
    if g.relabel(&cert.relabeling()) != target {
        return Err(CertifyError::violated(
            "closure differs from the extremal graph",
            g,
        ));
    }
    Ok(cert)
}

/// Certifies that `g` embeds into `H_{n,d}` or `H'_{n,d}`.
///
/// Hypotheses, checked in this order: `3 ≤ n`, `1 ≤ d < ⌊(n−1)/2⌋` (so that
/// `e(n, d+1)` is defined), `δ(g) ≥ d`, `e(g) > e(n, d+1)`, `g`
/// nonhamiltonian.
pub fn certify_stability(g: &Graph, d: usize) -> Result<StabilityCertificate, CertifyError> {
    certify_stability_with(g, d, &Solver::default())
}

pub fn certify_stability_with(
    g: &Graph,
    d: usize,
    solver: &Solver,
) -> Result<StabilityCertificate, CertifyError> {
    let n = g.order();
    if n < 3 || d == 0 || d as u64 >= max_degree_param(n as u64) {
        return Err(CertifyError::ParameterOutOfRange { n, d });
    }
    let min_degree = g.min_degree();
    if min_degree < d {
        return Err(CertifyError::MinDegreeBelowD { min_degree, d });
    }
    let bound = e_bound(n as u64, d as u64 + 1).expect("range checked above");
    let edges = g.edge_count();
    if edges as u64 <= bound {
        return Err(CertifyError::NotEnoughEdges { edges, bound });
    }

    let closure = saturate_with(g, solver)?;
    if let Some((u, v)) = check_ore_property(&closure) {
        return Err(CertifyError::violated(
            format!("saturated graph has non-edge ({u}, {v}) with degree sum ≥ n"),
            &closure,
        ));
    }
    let split = split_unchecked(&closure)?;
    if split.k != d || closure.min_degree() != d {
        return Err(CertifyError::violated(
            format!(
                "split size {} ≠ d = {d} (δ = {})",
                split.k,
                closure.min_degree()
            ),
            &closure,
        ));
    }
    if d as u64 >= d0(n as u64) {
        return Err(CertifyError::violated("qualifying d is not below d0(n)", g));
    }
    let cert = classify_unchecked(&closure, split)?;
    if !verify_certificate(g, &cert) {
        return Err(CertifyError::violated(
            "certificate does not restrict to the input",
            g,
        ));
    }
    if g.is_two_connected() && !cert.is_h() {
        return Err(CertifyError::violated(
            "2-connected input certified into H'",
            g,
        ));
    }
    Ok(cert)
}

fn embedding_holds(g: &Graph, d: usize, embedding: Embedding) -> bool {
    let all = g.vertices();
    match embedding {
        Embedding::H { low, attach } => {
            low.len() == d
                && attach.len() == d
                && low.is_disjoint(attach)
                && (low | attach).is_subset(all)
                && g.is_independent(low)
                && g.union_neighborhood(low).is_subset(attach)
        }
        Embedding::HPrime { block, cut } => {
            block.len() == d + 1
                && block.is_subset(all)
                && block.contains(cut)
                && block
                    .without(cut)
                    .iter()
                    .all(|v| g.neighbors(v).is_subset(block))
        }
    }
}

/// Re-checks a certificate against `g` from scratch.
pub fn verify_certificate(g: &Graph, cert: &StabilityCertificate) -> bool {
    let n = g.order();
    let d = cert.d;
    if n < 3 || d == 0 || d as u64 > max_degree_param(n as u64) {
        return false;
    }
    let sat = &cert.saturated_graph;
    if sat.order() != n || !sat.contains_graph(g) {
        return false;
    }
    if !embedding_holds(g, d, cert.embedding) || !embedding_holds(sat, d, cert.embedding) {
        return false;
    }
    match cert.target() {
        Some(target) => target.contains_graph(&g.relabel(&cert.relabeling())),
        None => false,
    }
}

/// `k`-subsets of `{0..n}` in increasing bitmask order.
fn subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit = 1u64 << n;
    let mut next = if k <= n { Some((1u64 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit || (k == 0 && cur != 0) {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(VertexSet::from_bits(cur))
    })
}

/// Brute force: an independent `d`-set whose neighborhood fits in `d`
/// vertices, returned with an attachment set padded by the smallest free
/// vertices.
pub fn oracle_subgraph_of_h(
    g: &Graph,
    d: usize,
) -> Result<Option<(VertexSet, VertexSet)>, CertifyError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(CertifyError::TooLarge(n));
    }
    if d == 0 || 2 * d > n {
        return Ok(None);
    }
    for low in subsets(n, d) {
        if !g.is_independent(low) {
            continue;
        }
        let nbhd = g.union_neighborhood(low);
        if nbhd.len() > d {
            continue;
        }
        let mut attach = nbhd;
        for v in g.vertices() - low - nbhd {
            if attach.len() == d {
                break;
            }
            attach = attach.with(v);
        }
        return Ok(Some((low, attach)));
    }
    Ok(None)
}

/// Brute force: a `(d+1)`-set `B` and `c ∈ B` with every edge leaving `B`
/// incident to `c`.
pub fn oracle_subgraph_of_hprime(
    g: &Graph,
    d: usize,
) -> Result<Option<(VertexSet, usize)>, CertifyError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(CertifyError::TooLarge(n));
    }
    if d == 0 || d + 1 > n {
        return Ok(None);
    }
    for block in subsets(n, d + 1) {
        for cut in block {
            if block
                .without(cut)
                .iter()
                .all(|v| g.neighbors(v).is_subset(block))
            {
                return Ok(Some((block, cut)));
            }
        }
    }
    Ok(None)
}
