//! Exhaustive and randomized checks of the bound and structure theorems.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::canon::canonical_form;
use super::enumerate::{enumerate_graphs, EnumerateError};
use super::random::random_posa_instance;
use super::report::{Params, Theorem, VerificationReport};
use crate::certify::{
    certify_stability_with, oracle_subgraph_of_h, oracle_subgraph_of_hprime, verify_certificate,
};
use crate::constructions::{build_h, build_hprime, build_k_minus_clique};
use crate::formulas::{d0, e_bound, max_degree_param, pairs};
use crate::graph::Graph;
use crate::hamilton::{HamiltonError, Solver};
use crate::posa::posa_witness_max;
use crate::saturation::{check_ore_property, is_saturated_with, saturate_with};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{what} out of range: {detail}")]
    Range { what: &'static str, detail: String },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Hamilton(#[from] HamiltonError),
}

fn range(what: &'static str, detail: String) -> VerifyError {
    VerifyError::Range { what, detail }
}

/// Every nonhamiltonian class on `n` vertices, grouped by minimum degree and
/// reduced to the classes of maximum size in each group.
#[derive(Debug, Clone)]
pub struct NonhamSurvey {
    pub n: usize,
    pub graphs_examined: u64,
    /// Indexed by exact minimum degree: the largest edge count and the
    /// classes attaining it.
    pub by_min_degree: Vec<Option<(usize, Vec<Graph>)>>,
    elapsed: Duration,
}

impl NonhamSurvey {
    /// Largest nonhamiltonian edge count with `δ ≥ d`, and its classes.
    pub fn extremal(&self, d: usize) -> Option<(usize, Vec<&Graph>)> {
        let groups = self.by_min_degree.iter().skip(d).flatten();
        let max = groups.clone().map(|(e, _)| *e).max()?;
        let classes = groups
            .filter(|(e, _)| *e == max)
            .flat_map(|(_, gs)| gs)
            .collect();
        Some((max, classes))
    }
}

pub fn survey_nonhamiltonian(n: usize) -> Result<NonhamSurvey, VerifyError> {
    survey_nonhamiltonian_with(n, &Solver::default())
}

pub fn survey_nonhamiltonian_with(n: usize, solver: &Solver) -> Result<NonhamSurvey, VerifyError> {
    if !(3..=9).contains(&n) {
        return Err(range("n", format!("the survey needs 3 ≤ n ≤ 9, got {n}")));
    }
    let start = Instant::now();
    let graphs = enumerate_graphs(n, None, None)?;
    let mut by_min_degree: Vec<Option<(usize, Vec<Graph>)>> = vec![None; n];
    for g in &graphs {
        if solver.cycle(g)?.is_some() {
            continue;
        }
        let e = g.edge_count();
        let slot = &mut by_min_degree[g.min_degree()];
        match slot {
            Some((best, classes)) if e == *best => classes.push(g.clone()),
            Some((best, _)) if e < *best => {}
            _ => *slot = Some((e, vec![g.clone()])),
        }
    }
    Ok(NonhamSurvey {
        n,
        graphs_examined: graphs.len() as u64,
        by_min_degree,
        elapsed: start.elapsed(),
    })
}

/// Maximum nonhamiltonian edge count is `C(n−1, 2) + 1`, attained only by
/// `K_{n−1}` plus a pendant vertex.
pub fn verify_ore(n: usize) -> Result<VerificationReport, VerifyError> {
    if !(4..=9).contains(&n) {
        return Err(range("n", format!("need 4 ≤ n ≤ 9, got {n}")));
    }
    verify_ore_with(&survey_nonhamiltonian(n)?)
}

pub fn verify_ore_with(survey: &NonhamSurvey) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let n = survey.n;
    if !(4..=9).contains(&n) {
        return Err(range("n", format!("need 4 ≤ n ≤ 9, got {n}")));
    }
    let mut report = VerificationReport::new(
        Theorem::Ore,
        Params {
            n,
            d: None,
            seed: None,
            trials: None,
        },
    );
    report.graphs_examined = survey.graphs_examined;
    let (max, classes) = survey
        .extremal(0)
        .expect("the empty graph is nonhamiltonian");
    report.max_edges_found = Some(max);
    report.set_extremal(classes.iter().copied());
    let bound = pairs(n as u64 - 1) as usize + 1;
    if max != bound {
        for g in &classes {
            report.fail(
                g,
                format!("maximum nonhamiltonian size {max} ≠ C(n−1,2)+1 = {bound}"),
            );
        }
    }
    let pendant = canonical_form(&build_hprime(n, 1).expect("n ≥ 4").graph);
    if !classes.contains(&&pendant) {
        report.fail(&pendant, "K_{n−1} plus a pendant vertex is not extremal");
    }
    for g in classes.iter().filter(|g| ***g != pendant) {
        report.fail(g, format!("second extremal class with {max} edges"));
    }
    Ok(report.finish(start.elapsed() + survey.elapsed))
}

/// Maximum nonhamiltonian edge count with `δ ≥ d` is `e(n, d)`, attained by
/// `H_{n,d}` or by the plateau graph.
pub fn verify_erdos(n: usize, d: usize) -> Result<VerificationReport, VerifyError> {
    check_erdos_params(n, d)?;
    verify_erdos_with(&survey_nonhamiltonian(n)?, d)
}

fn check_erdos_params(n: usize, d: usize) -> Result<(), VerifyError> {
    if !(4..=9).contains(&n) {
        return Err(range("n", format!("need 4 ≤ n ≤ 9, got {n}")));
    }
    let max = max_degree_param(n as u64) as usize;
    if d == 0 || d > max {
        return Err(range("d", format!("need 1 ≤ d ≤ {max}, got {d}")));
    }
    Ok(())
}

pub fn verify_erdos_with(
    survey: &NonhamSurvey,
    d: usize,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let n = survey.n;
    check_erdos_params(n, d)?;
    let mut report = VerificationReport::new(
        Theorem::Erdos,
        Params {
            n,
            d: Some(d),
            seed: None,
            trials: None,
        },
    );
    report.graphs_examined = survey.graphs_examined;
    let bound = e_bound(n as u64, d as u64).expect("checked") as usize;
    let Some((max, classes)) = survey.extremal(d) else {
        let witness = build_h(n, d).expect("checked").graph;
        report.fail(&witness, format!("no nonhamiltonian graph with δ ≥ {d}"));
        return Ok(report.finish(start.elapsed() + survey.elapsed));
    };
    report.max_edges_found = Some(max);
    report.set_extremal(classes.iter().copied());
    if max != bound {
        for g in &classes {
            report.fail(g, format!("maximum {max} ≠ e(n,d) = {bound}"));
        }
    }
    let floor = max_degree_param(n as u64) as usize;
    let candidates = [
        build_h(n, d).expect("checked").graph,
        build_h(n, floor).expect("checked").graph,
        build_k_minus_clique(n).expect("n ≥ 3").graph,
    ];
    let attained = candidates
        .iter()
        .filter(|g| g.edge_count() == max)
        .any(|g| classes.contains(&&canonical_form(g)));
    if !attained {
        report.fail(
            &candidates[0],
            "no extremal class is H_{n,d} or the plateau graph",
        );
    }
    Ok(report.finish(start.elapsed() + survey.elapsed))
}

/// Every nonhamiltonian graph with `δ ≥ d` and more than `e(n, d+1)` edges
/// embeds into `H_{n,d}` or `H'_{n,d}`.
///
/// Enumerates complements with at most `C(n,2) − e(n,d+1) − 1` edges. Each
/// qualifier is certified, the certificate re-checked, and the matching
/// brute-force oracle must agree; 2-connected qualifiers must land in `H`.
pub fn verify_stability(n: usize, d: usize) -> Result<VerificationReport, VerifyError> {
    verify_stability_with(n, d, &Solver::default())
}

pub fn verify_stability_with(
    n: usize,
    d: usize,
    solver: &Solver,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    if !(5..=10).contains(&n) {
        return Err(range("n", format!("need 5 ≤ n ≤ 10, got {n}")));
    }
    let top = (d0(n as u64) as usize).min(max_degree_param(n as u64) as usize);
    if d == 0 || d >= top {
        return Err(range(
            "d",
            format!("need 1 ≤ d < {top} for n = {n}, got {d}"),
        ));
    }
    let mut report = VerificationReport::new(
        Theorem::Stability,
        Params {
            n,
            d: Some(d),
            seed: None,
            trials: None,
        },
    );
    let qualifiers = stability_qualifiers(n, d, solver, &mut report.graphs_examined)?;
    for g in &qualifiers {
        if let Err(reason) = check_qualifier(g, d, solver) {
            report.fail(g, reason);
        }
    }
    if let Some(max) = qualifiers.iter().map(Graph::edge_count).max() {
        report.max_edges_found = Some(max);
        report.set_extremal(qualifiers.iter().filter(|g| g.edge_count() == max));
    }
    Ok(report.finish(start.elapsed()))
}

/// Canonical forms of the nonhamiltonian classes with `δ ≥ d` and
/// `e > e(n, d+1)`, found through their complements.
pub fn stability_qualifiers(
    n: usize,
    d: usize,
    solver: &Solver,
    examined: &mut u64,
) -> Result<Vec<Graph>, VerifyError> {
    let bound = e_bound(n as u64, d as u64 + 1).map_err(|e| range("d", e.to_string()))? as usize;
    let total = pairs(n as u64) as usize;
    let Some(budget) = total.checked_sub(bound + 1) else {
        return Ok(Vec::new());
    };
    let complements = enumerate_graphs(n, Some(budget), None)?;
    *examined += complements.len() as u64;
    let mut out = Vec::new();
    for c in complements {
        if c.max_degree() + d > n - 1 {
            continue;
        }
        let g = c.complement();
        if solver.cycle(&g)?.is_none() {
            out.push(canonical_form(&g));
        }
    }
    Ok(out)
}

fn check_qualifier(g: &Graph, d: usize, solver: &Solver) -> Result<(), String> {
    let cert = certify_stability_with(g, d, solver).map_err(|e| format!("certifier: {e}"))?;
    if !verify_certificate(g, &cert) {
        return Err("certificate does not re-validate".into());
    }
    let via_h = oracle_subgraph_of_h(g, d).map_err(|e| e.to_string())?;
    let via_hprime = oracle_subgraph_of_hprime(g, d).map_err(|e| e.to_string())?;
    let agrees = if cert.coincident() {
        via_h.is_some() && via_hprime.is_some()
    } else if cert.is_h() {
        via_h.is_some()
    } else {
        via_hprime.is_some()
    };
    if !agrees {
        return Err(format!(
            "oracles disagree with the certificate (H: {}, H': {})",
            via_h.is_some(),
            via_hprime.is_some()
        ));
    }
    if g.is_two_connected() && (!cert.is_h() || via_h.is_none()) {
        return Err("2-connected qualifier does not fit H_{n,d}".into());
    }
    Ok(())
}

/// The vertex-count corollary exhaustively for `n ≤ 8`, and the
/// forest-through-cycle theorem on `trials` seeded random instances.
pub fn verify_posa_theorems(
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    verify_posa_theorems_with(n, trials, seed, &Solver::default())
}

pub fn verify_posa_theorems_with(
    n: usize,
    trials: usize,
    seed: u64,
    solver: &Solver,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    if !(3..=12).contains(&n) {
        return Err(range("n", format!("need 3 ≤ n ≤ 12, got {n}")));
    }
    let mut report = VerificationReport::new(
        Theorem::Posa,
        Params {
            n,
            d: None,
            seed: Some(seed),
            trials: Some(trials),
        },
    );
    if n <= 8 {
        let graphs = enumerate_graphs(n, None, None)?;
        report.graphs_examined += graphs.len() as u64;
        for g in &graphs {
            if solver.cycle(g)?.is_some() {
                continue;
            }
            match posa_witness_max(g) {
                Some(w) if w.is_valid_for(g) => {}
                Some(_) => report.fail(g, "invalid degree witness"),
                None => report.fail(g, "nonhamiltonian graph without a degree witness"),
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let (g, forest) = random_posa_instance(&mut rng, n);
        report.graphs_examined += 1;
        match solver.cycle_through(&g, &forest)? {
            Some(w)
                if w.validates(&g) && forest.edges().iter().all(|&(u, v)| w.uses_edge(u, v)) => {}
            Some(_) => report.fail(&g, format!("invalid cycle for forest {:?}", forest.edges())),
            None => report.fail(
                &g,
                format!("no hamiltonian cycle through forest {:?}", forest.edges()),
            ),
        }
    }
    Ok(report.finish(start.elapsed()))
}

/// Checks that `saturate(g)` is a saturated nonhamiltonian supergraph of `g`
/// with no non-edge of degree sum `≥ n`.
pub fn check_saturation_invariants(g: &Graph, solver: &Solver) -> Result<(), String> {
    let s = saturate_with(g, solver).map_err(|e| e.to_string())?;
    if !s.contains_graph(g) {
        return Err("closure is not a supergraph".into());
    }
    if !is_saturated_with(&s, solver).map_err(|e| e.to_string())? {
        return Err(format!("closure {} is not saturated", s.to_graph6()));
    }
    if let Some((u, v)) = check_ore_property(&s) {
        return Err(format!(
            "closure {} has non-edge ({u}, {v}) with degree sum ≥ n",
            s.to_graph6()
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ore_examples() {
        let r = verify_ore(6).unwrap();
        assert!(r.is_success(), "{r:?}");
        assert_eq!(r.max_edges_found, Some(11));
        assert_eq!(r.extremal_graph6.len(), 1);
        assert_eq!(r.graphs_examined, 156);

        // Two classes reach 7 edges at n = 5: K_4 plus a pendant vertex and
        // K_5 minus a triangle.
        let r = verify_ore(5).unwrap();
        assert_eq!(r.max_edges_found, Some(7));
        assert_eq!(r.extremal_graph6.len(), 2);
        assert!(!r.is_success());

        assert!(verify_ore(3).is_err());
        assert!(verify_ore(10).is_err());
    }

    #[test]
    fn erdos_examples() {
        let survey = survey_nonhamiltonian(7).unwrap();
        let r = verify_erdos_with(&survey, 2).unwrap();
        assert!(r.is_success(), "{r:?}");
        assert_eq!(r.max_edges_found, Some(15));
        let k7_minus_k4 = canonical_form(&build_k_minus_clique(7).unwrap().graph).to_graph6();
        assert!(r.extremal_graph6.contains(&k7_minus_k4));
        assert_eq!(
            verify_erdos_with(&survey, 1).unwrap().max_edges_found,
            Some(16)
        );
        assert!(verify_erdos_with(&survey, 4).is_err());
        assert!(verify_erdos(7, 0).is_err());
    }

    #[test]
    fn stability_examples() {
        let r = verify_stability(7, 1).unwrap();
        assert!(r.is_success(), "{r:?}");
        let pendant = canonical_form(&build_hprime(7, 1).unwrap().graph).to_graph6();
        assert_eq!(r.extremal_graph6, vec![pendant]);

        let r = verify_stability(8, 1).unwrap();
        assert!(r.is_success(), "{r:?}");
        assert!(r.max_edges_found.unwrap() >= 20);

        assert!(verify_stability(5, 1).is_err());
        assert!(verify_stability(8, 2).is_err());
    }

    #[test]
    fn pruned_and_unpruned_qualifiers_agree() {
        let solver = Solver::default();
        for n in 5..=7 {
            let top = (d0(n as u64) as usize).min(max_degree_param(n as u64) as usize);
            for d in 1..top {
                let mut examined = 0;
                let pruned = stability_qualifiers(n, d, &solver, &mut examined).unwrap();
                let bound = e_bound(n as u64, d as u64 + 1).unwrap() as usize;
                let mut full: Vec<Graph> = enumerate_graphs(n, None, Some(bound + 1))
                    .unwrap()
                    .into_iter()
                    .filter(|g| g.min_degree() >= d && solver.cycle(g).unwrap().is_none())
                    .collect();
                let mut pruned = pruned;
                pruned.sort();
                full.sort();
                assert_eq!(pruned, full, "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn posa_examples() {
        let r = verify_posa_theorems(5, 10, 1).unwrap();
        assert!(r.is_success(), "{r:?}");
        assert_eq!(r.graphs_examined, 34 + 10);
        let r = verify_posa_theorems(10, 200, 42).unwrap();
        assert!(r.is_success(), "{r:?}");
        assert_eq!(
            r.without_timing(),
            verify_posa_theorems(10, 200, 42).unwrap().without_timing()
        );
        assert!(verify_posa_theorems(13, 1, 0).is_err());
    }
}
