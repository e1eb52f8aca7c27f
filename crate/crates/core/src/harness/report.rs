use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Ore,
    Erdos,
    Stability,
    Posa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Success,
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub params: Params,
    pub graphs_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_edges_found: Option<usize>,
    pub extremal_graph6: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
    pub status: Status,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(theorem: Theorem, params: Params) -> Self {
        VerificationReport {
            theorem,
            params,
            graphs_examined: 0,
            max_edges_found: None,
            extremal_graph6: Vec::new(),
            counterexamples: Vec::new(),
            status: Status::Success,
            wall_time_ms: 0,
        }
    }

    pub(crate) fn fail(&mut self, g: &Graph, reason: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            graph6: g.to_graph6(),
            reason: reason.into(),
        });
    }

    pub(crate) fn set_extremal<'a>(&mut self, graphs: impl IntoIterator<Item = &'a Graph>) {
        self.extremal_graph6 = graphs.into_iter().map(Graph::to_graph6).collect();
    }

    /// Sorts the lists and derives the status from the counterexamples.
    pub(crate) fn finish(mut self, elapsed: Duration) -> Self {
        self.extremal_graph6.sort();
        self.extremal_graph6.dedup();
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.status = if self.counterexamples.is_empty() {
            Status::Success
        } else {
            Status::Failure
        };
        self.wall_time_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn is_success(&self) -> bool {
        self.status == Status::Success
    }

    /// The report with its timing zeroed; everything else is a function of
    /// the operation and its parameters.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}
