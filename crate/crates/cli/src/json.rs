//! Serializable views of the core results. Field order is fixed by the
//! struct declarations and map keys are sorted, so equal inputs print
//! byte-identical JSON.

use std::collections::BTreeMap;

use serde::Serialize;

use entangle_core::{to_graph6, EntanglementResult, Graph, ObstructionSet, TheoremReport};

#[derive(Serialize)]
pub struct PerKJson {
    pub k: usize,
    pub win: bool,
}

#[derive(Serialize)]
pub struct ComputeJson {
    pub n: usize,
    pub directed: bool,
    pub entanglement: usize,
    pub per_k: Vec<PerKJson>,
}

impl ComputeJson {
    pub fn new(g: &Graph, res: &EntanglementResult) -> ComputeJson {
        ComputeJson {
            n: g.vertex_count(),
            directed: g.directed(),
            entanglement: res.value,
            per_k: res
                .per_k
                .iter()
                .map(|&(k, win)| PerKJson { k, win })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ReportJson {
    pub suite: String,
    pub theorem: &'static str,
    pub instance: String,
    pub expected: String,
    pub measured: BTreeMap<String, i64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl ReportJson {
    pub fn new(suite: &str, report: &TheoremReport) -> ReportJson {
        ReportJson {
            suite: suite.to_string(),
            theorem: report.theorem.as_str(),
            instance: report.instance.clone(),
            expected: report.expected.clone(),
            measured: report.measured.iter().cloned().collect(),
            pass: report.pass,
            counterexample: report.counterexample.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ObstructionManifestJson {
    pub k: usize,
    pub n_max: usize,
    pub count: usize,
    pub complete: bool,
    pub all_exactly_k_plus_1: bool,
    pub duplicate_inputs: usize,
    /// Members in graph6, sorted by vertex count then canonical code.
    pub members: Vec<String>,
}

impl ObstructionManifestJson {
    pub fn new(set: &ObstructionSet) -> ObstructionManifestJson {
        ObstructionManifestJson {
            k: set.k,
            n_max: set.n_max,
            count: set.members.len(),
            complete: set.complete,
            all_exactly_k_plus_1: set.all_exactly_k_plus_one,
            duplicate_inputs: set.duplicate_inputs,
            members: set
                .members
                .iter()
                .map(|g| to_graph6(g).expect("obstruction members are small and undirected"))
                .collect(),
        }
    }
}
