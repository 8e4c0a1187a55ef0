//! Named verification suites over exhaustively enumerated or randomly
//! sampled small graphs.
//!
//! Report order is fixed by the catalog order and the seed, independent of
//! the worker count: instances are dispatched in order and collected in
//! order.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use entangle_core::canon::{digraphs_up_to, undirected_graphs_up_to};
use entangle_core::{
    check_direct_minor_bound, check_minor_monotonicity, check_strategy_transfer,
    check_subgraph_lemma, check_variant_equivalence, Graph, TheoremReport, TheoryError,
};

/// How many random subgraph pairs the `lemma1` suite draws.
pub const SUBGRAPH_PAIR_COUNT: usize = 500;

/// A suite name paired with one checked instance.
pub type ReportRow = (&'static str, TheoremReport);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Rule-variant equivalence, per graph and cop count.
    Prop1,
    /// Subgraph monotonicity on random subgraph pairs.
    Lemma1,
    /// Monotonicity under one-step minors.
    Theorem2,
    /// The lower bound under one-step minors.
    Prop3,
    /// Strategy transfer across every edge contraction.
    Transfer,
    All,
}

impl Suite {
    pub const NAMES: &'static [&'static str] =
        &["prop1", "lemma1", "theorem2", "prop3", "transfer", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Lemma1 => "lemma1",
            Suite::Theorem2 => "theorem2",
            Suite::Prop3 => "prop3",
            Suite::Transfer => "transfer",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "prop1" => Ok(Suite::Prop1),
            "lemma1" => Ok(Suite::Lemma1),
            "theorem2" => Ok(Suite::Theorem2),
            "prop3" => Ok(Suite::Prop3),
            "transfer" => Ok(Suite::Transfer),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?}, expected one of {}",
                Suite::NAMES.join(", ")
            )),
        }
    }
}

/// Runs a suite over graphs with up to `n_max` vertices. The seed only
/// affects `lemma1`; every other suite is exhaustive.
pub fn run_suite(suite: Suite, n_max: usize, seed: u64) -> Result<Vec<ReportRow>, TheoryError> {
    match suite {
        Suite::Prop1 => {
            let mut graphs = undirected_graphs_up_to(n_max)?;
            graphs.extend(digraphs_up_to(n_max.min(4))?);
            flat_map_reports("prop1", &graphs, check_variant_equivalence)
        }
        Suite::Lemma1 => {
            let pairs = sample_subgraph_pairs(n_max, seed);
            let nested: Result<Vec<TheoremReport>, TheoryError> = pairs
                .par_iter()
                .map(|(sub, host)| check_subgraph_lemma(sub, host))
                .collect();
            Ok(nested?.into_iter().map(|r| ("lemma1", r)).collect())
        }
        Suite::Theorem2 => {
            let graphs = undirected_graphs_up_to(n_max)?;
            map_reports("theorem2", &graphs, check_minor_monotonicity)
        }
        Suite::Prop3 => {
            let graphs = undirected_graphs_up_to(n_max)?;
            map_reports("prop3", &graphs, check_direct_minor_bound)
        }
        Suite::Transfer => {
            let graphs = undirected_graphs_up_to(n_max)?;
            flat_map_reports("transfer", &graphs, check_strategy_transfer)
        }
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Prop1,
                Suite::Lemma1,
                Suite::Theorem2,
                Suite::Prop3,
                Suite::Transfer,
            ] {
                out.extend(run_suite(s, n_max, seed)?);
            }
            Ok(out)
        }
    }
}

fn map_reports(
    name: &'static str,
    graphs: &[Graph],
    check: impl Fn(&Graph) -> Result<TheoremReport, TheoryError> + Sync + Send,
) -> Result<Vec<ReportRow>, TheoryError> {
    let reports: Result<Vec<TheoremReport>, TheoryError> =
        graphs.par_iter().map(check).collect();
    Ok(reports?.into_iter().map(|r| (name, r)).collect())
}

fn flat_map_reports(
    name: &'static str,
    graphs: &[Graph],
    check: impl Fn(&Graph) -> Result<Vec<TheoremReport>, TheoryError> + Sync + Send,
) -> Result<Vec<ReportRow>, TheoryError> {
    let nested: Result<Vec<Vec<TheoremReport>>, TheoryError> =
        graphs.par_iter().map(check).collect();
    Ok(nested?
        .into_iter()
        .flatten()
        .map(|r| (name, r))
        .collect())
}

/// Draws host graphs and labeled subgraphs of them. The construction keeps
/// each vertex with probability 0.8 and each surviving edge with
/// probability 0.6, so the pair precondition holds by construction.
fn sample_subgraph_pairs(n_max: usize, seed: u64) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(SUBGRAPH_PAIR_COUNT);
    for _ in 0..SUBGRAPH_PAIR_COUNT {
        let n = rng.gen_range(1..=n_max.max(1)) as u32;
        let mut host = Graph::with_vertex_count(false, n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    host.add_edge(u, v).expect("fresh distinct vertices");
                }
            }
        }
        let mut sub = Graph::new(false);
        for v in host.vertices().collect::<Vec<_>>() {
            if rng.gen_bool(0.8) {
                sub.add_vertex(v);
            }
        }
        for (u, v) in host.edge_list() {
            if sub.contains_vertex(u) && sub.contains_vertex(v) && rng.gen_bool(0.6) {
                sub.add_edge(u, v).expect("both endpoints kept");
            }
        }
        pairs.push((sub, host));
    }
    pairs
}
