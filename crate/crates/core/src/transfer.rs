//! Transfers a winning cop strategy across an edge contraction.
//!
//! Given a winning positional strategy for `k` cops on a graph `H` and a
//! contraction of one edge `(a,b)` of `H` into a vertex `z`, the transferred
//! strategy wins the generalized-rule game with `k` cops on the contracted
//! graph `G`. It works by simulation: it maintains a play of `H` in which
//! the cops follow the given strategy, mirrors every robber move in `G` by
//! one or two robber moves in `H`, and answers with the image of the
//! strategy's reply under the contraction's vertex map.
//!
//! The simulation keeps two invariants. At every call, the observed cop set
//! in `G` is the image of the simulated cop set in `H`. Whenever the robber
//! sits on `z`, the simulated robber sits on exactly one of `a`, `b`, that
//! endpoint holds a cop in the simulation, and the other endpoint does not;
//! this is what makes the double-step answers legal, because the image of a
//! cop on either endpoint is a cop already standing on `z`. Any violation
//! aborts the construction with an error carrying the simulation trace; the
//! verifier never sees an unsound move silently.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arena::position_count;
use crate::entanglement::Strategy;
use crate::game::CopSet;
use crate::graph::{ContractionMap, Graph, GraphError};
use crate::verify::CopsPolicy;

/// Why a transferred strategy could not produce a move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransferFault {
    InvalidContraction(GraphError),
    CopCountMismatch { strategy_k: usize, requested: usize },
    /// The host strategy has no reply at a simulated position.
    SigmaUndefined { vertex: u32, cops: CopSet },
    /// The observed cop set is not the image of the simulated one.
    CopSetImageMismatch { expected: CopSet, observed: CopSet },
    /// The merged-vertex invariant broke.
    MergedVertexInvariant(&'static str),
    /// No legal way to mirror the robber's move in the host graph.
    NoSimulatedMove(&'static str),
    /// The reply would not be a legal generalized move.
    IllegalEmission { vertex: u32, observed: CopSet, emitted: CopSet },
    /// The endpoint alternation failed to settle; the host strategy cannot
    /// be winning.
    AlternationOverflow { bound: usize },
}

impl fmt::Display for TransferFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransferFault::InvalidContraction(e) => write!(f, "invalid contraction: {e}"),
            TransferFault::CopCountMismatch {
                strategy_k,
                requested,
            } => write!(
                f,
                "strategy plays {strategy_k} cops but the transfer was asked for {requested}"
            ),
            TransferFault::SigmaUndefined { vertex, cops } => {
                write!(f, "host strategy undefined at ({vertex},{cops})")
            }
            TransferFault::CopSetImageMismatch { expected, observed } => write!(
                f,
                "observed cop set {observed} is not the image {expected} of the simulated one"
            ),
            TransferFault::MergedVertexInvariant(what) => {
                write!(f, "merged-vertex invariant violated: {what}")
            }
            TransferFault::NoSimulatedMove(what) => {
                write!(f, "robber move cannot be mirrored in the host: {what}")
            }
            TransferFault::IllegalEmission {
                vertex,
                observed,
                emitted,
            } => write!(
                f,
                "emitted {emitted} is not a legal move at ({vertex},{observed})"
            ),
            TransferFault::AlternationOverflow { bound } => {
                write!(f, "endpoint alternation did not settle within {bound} steps")
            }
        }
    }
}

/// A transfer failure, with the simulation steps that led to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferError {
    pub fault: TransferFault,
    pub trace: Vec<String>,
}

impl fmt::Display for TransferError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fault)?;
        for line in &self.trace {
            write!(f, "; {line}")?;
        }
        Ok(())
    }
}

impl core::error::Error for TransferError {}

/// The simulated host position after the strategy's reply: the host robber
/// vertex and host cop set. `None` before the first move.
pub type SimulationMemory = Option<(u32, CopSet)>;

/// A cop strategy for the contracted graph, driven by simulating the host.
/// Build one with [`transfer_strategy`]; drive it with the verifier.
#[derive(Debug, Clone)]
pub struct TransferredStrategy {
    sigma: Strategy,
    host: Graph,
    merged: u32,
    removed: u32,
    k: usize,
    step_bound: usize,
}

/// Wraps a winning `k`-cop strategy on the contraction's source into a
/// strategy for its target. Fails when the map is not a contraction of its
/// source or the cop counts disagree; simulation failures surface later,
/// from the policy's `choose`.
pub fn transfer_strategy(
    sigma: &Strategy,
    contraction: &ContractionMap,
    k: usize,
) -> Result<TransferredStrategy, TransferError> {
    let fail = |fault| TransferError {
        fault,
        trace: Vec::new(),
    };
    contraction
        .validate()
        .map_err(|e| fail(TransferFault::InvalidContraction(e)))?;
    if sigma.k() != k {
        return Err(fail(TransferFault::CopCountMismatch {
            strategy_k: sigma.k(),
            requested: k,
        }));
    }
    let (a, b) = contraction.contracted_edge;
    // Every simulated play follows the host strategy, so its length is
    // bounded by the host arena; twice that covers the double steps.
    let positions = position_count(contraction.source.vertex_count(), k).saturating_add(1);
    let step_bound = usize::try_from(2 * positions).unwrap_or(usize::MAX);
    Ok(TransferredStrategy {
        sigma: sigma.clone(),
        host: contraction.source.clone(),
        merged: a.min(b),
        removed: a.max(b),
        k,
        step_bound,
    })
}

impl TransferredStrategy {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn contracted_edge(&self) -> (u32, u32) {
        (self.merged, self.removed)
    }

    fn other_endpoint(&self, y: u32) -> u32 {
        if y == self.merged {
            self.removed
        } else {
            self.merged
        }
    }

    fn is_endpoint(&self, v: u32) -> bool {
        v == self.merged || v == self.removed
    }

    /// Image of a host cop set under the contraction's vertex map.
    fn image(&self, cops: CopSet) -> CopSet {
        cops.fold_vertex(self.removed, self.merged)
    }

    fn query(
        &self,
        vertex: u32,
        cops: CopSet,
        trace: &mut Vec<String>,
    ) -> Result<CopSet, TransferFault> {
        let reply = self
            .sigma
            .response(vertex, cops)
            .ok_or(TransferFault::SigmaUndefined { vertex, cops })?;
        trace.push(format!("sigma({vertex},{cops}) = {reply}"));
        Ok(reply)
    }

    /// The host robber stands on an endpoint of the contracted edge and
    /// bounces between the two endpoints until the strategy does something
    /// other than wait. Returns the settling vertex and the reply there.
    fn alternate(
        &self,
        start: u32,
        cops: CopSet,
        trace: &mut Vec<String>,
    ) -> Result<(u32, CopSet), TransferFault> {
        let mut at = start;
        for _ in 0..self.step_bound {
            let reply = self.query(at, cops, trace)?;
            if reply != cops {
                return Ok((at, reply));
            }
            let next = self.other_endpoint(at);
            if cops.contains(next) {
                return Err(TransferFault::NoSimulatedMove(
                    "both endpoints should be cop-free during the alternation",
                ));
            }
            trace.push(format!("host robber bounces to {next}"));
            at = next;
        }
        Err(TransferFault::AlternationOverflow {
            bound: self.step_bound,
        })
    }

    /// Wraps up a call: checks the reply is a legal generalized move at the
    /// observed position, re-checks the merged-vertex invariant when the
    /// robber is on the merged vertex, and packages memory and move.
    fn emit(
        &self,
        robber: u32,
        observed: CopSet,
        matched: (u32, CopSet),
        trace: &mut Vec<String>,
    ) -> Result<Option<(SimulationMemory, CopSet)>, TransferFault> {
        let (host_vertex, host_cops) = matched;
        let emitted = self.image(host_cops);
        if !emitted.without(robber).is_subset_of(observed) || emitted.len() > self.k {
            return Err(TransferFault::IllegalEmission {
                vertex: robber,
                observed,
                emitted,
            });
        }
        if robber == self.merged {
            if !self.is_endpoint(host_vertex) {
                return Err(TransferFault::MergedVertexInvariant(
                    "host robber is not on an endpoint",
                ));
            }
            if !host_cops.contains(host_vertex) {
                return Err(TransferFault::MergedVertexInvariant(
                    "no cop on the host robber's endpoint",
                ));
            }
            if host_cops.contains(self.other_endpoint(host_vertex)) {
                return Err(TransferFault::MergedVertexInvariant(
                    "both endpoints hold cops",
                ));
            }
            debug_assert!(emitted.contains(self.merged));
        }
        trace.push(format!(
            "reply {emitted}, matched host position ({host_vertex},{host_cops})"
        ));
        Ok(Some((Some(matched), emitted)))
    }

    /// One robber step in the host onto `target`, then the strategy's reply.
    fn step_and_query(
        &self,
        from: u32,
        target: u32,
        cops: CopSet,
        trace: &mut Vec<String>,
    ) -> Result<CopSet, TransferFault> {
        if !self.host.has_edge(from, target) {
            return Err(TransferFault::NoSimulatedMove(
                "mirrored move is not a host edge",
            ));
        }
        if cops.contains(target) {
            return Err(TransferFault::NoSimulatedMove(
                "mirrored move runs into a host cop",
            ));
        }
        trace.push(format!("host robber moves {from} -> {target}"));
        self.query(target, cops, trace)
    }

    fn decide(
        &self,
        memory: &SimulationMemory,
        robber: u32,
        observed: CopSet,
        trace: &mut Vec<String>,
    ) -> Result<Option<(SimulationMemory, CopSet)>, TransferFault> {
        trace.push(format!("observed robber on {robber} with cops {observed}"));
        let z = self.merged;

        let Some((host_vertex, host_cops)) = *memory else {
            // First move: the host robber picks his start to match.
            if !observed.is_empty() {
                return Err(TransferFault::CopSetImageMismatch {
                    expected: CopSet::EMPTY,
                    observed,
                });
            }
            return if robber == z {
                let (settled, reply) = self.alternate(z, CopSet::EMPTY, trace)?;
                self.emit(robber, observed, (settled, reply), trace)
            } else {
                let reply = self.query(robber, CopSet::EMPTY, trace)?;
                self.emit(robber, observed, (robber, reply), trace)
            };
        };

        let expected = self.image(host_cops);
        if expected != observed {
            return Err(TransferFault::CopSetImageMismatch { expected, observed });
        }
        let came_from = if self.is_endpoint(host_vertex) {
            z
        } else {
            host_vertex
        };

        if came_from != z && robber != z {
            // Outside the merged vertex the play transfers move for move.
            let reply = self.step_and_query(host_vertex, robber, host_cops, trace)?;
            return self.emit(robber, observed, (robber, reply), trace);
        }

        if robber == z {
            // Entering the merged vertex: step onto an adjacent endpoint,
            // then bounce until the strategy acts.
            let start = if self.host.has_edge(host_vertex, z) {
                z
            } else {
                self.removed
            };
            if !self.host.has_edge(host_vertex, start) {
                return Err(TransferFault::NoSimulatedMove(
                    "no endpoint of the contracted edge borders the host robber",
                ));
            }
            if host_cops.contains(self.merged) || host_cops.contains(self.removed) {
                return Err(TransferFault::NoSimulatedMove(
                    "an endpoint holds a cop although the merged vertex is free",
                ));
            }
            trace.push(format!("host robber moves {host_vertex} -> {start}"));
            let (settled, reply) = self.alternate(start, host_cops, trace)?;
            return self.emit(robber, observed, (settled, reply), trace);
        }

        // Leaving the merged vertex. The invariant guarantees a cop stands
        // on the host robber's endpoint and the other endpoint is free.
        if !host_cops.contains(host_vertex) {
            return Err(TransferFault::MergedVertexInvariant(
                "no cop on the host robber's endpoint when leaving",
            ));
        }
        if !observed.contains(z) {
            return Err(TransferFault::MergedVertexInvariant(
                "merged vertex unguarded while the robber leaves it",
            ));
        }
        if self.host.has_edge(host_vertex, robber) {
            let reply = self.step_and_query(host_vertex, robber, host_cops, trace)?;
            return self.emit(robber, observed, (robber, reply), trace);
        }
        // The exit edge exists only at the other endpoint: detour over it,
        // letting the cops answer both steps. The composed reply is legal in
        // the generalized game because the merged vertex is already guarded.
        let detour = self.other_endpoint(host_vertex);
        if host_cops.contains(detour) {
            return Err(TransferFault::MergedVertexInvariant(
                "other endpoint holds a cop when leaving",
            ));
        }
        let mid_reply = self.step_and_query(host_vertex, detour, host_cops, trace)?;
        let reply = self.step_and_query(detour, robber, mid_reply, trace)?;
        self.emit(robber, observed, (robber, reply), trace)
    }
}

impl CopsPolicy for TransferredStrategy {
    type Memory = SimulationMemory;
    type Error = TransferError;

    fn initial_memory(&self) -> SimulationMemory {
        None
    }

    fn choose(
        &self,
        memory: &SimulationMemory,
        v: u32,
        cops: CopSet,
    ) -> Result<Option<(SimulationMemory, CopSet)>, TransferError> {
        let mut trace = Vec::new();
        self.decide(memory, v, cops, &mut trace)
            .map_err(|fault| TransferError { fault, trace })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::entanglement;
    use crate::game::Variant;
    use crate::verify::verify_strategy;

    fn transfer_and_verify(h: &Graph, edge: (u32, u32)) {
        let res = entanglement(h).unwrap();
        let (g, cm) = h.contract_edge(edge.0, edge.1).unwrap();
        let transferred = transfer_strategy(&res.strategy, &cm, res.value).unwrap();
        let report = verify_strategy(&g, res.value, Variant::Generalized, &transferred)
            .unwrap_or_else(|e| panic!("verification failed: {e}"));
        assert!(report.is_win(), "{:?}", report.verdict);
    }

    #[test]
    fn k2_contracts_to_a_point() {
        let k2 = Graph::from_edges(false, 2, &[(0, 1)]).unwrap();
        transfer_and_verify(&k2, (0, 1));
    }

    #[test]
    fn path_contracts_to_an_edge() {
        let p3 = Graph::from_edges(false, 3, &[(0, 1), (1, 2)]).unwrap();
        transfer_and_verify(&p3, (0, 1));
        transfer_and_verify(&p3, (1, 2));
    }

    #[test]
    fn triangle_contracts_to_an_edge() {
        let c3 = Graph::from_edges(false, 3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        for edge in [(0, 1), (1, 2), (2, 0)] {
            transfer_and_verify(&c3, edge);
        }
    }

    #[test]
    fn square_contracts_to_a_triangle() {
        let c4 = Graph::from_edges(false, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let res = entanglement(&c4).unwrap();
        let (g, _) = c4.contract_edge(0, 1).unwrap();
        // Contracting a square edge yields a triangle, whose entanglement
        // matches the square's.
        assert_eq!(entanglement(&g).unwrap().value, res.value);
        transfer_and_verify(&c4, (0, 1));
    }

    #[test]
    fn cop_count_mismatch_is_rejected() {
        let k2 = Graph::from_edges(false, 2, &[(0, 1)]).unwrap();
        let res = entanglement(&k2).unwrap();
        let (_, cm) = k2.contract_edge(0, 1).unwrap();
        let err = transfer_strategy(&res.strategy, &cm, 2).unwrap_err();
        assert!(matches!(
            err.fault,
            TransferFault::CopCountMismatch {
                strategy_k: 1,
                requested: 2
            }
        ));
    }

    #[test]
    fn tampered_contraction_is_rejected() {
        let p3 = Graph::from_edges(false, 3, &[(0, 1), (1, 2)]).unwrap();
        let res = entanglement(&p3).unwrap();
        let (_, mut cm) = p3.contract_edge(0, 1).unwrap();
        cm.target = p3.clone();
        let err = transfer_strategy(&res.strategy, &cm, res.value).unwrap_err();
        assert!(matches!(err.fault, TransferFault::InvalidContraction(_)));
    }
}
