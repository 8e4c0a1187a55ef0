//! Entanglement of finite directed and undirected graphs.
//!
//! Entanglement measures how deeply the cycles of a graph are intertwined.
//! It is defined through a pursuit game: `k` cops chase a robber along the
//! edges of the graph, the cops moving onto the robber's vertex or waiting,
//! the robber fleeing to a cop-free out-neighbor. The robber loses when he
//! cannot move; he wins by escaping forever. The entanglement of a graph is
//! the least team size with a winning cop strategy.
//!
//! This crate builds the game arenas explicitly, solves them by backward
//! induction, and cross-checks the solver against an independent game-tree
//! search. On top of that sit positional strategy extraction, a strategy
//! verifier that replays strategies against every robber line, the one-step
//! minor operations, an executable transfer of winning strategies across
//! edge contraction, and obstruction-set search over exhaustively
//! enumerated small graphs.
//!
//! The crate is `no_std` (allocation only). Parsing and encoding of the
//! textual graph formats live here as well, since both are pure string
//! transforms; file and process concerns belong to the companion CLI crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arena;
pub mod canon;
pub mod entanglement;
pub mod format;
pub mod game;
pub mod graph;
pub mod oracle;
pub mod solve;
pub mod theory;
pub mod transfer;
pub mod verify;

pub use arena::{position_count, Arena};
pub use canon::{canonical_form, is_minor};
pub use entanglement::{
    entanglement, entanglement_bounded, entanglement_in_variant, extract_strategy,
    EntanglementResult, Strategy,
};
pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use game::{cops_moves, robber_moves, CopSet, GameError, Position, Turn, Variant};
pub use graph::{ContractionMap, Graph, GraphError, MinorOperation};
pub use oracle::{oracle_cops_win, oracle_entanglement};
pub use solve::{cops_win, cops_win_bounded, solve, WinningRegion};
pub use theory::{
    check_direct_minor_bound, check_minor_monotonicity, check_strategy_transfer,
    check_subgraph_lemma, check_variant_equivalence, check_vertex_deletion_bound, describe_graph,
    find_obstructions, find_obstructions_generated, ObstructionSet, TheoremId, TheoremReport,
    TheoryError,
};
pub use transfer::{transfer_strategy, TransferError, TransferFault, TransferredStrategy};
pub use verify::{
    verify_strategy, verify_strategy_with_budget, CopsPolicy, LossReason, VerificationReport,
    Verdict, VerifyError,
};
