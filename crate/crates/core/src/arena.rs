//! Explicit game arenas: every position with at most `k` placed cops,
//! plus one initial node where the robber picks his starting vertex.
//!
//! Node 0 is the initial node. It is robber-owned and its successors are the
//! positions `(v, {}, cops-to-move)` for every vertex `v`. The remaining
//! nodes enumerate `(vertex, cop set, turn)` triples; indices are derived
//! from the ranks of vertex and mask in sorted order, so equal graphs build
//! identical arenas.

use alloc::vec;
use alloc::vec::Vec;

use crate::game::{cops_moves, robber_moves, CopSet, GameError, Position, Turn, Variant};
use crate::graph::Graph;

pub struct Arena {
    graph: Graph,
    k: usize,
    variant: Variant,
    vertex_ids: Vec<u32>,
    masks: Vec<u64>,
    succ: Vec<Vec<u32>>,
}

/// Number of arena nodes excluding the initial one: every `(vertex, cop
/// set, turn)` triple with at most `k` cops. Saturates on overflow.
pub fn position_count(n: usize, k: usize) -> u128 {
    let mut sum: u128 = 0;
    let mut binom: u128 = 1;
    for i in 0..=k.min(n) {
        if i > 0 {
            binom = match binom.checked_mul((n - i + 1) as u128) {
                Some(b) => b / i as u128,
                None => return u128::MAX,
            };
        }
        sum = sum.saturating_add(binom);
    }
    (2 * n as u128).saturating_mul(sum)
}

impl Arena {
    pub const INITIAL: u32 = 0;

    pub fn build(graph: &Graph, k: usize, variant: Variant) -> Result<Arena, GameError> {
        let n = graph.vertex_count();
        if k > n {
            return Err(GameError::CopCountOutOfRange { k, n });
        }
        if let Some(max) = graph.max_vertex_id() {
            if max >= 64 {
                return Err(GameError::IdTooLarge { id: max });
            }
        }

        let vertex_ids: Vec<u32> = graph.vertices().collect();
        let masks = subset_masks(&vertex_ids, k);
        let mask_count = masks.len();
        let node_count = 1 + vertex_ids.len() * mask_count * 2;

        let mut arena = Arena {
            graph: graph.clone(),
            k,
            variant,
            vertex_ids,
            masks,
            succ: Vec::with_capacity(node_count),
        };

        let initial: Vec<u32> = arena
            .vertex_ids
            .iter()
            .map(|&v| {
                arena
                    .node_of(&Position::new(v, CopSet::EMPTY, Turn::Cops))
                    .expect("empty mask is always present") as u32
            })
            .collect();
        arena.succ.push(initial);

        for node in 1..node_count {
            let pos = arena.decode(node);
            let moves = match pos.turn {
                Turn::Cops => cops_moves(&pos, k, variant),
                Turn::Robber => robber_moves(&pos, &arena.graph),
            }
            .expect("constructed position has the right turn");
            let succ: Vec<u32> = moves
                .iter()
                .map(|m| arena.node_of(m).expect("move stays within the arena") as u32)
                .collect();
            debug_assert!(succ.windows(2).all(|w| w[0] < w[1]));
            arena.succ.push(succ);
        }
        Ok(arena)
    }

    /// Like [`Arena::build`], but refuses up front when the closed-form node
    /// count exceeds `max_nodes`.
    pub fn build_bounded(
        graph: &Graph,
        k: usize,
        variant: Variant,
        max_nodes: u64,
    ) -> Result<Arena, GameError> {
        let nodes = position_count(graph.vertex_count(), k.min(graph.vertex_count()))
            .saturating_add(1);
        if nodes > max_nodes as u128 {
            return Err(GameError::ArenaTooLarge {
                nodes,
                limit: max_nodes,
            });
        }
        Arena::build(graph, k, variant)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, node: usize) -> &[u32] {
        &self.succ[node]
    }

    /// Node 0 and robber positions belong to the robber.
    pub fn owner(&self, node: usize) -> Turn {
        if node == 0 {
            Turn::Robber
        } else {
            self.decode(node).turn
        }
    }

    /// The position behind a node; `None` for the initial node.
    pub fn position(&self, node: usize) -> Option<Position> {
        if node == 0 || node >= self.node_count() {
            None
        } else {
            Some(self.decode(node))
        }
    }

    /// The node holding a position; `None` when the position is not in the
    /// arena (unknown vertex or more than `k` cops).
    pub fn node_of(&self, pos: &Position) -> Option<usize> {
        let vr = self.vertex_ids.binary_search(&pos.v).ok()?;
        let mr = self.masks.binary_search(&pos.cops.bits()).ok()?;
        let t = (pos.turn == Turn::Robber) as usize;
        Some(1 + (vr * self.masks.len() + mr) * 2 + t)
    }

    fn decode(&self, node: usize) -> Position {
        let q = node - 1;
        let turn = if q % 2 == 1 { Turn::Robber } else { Turn::Cops };
        let mr = q / 2 % self.masks.len();
        let vr = q / 2 / self.masks.len();
        Position::new(self.vertex_ids[vr], CopSet::from_bits(self.masks[mr]), turn)
    }
}

/// All masks over `ids` with at most `k` bits, sorted ascending.
fn subset_masks(ids: &[u32], k: usize) -> Vec<u64> {
    fn go(ids: &[u32], i: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if i == ids.len() {
            out.push(cur);
            return;
        }
        go(ids, i + 1, left, cur, out);
        if left > 0 {
            go(ids, i + 1, left - 1, cur | 1 << ids[i], out);
        }
    }
    let mut out = vec![];
    go(ids, 0, k, 0, &mut out);
    out.sort_unstable();
    out
}
