//! Backward induction over an arena: the set of nodes from which the cops
//! force the play into a dead end for the robber.
//!
//! A robber node with no successors is won outright. A cops node is won when
//! some successor is; a robber node with successors is won when all of them
//! are. The rank of a node is the induction stage that added it, so every
//! winning cops node has a successor of strictly smaller rank and following
//! minimal ranks terminates the play.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::arena::Arena;
use crate::game::{GameError, Turn, Variant};
use crate::graph::Graph;

pub struct WinningRegion {
    in_region: Vec<bool>,
    rank: Vec<u32>,
}

impl WinningRegion {
    pub fn contains(&self, node: usize) -> bool {
        self.in_region[node]
    }

    /// Induction stage of a winning node; `None` outside the region.
    pub fn rank_of(&self, node: usize) -> Option<u32> {
        self.in_region[node].then(|| self.rank[node])
    }

    pub fn node_count(&self) -> usize {
        self.in_region.len()
    }

    pub fn member_count(&self) -> usize {
        self.in_region.iter().filter(|&&b| b).count()
    }
}

pub fn solve(arena: &Arena) -> WinningRegion {
    let n = arena.node_count();

    let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
    for node in 0..n {
        for &s in arena.successors(node) {
            preds[s as usize].push(node as u32);
        }
    }

    // Robber nodes join once every successor has joined; the counter tracks
    // how many are still missing.
    let mut pending: Vec<u32> = (0..n).map(|u| arena.successors(u).len() as u32).collect();
    let mut region = WinningRegion {
        in_region: vec![false; n],
        rank: vec![u32::MAX; n],
    };
    let mut queue: VecDeque<u32> = VecDeque::new();

    for node in 0..n {
        if arena.owner(node) == Turn::Robber && arena.successors(node).is_empty() {
            region.in_region[node] = true;
            region.rank[node] = 0;
            queue.push_back(node as u32);
        }
    }

    while let Some(node) = queue.pop_front() {
        let stage = region.rank[node as usize] + 1;
        for &p in &preds[node as usize] {
            let p = p as usize;
            if region.in_region[p] {
                continue;
            }
            let joins = match arena.owner(p) {
                Turn::Cops => true,
                Turn::Robber => {
                    pending[p] -= 1;
                    pending[p] == 0
                }
            };
            if joins {
                region.in_region[p] = true;
                region.rank[p] = stage;
                queue.push_back(p as u32);
            }
        }
    }
    region
}

/// Whether `k` cops catch the robber on `g`: the initial arena node is in
/// the winning region.
pub fn cops_win(g: &Graph, k: usize, variant: Variant) -> Result<bool, GameError> {
    let arena = Arena::build(g, k, variant)?;
    Ok(solve(&arena).contains(Arena::INITIAL as usize))
}

/// [`cops_win`] behind an arena size guard.
pub fn cops_win_bounded(
    g: &Graph,
    k: usize,
    variant: Variant,
    max_nodes: u64,
) -> Result<bool, GameError> {
    let arena = Arena::build_bounded(g, k, variant, max_nodes)?;
    Ok(solve(&arena).contains(Arena::INITIAL as usize))
}
