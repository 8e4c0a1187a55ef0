//! A second, independent answer to "do `k` cops catch the robber": fixpoint
//! iteration over a full table of game states, for cross-checking the arena
//! solver on very small inputs. No arena, region, or rank code is shared
//! with the solver.
//!
//! The table holds one caught/not-caught bit per state `(robber vertex,
//! cop set, mover)` and starts all not-caught. Sweeps apply one induction
//! step at a time: a robber-to-move state is caught once every cop-free
//! out-neighbor leads to a caught state (in particular when there is none),
//! a cops-to-move state once some cop move does. Bits only ever flip to
//! caught, so the sweeps reach the least fixpoint. A state marked caught in
//! sweep `t` is one the cops win within `t` robber moves. A state never
//! marked offers the robber a cop-free move to another unmarked state
//! whenever he must move, while every cop move leaves the state unmarked,
//! so the robber survives forever.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::game::GameError;
use crate::graph::Graph;

const ORACLE_MAX_VERTICES: usize = 5;
const ORACLE_MAX_COPS: usize = 3;

/// Whether `k` cops catch the robber on `g`, by exhaustive tabulation.
/// Guards: at most 5 vertices and 3 cops.
pub fn oracle_cops_win(g: &Graph, k: usize) -> Result<bool, GameError> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(GameError::SizeLimit {
            what: "oracle vertex count",
            limit: ORACLE_MAX_VERTICES,
            actual: n,
        });
    }
    if k > ORACLE_MAX_COPS {
        return Err(GameError::SizeLimit {
            what: "oracle cop count",
            limit: ORACLE_MAX_COPS,
            actual: k,
        });
    }

    let ids: Vec<u32> = g.vertices().collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, w) in g.arcs() {
        let ui = ids.binary_search(&u).expect("arc endpoint is a vertex");
        let wi = ids.binary_search(&w).expect("arc endpoint is a vertex");
        adj[ui].push(wi);
    }

    // Cop sets are index masks with at most k bits.
    let masks: Vec<u32> = (0..1u32 << n)
        .filter(|m| m.count_ones() as usize <= k)
        .collect();
    let mut caught: BTreeMap<(usize, u32, bool), bool> = BTreeMap::new();
    for v in 0..n {
        for &m in &masks {
            caught.insert((v, m, true), false);
            caught.insert((v, m, false), false);
        }
    }

    // Moves: stay put; add a cop on v while below strength; lift any one
    // cop onto v.
    let cop_options = |m: u32, v: usize| {
        let mut options: Vec<u32> = vec![m];
        if (m.count_ones() as usize) < k && m >> v & 1 == 0 {
            options.push(m | 1 << v);
        }
        let mut rest = m;
        while rest != 0 {
            let x = rest.trailing_zeros();
            rest &= rest - 1;
            options.push(m & !(1 << x) | 1 << v);
        }
        options.sort_unstable();
        options.dedup();
        options
    };

    let keys: Vec<(usize, u32, bool)> = caught.keys().copied().collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(v, m, cops_turn) in &keys {
            if caught[&(v, m, cops_turn)] {
                continue;
            }
            let now = if cops_turn {
                cop_options(m, v).iter().any(|&c| caught[&(v, c, false)])
            } else {
                adj[v]
                    .iter()
                    .all(|&w| m >> w & 1 == 1 || caught[&(w, m, true)])
            };
            if now {
                caught.insert((v, m, cops_turn), true);
                changed = true;
            }
        }
    }

    // The robber picks his starting vertex, so the cops must win them all.
    Ok((0..n).all(|v| caught[&(v, 0, true)]))
}

/// The least `k <= min(n,3)` with a caught verdict, if any.
pub fn oracle_entanglement(g: &Graph) -> Result<Option<usize>, GameError> {
    for k in 0..=g.vertex_count().min(ORACLE_MAX_COPS) {
        if oracle_cops_win(g, k)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
