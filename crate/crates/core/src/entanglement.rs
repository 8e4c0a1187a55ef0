//! The entanglement of a graph: the least cop team size with a winning
//! strategy, found by scanning `k` upward, together with a positional cop
//! strategy extracted from the winning region.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arena::Arena;
use crate::game::{CopSet, GameError, Turn, Variant};
use crate::graph::Graph;
use crate::solve::{solve, WinningRegion};

/// A positional cop strategy: for each winning cops position, the cop set
/// to move to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    k: usize,
    choices: BTreeMap<(u32, CopSet), CopSet>,
}

impl Strategy {
    pub fn new(k: usize) -> Strategy {
        Strategy {
            k,
            choices: BTreeMap::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn insert(&mut self, v: u32, cops: CopSet, choice: CopSet) {
        self.choices.insert((v, cops), choice);
    }

    /// The prescribed cop set at the position `(v, cops, cops-to-move)`, or
    /// `None` where the strategy is undefined.
    pub fn response(&self, v: u32, cops: CopSet) -> Option<CopSet> {
        self.choices.get(&(v, cops)).copied()
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, CopSet, CopSet)> + '_ {
        self.choices.iter().map(|(&(v, c), &r)| (v, c, r))
    }
}

/// Reads a positional strategy off a solved arena: at every winning cops
/// node, move to the successor of minimal rank. Ties fall to the smallest
/// node index, so extraction is deterministic.
pub fn extract_strategy(arena: &Arena, region: &WinningRegion) -> Result<Strategy, GameError> {
    if region.node_count() != arena.node_count() {
        return Err(GameError::RegionMismatch);
    }
    let mut strategy = Strategy::new(arena.k());
    for node in 1..arena.node_count() {
        if arena.owner(node) != Turn::Cops || !region.contains(node) {
            continue;
        }
        let mut best: Option<(u32, u32)> = None;
        for &s in arena.successors(node) {
            if let Some(rank) = region.rank_of(s as usize) {
                if best.is_none_or(|(r, _)| rank < r) {
                    best = Some((rank, s));
                }
            }
        }
        let (rank, target) = best.expect("winning cops node has a winning successor");
        debug_assert!(rank < region.rank_of(node).expect("node is winning"));
        let pos = arena.position(node).expect("not the initial node");
        let chosen = arena
            .position(target as usize)
            .expect("successor is a position");
        strategy.insert(pos.v, pos.cops, chosen.cops);
    }
    Ok(strategy)
}

/// The result of an entanglement computation.
#[derive(Debug, Clone)]
pub struct EntanglementResult {
    /// The least `k` for which the cops win.
    pub value: usize,
    /// The winner for each examined `k`, in scan order ending at `value`.
    pub per_k: Vec<(usize, bool)>,
    /// A winning cop strategy for `value` cops.
    pub strategy: Strategy,
}

/// Computes the entanglement of `g` under the standard rule set.
pub fn entanglement(g: &Graph) -> Result<EntanglementResult, GameError> {
    scan(g, Variant::Standard, None)
}

/// [`entanglement`] behind an arena size guard; every arena the scan builds
/// must fit in `max_nodes` nodes.
pub fn entanglement_bounded(g: &Graph, max_nodes: u64) -> Result<EntanglementResult, GameError> {
    scan(g, Variant::Standard, Some(max_nodes))
}

/// Entanglement under a chosen rule set; the two variants agree on the
/// value, but the extracted strategies differ.
pub fn entanglement_in_variant(
    g: &Graph,
    variant: Variant,
    max_nodes: Option<u64>,
) -> Result<EntanglementResult, GameError> {
    scan(g, variant, max_nodes)
}

fn scan(
    g: &Graph,
    variant: Variant,
    max_nodes: Option<u64>,
) -> Result<EntanglementResult, GameError> {
    let n = g.vertex_count();
    let mut per_k = Vec::new();
    for k in 0..=n {
        let arena = match max_nodes {
            Some(limit) => Arena::build_bounded(g, k, variant, limit)?,
            None => Arena::build(g, k, variant)?,
        };
        let region = solve(&arena);
        let win = region.contains(Arena::INITIAL as usize);
        per_k.push((k, win));
        if win {
            return Ok(EntanglementResult {
                value: k,
                per_k,
                strategy: extract_strategy(&arena, &region)?,
            });
        }
    }
    panic!("a cop on every vertex catches the robber; the solver is inconsistent");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_cops_win;
    use alloc::vec;

    fn cs(vs: &[u32]) -> CopSet {
        vs.iter().copied().collect()
    }

    fn c3() -> Graph {
        Graph::from_edges(false, 3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn boundary_values() {
        let single = Graph::with_vertex_count(false, 1);
        assert_eq!(entanglement(&single).unwrap().value, 0);

        let k2 = Graph::from_edges(false, 2, &[(0, 1)]).unwrap();
        let res = entanglement(&k2).unwrap();
        assert_eq!(res.value, 1);
        assert_eq!(res.per_k, vec![(0, false), (1, true)]);

        assert_eq!(entanglement(&c3()).unwrap().value, 2);

        let edgeless = Graph::with_vertex_count(false, 5);
        assert_eq!(entanglement(&edgeless).unwrap().value, 0);

        assert_eq!(entanglement(&Graph::new(false)).unwrap().value, 0);
    }

    #[test]
    fn values_agree_with_oracle() {
        for g in [
            Graph::with_vertex_count(false, 1),
            Graph::from_edges(false, 2, &[(0, 1)]).unwrap(),
            c3(),
            Graph::from_edges(true, 3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
            Graph::from_edges(false, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        ] {
            let value = entanglement(&g).unwrap().value;
            assert!(oracle_cops_win(&g, value).unwrap());
            if value > 0 {
                assert!(!oracle_cops_win(&g, value - 1).unwrap());
            }
        }
    }

    #[test]
    fn extracted_choice_on_k2() {
        // At (1,{0},cops) staying put wins at once, so the minimal rank
        // picks the skip.
        let k2 = Graph::from_edges(false, 2, &[(0, 1)]).unwrap();
        let res = entanglement(&k2).unwrap();
        assert_eq!(res.strategy.response(1, cs(&[0])), Some(cs(&[0])));
        assert_eq!(res.strategy.response(0, cs(&[1])), Some(cs(&[1])));
    }

    #[test]
    fn extracted_choice_on_triangle() {
        // At (1,{0},cops) adding the second cop is the fastest win.
        let res = entanglement(&c3()).unwrap();
        assert_eq!(res.strategy.response(1, cs(&[0])), Some(cs(&[0, 1])));
    }

    #[test]
    fn strategy_covers_reachable_winning_positions() {
        let res = entanglement(&c3()).unwrap();
        assert_eq!(res.strategy.k(), 2);
        for v in 0..3 {
            assert!(res.strategy.response(v, CopSet::EMPTY).is_some());
        }
    }

    #[test]
    fn bounded_scan_respects_limit() {
        assert!(matches!(
            entanglement_bounded(&c3(), 10),
            Err(GameError::ArenaTooLarge { .. })
        ));
        assert_eq!(entanglement_bounded(&c3(), 100).unwrap().value, 2);
    }

    #[test]
    fn generalized_variant_same_value() {
        let res = entanglement_in_variant(&c3(), Variant::Generalized, None).unwrap();
        assert_eq!(res.value, 2);
    }
}
