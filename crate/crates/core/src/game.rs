//! The pursuit game itself: positions, turn order, and move generation.
//!
//! A position is a triple of robber vertex, set of placed cops, and whose
//! turn it is. Cops move first from each position: they may leave their
//! placement unchanged or bring a cop to the robber's current vertex, either
//! as a new cop (while fewer than `k` are placed) or by lifting one already
//! on the board. The robber then moves along an edge to a cop-free
//! out-neighbor; if he cannot, he is caught. The generalized rule set lets
//! the cops additionally retire any subset of placed cops in the same move.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Errors raised by the game engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    CopCountOutOfRange { k: usize, n: usize },
    WrongTurn { expected: Turn },
    VertexNotInGraph(u32),
    /// Cop sets are 64-bit masks over raw vertex ids.
    IdTooLarge { id: u32 },
    /// The arena would exceed the node budget.
    ArenaTooLarge { nodes: u128, limit: u64 },
    /// A brute-force size guard was exceeded.
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    /// A winning region was paired with an arena it does not belong to.
    RegionMismatch,
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::CopCountOutOfRange { k, n } => {
                write!(f, "cop count {k} out of range for {n} vertices")
            }
            GameError::WrongTurn { expected } => {
                write!(f, "position is not a {expected:?} position")
            }
            GameError::VertexNotInGraph(v) => write!(f, "vertex {v} is not in the graph"),
            GameError::IdTooLarge { id } => {
                write!(f, "vertex id {id} too large for a cop mask (must be below 64)")
            }
            GameError::ArenaTooLarge { nodes, limit } => {
                write!(f, "arena would have {nodes} nodes, limit is {limit}")
            }
            GameError::SizeLimit {
                what,
                limit,
                actual,
            } => write!(f, "{what} limited to {limit}, got {actual}"),
            GameError::RegionMismatch => {
                write!(f, "winning region does not match the arena")
            }
        }
    }
}

impl core::error::Error for GameError {}

/// Whose move it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Turn {
    Cops,
    Robber,
}

/// Which cop-move rule set is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// Skip, add a cop, or relocate exactly one cop.
    Standard,
    /// Retire any subset of placed cops, optionally placing a cop on the
    /// robber in the same move.
    Generalized,
}

/// A set of occupied vertices, as a bitmask over raw vertex ids (ids < 64).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CopSet(u64);

impl CopSet {
    pub const EMPTY: CopSet = CopSet(0);

    pub fn from_bits(bits: u64) -> CopSet {
        CopSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: u32) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: u32) -> CopSet {
        assert!(v < 64, "cop mask ids must be below 64");
        CopSet(self.0 | 1 << v)
    }

    pub fn without(self, v: u32) -> CopSet {
        if v < 64 {
            CopSet(self.0 & !(1 << v))
        } else {
            self
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: CopSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Moves a possible cop from `from` onto `into`; identity when `from` is
    /// unoccupied. This is the image under a contraction's vertex map.
    pub fn fold_vertex(self, from: u32, into: u32) -> CopSet {
        if self.contains(from) {
            self.without(from).with(into)
        } else {
            self
        }
    }

    /// Occupied vertices, ascending.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    /// All subsets, in descending mask order, ending with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = CopSet> {
        let mask = self.0;
        let mut next = Some(mask);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & mask) };
            Some(CopSet(cur))
        })
    }
}

impl FromIterator<u32> for CopSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> CopSet {
        iter.into_iter().fold(CopSet::EMPTY, CopSet::with)
    }
}

impl fmt::Display for CopSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CopSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A game position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub v: u32,
    pub cops: CopSet,
    pub turn: Turn,
}

impl Position {
    pub fn new(v: u32, cops: CopSet, turn: Turn) -> Position {
        Position { v, cops, turn }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let turn = match self.turn {
            Turn::Cops => "cops",
            Turn::Robber => "robber",
        };
        write!(f, "({},{},{turn})", self.v, self.cops)
    }
}

/// Successor positions of a cops position, deduplicated as sets and sorted
/// by cop mask. The robber vertex is unchanged; the turn passes to the
/// robber.
pub fn cops_moves(pos: &Position, k: usize, variant: Variant) -> Result<Vec<Position>, GameError> {
    if pos.turn != Turn::Cops {
        return Err(GameError::WrongTurn {
            expected: Turn::Cops,
        });
    }
    let c = pos.cops;
    let v = pos.v;
    let mut results: BTreeSet<CopSet> = BTreeSet::new();
    match variant {
        Variant::Standard => {
            results.insert(c);
            if c.len() < k && !c.contains(v) {
                results.insert(c.with(v));
            }
            for x in c.iter() {
                results.insert(c.without(x).with(v));
            }
        }
        Variant::Generalized => {
            for s in c.subsets() {
                results.insert(s);
                let placed = s.with(v);
                if placed.len() <= k {
                    results.insert(placed);
                }
            }
        }
    }
    Ok(results
        .into_iter()
        .map(|cops| Position::new(v, cops, Turn::Robber))
        .collect())
}

/// Successor positions of a robber position: cop-free out-neighbors, sorted
/// by vertex. An empty result means the robber is caught.
pub fn robber_moves(pos: &Position, g: &Graph) -> Result<Vec<Position>, GameError> {
    if pos.turn != Turn::Robber {
        return Err(GameError::WrongTurn {
            expected: Turn::Robber,
        });
    }
    let neighbors = g
        .neighbors(pos.v)
        .map_err(|_| GameError::VertexNotInGraph(pos.v))?;
    Ok(neighbors
        .into_iter()
        .filter(|&w| !pos.cops.contains(w))
        .map(|w| Position::new(w, pos.cops, Turn::Cops))
        .collect())
}
