//! Replays a cop strategy against every robber line and checks that all
//! plays are finite.
//!
//! The verifier explores the part of the arena the strategy allows: at cops
//! nodes it takes exactly the prescribed move, at robber nodes every move.
//! Strategies may carry memory, so exploration runs over (node, memory)
//! states. A play that revisits such a state can be pumped forever and is a
//! loss, as is any position where the strategy is undefined or prescribes an
//! illegal move. The verdict is a win only when every reachable play ends
//! in the robber's capture.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::convert::Infallible;
use core::fmt;

use crate::arena::Arena;
use crate::game::{CopSet, GameError, Position, Turn, Variant};
use crate::graph::Graph;
use crate::entanglement::Strategy;

/// A cop strategy the verifier can drive: possibly with memory, possibly
/// partial, possibly failing outright while deciding.
pub trait CopsPolicy {
    type Memory: Clone + Ord;
    type Error;

    fn initial_memory(&self) -> Self::Memory;

    /// The move at the cops position `(v, cops)`: the successor memory and
    /// the cop set to move to. `Ok(None)` means the strategy is undefined
    /// here; `Err` aborts verification with the policy's own error.
    fn choose(
        &self,
        memory: &Self::Memory,
        v: u32,
        cops: CopSet,
    ) -> Result<Option<(Self::Memory, CopSet)>, Self::Error>;
}

/// Positional strategies make a memoryless, infallible policy.
impl CopsPolicy for Strategy {
    type Memory = ();
    type Error = Infallible;

    fn initial_memory(&self) {}

    fn choose(
        &self,
        _memory: &(),
        v: u32,
        cops: CopSet,
    ) -> Result<Option<((), CopSet)>, Infallible> {
        Ok(self.response(v, cops).map(|c| ((), c)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossReason {
    /// A (position, memory) state repeated; the robber pumps the loop.
    Cycle,
    /// The strategy has no move at a reachable cops position.
    UndefinedChoice,
    /// The strategy prescribed a cop set that is not a legal move.
    IllegalChoice,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Win,
    Loss {
        reason: LossReason,
        /// The offending play, ending at the repeated or undecidable
        /// position.
        play: Vec<Position>,
    },
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub verdict: Verdict,
    /// Distinct (node, memory) states explored.
    pub explored_states: usize,
}

impl VerificationReport {
    pub fn is_win(&self) -> bool {
        matches!(self.verdict, Verdict::Win)
    }
}

#[derive(Debug)]
pub enum VerifyError<E> {
    /// Exploration exceeded the state budget; the verdict is unknown.
    StateBudget { limit: usize },
    /// The policy itself failed.
    Policy(E),
    Game(GameError),
}

impl<E: fmt::Display> fmt::Display for VerifyError<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::StateBudget { limit } => {
                write!(f, "verification exceeded the budget of {limit} states")
            }
            VerifyError::Policy(e) => write!(f, "policy failed: {e}"),
            VerifyError::Game(e) => write!(f, "{e}"),
        }
    }
}

impl<E: fmt::Display + fmt::Debug> core::error::Error for VerifyError<E> {}

pub const DEFAULT_STATE_BUDGET: usize = 1 << 20;

/// Verifies `policy` for `k` cops on `g` under the default state budget.
pub fn verify_strategy<P: CopsPolicy>(
    g: &Graph,
    k: usize,
    variant: Variant,
    policy: &P,
) -> Result<VerificationReport, VerifyError<P::Error>> {
    verify_strategy_with_budget(g, k, variant, policy, DEFAULT_STATE_BUDGET)
}

pub fn verify_strategy_with_budget<P: CopsPolicy>(
    g: &Graph,
    k: usize,
    variant: Variant,
    policy: &P,
    max_states: usize,
) -> Result<VerificationReport, VerifyError<P::Error>> {
    let arena = Arena::build(g, k, variant).map_err(VerifyError::Game)?;

    #[derive(Clone, Copy, PartialEq, Eq)]
    enum Color {
        OnPath,
        Done,
    }
    struct Frame<M> {
        node: u32,
        memory: M,
        children: Vec<(u32, M)>,
        cursor: usize,
    }

    let mut colors: BTreeMap<(u32, P::Memory), Color> = BTreeMap::new();
    let mut stack: Vec<Frame<P::Memory>> = Vec::new();
    let mut explored = 0usize;

    let play_of = |stack: &[Frame<P::Memory>], tail: Option<Position>| -> Vec<Position> {
        stack
            .iter()
            .filter_map(|f| arena.position(f.node as usize))
            .chain(tail)
            .collect()
    };

    // Expands a state into the children the strategy permits, or reports the
    // loss found at the state itself.
    let expand = |node: u32,
                  memory: &P::Memory|
     -> Result<Result<Vec<(u32, P::Memory)>, LossReason>, VerifyError<P::Error>> {
        if arena.owner(node as usize) != Turn::Cops {
            return Ok(Ok(arena
                .successors(node as usize)
                .iter()
                .map(|&s| (s, memory.clone()))
                .collect()));
        }
        let pos = arena.position(node as usize).expect("cops nodes are positions");
        let Some((next_memory, cops)) = policy
            .choose(memory, pos.v, pos.cops)
            .map_err(VerifyError::Policy)?
        else {
            return Ok(Err(LossReason::UndefinedChoice));
        };
        let target = Position::new(pos.v, cops, Turn::Robber);
        let legal = arena.node_of(&target).is_some_and(|t| {
            arena
                .successors(node as usize)
                .binary_search(&(t as u32))
                .is_ok()
        });
        if !legal {
            return Ok(Err(LossReason::IllegalChoice));
        }
        let t = arena.node_of(&target).expect("checked above") as u32;
        Ok(Ok(alloc::vec![(t, next_memory)]))
    };

    let visit = |node: u32,
                     memory: P::Memory,
                     stack: &mut Vec<Frame<P::Memory>>,
                     colors: &mut BTreeMap<(u32, P::Memory), Color>,
                     explored: &mut usize|
     -> Result<Option<Verdict>, VerifyError<P::Error>> {
        match colors.get(&(node, memory.clone())) {
            Some(Color::Done) => return Ok(None),
            Some(Color::OnPath) => {
                let repeat = arena.position(node as usize);
                return Ok(Some(Verdict::Loss {
                    reason: LossReason::Cycle,
                    play: play_of(stack, repeat),
                }));
            }
            None => {}
        }
        *explored += 1;
        if *explored > max_states {
            return Err(VerifyError::StateBudget { limit: max_states });
        }
        match expand(node, &memory)? {
            Err(reason) => Ok(Some(Verdict::Loss {
                reason,
                play: play_of(stack, arena.position(node as usize)),
            })),
            Ok(children) => {
                colors.insert((node, memory.clone()), Color::OnPath);
                stack.push(Frame {
                    node,
                    memory,
                    children,
                    cursor: 0,
                });
                Ok(None)
            }
        }
    };

    if let Some(verdict) = visit(
        Arena::INITIAL,
        policy.initial_memory(),
        &mut stack,
        &mut colors,
        &mut explored,
    )? {
        return Ok(VerificationReport {
            verdict,
            explored_states: explored,
        });
    }

    while let Some(top) = stack.last_mut() {
        if top.cursor < top.children.len() {
            let (child, memory) = top.children[top.cursor].clone();
            top.cursor += 1;
            if let Some(verdict) = visit(child, memory, &mut stack, &mut colors, &mut explored)? {
                return Ok(VerificationReport {
                    verdict,
                    explored_states: explored,
                });
            }
        } else {
            let done = stack.pop().expect("stack is nonempty");
            colors.insert((done.node, done.memory), Color::Done);
        }
    }

    Ok(VerificationReport {
        verdict: Verdict::Win,
        explored_states: explored,
    })
}
