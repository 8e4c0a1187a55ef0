//! Mechanical checks of how entanglement behaves under subgraphs, minors,
//! rule variants, and strategy transfer, reported instance by instance, plus
//! obstruction-set search.
//!
//! Each check computes the quantities on both sides of a claimed inequality
//! or equivalence and reports them; a failing report carries a
//! counterexample description. Errors are reserved for violated
//! preconditions and resource guards, never for refuted claims.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::canon::{canonical_form, undirected_graphs_up_to};
use crate::entanglement::entanglement;
use crate::format::to_graph6;
use crate::game::{GameError, Variant};
use crate::graph::{Graph, GraphError};
use crate::solve::cops_win;
use crate::transfer::transfer_strategy;
use crate::verify::{verify_strategy, Verdict, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoryError {
    /// The first graph is not a labeled subgraph of the second.
    NotASubgraph,
    /// A brute-force size guard was exceeded.
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    Graph(GraphError),
    Game(GameError),
    /// Strategy verification could not reach a verdict.
    Verify(String),
}

impl core::fmt::Display for TheoryError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TheoryError::NotASubgraph => {
                write!(f, "the first graph is not a labeled subgraph of the second")
            }
            TheoryError::SizeLimit {
                what,
                limit,
                actual,
            } => write!(f, "{what} limited to {limit}, got {actual}"),
            TheoryError::Graph(e) => write!(f, "{e}"),
            TheoryError::Game(e) => write!(f, "{e}"),
            TheoryError::Verify(e) => write!(f, "verification inconclusive: {e}"),
        }
    }
}

impl core::error::Error for TheoryError {}

impl From<GraphError> for TheoryError {
    fn from(e: GraphError) -> TheoryError {
        TheoryError::Graph(e)
    }
}

impl From<GameError> for TheoryError {
    fn from(e: GameError) -> TheoryError {
        TheoryError::Game(e)
    }
}

/// The claim a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    SubgraphMonotonicity,
    MinorMonotonicity,
    DirectMinorBound,
    VariantEquivalence,
    StrategyTransfer,
    VertexDeletionBound,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::SubgraphMonotonicity => "subgraph_monotonicity",
            TheoremId::MinorMonotonicity => "minor_monotonicity",
            TheoremId::DirectMinorBound => "direct_minor_bound",
            TheoremId::VariantEquivalence => "variant_equivalence",
            TheoremId::StrategyTransfer => "strategy_transfer",
            TheoremId::VertexDeletionBound => "vertex_deletion_bound",
        }
    }
}

/// One checked instance of a claim.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    /// The instance the claim was checked on.
    pub instance: String,
    /// The relation that was expected to hold.
    pub expected: String,
    /// Named quantities measured while checking, in a fixed order.
    pub measured: Vec<(String, i64)>,
    pub pass: bool,
    /// Present exactly when the check failed.
    pub counterexample: Option<String>,
}

/// Compact deterministic rendering for instance strings: graph6 when
/// undirected, an explicit arc list when directed.
pub fn describe_graph(g: &Graph) -> String {
    match to_graph6(g) {
        Ok(code) => format!("g6:{code}"),
        Err(_) => {
            let arcs: Vec<String> = g.arcs().map(|(u, v)| format!("{u}>{v}")).collect();
            format!("digraph{{n={};{}}}", g.vertex_count(), arcs.join(","))
        }
    }
}

/// Entanglement never drops when passing to a labeled subgraph... or rather
/// never rises: `Ent(G) <= Ent(H)` for `G` a subgraph of `H`.
pub fn check_subgraph_lemma(g: &Graph, h: &Graph) -> Result<TheoremReport, TheoryError> {
    if !g.is_labeled_subgraph_of(h) {
        return Err(TheoryError::NotASubgraph);
    }
    let ent_sub = entanglement(g)?.value as i64;
    let ent_host = entanglement(h)?.value as i64;
    let pass = ent_sub <= ent_host;
    Ok(TheoremReport {
        theorem: TheoremId::SubgraphMonotonicity,
        instance: format!("{} inside {}", describe_graph(g), describe_graph(h)),
        expected: "ent_sub <= ent_host".to_string(),
        measured: alloc::vec![
            ("ent_sub".to_string(), ent_sub),
            ("ent_host".to_string(), ent_host),
        ],
        pass,
        counterexample: (!pass).then(|| {
            format!("subgraph has entanglement {ent_sub}, host only {ent_host}")
        }),
    })
}

/// `Ent(G) <= Ent(H)` for every one-step minor `G` of `H`. Guard: `H` has
/// at most 6 vertices.
pub fn check_minor_monotonicity(h: &Graph) -> Result<TheoremReport, TheoryError> {
    minor_sweep(h, TheoremId::MinorMonotonicity)
}

/// `Ent(H) - 1 <= Ent(G)` for every one-step minor `G` of `H`. Guard: `H`
/// has at most 6 vertices.
pub fn check_direct_minor_bound(h: &Graph) -> Result<TheoremReport, TheoryError> {
    minor_sweep(h, TheoremId::DirectMinorBound)
}

fn minor_sweep(h: &Graph, theorem: TheoremId) -> Result<TheoremReport, TheoryError> {
    if h.vertex_count() > 6 {
        return Err(TheoryError::SizeLimit {
            what: "minor sweep vertex count",
            limit: 6,
            actual: h.vertex_count(),
        });
    }
    let ent_host = entanglement(h)?.value as i64;
    let mut worst: Option<(i64, String)> = None;
    let mut count = 0i64;
    for (op, minor) in h.one_step_minors() {
        count += 1;
        let ent_minor = entanglement(&minor)?.value as i64;
        let replace = match (theorem, &worst) {
            (TheoremId::MinorMonotonicity, Some((w, _))) => ent_minor > *w,
            (_, Some((w, _))) => ent_minor < *w,
            (_, None) => true,
        };
        if replace {
            worst = Some((ent_minor, format!("{op} gives {}", describe_graph(&minor))));
        }
    }
    let (expected, pass, bound_name) = match theorem {
        TheoremId::MinorMonotonicity => (
            "ent_minor <= ent_host for every one-step minor",
            worst.as_ref().is_none_or(|(w, _)| *w <= ent_host),
            "max_ent_minor",
        ),
        _ => (
            "ent_host - 1 <= ent_minor for every one-step minor",
            worst.as_ref().is_none_or(|(w, _)| ent_host - 1 <= *w),
            "min_ent_minor",
        ),
    };
    let mut measured = alloc::vec![
        ("ent_host".to_string(), ent_host),
        ("minor_count".to_string(), count),
    ];
    if let Some((w, _)) = &worst {
        measured.push((bound_name.to_string(), *w));
    }
    Ok(TheoremReport {
        theorem,
        instance: describe_graph(h),
        expected: expected.to_string(),
        measured,
        pass,
        counterexample: (!pass).then(|| {
            let (w, which) = worst.expect("a failing sweep saw a minor");
            format!("{which} with entanglement {w}, host has {ent_host}")
        }),
    })
}

/// The two rule sets have the same winner for every `k`, reported per `k`.
pub fn check_variant_equivalence(g: &Graph) -> Result<Vec<TheoremReport>, TheoryError> {
    let mut reports = Vec::new();
    for k in 0..=g.vertex_count() {
        let standard = cops_win(g, k, Variant::Standard)?;
        let generalized = cops_win(g, k, Variant::Generalized)?;
        let pass = standard == generalized;
        reports.push(TheoremReport {
            theorem: TheoremId::VariantEquivalence,
            instance: format!("{} at k={k}", describe_graph(g)),
            expected: "same winner under both rule sets".to_string(),
            measured: alloc::vec![
                ("standard_win".to_string(), standard as i64),
                ("generalized_win".to_string(), generalized as i64),
            ],
            pass,
            counterexample: (!pass).then(|| {
                format!(
                    "standard says {standard}, generalized says {generalized}"
                )
            }),
        });
    }
    Ok(reports)
}

/// Transfers the host's winning strategy across every contractible edge and
/// verifies it wins the generalized game on the contraction, reported per
/// edge. Guard: `H` has at most 6 vertices.
pub fn check_strategy_transfer(h: &Graph) -> Result<Vec<TheoremReport>, TheoryError> {
    if h.vertex_count() > 6 {
        return Err(TheoryError::SizeLimit {
            what: "strategy transfer host vertex count",
            limit: 6,
            actual: h.vertex_count(),
        });
    }
    if h.directed() {
        return Err(TheoryError::Graph(GraphError::DirectedUnsupported(
            "strategy transfer",
        )));
    }
    let host = entanglement(h)?;
    let k = host.value;
    let mut reports = Vec::new();
    for (u, v) in h.edge_list() {
        let (g, cm) = h.contract_edge(u, v)?;
        let instance = format!(
            "{} contract ({u},{v}) -> {} at k={k}",
            describe_graph(h),
            describe_graph(&g)
        );
        let outcome: Result<(), String> = match transfer_strategy(&host.strategy, &cm, k) {
            Err(e) => Err(format!("transfer construction failed: {e}")),
            Ok(transferred) => match verify_strategy(&g, k, Variant::Generalized, &transferred) {
                Ok(report) => match report.verdict {
                    Verdict::Win => Ok(()),
                    Verdict::Loss { reason, play } => Err(format!(
                        "transferred strategy loses ({reason:?}) after {}",
                        play.iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(" -> ")
                    )),
                },
                Err(VerifyError::Policy(e)) => Err(format!("simulation failed: {e}")),
                Err(VerifyError::StateBudget { limit }) => {
                    return Err(TheoryError::Verify(format!(
                        "state budget of {limit} exceeded"
                    )))
                }
                Err(VerifyError::Game(e)) => return Err(TheoryError::Game(e)),
            },
        };
        let pass = outcome.is_ok();
        reports.push(TheoremReport {
            theorem: TheoremId::StrategyTransfer,
            instance,
            expected: "transferred strategy wins the generalized game".to_string(),
            measured: alloc::vec![
                ("cop_count".to_string(), k as i64),
                ("win".to_string(), pass as i64),
            ],
            pass,
            counterexample: outcome.err(),
        });
    }
    Ok(reports)
}

/// `Ent(H) <= Ent(H - v) + 1` for every vertex `v`. Guard: `H` has at most
/// 6 vertices.
pub fn check_vertex_deletion_bound(h: &Graph) -> Result<TheoremReport, TheoryError> {
    if h.vertex_count() > 6 {
        return Err(TheoryError::SizeLimit {
            what: "vertex deletion sweep vertex count",
            limit: 6,
            actual: h.vertex_count(),
        });
    }
    let ent_host = entanglement(h)?.value as i64;
    let mut min_after: Option<(i64, u32)> = None;
    for v in h.vertices().collect::<Vec<_>>() {
        let ent = entanglement(&h.delete_vertex(v)?)?.value as i64;
        if min_after.is_none_or(|(m, _)| ent < m) {
            min_after = Some((ent, v));
        }
    }
    let pass = min_after.is_none_or(|(m, _)| ent_host <= m + 1);
    let mut measured = alloc::vec![("ent_host".to_string(), ent_host)];
    if let Some((m, _)) = min_after {
        measured.push(("min_ent_after_deletion".to_string(), m));
    }
    Ok(TheoremReport {
        theorem: TheoremId::VertexDeletionBound,
        instance: describe_graph(h),
        expected: "ent_host <= ent_after_deletion + 1 for every vertex".to_string(),
        measured,
        pass,
        counterexample: (!pass).then(|| {
            let (m, v) = min_after.expect("a failing sweep deleted a vertex");
            format!("deleting vertex {v} drops entanglement to {m}, host has {ent_host}")
        }),
    })
}

/// The graphs of entanglement above `k` that are minimal with that property:
/// every one-step minor has entanglement at most `k`.
#[derive(Debug, Clone)]
pub struct ObstructionSet {
    pub k: usize,
    pub n_max: usize,
    /// Minimal members, sorted by vertex count then canonical code.
    pub members: Vec<Graph>,
    /// Whether `members` is exhaustive for graphs with up to `n_max`
    /// vertices.
    pub complete: bool,
    /// Whether every member has entanglement exactly `k + 1`.
    pub all_exactly_k_plus_one: bool,
    /// Isomorphic duplicates dropped from the input stream.
    pub duplicate_inputs: usize,
}

/// Filters an arbitrary stream of undirected graphs down to the minimal
/// ones with entanglement above `k`. Isomorphic duplicates are dropped.
/// `complete` is caller-asserted knowledge about the stream and is stored
/// as given.
pub fn find_obstructions<I>(
    k: usize,
    graphs: I,
    n_max: usize,
    complete: bool,
) -> Result<ObstructionSet, TheoryError>
where
    I: IntoIterator<Item = Graph>,
{
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut duplicate_inputs = 0;
    let mut members: Vec<(usize, Vec<u8>, Graph, i64)> = Vec::new();
    for g in graphs {
        if g.directed() {
            return Err(TheoryError::Graph(GraphError::DirectedUnsupported(
                "obstruction search",
            )));
        }
        let code = canonical_form(&g)?;
        if !seen.insert(code.clone()) {
            duplicate_inputs += 1;
            continue;
        }
        let ent = entanglement(&g)?.value;
        if ent <= k {
            continue;
        }
        let minimal = g
            .one_step_minors()
            .iter()
            .map(|(_, m)| entanglement(m).map(|r| r.value))
            .try_fold(true, |acc, ent| ent.map(|e| acc && e <= k))?;
        if minimal {
            members.push((g.vertex_count(), code, g, ent as i64));
        }
    }
    members.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let all_exactly_k_plus_one = members.iter().all(|&(_, _, _, ent)| ent == k as i64 + 1);
    Ok(ObstructionSet {
        k,
        n_max,
        members: members.into_iter().map(|(_, _, g, _)| g).collect(),
        complete,
        all_exactly_k_plus_one,
        duplicate_inputs,
    })
}

/// Obstructions over the exhaustive catalog of undirected graphs with up to
/// `n_max` vertices. Guard: `n_max <= 6`.
pub fn find_obstructions_generated(k: usize, n_max: usize) -> Result<ObstructionSet, TheoryError> {
    if n_max > 6 {
        return Err(TheoryError::SizeLimit {
            what: "obstruction catalog vertex count",
            limit: 6,
            actual: n_max,
        });
    }
    find_obstructions(k, undirected_graphs_up_to(n_max)?, n_max, true)
}
