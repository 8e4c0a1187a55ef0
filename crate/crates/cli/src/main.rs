//! Command line front end: entanglement computation, verification suites,
//! and obstruction search.
//!
//! Exit codes are stable across commands: 0 success or all checks pass,
//! 1 a check failed, 2 usage or parse error, 3 a resource guard refused
//! the request.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use entangle_cli::json::{ComputeJson, ObstructionManifestJson, ReportJson};
use entangle_cli::suites::{run_suite, Suite};
use entangle_core::{
    entanglement_in_variant, find_obstructions, find_obstructions_generated, parse_edge_list,
    parse_graph6, GameError, Graph, GraphError, TheoryError, Variant,
};

/// Arena-size guard for direct computation, overridable through
/// ENTANGLE_MAX_NODES.
const DEFAULT_MAX_NODES: u64 = 5_000_000;

/// Hard ceiling for the exhaustive suite universes.
const SUITE_MAX_N: usize = 6;

#[derive(Parser)]
#[command(
    name = "entangle",
    version,
    about = "Compute graph entanglement, verify its structure theory on small graphs, \
             and search for minimal obstructions"
)]
struct Cli {
    /// Output format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutputKind::Json)]
    output: OutputKind,

    /// Worker threads for the suites; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the entanglement of one graph.
    Compute {
        /// Inline edge list, e.g. "0 1, 1 2" or newline separated.
        #[arg(long, conflicts_with_all = ["graph6", "input"])]
        edges: Option<String>,

        /// Inline graph6 code.
        #[arg(long, conflicts_with = "input")]
        graph6: Option<String>,

        /// Input file.
        #[arg(long)]
        input: Option<PathBuf>,

        /// How to read --input.
        #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
        format: InputFormat,

        /// Rule set to solve under.
        #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
        variant: VariantArg,
    },

    /// Run a verification suite and stream one JSON report per line.
    Verify {
        /// One of: prop1, lemma1, theorem2, prop3, transfer, all.
        #[arg(long)]
        suite: String,

        /// Largest vertex count in the suite universe (at most 6).
        #[arg(long, default_value_t = 5)]
        nmax: usize,

        /// Seed for the randomized subgraph pairs; exhaustive suites
        /// ignore it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Find the minimal graphs whose entanglement exceeds k.
    Obstructions {
        #[arg(long)]
        k: usize,

        /// Generate all undirected graphs with up to this many vertices
        /// (at most 6).
        #[arg(long, conflicts_with = "input")]
        nmax: Option<usize>,

        /// graph6 file with one candidate per line.
        #[arg(long)]
        input: Option<PathBuf>,

        /// Also write the members as graph6 lines to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Standard,
    Generalized,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Generalized => Variant::Generalized,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn guard(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn graph_error_code(e: &GraphError) -> u8 {
    match e {
        GraphError::TooLarge { .. } => 3,
        _ => 2,
    }
}

fn game_error_code(e: &GameError) -> u8 {
    match e {
        GameError::ArenaTooLarge { .. } | GameError::SizeLimit { .. } | GameError::IdTooLarge { .. } => 3,
        _ => 2,
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        Failure {
            code: graph_error_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Failure {
        Failure {
            code: game_error_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<TheoryError> for Failure {
    fn from(e: TheoryError) -> Failure {
        let code = match &e {
            TheoryError::SizeLimit { .. } => 3,
            TheoryError::Graph(g) => graph_error_code(g),
            TheoryError::Game(g) => game_error_code(g),
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignored if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Compute {
            edges,
            graph6,
            input,
            format,
            variant,
        } => cmd_compute(cli.output, edges, graph6, input, format, variant),
        Command::Verify { suite, nmax, seed } => cmd_verify(cli.output, &suite, nmax, seed),
        Command::Obstructions {
            k,
            nmax,
            input,
            out,
        } => cmd_obstructions(cli.output, k, nmax, input, out),
    }
}

fn max_nodes_from_env() -> Result<u64, Failure> {
    match std::env::var("ENTANGLE_MAX_NODES") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("ENTANGLE_MAX_NODES is not a number: {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_NODES),
        Err(e) => Err(Failure::usage(format!("ENTANGLE_MAX_NODES: {e}"))),
    }
}

fn load_graph(
    edges: Option<String>,
    graph6: Option<String>,
    input: Option<PathBuf>,
    format: InputFormat,
) -> Result<Graph, Failure> {
    match (edges, graph6, input) {
        (Some(text), None, None) => {
            // Commas separate edges inline so a whole list fits one shell
            // word.
            let text = text.replace(',', "\n");
            Ok(parse_edge_list(&text)?)
        }
        (None, Some(code), None) => Ok(parse_graph6(code.trim())?),
        (None, None, Some(path)) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            match format {
                InputFormat::Edgelist => Ok(parse_edge_list(&text)?),
                InputFormat::Graph6 => {
                    let line = text
                        .lines()
                        .map(str::trim)
                        .find(|l| !l.is_empty() && !l.starts_with('#'))
                        .ok_or_else(|| Failure::usage("no graph6 line in input"))?;
                    Ok(parse_graph6(line)?)
                }
            }
        }
        (None, None, None) => Err(Failure::usage(
            "provide a graph via --edges, --graph6, or --input",
        )),
        _ => Err(Failure::usage(
            "provide exactly one of --edges, --graph6, --input",
        )),
    }
}

fn cmd_compute(
    output: OutputKind,
    edges: Option<String>,
    graph6: Option<String>,
    input: Option<PathBuf>,
    format: InputFormat,
    variant: VariantArg,
) -> Result<u8, Failure> {
    let g = load_graph(edges, graph6, input, format)?;
    let max_nodes = max_nodes_from_env()?;
    let res = entanglement_in_variant(&g, variant.into(), Some(max_nodes))?;
    match output {
        OutputKind::Json => {
            let line = serde_json::to_string(&ComputeJson::new(&g, &res))
                .expect("result serialization is infallible");
            println!("{line}");
        }
        OutputKind::Text => {
            println!("n {}", g.vertex_count());
            println!("directed {}", g.directed());
            println!("entanglement {}", res.value);
            for (k, win) in &res.per_k {
                println!("k {k} {}", if *win { "win" } else { "lose" });
            }
        }
    }
    Ok(0)
}

fn cmd_verify(output: OutputKind, suite: &str, nmax: usize, seed: u64) -> Result<u8, Failure> {
    let suite: Suite = suite.parse().map_err(Failure::usage)?;
    if nmax > SUITE_MAX_N {
        return Err(Failure::guard(format!(
            "suite universe limited to {SUITE_MAX_N} vertices, got {nmax}"
        )));
    }
    let rows = run_suite(suite, nmax, seed)?;
    let mut failures = 0usize;
    for (name, report) in &rows {
        if !report.pass {
            failures += 1;
        }
        match output {
            OutputKind::Json => {
                let line = serde_json::to_string(&ReportJson::new(name, report))
                    .expect("report serialization is infallible");
                println!("{line}");
            }
            OutputKind::Text => {
                let status = if report.pass { "pass" } else { "FAIL" };
                println!("{status} {} {}", report.theorem.as_str(), report.instance);
            }
        }
    }
    eprintln!(
        "{}: {} reports, {failures} failures",
        suite.name(),
        rows.len()
    );
    Ok(if failures == 0 { 0 } else { 1 })
}

fn cmd_obstructions(
    output: OutputKind,
    k: usize,
    nmax: Option<usize>,
    input: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let set = match (nmax, input) {
        (Some(nmax), None) => find_obstructions_generated(k, nmax)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            let mut graphs = Vec::new();
            for line in text.lines().map(str::trim) {
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                graphs.push(parse_graph6(line)?);
            }
            let n_max = graphs.iter().map(Graph::vertex_count).max().unwrap_or(0);
            find_obstructions(k, graphs, n_max, false)?
        }
        _ => {
            return Err(Failure::usage(
                "provide exactly one of --nmax (generate) or --input (graph6 file)",
            ))
        }
    };
    if set.duplicate_inputs > 0 {
        eprintln!(
            "warning: dropped {} isomorphic duplicate input graphs",
            set.duplicate_inputs
        );
    }
    let manifest = ObstructionManifestJson::new(&set);
    if let Some(path) = out {
        let mut text = manifest.members.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        fs::write(&path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    match output {
        OutputKind::Json => {
            let line =
                serde_json::to_string(&manifest).expect("manifest serialization is infallible");
            println!("{line}");
        }
        OutputKind::Text => {
            println!("k {}", manifest.k);
            println!("n_max {}", manifest.n_max);
            println!("count {}", manifest.count);
            println!("complete {}", manifest.complete);
            println!("all_exactly_k_plus_1 {}", manifest.all_exactly_k_plus_1);
            for m in &manifest.members {
                println!("member {m}");
            }
        }
    }
    Ok(if manifest.all_exactly_k_plus_1 { 0 } else { 1 })
}
