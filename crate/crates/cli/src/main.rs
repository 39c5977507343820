use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use flowtype::generators::{is_cubic, rng};
use flowtype::oracle::{check_principal, principal_typing_oracle, DEFAULT_ORACLE_LIMIT};
use flowtype::{
    embed_small, principal_typing_reassembled, sweep_reassembling, typing_pipeline, FlowNetwork, PlaneGraph, ReassemblingTree,
    Typing, DEFAULT_EMBED_LIMIT,
};
use log::info;
use rand::Rng;
use serde_json::{json, Value};
use thiserror::Error;

mod bench;

#[derive(Parser, Debug)]
#[command(name = "flowtype", version, about = "Principal typings of flow networks")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the principal typing of a network.
    Typing {
        /// Network JSON, or plane-graph JSON (network plus rotation).
        #[arg(long)]
        input: PathBuf,
        /// Plane-graph JSON for the same network.
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// Reassembling tree JSON; skips embedding and regularization.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Where to write engine statistics as JSON.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Compare the reassembled typing against the brute-force oracle.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
        /// Corrupt one typing entry before comparing.
        #[arg(long)]
        perturb: bool,
        /// Flows and assignments sampled by the principality check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Peel a plane graph into edge layers.
    Peel {
        /// Plane-graph JSON, or network JSON to be embedded.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
    /// Run a generated family through the engine and report scaling.
    Bench {
        /// nested-cycles, path-of-rings or random-planar.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', default_values_t = [20, 40, 80, 160])]
        sizes: Vec<usize>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] flowtype::Error),
    #[error("{0}")]
    Input(String),
}

type Result<T> = std::result::Result<T, CliError>;

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

/// A network file, with its embedding when the file carries a rotation.
fn load_network(path: &Path) -> Result<(FlowNetwork, Option<PlaneGraph>)> {
    let v = read_json(path)?;
    if v.get("rotation").is_some() {
        let pg = PlaneGraph::from_json(&v)?;
        Ok((pg.net.clone(), Some(pg)))
    } else {
        Ok((FlowNetwork::from_json(&v)?, None))
    }
}

fn load_embedding(path: &Path) -> Result<PlaneGraph> {
    Ok(PlaneGraph::from_json(&read_json(path)?)?)
}

fn load_tree(path: &Path) -> Result<ReassemblingTree> {
    Ok(ReassemblingTree::from_json(&read_json(path)?)?)
}

fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn write_to(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.into(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_typing(cli: &Cli, input: &Path, embedding: Option<&Path>, tree: Option<&Path>, stats: Option<&Path>) -> Result<ExitCode> {
    let (net, inline) = load_network(input)?;
    let pg = match embedding {
        Some(p) => Some(load_embedding(p)?),
        None => inline,
    };
    let tree = tree.map(load_tree).transpose()?;
    let start = Instant::now();
    let run = typing_pipeline(&net, pg.as_ref(), tree.as_ref(), DEFAULT_EMBED_LIMIT).map_err(|e| match e {
        flowtype::Error::NotPlanar(_) | flowtype::Error::LimitExceeded { .. } if tree.is_none() => {
            CliError::Input(format!("{e}; pass a reassembling tree with --tree or an embedding with --embedding"))
        }
        e => CliError::Core(e),
    })?;
    let elapsed = start.elapsed();
    write_to(cli.out.as_deref(), &canonical(&run.typing.to_json()))?;
    if let Some(p) = stats {
        write_to(Some(p), &canonical(&run.stats_json()))?;
    }
    let k = run.k.map_or("-".to_string(), |k| k.to_string());
    eprintln!(
        "{}: {} entries, k = {k}, δ = {}, α = {}, ops = {}, {:.3} ms",
        net.name,
        run.typing.entries.len(),
        run.stats.delta,
        run.stats.alpha,
        run.stats.ops.total() + run.stats.basis_ops.total(),
        elapsed.as_secs_f64() * 1e3
    );
    Ok(ExitCode::SUCCESS)
}

/// Reassembled typing for verification: along the given tree, through the
/// planar pipeline when possible, otherwise along a sweep tree.
fn reassembled(net: &FlowNetwork, pg: Option<&PlaneGraph>, tree: Option<&ReassemblingTree>) -> Result<Typing> {
    if tree.is_some() || pg.is_some() {
        return Ok(typing_pipeline(net, pg, tree, DEFAULT_EMBED_LIMIT)?.typing);
    }
    if net.vertex_count() <= DEFAULT_EMBED_LIMIT && embed_small(net, DEFAULT_EMBED_LIMIT)?.is_some() {
        return Ok(typing_pipeline(net, None, None, DEFAULT_EMBED_LIMIT)?.typing);
    }
    let (tree, _) = sweep_reassembling(net)?;
    Ok(principal_typing_reassembled(net, &tree)?.0)
}

fn cmd_verify(cli: &Cli, input: &Path, tree: Option<&Path>, limit: usize, perturb: bool, samples: usize) -> Result<ExitCode> {
    let (net, pg) = load_network(input)?;
    let io = net.io_edges().len();
    if io > limit {
        return Err(CliError::Input(format!(
            "refusing to verify: {} has {io} dangling edges, above the oracle limit of {limit}",
            net.name
        )));
    }
    let tree = tree.map(load_tree).transpose()?;
    let mut typing = reassembled(&net, pg.as_ref(), tree.as_ref())?;
    if perturb {
        let idx = rng(cli.seed).gen_range(0..typing.entries.len());
        typing.entries[idx].hi += 1;
        let (a, b) = typing.index.split(idx);
        info!("perturbed entry ({:?}, {:?})", typing.index.a_ids(a), typing.index.b_ids(b));
    }
    let oracle = principal_typing_oracle(&net, limit)?;
    let mut mismatches = Vec::new();
    for idx in oracle.index.canonical_order() {
        let (a, b) = oracle.index.split(idx);
        let (mine, theirs) = (typing.entries[idx], oracle.entries[idx]);
        if mine != theirs {
            mismatches.push((oracle.index.a_ids(a), oracle.index.b_ids(b), mine, theirs));
        }
    }
    let report = check_principal(&net, &typing, samples, cli.seed)?;
    let total = oracle.entries.len();
    let counterexamples = report.completeness_counterexamples.len() + report.soundness_counterexamples.len();
    let pass = mismatches.is_empty() && counterexamples == 0;
    let json = json!({
        "network": net.name,
        "status": if pass { "PASS" } else { "FAIL" },
        "entries": total,
        "equal": total - mismatches.len(),
        "mismatches": mismatches.iter().map(|(a, b, mine, theirs)| json!({
            "A": a, "B": b, "reassembled": mine.to_string(), "oracle": theirs.to_string(),
        })).collect::<Vec<_>>(),
        "completeness_checked": report.completeness_checked,
        "completeness_counterexamples": report.completeness_counterexamples.len(),
        "soundness_checked": report.soundness_checked,
        "soundness_counterexamples": report.soundness_counterexamples.len(),
    });
    write_to(cli.out.as_deref(), &canonical(&json))?;
    if pass {
        eprintln!("PASS: {total}/{total} entries equal, principality sampling clean");
        return Ok(ExitCode::SUCCESS);
    }
    for (a, b, mine, theirs) in &mismatches {
        eprintln!("FAIL: entry ({{{}}}, {{{}}}) reassembled {mine}, oracle {theirs}", a.join(","), b.join(","));
    }
    if counterexamples > 0 {
        eprintln!("FAIL: {counterexamples} principality counterexamples");
    }
    Ok(ExitCode::from(1))
}

fn cmd_peel(cli: &Cli, input: &Path, embedding: Option<&Path>) -> Result<ExitCode> {
    let (net, inline) = load_network(input)?;
    let pg = match (embedding, inline) {
        (Some(p), _) => load_embedding(p)?,
        (None, Some(pg)) => pg,
        (None, None) => embed_small(&net, DEFAULT_EMBED_LIMIT)?
            .ok_or_else(|| CliError::Input(format!("{} is not planar and has no embedding", net.name)))?,
    };
    let layers = pg.peel_edge_layers()?;
    write_to(cli.out.as_deref(), &canonical(&layers.to_json()))?;
    eprintln!("{}: k = {}", net.name, layers.k);
    if is_cubic(&pg.net) {
        let v = pg.peel_vertex_layers()?;
        let ok = v <= layers.k && layers.k <= v + 1;
        eprintln!("V-outerplanarity = {v}; {v} <= {} <= {}: {}", layers.k, v + 1, if ok { "OK" } else { "VIOLATED" });
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Typing { input, embedding, tree, stats } => cmd_typing(cli, input, embedding.as_deref(), tree.as_deref(), stats.as_deref()),
        Command::Verify { input, tree, oracle_limit, perturb, samples } => {
            cmd_verify(cli, input, tree.as_deref(), *oracle_limit, *perturb, *samples)
        }
        Command::Peel { input, embedding } => cmd_peel(cli, input, embedding.as_deref()),
        Command::Bench { family, k, sizes } => {
            let rows = bench::run(family, *k, sizes, cli.seed)?;
            write_to(cli.out.as_deref(), &bench::csv(&rows))?;
            for line in bench::scaling_report(&rows) {
                eprintln!("{line}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
