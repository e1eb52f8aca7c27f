//! `nonham`: formulas, constructions, checks, saturation, certification and
//! verification runs over graph6 input.
//!
//! Exit codes: 0 success, 1 counterexample found by `verify`, 2 usage or
//! input error, 3 violated precondition.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nonham::certify::{certify_stability, Embedding, StabilityCertificate};
use nonham::constructions::{build_h, build_hprime, build_k_minus_clique};
use nonham::formulas::bound_table;
use nonham::graph6::decode_graph6;
use nonham::hamilton::is_hamiltonian;
use nonham::harness::{
    verify_erdos, verify_ore, verify_posa_theorems, verify_stability, VerificationReport,
};
use nonham::posa::posa_witness_max;
use nonham::saturation::{check_ore_property, is_saturated, saturate, SaturationError};
use nonham::{Graph, VertexSet};

const USAGE: u8 = 2;
const PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nonham",
    version,
    about = "Extremal nonhamiltonian graphs: bounds, checks and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print h, e and h' for every admissible d.
    Formulas {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the graph6 of an extremal construction.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run checks on every graph6 line of the input (all checks if none is selected).
    Check {
        #[arg(long = "in", value_name = "FILE|-")]
        input: PathBuf,
        #[arg(long)]
        ham: bool,
        #[arg(long)]
        saturated: bool,
        #[arg(long)]
        posa: bool,
        #[arg(long)]
        two_connected: bool,
        #[arg(long)]
        ore_property: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the graph6 of the deterministic saturated supergraph.
    Saturate {
        #[arg(long = "in", value_name = "FILE|-")]
        input: PathBuf,
        /// Write the graph6 line here instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Embed a qualifying nonhamiltonian graph into H_{n,d} or H'_{n,d}.
    Certify {
        #[arg(long)]
        d: usize,
        #[arg(long = "in", value_name = "FILE|-")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive or randomized verification run.
    Verify {
        #[arg(value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Report a wall time of zero so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    H,
    Hprime,
    Kminus,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Ore,
    Erdos,
    Stability,
    Posa,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        code: PRECONDITION,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Formulas { n, json } => formulas(n, json),
        Command::Construct { family, n, d, json } => construct(family, n, d, json),
        Command::Check {
            input,
            ham,
            saturated,
            posa,
            two_connected,
            ore_property,
            json,
        } => {
            let mut checks = Checks {
                ham,
                saturated,
                posa,
                two_connected,
                ore_property,
            };
            if !(ham || saturated || posa || two_connected || ore_property) {
                checks = Checks {
                    ham: true,
                    saturated: true,
                    posa: true,
                    two_connected: true,
                    ore_property: true,
                };
            }
            check(&read_graphs(&input)?, checks, json)
        }
        Command::Saturate { input, out, json } => {
            saturate_cmd(&read_one(&input)?, out.as_ref(), json)
        }
        Command::Certify { d, input, json } => certify(&read_one(&input)?, d, json),
        Command::Verify {
            theorem,
            n,
            d,
            trials,
            seed,
            json,
            no_timing,
        } => verify(theorem, n, d, trials, seed, json, no_timing),
    }
}

fn read_graphs(path: &PathBuf) -> Result<Vec<Graph>, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))?
    };
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, line)| {
            decode_graph6(line.as_bytes()).map_err(|e| usage(format!("line {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(usage("no graph6 input"));
    }
    Ok(graphs)
}

fn read_one(path: &PathBuf) -> Result<Graph, Failure> {
    let mut graphs = read_graphs(path)?;
    if graphs.len() != 1 {
        return Err(usage(format!("expected one graph, got {}", graphs.len())));
    }
    Ok(graphs.remove(0))
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn join(s: VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn formulas(n: u64, json: bool) -> Outcome {
    let table = bound_table(n).map_err(|e| precondition(e.to_string()))?;
    if json {
        print_json(&serde_json::to_value(&table).expect("serializable"));
        return Ok(0);
    }
    println!("n {} d0 {}", table.n, table.d0);
    println!("d\th\te\thprime\tqualifies");
    for r in &table.rows {
        println!("{}\t{}\t{}\t{}\t{}", r.d, r.h, r.e, r.hprime, r.qualifies);
    }
    Ok(0)
}

fn construct(family: FamilyArg, n: usize, d: Option<usize>, json: bool) -> Outcome {
    let built = match (family, d) {
        (FamilyArg::H, Some(d)) => build_h(n, d),
        (FamilyArg::Hprime, Some(d)) => build_hprime(n, d),
        (FamilyArg::Kminus, None) => build_k_minus_clique(n),
        (FamilyArg::Kminus, Some(_)) => return Err(usage("--d does not apply to kminus")),
        (_, None) => return Err(usage("--d is required for h and hprime")),
    }
    .map_err(|e| precondition(e.to_string()))?;
    let g6 = built.graph.to_graph6();
    if json {
        print_json(&json!({
            "family": built.family,
            "n": n,
            "d": built.d,
            "edges": built.graph.edge_count(),
            "graph6": g6,
            "parts": built.parts,
        }));
    } else {
        println!("{g6}");
    }
    Ok(0)
}

#[derive(Clone, Copy)]
struct Checks {
    ham: bool,
    saturated: bool,
    posa: bool,
    two_connected: bool,
    ore_property: bool,
}

fn check(graphs: &[Graph], checks: Checks, json: bool) -> Outcome {
    let mut records = Vec::new();
    for g in graphs {
        let mut record = serde_json::Map::new();
        record.insert("graph6".into(), json!(g.to_graph6()));
        let mut lines = vec![format!("graph\t{}", g.to_graph6())];
        if checks.ham {
            let cycle = is_hamiltonian(g);
            lines.push(match &cycle {
                Some(w) => format!(
                    "ham\ttrue\t{}",
                    w.order
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
                None => "ham\tfalse".into(),
            });
            record.insert("ham".into(), json!(cycle.is_some()));
            record.insert("cycle".into(), json!(cycle.map(|w| w.order)));
        }
        if checks.saturated {
            let s = is_saturated(g);
            lines.push(format!("saturated\t{s}"));
            record.insert("saturated".into(), json!(s));
        }
        if checks.posa {
            let w = posa_witness_max(g);
            lines.push(match &w {
                Some(w) => format!("posa\ttrue\tk={}\t{}", w.k, join(w.low)),
                None => "posa\tfalse".into(),
            });
            record.insert("posa".into(), json!(w));
        }
        if checks.two_connected {
            let t = g.is_two_connected();
            lines.push(format!("two_connected\t{t}"));
            record.insert("two_connected".into(), json!(t));
        }
        if checks.ore_property {
            let pair = check_ore_property(g);
            lines.push(match pair {
                Some((u, v)) => format!("ore_property\tviolated\t{u} {v}"),
                None => "ore_property\tholds".into(),
            });
            record.insert("ore_violation".into(), json!(pair.map(|(u, v)| [u, v])));
        }
        if json {
            records.push(serde_json::Value::Object(record));
        } else {
            lines.iter().for_each(|l| println!("{l}"));
        }
    }
    if json {
        print_json(&serde_json::Value::Array(records));
    }
    Ok(0)
}

fn saturate_cmd(g: &Graph, out: Option<&PathBuf>, json: bool) -> Outcome {
    let closure = saturate(g).map_err(|e| match e {
        SaturationError::AlreadyHamiltonian => {
            precondition("HamiltonianInput: input graph is hamiltonian")
        }
        SaturationError::OrderTooSmall(_) => precondition(format!("OrderTooSmall: {e}")),
        SaturationError::Hamilton(h) => precondition(h.to_string()),
    })?;
    if let Some(path) = out {
        fs::write(path, closure.to_graph6() + "\n")
            .map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
    } else if json {
        print_json(&json!({
            "input_graph6": g.to_graph6(),
            "saturated_graph6": closure.to_graph6(),
            "added_edges": closure.edge_count() - g.edge_count(),
        }));
    } else {
        println!("{}", closure.to_graph6());
    }
    Ok(0)
}

fn certify(g: &Graph, d: usize, json: bool) -> Outcome {
    let cert = certify_stability(g, d).map_err(|e| precondition(format!("{}: {e}", e.kind())))?;
    if json {
        print_json(&serde_json::to_value(&cert).expect("serializable"));
    } else {
        print_certificate(&cert);
    }
    Ok(0)
}

fn print_certificate(cert: &StabilityCertificate) {
    match cert.embedding {
        Embedding::H { low, attach } => {
            println!("variant\tH");
            println!("d\t{}", cert.d);
            println!("D\t{}", join(low));
            println!("S\t{}", join(attach));
        }
        Embedding::HPrime { block, cut } => {
            println!("variant\tHPRIME");
            println!("d\t{}", cert.d);
            println!("B\t{}", join(block));
            println!("c\t{cut}");
        }
    }
    if cert.coincident() {
        println!("coincident\ttrue");
    }
    println!("saturated\t{}", cert.saturated_graph.to_graph6());
}

fn verify(
    theorem: TheoremArg,
    n: usize,
    d: Option<usize>,
    trials: usize,
    seed: u64,
    json: bool,
    no_timing: bool,
) -> Outcome {
    let need_d = || d.ok_or_else(|| usage("--d is required for this theorem"));
    let report = match theorem {
        TheoremArg::Ore => verify_ore(n),
        TheoremArg::Erdos => verify_erdos(n, need_d()?),
        TheoremArg::Stability => verify_stability(n, need_d()?),
        TheoremArg::Posa => verify_posa_theorems(n, trials, seed),
    }
    .map_err(|e| precondition(e.to_string()))?;
    let report = if no_timing {
        report.without_timing()
    } else {
        report
    };
    if json {
        print_json(&serde_json::to_value(&report).expect("serializable"));
    } else {
        print_report(&report);
    }
    Ok(if report.is_success() { 0 } else { 1 })
}

fn print_report(r: &VerificationReport) {
    let value = serde_json::to_value(r).expect("serializable");
    println!("theorem\t{}", value["theorem"].as_str().unwrap_or_default());
    println!("n\t{}", r.params.n);
    if let Some(d) = r.params.d {
        println!("d\t{d}");
    }
    if let (Some(seed), Some(trials)) = (r.params.seed, r.params.trials) {
        println!("seed\t{seed}");
        println!("trials\t{trials}");
    }
    println!("graphs_examined\t{}", r.graphs_examined);
    if let Some(m) = r.max_edges_found {
        println!("max_edges_found\t{m}");
    }
    for g6 in &r.extremal_graph6 {
        println!("extremal\t{g6}");
    }
    for c in &r.counterexamples {
        println!("counterexample\t{}\t{}", c.graph6, c.reason);
    }
    println!("status\t{}", value["status"].as_str().unwrap_or_default());
    println!("wall_time_ms\t{}", r.wall_time_ms);
}
