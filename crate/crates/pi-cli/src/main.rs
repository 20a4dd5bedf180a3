//! Command-line front end. Subcommands wrap the recognizers, the
//! brute-force oracles, the instance generators, a self-test sweep, and a
//! stage-timing bench. Structured results go to stdout as single-line JSON
//! with stable key order; diagnostics go to stderr. Exit codes: 0 accept,
//! 1 refuse or mismatch, 2 malformed input or out-of-bounds request.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use pi_core::conflict::{assign_literals, conflict_graph, two_color};
use pi_core::cover::cover_from_assignment;
use pi_core::domination::build_context;
use pi_core::formulas::{build_phi1, build_phi2, solve_phi};
use pi_core::orientation::transitive_orientation;
use pi_core::representation::{
    build_representation, interval_realization, orders_from_cover, verify_representation,
    PiRepresentation,
};
use pi_core::{
    all_graphs, all_posets, format_graph, format_order, oracle_is_linear_interval,
    oracle_is_pi_graph, parse_graph, parse_order, random_graph, random_pi_instance, random_poset,
    recognize_graph, recognize_order, OrderOutcome, RecognitionOutcome, RefusalStage,
};

#[derive(Parser)]
#[command(
    name = "pi",
    version,
    about = "Recognize simple-triangle (PI) graphs and linear-interval orders"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether a graph is a PI graph; print a representation or a refusal
    Recognize {
        /// Graph file; stdin when omitted
        path: Option<PathBuf>,
    },
    /// Decide whether a partial order is a linear-interval order
    RecognizeOrder {
        /// Order file; stdin when omitted
        path: Option<PathBuf>,
    },
    /// Check a representation file against a graph file
    Verify {
        /// Graph file
        graph: PathBuf,
        /// JSON file with "points" and "intervals", as printed by recognize
        representation: PathBuf,
    },
    /// Brute-force verdicts on small inputs, independent of the recognizer
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
    /// Write a generated instance file with its seed in a header comment
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Exhaustive agreement between the recognizers and the oracles, n ≤ 5
    Selftest,
    /// Wall time and stage breakdown of recognition on dense instances
    Bench {
        /// Instance sizes to time
        #[arg(long, value_delimiter = ',', default_values_t = [50usize, 100, 200])]
        sizes: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// PI-graph verdict by enumerating orientations and interval extensions
    Graph { path: Option<PathBuf> },
    /// Linear-interval verdict by enumerating interval extensions
    Order { path: Option<PathBuf> },
}

#[derive(Subcommand)]
enum GenCmd {
    /// A graph drawn from a random PI representation (always accepted)
    Pi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; stdout when omitted
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// A uniform random graph with edge probability p
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// A random partial order (transitive closure of a random DAG)
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Recognize { path } => cmd_recognize(path.as_deref()),
        Cmd::RecognizeOrder { path } => cmd_recognize_order(path.as_deref()),
        Cmd::Verify { graph, representation } => cmd_verify(&graph, &representation),
        Cmd::Oracle { what } => cmd_oracle(what),
        Cmd::Gen { what } => cmd_gen(what),
        Cmd::Selftest => cmd_selftest(),
        Cmd::Bench { sizes } => cmd_bench(&sizes),
    }
}

/// File contents, or stdin when no path is given.
fn read_input(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// --seed beats PI_SEED beats 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("PI_SEED") {
        Ok(v) => v.parse().map_err(|_| format!("PI_SEED is not an integer: {v:?}")),
        Err(_) => Ok(0),
    }
}

fn witness_json(stage: &RefusalStage) -> Value {
    serde_json::from_str(&stage.witness_json()).expect("witnesses serialize as JSON")
}

fn intervals_json(intervals: &[(usize, usize)]) -> Value {
    Value::Array(intervals.iter().map(|&(l, r)| json!([l, r])).collect())
}

fn cmd_recognize(path: Option<&Path>) -> Result<u8, String> {
    let text = read_input(path)?;
    let g = parse_graph(&text).map_err(|e| e.to_string())?;
    match recognize_graph(&g) {
        RecognitionOutcome::Pi(acc) => {
            if !verify_representation(&acc.representation, &g) {
                return Err("internal: accepted representation failed re-verification".into());
            }
            let out = json!({
                "status": "pi",
                "points": acc.representation.apex_rank,
                "intervals": intervals_json(&acc.representation.intervals),
            });
            println!("{out}");
            Ok(0)
        }
        RecognitionOutcome::NotPi(stage) => {
            let out = json!({
                "status": "not_pi",
                "stage": stage.name(),
                "witness": witness_json(&stage),
            });
            println!("{out}");
            Ok(1)
        }
    }
}

fn cmd_recognize_order(path: Option<&Path>) -> Result<u8, String> {
    let text = read_input(path)?;
    let p = parse_order(&text).map_err(|e| e.to_string())?;
    match recognize_order(&p) {
        OrderOutcome::LinearInterval(acc) => {
            let ok = acc.realizer.p1.is_total()
                && acc.realizer.p1.intersect(&acc.realizer.p2).ok() == Some(p.clone());
            if !ok {
                return Err("internal: accepted realizer failed re-verification".into());
            }
            let ranks: Vec<usize> = (0..p.n()).map(|u| acc.realizer.p1.rank(u)).collect();
            let intervals =
                interval_realization(&acc.realizer.p2).map_err(|e| format!("internal: {e}"))?;
            let out = json!({
                "status": "linear_interval",
                "P1": ranks,
                "P2": intervals_json(&intervals),
            });
            println!("{out}");
            Ok(0)
        }
        OrderOutcome::NotLinearInterval(stage) => {
            let out = json!({
                "status": "not_linear_interval",
                "stage": stage.name(),
                "witness": witness_json(&stage),
            });
            println!("{out}");
            Ok(1)
        }
    }
}

/// Parse `{"points": [...], "intervals": [[l,r], ...]}`; extra keys (such
/// as `status` from recognize output) are ignored.
fn parse_representation(text: &str) -> Result<PiRepresentation, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("representation: {e}"))?;
    let as_usize = |x: &Value, what: &str| {
        x.as_u64().map(|u| u as usize).ok_or(format!("representation: {what} must be an integer"))
    };
    let points = v["points"]
        .as_array()
        .ok_or("representation: missing \"points\" array")?
        .iter()
        .map(|x| as_usize(x, "point"))
        .collect::<Result<Vec<usize>, _>>()?;
    let intervals = v["intervals"]
        .as_array()
        .ok_or("representation: missing \"intervals\" array")?
        .iter()
        .map(|pair| {
            let ends = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or("representation: each interval must be a [l, r] pair")?;
            Ok((as_usize(&ends[0], "endpoint")?, as_usize(&ends[1], "endpoint")?))
        })
        .collect::<Result<Vec<(usize, usize)>, String>>()?;
    Ok(PiRepresentation { apex_rank: points, intervals })
}

fn cmd_verify(graph_path: &Path, repr_path: &Path) -> Result<u8, String> {
    let g = parse_graph(&read_input(Some(graph_path))?).map_err(|e| e.to_string())?;
    let rep = parse_representation(&read_input(Some(repr_path))?)?;
    if rep.apex_rank.len() != g.n() || rep.intervals.len() != g.n() {
        return Err(format!(
            "size mismatch: graph has {} vertices, representation has {} points and {} intervals",
            g.n(),
            rep.apex_rank.len(),
            rep.intervals.len()
        ));
    }
    if verify_representation(&rep, &g) {
        println!("{}", json!({"status": "verified"}));
        Ok(0)
    } else {
        println!("{}", json!({"status": "mismatch"}));
        Ok(1)
    }
}

fn cmd_oracle(what: OracleCmd) -> Result<u8, String> {
    match what {
        OracleCmd::Graph { path } => {
            let g = parse_graph(&read_input(path.as_deref())?).map_err(|e| e.to_string())?;
            let report = oracle_is_pi_graph(&g).map_err(|e| e.to_string())?;
            let out = json!({
                "status": if report.is_pi { "pi" } else { "not_pi" },
                "orientations": report.orientations,
                "accepting": report.accepting,
            });
            println!("{out}");
            Ok(if report.is_pi { 0 } else { 1 })
        }
        OracleCmd::Order { path } => {
            let p = parse_order(&read_input(path.as_deref())?).map_err(|e| e.to_string())?;
            let verdict = oracle_is_linear_interval(&p).map_err(|e| e.to_string())?;
            let status = if verdict { "linear_interval" } else { "not_linear_interval" };
            println!("{}", json!({ "status": status }));
            Ok(if verdict { 0 } else { 1 })
        }
    }
}

fn cmd_gen(what: GenCmd) -> Result<u8, String> {
    let (content, output) = match what {
        GenCmd::Pi { n, seed, output } => {
            let seed = resolve_seed(seed)?;
            let (g, _) = random_pi_instance(n, seed);
            (format!("# seed {seed}\n{}", format_graph(&g)), output)
        }
        GenCmd::Graph { n, p, seed, output } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("edge probability must be in [0, 1], got {p}"));
            }
            let seed = resolve_seed(seed)?;
            let g = random_graph(n, p, seed);
            (format!("# seed {seed}\n{}", format_graph(&g)), output)
        }
        GenCmd::Poset { n, seed, output } => {
            let seed = resolve_seed(seed)?;
            let p = random_poset(n, seed);
            (format!("# seed {seed}\n{}", format_order(&p)), output)
        }
    };
    write_output(output.as_deref(), &content)?;
    Ok(0)
}

fn cmd_selftest() -> Result<u8, String> {
    let mut graphs = 0usize;
    for n in 1..=5usize {
        for g in all_graphs(n) {
            let report = oracle_is_pi_graph(&g).map_err(|e| e.to_string())?;
            if recognize_graph(&g).is_pi() != report.is_pi || !report.all_agree() {
                eprintln!("selftest: graph disagreement on n={n} edges={:?}", g.edges());
                return Ok(1);
            }
            graphs += 1;
        }
    }
    println!("graphs n<=5: {graphs} verdicts agree with the oracle");
    let mut orders = 0usize;
    for n in 1..=5usize {
        for p in all_posets(n).map_err(|e| e.to_string())? {
            let verdict = oracle_is_linear_interval(&p).map_err(|e| e.to_string())?;
            if recognize_order(&p).is_linear_interval() != verdict {
                eprintln!("selftest: order disagreement on n={n} pairs={:?}", p.pairs());
                return Ok(1);
            }
            orders += 1;
        }
    }
    println!("orders n<=5: {orders} verdicts agree with the oracle");
    println!("{}", json!({"status": "ok", "graphs": graphs, "orders": orders}));
    Ok(0)
}

fn stage<T>(label: &str, parts: &mut Vec<String>, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    parts.push(format!("{label}={:.2?}", start.elapsed()));
    out
}

/// Time each pipeline stage on one dense generated instance per size.
fn cmd_bench(sizes: &[usize]) -> Result<u8, String> {
    let seed = resolve_seed(None)?;
    for &n in sizes {
        let (g, _) = random_pi_instance(n, seed);
        let mut parts = Vec::new();
        let total = Instant::now();
        let p = stage("orient", &mut parts, || transitive_orientation(&g.complement()))
            .map_err(|e| format!("internal: generated instance refused: {e}"))?;
        let ctx = stage("context", &mut parts, || build_context(&p));
        let cg = stage("conflict", &mut parts, || conflict_graph(&ctx.h));
        let chi0 = stage("color", &mut parts, || two_color(&cg))
            .map_err(|e| format!("internal: generated instance refused: {e}"))?;
        let la = assign_literals(&cg, &chi0);
        let (phi1, phi2) = stage("formulas", &mut parts, || {
            (build_phi1(&ctx.h, &cg, &la), build_phi2(&ctx.h, &la))
        });
        let tau = stage("solve", &mut parts, || solve_phi(&phi1, &phi2, &la))
            .map_err(|e| format!("internal: generated instance refused: {e}"))?;
        let cover = stage("cover", &mut parts, || cover_from_assignment(&ctx, &la, &chi0, &tau));
        let rep = stage("realize", &mut parts, || {
            build_representation(&orders_from_cover(&ctx, &cover))
        })
        .map_err(|e| format!("internal: {e}"))?;
        let elapsed = total.elapsed();
        if !verify_representation(&rep, &g) {
            return Err("internal: bench representation failed re-verification".into());
        }
        println!("n={n} m={} seed={seed} total={elapsed:.2?} {}", g.m(), parts.join(" "));
    }
    Ok(0)
}
