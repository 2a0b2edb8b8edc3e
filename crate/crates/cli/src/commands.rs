//! Command dispatch: load the graph, run a solver, shape the output.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, Context};
use graphkit::apspaf::{apspaf_floyd_counted, query, DfMatrix};
use graphkit::bottleneck::graph_bottleneck;
use graphkit::center::{avg_center, graph_center_observed};
use graphkit::graph::{detect_format, load_edge_list};
use graphkit::oracle;
use graphkit::semiring::{apbp, apsp, Matrix};
use graphkit::value::{Capacity, Finite, Flow, Infinite};
use graphkit::{CenterMode, EdgeFormat, Error, Graph, Predicate};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::args::{ApspafArgs, CenterArgs, Command, EdgeLayout, Input, ModeArg, OracleCommand, PredicateArg, QueryArgs};

/// Why a command did not succeed; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// The input graph has no answer (exit 1).
    Domain(Error),
    /// A query found no route for the demand (exit 1).
    Unreachable,
    /// Bad flags, unreadable file, parse errors (exit 2).
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn solver(e: Error) -> Failure {
    if e.is_domain() {
        Failure::Domain(e)
    } else {
        Failure::Usage(e.into())
    }
}

/// A finished command.
#[derive(Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub input_digest: String,
    pub wall_ms: f64,
    pub counters: Map<String, Value>,
    pub json: Value,
    pub tsv: String,
    /// Payload destined for `--output` instead of stdout.
    pub file: Option<PathBuf>,
}

struct Loaded {
    graph: Graph,
    digest: String,
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    let text = fs::read_to_string(&input.input)
        .with_context(|| format!("cannot read {}", input.input.display()))?;
    let format = match input.edges {
        EdgeLayout::Full => EdgeFormat::Full,
        EdgeLayout::Unit => EdgeFormat::UnitCost,
        EdgeLayout::Auto => detect_format(&text).unwrap_or(EdgeFormat::UnitCost),
    };
    let graph = load_edge_list(&text, format)
        .map_err(|e| anyhow!("{}: {e}", input.input.display()))?;
    let digest = hex::encode(Sha256::digest(text.as_bytes()));
    Ok(Loaded { graph, digest })
}

fn mode(m: ModeArg) -> CenterMode {
    match m {
        ModeArg::Out => CenterMode::Out,
        ModeArg::In => CenterMode::In,
        ModeArg::Both => CenterMode::Both,
    }
}

fn outcome(command: &'static str, digest: String, started: Instant, json: Value, tsv: String) -> Outcome {
    Outcome {
        command,
        input_digest: digest,
        wall_ms: started.elapsed().as_secs_f64() * 1e3,
        counters: Map::new(),
        json,
        tsv,
        file: None,
    }
}

pub fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Center(a) => center(a, false),
        Command::Gb(a) => gb(&a.input, a.predicate, false),
        Command::Apsp(i) => apsp_cmd(i, false),
        Command::Apbp(i) => apbp_cmd(i, false),
        Command::Apspaf(a) => apspaf_cmd(a, false),
        Command::Query(a) => query_cmd(a),
        Command::Oracle(o) => match o {
            OracleCommand::Center(a) => center(a, true),
            OracleCommand::Gb(i) => gb(i, PredicateArg::Scc, true),
            OracleCommand::Apsp(i) => apsp_cmd(i, true),
            OracleCommand::Apbp(i) => apbp_cmd(i, true),
            OracleCommand::Apspaf(a) => apspaf_cmd(a, true),
        },
        Command::Bench(_) => unreachable!("bench is dispatched separately"),
    }
}

fn center(a: &CenterArgs, brute: bool) -> Result<Outcome, Failure> {
    let Loaded { graph, digest } = load(&a.input)?;
    let started = Instant::now();
    let m = mode(a.mode);
    if a.average {
        let g = match m {
            CenterMode::Out => graph,
            CenterMode::In => graph.reversed(),
            CenterMode::Both => {
                return Err(Failure::Usage(anyhow!("--average supports --mode out or in")))
            }
        };
        let (c, sum) = if brute {
            let d = oracle::dijkstra_apsp(&g);
            d.rows()
                .enumerate()
                .filter_map(|(i, row)| row.iter().map(|x| x.finite()).sum::<Option<u64>>().map(|s| (i, s)))
                .min_by_key(|&(i, s)| (s, i))
                .ok_or(Error::NoCenter)
                .map_err(solver)?
        } else {
            avg_center(&g).map_err(solver)?
        };
        let json = json!({ "center": c + 1, "sum": sum });
        let tsv = format!("center\tsum\n{}\t{sum}\n", c + 1);
        return Ok(outcome("center", digest, started, json, tsv));
    }
    let (result, stats) = if brute {
        (oracle::brute_eccentricity_center(&graph, m).map_err(solver)?, None)
    } else {
        let (r, s) = graph_center_observed(&graph, m, |_| {}).map_err(solver)?;
        (r, Some(s))
    };
    let json = json!({ "center": result.center + 1, "delta": result.delta });
    let tsv = format!("center\tdelta\n{}\t{}\n", result.center + 1, result.delta);
    let mut out = outcome("center", digest, started, json, tsv);
    if let Some(s) = stats {
        out.counters.insert("matrix_products".into(), s.total_products().into());
        out.counters.insert("table_squarings".into(), s.table_squarings.into());
        out.counters.insert("search_iterations".into(), s.iterations.into());
    }
    Ok(out)
}

fn gb(input: &Input, predicate: PredicateArg, brute: bool) -> Result<Outcome, Failure> {
    let Loaded { graph, digest } = load(input)?;
    let started = Instant::now();
    if brute {
        if graph.n() < 2 {
            return Err(solver(Error::Degenerate));
        }
        let theta = oracle::brute_theta(&graph).ok_or(Failure::Domain(Error::NotStronglyConnected))?;
        let json = json!({ "theta": theta });
        let tsv = format!("theta\n{theta}\n");
        return Ok(outcome("gb", digest, started, json, tsv));
    }
    let p = match predicate {
        PredicateArg::Closure => Predicate::Closure,
        PredicateArg::Scc => Predicate::Scc,
    };
    let r = graph_bottleneck(&graph, p).map_err(solver)?;
    let json = json!({ "theta": r.theta, "iterations": r.iterations });
    let tsv = format!("theta\titerations\n{}\t{}\n", r.theta, r.iterations);
    let mut out = outcome("gb", digest, started, json, tsv);
    out.counters.insert("predicate_evaluations".into(), r.iterations.into());
    Ok(out)
}

fn matrix_output<T: Serialize + std::fmt::Display + Clone>(key: &str, m: &Matrix<T>) -> (Value, String) {
    let rows: Vec<&[T]> = m.rows().collect();
    let json = json!({ "n": m.n(), key: rows });
    let mut tsv = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        tsv.push_str(&cells.join("\t"));
        tsv.push('\n');
    }
    (json, tsv)
}

fn apsp_cmd(input: &Input, brute: bool) -> Result<Outcome, Failure> {
    let Loaded { graph, digest } = load(input)?;
    let started = Instant::now();
    let d = if brute { oracle::dijkstra_apsp(&graph) } else { apsp(&graph) };
    let (json, tsv) = matrix_output("distances", &d);
    Ok(outcome("apsp", digest, started, json, tsv))
}

fn apbp_cmd(input: &Input, brute: bool) -> Result<Outcome, Failure> {
    let Loaded { graph, digest } = load(input)?;
    let started = Instant::now();
    let b = if brute { oracle::brute_bottleneck_matrix(&graph) } else { apbp(&graph) };
    let (json, tsv) = matrix_output("bottlenecks", &b);
    Ok(outcome("apbp", digest, started, json, tsv))
}

/// `{"i,j": [[d, f], ...]}` with 1-based keys, row-major.
pub fn df_matrix_json(m: &DfMatrix) -> Value {
    let mut map = Map::new();
    for i in 0..m.n() {
        for j in 0..m.n() {
            map.insert(format!("{},{}", i + 1, j + 1), serde_json::to_value(m.get(i, j)).unwrap());
        }
    }
    Value::Object(map)
}

fn df_matrix_tsv(m: &DfMatrix) -> String {
    let mut out = String::from("from\tto\tdistance\tflow\n");
    for i in 0..m.n() {
        for j in 0..m.n() {
            for p in m.get(i, j).pairs() {
                writeln!(out, "{}\t{}\t{}\t{}", i + 1, j + 1, p.d, p.f).unwrap();
            }
        }
    }
    out
}

fn apspaf_cmd(a: &ApspafArgs, brute: bool) -> Result<Outcome, Failure> {
    let Loaded { graph, digest } = load(&a.input)?;
    let started = Instant::now();
    let (m, work) = if brute {
        (oracle::brute_frontiers(&graph).map_err(solver)?, None)
    } else {
        let (m, w) = apspaf_floyd_counted(&graph).map_err(solver)?;
        (m, Some(w))
    };
    let mut out = outcome("apspaf", digest, started, df_matrix_json(&m), df_matrix_tsv(&m));
    if let Some(w) = work {
        out.counters.insert("frontier_work".into(), w.into());
    }
    out.file = a.output.clone();
    Ok(out)
}

fn parse_flow(s: &str) -> anyhow::Result<Flow> {
    if s == "inf" {
        return Ok(Infinite);
    }
    let c: Capacity = s.parse().map_err(|e| anyhow!("--flow: {e}"))?;
    Ok(Finite(c))
}

fn query_cmd(a: &QueryArgs) -> Result<Outcome, Failure> {
    let Loaded { graph, digest } = load(&a.input)?;
    let started = Instant::now();
    let demand = parse_flow(&a.flow)?;
    let vertex = |v: usize, flag: &str| {
        if v == 0 || v > graph.n() {
            Err(Failure::Usage(anyhow!("--{flag} {v} outside [1, {}]", graph.n())))
        } else {
            Ok(v - 1)
        }
    };
    let (i, j) = (vertex(a.from, "from")?, vertex(a.to, "to")?);
    let (m, work) = apspaf_floyd_counted(&graph).map_err(solver)?;
    match query(&m, i, j, demand).map_err(solver)? {
        Finite(d) => {
            let mut out = outcome("query", digest, started, json!(d), format!("{d}\n"));
            out.counters.insert("frontier_work".into(), work.into());
            Ok(out)
        }
        Infinite => Err(Failure::Unreachable),
    }
}
