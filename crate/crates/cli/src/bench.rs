//! Counter-based scaling harness.
//!
//! Runs each solver on generated graphs and checks that the instrumented
//! operation counts stay within the bounds implied by the algorithms'
//! complexity: O(log n) Boolean products for the center, O(log t)
//! predicate evaluations for the bottleneck, and Θ(t·n³) frontier work for
//! all-pairs-all-flows.

use std::collections::BTreeMap;
use std::time::Instant;

use graphkit::apspaf::apspaf_floyd_counted;
use graphkit::bottleneck::graph_bottleneck;
use graphkit::center::graph_center_observed;
use graphkit::graph::random_graph;
use graphkit::{Capacity, CenterMode, EdgeFormat, Graph, Predicate};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Largest tolerated spread of `work / (t·n³)` across sizes.
pub const APSPAF_SPREAD_LIMIT: f64 = 4.0;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub base_seed: u64,
    pub capacities: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { sizes: vec![8, 16, 32], seeds: vec![1, 2, 3], base_seed: 0, capacities: 4 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub wall_ms: f64,
    pub counters: Map<String, Value>,
    pub result: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchOutcome {
    pub reports: Vec<RunReport>,
    pub checks: Vec<Check>,
}

impl BenchOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn ceil_log2(x: usize) -> usize {
    x.next_power_of_two().trailing_zeros() as usize
}

fn digest(g: &Graph) -> String {
    hex::encode(Sha256::digest(g.to_edge_list(EdgeFormat::Full).as_bytes()))
}

fn graph_seed(base: u64, seed: u64, n: usize, salt: u64) -> u64 {
    base.wrapping_mul(1_000_003)
        .wrapping_add(seed.wrapping_mul(10_007))
        .wrapping_add(n as u64 * 31 + salt)
}

fn caps(range: std::ops::RangeInclusive<u64>) -> Vec<Capacity> {
    range.map(Capacity::from_int).collect()
}

pub fn run_bench(cfg: &BenchConfig) -> BenchOutcome {
    let mut reports = Vec::new();
    let mut checks = Vec::new();
    let mut center_ok = true;
    let mut center_detail = Vec::new();
    let mut gb_ok = true;
    let mut gb_detail = Vec::new();
    // n -> normalized frontier work per seed
    let mut af_norm: BTreeMap<usize, Vec<f64>> = BTreeMap::new();

    for &n in &cfg.sizes {
        for &seed in &cfg.seeds {
            let m = (4 * n).min(n * n);
            let g = random_graph(n, m, &caps(1..=1), &[1], graph_seed(cfg.base_seed, seed, n, 1), true)
                .expect("feasible center graph");
            let started = Instant::now();
            let (r, stats) = graph_center_observed(&g, CenterMode::Out, |_| {}).expect("strongly connected");
            let products = stats.total_products();
            let bound = 3 * ceil_log2(n);
            if products > bound {
                center_ok = false;
            }
            center_detail.push(format!("n={n} seed={seed}: {products}/{bound}"));
            reports.push(RunReport {
                command: "center".into(),
                input_digest: digest(&g),
                wall_ms: started.elapsed().as_secs_f64() * 1e3,
                counters: counters(&[("n", n as u64), ("seed", seed), ("matrix_products", products as u64), ("bound", bound as u64)]),
                result: json!({ "center": r.center + 1, "delta": r.delta }),
            });

            let g = random_graph(n, m, &caps(1..=2 * n as u64), &[1], graph_seed(cfg.base_seed, seed, n, 2), true)
                .expect("feasible bottleneck graph");
            let started = Instant::now();
            let r = graph_bottleneck(&g, Predicate::Scc).expect("strongly connected");
            let t = g.distinct_capacities().len();
            let bound = ceil_log2(t) + 1;
            if r.iterations > bound {
                gb_ok = false;
            }
            gb_detail.push(format!("n={n} t={t}: {}/{bound}", r.iterations));
            reports.push(RunReport {
                command: "gb".into(),
                input_digest: digest(&g),
                wall_ms: started.elapsed().as_secs_f64() * 1e3,
                counters: counters(&[("n", n as u64), ("seed", seed), ("distinct_capacities", t as u64), ("predicate_evaluations", r.iterations as u64), ("bound", bound as u64)]),
                result: json!({ "theta": r.theta, "iterations": r.iterations }),
            });

            let m = (3 * n).min(n * n);
            let g = random_graph(n, m, &caps(1..=cfg.capacities), &[1, 2, 3, 4], graph_seed(cfg.base_seed, seed, n, 3), true)
                .expect("feasible all-flows graph");
            let started = Instant::now();
            let (dm, work) = apspaf_floyd_counted(&g).expect("positive costs");
            let t = cfg.capacities;
            let norm = work as f64 / (t as f64 * (n as f64).powi(3));
            af_norm.entry(n).or_default().push(norm);
            reports.push(RunReport {
                command: "apspaf".into(),
                input_digest: digest(&g),
                wall_ms: started.elapsed().as_secs_f64() * 1e3,
                counters: counters(&[("n", n as u64), ("seed", seed), ("t", t), ("frontier_work", work)]),
                result: json!({ "longest_frontier": graphkit::apspaf::longest_frontier(&dm), "work_per_tn3": norm }),
            });
        }
    }

    checks.push(Check {
        name: "center: products <= 3*ceil(log2 n)".into(),
        passed: center_ok,
        detail: center_detail.join(", "),
    });
    checks.push(Check {
        name: "gb: predicate evaluations <= ceil(log2 t) + 1".into(),
        passed: gb_ok,
        detail: gb_detail.join(", "),
    });
    let means: Vec<(usize, f64)> = af_norm
        .iter()
        .map(|(&n, v)| (n, v.iter().sum::<f64>() / v.len() as f64))
        .collect();
    let hi = means.iter().map(|m| m.1).fold(f64::MIN, f64::max);
    let lo = means.iter().map(|m| m.1).fold(f64::MAX, f64::min);
    let spread = if means.is_empty() { 1.0 } else { hi / lo };
    checks.push(Check {
        name: format!("apspaf: work/(t*n^3) spread across sizes <= {APSPAF_SPREAD_LIMIT}"),
        passed: spread <= APSPAF_SPREAD_LIMIT,
        detail: format!(
            "{} -> spread {spread:.3}",
            means.iter().map(|(n, v)| format!("n={n}: {v:.4}")).collect::<Vec<_>>().join(", ")
        ),
    });
    BenchOutcome { reports, checks }
}

fn counters(kv: &[(&str, u64)]) -> Map<String, Value> {
    kv.iter().map(|&(k, v)| (k.to_string(), Value::from(v))).collect()
}
