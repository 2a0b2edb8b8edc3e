//! Fixture graphs shared by the criterion benchmarks.

use graphkit::graph::random_graph;
use graphkit::{Capacity, Graph};

/// Strongly connected unit-cost graph with about four arcs per vertex.
pub fn unit_graph(n: usize, seed: u64) -> Graph {
    let caps: Vec<Capacity> = (1..=32).map(Capacity::from_int).collect();
    random_graph(n, 4 * n, &caps, &[1], seed, true).expect("feasible")
}

/// Strongly connected graph with costs 1..=4 and `t` distinct capacities.
pub fn weighted_graph(n: usize, t: u64, seed: u64) -> Graph {
    let caps: Vec<Capacity> = (1..=t).map(Capacity::from_int).collect();
    random_graph(n, 3 * n, &caps, &[1, 2, 3, 4], seed, true).expect("feasible")
}
