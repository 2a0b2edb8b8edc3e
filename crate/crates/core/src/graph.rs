//! Directed multigraph with per-edge cost and capacity, plus edge-list I/O.
//!
//! Vertex ids are 0-based inside the library. The edge-list format is
//! 1-based; [`load_edge_list`] and [`Graph::to_edge_list`] translate.

use std::collections::HashSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolmat::BoolMatrix;
use crate::error::{Error, Result};
use crate::value::Capacity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub cost: u64,
    pub cap: Capacity,
}

impl Edge {
    pub fn new(from: usize, to: usize, cost: u64, cap: Capacity) -> Self {
        Edge { from, to, cost, cap }
    }

    pub fn unit(from: usize, to: usize, cap: Capacity) -> Self {
        Edge::new(from, to, 1, cap)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

/// Edge-line layout of an edge-list file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeFormat {
    /// `u v cost cap`
    Full,
    /// `u v cap`, cost fixed at 1
    UnitCost,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        if let Some(e) = edges.iter().find(|e| e.from >= n || e.to >= n) {
            return Err(Error::InvalidGraph(format!(
                "edge {}->{} has an endpoint outside 0..{n}",
                e.from, e.to
            )));
        }
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_unit_costs(&self) -> bool {
        self.edges.iter().all(|e| e.cost == 1)
    }

    pub fn max_capacity(&self) -> Option<Capacity> {
        self.edges.iter().map(|e| e.cap).max()
    }

    /// Distinct edge capacities in ascending order.
    pub fn distinct_capacities(&self) -> Vec<Capacity> {
        let mut caps: Vec<Capacity> = self.edges.iter().map(|e| e.cap).collect();
        caps.sort_unstable();
        caps.dedup();
        caps
    }

    /// The same graph with every edge direction flipped.
    pub fn reversed(&self) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { from: e.to, to: e.from, ..*e })
            .collect();
        Graph { n: self.n, edges }
    }

    /// Out-adjacency lists of the edges with `cap >= min_cap` (all edges if `None`).
    pub fn successors(&self, min_cap: Option<Capacity>) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            if min_cap.is_none_or(|t| e.cap >= t) {
                adj[e.from].push(e.to);
            }
        }
        adj
    }

    /// Serializes in the edge-list format read by [`load_edge_list`].
    pub fn to_edge_list(&self, format: EdgeFormat) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            match format {
                EdgeFormat::Full => {
                    writeln!(out, "{} {} {} {}", e.from + 1, e.to + 1, e.cost, e.cap).unwrap()
                }
                EdgeFormat::UnitCost => writeln!(out, "{} {} {}", e.from + 1, e.to + 1, e.cap).unwrap(),
            }
        }
        out
    }
}

/// Guesses the edge layout from the field count of the first edge line.
pub fn detect_format(text: &str) -> Option<EdgeFormat> {
    let mut lines = content_lines(text);
    lines.next()?;
    let (_, line) = lines.next()?;
    match line.split_whitespace().count() {
        3 => Some(EdgeFormat::UnitCost),
        4 => Some(EdgeFormat::Full),
        _ => None,
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn load_edge_list(text: &str, format: EdgeFormat) -> Result<Graph> {
    let perr = |line: usize, message: String| Error::Parse { line, message };
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing \"n m\" header".into()))?;
    let hf: Vec<&str> = header.split_whitespace().collect();
    if hf.len() != 2 {
        return Err(perr(hline, format!("header must be \"n m\", got {} fields", hf.len())));
    }
    let n: usize = hf[0]
        .parse()
        .map_err(|_| perr(hline, format!("bad vertex count {:?}", hf[0])))?;
    let m: usize = hf[1]
        .parse()
        .map_err(|_| perr(hline, format!("bad edge count {:?}", hf[1])))?;
    if n == 0 {
        return Err(perr(hline, "vertex count must be positive".into()));
    }

    let want = match format {
        EdgeFormat::Full => 4,
        EdgeFormat::UnitCost => 3,
    };
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != want {
            return Err(perr(ln, format!("expected {want} fields, got {}", f.len())));
        }
        if edges.len() == m {
            return Err(perr(ln, format!("more edge lines than the declared m = {m}")));
        }
        let vertex = |s: &str| -> Result<usize> {
            let v: i64 = s.parse().map_err(|_| perr(ln, format!("bad vertex id {s:?}")))?;
            if v < 1 || v as u64 > n as u64 {
                return Err(perr(ln, format!("vertex {v} outside [1, {n}]")));
            }
            Ok(v as usize - 1)
        };
        let from = vertex(f[0])?;
        let to = vertex(f[1])?;
        let cost = match format {
            EdgeFormat::Full => {
                if f[2].starts_with('-') {
                    return Err(perr(ln, format!("negative cost {}", f[2])));
                }
                f[2].parse::<u64>()
                    .map_err(|_| perr(ln, format!("bad cost {:?}", f[2])))?
            }
            EdgeFormat::UnitCost => 1,
        };
        let cap: Capacity = f[want - 1].parse().map_err(|e| perr(ln, format!("{e}")))?;
        edges.push(Edge { from, to, cost, cap });
    }
    if edges.len() != m {
        let last = text.lines().count().max(1);
        return Err(perr(last, format!("declared m = {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

/// Boolean adjacency: entry (i, j) is set iff some edge i→j has `cap >= threshold`.
pub fn adjacency_boolean(g: &Graph, threshold: Option<Capacity>, with_diagonal: bool) -> BoolMatrix {
    let mut b = BoolMatrix::zeros(g.n());
    for e in g.edges() {
        if threshold.is_none_or(|t| e.cap >= t) {
            b.set(e.from, e.to, true);
        }
    }
    if with_diagonal {
        for i in 0..g.n() {
            b.set(i, i, true);
        }
    }
    b
}

/// Replaces every edge of cost k > 1 by a chain of k unit edges through k − 1
/// fresh vertices. Original vertices keep their ids, so the returned map is
/// the identity on `0..n`; auxiliary vertices are numbered from `n` upward.
pub fn expand_integer_costs(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    if let Some(e) = g.edges().iter().find(|e| e.cost == 0) {
        return Err(Error::ZeroCost { from: e.from, to: e.to });
    }
    let mut next = g.n();
    let mut edges = Vec::new();
    for e in g.edges() {
        let mut prev = e.from;
        for _ in 1..e.cost {
            edges.push(Edge::unit(prev, next, e.cap));
            prev = next;
            next += 1;
        }
        edges.push(Edge::unit(prev, e.to, e.cap));
    }
    let map = (0..g.n()).collect();
    Ok((Graph::new(next, edges)?, map))
}

/// Deterministic random graph with `m` distinct ordered vertex pairs (self-loops
/// allowed). With `strongly_connected` set, a random Hamiltonian cycle is planted
/// first.
pub fn random_graph(
    n: usize,
    m: usize,
    cap_values: &[Capacity],
    cost_values: &[u64],
    seed: u64,
    strongly_connected: bool,
) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Infeasible("n must be positive".into()));
    }
    if m > n * n {
        return Err(Error::Infeasible(format!("m = {m} exceeds n^2 = {}", n * n)));
    }
    if strongly_connected && m < n {
        return Err(Error::Infeasible(format!(
            "strong connectivity needs m >= n, got m = {m} < n = {n}"
        )));
    }
    if m > 0 && (cap_values.is_empty() || cost_values.is_empty()) {
        return Err(Error::Infeasible("empty capacity or cost pool".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used = HashSet::with_capacity(m);
    let mut pairs = Vec::with_capacity(m);
    if strongly_connected && n > 1 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        for w in 0..n {
            let p = (order[w], order[(w + 1) % n]);
            used.insert(p);
            pairs.push(p);
        }
    }
    if m * 2 > n * n {
        // dense: sample from the complement directly
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|p| !used.contains(p))
            .collect();
        rest.shuffle(&mut rng);
        pairs.extend(rest.into_iter().take(m - pairs.len()));
    } else {
        while pairs.len() < m {
            let p = (rng.gen_range(0..n), rng.gen_range(0..n));
            if used.insert(p) {
                pairs.push(p);
            }
        }
    }
    let edges = pairs
        .into_iter()
        .map(|(from, to)| Edge {
            from,
            to,
            cost: *cost_values.choose(&mut rng).unwrap(),
            cap: *cap_values.choose(&mut rng).unwrap(),
        })
        .collect();
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cap(v: u64) -> Capacity {
        Capacity::from_int(v)
    }

    #[test]
    fn parse_unit_cost() {
        let g = load_edge_list("2 2\n1 2 7\n2 1 3", EdgeFormat::UnitCost).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[Edge::unit(0, 1, cap(7)), Edge::unit(1, 0, cap(3))]);
    }

    #[test]
    fn parse_empty_graph() {
        let g = load_edge_list("1 0", EdgeFormat::UnitCost).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn parse_rejects_negative_capacity() {
        let err = load_edge_list("2 1\n1 2 -4", EdgeFormat::UnitCost).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_errors_name_the_line() {
        let text = "# comment\n3 2\n1 2 1 5\n\n1 4 1 5\n";
        match load_edge_list(text, EdgeFormat::Full).unwrap_err() {
            Error::Parse { line, message } => {
                assert_eq!(line, 5);
                assert!(message.contains("outside"));
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(
            load_edge_list("2 2\n1 2 3\n", EdgeFormat::UnitCost),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            load_edge_list("2 1\n1 2 3 4 5\n", EdgeFormat::Full),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_edge_list("2 1\n1 2 -1 4\n", EdgeFormat::Full),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn detects_format() {
        assert_eq!(detect_format("# x\n2 1\n1 2 3\n"), Some(EdgeFormat::UnitCost));
        assert_eq!(detect_format("2 1\n1 2 3 4\n"), Some(EdgeFormat::Full));
        assert_eq!(detect_format("2 0\n"), None);
    }

    fn cycle3(c: u64) -> Graph {
        Graph::new(3, (0..3).map(|i| Edge::unit(i, (i + 1) % 3, cap(c))).collect()).unwrap()
    }

    #[test]
    fn adjacency_threshold() {
        let g = cycle3(5);
        let b = adjacency_boolean(&g, Some(cap(4)), false);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.get(i, j), j == (i + 1) % 3);
            }
        }
        let b = adjacency_boolean(&g, Some(cap(6)), false);
        assert_eq!(b.count_ones(), 0);
        let b = adjacency_boolean(&g, Some(cap(6)), true);
        assert!((0..3).all(|i| b.get(i, i)));
        assert_eq!(b.count_ones(), 3);
    }

    #[test]
    fn expansion_of_unit_graph_is_identity() {
        let g = cycle3(2);
        let (h, map) = expand_integer_costs(&g).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn expansion_builds_chain() {
        let g = Graph::new(2, vec![Edge::new(0, 1, 3, cap(5))]).unwrap();
        let (h, _) = expand_integer_costs(&g).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(
            h.edges(),
            &[Edge::unit(0, 2, cap(5)), Edge::unit(2, 3, cap(5)), Edge::unit(3, 1, cap(5))]
        );
        let z = Graph::new(2, vec![Edge::new(0, 1, 0, cap(5))]).unwrap();
        assert_eq!(expand_integer_costs(&z).unwrap_err(), Error::ZeroCost { from: 0, to: 1 });
    }

    #[test]
    fn random_graph_plants_cycle() {
        let g = random_graph(4, 4, &[cap(1)], &[1], 9, true).unwrap();
        let adj = g.successors(None);
        // walking successors from 0 must visit all four vertices and return
        let mut v = 0;
        let mut seen = [false; 4];
        for _ in 0..4 {
            assert!(!seen[v]);
            seen[v] = true;
            v = adj[v][0];
        }
        assert_eq!(v, 0);
    }

    #[test]
    fn random_graph_is_deterministic() {
        let caps = [cap(1), cap(2), cap(3)];
        let a = random_graph(10, 30, &caps, &[1, 2], 77, true).unwrap();
        let b = random_graph(10, 30, &caps, &[1, 2], 77, true).unwrap();
        assert_eq!(a, b);
        let c = random_graph(10, 30, &caps, &[1, 2], 78, true).unwrap();
        assert_ne!(a, c);
        assert_eq!(random_graph(5, 25, &caps, &[1], 1, false).unwrap().m(), 25);
    }

    #[test]
    fn random_graph_infeasible() {
        assert!(matches!(random_graph(3, 10, &[cap(1)], &[1], 0, false), Err(Error::Infeasible(_))));
        assert!(matches!(random_graph(5, 4, &[cap(1)], &[1], 0, true), Err(Error::Infeasible(_))));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..8).prop_flat_map(|n| {
            let edge = (0..n, 0..n, 0u64..10, 0u128..1_000_000_000_000u128)
                .prop_map(|(f, t, c, k)| Edge::new(f, t, c, Capacity::from_scaled(k)));
            prop::collection::vec(edge, 0..20).prop_map(move |es| Graph::new(n, es).unwrap())
        })
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            let text = g.to_edge_list(EdgeFormat::Full);
            prop_assert_eq!(load_edge_list(&text, EdgeFormat::Full).unwrap(), g);
        }

        #[test]
        fn adjacency_is_monotone_in_threshold(g in arb_graph(), a in 0u128..1_000_000_000_000u128, b in 0u128..1_000_000_000_000u128) {
            let (lo, hi) = (a.min(b), a.max(b));
            let low = adjacency_boolean(&g, Some(Capacity::from_scaled(lo)), false);
            let high = adjacency_boolean(&g, Some(Capacity::from_scaled(hi)), false);
            for i in 0..g.n() {
                for j in 0..g.n() {
                    prop_assert!(!high.get(i, j) || low.get(i, j));
                }
            }
        }
    }
}
