//! Brute-force reference implementations.
//!
//! Nothing here calls into the Boolean, semi-ring, frontier or solver
//! modules; results are only packed into their container types at the end.

use std::collections::{BinaryHeap, VecDeque};
use std::cmp::Reverse;

use crate::apspaf::DfMatrix;
use crate::center::{CenterMode, CenterResult};
use crate::dfpair::{DfPair, Frontier};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semiring::{CapMatrix, DistMatrix, Matrix};
use crate::value::{Capacity, Finite, Infinite};

/// Largest n accepted by the simple-path enumerators.
pub const ENUMERATION_LIMIT: usize = 8;

fn out_lists(g: &Graph) -> Vec<Vec<(usize, u64, Capacity)>> {
    let mut adj = vec![Vec::new(); g.n()];
    for e in g.edges() {
        adj[e.from].push((e.to, e.cost, e.cap));
    }
    adj
}

/// Breadth-first distances from every source, ignoring costs (unit hops).
pub fn bfs_apsp(g: &Graph) -> DistMatrix {
    let n = g.n();
    let adj = out_lists(g);
    let mut out = Matrix::filled(n, Infinite);
    for s in 0..n {
        let mut dist = vec![None; n];
        dist[s] = Some(0u64);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &(v, _, _) in &adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        for (t, d) in dist.into_iter().enumerate() {
            if let Some(d) = d {
                out.set(s, t, Finite(d));
            }
        }
    }
    out
}

/// Dijkstra from every source over integer costs.
pub fn dijkstra_apsp(g: &Graph) -> DistMatrix {
    let n = g.n();
    let adj = out_lists(g);
    let mut out = Matrix::filled(n, Infinite);
    for s in 0..n {
        let mut dist: Vec<Option<u64>> = vec![None; n];
        let mut heap = BinaryHeap::from([Reverse((0u64, s))]);
        while let Some(Reverse((d, u))) = heap.pop() {
            if dist[u].is_some() {
                continue;
            }
            dist[u] = Some(d);
            for &(v, c, _) in &adj[u] {
                if dist[v].is_none() {
                    heap.push(Reverse((d + c, v)));
                }
            }
        }
        for (t, d) in dist.into_iter().enumerate() {
            if let Some(d) = d {
                out.set(s, t, Finite(d));
            }
        }
    }
    out
}

/// Literal min over vertices of the max BFS distance.
pub fn brute_eccentricity_center(g: &Graph, mode: CenterMode) -> Result<CenterResult> {
    let dist = bfs_apsp(g);
    let n = g.n();
    let mut best: Option<(u64, usize)> = None;
    for v in 0..n {
        let mut ecc = Some(0u64);
        for u in 0..n {
            let legs: &[_] = match mode {
                CenterMode::Out => &[*dist.get(v, u)],
                CenterMode::In => &[*dist.get(u, v)],
                CenterMode::Both => &[*dist.get(v, u), *dist.get(u, v)],
            };
            for d in legs {
                ecc = match (ecc, d) {
                    (Some(e), Finite(x)) => Some(e.max(*x)),
                    _ => None,
                };
            }
        }
        if let Some(e) = ecc {
            if best.is_none_or(|(b, _)| e < b) {
                best = Some((e, v));
            }
        }
    }
    let (delta, center) = best.ok_or(Error::NoCenter)?;
    Ok(CenterResult { center, delta, mode })
}

/// Calls `visit(target, total_cost, bottleneck)` for every simple path from
/// `source`, including the empty one (bottleneck `None` = unbounded).
fn for_each_simple_path(
    g: &Graph,
    source: usize,
    mut visit: impl FnMut(usize, u64, Option<Capacity>),
) -> Result<()> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::TooLargeForEnumeration { n: g.n(), limit: ENUMERATION_LIMIT });
    }
    let adj = out_lists(g);
    let mut on_path = vec![false; g.n()];
    fn walk(
        adj: &[Vec<(usize, u64, Capacity)>],
        u: usize,
        cost: u64,
        neck: Option<Capacity>,
        on_path: &mut [bool],
        visit: &mut dyn FnMut(usize, u64, Option<Capacity>),
    ) {
        visit(u, cost, neck);
        on_path[u] = true;
        for &(v, c, k) in &adj[u] {
            if !on_path[v] {
                let neck = Some(neck.map_or(k, |b| b.min(k)));
                walk(adj, v, cost + c, neck, on_path, visit);
            }
        }
        on_path[u] = false;
    }
    walk(&adj, source, 0, None, &mut on_path, &mut visit);
    Ok(())
}

/// Widest-path values. Exhaustive simple-path enumeration for n ≤ 8,
/// label-correcting search from every source above that.
pub fn brute_bottleneck_matrix(g: &Graph) -> CapMatrix {
    let n = g.n();
    let mut out = Matrix::filled(n, Finite(Capacity::ZERO));
    if n <= ENUMERATION_LIMIT {
        for s in 0..n {
            for_each_simple_path(g, s, |t, _, neck| {
                let v = neck.map_or(Infinite, Finite);
                if v > *out.get(s, t) {
                    out.set(s, t, v);
                }
            })
            .unwrap();
        }
        return out;
    }
    let adj = out_lists(g);
    for s in 0..n {
        // best[v]: widest known s→v; None = unbounded (only the source)
        let mut best: Vec<Option<Option<Capacity>>> = vec![None; n];
        best[s] = Some(None);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let bu = best[u].unwrap();
            for &(v, _, k) in &adj[u] {
                let cand = bu.map_or(k, |b| b.min(k));
                let better = match best[v] {
                    None => true,
                    Some(None) => false,
                    Some(Some(cur)) => cand > cur,
                };
                if better {
                    best[v] = Some(Some(cand));
                    queue.push_back(v);
                }
            }
        }
        for (t, b) in best.into_iter().enumerate() {
            match b {
                Some(None) => out.set(s, t, Infinite),
                Some(Some(c)) => out.set(s, t, Finite(c)),
                None => {}
            }
        }
    }
    out
}

/// Θ as the minimum off-diagonal widest-path value; `None` if some pair is
/// disconnected or n < 2.
pub fn brute_theta(g: &Graph) -> Option<Capacity> {
    let b = brute_bottleneck_matrix(g);
    let mut theta: Option<Capacity> = None;
    for i in 0..g.n() {
        for j in 0..g.n() {
            if i == j {
                continue;
            }
            match *b.get(i, j) {
                Finite(c) if c == Capacity::ZERO && !has_path(g, i, j) => return None,
                Finite(c) => theta = Some(theta.map_or(c, |t| t.min(c))),
                Infinite => unreachable!("off-diagonal widest path is finite"),
            }
        }
    }
    theta
}

fn has_path(g: &Graph, s: usize, t: usize) -> bool {
    bfs_apsp(g).get(s, t).finite().is_some()
}

/// Quadratic dominance filter: drop dominated and duplicate pairs, then
/// sort by distance.
pub fn frontier_filter(pairs: &[DfPair]) -> Frontier {
    let mut keep: Vec<DfPair> = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        if p.d == Infinite || p.f == Finite(Capacity::ZERO) {
            continue;
        }
        let beaten = pairs.iter().enumerate().any(|(j, q)| {
            let at_least = q.d <= p.d && q.f >= p.f;
            at_least && (q != p || j < i)
        });
        if !beaten {
            keep.push(*p);
        }
    }
    keep.sort_by_key(|p| p.d);
    Frontier::from_sorted(keep).expect("filtered pairs form an antichain")
}

/// Frontier of (total cost, bottleneck) over all simple paths, per pair.
pub fn brute_frontiers(g: &Graph) -> Result<DfMatrix> {
    let n = g.n();
    let mut raw: Vec<Vec<DfPair>> = vec![Vec::new(); n * n];
    for s in 0..n {
        for_each_simple_path(g, s, |t, cost, neck| {
            raw[s * n + t].push(DfPair::new(Finite(cost), neck.map_or(Infinite, Finite)));
        })?;
    }
    let cells: Vec<Frontier> = raw.iter().map(|ps| frontier_filter(ps)).collect();
    Ok(Matrix::from_fn(n, |i, j| cells[i * n + j].clone()))
}
