//! Graph bottleneck Θ: the smallest, over ordered vertex pairs, of the
//! widest-path capacity. Found by binary search over the sorted distinct
//! edge capacities using the fact that Θ ≥ w iff the edges of capacity ≥ w
//! still form a strongly connected graph.

use serde::Serialize;

use crate::boolmat::{is_all_ones, transitive_closure};
use crate::error::{Error, Result};
use crate::graph::{adjacency_boolean, Graph};
use crate::value::Capacity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicate {
    /// Reflexive transitive closure of the thresholded Boolean adjacency.
    Closure,
    /// One Tarjan pass over the thresholded edges.
    Scc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GbResult {
    pub theta: Capacity,
    /// Predicate evaluations, including the initial connectivity check.
    pub iterations: usize,
}

/// True iff the edges with `cap >= min_cap` connect every vertex to every other.
pub fn strongly_connected(g: &Graph, min_cap: Capacity) -> bool {
    let adj = g.successors(Some(min_cap));
    scc_count(&adj) == 1
}

/// Closure-based twin of [`strongly_connected`].
pub fn strongly_connected_by_closure(g: &Graph, min_cap: Capacity) -> bool {
    let b = adjacency_boolean(g, Some(min_cap), false);
    is_all_ones(&transitive_closure(&b))
}

fn evaluate(g: &Graph, w: Capacity, predicate: Predicate) -> bool {
    match predicate {
        Predicate::Closure => strongly_connected_by_closure(g, w),
        Predicate::Scc => strongly_connected(g, w),
    }
}

/// Number of strongly connected components (iterative Tarjan).
pub fn scc_count(adj: &[Vec<usize>]) -> usize {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next = 0;
    let mut components = 0;
    // (vertex, position in its successor list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                components += 1;
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    if w == v {
                        break;
                    }
                }
            }
        }
    }
    components
}

pub fn graph_bottleneck(g: &Graph, predicate: Predicate) -> Result<GbResult> {
    graph_bottleneck_observed(g, predicate, |_, _| {})
}

/// [`graph_bottleneck`] with a hook receiving the candidate capacity range
/// `[caps[lo], caps[hi])` at each iteration head; `hi` may equal `caps.len()`.
pub fn graph_bottleneck_observed(
    g: &Graph,
    predicate: Predicate,
    mut observe: impl FnMut(&[Capacity], (usize, usize)),
) -> Result<GbResult> {
    if g.n() < 2 {
        return Err(Error::Degenerate);
    }
    let caps = g.distinct_capacities();
    if caps.is_empty() || !evaluate(g, caps[0], predicate) {
        return Err(Error::NotStronglyConnected);
    }
    let mut iterations = 1;
    // caps[lo] passes; caps[hi] fails (or is past the end)
    let (mut lo, mut hi) = (0, caps.len());
    while hi - lo > 1 {
        observe(&caps, (lo, hi));
        let mid = lo + (hi - lo) / 2;
        iterations += 1;
        if evaluate(g, caps[mid], predicate) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    observe(&caps, (lo, hi));
    Ok(GbResult { theta: caps[lo], iterations })
}
