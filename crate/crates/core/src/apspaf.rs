//! All-pairs shortest paths for all flows.
//!
//! Entry (i, j) of the result is the frontier of (distance, bottleneck)
//! trade-offs between routes from i to j: for any demanded flow, the first
//! pair whose flow meets the demand gives the shortest usable distance.

use crate::dfpair::{DfPair, DistanceFlow, Frontier};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semiring::{floyd_closure, matrix_closure, Matrix, Semiring};
use crate::value::{Distance, Flow};

pub type DfMatrix = Matrix<Frontier>;

/// Direct-edge frontiers; parallel edges are merged with frontier addition.
/// Zero-capacity edges carry no flow and contribute nothing.
pub fn edge_frontiers(g: &Graph) -> Result<DfMatrix> {
    if let Some(e) = g.edges().iter().find(|e| e.cost == 0) {
        return Err(Error::ZeroCost { from: e.from, to: e.to });
    }
    let s = DistanceFlow::new();
    let mut a = Matrix::filled(g.n(), Frontier::empty());
    for e in g.edges() {
        let single = Frontier::singleton(DfPair::finite(e.cost, e.cap));
        let merged = s.plus(a.get(e.from, e.to), &single);
        a.set(e.from, e.to, merged);
    }
    Ok(a)
}

/// Generalized Floyd closure. Returns the matrix and the frontier work
/// (comparisons plus product steps) it took.
pub fn apspaf_floyd_counted(g: &Graph) -> Result<(DfMatrix, u64)> {
    let a = edge_frontiers(g)?;
    let s = DistanceFlow::new();
    let m = floyd_closure(&s, &a);
    Ok((m, s.work()))
}

pub fn apspaf_floyd(g: &Graph) -> Result<DfMatrix> {
    apspaf_floyd_counted(g).map(|(m, _)| m)
}

/// Closure by repeated squaring of `I + A`.
pub fn apspaf_squaring(g: &Graph) -> Result<DfMatrix> {
    let a = edge_frontiers(g)?;
    Ok(matrix_closure(&DistanceFlow::new(), &a))
}

/// Shortest distance from `i` to `j` able to carry `demand`.
pub fn query(m: &DfMatrix, i: usize, j: usize, demand: Flow) -> Result<Distance> {
    for index in [i, j] {
        if index >= m.n() {
            return Err(Error::IndexOutOfRange { index, n: m.n() });
        }
    }
    Ok(m.get(i, j).query(demand))
}

/// Entrywise shortest distance, ignoring flow.
pub fn min_distance_projection(m: &DfMatrix) -> Matrix<Distance> {
    m.map(Frontier::min_distance)
}

/// Entrywise widest flow, ignoring distance.
pub fn max_flow_projection(m: &DfMatrix) -> Matrix<Flow> {
    m.map(Frontier::max_flow)
}

pub fn longest_frontier(m: &DfMatrix) -> usize {
    m.rows().flatten().map(Frontier::len).max().unwrap_or(0)
}
