//! 1-center of a unit-cost digraph by binary search over Boolean powers.
//!
//! With `B` the adjacency matrix plus diagonal, row i of `B^l` is all ones
//! iff every vertex lies within `l` hops of i. The search keeps `C = B^α`
//! and narrows `α < Δ ≤ β` by testing `C ⋆ B^r` with `r = (β − α) / 2`,
//! so only the squarings `B, B², ..., B^{N/2}` are ever needed.

use serde::Serialize;

use crate::boolmat::{bool_multiply, p_predicate, power_table, BoolMatrix, Orientation};
use crate::error::{Error, Result};
use crate::graph::{adjacency_boolean, Graph};
use crate::semiring::apsp;
use crate::value::Finite;

/// Which distances count toward a candidate's eccentricity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CenterMode {
    /// From the center to every vertex.
    Out,
    /// From every vertex to the center.
    In,
    /// Both directions.
    Both,
}

impl CenterMode {
    pub fn orientation(self) -> Orientation {
        match self {
            CenterMode::Out => Orientation::Row,
            CenterMode::In => Orientation::Column,
            CenterMode::Both => Orientation::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CenterResult {
    pub center: usize,
    pub delta: u64,
    pub mode: CenterMode,
}

/// Boolean product counts for one solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CenterStats {
    pub table_squarings: usize,
    pub search_products: usize,
    pub iterations: usize,
}

impl CenterStats {
    pub fn total_products(&self) -> usize {
        self.table_squarings + self.search_products
    }
}

/// State at the head of one binary-search iteration.
#[derive(Debug)]
pub struct SearchStep<'a> {
    pub alpha: u64,
    pub beta: u64,
    /// Equals `B^alpha`.
    pub c: &'a BoolMatrix,
}

pub fn graph_center(g: &Graph, mode: CenterMode) -> Result<CenterResult> {
    graph_center_observed(g, mode, |_| {}).map(|(r, _)| r)
}

/// [`graph_center`] with a hook called at every iteration head.
pub fn graph_center_observed(
    g: &Graph,
    mode: CenterMode,
    mut observe: impl FnMut(&SearchStep<'_>),
) -> Result<(CenterResult, CenterStats)> {
    if let Some(e) = g.edges().iter().find(|e| e.cost != 1) {
        return Err(Error::NonUnitCost { from: e.from, to: e.to, cost: e.cost });
    }
    let n = g.n();
    let mut stats = CenterStats::default();
    if n == 1 {
        return Ok((CenterResult { center: 0, delta: 0, mode }, stats));
    }
    let orient = mode.orientation();
    let b = adjacency_boolean(g, None, true);
    let span = n.next_power_of_two();
    let table = power_table(&b, span / 2)?;
    stats.table_squarings = table.len() - 1;

    // B^span covers every path of length <= n - 1
    let top = table.last().unwrap();
    let top = bool_multiply(top, top)?;
    stats.search_products += 1;
    if p_predicate(&top, orient).is_none() {
        return Err(Error::NoCenter);
    }

    let (mut alpha, mut beta) = (0u64, span as u64);
    let mut c = BoolMatrix::identity(n);
    while beta - alpha > 1 {
        observe(&SearchStep { alpha, beta, c: &c });
        stats.iterations += 1;
        let r = (beta - alpha) / 2;
        let t = alpha + r;
        let probe = bool_multiply(&c, &table[r.trailing_zeros() as usize])?;
        stats.search_products += 1;
        if p_predicate(&probe, orient).is_some() {
            beta = t;
        } else {
            alpha = t;
            c = probe;
        }
    }
    observe(&SearchStep { alpha, beta, c: &c });
    let c = bool_multiply(&c, &table[0])?;
    stats.search_products += 1;
    let center = p_predicate(&c, orient).expect("B^beta satisfies the predicate");
    Ok((CenterResult { center, delta: beta, mode }, stats))
}

/// Vertex minimizing the total shortest distance to all vertices (row sums
/// of the distance closure), smallest id on ties. Vertices that cannot
/// reach everyone are skipped.
pub fn avg_center(g: &Graph) -> Result<(usize, u64)> {
    let dist = apsp(g);
    dist.rows()
        .enumerate()
        .filter_map(|(i, row)| {
            row.iter()
                .try_fold(0u64, |acc, d| d.finite().map(|v| acc + v))
                .map(|s| (i, s))
        })
        .min_by_key(|&(i, s)| (s, i))
        .ok_or(Error::NoCenter)
}

/// Eccentricity of `v` read off a distance closure; `None` if some vertex is
/// unreachable under `mode`.
pub fn eccentricity(dist: &crate::semiring::DistMatrix, v: usize, mode: CenterMode) -> Option<u64> {
    let n = dist.n();
    let out = (0..n).map(|j| *dist.get(v, j));
    let inn = (0..n).map(|i| *dist.get(i, v));
    let vals: Vec<_> = match mode {
        CenterMode::Out => out.collect(),
        CenterMode::In => inn.collect(),
        CenterMode::Both => out.chain(inn).collect(),
    };
    vals.into_iter().try_fold(0u64, |m, d| match d {
        Finite(x) => Some(m.max(x)),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolmat::BoolMatrix;
    use crate::graph::Edge;
    use crate::value::Capacity;

    fn unit(n: usize, arcs: &[(usize, usize)]) -> Graph {
        let one = Capacity::from_int(1);
        Graph::new(n, arcs.iter().map(|&(a, b)| Edge::unit(a, b, one)).collect()).unwrap()
    }

    #[test]
    fn three_cycle() {
        let g = unit(3, &[(0, 1), (1, 2), (2, 0)]);
        for mode in [CenterMode::Out, CenterMode::In, CenterMode::Both] {
            let r = graph_center(&g, mode).unwrap();
            assert_eq!((r.center, r.delta), (0, 2));
        }
    }

    #[test]
    fn star_hub() {
        let g = unit(4, &[(0, 1), (0, 2), (0, 3)]);
        let r = graph_center(&g, CenterMode::Out).unwrap();
        assert_eq!((r.center, r.delta), (0, 1));
        assert_eq!(graph_center(&g, CenterMode::In).unwrap_err(), Error::NoCenter);
        assert_eq!(graph_center(&g, CenterMode::Both).unwrap_err(), Error::NoCenter);
        // the hub is reached by everyone once arcs are reversed
        let r = graph_center(&g.reversed(), CenterMode::In).unwrap();
        assert_eq!((r.center, r.delta), (0, 1));
    }

    #[test]
    fn single_vertex() {
        let g = unit(1, &[]);
        let (r, stats) = graph_center_observed(&g, CenterMode::Both, |_| panic!("no search")).unwrap();
        assert_eq!((r.center, r.delta), (0, 0));
        assert_eq!(stats.total_products(), 0);
    }

    #[test]
    fn rejects_non_unit_costs() {
        let g = Graph::new(2, vec![Edge::new(0, 1, 2, Capacity::from_int(1))]).unwrap();
        assert!(matches!(graph_center(&g, CenterMode::Out), Err(Error::NonUnitCost { .. })));
    }

    #[test]
    fn long_path_center_is_middle() {
        // bidirected path of 9 vertices: center 4 at distance 4
        let mut arcs = Vec::new();
        for i in 0..8 {
            arcs.push((i, i + 1));
            arcs.push((i + 1, i));
        }
        let g = unit(9, &arcs);
        let r = graph_center(&g, CenterMode::Both).unwrap();
        assert_eq!((r.center, r.delta), (4, 4));
    }

    #[test]
    fn tracks_c_as_power_of_b() {
        let g = unit(11, &(0..11).map(|i| (i, (i + 1) % 11)).collect::<Vec<_>>());
        let b = adjacency_boolean(&g, None, true);
        let mut heads = Vec::new();
        let (r, stats) = graph_center_observed(&g, CenterMode::Out, |s| {
            let mut p = BoolMatrix::identity(11);
            for _ in 0..s.alpha {
                p = bool_multiply(&p, &b).unwrap();
            }
            assert_eq!(*s.c, p);
            heads.push((s.alpha, s.beta));
        })
        .unwrap();
        assert_eq!(r.delta, 10);
        assert_eq!(*heads.last().unwrap(), (9, 10));
        for (a, b) in heads {
            assert!(a < 10 && 10 <= b);
        }
        // ceil(log2 11) = 4
        assert_eq!(stats.table_squarings, 3);
        assert_eq!(stats.iterations, 4);
        assert_eq!(stats.search_products, 6);
    }

    #[test]
    fn average_center() {
        let g = unit(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(avg_center(&g).unwrap(), (0, 3));
        let star = unit(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(avg_center(&star).unwrap(), (0, 3));
        assert_eq!(avg_center(&unit(2, &[])).unwrap_err(), Error::NoCenter);
    }
}
