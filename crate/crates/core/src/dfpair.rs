//! The distance/flow semi-ring.
//!
//! A [`Frontier`] is a set of (distance, flow) pairs no one of which is
//! better than another in merit order, kept sorted in natural order. Along
//! the sequence both coordinates therefore increase strictly. The empty
//! frontier is the semi-ring zero and `{(0, ∞)}` is the one.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::value::{Capacity, Distance, Finite, Flow, Infinite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DfPair {
    pub d: Distance,
    pub f: Flow,
}

impl DfPair {
    pub fn new(d: Distance, f: Flow) -> Self {
        DfPair { d, f }
    }

    pub fn finite(d: u64, f: Capacity) -> Self {
        DfPair { d: Finite(d), f: Finite(f) }
    }

    /// Pairs with no path (`d = ∞`) or no flow (`f = 0`) are absorbed into the zero.
    pub fn is_null(&self) -> bool {
        self.d.is_infinite() || self.f.is_zero_flow()
    }

    /// Serial composition: distances add, flows take the minimum.
    pub fn then(&self, other: &DfPair) -> DfPair {
        DfPair { d: self.d.plus_cost(other.d), f: self.f.min(other.f) }
    }

    /// Strictly below in natural order.
    pub fn naturally_below(&self, other: &DfPair) -> bool {
        self != other && self.d <= other.d && self.f <= other.f
    }
}

impl Serialize for DfPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.d, self.f).serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Merit {
    ADominates,
    BDominates,
    Equal,
    Incomparable,
}

/// `a` dominates when it is no longer and no thinner than `b`.
pub fn merit_compare(a: &DfPair, b: &DfPair) -> Merit {
    match (a.d.cmp(&b.d), a.f.cmp(&b.f)) {
        (Ordering::Equal, Ordering::Equal) => Merit::Equal,
        (Ordering::Less | Ordering::Equal, Ordering::Greater | Ordering::Equal) => Merit::ADominates,
        (Ordering::Greater | Ordering::Equal, Ordering::Less | Ordering::Equal) => Merit::BDominates,
        _ => Merit::Incomparable,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Frontier(Vec<DfPair>);

impl Frontier {
    pub fn empty() -> Self {
        Frontier(Vec::new())
    }

    pub fn one() -> Self {
        Frontier(vec![DfPair::new(Finite(0), Infinite)])
    }

    pub fn singleton(p: DfPair) -> Self {
        if p.is_null() { Frontier::empty() } else { Frontier(vec![p]) }
    }

    /// Builds a frontier from pairs already in natural order. Null pairs are
    /// dropped; anything else out of order or dominated is rejected.
    pub fn from_sorted(pairs: Vec<DfPair>) -> Result<Self> {
        let pairs: Vec<DfPair> = pairs.into_iter().filter(|p| !p.is_null()).collect();
        if let Some(w) = pairs.windows(2).find(|w| !(w[0].d < w[1].d && w[0].f < w[1].f)) {
            return Err(Error::InvalidGraph(format!(
                "frontier pairs ({}, {}) and ({}, {}) are not strictly increasing",
                w[0].d, w[0].f, w[1].d, w[1].f
            )));
        }
        Ok(Frontier(pairs))
    }

    pub fn pairs(&self) -> &[DfPair] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when both coordinates increase strictly along the sequence and
    /// no pair is null.
    pub fn is_canonical(&self) -> bool {
        self.0.iter().all(|p| !p.is_null())
            && self.0.windows(2).all(|w| w[0].d < w[1].d && w[0].f < w[1].f)
    }

    /// Shortest distance over all flows (∞ when empty).
    pub fn min_distance(&self) -> Distance {
        self.0.first().map_or(Infinite, |p| p.d)
    }

    /// Widest flow over all distances (0 when empty).
    pub fn max_flow(&self) -> Flow {
        self.0.last().map_or(Flow::ZERO, |p| p.f)
    }

    /// Shortest distance of a route able to carry `demand`.
    pub fn query(&self, demand: Flow) -> Distance {
        let idx = self.0.partition_point(|p| p.f < demand);
        self.0.get(idx).map_or(Infinite, |p| p.d)
    }
}

impl Serialize for Frontier {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for p in &self.0 {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

/// Merges two frontiers in one pass; returns the sum and the number of
/// pair comparisons made.
pub fn frontier_add_counted(x: &Frontier, y: &Frontier) -> (Frontier, u64) {
    let (xs, ys) = (&x.0, &y.0);
    let mut z = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    let mut comparisons = 0;
    while i < xs.len() && j < ys.len() {
        let (a, b) = (&xs[i], &ys[j]);
        comparisons += 1;
        match merit_compare(a, b) {
            Merit::Incomparable => {
                comparisons += 1;
                if a.naturally_below(b) {
                    z.push(*a);
                    i += 1;
                } else {
                    z.push(*b);
                    j += 1;
                }
            }
            Merit::ADominates => j += 1,
            Merit::BDominates => i += 1,
            Merit::Equal => {
                z.push(*a);
                i += 1;
                j += 1;
            }
        }
    }
    z.extend_from_slice(&xs[i..]);
    z.extend_from_slice(&ys[j..]);
    (Frontier(z), comparisons)
}

pub fn frontier_add(x: &Frontier, y: &Frontier) -> Frontier {
    frontier_add_counted(x, y).0
}

/// Two-finger product walk; returns the product and the number of steps.
pub fn frontier_multiply_counted(x: &Frontier, y: &Frontier) -> (Frontier, u64) {
    let (xs, ys) = (&x.0, &y.0);
    let mut z = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    let mut steps = 0;
    while i < xs.len() && j < ys.len() {
        let (a, b) = (&xs[i], &ys[j]);
        steps += 1;
        z.push(a.then(b));
        match a.f.cmp(&b.f) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    (Frontier(z), steps)
}

pub fn frontier_multiply(x: &Frontier, y: &Frontier) -> Frontier {
    frontier_multiply_counted(x, y).0
}

/// The distance/flow semi-ring over frontiers. Tallies the comparison and
/// step counts of every add and multiply it performs.
#[derive(Debug, Default)]
pub struct DistanceFlow {
    work: AtomicU64,
}

impl DistanceFlow {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn work(&self) -> u64 {
        self.work.load(AtomicOrdering::Relaxed)
    }
}

impl Semiring for DistanceFlow {
    type Elem = Frontier;

    fn zero(&self) -> Frontier {
        Frontier::empty()
    }
    fn one(&self) -> Frontier {
        Frontier::one()
    }
    fn plus(&self, a: &Frontier, b: &Frontier) -> Frontier {
        let (z, w) = frontier_add_counted(a, b);
        self.work.fetch_add(w, AtomicOrdering::Relaxed);
        z
    }
    fn times(&self, a: &Frontier, b: &Frontier) -> Frontier {
        let (z, w) = frontier_multiply_counted(a, b);
        self.work.fetch_add(w, AtomicOrdering::Relaxed);
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: u64, f: u64) -> DfPair {
        DfPair::finite(d, Capacity::from_int(f))
    }

    fn fr(pairs: &[(u64, u64)]) -> Frontier {
        Frontier::from_sorted(pairs.iter().map(|&(d, f)| p(d, f)).collect()).unwrap()
    }

    #[test]
    fn merit_examples() {
        assert_eq!(merit_compare(&p(0, 5), &p(1, 1)), Merit::ADominates);
        assert_eq!(merit_compare(&p(1, 1), &p(0, 5)), Merit::BDominates);
        assert_eq!(merit_compare(&p(1, 1), &p(2, 4)), Merit::Incomparable);
        assert_eq!(merit_compare(&p(3, 3), &p(3, 3)), Merit::Equal);
        assert_eq!(merit_compare(&p(3, 3), &p(3, 4)), Merit::BDominates);
    }

    #[test]
    fn add_examples() {
        assert_eq!(frontier_add(&fr(&[(1, 1)]), &fr(&[(0, 5)])), fr(&[(0, 5)]));
        let x = fr(&[(1, 1), (3, 5)]);
        assert_eq!(frontier_add(&x, &Frontier::empty()), x);
        assert_eq!(frontier_add(&Frontier::empty(), &x), x);
        assert_eq!(frontier_add(&x, &x), x);
        assert_eq!(frontier_add(&x, &fr(&[(2, 4)])), fr(&[(1, 1), (2, 4), (3, 5)]));
    }

    #[test]
    fn multiply_examples() {
        let x = fr(&[(1, 3), (2, 10)]);
        assert_eq!(frontier_multiply(&Frontier::one(), &x), x);
        assert_eq!(frontier_multiply(&x, &Frontier::one()), x);
        assert_eq!(frontier_multiply(&Frontier::empty(), &x), Frontier::empty());
        assert_eq!(frontier_multiply(&fr(&[(1, 5)]), &x), fr(&[(2, 3), (3, 5)]));
    }

    #[test]
    fn query_examples() {
        let x = fr(&[(2, 3), (5, 9)]);
        let q = |v| x.query(Finite(Capacity::from_int(v)));
        assert_eq!(q(3), Finite(2));
        assert_eq!(q(4), Finite(5));
        assert_eq!(q(10), Infinite);
        assert_eq!(Frontier::one().query(Finite(Capacity::from_int(1_000))), Finite(0));
    }

    #[test]
    fn null_pairs_normalize_to_zero() {
        assert_eq!(Frontier::singleton(DfPair::new(Infinite, Flow::ZERO)), Frontier::empty());
        assert_eq!(Frontier::singleton(p(3, 0)), Frontier::empty());
        assert_eq!(Frontier::from_sorted(vec![DfPair::new(Infinite, Flow::ZERO)]).unwrap(), Frontier::empty());
        assert!(Frontier::from_sorted(vec![p(1, 5), p(2, 5)]).is_err());
        assert!(Frontier::from_sorted(vec![p(2, 1), p(1, 5)]).is_err());
    }

    #[test]
    fn projections() {
        let x = fr(&[(2, 3), (5, 9)]);
        assert_eq!(x.min_distance(), Finite(2));
        assert_eq!(x.max_flow(), Finite(Capacity::from_int(9)));
        assert_eq!(Frontier::empty().min_distance(), Infinite);
        assert_eq!(Frontier::empty().max_flow(), Flow::ZERO);
    }

    #[test]
    fn semiring_instance_counts_work() {
        let s = DistanceFlow::new();
        let x = fr(&[(1, 1), (3, 5)]);
        let _ = s.plus(&x, &fr(&[(2, 4)]));
        assert!(s.work() > 0);
        let before = s.work();
        let _ = s.times(&x, &Frontier::empty());
        assert_eq!(s.work(), before);
    }

    #[test]
    fn serializes_with_inf() {
        let x = Frontier::from_sorted(vec![p(1, 2), DfPair::new(Finite(4), Infinite)]).unwrap();
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"[[1,2],[4,"inf"]]"#);
        assert_eq!(serde_json::to_string(&Frontier::empty()).unwrap(), "[]");
    }
}
