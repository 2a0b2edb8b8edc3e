//! Closed semi-rings and matrices over them.
//!
//! A [`Semiring`] is a value (not just a type) so instances can carry
//! instrumentation; the matrix product and both closure routes are written
//! once against the trait and reused for distances, capacities and
//! distance/flow frontiers.

use std::fmt::Debug;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::value::{Distance, Finite, Flow, Infinite};

pub trait Semiring: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn plus(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn times(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// `(min, +, ∞, 0)` over extended non-negative costs.
#[derive(Clone, Copy, Debug, Default)]
pub struct MinPlus;

impl Semiring for MinPlus {
    type Elem = Distance;

    fn zero(&self) -> Distance {
        Infinite
    }
    fn one(&self) -> Distance {
        Finite(0)
    }
    fn plus(&self, a: &Distance, b: &Distance) -> Distance {
        *a.min(b)
    }
    fn times(&self, a: &Distance, b: &Distance) -> Distance {
        a.plus_cost(*b)
    }
}

/// `(max, min, 0, ∞)` over extended non-negative capacities.
#[derive(Clone, Copy, Debug, Default)]
pub struct MaxMin;

impl Semiring for MaxMin {
    type Elem = Flow;

    fn zero(&self) -> Flow {
        Flow::ZERO
    }
    fn one(&self) -> Flow {
        Infinite
    }
    fn plus(&self, a: &Flow, b: &Flow) -> Flow {
        *a.max(b)
    }
    fn times(&self, a: &Flow, b: &Flow) -> Flow {
        *a.min(b)
    }
}

/// Dense row-major n×n matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

pub type DistMatrix = Matrix<Distance>;
pub type CapMatrix = Matrix<Flow>;

impl<T: Clone> Matrix<T> {
    pub fn filled(n: usize, v: T) -> Self {
        Matrix { n, data: vec![v; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

pub fn identity<S: Semiring>(s: &S, n: usize) -> Matrix<S::Elem> {
    Matrix::from_fn(n, |i, j| if i == j { s.one() } else { s.zero() })
}

pub fn add<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    check_dims(a.n, b.n)?;
    let data = a.data.iter().zip(&b.data).map(|(x, y)| s.plus(x, y)).collect();
    Ok(Matrix { n: a.n, data })
}

/// `c_ij = Σ_k a_ik · b_kj`, rows in parallel.
pub fn product<S: Semiring>(s: &S, a: &Matrix<S::Elem>, b: &Matrix<S::Elem>) -> Result<Matrix<S::Elem>> {
    check_dims(a.n, b.n)?;
    let n = a.n;
    let data = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (0..n).map(move |j| {
                (0..n).fold(s.zero(), |acc, k| s.plus(&acc, &s.times(a.get(i, k), b.get(k, j))))
            })
        })
        .collect();
    Ok(Matrix { n, data })
}

pub fn minplus_product(a: &DistMatrix, b: &DistMatrix) -> Result<DistMatrix> {
    product(&MinPlus, a, b)
}

pub fn maxmin_product(a: &CapMatrix, b: &CapMatrix) -> Result<CapMatrix> {
    product(&MaxMin, a, b)
}

/// Closure by repeated squaring: `(I + A)^k` for the first power of two k ≥ n − 1.
pub fn matrix_closure<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Matrix<S::Elem> {
    let mut c = add(s, &identity(s, a.n), a).unwrap();
    let mut reach = 1;
    while reach + 1 < a.n {
        c = product(s, &c, &c).unwrap();
        reach *= 2;
    }
    c
}

/// Closure by the generalized Floyd triple loop: `A ← A + I`, then for each k
/// `a_ij ← a_ij + a_ik · a_kj`.
///
/// Row k and column k are frozen before each round; since `a_kk` contains the
/// semi-ring one after `A + I`, they cannot change within the round, so rows
/// may be relaxed in parallel without changing the result.
pub fn floyd_closure<S: Semiring>(s: &S, a: &Matrix<S::Elem>) -> Matrix<S::Elem> {
    let n = a.n;
    let mut m = add(s, &identity(s, n), a).unwrap();
    if n == 0 {
        return m;
    }
    for k in 0..n {
        let row_k: Vec<S::Elem> = m.row(k).to_vec();
        let col_k: Vec<S::Elem> = (0..n).map(|i| m.get(i, k).clone()).collect();
        let zero = s.zero();
        m.data.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            let a_ik = &col_k[i];
            if *a_ik == zero {
                return;
            }
            for (a_ij, a_kj) in row.iter_mut().zip(&row_k) {
                let through = s.times(a_ik, a_kj);
                *a_ij = s.plus(a_ij, &through);
            }
        });
    }
    m
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

/// Edge-cost matrix: cheapest parallel edge per pair, ∞ where no edge.
pub fn cost_matrix(g: &Graph) -> DistMatrix {
    let mut m = Matrix::filled(g.n(), Infinite);
    for e in g.edges() {
        let v = MinPlus.plus(m.get(e.from, e.to), &Finite(e.cost));
        m.set(e.from, e.to, v);
    }
    m
}

/// Edge-capacity matrix: widest parallel edge per pair, 0 where no edge.
pub fn capacity_matrix(g: &Graph) -> CapMatrix {
    let mut m = Matrix::filled(g.n(), Flow::ZERO);
    for e in g.edges() {
        let v = MaxMin.plus(m.get(e.from, e.to), &Finite(e.cap));
        m.set(e.from, e.to, v);
    }
    m
}

/// All-pairs shortest distances.
pub fn apsp(g: &Graph) -> DistMatrix {
    matrix_closure(&MinPlus, &cost_matrix(g))
}

/// All-pairs bottleneck (widest-path) values.
pub fn apbp(g: &Graph) -> CapMatrix {
    matrix_closure(&MaxMin, &capacity_matrix(g))
}
