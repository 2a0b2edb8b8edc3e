//! Bit-packed square Boolean matrices.
//!
//! Rows are stored as `u64` words; bits past column `n` in each row's last
//! word are always zero.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// Which lines of the matrix the center predicate inspects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
    Both,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        BoolMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.fill_row(i);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n);
        self.bits[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        assert!(i < self.n && j < self.n);
        let w = &mut self.bits[i * self.words + j / WORD];
        let mask = 1u64 << (j % WORD);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn fill_row(&mut self, i: usize) {
        let words = self.words;
        let tail = self.tail_mask();
        let row = &mut self.bits[i * words..(i + 1) * words];
        row.fill(u64::MAX);
        if let Some(last) = row.last_mut() {
            *last = tail;
        }
    }

    fn tail_mask(&self) -> u64 {
        match self.n % WORD {
            0 => u64::MAX,
            r => (1u64 << r) - 1,
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True iff no bit beyond column `n` is set.
    pub fn padding_is_clean(&self) -> bool {
        if self.words == 0 {
            return true;
        }
        let tail = self.tail_mask();
        (0..self.n).all(|i| self.row(i)[self.words - 1] & !tail == 0)
    }

    fn row_is_full(&self, i: usize) -> bool {
        let row = self.row(i);
        let (last, body) = row.split_last().expect("n > 0");
        body.iter().all(|&w| w == u64::MAX) && *last == self.tail_mask()
    }

    fn column_is_full(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j))
    }

    /// Entrywise OR.
    pub fn or(&self, other: &BoolMatrix) -> Result<BoolMatrix> {
        check_dims(self.n, other.n)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        Ok(BoolMatrix { n: self.n, words: self.words, bits })
    }

    pub fn transpose(&self) -> BoolMatrix {
        BoolMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix({})", self.n)?;
        for i in 0..self.n {
            let line: String = (0..self.n).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Boolean product: for every set bit k of row i of `x`, OR row k of `y`
/// into row i of the result. Rows are computed in parallel.
pub fn bool_multiply(x: &BoolMatrix, y: &BoolMatrix) -> Result<BoolMatrix> {
    check_dims(x.n, y.n)?;
    let words = x.words;
    let mut z = BoolMatrix::zeros(x.n);
    if words == 0 {
        return Ok(z);
    }
    z.bits.par_chunks_mut(words).enumerate().for_each(|(i, out)| {
        for (wi, &word) in x.row(i).iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let k = wi * WORD + w.trailing_zeros() as usize;
                w &= w - 1;
                for (o, &yw) in out.iter_mut().zip(y.row(k)) {
                    *o |= yw;
                }
            }
        }
    });
    Ok(z)
}

/// `[B, B², B⁴, ..., B^max_exp]` by repeated squaring.
pub fn power_table(b: &BoolMatrix, max_exp: usize) -> Result<Vec<BoolMatrix>> {
    if !max_exp.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(max_exp));
    }
    let mut table = vec![b.clone()];
    let mut e = 1;
    while e < max_exp {
        let last = table.last().unwrap();
        table.push(bool_multiply(last, last)?);
        e *= 2;
    }
    Ok(table)
}

/// Reflexive-transitive closure: `(I ∨ B)^k` for some k ≥ n − 1, via squaring.
pub fn transitive_closure(b: &BoolMatrix) -> BoolMatrix {
    let mut c = b.or(&BoolMatrix::identity(b.n)).unwrap();
    let mut reach = 1;
    while reach + 1 < b.n {
        c = bool_multiply(&c, &c).unwrap();
        reach *= 2;
    }
    c
}

/// Finds the smallest index whose row (or column, or both) is all ones.
pub fn p_predicate(c: &BoolMatrix, orientation: Orientation) -> Option<usize> {
    (0..c.n).find(|&i| match orientation {
        Orientation::Row => c.row_is_full(i),
        Orientation::Column => c.column_is_full(i),
        Orientation::Both => c.row_is_full(i) && c.column_is_full(i),
    })
}

pub fn is_all_ones(b: &BoolMatrix) -> bool {
    (0..b.n).all(|i| b.row_is_full(i))
}
