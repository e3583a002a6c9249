//! Completeness checks.
//!
//! Two routes that must always agree: [`is_complete_direct`] marks every
//! edge each biclique contains, [`is_complete_matrix`] builds the
//! `{0, 1, *}` vertex-by-biclique matrix and looks for a pair of rows with
//! no column holding a 0 against a 1.

use std::fmt;

use crate::error::CoverError;
use crate::model::Covering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Complete,
    /// Smallest pair `(u, v)`, `u < v`, that is not covered.
    Uncovered(u32, u32),
}

impl Coverage {
    pub fn is_complete(&self) -> bool {
        matches!(self, Coverage::Complete)
    }

    pub fn witness(&self) -> Option<(u32, u32)> {
        match *self {
            Coverage::Complete => None,
            Coverage::Uncovered(u, v) => Some((u, v)),
        }
    }
}

/// Fixed-width rows of bits, stored word-packed.
struct BitRows {
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    fn new(rows: usize, width: usize) -> Self {
        let words = width.div_ceil(64);
        BitRows {
            words,
            data: vec![0; rows * words],
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    fn set(&mut self, r: usize, bit: usize) {
        self.data[r * self.words + bit / 64] |= 1 << (bit % 64);
    }

    fn get(&self, r: usize, bit: usize) -> bool {
        self.data[r * self.words + bit / 64] >> (bit % 64) & 1 == 1
    }

    fn or_into(&mut self, r: usize, mask: &[u64]) {
        let row = &mut self.data[r * self.words..(r + 1) * self.words];
        for (w, m) in row.iter_mut().zip(mask) {
            *w |= *m;
        }
    }
}

fn mask_of(members: impl Iterator<Item = u32>, words: usize) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for v in members {
        mask[v as usize / 64] |= 1 << (v % 64);
    }
    mask
}

/// Checks every pair `{u, v}` against the edges the bicliques contain.
pub fn is_complete_direct(cov: &Covering) -> Result<Coverage, CoverError> {
    cov.ensure_valid()?;
    let n = cov.n as usize;
    let mut adj = BitRows::new(n, n);
    for b in &cov.bicliques {
        let left = mask_of(b.left.iter(), adj.words);
        let right = mask_of(b.right.iter(), adj.words);
        for u in b.left.iter() {
            adj.or_into(u as usize, &right);
        }
        for v in b.right.iter() {
            adj.or_into(v as usize, &left);
        }
    }
    for u in 0..n {
        let row = adj.row(u);
        for v in u + 1..n {
            if row[v / 64] >> (v % 64) & 1 == 0 {
                return Ok(Coverage::Uncovered(u as u32, v as u32));
            }
        }
    }
    Ok(Coverage::Complete)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Zero,
    One,
    Star,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Star => '*',
        }
    }
}

/// The `n × c` matrix with one row per vertex and one column per biclique:
/// `0` in the left component, `1` in the right, `*` elsewhere.
pub struct RowMatrix {
    rows: usize,
    cols: usize,
    zeros: BitRows,
    ones: BitRows,
}

impl RowMatrix {
    pub fn build(cov: &Covering) -> Result<Self, CoverError> {
        cov.ensure_valid()?;
        let rows = cov.n as usize;
        let cols = cov.bicliques.len();
        let mut zeros = BitRows::new(rows, cols);
        let mut ones = BitRows::new(rows, cols);
        for (i, b) in cov.bicliques.iter().enumerate() {
            for v in b.left.iter() {
                zeros.set(v as usize, i);
            }
            for v in b.right.iter() {
                ones.set(v as usize, i);
            }
        }
        Ok(RowMatrix {
            rows,
            cols,
            zeros,
            ones,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Symbol {
        if self.zeros.get(row, col) {
            Symbol::Zero
        } else if self.ones.get(row, col) {
            Symbol::One
        } else {
            Symbol::Star
        }
    }

    /// Number of `*` entries in `row`.
    pub fn star_count(&self, row: usize) -> u32 {
        let filled: u32 = self
            .zeros
            .row(row)
            .iter()
            .zip(self.ones.row(row))
            .map(|(z, o)| (z | o).count_ones())
            .sum();
        self.cols as u32 - filled
    }

    /// Some column has a 0 in one row and a 1 in the other.
    pub fn distinguishable(&self, a: usize, b: usize) -> bool {
        let (za, oa) = (self.zeros.row(a), self.ones.row(a));
        let (zb, ob) = (self.zeros.row(b), self.ones.row(b));
        (0..za.len()).any(|w| (za[w] & ob[w]) | (oa[w] & zb[w]) != 0)
    }

    pub fn row_string(&self, row: usize) -> String {
        (0..self.cols).map(|c| self.get(row, c).as_char()).collect()
    }
}

impl fmt::Display for RowMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{r:>4}  {}", self.row_string(r))?;
        }
        Ok(())
    }
}

/// Checks that every two rows of the covering matrix are distinguishable.
pub fn is_complete_matrix(cov: &Covering) -> Result<Coverage, CoverError> {
    let m = RowMatrix::build(cov)?;
    for a in 0..m.rows {
        for b in a + 1..m.rows {
            if !m.distinguishable(a, b) {
                return Ok(Coverage::Uncovered(a as u32, b as u32));
            }
        }
    }
    Ok(Coverage::Complete)
}
