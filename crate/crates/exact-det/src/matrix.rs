//! Dense row-major matrices over a ring.

use crate::error::{Error, Result};
use crate::ring::Ring;
use rand::Rng;

#[derive(Clone, Debug)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, entries: Vec<R::Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::BadParameter(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { ring, rows, cols, entries })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let m = rows[0].len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::BadParameter("ragged rows".into()));
        }
        Matrix::new(ring, n, m, rows.into_iter().flatten().collect())
    }

    /// Integer literal constructor, handy for fixtures over any ring.
    pub fn from_i64_rows(ring: R, rows: &[Vec<i64>]) -> Result<Self> {
        let converted: Result<Vec<Vec<R::Elem>>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(ring, converted?)
    }

    pub fn random<G: Rng + ?Sized>(
        ring: R,
        rows: usize,
        cols: usize,
        rng: &mut G,
        bound: i64,
    ) -> Result<Self> {
        let entries = (0..rows * cols).map(|_| ring.sample(rng, bound)).collect();
        Matrix::new(ring, rows, cols, entries)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    pub fn at(&self, i: usize, j: usize) -> &R::Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    /// Applies a conversion to every entry, producing a matrix over another
    /// ring.
    pub fn map<S: Ring>(&self, ring: S, f: impl FnMut(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}
