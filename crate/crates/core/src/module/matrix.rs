use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};

/// Dense matrix of polynomials, stored by columns.
#[derive(Clone)]
pub struct Matrix<F> {
    ring: Arc<PolyRing>,
    nrows: usize,
    cols: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nrows == other.nrows && self.cols == other.cols
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.nrows)
            .map(|i| self.cols.iter().map(|c| c[i].to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

impl<F: Field> Matrix<F> {
    pub fn from_columns(ring: &Arc<PolyRing>, nrows: usize, cols: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        if cols.iter().any(|c| c.len() != nrows) {
            return Err(Error::InvalidInput("column length differs from the row count".into()));
        }
        let mut out = Vec::with_capacity(cols.len());
        for c in cols {
            out.push(c.iter().map(|p| p.with_ring(ring)).collect::<Result<Vec<_>>>()?);
        }
        Ok(Matrix {
            ring: ring.clone(),
            nrows,
            cols: out,
        })
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        let cols = (0..ncols)
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Self::from_columns(ring, nrows, cols)
    }

    pub fn zeros(ring: &Arc<PolyRing>, nrows: usize, ncols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            nrows,
            cols: vec![vec![Polynomial::zero(ring); nrows]; ncols],
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.cols[i][i] = Polynomial::one(ring);
        }
        m
    }

    /// The `1 × n` matrix with the given entries.
    pub fn row_vector(ring: &Arc<PolyRing>, entries: Vec<Polynomial<F>>) -> Result<Self> {
        Self::from_columns(ring, 1, entries.into_iter().map(|e| vec![e]).collect())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.cols[j][i]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        self.cols[j][i] = p;
    }

    pub fn column(&self, j: usize) -> &[Polynomial<F>] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial<F>>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial<F>>> {
        self.cols
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.nrows)
            .map(|i| self.cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.ncols(),
            cols: self.rows(),
        }
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.ncols() != other.nrows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        let mut cols = Vec::with_capacity(other.ncols());
        for oc in &other.cols {
            let mut col = vec![Polynomial::zero(&self.ring); self.nrows];
            for (k, b) in oc.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (i, slot) in col.iter_mut().enumerate() {
                    let a = &self.cols[k][i];
                    if !a.is_zero() {
                        *slot = &*slot + &(a * b);
                    }
                }
            }
            cols.push(col);
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols,
        })
    }

    /// Columns of `self` followed by those of `other`.
    pub fn hstack(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.nrows != other.nrows {
            return Err(Error::InvalidInput("row counts differ".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols,
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix<F> {
        Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<F> {
        Matrix {
            ring: self.ring.clone(),
            nrows: idx.len(),
            cols: self
                .cols
                .iter()
                .map(|c| idx.iter().map(|&i| c[i].clone()).collect())
                .collect(),
        }
    }

    pub fn map_entries(&self, mut f: impl FnMut(&Polynomial<F>) -> Result<Polynomial<F>>) -> Result<Matrix<F>> {
        let mut cols = Vec::with_capacity(self.cols.len());
        for c in &self.cols {
            cols.push(c.iter().map(&mut f).collect::<Result<Vec<_>>>()?);
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            nrows: self.nrows,
            cols,
        })
    }

    /// All nonzero `t × t` minors, rows and columns in lexicographic subset
    /// order. `t = 0` gives `[1]`.
    pub fn minors(&self, t: usize) -> Vec<Polynomial<F>> {
        if t == 0 {
            return vec![Polynomial::one(&self.ring)];
        }
        if t > self.nrows || t > self.ncols() {
            return Vec::new();
        }
        let mut memo: HashMap<(u64, u64), Polynomial<F>> = HashMap::new();
        let mut out = Vec::new();
        for rows in subsets(self.nrows, t) {
            for cols in subsets(self.ncols(), t) {
                let d = self.minor_memo(&rows, &cols, &mut memo);
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Determinant of the submatrix on the given rows and columns, by
    /// Laplace expansion along the first column.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        let mut memo = HashMap::new();
        self.minor_memo(rows, cols, &mut memo)
    }

    fn minor_memo(
        &self,
        rows: &[usize],
        cols: &[usize],
        memo: &mut HashMap<(u64, u64), Polynomial<F>>,
    ) -> Polynomial<F> {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Polynomial::one(&self.ring);
        }
        if rows.len() == 1 {
            return self.cols[cols[0]][rows[0]].clone();
        }
        let key = (mask(rows), mask(cols));
        if let Some(d) = memo.get(&key) {
            return d.clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let c0 = cols[0];
        for (k, &r) in rows.iter().enumerate() {
            let a = &self.cols[c0][r];
            if a.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let sub = self.minor_memo(&sub_rows, &cols[1..], memo);
            let term = a * &sub;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        memo.insert(key, acc.clone());
        acc
    }

    pub fn determinant(&self) -> Result<Polynomial<F>> {
        if self.nrows != self.ncols() {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.nrows).collect();
        Ok(self.minor(&idx, &idx))
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |m, &i| m | (1 << i))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
