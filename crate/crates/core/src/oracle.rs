//! Brute-force linear algebra on truncated graded pieces, kept independent
//! of the Gröbner and Hilbert engines it is used to check.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::Matrix;
use crate::poly::{PolyRing, Polynomial};

/// Exponent vectors of weighted degree `n`, in lexicographic order.
fn enumerate(weights: &[i64], n: i64) -> Vec<Vec<u32>> {
    fn go(weights: &[i64], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        let mut e = 0u32;
        loop {
            let used = w * e as i64;
            if used > left {
                break;
            }
            cur.push(e);
            go(weights, i + 1, left - used, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if n >= 0 && weights.iter().all(|&w| w > 0) {
        go(weights, 0, n, &mut Vec::new(), &mut out);
    }
    out
}

fn sparse<F: Field>(p: &Polynomial<F>) -> Vec<(Vec<u32>, F)> {
    p.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
        .collect()
}

fn homogeneous_degree<F: Field>(ring: &PolyRing, p: &Polynomial<F>) -> Result<Option<i64>> {
    let mut deg = None;
    for (m, _) in p.terms() {
        let d: i64 = m.exponents().iter().zip(ring.weights()).map(|(e, w)| *e as i64 * w).sum();
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return Err(Error::NotGraded(format!("{p} is not homogeneous"))),
            _ => {}
        }
    }
    Ok(deg)
}

/// Row echelon form over `F`, rows kept with a pivot column.
struct Rows<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Rows<F> {
    fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (piv, row) in &self.rows {
            if v[*piv].is_zero() {
                continue;
            }
            let k = v[*piv].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= k.clone() * y.clone();
                }
            }
        }
        v
    }

    /// Adds `v` to the span; true when the rank grows.
    fn insert(&mut self, v: Vec<F>) -> bool {
        let v = self.reduce(v);
        let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[piv].inv().expect("nonzero pivot");
        let v: Vec<F> = v.into_iter().map(|x| x * inv.clone()).collect();
        for (_, row) in &mut self.rows {
            if !row[piv].is_zero() {
                let k = row[piv].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= k.clone() * y.clone();
                }
            }
        }
        self.rows.push((piv, v));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Span of `{m·g : deg(m·g) = n}` as echelon rows over the monomials of
/// degree `n`.
fn degree_span<F: Field>(
    ring: &PolyRing,
    gens: &[(i64, Vec<(Vec<u32>, F)>)],
    n: i64,
) -> (HashMap<Vec<u32>, usize>, Rows<F>) {
    let basis = enumerate(ring.weights(), n);
    let index: HashMap<Vec<u32>, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Rows { rows: Vec::new() };
    for (d, g) in gens {
        for m in enumerate(ring.weights(), n - d) {
            let mut v = vec![F::zero(); basis.len()];
            for (e, c) in g {
                let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                v[index[&prod]] += c.clone();
            }
            rows.insert(v);
            if rows.rank() == basis.len() {
                return (index, rows);
            }
        }
    }
    (index, rows)
}

fn prepare<F: Field>(ring: &PolyRing, gens: &[Polynomial<F>]) -> Result<Vec<(i64, Vec<(Vec<u32>, F)>)>> {
    let mut out = Vec::new();
    for g in gens {
        if let Some(d) = homogeneous_degree(ring, g)? {
            out.push((d, sparse(g)));
        }
    }
    Ok(out)
}

/// Whether homogeneous `p` lies in the span of `m·g` in its own degree.
pub fn oracle_membership<F: Field>(p: &Polynomial<F>, gens: &[Polynomial<F>], bound: i64) -> Result<bool> {
    let ring = p.ring();
    let Some(n) = homogeneous_degree(ring, p)? else {
        return Ok(true);
    };
    if n > bound {
        return Err(Error::ResourceLimit(format!("degree {n} exceeds the oracle bound {bound}")));
    }
    let gens = prepare(ring, gens)?;
    let (index, rows) = degree_span(ring, &gens, n);
    let mut v = vec![F::zero(); index.len()];
    for (e, c) in sparse(p) {
        v[index[&e]] += c;
    }
    Ok(rows.reduce(v).iter().all(|x| x.is_zero()))
}

/// `dim_k (P/(gens))_n` for `n = 0..=bound`.
pub fn oracle_hilbert<F: Field>(ring: &PolyRing, gens: &[Polynomial<F>], bound: i64) -> Result<Vec<u64>> {
    let gens = prepare(ring, gens)?;
    Ok((0..=bound)
        .map(|n| {
            let (index, rows) = degree_span(ring, &gens, n);
            (index.len() - rows.rank()) as u64
        })
        .collect())
}

/// Determinant by cofactor expansion along the first row.
pub fn oracle_determinant<F: Field>(m: &Matrix<F>) -> Result<Polynomial<F>> {
    if m.nrows() != m.ncols() {
        return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
    }
    let rows = m.rows();
    Ok(cofactor(m.ring(), &rows, &(0..m.ncols()).collect::<Vec<_>>()))
}

fn cofactor<F: Field>(ring: &std::sync::Arc<PolyRing>, rows: &[Vec<Polynomial<F>>], cols: &[usize]) -> Polynomial<F> {
    if cols.is_empty() {
        return Polynomial::one(ring);
    }
    let mut acc = Polynomial::zero(ring);
    let k = rows.len() - cols.len();
    for (i, &c) in cols.iter().enumerate() {
        let entry = &rows[k][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &cofactor(ring, rows, &rest);
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
