use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::subsets;
use crate::poly::{PolyRing, Polynomial};

/// Homogeneous element of `Λ^k(R^r)`, keyed by sorted `k`-subsets of `0..r`.
#[derive(Clone, Debug)]
pub struct WedgeElement<F: Field> {
    ring: Arc<PolyRing>,
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Polynomial<F>>,
}

impl<F: Field> PartialEq for WedgeElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.degree == other.degree && self.coeffs == other.coeffs
    }
}

/// Sign of the shuffle putting `a ++ b` in increasing order; `None` when
/// they share an index.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut inversions = 0usize;
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            merged.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            merged.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((inversions % 2 == 1, merged))
}

impl<F: Field> WedgeElement<F> {
    pub fn zero(ring: &Arc<PolyRing>, rank: usize, degree: usize) -> Self {
        WedgeElement {
            ring: ring.clone(),
            rank,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit `1 ∈ Λ^0`.
    pub fn one(ring: &Arc<PolyRing>, rank: usize) -> Self {
        let mut w = Self::zero(ring, rank, 0);
        w.coeffs.insert(Vec::new(), Polynomial::one(ring));
        w
    }

    /// `Σ v_i e_i`.
    pub fn from_vector(ring: &Arc<PolyRing>, v: &[Polynomial<F>]) -> Self {
        let mut w = Self::zero(ring, v.len(), 1);
        for (i, p) in v.iter().enumerate() {
            w.add_term(vec![i], p.clone());
        }
        w
    }

    /// Coordinates on the basis `subsets(rank, degree)`.
    pub fn from_column(ring: &Arc<PolyRing>, rank: usize, degree: usize, col: &[Polynomial<F>]) -> Result<Self> {
        let basis = subsets(rank, degree);
        if basis.len() != col.len() {
            return Err(Error::DegreeMismatch(format!(
                "column of length {} is not in Λ^{degree} of rank {rank}",
                col.len()
            )));
        }
        let mut w = Self::zero(ring, rank, degree);
        for (s, p) in basis.into_iter().zip(col) {
            w.add_term(s, p.clone());
        }
        Ok(w)
    }

    pub fn to_column(&self) -> Vec<Polynomial<F>> {
        subsets(self.rank, self.degree)
            .iter()
            .map(|s| self.coefficient(s))
            .collect()
    }

    fn add_term(&mut self, key: Vec<usize>, p: Polynomial<F>) {
        if p.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&key) {
            Some(q) => &q + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.coeffs.insert(key, sum);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, subset: &[usize]) -> Polynomial<F> {
        self.coeffs
            .get(subset)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial<F>)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank || self.degree != other.degree {
            return Err(Error::DegreeMismatch("adding wedges of different shape".into()));
        }
        let mut out = self.clone();
        for (k, p) in &other.coeffs {
            out.add_term(k.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, p: &Polynomial<F>) -> Self {
        let mut out = Self::zero(&self.ring, self.rank, self.degree);
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), c * p);
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::DegreeMismatch("wedge of different ranks".into()));
        }
        let degree = self.degree + other.degree;
        let mut out = Self::zero(&self.ring, self.rank, degree);
        if degree > self.rank {
            return Ok(out);
        }
        for (a, p) in &self.coeffs {
            for (b, q) in &other.coeffs {
                if let Some((negative, key)) = merge_sign(a, b) {
                    let t = p * q;
                    out.add_term(key, if negative { -t } else { t });
                }
            }
        }
        Ok(out)
    }
}

/// Coefficient of `e_1 ∧ … ∧ e_r` in the product of `elts`.
pub fn wedge_coefficient<F: Field>(elts: &[WedgeElement<F>]) -> Result<Polynomial<F>> {
    let Some(first) = elts.first() else {
        return Err(Error::DegreeMismatch("empty wedge".into()));
    };
    let r = first.rank;
    let total: usize = elts.iter().map(|w| w.degree).sum();
    if total != r {
        return Err(Error::DegreeMismatch(format!("exterior degree {total}, expected {r}")));
    }
    let mut acc = WedgeElement::one(&first.ring, r);
    for w in elts {
        acc = acc.wedge(w)?;
        if acc.is_zero() {
            return Ok(Polynomial::zero(&first.ring));
        }
    }
    let top: Vec<usize> = (0..r).collect();
    Ok(acc.coefficient(&top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::io::parse_polynomial;

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial<Rational> {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!(merge_sign(&[1], &[0]), Some((true, vec![0, 1])));
        assert_eq!(merge_sign(&[0, 2], &[1]), Some((true, vec![0, 1, 2])));
        assert_eq!(merge_sign(&[0], &[1, 2]), Some((false, vec![0, 1, 2])));
        assert_eq!(merge_sign(&[1], &[1]), None);
    }

    #[test]
    fn top_coefficient_is_determinant() {
        let r = PolyRing::new(&["a", "b", "c", "d"]).unwrap().into_arc();
        let z1 = WedgeElement::from_vector(&r, &[p(&r, "a"), p(&r, "c")]);
        let z2 = WedgeElement::from_vector(&r, &[p(&r, "b"), p(&r, "d")]);
        assert_eq!(wedge_coefficient(&[z1.clone(), z2]).unwrap(), p(&r, "a*d - b*c"));
        assert!(wedge_coefficient(&[z1.clone(), z1]).unwrap().is_zero());
    }

    #[test]
    fn explicit_sign() {
        let r = PolyRing::new(&["x", "y"]).unwrap().into_arc();
        let u = WedgeElement::from_vector(&r, &[p(&r, "x"), p(&r, "y")]);
        let e1 = WedgeElement::from_vector(&r, &[p(&r, "1"), p(&r, "0")]);
        assert_eq!(wedge_coefficient(&[u, e1]).unwrap(), p(&r, "-y"));
    }

    #[test]
    fn degree_mismatch() {
        let r = PolyRing::new(&["x"]).unwrap().into_arc();
        let u = WedgeElement::from_vector(&r, &[p(&r, "x"), p(&r, "1")]);
        assert!(wedge_coefficient(&[u]).is_err());
    }
}
