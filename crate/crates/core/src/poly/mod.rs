//! Sparse multivariate polynomials over a [`Field`].

mod monomial;
mod ring;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub use monomial::Monomial;
pub use ring::{MonomialOrder, PolyRing};

use crate::error::{Error, Result};
use crate::field::Field;

/// Polynomial with terms strictly sorted descending in the ring's order and
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F> {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: F) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), F::one())
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicate
    /// monomials and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms already sorted and nonzero; checked in debug builds.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &F)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term under an explicit order (the polynomial's own ring order
    /// is not changed).
    pub fn leading_term_in(&self, order: &MonomialOrder) -> Result<(Monomial, F)> {
        let r = self.ring.with_order(order.clone())?;
        self.terms
            .iter()
            .max_by(|a, b| r.cmp_monomials(&a.0, &b.0))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|t| self.ring.cmp_monomials(m, &t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// Maximum weighted degree (`None` for zero) and homogeneity.
    pub fn degree_info(&self) -> (Option<i64>, bool) {
        let mut degs = self.terms.iter().map(|t| self.ring.degree(&t.0));
        let Some(first) = degs.next() else {
            return (None, true);
        };
        let (mut max, mut homog) = (first, true);
        for d in degs {
            homog &= d == first;
            max = max.max(d);
        }
        (Some(max), homog)
    }

    pub fn degree(&self) -> Option<i64> {
        self.degree_info().0
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_info().1
    }

    /// Least weighted degree of a term.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.iter().map(|t| self.ring.degree(&t.0)).min()
    }

    /// Homogeneous for both gradings.
    pub fn is_bihomogeneous(&self) -> bool {
        let Some((m, _)) = self.terms.first() else {
            return true;
        };
        let (d1, d2) = (self.ring.degree(m), self.ring.degree2(m));
        self.terms
            .iter()
            .all(|t| self.ring.degree(&t.0) == d1 && self.ring.degree2(&t.0) == d2)
    }

    /// (secondary, primary) degree of the leading term.
    pub fn bidegree(&self) -> Option<(i64, i64)> {
        self.terms
            .first()
            .map(|t| (self.ring.degree2(&t.0), self.ring.degree(&t.0)))
    }

    /// Homogeneous component of primary degree `d`.
    pub fn component(&self, d: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| self.ring.degree(&t.0) == d)
            .cloned()
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].1.clone() - b[j].1.clone()
                    } else {
                        a[i].1.clone() + b[j].1.clone()
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.merge(&big.mul_term(m, c), false);
        }
        acc
    }

    /// `self * c * m`; the term order is preserved by monomial multiplication.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), tc.clone() * c.clone()))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Scaled to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Re-sorts the terms for a ring with the same variables but possibly a
    /// different order.
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> Result<Self> {
        if !ring.same_variables(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if *ring.order() == *self.ring.order() {
            return Ok(Polynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `map[i]`. Every occurring variable must be mapped.
    pub fn map_variables(&self, target: &Arc<PolyRing>, map: &[usize]) -> Self {
        let mut back = vec![None; target.nvars()];
        for (i, &j) in map.iter().enumerate() {
            back[j] = Some(i);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!((0..m.nvars()).all(|i| m.exp(i) == 0 || i < map.len()));
                (m.remap(&back), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Moves into a ring whose first variables coincide with ours.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Self {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_variables(target, &map)
    }

    /// Restricts to a ring whose variables are the first `target.nvars()`
    /// of ours; `None` if another variable occurs.
    pub fn restrict(&self, target: &Arc<PolyRing>) -> Option<Self> {
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if (n..m.nvars()).any(|i| m.exp(i) > 0) {
                return None;
            }
            terms.push((Monomial::from_exponents(&m.exponents()[..n]), c.clone()));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Substitutes `images[i]` for variable `i`; images live in a common ring.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or_else(|| Error::InvalidInput("empty substitution".into()))?;
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidInput("one image per variable required".into()));
        }
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.try_mul(&images[i].pow(e))?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Exact quotient by a monomial when it divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let terms: Option<Vec<_>> = self
            .terms
            .iter()
            .map(|(tm, c)| tm.div(m).map(|q| (q, c.clone())))
            .collect();
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: terms?,
        })
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading_term().ok()?;
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = m.div(dm)?;
            let k = c.clone() * dinv.clone();
            rem = rem.merge(&d.mul_term(&q, &k), true);
            quot.push((q, k));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                seen[i] |= e > 0;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_variables(&other.ring)
            && if *self.ring.order() == *other.ring.order() {
                self.terms == other.terms
            } else {
                other
                    .with_ring(&self.ring)
                    .is_ok_and(|o| o.terms == self.terms)
            }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Hash for Polynomial<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.names().hash(state);
        self.terms.hash(state);
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text form: terms in descending order, `*` between factors,
/// coefficient first, rational coefficients as `a/b`. The output is valid
/// input for the expression parser.
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = self.ring.monomial_to_string(m);
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl<F: Field> $tr<&Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics on ring mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                self.$call(rhs).expect("ring mismatch")
            }
        }
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, try_add);
impl_binop!(Sub, sub, try_sub);
impl_binop!(Mul, mul, try_mul);

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}
