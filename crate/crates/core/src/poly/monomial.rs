use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial; its length equals the number of ring variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 10]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = exp;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Unweighted total degree.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    #[inline]
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit signature for fast non-divisibility rejection: bit `i` set iff
    /// variable `i mod 64` occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    /// Appends `extra` zero exponents.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        Monomial(v)
    }

    /// Exponents re-indexed: entry `i` of the result is `self[map[i]]`, or 0
    /// when `map[i]` is `None`.
    pub fn remap(&self, map: &[Option<usize>]) -> Monomial {
        Monomial(
            map.iter()
                .map(|src| src.map(|j| self.0[j]).unwrap_or(0))
                .collect(),
        )
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Graded reverse lexicographic comparison restricted to the variables for
/// which `keep(i)` holds.
#[inline]
pub(crate) fn grevlex_cmp(
    a: &Monomial,
    b: &Monomial,
    weights: &[i64],
    keep: impl Fn(usize) -> bool,
) -> Ordering {
    let mut da = 0i64;
    let mut db = 0i64;
    for i in 0..a.0.len() {
        if keep(i) {
            da += a.0[i] as i64 * weights[i];
            db += b.0[i] as i64 * weights[i];
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.0.len()).rev() {
        if keep(i) && a.0[i] != b.0[i] {
            return b.0[i].cmp(&a.0[i]);
        }
    }
    Ordering::Equal
}

#[inline]
pub(crate) fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for i in 0..a.0.len() {
        if a.0[i] != b.0[i] {
            return a.0[i].cmp(&b.0[i]);
        }
    }
    Ordering::Equal
}
