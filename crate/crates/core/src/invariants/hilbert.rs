use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Monomial;

/// `N(z) / ∏ (1 - z^w)` with an integer Laurent numerator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Exponent of the first numerator coefficient.
    shift: i64,
    coeffs: Vec<i128>,
    weights: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero(weights: &[i64]) -> Self {
        HilbertSeries {
            shift: 0,
            coeffs: Vec::new(),
            weights: weights.to_vec(),
        }
    }

    /// Series of `⊕ P(-d)` over a polynomial ring with the given weights.
    pub fn free(degrees: &[i64], weights: &[i64]) -> Self {
        let mut s = Self::zero(weights);
        for &d in degrees {
            s = s.add(&Self::from_numerator(d, vec![1], weights));
        }
        s
    }

    pub fn from_numerator(shift: i64, coeffs: Vec<i128>, weights: &[i64]) -> Self {
        let mut s = HilbertSeries {
            shift,
            coeffs,
            weights: weights.to_vec(),
        };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| **c == 0).count();
        self.coeffs.drain(..lead);
        self.shift += lead as i64;
        if self.coeffs.is_empty() {
            self.shift = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(shift, coefficients)` of the numerator.
    pub fn numerator(&self) -> (i64, &[i128]) {
        (self.shift, &self.coeffs)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.weights, other.weights, "series over different rings");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let hi = (self.shift + self.coeffs.len() as i64).max(other.shift + other.coeffs.len() as i64);
        let mut coeffs = vec![0i128; (hi - lo) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.shift - lo) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.shift - lo) as usize + k] += c;
        }
        Self::from_numerator(lo, coeffs, &self.weights)
    }

    pub fn neg(&self) -> HilbertSeries {
        HilbertSeries {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            weights: self.weights.clone(),
        }
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.add(&other.neg())
    }

    /// Multiplies by `z^d`.
    pub fn shifted(&self, d: i64) -> HilbertSeries {
        let mut s = self.clone();
        if !s.is_zero() {
            s.shift += d;
        }
        s
    }

    /// Coefficients of the expansion for degrees `0..=n_max`.
    pub fn expand(&self, n_max: i64) -> Vec<i128> {
        self.expand_range(0, n_max)
    }

    /// Coefficients of the expansion for degrees `lo..=hi`.
    pub fn expand_range(&self, lo: i64, hi: i64) -> Vec<i128> {
        if hi < lo {
            return Vec::new();
        }
        if self.is_zero() || hi < self.shift {
            return vec![0; (hi - lo + 1) as usize];
        }
        let len = (hi - self.shift + 1) as usize;
        let mut series = vec![0i128; len];
        for (k, c) in self.coeffs.iter().enumerate().take(len) {
            series[k] = *c;
        }
        for &w in &self.weights {
            let w = w as usize;
            for k in w..len {
                series[k] += series[k - w];
            }
        }
        (lo..=hi)
            .map(|n| if n < self.shift { 0 } else { series[(n - self.shift) as usize] })
            .collect()
    }

    /// Value of the Hilbert function in degree `n`.
    pub fn coefficient(&self, n: i64) -> i128 {
        self.expand_range(n, n)[0]
    }

    /// Krull dimension: order of the pole at `z = 1`, or `-1` for zero.
    pub fn dimension(&self) -> i64 {
        if self.is_zero() {
            return -1;
        }
        let (k, _) = divide_out_one_minus_z(&self.coeffs);
        self.weights.len() as i64 - k as i64
    }

    fn require_standard(&self) -> Result<()> {
        if self.weights.iter().any(|&w| w != 1) {
            return Err(Error::Unsupported("multiplicity needs a standard grading".into()));
        }
        Ok(())
    }

    /// `(h, dim)` with `HS = z^shift·h(z) / (1-z)^dim`; standard grading only.
    pub fn reduced(&self) -> Result<(i64, Vec<i128>, i64)> {
        self.require_standard()?;
        if self.is_zero() {
            return Ok((0, Vec::new(), -1));
        }
        let (k, h) = divide_out_one_minus_z(&self.coeffs);
        Ok((self.shift, h, self.weights.len() as i64 - k as i64))
    }

    /// `h(1)`: the degree of the module; length in dimension 0.
    pub fn multiplicity(&self) -> Result<i128> {
        let (_, h, _) = self.reduced()?;
        Ok(h.iter().sum())
    }

    /// Hilbert polynomial coefficients in `n`, lowest degree first.
    pub fn hilbert_polynomial(&self) -> Result<Vec<BigRational>> {
        let (shift, h, dim) = self.reduced()?;
        if dim <= 0 {
            return Ok(Vec::new());
        }
        let d = dim as usize;
        let mut out = vec![BigRational::zero(); d];
        let mut fact = BigInt::one();
        for j in 1..d {
            fact *= j;
        }
        for (k, hk) in h.iter().enumerate() {
            if *hk == 0 {
                continue;
            }
            // C(n - e + d - 1, d - 1) with e = shift + k, as a polynomial in n.
            let e = shift + k as i64;
            let mut poly = vec![BigRational::one()];
            for j in 1..d as i64 {
                let c = BigRational::from_integer(BigInt::from(j - e));
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (i, a) in poly.iter().enumerate() {
                    next[i] += a * &c;
                    next[i + 1] += a;
                }
                poly = next;
            }
            let scale = BigRational::new(BigInt::from(*hk), fact.clone());
            for (i, a) in poly.iter().enumerate() {
                out[i] += a * &scale;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let e = self.shift + k as i64;
            let sign = if *c < 0 { "-" } else { "+" };
            if num.is_empty() {
                if *c < 0 {
                    num.push('-');
                }
            } else {
                num.push_str(&format!(" {sign} "));
            }
            let a = c.unsigned_abs();
            match e {
                0 => num.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        num.push_str(&format!("{a}*"));
                    }
                    if e == 1 {
                        num.push('z');
                    } else {
                        num.push_str(&format!("z^{e}"));
                    }
                }
            }
        }
        if num.is_empty() {
            num.push('0');
        }
        let mut den: Vec<(i64, usize)> = Vec::new();
        let mut ws = self.weights.clone();
        ws.sort_unstable();
        for w in ws {
            match den.last_mut() {
                Some((v, n)) if *v == w => *n += 1,
                _ => den.push((w, 1)),
            }
        }
        write!(f, "({num})")?;
        for (w, n) in den {
            let base = if w == 1 { "(1 - z)".to_string() } else { format!("(1 - z^{w})") };
            if n == 1 {
                write!(f, " / {base}")?;
            } else {
                write!(f, " / {base}^{n}")?;
            }
        }
        Ok(())
    }
}

/// Divides by `(1 - z)` as often as possible; returns the count and quotient.
fn divide_out_one_minus_z(coeffs: &[i128]) -> (usize, Vec<i128>) {
    let mut cur = coeffs.to_vec();
    let mut k = 0;
    while !cur.is_empty() && cur.iter().sum::<i128>() == 0 {
        // q_i = sum_{j<=i} c_j; the last partial sum is the zero remainder.
        let mut q = Vec::with_capacity(cur.len() - 1);
        let mut acc = 0;
        for c in &cur[..cur.len() - 1] {
            acc += c;
            q.push(acc);
        }
        while q.last() == Some(&0) {
            q.pop();
        }
        cur = q;
        k += 1;
    }
    (k, cur)
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<i128>, p: &[i128], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn weighted_degree(m: &Monomial, weights: &[i64]) -> usize {
    m.weighted_degree(weights) as usize
}

fn one_minus_z_pow(d: usize) -> Vec<i128> {
    let mut p = vec![0; d + 1];
    p[0] += 1;
    p[d] -= 1;
    p
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `P/(gens)` for a monomial ideal,
/// by pivot recursion `N(I) = N(I + (p)) + z^{deg p}·N(I : p)`.
pub fn monomial_numerator(gens: &[Monomial], weights: &[i64]) -> Vec<i128> {
    numerator_rec(minimalize(gens.to_vec()), weights)
}

fn numerator_rec(gens: Vec<Monomial>, weights: &[i64]) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1];
        for g in &gens {
            acc = poly_mul(&acc, &one_minus_z_pow(weighted_degree(g, weights)));
        }
        return acc;
    }
    let nvars = gens[0].nvars();
    let var = (0..nvars)
        .max_by_key(|&v| (gens.iter().filter(|g| g.exp(v) > 0).count(), std::cmp::Reverse(v)))
        .unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let pivot = Monomial::var(nvars, var, e);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.div(&g.gcd(&pivot)).expect("gcd divides"))
        .collect();
    colon = minimalize(colon);
    let mut out = numerator_rec(minimalize(with_pivot), weights);
    let inner = numerator_rec(colon, weights);
    poly_add_shifted(&mut out, &inner, weighted_degree(&pivot, weights));
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn numerators() {
        assert_eq!(monomial_numerator(&[], &[1, 1]), vec![1]);
        assert_eq!(monomial_numerator(&[m(&[2, 0]), m(&[1, 1])], &[1, 1]), vec![1, 0, -2, 1]);
        assert_eq!(monomial_numerator(&[m(&[0, 0])], &[1, 1]), Vec::<i128>::new());
    }

    #[test]
    fn expansion_and_dimension() {
        let s = HilbertSeries::from_numerator(0, monomial_numerator(&[m(&[2, 0]), m(&[1, 1])], &[1, 1]), &[1, 1]);
        assert_eq!(s.expand(4), vec![1, 2, 1, 1, 1]);
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.multiplicity().unwrap(), 1);
        let free = HilbertSeries::free(&[0], &[1, 1]);
        assert_eq!(free.to_string(), "(1) / (1 - z)^2");
        assert_eq!(free.dimension(), 2);
    }

    #[test]
    fn weighted_expansion() {
        let s = HilbertSeries::free(&[0], &[1, 2]);
        assert_eq!(s.expand(5), vec![1, 1, 2, 2, 3, 3]);
        assert!(s.multiplicity().is_err());
    }

    #[test]
    fn hilbert_polynomial_of_plane_conic() {
        // P^2 conic: HP(n) = 2n + 1.
        let s = HilbertSeries::from_numerator(0, vec![1, 0, -1], &[1, 1, 1]);
        let hp = s.hilbert_polynomial().unwrap();
        assert_eq!(hp, vec![BigRational::from_integer(1.into()), BigRational::from_integer(2.into())]);
    }
}
