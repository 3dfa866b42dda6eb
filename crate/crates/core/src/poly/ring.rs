use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monomial::{grevlex_cmp, lex_cmp, Monomial};
use crate::error::{Error, Result};

/// Term order on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    /// Weighted graded reverse lexicographic, using the ring's grading.
    GRevLex,
    /// Block order: the listed variables are eliminated (grevlex on the
    /// block, then grevlex on the rest).
    Elimination(Vec<usize>),
    /// Compare by the given weight vector first, then by grevlex.
    WeightedGRevLex(Vec<i64>),
}

impl MonomialOrder {
    /// Whether the order refines the ring's primary grading.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GRevLex)
    }
}

/// Polynomial ring `k[x_1..x_n]` description: variable names, primary
/// grading, optional secondary grading, and the active monomial order.
///
/// The coefficient field is a type parameter of [`super::Polynomial`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<i64>,
    weights2: Vec<i64>,
    order: MonomialOrder,
    block: Vec<bool>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let weights = vec![1; names.len()];
        Self::with_weights(names, &weights)
    }

    pub fn with_weights<S: AsRef<str>>(names: &[S], weights: &[i64]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if weights.len() != names.len() {
            return Err(Error::InvalidInput("one weight per variable required".into()));
        }
        if weights.iter().any(|&w| w < 1) {
            return Err(Error::InvalidInput("variable weights must be >= 1".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidInput(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidInput(format!("duplicate variable `{n}`")));
            }
        }
        let n = names.len();
        Ok(PolyRing {
            names,
            weights: weights.to_vec(),
            weights2: vec![0; n],
            order: MonomialOrder::GRevLex,
            block: vec![false; n],
        })
    }

    /// Convenience constructor for `x0..x{n-1}`-style rings.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names).expect("generated names are valid")
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn secondary_weights(&self) -> &[i64] {
        &self.weights2
    }

    pub fn has_secondary_grading(&self) -> bool {
        self.weights2.iter().any(|&w| w != 0)
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and gradings, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        let mut block = vec![false; self.nvars()];
        match &order {
            MonomialOrder::Elimination(vars) => {
                for &v in vars {
                    if v >= self.nvars() {
                        return Err(Error::InvalidInput("elimination block out of range".into()));
                    }
                    block[v] = true;
                }
            }
            MonomialOrder::WeightedGRevLex(w) if w.len() != self.nvars() => {
                return Err(Error::InvalidInput("order weight vector has wrong length".into()));
            }
            _ => {}
        }
        Ok(PolyRing {
            order,
            block,
            ..self.clone()
        })
    }

    pub fn with_secondary_weights(&self, weights2: &[i64]) -> Result<Self> {
        if weights2.len() != self.nvars() {
            return Err(Error::InvalidInput("one secondary weight per variable required".into()));
        }
        Ok(PolyRing {
            weights2: weights2.to_vec(),
            ..self.clone()
        })
    }

    /// Appends variables after the existing ones. The order is reset to
    /// grevlex.
    pub fn extended<S: AsRef<str>>(&self, names: &[S], weights: &[i64], weights2: &[i64]) -> Result<Self> {
        let mut all: Vec<String> = self.names.clone();
        all.extend(names.iter().map(|s| s.as_ref().to_string()));
        let mut w = self.weights.clone();
        w.extend_from_slice(weights);
        let mut w2 = self.weights2.clone();
        w2.extend_from_slice(weights2);
        PolyRing::with_weights(&all, &w)?.with_secondary_weights(&w2)
    }

    /// A name of the form `{base}`, `{base}1`, ... not already used.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}{i}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }

    /// Same variable names and gradings (orders may differ).
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        self.names == other.names && self.weights == other.weights && self.weights2 == other.weights2
    }

    #[inline]
    pub fn degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights)
    }

    #[inline]
    pub fn degree2(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights2)
    }

    /// Compares two monomials in the active order.
    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.order {
            MonomialOrder::GRevLex => grevlex_cmp(a, b, &self.weights, |_| true),
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Elimination(_) => grevlex_cmp(a, b, &self.weights, |i| self.block[i])
                .then_with(|| grevlex_cmp(a, b, &self.weights, |i| !self.block[i])),
            MonomialOrder::WeightedGRevLex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| grevlex_cmp(a, b, &self.weights, |_| true)),
        }
    }

    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// All monomials of primary degree exactly `d`, in descending order.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Monomial::one(self.nvars());
        fn rec(ring: &PolyRing, i: usize, left: i64, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i == ring.nvars() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let w = ring.weights[i];
            let mut e = 0;
            while e as i64 * w <= left {
                cur.set_exp(i, e);
                rec(ring, i + 1, left - e as i64 * w, cur, out);
                e += 1;
            }
            cur.set_exp(i, 0);
        }
        if d >= 0 {
            rec(self, 0, d, &mut cur, &mut out);
        }
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
