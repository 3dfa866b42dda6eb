//! Hilbert series, dimension, multiplicity, depth, regularity, grade and
//! the Ext-based Serre and unmixedness tests.

mod hilbert;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

pub use hilbert::{monomial_numerator, HilbertSeries};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Ideal, QuotientRing};
use crate::module::{column_degree, ext_modules, ext_modules_from, minimal_free_resolution, Submodule, SubquotientModule};
use crate::poly::{Monomial, Polynomial};

/// Height of the unit ideal.
pub const INFINITE_HEIGHT: usize = usize::MAX;

/// Hilbert series of `F/U` where `U` is spanned by `cols` and `Q·F`.
fn quotient_series<F: Field>(
    ring: &QuotientRing<F>,
    degrees: &[i64],
    cols: &[Vec<Polynomial<F>>],
) -> Result<HilbertSeries> {
    let weights = ring.ambient().weights();
    let sub = Submodule::new(ring, degrees, cols, None)?;
    let mut by_comp: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for (m, c) in sub.leading_terms() {
        by_comp.entry(c).or_default().push(m);
    }
    let mut hs = HilbertSeries::zero(weights);
    for (i, &d) in degrees.iter().enumerate() {
        let gens = by_comp.remove(&i).unwrap_or_default();
        let num = monomial_numerator(&gens, weights);
        hs = hs.add(&HilbertSeries::from_numerator(d, num, weights));
    }
    Ok(hs)
}

pub fn hilbert_series<F: Field>(m: &SubquotientModule<F>) -> Result<HilbertSeries> {
    let degrees = m.ambient_degrees();
    for c in m.generators().columns().iter().chain(m.relations().columns()) {
        column_degree(c, degrees)?;
    }
    let ring = m.ring();
    let rels = m.relations().columns().to_vec();
    let mut all = rels.clone();
    all.extend(m.generators().columns().iter().cloned());
    let outer = quotient_series(ring, degrees, &rels)?;
    let inner = quotient_series(ring, degrees, &all)?;
    Ok(outer.sub(&inner))
}

/// Hilbert series of `R/J`.
pub fn hilbert_series_quotient<F: Field>(j: &Ideal<F>) -> Result<HilbertSeries> {
    hilbert_series(&SubquotientModule::quotient_by(j))
}

/// Hilbert series of `R` itself.
pub fn ring_hilbert_series<F: Field>(ring: &Arc<QuotientRing<F>>) -> Result<HilbertSeries> {
    hilbert_series_quotient(&Ideal::zero(ring))
}

pub fn hilbert_function<F: Field>(m: &SubquotientModule<F>, n: i64) -> Result<i128> {
    Ok(hilbert_series(m)?.coefficient(n))
}

/// Krull dimension; `-1` for the zero module.
pub fn krull_dim<F: Field>(m: &SubquotientModule<F>) -> Result<i64> {
    Ok(hilbert_series(m)?.dimension())
}

pub fn multiplicity<F: Field>(m: &SubquotientModule<F>) -> Result<i128> {
    hilbert_series(m)?.multiplicity()
}

pub fn ring_dim<F: Field>(ring: &Arc<QuotientRing<F>>) -> Result<i64> {
    Ok(ring_hilbert_series(ring)?.dimension())
}

/// `dim R - dim R/J`, assuming `R` equidimensional; the unit ideal has
/// height [`INFINITE_HEIGHT`].
pub fn height<F: Field>(j: &Ideal<F>) -> Result<usize> {
    let quotient = hilbert_series_quotient(j)?.dimension();
    if quotient < 0 {
        return Ok(INFINITE_HEIGHT);
    }
    Ok((ring_dim(j.ring())? - quotient) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthData {
    pub depth: i64,
    /// Projective dimension over the polynomial ambient.
    pub pd: usize,
    pub regularity: i64,
}

/// Depth by Auslander–Buchsbaum from a minimal resolution over the
/// polynomial ambient, together with its length and regularity.
pub fn depth_regularity<F: Field>(m: &SubquotientModule<F>) -> Result<DepthData> {
    let res = minimal_free_resolution(&m.lift_to_polynomial(), None)?;
    let (Some(pd), Some(regularity)) = (res.projective_dimension(), res.regularity()) else {
        return Err(Error::InvalidInput("depth of the zero module".into()));
    };
    let n = m.ring().nvars() as i64;
    Ok(DepthData {
        depth: n - pd as i64,
        pd,
        regularity,
    })
}

/// `(i, dim Ext^i_P(M, P))` for the nonvanishing `Ext^i` with `i ≥ lo`.
fn ext_profile<F: Field>(m: &SubquotientModule<F>, lo: usize) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    for (i, e) in ext_modules_from(m, lo)? {
        let d = krull_dim(&e)?;
        if d >= 0 {
            out.push((i as i64, d));
        }
    }
    Ok(out)
}

/// `min{i : Ext^i_P(P/J, P) ≠ 0}` for `J` in a polynomial ring.
pub fn grade_of<F: Field>(j: &Ideal<F>) -> Result<usize> {
    if !j.ring().is_polynomial_ring() {
        return Err(Error::Unsupported("grade is computed over a polynomial ring".into()));
    }
    if j.is_unit()? {
        return Err(Error::InvalidInput("grade of the unit ideal".into()));
    }
    let exts = ext_modules(&SubquotientModule::quotient_by(j))?;
    for (i, e) in exts.iter().enumerate() {
        if !e.is_zero()? {
            return Ok(i);
        }
    }
    Err(Error::InvalidInput("all Ext modules vanish".into()))
}

/// Serre's `S_k` for a nonzero module: `dim Ext^i_P(M, P) ≤ n - i - k` for
/// every nonvanishing `Ext^i` with `i > codim M`.
pub fn serre_condition<F: Field>(m: &SubquotientModule<F>, k: usize) -> Result<bool> {
    let n = m.ring().nvars() as i64;
    let dim = krull_dim(m)?;
    if dim < 0 {
        return Err(Error::InvalidInput("Serre condition of the zero module".into()));
    }
    let codim = n - dim;
    for (i, d) in ext_profile(m, (codim + 1) as usize)? {
        if d > n - i - k as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when every associated prime of `M` has codimension `codim M`:
/// `dim Ext^i_P(M, P) < n - i` whenever `i > codim M` and the module is
/// nonzero.
pub fn unmixed_check<F: Field>(m: &SubquotientModule<F>) -> Result<bool> {
    let n = m.ring().nvars() as i64;
    let dim = krull_dim(m)?;
    if dim < 0 {
        return Ok(true);
    }
    let codim = n - dim;
    for (i, d) in ext_profile(m, (codim + 1) as usize)? {
        if d >= n - i {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_cohen_macaulay<F: Field>(m: &SubquotientModule<F>) -> Result<bool> {
    let dim = krull_dim(m)?;
    if dim < 0 {
        return Ok(true);
    }
    Ok(depth_regularity(m)?.depth == dim)
}

/// A value together with the method that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tagged<T> {
    pub value: T,
    pub method: &'static str,
}

fn tag<T>(value: T, method: &'static str) -> Tagged<T> {
    Tagged { value, method }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub hilbert_series: String,
    pub dim: Tagged<i64>,
    pub multiplicity: Option<Tagged<i128>>,
    pub depth: Tagged<i64>,
    pub pd: Tagged<usize>,
    pub regularity: Tagged<i64>,
}

/// Dimension, multiplicity, depth, projective dimension over `P` and
/// regularity of a nonzero graded module.
pub fn invariant_report<F: Field>(m: &SubquotientModule<F>) -> Result<InvariantReport> {
    let hs = hilbert_series(m)?;
    let dr = depth_regularity(m)?;
    let multiplicity = match hs.multiplicity() {
        Ok(e) => Some(tag(e, "hilbert-numerator")),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(InvariantReport {
        hilbert_series: hs.to_string(),
        dim: tag(hs.dimension(), "hilbert-pole-order"),
        multiplicity,
        depth: tag(dr.depth, "auslander-buchsbaum"),
        pd: tag(dr.pd, "minimal-resolution"),
        regularity: tag(dr.regularity, "betti-table"),
    })
}

/// Whether `ht(J) ≥ grade_P(lift J) - ht_P(Q)` holds.
pub fn height_grade_consistent<F: Field>(j: &Ideal<F>) -> Result<bool> {
    let ht = height(j)?;
    if ht == INFINITE_HEIGHT {
        return Ok(true);
    }
    let poly = QuotientRing::polynomial(j.ring().ambient());
    let lifted = j.lift();
    let q = Ideal::new(&poly, j.ring().relations().to_vec());
    let hq = if q.is_zero()? { 0 } else { grade_of(&q)? };
    Ok(ht as i64 >= grade_of(&lifted)? as i64 - hq as i64)
}

#[cfg(test)]
mod tests;
