#![allow(dead_code)]
pub mod sweep;

use std::sync::Arc;

use resint_core::io::parse_polynomial;
use resint_core::module::Matrix;
use resint_core::{Field, PolyRing, Polynomial, QuotientRing};

pub fn quotient<K: Field>(names: &[&str], rels: &[&str]) -> Arc<QuotientRing<K>> {
    let amb = PolyRing::new(names).unwrap().into_arc();
    let rels = rels.iter().map(|s| parse_polynomial(&amb, s).unwrap()).collect();
    QuotientRing::new(&amb, rels).unwrap()
}

pub fn polys<K: Field>(r: &Arc<QuotientRing<K>>, gens: &[&str]) -> Vec<Polynomial<K>> {
    gens.iter().map(|s| parse_polynomial(r.ambient(), s).unwrap()).collect()
}

pub fn matrix<K: Field>(r: &Arc<QuotientRing<K>>, rows: &[&[&str]]) -> Matrix<K> {
    let rows = rows
        .iter()
        .map(|row| row.iter().map(|s| parse_polynomial(r.ambient(), s).unwrap()).collect())
        .collect();
    Matrix::from_rows(r.ambient(), rows).unwrap()
}

pub fn hypersurface<K: Field>() -> Arc<QuotientRing<K>> {
    quotient(&["x0", "x1", "x2", "x3", "x4", "x5"], &["x0^2 + x1^2"])
}

pub fn stanley_reisner<K: Field>() -> Arc<QuotientRing<K>> {
    quotient(
        &["x1", "x2", "x3", "x4", "x5", "x6"],
        &[
            "x1*x2*x3*x4",
            "x2*x3*x4*x5",
            "x1*x2*x3*x6",
            "x1*x2*x5*x6",
            "x1*x4*x5*x6",
            "x3*x4*x5*x6",
        ],
    )
}

pub fn h_matrix<K: Field>(r: &Arc<QuotientRing<K>>) -> Matrix<K> {
    matrix(
        r,
        &[
            &["x1 + x6", "x1 + x2 + x5 + x6"],
            &["x3 + x4 + x5", "x1 + x2 + x3"],
            &["x2 + x4 + x5 + x6", "x1 + x3 + x4 + x5"],
        ],
    )
}

pub fn m_matrix<K: Field>(r: &Arc<QuotientRing<K>>) -> Matrix<K> {
    matrix(
        r,
        &[
            &["x1 + x2 + x3 + x5 + x6", "x1 + x4 + x6"],
            &["x1 + x2 + x4", "x2 + x3 + x5 + x6"],
            &["x2 + x4 + x5", "x1 + x2 + x5 + x6"],
        ],
    )
}
