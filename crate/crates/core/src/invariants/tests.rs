use super::*;
use crate::field::Rational;
use crate::io::parse_polynomial;
use crate::module::{GradedMap, Matrix};
use crate::poly::PolyRing;

type Q = Rational;

fn poly_ring(names: &[&str]) -> Arc<QuotientRing<Q>> {
    QuotientRing::polynomial(&PolyRing::new(names).unwrap().into_arc())
}

fn quotient(names: &[&str], rels: &[&str]) -> Arc<QuotientRing<Q>> {
    let amb = PolyRing::new(names).unwrap().into_arc();
    let rels = rels.iter().map(|s| parse_polynomial(&amb, s).unwrap()).collect();
    QuotientRing::new(&amb, rels).unwrap()
}

fn ideal(r: &Arc<QuotientRing<Q>>, gens: &[&str]) -> Ideal<Q> {
    Ideal::new(r, gens.iter().map(|s| parse_polynomial(r.ambient(), s).unwrap()).collect())
}

fn xs(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

#[test]
fn polynomial_ring_series() {
    let r = poly_ring(&["x", "y"]);
    let hs = ring_hilbert_series(&r).unwrap();
    assert_eq!(hs.numerator(), (0, &[1i128][..]));
    assert_eq!(hs.to_string(), "(1) / (1 - z)^2");
}

#[test]
fn hilbert_function_with_embedded_point() {
    let r = poly_ring(&["x", "y"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "x*y"]));
    let hs = hilbert_series(&m).unwrap();
    assert_eq!(hs.expand(4), vec![1, 2, 1, 1, 1]);
    assert_eq!(hilbert_function(&m, 7).unwrap(), 1);
    assert_eq!(krull_dim(&m).unwrap(), 1);
}

#[test]
fn quadric_hypersurface() {
    let names = xs(6);
    let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let r = quotient(&names, &["x0^2 + x1^2"]);
    let hs = ring_hilbert_series(&r).unwrap();
    assert_eq!(hs.numerator(), (0, &[1i128, 0, -1][..]));
    assert_eq!(hs.dimension(), 5);
    assert_eq!(hs.multiplicity().unwrap(), 2);
    let i = ideal(&r, &["x0", "x1", "x2 + x3 + x4 + x5"]);
    assert_eq!(height(&i).unwrap(), 2);
}

#[test]
fn field_has_dimension_zero() {
    let r = poly_ring(&["x"]);
    let k = SubquotientModule::quotient_by(&ideal(&r, &["x"]));
    assert_eq!(krull_dim(&k).unwrap(), 0);
    assert_eq!(multiplicity(&k).unwrap(), 1);
    let zero = SubquotientModule::quotient_by(&ideal(&r, &["1"]));
    assert_eq!(krull_dim(&zero).unwrap(), -1);
}

#[test]
fn heights() {
    let r = poly_ring(&["x", "y"]);
    assert_eq!(height(&ideal(&r, &["x"])).unwrap(), 1);
    assert_eq!(height(&ideal(&r, &["x", "y"])).unwrap(), 2);
    assert_eq!(height(&ideal(&r, &["1"])).unwrap(), INFINITE_HEIGHT);
    assert!(height_grade_consistent(&ideal(&r, &["x*y"])).unwrap());
}

#[test]
fn depth_of_fat_point() {
    let r = poly_ring(&["x", "y"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "x*y", "y^2"]));
    let d = depth_regularity(&m).unwrap();
    assert_eq!(d, DepthData { depth: 0, pd: 2, regularity: 1 });
    assert!(is_cohen_macaulay(&m).unwrap());
}

#[test]
fn depth_of_free_module() {
    let r = poly_ring(&["x", "y", "z"]);
    let f = SubquotientModule::free(&r, vec![0, 2, 5]);
    let d = depth_regularity(&f).unwrap();
    assert_eq!(d, DepthData { depth: 3, pd: 0, regularity: 5 });
}

#[test]
fn grades() {
    let r = poly_ring(&["x", "y", "z"]);
    assert_eq!(grade_of(&ideal(&r, &["x", "y"])).unwrap(), 2);
    assert_eq!(grade_of(&ideal(&r, &["x*y", "x*z"])).unwrap(), 1);
    assert_eq!(grade_of(&ideal(&r, &["x^2"])).unwrap(), 1);
    assert!(grade_of(&ideal(&r, &["1"])).is_err());
}

#[test]
fn serre_and_unmixed() {
    let r = poly_ring(&["x", "y"]);
    let embedded = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "x*y"]));
    assert!(!unmixed_check(&embedded).unwrap());
    assert!(!serre_condition(&embedded, 1).unwrap());
    let ci = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "y^3"]));
    for k in 0..4 {
        assert!(serre_condition(&ci, k).unwrap());
    }
    assert!(unmixed_check(&ci).unwrap());
    // Two planes meeting in a point in 4-space: S_1 but not S_2.
    let r4 = poly_ring(&["a", "b", "c", "d"]);
    let planes = SubquotientModule::quotient_by(&ideal(&r4, &["a*c", "a*d", "b*c", "b*d"]));
    assert!(serre_condition(&planes, 1).unwrap());
    assert!(!serre_condition(&planes, 2).unwrap());
    assert!(unmixed_check(&planes).unwrap());
    assert!(!is_cohen_macaulay(&planes).unwrap());
}

#[test]
fn stanley_reisner_ambient_is_s3_not_cm() {
    let r = quotient(
        &["x1", "x2", "x3", "x4", "x5", "x6"],
        &[
            "x1*x2*x3*x4",
            "x2*x3*x4*x5",
            "x1*x2*x3*x6",
            "x1*x2*x5*x6",
            "x1*x4*x5*x6",
            "x3*x4*x5*x6",
        ],
    );
    let m = SubquotientModule::quotient_by(&Ideal::zero(&r));
    assert!(serre_condition(&m, 3).unwrap());
    assert!(!is_cohen_macaulay(&m).unwrap());
}

#[test]
fn euler_characteristic_matches_series() {
    let r = poly_ring(&["x", "y", "z"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x*y", "y*z", "x*z", "x^3"]));
    let res = minimal_free_resolution(&m, None).unwrap();
    let w = r.ambient().weights();
    let mut chi = HilbertSeries::zero(w);
    for (i, f) in res.modules().iter().enumerate() {
        let s = HilbertSeries::free(&f.degrees, w);
        chi = if i % 2 == 0 { chi.add(&s) } else { chi.sub(&s) };
    }
    assert_eq!(chi, hilbert_series(&m).unwrap());
}

#[test]
fn subquotient_series() {
    // (x)/(x^2) in k[x, y] has HF 0, 1, 1, 1, ...
    let r = poly_ring(&["x", "y"]);
    let amb = r.ambient();
    let g = Matrix::row_vector(amb, vec![parse_polynomial(amb, "x").unwrap()]).unwrap();
    let l = Matrix::row_vector(amb, vec![parse_polynomial(amb, "x^2").unwrap()]).unwrap();
    let m = SubquotientModule::new(&r, vec![0], g, l).unwrap();
    assert_eq!(hilbert_series(&m).unwrap().expand(4), vec![0, 1, 1, 1, 1]);
    let shifted = GradedMap::infer(&r, Matrix::identity(amb, 1), vec![3]).unwrap().cokernel();
    assert!(hilbert_series(&shifted).unwrap().is_zero());
}

#[test]
fn non_graded_input_is_rejected() {
    let r = poly_ring(&["x", "y"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x^2 + y"]));
    assert!(matches!(hilbert_series(&m), Err(Error::NotGraded(_))));
}

#[test]
fn report_fields() {
    let r = poly_ring(&["x", "y"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "x*y", "y^2"]));
    let rep = invariant_report(&m).unwrap();
    assert_eq!(rep.dim.value, 0);
    assert_eq!(rep.multiplicity.unwrap().value, 3);
    assert_eq!(rep.pd.value + rep.depth.value as usize, 2);
}
