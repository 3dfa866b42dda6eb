use super::*;
use crate::field::{Fp, Rational};
use crate::io::parse_polynomial;

type Q = Rational;

fn ring(names: &[&str]) -> Arc<QuotientRing<Q>> {
    QuotientRing::polynomial(&PolyRing::new(names).unwrap().into_arc())
}

fn ideal(r: &Arc<QuotientRing<Q>>, gens: &[&str]) -> Ideal<Q> {
    let g = gens
        .iter()
        .map(|s| parse_polynomial(r.ambient(), s).unwrap())
        .collect();
    Ideal::new(r, g)
}

fn p(r: &Arc<QuotientRing<Q>>, s: &str) -> Polynomial<Q> {
    parse_polynomial(r.ambient(), s).unwrap()
}

fn strings(gb: &GroebnerBasis<Q>) -> Vec<String> {
    gb.elements().iter().map(|g| g.to_string()).collect()
}

#[test]
fn basis_of_two_quadrics() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2 + y^2", "x*y"]);
    let gb = i.groebner_basis().unwrap();
    let mut got = strings(gb);
    got.sort();
    assert_eq!(got, ["x*y", "x^2 + y^2", "y^3"]);
    assert!(gb.verify());
}

#[test]
fn principal_and_unit_bases() {
    let r = ring(&["x", "y"]);
    assert_eq!(strings(ideal(&r, &["x"]).groebner_basis().unwrap()), ["x"]);
    assert_eq!(strings(ideal(&r, &["x + 1", "x"]).groebner_basis().unwrap()), ["1"]);
}

#[test]
fn normal_forms() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2 + y^2", "x*y"]);
    assert!(i.normal_form(&p(&r, "y^3")).unwrap().is_zero());
    let xy = ideal(&r, &["x", "y"]);
    assert_eq!(xy.normal_form(&p(&r, "z")).unwrap(), p(&r, "z"));
    let zero = Ideal::zero(&r);
    let f = p(&r, "x*y + z^2");
    assert_eq!(zero.normal_form(&f).unwrap(), f);
}

#[test]
fn membership_and_equality() {
    let r = ring(&["x", "y"]);
    assert!(ideal(&r, &["x^2 + y^2", "x*y"]).contains(&p(&r, "y^3")).unwrap());
    assert!(!ideal(&r, &["x^2"]).contains(&p(&r, "x")).unwrap());
    assert!(ideal(&r, &["x", "y"]).equals(&ideal(&r, &["y", "x + y"])).unwrap());
}

#[test]
fn intersections() {
    let r = ring(&["x", "y"]);
    let xy = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
    assert!(xy.equals(&ideal(&r, &["x*y"])).unwrap());
    let xx = ideal(&r, &["x"]).intersect(&ideal(&r, &["x"])).unwrap();
    assert!(xx.equals(&ideal(&r, &["x"])).unwrap());
    let k = ideal(&r, &["x^2", "y"]).intersect(&ideal(&r, &["x"])).unwrap();
    assert!(k.equals(&ideal(&r, &["x^2", "x*y"])).unwrap());
}

#[test]
fn colons() {
    let r = ring(&["x", "y"]);
    let a = ideal(&r, &["x^2", "y^2"]);
    let c = a.colon(&ideal(&r, &["x", "y"])).unwrap();
    assert!(c.equals(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
    assert!(a.colon(&Ideal::unit(&r)).unwrap().equals(&a).unwrap());
    assert!(a.colon(&Ideal::zero(&r)).unwrap().is_unit().unwrap());
}

#[test]
fn saturations() {
    let r = ring(&["x", "y"]);
    let a = ideal(&r, &["x^2*y", "x*y^2"]);
    // One colon step gives (x, y); the next already contains x*y, so the
    // saturation is the unit ideal.
    let once = a.colon(&ideal(&r, &["x*y"])).unwrap();
    assert!(once.equals(&ideal(&r, &["x", "y"])).unwrap());
    let s = a.saturate(&ideal(&r, &["x*y"])).unwrap();
    assert!(s.is_unit().unwrap());
    let b = ideal(&r, &["x^2*y", "x*y^2"]);
    assert!(b.saturate(&ideal(&r, &["x"])).unwrap().equals(&ideal(&r, &["y"])).unwrap());
    assert!(a.saturate(&Ideal::unit(&r)).unwrap().equals(&a).unwrap());
    assert!(ideal(&r, &["x^2"]).saturate(&ideal(&r, &["x"])).unwrap().is_unit().unwrap());
}

#[test]
fn eliminations() {
    let r = ring(&["t", "x", "y", "z"]);
    assert!(ideal(&r, &["t*x - 1"]).eliminate(&[0]).unwrap().is_zero().unwrap());
    let e = ideal(&r, &["t - x", "t - y"]).eliminate(&[0]).unwrap();
    assert!(e.equals(&ideal(&r, &["x - y"])).unwrap());
    let e = ideal(&r, &["t*x", "t*y", "t - z"]).eliminate(&[0]).unwrap();
    assert!(e.equals(&ideal(&r, &["z*x", "z*y"])).unwrap());
}

#[test]
fn radicals() {
    let r = ring(&["x", "y"]);
    assert!(ideal(&r, &["(x + y)^3"]).radical_contains_element(&p(&r, "x + y")).unwrap());
    assert!(ideal(&r, &["x^2", "y"]).radical_equals(&ideal(&r, &["x", "y^3"])).unwrap());
    let a = ideal(&r, &["x^2", "y^2"]);
    let tau = a.sum(&ideal(&r, &["x*y"])).unwrap();
    let j = a.colon(&ideal(&r, &["x", "y"])).unwrap();
    assert!(tau.radical_equals(&j).unwrap());
    assert!(!ideal(&r, &["x^2"]).radical_contains_element(&p(&r, "y")).unwrap());
}

#[test]
fn quotient_lifts_agree() {
    let amb = PolyRing::new(&["x", "y", "z"]).unwrap().into_arc();
    let rq = QuotientRing::<Q>::new(&amb, vec![parse_polynomial(&amb, "x*y").unwrap()]).unwrap();
    let a = Ideal::new(&rq, vec![parse_polynomial(&amb, "x").unwrap()]);
    let c = a.colon(&Ideal::new(&rq, vec![parse_polynomial(&amb, "y").unwrap()])).unwrap();
    let lifted = a.lift().colon(&Ideal::new(&QuotientRing::polynomial(&amb), vec![parse_polynomial(&amb, "y").unwrap()])).unwrap();
    assert!(c.lift().equals(&lifted).unwrap());
    // 0 : (x) = (y) in R.
    let ann = Ideal::zero(&rq).colon_element(&parse_polynomial(&amb, "x").unwrap()).unwrap();
    assert!(ann.equals(&Ideal::new(&rq, vec![parse_polynomial(&amb, "y").unwrap()])).unwrap());
}

#[test]
fn resource_limits_are_errors() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x^2 + y*z", "x*y + z^2", "y^3 - x*z^2"]);
    let res = Limits { max_degree: Some(1), max_pairs: None }
        .scope(|| groebner_basis(i.gens(), &MonomialOrder::GRevLex).map(|_| ()));
    assert!(matches!(res, Err(Error::ResourceLimit(_))));
    let res = Limits { max_degree: None, max_pairs: Some(1) }
        .scope(|| groebner_basis(i.gens(), &MonomialOrder::Lex).map(|_| ()));
    assert!(matches!(res, Err(Error::ResourceLimit(_))));
}

#[test]
fn prime_field_basis() {
    let amb = PolyRing::new(&["x", "y"]).unwrap().into_arc();
    let r = QuotientRing::<Fp<7>>::polynomial(&amb);
    let g = vec![
        parse_polynomial(&amb, "x^2 + 3*x*y").unwrap(),
        parse_polynomial(&amb, "y^2 - x*y").unwrap(),
    ];
    let i = Ideal::new(&r, g);
    assert!(i.groebner_basis().unwrap().verify());
}
