use super::*;
use crate::field::Rational;
use crate::io::parse_polynomial;
use crate::poly::PolyRing;

type Q = Rational;

fn ring(names: &[&str]) -> Arc<QuotientRing<Q>> {
    QuotientRing::polynomial(&PolyRing::new(names).unwrap().into_arc())
}

fn p(r: &Arc<QuotientRing<Q>>, s: &str) -> Polynomial<Q> {
    parse_polynomial(r.ambient(), s).unwrap()
}

fn ideal(r: &Arc<QuotientRing<Q>>, gens: &[&str]) -> Ideal<Q> {
    Ideal::new(r, gens.iter().map(|s| p(r, s)).collect())
}

fn row_map(r: &Arc<QuotientRing<Q>>, entries: &[&str]) -> GradedMap<Q> {
    let m = Matrix::row_vector(r.ambient(), entries.iter().map(|s| p(r, s)).collect()).unwrap();
    GradedMap::infer(r, m, vec![0]).unwrap()
}

fn columns(m: &GradedMap<Q>) -> Vec<Vec<String>> {
    m.matrix()
        .columns()
        .iter()
        .map(|c| c.iter().map(|e| e.to_string()).collect())
        .collect()
}

#[test]
fn koszul_syzygy() {
    let r = ring(&["x", "y"]);
    let k = row_map(&r, &["x", "y"]).kernel().unwrap();
    assert_eq!(columns(&k), [["-y", "x"]]);
}

#[test]
fn equal_entries_syzygy() {
    let r = ring(&["x"]);
    let k = row_map(&r, &["x", "x"]).kernel().unwrap();
    let cols = columns(&k);
    assert_eq!(cols.len(), 1);
    assert!(cols[0] == ["1", "-1"] || cols[0] == ["-1", "1"]);
}

#[test]
fn hilbert_burch_syzygies() {
    let r = ring(&["x", "y"]);
    let f = row_map(&r, &["x^2", "x*y", "y^2"]);
    let k = f.kernel().unwrap();
    assert!(f.compose(&k).unwrap().is_zero().unwrap());
    let res = minimal_free_resolution(&f.cokernel(), None).unwrap();
    assert_eq!(res.betti_table().ranks(), [1, 3, 2]);
    assert_eq!(k.source().degrees, [3, 3]);
}

#[test]
fn resolution_of_square_of_maximal_ideal() {
    let r = ring(&["x", "y"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "x*y", "y^2"]));
    let res = minimal_free_resolution(&m, None).unwrap();
    assert!(res.verify().unwrap());
    let degs: Vec<Vec<i64>> = res.modules().iter().map(|f| f.degrees.clone()).collect();
    assert_eq!(degs, vec![vec![0], vec![2, 2, 2], vec![3, 3]]);
    let b = res.betti_table();
    assert_eq!((b.get(0, 0), b.get(1, 2), b.get(2, 3)), (1, 3, 2));
    assert_eq!(res.projective_dimension(), Some(2));
    assert_eq!(res.regularity(), Some(1));
    for map in res.maps() {
        assert!(!map.has_unit_entry().unwrap());
    }
}

#[test]
fn small_resolutions() {
    let r = ring(&["x"]);
    let res = minimal_free_resolution(&SubquotientModule::quotient_by(&ideal(&r, &["x"])), None).unwrap();
    assert_eq!(res.modules().len(), 2);
    assert_eq!(res.modules()[1].degrees, [1]);
    let free = minimal_free_resolution(&SubquotientModule::free(&r, vec![0]), None).unwrap();
    assert_eq!(free.projective_dimension(), Some(0));
    assert_eq!(free.betti_table().ranks(), [1]);
}

#[test]
fn koszul_resolution_ranks() {
    let r = ring(&["x", "y", "z"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x", "y", "z"]));
    let res = minimal_free_resolution(&m, None).unwrap();
    assert_eq!(res.betti_table().ranks(), [1, 3, 3, 1]);
}

#[test]
fn redundant_generators_are_pruned() {
    let r = ring(&["x", "y"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "x*y", "y^2", "x^2 + x*y", "x^3"]));
    let res = minimal_free_resolution(&m, None).unwrap();
    assert_eq!(res.betti_table().ranks(), [1, 3, 2]);
}

#[test]
fn unit_entries_are_pruned() {
    let r = ring(&["x", "y"]);
    let mat = Matrix::from_rows(
        r.ambient(),
        vec![vec![p(&r, "1"), p(&r, "0")], vec![p(&r, "x"), p(&r, "y")]],
    )
    .unwrap();
    let phi = GradedMap::new(&r, vec![0, 0], vec![0, -1], mat).unwrap();
    let pruned = prune_units(&phi).unwrap();
    assert_eq!(pruned.target().rank(), 1);
    assert_eq!(columns(&pruned), [["y"]]);
}

#[test]
fn minors() {
    let r = ring(&["a", "b", "c", "d"]);
    let m = Matrix::from_rows(
        r.ambient(),
        vec![vec![p(&r, "a"), p(&r, "b")], vec![p(&r, "c"), p(&r, "d")]],
    )
    .unwrap();
    let i2 = minors_ideal(&r, &m, 2);
    assert_eq!(i2.gens().len(), 1);
    assert_eq!(i2.gens()[0], p(&r, "a*d - b*c"));
    assert!(minors_ideal(&r, &m, 0).is_unit().unwrap());
    let wide = Matrix::from_rows(
        r.ambient(),
        vec![vec![p(&r, "a"), p(&r, "b"), p(&r, "c")], vec![p(&r, "b"), p(&r, "c"), p(&r, "d")]],
    )
    .unwrap();
    assert!(minors_ideal(&r, &wide, 3).gens().is_empty());
}

#[test]
fn fitting_ideals() {
    let r = ring(&["x", "y"]);
    let f = ideal(&r, &["x^2 + y^2"]);
    let fitt0 = fitting_ideal(&SubquotientModule::quotient_by(&f), 0).unwrap();
    assert!(fitt0.equals(&f).unwrap());
    let xy = ideal(&r, &["x", "y"]);
    let fitt1 = fitting_ideal(&SubquotientModule::ideal(&xy), 1).unwrap();
    assert!(fitt1.equals(&xy).unwrap());
    // I/a for the linkage pair: its zeroth Fitting ideal has radical (x, y).
    let a = ideal(&r, &["x^2", "y^2"]);
    let m = SubquotientModule::ideal_quotient(&xy, &a).unwrap();
    let fitt = fitting_ideal(&m, 0).unwrap();
    assert!(fitt.radical_equals(&xy).unwrap());
}

#[test]
fn fitting_ideal_ignores_redundant_generators() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x*y", "y*z", "x*z"]);
    let padded = ideal(&r, &["x*y", "y*z", "x*z", "x*y + y*z", "x^2*y"]);
    let m1 = SubquotientModule::ideal(&i);
    let m2 = SubquotientModule::ideal(&padded);
    for k in 0..3 {
        let a = fitting_ideal(&m1, k).unwrap();
        let b = fitting_ideal(&m2, k).unwrap();
        assert!(a.equals(&b).unwrap(), "Fitt_{k}");
    }
}

fn koszul_maps(r: &Arc<QuotientRing<Q>>, f: &[&str]) -> Vec<GradedMap<Q>> {
    // Two-element Koszul complex 0 → R → R^2 → R.
    let a = p(r, f[0]);
    let b = p(r, f[1]);
    let d1 = GradedMap::infer(r, Matrix::row_vector(r.ambient(), vec![a.clone(), b.clone()]).unwrap(), vec![0]).unwrap();
    let m2 = Matrix::from_columns(r.ambient(), 2, vec![vec![-&b, a]]).unwrap();
    let d2 = GradedMap::infer(r, m2, d1.source().degrees.clone()).unwrap();
    vec![d1, d2]
}

#[test]
fn koszul_homology() {
    let r = ring(&["x", "y"]);
    let h = complex_homology(&koszul_maps(&r, &["x", "y"])).unwrap();
    assert!(h[1].is_zero().unwrap());
    assert!(h[2].is_zero().unwrap());
    assert!(!h[0].is_zero().unwrap());

    let r1 = ring(&["x"]);
    let h = complex_homology(&koszul_maps(&r1, &["x", "x"])).unwrap();
    assert!(!h[1].is_zero().unwrap());
    let (phi, idx) = h[1].minimal_presentation().unwrap();
    assert_eq!(idx.len(), 1);
    assert_eq!(columns(&phi), [["x"]]);
}

#[test]
fn zero_map_homology() {
    let r = ring(&["x"]);
    let zero = GradedMap::new(&r, vec![0], vec![0], Matrix::zeros(r.ambient(), 1, 1)).unwrap();
    let h = complex_homology(&[zero]).unwrap();
    assert_eq!(h[0].num_generators().unwrap(), 1);
    assert_eq!(h[1].num_generators().unwrap(), 1);
    assert!(h[1].relations().ncols() == 0);
}

#[test]
fn ext_modules_small() {
    let r = ring(&["x", "y"]);
    let m = SubquotientModule::quotient_by(&ideal(&r, &["x"]));
    let e0 = ext_module(&m, 0).unwrap();
    let e1 = ext_module(&m, 1).unwrap();
    assert!(e0.is_zero().unwrap());
    let (phi, idx) = e1.minimal_presentation().unwrap();
    assert_eq!(idx.len(), 1);
    assert_eq!(columns(&phi), [["x"]]);

    let n = SubquotientModule::quotient_by(&ideal(&r, &["x^2", "x*y", "y^2"]));
    assert!(ext_module(&n, 1).unwrap().is_zero().unwrap());
    assert!(!ext_module(&n, 2).unwrap().is_zero().unwrap());
}

#[test]
fn kernel_over_quotient_ring() {
    // In k[x,y]/(xy), the kernel of multiplication by x is generated by y.
    let amb = PolyRing::new(&["x", "y"]).unwrap().into_arc();
    let rq = QuotientRing::<Q>::new(&amb, vec![parse_polynomial(&amb, "x*y").unwrap()]).unwrap();
    let k = row_map(&rq, &["x"]).kernel().unwrap();
    assert_eq!(columns(&k), [["y"]]);
}
