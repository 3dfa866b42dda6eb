mod common;

use common::sweep::*;
use proptest::prelude::*;
use resint_core::invariants::{hilbert_series, HilbertSeries};
use resint_core::io::parse_polynomial;
use resint_core::koszul::{koszul_complex, wedge_coefficient, WedgeElement};
use resint_core::module::{minimal_free_resolution, Matrix, SubquotientModule};
use resint_core::oracle::oracle_determinant;
use resint_core::{Field, Fp, Ideal, PolyRing, Polynomial, QuotientRing, Rational};

type P = Fp<32003>;

/// A possibly inhomogeneous polynomial in `n` variables.
fn poly<K: Field>(seed: u64, n: usize) -> Polynomial<K> {
    let mut rng = rng(seed);
    let amb = PolyRing::indexed("x", n).into_arc();
    let mut p = Polynomial::zero(&amb);
    for d in 0..=3 {
        if rand::Rng::gen_bool(&mut rng, 0.6) {
            p = &p + &sparse_form(&mut rng, &amb, d, 3);
        }
    }
    p
}

fn forms<K: Field>(seed: u64, n: usize, k: usize, max_degree: i64) -> Vec<Polynomial<K>> {
    let mut rng = rng(seed);
    let amb = PolyRing::indexed("x", n).into_arc();
    (0..k)
        .map(|_| {
            let d = rand::Rng::gen_range(&mut rng, 1..=max_degree);
            sparse_form(&mut rng, &amb, d, 3)
        })
        .collect()
}

fn with_ring<K: Field>(p: &Polynomial<K>, q: Polynomial<K>) -> Polynomial<K> {
    q.with_ring(p.ring()).unwrap()
}

fn ring_axioms<K: Field>(seed: u64) {
    let p: Polynomial<K> = poly(seed, 3);
    let q = with_ring(&p, poly(seed ^ 1, 3));
    let r = with_ring(&p, poly(seed ^ 2, 3));
    assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    assert_eq!(&p * &q, &q * &p);
    assert_eq!(&(&p + &q) - &q, p);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn residual_invariants(seed in any::<u64>()) {
        let bad = residual_violations(&instance(seed)).unwrap();
        prop_assert!(bad.is_empty(), "seed {}: {:?}", seed, bad);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_matches_oracle(seed in any::<u64>()) {
        let mut tally = OracleTally::default();
        random_oracle_instance::<P>(seed, &mut tally).unwrap();
        prop_assert!(tally.disagreements.is_empty(), "{:?}", tally.disagreements);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold(seed in any::<u64>()) {
        ring_axioms::<Rational>(seed);
        ring_axioms::<P>(seed);
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>()) {
        let p: Polynomial<Rational> = poly(seed, 3);
        let text = p.to_string();
        let back: Polynomial<Rational> = parse_polynomial(p.ring(), &text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn leading_terms_multiply(seed in any::<u64>()) {
        let p: Polynomial<P> = poly(seed, 3);
        let q = with_ring(&p, poly(seed ^ 7, 3));
        prop_assume!(!p.is_zero() && !q.is_zero());
        let pq = &p * &q;
        let (mp, cp) = p.leading_term().unwrap();
        let (mq, cq) = q.leading_term().unwrap();
        let (m, c) = pq.leading_term().unwrap();
        prop_assert_eq!(m, &mp.mul(mq));
        prop_assert_eq!(*c, *cp * *cq);
    }

    #[test]
    fn normal_forms_are_linear(seed in any::<u64>()) {
        let gens: Vec<Polynomial<P>> = forms(seed, 3, 2, 2);
        let ring = QuotientRing::polynomial(gens[0].ring());
        let ideal = Ideal::new(&ring, gens);
        let p = with_ring(&ideal.gens()[0], poly(seed ^ 3, 3));
        let q = with_ring(&p, poly(seed ^ 5, 3));
        let nf = |x: &Polynomial<P>| ideal.normal_form(x).unwrap();
        prop_assert_eq!(nf(&(&p + &q)), nf(&(&nf(&p) + &nf(&q))));
        prop_assert_eq!(nf(&nf(&p)), nf(&p));
    }

    #[test]
    fn colon_contains_the_ideal(seed in any::<u64>()) {
        let gens: Vec<Polynomial<P>> = forms(seed, 3, 3, 2);
        let ring = QuotientRing::polynomial(gens[0].ring());
        let a = Ideal::new(&ring, gens[..2].to_vec());
        let b = Ideal::new(&ring, gens[2..].to_vec());
        prop_assert!(a.colon(&b).unwrap().contains_ideal(&a).unwrap());
        let sat = a.saturate(&b).unwrap();
        prop_assert!(sat.saturate(&b).unwrap().equals(&sat).unwrap());
    }

    #[test]
    fn resolutions_match_hilbert_series(seed in any::<u64>()) {
        let gens: Vec<Polynomial<P>> = forms(seed, 3, 3, 2);
        let ring = QuotientRing::polynomial(gens[0].ring());
        let m = SubquotientModule::quotient_by(&Ideal::new(&ring, gens));
        let res = minimal_free_resolution(&m, None).unwrap();
        prop_assert!(res.verify().unwrap());
        let weights = ring.ambient().weights().to_vec();
        let mut euler = HilbertSeries::zero(&weights);
        for (i, f) in res.modules().iter().enumerate() {
            let t = HilbertSeries::free(&f.degrees, &weights);
            euler = if i % 2 == 0 { euler.add(&t) } else { euler.sub(&t) };
        }
        prop_assert_eq!(euler.expand(12), hilbert_series(&m).unwrap().expand(12));
    }

    #[test]
    fn koszul_differentials_compose_to_zero(seed in any::<u64>()) {
        let gens: Vec<Polynomial<P>> = forms(seed, 3, 3, 2);
        let ring = QuotientRing::polynomial(gens[0].ring());
        prop_assert!(koszul_complex(&ring, &gens).unwrap().verify().unwrap());
    }

    #[test]
    fn wedges_are_alternating(seed in any::<u64>()) {
        let v: Vec<Polynomial<P>> = forms(seed, 3, 3, 2);
        let amb = v[0].ring().clone();
        let w: Vec<Polynomial<P>> = forms(seed ^ 9, 3, 3, 2).iter().map(|p| p.with_ring(&amb).unwrap()).collect();
        let x = WedgeElement::from_vector(&amb, &v);
        let y = WedgeElement::from_vector(&amb, &w);
        prop_assert!(x.wedge(&x).unwrap().is_zero());
        let xy = x.wedge(&y).unwrap();
        let yx = y.wedge(&x).unwrap();
        prop_assert!(xy.add(&yx).unwrap().is_zero());
    }

    #[test]
    fn wedge_of_columns_is_the_determinant(seed in any::<u64>()) {
        let cols: Vec<Vec<Polynomial<P>>> = (0..3).map(|j| forms(seed ^ j, 3, 3, 1)).collect();
        let amb = cols[0][0].ring().clone();
        let cols: Vec<Vec<Polynomial<P>>> = cols
            .iter()
            .map(|c| c.iter().map(|p| p.with_ring(&amb).unwrap()).collect())
            .collect();
        let wedges: Vec<WedgeElement<P>> = cols.iter().map(|c| WedgeElement::from_vector(&amb, c)).collect();
        let m = Matrix::from_columns(&amb, 3, cols).unwrap();
        prop_assert_eq!(wedge_coefficient(&wedges).unwrap(), oracle_determinant(&m).unwrap());
    }
}
