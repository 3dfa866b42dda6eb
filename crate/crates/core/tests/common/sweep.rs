//! Seeded random instances for the residual property suite and the oracle
//! sweeps.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resint_core::invariants::hilbert_series_quotient;
use resint_core::module::subsets;
use resint_core::oracle::{oracle_hilbert, oracle_membership};
use resint_core::residual::{kitt_chain, residual_colon, tau, ResidualInput};
use resint_core::{Field, Fp, Ideal, Monomial, PolyRing, Polynomial, QuotientRing, Result};

pub type Small = Fp<101>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero<K: Field, R: Rng>(rng: &mut R) -> K {
    loop {
        let c = K::sample(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A nonzero form of degree `d` with at most `max_terms` terms.
pub fn sparse_form<K: Field, R: Rng>(rng: &mut R, amb: &Arc<PolyRing>, d: i64, max_terms: usize) -> Polynomial<K> {
    let mons = amb.monomials_of_degree(d);
    let k = rng.gen_range(1..=max_terms.min(mons.len()));
    let terms = mons
        .choose_multiple(rng, k)
        .map(|m| (m.clone(), nonzero::<K, R>(rng)))
        .collect();
    Polynomial::from_terms(amb, terms)
}

pub struct Instance {
    pub ring: Arc<QuotientRing<Small>>,
    pub f: Vec<Polynomial<Small>>,
    pub a: Vec<Polynomial<Small>>,
    /// Another generating set of the same `I`.
    pub f_alt: Vec<Polynomial<Small>>,
}

/// `2 ≤ n ≤ 4` variables, `r ≤ 3` generators of degree ≤ 2, `s ≤ 3`
/// elements of `I` of degree ≤ 3 with sparse coefficients.
pub fn instance(seed: u64) -> Instance {
    let mut rng = rng(seed);
    let n = rng.gen_range(2..=4);
    let amb = PolyRing::indexed("x", n).into_arc();
    let ring = QuotientRing::polynomial(&amb);
    let r = rng.gen_range(1..=3.min(n));
    let f: Vec<Polynomial<Small>> = (0..r)
        .map(|_| {
            let d = rng.gen_range(1..=2);
            sparse_form(&mut rng, &amb, d, 3)
        })
        .collect();
    let degs: Vec<i64> = f.iter().map(|p| p.degree().unwrap()).collect();
    let top = *degs.iter().max().unwrap();
    let s = rng.gen_range(1..=3);
    let mut a = Vec::new();
    while a.len() < s {
        let l = rng.gen_range(top..=3);
        let mut p = Polynomial::zero(&amb);
        for (fi, &d) in f.iter().zip(&degs) {
            if rng.gen_bool(0.25) {
                continue;
            }
            let c: Polynomial<Small> = sparse_form(&mut rng, &amb, l - d, 2);
            p = &p + &(&c * fi);
        }
        if !p.is_zero() {
            a.push(p);
        }
    }
    let mut f_alt = f.clone();
    if r == 1 {
        f_alt[0] = f_alt[0].scale(&nonzero::<Small, _>(&mut rng));
    } else {
        let i = rng.gen_range(0..r);
        let j = (i + rng.gen_range(1..r)) % r;
        let (i, j) = if degs[i] >= degs[j] { (i, j) } else { (j, i) };
        let m: Polynomial<Small> = sparse_form(&mut rng, &amb, degs[i] - degs[j], 1);
        f_alt[i] = &f_alt[i] + &(&m * &f[j]);
        f_alt.reverse();
    }
    Instance { ring, f, a, f_alt }
}

fn binomial(n: usize, k: usize) -> usize {
    subsets(n, k).len()
}

/// Violated residual properties of one instance, by name.
pub fn residual_violations(inst: &Instance) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let input = ResidualInput::explicit(&inst.ring, &inst.f, &inst.a)?;
    let (r, s) = (input.r(), input.s());
    let colon = residual_colon(&input)?;
    let chain = kitt_chain(&input)?;
    for (i, w) in chain.levels().windows(2).enumerate() {
        if !w[1].contains_ideal(&w[0])? {
            bad.push(format!("Kitt_{i} not in Kitt_{}", i + 1));
        }
    }
    let kitt = chain.kitt();
    if !kitt.contains_ideal(&input.a_ideal())? {
        bad.push("a not in Kitt".into());
    }
    if colon.proper {
        let j = &colon.j;
        if !j.contains_ideal(kitt)? {
            bad.push("Kitt not in J".into());
        }
        if !j.radical_equals(chain.level(1.min(r)))? {
            bad.push("rad J != rad Kitt_1".into());
        }
        if !j.radical_equals(kitt)? {
            bad.push("rad J != rad Kitt".into());
        }
    }
    let t = tau(&input)?;
    if !t.paths_agree {
        bad.push("minors and wedges disagree".into());
    }
    let a_plus_kitt0 = input.a_ideal().sum(chain.level(0))?;
    if !t.ideal.equals(&a_plus_kitt0)? {
        bad.push("tau != a + Kitt_0".into());
    }
    if t.mu() > s + binomial(s, r) {
        bad.push(format!("mu(tau) = {} > s + C(s,r)", t.mu()));
    }
    let alt = ResidualInput::explicit(&inst.ring, &inst.f_alt, &inst.a)?;
    if !kitt_chain(&alt)?.kitt().equals(kitt)? {
        bad.push("Kitt depends on the generators of I".into());
    }
    Ok(bad)
}

#[derive(Default, Debug)]
pub struct OracleTally {
    pub hilbert_checks: usize,
    pub membership_checks: usize,
    pub disagreements: Vec<String>,
}

impl OracleTally {
    /// Compares Hilbert functions up to `bound` and membership of `probes`.
    pub fn compare<K: Field>(
        &mut self,
        amb: &Arc<PolyRing>,
        gens: &[Polynomial<K>],
        probes: &[Polynomial<K>],
        bound: i64,
    ) -> Result<()> {
        let ring = QuotientRing::polynomial(amb);
        let ideal = Ideal::new(&ring, gens.to_vec());
        let engine = hilbert_series_quotient(&ideal)?.expand(bound);
        let oracle = oracle_hilbert(amb, gens, bound)?;
        self.hilbert_checks += 1;
        if engine.iter().zip(&oracle).any(|(&e, &o)| e != o as i128) {
            self.disagreements
                .push(format!("HF of {gens:?}: engine {engine:?}, oracle {oracle:?}"));
        }
        for p in probes {
            self.membership_checks += 1;
            if ideal.contains(p)? != oracle_membership(p, gens, bound)? {
                self.disagreements.push(format!("membership of {p} in {gens:?}"));
            }
        }
        Ok(())
    }
}

fn generator_pool<K: Field>(amb: &Arc<PolyRing>) -> Vec<Polynomial<K>> {
    let mut pool = Vec::new();
    for d in 1..=2 {
        let mons = amb.monomials_of_degree(d);
        for m in &mons {
            pool.push(Polynomial::monomial(amb, m.clone(), K::one()));
        }
        for pair in subsets(mons.len(), 2) {
            let (u, v) = (&mons[pair[0]], &mons[pair[1]]);
            pool.push(Polynomial::from_terms(amb, vec![(u.clone(), K::one()), (v.clone(), -K::one())]));
        }
    }
    pool
}

/// Every ideal generated by one or two elements of the pool of monomials
/// and binomials `u - v` of degree ≤ 2, in up to three variables; probes
/// are all monomials of degree 3 and their pairwise differences.
pub fn exhaustive_oracle_sweep<K: Field>(tally: &mut OracleTally) -> Result<()> {
    for n in 1..=3 {
        let amb = PolyRing::indexed("x", n).into_arc();
        let pool = generator_pool::<K>(&amb);
        let cubics = amb.monomials_of_degree(3);
        let mut probes: Vec<Polynomial<K>> = cubics
            .iter()
            .map(|m| Polynomial::monomial(&amb, m.clone(), K::one()))
            .collect();
        for pair in subsets(cubics.len(), 2) {
            probes.push(&probes[pair[0]] - &probes[pair[1]]);
        }
        for k in 1..=2 {
            for idx in subsets(pool.len(), k) {
                let gens: Vec<Polynomial<K>> = idx.iter().map(|&i| pool[i].clone()).collect();
                tally.compare(&amb, &gens, &probes, 6)?;
            }
        }
    }
    Ok(())
}

/// Random homogeneous ideals in up to four variables, generators of degree
/// ≤ 3; probes are members built from the generators and random forms of
/// degree ≤ 6.
pub fn random_oracle_instance<K: Field>(seed: u64, tally: &mut OracleTally) -> Result<()> {
    let mut rng = rng(seed);
    let n = rng.gen_range(1..=4);
    let amb = PolyRing::indexed("x", n).into_arc();
    let k = rng.gen_range(1..=3);
    let gens: Vec<Polynomial<K>> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            sparse_form(&mut rng, &amb, d, 3)
        })
        .collect();
    let mut probes = Vec::new();
    for _ in 0..3 {
        let target = rng.gen_range(3..=6);
        let mut member = Polynomial::zero(&amb);
        for g in &gens {
            let c: Polynomial<K> = sparse_form(&mut rng, &amb, target - g.degree().unwrap(), 2);
            member = &member + &(&c * g);
        }
        probes.push(member);
        probes.push(sparse_form(&mut rng, &amb, target, 4));
    }
    probes.push(Polynomial::monomial(&amb, Monomial::one(n), K::one()));
    tally.compare(&amb, &gens, &probes, 6)
}
