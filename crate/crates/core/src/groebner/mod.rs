//! Gröbner bases and ideal arithmetic over `P` and over quotients `P/Q`.
//!
//! Quotient rings are never handled natively: every operation lifts its
//! ideals to `P` by appending the generators of `Q`.

mod cache;
pub(crate) mod engine;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use cache::{cache_stats, clear_cache, CacheStats};
pub use engine::Limits;
pub(crate) use cache::groebner as cache_groebner;
pub(crate) use engine::{ModuleOrder, Vector};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

/// Reduced, monic Gröbner basis in a fixed monomial order.
#[derive(Clone)]
pub struct GroebnerBasis<F> {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial<F>>,
    quotient: bool,
}

impl<F: Field> fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

pub(crate) fn to_vector<F: Field>(p: &Polynomial<F>) -> Vector<F> {
    p.terms().iter().map(|(m, c)| (m.clone(), 0, c.clone())).collect()
}

pub(crate) fn from_vector<F: Field>(ring: &Arc<PolyRing>, v: Vector<F>) -> Polynomial<F> {
    Polynomial::from_sorted_terms(ring, v.into_iter().map(|(m, _, c)| (m, c)).collect())
}

/// Computes the reduced Gröbner basis of `gens` in `order`.
pub fn groebner_basis<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> Result<GroebnerBasis<F>> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("empty generator list; pass the ring explicitly".into()))?;
    let ring = Arc::new(first.ring().with_order(order.clone())?);
    groebner_basis_in(&ring, gens, false)
}

pub(crate) fn groebner_basis_in<F: Field>(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial<F>],
    quotient: bool,
) -> Result<GroebnerBasis<F>> {
    let mut vecs = Vec::with_capacity(gens.len());
    for g in gens {
        vecs.push(to_vector(&g.with_ring(ring)?));
    }
    let ord = ModuleOrder::ideal(ring);
    let basis = cache::groebner(vecs, &ord, None)?;
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: basis.iter().map(|v| from_vector(ring, v.clone())).collect(),
        quotient,
    })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    /// Whether the basis was computed for a lifted quotient-ring ideal.
    pub fn has_quotient_context(&self) -> bool {
        self.quotient
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.elements.iter().map(|g| g.lm().unwrap().clone()).collect()
    }

    /// Remainder of `p` with no term divisible by a leading monomial.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Polynomial<F>> {
        let orig = p.ring().clone();
        let p = p.with_ring(&self.ring)?;
        let basis: Vec<Vector<F>> = self.elements.iter().map(to_vector).collect();
        let nf = engine::normal_form(to_vector(&p), &basis, &ModuleOrder::ideal(&self.ring));
        from_vector(&self.ring, nf).with_ring(&orig)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Re-checks that all S-polynomials reduce to zero.
    pub fn verify(&self) -> bool {
        let basis: Vec<Vector<F>> = self.elements.iter().map(to_vector).collect();
        engine::verify_basis(&basis, &ModuleOrder::ideal(&self.ring))
    }
}

/// The ring `R = P/Q`; `Q` may be zero.
pub struct QuotientRing<F> {
    ambient: Arc<PolyRing>,
    relations: Vec<Polynomial<F>>,
    basis: OnceLock<Result<GroebnerBasis<F>>>,
}

impl<F: Field> fmt::Debug for QuotientRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientRing")
            .field("ambient", &self.ambient.names())
            .field("relations", &self.relations)
            .finish()
    }
}

impl<F: Field> QuotientRing<F> {
    pub fn polynomial(ambient: &Arc<PolyRing>) -> Arc<Self> {
        Self::new(ambient, Vec::new()).expect("no relations")
    }

    pub fn new(ambient: &Arc<PolyRing>, relations: Vec<Polynomial<F>>) -> Result<Arc<Self>> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            rels.push(r.with_ring(ambient)?);
        }
        rels.retain(|r| !r.is_zero());
        Ok(Arc::new(QuotientRing {
            ambient: ambient.clone(),
            relations: rels,
            basis: OnceLock::new(),
        }))
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// Reduced Gröbner basis of `Q` in the ambient order.
    pub fn relation_basis(&self) -> Result<&GroebnerBasis<F>> {
        self.basis
            .get_or_init(|| groebner_basis_in(&self.ambient, &self.relations, false))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Normal form modulo `Q`.
    pub fn reduce(&self, p: &Polynomial<F>) -> Result<Polynomial<F>> {
        if self.relations.is_empty() {
            return Ok(p.clone());
        }
        self.relation_basis()?.normal_form(p)
    }

    /// `Q` as an ideal of the ambient polynomial ring.
    pub fn defining_ideal(&self) -> Ideal<F> {
        Ideal::new(&QuotientRing::polynomial(&self.ambient), self.relations.clone())
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        Polynomial::var(&self.ambient, i)
    }

    pub fn same_ring(&self, other: &QuotientRing<F>) -> bool {
        std::ptr::eq(self, other)
            || (*self.ambient == *other.ambient && self.relations == other.relations)
    }
}

/// Ideal of `R = P/Q`, stored through generators in `P`.
#[derive(Clone)]
pub struct Ideal<F> {
    ring: Arc<QuotientRing<F>>,
    gens: Vec<Polynomial<F>>,
    gb: Arc<OnceLock<Result<GroebnerBasis<F>>>>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<QuotientRing<F>>, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens
            .into_iter()
            .map(|g| g.with_ring(ring.ambient()).expect("generator outside the ambient ring"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: Arc::new(OnceLock::new()),
        }
    }

    pub fn zero(ring: &Arc<QuotientRing<F>>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<QuotientRing<F>>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring.ambient())])
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Arc<QuotientRing<F>>) -> Self {
        let gens = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        self.ring.ambient()
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    fn check(&self, other: &Ideal<F>) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Generators together with those of `Q`.
    pub fn lifted_gens(&self) -> Vec<Polynomial<F>> {
        let mut g = self.gens.clone();
        g.extend(self.ring.relations().iter().cloned());
        g
    }

    /// The preimage `I + Q` in `P`, as an ideal of the polynomial ring.
    pub fn lift(&self) -> Ideal<F> {
        Ideal::new(&QuotientRing::polynomial(self.ambient()), self.lifted_gens())
    }

    /// Same generators viewed in another quotient of the same ambient ring.
    pub fn in_ring(&self, ring: &Arc<QuotientRing<F>>) -> Result<Ideal<F>> {
        if !ring.ambient().same_variables(self.ambient()) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal::new(ring, self.gens.clone()))
    }

    /// Reduced Gröbner basis of the lift in the ambient order.
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis<F>> {
        self.gb
            .get_or_init(|| groebner_basis_in(self.ambient(), &self.lifted_gens(), !self.ring.is_polynomial_ring()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn groebner_basis_in(&self, order: &MonomialOrder) -> Result<GroebnerBasis<F>> {
        let ring = Arc::new(self.ambient().with_order(order.clone())?);
        groebner_basis_in(&ring, &self.lifted_gens(), !self.ring.is_polynomial_ring())
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.groebner_basis()?.normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        self.groebner_basis()?.contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        let gb = self.groebner_basis()?;
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    /// Zero in `R`, i.e. contained in `Q`.
    pub fn is_zero(&self) -> Result<bool> {
        for g in &self.gens {
            if !self.ring.reduce(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators reduced modulo `Q`, with those lying in `Q` removed.
    pub fn reduced_gens(&self) -> Result<Vec<Polynomial<F>>> {
        let mut out = Vec::new();
        for g in &self.gens {
            let r = self.ring.reduce(g)?;
            if !r.is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Whether every generator is homogeneous for the primary grading.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
            && self.ring.relations().iter().all(|g| g.is_homogeneous())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.try_mul(b)?);
            }
        }
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn power(&self, e: u32) -> Result<Ideal<F>> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ I'` by eliminating a tag variable from `t·I + (1-t)·I'`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let p = self.ambient();
        let n = p.nvars();
        let tag = p.fresh_name("tag");
        let ext = Arc::new(
            p.extended(&[tag.as_str()], &[1], &[0])?
                .with_order(MonomialOrder::Elimination(vec![n]))?,
        );
        let t = Polynomial::<F>::var(&ext, n);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in self.lifted_gens() {
            gens.push(&g.embed(&ext) * &t);
        }
        for g in other.lifted_gens() {
            gens.push(&g.embed(&ext) * &one_minus_t);
        }
        let gb = groebner_basis_in(&ext, &gens, false)?;
        let result: Vec<Polynomial<F>> = gb.elements().iter().filter_map(|g| g.restrict(p)).collect();
        self.from_lifted(result)
    }

    /// Builds an ideal of this ring from generators of a lifted ideal.
    fn from_lifted(&self, gens: Vec<Polynomial<F>>) -> Result<Ideal<F>> {
        let mut out = Vec::new();
        for g in gens {
            let r = self.ring.reduce(&g)?;
            if !r.is_zero() {
                out.push(r);
            }
        }
        Ok(Ideal::new(&self.ring, out))
    }

    /// `I : (f)`, computed as `(I ∩ (f)) / f`.
    pub fn colon_element(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if self.ring.reduce(f)?.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let poly = QuotientRing::polynomial(self.ambient());
        let lifted = self.lift().intersect(&Ideal::new(&poly, vec![f.clone()]))?;
        let mut quot = Vec::new();
        for g in lifted.gens() {
            let q = g
                .div_exact(f)
                .ok_or_else(|| Error::CrossCheck("intersection element not divisible".into()))?;
            quot.push(q);
        }
        self.from_lifted(quot)
    }

    /// `I : J = ∩_{g ∈ J} I : (g)`.
    pub fn colon(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut acc: Option<Ideal<F>> = None;
        for g in other.reduced_gens()? {
            let c = self.colon_element(&g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : J^∞` by iterated colons.
    pub fn saturate(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other)?;
            if cur.contains_ideal(&next)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I ∩ k[remaining variables]` for the lift of `I`, via a block order.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal<F>> {
        let p = self.ambient();
        let gb = self.groebner_basis_in(&MonomialOrder::Elimination(vars.to_vec()))?;
        let kept: Vec<Polynomial<F>> = gb
            .elements()
            .iter()
            .filter(|g| g.support().iter().all(|v| !vars.contains(v)))
            .map(|g| g.with_ring(p))
            .collect::<Result<_>>()?;
        Ok(Ideal::new(&QuotientRing::polynomial(p), kept))
    }

    /// `p ∈ √I` via the Rabinowitsch trick.
    pub fn radical_contains_element(&self, p: &Polynomial<F>) -> Result<bool> {
        if self.contains(p)? {
            return Ok(true);
        }
        let amb = self.ambient();
        let n = amb.nvars();
        let y = amb.fresh_name("rab");
        let ext = Arc::new(amb.extended(&[y.as_str()], &[1], &[0])?);
        let mut gens: Vec<Polynomial<F>> = self.lifted_gens().iter().map(|g| g.embed(&ext)).collect();
        let yp = &Polynomial::var(&ext, n) * &p.embed(&ext);
        gens.push(&Polynomial::one(&ext) - &yp);
        Ok(groebner_basis_in(&ext, &gens, false)?.is_unit())
    }

    /// `other ⊆ √I`.
    pub fn radical_contains(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        for g in &other.gens {
            if !self.radical_contains_element(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn radical_equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.radical_contains(other)? && other.radical_contains(self)?)
    }

    /// A minimal homogeneous generating set (graded Nakayama): generators
    /// are scanned by increasing degree and kept when not already in the
    /// ideal of those kept before them.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<F>>> {
        if !self.is_homogeneous() {
            return Err(Error::NotGraded("minimal generators need homogeneous input".into()));
        }
        let mut gens = self.reduced_gens()?;
        gens.sort_by_key(|g| g.degree().unwrap_or(0));
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        for g in gens {
            let cur = Ideal::new(&self.ring, kept.clone());
            if !cur.contains(&g)? {
                kept.push(g);
            }
        }
        Ok(kept)
    }
}

#[cfg(test)]
mod tests;
