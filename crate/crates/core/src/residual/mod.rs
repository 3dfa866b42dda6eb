//! Residual intersections `J = 𝔞 : I`: classification, r-minimal
//! generation, the Kitt filtration, `τ`, the layouts of the complexes
//! `F•` and `Q•`, ericci, free approach certificates and the regularity
//! bound.

mod layout;

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use layout::{
    f_complex_layout, hilbert_identity, q_layout_from_pieces, GradedComplexLayout, IdentityCheck, LayoutKind,
};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Ideal, QuotientRing};
use crate::invariants::{
    depth_regularity, height, hilbert_series, hilbert_series_quotient, is_cohen_macaulay, multiplicity,
    ring_dim, ring_hilbert_series, serre_condition, unmixed_check, INFINITE_HEIGHT,
};
use crate::koszul::{koszul_complex, proper_sequence_check, sym_bigraded_betti, wedge_coefficient, WedgeElement};
use crate::module::{fitting_ideal, minors_ideal, subsets, GradedMap, Matrix, SubquotientModule};
use crate::poly::Polynomial;

/// Default number of seeds tried for general elements.
pub const DEFAULT_ATTEMPTS: usize = 8;

fn homogeneous_degree<F: Field>(p: &Polynomial<F>, what: &str) -> Result<i64> {
    match p.degree_info() {
        (Some(d), true) => Ok(d),
        (Some(_), false) => Err(Error::NotGraded(format!("{what} {p} is not homogeneous"))),
        (None, _) => Err(Error::InvalidInput(format!("{what} is zero"))),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `c` with `g = Σ c_t f_t` in `R`, read off a minimal kernel generator of
/// `[g | f]` whose first coordinate is a unit. `None` when `g ∉ (f)`.
pub fn lift_to_generators<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    f: &[Polynomial<F>],
    g: &Polynomial<F>,
) -> Result<Option<Vec<Polynomial<F>>>> {
    let amb = ring.ambient();
    let g = ring.reduce(g)?;
    if g.is_zero() {
        return Ok(Some(vec![Polynomial::zero(amb); f.len()]));
    }
    let gd = homogeneous_degree(&g, "element")?;
    let mut src = vec![gd];
    for p in f {
        src.push(homogeneous_degree(p, "generator")?);
    }
    let mut row = vec![g.clone()];
    row.extend(f.iter().cloned());
    let map = GradedMap::new(ring, src, vec![0], Matrix::row_vector(amb, row)?)?;
    let ker = map.kernel()?;
    for col in ker.matrix().columns() {
        let c0 = ring.reduce(&col[0])?;
        if c0.is_constant() && !c0.is_zero() {
            let inv = c0.lc().and_then(|c| c.inv()).expect("nonzero constant");
            let coeffs: Vec<Polynomial<F>> = col[1..].iter().map(|p| -p.scale(&inv)).collect();
            return Ok(Some(coeffs));
        }
    }
    Ok(None)
}

/// `(R, f, a, Φ)` with `[a] = [f]·Φ`.
#[derive(Clone, Debug)]
pub struct ResidualInput<F: Field> {
    ring: Arc<QuotientRing<F>>,
    f: Vec<Polynomial<F>>,
    d: Vec<i64>,
    a: Vec<Polynomial<F>>,
    l: Vec<i64>,
    phi: Matrix<F>,
    seed: Option<u64>,
}

impl<F: Field> ResidualInput<F> {
    fn check_generators(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
        if f.is_empty() {
            return Err(Error::InvalidInput("I needs at least one generator".into()));
        }
        f.iter().map(|p| ring.reduce(p)).collect()
    }

    /// Explicit `a`; `Φ` is obtained by lifting each `a_j` to `f`.
    pub fn explicit(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>], a: &[Polynomial<F>]) -> Result<Self> {
        let f = Self::check_generators(ring, f)?;
        if a.is_empty() {
            return Err(Error::InvalidInput("𝔞 needs at least one generator".into()));
        }
        let mut cols = Vec::with_capacity(a.len());
        for (j, g) in a.iter().enumerate() {
            match lift_to_generators(ring, &f, g)? {
                Some(c) => cols.push(c),
                None => {
                    return Err(Error::InvalidInput(format!("a_{} = {g} is not in I", j + 1)));
                }
            }
        }
        let phi = Matrix::from_columns(ring.ambient(), f.len(), cols)?;
        let mut input = Self::with_matrix(ring, &f, &phi)?;
        input.a = a.iter().map(|p| ring.reduce(p)).collect::<Result<_>>()?;
        Ok(input)
    }

    /// `a = f·Φ`.
    pub fn with_matrix(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>], phi: &Matrix<F>) -> Result<Self> {
        let f = Self::check_generators(ring, f)?;
        if phi.nrows() != f.len() || phi.ncols() == 0 {
            return Err(Error::InvalidInput("Φ must be r × s with s ≥ 1".into()));
        }
        let d = f
            .iter()
            .map(|p| homogeneous_degree(p, "generator"))
            .collect::<Result<Vec<_>>>()?;
        let row = Matrix::row_vector(ring.ambient(), f.clone())?;
        let prod = row.mul(phi)?;
        let mut a = Vec::with_capacity(phi.ncols());
        let mut l = Vec::with_capacity(phi.ncols());
        for j in 0..phi.ncols() {
            let aj = ring.reduce(prod.entry(0, j))?;
            l.push(homogeneous_degree(&aj, "residual generator")?);
            a.push(aj);
        }
        Ok(ResidualInput {
            ring: ring.clone(),
            f,
            d,
            a,
            l,
            phi: phi.clone(),
            seed: None,
        })
    }

    /// Seeded general elements of `I` in the given degrees.
    pub fn general(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>], degrees: &[i64], seed: u64) -> Result<Self> {
        let (_, phi) = general_elements(ring, f, degrees, seed)?;
        let mut input = Self::with_matrix(ring, f, &phi)?;
        input.seed = Some(seed);
        Ok(input)
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.f
    }

    pub fn residual_generators(&self) -> &[Polynomial<F>] {
        &self.a
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.d
    }

    pub fn residual_degrees(&self) -> &[i64] {
        &self.l
    }

    pub fn phi(&self) -> &Matrix<F> {
        &self.phi
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn r(&self) -> usize {
        self.f.len()
    }

    pub fn s(&self) -> usize {
        self.a.len()
    }

    pub fn i_ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ring, self.f.clone())
    }

    pub fn a_ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ring, self.a.clone())
    }

    /// `0 : I = 0`, i.e. `grade I ≥ 1`.
    pub fn has_positive_grade(&self) -> Result<bool> {
        Ideal::zero(&self.ring).colon(&self.i_ideal())?.is_zero()
    }

    /// `Σ_t c_tj f_t = a_j` for all `j`.
    pub fn verify_phi(&self) -> Result<bool> {
        let row = Matrix::row_vector(self.ring.ambient(), self.f.clone())?;
        let prod = row.mul(&self.phi)?;
        for (j, aj) in self.a.iter().enumerate() {
            if !self.ring.reduce(&(prod.entry(0, j) - aj))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `a_j = Σ_t c_tj f_t` with `c_tj` a seeded combination of all monomials
/// of degree `l_j - d_t`. Returns the elements and `Φ`.
pub fn general_elements<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    f: &[Polynomial<F>],
    degrees: &[i64],
    seed: u64,
) -> Result<(Vec<Polynomial<F>>, Matrix<F>)> {
    let amb = ring.ambient();
    let d = f
        .iter()
        .map(|p| homogeneous_degree(p, "generator"))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut phi = Matrix::zeros(amb, f.len(), degrees.len());
    let mut out = Vec::with_capacity(degrees.len());
    for (j, &lj) in degrees.iter().enumerate() {
        let mut usable = false;
        let mut acc = Polynomial::zero(amb);
        for (t, ft) in f.iter().enumerate() {
            let e = lj - d[t];
            if e < 0 {
                continue;
            }
            let mons = amb.monomials_of_degree(e);
            usable |= !mons.is_empty();
            let terms = mons.into_iter().map(|m| (m, F::sample(&mut rng))).collect();
            let c = Polynomial::from_terms(amb, terms);
            acc = &acc + &(&c * ft);
            phi.set(t, j, c);
        }
        if !usable {
            return Err(Error::InvalidInput(format!(
                "no element of I has degree {lj}"
            )));
        }
        out.push(ring.reduce(&acc)?);
    }
    Ok((out, phi))
}

/// Homogeneous forms of the given degrees, each a seeded combination of all
/// monomials of its degree.
pub fn general_forms<F: Field>(ring: &Arc<QuotientRing<F>>, degrees: &[i64], seed: u64) -> Result<Vec<Polynomial<F>>> {
    let amb = ring.ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    degrees
        .iter()
        .map(|&e| {
            let terms = amb
                .monomials_of_degree(e)
                .into_iter()
                .map(|m| (m, F::sample(&mut rng)))
                .collect();
            ring.reduce(&Polynomial::from_terms(amb, terms))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ColonResult<F: Field> {
    pub j: Ideal<F>,
    /// [`INFINITE_HEIGHT`] for the unit ideal.
    pub height: usize,
    pub proper: bool,
}

impl<F: Field> ColonResult<F> {
    pub fn flag(&self) -> Option<&'static str> {
        (!self.proper).then_some("not residual: colon is unit ideal")
    }
}

pub fn residual_colon<F: Field>(input: &ResidualInput<F>) -> Result<ColonResult<F>> {
    let j = input.a_ideal().colon(&input.i_ideal())?;
    let proper = !j.is_unit()?;
    let height = if proper { height(&j)? } else { INFINITE_HEIGHT };
    Ok(ColonResult { j, height, proper })
}

/// A general residual with the bounded reseeding policy: seeds `seed`,
/// `seed + 1`, … are tried until `ht(J) ≥ s`.
pub struct GeneralResidual<F: Field> {
    pub input: ResidualInput<F>,
    pub colon: ColonResult<F>,
    pub seeds_tried: Vec<u64>,
}

pub fn general_residual<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    f: &[Polynomial<F>],
    degrees: &[i64],
    seed: u64,
    attempts: usize,
) -> Result<GeneralResidual<F>> {
    let mut tried = Vec::new();
    for k in 0..attempts.max(1) {
        let sd = seed.wrapping_add(k as u64);
        tried.push(sd);
        let input = ResidualInput::general(ring, f, degrees, sd)?;
        let colon = residual_colon(&input)?;
        if colon.proper && colon.height >= degrees.len() {
            return Ok(GeneralResidual {
                input,
                colon,
                seeds_tried: tried,
            });
        }
    }
    Err(Error::Hypothesis(format!(
        "no seed among {tried:?} gave a residual intersection of height {}",
        degrees.len()
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ResidualKind {
    None,
    Algebraic,
    Arithmetic,
    Geometric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: ResidualKind,
    pub algebraic: bool,
    pub arithmetic: bool,
    pub geometric: bool,
    pub height_j: Option<usize>,
    pub height_i_plus_j: Option<usize>,
    pub height_fitting: Option<usize>,
}

fn finite(h: usize) -> Option<usize> {
    (h != INFINITE_HEIGHT).then_some(h)
}

/// Algebraic: `ht J ≥ s`, `J ≠ R`. Geometric: also `ht(I + J) ≥ s + 1`.
/// Arithmetic: also `ht(Fitt_1(I/𝔞) + I + J) ≥ s + 1`.
pub fn classify_residual<F: Field>(input: &ResidualInput<F>, colon: &ColonResult<F>) -> Result<Classification> {
    let s = input.s();
    let algebraic = colon.proper && colon.height >= s;
    if !algebraic {
        return Ok(Classification {
            kind: ResidualKind::None,
            algebraic,
            arithmetic: false,
            geometric: false,
            height_j: finite(colon.height),
            height_i_plus_j: None,
            height_fitting: None,
        });
    }
    let ij = input.i_ideal().sum(&colon.j)?;
    let h_ij = height(&ij)?;
    let quotient = SubquotientModule::ideal_quotient(&input.i_ideal(), &input.a_ideal())?;
    let fitt = fitting_ideal(&quotient, 1)?;
    let h_fit = height(&fitt.sum(&ij)?)?;
    let geometric = h_ij > s;
    let arithmetic = h_fit > s;
    if geometric && !arithmetic {
        return Err(Error::CrossCheck("geometric residual that is not arithmetic".into()));
    }
    let kind = if geometric {
        ResidualKind::Geometric
    } else if arithmetic {
        ResidualKind::Arithmetic
    } else {
        ResidualKind::Algebraic
    };
    Ok(Classification {
        kind,
        algebraic,
        arithmetic,
        geometric,
        height_j: finite(colon.height),
        height_i_plus_j: finite(h_ij),
        height_fitting: finite(h_fit),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RMinimality {
    pub holds: bool,
    pub zeta: usize,
    pub r: usize,
    pub dim_r: i64,
    pub height_i: usize,
    /// `I : I_1(φ)^∞ = R`.
    pub saturation_is_unit: bool,
    pub entries_height: Option<usize>,
    /// `√I = √I_1(φ)`, reported when `ζ = ht I`.
    pub radical_test: Option<bool>,
    pub diagnostic: Option<String>,
}

/// `μ(I_p) = r` for every prime `p ⊇ I` with `ht p ≥ ζ`: holds iff every
/// prime containing `I` contains the entries of a minimal presentation,
/// or `ζ > dim R`.
pub fn r_min_generated<F: Field>(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>], zeta: usize) -> Result<RMinimality> {
    let i = Ideal::new(ring, f.to_vec());
    if !i.is_homogeneous() {
        return Err(Error::NotGraded("r-minimality needs homogeneous generators".into()));
    }
    let module = SubquotientModule::ideal(&i);
    let r = f.len();
    let mu = module.num_generators()?;
    if mu != r {
        return Err(Error::Hypothesis(format!(
            "the {r} given generators are not minimal (μ(I) = {mu})"
        )));
    }
    let (phi, _) = module.minimal_presentation()?;
    let entries: Vec<Polynomial<F>> = phi.matrix().columns().iter().flatten().cloned().collect();
    let i1 = Ideal::new(ring, entries);
    let saturation_is_unit = i.saturate(&i1)?.is_unit()?;
    let dim_r = ring_dim(ring)?;
    let height_i = height(&i)?;
    let holds = saturation_is_unit || zeta as i64 > dim_r;
    let radical_test = if zeta == height_i {
        Some(i.radical_equals(&i1)?)
    } else {
        None
    };
    let diagnostic = (!holds).then(|| {
        format!(
            "r-minimality from height {zeta} fails at height {} criterion",
            zeta + 1
        )
    });
    Ok(RMinimality {
        holds,
        zeta,
        r,
        dim_r,
        height_i,
        saturation_is_unit,
        entries_height: finite(height(&i1)?),
        radical_test,
        diagnostic,
    })
}

/// `G_s`: `ht Fitt_k(I) ≥ k + 1` for `1 ≤ k ≤ s - 1`. The minus variant
/// asks `ht Fitt_k(I) ≥ k` for `1 ≤ k ≤ s`.
pub fn g_condition<F: Field>(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>], s: usize, minus: bool) -> Result<bool> {
    let module = SubquotientModule::ideal(&Ideal::new(ring, f.to_vec()));
    let (range, offset) = if minus { (1..=s, 0) } else { (1..=s.saturating_sub(1), 1) };
    for k in range {
        let fitt = fitting_ideal(&module, k)?;
        if height(&fitt)? < k + offset {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Where a Kitt generator comes from: the wedge `ζ_E` and the cycle
/// generators `(index i, column)` of `Z_i` it is multiplied with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KittGenerator {
    pub level: usize,
    pub gammas: Vec<usize>,
    pub cycles: Vec<(usize, usize)>,
    pub value: String,
}

#[derive(Clone, Debug)]
pub struct KittChain<F: Field> {
    levels: Vec<Ideal<F>>,
    generators: Vec<KittGenerator>,
}

impl<F: Field> KittChain<F> {
    /// `Kitt_i` for `i = 0..=r`.
    pub fn level(&self, i: usize) -> &Ideal<F> {
        &self.levels[i]
    }

    pub fn levels(&self) -> &[Ideal<F>] {
        &self.levels
    }

    /// `Kitt(𝔞, I) = Kitt_r`.
    pub fn kitt(&self) -> &Ideal<F> {
        self.levels.last().expect("at least Kitt_0")
    }

    pub fn generators(&self) -> &[KittGenerator] {
        &self.generators
    }
}

/// Products of cycle generators of total degree `target`, as
/// `(max index, factors, wedge)`; odd generators appear at most once.
fn cycle_products<F: Field>(
    one: WedgeElement<F>,
    cycles: &[(usize, usize, WedgeElement<F>)],
    target: usize,
) -> Result<Vec<(usize, Vec<(usize, usize)>, WedgeElement<F>)>> {
    fn go<F: Field>(
        cycles: &[(usize, usize, WedgeElement<F>)],
        start: usize,
        left: usize,
        cur: &mut Vec<usize>,
        acc: WedgeElement<F>,
        out: &mut Vec<(usize, Vec<(usize, usize)>, WedgeElement<F>)>,
    ) -> Result<()> {
        if left == 0 {
            let factors: Vec<(usize, usize)> = cur.iter().map(|&k| (cycles[k].0, cycles[k].1)).collect();
            let top = factors.iter().map(|x| x.0).max().unwrap_or(0);
            out.push((top, factors, acc));
            return Ok(());
        }
        for k in start..cycles.len() {
            let (deg, _, w) = &cycles[k];
            if *deg > left {
                continue;
            }
            let next = acc.wedge(w)?;
            if next.is_zero() {
                continue;
            }
            cur.push(k);
            let from = if deg % 2 == 0 { k } else { k + 1 };
            go(cycles, from, left - deg, cur, next, out)?;
            cur.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(cycles, 0, target, &mut Vec::new(), one, &mut out)?;
    Ok(out)
}

/// `Kitt_i = ⟨Γ_• · ⟨Z_0, …, Z_i⟩⟩_r`: top coefficients of `ζ_E ∧ z_1 ∧ … ∧
/// z_k` with `z_m` cycle generators of index at most `i`.
pub fn kitt_chain<F: Field>(input: &ResidualInput<F>) -> Result<KittChain<F>> {
    let ring = input.ring();
    let amb = ring.ambient();
    let r = input.r();
    let s = input.s();
    let k = koszul_complex(ring, input.generators())?;
    let zetas: Vec<WedgeElement<F>> = input
        .phi()
        .columns()
        .iter()
        .map(|c| WedgeElement::from_vector(amb, c))
        .collect();
    let mut cycles = Vec::new();
    for i in 1..=r {
        for (j, w) in k.cycle_wedges(i)?.into_iter().enumerate() {
            if !w.is_zero() {
                cycles.push((i, j, w));
            }
        }
    }
    let mut found: Vec<(KittGenerator, Polynomial<F>)> = Vec::new();
    let mut seen = BTreeSet::new();
    for q in 0..=r.min(s) {
        let rest = r - q;
        let products = if rest == 0 {
            vec![(0, Vec::new(), WedgeElement::one(amb, r))]
        } else {
            cycle_products(WedgeElement::one(amb, r), &cycles, rest)?
        };
        if products.is_empty() {
            continue;
        }
        for e in subsets(s, q) {
            let mut zeta_e = WedgeElement::one(amb, r);
            for &t in &e {
                zeta_e = zeta_e.wedge(&zetas[t])?;
            }
            if zeta_e.is_zero() {
                continue;
            }
            for (top, factors, w) in &products {
                let c = ring.reduce(&wedge_coefficient(&[zeta_e.clone(), w.clone()])?)?;
                if c.is_zero() {
                    continue;
                }
                let key = (c.monic().to_string(), *top);
                if !seen.insert(key) {
                    continue;
                }
                found.push((
                    KittGenerator {
                        level: *top,
                        gammas: e.clone(),
                        cycles: factors.clone(),
                        value: c.to_string(),
                    },
                    c,
                ));
            }
        }
    }
    found.sort_by_key(|g| g.0.level);
    let levels = (0..=r)
        .map(|i| {
            let gens = found
                .iter()
                .filter(|g| g.0.level <= i)
                .map(|g| g.1.clone())
                .collect();
            Ideal::new(ring, gens)
        })
        .collect();
    Ok(KittChain {
        levels,
        generators: found.into_iter().map(|g| g.0).collect(),
    })
}

#[derive(Clone, Debug)]
pub struct Tau<F: Field> {
    pub ideal: Ideal<F>,
    pub minors: Vec<Polynomial<F>>,
    pub wedges: Vec<Polynomial<F>>,
    pub paths_agree: bool,
    pub minimal_generators: Vec<Polynomial<F>>,
    pub bound: usize,
}

impl<F: Field> Tau<F> {
    pub fn mu(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn within_bound(&self) -> bool {
        self.mu() <= self.bound
    }
}

/// `τ = 𝔞 + I_r(Φ)`, with the `r × r` minors computed both as
/// determinants and as top coefficients of `ζ_E` wedges.
pub fn tau<F: Field>(input: &ResidualInput<F>) -> Result<Tau<F>> {
    let ring = input.ring();
    let amb = ring.ambient();
    let (r, s) = (input.r(), input.s());
    let minors = minors_ideal(ring, input.phi(), r);
    let zetas: Vec<WedgeElement<F>> = input
        .phi()
        .columns()
        .iter()
        .map(|c| WedgeElement::from_vector(amb, c))
        .collect();
    let mut wedges = Vec::new();
    if s >= r {
        for e in subsets(s, r) {
            let elts: Vec<WedgeElement<F>> = e.iter().map(|&t| zetas[t].clone()).collect();
            let c = wedge_coefficient(&elts)?;
            if !c.is_zero() {
                wedges.push(c);
            }
        }
    }
    let via_wedges = Ideal::new(ring, wedges.clone());
    let paths_agree = minors.equals(&via_wedges)?;
    let mut gens = input.residual_generators().to_vec();
    gens.extend(minors.gens().iter().cloned());
    let ideal = Ideal::new(ring, gens);
    let minimal_generators = ideal.minimal_generators()?;
    Ok(Tau {
        ideal,
        minors: minors.gens().to_vec(),
        wedges,
        paths_agree,
        minimal_generators,
        bound: s + binomial(s, r),
    })
}

/// All orderings of `0..n`, identity first.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in (0..=p.len()).rev() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The `Q`-layout from the bigraded resolution of the symmetric algebra.
pub fn q_complex_layout<F: Field>(input: &ResidualInput<F>) -> Result<GradedComplexLayout> {
    let r = input.r();
    let f = input.generators();
    let mut proper = false;
    for p in permutations(r) {
        let g: Vec<Polynomial<F>> = p.iter().map(|&i| f[i].clone()).collect();
        if proper_sequence_check(input.ring(), &g)?.proper {
            proper = true;
            break;
        }
    }
    if !proper {
        return Err(Error::Hypothesis("no ordering of the generators is a proper sequence".into()));
    }
    let betti = sym_bigraded_betti(input.ring(), f)?;
    match betti.pd {
        Some(p) if p < r => {}
        _ => return Err(Error::Hypothesis(format!("pd of the symmetric algebra exceeds {}", r - 1))),
    }
    if betti.t_regularity != 0 {
        return Err(Error::Hypothesis(format!(
            "t-regularity of the symmetric algebra is {}",
            betti.t_regularity
        )));
    }
    let pieces: Vec<Vec<(i64, i64)>> = (0..=betti.length()).map(|i| betti.pieces(i)).collect();
    q_layout_from_pieces(r, input.s(), input.generator_degrees(), input.residual_degrees(), &pieces)
}

/// Checks the layout's Euler characteristic against `R/J`.
pub fn hilbert_identity_check<F: Field>(
    layout: &GradedComplexLayout,
    j: &Ideal<F>,
    n_max: i64,
) -> Result<IdentityCheck> {
    let hr = ring_hilbert_series(j.ring())?;
    let hm = hilbert_series_quotient(j)?;
    Ok(hilbert_identity(layout, &hr, &hm, n_max))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ericci {
    pub value: i128,
    /// From the Euler characteristic of the `F`-layout.
    pub layout_value: i128,
    /// `e(R/J)` for the accepted generic complete intersection residual.
    pub generic_value: i128,
    pub seeds_tried: Vec<u64>,
    pub rejected: Vec<String>,
}

/// Multiplicity of an `s`-residual intersection of a complete intersection
/// of degrees `d` by elements of degrees `l`, by two methods.
pub fn ericci<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    d: &[i64],
    l: &[i64],
    seed: u64,
    attempts: usize,
) -> Result<Ericci> {
    if !ring.ambient().is_standard_graded() {
        return Err(Error::Unsupported("ericci needs a standard graded ring".into()));
    }
    let (r, s) = (d.len(), l.len());
    let layout = f_complex_layout(r, s, d, l)?;
    let layout_value = layout.euler_series(&ring_hilbert_series(ring)?).multiplicity()?;
    let mut tried = Vec::new();
    let mut rejected = Vec::new();
    for k in 0..attempts.max(1) {
        let sd = seed.wrapping_add(k as u64);
        tried.push(sd);
        let ci = general_forms(ring, d, sd)?;
        if ci.iter().any(Polynomial::is_zero) {
            rejected.push(format!("seed {sd}: zero form"));
            continue;
        }
        if koszul_complex(ring, &ci)?.grade()? != Some(r) {
            rejected.push(format!("seed {sd}: not a regular sequence"));
            continue;
        }
        let input = ResidualInput::general(ring, &ci, l, sd)?;
        let colon = residual_colon(&input)?;
        if !colon.proper || colon.height < s {
            rejected.push(format!("seed {sd}: height of J below {s}"));
            continue;
        }
        let e = multiplicity(&SubquotientModule::quotient_by(&colon.j))?;
        if e == layout_value {
            return Ok(Ericci {
                value: e,
                layout_value,
                generic_value: e,
                seeds_tried: tried,
                rejected,
            });
        }
        rejected.push(format!("seed {sd}: e(R/J) = {e}, layout gives {layout_value}"));
    }
    Err(Error::CrossCheck(format!("ericci methods disagree: {}", rejected.join("; "))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Hypothesis {
    SAtLeastR,
    RMinimal,
    Serre,
    PositiveGrade,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 4] = [
        Hypothesis::SAtLeastR,
        Hypothesis::RMinimal,
        Hypothesis::Serre,
        Hypothesis::PositiveGrade,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
    /// Reported only; does not gate the certificate.
    pub informational: bool,
}

fn check(name: &str, passed: bool, evidence: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        evidence,
        informational: false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeApproachCertificate {
    pub tau: Vec<String>,
    pub hypotheses: Vec<Check>,
    pub checks: Vec<Check>,
    pub issued: bool,
    pub diagnostics: Vec<String>,
}

fn fmt_height(h: usize) -> String {
    if h == INFINITE_HEIGHT {
        "∞".to_string()
    } else {
        h.to_string()
    }
}

/// Runs the requested hypotheses and all certificate checks; every check
/// runs even after a failure.
pub fn free_approach_certificate<F: Field>(
    input: &ResidualInput<F>,
    colon: &ColonResult<F>,
    requested: &[Hypothesis],
    n_max: i64,
) -> Result<FreeApproachCertificate> {
    let ring = input.ring();
    let (r, s) = (input.r(), input.s());
    let mut hypotheses = Vec::new();
    let mut diagnostics = Vec::new();
    for h in requested {
        let c = match h {
            Hypothesis::SAtLeastR => check("s >= r", s >= r, format!("s = {s}, r = {r}")),
            Hypothesis::RMinimal => {
                let zeta = s.saturating_sub(1);
                let m = r_min_generated(ring, input.generators(), zeta)?;
                if let Some(d) = &m.diagnostic {
                    diagnostics.push(d.clone());
                }
                check(
                    "r-minimal from height s-1",
                    m.holds,
                    format!(
                        "zeta = {zeta}, I : I_1(phi)^inf unit = {}, dim R = {}",
                        m.saturation_is_unit, m.dim_r
                    ),
                )
            }
            Hypothesis::Serre => {
                let ok = serre_condition(&SubquotientModule::free(ring, vec![0]), s)?;
                check("R satisfies S_s", ok, format!("S_{s} via Ext dimensions"))
            }
            Hypothesis::PositiveGrade => {
                let ok = input.has_positive_grade()?;
                check("grade I >= 1", ok, "0 : I = 0".to_string())
            }
        };
        if !c.passed && !matches!(h, Hypothesis::RMinimal) {
            diagnostics.push(format!("hypothesis failed: {}", c.name));
        }
        hypotheses.push(c);
    }

    let t = tau(input)?;
    let j = &colon.j;
    let mut checks = Vec::new();
    checks.push(check(
        "tau paths agree",
        t.paths_agree,
        "minors of Phi vs wedges of zeta".to_string(),
    ));
    checks.push(check("tau in J", j.contains_ideal(&t.ideal)?, String::new()));
    checks.push(check("rad tau = rad J", t.ideal.radical_equals(j)?, String::new()));
    checks.push(check(
        "ht J = s",
        colon.height == s,
        format!("ht J = {}", fmt_height(colon.height)),
    ));
    let ht_tau = height(&t.ideal)?;
    checks.push(check("ht tau = s", ht_tau == s, format!("ht tau = {}", fmt_height(ht_tau))));
    checks.push(check(
        "mu(tau) <= s + C(s,r)",
        t.within_bound(),
        format!("mu = {}, bound = {}", t.mu(), t.bound),
    ));
    let layout = f_complex_layout(r, s, input.generator_degrees(), input.residual_degrees())?;
    let id = hilbert_identity_check(&layout, &t.ideal, n_max)?;
    checks.push(Check {
        name: "F-layout Hilbert identity for R/tau (expected under acyclicity)".to_string(),
        passed: id.holds,
        evidence: match id.first_failure {
            Some(n) => format!("first failure at n = {n}"),
            None => format!("n <= {n_max}"),
        },
        informational: true,
    });
    if colon.proper {
        let class = classify_residual(input, colon)?;
        if class.geometric {
            checks.push(check("tau = J (geometric)", t.ideal.equals(j)?, String::new()));
            let unmixed = unmixed_check(&SubquotientModule::quotient_by(j))?;
            checks.push(check("R/J unmixed (geometric)", unmixed, String::new()));
        }
    }
    for c in &checks {
        if !c.passed && !c.informational {
            diagnostics.push(format!("check failed: {}", c.name));
        }
    }
    let issued = hypotheses.iter().all(|c| c.passed) && checks.iter().all(|c| c.passed || c.informational);
    Ok(FreeApproachCertificate {
        tau: t.minimal_generators.iter().map(|p| p.to_string()).collect(),
        hypotheses,
        checks,
        issued,
        diagnostics,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityBound {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub reg_r: i64,
    pub sigma: i64,
    pub beg: i64,
    pub cohen_macaulay: bool,
    pub dimension_ok: bool,
}

/// `reg(R/τ) ≤ reg(R) + σ(𝔞) - (s - r + 1)·beg(I/𝔞) - s`.
pub fn regularity_bound_check<F: Field>(input: &ResidualInput<F>, tau: &Ideal<F>) -> Result<RegularityBound> {
    let ring = input.ring();
    let (r, s) = (input.r() as i64, input.s() as i64);
    let rq = SubquotientModule::quotient_by(tau);
    let lhs = depth_regularity(&rq)?.regularity;
    let free = SubquotientModule::free(ring, vec![0]);
    let reg_r = depth_regularity(&free)?.regularity;
    let sigma: i64 = input.residual_degrees().iter().sum();
    let quotient = SubquotientModule::ideal_quotient(&input.i_ideal(), &input.a_ideal())?;
    let hs = hilbert_series(&quotient)?;
    let lo = *input.generator_degrees().iter().min().expect("r ≥ 1");
    let hi = *input.generator_degrees().iter().max().expect("r ≥ 1");
    let beg = (lo..=hi)
        .find(|&n| hs.coefficient(n) != 0)
        .ok_or_else(|| Error::InvalidInput("I/𝔞 vanishes".into()))?;
    let rhs = reg_r + sigma - (s - r + 1) * beg - s;
    let dim_r = ring_dim(ring)?;
    let dim_q = hilbert_series_quotient(tau)?.dimension();
    Ok(RegularityBound {
        lhs,
        rhs,
        holds: lhs <= rhs,
        reg_r,
        sigma,
        beg,
        cohen_macaulay: is_cohen_macaulay(&free)?,
        dimension_ok: dim_q == dim_r - s,
    })
}
