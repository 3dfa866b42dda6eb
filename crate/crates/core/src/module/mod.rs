//! Graded free modules, maps, subquotients, kernels and minimal free
//! resolutions.
//!
//! All computations run over the polynomial ambient `P`; a module over
//! `R = P/Q` is handled through its lift (relations `q·e_i` are appended
//! wherever a submodule of a free module is formed).

mod matrix;
mod resolution;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use matrix::{subsets, Matrix};
pub use resolution::{
    complex_homology, ext_module, ext_modules, ext_modules_from, minimal_free_resolution, BettiTable, FreeResolution};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::engine::{self, ModuleOrder, Vector};
use crate::groebner::{cache_groebner, Ideal, QuotientRing};
use crate::poly::{Monomial, Polynomial};

/// Free module `⊕ R(-d_i)`, recorded by its generator degrees `d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    pub degrees: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(degrees: Vec<i64>) -> Self {
        GradedFreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Twists in `R(-d)` notation, i.e. the negated generator degrees.
    pub fn twists(&self) -> Vec<i64> {
        self.degrees.iter().map(|d| -d).collect()
    }
}

impl fmt::Display for GradedFreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_twists(&self.degrees))
    }
}

/// `R(-2)^3 + R(-3)^2`-style rendering of generator degrees.
pub fn format_twists(degrees: &[i64]) -> String {
    if degrees.is_empty() {
        return "0".to_string();
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &d in degrees {
        *counts.entry(d).or_default() += 1;
    }
    counts
        .iter()
        .map(|(&d, &n)| {
            let base = if d == 0 { "R".to_string() } else { format!("R({})", -d) };
            if n == 1 {
                base
            } else {
                format!("{base}^{n}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Degree of a homogeneous column in a free module with generator degrees
/// `degrees`; `Ok(None)` for the zero column.
pub fn column_degree<F: Field>(col: &[Polynomial<F>], degrees: &[i64]) -> Result<Option<i64>> {
    let mut deg = None;
    for (p, d) in col.iter().zip(degrees) {
        let (pd, homog) = p.degree_info();
        let Some(pd) = pd else { continue };
        if !homog {
            return Err(Error::NotGraded(format!("entry {p} is not homogeneous")));
        }
        match deg {
            None => deg = Some(pd + d),
            Some(e) if e != pd + d => {
                return Err(Error::NotGraded("column entries have inconsistent degrees".into()))
            }
            _ => {}
        }
    }
    Ok(deg)
}

/// Homogeneous map between graded free modules over `R`; columns are the
/// images of the source basis.
#[derive(Clone)]
pub struct GradedMap<F> {
    ring: Arc<QuotientRing<F>>,
    source: GradedFreeModule,
    target: GradedFreeModule,
    matrix: Matrix<F>,
}

impl<F: Field> fmt::Debug for GradedMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <- {}: {:?}", self.target, self.source, self.matrix)
    }
}

impl<F: Field> GradedMap<F> {
    /// Checks dimensions and that entry `(i, j)` is zero or homogeneous of
    /// degree `source_j - target_i`.
    pub fn new(
        ring: &Arc<QuotientRing<F>>,
        source: Vec<i64>,
        target: Vec<i64>,
        matrix: Matrix<F>,
    ) -> Result<Self> {
        if matrix.ncols() != source.len() || matrix.nrows() != target.len() {
            return Err(Error::InvalidInput("map dimensions do not match its modules".into()));
        }
        for (j, col) in matrix.columns().iter().enumerate() {
            for (i, p) in col.iter().enumerate() {
                let (d, homog) = p.degree_info();
                if let Some(d) = d {
                    if !homog || d != source[j] - target[i] {
                        return Err(Error::NotGraded(format!(
                            "entry ({i},{j}) = {p} should be homogeneous of degree {}",
                            source[j] - target[i]
                        )));
                    }
                }
            }
        }
        Ok(GradedMap {
            ring: ring.clone(),
            source: GradedFreeModule::new(source),
            target: GradedFreeModule::new(target),
            matrix,
        })
    }

    /// Source degrees inferred from the columns; zero columns get degree 0.
    pub fn infer(ring: &Arc<QuotientRing<F>>, matrix: Matrix<F>, target: Vec<i64>) -> Result<Self> {
        let mut source = Vec::with_capacity(matrix.ncols());
        for col in matrix.columns() {
            source.push(column_degree(col, &target)?.unwrap_or(0));
        }
        Self::new(ring, source, target, matrix)
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap<F>) -> Result<GradedMap<F>> {
        if other.target != self.source {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        let m = self.matrix.mul(&other.matrix)?;
        let m = m.map_entries(|p| self.ring.reduce(p))?;
        GradedMap::new(&self.ring, other.source.degrees.clone(), self.target.degrees.clone(), m)
    }

    /// Zero in `R`.
    pub fn is_zero(&self) -> Result<bool> {
        for p in self.matrix.columns().iter().flatten() {
            if !self.ring.reduce(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether some entry is a nonzero constant modulo `Q`.
    pub fn has_unit_entry(&self) -> Result<bool> {
        for p in self.matrix.columns().iter().flatten() {
            if self.ring.reduce(p)?.is_unit() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Dual map `Hom(target, R) → Hom(source, R)`.
    pub fn dual(&self) -> GradedMap<F> {
        GradedMap {
            ring: self.ring.clone(),
            source: GradedFreeModule::new(self.target.degrees.iter().map(|d| -d).collect()),
            target: GradedFreeModule::new(self.source.degrees.iter().map(|d| -d).collect()),
            matrix: self.matrix.transpose(),
        }
    }

    /// Minimal generators of the kernel, as the columns of a map into the
    /// source.
    pub fn kernel(&self) -> Result<GradedMap<F>> {
        let ker = syzygy_kernel(self)?;
        let cols = ker.matrix.columns();
        let keep = minimal_subset(&self.ring, &self.source.degrees, cols, &[])?;
        let m = ker.matrix.select_columns(&keep);
        let src = keep.iter().map(|&j| ker.source.degrees[j]).collect();
        GradedMap::new(&self.ring, src, self.source.degrees.clone(), m)
    }

    /// The image as a submodule of the target.
    pub fn image(&self) -> SubquotientModule<F> {
        SubquotientModule {
            ring: self.ring.clone(),
            degrees: self.target.degrees.clone(),
            gens: self.matrix.clone(),
            rels: Matrix::zeros(self.ring.ambient(), self.target.rank(), 0),
        }
    }

    pub fn cokernel(&self) -> SubquotientModule<F> {
        let ring = self.ring.ambient();
        SubquotientModule {
            ring: self.ring.clone(),
            degrees: self.target.degrees.clone(),
            gens: Matrix::identity(ring, self.target.rank()),
            rels: self.matrix.clone(),
        }
    }
}

/// `(im G + im L) / im L` inside the free module with generator degrees
/// `degrees`.
#[derive(Clone)]
pub struct SubquotientModule<F> {
    ring: Arc<QuotientRing<F>>,
    degrees: Vec<i64>,
    gens: Matrix<F>,
    rels: Matrix<F>,
}

impl<F: Field> fmt::Debug for SubquotientModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "subquotient of {}: gens {:?} rels {:?}",
            format_twists(&self.degrees),
            self.gens,
            self.rels
        )
    }
}

impl<F: Field> SubquotientModule<F> {
    pub fn new(ring: &Arc<QuotientRing<F>>, degrees: Vec<i64>, gens: Matrix<F>, rels: Matrix<F>) -> Result<Self> {
        if gens.nrows() != degrees.len() || rels.nrows() != degrees.len() {
            return Err(Error::InvalidInput("generator columns must live in the ambient free module".into()));
        }
        Ok(SubquotientModule {
            ring: ring.clone(),
            degrees,
            gens,
            rels,
        })
    }

    pub fn free(ring: &Arc<QuotientRing<F>>, degrees: Vec<i64>) -> Self {
        let n = degrees.len();
        SubquotientModule {
            ring: ring.clone(),
            gens: Matrix::identity(ring.ambient(), n),
            rels: Matrix::zeros(ring.ambient(), n, 0),
            degrees,
        }
    }

    /// `R/I` as a cyclic module.
    pub fn quotient_by(ideal: &Ideal<F>) -> Self {
        let ring = ideal.ring();
        let amb = ring.ambient();
        SubquotientModule {
            ring: ring.clone(),
            degrees: vec![0],
            gens: Matrix::identity(amb, 1),
            rels: Matrix::row_vector(amb, ideal.gens().to_vec()).expect("same ring"),
        }
    }

    /// `I ⊆ R` with its given generators.
    pub fn ideal(ideal: &Ideal<F>) -> Self {
        let ring = ideal.ring();
        let amb = ring.ambient();
        SubquotientModule {
            ring: ring.clone(),
            degrees: vec![0],
            gens: Matrix::row_vector(amb, ideal.gens().to_vec()).expect("same ring"),
            rels: Matrix::zeros(amb, 1, 0),
        }
    }

    /// `I/J` for ideals `J ⊆ I`, generated by the generators of `I`.
    pub fn ideal_quotient(i: &Ideal<F>, j: &Ideal<F>) -> Result<Self> {
        let amb = i.ring().ambient();
        Ok(SubquotientModule {
            ring: i.ring().clone(),
            degrees: vec![0],
            gens: Matrix::row_vector(amb, i.gens().to_vec())?,
            rels: Matrix::row_vector(amb, j.gens().to_vec())?,
        })
    }

    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn ambient_degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn generators(&self) -> &Matrix<F> {
        &self.gens
    }

    pub fn relations(&self) -> &Matrix<F> {
        &self.rels
    }

    /// Degrees of the given generators (zero columns get degree 0).
    pub fn generator_degrees(&self) -> Result<Vec<i64>> {
        self.gens
            .columns()
            .iter()
            .map(|c| Ok(column_degree(c, &self.degrees)?.unwrap_or(0)))
            .collect()
    }

    /// The same module viewed over the polynomial ambient: `q·e_i` joins
    /// the relations.
    pub fn lift_to_polynomial(&self) -> Self {
        let poly = QuotientRing::polynomial(self.ring.ambient());
        let amb = self.ring.ambient();
        let mut rels = self.rels.clone().into_columns();
        for i in 0..self.degrees.len() {
            for q in self.ring.relations() {
                let mut col = vec![Polynomial::zero(amb); self.degrees.len()];
                col[i] = q.clone();
                rels.push(col);
            }
        }
        SubquotientModule {
            ring: poly,
            degrees: self.degrees.clone(),
            gens: self.gens.clone(),
            rels: Matrix::from_columns(amb, self.degrees.len(), rels).expect("same ring"),
        }
    }

    /// `M = 0`, i.e. every generator lies in the relations.
    pub fn is_zero(&self) -> Result<bool> {
        let fixed = self.rels.columns().to_vec();
        let sub = Submodule::new(&self.ring, &self.degrees, &fixed, None)?;
        for g in self.gens.columns() {
            if !sub.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Indices of a minimal homogeneous subset of the generators.
    pub fn minimal_generator_indices(&self) -> Result<Vec<usize>> {
        minimal_subset(&self.ring, &self.degrees, self.gens.columns(), self.rels.columns())
    }

    /// Relations among the chosen generators `idx`: the columns of
    /// `φ: R^k → R^{|idx|}` with `M ≅ coker φ`. Relations are minimal when
    /// the module is graded.
    pub fn relations_among(&self, idx: &[usize]) -> Result<GradedMap<F>> {
        let g = self.gens.select_columns(idx);
        let gdeg: Vec<i64> = g
            .columns()
            .iter()
            .map(|c| Ok(column_degree(c, &self.degrees)?.unwrap_or(0)))
            .collect::<Result<_>>()?;
        let all = g.hstack(&self.rels)?;
        let mut src = gdeg.clone();
        for c in self.rels.columns() {
            src.push(column_degree(c, &self.degrees)?.unwrap_or(0));
        }
        let map = GradedMap::new(&self.ring, src, self.degrees.clone(), all)?;
        let ker = syzygy_kernel(&map)?;
        let k = idx.len();
        let proj: Vec<Vec<Polynomial<F>>> = ker
            .matrix
            .columns()
            .iter()
            .map(|c| c[..k].to_vec())
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        let keep = minimal_subset(&self.ring, &gdeg, &proj, &[])?;
        let cols: Vec<Vec<Polynomial<F>>> = keep.iter().map(|&j| proj[j].clone()).collect();
        let m = Matrix::from_columns(self.ring.ambient(), k, cols)?;
        GradedMap::infer(&self.ring, m, gdeg)
    }

    /// Minimal presentation `φ` with `M ≅ coker φ`, together with the chosen
    /// generator indices.
    pub fn minimal_presentation(&self) -> Result<(GradedMap<F>, Vec<usize>)> {
        let idx = self.minimal_generator_indices()?;
        let phi = prune_units(&self.relations_among(&idx)?)?;
        Ok((phi, idx))
    }

    /// Presentation on all given generators (relations minimalized).
    pub fn presentation(&self) -> Result<GradedMap<F>> {
        let idx: Vec<usize> = (0..self.gens.ncols()).collect();
        self.relations_among(&idx)
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> Result<usize> {
        Ok(self.minimal_generator_indices()?.len())
    }
}

/// Removes unit entries by row and column operations: the first unit in a
/// column-major scan is used to clear its row, then its row and column are
/// deleted. Repeats until no unit remains.
pub fn prune_units<F: Field>(map: &GradedMap<F>) -> Result<GradedMap<F>> {
    let ring = map.ring.clone();
    let amb = ring.ambient().clone();
    let mut cols: Vec<Vec<Polynomial<F>>> = map
        .matrix
        .columns()
        .iter()
        .map(|c| c.iter().map(|p| ring.reduce(p)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut src = map.source.degrees.clone();
    let mut tgt = map.target.degrees.clone();
    loop {
        let pos = cols
            .iter()
            .enumerate()
            .find_map(|(j, c)| c.iter().position(|p| p.is_unit()).map(|i| (i, j)));
        let Some((i, j)) = pos else { break };
        let pivot = cols[j].clone();
        let inv = pivot[i].lc().unwrap().inv().unwrap();
        for (k, col) in cols.iter_mut().enumerate() {
            if k == j || col[i].is_zero() {
                continue;
            }
            let factor = col[i].scale(&inv);
            for (r, entry) in col.iter_mut().enumerate() {
                let t = &pivot[r] * &factor;
                *entry = ring.reduce(&(&*entry - &t))?;
            }
        }
        cols.remove(j);
        src.remove(j);
        for col in cols.iter_mut() {
            col.remove(i);
        }
        tgt.remove(i);
    }
    let keep: Vec<usize> = (0..cols.len())
        .filter(|&j| cols[j].iter().any(|p| !p.is_zero()))
        .collect();
    let cols: Vec<_> = keep.iter().map(|&j| cols[j].clone()).collect();
    let src: Vec<_> = keep.iter().map(|&j| src[j]).collect();
    let m = Matrix::from_columns(&amb, tgt.len(), cols)?;
    GradedMap::new(&ring, src, tgt, m)
}

pub(crate) fn column_to_vector<F: Field>(col: &[Polynomial<F>], offset: usize) -> Vector<F> {
    let mut v = Vec::new();
    for (i, p) in col.iter().enumerate() {
        for (m, c) in p.terms() {
            v.push((m.clone(), i + offset, c.clone()));
        }
    }
    v
}

pub(crate) fn vector_to_column<F: Field>(
    ring: &Arc<crate::poly::PolyRing>,
    v: &Vector<F>,
    offset: usize,
    len: usize,
) -> Vec<Polynomial<F>> {
    let mut parts: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); len];
    for (m, c, k) in v {
        if *c >= offset && *c < offset + len {
            parts[c - offset].push((m.clone(), k.clone()));
        }
    }
    parts
        .into_iter()
        .map(|t| Polynomial::from_terms(ring, t))
        .collect()
}

/// The vectors `q·e_i` for `q` in the basis of `Q`, `i ∈ offset..offset+rank`.
fn relation_vectors<F: Field>(ring: &QuotientRing<F>, offset: usize, rank: usize) -> Result<Vec<Vector<F>>> {
    if ring.is_polynomial_ring() {
        return Ok(Vec::new());
    }
    let basis = ring.relation_basis()?;
    let mut out = Vec::new();
    for i in 0..rank {
        for q in basis.elements() {
            out.push(column_to_vector(std::slice::from_ref(q), offset + i));
        }
    }
    Ok(out)
}

/// Kernel of `f` over `R`: the first block of the syzygies of
/// `[A | Q ⊗ I]` over `P`, found with a component-elimination order.
pub fn syzygy_kernel<F: Field>(f: &GradedMap<F>) -> Result<GradedMap<F>> {
    let ring = &f.ring;
    let amb = ring.ambient();
    let m = f.target.rank();
    let n = f.source.rank();
    let mut twists = f.target.degrees.clone();
    twists.extend(f.source.degrees.iter().copied());
    let ord = ModuleOrder::new(amb, twists, m);
    let mut gens = Vec::with_capacity(n);
    for (j, col) in f.matrix.columns().iter().enumerate() {
        let mut v = column_to_vector(col, 0);
        v.push((Monomial::one(amb.nvars()), m + j, F::one()));
        gens.push(ord.normalize(v));
    }
    let fixed = relation_vectors(ring, 0, m)?;
    let run = engine::buchberger(fixed, gens, &ord, None, Some(m))?;
    let mut cols = Vec::new();
    for g in &run.syzygies {
        let col: Vec<Polynomial<F>> = vector_to_column(amb, g, m, n)
            .iter()
            .map(|p| ring.reduce(p))
            .collect::<Result<_>>()?;
        if col.iter().any(|p| !p.is_zero()) {
            cols.push(col);
        }
    }
    let mat = Matrix::from_columns(amb, n, cols)?;
    GradedMap::infer(ring, mat, f.source.degrees.clone())
}

/// A submodule of a free module over `R`, with a Gröbner basis of its lift.
pub(crate) struct Submodule<F> {
    ord: ModuleOrder,
    basis: Arc<Vec<Vector<F>>>,
}

impl<F: Field> Submodule<F> {
    pub fn new(
        ring: &QuotientRing<F>,
        degrees: &[i64],
        cols: &[Vec<Polynomial<F>>],
        truncate: Option<i64>,
    ) -> Result<Self> {
        let ord = ModuleOrder::new(ring.ambient(), degrees.to_vec(), 0);
        let mut gens: Vec<Vector<F>> = cols.iter().map(|c| ord.normalize(column_to_vector(c, 0))).collect();
        gens.extend(relation_vectors(ring, 0, degrees.len())?);
        let basis = cache_groebner(gens, &ord, truncate)?;
        Ok(Submodule { ord, basis })
    }

    pub fn normal_form(&self, col: &[Polynomial<F>]) -> Vector<F> {
        let v = self.ord.normalize(column_to_vector(col, 0));
        engine::normal_form(v, &self.basis, &self.ord)
    }

    pub fn contains(&self, col: &[Polynomial<F>]) -> Result<bool> {
        Ok(self.normal_form(col).is_empty())
    }

    /// Leading monomials and components of the basis.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.basis.iter().map(|v| (v[0].0.clone(), v[0].1)).collect()
    }
}

/// Indices of a minimal subset of `cands` generating, together with
/// `fixed` and `Q·F`, the same graded submodule (graded Nakayama, degree by
/// degree).
pub(crate) fn minimal_subset<F: Field>(
    ring: &QuotientRing<F>,
    degrees: &[i64],
    cands: &[Vec<Polynomial<F>>],
    fixed: &[Vec<Polynomial<F>>],
) -> Result<Vec<usize>> {
    for c in fixed {
        column_degree(c, degrees)?;
    }
    let mut top = None;
    for c in cands {
        if let Some(d) = column_degree(c, degrees)? {
            top = Some(top.map_or(d, |t: i64| t.max(d)));
        }
    }
    let Some(top) = top else {
        return Ok(Vec::new());
    };
    let ord = ModuleOrder::new(ring.ambient(), degrees.to_vec(), 0);
    let mut base: Vec<Vector<F>> = fixed.iter().map(|c| column_to_vector(c, 0)).collect();
    base.extend(relation_vectors(ring, 0, degrees.len())?);
    let cands = cands.iter().map(|c| column_to_vector(c, 0)).collect();
    Ok(engine::buchberger(base, cands, &ord, Some(top), None)?.kept)
}

/// Ideal of `t × t` minors; `t = 0` gives the unit ideal.
pub fn minors_ideal<F: Field>(ring: &Arc<QuotientRing<F>>, a: &Matrix<F>, t: usize) -> Ideal<F> {
    Ideal::new(ring, a.minors(t))
}

/// `Fitt_i(M)`: the `(n - i)`-minors of a presentation on `n` generators
/// (minimal in the graded case).
pub fn fitting_ideal<F: Field>(m: &SubquotientModule<F>, i: usize) -> Result<Ideal<F>> {
    let (phi, _) = m.minimal_presentation()?;
    let n = phi.target().rank();
    if i >= n {
        return Ok(Ideal::unit(m.ring()));
    }
    Ok(minors_ideal(m.ring(), phi.matrix(), n - i))
}

#[cfg(test)]
mod tests;
