use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{
    column_to_vector, relation_vectors, syzygy_kernel, vector_to_column, GradedFreeModule, GradedMap, Matrix,
    SubquotientModule,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::engine::{self, Frame, ModuleOrder};
use crate::groebner::QuotientRing;
use crate::poly::{Monomial, Polynomial};

/// Minimal graded free resolution `… → F_1 → F_0 → M → 0`.
#[derive(Clone)]
pub struct FreeResolution<F> {
    ring: Arc<QuotientRing<F>>,
    modules: Vec<GradedFreeModule>,
    maps: Vec<GradedMap<F>>,
    complete: bool,
}

/// Graded Betti numbers `β_{i,d}` keyed by (homological index, degree).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_modules(modules: &[GradedFreeModule]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, m) in modules.iter().enumerate() {
            for &d in &m.degrees {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, degree: i64) -> usize {
        self.entries.get(&(i, degree)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.entries
    }

    /// Total rank at each homological index.
    pub fn ranks(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|k| k.0 + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (&(i, _), &n) in &self.entries {
            out[i] += n;
        }
        out
    }

    /// `max(d - i)`, or `None` for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, d)| d - i as i64).max()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style table: row `d - i`, column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks = self.ranks();
        let Some(lo) = self.entries.keys().map(|&(i, d)| d - i as i64).min() else {
            return write!(f, "0");
        };
        let hi = self.regularity().unwrap();
        write!(f, "{:>6}", "")?;
        for i in 0..ranks.len() {
            write!(f, " {i:>4}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for r in &ranks {
            write!(f, " {r:>4}")?;
        }
        for row in lo..=hi {
            writeln!(f)?;
            write!(f, "{:>5}:", row)?;
            for i in 0..ranks.len() {
                match self.get(i, row + i as i64) {
                    0 => write!(f, " {:>4}", "-")?,
                    n => write!(f, " {n:>4}")?,
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for FreeResolution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FreeResolution")
            .field("modules", &self.modules)
            .field("complete", &self.complete)
            .finish()
    }
}

impl<F: Field> FreeResolution<F> {
    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    /// `F_0, F_1, …`; trailing zero modules are omitted.
    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// `maps[i]: F_{i+1} → F_i`.
    pub fn maps(&self) -> &[GradedMap<F>] {
        &self.maps
    }

    /// False when the computation stopped at a length bound before the
    /// last syzygy module vanished.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_zero_module(&self) -> bool {
        self.modules[0].rank() == 0
    }

    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_modules(&self.modules)
    }

    /// Length of the resolution; `None` for the zero module or an
    /// incomplete resolution.
    pub fn projective_dimension(&self) -> Option<usize> {
        if self.is_zero_module() || !self.complete {
            None
        } else {
            Some(self.modules.len() - 1)
        }
    }

    pub fn regularity(&self) -> Option<i64> {
        if !self.complete {
            return None;
        }
        self.betti_table().regularity()
    }

    /// Checks that consecutive maps compose to zero.
    pub fn verify(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Minimal graded free resolution over the ring of `m`. Over a polynomial
/// ring it always terminates; over a quotient pass `max_length`, beyond
/// which the result is flagged incomplete.
pub fn minimal_free_resolution<F: Field>(
    m: &SubquotientModule<F>,
    max_length: Option<usize>,
) -> Result<FreeResolution<F>> {
    let ring = m.ring().clone();
    let bound = match max_length {
        Some(b) => b,
        None if ring.is_polynomial_ring() => ring.nvars() + 1,
        None => {
            return Err(Error::Unsupported(
                "resolution over a quotient ring needs a length bound".into(),
            ))
        }
    };
    let (phi, _) = m.minimal_presentation()?;
    if phi.target().rank() == 0 {
        return Ok(FreeResolution {
            ring,
            modules: vec![phi.target().clone()],
            maps: Vec::new(),
            complete: true,
        });
    }
    // Over a quotient one extra map is computed so that the pruning of the
    // last kept module is final.
    let steps = if ring.is_polynomial_ring() { 3 * (ring.nvars() + 1) } else { bound + 1 };
    let (mut degs, mut cols, finished) = schreyer_resolution(&phi, steps)?;
    if ring.is_polynomial_ring() && !finished {
        return Err(Error::Unsupported("Schreyer resolution did not terminate".into()));
    }
    prune_units(&ring, &mut degs, &mut cols)?;
    while degs.len() > 1 && degs.last().is_some_and(|d| d.is_empty()) {
        degs.pop();
        cols.pop();
    }
    let complete = degs.len() <= bound + 1;
    degs.truncate(bound + 1);
    cols.truncate(bound);
    let amb = ring.ambient();
    let mut maps = Vec::with_capacity(cols.len());
    for (k, c) in cols.into_iter().enumerate() {
        let mat = Matrix::from_columns(amb, degs[k].len(), c)?;
        maps.push(GradedMap::new(&ring, degs[k + 1].clone(), degs[k].clone(), mat)?);
    }
    Ok(FreeResolution {
        ring,
        modules: degs.into_iter().map(GradedFreeModule::new).collect(),
        maps,
        complete,
    })
}

type Columns<F> = Vec<Vec<Polynomial<F>>>;

/// A possibly non-minimal resolution starting with `phi`, each kernel taken
/// from the S-pair reductions of the previous image under the induced
/// Schreyer order. Returns the module degrees, the maps as columns, and
/// whether the last module is zero.
fn schreyer_resolution<F: Field>(phi: &GradedMap<F>, steps: usize) -> Result<(Vec<Vec<i64>>, Vec<Columns<F>>, bool)> {
    let ring = phi.ring().clone();
    let amb = ring.ambient().clone();
    let mut degs = vec![phi.target().degrees.clone(), phi.source().degrees.clone()];
    let mut maps: Vec<Columns<F>> = vec![phi.matrix().columns().to_vec()];
    let mut ord = ModuleOrder::new(&amb, degs[0].clone(), 0);
    while maps.len() < steps {
        let tgt = &degs[degs.len() - 2];
        let src = &degs[degs.len() - 1];
        let (m, n) = (tgt.len(), src.len());
        if n == 0 {
            break;
        }
        let cols = maps.last().unwrap();
        let mut frames: Vec<Frame> = (0..m).map(|c| ord.frame(c)).collect();
        let mut gens = Vec::with_capacity(n);
        for (j, col) in cols.iter().enumerate() {
            let v = ord.normalize(column_to_vector(col, 0));
            frames.push(match v.first() {
                Some((lm, lc, _)) => ord.lift_frame(lm, *lc),
                None => Frame {
                    mon: Monomial::one(amb.nvars()),
                    base: usize::MAX,
                    chain: vec![j],
                },
            });
            gens.push(v);
        }
        let next_frames = frames[m..].to_vec();
        let mut twists = tgt.clone();
        twists.extend(src.iter().copied());
        let big = ModuleOrder::new(&amb, twists, m).with_frames(frames);
        for (j, v) in gens.iter_mut().enumerate() {
            v.push((Monomial::one(amb.nvars()), m + j, F::one()));
            *v = big.normalize(std::mem::take(v));
        }
        let fixed = relation_vectors(&ring, 0, m)?;
        let run = engine::buchberger(fixed, gens, &big, None, Some(m))?;
        let next_ord = ModuleOrder::new(&amb, src.clone(), 0).with_frames(next_frames);
        let mut next_cols = Vec::new();
        let mut next_degs = Vec::new();
        for v in &run.syzygies {
            let col: Vec<Polynomial<F>> = vector_to_column(&amb, v, m, n)
                .iter()
                .map(|p| ring.reduce(p))
                .collect::<Result<_>>()?;
            let w = column_to_vector(&col, 0);
            if w.is_empty() {
                continue;
            }
            next_degs.push(next_ord.sugar(&w));
            next_cols.push(col);
        }
        degs.push(next_degs);
        maps.push(next_cols);
        ord = next_ord;
    }
    let finished = degs.last().is_some_and(|d| d.is_empty());
    if finished {
        degs.pop();
        maps.pop();
    }
    Ok((degs, maps, finished))
}

/// Cancels unit entries of a graded complex (`maps[k]: F_{k+1} → F_k`) until
/// it is minimal.
fn prune_units<F: Field>(ring: &QuotientRing<F>, degs: &mut [Vec<i64>], maps: &mut [Columns<F>]) -> Result<()> {
    for k in 0..maps.len() {
        loop {
            let hit = maps[k]
                .iter()
                .enumerate()
                .find_map(|(b, col)| col.iter().position(|p| p.is_unit()).map(|a| (a, b)));
            let Some((a, b)) = hit else { break };
            let pivot = maps[k][b].clone();
            let inv = pivot[a].lc().unwrap().inv().unwrap();
            for (c, col) in maps[k].iter_mut().enumerate() {
                if c == b || col[a].is_zero() {
                    continue;
                }
                let factor = col[a].scale(&inv);
                for (r, entry) in col.iter_mut().enumerate() {
                    if !pivot[r].is_zero() {
                        *entry = ring.reduce(&(&*entry - &(&pivot[r] * &factor)))?;
                    }
                }
            }
            maps[k].remove(b);
            for col in maps[k].iter_mut() {
                col.remove(a);
            }
            if let Some(next) = maps.get_mut(k + 1) {
                for col in next.iter_mut() {
                    col.remove(b);
                }
            }
            if k > 0 {
                maps[k - 1].remove(a);
            }
            degs[k + 1].remove(b);
            degs[k].remove(a);
        }
    }
    Ok(())
}

/// Homology of `C_k → … → C_1 → C_0` given `maps[i]: C_{i+1} → C_i`;
/// entry `i` of the result is `H_i`.
pub fn complex_homology<F: Field>(maps: &[GradedMap<F>]) -> Result<Vec<SubquotientModule<F>>> {
    let Some(first) = maps.first() else {
        return Err(Error::InvalidInput("empty complex".into()));
    };
    let ring = first.ring().clone();
    for w in maps.windows(2) {
        if w[1].target() != w[0].source() {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        if !w[0].compose(&w[1])?.is_zero()? {
            return Err(Error::InvalidInput("consecutive maps do not compose to zero".into()));
        }
    }
    let amb = ring.ambient();
    let mut out = Vec::with_capacity(maps.len() + 1);
    out.push(first.cokernel());
    for i in 1..=maps.len() {
        let ker = syzygy_kernel(&maps[i - 1])?;
        let deg = maps[i - 1].source().degrees.clone();
        let rels = match maps.get(i) {
            Some(next) => next.matrix().clone(),
            None => Matrix::zeros(amb, deg.len(), 0),
        };
        out.push(SubquotientModule::new(&ring, deg, ker.matrix().clone(), rels)?);
    }
    Ok(out)
}

/// All modules `Ext^i_P(M, P)`, `i = 0..=pd`, from one minimal resolution of
/// the lift of `M` to the polynomial ambient.
pub fn ext_modules<F: Field>(m: &SubquotientModule<F>) -> Result<Vec<SubquotientModule<F>>> {
    Ok(ext_modules_from(m, 0)?.into_iter().map(|(_, e)| e).collect())
}

/// `(i, Ext^i_P(M, P))` for `lo ≤ i ≤ pd`; the dual kernels below `lo` are
/// never formed.
pub fn ext_modules_from<F: Field>(m: &SubquotientModule<F>, lo: usize) -> Result<Vec<(usize, SubquotientModule<F>)>> {
    let lifted = m.lift_to_polynomial();
    let res = minimal_free_resolution(&lifted, None)?;
    let ring = res.ring().clone();
    let amb = ring.ambient().clone();
    let mut out = Vec::new();
    if res.is_zero_module() {
        return Ok(out);
    }
    let len = res.modules().len() - 1;
    for i in lo..=len {
        let dual_deg: Vec<i64> = res.modules()[i].degrees.iter().map(|d| -d).collect();
        let gens = match res.maps().get(i) {
            Some(out_map) => syzygy_kernel(&out_map.dual())?.matrix().clone(),
            None => Matrix::identity(&amb, dual_deg.len()),
        };
        let rels = if i == 0 {
            Matrix::zeros(&amb, dual_deg.len(), 0)
        } else {
            res.maps()[i - 1].dual().matrix().clone()
        };
        out.push((i, SubquotientModule::new(&ring, dual_deg, gens, rels)?));
    }
    Ok(out)
}

/// `Ext^i_P(M, P)` over the polynomial ambient of `M`'s ring.
pub fn ext_module<F: Field>(m: &SubquotientModule<F>, i: usize) -> Result<SubquotientModule<F>> {
    let all = ext_modules(m)?;
    match all.into_iter().nth(i) {
        Some(e) => Ok(e),
        None => {
            let poly = QuotientRing::polynomial(m.ring().ambient());
            Ok(SubquotientModule::free(&poly, Vec::new()))
        }
    }
}
