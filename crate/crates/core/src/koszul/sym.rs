use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::koszul_complex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Ideal, QuotientRing};
use crate::module::{minimal_free_resolution, GradedMap, Matrix, SubquotientModule};
use crate::poly::Polynomial;

/// `S_I = S/𝓛` with `S = R[t_1..t_r]`, `t_i` of degree `d_i` and t-degree 1.
#[derive(Clone, Debug)]
pub struct SymPresentation<F: Field> {
    base: Arc<QuotientRing<F>>,
    ring: Arc<QuotientRing<F>>,
    t_vars: Vec<usize>,
    degrees: Vec<i64>,
    relations: Vec<Polynomial<F>>,
}

impl<F: Field> SymPresentation<F> {
    pub fn base(&self) -> &Arc<QuotientRing<F>> {
        &self.base
    }

    /// `S = R[t]`.
    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    /// Degrees `d_i` of the generators, which are the degrees of the `t_i`.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn t_vars(&self) -> &[usize] {
        &self.t_vars
    }

    pub fn t(&self, i: usize) -> Polynomial<F> {
        Polynomial::var(self.ring.ambient(), self.t_vars[i])
    }

    /// Generators of `𝓛`, each linear in `t`.
    pub fn relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    pub fn ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ring, self.relations.clone())
    }

    pub fn t_ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ring, (0..self.t_vars.len()).map(|i| self.t(i)).collect())
    }

    /// An element of `R` viewed in `S`.
    pub fn embed(&self, p: &Polynomial<F>) -> Polynomial<F> {
        p.embed(self.ring.ambient())
    }

    /// `γ_j = Σ_i c_ij t_i` for the columns of `Φ`.
    pub fn gammas(&self, phi: &Matrix<F>) -> Result<Vec<Polynomial<F>>> {
        if phi.nrows() != self.t_vars.len() {
            return Err(Error::InvalidInput("Φ must have one row per generator".into()));
        }
        Ok(phi.columns().iter().map(|c| self.linear_form(c)).collect())
    }

    fn linear_form(&self, col: &[Polynomial<F>]) -> Polynomial<F> {
        let mut acc = Polynomial::zero(self.ring.ambient());
        for (i, c) in col.iter().enumerate() {
            acc = &acc + &(&self.embed(c) * &self.t(i));
        }
        acc
    }
}

/// The symmetric algebra of `I = (f)` from the syzygies of `f`.
pub fn symmetric_algebra<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    f: &[Polynomial<F>],
) -> Result<SymPresentation<F>> {
    let k = koszul_complex(ring, f)?;
    let degrees = k.degrees().to_vec();
    if degrees.iter().any(|&d| d < 1) {
        return Err(Error::InvalidInput("generators must have positive degree".into()));
    }
    let amb = ring.ambient();
    let mut names = Vec::with_capacity(f.len());
    let mut probe = (**amb).clone();
    for _ in 0..f.len() {
        let name = probe.fresh_name("t");
        probe = probe.extended(&[name.as_str()], &[1], &[0])?;
        names.push(name);
    }
    let ones = vec![1; f.len()];
    let s_amb = amb.extended(&names, &degrees, &ones)?.into_arc();
    let rels = ring.relations().iter().map(|q| q.embed(&s_amb)).collect();
    let s = QuotientRing::new(&s_amb, rels)?;
    let n = amb.nvars();
    let mut sym = SymPresentation {
        base: ring.clone(),
        ring: s,
        t_vars: (n..n + f.len()).collect(),
        degrees,
        relations: Vec::new(),
    };
    sym.relations = k
        .cycles(1)
        .matrix()
        .columns()
        .iter()
        .map(|c| sym.linear_form(c))
        .filter(|p| !p.is_zero())
        .collect();
    Ok(sym)
}

/// Bigraded Betti numbers of `S_I` over `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymBetti {
    /// Whether `f` is a proper sequence in the given order.
    pub proper: bool,
    /// `(homological index, t-degree, total degree) → count`.
    pub table: BTreeMap<(usize, i64, i64), usize>,
    /// `max(t-degree - i)`.
    pub t_regularity: i64,
    /// `None` when the resolution did not terminate within `r` steps.
    pub pd: Option<usize>,
    /// `pd_R(Z_i)` for `i = 1..r`, over a polynomial base; `None` for `Z_i = 0`.
    pub cycle_pds: Option<Vec<Option<usize>>>,
    /// `pd_S(S_I) ≤ r - 1` agrees with `pd_R(Z_i) ≤ r - i - 1` for all `i ≥ 1`.
    pub pd_equivalence: Option<bool>,
    /// `β^S_i = Σ_j β^R_{i-j}(Z_j)` on total Betti numbers.
    pub betti_identity: Option<bool>,
}

impl SymBetti {
    /// Total Betti number at index `i`.
    pub fn total(&self, i: usize) -> usize {
        self.table
            .iter()
            .filter(|((j, _, _), _)| *j == i)
            .map(|(_, n)| n)
            .sum()
    }

    /// `(t-degree, total degree)` of the free summands at index `i`, with
    /// multiplicity.
    pub fn pieces(&self, i: usize) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for (&(j, a, b), &n) in &self.table {
            if j == i {
                out.extend(std::iter::repeat_n((a, b), n));
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        self.table.keys().map(|k| k.0).max().unwrap_or(0)
    }
}

/// Secondary degrees of the source generators of `map`, given those of its
/// target.
fn source_secondary<F: Field>(map: &GradedMap<F>, target: &[i64]) -> Result<Vec<i64>> {
    map.matrix()
        .columns()
        .iter()
        .map(|col| {
            let mut deg = None;
            for (p, t) in col.iter().zip(target) {
                if p.is_zero() {
                    continue;
                }
                if !p.is_bihomogeneous() {
                    return Err(Error::NotGraded(format!("{p} is not bihomogeneous")));
                }
                let d = p.bidegree().unwrap().0 + t;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => {
                        return Err(Error::NotGraded("column is not bihomogeneous".into()))
                    }
                    _ => {}
                }
            }
            Ok(deg.unwrap_or(0))
        })
        .collect()
}

/// Minimal bigraded resolution of `S_I` with the t-regularity, and over a
/// polynomial base the comparison with the Koszul cycles of `f`.
pub fn sym_bigraded_betti<F: Field>(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>]) -> Result<SymBetti> {
    let sym = symmetric_algebra(ring, f)?;
    let s = sym.ring();
    let r = f.len();
    let module = SubquotientModule::quotient_by(&sym.ideal());
    let bound = if s.is_polynomial_ring() { None } else { Some(r) };
    let res = minimal_free_resolution(&module, bound)?;
    let mut table = BTreeMap::new();
    let mut sec = vec![0i64; res.modules()[0].rank()];
    for (i, m) in res.modules().iter().enumerate() {
        if i > 0 {
            sec = source_secondary(&res.maps()[i - 1], &sec)?;
        }
        for (a, &b) in sec.iter().zip(&m.degrees) {
            *table.entry((i, *a, b)).or_insert(0) += 1;
        }
    }
    let t_regularity = table.keys().map(|&(i, a, _)| a - i as i64).max().unwrap_or(0);
    let pd = res.is_complete().then(|| res.modules().len() - 1);

    let (mut cycle_pds, mut pd_equivalence, mut betti_identity) = (None, None, None);
    if ring.is_polynomial_ring() {
        let k = koszul_complex(ring, f)?;
        let mut pds = Vec::with_capacity(r);
        let mut cycle_betti: Vec<Vec<usize>> = vec![vec![1]];
        for i in 1..=r {
            let z = k.cycle_module(i)?;
            let zres = minimal_free_resolution(&z, None)?;
            pds.push(zres.projective_dimension());
            cycle_betti.push(zres.betti_table().ranks());
        }
        let cycles_ok = pds
            .iter()
            .enumerate()
            .all(|(i, p)| p.is_none_or(|p| p + i + 2 <= r));
        pd_equivalence = Some(pd.is_some_and(|p| p < r) == cycles_ok);
        if let Some(p) = pd {
            let len = cycle_betti.iter().map(|b| b.len()).max().unwrap_or(0) + r;
            let ok = (0..len.max(p + 1)).all(|i| {
                let lhs = if i <= p { res.modules()[i].rank() } else { 0 };
                let rhs: usize = (0..=i.min(r))
                    .map(|j| cycle_betti[j].get(i - j).copied().unwrap_or(0))
                    .sum();
                lhs == rhs
            });
            betti_identity = Some(ok);
        }
        cycle_pds = Some(pds);
    }
    Ok(SymBetti {
        proper: super::proper_sequence_check(ring, f)?.proper,
        table,
        t_regularity,
        pd,
        cycle_pds,
        pd_equivalence,
        betti_identity,
    })
}
