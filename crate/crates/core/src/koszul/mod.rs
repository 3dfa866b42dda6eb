//! Koszul complexes, their cycles and homology, proper sequences, sliding
//! depth and symmetric algebras.

mod sym;
mod wedge;

use std::sync::Arc;

use serde::Serialize;

pub use sym::{sym_bigraded_betti, symmetric_algebra, SymBetti, SymPresentation};
pub use wedge::{wedge_coefficient, WedgeElement};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::QuotientRing;
use crate::invariants::{depth_regularity, ring_dim};
use crate::module::{subsets, GradedMap, Matrix, Submodule, SubquotientModule};
use crate::poly::Polynomial;

/// The Koszul complex of `f` over `R` with its cycles and boundaries.
#[derive(Clone, Debug)]
pub struct KoszulData<F: Field> {
    ring: Arc<QuotientRing<F>>,
    seq: Vec<Polynomial<F>>,
    degrees: Vec<i64>,
    differentials: Vec<GradedMap<F>>,
    cycles: Vec<GradedMap<F>>,
}

/// Generator degrees of `K_i`, basis `subsets(r, i)`.
fn wedge_degrees(degrees: &[i64], i: usize) -> Vec<i64> {
    subsets(degrees.len(), i)
        .iter()
        .map(|s| s.iter().map(|&t| degrees[t]).sum())
        .collect()
}

pub fn koszul_complex<F: Field>(ring: &Arc<QuotientRing<F>>, f: &[Polynomial<F>]) -> Result<KoszulData<F>> {
    if f.is_empty() {
        return Err(Error::InvalidInput("empty sequence".into()));
    }
    let amb = ring.ambient();
    let r = f.len();
    let mut degrees = Vec::with_capacity(r);
    for p in f {
        let (d, homog) = p.degree_info();
        match d {
            Some(d) if homog => degrees.push(d),
            Some(_) => return Err(Error::NotGraded(format!("{p} is not homogeneous"))),
            None => return Err(Error::InvalidInput("zero element in the sequence".into())),
        }
    }
    let mut differentials = Vec::with_capacity(r);
    for i in 1..=r {
        let rows = subsets(r, i - 1);
        let cols = subsets(r, i);
        let mut m = Matrix::zeros(amb, rows.len(), cols.len());
        for (j, d) in cols.iter().enumerate() {
            for (k, &t) in d.iter().enumerate() {
                let face: Vec<usize> = d.iter().copied().filter(|&x| x != t).collect();
                let row = rows.binary_search(&face).expect("face is a subset");
                let entry = if k % 2 == 0 { f[t].clone() } else { -f[t].clone() };
                m.set(row, j, entry);
            }
        }
        differentials.push(GradedMap::new(
            ring,
            wedge_degrees(&degrees, i),
            wedge_degrees(&degrees, i - 1),
            m,
        )?);
    }
    let mut cycles = Vec::with_capacity(r + 1);
    cycles.push(GradedMap::new(ring, vec![0], vec![0], Matrix::identity(amb, 1))?);
    for d in &differentials {
        cycles.push(d.kernel()?);
    }
    Ok(KoszulData {
        ring: ring.clone(),
        seq: f.to_vec(),
        degrees,
        differentials,
        cycles,
    })
}

impl<F: Field> KoszulData<F> {
    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.ring
    }

    pub fn sequence(&self) -> &[Polynomial<F>] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Generator degrees of `K_i`.
    pub fn module_degrees(&self, i: usize) -> Vec<i64> {
        wedge_degrees(&self.degrees, i)
    }

    /// `δ_i: K_i → K_{i-1}` for `i = 1..=r`.
    pub fn differential(&self, i: usize) -> &GradedMap<F> {
        &self.differentials[i - 1]
    }

    /// Generators of `Z_i` as the columns of a map into `K_i`; `Z_0 = R`.
    pub fn cycles(&self, i: usize) -> &GradedMap<F> {
        &self.cycles[i]
    }

    /// Generators of `B_i = im δ_{i+1}`.
    pub fn boundaries(&self, i: usize) -> Matrix<F> {
        match self.differentials.get(i) {
            Some(d) => d.matrix().clone(),
            None => Matrix::zeros(self.ring.ambient(), subsets(self.len(), i).len(), 0),
        }
    }

    /// `Z_i` as a submodule of `K_i`.
    pub fn cycle_module(&self, i: usize) -> Result<SubquotientModule<F>> {
        let amb = self.ring.ambient();
        let n = subsets(self.len(), i).len();
        SubquotientModule::new(
            &self.ring,
            self.module_degrees(i),
            self.cycles[i].matrix().clone(),
            Matrix::zeros(amb, n, 0),
        )
    }

    /// `H_i = Z_i / B_i`.
    pub fn homology(&self, i: usize) -> Result<SubquotientModule<F>> {
        SubquotientModule::new(
            &self.ring,
            self.module_degrees(i),
            self.cycles[i].matrix().clone(),
            self.boundaries(i),
        )
    }

    /// Cycle generators of `Z_i` as wedge elements.
    pub fn cycle_wedges(&self, i: usize) -> Result<Vec<WedgeElement<F>>> {
        self.cycles[i]
            .matrix()
            .columns()
            .iter()
            .map(|c| WedgeElement::from_column(self.ring.ambient(), self.len(), i, c))
            .collect()
    }

    /// `r - max{i : H_i ≠ 0}`; `None` for the unit ideal.
    pub fn grade(&self) -> Result<Option<usize>> {
        for i in (0..=self.len()).rev() {
            if !self.homology(i)?.is_zero()? {
                return Ok(Some(self.len() - i));
            }
        }
        Ok(None)
    }

    /// Checks `δ_i ∘ δ_{i+1} = 0` and `δ_i(z) = 0` for all cycle generators.
    pub fn verify(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].compose(&w[1])?.is_zero()? {
                return Ok(false);
            }
        }
        for i in 1..=self.len() {
            if !self.differential(i).compose(&self.cycles[i])?.is_zero()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// First cycle `z ∈ Z_j(f_1..f_i)` with `f_{i+1}·z ∉ B_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperWitness {
    pub prefix: usize,
    pub homological: usize,
    pub cycle: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperSequenceCheck {
    pub proper: bool,
    pub witness: Option<ProperWitness>,
}

/// Tests `f_{i+1} H_j(f_1, …, f_i) = 0` for all `j ≥ 1`, in the given order.
pub fn proper_sequence_check<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    f: &[Polynomial<F>],
) -> Result<ProperSequenceCheck> {
    for i in 1..f.len() {
        let k = koszul_complex(ring, &f[..i])?;
        let next = &f[i];
        for j in 1..=i {
            let degs = k.module_degrees(j);
            let b = k.boundaries(j);
            let sub = Submodule::new(ring, &degs, b.columns(), None)?;
            for z in k.cycles(j).matrix().columns() {
                let scaled: Vec<Polynomial<F>> = z.iter().map(|p| p * next).collect();
                if !sub.contains(&scaled)? {
                    return Ok(ProperSequenceCheck {
                        proper: false,
                        witness: Some(ProperWitness {
                            prefix: i,
                            homological: j,
                            cycle: z.iter().map(|p| p.to_string()).collect(),
                        }),
                    });
                }
            }
        }
    }
    Ok(ProperSequenceCheck {
        proper: true,
        witness: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SlidingVariant {
    /// Depth bounds on Koszul homology.
    Sd,
    /// Depth bounds on Koszul cycles.
    Sdc,
}

/// `depth(H_i) ≥ d - r + i + k` (or the same for `Z_i`) for `i ≤ r - g`;
/// vanishing modules pass.
pub fn sliding_depth_check<F: Field>(k: &KoszulData<F>, level: i64, variant: SlidingVariant) -> Result<bool> {
    let Some(g) = k.grade()? else {
        return Ok(true);
    };
    let d = ring_dim(k.ring())?;
    let r = k.len() as i64;
    for i in 0..=(k.len() - g) {
        let m = match variant {
            SlidingVariant::Sd => k.homology(i)?,
            SlidingVariant::Sdc => k.cycle_module(i)?,
        };
        if m.is_zero()? {
            continue;
        }
        let depth = depth_regularity(&m)?.depth;
        if depth < d - r + i as i64 + level {
            return Ok(false);
        }
    }
    Ok(true)
}
