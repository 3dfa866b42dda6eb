use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::HilbertSeries;
use crate::module::{format_twists, subsets};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LayoutKind {
    F,
    Q,
}

/// Generator degrees of the free modules of a graded complex, without its
/// differentials. `modules[i]` lists `a` for each summand `R(-a)` of the
/// module in homological degree `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedComplexLayout {
    pub kind: LayoutKind,
    pub modules: Vec<Vec<i64>>,
}

impl GradedComplexLayout {
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(Vec::len).collect()
    }

    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    /// `Σ_i (-1)^i Σ_a z^a · HS_R`.
    pub fn euler_series(&self, ring_series: &HilbertSeries) -> HilbertSeries {
        let mut acc = HilbertSeries::zero(ring_series.weights());
        for (i, m) in self.modules.iter().enumerate() {
            for &a in m {
                let t = ring_series.shifted(a);
                acc = if i % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
        }
        acc
    }

    /// Same layout with one twist moved by `delta`.
    pub fn perturbed(&self, i: usize, delta: i64) -> Self {
        let mut out = self.clone();
        if let Some(a) = out.modules.get_mut(i).and_then(|m| m.first_mut()) {
            *a += delta;
        }
        for m in &mut out.modules {
            m.sort_unstable();
        }
        out
    }
}

impl fmt::Display for GradedComplexLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.modules.iter().map(|m| format_twists(m)).collect();
        write!(f, "[{}]", parts.join("; "))
    }
}

/// Compositions of `total` into `parts` positive integers.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn go(total: i64, parts: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = total - (parts as i64 - 1);
        for v in 1..=max {
            cur.push(v);
            go(total - v, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 && total >= parts as i64 {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

fn check_shape(r: usize, s: usize, d: &[i64], l: &[i64]) -> Result<()> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidInput("r and s must be positive".into()));
    }
    if d.len() != r || l.len() != s {
        return Err(Error::InvalidInput(format!(
            "expected {r} generator degrees and {s} residual degrees"
        )));
    }
    Ok(())
}

/// One piece `S(-a, -b)` of the resolution of the symmetric algebra at
/// index `p`, where `a` is the t-degree and `b` the total degree.
fn assemble(
    r: usize,
    s: usize,
    d: &[i64],
    l: &[i64],
    pieces: &[Vec<(i64, i64)>],
    kind: LayoutKind,
) -> GradedComplexLayout {
    let mut modules = vec![vec![0]];
    for i in 1..=s {
        let mut out = Vec::new();
        for (p, ps) in pieces.iter().enumerate() {
            let Some(q) = (r + i).checked_sub(p + 1) else {
                continue;
            };
            if q > s {
                continue;
            }
            for e in subsets(s, q) {
                let le: i64 = e.iter().map(|&t| l[t]).sum();
                for &(a, b) in ps {
                    for beta in compositions(a + q as i64, r) {
                        let bd: i64 = beta.iter().zip(d).map(|(x, y)| x * y).sum();
                        out.push(b + le - bd);
                    }
                }
            }
        }
        out.sort_unstable();
        modules.push(out);
    }
    GradedComplexLayout { kind, modules }
}

/// The free modules `F_0 = R, F_1, …, F_s` of the complex resolving `R/τ`
/// in the complete intersection shape.
pub fn f_complex_layout(r: usize, s: usize, d: &[i64], l: &[i64]) -> Result<GradedComplexLayout> {
    check_shape(r, s, d, l)?;
    let mut pieces = vec![vec![(0, 0)]];
    for p in 1..r {
        let mut ps = Vec::new();
        for dset in subsets(r, p + 1) {
            let b: i64 = dset.iter().map(|&t| d[t]).sum();
            for j in 1..=p as i64 {
                ps.push((j, b));
            }
        }
        pieces.push(ps);
    }
    Ok(assemble(r, s, d, l, &pieces, LayoutKind::F))
}

/// The `Q`-layout from the bigraded Betti pieces `pieces[p]` of the
/// symmetric algebra; `pieces[0]` must be the single piece `(0, 0)`.
pub fn q_layout_from_pieces(
    r: usize,
    s: usize,
    d: &[i64],
    l: &[i64],
    pieces: &[Vec<(i64, i64)>],
) -> Result<GradedComplexLayout> {
    check_shape(r, s, d, l)?;
    if pieces.first().map(Vec::as_slice) != Some(&[(0, 0)][..]) {
        return Err(Error::InvalidInput("P_0 must be S".into()));
    }
    if pieces.len() > r {
        return Err(Error::InvalidInput("symmetric algebra resolution longer than r - 1".into()));
    }
    Ok(assemble(r, s, d, l, pieces, LayoutKind::Q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub first_failure: Option<i64>,
    pub n_max: i64,
}

/// Compares `HF_M(n)` with `Σ_i (-1)^i Σ_a HF_R(n - a)` for `n = 0..=n_max`.
pub fn hilbert_identity(
    layout: &GradedComplexLayout,
    ring_series: &HilbertSeries,
    module_series: &HilbertSeries,
    n_max: i64,
) -> IdentityCheck {
    let lhs = module_series.expand(n_max);
    let rhs = layout.euler_series(ring_series).expand(n_max);
    let first_failure = lhs
        .iter()
        .zip(&rhs)
        .position(|(a, b)| a != b)
        .map(|n| n as i64);
    IdentityCheck {
        holds: first_failure.is_none(),
        first_failure,
        n_max,
    }
}
