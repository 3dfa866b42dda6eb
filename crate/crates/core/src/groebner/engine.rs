//! Buchberger's algorithm on vectors of polynomials.
//!
//! Ideals are rank-one modules, so a single engine serves both. Vectors are
//! term lists `(monomial, component, coefficient)` sorted descending in a
//! [`ModuleOrder`].

use std::cell::Cell;
use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, PolyRing};

pub(crate) type VTerm<F> = (Monomial, usize, F);
pub(crate) type Vector<F> = Vec<VTerm<F>>;

/// Hard resource limits for Gröbner computations on the current thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible (twisted) degree of an S-pair or input element.
    pub max_degree: Option<i64>,
    /// Largest number of S-pairs reduced in a single basis computation.
    pub max_pairs: Option<u64>,
}

thread_local! {
    static LIMITS: Cell<Limits> = const { Cell::new(Limits { max_degree: None, max_pairs: None }) };
}

impl Limits {
    pub fn current() -> Limits {
        LIMITS.with(|l| l.get())
    }

    /// Runs `f` with these limits installed on the current thread.
    pub fn scope<T>(self, f: impl FnOnce() -> T) -> T {
        struct Restore(Limits);
        impl Drop for Restore {
            fn drop(&mut self) {
                LIMITS.with(|l| l.set(self.0));
            }
        }
        let _restore = Restore(LIMITS.with(|l| l.replace(self)));
        f()
    }
}

/// Term order on a free module `⊕ R(-twist_c)`.
///
/// Components below `block` dominate all others (elimination of those
/// components). Within a block, degree-compatible ring orders compare the
/// twisted degree first, then the ring order, then prefer smaller
/// component indices.
///
/// With frames attached, a component `c` is compared through its frame
/// (a Schreyer order): `m·e_c` sorts like `m·mon_c·e_{base_c}`, ties broken
/// by the chain of component indices and then by `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct ModuleOrder {
    pub ring: Arc<PolyRing>,
    pub twists: Vec<i64>,
    pub block: usize,
    degree_first: bool,
    frames: Option<Arc<Vec<Frame>>>,
}

/// Leading term of the image of a basis vector, traced down to the base
/// free module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Frame {
    pub mon: Monomial,
    pub base: usize,
    pub chain: Vec<usize>,
}

impl Frame {
    pub fn plain(nvars: usize, c: usize) -> Self {
        Frame {
            mon: Monomial::one(nvars),
            base: c,
            chain: Vec::new(),
        }
    }
}

impl ModuleOrder {
    pub fn new(ring: &Arc<PolyRing>, twists: Vec<i64>, block: usize) -> Self {
        let degree_first = matches!(ring.order(), MonomialOrder::GRevLex);
        ModuleOrder {
            ring: ring.clone(),
            twists,
            block,
            degree_first,
            frames: None,
        }
    }

    /// Same twists and block, with one frame per component.
    pub fn with_frames(mut self, frames: Vec<Frame>) -> Self {
        assert_eq!(frames.len(), self.twists.len());
        self.frames = Some(Arc::new(frames));
        self
    }

    /// Frame of component `c` (trivial without frames).
    pub fn frame(&self, c: usize) -> Frame {
        match &self.frames {
            Some(f) => f[c].clone(),
            None => Frame::plain(self.ring.nvars(), c),
        }
    }

    /// Frame of `m·e_c` viewed as a basis vector of the next module.
    pub fn lift_frame(&self, m: &Monomial, c: usize) -> Frame {
        let f = self.frame(c);
        let mut chain = f.chain;
        chain.push(c);
        Frame {
            mon: m.mul(&f.mon),
            base: f.base,
            chain,
        }
    }

    pub fn ideal(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, vec![0], 0)
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn degree(&self, m: &Monomial, c: usize) -> i64 {
        self.ring.degree(m) + self.twists[c]
    }

    #[inline]
    pub fn cmp(&self, m1: &Monomial, c1: usize, m2: &Monomial, c2: usize) -> Ordering {
        let (a1, a2) = (c1 < self.block, c2 < self.block);
        if a1 != a2 {
            return a1.cmp(&a2);
        }
        if self.degree_first {
            let o = self.degree(m1, c1).cmp(&self.degree(m2, c2));
            if o != Ordering::Equal {
                return o;
            }
        }
        match &self.frames {
            None => self.ring.cmp_monomials(m1, m2).then_with(|| c2.cmp(&c1)),
            Some(fr) => {
                let (f1, f2) = (&fr[c1], &fr[c2]);
                self.ring
                    .cmp_monomials(&m1.mul(&f1.mon), &m2.mul(&f2.mon))
                    .then_with(|| f2.base.cmp(&f1.base))
                    .then_with(|| f2.chain.cmp(&f1.chain))
                    .then_with(|| c2.cmp(&c1))
            }
        }
    }

    pub fn sort(&self, v: &mut Vector<impl Field>) {
        v.sort_by(|a, b| self.cmp(&b.0, b.1, &a.0, a.1));
    }

    /// Sorts, merges duplicates and drops zero coefficients.
    pub fn normalize<F: Field>(&self, mut v: Vector<F>) -> Vector<F> {
        self.sort(&mut v);
        let mut out: Vector<F> = Vec::with_capacity(v.len());
        for (m, c, k) in v {
            match out.last_mut() {
                Some(last) if last.0 == m && last.1 == c => last.2 += k,
                _ => {
                    if out.last().is_some_and(|t| t.2.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c, k));
                }
            }
        }
        if out.last().is_some_and(|t| t.2.is_zero()) {
            out.pop();
        }
        out
    }

    /// Largest twisted degree of a term.
    pub fn sugar<F>(&self, v: &Vector<F>) -> i64 {
        v.iter().map(|t| self.degree(&t.0, t.1)).max().unwrap_or(0)
    }

    /// `a - k * m * b`.
    pub fn sub_mul<F: Field>(&self, a: &[VTerm<F>], k: &F, m: &Monomial, b: &[VTerm<F>]) -> Vector<F> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let next_b = |j: usize| -> (Monomial, usize, F) {
            let t = &b[j];
            (t.0.mul(m), t.1, -(t.2.clone() * k.clone()))
        };
        let mut pending = if b.is_empty() { None } else { Some(next_b(0)) };
        while i < a.len() {
            let Some(bt) = pending.as_ref() else { break };
            match self.cmp(&a[i].0, a[i].1, &bt.0, bt.1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = (j < b.len()).then(|| next_b(j));
                }
                Ordering::Equal => {
                    let s = a[i].2.clone() + bt.2.clone();
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), a[i].1, s));
                    }
                    i += 1;
                    j += 1;
                    pending = (j < b.len()).then(|| next_b(j));
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if let Some(bt) = pending {
            out.push(bt);
            for jj in j + 1..b.len() {
                out.push(next_b(jj));
            }
        }
        out
    }
}

pub(crate) fn scale<F: Field>(v: &mut Vector<F>, k: &F) {
    for t in v.iter_mut() {
        t.2 *= k.clone();
    }
}

pub(crate) fn make_monic<F: Field>(v: &mut Vector<F>) {
    if let Some(lc) = v.first().map(|t| t.2.clone()) {
        if !lc.is_one() {
            scale(v, &lc.inv().expect("nonzero"));
        }
    }
}

/// Leading-term index for divisor lookup.
struct Reducers<'a, F> {
    basis: &'a [Vector<F>],
    /// Per component: (leading monomial, support mask, basis index).
    by_comp: Vec<Vec<(Monomial, u64, usize)>>,
}

impl<'a, F: Field> Reducers<'a, F> {
    fn new(basis: &'a [Vector<F>], rank: usize, active: impl Fn(usize) -> bool) -> Self {
        let mut by_comp = vec![Vec::new(); rank];
        for (i, g) in basis.iter().enumerate() {
            if active(i) {
                if let Some((m, c, _)) = g.first() {
                    by_comp[*c].push((m.clone(), m.support_mask(), i));
                }
            }
        }
        Reducers { basis, by_comp }
    }

    fn find(&self, m: &Monomial, c: usize) -> Option<&'a Vector<F>> {
        let mask = m.support_mask();
        self.by_comp[c]
            .iter()
            .find(|(lm, lmask, _)| lmask & !mask == 0 && lm.divides(m))
            .map(|&(_, _, i)| &self.basis[i])
    }
}

/// Reduces `v` modulo `basis`. With `full == false` only the leading term
/// is reduced until it is irreducible.
fn reduce_with<F: Field>(
    mut v: Vector<F>,
    red: &Reducers<'_, F>,
    ord: &ModuleOrder,
    full: bool,
    sugar: &mut i64,
) -> Vector<F> {
    let mut i = 0;
    while i < v.len() {
        let (m, c, k) = &v[i];
        match red.find(m, *c) {
            Some(g) => {
                let (gm, _, gk) = &g[0];
                let q = m.div(gm).expect("divisor");
                let coef = k.clone() / gk.clone();
                *sugar = (*sugar).max(ord.sugar(g) + ord.ring.degree(&q));
                let tail = ord.sub_mul(&v[i + 1..], &coef, &q, &g[1..]);
                v.truncate(i);
                v.extend(tail);
            }
            None => {
                if !full {
                    break;
                }
                i += 1;
            }
        }
    }
    v
}

/// Full normal form of `v` with respect to `basis` (any generating list;
/// zero vectors are ignored).
pub(crate) fn normal_form<F: Field>(v: Vector<F>, basis: &[Vector<F>], ord: &ModuleOrder) -> Vector<F> {
    let red = Reducers::new(basis, ord.rank(), |i| !basis[i].is_empty());
    let mut sugar = 0;
    reduce_with(v, &red, ord, true, &mut sugar)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: i64,
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
///
/// With `truncate = Some(d)`, pairs of sugar above `d` are skipped; for
/// homogeneous input the result is then a basis up to degree `d`.
pub(crate) fn groebner<F: Field>(
    gens: Vec<Vector<F>>,
    ord: &ModuleOrder,
    truncate: Option<i64>,
) -> Result<Vec<Vector<F>>> {
    Ok(buchberger(gens, Vec::new(), ord, truncate, None)?.reduced_basis(ord))
}

/// Outcome of one Buchberger run.
pub(crate) struct Run<F> {
    polys: Vec<Vector<F>>,
    active: Vec<bool>,
    /// Indices into the candidate list of candidates that did not reduce to
    /// zero when they were inserted.
    pub kept: Vec<usize>,
    /// Reductions whose leading component fell to `syz_block` or beyond.
    pub syzygies: Vec<Vector<F>>,
}

impl<F: Field> Run<F> {
    pub fn reduced_basis(self, ord: &ModuleOrder) -> Vec<Vector<F>> {
        let mut basis: Vec<Vector<F>> = self
            .polys
            .into_iter()
            .zip(self.active)
            .filter_map(|(p, a)| a.then_some(p))
            .collect();
        basis.sort_by(|a, b| ord.cmp(&a[0].0, a[0].1, &b[0].0, b[0].1));
        let mut out: Vec<Vector<F>> = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let red = Reducers::new(&basis, ord.rank(), |i| i != k);
            let mut s = 0;
            let (head, tail) = basis[k].split_first().unwrap();
            let mut v = vec![head.clone()];
            v.extend(reduce_with(tail.to_vec(), &red, ord, true, &mut s));
            make_monic(&mut v);
            out.push(v);
        }
        out
    }
}

/// Buchberger's algorithm on `fixed` followed by `cands`, by increasing
/// sugar, with all pairs of a given sugar handled before inputs of that
/// sugar. For homogeneous input a candidate is kept exactly when it is not
/// in the span of the inputs before it, so `kept` is a minimal generating
/// subset modulo `fixed`.
///
/// With `syz_block = Some(b)`, a reduction whose leading component is at
/// least `b` is recorded in `syzygies` instead of entering the basis. When
/// the components from `b` on carry an identity tag, these generate the
/// syzygies of the tagged inputs (Schreyer).
pub(crate) fn buchberger<F: Field>(
    fixed: Vec<Vector<F>>,
    cands: Vec<Vector<F>>,
    ord: &ModuleOrder,
    truncate: Option<i64>,
    syz_block: Option<usize>,
) -> Result<Run<F>> {
    let limits = Limits::current();
    let rank1 = ord.rank() == 1;
    let mut polys: Vec<Vector<F>> = Vec::new();
    let mut sugars: Vec<i64> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut kept = Vec::new();
    let mut syzygies = Vec::new();

    let check_degree = |d: i64| -> Result<()> {
        match limits.max_degree {
            Some(max) if d > max => Err(Error::ResourceLimit(format!(
                "degree {d} exceeds the limit {max}"
            ))),
            _ => Ok(()),
        }
    };

    // (sugar, candidate index, vector); fixed inputs sort first.
    let mut inputs: Vec<(i64, Option<usize>, Vector<F>)> = fixed
        .into_iter()
        .map(|g| (None, g))
        .chain(cands.into_iter().enumerate().map(|(j, g)| (Some(j), g)))
        .map(|(j, g)| (j, ord.normalize(g)))
        .filter(|(_, g)| !g.is_empty())
        .map(|(j, g)| (ord.sugar(&g), j, g))
        .collect();
    inputs.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| a.1.is_some().cmp(&b.1.is_some()))
            .then_with(|| ord.cmp(&a.2[0].0, a.2[0].1, &b.2[0].0, b.2[0].1))
            .then_with(|| a.1.cmp(&b.1))
    });
    for (s, _, _) in &inputs {
        check_degree(*s)?;
    }
    let mut queue: std::collections::VecDeque<(i64, Option<usize>, Vector<F>)> = inputs.into();

    let mut processed: u64 = 0;
    loop {
        let best_pair = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, p)| (k, p.sugar));
        let take_input = match (queue.front(), best_pair) {
            (Some((s, _, _)), Some((_, ps))) => *s < ps,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let (mut sugar, source, candidate) = if take_input {
            queue.pop_front().unwrap()
        } else {
            let p = pairs.swap_remove(best_pair.unwrap().0);
            if truncate.is_some_and(|d| p.sugar > d) {
                continue;
            }
            processed += 1;
            if let Some(max) = limits.max_pairs {
                if processed > max {
                    return Err(Error::ResourceLimit(format!(
                        "more than {max} S-pairs required"
                    )));
                }
            }
            (p.sugar, None, spoly(&polys[p.i], &polys[p.j], &p.lcm, ord))
        };
        let red = Reducers::new(&polys, ord.rank(), |i| active[i]);
        let mut h = reduce_with(candidate, &red, ord, false, &mut sugar);
        if h.is_empty() {
            continue;
        }
        if syz_block.is_some_and(|b| h[0].1 >= b) {
            make_monic(&mut h);
            syzygies.push(h);
            continue;
        }
        if let Some(j) = source {
            kept.push(j);
        }
        make_monic(&mut h);
        check_degree(ord.sugar(&h))?;

        // Gebauer-Moeller update.
        let n = polys.len();
        let (hm, hc) = (h[0].0.clone(), h[0].1);
        let mut cand: Vec<Pair> = Vec::new();
        for g in 0..n {
            if !active[g] || polys[g][0].1 != hc {
                continue;
            }
            let gm = &polys[g][0].0;
            let lcm = hm.lcm(gm);
            let deg = ord.ring.degree(&lcm);
            let s = (sugar + deg - ord.ring.degree(&hm)).max(sugars[g] + deg - ord.ring.degree(gm));
            cand.push(Pair {
                i: g,
                j: n,
                lcm,
                comp: hc,
                sugar: s,
            });
        }
        let coprime = |p: &Pair| rank1 && polys[p.i][0].0.is_coprime(&hm);
        let mut kept_pairs: Vec<Pair> = Vec::new();
        while let Some(p) = cand.pop() {
            let dominated = cand.iter().chain(kept_pairs.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime(&p) || !dominated {
                kept_pairs.push(p);
            }
        }
        kept_pairs.retain(|p| !coprime(p));
        pairs.retain(|p| {
            let (li, lj) = (&polys[p.i][0].0, &polys[p.j][0].0);
            !(p.comp == hc
                && hm.divides(&p.lcm)
                && hm.lcm(li) != p.lcm
                && hm.lcm(lj) != p.lcm)
        });
        pairs.extend(kept_pairs);
        for g in 0..n {
            if active[g] && polys[g][0].1 == hc && hm.divides(&polys[g][0].0) {
                active[g] = false;
            }
        }
        polys.push(h);
        sugars.push(sugar);
        active.push(true);
    }
    kept.sort_unstable();
    Ok(Run {
        polys,
        active,
        kept,
        syzygies,
    })
}

fn spoly<F: Field>(f: &Vector<F>, g: &Vector<F>, lcm: &Monomial, ord: &ModuleOrder) -> Vector<F> {
    let mf = lcm.div(&f[0].0).unwrap();
    let mg = lcm.div(&g[0].0).unwrap();
    let kf = f[0].2.inv().unwrap();
    let kg = g[0].2.inv().unwrap();
    let a: Vector<F> = f[1..]
        .iter()
        .map(|t| (t.0.mul(&mf), t.1, t.2.clone() * kf.clone()))
        .collect();
    ord.sub_mul(&a, &kg, &mg, &g[1..])
}

/// Checks that every S-pair of `basis` reduces to zero.
pub(crate) fn verify_basis<F: Field>(basis: &[Vector<F>], ord: &ModuleOrder) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i][0].1 != basis[j][0].1 {
                continue;
            }
            let lcm = basis[i][0].0.lcm(&basis[j][0].0);
            let s = spoly(&basis[i], &basis[j], &lcm, ord);
            if !normal_form(s, basis, ord).is_empty() {
                return false;
            }
        }
    }
    true
}
