//! One line per acceptance criterion. Tolerances are exact equality unless
//! a line says otherwise; time limits are checked against wall time.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::sweep::*;
use common::*;
use resint_core::invariants::{
    depth_regularity, height, is_cohen_macaulay, krull_dim, multiplicity, serre_condition, unmixed_check,
};
use resint_core::koszul::koszul_complex;
use resint_core::module::{complex_homology, minimal_free_resolution, SubquotientModule};
use resint_core::residual::*;
use resint_core::{Field, Fp, Ideal, Rational};

type F = Fp<32003>;

const RESIDUAL_INSTANCES: u64 = 500;
const RANDOM_ORACLE_INSTANCES: u64 = 300;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn criterion(n: u32, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(o) => (o.passed && elapsed <= limit, o.detail),
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        }
    };
    println!(
        "criterion {n}: {} | {detail} | {:.2}s (limit {}s)",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    passed
}

/// Height 3, dimension and depth 2, multiplicity 11 for the general
/// residual of `(x0, x1, x2+x3+x4+x5)` by three quadrics.
fn hypersurface_seed<K: Field>(seed: u64) -> (bool, Duration) {
    let start = Instant::now();
    let r = hypersurface::<K>();
    let f = polys(&r, &["x0", "x1", "x2 + x3 + x4 + x5"]);
    let input = ResidualInput::general(&r, &f, &[2, 2, 2], seed).unwrap();
    let colon = residual_colon(&input).unwrap();
    let q = SubquotientModule::quotient_by(&colon.j);
    let dr = depth_regularity(&q).unwrap();
    let ok = colon.height == 3 && krull_dim(&q).unwrap() == 2 && dr.depth == 2 && multiplicity(&q).unwrap() == 11;
    (ok, start.elapsed())
}

fn criterion_1() -> Outcome {
    let per_run = Duration::from_secs(120);
    let mut good = 0;
    let mut slowest = Duration::ZERO;
    for seed in 1..=5 {
        let (ok, t) = hypersurface_seed::<F>(seed);
        slowest = slowest.max(t);
        good += usize::from(ok && t <= per_run);
    }
    let (rational_ok, rational_t) = hypersurface_seed::<Rational>(1);
    slowest = slowest.max(rational_t);

    let r = hypersurface::<F>();
    let f = polys(&r, &["x2", "x3", "x4"]);
    let input = ResidualInput::general(&r, &f, &[2, 2, 2], 1).unwrap();
    let colon = residual_colon(&input).unwrap();
    let e_prime = multiplicity(&SubquotientModule::quotient_by(&colon.j)).unwrap();
    let e = ericci(&r, &[1, 1, 1], &[2, 2, 2], 1, DEFAULT_ATTEMPTS).unwrap();
    let passed = good >= 3 && rational_ok && e_prime == 14 && e.value == 14 && 11 <= e.value;
    outcome(
        passed,
        format!(
            "ht 3, dim = depth = 2, e = 11 on {good}/5 seeds over F_32003 (need 3); Q seed 1 {}; \
             e(R/J') = {e_prime} (want 14); ericci = {} (want 14, >= 11); slowest run {:.1}s (limit 120s)",
            if rational_ok { "agrees" } else { "disagrees" },
            e.value,
            slowest.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let r = hypersurface::<F>();
    let f = polys(&r, &["x0", "x1", "x2 + x3 + x4 + x5"]);
    let input = ResidualInput::general(&r, &f, &[2, 2, 2], 1).unwrap();
    let rs = (input.r(), input.s());
    let rmin = r_min_generated(&r, &f, 2).unwrap().holds;
    let colon = residual_colon(&input).unwrap();
    let t = tau(&input).unwrap();
    let a_plus_det = input.a_ideal().sum(&Ideal::new(&r, t.minors.clone())).unwrap();
    let is_sum = t.ideal.equals(&a_plus_det).unwrap() && t.paths_agree;
    let inside = colon.j.contains_ideal(&t.ideal).unwrap();
    let radical = t.ideal.radical_equals(&colon.j).unwrap();
    let cert = free_approach_certificate(&input, &colon, &Hypothesis::ALL, 10).unwrap();
    outcome(
        rs == (3, 3) && rmin && is_sum && t.mu() <= 4 && inside && radical && cert.issued,
        format!(
            "(r, s) = {rs:?}; r-min from height 2 {rmin}; tau = a + det(Phi) {is_sum}; mu(tau) = {} (<= 4); \
             tau in J {inside}; rad tau = rad J {radical}; certificate issued {}",
            t.mu(),
            cert.issued
        ),
    )
}

fn criterion_3() -> Outcome {
    let r = stanley_reisner::<F>();
    let ambient = SubquotientModule::quotient_by(&Ideal::zero(&r));
    let s3 = serre_condition(&ambient, 3).unwrap();
    let cm = is_cohen_macaulay(&ambient).unwrap();
    let f = h_matrix(&r).minors(2);
    let k = koszul_complex(&r, &f).unwrap();
    let (phi, gens) = k.cycle_module(1).unwrap().minimal_presentation().unwrap();
    let z1_free = gens.len() == 2 && phi.matrix().ncols() == 0;
    let input = ResidualInput::with_matrix(&r, &f, &m_matrix(&r)).unwrap();
    let colon = residual_colon(&input).unwrap();
    let c = classify_residual(&input, &colon).unwrap();
    let q = SubquotientModule::quotient_by(&colon.j);
    let unmixed = colon.height == 2 && unmixed_check(&q).unwrap();
    let layout = q_complex_layout(&input).unwrap();
    let id = hilbert_identity_check(&layout, &colon.j, 15).unwrap();
    let geometric = c.kind == ResidualKind::Geometric && c.height_i_plus_j == Some(3);
    outcome(
        s3 && !cm && z1_free && geometric && unmixed && id.holds,
        format!(
            "S_3 {s3}; CM {cm}; Z_1 free of rank 2 {z1_free}; ht(I+J) = {:?} ({:?}); unmixed at codim 2 {unmixed}; \
             Q-layout Hilbert identity for n <= 15 {}",
            c.height_i_plus_j, c.kind, id.holds
        ),
    )
}

fn criterion_4() -> Outcome {
    let r = stanley_reisner::<F>();
    let f = h_matrix(&r).minors(2);
    let mut good = 0;
    let mut seen = Vec::new();
    for seed in 1..=5 {
        let g = general_residual(&r, &f, &[3, 3, 3], seed, 1).unwrap();
        let q = SubquotientModule::quotient_by(&g.colon.j);
        let depth = depth_regularity(&q).unwrap().depth;
        seen.push((g.colon.height, depth));
        good += usize::from(g.colon.height >= 3 && depth == 0);
    }
    outcome(good >= 3, format!("(ht J, depth R/J) per seed {seen:?}; {good}/5 satisfy ht >= 3, depth 0 (need 3)"))
}

fn criterion_5() -> Outcome {
    let r = stanley_reisner::<F>();
    let h = h_matrix(&r);
    let f = h.minors(2);
    let codim = height(&Ideal::new(&r, f.clone())).unwrap();
    let res = minimal_free_resolution(&SubquotientModule::ideal(&Ideal::new(&r, f.clone())), Some(4)).unwrap();
    let pd = if res.is_complete() { res.projective_dimension() } else { None };
    let rm = r_min_generated(&r, &f, 3).unwrap();
    let entries = height(&Ideal::new(&r, h.rows().into_iter().flatten().collect())).unwrap();
    outcome(
        codim == 2 && pd == Some(1) && !rm.holds && entries == 4,
        format!(
            "codim I = {codim} (want 2); pd I = {pd:?} (want 1); r_min_generated(I, 3) = {} (want false); \
             codim of entries = {entries} (want 4)",
            rm.holds
        ),
    )
}

fn criterion_6() -> Outcome {
    let r = quotient::<Rational>(&["x", "y"], &[]);
    let input = ResidualInput::explicit(&r, &polys(&r, &["x", "y"]), &polys(&r, &["x^2", "y^2"])).unwrap();
    let colon = residual_colon(&input).unwrap();
    let target = Ideal::new(&r, polys(&r, &["x^2", "x*y", "y^2"]));
    let t = tau(&input).unwrap();
    let kitt = kitt_chain(&input).unwrap();
    let equal = colon.j.equals(&target).unwrap() && t.ideal.equals(&target).unwrap() && kitt.kitt().equals(&target).unwrap();
    let layout = f_complex_layout(2, 2, &[1, 1], &[2, 2]).unwrap();
    let want = vec![vec![0], vec![2, 2, 2], vec![3, 3]];
    let res = minimal_free_resolution(&SubquotientModule::quotient_by(&t.ideal), None).unwrap();
    let from_res: Vec<Vec<i64>> = res
        .modules()
        .iter()
        .map(|m| {
            let mut d = m.degrees.clone();
            d.sort_unstable();
            d
        })
        .collect();
    let b = regularity_bound_check(&input, &t.ideal).unwrap();
    outcome(
        equal && layout.modules == want && from_res == want && b.lhs == 1 && b.rhs == 1,
        format!(
            "J = tau = Kitt = (x^2, xy, y^2) {equal}; F-layout {} matches [R; R(-2)^3; R(-3)^2] {} and the \
             minimal resolution {}; regularity {} <= {}",
            layout,
            layout.modules == want,
            from_res == want,
            b.lhs,
            b.rhs
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let (mut proper, mut long) = (0, 0);
    for seed in 0..RESIDUAL_INSTANCES {
        let inst = instance(seed);
        proper += usize::from(!Ideal::new(&inst.ring, inst.a.clone()).equals(&Ideal::new(&inst.ring, inst.f.clone())).unwrap());
        long += usize::from(inst.a.len() >= inst.f.len());
        match residual_violations(&inst) {
            Ok(v) if v.is_empty() => {}
            Ok(v) => failures.push(format!("seed {seed}: {v:?}")),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{RESIDUAL_INSTANCES} instances over F_101 ({proper} with a != I, {long} with s >= r); {} violations{}",
            failures.len(),
            failures.first().map(|f| format!(", first {f}")).unwrap_or_default()
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut tally = OracleTally::default();
    exhaustive_oracle_sweep::<F>(&mut tally).unwrap();
    exhaustive_oracle_sweep::<Small>(&mut tally).unwrap();
    for seed in 0..RANDOM_ORACLE_INSTANCES {
        random_oracle_instance::<F>(seed, &mut tally).unwrap();
    }
    for seed in 0..RANDOM_ORACLE_INSTANCES / 10 {
        random_oracle_instance::<Rational>(seed, &mut tally).unwrap();
    }
    outcome(
        tally.disagreements.is_empty(),
        format!(
            "{} Hilbert function and {} membership comparisons up to degree 6; {} disagreements{}",
            tally.hilbert_checks,
            tally.membership_checks,
            tally.disagreements.len(),
            tally.disagreements.first().map(|d| format!(", first {d}")).unwrap_or_default()
        ),
    )
}

/// Excluded statements are replaced by homology-vanishing spot checks;
/// the Hilbert identities are part of criteria 3 and 6.
fn criterion_9() -> Outcome {
    let r = hypersurface::<F>();
    let f = polys(&r, &["x2", "x3", "x4"]);
    let input = ResidualInput::general(&r, &f, &[2, 2, 2], 1).unwrap();
    let a = input.residual_generators().to_vec();
    let regular = height(&Ideal::new(&r, a.clone())).unwrap() == 3;
    let k = koszul_complex(&r, &a).unwrap();
    let koszul_acyclic = (1..=3).all(|i| k.homology(i).unwrap().is_zero().unwrap());

    let lk = quotient::<F>(&["x", "y"], &[]);
    let k = koszul_complex(&lk, &polys(&lk, &["x^2", "y^2"])).unwrap();
    let linkage_koszul = (1..=2).all(|i| k.homology(i).unwrap().is_zero().unwrap());
    let t = Ideal::new(&lk, polys(&lk, &["x^2", "x*y", "y^2"]));
    let res = minimal_free_resolution(&SubquotientModule::quotient_by(&t), None).unwrap();
    let h = complex_homology(res.maps()).unwrap();
    let resolution_acyclic = h[1..].iter().all(|m| m.is_zero().unwrap());
    outcome(
        regular && koszul_acyclic && linkage_koszul && resolution_acyclic,
        format!(
            "EXCLUDED: positive-characteristic cohomological dimension statements and unconditional acyclicity \
             of the F and Q complexes; substitutes: Koszul homology of the general a in (x2, x3, x4) vanishes \
             {koszul_acyclic} (ht a = 3 {regular}); Koszul homology of (x^2, y^2) vanishes {linkage_koszul}; \
             linkage resolution acyclic {resolution_acyclic}; Hilbert identities in criteria 3 and 6"
        ),
    )
}

fn main() {
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let all: [(u32, u64, fn() -> Outcome); 9] = [
        (1, 600, criterion_1),
        (2, 120, criterion_2),
        (3, 600, criterion_3),
        (4, 1800, criterion_4),
        (5, 600, criterion_5),
        (6, 1, criterion_6),
        (7, 1800, criterion_7),
        (8, 1800, criterion_8),
        (9, 600, criterion_9),
    ];
    let results: Vec<bool> = all
        .into_iter()
        .filter(|(n, _, _)| only.is_empty() || only.contains(n))
        .map(|(n, secs, body)| criterion(n, Duration::from_secs(secs), body))
        .collect();
    let failed = results.iter().filter(|&&p| !p).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
