//! Command dispatch and report emission (`resint-report/1`).

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Map, Value};

use super::problem::{ProblemFile, ResidualSpec, ANALYSES, DEFAULT_ANALYSES};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Fp, Rational};
use crate::groebner::{Ideal, Limits, QuotientRing};
use crate::invariants::{
    hilbert_series_quotient, invariant_report, ring_hilbert_series, HilbertSeries, INFINITE_HEIGHT,
};
use crate::koszul::{koszul_complex, proper_sequence_check};
use crate::module::SubquotientModule;
use crate::oracle::{oracle_hilbert, oracle_membership};
use crate::poly::Polynomial;
use crate::residual::{
    classify_residual, ericci, f_complex_layout, free_approach_certificate, general_residual, hilbert_identity_check,
    kitt_chain, q_complex_layout, r_min_generated, regularity_bound_check, residual_colon, tau, ColonResult,
    Hypothesis, ResidualInput, DEFAULT_ATTEMPTS,
};

pub const REPORT_SCHEMA: &str = "resint-report/1";

/// Characteristics compiled into this build.
pub const SUPPORTED_CHARACTERISTICS: [u64; 8] = [0, 2, 3, 5, 7, 101, 32003, 65521];

const DEFAULT_N_MAX: i64 = 15;
const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Analyze,
    Colon,
    Classify,
    Kitt,
    Tau,
    Certify,
    Ericci,
    Layout,
    Hilbert,
    Koszul,
    Invariants,
    Oracle,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Analyze,
        Command::Colon,
        Command::Classify,
        Command::Kitt,
        Command::Tau,
        Command::Certify,
        Command::Ericci,
        Command::Layout,
        Command::Hilbert,
        Command::Koszul,
        Command::Invariants,
        Command::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Colon => "colon",
            Command::Classify => "classify",
            Command::Kitt => "kitt",
            Command::Tau => "tau",
            Command::Certify => "certify",
            Command::Ericci => "ericci",
            Command::Layout => "layout",
            Command::Hilbert => "hilbert",
            Command::Koszul => "koszul",
            Command::Invariants => "invariants",
            Command::Oracle => "oracle",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub characteristic: Option<u64>,
    pub max_degree: Option<i64>,
    pub max_pairs: Option<u64>,
    /// Degree bound for the oracle command.
    pub oracle_bound: Option<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub value: Value,
    pub exit_code: i32,
    pub summary: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.value).expect("report serializes");
        s.push('\n');
        s
    }
}

struct Body {
    problem: Value,
    seed: Value,
    results: Map<String, Value>,
    exit_code: i32,
    summary: Vec<String>,
}

/// Runs `command` on `problem`. Never panics on bad input: failures become
/// an `error` record and the matching exit code.
pub fn run(problem: &ProblemFile, command: Command, opts: &RunOptions) -> Report {
    let characteristic = opts.characteristic.unwrap_or(problem.ring.characteristic);
    let limits = Limits {
        max_degree: opts.max_degree.or(problem.limits.max_degree),
        max_pairs: opts.max_pairs.or(problem.limits.max_pairs),
    };
    let outcome = limits.scope(|| dispatch(problem, command, opts, characteristic));
    let mut v = header(command, Some(characteristic));
    v.insert(
        "limits".into(),
        json!({"max_degree": limits.max_degree, "max_pairs": limits.max_pairs}),
    );
    match outcome {
        Ok(body) => {
            v.insert("problem".into(), body.problem);
            v.insert("seed".into(), body.seed);
            v.insert("results".into(), Value::Object(body.results));
            finish(v, command, Some(characteristic), body.summary, body.exit_code)
        }
        Err(e) => Report::failure_with(v, command, Some(characteristic), &e),
    }
}

impl Report {
    /// Report for a problem that could not be read or parsed.
    pub fn failure(command: Command, e: &Error) -> Report {
        Report::failure_with(header(command, None), command, None, e)
    }

    fn failure_with(mut v: Map<String, Value>, command: Command, characteristic: Option<u64>, e: &Error) -> Report {
        v.insert("error".into(), json!({"kind": e.kind(), "message": e.to_string()}));
        finish(v, command, characteristic, vec![format!("error: {e}")], e.exit_code())
    }
}

fn header(command: Command, characteristic: Option<u64>) -> Map<String, Value> {
    let mut v = Map::new();
    v.insert("schema".into(), json!(REPORT_SCHEMA));
    v.insert(
        "engine".into(),
        json!({"name": "resint", "version": env!("CARGO_PKG_VERSION")}),
    );
    v.insert("command".into(), json!(command.name()));
    v.insert("characteristic".into(), json!(characteristic));
    v
}

fn finish(
    mut v: Map<String, Value>,
    command: Command,
    characteristic: Option<u64>,
    lines: Vec<String>,
    exit_code: i32,
) -> Report {
    v.insert("exit_code".into(), json!(exit_code));
    let mut summary = vec![match characteristic {
        Some(c) => format!("resint {} (characteristic {c})", command.name()),
        None => format!("resint {}", command.name()),
    }];
    summary.extend(lines);
    summary.push(format!("exit code {exit_code}"));
    Report {
        value: Value::Object(v),
        exit_code,
        summary: summary.join("\n") + "\n",
    }
}

fn dispatch(problem: &ProblemFile, command: Command, opts: &RunOptions, characteristic: u64) -> Result<Body> {
    if characteristic != 0 && !is_prime(characteristic) {
        return Err(Error::NonPrimeCharacteristic(characteristic));
    }
    match characteristic {
        0 => run_in::<Rational>(problem, command, opts),
        2 => run_in::<Fp<2>>(problem, command, opts),
        3 => run_in::<Fp<3>>(problem, command, opts),
        5 => run_in::<Fp<5>>(problem, command, opts),
        7 => run_in::<Fp<7>>(problem, command, opts),
        101 => run_in::<Fp<101>>(problem, command, opts),
        32003 => run_in::<Fp<32003>>(problem, command, opts),
        65521 => run_in::<Fp<65521>>(problem, command, opts),
        c => Err(Error::UnsupportedCharacteristic(c)),
    }
}

fn tagged<T: Serialize>(value: T, method: &str) -> Value {
    json!({"value": value, "method": method})
}

fn height_value(h: usize) -> Value {
    if h == INFINITE_HEIGHT {
        json!("infinite")
    } else {
        json!(h)
    }
}

fn strings<F: Field>(ps: &[Polynomial<F>]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn ideal_gens<F: Field>(i: &Ideal<F>) -> Result<Vec<String>> {
    let gens = if i.is_homogeneous() {
        i.minimal_generators()?
    } else {
        i.reduced_gens()?
    };
    Ok(strings(&gens))
}

fn series_value(hs: &HilbertSeries, n_max: i64) -> Value {
    let multiplicity = hs.multiplicity().ok();
    json!({
        "series": hs.to_string(),
        "dimension": tagged(hs.dimension(), "hilbert-pole-order"),
        "multiplicity": multiplicity.map(|e| tagged(e, "hilbert-numerator")),
        "values": hs.expand(n_max),
    })
}

/// Hypothesis-level failures of an optional construction are reported,
/// not raised.
fn optional(r: Result<Value>) -> Result<Value> {
    match r {
        Err(e @ (Error::Hypothesis(_) | Error::InvalidInput(_) | Error::Unsupported(_) | Error::DegreeMismatch(_))) => {
            Ok(json!({"unavailable": e.to_string()}))
        }
        other => other,
    }
}

struct Ctx<F: Field> {
    ring: Arc<QuotientRing<F>>,
    f: Vec<Polynomial<F>>,
    input: ResidualInput<F>,
    colon: Option<ColonResult<F>>,
    seed: u64,
    attempts: usize,
    n_max: i64,
    zeta: Option<usize>,
    summary: Vec<String>,
}

impl<F: Field> Ctx<F> {
    fn colon(&mut self) -> Result<&ColonResult<F>> {
        if self.colon.is_none() {
            self.colon = Some(residual_colon(&self.input)?);
        }
        Ok(self.colon.as_ref().expect("just computed"))
    }
}

fn run_in<F: Field>(problem: &ProblemFile, command: Command, opts: &RunOptions) -> Result<Body> {
    let canonical = problem.canonical::<F>()?;
    let ring = problem.quotient_ring::<F>()?;
    let f = problem.ideal_generators(&ring)?;
    let attempts = problem.options.attempts.unwrap_or(DEFAULT_ATTEMPTS);
    let n_max = problem.options.n_max.unwrap_or(DEFAULT_N_MAX);

    let mut seed = DEFAULT_SEED;
    let mut seed_info = Value::Null;
    let mut colon = None;
    let input = match &problem.residual {
        ResidualSpec::General(g) => {
            let degrees = g.resolved_degrees()?;
            seed = opts.seed.or(g.seed).unwrap_or(DEFAULT_SEED);
            if matches!(command, Command::Oracle | Command::Koszul) {
                seed_info = json!({"requested": seed, "used": seed, "tried": [seed]});
                ResidualInput::general(&ring, &f, &degrees, seed)?
            } else {
                let gr = general_residual(&ring, &f, &degrees, seed, attempts)?;
                seed_info = json!({
                    "requested": seed,
                    "used": gr.input.seed(),
                    "tried": gr.seeds_tried,
                });
                colon = Some(gr.colon);
                gr.input
            }
        }
        ResidualSpec::Generators(_) => {
            let a = problem.residual_generators(&ring)?.expect("generators");
            ResidualInput::explicit(&ring, &f, &a)?
        }
        ResidualSpec::Matrix(_) => {
            let phi = problem.residual_matrix(&ring)?.expect("matrix");
            ResidualInput::with_matrix(&ring, &f, &phi)?
        }
    };
    if let Some(s) = opts.seed {
        seed = s;
    }

    let mut ctx = Ctx {
        ring,
        f,
        input,
        colon,
        seed,
        attempts,
        n_max,
        zeta: problem.options.zeta,
        summary: Vec::new(),
    };
    ctx.summary.push(format!("r = {}, s = {}", ctx.input.r(), ctx.input.s()));

    let sections: Vec<&str> = match command {
        Command::Analyze if problem.analyses.is_empty() => DEFAULT_ANALYSES.to_vec(),
        Command::Analyze => problem.analyses.iter().map(String::as_str).collect(),
        other => vec![other.name()],
    };
    let mut results = Map::new();
    let mut exit_code = 0;
    for name in sections {
        let value = section(&mut ctx, name, opts)?;
        if command == Command::Certify && value["issued"] == json!(false) {
            exit_code = 1;
        }
        results.insert(name.to_string(), value);
    }

    let mut echo = serde_json::to_value(&canonical).expect("problem serializes");
    echo["residual_generators"] = json!(strings(ctx.input.residual_generators()));
    Ok(Body {
        problem: echo,
        seed: seed_info,
        results,
        exit_code,
        summary: ctx.summary,
    })
}

fn section<F: Field>(ctx: &mut Ctx<F>, name: &str, opts: &RunOptions) -> Result<Value> {
    debug_assert!(ANALYSES.contains(&name) || name == "oracle");
    match name {
        "colon" => colon_section(ctx),
        "classify" => {
            ctx.colon()?;
            let c = classify_residual(&ctx.input, ctx.colon.as_ref().expect("computed"))?;
            ctx.summary.push(format!("classification: {:?}", c.kind));
            Ok(tagged(c, "heights via Hilbert series of R/(I+J) and R/(Fitt_1+I+J)"))
        }
        "rmin" => {
            let zeta = ctx.zeta.unwrap_or(ctx.input.s().saturating_sub(1));
            let m = r_min_generated(&ctx.ring, &ctx.f, zeta)?;
            ctx.summary.push(match &m.diagnostic {
                Some(d) => d.clone(),
                None => format!("r-minimal from height {zeta}"),
            });
            Ok(tagged(m, "saturation I : I_1(phi)^inf"))
        }
        "kitt" => kitt_section(ctx),
        "tau" => tau_section(ctx),
        "regularity" => {
            let t = tau(&ctx.input)?;
            let b = regularity_bound_check(&ctx.input, &t.ideal)?;
            ctx.summary.push(format!("regularity bound: {} <= {} is {}", b.lhs, b.rhs, b.holds));
            Ok(tagged(b, "betti table of R/tau against the degree formula"))
        }
        "certify" => {
            ctx.colon()?;
            let colon = ctx.colon.as_ref().expect("computed");
            let cert = free_approach_certificate(&ctx.input, colon, &Hypothesis::ALL, ctx.n_max)?;
            if cert.issued {
                ctx.summary.push("certificate issued".to_string());
            } else {
                ctx.summary.push("certificate denied".to_string());
                ctx.summary.extend(cert.diagnostics.iter().map(|d| format!("  {d}")));
            }
            Ok(serde_json::to_value(cert).expect("certificate serializes"))
        }
        "ericci" => ericci_section(ctx),
        "layout" => layout_section(ctx),
        "hilbert" => {
            let n = ctx.n_max;
            let colon_j = ctx.colon()?.j.clone();
            let i = ctx.input.i_ideal();
            Ok(json!({
                "ring": series_value(&ring_hilbert_series(&ctx.ring)?, n),
                "r_mod_i": series_value(&hilbert_series_quotient(&i)?, n),
                "r_mod_j": series_value(&hilbert_series_quotient(&colon_j)?, n),
            }))
        }
        "koszul" => koszul_section(ctx),
        "invariants" => {
            let j = ctx.colon()?.j.clone();
            let ring_report = invariant_report(&SubquotientModule::free(&ctx.ring, vec![0]))?;
            let quotient = if j.is_unit()? {
                Value::Null
            } else {
                let rep = invariant_report(&SubquotientModule::quotient_by(&j))?;
                ctx.summary.push(format!(
                    "R/J: dim {}, depth {}, regularity {}",
                    rep.dim.value, rep.depth.value, rep.regularity.value
                ));
                serde_json::to_value(rep).expect("report serializes")
            };
            Ok(json!({"ring": ring_report, "r_mod_j": quotient}))
        }
        "oracle" => oracle_section(ctx, opts),
        other => Err(Error::InvalidInput(format!("unknown analysis `{other}`"))),
    }
}

fn colon_section<F: Field>(ctx: &mut Ctx<F>) -> Result<Value> {
    let colon = ctx.colon()?.clone();
    let gens = ideal_gens(&colon.j)?;
    ctx.summary.push(format!("ht J = {}", height_value(colon.height)));
    if let Some(flag) = colon.flag() {
        ctx.summary.push(flag.to_string());
    }
    Ok(json!({
        "generators": gens,
        "height": tagged(height_value(colon.height), "dim R - dim R/J via Hilbert series"),
        "proper": colon.proper,
        "flag": colon.flag(),
    }))
}

fn kitt_section<F: Field>(ctx: &mut Ctx<F>) -> Result<Value> {
    let chain = kitt_chain(&ctx.input)?;
    let j = ctx.colon()?.j.clone();
    let levels = chain
        .levels()
        .iter()
        .enumerate()
        .map(|(i, l)| Ok(json!({"level": i, "generators": ideal_gens(l)?})))
        .collect::<Result<Vec<_>>>()?;
    let increasing = chain
        .levels()
        .windows(2)
        .map(|w| w[1].contains_ideal(&w[0]))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let kitt = chain.kitt();
    let a_in_kitt = kitt.contains_ideal(&ctx.input.a_ideal())?;
    let kitt_in_j = j.contains_ideal(kitt)?;
    let radicals = match chain.levels().get(1) {
        Some(k1) => j.radical_equals(k1)? && j.radical_equals(kitt)?,
        None => j.radical_equals(kitt)?,
    };
    ctx.summary.push(format!(
        "Kitt: {} levels, a ⊆ Kitt {a_in_kitt}, Kitt ⊆ J {kitt_in_j}",
        chain.levels().len()
    ));
    Ok(json!({
        "levels": levels,
        "generators": chain.generators(),
        "checks": {
            "levels_increasing": increasing,
            "a_in_kitt": a_in_kitt,
            "kitt_in_j": kitt_in_j,
            "radicals_agree": radicals,
        },
    }))
}

fn tau_section<F: Field>(ctx: &mut Ctx<F>) -> Result<Value> {
    let t = tau(&ctx.input)?;
    let j = ctx.colon()?.j.clone();
    let in_j = j.contains_ideal(&t.ideal)?;
    let radical = t.ideal.radical_equals(&j)?;
    ctx.summary.push(format!(
        "tau: mu = {} (bound {}), tau ⊆ J {in_j}, rad tau = rad J {radical}",
        t.mu(),
        t.bound
    ));
    Ok(json!({
        "generators": strings(&t.minimal_generators),
        "mu": tagged(t.mu(), "minimal generating subset"),
        "bound": tagged(t.bound, "s + C(s,r)"),
        "within_bound": t.within_bound(),
        "minors": tagged(t.minors.len(), "r x r minors of Phi"),
        "wedges": tagged(t.wedges.len(), "top coefficients of zeta wedges"),
        "paths_agree": t.paths_agree,
        "in_j": in_j,
        "radical_equals_j": radical,
    }))
}

fn ericci_section<F: Field>(ctx: &mut Ctx<F>) -> Result<Value> {
    let d = ctx.input.generator_degrees().to_vec();
    let l = ctx.input.residual_degrees().to_vec();
    let e = ericci(&ctx.ring, &d, &l, ctx.seed, ctx.attempts)?;
    let j = ctx.colon()?.j.clone();
    let e_j = if j.is_unit()? {
        None
    } else {
        Some(crate::invariants::multiplicity(&SubquotientModule::quotient_by(&j))?)
    };
    let bound_holds = e_j.map(|x| x <= e.value);
    ctx.summary.push(format!(
        "ericci = {}, e(R/J) = {}",
        e.value,
        e_j.map_or("-".to_string(), |x| x.to_string())
    ));
    Ok(json!({
        "ericci": tagged(e.value, "generic complete intersection residual"),
        "layout_value": tagged(e.layout_value, "F-layout Euler characteristic"),
        "seeds_tried": e.seeds_tried,
        "rejected": e.rejected,
        "multiplicity_j": e_j.map(|x| tagged(x, "hilbert-numerator")),
        "bound_holds": bound_holds,
    }))
}

fn layout_section<F: Field>(ctx: &mut Ctx<F>) -> Result<Value> {
    let (r, s) = (ctx.input.r(), ctx.input.s());
    let d = ctx.input.generator_degrees().to_vec();
    let l = ctx.input.residual_degrees().to_vec();
    let n_max = ctx.n_max;
    let f_layout = optional((|| {
        let layout = f_complex_layout(r, s, &d, &l)?;
        let t = tau(&ctx.input)?;
        let id = hilbert_identity_check(&layout, &t.ideal, n_max)?;
        Ok(json!({
            "layout": layout.to_string(),
            "modules": layout.modules,
            "identity_r_mod_tau": tagged(id, "Euler characteristic vs Hilbert series"),
        }))
    })())?;
    let j = ctx.colon()?.j.clone();
    let q_layout = optional((|| {
        let layout = q_complex_layout(&ctx.input)?;
        let id = hilbert_identity_check(&layout, &j, n_max)?;
        Ok(json!({
            "layout": layout.to_string(),
            "modules": layout.modules,
            "identity_r_mod_j": tagged(id, "Euler characteristic vs Hilbert series"),
        }))
    })())?;
    if let Some(q) = q_layout.get("layout") {
        ctx.summary.push(format!("Q-layout {}", q.as_str().unwrap_or_default()));
    }
    Ok(json!({"f": f_layout, "q": q_layout}))
}

fn koszul_section<F: Field>(ctx: &mut Ctx<F>) -> Result<Value> {
    let k = koszul_complex(&ctx.ring, &ctx.f)?;
    let grade = k.grade()?;
    let proper = proper_sequence_check(&ctx.ring, &ctx.f)?;
    let homology = (0..=k.len())
        .map(|i| {
            let h = k.homology(i)?;
            let zero = h.is_zero()?;
            let series = if zero {
                "0".to_string()
            } else {
                crate::invariants::hilbert_series(&h)?.to_string()
            };
            Ok(json!({"index": i, "zero": zero, "hilbert_series": series}))
        })
        .collect::<Result<Vec<_>>>()?;
    ctx.summary.push(format!(
        "grade I = {}, proper sequence {}",
        grade.map_or("-".to_string(), |g| g.to_string()),
        proper.proper
    ));
    Ok(json!({
        "grade": tagged(grade, "first nonvanishing Koszul homology"),
        "proper_sequence": proper,
        "homology": homology,
    }))
}

fn oracle_section<F: Field>(ctx: &mut Ctx<F>, opts: &RunOptions) -> Result<Value> {
    let bound = opts.oracle_bound.unwrap_or(ctx.n_max);
    let mut gens = ctx.ring.relations().to_vec();
    gens.extend(ctx.f.iter().cloned());
    let oracle = oracle_hilbert(ctx.ring.ambient(), &gens, bound)?;
    let engine = hilbert_series_quotient(&ctx.input.i_ideal())?.expand(bound);
    let agree = oracle.iter().zip(&engine).all(|(&a, &b)| a as i128 == b);
    let membership = ctx
        .input
        .residual_generators()
        .iter()
        .map(|a| oracle_membership(a, &gens, bound))
        .collect::<Result<Vec<_>>>()?;
    ctx.summary.push(format!("oracle Hilbert function agrees with engine: {agree}"));
    Ok(json!({
        "bound": bound,
        "hilbert": tagged(oracle, "truncated linear algebra"),
        "engine_hilbert": tagged(engine, "groebner basis and Hilbert series"),
        "agree": agree,
        "a_in_i": tagged(membership, "truncated linear algebra"),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_problem;

    const LINKAGE: &str = r#"{
  "schema": "resint-problem/1",
  "ring": {"variables": ["x", "y"]},
  "ideal": ["x", "y"],
  "residual": {"generators": ["x^2", "y^2"]}
}"#;

    fn linkage() -> ProblemFile {
        parse_problem(LINKAGE).unwrap()
    }

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(Command::from_name(c.name()), Some(c));
        }
        assert_eq!(Command::from_name("nope"), None);
    }

    #[test]
    fn colon_on_linkage() {
        let rep = run(&linkage(), Command::Colon, &RunOptions::default());
        assert_eq!(rep.exit_code, 0, "{}", rep.to_json());
        let c = &rep.value["results"]["colon"];
        assert_eq!(c["height"]["value"], json!(2));
        assert_eq!(c["generators"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn certify_on_linkage_issues() {
        let rep = run(&linkage(), Command::Certify, &RunOptions::default());
        assert_eq!(rep.exit_code, 0, "{}", rep.summary);
        assert_eq!(rep.value["results"]["certify"]["issued"], json!(true));
    }

    #[test]
    fn analyze_is_deterministic() {
        let opts = RunOptions {
            characteristic: Some(32003),
            ..RunOptions::default()
        };
        let a = run(&linkage(), Command::Analyze, &opts);
        let b = run(&linkage(), Command::Analyze, &opts);
        assert_eq!(a.exit_code, 0, "{}", a.summary);
        assert_eq!(a.to_json(), b.to_json());
        for name in DEFAULT_ANALYSES {
            assert!(a.value["results"].get(name).is_some(), "{name}");
        }
    }

    #[test]
    fn limits_map_to_exit_three() {
        let opts = RunOptions {
            max_degree: Some(1),
            ..RunOptions::default()
        };
        let rep = run(&linkage(), Command::Analyze, &opts);
        assert_eq!(rep.exit_code, 3, "{}", rep.summary);
        assert_eq!(rep.value["error"]["kind"], json!("resource_limit"));
    }

    #[test]
    fn characteristic_errors() {
        let bad = |c| {
            run(
                &linkage(),
                Command::Colon,
                &RunOptions {
                    characteristic: Some(c),
                    ..RunOptions::default()
                },
            )
        };
        assert_eq!(bad(9).value["error"]["kind"], json!("non_prime_characteristic"));
        let r = bad(13);
        assert_eq!(r.exit_code, 2);
        assert_eq!(r.value["error"]["kind"], json!("unsupported_characteristic"));
    }

    #[test]
    fn oracle_agrees_on_linkage() {
        let rep = run(&linkage(), Command::Oracle, &RunOptions::default());
        assert_eq!(rep.value["results"]["oracle"]["agree"], json!(true));
        assert_eq!(rep.value["results"]["oracle"]["a_in_i"]["value"], json!([true, true]));
    }
}
