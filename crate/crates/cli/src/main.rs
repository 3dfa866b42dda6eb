use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use resint_core::io::{parse_problem, run, Command, Report, RunOptions};
use resint_core::Error;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Residual intersections: colon ideals, Kitt filtrations, free approach
/// certificates and their numerical invariants.
#[derive(Parser)]
#[command(name = "resint", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Colon, classification, r-minimality, tau, Kitt chain, certificate
    /// and invariants (or the problem's `analyses` list).
    Analyze(Common),
    /// J = a : I and its height.
    Colon(Common),
    /// Algebraic, arithmetic or geometric residual.
    Classify(Common),
    /// The Kitt chain and its containment checks.
    Kitt(Common),
    /// tau = a + I_r(Phi) by two methods.
    Tau(Common),
    /// Free approach certificate; exit code 1 when denied.
    Certify(Common),
    /// Multiplicity of a generic residual of a complete intersection.
    Ericci(Common),
    /// F- and Q-complex layouts with Hilbert identity checks.
    Layout(Common),
    /// Hilbert series of R, R/I and R/J.
    Hilbert(Common),
    /// Koszul homology, grade and proper sequence check of I.
    Koszul(Common),
    /// Dimension, multiplicity, depth, projective dimension, regularity of R/J.
    Invariants(Common),
    /// Brute-force linear algebra values for cross-checking.
    #[command(hide = true)]
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Degree bound of the truncated computation.
        #[arg(long)]
        bound: Option<i64>,
    },
}

#[derive(Args)]
struct Common {
    /// Problem file (resint-problem/1 JSON).
    problem: PathBuf,
    /// Seed for general elements; overrides the problem file.
    #[arg(long)]
    seed: Option<u64>,
    /// Characteristic of the coefficient field; overrides the problem file.
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Write the JSON report here and the summary to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest admissible S-pair degree.
    #[arg(long)]
    limit_degree: Option<i64>,
    /// Largest number of S-pairs per basis computation.
    #[arg(long)]
    limit_pairs: Option<u64>,
    /// Add a `runtime` block (elapsed time, cache status) to the report.
    #[arg(long)]
    timing: bool,
}

impl Cmd {
    fn split(self) -> (Command, Common, Option<i64>) {
        match self {
            Cmd::Analyze(c) => (Command::Analyze, c, None),
            Cmd::Colon(c) => (Command::Colon, c, None),
            Cmd::Classify(c) => (Command::Classify, c, None),
            Cmd::Kitt(c) => (Command::Kitt, c, None),
            Cmd::Tau(c) => (Command::Tau, c, None),
            Cmd::Certify(c) => (Command::Certify, c, None),
            Cmd::Ericci(c) => (Command::Ericci, c, None),
            Cmd::Layout(c) => (Command::Layout, c, None),
            Cmd::Hilbert(c) => (Command::Hilbert, c, None),
            Cmd::Koszul(c) => (Command::Koszul, c, None),
            Cmd::Invariants(c) => (Command::Invariants, c, None),
            Cmd::Oracle { common, bound } => (Command::Oracle, common, bound),
        }
    }
}

fn threads() -> Result<usize, Error> {
    match std::env::var("RESINT_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Error::InvalidInput(format!("RESINT_THREADS must be a positive integer, got `{v}`"))),
        },
    }
}

struct Cache {
    path: PathBuf,
}

impl Cache {
    fn open(command: Command, problem_text: &str, opts: &RunOptions) -> Option<Cache> {
        let dir = PathBuf::from(std::env::var_os("RESINT_CACHE_DIR")?);
        fs::create_dir_all(&dir).ok()?;
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION"));
        h.update([0]);
        h.update(command.name());
        h.update([0]);
        h.update(format!("{opts:?}"));
        h.update([0]);
        h.update(problem_text);
        Some(Cache {
            path: dir.join(format!("{}.json", hex::encode(h.finalize()))),
        })
    }

    fn load(&self) -> Option<Report> {
        let text = fs::read_to_string(&self.path).ok()?;
        let entry: Value = serde_json::from_str(&text).ok()?;
        Some(Report {
            exit_code: entry["report"]["exit_code"].as_i64()? as i32,
            summary: entry["summary"].as_str()?.to_string(),
            value: entry["report"].clone(),
        })
    }

    /// Atomic: concurrent writers each rename a complete file into place.
    fn store(&self, report: &Report) -> std::io::Result<()> {
        let dir = self.path.parent().unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        let entry = json!({"report": report.value, "summary": report.summary});
        tmp.write_all(entry.to_string().as_bytes())?;
        tmp.persist(&self.path).map_err(|e| e.error)?;
        Ok(())
    }
}

fn execute(command: Command, common: &Common, oracle_bound: Option<i64>) -> Report {
    let started = Instant::now();
    let text = match fs::read_to_string(&common.problem) {
        Ok(t) => t,
        Err(e) => {
            let msg = format!("cannot read {}: {e}", common.problem.display());
            return Report::failure(command, &Error::InvalidInput(msg));
        }
    };
    let threads = match threads() {
        Ok(n) => n,
        Err(e) => return Report::failure(command, &e),
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => return Report::failure(command, &e),
    };
    let opts = RunOptions {
        seed: common.seed,
        characteristic: common.characteristic,
        max_degree: common.limit_degree,
        max_pairs: common.limit_pairs,
        oracle_bound,
    };
    let cache = Cache::open(command, &text, &opts);
    let (mut report, status) = match cache.as_ref().and_then(Cache::load) {
        Some(r) => (r, "hit"),
        None => {
            let r = run(&problem, command, &opts);
            match &cache {
                Some(c) => {
                    if let Err(e) = c.store(&r) {
                        eprintln!("resint: cache write failed: {e}");
                    }
                    (r, "miss")
                }
                None => (r, "disabled"),
            }
        }
    };
    report.summary.push_str(&format!("cache {status}\n"));
    if common.timing {
        report.value["runtime"] = json!({
            "elapsed_ms": started.elapsed().as_millis() as u64,
            "cache": status,
            "threads": threads,
        });
    }
    report
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common, bound) = cli.command.split();
    let report = execute(command, &common, bound);
    let json = report.to_json();
    match &common.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &json) {
                eprintln!("resint: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            print!("{}", report.summary);
        }
        None => {
            print!("{json}");
            eprint!("{}", report.summary);
        }
    }
    ExitCode::from(report.exit_code as u8)
}
