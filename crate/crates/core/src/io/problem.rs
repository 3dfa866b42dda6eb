//! Problem files (`resint-problem/1`).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::expr::parse_polynomial;
use crate::error::{Error, Result};
use crate::field::{is_prime, Field};
use crate::groebner::QuotientRing;
use crate::module::Matrix;
use crate::poly::{PolyRing, Polynomial};

pub const PROBLEM_SCHEMA: &str = "resint-problem/1";

/// Names accepted in `analyses`.
pub const ANALYSES: [&str; 12] = [
    "colon",
    "classify",
    "rmin",
    "kitt",
    "tau",
    "regularity",
    "certify",
    "ericci",
    "layout",
    "hilbert",
    "koszul",
    "invariants",
];

/// What `analyze` runs when `analyses` is empty.
pub const DEFAULT_ANALYSES: [&str; 7] = ["colon", "classify", "rmin", "tau", "kitt", "certify", "invariants"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema: String,
    pub ring: RingSpec,
    /// Generators of `I`.
    pub ideal: Vec<String>,
    pub residual: ResidualSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub analyses: Vec<String>,
    #[serde(default)]
    pub limits: LimitSpec,
    #[serde(default)]
    pub options: OptionSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(default)]
    pub characteristic: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quotient: Vec<String>,
}

/// How `𝔞` is given: explicit generators, general elements of `I`, or the
/// matrix `Φ` with `𝔞 = (f)·Φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualSpec {
    Generators(Vec<String>),
    General(GeneralSpec),
    Matrix(Vec<Vec<String>>),
}

/// Either `degrees`, or `count` elements of one `degree`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneralSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl GeneralSpec {
    pub fn resolved_degrees(&self) -> Result<Vec<i64>> {
        let degrees = match (&self.degrees, self.count, self.degree) {
            (Some(d), None, None) => d.clone(),
            (None, Some(n), Some(d)) => vec![d; n],
            _ => {
                return Err(Error::InvalidInput(
                    "general residual needs either `degrees` or both `count` and `degree`".into(),
                ))
            }
        };
        if degrees.is_empty() {
            return Err(Error::InvalidInput("general residual with no elements".into()));
        }
        if let Some(d) = degrees.iter().find(|&&d| d <= 0) {
            return Err(Error::InvalidInput(format!("degree {d} is not positive")));
        }
        Ok(degrees)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_pairs: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionSpec {
    /// Degree bound for Hilbert identity checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<i64>,
    /// Seeds tried for general elements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attempts: Option<usize>,
    /// Height from which r-minimality is tested (default `s - 1`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<usize>,
}

/// Parses a problem file. JSON errors carry the line and column of the
/// offending token; polynomial errors those of the character inside the
/// string literal.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let p: ProblemFile = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if p.schema != PROBLEM_SCHEMA {
        return Err(Error::InvalidInput(format!(
            "schema `{}`, expected `{PROBLEM_SCHEMA}`",
            p.schema
        )));
    }
    let c = p.ring.characteristic;
    if c != 0 && !is_prime(c) {
        return Err(Error::NonPrimeCharacteristic(c));
    }
    p.validate_with_text(text)?;
    Ok(p)
}

/// Serializes a problem as pretty JSON (trailing newline included).
pub fn print_problem(p: &ProblemFile) -> String {
    let mut s = serde_json::to_string_pretty(p).expect("problem serializes");
    s.push('\n');
    s
}

impl ProblemFile {
    /// All polynomial strings with their JSON context.
    fn expressions(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.ring.quotient.iter().map(String::as_str).collect();
        out.extend(self.ideal.iter().map(String::as_str));
        match &self.residual {
            ResidualSpec::Generators(g) => out.extend(g.iter().map(String::as_str)),
            ResidualSpec::Matrix(rows) => out.extend(rows.iter().flatten().map(String::as_str)),
            ResidualSpec::General(_) => {}
        }
        out
    }

    fn validate_with_text(&self, text: &str) -> Result<()> {
        let ring = self.poly_ring()?.into_arc();
        for e in self.expressions() {
            if let Err(err) = parse_polynomial::<crate::field::Rational>(&ring, e) {
                return Err(locate(text, e, err));
            }
        }
        if let Some(a) = self.analyses.iter().find(|a| !ANALYSES.contains(&a.as_str())) {
            return Err(Error::InvalidInput(format!("unknown analysis `{a}`")));
        }
        if self.ideal.is_empty() {
            return Err(Error::InvalidInput("the ideal needs at least one generator".into()));
        }
        match &self.residual {
            ResidualSpec::General(g) => {
                g.resolved_degrees()?;
            }
            ResidualSpec::Matrix(rows) => {
                if rows.len() != self.ideal.len() {
                    return Err(Error::InvalidInput(format!(
                        "matrix has {} rows for {} generators",
                        rows.len(),
                        self.ideal.len()
                    )));
                }
                let width = rows.first().map_or(0, Vec::len);
                if width == 0 || rows.iter().any(|r| r.len() != width) {
                    return Err(Error::InvalidInput("matrix rows must be nonempty and of equal length".into()));
                }
            }
            ResidualSpec::Generators(g) => {
                if g.is_empty() {
                    return Err(Error::InvalidInput("no residual generators".into()));
                }
            }
        }
        Ok(())
    }

    pub fn poly_ring(&self) -> Result<PolyRing> {
        match &self.ring.weights {
            Some(w) => PolyRing::with_weights(&self.ring.variables, w),
            None => PolyRing::new(&self.ring.variables),
        }
    }

    pub fn quotient_ring<F: Field>(&self) -> Result<Arc<QuotientRing<F>>> {
        let amb = self.poly_ring()?.into_arc();
        let rels = self.parse_list::<F>(&amb, &self.ring.quotient)?;
        QuotientRing::new(&amb, rels)
    }

    fn parse_list<F: Field>(&self, amb: &Arc<PolyRing>, list: &[String]) -> Result<Vec<Polynomial<F>>> {
        list.iter().map(|s| parse_polynomial(amb, s)).collect()
    }

    pub fn ideal_generators<F: Field>(&self, ring: &Arc<QuotientRing<F>>) -> Result<Vec<Polynomial<F>>> {
        self.parse_list(ring.ambient(), &self.ideal)
    }

    pub fn residual_generators<F: Field>(&self, ring: &Arc<QuotientRing<F>>) -> Result<Option<Vec<Polynomial<F>>>> {
        match &self.residual {
            ResidualSpec::Generators(g) => Ok(Some(self.parse_list(ring.ambient(), g)?)),
            _ => Ok(None),
        }
    }

    pub fn residual_matrix<F: Field>(&self, ring: &Arc<QuotientRing<F>>) -> Result<Option<Matrix<F>>> {
        match &self.residual {
            ResidualSpec::Matrix(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| self.parse_list(ring.ambient(), r))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Some(Matrix::from_rows(ring.ambient(), rows)?))
            }
            _ => Ok(None),
        }
    }

    /// The same problem with every polynomial printed in normal form over
    /// `F` and the characteristic set to that of `F`.
    pub fn canonical<F: Field>(&self) -> Result<ProblemFile> {
        let ring = self.quotient_ring::<F>()?;
        let amb = ring.ambient().clone();
        let norm = |list: &[String]| -> Result<Vec<String>> {
            Ok(self
                .parse_list::<F>(&amb, list)?
                .iter()
                .map(|p| p.to_string())
                .collect())
        };
        let mut out = self.clone();
        out.ring.characteristic = F::CHARACTERISTIC;
        out.ring.quotient = norm(&self.ring.quotient)?;
        out.ideal = norm(&self.ideal)?;
        out.residual = match &self.residual {
            ResidualSpec::Generators(g) => ResidualSpec::Generators(norm(g)?),
            ResidualSpec::Matrix(rows) => {
                ResidualSpec::Matrix(rows.iter().map(|r| norm(r)).collect::<Result<_>>()?)
            }
            ResidualSpec::General(g) => ResidualSpec::General(GeneralSpec {
                count: None,
                degree: None,
                degrees: Some(g.resolved_degrees()?),
                seed: g.seed,
            }),
        };
        Ok(out)
    }
}

/// Moves a polynomial syntax error to its position in the file.
fn locate(text: &str, expr: &str, err: Error) -> Error {
    let Error::Syntax { column, message, .. } = err else {
        return err;
    };
    let quoted = serde_json::to_string(expr).expect("string serializes");
    let Some(start) = text.find(&quoted) else {
        return Error::Syntax {
            line: 0,
            column,
            message: format!("in `{expr}`: {message}"),
        };
    };
    let before = &text[..start];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    let col = text[line_start..start].chars().count() + 1 + column;
    Error::Syntax {
        line,
        column: col,
        message: format!("in `{expr}`: {message}"),
    }
}
