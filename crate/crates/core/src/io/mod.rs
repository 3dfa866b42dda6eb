//! Text and JSON input/output.

mod expr;
mod problem;
mod run;

pub use expr::parse_polynomial;
pub use problem::{
    parse_problem, print_problem, GeneralSpec, LimitSpec, OptionSpec, ProblemFile, ResidualSpec, RingSpec,
    PROBLEM_SCHEMA,
};
pub use run::{run, Command, Report, RunOptions, REPORT_SCHEMA, SUPPORTED_CHARACTERISTICS};
