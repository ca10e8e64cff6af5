//! Grid case files, scenario configurations, and network matrices.

mod admittance;
mod case;
mod parse;
mod scenario;

pub use admittance::{build_admittance, AdmittanceSet};
pub use case::{Branch, Bus, BusType, Generator, GridCase, QuadCost};
pub use parse::{parse_case, write_case};
pub use scenario::{parse_scenario, Scenario, ScenarioKind};

use std::fmt;

/// Errors from case/scenario parsing and network-matrix assembly.
#[derive(Debug)]
pub enum GridError {
    /// Malformed text; carries the 1-based line number where parsing failed.
    Parse { line: usize, msg: String },
    /// Structurally well-formed input that violates a case invariant.
    Validation(String),
    /// Branch with zero series impedance cannot be stamped.
    SingularBranch { from: usize, to: usize },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            GridError::Validation(msg) => write!(f, "validation error: {msg}"),
            GridError::SingularBranch { from, to } => {
                write!(f, "branch {from}-{to} has r = x = 0")
            }
        }
    }
}

impl std::error::Error for GridError {}
