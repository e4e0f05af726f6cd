use std::fmt;

use hypgrowth_core::coxeter::CoxeterError;
use hypgrowth_core::growth3d::GrowthError;
use hypgrowth_core::polyhedron::PolyhedronError;
use hypgrowth_core::roots::RootError;
use hypgrowth_core::PolyError;

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments or unreadable input (exit 1).
    Usage(String),
    /// The input is well formed but fails a mathematical requirement (exit 2).
    Domain(String),
    /// Two computations that must agree did not (exit 3).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<PolyhedronError> for CliError {
    fn from(e: PolyhedronError) -> Self {
        match e {
            PolyhedronError::InternalInconsistency(_) => CliError::Internal(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        match e {
            RootError::RefinementLimit => CliError::Internal(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<GrowthError> for CliError {
    fn from(e: GrowthError) -> Self {
        match e {
            GrowthError::Polyhedron(p) => p.into(),
            GrowthError::Root(r) => r.into(),
            GrowthError::MethodMismatch | GrowthError::VirginFormNotPolynomial => CliError::Internal(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::OracleTooLarge { .. } | CoxeterError::NotFinite => CliError::Domain(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}
