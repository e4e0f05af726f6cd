//! Exact univariate polynomial and rational-function arithmetic over the
//! integers.

mod intpoly;
mod ratfunc;
mod text;

use alloc::string::String;

pub use intpoly::{cyclotomic, qint, t_pow_minus_one, totient, IntPoly};
pub(crate) use intpoly::cyclotomic_cached;
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("q-integer [0] is degenerate")]
    ZeroQInteger,
    #[error("rational function has a pole at the origin")]
    PoleAtOrigin,
    #[error("series coefficient {0} is not an integer")]
    NonIntegralSeries(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
