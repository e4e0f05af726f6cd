//! Certified real-root isolation, unit-disc root counting and the
//! Salem / Pisot classification of integer polynomials.

mod classify;
mod disc;
mod isolate;
mod sturm;

pub use classify::{
    classify, floyd_family_check, strip_cyclotomic, trace_polynomial, AlgebraicClass, ClassKind,
    FloydInstance, FloydReport,
};
pub use disc::count_roots_in_unit_disc;
pub use isolate::{
    cauchy_bound, conjugate_pair_modulus_sq, decimal_ceil, decimal_floor, decimal_trunc,
    growth_rate, rational_roots, real_roots, smallest_root_in_unit_interval, ten_pow_neg, to_f64,
    IsolatingInterval,
};
pub use sturm::{sturm_count, Point, RemainderSequence, SturmSequence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("no real root in (0, 1)")]
    NoRootInUnitInterval,
    #[error("growth function has no pole in (0, 1)")]
    NoPoleInUnitInterval,
    #[error("growth function does not satisfy f(0) = 1")]
    NotNormalized,
    #[error("polynomial is not monic after sign normalization")]
    NotMonic,
    #[error("polynomial vanishes at 0")]
    ZeroRoot,
    #[error("polynomial has a root on the unit circle")]
    RootOnUnitCircle,
    #[error("interval refinement did not separate the roots")]
    RefinementLimit,
    #[error("Floyd hypothesis violated: {0}")]
    FloydHypothesis(&'static str),
}
