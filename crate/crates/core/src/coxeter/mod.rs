//! Coxeter matrices, finite-type recognition, Solomon and Steinberg growth
//! series, and a word-growth oracle in the Tits representation.

mod finite;
mod matrix;
mod steinberg;
mod tits;

pub use finite::{diagram_components, finite_type, growth_poly_finite, FiniteComponent, FiniteKind, FiniteType};
pub use matrix::{CoxeterMatrix, Label};
pub use steinberg::{finite_subsets, signed_type_counts, steinberg_growth, steinberg_sum, FiniteSubset};
pub use tits::{tits_bfs_sphere_sizes, tits_bfs_sphere_sizes_with_limit, DEFAULT_ORACLE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("diagonal entry ({0}, {0}) is fixed to 1")]
    DiagonalLabel(usize),
    #[error("label m({i},{j}) = {m} is below 2")]
    InvalidLabel { i: usize, j: usize, m: u32 },
    #[error("Coxeter group is not finite")]
    NotFinite,
    #[error("oracle exceeded {limit} stored elements")]
    OracleTooLarge { limit: usize },
}
