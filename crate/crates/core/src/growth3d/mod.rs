//! Growth functions of 3-dimensional reflection polyhedra: Parry's and
//! Steinberg's formulas, the structure of `F` at an ideal vertex, ridge
//! difference formulas and deformation sweeps.

mod parry;
mod report;
mod structure;
mod sweep;
mod tables;

#[cfg(test)]
mod tests;

pub use parry::{parry_growth, parry_sum, triangle_exponents, vertex_labels, vertex_term};
pub use report::{classify_growth_rate, growth_with_method, polyhedral_growth, virgin_form, GrowthMethod, GrowthReport};
pub use structure::{
    derivative_at_one, derivative_identity_check, floyd_relation_check, ideal_limit_difference, ideal_structure_check,
    vertex_derivative_at_one, DerivativeVerdict, FloydVerdict, IdealStructure, StructureError,
};
pub use sweep::{assemble_sweep, deformation_sweep, sweep_limit, sweep_row, SweepRow, SweepTable};
pub use tables::{ridge_local_sum, ridge_pair_difference};

use alloc::string::String;

use crate::polyhedron::PolyhedronError;
use crate::roots::RootError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrowthError {
    #[error(transparent)]
    Polyhedron(#[from] PolyhedronError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("Parry's formula needs a compact polyhedron")]
    NotCompact,
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("Parry and Steinberg growth functions differ")]
    MethodMismatch,
    #[error("virgin numerator is not a polynomial")]
    VirginFormNotPolynomial,
    #[error("bad parameter: {0}")]
    Parameter(String),
}
