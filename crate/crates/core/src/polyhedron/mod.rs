//! Angle-labelled combinatorial polyhedra: validation, the Andreev
//! existence conditions, ridges, ridge contraction and edge insertion, and
//! generators for the standard families.

mod andreev;
mod deform;
mod generators;
mod model;
mod ridge;
mod validate;

#[cfg(test)]
mod tests;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

pub use andreev::{
    andreev_check, four_circuit_indices, four_circuits, three_circuit_indices, three_circuits, AndreevReport,
    Condition, ConditionReport, Witness,
};
pub use deform::{contract_ridge, contract_ridges, insert_edge, insert_edge_min_label, InsertMode};
pub use generators::{
    gen_cube, gen_dodecahedron, gen_ideal3_dodecahedron, gen_lambert_cube, gen_loebell, gen_loebell_ideal, gen_prism,
    gen_tetrahedron, loebell_vertical_edges, DODECAHEDRON_MARKED_EDGE, IDEAL3_VERTEX, LAMBERT_EDGES,
};
pub use model::{edge_key, CombPolyhedron, Edge, Incidence, VertexId};
pub use ridge::{find_ridges, RidgeDescriptor, RidgeType};
pub use validate::{validate, vertex_kind, ValidationIssue, ValidationReport, VertexKind};

fn join_issues(issues: &[ValidationIssue]) -> String {
    issues.iter().map(|i| alloc::format!("{i}")).collect::<Vec<_>>().join("; ")
}

fn join_failed(r: &AndreevReport) -> String {
    r.failed().iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyhedronError {
    #[error("invalid polyhedron: {}", join_issues(.0))]
    Invalid(Vec<ValidationIssue>),
    #[error("{0}-{1} is not an edge")]
    UnknownEdge(VertexId, VertexId),
    #[error("no vertex {0}")]
    UnknownVertex(VertexId),
    #[error("edge {}-{} cannot be contracted: {reason}", .edge.0, .edge.1)]
    NotContractible { edge: Edge, reason: String },
    #[error("vertex {0} is not an ideal 4-valent vertex")]
    NotIdealFourValent(VertexId),
    #[error("Andreev conditions fail: {}", join_failed(.0))]
    AndreevFailure(Box<AndreevReport>),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("bad parameter: {0}")]
    Parameter(String),
}
