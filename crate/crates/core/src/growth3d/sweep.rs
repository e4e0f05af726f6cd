use alloc::vec::Vec;
use core::cmp::Ordering;

use super::report::polyhedral_growth;
use super::GrowthError;
use crate::polyhedron::{contract_ridge, edge_key, CombPolyhedron, Edge};
use crate::roots::{AlgebraicClass, ClassKind, IsolatingInterval};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    /// Edge label, `None` for the contracted limit.
    pub n: Option<u32>,
    pub tau: IsolatingInterval,
    pub class: AlgebraicClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepTable {
    pub edge: Edge,
    pub rows: Vec<SweepRow>,
    pub limit: SweepRow,
    /// Intervals pairwise disjoint and increasing, all below the limit.
    pub monotone: bool,
    /// Every compact member is Salem (quadratic units included).
    pub members_salem: bool,
    pub limit_pisot: bool,
}

impl SweepTable {
    pub fn holds(&self) -> bool {
        self.monotone && self.members_salem && self.limit_pisot
    }
}

/// Growth rate of `p` with `e` relabelled `n`.
pub fn sweep_row(p: &CombPolyhedron, e: Edge, n: u32, digits: u32) -> Result<SweepRow, GrowthError> {
    let q = p.with_label(e.0, e.1, n)?;
    let r = polyhedral_growth(&q, digits)?;
    Ok(SweepRow { n: Some(n), tau: r.tau, class: r.tau_class })
}

/// Growth rate of `p` with `e` contracted to an ideal vertex.
pub fn sweep_limit(p: &CombPolyhedron, e: Edge, digits: u32) -> Result<SweepRow, GrowthError> {
    let q = contract_ridge(p, e)?;
    let r = polyhedral_growth(&q, digits)?;
    Ok(SweepRow { n: None, tau: r.tau, class: r.tau_class })
}

/// Certifies the order of the rows, refining intervals as needed.
pub fn assemble_sweep(e: Edge, mut rows: Vec<SweepRow>, mut limit: SweepRow) -> Result<SweepTable, GrowthError> {
    let mut monotone = true;
    for k in 1..rows.len() {
        let (a, b) = rows.split_at_mut(k);
        if IsolatingInterval::separate(&mut a[k - 1].tau, &mut b[0].tau)? != Ordering::Less {
            monotone = false;
        }
    }
    for r in rows.iter_mut() {
        if IsolatingInterval::separate(&mut r.tau, &mut limit.tau)? != Ordering::Less {
            monotone = false;
        }
    }
    let members_salem = rows.iter().all(|r| r.class.is_salem_or_vacuous());
    let limit_pisot = limit.class.kind == ClassKind::Pisot;
    Ok(SweepTable { edge: edge_key(e.0, e.1), rows, limit, monotone, members_salem, limit_pisot })
}

/// Growth rates along `n_from..=n_to` for the label of ridge `e`, with the
/// contracted limit.
pub fn deformation_sweep(
    p: &CombPolyhedron,
    e: Edge,
    n_from: u32,
    n_to: u32,
    digits: u32,
) -> Result<SweepTable, GrowthError> {
    if n_from < 2 || n_to < n_from {
        return Err(GrowthError::Parameter(alloc::format!("bad label range {n_from}..={n_to}")));
    }
    let rows = (n_from..=n_to).map(|n| sweep_row(p, e, n, digits)).collect::<Result<Vec<_>, _>>()?;
    let limit = sweep_limit(p, e, digits)?;
    assemble_sweep(e, rows, limit)
}
