use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::andreev::andreev_check;
use super::model::{edge_key, CombPolyhedron, Edge, VertexId};
use super::ridge::ridge_of;
use super::validate::{validate, vertex_kind, VertexKind};
use super::PolyhedronError;

/// Which pair of opposite faces at a 4-valent vertex will share the
/// inserted edge, with faces `f0..f3` listed in rotation order from the
/// smallest face id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InsertMode {
    /// `f0` and `f2` share the new edge.
    One,
    /// `f1` and `f3` share the new edge.
    Two,
}

impl InsertMode {
    pub fn from_index(k: u8) -> Option<InsertMode> {
        match k {
            1 => Some(InsertMode::One),
            2 => Some(InsertMode::Two),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            InsertMode::One => 1,
            InsertMode::Two => 2,
        }
    }
}

fn recheck(q: CombPolyhedron, what: &str) -> Result<CombPolyhedron, PolyhedronError> {
    let report = validate(&q);
    if !report.is_valid() {
        let first = report.issues.first().map(|i| format!("{i}")).unwrap_or_default();
        return Err(PolyhedronError::InternalInconsistency(format!("{what} produced an invalid polyhedron: {first}")));
    }
    Ok(q)
}

/// Collapses a `<2,2,n,2,2>` ridge to a 4-valent ideal vertex, which keeps
/// the smaller endpoint id.
pub fn contract_ridge(p: &CombPolyhedron, e: Edge) -> Result<CombPolyhedron, PolyhedronError> {
    let report = validate(p);
    if !report.is_valid() {
        return Err(PolyhedronError::Invalid(report.issues));
    }
    let (u, v) = edge_key(e.0, e.1);
    let not = |reason: &str| PolyhedronError::NotContractible { edge: (u, v), reason: reason.into() };
    if !report.deformable {
        return Err(not("fewer than five faces"));
    }
    let inc = p.incidence();
    let ridge = ridge_of(p, &inc, (u, v)).map_err(not)?;
    if !ridge.ty.is_right_angled_ridge() {
        return Err(not(&format!("ridge type {} is not <2,2,n,2,2>", ridge.ty)));
    }
    let (keep, gone) = (u, v);
    let mut q = p.clone();
    for cyc in q.faces_mut().values_mut() {
        if cyc.contains(&keep) && cyc.contains(&gone) {
            cyc.retain(|&x| x != gone);
        } else {
            for x in cyc.iter_mut() {
                if *x == gone {
                    *x = keep;
                }
            }
        }
    }
    let angles = q.angles_mut();
    angles.remove(&(keep, gone));
    let moved: Vec<(Edge, u32)> = angles.iter().filter(|(e, _)| e.0 == gone || e.1 == gone).map(|(&e, &m)| (e, m)).collect();
    for (e, m) in moved {
        angles.remove(&e);
        let other = if e.0 == gone { e.1 } else { e.0 };
        angles.insert(edge_key(keep, other), m);
    }
    let q = recheck(q, "contraction")?;
    let check = andreev_check(&q)?;
    if !check.passed() {
        return Err(PolyhedronError::InternalInconsistency(format!(
            "contraction violates {}",
            check.failed().iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(q)
}

/// Contracts several ridges one after another, re-validating each step.
pub fn contract_ridges(p: &CombPolyhedron, edges: &[Edge]) -> Result<CombPolyhedron, PolyhedronError> {
    let mut q = p.clone();
    let mut renamed: Vec<(VertexId, VertexId)> = Vec::new();
    for &(a, b) in edges {
        let resolve = |mut x: VertexId| {
            while let Some(&(_, to)) = renamed.iter().find(|(from, _)| *from == x) {
                x = to;
            }
            x
        };
        let (a, b) = edge_key(resolve(a), resolve(b));
        q = contract_ridge(&q, (a, b))?;
        renamed.push((b, a));
    }
    Ok(q)
}

/// Replaces an ideal 4-valent vertex by an edge labelled `n`, and requires
/// the result to satisfy the existence conditions.
pub fn insert_edge(p: &CombPolyhedron, v: VertexId, mode: InsertMode, n: u32) -> Result<CombPolyhedron, PolyhedronError> {
    let q = insert_edge_unchecked(p, v, mode, n)?;
    let check = andreev_check(&q)?;
    if !check.passed() {
        return Err(PolyhedronError::AndreevFailure(Box::new(check)));
    }
    Ok(q)
}

/// Smallest label in `labels` for which [`insert_edge`] succeeds, with the
/// resulting polyhedron. Reports the failure at the last label otherwise.
pub fn insert_edge_min_label(
    p: &CombPolyhedron,
    v: VertexId,
    mode: InsertMode,
    labels: RangeInclusive<u32>,
) -> Result<(u32, CombPolyhedron), PolyhedronError> {
    let mut last = PolyhedronError::Parameter(format!("empty label range {labels:?}"));
    for n in labels {
        match insert_edge(p, v, mode, n) {
            Ok(q) => return Ok((n, q)),
            Err(e @ PolyhedronError::AndreevFailure(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn insert_edge_unchecked(p: &CombPolyhedron, v: VertexId, mode: InsertMode, n: u32) -> Result<CombPolyhedron, PolyhedronError> {
    if n < 2 {
        return Err(PolyhedronError::Parameter(format!("label {n} is below 2")));
    }
    let report = validate(p);
    if !report.is_valid() {
        return Err(PolyhedronError::Invalid(report.issues));
    }
    let inc = p.incidence();
    if !inc.vertex_faces.contains_key(&v) {
        return Err(PolyhedronError::UnknownVertex(v));
    }
    if vertex_kind(p, &inc, v) != Some(VertexKind::Ideal4) {
        return Err(PolyhedronError::NotIdealFourValent(v));
    }
    let f = inc.faces_around(v).expect("validated");
    let (shared, side_a, side_b) = match mode {
        InsertMode::One => ([f[0], f[2]], f[1], f[3]),
        InsertMode::Two => ([f[1], f[3]], f[0], f[2]),
    };
    let a = v;
    let b = p.fresh_vertex_id();
    let endpoint = |w: VertexId| {
        if inc.face_contains(side_a, w) {
            a
        } else {
            b
        }
    };
    let mut q = p.clone();
    let ids = &inc.face_ids;
    for (idx, cyc) in q.faces_mut().values_mut().enumerate() {
        let Some(k) = cyc.iter().position(|&x| x == v) else { continue };
        if idx == side_a {
            cyc[k] = a;
        } else if idx == side_b {
            cyc[k] = b;
        } else if shared.contains(&idx) {
            let len = cyc.len();
            let (prev, next) = (cyc[(k + len - 1) % len], cyc[(k + 1) % len]);
            cyc[k] = endpoint(prev);
            cyc.insert(k + 1, endpoint(next));
        } else {
            return Err(PolyhedronError::InternalInconsistency(format!("face {} contains {v} but is not around it", ids[idx])));
        }
    }
    let angles = q.angles_mut();
    for &w in &inc.neighbours[&v] {
        let m = angles.remove(&edge_key(v, w)).unwrap_or(2);
        angles.insert(edge_key(endpoint(w), w), m);
    }
    angles.insert(edge_key(a, b), n);
    recheck(q, "edge insertion")
}
