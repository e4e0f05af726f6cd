use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::model::{edge_key, CombPolyhedron, Edge, Incidence, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    /// Three faces with `1/k + 1/l + 1/m > 1`.
    Compact,
    /// Three faces with `1/k + 1/l + 1/m = 1`.
    Ideal3,
    /// Four faces, all angles right.
    Ideal4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationIssue {
    TooFewFaces(usize),
    DegenerateFace { face: String, len: usize },
    RepeatedVertex { face: String, vertex: VertexId },
    /// Two faces traverse an edge in the same direction.
    Orientation { edge: (VertexId, VertexId), faces: Vec<String> },
    EdgeFaceCount { edge: Edge, count: usize },
    FacesShareSeveralEdges { faces: (String, String) },
    MissingLabel(Edge),
    LabelOnNonEdge(Edge),
    LabelTooSmall { edge: Edge, label: u32 },
    Euler { vertices: usize, edges: usize, faces: usize },
    Valence { vertex: VertexId, valence: usize },
    BrokenLink(VertexId),
    IdealVertexNotRight(VertexId),
    AngleSumTooSmall(VertexId),
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ValidationIssue::*;
        match self {
            TooFewFaces(n) => write!(f, "only {n} faces"),
            DegenerateFace { face, len } => write!(f, "face {face} has {len} vertices"),
            RepeatedVertex { face, vertex } => write!(f, "face {face} visits vertex {vertex} twice"),
            Orientation { edge, faces } => {
                write!(f, "rotation-system error: edge {}->{} traversed the same way by {}", edge.0, edge.1, faces.join(", "))
            }
            EdgeFaceCount { edge, count } => write!(f, "edge {}-{} lies on {count} faces", edge.0, edge.1),
            FacesShareSeveralEdges { faces } => write!(f, "faces {} and {} share more than one edge", faces.0, faces.1),
            MissingLabel(e) => write!(f, "edge {}-{} has no label", e.0, e.1),
            LabelOnNonEdge(e) => write!(f, "label given for {}-{}, which is not an edge", e.0, e.1),
            LabelTooSmall { edge, label } => write!(f, "edge {}-{} has label {label} < 2", edge.0, edge.1),
            Euler { vertices, edges, faces } => write!(f, "Euler relation fails: {vertices} - {edges} + {faces} != 2"),
            Valence { vertex, valence } => write!(f, "vertex {vertex} has valence {valence}"),
            BrokenLink(v) => write!(f, "faces around vertex {v} do not form a single cycle"),
            IdealVertexNotRight(v) => write!(f, "4-valent vertex {v} has a non-right angle"),
            AngleSumTooSmall(v) => write!(f, "vertex {v} has angle sum below pi"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub compact_vertices: usize,
    pub ideal3_vertices: usize,
    pub ideal4_vertices: usize,
    /// Four faces: the theorem on existence does not apply.
    pub simplex: bool,
    /// At least five faces, as deformations require.
    pub deformable: bool,
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn is_compact(&self) -> bool {
        self.is_valid() && self.ideal3_vertices == 0 && self.ideal4_vertices == 0
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}, edges {}, faces {}", self.vertices, self.edges, self.faces)?;
        writeln!(
            f,
            "compact vertices {}, ideal 3-valent {}, ideal 4-valent {}",
            self.compact_vertices, self.ideal3_vertices, self.ideal4_vertices
        )?;
        if self.simplex {
            writeln!(f, "simplex: Andreev theorem inapplicable")?;
        }
        if self.is_valid() {
            writeln!(f, "valid")
        } else {
            for i in &self.issues {
                writeln!(f, "error: {i}")?;
            }
            Ok(())
        }
    }
}

/// `sum 1/m` over the edges at `v`, in units of pi.
pub(crate) fn angle_sum(p: &CombPolyhedron, inc: &Incidence, v: VertexId) -> BigRational {
    inc.neighbours
        .get(&v)
        .into_iter()
        .flatten()
        .map(|&w| recip(p.label(v, w).unwrap_or(2)))
        .sum()
}

pub(crate) fn recip(m: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(m))
}

/// Vertex type read off valence and labels; `None` for invalid vertices.
pub fn vertex_kind(p: &CombPolyhedron, inc: &Incidence, v: VertexId) -> Option<VertexKind> {
    let labels: Vec<u32> = inc.neighbours.get(&v)?.iter().map(|&w| p.label(v, w).unwrap_or(2)).collect();
    match labels.len() {
        3 => match angle_sum(p, inc, v).cmp(&BigRational::one()) {
            Ordering::Greater => Some(VertexKind::Compact),
            Ordering::Equal => Some(VertexKind::Ideal3),
            Ordering::Less => None,
        },
        4 if labels.iter().all(|&m| m == 2) => Some(VertexKind::Ideal4),
        _ => None,
    }
}

pub fn validate(p: &CombPolyhedron) -> ValidationReport {
    let inc = p.incidence();
    let mut issues = Vec::new();
    let edges = p.edges();
    let nv = inc.vertex_faces.len();
    let (ne, nf) = (edges.len(), p.num_faces());
    if nf < 4 {
        issues.push(ValidationIssue::TooFewFaces(nf));
    }
    for (id, cyc) in p.faces() {
        if cyc.len() < 3 {
            issues.push(ValidationIssue::DegenerateFace { face: id.clone(), len: cyc.len() });
        }
        let mut seen = BTreeSet::new();
        for &v in cyc {
            if !seen.insert(v) {
                issues.push(ValidationIssue::RepeatedVertex { face: id.clone(), vertex: v });
            }
        }
    }
    for (&(u, v), fs) in &inc.directed {
        if fs.len() > 1 {
            let faces = fs.iter().map(|&f| inc.face_ids[f].clone()).collect();
            issues.push(ValidationIssue::Orientation { edge: (u, v), faces });
        }
    }
    for (&e, fs) in &inc.edge_faces {
        if fs.len() != 2 {
            issues.push(ValidationIssue::EdgeFaceCount { edge: e, count: fs.len() });
        }
    }
    for a in 0..nf {
        for b in a + 1..nf {
            let shared = inc.edge_faces.values().filter(|fs| fs.contains(&a) && fs.contains(&b)).count();
            if shared > 1 {
                issues.push(ValidationIssue::FacesShareSeveralEdges {
                    faces: (inc.face_ids[a].clone(), inc.face_ids[b].clone()),
                });
            }
        }
    }
    for &e in &edges {
        match p.angles().get(&e) {
            None => issues.push(ValidationIssue::MissingLabel(e)),
            Some(&m) if m < 2 => issues.push(ValidationIssue::LabelTooSmall { edge: e, label: m }),
            _ => {}
        }
    }
    for &e in p.angles().keys() {
        if !edges.contains(&edge_key(e.0, e.1)) {
            issues.push(ValidationIssue::LabelOnNonEdge(e));
        }
    }
    if nv + nf != ne + 2 {
        issues.push(ValidationIssue::Euler { vertices: nv, edges: ne, faces: nf });
    }
    let (mut compact, mut ideal3, mut ideal4) = (0, 0, 0);
    for &v in inc.vertex_faces.keys() {
        let valence = inc.valence(v);
        if valence != 3 && valence != 4 {
            issues.push(ValidationIssue::Valence { vertex: v, valence });
            continue;
        }
        if inc.faces_around(v).is_none() || inc.vertex_faces[&v].len() != valence {
            issues.push(ValidationIssue::BrokenLink(v));
            continue;
        }
        match vertex_kind(p, &inc, v) {
            Some(VertexKind::Compact) => compact += 1,
            Some(VertexKind::Ideal3) => ideal3 += 1,
            Some(VertexKind::Ideal4) => ideal4 += 1,
            None if valence == 4 => issues.push(ValidationIssue::IdealVertexNotRight(v)),
            None => issues.push(ValidationIssue::AngleSumTooSmall(v)),
        }
    }
    ValidationReport {
        vertices: nv,
        edges: ne,
        faces: nf,
        compact_vertices: compact,
        ideal3_vertices: ideal3,
        ideal4_vertices: ideal4,
        simplex: nf == 4,
        deformable: nf >= 5,
        issues,
    }
}
