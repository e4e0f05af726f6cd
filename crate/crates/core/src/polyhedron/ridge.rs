use alloc::vec::Vec;
use core::fmt;

use super::model::{edge_key, CombPolyhedron, Edge, Incidence, VertexId};
use super::validate::{validate, vertex_kind, VertexKind};
use super::PolyhedronError;

/// Ridge type `<k1, k2, n, l1, l2>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RidgeType(pub [u32; 5]);

impl RidgeType {
    pub fn new(k1: u32, k2: u32, n: u32, l1: u32, l2: u32) -> Self {
        RidgeType([k1, k2, n, l1, l2])
    }

    pub fn n(&self) -> u32 {
        self.0[2]
    }

    pub fn k(&self) -> (u32, u32) {
        (self.0[0], self.0[1])
    }

    pub fn l(&self) -> (u32, u32) {
        (self.0[3], self.0[4])
    }

    /// The eight variants obtained by swapping `k1, k2`, `l1, l2` and the
    /// two endpoint pairs.
    pub fn symmetries(&self) -> [RidgeType; 8] {
        let [k1, k2, n, l1, l2] = self.0;
        let mut out = [*self; 8];
        let mut i = 0;
        for (a, b) in [((k1, k2), (l1, l2)), ((l1, l2), (k1, k2))] {
            for (x1, x2) in [a, (a.1, a.0)] {
                for (y1, y2) in [b, (b.1, b.0)] {
                    out[i] = RidgeType([x1, x2, n, y1, y2]);
                    i += 1;
                }
            }
        }
        out
    }

    /// Lexicographically least symmetric variant.
    pub fn canonical(&self) -> RidgeType {
        *self.symmetries().iter().min().expect("nonempty")
    }

    /// `<2, 2, n, 2, 2>` for some `n`.
    pub fn is_right_angled_ridge(&self) -> bool {
        let [k1, k2, _, l1, l2] = self.0;
        [k1, k2, l1, l2].iter().all(|&x| x == 2)
    }

    pub fn with_n(&self, n: u32) -> RidgeType {
        let mut t = *self;
        t.0[2] = n;
        t
    }
}

impl fmt::Display for RidgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "<{a},{b},{c},{d},{e}>")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RidgeDescriptor {
    pub edge: Edge,
    pub ty: RidgeType,
}

impl fmt::Display for RidgeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{} {}", self.edge.0, self.edge.1, self.ty)
    }
}

fn other_labels(p: &CombPolyhedron, inc: &Incidence, at: VertexId, away: VertexId) -> (u32, u32) {
    let ls: Vec<u32> = inc.neighbours[&at]
        .iter()
        .filter(|&&w| w != away)
        .map(|&w| p.label(at, w).unwrap_or(2))
        .collect();
    (ls[0], ls[1])
}

/// Ridge descriptor of `e`, or the reason it is not a ridge.
pub(crate) fn ridge_of(p: &CombPolyhedron, inc: &Incidence, e: Edge) -> Result<RidgeDescriptor, &'static str> {
    let (u, v) = edge_key(e.0, e.1);
    let faces = inc.edge_faces.get(&(u, v)).ok_or("not an edge")?;
    for &x in &[u, v] {
        if vertex_kind(p, inc, x) != Some(VertexKind::Compact) {
            return Err("an endpoint is not a compact 3-valent vertex");
        }
    }
    if faces.iter().any(|&f| inc.cycles[f].len() < 4) {
        return Err("an incident face is a triangle");
    }
    let (k1, k2) = other_labels(p, inc, u, v);
    let (l1, l2) = other_labels(p, inc, v, u);
    let n = p.label(u, v).unwrap_or(2);
    Ok(RidgeDescriptor { edge: (u, v), ty: RidgeType([k1, k2, n, l1, l2]).canonical() })
}

/// All ridges, ordered by edge.
pub fn find_ridges(p: &CombPolyhedron) -> Result<Vec<RidgeDescriptor>, PolyhedronError> {
    let report = validate(p);
    if !report.is_valid() {
        return Err(PolyhedronError::Invalid(report.issues));
    }
    let inc = p.incidence();
    Ok(p.edges().into_iter().filter_map(|e| ridge_of(p, &inc, e).ok()).collect())
}
