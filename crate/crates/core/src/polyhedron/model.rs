use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::PolyhedronError;
use crate::coxeter::{CoxeterMatrix, Label};

pub type VertexId = u32;

/// Unordered vertex pair, stored as `(min, max)`.
pub type Edge = (VertexId, VertexId);

pub fn edge_key(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Angle-labelled combinatorial 3-polyhedron: faces as oriented vertex
/// cycles, and a label `m` (dihedral angle `pi/m`) per edge.
///
/// Construction performs no checks; see [`super::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CombPolyhedron {
    faces: BTreeMap<String, Vec<VertexId>>,
    angles: BTreeMap<Edge, u32>,
}

impl CombPolyhedron {
    pub fn new<F, A>(faces: F, angles: A) -> Self
    where
        F: IntoIterator<Item = (String, Vec<VertexId>)>,
        A: IntoIterator<Item = (Edge, u32)>,
    {
        CombPolyhedron {
            faces: faces.into_iter().collect(),
            angles: angles.into_iter().map(|((u, v), m)| (edge_key(u, v), m)).collect(),
        }
    }

    /// Faces given, every edge labelled `m`.
    pub fn with_uniform_label<F>(faces: F, m: u32) -> Self
    where
        F: IntoIterator<Item = (String, Vec<VertexId>)>,
    {
        let mut p = CombPolyhedron::new(faces, []);
        p.angles = p.edges().into_iter().map(|e| (e, m)).collect();
        p
    }

    pub fn faces(&self) -> &BTreeMap<String, Vec<VertexId>> {
        &self.faces
    }

    pub fn face(&self, id: &str) -> Option<&[VertexId]> {
        self.faces.get(id).map(Vec::as_slice)
    }

    pub fn angles(&self) -> &BTreeMap<Edge, u32> {
        &self.angles
    }

    pub fn label(&self, u: VertexId, v: VertexId) -> Option<u32> {
        self.angles.get(&edge_key(u, v)).copied()
    }

    /// Relabels an existing edge.
    pub fn set_label(&mut self, u: VertexId, v: VertexId, m: u32) -> Result<(), PolyhedronError> {
        let e = edge_key(u, v);
        if !self.edges().contains(&e) {
            return Err(PolyhedronError::UnknownEdge(e.0, e.1));
        }
        if m < 2 {
            return Err(PolyhedronError::Parameter(alloc::format!("label {m} on {}-{} is below 2", e.0, e.1)));
        }
        self.angles.insert(e, m);
        Ok(())
    }

    pub fn with_label(&self, u: VertexId, v: VertexId, m: u32) -> Result<Self, PolyhedronError> {
        let mut p = self.clone();
        p.set_label(u, v, m)?;
        Ok(p)
    }

    pub(crate) fn faces_mut(&mut self) -> &mut BTreeMap<String, Vec<VertexId>> {
        &mut self.faces
    }

    pub(crate) fn angles_mut(&mut self) -> &mut BTreeMap<Edge, u32> {
        &mut self.angles
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.faces.values().flatten().copied().collect()
    }

    /// Edges read off the face cycles.
    pub fn edges(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for cyc in self.faces.values() {
            for k in 0..cyc.len() {
                out.insert(edge_key(cyc[k], cyc[(k + 1) % cyc.len()]));
            }
        }
        out
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn incidence(&self) -> Incidence {
        Incidence::new(self)
    }

    /// Rank-|F| Coxeter matrix of the reflection group: adjacent faces carry
    /// the label of their common edge, all other pairs are infinite. Index
    /// `k` is the `k`-th face id in sorted order.
    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        let inc = self.incidence();
        let n = inc.face_ids.len();
        let mut m = CoxeterMatrix::new(n);
        for i in 0..n {
            for j in i + 1..n {
                let l = match inc.common_edge(i, j) {
                    Some((u, v)) => Label::Finite(self.label(u, v).unwrap_or(2)),
                    None => Label::Infinite,
                };
                m.set(i, j, l).expect("indices in range, labels >= 2");
            }
        }
        m
    }

    /// Whether `other` is this polyhedron up to renaming vertices, with the
    /// same face ids, cycles and labels.
    pub fn same_combinatorics(&self, other: &CombPolyhedron) -> bool {
        match (self.signature(), other.signature()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Vertices named by their sets of incident faces.
    fn signature(&self) -> Option<Signature> {
        let inc = self.incidence();
        let name = |v: VertexId| -> Option<Vec<usize>> { inc.vertex_faces.get(&v).cloned() };
        let mut faces = BTreeMap::new();
        for (id, cyc) in &self.faces {
            let mut seq = Vec::with_capacity(cyc.len());
            for &v in cyc {
                seq.push(name(v)?);
            }
            let start = (0..seq.len()).min_by(|&a, &b| seq[a].cmp(&seq[b]))?;
            seq.rotate_left(start);
            faces.insert(id.clone(), seq);
        }
        let mut labels = BTreeMap::new();
        for (&(u, v), &m) in &self.angles {
            let (a, b) = (name(u)?, name(v)?);
            labels.insert(if a <= b { (a, b) } else { (b, a) }, m);
        }
        Some(Signature { faces, labels })
    }

    /// Smallest positive id not in use.
    pub fn fresh_vertex_id(&self) -> VertexId {
        let used = self.vertices();
        (1..).find(|k| !used.contains(k)).expect("ids are unbounded")
    }
}

#[derive(PartialEq, Eq)]
struct Signature {
    faces: BTreeMap<String, Vec<Vec<usize>>>,
    labels: BTreeMap<(Vec<usize>, Vec<usize>), u32>,
}

/// Derived incidence data, with faces indexed in sorted-id order.
#[derive(Clone, Debug)]
pub struct Incidence {
    pub face_ids: Vec<String>,
    pub cycles: Vec<Vec<VertexId>>,
    /// Directed edge `(u, v)` to the faces traversing it in that direction.
    pub directed: BTreeMap<(VertexId, VertexId), Vec<usize>>,
    /// Faces through each vertex, increasing.
    pub vertex_faces: BTreeMap<VertexId, Vec<usize>>,
    /// Neighbours of each vertex.
    pub neighbours: BTreeMap<VertexId, BTreeSet<VertexId>>,
    /// Faces containing each undirected edge.
    pub edge_faces: BTreeMap<Edge, Vec<usize>>,
    adjacency: Vec<Vec<Option<Edge>>>,
}

impl Incidence {
    fn new(p: &CombPolyhedron) -> Incidence {
        let face_ids: Vec<String> = p.faces.keys().cloned().collect();
        let cycles: Vec<Vec<VertexId>> = p.faces.values().cloned().collect();
        let n = cycles.len();
        let mut directed: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        let mut vertex_faces: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        let mut neighbours: BTreeMap<_, BTreeSet<_>> = BTreeMap::new();
        let mut edge_faces: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (f, cyc) in cycles.iter().enumerate() {
            for k in 0..cyc.len() {
                let (u, v) = (cyc[k], cyc[(k + 1) % cyc.len()]);
                directed.entry((u, v)).or_default().push(f);
                edge_faces.entry(edge_key(u, v)).or_default().push(f);
                let vf = vertex_faces.entry(u).or_default();
                if !vf.contains(&f) {
                    vf.push(f);
                }
                neighbours.entry(u).or_default().insert(v);
                neighbours.entry(v).or_default().insert(u);
            }
        }
        let mut adjacency = vec![vec![None; n]; n];
        for (&e, fs) in &edge_faces {
            if let [a, b] = fs[..] {
                if a != b {
                    adjacency[a][b] = Some(e);
                    adjacency[b][a] = Some(e);
                }
            }
        }
        Incidence { face_ids, cycles, directed, vertex_faces, neighbours, edge_faces, adjacency }
    }

    pub fn num_faces(&self) -> usize {
        self.face_ids.len()
    }

    pub fn face_index(&self, id: &str) -> Option<usize> {
        self.face_ids.binary_search_by(|f| f.as_str().cmp(id)).ok()
    }

    pub fn common_edge(&self, a: usize, b: usize) -> Option<Edge> {
        self.adjacency[a][b]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b].is_some()
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.neighbours.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn face_contains(&self, f: usize, v: VertexId) -> bool {
        self.cycles[f].contains(&v)
    }

    /// Faces with a vertex in common to all of them.
    pub fn share_vertex(&self, fs: &[usize]) -> bool {
        self.cycles[fs[0]].iter().any(|&v| fs[1..].iter().all(|&f| self.face_contains(f, v)))
    }

    /// Faces around `v` in rotation order, starting at the smallest index.
    /// `None` when the faces at `v` do not form a single cycle.
    pub fn faces_around(&self, v: VertexId) -> Option<Vec<usize>> {
        let fs = self.vertex_faces.get(&v)?;
        let start = *fs.first()?;
        let mut out = vec![start];
        let mut f = start;
        loop {
            // in face f the vertex after v is w; the face across v->w has w->v
            let cyc = &self.cycles[f];
            let k = cyc.iter().position(|&x| x == v)?;
            let w = cyc[(k + 1) % cyc.len()];
            let next = *self.directed.get(&(w, v))?.first()?;
            if next == start {
                break;
            }
            if out.contains(&next) {
                return None;
            }
            out.push(next);
            f = next;
        }
        (out.len() == fs.len()).then_some(out)
    }
}
