use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::model::{edge_key, CombPolyhedron, Edge, VertexId};
use super::PolyhedronError;

/// The labelled edge of [`gen_dodecahedron`].
pub const DODECAHEDRON_MARKED_EDGE: Edge = (1, 2);

/// The vertex of [`gen_ideal3_dodecahedron`] whose three edges carry label 3.
pub const IDEAL3_VERTEX: VertexId = 1;

/// Essential edges of [`gen_lambert_cube`], labelled `p`, `q`, `r`.
pub const LAMBERT_EDGES: [Edge; 3] = [(1, 2), (6, 8), (3, 7)];

fn face(k: usize) -> String {
    format!("F{k}")
}

fn param(ok: bool, msg: &str) -> Result<(), PolyhedronError> {
    if ok {
        Ok(())
    } else {
        Err(PolyhedronError::Parameter(msg.into()))
    }
}

// L(n) vertex ids: top ring t_i, upper middle u_i, lower middle w_i, bottom s_i
fn t(i: usize, n: usize) -> VertexId {
    (2 * (i % n) + 1) as VertexId
}
fn u(i: usize, n: usize) -> VertexId {
    (2 * (i % n) + 2) as VertexId
}
fn w(i: usize, n: usize) -> VertexId {
    (2 * n + 2 * (i % n) + 1) as VertexId
}
fn s(i: usize, n: usize) -> VertexId {
    (2 * n + 2 * (i % n) + 2) as VertexId
}

fn loebell_faces(n: usize) -> Vec<(String, Vec<VertexId>)> {
    let mut faces = vec![(face(1), (0..n).map(|i| t(i, n)).collect())];
    for i in 0..n {
        faces.push((face(2 + i), vec![t(i + 1, n), t(i, n), u(i, n), w(i, n), u(i + 1, n)]));
    }
    for j in 0..n {
        faces.push((face(2 + n + j), vec![w(j + 1, n), u(j + 1, n), w(j, n), s(j, n), s(j + 1, n)]));
    }
    faces.push((face(2 * n + 2), (0..n).rev().map(|i| s(i, n)).collect()));
    faces
}

/// Right-angled Löbell polyhedron `L(n)`: two `n`-gons and `2n` pentagons.
pub fn gen_loebell(n: usize) -> Result<CombPolyhedron, PolyhedronError> {
    param(n >= 5, "L(n) needs n >= 5")?;
    Ok(CombPolyhedron::with_uniform_label(loebell_faces(n), 2))
}

/// The `2n` edges of `L(n)` joining a pentagon-pentagon pair across the
/// middle belt: `t_i u_i` and `w_i s_i`.
pub fn loebell_vertical_edges(n: usize) -> Vec<Edge> {
    let mut out: Vec<Edge> = (0..n).map(|i| edge_key(t(i, n), u(i, n))).collect();
    out.extend((0..n).map(|i| edge_key(w(i, n), s(i, n))));
    out
}

/// `L(n)` with every vertical edge contracted, built directly: `2n` ideal
/// 4-valent vertices, two `n`-gons and `2n` triangles. Vertex ids are those
/// the sequential contraction keeps.
pub fn gen_loebell_ideal(n: usize) -> Result<CombPolyhedron, PolyhedronError> {
    param(n >= 3, "ideal L(n) needs n >= 3")?;
    let mut faces = vec![(face(1), (0..n).map(|i| t(i, n)).collect::<Vec<_>>())];
    for i in 0..n {
        faces.push((face(2 + i), vec![t(i + 1, n), t(i, n), w(i, n)]));
    }
    for j in 0..n {
        faces.push((face(2 + n + j), vec![w(j + 1, n), t(j + 1, n), w(j, n)]));
    }
    faces.push((face(2 * n + 2), (0..n).rev().map(|i| w(i, n)).collect()));
    Ok(CombPolyhedron::with_uniform_label(faces, 2))
}

/// Dodecahedron with edge [`DODECAHEDRON_MARKED_EDGE`] labelled `m`, all
/// others 2.
pub fn gen_dodecahedron(m: u32) -> Result<CombPolyhedron, PolyhedronError> {
    param(m >= 2, "label m must be >= 2")?;
    let (a, b) = DODECAHEDRON_MARKED_EDGE;
    CombPolyhedron::with_uniform_label(loebell_faces(5), 2).with_label(a, b, m)
}

/// Dodecahedron whose three edges at [`IDEAL3_VERTEX`] are labelled 3.
pub fn gen_ideal3_dodecahedron() -> CombPolyhedron {
    let mut p = CombPolyhedron::with_uniform_label(loebell_faces(5), 2);
    let v = IDEAL3_VERTEX;
    let nbrs: Vec<VertexId> = p.edges().iter().filter_map(|&(a, b)| (a == v).then_some(b).or((b == v).then_some(a))).collect();
    for x in nbrs {
        p.set_label(v, x, 3).expect("edge exists");
    }
    p
}

fn cube_faces() -> Vec<(String, Vec<VertexId>)> {
    // vertex 1 + x + 2y + 4z
    [
        ("F1", [1, 3, 4, 2]),
        ("F2", [5, 6, 8, 7]),
        ("F3", [1, 2, 6, 5]),
        ("F4", [3, 7, 8, 4]),
        ("F5", [1, 5, 7, 3]),
        ("F6", [2, 4, 8, 6]),
    ]
    .into_iter()
    .map(|(id, c)| (id.into(), c.to_vec()))
    .collect()
}

/// Combinatorial cube with every label `m`.
pub fn gen_cube(m: u32) -> CombPolyhedron {
    CombPolyhedron::with_uniform_label(cube_faces(), m)
}

/// Lambert cube: the three essential edges [`LAMBERT_EDGES`] labelled
/// `p`, `q`, `r`, all others 2.
pub fn gen_lambert_cube(p: u32, q: u32, r: u32) -> Result<CombPolyhedron, PolyhedronError> {
    param(p >= 3 && q >= 3 && r >= 3, "Lambert cube labels must be >= 3")?;
    let mut c = gen_cube(2);
    for (&(a, b), m) in LAMBERT_EDGES.iter().zip([p, q, r]) {
        c.set_label(a, b, m)?;
    }
    Ok(c)
}

/// Prism over a `k`-gon, all labels `m`.
pub fn gen_prism(k: usize, m: u32) -> Result<CombPolyhedron, PolyhedronError> {
    param(k >= 3, "prism base needs at least 3 sides")?;
    let top = |i: usize| (i % k + 1) as VertexId;
    let bot = |i: usize| (k + i % k + 1) as VertexId;
    let mut faces = vec![(face(1), (0..k).map(top).collect::<Vec<_>>())];
    for i in 0..k {
        faces.push((face(2 + i), vec![top(i + 1), top(i), bot(i), bot(i + 1)]));
    }
    faces.push((face(k + 2), (0..k).rev().map(bot).collect()));
    Ok(CombPolyhedron::with_uniform_label(faces, m))
}

/// Tetrahedron, all labels `m`.
pub fn gen_tetrahedron(m: u32) -> CombPolyhedron {
    let faces = [("F1", [1, 2, 3]), ("F2", [1, 3, 4]), ("F3", [1, 4, 2]), ("F4", [2, 4, 3])];
    CombPolyhedron::with_uniform_label(faces.into_iter().map(|(id, c)| (id.into(), c.to_vec())), m)
}
