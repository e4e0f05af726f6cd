//! Shared fixtures: a polyhedron corpus and brute-force circuit enumeration
//! that works from the face cycles alone.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hypgrowth_core::polyhedron::{
    contract_ridge, find_ridges, gen_cube, gen_dodecahedron, gen_ideal3_dodecahedron, gen_lambert_cube, gen_loebell,
    gen_loebell_ideal, gen_prism, gen_tetrahedron, loebell_vertical_edges, CombPolyhedron,
    DODECAHEDRON_MARKED_EDGE,
};
use hypgrowth_core::{IntPoly, RatFunc};

pub fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

pub fn prod(fs: &[&[i64]]) -> IntPoly {
    fs.iter().map(|c| p(c)).product()
}

pub fn rf(num: IntPoly, den: IntPoly) -> RatFunc {
    RatFunc::new(num, den).unwrap()
}

pub fn t_pow(k: usize) -> IntPoly {
    IntPoly::monomial(1.into(), k)
}

/// Named polyhedra of every generated family, including contractions.
pub fn corpus() -> Vec<(String, CombPolyhedron)> {
    let mut out: Vec<(String, CombPolyhedron)> = Vec::new();
    for m in 2..=6 {
        out.push((format!("dodecahedron m={m}"), gen_dodecahedron(m).unwrap()));
    }
    let d = gen_dodecahedron(2).unwrap();
    out.push(("contracted dodecahedron".into(), contract_ridge(&d, DODECAHEDRON_MARKED_EDGE).unwrap()));
    for n in 5..=8 {
        let l = gen_loebell(n).unwrap();
        let e = loebell_vertical_edges(n)[0];
        out.push((format!("L({n}) contracted once"), contract_ridge(&l, e).unwrap()));
        out.push((format!("L({n})"), l));
    }
    for n in 3..=7 {
        out.push((format!("ideal L({n})"), gen_loebell_ideal(n).unwrap()));
    }
    for (a, b, c) in [(3, 3, 3), (3, 4, 5), (5, 5, 5), (4, 3, 4)] {
        out.push((format!("Lambert cube {a},{b},{c}"), gen_lambert_cube(a, b, c).unwrap()));
    }
    out.push(("ideal 3-valent dodecahedron".into(), gen_ideal3_dodecahedron()));
    out.push(("right-angled cube".into(), gen_cube(2)));
    for k in 3..=12 {
        out.push((format!("prism k={k}"), gen_prism(k, 2).unwrap()));
    }
    out.push(("tetrahedron".into(), gen_tetrahedron(3)));
    out
}

/// Compact corpus members with at least one right-angled ridge.
pub fn deformable_corpus() -> Vec<(String, CombPolyhedron)> {
    corpus()
        .into_iter()
        .filter(|(_, q)| {
            find_ridges(q).map(|rs| rs.iter().any(|r| r.ty.is_right_angled_ridge())).unwrap_or(false)
        })
        .collect()
}

fn cycle_edges(c: &[u32]) -> BTreeSet<(u32, u32)> {
    (0..c.len())
        .map(|i| {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

struct Faces {
    names: Vec<String>,
    edges: Vec<BTreeSet<(u32, u32)>>,
    verts: Vec<BTreeSet<u32>>,
}

impl Faces {
    fn new(q: &CombPolyhedron) -> Self {
        let names = q.faces().keys().cloned().collect();
        let edges = q.faces().values().map(|c| cycle_edges(c)).collect();
        let verts = q.faces().values().map(|c| c.iter().copied().collect()).collect();
        Faces { names, edges, verts }
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && !self.edges[a].is_disjoint(&self.edges[b])
    }

    fn common_vertex(&self, fs: &[usize]) -> bool {
        let mut it = fs.iter();
        let first = self.verts[*it.next().unwrap()].clone();
        !it.fold(first, |acc, &f| acc.intersection(&self.verts[f]).copied().collect()).is_empty()
    }

    fn no_three_meet(&self, fs: &[usize]) -> bool {
        let k = fs.len();
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    if self.common_vertex(&[fs[i], fs[j], fs[l]]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Least image of a cyclic sequence under rotation and reflection.
pub fn canonical_cycle(c: &[String]) -> Vec<String> {
    let k = c.len();
    let mut best: Option<Vec<String>> = None;
    for rev in [false, true] {
        for s in 0..k {
            let v: Vec<String> = (0..k)
                .map(|i| if rev { c[(s + k - i) % k].clone() } else { c[(s + i) % k].clone() })
                .collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap_or_default()
}

/// Prismatic 3- and 4-circuits by exhaustive search over face subsets,
/// each as a canonical cyclic sequence of face names.
pub fn brute_force_circuits(q: &CombPolyhedron) -> (BTreeSet<Vec<String>>, BTreeSet<Vec<String>>) {
    let f = Faces::new(q);
    let n = f.names.len();
    let name = |c: &[usize]| canonical_cycle(&c.iter().map(|&i| f.names[i].clone()).collect::<Vec<_>>());
    let mut threes = BTreeSet::new();
    let mut fours = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let cyc = [a, b, c];
                if f.adjacent(a, b) && f.adjacent(b, c) && f.adjacent(c, a) && f.no_three_meet(&cyc) {
                    threes.insert(name(&cyc));
                }
                for d in c + 1..n {
                    for cyc in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        let ring = (0..4).all(|i| f.adjacent(cyc[i], cyc[(i + 1) % 4]));
                        let chords = f.adjacent(cyc[0], cyc[2]) || f.adjacent(cyc[1], cyc[3]);
                        if ring && !chords && f.no_three_meet(&cyc) {
                            fours.insert(name(&cyc));
                        }
                    }
                }
            }
        }
    }
    (threes, fours)
}
