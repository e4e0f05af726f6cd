use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::model::{CombPolyhedron, Incidence, VertexId};
use super::validate::{angle_sum, recip, validate, vertex_kind, VertexKind};
use super::PolyhedronError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    M0,
    M1,
    M2,
    M3,
    M4,
    M5,
}

impl Condition {
    pub const ALL: [Condition; 6] = [Condition::M0, Condition::M1, Condition::M2, Condition::M3, Condition::M4, Condition::M5];

    pub fn name(self) -> &'static str {
        match self {
            Condition::M0 => "m0",
            Condition::M1 => "m1",
            Condition::M2 => "m2",
            Condition::M3 => "m3",
            Condition::M4 => "m4",
            Condition::M5 => "m5",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Condition::M0 => "every dihedral angle is at most pi/2",
            Condition::M1 => "vertex angle sums: >= pi at 3-valent, = 2pi at 4-valent vertices",
            Condition::M2 => "prismatic 3-circuits have angle sum < pi",
            Condition::M3 => "prismatic 4-circuits have angle sum < 2pi",
            Condition::M4 => "triangular prism: base-lateral angle sum < 3pi",
            Condition::M5 => "faces meeting only at an ideal vertex: angles to a common neighbour sum < pi",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A violated instance: the faces or vertex involved, the angle sum and the
/// bound, both in units of pi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub faces: Vec<String>,
    pub vertex: Option<VertexId>,
    pub angle_sum: BigRational,
    pub bound: BigRational,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.vertex {
            write!(f, "vertex {v}")?;
            if !self.faces.is_empty() {
                f.write_str(", ")?;
            }
        }
        if !self.faces.is_empty() {
            write!(f, "faces {}", self.faces.join(", "))?;
        }
        write!(f, ": angle sum {}pi, bound {}pi", self.angle_sum, self.bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: Condition,
    /// Number of instances examined.
    pub checked: usize,
    pub violations: Vec<Witness>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AndreevReport {
    pub conditions: Vec<ConditionReport>,
}

impl AndreevReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(ConditionReport::passed)
    }

    pub fn failed(&self) -> Vec<Condition> {
        self.conditions.iter().filter(|c| !c.passed()).map(|c| c.condition).collect()
    }

    pub fn get(&self, c: Condition) -> &ConditionReport {
        self.conditions.iter().find(|r| r.condition == c).expect("all conditions reported")
    }
}

impl fmt::Display for AndreevReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            let verdict = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{}: {verdict} ({} checked) {}", c.condition, c.checked, c.condition.description())?;
            for w in &c.violations {
                writeln!(f, "  {w}")?;
            }
        }
        Ok(())
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn face_angle(p: &CombPolyhedron, inc: &Incidence, a: usize, b: usize) -> BigRational {
    let (u, v) = inc.common_edge(a, b).expect("adjacent faces");
    recip(p.label(u, v).unwrap_or(2))
}

fn names(inc: &Incidence, fs: &[usize]) -> Vec<String> {
    fs.iter().map(|&f| inc.face_ids[f].clone()).collect()
}

/// Prismatic 3-circuits as increasing face-index triples.
pub fn three_circuit_indices(inc: &Incidence) -> Vec<[usize; 3]> {
    let n = inc.num_faces();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !inc.adjacent(i, j) {
                continue;
            }
            for k in j + 1..n {
                if inc.adjacent(i, k) && inc.adjacent(j, k) && !inc.share_vertex(&[i, j, k]) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// Prismatic 4-circuits `[a, b, c, d]` in cyclic order, `a` the smallest
/// index and `b < d`.
pub fn four_circuit_indices(inc: &Incidence) -> Vec<[usize; 4]> {
    let n = inc.num_faces();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !inc.adjacent(a, b) {
                continue;
            }
            for c in a + 1..n {
                if c == b || !inc.adjacent(b, c) || inc.adjacent(a, c) {
                    continue;
                }
                for d in b + 1..n {
                    if d == c || !inc.adjacent(c, d) || !inc.adjacent(d, a) || inc.adjacent(b, d) {
                        continue;
                    }
                    let cyc = [a, b, c, d];
                    let triple_meets = (0..4).any(|s| inc.share_vertex(&[cyc[s], cyc[(s + 1) % 4], cyc[(s + 2) % 4]]));
                    if !triple_meets {
                        out.push(cyc);
                    }
                }
            }
        }
    }
    out
}

/// Prismatic 3-circuits by face id.
pub fn three_circuits(p: &CombPolyhedron) -> Vec<Vec<String>> {
    let inc = p.incidence();
    three_circuit_indices(&inc).iter().map(|c| names(&inc, c)).collect()
}

/// Prismatic 4-circuits by face id, in cyclic order.
pub fn four_circuits(p: &CombPolyhedron) -> Vec<Vec<String>> {
    let inc = p.incidence();
    four_circuit_indices(&inc).iter().map(|c| names(&inc, c)).collect()
}

/// Bases of a triangular prism, if `inc` is one.
fn prism_bases(inc: &Incidence) -> Option<(usize, usize)> {
    if inc.num_faces() != 5 {
        return None;
    }
    let tri: Vec<usize> = (0..5).filter(|&f| inc.cycles[f].len() == 3).collect();
    let quads = (0..5).filter(|&f| inc.cycles[f].len() == 4).count();
    match tri[..] {
        [a, b] if quads == 3 && !inc.adjacent(a, b) => Some((a, b)),
        _ => None,
    }
}

/// Evaluates the existence conditions m0 to m5 with exact angle sums.
pub fn andreev_check(p: &CombPolyhedron) -> Result<AndreevReport, PolyhedronError> {
    let report = validate(p);
    if !report.is_valid() {
        return Err(PolyhedronError::Invalid(report.issues));
    }
    let inc = p.incidence();
    let n = inc.num_faces();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut conditions = Vec::new();

    let mut m0 = ConditionReport { condition: Condition::M0, checked: 0, violations: vec![] };
    for (&(u, v), &m) in p.angles() {
        m0.checked += 1;
        if recip(m) > half {
            m0.violations.push(Witness { faces: vec![], vertex: Some(u.min(v)), angle_sum: recip(m), bound: half.clone() });
        }
    }
    conditions.push(m0);

    let mut m1 = ConditionReport { condition: Condition::M1, checked: 0, violations: vec![] };
    for &v in inc.vertex_faces.keys() {
        m1.checked += 1;
        let s = angle_sum(p, &inc, v);
        let ok = match inc.valence(v) {
            3 => s >= BigRational::one(),
            4 => s == int(2),
            _ => false,
        };
        if !ok {
            let bound = if inc.valence(v) == 4 { int(2) } else { BigRational::one() };
            m1.violations.push(Witness { faces: vec![], vertex: Some(v), angle_sum: s, bound });
        }
    }
    conditions.push(m1);

    let mut m2 = ConditionReport { condition: Condition::M2, checked: 0, violations: vec![] };
    for c in three_circuit_indices(&inc) {
        m2.checked += 1;
        let s = face_angle(p, &inc, c[0], c[1]) + face_angle(p, &inc, c[1], c[2]) + face_angle(p, &inc, c[2], c[0]);
        if s >= BigRational::one() {
            m2.violations.push(Witness { faces: names(&inc, &c), vertex: None, angle_sum: s, bound: BigRational::one() });
        }
    }
    conditions.push(m2);

    let mut m3 = ConditionReport { condition: Condition::M3, checked: 0, violations: vec![] };
    for c in four_circuit_indices(&inc) {
        m3.checked += 1;
        let s: BigRational = (0..4).map(|k| face_angle(p, &inc, c[k], c[(k + 1) % 4])).sum();
        if s >= int(2) {
            m3.violations.push(Witness { faces: names(&inc, &c), vertex: None, angle_sum: s, bound: int(2) });
        }
    }
    conditions.push(m3);

    let mut m4 = ConditionReport { condition: Condition::M4, checked: 0, violations: vec![] };
    if let Some((a, b)) = prism_bases(&inc) {
        m4.checked = 1;
        let s: BigRational = (0..n)
            .filter(|&f| f != a && f != b)
            .map(|f| face_angle(p, &inc, a, f) + face_angle(p, &inc, b, f))
            .sum();
        if s >= int(3) {
            m4.violations.push(Witness { faces: names(&inc, &[a, b]), vertex: None, angle_sum: s, bound: int(3) });
        }
    }
    conditions.push(m4);

    let mut m5 = ConditionReport { condition: Condition::M5, checked: 0, violations: vec![] };
    for &v in inc.vertex_faces.keys() {
        if vertex_kind(p, &inc, v) != Some(VertexKind::Ideal4) {
            continue;
        }
        let around = inc.faces_around(v).expect("validated");
        for (fi, fk) in [(around[0], around[2]), (around[1], around[3])] {
            for fj in 0..n {
                if inc.face_contains(fj, v) || !inc.adjacent(fi, fj) || !inc.adjacent(fj, fk) {
                    continue;
                }
                m5.checked += 1;
                let s = face_angle(p, &inc, fi, fj) + face_angle(p, &inc, fj, fk);
                if s >= BigRational::one() {
                    m5.violations.push(Witness {
                        faces: names(&inc, &[fi, fj, fk]),
                        vertex: Some(v),
                        angle_sum: s,
                        bound: BigRational::one(),
                    });
                }
            }
        }
    }
    conditions.push(m5);
    Ok(AndreevReport { conditions })
}
