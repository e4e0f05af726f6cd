use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::{CoxeterMatrix, Label};
use super::CoxeterError;
use crate::polyalg::{qint, IntPoly};

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteKind {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral group of order `2m`, `m >= 5`; smaller `m` are `A_2`, `B_2`
    /// or reducible.
    I2(u32),
}

impl FiniteKind {
    pub fn rank(self) -> usize {
        match self {
            FiniteKind::A(n) | FiniteKind::B(n) | FiniteKind::D(n) => n,
            FiniteKind::E6 => 6,
            FiniteKind::E7 => 7,
            FiniteKind::E8 => 8,
            FiniteKind::F4 | FiniteKind::H4 => 4,
            FiniteKind::H3 => 3,
            FiniteKind::I2(_) => 2,
        }
    }

    /// Exponents in increasing order.
    pub fn exponents(self) -> Vec<usize> {
        match self {
            FiniteKind::A(n) => (1..=n).collect(),
            FiniteKind::B(n) => (1..=n).map(|i| 2 * i - 1).collect(),
            FiniteKind::D(n) => {
                let mut e: Vec<usize> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            FiniteKind::E6 => vec![1, 4, 5, 7, 8, 11],
            FiniteKind::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            FiniteKind::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            FiniteKind::F4 => vec![1, 5, 7, 11],
            FiniteKind::H3 => vec![1, 5, 9],
            FiniteKind::H4 => vec![1, 11, 19, 29],
            FiniteKind::I2(m) => vec![1, m as usize - 1],
        }
    }

    pub fn growth_poly(self) -> IntPoly {
        self.exponents().into_iter().map(|e| qint(e + 1).expect("e + 1 > 0")).product()
    }
}

impl fmt::Display for FiniteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteKind::A(n) => write!(f, "A_{n}"),
            FiniteKind::B(n) => write!(f, "B_{n}"),
            FiniteKind::D(n) => write!(f, "D_{n}"),
            FiniteKind::E6 => f.write_str("E_6"),
            FiniteKind::E7 => f.write_str("E_7"),
            FiniteKind::E8 => f.write_str("E_8"),
            FiniteKind::F4 => f.write_str("F_4"),
            FiniteKind::H3 => f.write_str("H_3"),
            FiniteKind::H4 => f.write_str("H_4"),
            FiniteKind::I2(m) => write!(f, "I_2({m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComponent {
    pub kind: FiniteKind,
    /// Generators of the component, increasing.
    pub generators: Vec<usize>,
}

/// Decomposition of a finite Coxeter group into irreducible factors,
/// ordered by smallest generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteType {
    pub components: Vec<FiniteComponent>,
}

impl FiniteType {
    pub fn kinds(&self) -> Vec<FiniteKind> {
        self.components.iter().map(|c| c.kind).collect()
    }

    /// Kinds sorted, so isomorphic groups compare equal.
    pub fn canonical_kinds(&self) -> Vec<FiniteKind> {
        let mut k = self.kinds();
        k.sort_unstable();
        k
    }

    pub fn exponents(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.components.iter().flat_map(|c| c.kind.exponents()).collect();
        e.sort_unstable();
        e
    }

    pub fn growth_poly(&self) -> IntPoly {
        self.components.iter().map(|c| c.kind.growth_poly()).product()
    }

    pub fn name(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.components.is_empty() {
            s.push('1');
        }
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                s.push_str(" × ");
            }
            let _ = write!(s, "{}", c.kind);
        }
        s
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Connected components of the Coxeter diagram (edges where `m_ij != 2`).
pub fn diagram_components(m: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = m.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if !seen[w] && w != v && !m.get(v, w).is_commuting() {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Identifies a connected diagram on `gens`.
fn classify_connected(m: &CoxeterMatrix, gens: &[usize]) -> Option<FiniteKind> {
    let n = gens.len();
    if n == 1 {
        return Some(FiniteKind::A(1));
    }
    let mut edges = Vec::new();
    for (a, &i) in gens.iter().enumerate() {
        for (b, &j) in gens.iter().enumerate().skip(a + 1) {
            match m.get(i, j) {
                Label::Finite(2) => {}
                Label::Finite(l) => edges.push((a, b, l)),
                Label::Infinite => return None,
            }
        }
    }
    if n == 2 {
        return match edges[0].2 {
            3 => Some(FiniteKind::A(2)),
            4 => Some(FiniteKind::B(2)),
            l => Some(FiniteKind::I2(l)),
        };
    }
    // finite diagrams of rank >= 3 are trees with labels 3, 4, 5
    if edges.len() != n - 1 || edges.iter().any(|e| e.2 > 5) {
        return None;
    }
    let mut deg = vec![0usize; n];
    for &(a, b, _) in &edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if deg.iter().any(|&d| d > 3) || branch.len() > 1 {
        return None;
    }
    if heavy.len() > 1 {
        return None;
    }
    if let Some(&&(a, b, l)) = heavy.first() {
        if !branch.is_empty() {
            return None;
        }
        let at_end = deg[a] == 1 || deg[b] == 1;
        return match (l, n, at_end) {
            (4, _, true) => Some(FiniteKind::B(n)),
            (4, 4, false) => Some(FiniteKind::F4),
            (5, 3, true) => Some(FiniteKind::H3),
            (5, 4, true) => Some(FiniteKind::H4),
            _ => None,
        };
    }
    let Some(&centre) = branch.first() else {
        return Some(FiniteKind::A(n));
    };
    // arm lengths from the branch vertex
    let adj = |v: usize| {
        edges.iter().filter_map(move |&(a, b, _)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    };
    let mut arms: Vec<usize> = adj(centre)
        .map(|start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            loop {
                let next = adj(cur).find(|&w| w != prev);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, c) => Some(FiniteKind::D(c + 3)),
        (1, 2, 2) => Some(FiniteKind::E6),
        (1, 2, 3) => Some(FiniteKind::E7),
        (1, 2, 4) => Some(FiniteKind::E8),
        _ => None,
    }
}

/// Finite-type decomposition, or `None` when the group is infinite.
pub fn finite_type(m: &CoxeterMatrix) -> Option<FiniteType> {
    let mut components = Vec::new();
    for gens in diagram_components(m) {
        let kind = classify_connected(m, &gens)?;
        components.push(FiniteComponent { kind, generators: gens });
    }
    Some(FiniteType { components })
}

/// Solomon's growth polynomial `prod [m_i + 1]` of a finite Coxeter group.
pub fn growth_poly_finite(m: &CoxeterMatrix) -> Result<IntPoly, CoxeterError> {
    finite_type(m).map(|ft| ft.growth_poly()).ok_or(CoxeterError::NotFinite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn path(labels: &[u32]) -> CoxeterMatrix {
        CoxeterMatrix::from_labels(labels.len() + 1, labels.iter().enumerate().map(|(i, &l)| (i, i + 1, l)))
            .unwrap()
    }

    fn kinds(m: &CoxeterMatrix) -> Option<Vec<FiniteKind>> {
        finite_type(m).map(|f| f.kinds())
    }

    #[test]
    fn triangle_groups() {
        let t = finite_type(&CoxeterMatrix::triangle(2, 2, 5).unwrap()).unwrap();
        assert_eq!(t.kinds(), vec![FiniteKind::A(1), FiniteKind::I2(5)]);
        assert_eq!(t.name(), "A_1 × I_2(5)");
        assert_eq!(t.exponents(), vec![1, 1, 4]);
        assert!(finite_type(&CoxeterMatrix::triangle(2, 3, 6).unwrap()).is_none());
        assert_eq!(kinds(&CoxeterMatrix::triangle(2, 3, 5).unwrap()), Some(vec![FiniteKind::H3]));
        assert_eq!(finite_type(&CoxeterMatrix::triangle(2, 3, 3).unwrap()).unwrap().exponents(), vec![1, 2, 3]);
        assert_eq!(finite_type(&CoxeterMatrix::triangle(2, 3, 4).unwrap()).unwrap().exponents(), vec![1, 3, 5]);
        assert!(finite_type(&CoxeterMatrix::triangle(3, 3, 3).unwrap()).is_none());
        assert!(finite_type(&CoxeterMatrix::triangle(2, 4, 4).unwrap()).is_none());
    }

    #[test]
    fn catalogue() {
        assert_eq!(kinds(&path(&[3, 3, 3])), Some(vec![FiniteKind::A(4)]));
        assert_eq!(kinds(&path(&[4, 3, 3])), Some(vec![FiniteKind::B(4)]));
        assert_eq!(kinds(&path(&[3, 3, 4])), Some(vec![FiniteKind::B(4)]));
        assert_eq!(kinds(&path(&[3, 4, 3])), Some(vec![FiniteKind::F4]));
        assert_eq!(kinds(&path(&[5, 3, 3])), Some(vec![FiniteKind::H4]));
        assert_eq!(kinds(&path(&[3, 5, 3])), None);
        assert_eq!(kinds(&path(&[4, 3, 4])), None);
        assert_eq!(kinds(&path(&[3, 3, 3, 4])), Some(vec![FiniteKind::B(5)]));
        assert_eq!(kinds(&path(&[3, 4, 3, 3])), None);
        assert_eq!(kinds(&path(&[6])), Some(vec![FiniteKind::I2(6)]));
        let inf = CoxeterMatrix::from_labels(2, [(0, 1, Label::Infinite)]).unwrap();
        assert_eq!(kinds(&inf), None);
    }

    fn star(arms: &[usize]) -> CoxeterMatrix {
        let n = 1 + arms.iter().sum::<usize>();
        let mut m = CoxeterMatrix::new(n);
        let mut next = 1;
        for &a in arms {
            let mut prev = 0;
            for _ in 0..a {
                m.set(prev, next, Label::Finite(3)).unwrap();
                prev = next;
                next += 1;
            }
        }
        m
    }

    #[test]
    fn branched_types() {
        assert_eq!(kinds(&star(&[1, 1, 1])), Some(vec![FiniteKind::D(4)]));
        assert_eq!(kinds(&star(&[1, 1, 3])), Some(vec![FiniteKind::D(6)]));
        assert_eq!(kinds(&star(&[1, 2, 2])), Some(vec![FiniteKind::E6]));
        assert_eq!(kinds(&star(&[2, 1, 3])), Some(vec![FiniteKind::E7]));
        assert_eq!(kinds(&star(&[4, 2, 1])), Some(vec![FiniteKind::E8]));
        assert_eq!(kinds(&star(&[1, 2, 5])), None);
        assert_eq!(kinds(&star(&[2, 2, 2])), None);
        assert_eq!(kinds(&star(&[1, 1, 1, 1])), None);
    }

    #[test]
    fn group_orders() {
        let order = |k: FiniteKind| k.growth_poly().eval(&BigInt::from(1));
        let cases: [(FiniteKind, u64); 10] = [
            (FiniteKind::A(4), 120),
            (FiniteKind::B(3), 48),
            (FiniteKind::D(4), 192),
            (FiniteKind::E6, 51840),
            (FiniteKind::E7, 2903040),
            (FiniteKind::E8, 696729600),
            (FiniteKind::F4, 1152),
            (FiniteKind::H3, 120),
            (FiniteKind::H4, 14400),
            (FiniteKind::I2(7), 14),
        ];
        for (k, n) in cases {
            assert_eq!(order(k), BigInt::from(n), "{k}");
            let e = k.exponents();
            // degree = number of reflections = sum of exponents
            assert_eq!(k.growth_poly().deg(), e.iter().sum::<usize>());
            assert_eq!(e.len(), k.rank());
        }
    }

    #[test]
    fn solomon_polynomials() {
        let q = |k| qint(k).unwrap();
        for n in 2..9u32 {
            let m = CoxeterMatrix::triangle(2, 2, n).unwrap();
            assert_eq!(growth_poly_finite(&m).unwrap(), q(2) * q(2) * q(n as usize));
            let d = CoxeterMatrix::from_labels(2, [(0, 1, n)]).unwrap();
            assert_eq!(growth_poly_finite(&d).unwrap(), q(2) * q(n as usize));
        }
        let h3 = growth_poly_finite(&CoxeterMatrix::triangle(2, 3, 5).unwrap()).unwrap();
        assert_eq!(h3, q(2) * q(6) * q(10));
        assert_eq!(h3.eval(&BigInt::from(1)), BigInt::from(120));
        assert_eq!(
            growth_poly_finite(&CoxeterMatrix::triangle(2, 3, 7).unwrap()),
            Err(CoxeterError::NotFinite)
        );
    }

    #[test]
    fn permutation_invariance() {
        let m = star(&[1, 2, 3]);
        let n = m.rank();
        let perm: Vec<usize> = (0..n).rev().collect();
        assert_eq!(
            finite_type(&m).unwrap().canonical_kinds(),
            finite_type(&m.permute(&perm)).unwrap().canonical_kinds()
        );
    }
}
