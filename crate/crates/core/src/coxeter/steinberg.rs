use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::finite::{finite_type, FiniteKind, FiniteType};
use super::matrix::{CoxeterMatrix, Label};
use crate::polyalg::{IntPoly, RatFunc};

/// A generating subset `T` whose special subgroup is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSubset {
    pub generators: Vec<usize>,
    pub finite_type: FiniteType,
}

/// All subsets of generators generating finite subgroups, the empty set
/// first, in lexicographic order.
pub fn finite_subsets(m: &CoxeterMatrix) -> Vec<FiniteSubset> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    out.push(FiniteSubset { generators: Vec::new(), finite_type: FiniteType { components: Vec::new() } });
    extend(m, &mut current, 0, &mut out);
    out
}

// subgroups of finite groups are finite, so every finite T is reached
// through finite prefixes
fn extend(m: &CoxeterMatrix, current: &mut Vec<usize>, start: usize, out: &mut Vec<FiniteSubset>) {
    for j in start..m.rank() {
        if current.iter().any(|&i| m.get(i, j) == Label::Infinite) {
            continue;
        }
        current.push(j);
        if let Some(ft) = finite_type(&m.restrict(current)) {
            let ft = relabel(ft, current);
            out.push(FiniteSubset { generators: current.clone(), finite_type: ft });
            extend(m, current, j + 1, out);
        }
        current.pop();
    }
}

fn relabel(mut ft: FiniteType, gens: &[usize]) -> FiniteType {
    for c in &mut ft.components {
        for g in &mut c.generators {
            *g = gens[*g];
        }
    }
    ft
}

/// Signed counts of finite subsets grouped by isomorphism type.
pub fn signed_type_counts(subsets: &[FiniteSubset]) -> BTreeMap<Vec<FiniteKind>, i64> {
    let mut counts: BTreeMap<Vec<FiniteKind>, i64> = BTreeMap::new();
    for s in subsets {
        let sign = if s.generators.len() % 2 == 0 { 1 } else { -1 };
        *counts.entry(s.finite_type.canonical_kinds()).or_default() += sign;
    }
    counts.retain(|_, c| *c != 0);
    counts
}

/// `F(t) = sum over finite T of (-1)^|T| / f_T(t)`, which equals
/// `1 / f(1/t)`.
pub fn steinberg_sum(m: &CoxeterMatrix) -> RatFunc {
    let counts = signed_type_counts(&finite_subsets(m));
    let polys: Vec<(IntPoly, i64)> = counts
        .into_iter()
        .map(|(kinds, c)| (kinds.into_iter().map(FiniteKind::growth_poly).product(), c))
        .collect();
    let den = polys.iter().fold(IntPoly::one(), |acc, (f, _)| acc.lcm(f));
    let num = polys.iter().fold(IntPoly::zero(), |acc, (f, c)| {
        let cofactor = den.checked_div(f).expect("lcm is divisible");
        acc + cofactor.scale(&BigInt::from(*c))
    });
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// Growth series of `(G, S)` as a rational function, via Steinberg's
/// formula.
pub fn steinberg_growth(m: &CoxeterMatrix) -> RatFunc {
    steinberg_sum(m)
        .substitute_inverse()
        .recip()
        .expect("the Steinberg sum is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::growth_poly_finite;
    use crate::polyalg::qint;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_one() {
        let f = steinberg_growth(&CoxeterMatrix::new(1));
        assert_eq!(f, RatFunc::from_poly(IntPoly::from_i64s(&[1, 1])));
    }

    #[test]
    fn finite_groups_match_solomon() {
        let h3 = CoxeterMatrix::triangle(2, 3, 5).unwrap();
        let f = steinberg_growth(&h3);
        assert_eq!(f.as_polynomial(), Some(&(qint(2).unwrap() * qint(6).unwrap() * qint(10).unwrap())));
        for (a, b, c) in [(2, 2, 2), (2, 2, 7), (2, 3, 3), (2, 3, 4), (3, 2, 4)] {
            let m = CoxeterMatrix::triangle(a, b, c).unwrap();
            assert_eq!(steinberg_growth(&m).as_polynomial(), Some(&growth_poly_finite(&m).unwrap()));
        }
        let f4 = CoxeterMatrix::from_labels(4, [(0, 1, 3), (1, 2, 4), (2, 3, 3)]).unwrap();
        assert_eq!(steinberg_growth(&f4).as_polynomial(), Some(&growth_poly_finite(&f4).unwrap()));
    }

    #[test]
    fn free_product_of_involutions() {
        // infinite dihedral: 1 + 2t + 2t^2 + ...
        let m = CoxeterMatrix::from_labels(2, [(0, 1, Label::Infinite)]).unwrap();
        let f = steinberg_growth(&m);
        assert_eq!(f.taylor_coeffs(5).unwrap(), ints(&[1, 2, 2, 2, 2]));
        // three involutions, no relations: 1 + 3t + 6t^2 + 12t^3
        let m = CoxeterMatrix::from_labels(3, [(0, 1, Label::Infinite), (0, 2, Label::Infinite), (1, 2, Label::Infinite)])
            .unwrap();
        assert_eq!(steinberg_growth(&m).taylor_coeffs(4).unwrap(), ints(&[1, 3, 6, 12]));
    }

    #[test]
    fn affine_triangle_growth() {
        // Euclidean (3,3,3): growth is (1+t+t^2)/(1-t)^2 * ... check a_1 and f(0)
        let m = CoxeterMatrix::triangle(3, 3, 3).unwrap();
        let c = steinberg_growth(&m).taylor_coeffs(4).unwrap();
        assert_eq!(c[0], BigInt::from(1));
        assert_eq!(c[1], BigInt::from(3));
        assert_eq!(c[2], BigInt::from(6));
    }

    #[test]
    fn subset_enumeration() {
        let m = CoxeterMatrix::triangle(2, 3, 7).unwrap();
        let s = finite_subsets(&m);
        // empty, three singletons, three pairs
        assert_eq!(s.len(), 7);
        let m = CoxeterMatrix::triangle(2, 3, 5).unwrap();
        assert_eq!(finite_subsets(&m).len(), 8);
    }
}
