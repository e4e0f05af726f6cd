use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::polyalg::{qint, IntPoly, RatFunc};
use crate::polyhedron::{
    contract_ridge, gen_dodecahedron, gen_ideal3_dodecahedron, gen_lambert_cube, gen_loebell, RidgeType,
    DODECAHEDRON_MARKED_EDGE,
};
use crate::roots::{conjugate_pair_modulus_sq, to_f64, ClassKind};

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn rf(num: IntPoly, den: IntPoly) -> RatFunc {
    RatFunc::new(num, den).unwrap()
}

fn q(n: u32, d: u32) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn one_plus_t_cubed() -> IntPoly {
    p(&[1, 1]).pow(3)
}

/// `(1+t)^3 [m] / (1 - 8t + 8t^(m+1) - t^(m+2))`.
fn eq4(m: usize) -> RatFunc {
    let mut den = p(&[1, -8]);
    den = den + IntPoly::monomial(BigInt::from(8), m + 1) - IntPoly::monomial(BigInt::from(1), m + 2);
    rf(one_plus_t_cubed() * qint(m).unwrap(), den)
}

fn dinf() -> crate::polyhedron::CombPolyhedron {
    contract_ridge(&gen_dodecahedron(2).unwrap(), DODECAHEDRON_MARKED_EDGE).unwrap()
}

#[test]
fn right_dodecahedron_by_hand() {
    let f = parry_growth(&gen_dodecahedron(2).unwrap()).unwrap();
    assert_eq!(f, rf(one_plus_t_cubed(), p(&[1, -1]) * p(&[1, -8, 1])));
}

#[test]
fn dodecahedron_family() {
    for m in 2..=6u32 {
        let d = gen_dodecahedron(m).unwrap();
        let f = parry_growth(&d).unwrap();
        assert_eq!(f, eq4(m as usize), "m = {m}");
        let r = polyhedral_growth(&d, 8).unwrap();
        assert_eq!(r.f, f);
        assert!(r.anti_reciprocal && r.compact);
        assert_eq!(r.euler_characteristic, BigRational::from_integer(BigInt::from(0)));
    }
}

#[test]
fn contracted_dodecahedron() {
    let r = polyhedral_growth(&dinf(), 10).unwrap();
    assert_eq!(r.f, rf(one_plus_t_cubed(), p(&[1, -1]) * p(&[1, -8])));
    assert_eq!(r.tau.exact, Some(BigRational::from_integer(BigInt::from(8))));
    assert!(!r.anti_reciprocal);
    assert_eq!(r.tau_class.kind, ClassKind::Pisot);
    assert_eq!(r.ideal4_vertices, 1);
    assert!(matches!(parry_growth(&dinf()), Err(GrowthError::NotCompact)));
}

#[test]
fn taus_of_first_members() {
    let r2 = polyhedral_growth(&gen_dodecahedron(2).unwrap(), 10).unwrap();
    assert!((to_f64(&r2.tau.midpoint()) - 7.872983346).abs() < 1e-8);
    assert!(r2.tau_class.salem_vacuous);
    let r3 = polyhedral_growth(&gen_dodecahedron(3).unwrap(), 10).unwrap();
    assert!((to_f64(&r3.tau.midpoint()) - 7.98453).abs() < 5e-6);
    assert_eq!(r3.tau_class.kind, ClassKind::Salem);
}

#[test]
fn ideal_three_valent_dodecahedron() {
    let r = polyhedral_growth(&gen_ideal3_dodecahedron(), 10).unwrap();
    let want = rf(one_plus_t_cubed() * p(&[1, 1, 1]), p(&[1, -8, -2, 0, 9]));
    assert_eq!(r.f, want);
    assert!((to_f64(&r.tau.midpoint()) - 8.2269405).abs() < 1e-6);
    assert_eq!(r.tau_class.kind, ClassKind::Neither);
    let cubic = r.tau_class.salem_or_pisot_factor.clone().unwrap();
    assert_eq!(cubic, p(&[-9, -9, -7, 1]));
    let (lo, hi) = conjugate_pair_modulus_sq(&cubic, &r.tau);
    assert!((to_f64(&lo) - 1.0939668).abs() < 1e-6 && (to_f64(&hi) - 1.0939668).abs() < 1e-6);
}

#[test]
fn lambert_cubes_agree() {
    for (a, b, c) in [(3, 3, 3), (3, 4, 5), (5, 5, 4)] {
        let cube = gen_lambert_cube(a, b, c).unwrap();
        let r = growth_with_method(&cube, GrowthMethod::Auto, 6).unwrap();
        assert_eq!(r.f, parry_growth(&cube).unwrap());
        assert!(r.anti_reciprocal);
    }
}

#[test]
fn structure_of_contracted_dodecahedron() {
    let r = polyhedral_growth(&dinf(), 6).unwrap();
    let s = ideal_structure_check(&r).unwrap();
    assert_eq!(s.p_inf, p(&[-8, 1]));
    assert_eq!(s.q_inf, one_plus_t_cubed());
    assert_eq!(s.degree_gap, 2);
    assert_eq!(s.p_inf_at_one, BigInt::from(-7));
    let compact = polyhedral_growth(&gen_dodecahedron(3).unwrap(), 6).unwrap();
    assert_eq!(ideal_structure_check(&compact), Err(StructureError::Compact));
}

#[test]
fn structure_of_contracted_loebell() {
    let l5 = gen_loebell(5).unwrap();
    let e = *l5.edges().iter().nth(7).unwrap();
    let r = polyhedral_growth(&contract_ridge(&l5, e).unwrap(), 6).unwrap();
    assert!(ideal_structure_check(&r).is_ok());
}

#[test]
fn floyd_relation_for_dodecahedra() {
    let s = ideal_structure_check(&polyhedral_growth(&dinf(), 6).unwrap()).unwrap();
    for n in 2..=8u32 {
        let big_f = parry_sum(&gen_dodecahedron(n).unwrap()).unwrap();
        let v = floyd_relation_check(&s, &big_f, n);
        assert!(v.holds(), "n = {n}: {v:?}");
        let want = IntPoly::monomial(BigInt::from(1), n as usize + 2) - IntPoly::monomial(BigInt::from(8), n as usize + 1)
            + p(&[-1, 8]);
        assert_eq!(v.p, want);
        assert!(v.p_is_salem(), "n = {n}");
        assert!(v.limit_is_pisot());
    }
}

#[test]
fn table_rows() {
    for n in 2..=6u32 {
        let d = ridge_pair_difference(&RidgeType::new(2, 2, n, 2, 2), &RidgeType::new(2, 2, n + 1, 2, 2)).unwrap();
        let nn = n as usize;
        let num = IntPoly::monomial(BigInt::from(1), nn) * p(&[1, -1]).pow(3);
        let den = (p(&[1]) - IntPoly::monomial(BigInt::from(1), nn))
            * (p(&[1]) - IntPoly::monomial(BigInt::from(1), nn + 1))
            * p(&[1, 1]).pow(2);
        assert_eq!(d, rf(num, den), "n = {n}");
    }
    let d = ridge_pair_difference(&RidgeType::new(2, 3, 4, 2, 3), &RidgeType::new(2, 3, 5, 2, 3)).unwrap();
    let want = rf(p(&[0, 0, 0, 0, 1, -1]), one_plus_t_cubed() * p(&[1, 0, 1]) * p(&[1, -1, 1, -1, 1]));
    assert_eq!(d, want);
    assert!(ridge_pair_difference(&RidgeType::new(2, 3, 2, 2, 3), &RidgeType::new(2, 4, 3, 2, 3)).is_err());
    assert!(ridge_pair_difference(&RidgeType::new(3, 3, 4, 2, 3), &RidgeType::new(3, 3, 5, 2, 3)).is_err());
}

#[test]
fn limit_difference() {
    let d2 = ideal_limit_difference(2).unwrap();
    assert_eq!(d2, rf(p(&[0, 0, 1, -1]), one_plus_t_cubed()));
    let half = q(1, 2);
    for n in 2..=10 {
        assert!(ideal_limit_difference(n).unwrap().eval(&half).unwrap() > BigRational::from_integer(BigInt::from(0)));
    }
    let finf = rf(one_plus_t_cubed(), p(&[1, -1]) * p(&[1, -8]));
    for m in 2..=6u32 {
        let diff = &eq4(m as usize).recip().unwrap() - &finf.recip().unwrap();
        assert_eq!(diff, ideal_limit_difference(m).unwrap());
    }
}

#[test]
fn vertex_derivatives() {
    let neg = |r: BigRational| -r;
    for n in 2..=9u32 {
        let want = neg(q(1, 8) * (q(1, 1) - q(1, n)));
        assert_eq!(vertex_derivative_at_one([2, 2, n]).unwrap(), want);
    }
    assert_eq!(vertex_derivative_at_one([2, 3, 3]).unwrap(), neg(q(1, 8)));
    assert_eq!(vertex_derivative_at_one([2, 3, 4]).unwrap(), neg(q(5, 32)));
    assert_eq!(vertex_derivative_at_one([2, 3, 5]).unwrap(), neg(q(3, 16)));
    assert!(vertex_derivative_at_one([2, 3, 7]).is_err());
}

#[test]
fn derivative_identity() {
    let d = dinf();
    for n in 2..=6u32 {
        let v = derivative_identity_check(&gen_dodecahedron(n).unwrap(), &d, n).unwrap();
        assert!(v.holds(), "{v:?}");
    }
    let v = derivative_identity_check(&gen_dodecahedron(2).unwrap(), &d, 2).unwrap();
    assert_eq!(v.df_n, -q(3, 4));
}

#[test]
fn short_sweep() {
    let t = deformation_sweep(&gen_dodecahedron(2).unwrap(), DODECAHEDRON_MARKED_EDGE, 2, 4, 8).unwrap();
    assert_eq!(t.rows.len(), 3);
    assert!(t.holds());
    let single = deformation_sweep(&gen_dodecahedron(2).unwrap(), DODECAHEDRON_MARKED_EDGE, 2, 2, 8).unwrap();
    assert_eq!(single.rows.len(), 1);
}
