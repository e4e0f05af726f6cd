use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::parry::{parry_sum, triangle_exponents, vertex_labels, vertex_term};
use super::report::GrowthReport;
use super::GrowthError;
use crate::coxeter::steinberg_sum;
use crate::polyalg::{t_pow_minus_one, IntPoly, RatFunc};
use crate::polyhedron::CombPolyhedron;
use crate::roots::{classify, strip_cyclotomic, AlgebraicClass, ClassKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("the polyhedron is compact")]
    Compact,
    #[error("expected one ideal 4-valent vertex and no ideal 3-valent ones, found {ideal4} and {ideal3}")]
    IdealVertexCount { ideal4: usize, ideal3: usize },
    #[error("virgin numerator {0} is not divisible by t(t - 1)")]
    NumeratorNotDivisible(IntPoly),
    #[error("Q_inf is not a product of cyclotomic polynomials: remainder {0}")]
    NotCyclotomic(IntPoly),
    #[error("deg Q_inf - deg P_inf = {0}, expected 2")]
    DegreeGap(i64),
    #[error("P_inf(0) = 0")]
    VanishesAtZero,
    #[error("P_inf(1) = {0} is not negative")]
    NotNegativeAtOne(BigInt),
}

/// `F_inf(t) = t(t-1) P_inf(t) / Q_inf(t)` with `Q_inf` the virgin
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealStructure {
    pub p_inf: IntPoly,
    pub q_inf: IntPoly,
    pub q_cyclotomic_factors: Vec<(usize, usize)>,
    pub degree_gap: i64,
    pub p_inf_at_one: BigInt,
}

/// Certifies the shape of `F` for a polyhedron with a single ideal
/// 4-valent vertex.
pub fn ideal_structure_check(report: &GrowthReport) -> Result<IdealStructure, StructureError> {
    if report.compact {
        return Err(StructureError::Compact);
    }
    if report.ideal4_vertices != 1 || report.ideal3_vertices != 0 {
        return Err(StructureError::IdealVertexCount { ideal4: report.ideal4_vertices, ideal3: report.ideal3_vertices });
    }
    let t_t1 = IntPoly::from_i64s(&[0, -1, 1]);
    let p_inf = report
        .virgin_num
        .checked_div(&t_t1)
        .ok_or_else(|| StructureError::NumeratorNotDivisible(report.virgin_num.clone()))?;
    let q_inf = report.virgin_den.clone();
    let (q_cyclotomic_factors, rest) = strip_cyclotomic(&q_inf);
    if !rest.is_constant() {
        return Err(StructureError::NotCyclotomic(rest));
    }
    let degree_gap = q_inf.deg() as i64 - p_inf.deg() as i64;
    if degree_gap != 2 {
        return Err(StructureError::DegreeGap(degree_gap));
    }
    if p_inf.constant_term().is_zero() {
        return Err(StructureError::VanishesAtZero);
    }
    let p_inf_at_one = p_inf.eval(&BigInt::one());
    if p_inf_at_one >= BigInt::zero() {
        return Err(StructureError::NotNegativeAtOne(p_inf_at_one));
    }
    Ok(IdealStructure { p_inf, q_inf, q_cyclotomic_factors, degree_gap, p_inf_at_one })
}

/// Outcome of comparing `t^(n+1) P_inf - reciprocal(P_inf)` with the
/// numerator of `F_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloydVerdict {
    pub n: u32,
    /// `t^(n+1) P_inf(t) - reciprocal(P_inf)(t)`.
    pub p: IntPoly,
    /// `F_n (t^n - 1) Q_inf / (t - 1)`, when a polynomial.
    pub numerator_from_f: Option<IntPoly>,
    /// `p` equals the numerator up to sign.
    pub matches: bool,
    pub vanishes_at_one: bool,
    pub p_class: Option<AlgebraicClass>,
    pub limit_class: Option<AlgebraicClass>,
}

impl FloydVerdict {
    pub fn holds(&self) -> bool {
        self.matches && self.vanishes_at_one
    }

    /// The non-cyclotomic part of `p` is Salem, counting quadratic units.
    pub fn p_is_salem(&self) -> bool {
        self.p_class.as_ref().is_some_and(AlgebraicClass::is_salem_or_vacuous)
    }

    pub fn limit_is_pisot(&self) -> bool {
        self.limit_class.as_ref().is_some_and(|c| c.kind == ClassKind::Pisot)
    }
}

/// Checks `F_n = (t - 1) P / ((t^n - 1) Q_inf)` with
/// `P = t^(n+1) P_inf - reciprocal(P_inf)`.
pub fn floyd_relation_check(s: &IdealStructure, big_f_n: &RatFunc, n: u32) -> FloydVerdict {
    let rp = s.p_inf.reciprocal().expect("nonzero");
    let p = s.p_inf.shift(n as usize + 1) - &rp;
    let scale = RatFunc::new(&t_pow_minus_one(n as usize) * &s.q_inf, IntPoly::from_i64s(&[-1, 1])).expect("nonzero");
    let numerator_from_f = (big_f_n * &scale).as_polynomial().cloned();
    let matches = numerator_from_f.as_ref().is_some_and(|q| *q == p || *q == -&p);
    let vanishes_at_one = p.eval(&BigInt::one()).is_zero();
    let p_class = classify(&p).ok();
    let limit_class = classify(&s.p_inf).ok();
    FloydVerdict { n, p, numerator_from_f, matches, vanishes_at_one, p_class, limit_class }
}

/// `d g_v / dt` at `t = 1` for a vertex with the given edge labels.
pub fn vertex_derivative_at_one(labels: [u32; 3]) -> Result<BigRational, GrowthError> {
    let e = triangle_exponents(labels)?;
    Ok(derivative_at_one(&vertex_term(&e)))
}

pub fn derivative_at_one(f: &RatFunc) -> BigRational {
    f.derivative().eval(&BigRational::one()).expect("regular at 1")
}

/// `(t^n / (1 - t^n)) ((1 - t)/(1 + t))^2`.
pub fn ideal_limit_difference(n: u32) -> Result<RatFunc, GrowthError> {
    if n < 2 {
        return Err(GrowthError::Parameter(alloc::format!("n = {n} must be at least 2")));
    }
    let n = n as usize;
    let one_minus_t = IntPoly::from_i64s(&[1, -1]);
    let num = IntPoly::monomial(BigInt::one(), n) * one_minus_t.pow(2);
    let den = -t_pow_minus_one(n) * IntPoly::from_i64s(&[1, 1]).pow(2);
    Ok(RatFunc::new(num, den).expect("nonzero"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeVerdict {
    pub n: u32,
    pub df_n: BigRational,
    pub df_inf: BigRational,
    pub difference: BigRational,
    /// `1/2 + sum_v g_v'(1)`.
    pub vertex_form: BigRational,
}

impl DerivativeVerdict {
    pub fn expected_difference(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(4 * self.n))
    }

    pub fn holds(&self) -> bool {
        self.difference == self.expected_difference() && self.vertex_form == self.df_n && self.df_n < BigRational::zero()
    }
}

/// Compares `F_n'(1) - F_inf'(1)` with `1/(4n)` and `F_n'(1)` with its
/// vertex-sum form.
pub fn derivative_identity_check(p_n: &CombPolyhedron, p_inf: &CombPolyhedron, n: u32) -> Result<DerivativeVerdict, GrowthError> {
    let df_n = derivative_at_one(&parry_sum(p_n)?);
    let df_inf = derivative_at_one(&steinberg_sum(&p_inf.coxeter_matrix()));
    let mut vertex_form = BigRational::new(BigInt::one(), BigInt::from(2));
    for v in p_n.vertices() {
        let l = vertex_labels(p_n, v);
        vertex_form += vertex_derivative_at_one([l[0], l[1], l[2]])?;
    }
    let difference = &df_n - &df_inf;
    Ok(DerivativeVerdict { n, df_n, df_inf, difference, vertex_form })
}
