use alloc::vec::Vec;

use num_bigint::BigInt;

use super::GrowthError;
use crate::coxeter::{finite_type, CoxeterMatrix};
use crate::polyalg::{t_pow_minus_one, IntPoly, RatFunc};
use crate::polyhedron::{andreev_check, validate, CombPolyhedron, VertexId};

/// Labels of the three edges at a 3-valent vertex, ascending.
pub fn vertex_labels(p: &CombPolyhedron, v: VertexId) -> Vec<u32> {
    let inc = p.incidence();
    let mut ls: Vec<u32> = inc.neighbours[&v].iter().map(|&w| p.label(v, w).unwrap_or(2)).collect();
    ls.sort_unstable();
    ls
}

/// Exponents of the finite triangle group with the given labels.
pub fn triangle_exponents(labels: [u32; 3]) -> Result<Vec<usize>, GrowthError> {
    let [a, b, c] = labels;
    let m = CoxeterMatrix::triangle(a, b, c).map_err(|e| GrowthError::NotAdmissible(alloc::format!("{e}")))?;
    finite_type(&m)
        .map(|ft| ft.exponents())
        .ok_or_else(|| GrowthError::NotAdmissible(alloc::format!("triangle group ({a},{b},{c}) is infinite")))
}

/// Parry's vertex term
/// `t(1-t)/2 * prod (t^m_i - 1)/(t^(m_i+1) - 1)` over the exponents.
pub fn vertex_term(exponents: &[usize]) -> RatFunc {
    let mut num = IntPoly::from_i64s(&[0, 1, -1]);
    let mut den = IntPoly::from(2i64);
    for &m in exponents {
        num = &num * &t_pow_minus_one(m);
        den = &den * &t_pow_minus_one(m + 1);
    }
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// `F(t) = (t-1)/(t+1) + sum_v g_v(t)` for a compact polyhedron.
pub fn parry_sum(p: &CombPolyhedron) -> Result<RatFunc, GrowthError> {
    let report = validate(p);
    if !report.is_valid() {
        return Err(GrowthError::Polyhedron(crate::polyhedron::PolyhedronError::Invalid(report.issues)));
    }
    if !report.is_compact() {
        return Err(GrowthError::NotCompact);
    }
    let check = andreev_check(p)?;
    if !check.passed() {
        return Err(GrowthError::Polyhedron(crate::polyhedron::PolyhedronError::AndreevFailure(alloc::boxed::Box::new(check))));
    }
    let mut sum = RatFunc::new(IntPoly::from_i64s(&[-1, 1]), IntPoly::from_i64s(&[1, 1])).expect("nonzero");
    // group vertices by stabilizer type
    let mut types: alloc::collections::BTreeMap<Vec<u32>, i64> = alloc::collections::BTreeMap::new();
    for v in p.vertices() {
        *types.entry(vertex_labels(p, v)).or_default() += 1;
    }
    for (labels, count) in types {
        let e = triangle_exponents([labels[0], labels[1], labels[2]])?;
        let g = vertex_term(&e);
        sum = &sum + &(&g * &RatFunc::from_poly(IntPoly::constant(BigInt::from(count))));
    }
    Ok(sum)
}

/// Growth function of a compact polyhedral reflection group by Parry's
/// formula.
pub fn parry_growth(p: &CombPolyhedron) -> Result<RatFunc, GrowthError> {
    Ok(parry_sum(p)?.substitute_inverse().recip().expect("nonzero sum"))
}
