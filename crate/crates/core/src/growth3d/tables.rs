use super::GrowthError;
use crate::coxeter::{growth_poly_finite, CoxeterMatrix};
use crate::polyalg::{qint, RatFunc};
use crate::polyhedron::RidgeType;

fn triangle_poly(a: u32, b: u32, c: u32) -> Result<RatFunc, GrowthError> {
    let m = CoxeterMatrix::triangle(a, b, c).map_err(|e| GrowthError::NotAdmissible(alloc::format!("{e}")))?;
    let f = growth_poly_finite(&m)
        .map_err(|_| GrowthError::NotAdmissible(alloc::format!("vertex group ({a},{b},{c}) is infinite")))?;
    RatFunc::recip_poly(f).map_err(|_| GrowthError::NotAdmissible("zero growth polynomial".into()))
}

/// The part of `F(t)` that depends on the ridge label:
/// `1/f_e - 1/f_v - 1/f_w`.
pub fn ridge_local_sum(h: &RidgeType) -> Result<RatFunc, GrowthError> {
    let [k1, k2, n, l1, l2] = h.0;
    if n < 2 {
        return Err(GrowthError::NotAdmissible(alloc::format!("ridge label {n} below 2")));
    }
    let edge = RatFunc::recip_poly(qint(2).expect("k > 0") * qint(n as usize).expect("k > 0")).expect("nonzero");
    Ok(&(&edge - &triangle_poly(k1, k2, n)?) - &triangle_poly(l1, l2, n)?)
}

/// `1/f_1(t) - 1/f_2(t)` for polyhedra differing only in the label of one
/// ridge, of types `h1` and `h2`.
pub fn ridge_pair_difference(h1: &RidgeType, h2: &RidgeType) -> Result<RatFunc, GrowthError> {
    let (c1, c2) = (h1.canonical(), h2.canonical());
    if c1.with_n(0) != c2.with_n(0) {
        return Err(GrowthError::NotAdmissible(alloc::format!("{h1} and {h2} differ outside the ridge label")));
    }
    Ok((&ridge_local_sum(&c1)? - &ridge_local_sum(&c2)?).substitute_inverse())
}
