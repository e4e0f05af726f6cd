use num_bigint::BigInt;
use num_traits::Zero;

use super::sturm::{Point, RemainderSequence, SturmSequence};
use super::RootError;
use crate::polyalg::IntPoly;

/// `(1 - w)^n p((1 + w)/(1 - w))`: maps roots in the unit disc to roots in
/// the left half-plane.
fn cayley_transform(p: &IntPoly) -> IntPoly {
    let n = p.deg();
    let plus = IntPoly::from_i64s(&[1, 1]);
    let minus = IntPoly::from_i64s(&[1, -1]);
    let mut acc = IntPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = plus.pow(k as u32) * minus.pow((n - k) as u32);
        acc = acc + term.scale(c);
    }
    acc
}

/// Splits `q(iy) = A(y) + i B(y)`.
fn imaginary_axis_parts(q: &IntPoly) -> (IntPoly, IntPoly) {
    let n = q.coeffs().len();
    let mut a = alloc::vec![BigInt::zero(); n];
    let mut b = alloc::vec![BigInt::zero(); n];
    for (j, c) in q.coeffs().iter().enumerate() {
        match j % 4 {
            0 => a[j] = c.clone(),
            1 => b[j] = c.clone(),
            2 => a[j] = -c,
            _ => b[j] = -c,
        }
    }
    (IntPoly::from_coeffs(a), IntPoly::from_coeffs(b))
}

/// Number of roots (with multiplicity) strictly inside the unit circle.
///
/// The disc is mapped to the left half-plane and the count is read off the
/// Cauchy index of `B/A` along the imaginary axis. Fails when a root lies on
/// the unit circle.
pub fn count_roots_in_unit_disc(p: &IntPoly) -> Result<usize, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let n = p.deg();
    if n == 0 {
        return Ok(0);
    }
    let q = cayley_transform(p);
    // deg q < n exactly when p(-1) = 0
    if q.deg() != n {
        return Err(RootError::RootOnUnitCircle);
    }
    let (a, b) = imaginary_axis_parts(&q);
    let g = a.gcd(&b);
    if !g.is_constant() && SturmSequence::new(&g).count_all() > 0 {
        return Err(RootError::RootOnUnitCircle);
    }
    let seq = RemainderSequence::new(&a, &b);
    let index = seq.cauchy_index(&Point::NegInf, &Point::PosInf);
    // limit of arctan(B/A) at both ends, in units of pi/2
    let ends = if b.deg() > a.deg() || a.is_zero() {
        let at_pos = (b.sign_at_pos_inf() as i64) * (a.sign_at_pos_inf() as i64);
        let at_neg = (b.sign_at_neg_inf() as i64) * (a.sign_at_neg_inf() as i64);
        (at_pos - at_neg) / 2
    } else {
        0
    };
    let left_minus_right = ends - index;
    let left = (n as i64 + left_minus_right) / 2;
    Ok(left as usize)
}
