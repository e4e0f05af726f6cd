use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored densely in ascending order of powers; the zero
/// polynomial is the empty sequence and every other polynomial has a nonzero
/// leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming high zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of `p(x)` for rational `x`, computed without building a rational:
    /// `den^d * p(num/den)` is an integer with the same sign as `p(x)`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc.sign_ord()
    }

    /// Sign of the polynomial as `t -> +infinity`.
    pub fn sign_at_pos_inf(&self) -> Ordering {
        self.leading().sign_ord()
    }

    /// Sign of the polynomial as `t -> -infinity`.
    pub fn sign_at_neg_inf(&self) -> Ordering {
        let s = self.leading().sign_ord();
        if self.deg() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Removes the largest power of `t` dividing the polynomial, returning it.
    pub fn strip_t_power(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if self.is_zero() {
            return (0, Self::zero());
        }
        (k, Self { coeffs: self.coeffs[k..].to_vec() })
    }

    /// `p(t^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self { coeffs }
    }

    /// `p(-t)`.
    pub fn compose_neg(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `t^deg(p) * p(1/t)`: the coefficient sequence reversed.
    ///
    /// When `p(0) = 0` the result has lower degree than `p`.
    pub fn reciprocal(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn is_anti_reciprocal(&self) -> bool {
        !self.is_zero()
            && self
                .coeffs
                .iter()
                .zip(self.coeffs.iter().rev())
                .all(|(a, b)| *a == -b)
    }

    /// Gcd of all coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Multiplies by -1 if needed so that the leading coefficient is positive.
    pub fn with_positive_leading(&self) -> Self {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact division over the integers; `None` unless `divisor` divides
    /// `self` with integer quotient.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_integral(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Long division valid when every step's leading quotient is integral.
    fn div_rem_integral(&self, divisor: &Self) -> Option<(Self, Self)> {
        if divisor.is_zero() {
            return None;
        }
        let dd = divisor.deg();
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (q, r) = rem[k].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &q * c;
            }
            quot[k - dd] = q;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division with remainder over the rationals, returned as
    /// `(q, r, s)` with `s * self = q * divisor + r` and `s > 0` an integer.
    pub fn pseudo_div_rem(&self, divisor: &Self) -> Result<(Self, Self, BigInt), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = divisor.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((Self::zero(), self.clone(), BigInt::one()));
        }
        let lead = divisor.leading();
        let steps = self.deg() - dd + 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); steps];
        for k in (dd..rem.len()).rev() {
            // rem <- lead * rem - rem[k] t^(k-dd) divisor
            let top = rem[k].clone();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for q in quot.iter_mut() {
                *q *= &lead;
            }
            if !top.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + j] -= &top * c;
                }
                quot[k - dd] += &top;
            }
        }
        let mut scale = BigInt::one();
        for _ in 0..steps {
            scale *= &lead;
        }
        // make the multiplier positive
        if scale.is_negative() {
            scale = -scale;
            quot.iter_mut().for_each(|c| *c = -&*c);
            rem.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem), scale))
    }

    /// Remainder of division over the rationals, scaled to a primitive
    /// integer polynomial with the sign of the true remainder preserved.
    pub fn rem_primitive(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (_, r, _) = self.pseudo_div_rem(divisor)?;
        if r.is_zero() {
            return Ok(r);
        }
        let c = r.content();
        Ok(Self::from_coeffs(r.coeffs.iter().map(|x| x / &c).collect()))
    }

    /// Greatest common divisor over the rationals, returned primitive with
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a
                .rem_primitive(&b)
                .expect("divisor is nonzero inside the loop");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Least common multiple over the rationals, primitive with positive
    /// leading coefficient.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let prod = (self.primitive_part() * other.primitive_part()).primitive_part();
        prod.checked_div(&g)
            .expect("gcd of primitive polynomials divides their product")
            .primitive_part()
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .checked_div(&g)
            .expect("gcd divides the primitive part")
            .primitive_part()
    }
}

trait SignOrd {
    fn sign_ord(&self) -> Ordering;
}

impl SignOrd for BigInt {
    fn sign_ord(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { (&self).$m(&rhs) }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly { (&self).$m(rhs) }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl core::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::one(), |acc, p| acc * p)
    }
}

/// The q-integer `[k] = 1 + t + ... + t^(k-1)`.
pub fn qint(k: usize) -> Result<IntPoly, PolyError> {
    if k == 0 {
        return Err(PolyError::ZeroQInteger);
    }
    Ok(IntPoly::from_coeffs(vec![BigInt::one(); k]))
}

/// `t^k - 1`.
pub fn t_pow_minus_one(k: usize) -> IntPoly {
    IntPoly::monomial(BigInt::one(), k) - IntPoly::one()
}

/// The `k`-th cyclotomic polynomial, obtained by dividing `t^k - 1` by the
/// cyclotomic polynomials of the proper divisors of `k`.
pub fn cyclotomic(k: usize) -> IntPoly {
    assert!(k >= 1, "cyclotomic index must be positive");
    let mut cache: Vec<Option<IntPoly>> = vec![None; k + 1];
    cyclotomic_cached(k, &mut cache)
}

pub(crate) fn cyclotomic_cached(k: usize, cache: &mut Vec<Option<IntPoly>>) -> IntPoly {
    if cache.len() <= k {
        cache.resize(k + 1, None);
    }
    if let Some(p) = &cache[k] {
        return p.clone();
    }
    let mut p = t_pow_minus_one(k);
    for d in 1..k {
        if k.is_multiple_of(d) {
            let phi_d = cyclotomic_cached(d, cache);
            p = p
                .checked_div(&phi_d)
                .expect("cyclotomic factors divide t^k - 1");
        }
    }
    cache[k] = Some(p.clone());
    p
}

/// Euler's totient.
pub fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(1).unwrap(), p(&[1]));
        assert_eq!(qint(2).unwrap(), p(&[1, 1]));
        assert_eq!(qint(6).unwrap(), p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(qint(0), Err(PolyError::ZeroQInteger));
    }

    #[test]
    fn qint_times_t_minus_one() {
        for k in 1..40 {
            assert_eq!(qint(k).unwrap() * p(&[-1, 1]), t_pow_minus_one(k));
        }
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(5), p(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(105).coeff(7), BigInt::from(-2));
    }

    #[test]
    fn cyclotomic_product_identity() {
        let mut cache = Vec::new();
        for k in 1..=200usize {
            let prod: IntPoly = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| cyclotomic_cached(d, &mut cache))
                .product();
            assert_eq!(prod, t_pow_minus_one(k), "k = {k}");
            assert_eq!(cyclotomic_cached(k, &mut cache).deg(), totient(k));
        }
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[-8, 1]).reciprocal().unwrap(), p(&[1, -8]));
        assert_eq!(p(&[-1, 7, 9, 9]).reciprocal().unwrap(), p(&[9, 9, 7, -1]));
        assert_eq!(p(&[1, 1]).reciprocal().unwrap(), p(&[1, 1]));
        assert_eq!(IntPoly::zero().reciprocal(), Err(PolyError::ZeroPolynomial));
        // p(0) = 0 drops the degree
        assert_eq!(p(&[0, 1, 2]).reciprocal().unwrap(), p(&[2, 1]));
    }

    #[test]
    fn multiplication_matches_hand_expansion() {
        assert_eq!(p(&[-1, 1]) * p(&[1, -8, 1]), p(&[-1, 9, -9, 1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).checked_div(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).checked_div(&p(&[-1, 1])), None);
        assert_eq!(p(&[1, 2]).checked_div(&p(&[0, 2])), None);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = p(&[-1, 1]) * p(&[1, 1]) * p(&[2, 3]);
        let b = p(&[-1, 1]) * p(&[5, 1]) * p(&[2, 3]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]) * p(&[2, 3]));
        assert_eq!(p(&[1, 1]).pow(2).lcm(&p(&[1, 1]).pow(3)), p(&[1, 1]).pow(3));
        assert_eq!(p(&[4, 6]).gcd(&p(&[6, 9])), p(&[2, 3]));
        assert_eq!(p(&[1, 2]).gcd(&IntPoly::zero()), p(&[1, 2]));
    }

    #[test]
    fn squarefree() {
        let q = p(&[-1, 1]).pow(3) * p(&[1, 1]);
        assert_eq!(q.squarefree_part(), p(&[-1, 0, 1]));
    }

    #[test]
    fn sign_at_rationals() {
        let q = p(&[1, -8, 1]);
        assert_eq!(q.sign_at(&BigRational::from_integer(0.into())), Ordering::Greater);
        assert_eq!(q.sign_at(&BigRational::new(1.into(), 2.into())), Ordering::Less);
        assert_eq!(p(&[-1, 2]).sign_at(&BigRational::new(1.into(), 2.into())), Ordering::Equal);
    }

    #[test]
    fn pseudo_division_identity() {
        let a = p(&[3, -2, 0, 5, 7]);
        let b = p(&[1, 0, 3]);
        let (q, r, s) = a.pseudo_div_rem(&b).unwrap();
        assert_eq!(a.scale(&s), &q * &b + r.clone());
        assert!(r.deg() < b.deg());
        assert!(s > BigInt::zero());
    }
}
