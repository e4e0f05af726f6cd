use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, PolyError};

/// Quotient of two integer polynomials in canonical lowest terms.
///
/// Canonical form: numerator and denominator coprime over the rationals, the
/// joint integer content is 1 and the denominator has a positive leading
/// coefficient. The zero function is `0/1`. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.checked_div(&g).expect("primitive gcd divides over Z");
        let mut den = den.checked_div(&g).expect("primitive gcd divides over Z");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = IntPoly::from_coeffs(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPoly::from_coeffs(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::new(p, IntPoly::one()).expect("denominator is one")
    }

    /// `1 / p` for a nonzero polynomial.
    pub fn recip_poly(p: IntPoly) -> Result<Self, PolyError> {
        Self::new(IntPoly::one(), p)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn into_parts(self) -> (IntPoly, IntPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the canonical denominator is a constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial when the denominator is exactly 1.
    pub fn as_polynomial(&self) -> Option<&IntPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, PolyError> {
        if rhs.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(x) / d)
    }

    pub fn derivative(&self) -> Self {
        let num = &self.num.derivative() * &self.den - &self.num * &self.den.derivative();
        Self::new(num, &self.den * &self.den).expect("squared denominator is nonzero")
    }

    /// `f(1/t)` rewritten without negative powers of `t`.
    pub fn substitute_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (dn, dd) = (self.num.deg(), self.den.deg());
        let rn = self.num.reciprocal().expect("nonzero numerator");
        let rd = self.den.reciprocal().expect("nonzero denominator");
        // num(1/t)/den(1/t) = t^(dd - dn) rn / rd
        if dd >= dn {
            Self::new(rn.shift(dd - dn), rd)
        } else {
            Self::new(rn, rd.shift(dn - dd))
        }
        .expect("reciprocal of a nonzero polynomial is nonzero")
    }

    /// `f(t) = ±f(1/t)` checks for rational functions.
    pub fn is_reciprocal(&self) -> bool {
        self.substitute_inverse() == *self
    }

    pub fn is_anti_reciprocal(&self) -> bool {
        self.substitute_inverse() == -self
    }

    /// First `count` Maclaurin coefficients, via the recurrence induced by
    /// the denominator.
    pub fn taylor_coeffs(&self, count: usize) -> Result<Vec<BigInt>, PolyError> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(PolyError::PoleAtOrigin);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = self.num.coeff(k);
            for j in 1..den.len().min(k + 1) {
                acc -= &den[j] * &out[k - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(PolyError::NonIntegralSeries(k));
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFunc::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

/// Panics on division by the zero function; use [`RatFunc::checked_div`]
/// for a fallible version.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl core::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |acc, f| acc + f)
    }
}
