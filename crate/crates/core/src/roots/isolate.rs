use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sturm::{Point, SturmSequence};
use super::RootError;
use crate::polyalg::{IntPoly, RatFunc};

const MAX_SEPARATION_ROUNDS: usize = 1000;

/// A rational interval isolating one real root of a squarefree polynomial.
///
/// The polynomial has exactly one root in `(lo, hi]`. Irrational roots are
/// isolated for a polynomial without rational roots, so no rational endpoint
/// is ever a root; rational roots are carried in `exact`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub exact: Option<BigRational>,
    poly: IntPoly,
}

impl IsolatingInterval {
    /// Wraps an interval; `poly` is reduced to its squarefree part.
    pub fn new(poly: &IntPoly, lo: BigRational, hi: BigRational, exact: Option<BigRational>) -> Self {
        Self { lo, hi, exact, poly: poly.squarefree_part() }
    }

    /// The squarefree polynomial whose root is isolated.
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// The exact value when known, otherwise the midpoint.
    pub fn value_estimate(&self) -> BigRational {
        self.exact.clone().unwrap_or_else(|| self.midpoint())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x <= &self.hi
    }

    /// One bisection step; the interval keeps isolating the same root.
    pub fn bisect(&mut self) {
        if let Some(x) = &self.exact {
            let half = self.width() / BigRational::from_integer(BigInt::from(4));
            self.lo = x - &half;
            self.hi = x + half;
            return;
        }
        let mid = self.midpoint();
        let s_mid = self.poly.sign_at(&mid);
        if s_mid == Ordering::Equal {
            self.exact = Some(mid.clone());
            let quarter = self.width() / BigRational::from_integer(BigInt::from(4));
            self.lo = &mid - &quarter;
            self.hi = mid + quarter;
            return;
        }
        if s_mid != self.poly.sign_at(&self.lo) {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to_width(&mut self, width: &BigRational) {
        while &self.width() >= width {
            self.bisect();
        }
    }

    pub fn refine_to_digits(&mut self, digits: u32) {
        self.refine_to_width(&ten_pow_neg(digits));
    }

    /// Certifies the strict order of the two isolated roots by refining until
    /// the intervals are disjoint (or both exact).
    pub fn separate(a: &mut Self, b: &mut Self) -> Result<Ordering, RootError> {
        for _ in 0..MAX_SEPARATION_ROUNDS {
            if let (Some(x), Some(y)) = (&a.exact, &b.exact) {
                return Ok(x.cmp(y));
            }
            if a.hi < b.lo || (a.hi == b.lo && a.exact.is_none()) {
                return Ok(Ordering::Less);
            }
            if b.hi < a.lo || (b.hi == a.lo && b.exact.is_none()) {
                return Ok(Ordering::Greater);
            }
            // exact values inside the other's open interval
            if let Some(x) = &a.exact {
                if b.poly.sign_at(x) == Ordering::Equal {
                    return Ok(Ordering::Equal);
                }
            }
            if let Some(y) = &b.exact {
                if a.poly.sign_at(y) == Ordering::Equal {
                    return Ok(Ordering::Equal);
                }
            }
            if a.poly == b.poly && a.lo == b.lo && a.hi == b.hi {
                return Ok(Ordering::Equal);
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
        Err(RootError::RefinementLimit)
    }

    /// Maps the isolated root `x > 0` to `1/x`, isolated as a root of the
    /// reciprocal polynomial.
    pub fn reciprocal(&self) -> Self {
        assert!(self.lo.is_positive(), "reciprocal needs a positive interval");
        let poly = self.poly.reciprocal().expect("nonzero").squarefree_part();
        Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
            exact: self.exact.as_ref().map(|x| x.recip()),
            poly,
        }
    }

    /// The value truncated toward zero to `digits` places with every printed
    /// digit certified: a copy is refined until both endpoints truncate to
    /// the same string. Integral exact values print without a fraction.
    pub fn to_decimal(&self, digits: u32) -> String {
        let mut iv = self.clone();
        loop {
            if let Some(x) = &iv.exact {
                return if x.is_integer() { alloc::format!("{}", x.numer()) } else { decimal_trunc(x, digits) };
            }
            let (a, b) = (decimal_trunc(&iv.lo, digits), decimal_trunc(&iv.hi, digits));
            if a == b {
                return a;
            }
            for end in [&iv.lo, &iv.hi] {
                let cut = scaled(end, digits).trunc() / scaled(&BigRational::one(), digits);
                if iv.contains(&cut) && iv.poly.sign_at(&cut) == Ordering::Equal {
                    iv.exact = Some(cut);
                }
            }
            if iv.exact.is_none() {
                iv.bisect();
            }
        }
    }
}

/// `10^-digits` as a rational.
pub fn ten_pow_neg(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize))
}

fn scaled(x: &BigRational, digits: u32) -> BigRational {
    x * BigRational::from_integer(num_traits::pow(BigInt::from(10), digits as usize))
}

fn render_scaled(n: BigInt, digits: u32) -> String {
    let negative = n.is_negative();
    let mut s = alloc::format!("{}", n.abs());
    let d = digits as usize;
    if d > 0 {
        while s.len() <= d {
            s.insert(0, '0');
        }
        s.insert(s.len() - d, '.');
    }
    if negative {
        s.insert(0, '-');
    }
    s
}

/// Decimal expansion truncated toward zero.
pub fn decimal_trunc(x: &BigRational, digits: u32) -> String {
    render_scaled(scaled(x, digits).trunc().to_integer(), digits)
}

/// Decimal expansion rounded toward minus infinity.
pub fn decimal_floor(x: &BigRational, digits: u32) -> String {
    render_scaled(scaled(x, digits).floor().to_integer(), digits)
}

/// Decimal expansion rounded toward plus infinity.
pub fn decimal_ceil(x: &BigRational, digits: u32) -> String {
    render_scaled(scaled(x, digits).ceil().to_integer(), digits)
}

/// Approximate `f64` value, for display and test tolerances only.
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let Some(m) = n.to_u64() else {
        // too large to enumerate; rational-root detection is skipped
        return out;
    };
    let mut d = 1u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d != m / d {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    out
}

/// Rational roots of a polynomial, sorted ascending, by trial of
/// `a/b` with `a | p(0)` and `b | lead(p)`. The root 0 is included when
/// `t | p`.
pub fn rational_roots(p: &IntPoly) -> Vec<BigRational> {
    if p.is_constant() {
        return Vec::new();
    }
    let (k, q) = p.strip_t_power();
    let mut roots = Vec::new();
    if k > 0 {
        roots.push(BigRational::zero());
    }
    if !q.is_constant() {
        let nums = divisors(&q.constant_term());
        let dens = divisors(&q.leading());
        for a in &nums {
            for b in &dens {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for s in [a.clone(), -a.clone()] {
                    let x = BigRational::new(s, b.clone());
                    if q.sign_at(&x) == Ordering::Equal {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Divides out the linear factors `b t - a` of the given rational roots.
fn remove_rational_roots(p: &IntPoly, roots: &[BigRational]) -> IntPoly {
    let mut q = p.squarefree_part();
    for r in roots {
        let lin = IntPoly::from_coeffs(alloc::vec![-r.numer().clone(), r.denom().clone()]);
        if let Some(d) = q.checked_div(&lin) {
            q = d;
        }
    }
    q
}

fn bisect_smallest(s: &SturmSequence, mut lo: BigRational, mut hi: BigRational, width: &BigRational) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let c = s.count(&Point::At(lo.clone()), &Point::At(hi.clone()));
        if c == 1 && &(&hi - &lo) < width {
            return (lo, hi);
        }
        let mid = (&lo + &hi) / &two;
        if s.count(&Point::At(lo.clone()), &Point::At(mid.clone())) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Shrinks a symmetric window around the rational root `x` until it
/// isolates it.
fn exact_interval(p: &IntPoly, x: BigRational, digits: u32) -> IsolatingInterval {
    let s = SturmSequence::new(p);
    let mut half = ten_pow_neg(digits) / BigRational::from_integer(BigInt::from(4));
    loop {
        let (lo, hi) = (&x - &half, &x + &half);
        if s.count(&Point::At(lo.clone()), &Point::At(hi.clone())) == 1 {
            return IsolatingInterval::new(p, lo, hi, Some(x));
        }
        half /= BigRational::from_integer(BigInt::from(2));
    }
}

/// Isolates the smallest real root of `p` in the open interval `(0, 1)`.
/// Rational roots are reported exactly.
pub fn smallest_root_in_unit_interval(p: &IntPoly, digits: u32) -> Result<IsolatingInterval, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let zero = BigRational::zero();
    let one = BigRational::one();
    let sq = p.squarefree_part();
    let all_rational = rational_roots(&sq);
    let rats: Vec<BigRational> = all_rational
        .iter()
        .filter(|r| **r > zero && **r < one)
        .cloned()
        .collect();
    let irr = remove_rational_roots(&sq, &all_rational);
    let upper = rats.first().cloned().unwrap_or_else(|| one.clone());
    let s = SturmSequence::new(&irr);
    // irr has no rational roots, so the endpoints 0 and `upper` are not roots
    let below = s.count(&Point::At(zero.clone()), &Point::At(upper.clone()));
    if below > 0 {
        let (lo, hi) = bisect_smallest(&s, zero, upper, &ten_pow_neg(digits));
        return Ok(IsolatingInterval::new(&irr, lo, hi, None));
    }
    match rats.into_iter().next() {
        Some(x) => Ok(exact_interval(p, x, digits)),
        None => Err(RootError::NoRootInUnitInterval),
    }
}

/// Growth rate `1/r` of a growth function, `r` the least positive pole.
///
/// The returned interval isolates the rate as a root of the reciprocal of
/// the denominator, with width below `10^-digits`.
pub fn growth_rate(f: &RatFunc, digits: u32) -> Result<IsolatingInterval, RootError> {
    let (n0, d0) = (f.num().constant_term(), f.den().constant_term());
    if d0.is_zero() || n0 != d0 {
        return Err(RootError::NotNormalized);
    }
    let r = match smallest_root_in_unit_interval(f.den(), digits + 2) {
        Ok(r) => r,
        Err(RootError::NoRootInUnitInterval) => return Err(RootError::NoPoleInUnitInterval),
        Err(e) => return Err(e),
    };
    let mut tau = r.reciprocal();
    if let Some(x) = tau.exact.clone() {
        return Ok(exact_interval(tau.poly(), x, digits));
    }
    tau.refine_to_digits(digits);
    Ok(tau)
}

/// Isolating intervals for all real roots of `p`, ascending.
pub fn real_roots(p: &IntPoly, digits: u32) -> Vec<IsolatingInterval> {
    if p.is_constant() {
        return Vec::new();
    }
    let sq = p.squarefree_part();
    let rats = rational_roots(&sq);
    let irr = remove_rational_roots(&sq, &rats);
    let s = SturmSequence::new(&irr);
    let mut out: Vec<IsolatingInterval> = rats.into_iter().map(|x| exact_interval(&sq, x, digits)).collect();
    if s.count_all() > 0 {
        let bound = cauchy_bound(&irr);
        let mut stack = alloc::vec![(-bound.clone(), bound)];
        let width = ten_pow_neg(digits);
        while let Some((lo, hi)) = stack.pop() {
            let c = s.count(&Point::At(lo.clone()), &Point::At(hi.clone()));
            if c == 0 {
                continue;
            }
            if c == 1 && (&hi - &lo) < width {
                out.push(IsolatingInterval::new(&irr, lo, hi, None));
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by_key(|a| a.value_estimate());
    out
}

/// `1 + max |c_k / c_n|`: every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().abs();
    let m = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| BigRational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(BigRational::zero);
    m + BigRational::one()
}

/// Product of the squared moduli of the complex conjugate pair of a monic
/// cubic with one real root `tau > 0`, bounded using the isolating interval
/// of `tau`: the pair's product equals `-p(0) / tau`.
pub fn conjugate_pair_modulus_sq(cubic: &IntPoly, tau: &IsolatingInterval) -> (BigRational, BigRational) {
    let c = BigRational::from_integer(-cubic.constant_term() * cubic.leading().signum());
    if let Some(x) = &tau.exact {
        let v = &c / x;
        return (v.clone(), v);
    }
    let a = &c / &tau.hi;
    let b = &c / &tau.lo;
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent oracle: plain floating-point bisection on a sign change.
    fn f64_bisect(c: &[f64], mut lo: f64, mut hi: f64) -> f64 {
        let eval = |x: f64| c.iter().rev().fold(0.0, |acc, k| acc * x + k);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (eval(mid) > 0.0) == (eval(lo) > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn exact_rational_pole() {
        let den = p(&[1, -1]) * p(&[1, -8]);
        let iv = smallest_root_in_unit_interval(&den, 10).unwrap();
        assert_eq!(iv.exact, Some(r(1, 8)));
        assert!(iv.contains(&r(1, 8)));
    }

    #[test]
    fn irrational_smallest_roots() {
        let iv = smallest_root_in_unit_interval(&p(&[1, -8, 1]), 12).unwrap();
        let oracle = f64_bisect(&[1.0, -8.0, 1.0], 0.0, 0.5);
        assert!((to_f64(&iv.midpoint()) - oracle).abs() < 1e-11);
        assert!((oracle - 0.1270166).abs() < 1e-7);

        let q = [1.0, -8.0, 0.0, 0.0, 0.0, 8.0, -1.0];
        let iv = smallest_root_in_unit_interval(&p(&[1, -8, 0, 0, 0, 8, -1]), 12).unwrap();
        let oracle = f64_bisect(&q, 0.0, 0.5);
        assert!((to_f64(&iv.midpoint()) - oracle).abs() < 1e-11);
        assert!((oracle - 0.1250301).abs() < 1e-7);
        assert!(iv.width() < ten_pow_neg(12));
    }

    #[test]
    fn irrational_root_below_rational_one() {
        // roots 1/2 and (3 - sqrt 5)/2 ~ 0.382
        let q = p(&[-1, 2]) * p(&[1, -3, 1]);
        let iv = smallest_root_in_unit_interval(&q, 8).unwrap();
        assert!(iv.exact.is_none());
        assert!((to_f64(&iv.midpoint()) - 0.381966).abs() < 1e-6);
    }

    #[test]
    fn no_root_in_unit_interval() {
        assert_eq!(
            smallest_root_in_unit_interval(&p(&[-2, 1]), 5),
            Err(RootError::NoRootInUnitInterval)
        );
        // roots at 0 and 1 only are excluded
        assert_eq!(
            smallest_root_in_unit_interval(&(p(&[0, 1]) * p(&[-1, 1])), 5),
            Err(RootError::NoRootInUnitInterval)
        );
    }

    #[test]
    fn growth_rate_anchors() {
        let f = RatFunc::new(p(&[1, 1]).pow(3), p(&[1, -1]) * p(&[1, -8])).unwrap();
        let tau = growth_rate(&f, 10).unwrap();
        assert_eq!(tau.exact, Some(r(8, 1)));
        assert_eq!(tau.to_decimal(6), "8");

        let f = RatFunc::new(p(&[1, 1]).pow(3), p(&[1, -1]) * p(&[1, -8, 1])).unwrap();
        let tau = growth_rate(&f, 8).unwrap();
        // 4 + sqrt 15
        assert!((to_f64(&tau.midpoint()) - (4.0 + 15f64.sqrt())).abs() < 1e-8);
        assert_eq!(tau.to_decimal(5), "7.87298");

        let bad = RatFunc::new(p(&[2, 1]), p(&[1, -8])).unwrap();
        assert_eq!(growth_rate(&bad, 5), Err(RootError::NotNormalized));
        let no_pole = RatFunc::new(p(&[1]), p(&[1, 1])).unwrap();
        assert_eq!(growth_rate(&no_pole, 5), Err(RootError::NoPoleInUnitInterval));
    }

    #[test]
    fn separation_orders_close_roots() {
        let mut a = smallest_root_in_unit_interval(&p(&[1, -8, 1]), 2).unwrap();
        let mut b = smallest_root_in_unit_interval(&p(&[1, -8, 0, 0, 0, 8, -1]), 2).unwrap();
        // 0.12701... vs 0.12524...
        assert_eq!(IsolatingInterval::separate(&mut a, &mut b), Ok(Ordering::Greater));
        assert!(b.hi <= a.lo);
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal_trunc(&r(-7, 3), 3), "-2.333");
        assert_eq!(decimal_floor(&r(-7, 3), 3), "-2.334");
        assert_eq!(decimal_ceil(&r(1, 3), 2), "0.34");
        assert_eq!(decimal_trunc(&r(1, 200), 2), "0.00");
        assert_eq!(decimal_trunc(&r(5, 1), 0), "5");
    }

    #[test]
    fn rational_root_search() {
        let q = p(&[0, 1]) * p(&[-1, 2]) * p(&[3, 1]) * p(&[1, 0, 1]);
        assert_eq!(rational_roots(&q), alloc::vec![r(-3, 1), r(0, 1), r(1, 2)]);
    }

    #[test]
    fn all_real_roots() {
        let q = p(&[-1, 2]) * p(&[1, -3, 1]) * p(&[-2, 0, 1]);
        let roots = real_roots(&q, 6);
        assert_eq!(roots.len(), 5);
        let vals: Vec<f64> = roots.iter().map(|iv| to_f64(&iv.value_estimate())).collect();
        let expected = [-2f64.sqrt(), 0.381966, 0.5, 2f64.sqrt(), 2.618034];
        for (v, e) in vals.iter().zip(expected) {
            assert!((v - e).abs() < 1e-5, "{v} vs {e}");
        }
    }

    #[test]
    fn decimals_are_certified() {
        // sqrt 2 = 1.41421..., the midpoint 1.41365 would print 1.413
        let iv = IsolatingInterval::new(&p(&[-2, 0, 1]), r(141, 100), r(14173, 10000), None);
        assert_eq!(iv.to_decimal(3), "1.414");
        // root exactly on a decimal boundary
        let iv = IsolatingInterval::new(&p(&[-3, 2]), r(1, 1), r(2, 1), None);
        assert_eq!(iv.to_decimal(2), "1.50");
        let iv = IsolatingInterval::new(&p(&[3, 2]), r(-2, 1), r(-1, 1), None);
        assert_eq!(iv.to_decimal(1), "-1.5");
    }
}
