use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::disc::count_roots_in_unit_disc;
use super::sturm::{Point, SturmSequence};
use super::RootError;
use crate::polyalg::{cyclotomic_cached, totient, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Salem,
    Pisot,
    CyclotomicOnly,
    Neither,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Salem => "Salem",
            ClassKind::Pisot => "Pisot",
            ClassKind::CyclotomicOnly => "CyclotomicOnly",
            ClassKind::Neither => "Neither",
        }
    }
}

/// Algebraic classification of an integer polynomial after removing its
/// cyclotomic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicClass {
    pub kind: ClassKind,
    /// The non-cyclotomic remainder, when it is not 1.
    pub salem_or_pisot_factor: Option<IntPoly>,
    /// `(k, multiplicity)` for every `Phi_k` dividing the input.
    pub cyclotomic_factors: Vec<(usize, usize)>,
    /// Set for quadratic reciprocal units `t^2 - ct + 1`, `c > 2`: Pisot,
    /// and Salem only under the definition that allows no conjugates on the
    /// unit circle.
    pub salem_vacuous: bool,
}

impl AlgebraicClass {
    /// Salem, counting quadratic units whose Salem property is vacuous.
    pub fn is_salem_or_vacuous(&self) -> bool {
        self.kind == ClassKind::Salem || self.salem_vacuous
    }
}

/// Divides out every cyclotomic factor, returning `(k, multiplicity)` pairs
/// in increasing `k` and the cyclotomic-free remainder. The product of the
/// factors and the remainder equals `p` exactly.
pub fn strip_cyclotomic(p: &IntPoly) -> (Vec<(usize, usize)>, IntPoly) {
    let mut rem = p.clone();
    let mut factors = Vec::new();
    if p.is_zero() {
        return (factors, rem);
    }
    let mut cache = Vec::new();
    let mut k = 1usize;
    // phi(k) >= sqrt(k/2), so k <= 2 deg^2 covers every candidate
    while k <= 2 * rem.deg() * rem.deg() + 2 {
        if totient(k) <= rem.deg() {
            let phi = cyclotomic_cached(k, &mut cache);
            let mut mult = 0;
            while let Some(q) = rem.checked_div(&phi) {
                rem = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((k, mult));
            }
        }
        k += 1;
    }
    (factors, rem)
}

/// `T` with `R(t) = t^(d/2) T(t + 1/t)` for a reciprocal `R` of even degree.
pub fn trace_polynomial(r: &IntPoly) -> Option<IntPoly> {
    if !r.is_reciprocal() || r.deg() % 2 == 1 {
        return None;
    }
    let half = r.deg() / 2;
    let y = IntPoly::t();
    // C_k(y) = t^k + t^-k
    let mut c_prev = IntPoly::from(2i64);
    let mut c_cur = y.clone();
    let mut acc = IntPoly::constant(r.coeff(half));
    for k in 1..=half {
        if k > 1 {
            let next = &y * &c_cur - &c_prev;
            c_prev = c_cur;
            c_cur = next;
        }
        acc = acc + c_cur.scale(&r.coeff(half + k));
    }
    Some(acc)
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Salem test on a cyclotomic-free monic reciprocal polynomial of even
/// degree at least 4: the trace polynomial must have all its roots real and
/// simple, one in `(2, inf)` and the rest in `(-2, 2)`.
fn is_salem(r: &IntPoly) -> bool {
    if r.deg() < 4 {
        return false;
    }
    let Some(tr) = trace_polynomial(r) else {
        return false;
    };
    let half = tr.deg();
    if tr.squarefree_part().deg() != half {
        return false;
    }
    if tr.sign_at(&int(2)).is_eq() || tr.sign_at(&int(-2)).is_eq() {
        return false;
    }
    let s = SturmSequence::new(&tr);
    let above = s.count(&Point::At(int(2)), &Point::PosInf);
    let inside = s.count(&Point::At(int(-2)), &Point::At(int(2)));
    above == 1 && inside == half - 1
}

/// Classifies the algebraic integers defined by `p`.
///
/// Cyclotomic factors are stripped first; the remainder `R` decides:
/// `CyclotomicOnly` when `R = 1`, `Salem` for a reciprocal `R` of even degree
/// at least 4 passing the trace test, `Pisot` when `R` has no roots on the
/// unit circle (certified by `gcd(R, reciprocal(R)) = 1`), `deg R - 1` roots
/// inside it and one real root above 1, and `Neither` otherwise.
pub fn classify(p: &IntPoly) -> Result<AlgebraicClass, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(RootError::ZeroRoot);
    }
    let q = p.with_positive_leading();
    if !q.is_monic() {
        return Err(RootError::NotMonic);
    }
    let (cyclotomic_factors, r) = strip_cyclotomic(&q);
    let mut class = AlgebraicClass {
        kind: ClassKind::Neither,
        salem_or_pisot_factor: None,
        cyclotomic_factors,
        salem_vacuous: false,
    };
    if r.is_one() {
        class.kind = ClassKind::CyclotomicOnly;
        return Ok(class);
    }
    class.salem_or_pisot_factor = Some(r.clone());
    let d = r.deg();
    if r.is_reciprocal() && d % 2 == 0 {
        if is_salem(&r) {
            class.kind = ClassKind::Salem;
        } else if d == 2 && r.coeff(1) < BigInt::from(-2) {
            // t^2 - ct + 1 with c > 2: real roots tau > 1 and 1/tau
            class.kind = ClassKind::Pisot;
            class.salem_vacuous = true;
        }
        return Ok(class);
    }
    if is_pisot(&r)? {
        class.kind = ClassKind::Pisot;
    }
    Ok(class)
}

fn is_pisot(r: &IntPoly) -> Result<bool, RootError> {
    let rr = r.reciprocal().map_err(|_| RootError::ZeroPolynomial)?;
    if !r.gcd(&rr).is_constant() {
        return Ok(false);
    }
    let inside = match count_roots_in_unit_disc(r) {
        Ok(n) => n,
        Err(RootError::RootOnUnitCircle) => return Ok(false),
        Err(e) => return Err(e),
    };
    if inside + 1 != r.deg() {
        return Ok(false);
    }
    let above_one = SturmSequence::new(r).count(&Point::At(BigRational::one()), &Point::PosInf);
    Ok(above_one == 1)
}

/// One instance `m` of the Salem family attached to a Pisot candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloydInstance {
    pub m: usize,
    /// `(t^m P - reciprocal(P)) / (t - 1)`, absent when the division fails.
    pub quotient: Option<IntPoly>,
    pub class: Option<AlgebraicClass>,
    pub cyclotomic_times_salem: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloydReport {
    pub p_class: AlgebraicClass,
    pub instances: Vec<FloydInstance>,
    pub all_cyclotomic_times_salem: bool,
}

/// Forms `(t^m P(t) - reciprocal(P)(t)) / (t - 1)` for every `m` in the
/// range, classifies each quotient and `P` itself.
///
/// Requires `P` monic with `P(0) != 0`, `P(1) < 0` and `P` not reciprocal.
pub fn floyd_family_check(
    p: &IntPoly,
    m_range: core::ops::RangeInclusive<usize>,
) -> Result<FloydReport, RootError> {
    if !p.is_monic() {
        return Err(RootError::FloydHypothesis("P must be monic"));
    }
    if p.constant_term().is_zero() {
        return Err(RootError::FloydHypothesis("P(0) must be nonzero"));
    }
    if p.eval(&BigInt::one()) >= BigInt::zero() {
        return Err(RootError::FloydHypothesis("P(1) must be negative"));
    }
    if p.is_reciprocal() {
        return Err(RootError::FloydHypothesis("P must not be reciprocal"));
    }
    let p_class = classify(p)?;
    let rp = p.reciprocal().expect("nonzero");
    let t_minus_one = IntPoly::from_i64s(&[-1, 1]);
    let mut instances = Vec::new();
    for m in m_range {
        let quotient = (p.shift(m) - &rp).checked_div(&t_minus_one);
        let class = match &quotient {
            Some(q) if !q.is_zero() && !q.constant_term().is_zero() => classify(q).ok(),
            _ => None,
        };
        let cyclotomic_times_salem = class.as_ref().is_some_and(AlgebraicClass::is_salem_or_vacuous);
        instances.push(FloydInstance { m, quotient, class, cyclotomic_times_salem });
    }
    let all = !instances.is_empty() && instances.iter().all(|i| i.cyclotomic_times_salem);
    Ok(FloydReport { p_class, instances, all_cyclotomic_times_salem: all })
}
