use alloc::boxed::Box;

use num_rational::BigRational;
use num_traits::One;

use super::parry::parry_sum;
use super::GrowthError;
use crate::coxeter::{finite_subsets, steinberg_sum, CoxeterMatrix};
use crate::polyalg::{IntPoly, RatFunc};
use crate::polyhedron::{andreev_check, validate, CombPolyhedron, PolyhedronError};
use crate::roots::{classify, growth_rate, strip_cyclotomic, AlgebraicClass, ClassKind, IsolatingInterval, RootError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrowthMethod {
    /// Parry's formula for compact inputs, Steinberg's otherwise; compact
    /// inputs are computed both ways and compared.
    Auto,
    Steinberg,
    Parry,
}

/// Growth data of a polyhedral reflection group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    /// Growth series `f(t)`.
    pub f: RatFunc,
    /// `F(t) = 1/f(1/t)`.
    pub big_f: RatFunc,
    /// `F = virgin_num / virgin_den` without cancellation, `virgin_den` the
    /// lcm of the growth polynomials of all finite standard subgroups.
    pub virgin_num: IntPoly,
    pub virgin_den: IntPoly,
    pub tau: IsolatingInterval,
    /// Sign-normalized reversed denominator of `f`, whose largest real root
    /// is `tau`.
    pub tau_poly: IntPoly,
    pub tau_class: AlgebraicClass,
    /// `f(1/t) = -f(t)`.
    pub anti_reciprocal: bool,
    pub compact: bool,
    pub ideal3_vertices: usize,
    pub ideal4_vertices: usize,
    /// `F(1)`, the Euler characteristic of the group.
    pub euler_characteristic: BigRational,
}

/// Classifies the growth rate of `f` through the reversed denominator.
/// A non-monic reversed denominator gives `Neither`.
pub fn classify_growth_rate(f: &RatFunc) -> (IntPoly, AlgebraicClass) {
    let rev = f.den().reciprocal().expect("nonzero").with_positive_leading();
    let class = match classify(&rev) {
        Ok(c) => c,
        Err(_) => {
            let (cyclotomic_factors, rest) = strip_cyclotomic(&rev);
            AlgebraicClass {
                kind: ClassKind::Neither,
                salem_or_pisot_factor: Some(rest),
                cyclotomic_factors,
                salem_vacuous: false,
            }
        }
    };
    (rev, class)
}

/// `F = num / den` with `den` the lcm of the growth polynomials of all
/// finite standard subgroups of `m`.
pub fn virgin_form(m: &CoxeterMatrix, big_f: &RatFunc) -> Result<(IntPoly, IntPoly), GrowthError> {
    let den = finite_subsets(m).iter().fold(IntPoly::one(), |acc, s| acc.lcm(&s.finite_type.growth_poly()));
    let scaled = big_f * &RatFunc::from_poly(den.clone());
    let num = scaled.as_polynomial().cloned().ok_or(GrowthError::VirginFormNotPolynomial)?;
    Ok((num, den))
}

/// Growth report from Steinberg's formula applied to the polyhedral
/// Coxeter matrix; `tau` is isolated to `digits` decimals.
pub fn polyhedral_growth(p: &CombPolyhedron, digits: u32) -> Result<GrowthReport, GrowthError> {
    growth_with_method(p, GrowthMethod::Steinberg, digits)
}

pub fn growth_with_method(p: &CombPolyhedron, method: GrowthMethod, digits: u32) -> Result<GrowthReport, GrowthError> {
    let v = validate(p);
    if !v.is_valid() {
        return Err(PolyhedronError::Invalid(v.issues).into());
    }
    let check = andreev_check(p)?;
    if !check.passed() {
        return Err(PolyhedronError::AndreevFailure(Box::new(check)).into());
    }
    let compact = v.is_compact();
    let m = p.coxeter_matrix();
    let steinberg = || -> RatFunc { steinberg_sum(&m) };
    let big_f = match method {
        GrowthMethod::Steinberg => steinberg(),
        GrowthMethod::Parry => parry_sum(p)?,
        GrowthMethod::Auto if compact => {
            let a = parry_sum(p)?;
            let b = steinberg();
            if a != b {
                return Err(GrowthError::MethodMismatch);
            }
            a
        }
        GrowthMethod::Auto => steinberg(),
    };
    let f = big_f.substitute_inverse().recip().map_err(|_| GrowthError::Root(RootError::ZeroPolynomial))?;
    let (virgin_num, virgin_den) = virgin_form(&m, &big_f)?;
    let tau = growth_rate(&f, digits)?;
    let (tau_poly, tau_class) = classify_growth_rate(&f);
    let anti_reciprocal = f.is_anti_reciprocal();
    let euler_characteristic = big_f.eval(&BigRational::one()).ok_or(GrowthError::Root(RootError::ZeroPolynomial))?;
    Ok(GrowthReport {
        f,
        big_f,
        virgin_num,
        virgin_den,
        tau,
        tau_poly,
        tau_class,
        anti_reciprocal,
        compact,
        ideal3_vertices: v.ideal3_vertices,
        ideal4_vertices: v.ideal4_vertices,
        euler_characteristic,
    })
}
