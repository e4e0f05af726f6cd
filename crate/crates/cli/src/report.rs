//! JSON documents and text rendering of the core reports.
//!
//! Polynomials are written in the human form `1 - 8*t + t^2`, rationals as
//! `p/q`. Interval endpoints appear twice: exactly, and as decimals rounded
//! outward to the requested number of digits.

use std::fmt::Write as _;
use std::str::FromStr;

use hypgrowth_core::growth3d::{GrowthReport, SweepRow, SweepTable};
use hypgrowth_core::polyhedron::{AndreevReport, RidgeDescriptor, ValidationReport};
use hypgrowth_core::roots::{decimal_ceil, decimal_floor, AlgebraicClass, ClassKind, IsolatingInterval};
use hypgrowth_core::{IntPoly, RatFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RatDoc {
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IntervalDoc {
    /// Certified truncated decimal value.
    pub value: String,
    pub lo: String,
    pub hi: String,
    pub lo_exact: String,
    pub hi_exact: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub poly: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassDoc {
    pub kind: String,
    pub factor: Option<String>,
    pub cyclotomic: Vec<(usize, usize)>,
    pub salem_vacuous: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GrowthDoc {
    pub f: RatDoc,
    #[serde(rename = "F")]
    pub big_f: RatDoc,
    pub virgin: RatDoc,
    pub tau: Option<IntervalDoc>,
    pub tau_poly: Option<String>,
    pub class: Option<ClassDoc>,
    pub anti_reciprocal: bool,
    pub euler_characteristic: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compact: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal3_vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal4_vertices: Option<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SweepRowDoc {
    pub n: Option<u32>,
    pub tau: IntervalDoc,
    pub class: ClassDoc,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SweepDoc {
    pub edge: (u32, u32),
    pub rows: Vec<SweepRowDoc>,
    pub limit: SweepRowDoc,
    pub monotone: bool,
    pub members_salem: bool,
    pub limit_pisot: bool,
}

fn bad_doc(what: &str) -> CliError {
    CliError::Usage(format!("bad report document: {what}"))
}

fn poly(s: &str) -> Result<IntPoly, CliError> {
    IntPoly::from_str(s).map_err(|e| bad_doc(&e.to_string()))
}

fn rational(s: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s).map_err(|_| bad_doc(&format!("bad rational `{s}`")))
}

/// Written with a positive constant term in the denominator when it is
/// nonzero, so series read `f(0) = 1`.
pub fn rat_doc(f: &RatFunc) -> RatDoc {
    if f.den().constant_term() < BigInt::from(0) {
        RatDoc { num: (-f.num()).to_string(), den: (-f.den()).to_string() }
    } else {
        RatDoc { num: f.num().to_string(), den: f.den().to_string() }
    }
}

fn rat_text(d: &RatDoc) -> String {
    if d.den == "1" {
        d.num.clone()
    } else {
        format!("({}) / ({})", d.num, d.den)
    }
}

pub fn rat_from_doc(d: &RatDoc) -> Result<RatFunc, CliError> {
    RatFunc::new(poly(&d.num)?, poly(&d.den)?).map_err(|e| bad_doc(&e.to_string()))
}

pub fn interval_doc(iv: &IsolatingInterval, digits: u32) -> IntervalDoc {
    IntervalDoc {
        value: tau_text(iv, digits),
        lo: decimal_floor(&iv.lo, digits),
        hi: decimal_ceil(&iv.hi, digits),
        lo_exact: iv.lo.to_string(),
        hi_exact: iv.hi.to_string(),
        exact: iv.exact.as_ref().map(ToString::to_string),
        poly: iv.poly().to_string(),
    }
}

pub fn interval_from_doc(d: &IntervalDoc) -> Result<IsolatingInterval, CliError> {
    let exact = d.exact.as_deref().map(rational).transpose()?;
    Ok(IsolatingInterval::new(&poly(&d.poly)?, rational(&d.lo_exact)?, rational(&d.hi_exact)?, exact))
}

pub fn class_doc(c: &AlgebraicClass) -> ClassDoc {
    ClassDoc {
        kind: c.kind.as_str().to_string(),
        factor: c.salem_or_pisot_factor.as_ref().map(ToString::to_string),
        cyclotomic: c.cyclotomic_factors.clone(),
        salem_vacuous: c.salem_vacuous,
    }
}

pub fn class_from_doc(d: &ClassDoc) -> Result<AlgebraicClass, CliError> {
    let kind = match d.kind.as_str() {
        "Salem" => ClassKind::Salem,
        "Pisot" => ClassKind::Pisot,
        "CyclotomicOnly" => ClassKind::CyclotomicOnly,
        "Neither" => ClassKind::Neither,
        k => return Err(bad_doc(&format!("unknown class `{k}`"))),
    };
    Ok(AlgebraicClass {
        kind,
        salem_or_pisot_factor: d.factor.as_deref().map(poly).transpose()?,
        cyclotomic_factors: d.cyclotomic.clone(),
        salem_vacuous: d.salem_vacuous,
    })
}

pub fn growth_doc(r: &GrowthReport, digits: u32) -> GrowthDoc {
    GrowthDoc {
        f: rat_doc(&r.f),
        big_f: rat_doc(&r.big_f),
        virgin: RatDoc { num: r.virgin_num.to_string(), den: r.virgin_den.to_string() },
        tau: Some(interval_doc(&r.tau, digits)),
        tau_poly: Some(r.tau_poly.to_string()),
        class: Some(class_doc(&r.tau_class)),
        anti_reciprocal: r.anti_reciprocal,
        euler_characteristic: r.euler_characteristic.to_string(),
        compact: Some(r.compact),
        ideal3_vertices: Some(r.ideal3_vertices),
        ideal4_vertices: Some(r.ideal4_vertices),
    }
}

/// Rebuilds the report of a polyhedral input from its document.
pub fn growth_report_from_doc(d: &GrowthDoc) -> Result<GrowthReport, CliError> {
    let missing = |k: &str| bad_doc(&format!("missing `{k}`"));
    Ok(GrowthReport {
        f: rat_from_doc(&d.f)?,
        big_f: rat_from_doc(&d.big_f)?,
        virgin_num: poly(&d.virgin.num)?,
        virgin_den: poly(&d.virgin.den)?,
        tau: interval_from_doc(d.tau.as_ref().ok_or_else(|| missing("tau"))?)?,
        tau_poly: poly(d.tau_poly.as_deref().ok_or_else(|| missing("tau_poly"))?)?,
        tau_class: class_from_doc(d.class.as_ref().ok_or_else(|| missing("class"))?)?,
        anti_reciprocal: d.anti_reciprocal,
        compact: d.compact.ok_or_else(|| missing("compact"))?,
        ideal3_vertices: d.ideal3_vertices.ok_or_else(|| missing("ideal3_vertices"))?,
        ideal4_vertices: d.ideal4_vertices.ok_or_else(|| missing("ideal4_vertices"))?,
        euler_characteristic: rational(&d.euler_characteristic)?,
    })
}

fn sweep_row_doc(r: &SweepRow, digits: u32) -> SweepRowDoc {
    SweepRowDoc { n: r.n, tau: interval_doc(&r.tau, digits), class: class_doc(&r.class) }
}

pub fn sweep_doc(t: &SweepTable, digits: u32) -> SweepDoc {
    SweepDoc {
        edge: t.edge,
        rows: t.rows.iter().map(|r| sweep_row_doc(r, digits)).collect(),
        limit: sweep_row_doc(&t.limit, digits),
        monotone: t.monotone,
        members_salem: t.members_salem,
        limit_pisot: t.limit_pisot,
    }
}

/// `8 (exact)`, `3/2 (exact)` or the certified truncated decimal.
pub fn tau_text(iv: &IsolatingInterval, digits: u32) -> String {
    match &iv.exact {
        Some(x) if x.is_integer() => format!("{} (exact)", x.numer()),
        Some(x) => format!("{x} (exact)"),
        None => iv.to_decimal(digits),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn growth_text(d: &GrowthDoc) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "f(t) = {}", rat_text(&d.f));
    let _ = writeln!(s, "F(t) = 1/f(1/t) = {}", rat_text(&d.big_f));
    let _ = writeln!(s, "virgin form: F = ({}) / ({})", d.virgin.num, d.virgin.den);
    match (&d.tau, &d.class) {
        (Some(t), Some(c)) => {
            let _ = writeln!(s, "tau = {}, class = {}", t.value, class_line(c));
        }
        _ => {
            let _ = writeln!(s, "tau: no pole in (0, 1), growth is not exponential");
        }
    }
    if let Some(p) = &d.tau_poly {
        let _ = writeln!(s, "tau polynomial: {p}");
    }
    let _ = writeln!(s, "anti-reciprocal: {}", yes(d.anti_reciprocal));
    if let Some(c) = d.compact {
        let _ = writeln!(
            s,
            "compact: {}, ideal vertices: {} 3-valent, {} 4-valent",
            yes(c),
            d.ideal3_vertices.unwrap_or(0),
            d.ideal4_vertices.unwrap_or(0)
        );
    }
    let _ = writeln!(s, "Euler characteristic F(1) = {}", d.euler_characteristic);
    s
}

pub fn class_line(c: &ClassDoc) -> String {
    if c.salem_vacuous {
        "Pisot (quadratic unit, vacuously Salem)".to_string()
    } else {
        c.kind.clone()
    }
}

pub fn class_detail_text(c: &ClassDoc) -> String {
    let mut s = format!("class = {}\n", class_line(c));
    if let Some(f) = &c.factor {
        let _ = writeln!(s, "non-cyclotomic factor: {f}");
    }
    if !c.cyclotomic.is_empty() {
        let parts: Vec<String> = c
            .cyclotomic
            .iter()
            .map(|&(k, m)| if m == 1 { format!("Phi_{k}") } else { format!("Phi_{k}^{m}") })
            .collect();
        let _ = writeln!(s, "cyclotomic factors: {}", parts.join(" "));
    }
    s
}

pub fn sweep_text(d: &SweepDoc) -> String {
    let label = |n: Option<u32>| n.map_or_else(|| "inf".to_string(), |n| n.to_string());
    let w_n = d.rows.iter().map(|r| label(r.n).len()).chain([3, 1]).max().unwrap_or(3);
    let w_tau = d.rows.iter().chain([&d.limit]).map(|r| r.tau.value.len()).chain([3]).max().unwrap_or(3);
    let mut s = String::new();
    let _ = writeln!(s, "edge {}-{}", d.edge.0, d.edge.1);
    let _ = writeln!(s, "{:>w_n$}  {:<w_tau$}  class", "n", "tau");
    for r in d.rows.iter().chain([&d.limit]) {
        let _ = writeln!(s, "{:>w_n$}  {:<w_tau$}  {}", label(r.n), r.tau.value, class_line(&r.class));
    }
    let _ = writeln!(s, "strictly increasing, below the limit: {}", yes(d.monotone));
    let _ = writeln!(s, "compact members Salem: {}", yes(d.members_salem));
    let _ = writeln!(s, "limit Pisot: {}", yes(d.limit_pisot));
    s
}

pub fn check_json(v: &ValidationReport, a: Option<&AndreevReport>) -> serde_json::Value {
    let conditions: Vec<serde_json::Value> = a
        .map(|a| {
            a.conditions
                .iter()
                .map(|c| {
                    let violations: Vec<serde_json::Value> = c
                        .violations
                        .iter()
                        .map(|w| {
                            serde_json::json!({
                                "faces": w.faces,
                                "vertex": w.vertex,
                                "angle_sum_pi": w.angle_sum.to_string(),
                                "bound_pi": w.bound.to_string(),
                            })
                        })
                        .collect();
                    serde_json::json!({
                        "name": c.condition.name(),
                        "description": c.condition.description(),
                        "checked": c.checked,
                        "passed": c.passed(),
                        "violations": violations,
                    })
                })
                .collect()
        })
        .unwrap_or_default();
    serde_json::json!({
        "valid": v.is_valid(),
        "issues": v.issues.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "vertices": v.vertices,
        "edges": v.edges,
        "faces": v.faces,
        "compact_vertices": v.compact_vertices,
        "ideal3_vertices": v.ideal3_vertices,
        "ideal4_vertices": v.ideal4_vertices,
        "simplex": v.simplex,
        "conditions": conditions,
        "passed": v.is_valid() && a.is_some_and(AndreevReport::passed),
    })
}

pub fn ridges_json(rs: &[RidgeDescriptor]) -> serde_json::Value {
    rs.iter()
        .map(|r| {
            serde_json::json!({
                "edge": [r.edge.0, r.edge.1],
                "type": r.ty.0,
                "canonical": r.ty.canonical().0,
            })
        })
        .collect()
}
