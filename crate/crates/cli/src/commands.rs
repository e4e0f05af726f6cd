use std::path::Path;

use hypgrowth_core::coxeter::{steinberg_growth, steinberg_sum, tits_bfs_sphere_sizes_with_limit, CoxeterMatrix};
use hypgrowth_core::growth3d::{
    assemble_sweep, classify_growth_rate, growth_with_method, sweep_limit, sweep_row, virgin_form, GrowthMethod,
};
use hypgrowth_core::polyhedron::{
    andreev_check, contract_ridge, find_ridges, gen_cube, gen_dodecahedron, gen_ideal3_dodecahedron,
    gen_lambert_cube, gen_loebell, gen_loebell_ideal, gen_prism, insert_edge, loebell_vertical_edges, validate,
    CombPolyhedron, InsertMode, DODECAHEDRON_MARKED_EDGE, IDEAL3_VERTEX, LAMBERT_EDGES,
};
use hypgrowth_core::roots::{classify, growth_rate, real_roots, RootError};
use hypgrowth_core::IntPoly;
use rayon::prelude::*;
use serde_json::json;

use crate::args::{Cli, Command, Family, Format, Method};
use crate::error::CliError;
use crate::files::{parse_edge, polyhedron_to_value, pretty, read_input, write_text, Input};
use crate::report::{
    check_json, class_detail_text, class_doc, class_line, growth_doc, growth_text, interval_doc, rat_doc, ridges_json,
    sweep_doc, sweep_text, GrowthDoc, RatDoc,
};

/// What a subcommand prints, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn emit(format: Format, text: String, value: &serde_json::Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => pretty(value),
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let (digits, format) = (cli.digits, cli.format);
    match &cli.command {
        Command::Growth { file, method } => {
            let doc = growth_of(&read_input(file)?, *method, digits)?;
            Ok(Outcome::ok(emit(format, growth_text(&doc), &to_value(&doc))))
        }
        Command::Rate { file } => {
            let doc = growth_of(&read_input(file)?, Method::Auto, digits)?;
            let text = match (&doc.tau, &doc.class) {
                (Some(t), Some(c)) => format!("tau = {}, class = {}\n", t.value, class_line(c)),
                _ => "tau: no pole in (0, 1), growth is not exponential\n".to_string(),
            };
            Ok(Outcome::ok(emit(format, text, &json!({ "tau": doc.tau, "class": doc.class }))))
        }
        Command::ClassifyPoly { coeffs } => classify_poly(coeffs, digits, format),
        Command::Check { file } => check(&read_input(file)?.into_polyhedron()?, format),
        Command::Ridges { file } => {
            let p = read_input(file)?.into_polyhedron()?;
            let rs = find_ridges(&p)?;
            let text: String = rs.iter().map(|r| format!("{r}\n")).collect();
            let text = if text.is_empty() { "no ridges\n".to_string() } else { text };
            Ok(Outcome::ok(emit(format, text, &ridges_json(&rs))))
        }
        Command::Contract { file, edge, output } => {
            let p = read_input(file)?.into_polyhedron()?;
            let e = parse_edge(edge)?;
            let q = contract_ridge(&p, e)?;
            let summary = format!("contracted {}-{} to ideal vertex {}", e.0, e.1, e.0);
            save(&q, output.as_deref(), summary, format)
        }
        Command::Insert { file, vertex, mode, label, output } => {
            let p = read_input(file)?.into_polyhedron()?;
            let mode = InsertMode::from_index(*mode).ok_or_else(|| CliError::Usage("mode must be 1 or 2".into()))?;
            let q = insert_edge(&p, *vertex, mode, *label)?;
            let summary = format!("inserted an edge labelled {label} at vertex {vertex}");
            save(&q, output.as_deref(), summary, format)
        }
        Command::Sweep { file, edge, from, to, jobs } => {
            let p = read_input(file)?.into_polyhedron()?;
            sweep(&p, &parse_edge(edge)?, *from, *to, *jobs, digits, format)
        }
        Command::Gen { family, output } => generate(*family, output.as_deref(), format),
        Command::Oracle { file, depth, limit } => oracle(&read_input(file)?.coxeter_matrix(), *depth, *limit, format),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("plain data")
}

pub fn growth_of(input: &Input, method: Method, digits: u32) -> Result<GrowthDoc, CliError> {
    match input {
        Input::Polyhedron(p) => {
            let method = match method {
                Method::Auto => GrowthMethod::Auto,
                Method::Steinberg => GrowthMethod::Steinberg,
                Method::Parry => GrowthMethod::Parry,
            };
            Ok(growth_doc(&growth_with_method(p, method, digits)?, digits))
        }
        Input::Matrix(m) => {
            if method == Method::Parry {
                return Err(CliError::Usage("Parry's formula needs a polyhedron".into()));
            }
            matrix_growth(m, digits)
        }
    }
}

fn matrix_growth(m: &CoxeterMatrix, digits: u32) -> Result<GrowthDoc, CliError> {
    let big_f = steinberg_sum(m);
    let f = steinberg_growth(m);
    let (vnum, vden) = virgin_form(m, &big_f)?;
    let (tau, tau_poly, class) = match growth_rate(&f, digits) {
        Ok(iv) => {
            let (poly, class) = classify_growth_rate(&f);
            (Some(interval_doc(&iv, digits)), Some(poly.to_string()), Some(class_doc(&class)))
        }
        Err(RootError::NoPoleInUnitInterval) => (None, None, None),
        Err(e) => return Err(e.into()),
    };
    let euler = big_f
        .eval(&num_rational::BigRational::from_integer(1.into()))
        .ok_or_else(|| CliError::Domain("F has a pole at 1".into()))?;
    Ok(GrowthDoc {
        f: rat_doc(&f),
        big_f: rat_doc(&big_f),
        virgin: RatDoc { num: vnum.to_string(), den: vden.to_string() },
        tau,
        tau_poly,
        class,
        anti_reciprocal: f.is_anti_reciprocal(),
        euler_characteristic: euler.to_string(),
        compact: None,
        ideal3_vertices: None,
        ideal4_vertices: None,
    })
}

fn classify_poly(coeffs: &str, digits: u32, format: Format) -> Result<Outcome, CliError> {
    let p: IntPoly = coeffs.parse()?;
    let class = classify(&p)?;
    let doc = class_doc(&class);
    let root = class
        .salem_or_pisot_factor
        .as_ref()
        .filter(|f| !f.is_constant())
        .and_then(|f| real_roots(f, digits).pop())
        .map(|iv| interval_doc(&iv, digits));
    let mut text = format!("polynomial: {p}\n{}", class_detail_text(&doc));
    if let Some(r) = &root {
        text.push_str(&format!("largest real root: {}\n", r.value));
    }
    let mut value = to_value(&doc);
    value["largest_root"] = to_value(&root);
    Ok(Outcome::ok(emit(format, text, &value)))
}

fn check(p: &CombPolyhedron, format: Format) -> Result<Outcome, CliError> {
    let v = validate(p);
    let a = if v.is_valid() { Some(andreev_check(p)?) } else { None };
    let passed = a.as_ref().is_some_and(|a| a.passed());
    let mut text = v.to_string();
    if let Some(a) = &a {
        text.push_str(&a.to_string());
    }
    text.push_str(if passed { "result: pass\n" } else { "result: FAIL\n" });
    let stdout = emit(format, text, &check_json(&v, a.as_ref()));
    Ok(Outcome { stdout, code: if passed { 0 } else { 2 } })
}

fn save(p: &CombPolyhedron, out: Option<&Path>, summary: String, format: Format) -> Result<Outcome, CliError> {
    let json = pretty(&polyhedron_to_value(p));
    match out {
        Some(path) => {
            write_text(path, &json)?;
            let text = format!("{summary}; wrote {}\n", path.display());
            let value = json!({ "written": path.display().to_string(), "summary": summary });
            Ok(Outcome::ok(emit(format, text, &value)))
        }
        None => Ok(Outcome::ok(json)),
    }
}

fn sweep(
    p: &CombPolyhedron,
    e: &(u32, u32),
    from: u32,
    to: u32,
    jobs: u32,
    digits: u32,
    format: Format,
) -> Result<Outcome, CliError> {
    if to < from {
        return Err(CliError::Usage(format!("empty range {from}..={to}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .map_err(|err| CliError::Internal(err.to_string()))?;
    let rows = pool.install(|| (from..=to).into_par_iter().map(|n| sweep_row(p, *e, n, digits)).collect::<Result<Vec<_>, _>>())?;
    let limit = sweep_limit(p, *e, digits)?;
    let table = assemble_sweep(*e, rows, limit)?;
    let doc = sweep_doc(&table, digits);
    Ok(Outcome::ok(emit(format, sweep_text(&doc), &to_value(&doc))))
}

fn generate(family: Family, out: Option<&Path>, format: Format) -> Result<Outcome, CliError> {
    let edges = |es: &[(u32, u32)]| es.iter().map(|e| format!("{}-{}", e.0, e.1)).collect::<Vec<_>>().join(", ");
    let (p, note) = match family {
        Family::Dodecahedron(a) => {
            let (x, y) = DODECAHEDRON_MARKED_EDGE;
            (gen_dodecahedron(a.m)?, format!("dodecahedron, edge {x}-{y} labelled {}", a.m))
        }
        Family::Loebell(a) => (gen_loebell(a.n)?, format!("L({}), vertical ridges {}", a.n, edges(&loebell_vertical_edges(a.n)))),
        Family::LoebellIdeal(a) => (gen_loebell_ideal(a.n)?, format!("L({}) with vertical ridges contracted", a.n)),
        Family::Lambert(a) => (
            gen_lambert_cube(a.p, a.q, a.r)?,
            format!("Lambert cube, essential edges {}", edges(&LAMBERT_EDGES)),
        ),
        Family::Ideal3Dodecahedron => (gen_ideal3_dodecahedron(), format!("dodecahedron, ideal vertex {IDEAL3_VERTEX}")),
        Family::Cube(a) => (gen_cube(a.m), format!("cube, labels {}", a.m)),
        Family::Prism(a) => (gen_prism(a.k, a.m)?, format!("{}-gonal prism, labels {}", a.k, a.m)),
    };
    save(&p, out, note, format)
}

fn oracle(m: &CoxeterMatrix, depth: usize, limit: usize, format: Format) -> Result<Outcome, CliError> {
    let bfs = tits_bfs_sphere_sizes_with_limit(m, depth, limit)?;
    let series = steinberg_growth(m).taylor_coeffs(depth + 1)?;
    let mut text = format!("{:>5}  {:>14}  {:>14}\n", "k", "words", "series");
    let mut rows = Vec::new();
    let mut agree = true;
    for (k, (a, b)) in bfs.iter().zip(&series).enumerate() {
        let same = num_bigint::BigInt::from(*a) == *b;
        agree &= same;
        text.push_str(&format!("{k:>5}  {a:>14}  {b:>14}{}\n", if same { "" } else { "  MISMATCH" }));
        rows.push(json!({ "k": k, "words": a, "series": b.to_string(), "matches": same }));
    }
    text.push_str(if agree { "agree\n" } else { "DISAGREE\n" });
    let stdout = emit(format, text, &json!({ "depth": depth, "rows": rows, "agree": agree }));
    Ok(Outcome { stdout, code: if agree { 0 } else { 3 } })
}
