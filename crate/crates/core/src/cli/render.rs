//! Text, JSON and CSV renderings. Rationals go out as `{num, den}` strings in
//! JSON and as `p/q` in CSV so nothing is rounded on the way out.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::OutputFormat;
use crate::etaq::{EtaQuotient, LigozatReport};
use crate::formspace::FamilyBasis;
use crate::series::{QSeries, Rational};
use crate::solver::SolvedFormula;
use crate::theta::{catalog_lookup, Family, FormSignature};
use crate::verify::VerifyReport;

#[derive(Serialize)]
struct RationalJson {
    num: String,
    den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        Self { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

fn rationals(v: &[Rational]) -> Vec<RationalJson> {
    v.iter().map(RationalJson::from).collect()
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn form_fields(f: &FormSignature) -> String {
    f.exponents().map(|e| e.to_string()).join(",")
}

#[derive(Serialize)]
struct ExpansionJson {
    eta: String,
    level: u64,
    weight: i64,
    leading_exponent: Option<usize>,
    is_modular_form: bool,
    is_cusp_form: bool,
    character_discriminant: i64,
    character: Option<String>,
    violated_conditions: Vec<String>,
    cusp_sums: Vec<(u64, RationalJson)>,
    coeffs: Vec<RationalJson>,
}

pub(super) fn expansion(fmt: OutputFormat, q: &EtaQuotient, report: &LigozatReport, series: &QSeries) -> String {
    match fmt {
        OutputFormat::Text => {
            let mut out = format!("eta quotient: {q}\n{report}\n");
            if let Some(v) = series.valuation() {
                let _ = writeln!(out, "leading term: q^{v}");
            }
            let _ = writeln!(out, "expansion: {series}");
            out
        }
        OutputFormat::Json => json(&ExpansionJson {
            eta: q.to_string(),
            level: report.level,
            weight: report.weight,
            leading_exponent: series.valuation(),
            is_modular_form: report.is_modular_form,
            is_cusp_form: report.is_cusp_form,
            character_discriminant: report.character_discriminant,
            character: report.character.map(|c| c.label().to_string()),
            violated_conditions: report.violated_conditions.iter().map(ToString::to_string).collect(),
            cusp_sums: report.cusp_sums.iter().map(|(d, v)| (*d, v.into())).collect(),
            coeffs: rationals(series.coeffs()),
        }),
        OutputFormat::Csv => {
            let mut out = format!("# eta {q}\n# level {}\n# weight {}\nn,coefficient\n", report.level, report.weight);
            for (n, c) in series.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{n},{c}");
            }
            out
        }
    }
}

#[derive(Serialize)]
struct FormCoeffsJson {
    form: String,
    family: Option<String>,
    coeffs: Vec<String>,
}

pub(super) fn form_coefficients(fmt: OutputFormat, form: &FormSignature, series: &QSeries) -> String {
    let values: Vec<String> = series.coeffs().iter().map(ToString::to_string).collect();
    match fmt {
        OutputFormat::Text => {
            let mut out = String::new();
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "N({}; {n}) = {v}", form_fields(form));
            }
            out
        }
        OutputFormat::Json => json(&FormCoeffsJson {
            form: form_fields(form),
            family: crate::theta::classify_form(form).map(|f| f.label().to_string()),
            coeffs: values,
        }),
        OutputFormat::Csv => {
            let mut out = format!("# form {}\nn,count\n", form_fields(form));
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{v}");
            }
            out
        }
    }
}

#[derive(Serialize)]
struct ElementJson {
    kind: &'static str,
    label: String,
    coeffs: Vec<RationalJson>,
}

fn elements_json(basis: &FamilyBasis, terms: usize) -> Vec<ElementJson> {
    basis
        .elements
        .iter()
        .map(|e| {
            let c = e.series.coeffs();
            ElementJson { kind: e.kind.name(), label: e.label.clone(), coeffs: rationals(&c[..terms.min(c.len())]) }
        })
        .collect()
}

#[derive(Serialize)]
struct BasisJson {
    family: String,
    order: usize,
    elements: Vec<ElementJson>,
}

pub(super) fn basis(fmt: OutputFormat, basis: &FamilyBasis) -> String {
    match fmt {
        OutputFormat::Text => {
            let mut out = format!("basis of {} ({} elements)\n", basis.family, basis.len());
            for e in &basis.elements {
                let _ = writeln!(out, "{} [{}]: {}", e.label, e.kind.name(), e.series);
            }
            out
        }
        OutputFormat::Json => json(&BasisJson {
            family: basis.family.label().to_string(),
            order: basis.order,
            elements: elements_json(basis, basis.order + 1),
        }),
        OutputFormat::Csv => {
            let mut out = format!("# family {}\nn,{}\n", basis.family, basis.labels().join(","));
            for n in 0..=basis.order {
                let row: Vec<String> = basis.elements.iter().map(|e| e.series.coeffs()[n].to_string()).collect();
                let _ = writeln!(out, "{n},{}", row.join(","));
            }
            out
        }
    }
}

fn source(family: Family) -> &'static str {
    match family {
        Family::Chi5 => "published",
        Family::Chi4 | Family::Chi6 => "derived",
    }
}

#[derive(Serialize)]
struct RowJson {
    row: Option<usize>,
    form: String,
    x: Vec<RationalJson>,
    y: Vec<RationalJson>,
}

#[derive(Serialize)]
struct TableJson {
    family: String,
    source: &'static str,
    solve_order: usize,
    verify_order: usize,
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    pinned_zeros: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<ElementJson>>,
    rows: Vec<RowJson>,
}

fn table_json(solved: &[SolvedFormula], rows: &[Option<usize>], elements: Option<Vec<ElementJson>>) -> TableJson {
    let first = &solved[0];
    TableJson {
        family: first.family.label().to_string(),
        source: source(first.family),
        solve_order: first.solve_order,
        verify_order: first.verify_order,
        x_labels: first.x_labels(),
        y_labels: first.cusp_labels.clone(),
        pinned_zeros: first.pinned_zeros.clone(),
        elements,
        rows: solved
            .iter()
            .zip(rows)
            .map(|(s, r)| RowJson { row: *r, form: form_fields(&s.form), x: rationals(&s.x), y: rationals(&s.y) })
            .collect(),
    }
}

fn table_csv(solved: &[SolvedFormula], rows: &[Option<usize>]) -> String {
    let first = &solved[0];
    let mut out = String::new();
    let _ = writeln!(out, "# family {} ({})", first.family, source(first.family));
    let _ = writeln!(out, "# solve_order {} verify_order {}", first.solve_order, first.verify_order);
    for (i, l) in first.x_labels().iter().enumerate() {
        let _ = writeln!(out, "# x{} = {l}", i + 1);
    }
    for (i, l) in first.cusp_labels.iter().enumerate() {
        let _ = writeln!(out, "# y{} = {l}", i + 1);
    }
    for l in &first.pinned_zeros {
        let _ = writeln!(out, "# pinned to zero: {l}");
    }
    let xs = (1..=first.x.len()).map(|i| format!("x{i}"));
    let ys = (1..=first.y.len()).map(|i| format!("y{i}"));
    let header: Vec<String> = ["row", "i", "j", "k", "l"].map(String::from).into_iter().chain(xs).chain(ys).collect();
    let _ = writeln!(out, "{}", header.join(","));
    for (s, r) in solved.iter().zip(rows) {
        let row = r.map(|r| r.to_string()).unwrap_or_default();
        let values: Vec<String> = s.x.iter().chain(&s.y).map(ToString::to_string).collect();
        let _ = writeln!(out, "{row},{},{}", form_fields(&s.form), values.join(","));
    }
    out
}

/// `Θ = Σ x·E + Σ y·cusp`, skipping zero terms.
fn formula_text(s: &SolvedFormula) -> String {
    let labels = s.x_labels().into_iter().chain(s.cusp_labels.iter().cloned());
    let mut out = String::new();
    for (c, label) in s.x.iter().chain(&s.y).zip(labels) {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let _ = write!(out, "{}*{label}", c.abs());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn solved_text(solved: &[SolvedFormula], rows: &[Option<usize>]) -> String {
    let mut out = String::new();
    for (s, r) in solved.iter().zip(rows) {
        let row = r.map(|r| format!(" row {r}")).unwrap_or_default();
        let _ = writeln!(out, "{} {}{row} ({}):", s.form, s.family, source(s.family));
        let _ = writeln!(out, "  theta = {}", formula_text(s));
        for (i, (x, l)) in s.x.iter().zip(s.x_labels()).enumerate() {
            let _ = writeln!(out, "  x{} = {x}  [{l}]", i + 1);
        }
        for (i, (y, l)) in s.y.iter().zip(&s.cusp_labels).enumerate() {
            let _ = writeln!(out, "  y{} = {y}  [{l}]", i + 1);
        }
        if !s.pinned_zeros.is_empty() {
            let _ = writeln!(out, "  zero: {}", s.pinned_zeros.join(", "));
        }
    }
    out
}

pub(super) fn solved(fmt: OutputFormat, solved: &[SolvedFormula], row: Option<usize>) -> String {
    let rows = vec![row; solved.len()];
    match fmt {
        OutputFormat::Text => solved_text(solved, &rows),
        OutputFormat::Json => json(&table_json(solved, &rows, None)),
        OutputFormat::Csv => table_csv(solved, &rows),
    }
}

pub(super) fn table(fmt: OutputFormat, basis: &FamilyBasis, solved: &[SolvedFormula], terms: usize) -> String {
    let rows: Vec<Option<usize>> = solved.iter().map(|s| catalog_lookup(&s.form).map(|e| e.row)).collect();
    match fmt {
        OutputFormat::Text => solved_text(solved, &rows),
        OutputFormat::Json => json(&table_json(solved, &rows, Some(elements_json(basis, terms)))),
        OutputFormat::Csv => table_csv(solved, &rows),
    }
}

#[derive(Serialize)]
struct CountJson {
    form: String,
    n: u64,
    results: Vec<MethodJson>,
    consistent: bool,
}

#[derive(Serialize)]
struct MethodJson {
    method: &'static str,
    value: String,
}

pub(super) fn count(fmt: OutputFormat, form: &FormSignature, n: u64, results: &[(&'static str, BigInt)], consistent: bool) -> String {
    match fmt {
        OutputFormat::Text => {
            let mut out = String::new();
            if let ([(_, v)], true) = (results, consistent) {
                let _ = writeln!(out, "{v}");
                return out;
            }
            for (m, v) in results {
                let _ = writeln!(out, "{m}: {v}");
            }
            if consistent {
                let _ = writeln!(out, "consistent: N({}; {n}) = {}", form_fields(form), results[0].1);
            } else {
                let _ = writeln!(out, "DISAGREEMENT for N({}; {n})", form_fields(form));
            }
            out
        }
        OutputFormat::Json => json(&CountJson {
            form: form_fields(form),
            n,
            results: results.iter().map(|(m, v)| MethodJson { method: m, value: v.to_string() }).collect(),
            consistent,
        }),
        OutputFormat::Csv => {
            let mut out = String::from("method,value\n");
            for (m, v) in results {
                let _ = writeln!(out, "{m},{v}");
            }
            out
        }
    }
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    passed: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    summary: String,
    checks: Vec<CheckJson<'a>>,
    failures: &'a [String],
}

pub(super) fn verify_report(fmt: OutputFormat, report: &VerifyReport) -> String {
    match fmt {
        OutputFormat::Text => format!("{report}\n"),
        OutputFormat::Json => json(&VerifyJson {
            passed: report.passed(),
            summary: report.summary(),
            checks: report
                .checks
                .iter()
                .map(|c| CheckJson { name: &c.name, passed: c.passed, detail: &c.detail })
                .collect(),
            failures: &report.failures,
        }),
        OutputFormat::Csv => {
            let mut out = String::from("check,passed,detail\n");
            for c in &report.checks {
                let _ = writeln!(out, "{},{},\"{}\"", c.name, c.passed, c.detail.replace('"', "\"\""));
            }
            out
        }
    }
}
