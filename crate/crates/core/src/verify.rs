//! End-to-end verification sweep: basis sanity, published-table comparison,
//! and formula values against the brute-force oracles.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::formspace::{cusp_quotients, independence_rank};
use crate::oracle::{count_by_convolution, count_by_enumeration, CountQuery};
use crate::solver::{compare_with_golden, GoldenRow, SolveError, SolvedFormula, Solver};
use crate::theta::{catalog, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Formulas are compared with the convolution oracle for `1..=nmax`.
    pub nmax: usize,
    /// How many catalog forms also go through lattice enumeration.
    pub enumeration_forms: usize,
    pub enumeration_nmax: usize,
    /// Order at which basis ranks are measured.
    pub rank_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { nmax: 100, enumeration_forms: 20, enumeration_nmax: 60, rank_order: 120 }
    }
}

/// A single named check and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A formula value that disagreed with an oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueMismatch {
    pub form: String,
    pub n: u64,
    pub method: &'static str,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for ValueMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "form {} n={} ({}): expected {}, got {}", self.form, self.n, self.method, self.expected, self.got)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub failures: Vec<String>,
    pub forms_verified: usize,
    pub forms_total: usize,
    pub nmax: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn summary(&self) -> String {
        format!("{}/{} forms verified to n={}", self.forms_verified, self.forms_total, self.nmax)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        for m in &self.failures {
            writeln!(f, "  failure: {m}")?;
        }
        write!(f, "{}", self.summary())
    }
}

/// Deterministic spread of `count` catalog indices.
pub fn sample_indices(count: usize) -> Vec<usize> {
    let total = catalog().len();
    (0..count.min(total)).map(|k| (k * 37 + 5) % total).collect()
}

pub fn ligozat_checks() -> Check {
    let mut bad = Vec::new();
    let mut total = 0;
    for family in Family::ALL {
        for (idx, q) in cusp_quotients(family).into_iter().enumerate() {
            total += 1;
            let ok = match q.ligozat_check() {
                Ok(r) => r.is_cusp_form && r.weight == 4 && r.character_discriminant == family.character().discriminant(),
                Err(_) => false,
            };
            if !ok {
                bad.push(format!("{}{}", crate::formspace::cusp_prefix(family), idx + 1));
            }
        }
    }
    Check {
        name: "ligozat".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{total}/{total} eta quotients are weight-4 cusp forms with the expected character")
        } else {
            format!("failed: {}", bad.join(", "))
        },
    }
}

pub fn rank_checks(solver: &Solver, order: usize) -> Vec<Check> {
    Family::ALL
        .iter()
        .map(|&family| {
            let basis = solver.basis(family);
            let order = order.min(basis.order);
            let cusps: Vec<_> = basis.cusp_elements().cloned().collect();
            let cusp_rank = independence_rank(&cusps, order);
            let full_rank = independence_rank(&basis.elements, order);
            Check {
                name: format!("rank {family}"),
                passed: cusp_rank == cusps.len() && full_rank == basis.len(),
                detail: format!(
                    "cusp rank {cusp_rank}/{}, full rank {full_rank}/{} at order {order}",
                    cusps.len(),
                    basis.len()
                ),
            }
        })
        .collect()
}

/// Formula values against the convolution oracle for `1..=nmax`.
pub fn formula_mismatches(solver: &Solver, sf: &SolvedFormula, nmax: usize) -> Result<Vec<ValueMismatch>, SolveError> {
    let counts = count_by_convolution(&sf.form, nmax);
    let mut out = Vec::new();
    for (n, &expected) in counts.iter().enumerate().skip(1) {
        let got = solver.evaluate_formula(sf, n as u64)?;
        if got != BigInt::from(expected) {
            out.push(ValueMismatch {
                form: sf.form.to_string(),
                n: n as u64,
                method: "convolution",
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }
    Ok(out)
}

/// Runs the full sweep. Internal inconsistencies (a failed solve or a
/// non-integral formula value) are returned as errors; disagreements are
/// collected in the report.
pub fn run(solver: &Solver, config: &VerifyConfig, golden: &[GoldenRow]) -> Result<VerifyReport, SolveError> {
    let mut checks = vec![ligozat_checks()];
    checks.extend(rank_checks(solver, config.rank_order));

    let solved = solver.solve_all()?;
    let chi5: Vec<SolvedFormula> = solved.iter().filter(|s| s.family == Family::Chi5).cloned().collect();
    let golden_mismatches = compare_with_golden(&chi5, golden);
    let mut failures: Vec<String> = golden_mismatches.iter().map(|m| format!("published table {m}")).collect();
    checks.push(Check {
        name: "published chi5 table".into(),
        passed: golden_mismatches.is_empty(),
        detail: format!("{}/{} rows match", golden.len() - distinct_rows(&golden_mismatches), golden.len()),
    });

    let per_form: Vec<Result<Vec<ValueMismatch>, SolveError>> = solved
        .par_iter()
        .map(|sf| formula_mismatches(solver, sf, config.nmax))
        .collect();
    let mut forms_verified = 0;
    for r in per_form {
        let mismatches = r?;
        if mismatches.is_empty() {
            forms_verified += 1;
        }
        failures.extend(mismatches.iter().map(ToString::to_string));
    }
    checks.push(Check {
        name: "formula vs convolution".into(),
        passed: forms_verified == solved.len(),
        detail: format!("{forms_verified}/{} forms agree for 1 <= n <= {}", solved.len(), config.nmax),
    });

    let enum_nmax = config.enumeration_nmax.min(config.nmax);
    let sample = sample_indices(config.enumeration_forms);
    let enum_failures: Vec<ValueMismatch> = sample
        .par_iter()
        .flat_map_iter(|&idx| {
            let sf = &solved[idx];
            (1..=enum_nmax as u64).filter_map(move |n| {
                let expected = match count_by_enumeration(&CountQuery::for_form(&sf.form, n)) {
                    Ok(c) => c.to_string(),
                    Err(e) => format!("error: {e}"),
                };
                let got = match solver.evaluate_formula(sf, n) {
                    Ok(v) => v.to_string(),
                    Err(e) => format!("error: {e}"),
                };
                (got != expected).then(|| ValueMismatch {
                    form: sf.form.to_string(),
                    n,
                    method: "enumeration",
                    expected,
                    got,
                })
            })
        })
        .collect();
    checks.push(Check {
        name: "formula vs enumeration".into(),
        passed: enum_failures.is_empty(),
        detail: format!("{} sampled forms, 1 <= n <= {enum_nmax}", sample.len()),
    });
    failures.extend(enum_failures.iter().map(ToString::to_string));

    Ok(VerifyReport { checks, failures, forms_verified, forms_total: solved.len(), nmax: config.nmax })
}

fn distinct_rows(m: &[crate::solver::GoldenMismatch]) -> usize {
    let mut rows: Vec<usize> = m.iter().map(|x| x.row).collect();
    rows.dedup();
    rows.len()
}
