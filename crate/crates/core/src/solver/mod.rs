//! Decomposes each theta product in its family basis and turns the result
//! into a closed formula for the representation numbers.
//!
//! A form is solved by matching coefficients `0..=solve_order` exactly
//! against the family basis, then checking that the combination reproduces
//! the theta product through `verify_order`.

mod table4;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::characters::twisted_sigma3_at_quotient;
use crate::etaq::EtaError;
use crate::formspace::{build_family, published_eisenstein_count, BasisKind, EisensteinSeries, FamilyBasis};
use crate::linalg::{self, LinearError};
use crate::series::{rat, QSeries, Rational};
use crate::theta::{catalog, classify_form, theta_product, Family, FormSignature};

pub use table4::{GoldenRow, TABLE4};

pub const DEFAULT_SOLVE_ORDER: usize = 60;
pub const DEFAULT_VERIFY_ORDER: usize = 360;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("form {0} is outside the three character families")]
    OutOfScopeForm(FormSignature),
    #[error("inconsistent system for {form}: {detail}")]
    InconsistentSystem { form: FormSignature, detail: String },
    #[error("underdetermined system for {form}: {detail}")]
    UnderdeterminedSystem { form: FormSignature, detail: String },
    #[error("formula for {form} gives non-integer value {value} at n = {n}")]
    NonIntegerResult { form: FormSignature, n: u64, value: Rational },
    #[error("n = {n} is past the basis expansion order {order}")]
    BeyondExpansion { n: u64, order: usize },
    #[error("verify order {verify} is below solve order {solve}")]
    BadOrders { solve: usize, verify: usize },
    #[error(transparent)]
    Eta(#[from] EtaError),
}

/// The exact decomposition of one theta product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedFormula {
    pub form: FormSignature,
    pub family: Family,
    /// Coefficients of the Eisenstein series in `eisenstein`.
    pub x: Vec<Rational>,
    pub eisenstein: Vec<EisensteinSeries>,
    /// Coefficients of the cusp forms, by index.
    pub y: Vec<Rational>,
    pub cusp_labels: Vec<String>,
    /// Eisenstein elements of the family basis that were solved for, found
    /// to be zero, and left out of `x`.
    pub pinned_zeros: Vec<String>,
    pub solve_order: usize,
    pub verify_order: usize,
}

impl SolvedFormula {
    pub fn x_labels(&self) -> Vec<String> {
        self.eisenstein.iter().map(EisensteinSeries::label).collect()
    }

    /// `N(1^i,2^j,3^k,6^l; n)` from the formula: twisted divisor sums for the
    /// Eisenstein part and the cusp-form coefficients from `basis`.
    pub fn evaluate(&self, basis: &FamilyBasis, n: u64) -> Result<BigInt, SolveError> {
        assert_eq!(basis.family, self.family, "basis family mismatch");
        if n as usize > basis.order {
            return Err(SolveError::BeyondExpansion { n, order: basis.order });
        }
        let mut total = Rational::zero();
        for (x, e) in self.x.iter().zip(&self.eisenstein) {
            if x.is_zero() {
                continue;
            }
            let value = if n == 0 {
                e.constant_term()
            } else {
                Rational::from_integer(twisted_sigma3_at_quotient(e.psi1, e.psi2, n as i64, e.dilation as i64))
            };
            total += x * value;
        }
        for (y, element) in self.y.iter().zip(basis.cusp_elements()) {
            if !y.is_zero() {
                total += y * element.series.coeff(n as usize).expect("checked against order");
            }
        }
        if !total.is_integer() {
            return Err(SolveError::NonIntegerResult { form: self.form, n, value: total });
        }
        Ok(total.to_integer())
    }

    /// The linear combination as a series over `basis`.
    pub fn combination(&self, basis: &FamilyBasis) -> QSeries {
        let mut acc = QSeries::zero(basis.order);
        for element in &basis.elements {
            let coeff = match &element.kind {
                BasisKind::Eisenstein(e) => self
                    .eisenstein
                    .iter()
                    .position(|x| x == e)
                    .map(|i| self.x[i].clone()),
                BasisKind::Cusp(k) => self.y.get(k - 1).cloned(),
            };
            if let Some(c) = coeff.filter(|c| !c.is_zero()) {
                acc = &acc + &element.series.scale(&c);
            }
        }
        acc
    }
}

/// Holds the three family bases, expanded once to the verification order.
#[derive(Debug, Clone)]
pub struct Solver {
    solve_order: usize,
    verify_order: usize,
    bases: BTreeMap<Family, FamilyBasis>,
}

impl Solver {
    pub fn new(solve_order: usize, verify_order: usize) -> Result<Self, SolveError> {
        if verify_order < solve_order {
            return Err(SolveError::BadOrders { solve: solve_order, verify: verify_order });
        }
        let built: Result<Vec<FamilyBasis>, EtaError> = Family::ALL
            .par_iter()
            .map(|&f| build_family(f, verify_order))
            .collect();
        let bases = built?.into_iter().map(|b| (b.family, b)).collect();
        Ok(Self { solve_order, verify_order, bases })
    }

    /// Solve through `q^60`, verify through `q^360`.
    pub fn standard() -> Result<Self, SolveError> {
        Self::new(DEFAULT_SOLVE_ORDER, DEFAULT_VERIFY_ORDER)
    }

    pub fn solve_order(&self) -> usize {
        self.solve_order
    }

    pub fn verify_order(&self) -> usize {
        self.verify_order
    }

    pub fn basis(&self, family: Family) -> &FamilyBasis {
        &self.bases[&family]
    }

    pub fn solve_form(&self, form: &FormSignature) -> Result<SolvedFormula, SolveError> {
        let family = classify_form(form).ok_or(SolveError::OutOfScopeForm(*form))?;
        let basis = self.basis(family);
        let target = theta_product(form, self.verify_order);

        let rows = self.solve_order + 1;
        let columns: Vec<Vec<Rational>> = basis
            .elements
            .iter()
            .map(|e| e.series.coeffs()[..rows].to_vec())
            .collect();
        let coeffs = linalg::solve_overdetermined(&columns, &target.coeffs()[..rows]).map_err(|e| match e {
            LinearError::Underdetermined { .. } => SolveError::UnderdeterminedSystem { form: *form, detail: e.to_string() },
            LinearError::Inconsistent { .. } => SolveError::InconsistentSystem { form: *form, detail: e.to_string() },
        })?;

        let published = published_eisenstein_count(family);
        let n_eis = basis.eisenstein_count();
        let eisenstein: Vec<EisensteinSeries> = basis.elements[..n_eis]
            .iter()
            .map(|e| match e.kind {
                BasisKind::Eisenstein(s) => s,
                BasisKind::Cusp(_) => unreachable!("Eisenstein elements come first"),
            })
            .collect();
        let mut pinned_zeros = Vec::new();
        for (c, e) in coeffs[published..n_eis].iter().zip(&basis.elements[published..n_eis]) {
            if !c.is_zero() {
                return Err(SolveError::InconsistentSystem {
                    form: *form,
                    detail: format!("coefficient of {} is {c}, expected 0", e.label),
                });
            }
            pinned_zeros.push(e.label.clone());
        }

        let solved = SolvedFormula {
            form: *form,
            family,
            x: coeffs[..published].to_vec(),
            eisenstein: eisenstein[..published].to_vec(),
            y: coeffs[n_eis..].to_vec(),
            cusp_labels: basis.cusp_elements().map(|e| e.label.clone()).collect(),
            pinned_zeros,
            solve_order: self.solve_order,
            verify_order: self.verify_order,
        };

        let residual = &solved.combination(basis) - &target;
        if let Some(n) = residual.valuation() {
            return Err(SolveError::InconsistentSystem {
                form: *form,
                detail: format!("residual is non-zero at q^{n} (verify order {})", self.verify_order),
            });
        }
        Ok(solved)
    }

    /// Every catalog form, in catalog order.
    pub fn solve_all(&self) -> Result<Vec<SolvedFormula>, SolveError> {
        catalog().par_iter().map(|e| self.solve_form(&e.form)).collect()
    }

    pub fn solve_family(&self, family: Family) -> Result<Vec<SolvedFormula>, SolveError> {
        catalog()
            .par_iter()
            .filter(|e| e.family == family)
            .map(|e| self.solve_form(&e.form))
            .collect()
    }

    /// Formula value at `n`, extending the expansion if `n` is past the
    /// verification order.
    pub fn evaluate_formula(&self, sf: &SolvedFormula, n: u64) -> Result<BigInt, SolveError> {
        let basis = self.basis(sf.family);
        if (n as usize) <= basis.order {
            return sf.evaluate(basis, n);
        }
        let wider = build_family(sf.family, n as usize)?;
        sf.evaluate(&wider, n)
    }
}

/// Convenience wrapper around [`Solver::standard`].
pub fn solve_form(form: &FormSignature) -> Result<SolvedFormula, SolveError> {
    Solver::standard()?.solve_form(form)
}

/// A disagreement between a solved formula and a published row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenMismatch {
    pub row: usize,
    pub form: [u8; 4],
    /// e.g. `x3`, `y6`, or `missing` when the form was not solved.
    pub field: String,
    pub expected: Rational,
    pub got: Option<Rational>,
}

impl std::fmt::Display for GoldenMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [i, j, k, l] = self.form;
        match &self.got {
            Some(got) => write!(f, "row {} ({i},{j},{k},{l}) {}: expected {}, got {}", self.row, self.field, self.expected, got),
            None => write!(f, "row {} ({i},{j},{k},{l}): no solved formula", self.row),
        }
    }
}

/// Compares solved χ₅ formulas against published rows, entry by entry.
pub fn compare_with_golden(solved: &[SolvedFormula], golden: &[GoldenRow]) -> Vec<GoldenMismatch> {
    let mut out = Vec::new();
    for row in golden {
        let Some(sf) = solved.iter().find(|s| s.form.exponents() == row.form) else {
            out.push(GoldenMismatch { row: row.number, form: row.form, field: "missing".into(), expected: Rational::zero(), got: None });
            continue;
        };
        let expected = row.x.iter().map(|&(p, q)| ("x", rat(p, q))).chain(row.y.iter().map(|&(p, q)| ("y", rat(p, q))));
        let got = sf.x.iter().chain(&sf.y);
        let mut idx = [0usize; 2];
        for ((name, e), g) in expected.zip(got.map(Some).chain(std::iter::repeat(None))) {
            let slot = if name == "x" { &mut idx[0] } else { &mut idx[1] };
            *slot += 1;
            if g != Some(&e) {
                out.push(GoldenMismatch {
                    row: row.number,
                    form: row.form,
                    field: format!("{name}{slot}"),
                    expected: e,
                    got: g.cloned(),
                });
            }
        }
    }
    out
}
