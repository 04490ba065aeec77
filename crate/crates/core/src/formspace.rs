//! Bases of `M₄(Γ₀(24), χ)` for χ ∈ {χ₄, χ₅, χ₆}: weight-4 Eisenstein series
//! built from twisted divisor sums, plus the eta-quotient cusp forms
//! `A₁..A₁₀`, `B₁..B₈`, `C₁..C₁₀`.
//!
//! The order of elements inside a family is fixed and is the meaning of
//! every coefficient vector this crate emits: Eisenstein series first, then
//! cusp forms by index. For χ₅ the six Eisenstein series used by the
//! published decomposition come first, followed by `E(χ₂,χ₃)(q²)` and
//! `E(χ₅,χ₀)(q²)`, which the solver is expected to find unused.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::characters::{twisted_sigma3, DirichletChar};
use crate::etaq::{EtaError, EtaQuotient};
use crate::linalg;
use crate::series::{rat, QSeries, Rational};
use crate::theta::Family;

use DirichletChar::*;

/// Level of every quotient in the cusp bases.
pub const LEVEL: u64 = 24;

/// The ten `(ψ₁, ψ₂)` pairs for which an Eisenstein series is defined here.
pub const EISENSTEIN_PAIRS: [(DirichletChar, DirichletChar); 10] = [
    (Chi0, Chi4),
    (Chi0, Chi5),
    (Chi0, Chi6),
    (Chi1, Chi3),
    (Chi2, Chi3),
    (Chi3, Chi1),
    (Chi3, Chi2),
    (Chi4, Chi0),
    (Chi5, Chi0),
    (Chi6, Chi0),
];

/// `E_{4,ψ₁,ψ₂}(q^t) = c₀ + Σ_{n≥1} σ_(3,ψ₁,ψ₂)(n) q^{tn}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EisensteinSeries {
    pub psi1: DirichletChar,
    pub psi2: DirichletChar,
    pub dilation: usize,
}

impl EisensteinSeries {
    /// `None` unless `(psi1, psi2)` is one of [`EISENSTEIN_PAIRS`] and `t >= 1`.
    pub fn new(psi1: DirichletChar, psi2: DirichletChar, dilation: usize) -> Option<Self> {
        (dilation >= 1 && EISENSTEIN_PAIRS.contains(&(psi1, psi2)))
            .then_some(Self { psi1, psi2, dilation })
    }

    pub fn constant_term(&self) -> Rational {
        match (self.psi1, self.psi2) {
            (Chi0, Chi4) => rat(11, 2),
            (Chi0, Chi5) => rat(23, 1),
            (Chi0, Chi6) => rat(261, 1),
            _ => Rational::zero(),
        }
    }

    /// Coefficient of `q^n`: `σ(n/t)`, zero when `t ∤ n`.
    pub fn coefficient(&self, n: u64) -> Rational {
        if n == 0 {
            return self.constant_term();
        }
        let t = self.dilation as u64;
        if !n.is_multiple_of(t) {
            return Rational::zero();
        }
        Rational::from_integer(twisted_sigma3(self.psi1, self.psi2, (n / t) as i64))
    }

    pub fn expand(&self, order: usize) -> QSeries {
        let mut c = vec![Rational::zero(); order + 1];
        c[0] = self.constant_term();
        let t = self.dilation;
        for m in 1..=order / t {
            c[m * t] = Rational::from_integer(twisted_sigma3(self.psi1, self.psi2, m as i64));
        }
        QSeries::new(c)
    }

    pub fn label(&self) -> String {
        match self.dilation {
            1 => format!("E4[{},{}](q)", self.psi1, self.psi2),
            t => format!("E4[{},{}](q^{t})", self.psi1, self.psi2),
        }
    }
}

impl fmt::Display for EisensteinSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Eisenstein part of each family's basis, in the fixed order.
pub fn eisenstein_elements(family: Family) -> Vec<EisensteinSeries> {
    let list: &[(DirichletChar, DirichletChar, usize)] = match family {
        Family::Chi4 => &[(Chi0, Chi4, 1), (Chi4, Chi0, 1), (Chi0, Chi4, 3), (Chi4, Chi0, 3)],
        Family::Chi5 => &[
            (Chi0, Chi5, 1),
            (Chi2, Chi3, 1),
            (Chi3, Chi2, 1),
            (Chi5, Chi0, 1),
            (Chi0, Chi5, 2),
            (Chi3, Chi2, 2),
            (Chi2, Chi3, 2),
            (Chi5, Chi0, 2),
        ],
        Family::Chi6 => &[(Chi0, Chi6, 1), (Chi1, Chi3, 1), (Chi3, Chi1, 1), (Chi6, Chi0, 1)],
    };
    list.iter()
        .map(|&(a, b, t)| EisensteinSeries::new(a, b, t).expect("listed pairs are valid"))
        .collect()
}

/// How many of a family's Eisenstein elements appear in the published
/// decomposition; the remainder are expected to receive zero coefficients.
pub fn published_eisenstein_count(family: Family) -> usize {
    match family {
        Family::Chi4 | Family::Chi6 => 4,
        Family::Chi5 => 6,
    }
}

pub fn cusp_prefix(family: Family) -> char {
    match family {
        Family::Chi4 => 'A',
        Family::Chi5 => 'B',
        Family::Chi6 => 'C',
    }
}

type Exps = &'static [(u64, i64)];

const A_QUOTIENTS: [Exps; 10] = [
    &[(3, 2), (4, 2), (6, 5), (8, 2), (12, -3)],
    &[(3, 2), (4, 5), (6, 1), (24, 1), (8, -1)],
    &[(2, 5), (3, 1), (12, 1), (24, 2), (1, -1)],
    &[(3, 2), (6, 1), (8, 4), (12, 1), (24, 2), (4, -2)],
    &[(3, 2), (4, 1), (8, 1), (12, 4), (24, 3), (6, -3)],
    &[(3, 2), (6, 1), (24, 6), (12, -1)],
    &[(3, 2), (4, 3), (12, 2), (24, 7), (6, -3), (8, -3)],
    &[(2, 5), (3, 1), (12, 3), (24, 8), (1, -1), (4, -2), (6, -4), (8, -2)],
    &[(3, 2), (4, 6), (12, 5), (6, -3), (24, -2)],
    &[(4, 2), (6, 7), (8, 2), (24, 4), (3, -2), (12, -5)],
];

const B_QUOTIENTS: [Exps; 8] = [
    &[(3, 4), (6, 2), (8, 3), (24, -1)],
    &[(6, 4), (8, 2), (12, 5), (4, -1), (24, -2)],
    &[(3, 4), (4, 2), (6, 2), (24, 3), (8, -1), (12, -2)],
    &[(6, 4), (8, 3), (24, 3), (12, -2)],
    &[(4, 3), (12, 1), (24, 4)],
    &[(4, 2), (6, 4), (24, 7), (8, -1), (12, -4)],
    &[(4, 5), (24, 8), (8, -4), (12, -1)],
    &[(2, 4), (24, 7), (8, -1), (12, -2)],
];

const C_QUOTIENTS: [Exps; 10] = [
    &[(6, 7), (8, 3), (12, 3), (3, -2), (24, -3)],
    &[(3, 2), (4, 7), (12, 4), (6, -3), (8, -2)],
    &[(3, 2), (6, 1), (8, 6), (12, 2), (4, -3)],
    &[(3, 2), (8, 3), (12, 5), (24, 1), (6, -3)],
    &[(3, 2), (6, 1), (8, 2), (24, 4), (4, -1)],
    &[(3, 2), (4, 2), (12, 3), (24, 5), (6, -3), (8, -1)],
    &[(3, 2), (4, 1), (6, 1), (24, 8), (8, -2), (12, -2)],
    &[(1, 1), (6, 1), (12, 1), (24, 8), (3, -1), (8, -2)],
    &[(2, 2), (3, 6), (4, 1), (8, 2), (6, -3)],
    &[(3, 2), (4, 3), (6, 5), (24, 2), (12, -4)],
];

/// The cusp-form eta quotients of a family at level 24, by index.
pub fn cusp_quotients(family: Family) -> Vec<EtaQuotient> {
    let table: &[Exps] = match family {
        Family::Chi4 => &A_QUOTIENTS,
        Family::Chi5 => &B_QUOTIENTS,
        Family::Chi6 => &C_QUOTIENTS,
    };
    table
        .iter()
        .map(|e| EtaQuotient::new(LEVEL, e.iter().copied()).expect("basis quotients are well formed"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisKind {
    Eisenstein(EisensteinSeries),
    /// 1-based index into the family's cusp quotients.
    Cusp(usize),
}

impl BasisKind {
    pub fn name(&self) -> &'static str {
        match self {
            BasisKind::Eisenstein(_) => "eisenstein",
            BasisKind::Cusp(_) => "cusp",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub family: Family,
    pub kind: BasisKind,
    pub label: String,
    pub series: QSeries,
}

/// A family's full basis expanded to a common order.
#[derive(Debug, Clone)]
pub struct FamilyBasis {
    pub family: Family,
    pub order: usize,
    pub elements: Vec<BasisElement>,
}

impl FamilyBasis {
    pub fn eisenstein_count(&self) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(e.kind, BasisKind::Eisenstein(_)))
            .count()
    }

    pub fn cusp_elements(&self) -> impl Iterator<Item = &BasisElement> {
        self.elements.iter().filter(|e| matches!(e.kind, BasisKind::Cusp(_)))
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.label.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Expands every basis element of `family` through `q^order`.
pub fn build_family(family: Family, order: usize) -> Result<FamilyBasis, EtaError> {
    let mut elements: Vec<BasisElement> = eisenstein_elements(family)
        .into_iter()
        .map(|e| BasisElement {
            family,
            label: e.label(),
            series: e.expand(order),
            kind: BasisKind::Eisenstein(e),
        })
        .collect();
    let prefix = cusp_prefix(family);
    let cusps: Result<Vec<BasisElement>, EtaError> = cusp_quotients(family)
        .par_iter()
        .enumerate()
        .map(|(idx, f)| {
            Ok(BasisElement {
                family,
                kind: BasisKind::Cusp(idx + 1),
                label: format!("{prefix}{}", idx + 1),
                series: f.expand(order)?,
            })
        })
        .collect();
    elements.extend(cusps?);
    Ok(FamilyBasis { family, order, elements })
}

/// Rank over ℚ of the matrix of coefficients `0..=order` of `elements`.
pub fn independence_rank(elements: &[BasisElement], order: usize) -> usize {
    let rows: Vec<Vec<Rational>> = elements
        .iter()
        .map(|e| e.series.truncate(order).into_coeffs())
        .collect();
    linalg::rank(&rows)
}

/// Integer coefficients of a cusp element, for evaluation.
pub fn integer_coefficients(series: &QSeries) -> Option<Vec<BigInt>> {
    series
        .coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn eisenstein_constants_and_first_terms() {
        let e = EisensteinSeries::new(Chi0, Chi4, 1).unwrap().expand(10);
        assert_eq!(e.coeff(0).unwrap(), &rat(11, 2));
        assert_eq!(e.coeff(1).unwrap(), &Rational::one());
        let e = EisensteinSeries::new(Chi0, Chi6, 1).unwrap().expand(4);
        assert_eq!(e.coeff(0).unwrap(), &rat(261, 1));
        let e = EisensteinSeries::new(Chi4, Chi0, 1).unwrap().expand(4);
        assert_eq!(e.coeff(2).unwrap(), &rat(8, 1));
        assert_eq!(EisensteinSeries::new(Chi0, Chi5, 1).unwrap().constant_term(), rat(23, 1));
    }

    #[test]
    fn nontrivial_first_character_means_zero_constant() {
        for (a, b) in EISENSTEIN_PAIRS {
            let e = EisensteinSeries::new(a, b, 1).unwrap();
            if !a.is_trivial() {
                assert!(e.constant_term().is_zero(), "{e}");
            }
        }
    }

    #[test]
    fn dilated_eisenstein_matches_series_dilation() {
        for (a, b) in EISENSTEIN_PAIRS {
            for t in [2, 3] {
                let direct = EisensteinSeries::new(a, b, t).unwrap().expand(60);
                let dilated = EisensteinSeries::new(a, b, 1).unwrap().expand(60).dilate(t);
                assert_eq!(direct, dilated);
                for n in 0..=60u64 {
                    assert_eq!(&EisensteinSeries::new(a, b, t).unwrap().coefficient(n), direct.coeff(n as usize).unwrap());
                }
            }
        }
    }

    #[test]
    fn unknown_pairs_rejected() {
        assert!(EisensteinSeries::new(Chi0, Chi0, 1).is_none());
        assert!(EisensteinSeries::new(Chi0, Chi4, 0).is_none());
    }

    #[test]
    fn family_sizes() {
        for (family, total, cusp) in [(Family::Chi4, 14, 10), (Family::Chi5, 16, 8), (Family::Chi6, 14, 10)] {
            let b = build_family(family, 30).unwrap();
            assert_eq!(b.len(), total);
            assert_eq!(b.cusp_elements().count(), cusp);
            assert_eq!(b.eisenstein_count() + cusp, total);
        }
    }

    #[test]
    fn ordering_is_frozen() {
        let b = build_family(Family::Chi5, 10).unwrap();
        assert_eq!(
            b.labels(),
            vec![
                "E4[chi0,chi5](q)", "E4[chi2,chi3](q)", "E4[chi3,chi2](q)", "E4[chi5,chi0](q)",
                "E4[chi0,chi5](q^2)", "E4[chi3,chi2](q^2)", "E4[chi2,chi3](q^2)", "E4[chi5,chi0](q^2)",
                "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8",
            ]
        );
        let b = build_family(Family::Chi4, 10).unwrap();
        assert_eq!(&b.labels()[..4], ["E4[chi0,chi4](q)", "E4[chi4,chi0](q)", "E4[chi0,chi4](q^3)", "E4[chi4,chi0](q^3)"]);
    }

    #[test]
    fn cusp_elements_are_monic_and_vanish_at_infinity() {
        for family in Family::ALL {
            let b = build_family(family, 40).unwrap();
            for (e, q) in b.cusp_elements().zip(cusp_quotients(family)) {
                let v = e.series.valuation().unwrap();
                assert!(v >= 1, "{}", e.label);
                assert_eq!(v, q.leading_exponent().unwrap());
                assert_eq!(e.series.coeff(v).unwrap(), &Rational::one(), "{}", e.label);
            }
        }
    }

    #[test]
    fn cusp_ranks_at_sixty() {
        let a = build_family(Family::Chi4, 60).unwrap();
        let cusps: Vec<_> = a.cusp_elements().cloned().collect();
        assert_eq!(independence_rank(&cusps, 60), 10);
        let b = build_family(Family::Chi5, 60).unwrap();
        let cusps: Vec<_> = b.cusp_elements().cloned().collect();
        assert_eq!(independence_rank(&cusps, 60), 8);
    }

    #[test]
    fn duplicate_lowers_rank() {
        let b = build_family(Family::Chi6, 40).unwrap();
        let mut list: Vec<_> = b.cusp_elements().take(4).cloned().collect();
        list.push(list[2].clone());
        assert_eq!(independence_rank(&list, 40), list.len() - 1);
    }

    #[test]
    fn every_basis_quotient_is_a_weight_four_cusp_form() {
        for family in Family::ALL {
            for q in cusp_quotients(family) {
                let r = q.ligozat_check().unwrap();
                assert!(r.is_cusp_form, "{q}: {r}");
                assert_eq!(r.weight, 4);
                assert_eq!(r.character, Some(family.character()), "{q}");
            }
        }
    }

    #[test]
    fn integer_coefficient_extraction() {
        let b = build_family(Family::Chi4, 20).unwrap();
        assert!(integer_coefficients(&b.elements[0].series).is_none());
        assert!(integer_coefficients(&b.elements[5].series).is_some());
    }
}
