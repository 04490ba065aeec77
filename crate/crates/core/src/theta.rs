//! Ramanujan's φ(q), theta products `φ(q)^i φ(q²)^j φ(q³)^k φ(q⁶)^l`, and the
//! catalog of the 112 octonary forms with mixed exponent parities.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use thiserror::Error;

use crate::characters::DirichletChar;
use crate::series::QSeries;

/// The coefficient attached to each slot of a signature.
pub const COEFFICIENTS: [u64; 4] = [1, 2, 3, 6];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("exponents {0:?} must sum to 8")]
    BadSum([u8; 4]),
    #[error("cannot parse form {0:?}; expected i,j,k,l")]
    Parse(String),
}

/// Exponents `(i, j, k, l)` of the form `1·(x…)² + 2·(…) + 3·(…) + 6·(…)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormSignature([u8; 4]);

impl FormSignature {
    pub fn new(i: u8, j: u8, k: u8, l: u8) -> Result<Self, FormError> {
        Self::from_array([i, j, k, l])
    }

    pub fn from_array(e: [u8; 4]) -> Result<Self, FormError> {
        if e.iter().map(|&x| x as u32).sum::<u32>() != 8 {
            return Err(FormError::BadSum(e));
        }
        Ok(Self(e))
    }

    pub fn exponents(&self) -> [u8; 4] {
        self.0
    }

    /// The eight diagonal coefficients `a₁ ≤ … ≤ a₈`.
    pub fn coefficients(&self) -> [u64; 8] {
        let mut out = [0u64; 8];
        let mut pos = 0;
        for (slot, &count) in self.0.iter().enumerate() {
            for _ in 0..count {
                out[pos] = COEFFICIENTS[slot];
                pos += 1;
            }
        }
        out
    }

    /// gcd of the coefficients is 1.
    pub fn is_primitive(&self) -> bool {
        let [i, j, k, _] = self.0;
        i > 0 || (j > 0 && k > 0)
    }

    /// Squarefree kernel of `2^{j+l} 3^{k+l}`.
    pub fn kernel(&self) -> u64 {
        let [_, j, k, l] = self.0;
        let two = if (j + l) % 2 == 1 { 2 } else { 1 };
        let three = if (k + l) % 2 == 1 { 3 } else { 1 };
        two * three
    }
}

impl fmt::Display for FormSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k, l] = self.0;
        write!(f, "({i},{j},{k},{l})")
    }
}

impl FromStr for FormSignature {
    type Err = FormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(FormError::Parse(s.to_string()));
        }
        let mut e = [0u8; 4];
        for (slot, p) in e.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| FormError::Parse(s.to_string()))?;
        }
        Self::from_array(e)
    }
}

/// Which space `M₄(Γ₀(24), χ)` a theta product lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Chi4,
    Chi5,
    Chi6,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Chi4, Family::Chi5, Family::Chi6];

    pub fn character(self) -> DirichletChar {
        match self {
            Family::Chi4 => DirichletChar::Chi4,
            Family::Chi5 => DirichletChar::Chi5,
            Family::Chi6 => DirichletChar::Chi6,
        }
    }

    pub fn label(self) -> &'static str {
        self.character().label()
    }

    /// Column of the catalog table, 1-based.
    pub fn column(self) -> usize {
        match self {
            Family::Chi4 => 1,
            Family::Chi5 => 2,
            Family::Chi6 => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.label() == s)
            .ok_or_else(|| format!("unknown family {s:?}; expected chi4, chi5 or chi6"))
    }
}

/// The character family of a signature, or `None` for the
/// parity-homogeneous signatures (kernel 1).
pub fn classify_form(f: &FormSignature) -> Option<Family> {
    match f.kernel() {
        2 => Some(Family::Chi4),
        3 => Some(Family::Chi5),
        6 => Some(Family::Chi6),
        _ => None,
    }
}

/// `φ(q) = Σ_{n∈ℤ} q^{n²}` through `q^order`.
pub fn phi_series(order: usize) -> QSeries {
    let mut c = vec![0i64; order + 1];
    c[0] = 1;
    let mut n = 1usize;
    while n * n <= order {
        c[n * n] = 2;
        n += 1;
    }
    QSeries::from_integers(c)
}

/// `∏ φ(q^{a})` over a list of coefficients, in the order given.
pub fn theta_product_of(coefficients: &[u64], order: usize) -> QSeries {
    let phi = phi_series(order);
    coefficients
        .iter()
        .fold(QSeries::one(order), |acc, &a| &acc * &phi.dilate(a as usize))
}

/// `φ(q)^i φ(q²)^j φ(q³)^k φ(q⁶)^l`, the generating function of the
/// representation numbers of `f`.
pub fn theta_product(f: &FormSignature, order: usize) -> QSeries {
    theta_product_of(&f.coefficients(), order)
}

/// One row of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub form: FormSignature,
    pub family: Family,
    /// 1-based position within the family, in lexicographic order of the
    /// signatures.
    pub row: usize,
}

/// All 112 catalog forms: the chi4 column, then chi5, then chi6, each sorted
/// lexicographically.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut out = Vec::with_capacity(112);
        for (family, forms) in [
            (Family::Chi4, &CHI4_FORMS[..]),
            (Family::Chi5, &CHI5_FORMS[..]),
            (Family::Chi6, &CHI6_FORMS[..]),
        ] {
            for (idx, e) in forms.iter().enumerate() {
                out.push(CatalogEntry {
                    form: FormSignature::from_array(*e).expect("catalog entries sum to 8"),
                    family,
                    row: idx + 1,
                });
            }
        }
        out
    })
}

pub fn catalog_family(family: Family) -> impl Iterator<Item = &'static CatalogEntry> {
    catalog().iter().filter(move |e| e.family == family)
}

pub fn catalog_lookup(f: &FormSignature) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.form == *f)
}

/// Coefficient `n` of a theta product as an integer. Theta products have
/// integer coefficients by construction.
pub fn integer_coeff(s: &QSeries, n: usize) -> Option<BigInt> {
    let c = s.coeff(n)?;
    c.is_integer().then(|| c.to_integer())
}

const CHI4_FORMS: [[u8; 4]; 36] = [
    [0, 2, 1, 5], [0, 2, 3, 3], [0, 2, 5, 1], [0, 4, 1, 3], [0, 4, 3, 1], [0, 6, 1, 1],
    [1, 1, 0, 6], [1, 1, 2, 4], [1, 1, 4, 2], [1, 1, 6, 0], [1, 3, 0, 4], [1, 3, 2, 2],
    [1, 3, 4, 0], [1, 5, 0, 2], [1, 5, 2, 0], [1, 7, 0, 0], [2, 0, 1, 5], [2, 0, 3, 3],
    [2, 0, 5, 1], [2, 2, 1, 3], [2, 2, 3, 1], [2, 4, 1, 1], [3, 1, 0, 4], [3, 1, 2, 2],
    [3, 1, 4, 0], [3, 3, 0, 2], [3, 3, 2, 0], [3, 5, 0, 0], [4, 0, 1, 3], [4, 0, 3, 1],
    [4, 2, 1, 1], [5, 1, 0, 2], [5, 1, 2, 0], [5, 3, 0, 0], [6, 0, 1, 1], [7, 1, 0, 0],
];

const CHI5_FORMS: [[u8; 4]; 36] = [
    [0, 1, 2, 5], [0, 1, 4, 3], [0, 1, 6, 1], [0, 3, 2, 3], [0, 3, 4, 1], [0, 5, 2, 1],
    [1, 0, 1, 6], [1, 0, 3, 4], [1, 0, 5, 2], [1, 0, 7, 0], [1, 2, 1, 4], [1, 2, 3, 2],
    [1, 2, 5, 0], [1, 4, 1, 2], [1, 4, 3, 0], [1, 6, 1, 0], [2, 1, 0, 5], [2, 1, 2, 3],
    [2, 1, 4, 1], [2, 3, 0, 3], [2, 3, 2, 1], [2, 5, 0, 1], [3, 0, 1, 4], [3, 0, 3, 2],
    [3, 0, 5, 0], [3, 2, 1, 2], [3, 2, 3, 0], [3, 4, 1, 0], [4, 1, 0, 3], [4, 1, 2, 1],
    [4, 3, 0, 1], [5, 0, 1, 2], [5, 0, 3, 0], [5, 2, 1, 0], [6, 1, 0, 1], [7, 0, 1, 0],
];

const CHI6_FORMS: [[u8; 4]; 40] = [
    [0, 1, 1, 6], [0, 1, 3, 4], [0, 1, 5, 2], [0, 1, 7, 0], [0, 3, 1, 4], [0, 3, 3, 2],
    [0, 3, 5, 0], [0, 5, 1, 2], [0, 5, 3, 0], [0, 7, 1, 0], [1, 0, 0, 7], [1, 0, 2, 5],
    [1, 0, 4, 3], [1, 0, 6, 1], [1, 2, 0, 5], [1, 2, 2, 3], [1, 2, 4, 1], [1, 4, 0, 3],
    [1, 4, 2, 1], [1, 6, 0, 1], [2, 1, 1, 4], [2, 1, 3, 2], [2, 1, 5, 0], [2, 3, 1, 2],
    [2, 3, 3, 0], [2, 5, 1, 0], [3, 0, 0, 5], [3, 0, 2, 3], [3, 0, 4, 1], [3, 2, 0, 3],
    [3, 2, 2, 1], [3, 4, 0, 1], [4, 1, 1, 2], [4, 1, 3, 0], [4, 3, 1, 0], [5, 0, 0, 3],
    [5, 0, 2, 1], [5, 2, 0, 1], [6, 1, 1, 0], [7, 0, 0, 1],
];
