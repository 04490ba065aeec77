//! Truncated power series in `q` with exact rational coefficients.
//!
//! A [`QSeries`] knows the coefficients of `q^0 ..= q^order` and nothing
//! beyond. Binary operations truncate to the smaller order of their operands,
//! so a result never claims knowledge of a coefficient that one of its inputs
//! did not have.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A power series `Σ c_n q^n` known through `q^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Takes ownership of `coeffs`; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty, since a series must know at least its
    /// constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a QSeries needs at least one coefficient");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `c · q^exponent`, or the zero series if the exponent lies past `order`.
    pub fn monomial(c: Rational, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn from_integers<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(values.into_iter().map(|v| Rational::from_integer(v.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`, or `None` when `n` is past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exponent of the first non-zero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops every coefficient above `order`. A larger `order` is a no-op.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitutes `q -> q^t`; the order is unchanged and coefficients pushed
    /// past it are dropped.
    pub fn dilate(&self, t: usize) -> Self {
        assert!(t >= 1, "dilation factor must be positive");
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let m = n * t;
            if m > order {
                break;
            }
            out.coeffs[m] = c.clone();
        }
        out
    }

    /// Multiplies by `q^e`, keeping the same order.
    pub fn shift(&self, e: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for n in e..=order {
            out.coeffs[n] = self.coeffs[n - e].clone();
        }
        out
    }

    /// Multiplicative inverse; requires a non-zero constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let order = self.order();
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -(acc * &inv0);
        }
        Some(Self { coeffs: out })
    }

    /// Integer power; negative exponents go through [`QSeries::inverse`].
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// Least common multiple of the coefficient denominators.
    fn common_denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The coefficients scaled by `den` as integers.
    fn scaled_integers(&self, den: &BigInt) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| c.numer() * (den / c.denom()))
            .collect()
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({self})")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    /// Truncated Cauchy product. Both operands are brought to a common
    /// denominator so the convolution itself runs on integers.
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let da = self.common_denominator();
        let db = rhs.common_denominator();
        let a = self.scaled_integers(&da);
        let b = rhs.scaled_integers(&db);
        let conv = convolve(&a[..=order], &b[..=order], order);
        let den = da * db;
        QSeries {
            coeffs: conv
                .into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Integer convolution truncated at `order`, skipping zero entries.
fn convolve(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    let b_nz: Vec<(usize, &BigInt)> = b.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for &(j, y) in &b_nz {
            if i + j > order {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// `∏_{n≥1} (1 - q^{δn})^r` through `q^order`, without any `q^{δ/24}` prefactor.
///
/// Each factor `(1 - q^m)` is applied in place: multiplication is a
/// descending update, division (negative `r`) an ascending one. Everything
/// stays in integers since the constant term is 1.
pub fn euler_product(delta: usize, r: i64, order: usize) -> QSeries {
    assert!(delta >= 1, "euler_product needs delta >= 1");
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    let times = r.unsigned_abs();
    let mut m = delta;
    while m <= order {
        for _ in 0..times {
            if r > 0 {
                for k in (m..=order).rev() {
                    let prev = c[k - m].clone();
                    c[k] -= prev;
                }
            } else {
                for k in m..=order {
                    let prev = c[k - m].clone();
                    c[k] += prev;
                }
            }
        }
        m += delta;
    }
    QSeries::from_integers(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> QSeries {
        QSeries::from_integers(v.iter().copied())
    }

    /// F(q) by literally multiplying out (1 - q^n) for n = 1..=order.
    fn pentagonal_oracle(order: usize) -> Vec<i64> {
        let mut c = vec![0i64; order + 1];
        c[0] = 1;
        for n in 1..=order {
            let old = c.clone();
            for k in n..=order {
                c[k] -= old[k - n];
            }
        }
        c
    }

    #[test]
    fn additive_identity_and_inverse() {
        let a = ints(&[1, 2]);
        assert_eq!(&a + &QSeries::zero(1), a);
        let phi = ints(&[1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        assert!((&phi + &phi.scale(&rat(-1, 1))).is_zero());
    }

    #[test]
    fn f_plus_shifted_f_kills_q1() {
        let f = euler_product(1, 1, 10);
        let sum = &f + &f.shift(1);
        assert_eq!(sum.coeff(1).unwrap(), &Rational::zero());
    }

    #[test]
    fn small_products() {
        assert_eq!(&ints(&[1, 1, 0]) * &ints(&[1, -1, 0]), ints(&[1, 0, -1]));
        let phi = ints(&[1, 2, 0, 0, 2]);
        assert_eq!((&phi * &phi).coeff(1).unwrap(), &rat(4, 1));
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let a = ints(&[1, 1, 1, 1, 1]);
        let b = ints(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn rational_product_clears_denominators() {
        let a = QSeries::new(vec![rat(1, 2), rat(1, 3)]);
        let b = QSeries::new(vec![rat(2, 1), rat(3, 4)]);
        // (1/2 + q/3)(2 + 3q/4) = 1 + (3/8 + 2/3) q
        assert_eq!(a.mul(b), QSeries::new(vec![rat(1, 1), rat(25, 24)]));
    }

    #[test]
    fn dilation() {
        assert_eq!(ints(&[1, 1, 0, 0]).dilate(3), ints(&[1, 0, 0, 1]));
        let a = ints(&[3, 1, 4, 1, 5]);
        assert_eq!(a.dilate(1), a);
        let phi = ints(&[1, 2, 0, 0, 2, 0]);
        assert_eq!(phi.dilate(2).coeff(2).unwrap(), &rat(2, 1));
        assert_eq!(phi.dilate(2).order(), 5);
    }

    #[test]
    fn pentagonal_expansion() {
        assert_eq!(euler_product(1, 1, 6), ints(&[1, -1, -1, 0, 0, 1, 0]));
        let oracle = pentagonal_oracle(60);
        assert_eq!(euler_product(1, 1, 60), ints(&oracle));
    }

    #[test]
    fn zero_exponent_is_one() {
        assert_eq!(euler_product(7, 0, 12), QSeries::one(12));
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(euler_product(1, -1, 4), ints(&[1, 1, 2, 3, 5]));
        // Independent route: invert the multiplied-out product.
        let inv = ints(&pentagonal_oracle(30)).inverse().unwrap();
        assert_eq!(euler_product(1, -1, 30), inv);
    }

    #[test]
    fn dilated_product_matches_dilation() {
        assert_eq!(euler_product(3, 2, 40), euler_product(1, 2, 40).dilate(3));
        assert_eq!(euler_product(4, -3, 40), euler_product(1, -3, 40).dilate(4));
    }

    #[test]
    fn pow_and_inverse_agree() {
        let f = euler_product(1, 1, 25);
        assert_eq!(f.pow(3).unwrap(), euler_product(1, 3, 25));
        assert_eq!(f.pow(-2).unwrap(), euler_product(1, -2, 25));
        assert!(ints(&[0, 1]).inverse().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(ints(&[1, -1, -1, 0]).to_string(), "1 - q - q^2 + O(q^4)");
        assert_eq!(QSeries::zero(2).to_string(), "0 + O(q^3)");
        assert_eq!(QSeries::new(vec![rat(11, 2), rat(-3, 1)]).to_string(), "11/2 - 3*q + O(q^2)");
    }
}
