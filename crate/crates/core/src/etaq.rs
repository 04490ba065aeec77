//! Eta quotients `∏_{δ | N} η(δz)^{r_δ}`: construction, q-expansion, and
//! Ligozat's sufficient conditions for being a modular or cusp form on Γ₀(N).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::characters::DirichletChar;
use crate::series::{euler_product, QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("delta must be positive")]
    ZeroDelta,
    #[error("delta {delta} does not divide level {level}")]
    DeltaNotDivisor { delta: u64, level: u64 },
    #[error("delta {0} appears more than once")]
    DuplicateDelta(u64),
    #[error("eta quotient has no non-zero exponents")]
    Empty,
    #[error("sum of delta*r = {0} is not divisible by 24; q-expansion has a fractional exponent")]
    FractionalExponent(i64),
    #[error("leading exponent {0} is negative; not a power series at q = 0")]
    NegativeValuation(i64),
    #[error("sum of exponents {0} is odd; weight is half-integral")]
    HalfIntegralWeight(i64),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// `∏ η(δz)^{r_δ}` at level `N`. Exponents are non-zero and every `δ`
/// divides `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaQuotient {
    level: u64,
    exponents: BTreeMap<u64, i64>,
}

impl EtaQuotient {
    /// Zero exponents are dropped; a repeated `δ` is an error.
    pub fn new<I>(level: u64, pairs: I) -> Result<Self, EtaError>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        if level == 0 {
            return Err(EtaError::ZeroLevel);
        }
        let mut exponents = BTreeMap::new();
        for (delta, r) in pairs {
            if delta == 0 {
                return Err(EtaError::ZeroDelta);
            }
            if !level.is_multiple_of(delta) {
                return Err(EtaError::DeltaNotDivisor { delta, level });
            }
            if exponents.insert(delta, r).is_some() {
                return Err(EtaError::DuplicateDelta(delta));
            }
        }
        exponents.retain(|_, r| *r != 0);
        if exponents.is_empty() {
            return Err(EtaError::Empty);
        }
        Ok(Self { level, exponents })
    }

    /// Uses the lcm of the `δ`s as the level.
    pub fn with_minimal_level<I>(pairs: I) -> Result<Self, EtaError>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let pairs: Vec<_> = pairs.into_iter().collect();
        if pairs.iter().any(|&(d, _)| d == 0) {
            return Err(EtaError::ZeroDelta);
        }
        let level = pairs.iter().fold(1u64, |acc, &(d, _)| acc.lcm(&d));
        Self::new(level, pairs)
    }

    /// Same exponents at a different level (which must be a multiple of
    /// every `δ`).
    pub fn at_level(&self, level: u64) -> Result<Self, EtaError> {
        Self::new(level, self.exponents.iter().map(|(&d, &r)| (d, r)))
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    /// `Σ r_δ`, i.e. twice the weight.
    pub fn exponent_sum(&self) -> i64 {
        self.exponents.values().sum()
    }

    pub fn weight(&self) -> Result<i64, EtaError> {
        let total = self.exponent_sum();
        if total % 2 != 0 {
            return Err(EtaError::HalfIntegralWeight(total));
        }
        Ok(total / 2)
    }

    /// `s = ∏ δ^{r_δ}`.
    pub fn s(&self) -> Rational {
        self.exponents.iter().fold(Rational::one(), |acc, (&d, &r)| {
            let base = Rational::from_integer(BigInt::from(d));
            let p = num_traits::pow(base, r.unsigned_abs() as usize);
            if r > 0 {
                acc * p
            } else {
                acc / p
            }
        })
    }

    /// `Σ δ r_δ`, the quantity tested by (L1); divided by 24 it is the
    /// exponent of the leading `q` power.
    pub fn delta_sum(&self) -> i64 {
        self.exponents.iter().map(|(&d, &r)| d as i64 * r).sum()
    }

    /// `Σ (N/δ) r_δ`, the quantity tested by (L2).
    pub fn codelta_sum(&self) -> i64 {
        self.exponents
            .iter()
            .map(|(&d, &r)| (self.level / d) as i64 * r)
            .sum()
    }

    /// Exponent `e` of the `q^e` prefactor.
    pub fn leading_exponent(&self) -> Result<usize, EtaError> {
        let total = self.delta_sum();
        if total % 24 != 0 {
            return Err(EtaError::FractionalExponent(total));
        }
        let e = total / 24;
        if e < 0 {
            return Err(EtaError::NegativeValuation(e));
        }
        Ok(e as usize)
    }

    /// q-expansion through `q^order`.
    pub fn expand(&self, order: usize) -> Result<QSeries, EtaError> {
        let e = self.leading_exponent()?;
        let mut acc = QSeries::one(order);
        for (&delta, &r) in &self.exponents {
            acc = &acc * &euler_product(delta as usize, r, order);
        }
        Ok(acc.shift(e))
    }

    /// `Σ_δ gcd(d, δ)² r_δ / δ` for one divisor `d` of the level.
    pub fn cusp_sum(&self, d: u64) -> Rational {
        self.exponents.iter().fold(Rational::zero(), |acc, (&delta, &r)| {
            let g = d.gcd(&delta);
            acc + Rational::new(BigInt::from(g * g) * r, BigInt::from(delta))
        })
    }

    /// Evaluates (L1)–(L4) and the Nebentypus character.
    pub fn ligozat_check(&self) -> Result<LigozatReport, EtaError> {
        let weight = self.weight()?;
        let mut violated = Vec::new();
        let l1 = self.delta_sum();
        if l1 % 24 != 0 {
            violated.push(Condition::L1);
        }
        let l2 = self.codelta_sum();
        if l2 % 24 != 0 {
            violated.push(Condition::L2);
        }
        let cusp_sums: Vec<(u64, Rational)> = divisors(self.level)
            .into_iter()
            .map(|d| (d, self.cusp_sum(d)))
            .collect();
        let mut l3_ok = true;
        let mut l4_ok = true;
        for (d, v) in &cusp_sums {
            if v.is_negative() {
                l3_ok = false;
                violated.push(Condition::L3(*d));
            }
            if !v.is_positive() {
                l4_ok = false;
                violated.push(Condition::L4(*d));
            }
        }
        let is_modular_form = l1 % 24 == 0 && l2 % 24 == 0 && l3_ok;
        let is_cusp_form = is_modular_form && l4_ok;

        let sign = if weight % 2 == 0 { Rational::one() } else { -Rational::one() };
        let character_argument = sign * self.s();
        let character_discriminant = self.character_discriminant(weight);
        Ok(LigozatReport {
            level: self.level,
            weight,
            delta_sum: l1,
            codelta_sum: l2,
            cusp_sums,
            is_modular_form,
            is_cusp_form,
            character_argument,
            character_discriminant,
            character: DirichletChar::from_discriminant(character_discriminant),
            violated_conditions: violated,
        })
    }

    /// Discriminant `D` with `(D/m) = ((-1)^k s / m)` for every `m` coprime
    /// to `2s`: the squarefree kernel of `(-1)^k s`, times 4 unless it is
    /// already ≡ 1 (mod 4).
    fn character_discriminant(&self, weight: i64) -> i64 {
        let mut parity: BTreeMap<u64, i64> = BTreeMap::new();
        for (&delta, &r) in &self.exponents {
            for (p, e) in factorize(delta) {
                *parity.entry(p).or_default() += e as i64 * r;
            }
        }
        let kernel: i64 = parity
            .into_iter()
            .filter(|(_, e)| e.rem_euclid(2) == 1)
            .map(|(p, _)| p as i64)
            .product();
        let d = if weight % 2 == 0 { kernel } else { -kernel };
        if d.rem_euclid(4) == 1 {
            d
        } else {
            4 * d
        }
    }
}

/// One of Ligozat's conditions; `L3`/`L4` carry the divisor `d` at which the
/// cusp sum failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    L1,
    L2,
    L3(u64),
    L4(u64),
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::L1 => write!(f, "L1"),
            Condition::L2 => write!(f, "L2"),
            Condition::L3(d) => write!(f, "L3(d={d})"),
            Condition::L4(d) => write!(f, "L4(d={d})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LigozatReport {
    pub level: u64,
    pub weight: i64,
    pub delta_sum: i64,
    pub codelta_sum: i64,
    /// `(d, Σ gcd(d,δ)² r_δ / δ)` for every divisor `d` of the level.
    pub cusp_sums: Vec<(u64, Rational)>,
    pub is_modular_form: bool,
    pub is_cusp_form: bool,
    /// `(-1)^k s` exactly as it enters the character formula.
    pub character_argument: Rational,
    pub character_discriminant: i64,
    /// The matching named character, when the discriminant is one of ours.
    pub character: Option<DirichletChar>,
    pub violated_conditions: Vec<Condition>,
}

impl fmt::Display for LigozatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "level: {}", self.level)?;
        writeln!(f, "weight: {}", self.weight)?;
        writeln!(f, "sum delta*r: {} (L1 {})", self.delta_sum, ok(self.delta_sum % 24 == 0))?;
        writeln!(f, "sum (N/delta)*r: {} (L2 {})", self.codelta_sum, ok(self.codelta_sum % 24 == 0))?;
        for (d, v) in &self.cusp_sums {
            writeln!(f, "  d={d}: {v}")?;
        }
        writeln!(f, "modular form: {}", self.is_modular_form)?;
        writeln!(f, "cusp form: {}", self.is_cusp_form)?;
        write!(f, "character: ((-1)^k s / m) with (-1)^k s = {}; discriminant {}", self.character_argument, self.character_discriminant)?;
        if let Some(c) = self.character {
            write!(f, " ({c})")?;
        }
        if !self.violated_conditions.is_empty() {
            let v: Vec<String> = self.violated_conditions.iter().map(|c| c.to_string()).collect();
            write!(f, "\nviolated: {}", v.join(", "))?;
        }
        Ok(())
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILS"
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(d, r)| format!("{d}:{r}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for EtaQuotient {
    type Err = EtaError;

    /// Parses `delta:exponent` pairs separated by commas, e.g.
    /// `3:2,4:2,6:5,8:2,12:-3`. The level is the lcm of the deltas.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pairs = Vec::new();
        let mut offset = 0;
        for token in s.split(',') {
            let start = offset + (token.len() - token.trim_start().len());
            offset += token.len() + 1;
            let token = token.trim();
            let err = |message: String| EtaError::Parse { position: start, message };
            let (d, r) = token
                .split_once(':')
                .ok_or_else(|| err(format!("expected delta:exponent, found {token:?}")))?;
            let delta: u64 = d
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid delta {:?}", d.trim())))?;
            let r: i64 = r
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid exponent {:?}", r.trim())))?;
            if delta == 0 {
                return Err(err("delta must be positive".into()));
            }
            if pairs.iter().any(|&(seen, _)| seen == delta) {
                return Err(err(format!("delta {delta} repeated")));
            }
            pairs.push((delta, r));
        }
        Self::with_minimal_level(pairs)
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn quotient(s: &str) -> EtaQuotient {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let a1 = quotient("3:2,4:2,6:5,8:2,12:-3");
        assert_eq!(a1.level(), 24);
        assert_eq!(a1.to_string(), "3:2,4:2,6:5,8:2,12:-3");
        assert_eq!(quotient(" 12:-3 , 3:2 ").to_string(), "3:2,12:-3");
    }

    #[test]
    fn parse_errors_carry_position() {
        match "bogus".parse::<EtaQuotient>() {
            Err(EtaError::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("{other:?}"),
        }
        match "3:2,4:x".parse::<EtaQuotient>() {
            Err(EtaError::Parse { position, message }) => {
                assert_eq!(position, 4);
                assert!(message.contains("exponent"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!("0:1".parse::<EtaQuotient>(), Err(EtaError::Parse { .. })));
        assert!(matches!("".parse::<EtaQuotient>(), Err(EtaError::Parse { .. })));
    }

    #[test]
    fn cancelling_quotient_is_not_constructible() {
        assert!("1:1,1:-1".parse::<EtaQuotient>().is_err());
        assert_eq!(EtaQuotient::new(1, [(1, 0)]), Err(EtaError::Empty));
        assert_eq!(EtaQuotient::new(1, [(1, 1), (1, -1)]), Err(EtaError::DuplicateDelta(1)));
    }

    #[test]
    fn construction_checks_divisibility_and_drops_zeros() {
        assert_eq!(
            EtaQuotient::new(24, [(5, 1)]),
            Err(EtaError::DeltaNotDivisor { delta: 5, level: 24 })
        );
        let f = EtaQuotient::new(24, [(1, 0), (24, 2)]).unwrap();
        assert_eq!(f.exponents().len(), 1);
        assert_eq!(EtaQuotient::new(0, [(1, 1)]), Err(EtaError::ZeroLevel));
    }

    #[test]
    fn a5_leading_exponent() {
        let f = quotient("4:3,12:1,24:4");
        assert_eq!(f.leading_exponent().unwrap(), 5);
        let s = f.expand(12).unwrap();
        assert_eq!(s.valuation(), Some(5));
        assert_eq!(s.coeff(5).unwrap(), &rat(1, 1));
    }

    #[test]
    fn a6_expansion_against_factorwise_product() {
        let f = quotient("3:2,6:1,24:6,12:-1");
        assert_eq!(f.leading_exponent().unwrap(), 6);
        let order = 40;
        let s = f.expand(order).unwrap();
        assert_eq!(s.coeff(6).unwrap(), &rat(1, 1));
        assert!((0..6).all(|n| s.coeff(n).unwrap().is_zero()));
        // Independent route: powers of the dilated single product F(q).
        let base = euler_product(1, 1, order);
        let mut expect = QSeries::one(order);
        for (d, r) in [(3, 2), (6, 1), (24, 6), (12, -1)] {
            expect = &expect * &base.dilate(d).pow(r).unwrap();
        }
        assert_eq!(s, expect.shift(6));
    }

    #[test]
    fn expansion_errors() {
        assert_eq!(quotient("1:1").expand(5), Err(EtaError::FractionalExponent(1)));
        assert_eq!(quotient("1:-24").expand(5), Err(EtaError::NegativeValuation(-1)));
    }

    #[test]
    fn half_integral_weight_rejected() {
        let f = EtaQuotient::new(24, [(24, 1)]).unwrap();
        assert_eq!(f.ligozat_check(), Err(EtaError::HalfIntegralWeight(1)));
    }

    #[test]
    fn ligozat_on_delta_function() {
        // η(z)^24 is the weight-12 cusp form of level 1.
        let r = quotient("1:24").ligozat_check().unwrap();
        assert_eq!(r.weight, 12);
        assert!(r.is_cusp_form);
        assert_eq!(r.character_discriminant, 1);
        assert_eq!(r.character, Some(DirichletChar::Chi0));
    }

    #[test]
    fn ligozat_reports_violations() {
        // η(z)^2 at level 1: L1 and L2 fail, but the cusp sum is positive.
        let r = quotient("1:2").ligozat_check().unwrap();
        assert!(!r.is_modular_form);
        assert_eq!(r.violated_conditions, vec![Condition::L1, Condition::L2]);
        // η(z)^-24 has a pole at infinity.
        let r = quotient("1:-24").ligozat_check().unwrap();
        assert!(!r.is_modular_form);
        assert!(r.violated_conditions.contains(&Condition::L3(1)));
    }

    #[test]
    fn ligozat_on_a1() {
        let r = quotient("3:2,4:2,6:5,8:2,12:-3").at_level(24).unwrap().ligozat_check().unwrap();
        assert_eq!(r.weight, 4);
        assert!(r.is_cusp_form, "{r}");
        assert_eq!(r.cusp_sums.len(), 8);
        assert_eq!(r.character_discriminant, 8);
        assert_eq!(r.character, Some(DirichletChar::Chi4));
        // s = 3^2 4^2 6^5 8^2 / 12^3
        assert_eq!(r.character_argument, rat(9 * 16 * 7776 * 64, 1728));
    }

    #[test]
    fn theta_quotient_character() {
        // φ(q) = η(2z)^5 / (η(z)^2 η(4z)^2), weight 1/2.
        assert!(matches!(
            quotient("1:-2,2:5,4:-2").ligozat_check(),
            Err(EtaError::HalfIntegralWeight(1))
        ));
    }
}
