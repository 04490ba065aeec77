//! Kronecker symbols, the seven real characters used at level 24, and
//! twisted divisor sums `σ_(3,ψ1,ψ2)(n) = Σ_{m | n} ψ2(m) ψ1(n/m) m³`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

/// Kronecker symbol `(a / n)` for arbitrary integers.
pub fn kronecker(a: i64, n: i64) -> i8 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result: i8 = 1;
    let mut n = n as i128;
    let a = a as i128;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a/2) = 1 for a ≡ ±1 (mod 8), -1 for a ≡ ±3 (mod 8)
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
        n >>= twos;
    }
    result * jacobi(a.rem_euclid(n), n)
}

/// Jacobi symbol `(a / n)` for odd positive `n` and `0 <= a < n`.
fn jacobi(mut a: i128, mut n: i128) -> i8 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut result: i8 = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// The trivial character and the six Kronecker characters of discriminant
/// -8, -4, -3, 8, 12, 24.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DirichletChar {
    Chi0,
    Chi1,
    Chi2,
    Chi3,
    Chi4,
    Chi5,
    Chi6,
}

impl DirichletChar {
    pub const ALL: [DirichletChar; 7] = [
        Self::Chi0,
        Self::Chi1,
        Self::Chi2,
        Self::Chi3,
        Self::Chi4,
        Self::Chi5,
        Self::Chi6,
    ];

    pub fn discriminant(self) -> i64 {
        match self {
            Self::Chi0 => 1,
            Self::Chi1 => -8,
            Self::Chi2 => -4,
            Self::Chi3 => -3,
            Self::Chi4 => 8,
            Self::Chi5 => 12,
            Self::Chi6 => 24,
        }
    }

    pub fn from_discriminant(d: i64) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.discriminant() == d)
    }

    pub fn is_trivial(self) -> bool {
        self == Self::Chi0
    }

    /// Value at a positive integer. `Chi0` is 1 everywhere.
    pub fn value(self, m: u64) -> i8 {
        assert!(m >= 1, "characters are evaluated at positive integers");
        match self {
            Self::Chi0 => 1,
            other => kronecker(other.discriminant(), m as i64),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Chi0 => "chi0",
            Self::Chi1 => "chi1",
            Self::Chi2 => "chi2",
            Self::Chi3 => "chi3",
            Self::Chi4 => "chi4",
            Self::Chi5 => "chi5",
            Self::Chi6 => "chi6",
        }
    }
}

impl fmt::Display for DirichletChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for DirichletChar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| format!("unknown character {s:?}"))
    }
}

/// Shorthand for [`DirichletChar::value`].
pub fn char_value(chi: DirichletChar, m: u64) -> i8 {
    chi.value(m)
}

/// `σ_(3,ψ1,ψ2)(n)`, zero for `n <= 0`.
pub fn twisted_sigma3(psi1: DirichletChar, psi2: DirichletChar, n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    let n = n as u64;
    let mut total: i128 = 0;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let e = n / d;
            total += term(psi1, psi2, n, d);
            if e != d {
                total += term(psi1, psi2, n, e);
            }
        }
        d += 1;
    }
    BigInt::from(total)
}

fn term(psi1: DirichletChar, psi2: DirichletChar, n: u64, m: u64) -> i128 {
    let sign = psi2.value(m) as i128 * psi1.value(n / m) as i128;
    sign * (m as i128).pow(3)
}

/// Twisted σ at a rational argument `n / t`: zero unless `t` divides `n`.
pub fn twisted_sigma3_at_quotient(psi1: DirichletChar, psi2: DirichletChar, n: i64, t: i64) -> BigInt {
    if t <= 0 || n % t != 0 {
        return BigInt::zero();
    }
    twisted_sigma3(psi1, psi2, n / t)
}
