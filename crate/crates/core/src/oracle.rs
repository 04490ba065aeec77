//! Brute-force representation counts, independent of the rational series
//! stack: one route multiplies integer theta series, the other enumerates
//! lattice points.

use thiserror::Error;

use crate::theta::FormSignature;

/// Largest `n` accepted by [`count_by_enumeration`].
pub const MAX_ENUMERATION_N: u64 = 3000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {0} exceeds the enumeration bound {MAX_ENUMERATION_N}")]
    QueryTooLarge(u64),
    #[error("coefficients {0:?} must be positive")]
    ZeroCoefficient([u64; 8]),
}

/// `N(a₁,…,a₈; n)` for one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountQuery {
    pub coefficients: [u64; 8],
    pub n: u64,
}

impl CountQuery {
    pub fn new(coefficients: [u64; 8], n: u64) -> Self {
        Self { coefficients, n }
    }

    pub fn for_form(form: &FormSignature, n: u64) -> Self {
        Self::new(form.coefficients(), n)
    }
}

/// `N(…; n)` for `n = 0..=nmax` by multiplying `Σ q^{a x²}` series in
/// machine integers.
pub fn count_by_convolution(f: &FormSignature, nmax: usize) -> Vec<u128> {
    count_coefficients_by_convolution(&f.coefficients(), nmax)
}

pub fn count_coefficients_by_convolution(coefficients: &[u64], nmax: usize) -> Vec<u128> {
    let mut acc = vec![0u128; nmax + 1];
    acc[0] = 1;
    for &a in coefficients {
        let a = a as usize;
        let mut next = vec![0u128; nmax + 1];
        for (m, &c) in acc.iter().enumerate() {
            if c == 0 {
                continue;
            }
            next[m] += c;
            let mut x = 1usize;
            while m + a * x * x <= nmax {
                next[m + a * x * x] += 2 * c;
                x += 1;
            }
        }
        acc = next;
    }
    acc
}

/// Meet-in-the-middle lattice count: tabulate the sums attained by the first
/// four coordinates, then walk every point of the last four and look up the
/// complement.
pub fn count_by_enumeration(q: &CountQuery) -> Result<u128, OracleError> {
    if q.n > MAX_ENUMERATION_N {
        return Err(OracleError::QueryTooLarge(q.n));
    }
    if q.coefficients.contains(&0) {
        return Err(OracleError::ZeroCoefficient(q.coefficients));
    }
    let n = q.n;
    let (left, right) = q.coefficients.split_at(4);
    let mut table = vec![0u128; n as usize + 1];
    walk(left, n, 0, &mut |s| table[s as usize] += 1);
    let mut total = 0u128;
    walk(right, n, 0, &mut |s| total += table[(n - s) as usize]);
    Ok(total)
}

/// Calls `visit` with `Σ a_i x_i²` for every integer point with that sum at
/// most `bound`.
fn walk(coefficients: &[u64], bound: u64, partial: u64, visit: &mut dyn FnMut(u64)) {
    let Some((&a, rest)) = coefficients.split_first() else {
        visit(partial);
        return;
    };
    walk(rest, bound, partial, visit);
    let mut x = 1u64;
    while partial + a * x * x <= bound {
        let s = partial + a * x * x;
        // ±x
        walk(rest, bound, s, visit);
        walk(rest, bound, s, visit);
        x += 1;
    }
}
