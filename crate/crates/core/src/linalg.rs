//! Exact linear algebra over the rationals, done fraction-free on integer
//! matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::series::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("system is underdetermined: column {column} has no pivot among {equations} equations")]
    Underdetermined { column: usize, equations: usize },
    #[error("system is inconsistent: equation {equation} has a non-zero residual")]
    Inconsistent { equation: usize },
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let den = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter().map(|c| c.numer() * (&den / c.denom())).collect()
}

/// Row index holding the largest `|a[i][col]|` for `i >= from`; ties go to the
/// lowest index. `None` if the column is zero there.
fn pivot_row(a: &[Vec<BigInt>], col: usize, from: usize) -> Option<usize> {
    let mut best: Option<(usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(from) {
        let mag = row[col].abs();
        if mag.is_zero() {
            continue;
        }
        match &best {
            Some((_, m)) if *m >= mag => {}
            _ => best = Some((i, mag)),
        }
    }
    best.map(|(i, _)| i)
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Rank of the matrix whose rows are `rows` (ragged rows are cut to the
/// shortest length).
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(width) = rows.iter().map(Vec::len).min() else {
        return 0;
    };
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(&r[..width])).collect();
    let mut r = 0;
    for col in 0..width {
        if r == a.len() {
            break;
        }
        let Some(p) = pivot_row(&a, col, r) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot = &top[r];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..width {
                row[j] = &pivot[col] * &row[j] - &factor * &pivot[j];
            }
            remove_content(row);
        }
        r += 1;
    }
    r
}

/// Solves `Σ_j x_j columns[j][n] = rhs[n]` for every equation `n`, requiring
/// a unique solution that satisfies all equations exactly.
///
/// Bareiss elimination with partial pivoting on exact magnitude; every
/// intermediate division is exact.
pub fn solve_overdetermined(
    columns: &[Vec<Rational>],
    rhs: &[Rational],
) -> Result<Vec<Rational>, LinearError> {
    let unknowns = columns.len();
    let equations = rhs.len();
    let mut a: Vec<Vec<BigInt>> = (0..equations)
        .map(|n| {
            let row: Vec<Rational> = columns
                .iter()
                .map(|c| c[n].clone())
                .chain(std::iter::once(rhs[n].clone()))
                .collect();
            integer_row(&row)
        })
        .collect();

    let mut original: Vec<usize> = (0..equations).collect();
    let mut prev = BigInt::one();
    for k in 0..unknowns {
        let p = pivot_row(&a, k, k).ok_or(LinearError::Underdetermined { column: k, equations })?;
        a.swap(k, p);
        original.swap(k, p);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in rest.iter_mut() {
            for j in (k + 1)..=unknowns {
                let v = &pivot[k] * &row[j] - &row[k] * &pivot[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = top[k][k].clone();
    }

    if let Some(bad) = (unknowns..equations)
        .filter(|&i| !a[i][unknowns].is_zero())
        .map(|i| original[i])
        .min()
    {
        return Err(LinearError::Inconsistent { equation: bad });
    }

    let mut x = vec![Rational::zero(); unknowns];
    for k in (0..unknowns).rev() {
        let mut acc = Rational::from_integer(a[k][unknowns].clone());
        for j in (k + 1)..unknowns {
            acc -= Rational::from_integer(a[k][j].clone()) * &x[j];
        }
        x[k] = acc / Rational::from_integer(a[k][k].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn rank_basic() {
        assert_eq!(rank(&[r(&[1, 2, 3]), r(&[2, 4, 6])]), 1);
        assert_eq!(rank(&[r(&[1, 2, 3]), r(&[0, 1, 1]), r(&[1, 3, 4])]), 2);
        assert_eq!(rank(&[r(&[0, 0]), r(&[0, 0])]), 0);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![rat(1, 2), rat(1, 3)], vec![rat(3, 1), rat(2, 1)]]), 1);
    }

    #[test]
    fn solves_square_system() {
        // x + y = 3, x - y = 1
        let cols = vec![r(&[1, 1]), r(&[1, -1])];
        assert_eq!(solve_overdetermined(&cols, &r(&[3, 1])).unwrap(), r(&[2, 1]));
    }

    #[test]
    fn solves_overdetermined_with_rationals() {
        // columns (1/2, 1, 2, 3) and (0, 1, 1, 1); x = (2/3, -5)
        let c0 = vec![rat(1, 2), rat(1, 1), rat(2, 1), rat(3, 1)];
        let c1 = r(&[0, 1, 1, 1]);
        let rhs: Vec<Rational> = (0..4)
            .map(|n| &c0[n] * rat(2, 3) + &c1[n] * rat(-5, 1))
            .collect();
        let x = solve_overdetermined(&[c0, c1], &rhs).unwrap();
        assert_eq!(x, vec![rat(2, 3), rat(-5, 1)]);
    }

    #[test]
    fn detects_inconsistency() {
        let cols = vec![r(&[1, 1, 1])];
        assert_eq!(
            solve_overdetermined(&cols, &r(&[1, 1, 2])),
            Err(LinearError::Inconsistent { equation: 2 })
        );
    }

    #[test]
    fn detects_underdetermined() {
        let cols = vec![r(&[1, 2]), r(&[2, 4])];
        assert!(matches!(
            solve_overdetermined(&cols, &r(&[1, 2])),
            Err(LinearError::Underdetermined { column: 1, .. })
        ));
    }
}
