//! Dense exact reference implementations.
//!
//! These work directly on big rationals and never touch the band code or λ.
//! They are slow on purpose: plain Bareiss elimination for determinants and
//! Gauss–Jordan elimination (first nonzero pivot) for inverses and solves.

use std::time::Instant;

use dashu_int::ops::{DivRem, Gcd};
use dashu_int::{IBig, UBig};

use crate::band::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub det: Rational,
    pub inverse: Option<DenseMatrix<Rational>>,
    /// `d · inverse = I` exactly; false when there is no inverse.
    pub residual_zero: bool,
}

fn square(d: &DenseMatrix<Rational>) -> Result<usize> {
    if !d.is_square() {
        return Err(Error::NotSquare { rows: d.rows(), cols: d.cols() });
    }
    Ok(d.rows())
}

fn rows(d: &DenseMatrix<Rational>) -> Vec<Vec<Rational>> {
    d.entries().chunks(d.cols().max(1)).map(<[Rational]>::to_vec).collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn oracle_det(d: &DenseMatrix<Rational>) -> Result<Rational> {
    let n = square(d)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    // Clear denominators row by row: det(d) = det(a) / Π scale.
    let mut scale = UBig::ONE;
    let mut a: Vec<Vec<IBig>> = rows(d)
        .into_iter()
        .map(|row| {
            let lcm = row.iter().fold(UBig::ONE, |acc, v| {
                let g = (&acc).gcd(v.denom());
                acc / g * v.denom()
            });
            scale *= &lcm;
            row.iter().map(|v| v.numer() * IBig::from(&lcm / v.denom())).collect()
        })
        .collect();

    let mut sign = IBig::ONE;
    let mut prev = IBig::ONE;
    for p in 0..n {
        let Some(pivot_row) = (p..n).find(|&r| a[r][p] != IBig::ZERO) else {
            return Ok(Rational::zero());
        };
        if pivot_row != p {
            a.swap(pivot_row, p);
            sign = -sign;
        }
        for r in p + 1..n {
            for c in p + 1..n {
                let (v, rem) = (&a[r][c] * &a[p][p] - &a[r][p] * &a[p][c]).div_rem(&prev);
                debug_assert!(rem == IBig::ZERO, "Bareiss division is exact");
                a[r][c] = v;
            }
            a[r][p] = IBig::ZERO;
        }
        prev = a[p][p].clone();
    }
    Ok(Rational::new(sign * &a[n - 1][n - 1], IBig::from(scale))?)
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn oracle_invert(d: &DenseMatrix<Rational>) -> Result<DenseMatrix<Rational>> {
    oracle_invert_until(d, None)?.ok_or_else(|| Error::InternalInconsistency("no deadline was set".into()))
}

/// Like [`oracle_invert`] but gives up with `Ok(None)` once `deadline` passes.
pub fn oracle_invert_until(d: &DenseMatrix<Rational>, deadline: Option<Instant>) -> Result<Option<DenseMatrix<Rational>>> {
    let n = square(d)?;
    let mut a = rows(d);
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
    }
    if !eliminate(&mut a, n, deadline)? {
        return Ok(None);
    }
    let inverse = a.into_iter().map(|row| row[n..].to_vec()).collect();
    Ok(Some(DenseMatrix::from_rows(inverse)?))
}

/// Reduces the augmented rows `a` (left block `n × n`) to `[I | X]`.
/// Returns false if the deadline passed first.
fn eliminate(a: &mut [Vec<Rational>], n: usize, deadline: Option<Instant>) -> Result<bool> {
    let expired = || deadline.is_some_and(|t| Instant::now() >= t);
    for p in 0..n {
        let pivot_row = (p..n).find(|&r| !a[r][p].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(pivot_row, p);
        let inv = a[p][p].recip()?;
        for v in a[p].iter_mut().skip(p) {
            *v = &*v * &inv;
        }
        let pivot = a[p].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == p || row[p].is_zero() {
                continue;
            }
            if expired() {
                return Ok(false);
            }
            let factor = row[p].clone();
            for (v, pv) in row.iter_mut().zip(&pivot).skip(p) {
                if !pv.is_zero() {
                    *v = &*v - &(&factor * pv);
                }
            }
        }
    }
    Ok(true)
}

/// Exact solution of `d · x = y` by elimination on `[d | y]`.
pub fn oracle_solve(d: &DenseMatrix<Rational>, y: &[Rational]) -> Result<Vec<Rational>> {
    let n = square(d)?;
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: y.len() });
    }
    let mut a = rows(d);
    for (row, v) in a.iter_mut().zip(y) {
        row.push(v.clone());
    }
    eliminate(&mut a, n, None)?;
    Ok(a.into_iter().map(|mut row| row.swap_remove(n)).collect())
}

/// Determinant of the `n × n` exchange matrix, from its dense form.
pub fn oracle_exchange_det(n: usize) -> Result<Rational> {
    let mut r = DenseMatrix::zeros(n, n);
    for i in 1..=n {
        r.set(i, n + 1 - i, Rational::one())?;
    }
    oracle_det(&r)
}

/// Determinant, inverse (when nonsingular) and an exact `d · inverse = I` check.
pub fn oracle_report(d: &DenseMatrix<Rational>) -> Result<OracleReport> {
    let det = oracle_det(d)?;
    if det.is_zero() {
        return Ok(OracleReport { det, inverse: None, residual_zero: false });
    }
    let inverse = oracle_invert(d)?;
    let residual_zero = is_identity(&d.mul(&inverse)?);
    Ok(OracleReport { det, inverse: Some(inverse), residual_zero })
}

fn is_identity(d: &DenseMatrix<Rational>) -> bool {
    let n = d.rows();
    d.entries().iter().enumerate().all(|(idx, v)| {
        if idx / n == idx % n {
            v.is_one()
        } else {
            v.is_zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, dense_from_ints};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    /// Cofactor expansion along the first row.
    fn cofactor_det(d: &DenseMatrix<Rational>) -> Rational {
        let n = d.rows();
        if n == 1 {
            return d.get(1, 1).unwrap().clone();
        }
        let mut total = Rational::zero();
        for j in 1..=n {
            let minor_rows = (2..=n)
                .map(|i| (1..=n).filter(|&c| c != j).map(|c| d.get(i, c).unwrap().clone()).collect())
                .collect();
            let minor = DenseMatrix::from_rows(minor_rows).unwrap();
            let term = d.get(1, j).unwrap() * &cofactor_det(&minor);
            total = if j % 2 == 1 { &total + &term } else { &total - &term };
        }
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(oracle_det(&dense_from_ints(&[&[1, 2], &[3, 4]])).unwrap(), Rational::from_integer(-2));
        assert_eq!(oracle_det(&fixtures::example1().to_dense()).unwrap(), Rational::from_integer(153));
        assert_eq!(oracle_det(&fixtures::example2().to_dense()).unwrap(), Rational::from_integer(1888));
        assert_eq!(oracle_det(&fixtures::example3().to_dense()).unwrap(), Rational::from_integer(14));
        let halves = DenseMatrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(1, 4), q(1, 5)]]).unwrap();
        assert_eq!(oracle_det(&halves).unwrap(), q(1, 10) - q(1, 12));
        assert!(oracle_det(&DenseMatrix::<Rational>::zeros(2, 3)).is_err());
    }

    #[test]
    fn exchange_determinants() {
        assert_eq!(oracle_exchange_det(1).unwrap(), Rational::one());
        assert_eq!(oracle_exchange_det(2).unwrap(), Rational::from_integer(-1));
        assert_eq!(oracle_exchange_det(6).unwrap(), Rational::from_integer(-1));
        assert_eq!(oracle_exchange_det(5).unwrap(), Rational::one());
    }

    #[test]
    fn inverses() {
        let id = DenseMatrix::<Rational>::identity(4);
        assert_eq!(oracle_invert(&id).unwrap(), id);
        let diag = dense_from_ints(&[&[2, 0], &[0, 4]]);
        let want = DenseMatrix::from_rows(vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(1, 4)]]).unwrap();
        assert_eq!(oracle_invert(&diag).unwrap(), want);
        assert!(matches!(oracle_invert(&dense_from_ints(&[&[1, 2], &[2, 4]])), Err(Error::SingularMatrix)));
        let report = oracle_report(&fixtures::example1().to_dense()).unwrap();
        assert!(report.residual_zero);
        // the entry whose printed value disagrees between display and column list
        assert_eq!(report.inverse.unwrap().get(1, 3).unwrap(), &q(-44, 153));
    }

    #[test]
    fn deadline_in_the_past_gives_up() {
        let d = fixtures::example2().to_dense();
        assert_eq!(oracle_invert_until(&d, Some(Instant::now())).unwrap(), None);
    }

    #[test]
    fn solves() {
        let x = oracle_solve(&fixtures::example3().to_dense(), &fixtures::example3_rhs()).unwrap();
        assert_eq!(x, vec![Rational::one(); 6]);
        let y = vec![q(1, 2), q(-3, 1), q(5, 7)];
        assert_eq!(oracle_solve(&DenseMatrix::identity(3), &y).unwrap(), y);
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactors(n in 1usize..=5, seed in prop::collection::vec(-4i64..=4, 25)) {
            let rows: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| Rational::from_integer(seed[i * 5 + j])).collect()).collect();
            let d = DenseMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(oracle_det(&d).unwrap(), cofactor_det(&d));
        }

        #[test]
        fn solve_matches_inverse(seed in prop::collection::vec(-4i64..=4, 16), rhs in prop::collection::vec(-5i64..=5, 4)) {
            let rows: Vec<Vec<Rational>> = (0..4).map(|i| (0..4).map(|j| Rational::from_integer(seed[i * 4 + j])).collect()).collect();
            let d = DenseMatrix::from_rows(rows).unwrap();
            let y: Vec<Rational> = rhs.into_iter().map(Rational::from_integer).collect();
            prop_assume!(!oracle_det(&d).unwrap().is_zero());
            let inv = oracle_invert(&d).unwrap();
            prop_assert!(is_identity(&inv.mul(&d).unwrap()));
            prop_assert_eq!(oracle_solve(&d, &y).unwrap(), inv.mul_vec(&y).unwrap());
        }
    }
}
