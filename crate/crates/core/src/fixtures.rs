//! The three worked examples used as golden fixtures.

use crate::band::{DenseMatrix, PeriodicBandMatrix};
use crate::scalar::{Rational, ScalarMode};

pub fn dense_from_ints(rows: &[&[i64]]) -> DenseMatrix<Rational> {
    DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect()).collect())
        .expect("rectangular fixture")
}

fn band(rows: &[&[i64]], k: usize) -> PeriodicBandMatrix<Rational> {
    PeriodicBandMatrix::from_dense(&dense_from_ints(rows), k, ScalarMode::ExactLambda).expect("fixture fits the band pattern")
}

const EXAMPLE1: &[&[i64]] = &[
    &[2, 1, 0, 0, 0, 1],
    &[1, -1, 2, 0, 0, 0],
    &[0, 2, -2, 3, 0, 0],
    &[0, 0, -1, 1, 1, 0],
    &[0, 0, 0, 2, -3, -2],
    &[2, 0, 0, 0, 1, 5],
];

const EXAMPLE1_ANTI: &[&[i64]] = &[
    &[1, 0, 0, 0, 1, 2],
    &[0, 0, 0, 2, -1, 1],
    &[0, 0, 3, -2, 2, 0],
    &[0, 1, 1, -1, 0, 0],
    &[-2, -3, 2, 0, 0, 0],
    &[5, 1, 0, 0, 0, 2],
];

const EXAMPLE2: &[&[i64]] = &[
    &[1, -1, 2, 2, -1, 0, 0, 0, 0, 1],
    &[2, -1, 3, 1, 1, 2, 0, 0, 0, 0],
    &[1, -1, 1, 2, 1, -2, -1, 0, 0, 0],
    &[-3, 1, -1, 1, -3, 1, 1, -3, 0, 0],
    &[2, -1, 1, 0, -3, 2, 1, -1, -1, 0],
    &[0, 1, 2, 0, -1, 0, -2, 1, 0, 1],
    &[0, 0, -2, 0, 1, -1, 1, -2, 1, -1],
    &[0, 0, 0, 1, 3, 2, -1, 1, 2, 1],
    &[0, 0, 0, 0, -1, 0, 2, 1, -2, 1],
    &[2, 0, 0, 0, 0, 2, 1, 1, -1, 2],
];

/// As printed alongside example 2; this is the row reversal `R·M`, not `M·R`.
const EXAMPLE2_ANTI_PRINTED: &[&[i64]] = &[
    &[2, 0, 0, 0, 0, 2, 1, 1, -1, 2],
    &[0, 0, 0, 0, -1, 0, 2, 1, -2, 1],
    &[0, 0, 0, 1, 3, 2, -1, 1, 2, 1],
    &[0, 0, -2, 0, 1, -1, 1, -2, 1, -1],
    &[0, 1, 2, 0, -1, 0, -2, 1, 0, 1],
    &[2, -1, 1, 0, -3, 2, 1, -1, -1, 0],
    &[-3, 1, -1, 1, -3, 1, 1, -3, 0, 0],
    &[1, -1, 1, 2, 1, -2, -1, 0, 0, 0],
    &[2, -1, 3, 1, 1, 2, 0, 0, 0, 0],
    &[1, -1, 2, 2, -1, 0, 0, 0, 0, 1],
];

const EXAMPLE3: &[&[i64]] = &[
    &[1, 2, -1, 0, 0, 1],
    &[2, -1, -3, 1, 0, 0],
    &[1, 1, -1, 1, 2, 0],
    &[0, 2, 1, 1, -1, -2],
    &[0, 0, -1, -2, 1, 3],
    &[1, 0, 0, 1, 1, 1],
];

/// 6×6 periodic tridiagonal matrix (k = 3), determinant 153.
pub fn example1() -> PeriodicBandMatrix<Rational> {
    band(EXAMPLE1, 3)
}

/// The anti-banded counterpart of [`example1`] exactly as printed.
pub fn example1_anti_dense() -> DenseMatrix<Rational> {
    dense_from_ints(EXAMPLE1_ANTI)
}

/// 10×10 periodic 9-banded matrix, determinant 1888.
pub fn example2() -> PeriodicBandMatrix<Rational> {
    band(EXAMPLE2, 9)
}

/// The anti-banded counterpart `M·R` of [`example2`].
pub fn example2_anti_dense() -> DenseMatrix<Rational> {
    example2().to_dense().reverse_columns()
}

/// The matrix printed as example 2's anti-banded counterpart. It equals `R·M`.
pub fn example2_anti_printed() -> DenseMatrix<Rational> {
    dense_from_ints(EXAMPLE2_ANTI_PRINTED)
}

/// 6×6 periodic pentadiagonal system (k = 5), determinant 14.
pub fn example3() -> PeriodicBandMatrix<Rational> {
    band(EXAMPLE3, 5)
}

/// Right-hand side of the pentadiagonal system; the solution is all ones.
pub fn example3_rhs() -> Vec<Rational> {
    [3, -1, 4, 1, 1, 4].iter().map(|&v| Rational::from_integer(v)).collect()
}
