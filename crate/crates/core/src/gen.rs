//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::band::{check_bandwidth, PeriodicBandMatrix};
use crate::error::{Error, Result};
use crate::scalar::{Entry, Rational};

/// Integer-valued diagonals (`k` of them, by offset) and the two corners.
/// `draw` receives the diagonal offset, or `None` for a corner.
fn integer_band(n: usize, k: usize, mut draw: impl FnMut(Option<isize>) -> i64) -> (Vec<Vec<i64>>, i64, i64) {
    let h = (k - 1) / 2;
    let diagonals = (0..k)
        .map(|idx| {
            let offset = idx as isize - h as isize;
            (0..n - idx.abs_diff(h)).map(|_| draw(Some(offset))).collect()
        })
        .collect();
    let c1n = draw(None);
    let cn1 = draw(None);
    (diagonals, c1n, cn1)
}

fn build<T: Entry>(n: usize, k: usize, (diagonals, c1n, cn1): (Vec<Vec<i64>>, i64, i64)) -> Result<PeriodicBandMatrix<T>> {
    let lift = |v: i64| T::from_rational(&Rational::from_integer(v));
    let diagonals = diagonals.into_iter().map(|d| d.into_iter().map(lift).collect()).collect();
    PeriodicBandMatrix::new(n, k, diagonals, lift(c1n), lift(cn1), T::default_mode())
}

/// Band entries uniform over the nonzero integers in `[-3, 3]`, each then
/// zeroed with probability `zero_probability`; corners are always drawn.
/// Deterministic in `seed`.
pub fn generate(n: usize, k: usize, seed: u64, zero_probability: f64) -> Result<PeriodicBandMatrix<Rational>> {
    check_bandwidth(n, k)?;
    if !(0.0..=1.0).contains(&zero_probability) {
        return Err(Error::Scalar(crate::scalar::ScalarError::InvalidInput(format!(
            "zero probability {zero_probability} is outside [0, 1]"
        ))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let band = integer_band(n, k, |offset| {
        let v = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        if offset.is_some() && zero_probability > 0.0 && rng.gen_bool(zero_probability) {
            0
        } else {
            v
        }
    });
    build(n, k, band)
}

/// Strictly diagonally dominant instance: nonzero off-diagonal entries in
/// `[-3, 3]`, diagonal `±(row sum + 1)`. Such matrices never need λ.
pub fn diagonally_dominant<T: Entry>(n: usize, k: usize, seed: u64) -> Result<PeriodicBandMatrix<T>> {
    check_bandwidth(n, k)?;
    let h = (k - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut diagonals, c1n, cn1) = integer_band(n, k, |offset| match offset {
        Some(0) => 0,
        _ => rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 },
    });
    let mut row_sums = vec![0i64; n];
    for (idx, diag) in diagonals.iter().enumerate() {
        let offset = idx as isize - h as isize;
        for (pos, v) in diag.iter().enumerate() {
            let row = if offset >= 0 { pos } else { pos + offset.unsigned_abs() };
            row_sums[row] += v.abs();
        }
    }
    row_sums[0] += c1n.abs();
    row_sums[n - 1] += cn1.abs();
    diagonals[h] = row_sums.iter().map(|s| if rng.gen_bool(0.5) { s + 1 } else { -(s + 1) }).collect();
    build(n, k, (diagonals, c1n, cn1))
}
