use crate::error::{Error, Result};
use crate::scalar::{Entry, Field, ScalarMode};

use super::DenseMatrix;

/// Checks the shape constraints shared by every periodic band matrix.
pub fn check_bandwidth(n: usize, k: usize) -> Result<()> {
    if k < 3 || k.is_multiple_of(2) || n < k + 1 {
        return Err(Error::InvalidBandwidth { n, k });
    }
    Ok(())
}

/// A periodic k-banded matrix: entries with `|i - j| <= h`, `h = (k - 1) / 2`,
/// plus the two corners `a(1,n)` and `a(n,1)`.
///
/// Storage is one sequence per diagonal offset `d` in `-h..=h`. Diagonal `d`
/// holds `n - |d|` entries ordered by row, so entry `t` (1-based) of offset `d >= 0`
/// is `a(t, t + d)` and of offset `d < 0` is `a(t - d, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicBandMatrix<T> {
    n: usize,
    k: usize,
    diagonals: Vec<Vec<T>>,
    corner_1n: T,
    corner_n1: T,
    mode: ScalarMode,
}

impl<T: Field> PeriodicBandMatrix<T> {
    /// `diagonals[d + h]` is the diagonal at offset `d`.
    pub fn new(n: usize, k: usize, diagonals: Vec<Vec<T>>, corner_1n: T, corner_n1: T, mode: ScalarMode) -> Result<Self> {
        let m = PeriodicBandMatrix { n, k, diagonals, corner_1n, corner_n1, mode };
        m.validate()?;
        Ok(m)
    }

    pub fn zeros(n: usize, k: usize, mode: ScalarMode) -> Result<Self> {
        check_bandwidth(n, k)?;
        let h = (k - 1) / 2;
        let diagonals = (0..k).map(|idx| vec![T::zero(); n - idx.abs_diff(h)]).collect();
        Ok(PeriodicBandMatrix { n, k, diagonals, corner_1n: T::zero(), corner_n1: T::zero(), mode })
    }

    pub fn identity(n: usize, k: usize, mode: ScalarMode) -> Result<Self> {
        let mut m = Self::zeros(n, k, mode)?;
        let h = m.half_bandwidth();
        m.diagonals[h].iter_mut().for_each(|v| *v = T::one());
        Ok(m)
    }

    /// Verifies the bandwidth constraints and every diagonal length.
    pub fn validate(&self) -> Result<()> {
        check_bandwidth(self.n, self.k)?;
        let h = self.half_bandwidth();
        if self.diagonals.len() != self.k {
            return Err(Error::DimensionMismatch { expected: self.k, found: self.diagonals.len() });
        }
        for (idx, diag) in self.diagonals.iter().enumerate() {
            let offset = idx as isize - h as isize;
            let expected = self.n - idx.abs_diff(h);
            if diag.len() != expected {
                return Err(Error::LengthMismatch { offset, expected, found: diag.len() });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn half_bandwidth(&self) -> usize {
        (self.k - 1) / 2
    }

    pub fn mode(&self) -> ScalarMode {
        self.mode
    }

    pub fn with_mode(mut self, mode: ScalarMode) -> Self {
        self.mode = mode;
        self
    }

    /// The diagonal at `offset` (`-h..=h`).
    pub fn diagonal(&self, offset: isize) -> &[T] {
        let h = self.half_bandwidth() as isize;
        assert!(offset.abs() <= h, "offset {offset} outside the band");
        &self.diagonals[(offset + h) as usize]
    }

    pub fn diagonals(&self) -> &[Vec<T>] {
        &self.diagonals
    }

    pub fn corner_1n(&self) -> &T {
        &self.corner_1n
    }

    pub fn corner_n1(&self) -> &T {
        &self.corner_n1
    }

    /// Storage slot of 0-based `(i0, j0)`, or `None` for a structural zero.
    fn slot(&self, i0: usize, j0: usize) -> Option<(usize, usize)> {
        let h = self.half_bandwidth();
        if i0.abs_diff(j0) <= h {
            Some((j0 + h - i0, i0.min(j0)))
        } else {
            None
        }
    }

    /// 0-based access; `None` means the position is structurally zero.
    pub(crate) fn entry0(&self, i0: usize, j0: usize) -> Option<&T> {
        match self.slot(i0, j0) {
            Some((d, t)) => Some(&self.diagonals[d][t]),
            None if i0 == 0 && j0 == self.n - 1 => Some(&self.corner_1n),
            None if i0 == self.n - 1 && j0 == 0 => Some(&self.corner_n1),
            None => None,
        }
    }

    pub(crate) fn entry0_mut(&mut self, i0: usize, j0: usize) -> Option<&mut T> {
        match self.slot(i0, j0) {
            Some((d, t)) => Some(&mut self.diagonals[d][t]),
            None if i0 == 0 && j0 == self.n - 1 => Some(&mut self.corner_1n),
            None if i0 == self.n - 1 && j0 == 0 => Some(&mut self.corner_n1),
            None => None,
        }
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(())
    }

    /// Entry `a(i, j)` with 1-based indices; zero outside the band and corners.
    pub fn get(&self, i: usize, j: usize) -> Result<T> {
        self.check_index(i, j)?;
        Ok(self.entry0(i - 1, j - 1).cloned().unwrap_or_else(T::zero))
    }

    /// Sets `a(i, j)`; positions outside the pattern are rejected.
    pub fn set(&mut self, i: usize, j: usize, value: T) -> Result<()> {
        self.check_index(i, j)?;
        match self.entry0_mut(i - 1, j - 1) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None if value.is_zero() => Ok(()),
            None => Err(Error::PatternViolation { i, j }),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let n = self.n;
        let mut d = DenseMatrix::zeros(n, n);
        for i0 in 0..n {
            let h = self.half_bandwidth();
            for j0 in i0.saturating_sub(h)..(i0 + h + 1).min(n) {
                *d.at_mut(i0, j0) = self.entry0(i0, j0).cloned().expect("band position");
            }
        }
        *d.at_mut(0, n - 1) = self.corner_1n.clone();
        *d.at_mut(n - 1, 0) = self.corner_n1.clone();
        d
    }

    /// Extracts the band and corners of a square dense matrix, rejecting any
    /// nonzero outside the pattern (first offender in row-major order).
    pub fn from_dense(d: &DenseMatrix<T>, k: usize, mode: ScalarMode) -> Result<Self> {
        if !d.is_square() {
            return Err(Error::NotSquare { rows: d.rows(), cols: d.cols() });
        }
        let mut m = Self::zeros(d.rows(), k, mode)?;
        for i0 in 0..m.n {
            for j0 in 0..m.n {
                let v = d.at(i0, j0);
                match m.entry0_mut(i0, j0) {
                    Some(slot) => *slot = v.clone(),
                    None if v.is_zero() => {}
                    None => return Err(Error::PatternViolation { i: i0 + 1, j: j0 + 1 }),
                }
            }
        }
        Ok(m)
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> PeriodicBandMatrix<U> {
        PeriodicBandMatrix {
            n: self.n,
            k: self.k,
            diagonals: self.diagonals.iter().map(|d| d.iter().map(&f).collect()).collect(),
            corner_1n: f(&self.corner_1n),
            corner_n1: f(&self.corner_n1),
            mode: self.mode,
        }
    }

    pub fn try_map<U: Field, E>(&self, f: impl Fn(&T) -> std::result::Result<U, E>) -> std::result::Result<PeriodicBandMatrix<U>, E> {
        Ok(PeriodicBandMatrix {
            n: self.n,
            k: self.k,
            diagonals: self
                .diagonals
                .iter()
                .map(|d| d.iter().map(&f).collect::<std::result::Result<Vec<_>, E>>())
                .collect::<std::result::Result<Vec<_>, E>>()?,
            corner_1n: f(&self.corner_1n)?,
            corner_n1: f(&self.corner_n1)?,
            mode: self.mode,
        })
    }

    /// `M·x` using only the stored pattern.
    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        let n = self.n;
        let h = self.half_bandwidth();
        let mut y: Vec<T> = (0..n)
            .map(|i0| {
                (i0.saturating_sub(h)..(i0 + h + 1).min(n)).fold(T::zero(), |acc, j0| {
                    acc.plus(&self.entry0(i0, j0).expect("band position").times(&x[j0]))
                })
            })
            .collect();
        y[0] = y[0].plus(&self.corner_1n.times(&x[n - 1]));
        y[n - 1] = y[n - 1].plus(&self.corner_n1.times(&x[0]));
        Ok(y)
    }

    /// Multiplies every entry by `c`.
    pub fn scaled(&self, c: &T) -> Self {
        self.map(|v| v.times(c))
    }

    /// `N = M·R`: reverses the column order, giving a periodic anti-banded matrix.
    pub fn reverse_columns(&self) -> AntiPeriodicBandMatrix<T> {
        AntiPeriodicBandMatrix { image: self.clone() }
    }
}

impl<T: Entry> PeriodicBandMatrix<T> {
    /// Largest entry magnitude in 0-based row `i0`.
    pub(crate) fn row_scale(&self, i0: usize) -> f64 {
        let h = self.half_bandwidth();
        let mut scale = (i0.saturating_sub(h)..(i0 + h + 1).min(self.n))
            .map(|j0| self.entry0(i0, j0).expect("band position").magnitude())
            .fold(0.0, f64::max);
        if i0 == 0 {
            scale = scale.max(self.corner_1n.magnitude());
        }
        if i0 == self.n - 1 {
            scale = scale.max(self.corner_n1.magnitude());
        }
        scale
    }

    /// The same matrix in another entry type, e.g. exact to float.
    pub fn convert<U: Entry>(&self, mode: ScalarMode) -> Result<PeriodicBandMatrix<U>> {
        let converted = self.try_map(|v| match v.exact_value() {
            Some(r) => Ok(U::from_rational(&r)),
            None => U::from_f64(v.as_f64()),
        })?;
        Ok(converted.with_mode(mode))
    }
}

/// A periodic anti-k-banded matrix `N`: nonzero only where `|i + j - (n + 1)| <= h`,
/// plus the corners `(1,1)` and `(n,n)`.
///
/// Stored as its column-reversed image `M = N·R`, which is periodic banded. The
/// anti-diagonal at offset `e` holds `N(i, n + 1 - i - e)` in row order, which is
/// exactly diagonal `e` of `M`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiPeriodicBandMatrix<T> {
    image: PeriodicBandMatrix<T>,
}

impl<T: Field> AntiPeriodicBandMatrix<T> {
    /// `anti_diagonals[e + h]` lists `N(i, n + 1 - i - e)` by ascending row;
    /// `corner_11` is `N(1,1)` and `corner_nn` is `N(n,n)`.
    pub fn new(n: usize, k: usize, anti_diagonals: Vec<Vec<T>>, corner_11: T, corner_nn: T, mode: ScalarMode) -> Result<Self> {
        Ok(AntiPeriodicBandMatrix { image: PeriodicBandMatrix::new(n, k, anti_diagonals, corner_11, corner_nn, mode)? })
    }

    pub fn validate(&self) -> Result<()> {
        self.image.validate()
    }

    pub fn n(&self) -> usize {
        self.image.n
    }

    pub fn k(&self) -> usize {
        self.image.k
    }

    pub fn mode(&self) -> ScalarMode {
        self.image.mode
    }

    pub fn anti_diagonal(&self, offset: isize) -> &[T] {
        self.image.diagonal(offset)
    }

    pub fn corner_11(&self) -> &T {
        &self.image.corner_1n
    }

    pub fn corner_nn(&self) -> &T {
        &self.image.corner_n1
    }

    pub fn get(&self, i: usize, j: usize) -> Result<T> {
        let n = self.n();
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        self.image.get(i, n + 1 - j)
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        self.image.to_dense().reverse_columns()
    }

    pub fn from_dense(d: &DenseMatrix<T>, k: usize, mode: ScalarMode) -> Result<Self> {
        let n = d.cols();
        let image = PeriodicBandMatrix::from_dense(&d.reverse_columns(), k, mode).map_err(|e| match e {
            Error::PatternViolation { i, j } => Error::PatternViolation { i, j: n + 1 - j },
            other => other,
        })?;
        Ok(AntiPeriodicBandMatrix { image })
    }

    /// `M = N·R`, the periodic banded matrix whose column reversal is `self`.
    pub fn to_periodic(&self) -> PeriodicBandMatrix<T> {
        self.image.clone()
    }

    pub fn as_periodic(&self) -> &PeriodicBandMatrix<T> {
        &self.image
    }
}

/// The exchange (reversal) permutation `R`. Never stored densely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeOperator {
    n: usize,
}

impl ExchangeOperator {
    pub fn new(n: usize) -> Self {
        ExchangeOperator { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `M·R`.
    pub fn apply_right<T: Field>(&self, m: &PeriodicBandMatrix<T>) -> Result<AntiPeriodicBandMatrix<T>> {
        self.check(m.n())?;
        Ok(m.reverse_columns())
    }

    /// `R·D`.
    pub fn apply_left<T: Field>(&self, d: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
        self.check(d.rows())?;
        Ok(d.reverse_rows())
    }

    /// `R·x`.
    pub fn apply_vec<T: Clone>(&self, x: &[T]) -> Result<Vec<T>> {
        self.check(x.len())?;
        Ok(x.iter().rev().cloned().collect())
    }

    fn check(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found });
        }
        Ok(())
    }
}

pub fn pbm_validate<T: Field>(m: &PeriodicBandMatrix<T>) -> Result<()> {
    m.validate()
}

pub fn pbm_get<T: Field>(m: &PeriodicBandMatrix<T>, i: usize, j: usize) -> Result<T> {
    m.get(i, j)
}

pub fn pbm_to_dense<T: Field>(m: &PeriodicBandMatrix<T>) -> DenseMatrix<T> {
    m.to_dense()
}

pub fn dense_to_pbm<T: Entry>(d: &DenseMatrix<T>, k: usize) -> Result<PeriodicBandMatrix<T>> {
    PeriodicBandMatrix::from_dense(d, k, T::default_mode())
}

pub fn reverse_columns<T: Field>(m: &PeriodicBandMatrix<T>) -> AntiPeriodicBandMatrix<T> {
    m.reverse_columns()
}

pub fn reverse_rows<T: Field>(d: &DenseMatrix<T>) -> DenseMatrix<T> {
    d.reverse_rows()
}

pub fn apbm_to_pbm<T: Field>(nmat: &AntiPeriodicBandMatrix<T>) -> PeriodicBandMatrix<T> {
    nmat.to_periodic()
}
