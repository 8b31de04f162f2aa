use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Row-major dense matrix. Public indexing is 1-based.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Field> DenseMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(DenseMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(DenseMatrix { rows: n_rows, cols, entries })
    }

    /// Assembles a matrix from its columns.
    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut out = Self::zeros(rows, cols);
        for (j, column) in columns.into_iter().enumerate() {
            if column.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: column.len() });
            }
            for (i, v) in column.into_iter().enumerate() {
                out.entries[i * cols + j] = v;
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    fn check(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || j == 0 || i > self.rows || j > self.cols {
            return Err(Error::IndexOutOfRange { i, j, n: self.rows.max(self.cols) });
        }
        Ok((i - 1) * self.cols + (j - 1))
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> Result<&T> {
        let at = self.check(i, j)?;
        Ok(&self.entries[at])
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) -> Result<()> {
        let at = self.check(i, j)?;
        self.entries[at] = value;
        Ok(())
    }

    pub(crate) fn at(&self, i0: usize, j0: usize) -> &T {
        &self.entries[i0 * self.cols + j0]
    }

    pub(crate) fn at_mut(&mut self, i0: usize, j0: usize) -> &mut T {
        &mut self.entries[i0 * self.cols + j0]
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        assert!(i >= 1 && i <= self.rows, "row {i} out of range");
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    /// Column `j` (1-based), copied out.
    pub fn column(&self, j: usize) -> Vec<T> {
        assert!(j >= 1 && j <= self.cols, "column {j} out of range");
        (0..self.rows).map(|i| self.entries[i * self.cols + j - 1].clone()).collect()
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U: Field, E>(&self, f: impl Fn(&T) -> std::result::Result<U, E>) -> std::result::Result<DenseMatrix<U>, E> {
        let entries = self.entries.iter().map(f).collect::<std::result::Result<Vec<_>, E>>()?;
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for p in 0..self.cols {
                let a = self.at(i, p);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(p, j);
                    if !b.is_zero() {
                        let cell = out.at_mut(i, j);
                        *cell = cell.plus(&a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.entries[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.at(i, j);
                    if i == j {
                        *v == T::one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Row `i` of the result is row `rows + 1 - i` of `self` (left multiplication by the exchange matrix).
    pub fn reverse_rows(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for i in (0..self.rows).rev() {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
        }
        DenseMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Column `j` of the result is column `cols + 1 - j` of `self`.
    pub fn reverse_columns(&self) -> Self {
        let mut entries = self.entries.clone();
        for row in entries.chunks_mut(self.cols.max(1)) {
            row.reverse();
        }
        DenseMatrix { rows: self.rows, cols: self.cols, entries }
    }
}

impl<T: fmt::Display> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.entries.chunks(self.cols.max(1)) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn int(rows: &[&[i64]]) -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn reverse_rows_examples() {
        let d = int(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(d.reverse_rows(), int(&[&[5, 6], &[3, 4], &[1, 2]]));
        assert_eq!(d.reverse_rows().reverse_rows(), d);
        let single = int(&[&[7, 8, 9]]);
        assert_eq!(single.reverse_rows(), single);
    }

    #[test]
    fn multiply_and_identity() {
        let a = int(&[&[1, 2], &[3, 4]]);
        let i = DenseMatrix::identity(2);
        assert_eq!(a.mul(&i).unwrap(), a);
        assert!(i.is_identity());
        assert!(!a.is_identity());
        assert_eq!(a.mul(&a).unwrap(), int(&[&[7, 10], &[15, 22]]));
        assert_eq!(a.mul_vec(&[Rational::one(), Rational::one()]).unwrap(), vec![Rational::from_integer(3), Rational::from_integer(7)]);
    }

    #[test]
    fn indexing_is_one_based() {
        let a = int(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.get(2, 1).unwrap(), &Rational::from_integer(3));
        assert!(matches!(a.get(0, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(a.get(3, 1), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(a.column(2), vec![Rational::from_integer(2), Rational::from_integer(4)]);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![1.0, 2.0], vec![3.0]];
        assert!(matches!(DenseMatrix::<f64>::from_rows(rows), Err(Error::DimensionMismatch { .. })));
    }
}
