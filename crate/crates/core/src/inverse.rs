//! Inverses of periodic k-banded and anti-k-banded matrices.
//!
//! The last `h + 1` columns of `M⁻¹` come from `U⁻¹·L⁻¹` (only the last `h`
//! columns of `L⁻¹` are needed). The rest follow from `M⁻¹·M = I` read column
//! by column, from right to left:
//!
//! ```text
//! C_j = (E_{j+h} - Σ_{r=j+1}^{j+2h} a(r, j+h)·C_r) / a(j, j+h)
//! ```
//!
//! Both stages run on the perturbed working matrix of the factorization, and
//! every entry is evaluated at λ = 0 only when the column is final. For exact
//! matrices whose `a(j, j+h)` are all nonzero, the recurrence runs on `M`
//! itself in integer arithmetic instead.

use std::collections::{BTreeMap, VecDeque};

use dashu_int::ops::{DivRem, Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};

use crate::band::{AntiPeriodicBandMatrix, DenseMatrix, PeriodicBandMatrix};
use crate::error::{Error, Result};
use crate::factor::{factorize, LuFactors};
use crate::parallel::{map_range, try_map_range, Parallelism};
use crate::scalar::{CommonDenominator, Entry, Field, Rational, ScalarError};

/// Selected columns of `L⁻¹`. Column `r` stores `t(r+1, r) … t(n, r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LInverseColumns<W> {
    n: usize,
    cols: BTreeMap<usize, Vec<W>>,
}

impl<W: Field> LInverseColumns<W> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.cols.keys().copied()
    }

    /// The stored part of column `r`, below the diagonal.
    pub fn column(&self, r: usize) -> Option<&[W]> {
        self.cols.get(&r).map(Vec::as_slice)
    }

    /// `t(i, r)` (1-based), with the implicit unit diagonal and zeros above it.
    pub fn t(&self, i: usize, r: usize) -> Option<W> {
        let col = self.cols.get(&r)?;
        Some(match i.cmp(&r) {
            std::cmp::Ordering::Less => W::zero(),
            std::cmp::Ordering::Equal => W::one(),
            std::cmp::Ordering::Greater => col.get(i - r - 1)?.clone(),
        })
    }
}

/// Full columns `C_r = (S(1,r) … S(n,r))` of an inverse, keyed by 1-based `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseColumns<W> {
    n: usize,
    cols: BTreeMap<usize, Vec<W>>,
}

impl<W: Field> InverseColumns<W> {
    pub fn new(n: usize) -> Self {
        InverseColumns { n, cols: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.cols.len() == self.n
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.cols.keys().copied()
    }

    pub fn column(&self, r: usize) -> Option<&[W]> {
        self.cols.get(&r).map(Vec::as_slice)
    }

    pub fn insert(&mut self, r: usize, col: Vec<W>) {
        debug_assert_eq!(col.len(), self.n);
        self.cols.insert(r, col);
    }

    /// The dense matrix with these columns; fails unless all `n` are present.
    pub fn assemble(&self) -> Result<DenseMatrix<W>> {
        if !self.is_complete() {
            return Err(Error::DimensionMismatch { expected: self.n, found: self.cols.len() });
        }
        DenseMatrix::from_columns(self.cols.values().cloned().collect())
    }

    /// Evaluates every entry at λ = 0.
    pub fn settle<T: Entry<Work = W>>(&self) -> Result<InverseColumns<T>> {
        let mut out = InverseColumns::new(self.n);
        for (&r, col) in &self.cols {
            out.insert(r, settle_column::<T>(col)?);
        }
        Ok(out)
    }
}

fn settle_one<T: Entry>(w: &T::Work) -> Result<T> {
    T::settle(w).map_err(|e| match e {
        ScalarError::PoleAtZero => Error::SingularMatrix,
        other => other.into(),
    })
}

fn settle_column<T: Entry>(col: &[T::Work]) -> Result<Vec<T>> {
    col.iter().map(settle_one::<T>).collect()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct InverseOptions {
    pub parallelism: Parallelism,
}

/// Columns `wanted` (1-based, each in `1..n`) of `L⁻¹`.
pub fn linverse_columns<T: Entry>(f: &LuFactors<T>, wanted: &[usize]) -> Result<LInverseColumns<T::Work>> {
    linverse_columns_with(f, wanted, Parallelism::default())
}

pub fn linverse_columns_with<T: Entry>(f: &LuFactors<T>, wanted: &[usize], par: Parallelism) -> Result<LInverseColumns<T::Work>> {
    let n = f.n();
    if let Some(&bad) = wanted.iter().find(|&&r| r == 0 || r >= n) {
        return Err(Error::IndexOutOfRange { i: bad, j: bad, n });
    }
    let cols = map_range(par, wanted.len(), |idx| {
        let r0 = wanted[idx] - 1;
        linverse_column(f, r0)
    });
    Ok(LInverseColumns { n, cols: wanted.iter().copied().zip(cols).collect() })
}

/// `t(i0, r0)` for `i0 = r0+1 .. n-1` (0-based).
fn linverse_column<T: Entry>(f: &LuFactors<T>, r0: usize) -> Vec<T::Work> {
    let n = f.n();
    let mut t: Vec<T::Work> = Vec::with_capacity(n - r0 - 1);
    for i0 in r0 + 1..n {
        let range = f.lower_row_range(i0);
        let mut acc = if range.contains(&r0) { f.l0(i0, r0).negated() } else { T::Work::zero() };
        for j0 in range.start.max(r0 + 1)..i0 {
            acc = acc.minus_product(f.l0(i0, j0), &t[j0 - r0 - 1]);
        }
        t.push(acc);
    }
    t
}

/// The last `h + 1` columns of the (working) inverse, `U⁻¹` applied to columns of `L⁻¹`.
pub fn last_columns<T: Entry>(f: &LuFactors<T>, t: &LInverseColumns<T::Work>) -> Result<InverseColumns<T::Work>> {
    last_columns_with(f, t, Parallelism::default())
}

pub fn last_columns_with<T: Entry>(f: &LuFactors<T>, t: &LInverseColumns<T::Work>, par: Parallelism) -> Result<InverseColumns<T::Work>> {
    let n = f.n();
    let first = n - f.half_bandwidth();
    for r in first..n {
        if t.column(r).is_none() {
            return Err(Error::InternalInconsistency(format!("column {r} of the inverse of L is missing")));
        }
    }
    let inv_pivots = f.pivots().iter().map(|u| T::Work::one().divided_by(u)).collect::<std::result::Result<Vec<_>, _>>()?;
    let count = n - first + 1;
    let cols = map_range(par, count, |idx| {
        let r = first + idx;
        let rhs = |i0: usize| -> T::Work {
            match (i0 + 1).cmp(&r) {
                std::cmp::Ordering::Less => T::Work::zero(),
                std::cmp::Ordering::Equal => T::Work::one(),
                std::cmp::Ordering::Greater => t.column(r).expect("checked above")[i0 + 1 - r - 1].clone(),
            }
        };
        back_substitute(f, &inv_pivots, rhs)
    });
    let mut out = InverseColumns::new(n);
    for (idx, col) in cols.into_iter().enumerate() {
        out.insert(first + idx, col);
    }
    Ok(out)
}

/// Solves `U·x = b` with `b` given entrywise (0-based).
pub(crate) fn back_substitute<T: Entry>(f: &LuFactors<T>, inv_pivots: &[T::Work], b: impl Fn(usize) -> T::Work) -> Vec<T::Work> {
    let n = f.n();
    let last = n - 1;
    let mut x = vec![T::Work::zero(); n];
    x[last] = b(last).times(&inv_pivots[last]);
    for i0 in (0..last).rev() {
        let mut acc = b(i0);
        for j0 in f.upper_band_range(i0) {
            acc = acc.minus_product(f.u0(i0, j0), &x[j0]);
        }
        acc = acc.minus_product(f.u0(i0, last), &x[last]);
        x[i0] = acc.times(&inv_pivots[i0]);
    }
    x
}

/// Coefficients `a(r, j+h)` for `r = j+1 ..= j+2h` (0-based `j0`), skipping zeros, and `1 / a(j, j+h)`.
fn column_step<W: Field>(m: &PeriodicBandMatrix<W>, j0: usize) -> Result<(Vec<(usize, W)>, W)> {
    let h = m.half_bandwidth();
    let n = m.n();
    let c0 = j0 + h;
    let divisor = m.entry0(j0, c0).cloned().unwrap_or_else(W::zero);
    if divisor.is_zero() {
        return Err(Error::InternalInconsistency(format!("a({}, {}) is zero after substitution", j0 + 1, c0 + 1)));
    }
    let inv = W::one().divided_by(&divisor)?;
    let coeffs = (j0 + 1..=(j0 + 2 * h).min(n - 1))
        .filter_map(|r0| m.entry0(r0, c0).filter(|a| !a.is_zero()).map(|a| (r0, a.clone())))
        .collect();
    Ok((coeffs, inv))
}

fn next_column<'a, W: Field + 'a>(
    n: usize,
    c0: usize,
    coeffs: &[(usize, W)],
    inv: &W,
    column: impl Fn(usize) -> Result<&'a [W]>,
    par: Parallelism,
) -> Result<Vec<W>> {
    let sources = coeffs.iter().map(|(r0, a)| column(*r0).map(|c| (c, a))).collect::<Result<Vec<_>>>()?;
    Ok(map_range(par, n, |i0| {
        let mut acc = if i0 == c0 { W::one() } else { W::zero() };
        for (col, a) in &sources {
            acc = acc.minus_product(a, &col[i0]);
        }
        acc.times(inv)
    }))
}

/// Completes `partial` (holding columns `n-h ..= n`) with the remaining columns, right to left.
pub fn remaining_columns<W: Field>(m_work: &PeriodicBandMatrix<W>, partial: InverseColumns<W>) -> Result<InverseColumns<W>> {
    remaining_columns_with(m_work, partial, Parallelism::default())
}

pub fn remaining_columns_with<W: Field>(m_work: &PeriodicBandMatrix<W>, mut partial: InverseColumns<W>, par: Parallelism) -> Result<InverseColumns<W>> {
    let n = m_work.n();
    let h = m_work.half_bandwidth();
    for j0 in (0..n - h - 1).rev() {
        let (coeffs, inv) = column_step(m_work, j0)?;
        let cols = &partial;
        let col = next_column(n, j0 + h, &coeffs, &inv, |r0| column_of(cols, r0 + 1), par)?;
        partial.insert(j0 + 1, col);
    }
    Ok(partial)
}

fn column_of<W: Field>(cols: &InverseColumns<W>, r: usize) -> Result<&[W]> {
    cols.column(r).ok_or_else(|| Error::InternalInconsistency(format!("column {r} of the inverse is missing")))
}

/// `M⁻¹` for a periodic k-banded matrix.
pub fn invert<T: Entry>(m: &PeriodicBandMatrix<T>) -> Result<DenseMatrix<T>> {
    invert_with(m, &InverseOptions::default())
}

/// Like [`invert`], keeping only the `2h` most recent λ-valued columns alive.
pub fn invert_with<T: Entry>(m: &PeriodicBandMatrix<T>, opts: &InverseOptions) -> Result<DenseMatrix<T>> {
    let par = opts.parallelism;
    let f = factorize(m)?;
    let det = f.determinant()?;
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let n = f.n();
    let h = f.half_bandwidth();
    let wanted: Vec<usize> = (n - h..n).collect();
    let t = linverse_columns_with(&f, &wanted, par)?;
    let last = last_columns_with(&f, &t, par)?;

    let mut out: Vec<Option<Vec<T>>> = vec![None; n];
    // window[d] holds working column j+1+d for the column j about to be built
    let mut window: VecDeque<Vec<T::Work>> = VecDeque::with_capacity(2 * h + 1);
    for (r, col) in last.cols {
        out[r - 1] = Some(settle_par::<T>(&col, par)?);
        window.push_back(col);
    }
    window.truncate(2 * h);
    let settled_last: Vec<&[T]> = out[n - h - 1..].iter().map(|c| c.as_deref().expect("last columns are built")).collect();
    if let Some(cols) = integer_columns(m, &det, &settled_last, par)? {
        let mut all = cols;
        all.extend(out.into_iter().skip(n - h - 1).map(|c| c.expect("last columns are built")));
        return DenseMatrix::from_columns(all);
    }
    let work = f.working_matrix();
    for j0 in (0..n - h - 1).rev() {
        let (coeffs, inv) = column_step(work, j0)?;
        let col = {
            let window = &window;
            next_column(n, j0 + h, &coeffs, &inv, |r0| Ok(window[r0 - j0 - 1].as_slice()), par)?
        };
        out[j0] = Some(settle_par::<T>(&col, par)?);
        window.push_front(col);
        window.truncate(2 * h);
    }
    let cols = out.into_iter().map(|c| c.expect("every column is built")).collect();
    DenseMatrix::from_columns(cols)
}

/// Exact columns `1 ..= n-h-1` in integer arithmetic, given the exact last
/// `h + 1` columns. Applies when `m` is exact and every `a(j, j+h)` of `m`
/// itself is nonzero; otherwise returns `None`.
///
/// With `M' = L·m` integral and `D = det M'`, the columns of `X = D·M'⁻¹`
/// are integers obeying the same recurrence with exact divisions, so the
/// only gcds are the final reductions `S = L·X / D`.
fn integer_columns<T: Entry>(m: &PeriodicBandMatrix<T>, det: &T, last: &[&[T]], par: Parallelism) -> Result<Option<Vec<Vec<T>>>> {
    let n = m.n();
    let h = m.half_bandwidth();
    let Some(det) = det.exact_value() else { return Ok(None) };
    let mut exact = Vec::new();
    for v in m.diagonals().iter().flatten().chain([m.corner_1n(), m.corner_n1()]) {
        match v.exact_value() {
            Some(q) => exact.push(q),
            None => return Ok(None),
        }
    }
    if (0..n - h - 1).any(|j0| m.entry0(j0, j0 + h).is_none_or(|a| a.is_zero())) {
        return Ok(None);
    }
    let scale = exact.iter().fold(UBig::ONE, |acc, q| {
        let g = (&acc).gcd(q.denom());
        acc / g * q.denom()
    });
    let int_entry = |r0: usize, c0: usize| -> Option<IBig> {
        let v = m.entry0(r0, c0)?.exact_value()?;
        let scaled = v.numer() * IBig::from(&scale / v.denom());
        (scaled != IBig::ZERO).then_some(scaled)
    };
    let (d_big, rem) = (IBig::from(scale.pow(n)) * det.numer()).div_rem(IBig::from(det.denom().clone()));
    if rem != IBig::ZERO {
        return Err(Error::InternalInconsistency("det of the scaled matrix is not an integer".into()));
    }
    let scale_int = IBig::from(scale.clone());
    // X_r = (D / L)·C_r for the known columns
    let factor = Rational::new(d_big.clone(), scale_int.clone())?;
    let mut window: VecDeque<Vec<IBig>> = VecDeque::with_capacity(2 * h + 1);
    for col in last.iter().take(2 * h) {
        let x = col
            .iter()
            .map(|v| {
                let q = &v.exact_value().expect("exact entries") * &factor;
                if q.is_integer() {
                    Ok(q.numer().clone())
                } else {
                    Err(Error::InternalInconsistency("scaled inverse column is not integral".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        window.push_back(x);
    }
    // S = L·X / D, with the sign of D moved to the numerator
    let numer_scale = if d_big < IBig::ZERO { -&scale_int } else { scale_int.clone() };
    let common = CommonDenominator::new((&d_big).unsigned_abs());
    let mut out: Vec<Vec<T>> = Vec::with_capacity(n - h - 1);
    for j0 in (0..n - h - 1).rev() {
        let c0 = j0 + h;
        let divisor = int_entry(j0, c0).expect("checked nonzero");
        let coeffs: Vec<(&[IBig], IBig)> = (j0 + 1..=(j0 + 2 * h).min(n - 1))
            .filter_map(|r0| int_entry(r0, c0).map(|a| (window[r0 - j0 - 1].as_slice(), a)))
            .collect();
        let col = try_map_range(par, n, |i0| {
            let mut acc = if i0 == c0 { d_big.clone() } else { IBig::ZERO };
            for (x, a) in &coeffs {
                acc -= a * &x[i0];
            }
            let (q, r) = acc.div_rem(&divisor);
            if r == IBig::ZERO {
                Ok(q)
            } else {
                Err(Error::InternalInconsistency(format!("inexact division in column {}", j0 + 1)))
            }
        })?;
        let numers: Vec<IBig> = map_range(par, n, |i0| &numer_scale * &col[i0]);
        let settled = if common.rough_coprime(&numers) {
            map_range(par, n, |i0| T::from_rational(&common.reduce_checked(numers[i0].clone())))
        } else {
            map_range(par, n, |i0| T::from_rational(&common.reduce(numers[i0].clone())))
        };
        out.push(settled);
        window.push_front(col);
        window.truncate(2 * h);
    }
    out.reverse();
    Ok(Some(out))
}

fn settle_par<T: Entry>(col: &[T::Work], par: Parallelism) -> Result<Vec<T>> {
    try_map_range(par, col.len(), |i| settle_one::<T>(&col[i]))
}

/// `N⁻¹ = R·M⁻¹` for `N = M·R`.
pub fn invert_anti<T: Entry>(nmat: &AntiPeriodicBandMatrix<T>) -> Result<DenseMatrix<T>> {
    invert_anti_with(nmat, &InverseOptions::default())
}

pub fn invert_anti_with<T: Entry>(nmat: &AntiPeriodicBandMatrix<T>, opts: &InverseOptions) -> Result<DenseMatrix<T>> {
    Ok(invert_with(nmat.as_periodic(), opts)?.reverse_rows())
}
