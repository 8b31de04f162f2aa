//! Doolittle LU factorization of periodic k-banded matrices.
//!
//! `L` is unit lower triangular with `h = (k - 1) / 2` subdiagonals plus a full
//! last row; `U` is upper triangular with `h` superdiagonals plus a full last
//! column. Entries are produced row by row: within row `i` the band of `L`
//! left to right, then the pivot `u(i,i)`, the band of `U`, and finally `u(i,n)`.
//! Every entry depends only on earlier rows and earlier entries of row `i`.
//!
//! # Zero handling
//!
//! In exact mode, a zero `a(i, i+h)` (rows `1..=n-h-1`), a zero `a(i, i-h)`
//! (rows `h+2..=n`) and any pivot that comes out identically zero are replaced
//! by the symbol λ. All later quantities are rational functions of λ.
//!
//! Why λ = 0 recovers the true answer: the band substitutions turn `M` into
//! `M(λ)` with `M(0) = M`. Replacing a zero pivot `u(i,i)` by λ is the same as
//! adding λ to `a(i,i)`, because `u(i,i) = a(i,i) - Σ l·u` and nothing computed
//! earlier depends on `a(i,i)`. So `L·U` is exactly a perturbed matrix `M'(λ)`
//! whose entries are polynomials in λ with `M'(0) = M`. Its determinant
//! `Π u(i,i)` is a polynomial, and when `det M ≠ 0` every entry of `M'(λ)⁻¹`
//! is a rational function without a pole at 0 whose value there is `M⁻¹`.
//! The working copy kept in [`LuFactors::working_matrix`] is that `M'(λ)`.
//!
//! Float mode has no such limit argument, so any of those triggers is refused
//! with [`Error::ZeroPivotNeedsExact`].

use crate::band::{DenseMatrix, PeriodicBandMatrix};
use crate::error::{Error, Result};
use crate::scalar::{Entry, Field, ScalarMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubstitutionKind {
    /// Zero `a(i, i+h)` replaced before factorizing.
    BandSuper,
    /// Zero `a(i, i-h)` replaced before factorizing.
    BandSub,
    /// Identically zero pivot `u(i,i)` replaced during factorization.
    Pivot,
}

/// A position (1-based) where λ was inserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Substitution {
    pub kind: SubstitutionKind,
    pub row: usize,
    pub col: usize,
}

/// The factors of a periodic band matrix, in the working type of `T`.
#[derive(Debug, Clone)]
pub struct LuFactors<T: Entry> {
    n: usize,
    k: usize,
    /// `l(i, i-d)` at `i*h + d-1`, rows `0..n-1`.
    lower: Vec<T::Work>,
    /// `l(n-1, j)` for `j in 0..n-1`.
    last_row: Vec<T::Work>,
    diag: Vec<T::Work>,
    /// `u(i, i+d)` at `i*h + d-1` for `i + d < n-1`; zero otherwise.
    upper: Vec<T::Work>,
    /// `u(i, n-1)` for `i in 0..n-1`.
    last_col: Vec<T::Work>,
    substitutions: Vec<Substitution>,
    mode: ScalarMode,
    working: PeriodicBandMatrix<T::Work>,
    zero: T::Work,
}

impl<T: Entry> LuFactors<T> {
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

    pub fn substitutions(&self) -> &[Substitution] {
        &self.substitutions
    }

    pub fn used_lambda(&self) -> bool {
        !self.substitutions.is_empty()
    }

    /// The perturbed matrix these factors reproduce exactly (`L·U`).
    pub fn working_matrix(&self) -> &PeriodicBandMatrix<T::Work> {
        &self.working
    }

    pub fn pivots(&self) -> &[T::Work] {
        &self.diag
    }

    /// `l(i0, j0)` for `j0 < i0`, zero outside the stored pattern.
    pub(crate) fn l0(&self, i0: usize, j0: usize) -> &T::Work {
        debug_assert!(j0 < i0);
        let h = self.half_bandwidth();
        if i0 == self.n - 1 {
            &self.last_row[j0]
        } else if i0 - j0 <= h {
            &self.lower[i0 * h + (i0 - j0 - 1)]
        } else {
            &self.zero
        }
    }

    /// `u(i0, j0)` for `j0 >= i0`, zero outside the stored pattern.
    pub(crate) fn u0(&self, i0: usize, j0: usize) -> &T::Work {
        debug_assert!(j0 >= i0);
        let h = self.half_bandwidth();
        if i0 == j0 {
            &self.diag[i0]
        } else if j0 == self.n - 1 {
            &self.last_col[i0]
        } else if j0 - i0 <= h {
            &self.upper[i0 * h + (j0 - i0 - 1)]
        } else {
            &self.zero
        }
    }

    /// Columns `j0` of row `i0 < n-1` of `L` that can be nonzero (excluding the unit diagonal).
    pub(crate) fn lower_row_range(&self, i0: usize) -> std::ops::Range<usize> {
        if i0 == self.n - 1 {
            0..i0
        } else {
            i0.saturating_sub(self.half_bandwidth())..i0
        }
    }

    /// Columns `j0 > i0 ` of row `i0` of `U` inside the band (column `n-1` excluded).
    pub(crate) fn upper_band_range(&self, i0: usize) -> std::ops::Range<usize> {
        let last = self.n - 1;
        (i0 + 1).min(last)..(i0 + self.half_bandwidth() + 1).min(last)
    }

    /// `l(i, j)`, 1-based; the unit diagonal reads as one.
    pub fn l(&self, i: usize, j: usize) -> Result<T::Work> {
        self.check(i, j)?;
        Ok(match j.cmp(&i) {
            std::cmp::Ordering::Less => self.l0(i - 1, j - 1).clone(),
            std::cmp::Ordering::Equal => T::Work::one(),
            std::cmp::Ordering::Greater => T::Work::zero(),
        })
    }

    /// `u(i, j)`, 1-based.
    pub fn u(&self, i: usize, j: usize) -> Result<T::Work> {
        self.check(i, j)?;
        Ok(if j >= i { self.u0(i - 1, j - 1).clone() } else { T::Work::zero() })
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(())
    }

    pub fn lower_dense(&self) -> DenseMatrix<T::Work> {
        let n = self.n;
        let mut d = DenseMatrix::identity(n);
        for i0 in 1..n {
            for j0 in self.lower_row_range(i0) {
                *d.at_mut(i0, j0) = self.l0(i0, j0).clone();
            }
        }
        d
    }

    pub fn upper_dense(&self) -> DenseMatrix<T::Work> {
        let n = self.n;
        let mut d = DenseMatrix::zeros(n, n);
        for i0 in 0..n {
            *d.at_mut(i0, i0) = self.diag[i0].clone();
            for j0 in self.upper_band_range(i0) {
                *d.at_mut(i0, j0) = self.u0(i0, j0).clone();
            }
            if i0 < n - 1 {
                *d.at_mut(i0, n - 1) = self.last_col[i0].clone();
            }
        }
        d
    }

    /// `det M` from the pivots, with λ set to 0. A zero determinant is returned, not raised.
    pub fn determinant(&self) -> Result<T> {
        let product = self.diag.iter().fold(T::Work::one(), |acc, u| acc.times(u));
        T::settle(&product).map_err(|e| Error::InternalInconsistency(format!("pivot product has no value at λ = 0: {e}")))
    }
}

fn entry<W: Field>(m: &PeriodicBandMatrix<W>, zero: &W, i0: usize, j0: usize) -> W {
    m.entry0(i0, j0).unwrap_or(zero).clone()
}

/// Factorizes `m`, inserting λ where needed (exact mode) or refusing (float mode).
/// The input is never modified.
pub fn factorize<T: Entry>(m: &PeriodicBandMatrix<T>) -> Result<LuFactors<T>> {
    m.validate()?;
    let mode = m.mode();
    let n = m.n();
    let k = m.k();
    let h = m.half_bandwidth();
    let last = n - 1;
    let zero = T::Work::zero();
    let mut working: PeriodicBandMatrix<T::Work> = m.map(T::lift);
    let mut substitutions = Vec::new();

    let mut replace_zero_band = |working: &mut PeriodicBandMatrix<T::Work>, i0: usize, j0: usize, kind: SubstitutionKind| -> Result<()> {
        let slot = working.entry0_mut(i0, j0).expect("band position");
        if T::work_is_negligible(slot, || m.row_scale(i0), &mode) {
            match T::symbol() {
                Some(lambda) => {
                    *slot = lambda;
                    substitutions.push(Substitution { kind, row: i0 + 1, col: j0 + 1 });
                }
                None => {
                    let what = match kind {
                        SubstitutionKind::BandSuper => "outermost superdiagonal entry",
                        _ => "outermost subdiagonal entry",
                    };
                    return Err(Error::ZeroPivotNeedsExact { row: i0 + 1, what });
                }
            }
        }
        Ok(())
    };
    for i0 in 0..n - h - 1 {
        replace_zero_band(&mut working, i0, i0 + h, SubstitutionKind::BandSuper)?;
    }
    for i0 in h + 1..n {
        replace_zero_band(&mut working, i0, i0 - h, SubstitutionKind::BandSub)?;
    }

    let mut f = LuFactors::<T> {
        n,
        k,
        lower: vec![zero.clone(); n * h],
        last_row: vec![zero.clone(); last],
        diag: vec![zero.clone(); n],
        upper: vec![zero.clone(); n * h],
        last_col: vec![zero.clone(); last],
        substitutions: Vec::new(),
        mode,
        working: PeriodicBandMatrix::zeros(n, k, mode)?,
        zero: zero.clone(),
    };

    let settle_pivot = |f: &mut LuFactors<T>, working: &mut PeriodicBandMatrix<T::Work>, subs: &mut Vec<Substitution>, i0: usize, pivot: T::Work| -> Result<()> {
        if T::work_is_negligible(&pivot, || m.row_scale(i0), &mode) {
            match T::symbol() {
                Some(lambda) => {
                    let a = working.entry0_mut(i0, i0).expect("diagonal");
                    *a = a.plus(&lambda);
                    f.diag[i0] = pivot.plus(&lambda);
                    subs.push(Substitution { kind: SubstitutionKind::Pivot, row: i0 + 1, col: i0 + 1 });
                }
                None => return Err(Error::ZeroPivotNeedsExact { row: i0 + 1, what: "pivot" }),
            }
        } else {
            f.diag[i0] = pivot;
        }
        Ok(())
    };

    for i0 in 0..last {
        let band_start = i0.saturating_sub(h);
        for r0 in band_start..i0 {
            let mut acc = entry(&working, &zero, i0, r0);
            for j0 in band_start..r0 {
                acc = acc.minus_product(f.l0(i0, j0), f.u0(j0, r0));
            }
            f.lower[i0 * h + (i0 - r0 - 1)] = acc.divided_by(&f.diag[r0])?;
        }

        let mut pivot = entry(&working, &zero, i0, i0);
        for j0 in band_start..i0 {
            pivot = pivot.minus_product(f.l0(i0, j0), f.u0(j0, i0));
        }
        settle_pivot(&mut f, &mut working, &mut substitutions, i0, pivot)?;

        for r0 in f.upper_band_range(i0) {
            let mut acc = entry(&working, &zero, i0, r0);
            for j0 in r0.saturating_sub(h)..i0 {
                acc = acc.minus_product(f.l0(i0, j0), f.u0(j0, r0));
            }
            f.upper[i0 * h + (r0 - i0 - 1)] = acc;
        }

        let mut acc = entry(&working, &zero, i0, last);
        for j0 in band_start..i0 {
            acc = acc.minus_product(f.l0(i0, j0), &f.last_col[j0]);
        }
        f.last_col[i0] = acc;
    }

    for r0 in 0..last {
        let mut acc = entry(&working, &zero, last, r0);
        for j0 in r0.saturating_sub(h)..r0 {
            acc = acc.minus_product(&f.last_row[j0], f.u0(j0, r0));
        }
        f.last_row[r0] = acc.divided_by(&f.diag[r0])?;
    }
    let mut pivot = entry(&working, &zero, last, last);
    for j0 in 0..last {
        pivot = pivot.minus_product(&f.last_row[j0], &f.last_col[j0]);
    }
    settle_pivot(&mut f, &mut working, &mut substitutions, last, pivot)?;

    f.substitutions = substitutions;
    f.working = working;
    Ok(f)
}

/// `det M` for a band matrix via its pivots.
pub fn determinant<T: Entry>(f: &LuFactors<T>) -> Result<T> {
    f.determinant()
}
