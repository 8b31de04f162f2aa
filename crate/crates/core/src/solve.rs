//! Linear solves `M·x = y` by forward and back substitution over the LU factors.

use crate::band::PeriodicBandMatrix;
use crate::error::{Error, Result};
use crate::factor::{factorize, LuFactors};
use crate::inverse::back_substitute;
use crate::scalar::{Entry, Field, ScalarError};

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome<T: Entry> {
    /// The solution, with λ set to 0.
    pub x: Vec<T>,
    /// `L⁻¹·y`, before λ is removed.
    pub z: Vec<T::Work>,
    pub det: T,
    pub used_lambda: bool,
}

/// Factorizes `m` and solves `M·x = y`.
pub fn solve<T: Entry>(m: &PeriodicBandMatrix<T>, y: &[T]) -> Result<SolveOutcome<T>> {
    if y.len() != m.n() {
        return Err(Error::DimensionMismatch { expected: m.n(), found: y.len() });
    }
    factorize(m)?.solve(y)
}

impl<T: Entry> LuFactors<T> {
    /// Solves against one right-hand side; the factors can be reused for more.
    pub fn solve(&self, y: &[T]) -> Result<SolveOutcome<T>> {
        let n = self.n();
        if y.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: y.len() });
        }
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let z = self.forward(y);
        let inv_pivots = self.pivots().iter().map(|u| T::Work::one().divided_by(u)).collect::<std::result::Result<Vec<_>, _>>()?;
        let x = back_substitute(self, &inv_pivots, |i0| z[i0].clone())
            .iter()
            .map(|w| {
                T::settle(w).map_err(|e| match e {
                    ScalarError::PoleAtZero => Error::SingularMatrix,
                    other => other.into(),
                })
            })
            .collect::<Result<Vec<T>>>()?;
        Ok(SolveOutcome { x, z, det, used_lambda: self.used_lambda() })
    }

    fn forward(&self, y: &[T]) -> Vec<T::Work> {
        let mut z: Vec<T::Work> = Vec::with_capacity(y.len());
        for (i0, yi) in y.iter().enumerate() {
            let mut acc = T::lift(yi);
            for j0 in self.lower_row_range(i0) {
                acc = acc.minus_product(self.l0(i0, j0), &z[j0]);
            }
            z.push(acc);
        }
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::{Rational, ScalarMode};

    #[test]
    fn example3_system() {
        let out = solve(&fixtures::example3(), &fixtures::example3_rhs()).unwrap();
        let z: Vec<Rational> = out.z.iter().map(|w| w.eval_at_zero().unwrap()).collect();
        // z(6) = u(6,6)·x(6) = -14/3
        let want = [(3, 1), (-7, 1), (12, 5), (-9, 1), (-5, 1), (-14, 3)];
        assert_eq!(z, want.iter().map(|&(a, b)| Rational::ratio(a, b)).collect::<Vec<_>>());
        assert_eq!(out.x, vec![Rational::one(); 6]);
        assert_eq!(out.det, Rational::from_integer(14));
        assert!(!out.used_lambda);
    }

    #[test]
    fn identity_returns_rhs() {
        let m = PeriodicBandMatrix::<Rational>::identity(6, 3, ScalarMode::ExactLambda).unwrap();
        let y: Vec<Rational> = (1..=6).map(|v| Rational::ratio(v, 7)).collect();
        let out = solve(&m, &y).unwrap();
        assert_eq!(out.x, y);
        let z: Vec<Rational> = out.z.iter().map(|w| w.eval_at_zero().unwrap()).collect();
        assert_eq!(z, y);
        assert!(out.used_lambda);
    }

    #[test]
    fn lambda_path_residual_is_zero() {
        let mut m = fixtures::example1();
        m.set(1, 1, Rational::zero()).unwrap();
        m.set(2, 3, Rational::zero()).unwrap();
        let w: Vec<Rational> = (1..=6).map(|v| Rational::ratio(v * v - 3, 2)).collect();
        let y = m.mul_vec(&w).unwrap();
        let out = solve(&m, &y).unwrap();
        assert!(out.used_lambda);
        assert_eq!(out.x, w);
    }

    #[test]
    fn rejects_bad_input() {
        let m = fixtures::example1();
        assert!(matches!(solve(&m, &[Rational::one()]), Err(Error::DimensionMismatch { expected: 6, found: 1 })));
        let singular = PeriodicBandMatrix::<Rational>::zeros(6, 3, ScalarMode::ExactLambda).unwrap();
        assert!(matches!(solve(&singular, &vec![Rational::one(); 6]), Err(Error::SingularMatrix)));
    }

    #[test]
    fn float_solve_matches() {
        let m = fixtures::example3().convert::<f64>(ScalarMode::float()).unwrap();
        let out = solve(&m, &[3.0, -1.0, 4.0, 1.0, 1.0, 4.0]).unwrap();
        assert!(out.x.iter().all(|v| (v - 1.0).abs() < 1e-12));
    }
}
