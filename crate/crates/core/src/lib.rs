//! Inverses, determinants and linear solves for periodic k-banded and
//! anti-k-banded matrices, exact (rational with a symbolic λ) or in `f64`.

pub mod band;
pub mod bench;
pub mod cli;
pub mod error;
pub mod factor;
pub mod fixtures;
pub mod gen;
pub mod inverse;
pub mod oracle;
pub mod parallel;
pub mod scalar;
pub mod solve;

pub use band::{AntiPeriodicBandMatrix, DenseMatrix, ExchangeOperator, PeriodicBandMatrix};
pub use error::{Error, Result};
pub use factor::{determinant, factorize, LuFactors, Substitution, SubstitutionKind};
pub use inverse::{invert, invert_anti, invert_with, InverseColumns, InverseOptions, LInverseColumns};
pub use parallel::Parallelism;
pub use scalar::{Entry, Field, Lrf, Polynomial, Rational, ScalarError, ScalarMode};
pub use solve::{solve, SolveOutcome};
