//! Scalar arithmetic: exact rationals, rational functions in λ, and `f64`,
//! all behind the [`Field`] contract the band algorithms are written against.

mod lambda;
mod poly;
mod rational;

use std::fmt;

use thiserror::Error;

pub use lambda::{LambdaRationalFunction, Lrf};
pub use poly::{poly_gcd, Polynomial};
pub use rational::Rational;
pub(crate) use rational::CommonDenominator;

/// Default relative zero tolerance for float mode.
pub const DEFAULT_FLOAT_ZERO_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value has a pole at λ = 0")]
    PoleAtZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0}")]
    Parse(String),
}

/// How entries are represented and how zero pivots are treated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalarMode {
    /// Exact rationals; zero pivots are perturbed by the symbol λ.
    ExactLambda,
    /// `f64`; entries with `|x| <= zero_tolerance * row_scale` count as zero and are refused.
    Float { zero_tolerance: f64 },
}

impl ScalarMode {
    pub fn float() -> Self {
        ScalarMode::Float { zero_tolerance: DEFAULT_FLOAT_ZERO_TOLERANCE }
    }

    pub fn float_with_tolerance(zero_tolerance: f64) -> Result<Self, ScalarError> {
        if !zero_tolerance.is_finite() || zero_tolerance < 0.0 {
            return Err(ScalarError::InvalidInput(format!("zero tolerance must be finite and >= 0, got {zero_tolerance}")));
        }
        Ok(ScalarMode::Float { zero_tolerance })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ScalarMode::ExactLambda)
    }

    pub fn zero_tolerance(&self) -> f64 {
        match self {
            ScalarMode::ExactLambda => 0.0,
            ScalarMode::Float { zero_tolerance } => *zero_tolerance,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ScalarMode::ExactLambda => "exact",
            ScalarMode::Float { .. } => "float",
        }
    }
}

/// Field arithmetic over borrowed operands.
///
/// Method names avoid `add`/`mul` so they never collide with `std::ops` in scope.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn divided_by(&self, rhs: &Self) -> Result<Self, ScalarError>;
    fn negated(&self) -> Self;

    /// `self - a·b`, the update at the heart of every recurrence here.
    fn minus_product(&self, a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return self.clone();
        }
        self.minus(&a.times(b))
    }
}

impl Field for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn divided_by(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if *rhs == 0.0 {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
    fn negated(&self) -> Self {
        -self
    }
    fn minus_product(&self, a: &Self, b: &Self) -> Self {
        self - a * b
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn divided_by(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_div(rhs)
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for Lrf {
    fn zero() -> Self {
        Lrf::zero()
    }
    fn one() -> Self {
        Lrf::one()
    }
    fn is_zero(&self) -> bool {
        Lrf::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn divided_by(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.div(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

/// A matrix entry type that the band algorithms accept as input.
///
/// Each entry type names the working type its factorization runs in:
/// rationals are lifted to rational functions in λ, floats stay floats.
pub trait Entry: Field + fmt::Display + 'static {
    type Work: Field + fmt::Display + 'static;

    fn default_mode() -> ScalarMode;

    fn lift(&self) -> Self::Work;

    /// The perturbation symbol, if this entry type supports one.
    fn symbol() -> Option<Self::Work>;

    /// Substitutes λ = 0 (identity for floats).
    fn settle(work: &Self::Work) -> Result<Self, ScalarError>;

    fn magnitude(&self) -> f64 {
        self.as_f64().abs()
    }

    fn as_f64(&self) -> f64;

    /// The exact value, when the entry type is exact.
    fn exact_value(&self) -> Option<Rational>;

    /// Whether a working value counts as zero relative to `scale` under `mode`.
    fn work_is_negligible(work: &Self::Work, scale: impl FnOnce() -> f64, mode: &ScalarMode) -> bool;

    fn parse_literal(text: &str) -> Result<Self, ScalarError>;

    /// Converts from the other entry type (used when a mode override is requested).
    fn from_rational(value: &Rational) -> Self;
    fn from_f64(value: f64) -> Result<Self, ScalarError>;
}

impl Entry for Rational {
    type Work = Lrf;

    fn default_mode() -> ScalarMode {
        ScalarMode::ExactLambda
    }
    fn lift(&self) -> Lrf {
        Lrf::constant(self.clone())
    }
    fn symbol() -> Option<Lrf> {
        Some(Lrf::lambda())
    }
    fn settle(work: &Lrf) -> Result<Self, ScalarError> {
        work.eval_at_zero()
    }
    fn as_f64(&self) -> f64 {
        self.to_f64()
    }
    fn exact_value(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn work_is_negligible(work: &Lrf, _scale: impl FnOnce() -> f64, _mode: &ScalarMode) -> bool {
        work.is_zero()
    }
    fn parse_literal(text: &str) -> Result<Self, ScalarError> {
        text.parse()
    }
    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }
    fn from_f64(value: f64) -> Result<Self, ScalarError> {
        Rational::from_f64(value).ok_or_else(|| ScalarError::InvalidInput(format!("{value} has no exact rational value")))
    }
}

impl Entry for f64 {
    type Work = f64;

    fn default_mode() -> ScalarMode {
        ScalarMode::float()
    }
    fn lift(&self) -> f64 {
        *self
    }
    fn symbol() -> Option<f64> {
        None
    }
    fn settle(work: &f64) -> Result<Self, ScalarError> {
        Ok(*work)
    }
    fn as_f64(&self) -> f64 {
        *self
    }
    fn exact_value(&self) -> Option<Rational> {
        None
    }
    fn work_is_negligible(work: &f64, scale: impl FnOnce() -> f64, mode: &ScalarMode) -> bool {
        work.abs() <= mode.zero_tolerance() * scale()
    }
    fn parse_literal(text: &str) -> Result<Self, ScalarError> {
        parse_float_literal(text)
    }
    fn from_rational(value: &Rational) -> Self {
        value.to_f64()
    }
    fn from_f64(value: f64) -> Result<Self, ScalarError> {
        Ok(value)
    }
}

/// Decimal or scientific notation; rejects `inf`, `nan` and hex forms.
pub fn parse_float_literal(text: &str) -> Result<f64, ScalarError> {
    let body = text.strip_prefix(['+', '-']).unwrap_or(text);
    let plausible = body.starts_with(|c: char| c.is_ascii_digit() || c == '.')
        && body.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'));
    match text.parse::<f64>() {
        Ok(v) if plausible && v.is_finite() => Ok(v),
        _ => Err(ScalarError::Parse(format!("not a float literal: {text:?}"))),
    }
}
