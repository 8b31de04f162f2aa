//! Rational functions in the single perturbation symbol λ.
//!
//! Every value is kept canonical: numerator and denominator coprime, denominator
//! monic, zero stored as `0/1`. Canonical form makes equality structural, so
//! "is this pivot identically zero" is decidable by inspection.
//!
//! Most values flowing through the band algorithms never touch λ; those stay on
//! a constant fast path that is plain rational arithmetic.

use std::fmt;

use super::poly::{poly_gcd, Polynomial};
use super::{Rational, ScalarError};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaRationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// Short alias used throughout the crate.
pub type Lrf = LambdaRationalFunction;

impl LambdaRationalFunction {
    pub fn constant(c: Rational) -> Self {
        LambdaRationalFunction { num: Polynomial::constant(c), den: Polynomial::one() }
    }

    pub fn from_integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    pub fn zero() -> Self {
        LambdaRationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The symbol λ itself.
    pub fn lambda() -> Self {
        LambdaRationalFunction { num: Polynomial::lambda(), den: Polynomial::one() }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        LambdaRationalFunction { num: p, den: Polynomial::one() }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() == Some(0) {
            let inv = den.coeffs()[0].recip().expect("nonzero constant denominator");
            return LambdaRationalFunction { num: num.scale(&inv), den: Polynomial::one() };
        }
        let g = poly_gcd(&num, &den).expect("denominator is nonzero");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lead = den.leading().expect("denominator is nonzero").clone();
        if lead.is_one() {
            LambdaRationalFunction { num, den }
        } else {
            let inv = lead.recip().expect("nonzero leading coefficient");
            LambdaRationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Re-canonicalizes; values built through the public API are already canonical.
    pub fn normalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a plain rational when it does not depend on λ.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn constant_ref(&self) -> Option<&Rational> {
        if self.den.is_one() && self.num.coeffs().len() == 1 {
            Some(&self.num.coeffs()[0])
        } else {
            None
        }
    }

    pub fn depends_on_lambda(&self) -> bool {
        self.den.degree() != Some(0) || self.num.degree().is_some_and(|d| d > 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if let (Some(a), Some(b)) = (self.constant_ref(), rhs.constant_ref()) {
            return Self::constant(a + b);
        }
        if self.den == rhs.den {
            return Self::canonical(self.num.add(&rhs.num), self.den.clone());
        }
        Self::canonical(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn neg(&self) -> Self {
        LambdaRationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if let (Some(a), Some(b)) = (self.constant_ref(), rhs.constant_ref()) {
            return Self::constant(a - b);
        }
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let (Some(a), Some(b)) = (self.constant_ref(), rhs.constant_ref()) {
            return Self::constant(a * b);
        }
        if let Some(c) = rhs.constant_ref() {
            return LambdaRationalFunction { num: self.num.scale(c), den: self.den.clone() };
        }
        if let Some(c) = self.constant_ref() {
            return LambdaRationalFunction { num: rhs.num.scale(c), den: rhs.den.clone() };
        }
        Self::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(c) = rhs.constant_ref() {
            if let Some(a) = self.constant_ref() {
                return Ok(Self::constant(a.checked_div(c)?));
            }
            return Ok(LambdaRationalFunction { num: self.num.scale(&c.recip()?), den: self.den.clone() });
        }
        Ok(Self::canonical(self.num.mul(&rhs.den), self.den.mul(&rhs.num)))
    }

    /// Value at an arbitrary point, if the canonical denominator does not vanish there.
    pub fn eval(&self, at: &Rational) -> Result<Rational, ScalarError> {
        self.num.eval(at).checked_div(&self.den.eval(at))
    }

    /// Value at λ = 0, the final substitution of the perturbation scheme.
    pub fn eval_at_zero(&self) -> Result<Rational, ScalarError> {
        if let Some(c) = self.constant_ref() {
            return Ok(c.clone());
        }
        let d = self.den.constant_term();
        if d.is_zero() {
            return Err(ScalarError::PoleAtZero);
        }
        self.num.constant_term().checked_div(&d)
    }
}

impl Default for LambdaRationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for LambdaRationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LambdaRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for LambdaRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lrf[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c)
    }

    fn lrf(n: &[i64], d: &[i64]) -> Lrf {
        Lrf::new(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn field_op_examples() {
        let l = Lrf::lambda();
        assert_eq!(l.add(&Lrf::one()), lrf(&[1, 1], &[1]));
        // (λ²+λ) ÷ λ = λ+1
        let q = lrf(&[0, 1, 1], &[1]).div(&l).unwrap();
        assert_eq!(q, lrf(&[1, 1], &[1]));
        assert_eq!(q.denominator(), &Polynomial::one());
        // (1/λ)·λ = 1
        assert_eq!(l.recip().unwrap().mul(&l), Lrf::one());
        assert_eq!(l.div(&Lrf::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn eval_at_zero_examples() {
        assert_eq!(lrf(&[3, 2], &[1, 1]).eval_at_zero().unwrap(), Rational::from_integer(3));
        // λ/λ² canonicalizes to 1/λ, a pole
        let pole = lrf(&[0, 1], &[0, 0, 1]);
        assert_eq!(pole, lrf(&[1], &[0, 1]));
        assert_eq!(pole.eval_at_zero(), Err(ScalarError::PoleAtZero));
        let c = Lrf::constant(Rational::ratio(153, 37));
        assert_eq!(c.eval_at_zero().unwrap(), Rational::ratio(153, 37));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let f = lrf(&[2, 4], &[0, 6]);
        assert_eq!(f.denominator(), &poly(&[0, 1]));
        assert_eq!(f.numerator(), &Polynomial::from_coeffs(vec![Rational::ratio(1, 3), Rational::ratio(2, 3)]));
        assert_eq!(lrf(&[0], &[5, 5]), Lrf::zero());
        assert_eq!(lrf(&[7], &[2]), Lrf::constant(Rational::ratio(7, 2)));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-9i64..=9, 0..=6).prop_map(|c| poly(&c))
    }

    fn arb_lrf() -> impl Strategy<Value = Lrf> {
        (arb_poly(), arb_poly()).prop_filter_map("zero denominator", |(n, d)| Lrf::new(n, d).ok())
    }

    fn assert_canonical(f: &Lrf) -> Result<(), TestCaseError> {
        prop_assert!(!f.denominator().is_zero());
        prop_assert_eq!(f.denominator().leading().unwrap(), &Rational::one());
        if !f.is_zero() {
            prop_assert_eq!(poly_gcd(f.numerator(), f.denominator()).unwrap(), Polynomial::one());
        } else {
            prop_assert!(f.denominator().is_one());
        }
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ops_commute_with_evaluation(a in arb_lrf(), b in arb_lrf()) {
            for point in [1i64, 2, 7] {
                let x = Rational::from_integer(point);
                let (Ok(va), Ok(vb)) = (a.eval(&x), b.eval(&x)) else { continue };
                let sum = a.add(&b);
                let diff = a.sub(&b);
                let prod = a.mul(&b);
                assert_canonical(&sum)?;
                assert_canonical(&diff)?;
                assert_canonical(&prod)?;
                prop_assert_eq!(sum.eval(&x).unwrap(), &va + &vb);
                prop_assert_eq!(diff.eval(&x).unwrap(), &va - &vb);
                prop_assert_eq!(prod.eval(&x).unwrap(), &va * &vb);
                if !b.is_zero() && !vb.is_zero() {
                    let quot = a.div(&b).unwrap();
                    assert_canonical(&quot)?;
                    prop_assert_eq!(quot.eval(&x).unwrap(), va.checked_div(&vb).unwrap());
                }
            }
        }

        #[test]
        fn normalize_is_idempotent(a in arb_lrf()) {
            let once = a.normalize();
            prop_assert_eq!(once.normalize(), once.clone());
            prop_assert_eq!(once, a);
        }

        #[test]
        fn constants_evaluate_to_themselves(n in -50i64..50, d in 1i64..50) {
            let c = Rational::ratio(n, d);
            prop_assert_eq!(Lrf::constant(c.clone()).eval_at_zero().unwrap(), c);
        }
    }
}
