//! Arbitrary-precision rationals in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_int::ops::{BitTest, Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};

use super::ScalarError;

/// An exact rational number with a positive denominator, always reduced.
///
/// Zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: IBig,
    den: UBig,
}

impl Rational {
    pub fn new(numer: IBig, denom: IBig) -> Result<Self, ScalarError> {
        if denom.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let negative = denom < IBig::ZERO;
        let r = Rational::reduce(numer, denom.unsigned_abs());
        Ok(if negative { -r } else { r })
    }

    /// `numer / denom` brought to lowest terms; `denom` must be nonzero.
    fn reduce(numer: IBig, denom: UBig) -> Self {
        if numer.is_zero() {
            return Rational::zero();
        }
        let g = (&numer).gcd(&denom);
        if g.is_one() {
            Rational { num: numer, den: denom }
        } else {
            Rational { num: numer / &g, den: denom / g }
        }
    }

    /// Assembles parts the caller knows to be coprime, skipping the gcd.
    pub(crate) fn from_coprime_parts(numer: IBig, denom: UBig) -> Self {
        debug_assert!(!denom.is_zero());
        Rational { num: numer, den: denom }
    }

    pub fn from_integer(value: i64) -> Self {
        Rational { num: IBig::from(value), den: UBig::ONE }
    }

    /// `numer / denom` for machine integers; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational::new(IBig::from(numer), IBig::from(denom)).expect("nonzero denominator")
    }

    /// Exact value of a finite binary float.
    pub fn from_f64(value: f64) -> Option<Self> {
        if !value.is_finite() {
            return None;
        }
        if value == 0.0 {
            return Some(Rational::zero());
        }
        let bits = value.to_bits();
        let exponent = ((bits >> 52) & 0x7ff) as i64;
        let fraction = bits & ((1 << 52) - 1);
        let (mantissa, exponent) = if exponent == 0 { (fraction, -1074) } else { (fraction | 1 << 52, exponent - 1075) };
        let magnitude = IBig::from(mantissa);
        let signed = if value < 0.0 { -magnitude } else { magnitude };
        Some(if exponent >= 0 {
            Rational::from(signed << exponent as usize)
        } else {
            Rational::reduce(signed, UBig::ONE << (-exponent) as usize)
        })
    }

    pub fn zero() -> Self {
        Rational { num: IBig::ZERO, den: UBig::ONE }
    }

    pub fn one() -> Self {
        Rational { num: IBig::ONE, den: UBig::ONE }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num < IBig::ZERO
    }

    pub fn numer(&self) -> &IBig {
        &self.num
    }

    pub fn denom(&self) -> &UBig {
        &self.den
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let den = IBig::from(self.den.clone());
        Ok(Rational {
            num: if self.is_negative() { -den } else { den },
            den: (&self.num).unsigned_abs(),
        })
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ScalarError> {
        Ok(self * &rhs.recip()?)
    }

    /// Nearest `f64`; saturates to infinity for values outside its range.
    pub fn to_f64(&self) -> f64 {
        if self.den.is_one() {
            return self.num.to_f64().value();
        }
        // 65 or more significant bits of |num| / den, then rescale
        let magnitude = (&self.num).unsigned_abs();
        let shift = self.den.bit_len() as i64 - magnitude.bit_len() as i64 + 65;
        let quotient = if shift >= 0 {
            (magnitude << shift as usize) / &self.den
        } else {
            magnitude / (self.den.clone() << (-shift) as usize)
        };
        let mut v = quotient.to_f64().value();
        // scale by 2^-shift in steps that stay inside the exponent range
        let mut e = -shift;
        while e != 0 {
            let step = e.clamp(-1000, 1000);
            v *= 2f64.powi(step as i32);
            e -= step;
        }
        if self.is_negative() {
            -v
        } else {
            v
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_integer(text: &str, allow_sign: bool) -> Option<IBig> {
    let digits = match text.as_bytes().first()? {
        b'+' | b'-' if allow_sign => &text[1..],
        _ => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    IBig::from_str_radix(text.strip_prefix('+').unwrap_or(text), 10).ok()
}

impl FromStr for Rational {
    type Err = ScalarError;

    /// Accepts `[+-]digits` optionally followed by `/digits` with a nonzero denominator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScalarError::Parse(format!("not a rational literal: {s:?}"));
        let (num_text, den_text) = match s.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let numer = parse_integer(num_text, true).ok_or_else(bad)?;
        let denom = match den_text {
            Some(d) => parse_integer(d, false).ok_or_else(bad)?,
            None => IBig::ONE,
        };
        Rational::new(numer, denom).map_err(|_| bad())
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<IBig> for Rational {
    fn from(value: IBig) -> Self {
        Rational { num: value, den: UBig::ONE }
    }
}

/// `a/b + c/d` for reduced operands, with the gcds kept as small as possible.
fn sum(a: &IBig, b: &UBig, c: &IBig, d: &UBig) -> Rational {
    if a.is_zero() {
        return Rational { num: c.clone(), den: d.clone() };
    }
    if c.is_zero() {
        return Rational { num: a.clone(), den: b.clone() };
    }
    if b.is_one() && d.is_one() {
        return Rational { num: a + c, den: UBig::ONE };
    }
    if b == d {
        return Rational::reduce(a + c, b.clone());
    }
    let g = b.gcd(d);
    if g.is_one() {
        return Rational { num: a * d + c * b, den: b * d };
    }
    let b_g = b / &g;
    let d_g = d / &g;
    let t = a * &d_g + c * &b_g;
    if t.is_zero() {
        return Rational::zero();
    }
    let g2 = (&t).gcd(&g);
    if g2.is_one() {
        Rational { num: t, den: b_g * d }
    } else {
        Rational { num: t / &g2, den: b_g * (d / g2) }
    }
}

/// `(a/b)·(c/d)` for reduced operands, cancelling crosswise first.
fn product(a: &IBig, b: &UBig, c: &IBig, d: &UBig) -> Rational {
    if a.is_zero() || c.is_zero() {
        return Rational::zero();
    }
    if b.is_one() && d.is_one() {
        return Rational { num: a * c, den: UBig::ONE };
    }
    let g1 = if d.is_one() { UBig::ONE } else { a.gcd(d) };
    let g2 = if b.is_one() { UBig::ONE } else { c.gcd(b) };
    let (a, d) = if g1.is_one() { (a.clone(), d.clone()) } else { (a / &g1, d / &g1) };
    let (c, b) = if g2.is_one() { (c.clone(), b.clone()) } else { (c / &g2, b / &g2) };
    Rational { num: a * c, den: b * d }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        sum(&self.num, &self.den, &rhs.num, &rhs.den)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        sum(&self.num, &self.den, &-&rhs.num, &rhs.den)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        product(&self.num, &self.den, &rhs.num, &rhs.den)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $tr::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    /// Panics on division by zero; use [`Rational::checked_div`] for fallible division.
    fn div(self, rhs: &'a Rational) -> Rational {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

/// Reduces many fractions over one fixed denominator `d`.
///
/// `d` is split once into a smooth part (prime factors below 2¹⁶) and a rough
/// part whose prime factors are all larger. One gcd against the product of a
/// batch of numerators (taken modulo the rough part) shows whether any of them
/// shares a large factor with `d`; usually none does, and each fraction then
/// needs only a gcd with the smooth part, which is small.
pub(crate) struct CommonDenominator {
    den: UBig,
    smooth: UBig,
    rough: UBig,
}

const TRIAL_LIMIT: u64 = 1 << 16;

fn small_primes() -> Vec<u64> {
    let limit = TRIAL_LIMIT as usize;
    let mut composite = vec![false; limit];
    let mut primes = Vec::new();
    for p in 2..limit {
        if !composite[p] {
            primes.push(p as u64);
            for q in (p * p..limit).step_by(p) {
                composite[q] = true;
            }
        }
    }
    primes
}

impl CommonDenominator {
    pub(crate) fn new(den: UBig) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rough = den.clone();
        for p in small_primes() {
            if rough.is_one() {
                break;
            }
            let prime = UBig::from(p);
            while (&rough % &prime).is_zero() {
                rough /= &prime;
            }
        }
        let smooth = &den / &rough;
        CommonDenominator { den, smooth, rough }
    }

    /// True if no numerator in the batch shares a prime above the trial limit with `d`.
    pub(crate) fn rough_coprime(&self, numers: &[IBig]) -> bool {
        if self.rough.is_one() {
            return true;
        }
        let rough = IBig::from(self.rough.clone());
        let mut acc = IBig::ONE;
        for x in numers.iter().filter(|x| !x.is_zero()) {
            acc = (acc * x) % &rough;
        }
        acc.gcd(&self.rough).is_one()
    }

    /// `numer / d` in lowest terms, assuming `numer` passed [`Self::rough_coprime`].
    pub(crate) fn reduce_checked(&self, numer: IBig) -> Rational {
        if numer.is_zero() {
            return Rational::zero();
        }
        if self.smooth.is_one() {
            return Rational::from_coprime_parts(numer, self.den.clone());
        }
        let residue = (&numer).unsigned_abs() % &self.smooth;
        let g = if residue.is_zero() { self.smooth.clone() } else { residue.gcd(&self.smooth) };
        if g.is_one() {
            Rational::from_coprime_parts(numer, self.den.clone())
        } else {
            Rational::from_coprime_parts(numer / &g, &self.den / g)
        }
    }

    /// `numer / d` in lowest terms by a full gcd.
    pub(crate) fn reduce(&self, numer: IBig) -> Rational {
        Rational::reduce(numer, self.den.clone())
    }
}
