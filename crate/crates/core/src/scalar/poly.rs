//! Dense univariate polynomials in λ over the rationals.

use std::fmt;

use dashu_int::ops::{Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};

use super::{Rational, ScalarError};

/// Coefficients indexed by power of λ; the highest stored coefficient is never zero.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Polynomial { coeffs: vec![Rational::zero(), Rational::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Constant term; zero for the zero polynomial.
    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value if the degree is at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        // Horner
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = &*o + c;
        }
        Polynomial::from_coeffs(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), ScalarError> {
        let lead = divisor.leading().ok_or(ScalarError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let inv_lead = lead.recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * &inv_lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&q * c);
            }
            quot[shift] = q;
        }
        rem.truncate(dd);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lead) if !lead.is_one() => {
                let inv = lead.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Exact quotient when `divisor` is known to divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, ScalarError> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(ScalarError::InvalidInput("polynomial division left a remainder".into()));
        }
        Ok(q)
    }
}

/// Monic greatest common divisor.
///
/// A gcd computed modulo a large prime settles the common coprime case
/// cheaply. Otherwise a primitive remainder sequence over the integers is
/// used, which keeps coefficients small where rational Euclid blows up.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, ScalarError> {
    if p.is_zero() && q.is_zero() {
        return Err(ScalarError::InvalidInput("gcd of two zero polynomials".into()));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(if p.is_zero() { q.monic() } else { p.monic() });
    }
    if p.degree() == Some(0) || q.degree() == Some(0) || coprime_mod_prime(p, q) {
        return Ok(Polynomial::one());
    }
    let mut a = primitive(p);
    let mut b = primitive(q);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return Ok(Polynomial::one());
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        b = primitive_integers(r);
    }
    let g = Polynomial::from_coeffs(a.into_iter().map(Rational::from).collect());
    Ok(g.monic())
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
fn inv_mod(a: u64) -> u64 {
    let (mut r0, mut r1) = (PRIME as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(PRIME as i128) as u64
}

fn reduce_unsigned(v: &UBig) -> u64 {
    v % PRIME
}

fn reduce_mod(v: &IBig) -> u64 {
    let r = i64::try_from(v % IBig::from(PRIME)).expect("residue fits in i64");
    r.rem_euclid(PRIME as i64) as u64
}

/// Coefficients modulo the prime, or `None` if a denominator or the leading
/// coefficient vanishes there (the reduction would not preserve the degree).
fn image_mod(p: &Polynomial) -> Option<Vec<u64>> {
    let image = p
        .coeffs
        .iter()
        .map(|c| {
            let d = reduce_unsigned(c.denom());
            (d != 0).then(|| if d == 1 { reduce_mod(c.numer()) } else { mul_mod(reduce_mod(c.numer()), inv_mod(d)) })
        })
        .collect::<Option<Vec<u64>>>()?;
    (*image.last()? != 0).then_some(image)
}

/// True only if `p` and `q` are certainly coprime over the rationals.
fn coprime_mod_prime(p: &Polynomial, q: &Polynomial) -> bool {
    let (Some(mut a), Some(mut b)) = (image_mod(p), image_mod(q)) else {
        return false;
    };
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !b.is_empty() {
        if b.len() == 1 {
            return true;
        }
        // a <- a mod b
        let inv_lead = inv_mod(*b.last().expect("nonempty"));
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = mul_mod(*a.last().expect("nonempty"), inv_lead);
            for (i, c) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + PRIME - mul_mod(factor, *c)) % PRIME;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

/// Integer coefficients of the primitive part of `p` (up to sign).
fn primitive(p: &Polynomial) -> Vec<IBig> {
    let lcm = p.coeffs.iter().fold(UBig::ONE, |acc, c| {
        let g = (&acc).gcd(c.denom());
        acc / g * c.denom()
    });
    primitive_integers(p.coeffs.iter().map(|c| c.numer() * IBig::from(&lcm / c.denom())).collect())
}

fn primitive_integers(mut v: Vec<IBig>) -> Vec<IBig> {
    while v.last().is_some_and(|c| *c == IBig::ZERO) {
        v.pop();
    }
    let content = v.iter().filter(|c| **c != IBig::ZERO).fold(UBig::ZERO, |acc, c| {
        if acc == UBig::ZERO {
            c.unsigned_abs()
        } else {
            acc.gcd(c)
        }
    });
    if content > UBig::ONE {
        let content = IBig::from(content);
        for c in &mut v {
            *c /= &content;
        }
    }
    v
}

/// `lc(b)^(deg a - deg b + 1) · a` reduced modulo `b`, over the integers.
fn pseudo_remainder(a: &[IBig], b: &[IBig]) -> Vec<IBig> {
    let lead = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let top = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lead;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &top * c;
        }
        while r.last().is_some_and(|c| *c == IBig::ZERO) {
            r.pop();
        }
    }
    r
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = power == 0 || magnitude != "1";
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{power}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
