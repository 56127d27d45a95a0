//! The scalar field of the toolkit: complex numbers with exact rational
//! real and imaginary parts (Gaussian rationals).
//!
//! `num_rational::BigRational` already maintains the canonical form we
//! need (gcd-reduced, positive denominator, zero as 0/1), so it serves
//! as the rational substrate directly.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LinAlgError;

/// Exact rational scalar, canonical by construction.
pub type Rational = BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a canonical rational string: an optional sign, an integer,
/// and an optional `/denominator` part. Rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational, LinAlgError> {
    let bad = |_| LinAlgError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let numer = BigInt::from_str(n.trim()).map_err(bad)?;
            let denom = BigInt::from_str(d.trim()).map_err(bad)?;
            if denom.is_zero() {
                return Err(LinAlgError::BadRational(s.to_string()));
            }
            Ok(BigRational::new(numer, denom))
        }
        None => {
            let numer = BigInt::from_str(s.trim()).map_err(bad)?;
            Ok(BigRational::from_integer(numer))
        }
    }
}

/// A complex number with rational real and imaginary parts.
///
/// This is the entry type of every matrix in the toolkit. All arithmetic
/// is exact; equality is exact equality of both parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn from_rational(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// `a + b·i` with integer parts, handy in tests and builders.
    pub fn from_parts(re: i64, im: i64) -> Self {
        Self::new(rat(re), rat(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate: flips the sign of the imaginary part only.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus |z|^2 = re^2 + im^2, a nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero GaussianRational");
        Self::new(&self.re / &n, -(&self.im / &n))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! owned_ops {
    ($($trait:ident::$method:ident),*) => {$(
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Canonical text form: "0", "3/2", "i", "-i", "2i", "1/2-3i", ...
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            first = false;
        }
        if !self.im.is_zero() {
            if !first && self.im.is_positive() {
                write!(f, "+")?;
            }
            if self.im == Rational::one() {
                write!(f, "i")?;
            } else if self.im == -Rational::one() {
                write!(f, "-i")?;
            } else {
                write!(f, "{}i", self.im)?;
            }
        }
        Ok(())
    }
}

/// Parses what `Display` emits: a sum of at most one real and one
/// imaginary term, e.g. "-3/2+1/2i".
impl FromStr for GaussianRational {
    type Err = LinAlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(LinAlgError::BadRational(s.to_string()));
        }
        let mut re = Rational::zero();
        let mut im = Rational::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for term in split_terms(s) {
            let term = term.trim();
            if let Some(body) = term.strip_suffix('i') {
                if seen_im {
                    return Err(LinAlgError::BadRational(s.to_string()));
                }
                seen_im = true;
                im = match body {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    _ => parse_rational(body)?,
                };
            } else {
                if seen_re {
                    return Err(LinAlgError::BadRational(s.to_string()));
                }
                seen_re = true;
                re = parse_rational(term)?;
            }
        }
        Ok(GaussianRational::new(re, im))
    }
}

/// Splits "a+bi" / "a-bi" at top-level signs (not the leading sign).
fn split_terms(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut start = 0;
    for (idx, ch) in s.char_indices().skip(1) {
        if (ch == '+' || ch == '-') && !matches!(&s[idx - 1..idx], "/" | "+" | "-") {
            parts.push(&s[start..idx]);
            start = idx;
        }
    }
    parts.push(&s[start..]);
    parts
}
