//! Scalar types: exact rationals, the quadratic field `Q(sqrt 2)`, and the
//! small trait vocabulary the generic algorithms are written against.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `numer / denom`; panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Renders `p/q`, or `p` for integers.
pub fn format_rational(value: &Rational) -> String {
    alloc::format!("{}", value)
}

/// Parses `p/q` or `p` (optionally signed, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

pub fn is_nonnegative_integer(value: &Rational) -> bool {
    value.is_integer() && !value.is_negative()
}

/// Anything a rational coefficient can be embedded into.
pub trait FromRational {
    fn from_rational(value: &Rational) -> Self;
}

impl FromRational for Rational {
    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }
}

impl FromRational for f64 {
    fn from_rational(value: &Rational) -> Self {
        to_f64(value)
    }
}

/// Commutative ring with a rational embedding; enough to evaluate polynomials.
pub trait Scalar:
    Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + FromRational
{
}

impl<T> Scalar for T where
    T: Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + FromRational
{
}

/// Exact field, used by elimination and span tests.
pub trait Field:
    Scalar + PartialEq + fmt::Debug + Div<Output = Self> + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Scalar + PartialEq + fmt::Debug + Div<Output = Self> + Neg<Output = Self>
{
}

/// `a + b*sqrt(2)` with rational `a`, `b`.
///
/// Lets unitaries such as the Hadamard mix `(|1> +- |2>)/sqrt 2` act exactly, so
/// span-membership questions stay yes/no facts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSqrt2 {
    pub rational: Rational,
    pub radical: Rational,
}

impl QSqrt2 {
    pub fn new(rational: Rational, radical: Rational) -> Self {
        Self { rational, radical }
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `1/sqrt(2) = sqrt(2)/2`.
    pub fn inv_sqrt2() -> Self {
        Self::new(Rational::zero(), ratio(1, 2))
    }

    fn conjugate(&self) -> Self {
        Self::new(self.rational.clone(), -self.radical.clone())
    }

    /// Field norm `a^2 - 2 b^2`, nonzero for every nonzero element.
    fn norm(&self) -> Rational {
        &self.rational * &self.rational - int(2) * &self.radical * &self.radical
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + core::f64::consts::SQRT_2 * to_f64(&self.radical)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.radical.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*sqrt2", self.radical),
            (false, false) => write!(f, "{} + {}*sqrt2", self.rational, self.radical),
        }
    }
}

impl FromRational for QSqrt2 {
    fn from_rational(value: &Rational) -> Self {
        Self::new(value.clone(), Rational::zero())
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl Add for QSqrt2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.rational + rhs.rational, self.radical + rhs.radical)
    }
}

impl Sub for QSqrt2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.rational - rhs.rational, self.radical - rhs.radical)
    }
}

impl Mul for QSqrt2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let rational = &self.rational * &rhs.rational + int(2) * &self.radical * &rhs.radical;
        let radical = &self.rational * &rhs.radical + &self.radical * &rhs.rational;
        Self::new(rational, radical)
    }
}

impl Div for QSqrt2 {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero in Q(sqrt 2)");
        let numer = self * rhs.conjugate();
        Self::new(numer.rational / &norm, numer.radical / &norm)
    }
}

impl Neg for QSqrt2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.rational, -self.radical)
    }
}
