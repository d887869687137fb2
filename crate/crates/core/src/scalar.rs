//! Coefficient fields.
//!
//! [`Coeff`] is the small amount of field structure the engine needs on top of
//! `num_traits`: inversion, complex conjugation and, for positivity tests, the
//! sign of a real element.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Complex conjugate; the identity on real fields.
    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_integer(n: i64) -> Self;

    /// Sign of the element if it is real, `None` otherwise.
    fn real_sign(&self) -> Option<Ordering>;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_integer(num) * Self::from_integer(den).inv().expect("zero denominator")
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

/// `re + im i` with arbitrary-precision rational parts.
///
/// Both parts are kept as reduced fractions with positive denominators, so
/// derived equality is equality of the represented numbers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `|z|^2`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::real(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: Self) {
        *self = &*self * &rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl Coeff for GaussianRational {
    fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    fn from_integer(n: i64) -> Self {
        n.into()
    }

    fn real_sign(&self) -> Option<Ordering> {
        if !self.im.is_zero() {
            return None;
        }
        Some(sign_of(&self.re))
    }
}

fn sign_of(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: `a/b`, `c/d i` or `a/b+c/d i` (integers drop `/1`).
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{} i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{} i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty scalar literal")]
    Empty,
    #[error("decimal literal `{0}` is not exact; write it as a fraction such as 1/2")]
    Decimal(String),
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

fn parse_rational(text: &str, whole: &str) -> Result<BigRational, ParseScalarError> {
    let malformed = || ParseScalarError::Malformed(whole.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    if num.is_empty() || den.is_empty() || den.starts_with(['+', '-']) {
        return Err(malformed());
    }
    let num: BigInt = num.parse().map_err(|_| malformed())?;
    let den: BigInt = den.parse().map_err(|_| malformed())?;
    if den.is_zero() {
        return Err(ParseScalarError::ZeroDenominator(whole.to_string()));
    }
    Ok(BigRational::new(num, den))
}

/// Accepts `3`, `-1/2`, `i`, `-2/3 i`, `1/2+3/4 i`, `1/2-i` and the same
/// without inner whitespace. Decimal points are rejected.
impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        if compact.contains(['.', 'e', 'E']) {
            return Err(ParseScalarError::Decimal(s.trim().to_string()));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(&compact, s)?));
        };
        // split "re±im" at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx)
            .last();
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other), s)?,
        };
        let re = if re_part.is_empty() { BigRational::zero() } else { parse_rational(re_part, s)? };
        Ok(Self { re, im })
    }
}

impl Coeff for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn real_sign(&self) -> Option<Ordering> {
        Some(sign_of(self))
    }
}

/// Floating point instantiation. Zero tests are exact comparisons, so
/// verifier verdicts over `f64` are only indicative.
impl Coeff for f64 {
    fn conj(&self) -> Self {
        *self
    }

    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }

    fn from_integer(n: i64) -> Self {
        n as f64
    }

    fn real_sign(&self) -> Option<Ordering> {
        self.partial_cmp(&0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> GaussianRational {
        text.parse().unwrap()
    }

    #[test]
    fn parses_all_literal_shapes() {
        assert_eq!(s("3"), GaussianRational::from(3));
        assert_eq!(s("-1/2"), GaussianRational::ratio(-1, 2));
        assert_eq!(s("2/4"), GaussianRational::ratio(1, 2));
        assert_eq!(s("i"), GaussianRational::i());
        assert_eq!(s("-i"), -GaussianRational::i());
        assert_eq!(s("1/2+3/4 i"), GaussianRational::ratio(1, 2) + GaussianRational::ratio(3, 4) * GaussianRational::i());
        assert_eq!(s("1/2 - i"), GaussianRational::ratio(1, 2) - GaussianRational::i());
        assert_eq!(s("-2/3 i"), GaussianRational::ratio(-2, 3) * GaussianRational::i());
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        assert!(matches!("0.5".parse::<GaussianRational>(), Err(ParseScalarError::Decimal(_))));
        assert!(matches!("1e3".parse::<GaussianRational>(), Err(ParseScalarError::Decimal(_))));
        assert!(matches!("1/0".parse::<GaussianRational>(), Err(ParseScalarError::ZeroDenominator(_))));
        assert!(matches!("x".parse::<GaussianRational>(), Err(ParseScalarError::Malformed(_))));
        assert!(matches!("1/-2".parse::<GaussianRational>(), Err(ParseScalarError::Malformed(_))));
        assert!(matches!("".parse::<GaussianRational>(), Err(ParseScalarError::Empty)));
    }

    #[test]
    fn display_round_trips() {
        for text in ["0", "7", "-1/2", "3/4 i", "-1 i", "1/2+3/4 i", "-5-1/3 i"] {
            let value = s(text);
            assert_eq!(value.to_string(), text);
            assert_eq!(s(&value.to_string()), value);
        }
    }

    #[test]
    fn field_operations() {
        let z = s("3+2 i");
        assert_eq!(z.conj(), s("3-2 i"));
        assert_eq!(z.inv().unwrap() * z.clone(), GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(z.real_sign(), None);
        assert_eq!(s("-1/3").real_sign(), Some(Ordering::Less));
        assert_eq!(s("1/2").pow(3), s("1/8"));
        assert_eq!(GaussianRational::from_ratio(6, -4), s("-3/2"));
    }

    #[test]
    fn denominators_stay_reduced_and_positive() {
        let x = s("2/6") + s("-1/6");
        assert_eq!(x.re().denom(), &BigInt::from(6));
        let y = s("3/9") * s("-1");
        assert_eq!(y, s("-1/3"));
        assert!(y.re().denom().is_positive());
    }
}
