//! Exact Gaussian rationals `a + b·i` with arbitrary-precision `a`, `b`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An element of Q(i).
///
/// `BigRational` keeps itself reduced with a positive denominator, so derived
/// equality is exact structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// The real rational `num/den`. Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`.
    pub fn complex(re: (i64, i64), im: (i64, i64)) -> Self {
        Scalar::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    /// `num/den · i`.
    pub fn imag(num: i64, den: i64) -> Self {
        Scalar::new(BigRational::zero(), BigRational::new(num.into(), den.into()))
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar::new(&self.re / &norm, -(&self.im / &norm)))
    }

    /// `(-1)^k`-style sign helper.
    pub fn sign(negative: bool) -> Self {
        if negative {
            Scalar::int(-1)
        } else {
            Scalar::one()
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // fast paths: most coefficients in this engine are real or purely imaginary
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::new(&self.re * &rhs.re, BigRational::zero());
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like integer division.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Textual form `a/b+c/d*i`; integer parts drop the `/1`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re, f)?;
        if self.im.is_negative() {
            f.write_str("-")?;
            fmt_rational(&-self.im.clone(), f)?;
        } else {
            f.write_str("+")?;
            fmt_rational(&self.im, f)?;
        }
        f.write_str("*i")
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational, ScalarParseError> {
    let bad = || ScalarParseError::Malformed(whole.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(whole.to_string()));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .strip_suffix("*i")
            .ok_or_else(|| ScalarParseError::Malformed(s.to_string()))?;
        // the separator is the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| ScalarParseError::Malformed(s.to_string()))?;
        let re = parse_rational(&body[..split], s)?;
        let im_str = &body[split..];
        let im_str = im_str.strip_prefix('+').unwrap_or(im_str);
        let im = parse_rational(im_str, s)?;
        Ok(Scalar::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plus_half() {
        assert_eq!(&Scalar::frac(1, 2) + &Scalar::frac(1, 2), Scalar::one());
    }

    #[test]
    fn i_squared() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::int(-1));
    }

    #[test]
    fn half_i_norm() {
        assert_eq!(&Scalar::imag(-1, 2) * &Scalar::imag(1, 2), Scalar::frac(1, 4));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Scalar::i().conj(), Scalar::imag(-1, 1));
        assert_eq!(Scalar::frac(3, 4).conj(), Scalar::frac(3, 4));
        assert_eq!(
            Scalar::complex((1, 2), (-1, 3)).conj(),
            Scalar::complex((1, 2), (1, 3))
        );
    }

    #[test]
    fn normalized_storage() {
        let a = Scalar::complex((2, -4), (6, 3));
        assert_eq!(a, Scalar::complex((-1, 2), (2, 1)));
        assert!(a.re().denom().is_positive());
    }

    #[test]
    fn text_form() {
        assert_eq!(Scalar::complex((1, 2), (-1, 3)).to_string(), "1/2-1/3*i");
        assert_eq!(Scalar::int(-1).to_string(), "-1+0*i");
        assert_eq!(Scalar::i().to_string(), "0+1*i");
        for s in ["1/2-1/3*i", "-1+0*i", "0+1*i", "-7/16-5/8*i"] {
            assert_eq!(s.parse::<Scalar>().unwrap().to_string(), s);
        }
        assert!("1/0+0*i".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn inverse() {
        let a = Scalar::complex((3, 1), (4, 1));
        assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }
}
