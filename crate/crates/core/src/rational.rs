//! Arbitrary-precision rationals.
//!
//! [`ExactRational`] is the only scalar type of the exact pipeline. It wraps
//! `num_rational::BigRational`, which already keeps fractions reduced with a
//! positive denominator, and adds the text forms used across the crate:
//! `"p/q"`, plain integers, and decimals such as `-1.25` or `0.44(9)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expansion::PeriodicExpansion;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

/// Build the canonical fraction `num/den`.
pub fn normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<ExactRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(ExactRational(BigRational::new(num.into(), den)))
}

impl ExactRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        normalize(num, den)
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        normalize(num, den).expect("nonzero denominator")
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRational(self.0.recip()))
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// `0 < self <= 1`
    pub fn in_unit_halfopen(&self) -> bool {
        self.0.is_positive() && self.0 <= BigRational::one()
    }

    pub fn pow10(exp: usize) -> BigInt {
        num_traits::pow(BigInt::from(10u8), exp)
    }

    /// Multiply by `10^exp` (negative exponents divide).
    pub fn scale10(&self, exp: i64) -> Self {
        let p = Self::pow10(exp.unsigned_abs() as usize);
        if exp >= 0 {
            ExactRational(&self.0 * BigRational::from_integer(p))
        } else {
            ExactRational(&self.0 / BigRational::from_integer(p))
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Numerator and denominator as unsigned parts, for digit work on
    /// positive values.
    pub(crate) fn unsigned_parts(&self) -> (BigUint, BigUint) {
        (
            self.0.numer().magnitude().clone(),
            self.0.denom().magnitude().clone(),
        )
    }

    pub(crate) fn from_unsigned(num: BigUint, den: BigUint) -> Self {
        ExactRational(BigRational::new(
            BigInt::from_biguint(Sign::Plus, num),
            BigInt::from_biguint(Sign::Plus, den),
        ))
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Division by zero panics like the underlying type; use `recip` for a checked path.
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `p/q`, `p`, terminating decimals (`-1.25`) and repeating
    /// decimals (`0.44(9)`, `2.(3)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty rational".into()));
        }
        if let Some((p, q)) = s.split_once('/') {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            return normalize(p, q);
        }
        if s.contains('.') {
            return parse_decimal(s);
        }
        Ok(ExactRational::from_integer(parse_int(s)?))
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid integer {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

fn parse_decimal(s: &str) -> Result<ExactRational> {
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = body
        .split_once('.')
        .ok_or_else(|| Error::Parse(format!("invalid decimal {s:?}")))?;
    let int_value = if int_part.is_empty() {
        BigInt::zero()
    } else {
        parse_int(int_part)?
    };
    if int_value.is_negative() || int_part.starts_with(['+', '-']) {
        return Err(Error::Parse(format!("invalid decimal {s:?}")));
    }
    let frac_value = match frac_part.split_once('(') {
        Some((pre, rest)) => {
            let period = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed period in {s:?}")))?;
            let pre = digit_vec(pre, s)?;
            let period = digit_vec(period, s)?;
            if period.is_empty() {
                return Err(Error::Parse(format!("empty period in {s:?}")));
            }
            PeriodicExpansion::raw_value(&pre, &period)
        }
        None => {
            let digits = digit_vec(frac_part, s)?;
            if digits.is_empty() && int_part.is_empty() {
                return Err(Error::Parse(format!("invalid decimal {s:?}")));
            }
            let num = crate::expansion::digits_to_biguint(&digits);
            ExactRational::from_unsigned(num, ExactRational::pow10(digits.len()).magnitude().clone())
        }
    };
    let value = ExactRational::from_integer(int_value) + frac_value;
    Ok(if negative { -value } else { value })
}

fn digit_vec(part: &str, whole: &str) -> Result<Vec<u8>> {
    part.bytes()
        .map(|b| {
            if b.is_ascii_digit() {
                Ok(b - b'0')
            } else {
                Err(Error::Parse(format!("invalid digit in {whole:?}")))
            }
        })
        .collect()
}

impl PartialEq<i64> for ExactRational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for ExactRational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

/// Largest power of `p` dividing `n` (n > 0).
pub(crate) fn valuation(n: &BigUint, p: u32) -> usize {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}
