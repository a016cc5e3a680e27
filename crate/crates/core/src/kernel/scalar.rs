//! Exact Gaussian-rational scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Arbitrary-precision rational, the real ground ring of every construction.
pub type Rational = BigRational;

/// Builds an exact rational `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or an integer. Decimal and exponent notation are rejected
/// because a lightlike momentum cannot be certified from a float.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let t = text.trim();
    let bad = || {
        Error::Parse(format!(
            "`{text}` is not an exact rational (expected p/q or an integer)"
        ))
    };
    if t.is_empty() || t.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    if let Some((_, den)) = t.split_once('/') {
        if den.trim().parse::<BigInt>().map_err(|_| bad())?.is_zero() {
            return Err(Error::Parse(format!("`{text}` has a zero denominator")));
        }
    }
    BigRational::from_str(t).map_err(|_| bad())
}

/// `re + im·i` with exact rational parts.
///
/// `BigRational` keeps fractions reduced, so derived equality is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn imag(im: Rational) -> Self {
        ComplexRational {
            re: Rational::zero(),
            im,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    /// Gaussian integer `a + b·i`.
    pub fn gauss(a: i64, b: i64) -> Self {
        ComplexRational {
            re: int(a),
            im: int(b),
        }
    }

    pub fn i() -> Self {
        Self::gauss(0, 1)
    }

    pub fn conj(&self) -> Self {
        ComplexRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(ComplexRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    /// Multiplication by `i` without a full complex product.
    pub fn mul_i(&self) -> Self {
        ComplexRational {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ComplexRational {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    /// `max(|re|, |im|)`, the magnitude used for residual reports.
    pub fn max_abs(&self) -> Rational {
        let (a, b) = (self.re.abs(), self.im.abs());
        if a >= b {
            a
        } else {
            b
        }
    }
}

impl Zero for ComplexRational {
    fn zero() -> Self {
        ComplexRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ComplexRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for ComplexRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl From<i64> for ComplexRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        // Real and imaginary-only operands dominate; skip the dead products.
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => ComplexRational::real(&self.re * &rhs.re),
            (true, false) => ComplexRational {
                re: &self.re * &rhs.re,
                im: &self.re * &rhs.im,
            },
            (false, true) => ComplexRational {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            },
            (false, false) => ComplexRational {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl<'a> Div<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ComplexRational) -> ComplexRational {
        self * &rhs.inv().expect("division by zero ComplexRational")
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ComplexRational {
            type Output = ComplexRational;
            fn $m(self, rhs: ComplexRational) -> ComplexRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ComplexRational> for ComplexRational {
            type Output = ComplexRational;
            fn $m(self, rhs: &ComplexRational) -> ComplexRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl AddAssign<&ComplexRational> for ComplexRational {
    fn add_assign(&mut self, rhs: &ComplexRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ComplexRational> for ComplexRational {
    fn sub_assign(&mut self, rhs: &ComplexRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&ComplexRational> for ComplexRational {
    fn mul_assign(&mut self, rhs: &ComplexRational) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", fmt_imag(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, fmt_imag(&self.im.abs()))
            }
        }
    }
}

fn fmt_imag(im: &Rational) -> String {
    if im.is_one() {
        String::new()
    } else if *im == -Rational::one() {
        "-".to_string()
    } else if im.is_integer() {
        im.to_string()
    } else {
        format!("({im})")
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as `{"re": "p/q", "im": "p/q"}`.
impl Serialize for ComplexRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ComplexRational", 2)?;
        s.serialize_field("re", &self.re.to_string())?;
        s.serialize_field("im", &self.im.to_string())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for ComplexRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Parts {
            re: String,
            im: String,
        }
        let p = Parts::deserialize(deserializer)?;
        let re = parse_rational(&p.re).map_err(serde::de::Error::custom)?;
        let im = parse_rational(&p.im).map_err(serde::de::Error::custom)?;
        Ok(ComplexRational { re, im })
    }
}
