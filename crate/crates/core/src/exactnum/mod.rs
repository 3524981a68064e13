//! Exact scalars: rationals, the projective t-line, ℚ(i), ℚ(ω) and residue rings.

mod cubic;
mod gaussian;
mod residue;

pub use cubic::CubicNumber;
pub use gaussian::GaussianRational;
pub use residue::{ResidueCubic, F125, RESIDUE_MODULUS};

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
    #[error("projective pair (0, 0) is not a point of the t-line")]
    ZeroPair,
    #[error("value has 5 in a denominator and cannot be reduced modulo 5^k")]
    FiveInDenominator,
}

/// Arithmetic shared by every scalar the curve code runs over.
///
/// `Div` may panic on a zero divisor, mirroring `BigRational`; use `inv` when
/// the divisor is not known to be nonzero.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn inv(&self) -> Option<Self>;
    fn from_int(n: i64) -> Self;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer square root when `n` is a perfect square.
pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Nonnegative rational square root, if there is one.
pub fn is_perfect_square(r: &Rational) -> Option<Rational> {
    let n = isqrt_exact(r.numer())?;
    let d = isqrt_exact(r.denom())?;
    Some(Rational::new(n, d))
}

/// 5-adic valuation; `None` for zero.
pub fn v5_int(n: &BigInt) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let five = BigInt::from(5);
    let mut m = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&five);
        if !r.is_zero() {
            return Some(k);
        }
        m = q;
        k += 1;
    }
}

pub fn v5(r: &Rational) -> Option<i64> {
    Some(v5_int(r.numer())? - v5_int(r.denom()).unwrap_or(0))
}

/// `r` reduced into [0, m) when its denominator is invertible mod `m`.
pub fn rational_mod(r: &Rational, m: &BigInt) -> Option<BigInt> {
    let d = r.denom().mod_floor(m);
    let g = d.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some((r.numer() * g.x).mod_floor(m))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// A point of ℙ¹(ℚ) stored as a coprime pair with `q >= 0`; `(1, 0)` is ∞.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjRational {
    p: BigInt,
    q: BigInt,
}

impl ProjRational {
    pub fn new(p: BigInt, q: BigInt) -> Result<Self, ExactError> {
        if p.is_zero() && q.is_zero() {
            return Err(ExactError::ZeroPair);
        }
        if q.is_zero() {
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(ProjRational { p, q })
    }

    pub fn finite(r: &Rational) -> Self {
        ProjRational {
            p: r.numer().clone(),
            q: r.denom().clone(),
        }
    }

    pub fn infinity() -> Self {
        ProjRational {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_infinite() {
            None
        } else {
            Some(Rational::new(self.p.clone(), self.q.clone()))
        }
    }

    pub fn parse(s: &str) -> Result<Self, ExactError> {
        match s.trim() {
            "inf" | "∞" => Ok(Self::infinity()),
            other => Ok(Self::finite(&parse_rational(other)?)),
        }
    }
}

impl From<Rational> for ProjRational {
    fn from(r: Rational) -> Self {
        ProjRational::finite(&r)
    }
}

impl fmt::Display for ProjRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            None => write!(f, "inf"),
            Some(r) => write!(f, "{}", format_rational(&r)),
        }
    }
}

/// e^{ix} = (i - t)/(i + t); ∞ goes to -1.
pub fn gaussian_unit_from_t(t: &ProjRational) -> GaussianRational {
    let (p, q) = (t.numer(), t.denom());
    let n = p * p + q * q;
    GaussianRational::new(
        Rational::new(q * q - p * p, n.clone()),
        Rational::new(BigInt::from(2) * p * q, n),
    )
}
