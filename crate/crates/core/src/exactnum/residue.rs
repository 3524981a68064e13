use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{CubicNumber, ExactError, Field};

pub const RESIDUE_MODULUS: u32 = 3125;

fn reduce_cubic(t: [u64; 5], m: u64) -> [u64; 3] {
    // ω³ ≡ 5ω² − 11ω − 1
    let mut t = t.map(|x| x % m);
    for k in [4usize, 3] {
        let top = t[k];
        t[k] = 0;
        t[k - 1] = (t[k - 1] + 5 * top) % m;
        t[k - 2] = (t[k - 2] + (m - 11 % m) * top) % m;
        t[k - 3] = (t[k - 3] + (m - 1) * top) % m;
    }
    [t[0], t[1], t[2]]
}

fn mul_raw(a: [u64; 3], b: [u64; 3], m: u64) -> [u64; 3] {
    let mut t = [0u64; 5];
    for i in 0..3 {
        for j in 0..3 {
            t[i + j] = (t[i + j] + a[i] * b[j]) % m;
        }
    }
    reduce_cubic(t, m)
}

/// Element of (ℤ/5⁵)[ω]/(ω³ − 5ω² + 11ω + 1), coefficients in [0, 3125).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ResidueCubic {
    pub c: [u32; 3],
}

impl ResidueCubic {
    pub fn new(c0: i64, c1: i64, c2: i64) -> Self {
        let m = RESIDUE_MODULUS as i64;
        ResidueCubic {
            c: [c0, c1, c2].map(|x| x.rem_euclid(m) as u32),
        }
    }

    pub fn omega() -> Self {
        ResidueCubic::new(0, 1, 0)
    }

    pub fn from_cubic(x: &CubicNumber) -> Result<Self, ExactError> {
        let r = x.reduce_mod(&BigInt::from(RESIDUE_MODULUS))?;
        Ok(ResidueCubic {
            c: r.map(|b| b.to_u32().expect("reduced below modulus")),
        })
    }

    pub fn scale(self, k: i64) -> Self {
        self * ResidueCubic::new(k, 0, 0)
    }

    /// 5-adic valuation of coefficient `i`, capped at 5 (zero mod 5⁵).
    pub fn coeff_v5(&self, i: usize) -> u32 {
        let mut x = self.c[i];
        if x == 0 {
            return 5;
        }
        let mut k = 0;
        while x.is_multiple_of(5) {
            x /= 5;
            k += 1;
        }
        k
    }

    pub fn v5(&self) -> u32 {
        (0..3).map(|i| self.coeff_v5(i)).min().unwrap_or(5)
    }

    pub fn is_unit_coeff(&self, i: usize) -> bool {
        !self.c[i].is_multiple_of(5)
    }

    fn raw(self) -> [u64; 3] {
        self.c.map(u64::from)
    }

    fn from_raw(r: [u64; 3]) -> Self {
        ResidueCubic { c: r.map(|x| x as u32) }
    }
}

impl fmt::Display for ResidueCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ω² + {}ω + {}", self.c[2], self.c[1], self.c[0])
    }
}

impl Add for ResidueCubic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let m = RESIDUE_MODULUS;
        ResidueCubic {
            c: [0, 1, 2].map(|i| (self.c[i] + o.c[i]) % m),
        }
    }
}

impl Neg for ResidueCubic {
    type Output = Self;
    fn neg(self) -> Self {
        let m = RESIDUE_MODULUS;
        ResidueCubic {
            c: self.c.map(|x| (m - x) % m),
        }
    }
}

impl Sub for ResidueCubic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for ResidueCubic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ResidueCubic::from_raw(mul_raw(self.raw(), o.raw(), RESIDUE_MODULUS as u64))
    }
}

impl Zero for ResidueCubic {
    fn zero() -> Self {
        ResidueCubic::default()
    }
    fn is_zero(&self) -> bool {
        self.c == [0, 0, 0]
    }
}

impl One for ResidueCubic {
    fn one() -> Self {
        ResidueCubic::new(1, 0, 0)
    }
}

/// The residue field 𝔽₅[ω]/(ω³ + ω + 1) with 125 elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct F125 {
    pub c: [u8; 3],
}

impl F125 {
    pub fn new(c0: i64, c1: i64, c2: i64) -> Self {
        F125 {
            c: [c0, c1, c2].map(|x| x.rem_euclid(5) as u8),
        }
    }

    pub fn from_cubic(x: &CubicNumber) -> Result<Self, ExactError> {
        let r = x.reduce_mod(&BigInt::from(5))?;
        let [a, b, c] = r.map(|b| b.to_i64().expect("reduced below 5"));
        Ok(F125::new(a, b, c))
    }

    pub fn is_prime_field(&self) -> bool {
        self.c[1] == 0 && self.c[2] == 0
    }

    pub fn all() -> impl Iterator<Item = F125> {
        (0..125).map(|k| F125::new(k % 5, (k / 5) % 5, k / 25))
    }

    fn raw(self) -> [u64; 3] {
        self.c.map(u64::from)
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = F125::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl Add for F125 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        F125 {
            c: [0, 1, 2].map(|i| (self.c[i] + o.c[i]) % 5),
        }
    }
}

impl Neg for F125 {
    type Output = Self;
    fn neg(self) -> Self {
        F125 {
            c: self.c.map(|x| (5 - x) % 5),
        }
    }
}

impl Sub for F125 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for F125 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        F125 {
            c: mul_raw(self.raw(), o.raw(), 5).map(|x| x as u8),
        }
    }
}

impl Div for F125 {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in F125")
    }
}

impl Zero for F125 {
    fn zero() -> Self {
        F125::default()
    }
    fn is_zero(&self) -> bool {
        self.c == [0, 0, 0]
    }
}

impl One for F125 {
    fn one() -> Self {
        F125::new(1, 0, 0)
    }
}

impl Field for F125 {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(123))
        }
    }
    fn from_int(n: i64) -> Self {
        F125::new(n, 0, 0)
    }
}
