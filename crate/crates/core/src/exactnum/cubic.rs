use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, rational_mod, v5, ExactError, Field, Rational};

/// ω³ = 5ω² − 11ω − 1, i.e. ω is a root of x³ − 5x² + 11x + 1.
const REDUCTION: [i64; 3] = [-1, -11, 5];

/// c0 + c1·ω + c2·ω².
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicNumber {
    pub c: [Rational; 3],
}

impl CubicNumber {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        CubicNumber { c: [c0, c1, c2] }
    }

    pub fn rational(r: Rational) -> Self {
        CubicNumber::new(r, Rational::zero(), Rational::zero())
    }

    pub fn omega() -> Self {
        CubicNumber::new(Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }

    /// 5 is inert in ℚ(ω), so the valuation is the minimum over the coefficients.
    pub fn v5(&self) -> Option<i64> {
        self.c.iter().filter_map(v5).min()
    }

    /// Coefficients reduced into [0, m).
    pub fn reduce_mod(&self, m: &BigInt) -> Result<[BigInt; 3], ExactError> {
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (o, c) in out.iter_mut().zip(&self.c) {
            *o = rational_mod(c, m).ok_or(ExactError::FiveInDenominator)?;
        }
        Ok(out)
    }

    /// A small integral representative congruent to `self` modulo `m`.
    pub fn lift_mod(&self, m: &BigInt) -> Result<CubicNumber, ExactError> {
        let [a, b, c] = self.reduce_mod(m)?;
        Ok(CubicNumber::new(a.into(), b.into(), c.into()))
    }

    fn mul_matrix(&self) -> [[Rational; 3]; 3] {
        // column j holds self·ω^j
        let mut cols: Vec<CubicNumber> = Vec::with_capacity(3);
        let mut cur = self.clone();
        for _ in 0..3 {
            cols.push(cur.clone());
            cur = cur * CubicNumber::omega();
        }
        let mut m: [[Rational; 3]; 3] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = cols[j].c[i].clone();
            }
        }
        m
    }
}

impl fmt::Display for CubicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.c;
        write!(
            f,
            "({})ω² + ({})ω + ({})",
            format_rational(c),
            format_rational(b),
            format_rational(a)
        )
    }
}

impl Add for CubicNumber {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let [a0, a1, a2] = self.c;
        let [b0, b1, b2] = o.c;
        CubicNumber::new(a0 + b0, a1 + b1, a2 + b2)
    }
}

impl Sub for CubicNumber {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for CubicNumber {
    type Output = Self;
    fn neg(self) -> Self {
        let [a0, a1, a2] = self.c;
        CubicNumber::new(-a0, -a1, -a2)
    }
}

impl Mul for CubicNumber {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut t: [Rational; 5] = Default::default();
        for i in 0..3 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                t[i + j] += &self.c[i] * &o.c[j];
            }
        }
        for k in [4usize, 3] {
            let top = std::mem::take(&mut t[k]);
            if top.is_zero() {
                continue;
            }
            for (s, r) in REDUCTION.iter().enumerate() {
                t[k - 3 + s] += &top * Rational::from_int(*r);
            }
        }
        let [a, b, c, _, _] = t;
        CubicNumber::new(a, b, c)
    }
}

impl Div for CubicNumber {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in Q(omega)")
    }
}

impl Zero for CubicNumber {
    fn zero() -> Self {
        CubicNumber::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CubicNumber {
    fn one() -> Self {
        CubicNumber::rational(Rational::one())
    }
}

impl Field for CubicNumber {
    /// Solves M·v = e₀ where M is multiplication by `self` in the power basis.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m = self.mul_matrix();
        let mut a: Vec<Vec<Rational>> = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.to_vec();
                r.push(if i == 0 { Rational::one() } else { Rational::zero() });
                r
            })
            .collect();
        for col in 0..3 {
            let piv = (col..3).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let p = a[col][col].clone();
            for e in a[col].iter_mut() {
                *e = &*e / &p;
            }
            for r in 0..3 {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let pivot_row = a[col].clone();
                    for (e, pe) in a[r].iter_mut().zip(pivot_row) {
                        *e = &*e - &f * pe;
                    }
                }
            }
        }
        Some(CubicNumber::new(a[0][3].clone(), a[1][3].clone(), a[2][3].clone()))
    }
    fn from_int(n: i64) -> Self {
        CubicNumber::rational(Rational::from_int(n))
    }
}

impl CubicNumber {
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|c| c.denom().is_one())
    }

    pub fn max_abs_coefficient(&self) -> Rational {
        self.c.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }
}
