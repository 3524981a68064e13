//! Polynomials in the multiplier n with coefficients in the residue ring mod 5⁵.

use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{ResidueCubic, RESIDUE_MODULUS};

/// Number of n-coefficients carried; every dropped term is divisible by 5⁵.
pub const N_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NPoly {
    pub c: Vec<ResidueCubic>,
}

fn v5_u32(x: u32) -> u32 {
    if x == 0 {
        return 5;
    }
    let (mut x, mut k) = (x, 0);
    while x % 5 == 0 {
        x /= 5;
        k += 1;
    }
    k
}

impl NPoly {
    pub fn zero() -> Self {
        NPoly {
            c: vec![ResidueCubic::zero(); N_DEGREE],
        }
    }

    pub fn constant(a: ResidueCubic) -> Self {
        let mut p = NPoly::zero();
        p.c[0] = a;
        p
    }

    pub fn from_coeffs(cs: &[ResidueCubic]) -> Self {
        let mut p = NPoly::zero();
        for (o, c) in p.c.iter_mut().zip(cs) {
            *o = *c;
        }
        p
    }

    pub fn add(&self, o: &Self) -> Self {
        NPoly {
            c: self.c.iter().zip(&o.c).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        NPoly {
            c: self.c.iter().zip(&o.c).map(|(a, b)| *a - *b).collect(),
        }
    }

    pub fn scale(&self, k: ResidueCubic) -> Self {
        NPoly {
            c: self.c.iter().map(|a| *a * k).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = NPoly::zero();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(N_DEGREE - i) {
                out.c[i + j] = out.c[i + j] + *a * *b;
            }
        }
        out
    }

    /// Σ s_k·self^k for k < s.len(), where self has zero constant term.
    pub fn substitute_into(&self, s: &[ResidueCubic]) -> Self {
        let mut out = NPoly::zero();
        let mut p = NPoly::constant(ResidueCubic::one());
        for (k, sk) in s.iter().enumerate() {
            if k > 0 {
                p = p.mul(self);
            }
            out = out.add(&p.scale(*sk));
        }
        out
    }

    pub fn eval(&self, n: i64) -> ResidueCubic {
        let x = ResidueCubic::new(n, 0, 0);
        self.c.iter().rev().fold(ResidueCubic::zero(), |acc, a| acc * x + *a)
    }

    /// p(−n)
    pub fn negate_variable(&self) -> Self {
        NPoly {
            c: self
                .c
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { -*a } else { *a })
                .collect(),
        }
    }

    /// p(n0 + m) as a polynomial in m.
    pub fn shift(&self, n0: i64) -> Self {
        let mut out = NPoly::zero();
        // Horner in polynomial form: out = out·(m + n0) + c_k
        let lin = NPoly::from_coeffs(&[ResidueCubic::new(n0, 0, 0), ResidueCubic::one()]);
        for a in self.c.iter().rev() {
            out = out.mul(&lin).add(&NPoly::constant(*a));
        }
        out
    }

    /// Coefficients of ω^j as integers mod 5⁵.
    pub fn component(&self, j: usize) -> Vec<u32> {
        self.c.iter().map(|a| a.c[j]).collect()
    }

    /// Smallest 5-adic valuation among the coefficient differences, capped at 5.
    pub fn agreement(&self, o: &Self, up_to: usize) -> u32 {
        self.c
            .iter()
            .zip(&o.c)
            .take(up_to)
            .map(|(a, b)| (*a - *b).v5())
            .min()
            .unwrap_or(5)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|a| a.is_zero())
    }
}

/// Strassman data for one integer coefficient sequence mod 5⁵.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strassman {
    /// Largest index whose coefficient has minimal valuation.
    pub bound: usize,
    pub min_valuation: u32,
    /// Number of leading coefficients that vanish mod 5⁵.
    pub zeros_at_origin: usize,
}

/// None when every coefficient vanishes mod 5⁵, or the minimum is too close to the
/// working precision for the dropped terms to be dominated.
pub fn strassman(c: &[u32]) -> Option<Strassman> {
    let vals: Vec<u32> = c.iter().map(|&x| v5_u32(x)).collect();
    let min_valuation = *vals.iter().min()?;
    if min_valuation >= 4 {
        return None;
    }
    let bound = vals.iter().rposition(|&v| v == min_valuation)?;
    let zeros_at_origin = c.iter().take_while(|&&x| x == 0).count();
    Some(Strassman {
        bound,
        min_valuation,
        zeros_at_origin,
    })
}

/// n mod 625 with Σ c_k n^k ≡ 0 mod 5⁵.
///
/// Coefficients beyond the constant are divisible by 5, so the value mod 5⁵ depends
/// on n mod 5⁴ only.
pub fn roots_mod_625(c: &[u32]) -> Vec<u32> {
    let m = RESIDUE_MODULUS as u64;
    (0..625u64)
        .filter(|&n| c.iter().rev().fold(0u64, |acc, &a| (acc * n + u64::from(a)) % m) == 0)
        .map(|n| n as u32)
        .collect()
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| format!("({a})·n^{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64) -> ResidueCubic {
        ResidueCubic::new(a, 0, 0)
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = NPoly::from_coeffs(&[r(3), r(5), ResidueCubic::new(0, 25, 7), r(125)]);
        let q = p.shift(17);
        for m in [-4, 0, 1, 9] {
            assert_eq!(q.eval(m), p.eval(17 + m));
        }
        assert_eq!(p.negate_variable().eval(6), p.eval(-6));
    }

    #[test]
    fn strassman_bound() {
        let s = strassman(&[0, 0, 50, 25, 125, 0]).unwrap();
        assert_eq!((s.bound, s.min_valuation, s.zeros_at_origin), (3, 2, 2));
        assert_eq!(strassman(&[0, 0, 0]), None);
    }

    #[test]
    fn roots_of_linear() {
        // 1 + 5n ≡ 0 has no solution; 5 + 5n ≡ 0 mod 5⁵ at n ≡ −1 mod 625
        assert!(roots_mod_625(&[1, 5]).is_empty());
        assert_eq!(roots_mod_625(&[5, 5]), vec![624]);
    }
}
