//! Truncated power series over an exact field and the formal group of a Weierstrass curve.

use crate::ec::WeierstrassCurve;
use crate::exactnum::Field;

/// Σ c_k z^k for k < len, everything of higher order discarded.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<F> {
    pub c: Vec<F>,
}

impl<F: Field> Series<F> {
    pub fn zero(len: usize) -> Self {
        Series {
            c: vec![F::zero(); len],
        }
    }

    pub fn monomial(len: usize, k: usize, a: F) -> Self {
        let mut s = Series::zero(len);
        if k < len {
            s.c[k] = a;
        }
        s
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        Series {
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Series {
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        Series {
            c: self.c.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.len();
        let mut out: Series<F> = Series::zero(n);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out.c[i + j] = out.c[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// Multiply by z^k (k > 0) or divide by z^(−k), dropping what falls off either end.
    pub fn shift(&self, k: isize) -> Self {
        let n = self.len() as isize;
        Series {
            c: (0..n)
                .map(|i| {
                    let j = i - k;
                    if (0..n).contains(&j) {
                        self.c[j as usize].clone()
                    } else {
                        F::zero()
                    }
                })
                .collect(),
        }
    }

    /// None when the constant term is not invertible.
    pub fn inv(&self) -> Option<Self> {
        let n = self.len();
        let b0 = self.c[0].inv()?;
        let mut b: Series<F> = Series::zero(n);
        b.c[0] = b0.clone();
        for k in 1..n {
            let mut s = F::zero();
            for i in 1..=k {
                s = s + self.c[i].clone() * b.c[k - i].clone();
            }
            b.c[k] = -(b0.clone() * s);
        }
        Some(b)
    }

    pub fn derivative(&self) -> Self {
        let n = self.len();
        let mut out: Series<F> = Series::zero(n);
        for k in 1..n {
            out.c[k - 1] = self.c[k].clone() * F::from_int(k as i64);
        }
        out
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let n = self.len();
        let mut out: Series<F> = Series::zero(n);
        for k in 0..n - 1 {
            out.c[k + 1] = self.c[k].clone() / F::from_int(k as i64 + 1);
        }
        out
    }

    /// self(g) for g with zero constant term.
    pub fn compose(&self, g: &Self) -> Self {
        debug_assert!(g.c[0].is_zero());
        let n = self.len();
        let mut out: Series<F> = Series::zero(n);
        let mut p = Series::monomial(n, 0, F::one());
        for k in 0..n {
            if k > 0 {
                p = p.mul(g);
            }
            if !self.c[k].is_zero() {
                out = out.add(&p.scale(&self.c[k]));
            }
        }
        out
    }

    /// The compositional inverse of a series z + O(z²).
    pub fn reverse(&self) -> Self {
        let n = self.len();
        let mut e = Series::monomial(n, 1, F::one());
        for k in 2..n {
            let c = self.compose(&e);
            e.c[k] = -c.c[k].clone();
        }
        e
    }

    pub fn eval(&self, z: &F) -> F {
        let mut acc = F::zero();
        for a in self.c.iter().rev() {
            acc = acc * z.clone() + a.clone();
        }
        acc
    }
}

/// w = −1/y as a series in z = −x/y, from w = λ(z³ + a2z²w + a4zw² + a6w³).
pub fn w_series<F: Field>(curve: &WeierstrassCurve<F>, len: usize) -> Series<F> {
    let (lam, a2, a4, a6) = (&curve.lambda, &curve.a2, &curve.a4, &curve.a6);
    let mut w = Series::zero(len);
    // each pass fixes at least one more coefficient
    for _ in 0..len {
        let w2 = w.mul(&w);
        let rhs = Series::monomial(len, 3, F::one())
            .add(&w.shift(2).scale(a2))
            .add(&w2.shift(1).scale(a4))
            .add(&w2.mul(&w).scale(a6));
        w = rhs.scale(lam);
    }
    w
}

/// Formal group of y² = λ(x³ + a2x² + a4x + a6) in z = −x/y, w = −1/y.
#[derive(Debug, Clone)]
pub struct FormalGroup<F> {
    pub lambda: F,
    pub a2: F,
    pub a4: F,
    /// w(z) = λz³ + ⋯
    pub w: Series<F>,
    /// z³/w(z), so x = z⁻²·uinv.
    pub uinv: Series<F>,
    /// Invariant differential normalized to 1 + O(z) (exact only for λ = 1).
    pub omega: Series<F>,
    pub log: Series<F>,
    pub exp: Series<F>,
}

impl<F: Field> FormalGroup<F> {
    pub fn new(curve: &WeierstrassCurve<F>, len: usize) -> Self {
        let w = w_series(curve, len);
        let u = w.shift(-3);
        let uinv = u.inv().expect("λ ≠ 0");
        let q = uinv.derivative().shift(1).mul(&uinv.inv().expect("λ ≠ 0"));
        let half = F::one() / F::from_int(2);
        let mut omega = q.scale(&-half);
        omega.c[0] = omega.c[0].clone() + F::one();
        let log = omega.integrate();
        let exp = log.reverse();
        FormalGroup {
            lambda: curve.lambda.clone(),
            a2: curve.a2.clone(),
            a4: curve.a4.clone(),
            w,
            uinv,
            omega,
            log,
            exp,
        }
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    /// w/z
    pub fn w_over_z(&self) -> Series<F> {
        self.w.shift(-1)
    }

    /// x(S + P(z)) as a series in z, for affine S = (xs, ys); the top two terms are lost.
    ///
    /// Chord through S and (z⁻²u⁻¹, −z⁻³u⁻¹): slope g/z with g = (−1 − ys·w)/(1 − xs·w/z).
    /// Valid on monic models only.
    pub fn translate_x(&self, xs: &F, ys: &F) -> Series<F> {
        let n = self.len();
        let mut num = self.w.scale(&-ys.clone());
        num.c[0] = num.c[0].clone() - F::one();
        let mut den = self.w_over_z().scale(&-xs.clone());
        den.c[0] = den.c[0].clone() + F::one();
        let g = num.mul(&den.inv().expect("constant term 1"));
        let q = g.mul(&g).sub(&self.uinv);
        debug_assert!(q.c[0].is_zero() && q.c[1].is_zero());
        let mut x3 = q.shift(-2);
        x3.c[0] = x3.c[0].clone() - self.a2.clone() - xs.clone();
        debug_assert_eq!(x3.len(), n);
        x3
    }
}
