//! Quartic models w² = q(t) with a known point, and their Weierstrass forms.

use super::{CurvePoint, EcError, WeierstrassCurve};
use crate::exactnum::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuarticPoint<F> {
    Affine {
        t: F,
        w: F,
    },
    /// A point over t = ∞, identified by the limit of w/t².
    AtInfinity {
        w_over_t2: F,
    },
}

impl<F: Field> QuarticPoint<F> {
    pub fn affine(t: F, w: F) -> Self {
        QuarticPoint::Affine { t, w }
    }

    pub fn affine_coords(&self) -> Option<(&F, &F)> {
        match self {
            QuarticPoint::Affine { t, w } => Some((t, w)),
            QuarticPoint::AtInfinity { .. } => None,
        }
    }
}

/// w² = q4·t⁴ + q3·t³ + q2·t² + q1·t + q0 with a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModel<F> {
    /// Coefficients q0..q4, constant term first.
    pub coeffs: [F; 5],
    pub base: (F, F),
}

impl<F: Field> QuarticModel<F> {
    pub fn new(coeffs: [F; 5], base: (F, F)) -> Result<Self, EcError> {
        let q = QuarticModel { coeffs, base };
        if !q.contains(&q.base.0, &q.base.1) {
            return Err(EcError::BadBasePoint);
        }
        Ok(q)
    }

    pub fn eval(&self, t: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn contains(&self, t: &F, w: &F) -> bool {
        w.square() == self.eval(t)
    }

    pub fn contains_point(&self, p: &QuarticPoint<F>) -> bool {
        match p {
            QuarticPoint::Affine { t, w } => self.contains(t, w),
            QuarticPoint::AtInfinity { w_over_t2 } => w_over_t2.square() == self.coeffs[4],
        }
    }

    /// Coefficients of q(t0 + T) in T.
    fn shifted(&self, t0: &F) -> [F; 5] {
        let binom = [
            [1, 0, 0, 0, 0],
            [1, 1, 0, 0, 0],
            [1, 2, 1, 0, 0],
            [1, 3, 3, 1, 0],
            [1, 4, 6, 4, 1],
        ];
        let mut out: [F; 5] = std::array::from_fn(|_| F::zero());
        for (k, qk) in self.coeffs.iter().enumerate() {
            let mut pow = F::one();
            let mut pows = vec![F::one()];
            for _ in 0..k {
                pow = pow * t0.clone();
                pows.push(pow.clone());
            }
            for j in 0..=k {
                out[j] = out[j].clone() + F::from_int(binom[k][j]) * qk.clone() * pows[k - j].clone();
            }
        }
        out
    }
}

pub trait BirationalMap<F: Field> {
    fn forward(&self, p: &QuarticPoint<F>) -> Result<CurvePoint<F>, EcError>;
    fn inverse(&self, p: &CurvePoint<F>) -> Result<QuarticPoint<F>, EcError>;
    fn exceptional_set(&self) -> String;
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Shape<F> {
    /// Base point with w0 ≠ 0, moved to T = 0: w² = aT⁴ + bT³ + cT² + dT + q².
    Square { q: F, a: F, b: F, c: F, d: F, a1: F, a3: F },
    /// Base point on a simple root of the quartic.
    Root { alpha: F },
}

/// The classical transformation, monic Weierstrass output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasselsMap<F> {
    t0: F,
    base_w: F,
    shape: Shape<F>,
    curve: WeierstrassCurve<F>,
}

pub fn quartic_to_weierstrass<F: Field>(
    quartic: &QuarticModel<F>,
) -> Result<(WeierstrassCurve<F>, CasselsMap<F>), EcError> {
    let (t0, w0) = quartic.base.clone();
    if !quartic.contains(&t0, &w0) {
        return Err(EcError::BadBasePoint);
    }
    let e = quartic.shifted(&t0);
    let two = F::from_int(2);
    let four = F::from_int(4);
    let (curve, shape) = if w0.is_zero() {
        let (alpha, beta, gamma, delta) = (e[1].clone(), e[2].clone(), e[3].clone(), e[4].clone());
        if alpha.is_zero() {
            return Err(EcError::SingularQuartic);
        }
        let curve = WeierstrassCurve::monic(beta, alpha.clone() * gamma, alpha.square() * delta)
            .map_err(|_| EcError::SingularQuartic)?;
        (curve, Shape::Root { alpha })
    } else {
        let q = w0.clone();
        let (a, b, c, d) = (e[4].clone(), e[3].clone(), e[2].clone(), e[1].clone());
        let q2 = q.square();
        let a1 = d.clone() / q.clone();
        let a2 = c.clone() - d.square() / (four.clone() * q2.clone());
        let a3 = two.clone() * q.clone() * b.clone();
        let a4 = -(four.clone() * q2 * a.clone());
        let a6 = a2.clone() * a4.clone();
        let big_a2 = a2 + a1.square() / four.clone();
        let big_a4 = a4 + a1.clone() * a3.clone() / two.clone();
        let big_a6 = a6 + a3.square() / four;
        let curve = WeierstrassCurve::monic(big_a2, big_a4, big_a6).map_err(|_| EcError::SingularQuartic)?;
        (curve, Shape::Square { q, a, b, c, d, a1, a3 })
    };
    Ok((
        curve.clone(),
        CasselsMap {
            t0,
            base_w: w0,
            shape,
            curve,
        },
    ))
}

impl<F: Field> CasselsMap<F> {
    pub fn base_point(&self) -> QuarticPoint<F> {
        QuarticPoint::affine(self.t0.clone(), self.base_w.clone())
    }
}

impl<F: Field> BirationalMap<F> for CasselsMap<F> {
    fn forward(&self, p: &QuarticPoint<F>) -> Result<CurvePoint<F>, EcError> {
        let two = F::from_int(2);
        match (&self.shape, p) {
            (Shape::Root { alpha }, QuarticPoint::AtInfinity { w_over_t2 }) => {
                Ok(CurvePoint::new(F::zero(), alpha.clone() * w_over_t2.clone()))
            }
            (Shape::Root { alpha }, QuarticPoint::Affine { t, w }) => {
                let dt = t.clone() - self.t0.clone();
                if dt.is_zero() {
                    return Ok(CurvePoint::Infinity);
                }
                let s = F::one() / dt;
                Ok(CurvePoint::new(
                    alpha.clone() * s.clone(),
                    alpha.clone() * w.clone() * s.square(),
                ))
            }
            (Shape::Square { q, a1, a3, .. }, QuarticPoint::AtInfinity { w_over_t2 }) => {
                // as T → ∞ with w ≈ ℓT², x → 2qℓ and y → 0
                let x = two.clone() * q.clone() * w_over_t2.clone();
                let big_y = (a1.clone() * x.clone() + a3.clone()) / two;
                Ok(CurvePoint::new(x, big_y))
            }
            (Shape::Square { q, b, c, d, a1, a3, .. }, QuarticPoint::Affine { t, w }) => {
                let tt = t.clone() - self.t0.clone();
                if tt.is_zero() {
                    if w == q {
                        return Ok(CurvePoint::Infinity);
                    }
                    // second point over t0, the limit along the branch w → −q
                    let x = d.square() / (F::from_int(4) * q.square()) - c.clone();
                    let q3 = q.square() * q.clone();
                    let y = c.clone() * d.clone() / q.clone()
                        - two.clone() * b.clone() * q.clone()
                        - d.square() * d.clone() / (F::from_int(4) * q3);
                    let big_y = y + (a1.clone() * x.clone() + a3.clone()) / two;
                    return Ok(CurvePoint::new(x, big_y));
                }
                let wq = w.clone() + q.clone();
                let x = (two.clone() * q.clone() * wq.clone() + d.clone() * tt.clone()) / tt.square();
                let y = (F::from_int(4) * q.square() * wq
                    + two.clone() * q.clone() * (d.clone() * tt.clone() + c.clone() * tt.square())
                    - d.square() * tt.square() / (two.clone() * q.clone()))
                    / (tt.square() * tt.clone());
                let big_y = y + (a1.clone() * x.clone() + a3.clone()) / two;
                Ok(CurvePoint::new(x, big_y))
            }
        }
    }

    fn inverse(&self, p: &CurvePoint<F>) -> Result<QuarticPoint<F>, EcError> {
        let (x, big_y) = match p.coords() {
            None => return Ok(self.base_point()),
            Some(c) => c,
        };
        let two = F::from_int(2);
        match &self.shape {
            Shape::Root { alpha } => {
                if x.is_zero() {
                    return Ok(QuarticPoint::AtInfinity {
                        w_over_t2: big_y.clone() / alpha.clone(),
                    });
                }
                let t = self.t0.clone() + alpha.clone() / x.clone();
                let w = big_y.clone() * alpha.clone() / x.square();
                Ok(QuarticPoint::affine(t, w))
            }
            Shape::Square { q, c, d, a1, a3, .. } => {
                let y = big_y.clone() - (a1.clone() * x.clone() + a3.clone()) / two.clone();
                let num = two.clone() * q.clone() * (x.clone() + c.clone()) - d.square() / (two.clone() * q.clone());
                if y.is_zero() {
                    if num.is_zero() {
                        // this is −P* with P* the image of (t0, −w0); w ↦ −w acts as P ↦ P* − P
                        let p_star = self.forward(&QuarticPoint::affine(self.t0.clone(), -q.clone()))?;
                        let twice = self.curve.double(&p_star);
                        if twice.coords().is_some_and(|(_, yy)| {
                            (yy.clone() - (a1.clone() * twice.x().unwrap().clone() + a3.clone()) / two.clone())
                                .is_zero()
                        }) {
                            return Err(EcError::Exceptional("y = 0 at x = d²/(4q²) − c".into()));
                        }
                        return Ok(match self.inverse(&twice)? {
                            QuarticPoint::Affine { t, w } => QuarticPoint::affine(t, -w),
                            QuarticPoint::AtInfinity { w_over_t2 } => {
                                QuarticPoint::AtInfinity { w_over_t2: -w_over_t2 }
                            }
                        });
                    }
                    return Ok(QuarticPoint::AtInfinity {
                        w_over_t2: x.clone() / (two * q.clone()),
                    });
                }
                let tt = num / y;
                let w = -q.clone() + tt.clone() * (tt.clone() * x.clone() - d.clone()) / (two * q.clone());
                Ok(QuarticPoint::affine(self.t0.clone() + tt, w))
            }
        }
    }

    fn exceptional_set(&self) -> String {
        match &self.shape {
            Shape::Root { .. } => "t = t0 maps to O; x = 0 corresponds to t = ∞".into(),
            Shape::Square { .. } => "none beyond degenerate base fibres; points with y = 0 correspond to t = ∞".into(),
        }
    }
}
