//! Rational angles as points on the unit circle.
//!
//! `CirclePoint` is the fully rational case. `SurdAngle` covers angles with a
//! rational cosine whose sine is a rational multiple of √d; it hosts the
//! non-rational half of triangles in which only sides (or only angles) are
//! rational.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{gaussian_unit_from_t, is_perfect_square, GaussianRational, ProjRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircleError {
    #[error("cos² + sin² ≠ 1")]
    NotOnCircle,
    #[error("angle must lie in (0, π)")]
    OutsideHalfTurn,
    #[error("angles carry different radicands")]
    RadicandMismatch,
    #[error("radicand must be positive")]
    BadRadicand,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirclePoint {
    t: ProjRational,
    cosv: Rational,
    sinv: Rational,
}

impl CirclePoint {
    pub fn from_t(t: &ProjRational) -> Self {
        let u = gaussian_unit_from_t(t);
        CirclePoint {
            t: t.clone(),
            cosv: u.re,
            sinv: u.im,
        }
    }

    pub fn from_t_rational(t: &Rational) -> Self {
        CirclePoint::from_t(&ProjRational::finite(t))
    }

    pub fn from_cos_sin(cosv: Rational, sinv: Rational) -> Result<Self, CircleError> {
        if &cosv * &cosv + &sinv * &sinv != Rational::one() {
            return Err(CircleError::NotOnCircle);
        }
        let one = Rational::one();
        let t = if cosv == -one.clone() {
            ProjRational::infinity()
        } else {
            ProjRational::finite(&(&sinv / (one + &cosv)))
        };
        Ok(CirclePoint { t, cosv, sinv })
    }

    pub fn from_unit(u: &GaussianRational) -> Result<Self, CircleError> {
        CirclePoint::from_cos_sin(u.re.clone(), u.im.clone())
    }

    pub fn zero() -> Self {
        CirclePoint::from_t(&ProjRational::finite(&Rational::zero()))
    }

    pub fn right() -> Self {
        CirclePoint::from_t(&ProjRational::finite(&Rational::one()))
    }

    pub fn straight() -> Self {
        CirclePoint::from_t(&ProjRational::infinity())
    }

    pub fn t(&self) -> &ProjRational {
        &self.t
    }

    pub fn cos(&self) -> &Rational {
        &self.cosv
    }

    pub fn sin(&self) -> &Rational {
        &self.sinv
    }

    pub fn unit(&self) -> GaussianRational {
        GaussianRational::new(self.cosv.clone(), self.sinv.clone())
    }

    pub fn add(&self, other: &CirclePoint) -> CirclePoint {
        CirclePoint::from_unit(&(self.unit() * other.unit())).expect("unit product stays on the circle")
    }

    pub fn neg(&self) -> CirclePoint {
        CirclePoint::from_cos_sin(self.cosv.clone(), -self.sinv.clone()).expect("reflection stays on the circle")
    }

    pub fn sub(&self, other: &CirclePoint) -> CirclePoint {
        self.add(&other.neg())
    }

    pub fn double(&self) -> CirclePoint {
        self.add(self)
    }

    /// Supplement π − x.
    pub fn supplement(&self) -> CirclePoint {
        CirclePoint::straight().sub(self)
    }

    /// Half of an angle in [0, π]; `None` when the half angle is irrational.
    pub fn half(&self) -> Result<Option<CirclePoint>, CircleError> {
        if self.sinv.is_negative() {
            return Err(CircleError::OutsideHalfTurn);
        }
        let t = match self.t.to_rational() {
            None => return Ok(Some(CirclePoint::right())),
            Some(t) => t,
        };
        if t.is_zero() {
            return Ok(Some(CirclePoint::zero()));
        }
        // tan(x/2) = t, tan(x/4) = τ with t·τ² + 2τ − t = 0 and τ ∈ (0, 1]
        let root = match is_perfect_square(&(Rational::one() + &t * &t)) {
            None => return Ok(None),
            Some(r) => r,
        };
        let tau = (root - Rational::one()) / t;
        Ok(Some(CirclePoint::from_t_rational(&tau)))
    }

    pub fn in_open_half_turn(&self) -> bool {
        self.sinv.is_positive()
    }

    pub fn surd(&self) -> SurdAngle {
        SurdAngle {
            cos: self.cosv.clone(),
            sin: self.sinv.clone(),
            radicand: Rational::one(),
        }
    }

    /// Angles in [0, π] ordered through the monotonicity of cosine.
    pub fn cmp_angle(&self, other: &CirclePoint) -> Ordering {
        other.cosv.cmp(&self.cosv)
    }
}

/// cos x rational and sin x = sin·√radicand with a rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurdAngle {
    pub cos: Rational,
    pub sin: Rational,
    pub radicand: Rational,
}

impl SurdAngle {
    /// Builds the angle, folding a square radicand into the sine coefficient.
    pub fn new(cos: Rational, sin: Rational, radicand: Rational) -> Result<Self, CircleError> {
        if !radicand.is_positive() {
            return Err(CircleError::BadRadicand);
        }
        let (sin, radicand) = match is_perfect_square(&radicand) {
            Some(r) => (sin * r, Rational::one()),
            None => (sin, radicand),
        };
        let a = SurdAngle { cos, sin, radicand };
        if !a.on_circle() {
            return Err(CircleError::NotOnCircle);
        }
        Ok(a)
    }

    pub fn on_circle(&self) -> bool {
        &self.cos * &self.cos + self.sin_squared() == Rational::one()
    }

    pub fn sin_squared(&self) -> Rational {
        &self.sin * &self.sin * &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one() || self.sin.is_zero()
    }

    pub fn to_circle(&self) -> Option<CirclePoint> {
        if !self.is_rational() {
            return None;
        }
        CirclePoint::from_cos_sin(self.cos.clone(), self.sin.clone()).ok()
    }

    pub fn in_open_half_turn(&self) -> bool {
        self.sin.is_positive()
    }

    fn compatible(&self, other: &SurdAngle) -> Result<(), CircleError> {
        if self.radicand == other.radicand || self.sin.is_zero() || other.sin.is_zero() {
            Ok(())
        } else {
            Err(CircleError::RadicandMismatch)
        }
    }

    fn common_radicand(&self, other: &SurdAngle) -> Rational {
        if self.sin.is_zero() {
            other.radicand.clone()
        } else {
            self.radicand.clone()
        }
    }

    /// Angle sum; both angles must live in the same quadratic extension.
    pub fn add(&self, other: &SurdAngle) -> Result<SurdAngle, CircleError> {
        self.compatible(other)?;
        let d = self.common_radicand(other);
        let cos = &self.cos * &other.cos - &self.sin * &other.sin * &d;
        let sin = &self.sin * &other.cos + &self.cos * &other.sin;
        Ok(SurdAngle { cos, sin, radicand: d })
    }

    pub fn neg(&self) -> SurdAngle {
        SurdAngle {
            cos: self.cos.clone(),
            sin: -self.sin.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn flip(&self) -> SurdAngle {
        SurdAngle {
            cos: -self.cos.clone(),
            sin: -self.sin.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn cmp_angle(&self, other: &SurdAngle) -> Ordering {
        other.cos.cmp(&self.cos)
    }
}

/// An angle hπ + φ with φ ∈ [0, π), stored as its circle point and h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WoundAngle {
    pub point: SurdAngle,
    pub half_turns: u32,
    residual: SurdAngle,
}

impl WoundAngle {
    /// Total strictly greater than kπ.
    pub fn exceeds(&self, k: u32) -> bool {
        self.half_turns > k || (self.half_turns == k && !self.residual.cos.is_one())
    }

    /// Total strictly less than kπ.
    pub fn below(&self, k: u32) -> bool {
        self.half_turns < k
    }

    pub fn circle_point(&self) -> Option<CirclePoint> {
        self.point.to_circle()
    }
}

/// Exact sum of angles in (0, π).
pub fn wound_sum_surd(angles: &[SurdAngle]) -> Result<WoundAngle, CircleError> {
    let mut residual = SurdAngle {
        cos: Rational::one(),
        sin: Rational::zero(),
        radicand: Rational::one(),
    };
    let mut h = 0u32;
    for x in angles {
        if !x.in_open_half_turn() {
            return Err(CircleError::OutsideHalfTurn);
        }
        let r = residual.add(x)?;
        if r.sin.is_positive() {
            residual = r;
        } else {
            // crossed π: either landed on it exactly or went past
            h += 1;
            residual = r.flip();
        }
    }
    let point = if h.is_multiple_of(2) {
        residual.clone()
    } else {
        residual.flip()
    };
    Ok(WoundAngle {
        point,
        half_turns: h,
        residual,
    })
}

pub fn wound_sum(angles: &[CirclePoint]) -> Result<WoundAngle, CircleError> {
    let s: Vec<SurdAngle> = angles.iter().map(CirclePoint::surd).collect();
    wound_sum_surd(&s)
}

/// Gauss–Bonnet: A = α + β + γ − π, i.e. e^{iA} = −e^{iα}e^{iβ}e^{iγ}.
pub fn area_from_angles(alpha: &CirclePoint, beta: &CirclePoint, gamma: &CirclePoint) -> CirclePoint {
    let u = -(alpha.unit() * beta.unit() * gamma.unit());
    CirclePoint::from_unit(&u).expect("unit product stays on the circle")
}

pub fn area_from_angles_surd(angles: [&SurdAngle; 3]) -> Result<SurdAngle, CircleError> {
    let s = angles[0].add(angles[1])?.add(angles[2])?;
    Ok(s.flip())
}

/// t-parameter helper for tests and fixtures.
pub fn t_of(n: i64, d: i64) -> CirclePoint {
    CirclePoint::from_t(&ProjRational::new(BigInt::from(n), BigInt::from(d)).expect("nonzero pair"))
}
