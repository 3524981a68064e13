//! Elliptic curves y² = λ(x³ + a2·x² + a4·x + a6) over any exact field.

mod cassels;
mod iso;
mod search;

pub use cassels::{quartic_to_weierstrass, BirationalMap, CasselsMap, QuarticModel, QuarticPoint};
pub use iso::{find_isomorphism, Isomorphism};
pub use search::{naive_search, naive_search_brute};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EcError {
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("curve is singular")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("quartic base point does not satisfy the quartic")]
    BadBasePoint,
    #[error("quartic is singular or has a repeated root")]
    SingularQuartic,
    #[error("point lies on the exceptional set of the map: {0}")]
    Exceptional(String),
    #[error("model must have integral coefficients")]
    NotIntegral,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: Field> CurvePoint<F> {
    pub fn new(x: F, y: F) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { y, .. } => Some(y),
        }
    }

    pub fn coords(&self) -> Option<(&F, &F)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> CurvePoint<G> {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: f(x), y: f(y) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve<F> {
    pub lambda: F,
    pub a2: F,
    pub a4: F,
    pub a6: F,
}

fn cubic_disc<F: Field>(a: &F, b: &F, c: &F) -> F {
    let f = |n: i64| F::from_int(n);
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    a.square() * b.square()
        - f(4) * b.square() * b.clone()
        - f(4) * a.square() * a.clone() * c.clone()
        - f(27) * c.square()
        + f(18) * a * b * c
}

impl<F: Field> WeierstrassCurve<F> {
    pub fn new(lambda: F, a2: F, a4: F, a6: F) -> Result<Self, EcError> {
        if lambda.is_zero() {
            return Err(EcError::ZeroLeading);
        }
        let c = WeierstrassCurve { lambda, a2, a4, a6 };
        if c.cubic_discriminant().is_zero() {
            return Err(EcError::Singular);
        }
        Ok(c)
    }

    pub fn monic(a2: F, a4: F, a6: F) -> Result<Self, EcError> {
        WeierstrassCurve::new(F::one(), a2, a4, a6)
    }

    /// y² = (x − r1)(x − r2)(x − r3)
    pub fn from_roots(r1: F, r2: F, r3: F) -> Result<Self, EcError> {
        let a2 = -(r1.clone() + r2.clone() + r3.clone());
        let a4 = r1.clone() * r2.clone() + r1.clone() * r3.clone() + r2.clone() * r3.clone();
        let a6 = -(r1 * r2 * r3);
        WeierstrassCurve::monic(a2, a4, a6)
    }

    pub fn is_monic(&self) -> bool {
        self.lambda.is_one()
    }

    pub fn cubic_discriminant(&self) -> F {
        cubic_disc(&self.a2, &self.a4, &self.a6)
    }

    pub fn cubic(&self, x: &F) -> F {
        let x = x.clone();
        ((x.clone() + self.a2.clone()) * x.clone() + self.a4.clone()) * x + self.a6.clone()
    }

    pub fn rhs(&self, x: &F) -> F {
        self.lambda.clone() * self.cubic(x)
    }

    pub fn on_curve(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    /// Coefficients (A2, A4, A6) of Y² = X³ + A2X² + A4X + A6 with X = λx, Y = λy.
    pub fn monic_coefficients(&self) -> (F, F, F) {
        let l = self.lambda.clone();
        (
            l.clone() * self.a2.clone(),
            l.square() * self.a4.clone(),
            l.square() * l * self.a6.clone(),
        )
    }

    pub fn monic_model(&self) -> WeierstrassCurve<F> {
        let (a2, a4, a6) = self.monic_coefficients();
        WeierstrassCurve {
            lambda: F::one(),
            a2,
            a4,
            a6,
        }
    }

    pub fn to_monic(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        p.map(|c| self.lambda.clone() * c.clone())
    }

    pub fn from_monic(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        let inv = self.lambda.inv().expect("nonzero leading coefficient");
        p.map(|c| inv.clone() * c.clone())
    }

    pub fn neg(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::new(x.clone(), -y.clone()),
        }
    }

    fn add_monic(a2: &F, a4: &F, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1.clone() + y2.clone()).is_zero() {
                return CurvePoint::Infinity;
            }
            (F::from_int(3) * x1.square() + F::from_int(2) * a2.clone() * x1.clone() + a4.clone())
                / (F::from_int(2) * y1.clone())
        } else {
            (y2.clone() - y1.clone()) / (x2.clone() - x1.clone())
        };
        let x3 = slope.square() - a2.clone() - x1.clone() - x2.clone();
        let y3 = slope * (x1.clone() - x3.clone()) - y1.clone();
        CurvePoint::new(x3, y3)
    }

    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        if self.is_monic() {
            return Self::add_monic(&self.a2, &self.a4, p, q);
        }
        let (a2, a4, _) = self.monic_coefficients();
        let r = Self::add_monic(&a2, &a4, &self.to_monic(p), &self.to_monic(q));
        self.from_monic(&r)
    }

    pub fn sub(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        self.add(p, &self.neg(q))
    }

    pub fn double(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        self.add(p, p)
    }

    pub fn scalar_mul(&self, n: i64, p: &CurvePoint<F>) -> CurvePoint<F> {
        let (a2, a4, _) = self.monic_coefficients();
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        base = self.to_monic(&base);
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = Self::add_monic(&a2, &a4, &acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = Self::add_monic(&a2, &a4, &base, &base);
            }
        }
        self.from_monic(&acc)
    }

    /// Order of `p` if it is at most `bound`.
    pub fn torsion_probe(&self, p: &CurvePoint<F>, bound: u32) -> Option<u32> {
        let mut acc = p.clone();
        for k in 1..=bound {
            if acc.is_infinity() {
                return Some(k);
            }
            acc = self.add(&acc, p);
        }
        None
    }

    /// c4, c6 of the monic model.
    pub fn c_invariants(&self) -> (F, F) {
        let (a2, a4, a6) = self.monic_coefficients();
        let f = |n: i64| F::from_int(n);
        let b2 = f(4) * a2;
        let b4 = f(2) * a4;
        let b6 = f(4) * a6;
        let c4 = b2.square() - f(24) * b4.clone();
        let c6 = -(b2.square() * b2.clone()) + f(36) * b2 * b4 - f(216) * b6;
        (c4, c6)
    }

    pub fn j_invariant(&self) -> F {
        let (c4, c6) = self.c_invariants();
        let cube = c4.square() * c4;
        let delta = (cube.clone() - c6.square()) / F::from_int(1728);
        cube / delta
    }
}

impl WeierstrassCurve<Rational> {
    pub fn is_integral_model(&self) -> bool {
        self.lambda.is_one() && [&self.a2, &self.a4, &self.a6].iter().all(|c| c.is_integer())
    }

    pub fn integer_coefficients(&self) -> Result<[BigInt; 3], EcError> {
        if !self.is_integral_model() {
            return Err(EcError::NotIntegral);
        }
        Ok([self.a2.to_integer(), self.a4.to_integer(), self.a6.to_integer()])
    }

    /// Torsion probe plus a non-integral multiple among 1P..4P on an integral model.
    pub fn certify_infinite_order(&self, p: &CurvePoint<Rational>) -> bool {
        if self.torsion_probe(p, 16).is_some() || !self.is_integral_model() {
            return false;
        }
        (1..=4).any(|k| match self.scalar_mul(k, p) {
            CurvePoint::Infinity => false,
            CurvePoint::Affine { x, y } => !x.is_integer() || !y.is_integer(),
        })
    }
}

pub fn is_integral_point(p: &CurvePoint<Rational>) -> bool {
    match p {
        CurvePoint::Infinity => true,
        CurvePoint::Affine { x, y } => x.is_integer() && y.is_integer(),
    }
}

/// Lexicographic order on affine rational points, infinity first.
pub fn point_key(p: &CurvePoint<Rational>) -> (bool, Rational, Rational) {
    match p {
        CurvePoint::Infinity => (false, Rational::zero(), Rational::zero()),
        CurvePoint::Affine { x, y } => (true, x.clone(), y.clone()),
    }
}

pub fn rational_point(x: Rational, y: Rational) -> CurvePoint<Rational> {
    CurvePoint::new(x, y)
}
