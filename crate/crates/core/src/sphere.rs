//! Spherical triangles with exact trigonometric data.
//!
//! Sides and angles are `SurdAngle`s: every side shares one radicand and every
//! angle shares one radicand, so the laws can be checked in ℚ.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::circle::{area_from_angles_surd, wound_sum_surd, CircleError, CirclePoint, SurdAngle};
use crate::exactnum::{is_perfect_square, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphereError {
    #[error("degenerate triangle: {0}")]
    Degenerate(String),
    #[error("supplied Δ does not match the trigonometric data")]
    DeltaMismatch,
    #[error("triangle is not proper: {0:?}")]
    Improper(Vec<String>),
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error(transparent)]
    Circle(#[from] CircleError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalTriangle {
    /// a, b, c
    pub sides: [SurdAngle; 3],
    /// α, β, γ with α opposite a
    pub angles: [SurdAngle; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CevianKind {
    Median,
    Height,
    AngleBisector,
    AreaBisector,
}

impl CevianKind {
    pub fn name(self) -> &'static str {
        match self {
            CevianKind::Median => "median",
            CevianKind::Height => "height",
            CevianKind::AngleBisector => "angle-bisector",
            CevianKind::AreaBisector => "area-bisector",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CevianResult {
    pub kind: CevianKind,
    /// 0, 1, 2 for the vertices at α, β, γ
    pub vertex: usize,
    pub length: SurdAngle,
    pub foot_angle: Option<SurdAngle>,
    pub sub_angles: Option<(SurdAngle, SurdAngle)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.clone())
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

const SIDE: [&str; 3] = ["a", "b", "c"];
const ANGLE: [&str; 3] = ["alpha", "beta", "gamma"];

fn product_of_sines(x: &SurdAngle, y: &SurdAngle) -> Rational {
    // only valid when the radicands agree; callers guarantee it
    &x.sin * &y.sin * &x.radicand
}

fn surd_sqrt(square: &Rational, coefficient: Rational) -> Result<SurdAngleSine, SphereError> {
    if !square.is_positive() {
        return Err(SphereError::Degenerate("Δ² must be positive".into()));
    }
    Ok(SurdAngleSine {
        coefficient,
        radicand: square.clone(),
    })
}

struct SurdAngleSine {
    coefficient: Rational,
    radicand: Rational,
}

impl SphericalTriangle {
    /// No validation; see [`SphericalTriangle::verify`].
    pub fn from_parts(sides: [SurdAngle; 3], angles: [SurdAngle; 3]) -> Self {
        SphericalTriangle { sides, angles }
    }

    fn check_nondegenerate(xs: &[CirclePoint; 3], what: &[&str; 3]) -> Result<(), SphereError> {
        for (x, n) in xs.iter().zip(what) {
            if !x.in_open_half_turn() {
                return Err(SphereError::Degenerate(format!("{n} must lie in (0, π)")));
            }
        }
        Ok(())
    }

    fn validated(self) -> Result<Self, SphereError> {
        let report = self.verify();
        if report.all_passed() {
            Ok(self)
        } else {
            Err(SphereError::Improper(report.failures()))
        }
    }

    /// From rational angles and Δ₁ = sin a·sin β·sin γ > 0.
    pub fn from_angles(
        alpha: &CirclePoint,
        beta: &CirclePoint,
        gamma: &CirclePoint,
        delta1: &Rational,
    ) -> Result<Self, SphereError> {
        Self::check_nondegenerate(&[alpha.clone(), beta.clone(), gamma.clone()], &ANGLE)?;
        let angles = [alpha.surd(), beta.surd(), gamma.surd()];
        if !delta1.is_positive() || delta1 * delta1 != Self::delta1_squared_of(&angles) {
            return Err(SphereError::DeltaMismatch);
        }
        let sides = Self::dual(&angles, delta1, &Rational::one(), true)?;
        SphericalTriangle { sides, angles }.validated()
    }

    /// From angles sharing a radicand; Δ₁ is taken as the positive root of Δ₁².
    pub fn from_angles_surd(angles: [SurdAngle; 3]) -> Result<Self, SphereError> {
        Self::check_common(&angles)?;
        let d2 = Self::delta1_squared_of(&angles);
        let root = surd_sqrt(&d2, Rational::one())?;
        let sides = Self::dual(&angles, &root.coefficient, &root.radicand, true)?;
        SphericalTriangle { sides, angles }.validated()
    }

    /// From rational sides and Δ₂ = sin a·sin b·sin γ > 0.
    pub fn from_sides(
        a: &CirclePoint,
        b: &CirclePoint,
        c: &CirclePoint,
        delta2: &Rational,
    ) -> Result<Self, SphereError> {
        Self::check_nondegenerate(&[a.clone(), b.clone(), c.clone()], &SIDE)?;
        let sides = [a.surd(), b.surd(), c.surd()];
        if !delta2.is_positive() || delta2 * delta2 != Self::delta2_squared_of(&sides) {
            return Err(SphereError::DeltaMismatch);
        }
        let angles = Self::dual(&sides, delta2, &Rational::one(), false)?;
        SphericalTriangle { sides, angles }.validated()
    }

    pub fn from_sides_surd(sides: [SurdAngle; 3]) -> Result<Self, SphereError> {
        Self::check_common(&sides)?;
        let d2 = Self::delta2_squared_of(&sides);
        let root = surd_sqrt(&d2, Rational::one())?;
        let angles = Self::dual(&sides, &root.coefficient, &root.radicand, false)?;
        SphericalTriangle { sides, angles }.validated()
    }

    fn check_common(xs: &[SurdAngle; 3]) -> Result<(), SphereError> {
        for x in xs {
            if !x.in_open_half_turn() {
                return Err(SphereError::Degenerate("every entry must lie in (0, π)".into()));
            }
            if x.radicand != xs[0].radicand {
                return Err(CircleError::RadicandMismatch.into());
            }
        }
        Ok(())
    }

    /// Δ₁² = sin²α·sin²β − (cos γ + cos α·cos β)².
    fn delta1_squared_of(angles: &[SurdAngle; 3]) -> Rational {
        let [al, be, ga] = angles;
        let k = &ga.cos + &al.cos * &be.cos;
        al.sin_squared() * be.sin_squared() - &k * &k
    }

    /// Δ₂² = sin²a·sin²b − (cos a·cos b − cos c)².
    fn delta2_squared_of(sides: &[SurdAngle; 3]) -> Rational {
        let [a, b, c] = sides;
        let k = &a.cos * &b.cos - &c.cos;
        a.sin_squared() * b.sin_squared() - &k * &k
    }

    /// The opposite triple. With `from_angles`, cos x_i = (cos X_i + cos X_j cos X_k)/(sin X_j sin X_k);
    /// otherwise the sign in the numerator flips. sin x_i = Δ/(sin X_j sin X_k) with Δ = coef·√rad.
    fn dual(
        xs: &[SurdAngle; 3],
        coef: &Rational,
        rad: &Rational,
        from_angles: bool,
    ) -> Result<[SurdAngle; 3], SphereError> {
        let mut out = Vec::with_capacity(3);
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let ss = product_of_sines(&xs[j], &xs[k]);
            if ss.is_zero() {
                return Err(SphereError::Degenerate("vanishing sine".into()));
            }
            let cc = &xs[j].cos * &xs[k].cos;
            let cos = if from_angles {
                (&xs[i].cos + cc) / &ss
            } else {
                (&xs[i].cos - cc) / &ss
            };
            out.push(SurdAngle::new(cos, coef / &ss, rad.clone())?);
        }
        Ok([out[0].clone(), out[1].clone(), out[2].clone()])
    }

    pub fn side(&self, i: usize) -> &SurdAngle {
        &self.sides[i % 3]
    }

    pub fn angle(&self, i: usize) -> &SurdAngle {
        &self.angles[i % 3]
    }

    pub fn rational_sides(&self) -> Option<[CirclePoint; 3]> {
        let v: Option<Vec<CirclePoint>> = self.sides.iter().map(SurdAngle::to_circle).collect();
        v.map(|v| [v[0].clone(), v[1].clone(), v[2].clone()])
    }

    pub fn rational_angles(&self) -> Option<[CirclePoint; 3]> {
        let v: Option<Vec<CirclePoint>> = self.angles.iter().map(SurdAngle::to_circle).collect();
        v.map(|v| [v[0].clone(), v[1].clone(), v[2].clone()])
    }

    pub fn is_fully_rational(&self) -> bool {
        self.rational_sides().is_some() && self.rational_angles().is_some()
    }

    pub fn delta1_squared(&self) -> Rational {
        Self::delta1_squared_of(&self.angles)
    }

    pub fn delta2_squared(&self) -> Rational {
        Self::delta2_squared_of(&self.sides)
    }

    /// Δ₁ when it is rational.
    pub fn delta1(&self) -> Option<Rational> {
        is_perfect_square(&self.delta1_squared())
    }

    pub fn delta2(&self) -> Option<Rational> {
        is_perfect_square(&self.delta2_squared())
    }

    pub fn area(&self) -> Result<SurdAngle, SphereError> {
        Ok(area_from_angles_surd([
            &self.angles[0],
            &self.angles[1],
            &self.angles[2],
        ])?)
    }

    pub fn verify(&self) -> VerifyReport {
        let mut r = VerifyReport::default();
        let (s, g) = (&self.sides, &self.angles);
        let uniform = |xs: &[SurdAngle; 3]| {
            let live: Vec<&SurdAngle> = xs.iter().filter(|x| !x.sin.is_zero()).collect();
            live.windows(2).all(|w| w[0].radicand == w[1].radicand)
        };
        let radicands_ok = uniform(s) && uniform(g);
        r.push("common-radicands", radicands_ok);
        for (i, x) in s.iter().enumerate() {
            r.push(format!("on-circle-{}", SIDE[i]), x.on_circle());
        }
        for (i, x) in g.iter().enumerate() {
            r.push(format!("on-circle-{}", ANGLE[i]), x.on_circle());
        }
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let cosines =
                radicands_ok && s[i].cos == &s[j].cos * &s[k].cos + product_of_sines(&s[j], &s[k]) * &g[i].cos;
            r.push(format!("law-of-cosines-{}", SIDE[i]), cosines);
            let supplemental =
                radicands_ok && g[i].cos == -(&g[j].cos * &g[k].cos) + product_of_sines(&g[j], &g[k]) * &s[i].cos;
            r.push(format!("supplemental-cosines-{}", ANGLE[i]), supplemental);
            // sin X_i·sin x_j = sin X_j·sin x_i; the common √ factor cancels
            let sines = radicands_ok && &g[i].sin * &s[j].sin == &g[j].sin * &s[i].sin;
            r.push(format!("law-of-sines-{}{}", ANGLE[i], ANGLE[j]), sines);
        }
        for (i, x) in s.iter().enumerate() {
            r.push(format!("proper-{}", SIDE[i]), x.in_open_half_turn());
        }
        for (i, x) in g.iter().enumerate() {
            r.push(format!("proper-{}", ANGLE[i]), x.in_open_half_turn());
        }
        let all_open = s.iter().chain(g.iter()).all(SurdAngle::in_open_half_turn);
        let angle_sum = if all_open && radicands_ok {
            wound_sum_surd(g).map(|w| w.exceeds(1) && w.below(3)).unwrap_or(false)
        } else {
            false
        };
        r.push("angle-sum-between-pi-and-3pi", angle_sum);
        let side_sum = if all_open && radicands_ok {
            wound_sum_surd(s).map(|w| w.below(2)).unwrap_or(false)
        } else {
            false
        };
        r.push("side-sum-below-2pi", side_sum);
        let gauss_bonnet = radicands_ok && self.area().map(|a| a.on_circle()).unwrap_or(false);
        r.push("gauss-bonnet", gauss_bonnet);
        r
    }

    /// Median from the vertex opposite side `side` (0, 1, 2 for a, b, c).
    pub fn median(&self, side: usize) -> Option<CevianResult> {
        let i = side % 3;
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let (a, b, c) = (&self.sides[i], &self.sides[j], &self.sides[k]);
        let sum = &b.cos + &c.cos;
        if sum.is_zero() {
            // 2cos m·cos(a/2) = 0 forces m = π/2 whatever a/2 is
            let half = a.to_circle().and_then(|p| p.half().ok().flatten());
            let length = CirclePoint::right().surd();
            let foot = half.and_then(|h| self.median_foot(i, &h, &length));
            return Some(CevianResult {
                kind: CevianKind::Median,
                vertex: i,
                length,
                foot_angle: foot,
                sub_angles: None,
            });
        }
        let half = a.to_circle()?.half().ok()??;
        let two_c = Rational::from_integer(2.into()) * half.cos();
        let disc = &two_c * &two_c - &sum * &sum;
        let root = is_perfect_square(&disc)?;
        if root.is_zero() {
            return None;
        }
        let length = SurdAngle::new(&sum / &two_c, &root / &two_c, Rational::one()).ok()?;
        let foot = self.median_foot(i, &half, &length);
        Some(CevianResult {
            kind: CevianKind::Median,
            vertex: i,
            length,
            foot_angle: foot,
            sub_angles: None,
        })
    }

    /// θ at the midpoint, measured inside the half-triangle containing the next vertex.
    fn median_foot(&self, i: usize, half: &CirclePoint, m: &SurdAngle) -> Option<SurdAngle> {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let c = &self.sides[k];
        let beta = &self.angles[j];
        // half-triangle with sides c, a/2, m; θ is opposite c
        let denom = half.sin() * &m.sin;
        if denom.is_zero() || !m.radicand.is_one() {
            return None;
        }
        let cos = (&c.cos - half.cos() * &m.cos) / &denom;
        let sin = &c.sin * &beta.sin / &m.sin;
        SurdAngle::new(cos, sin, &c.radicand * &beta.radicand).ok()
    }

    /// Half of the area as (cos, sin) in ℚ(√d).
    fn half_area(&self) -> Result<(QuadSurd, QuadSurd), SphereError> {
        let area = self.area()?;
        if !area.radicand.is_one() && !area.sin.is_zero() {
            return Err(SphereError::NotRational("area".into()));
        }
        let one = Rational::one();
        let two = Rational::from_integer(2.into());
        let c2 = (&one + &area.cos) / &two;
        let s2 = (&one - &area.cos) / &two;
        // A ∈ (0, 2π): sin(A/2) > 0 and cos(A/2) has the sign of sin A
        let sign = if area.sin.is_negative() {
            -one.clone()
        } else {
            one.clone()
        };
        if let (Some(c), Some(s)) = (is_perfect_square(&c2), is_perfect_square(&s2)) {
            return Ok((QuadSurd::rational(c * sign), QuadSurd::rational(s)));
        }
        if c2.is_zero() || s2.is_zero() {
            return Err(SphereError::NotRational("half area".into()));
        }
        let ratio = is_perfect_square(&(&s2 / &c2)).ok_or_else(|| SphereError::NotRational("half area".into()))?;
        Ok((
            QuadSurd::new(Rational::zero(), sign, c2.clone()),
            QuadSurd::new(Rational::zero(), ratio, c2),
        ))
    }

    /// tan α₁, where the area bisector from `vertex` splits its angle and α₁ is the
    /// part next to vertex `toward`.
    pub fn area_bisector_tangent(&self, vertex: usize, toward: usize) -> Result<Rational, SphereError> {
        let (i, j) = (vertex % 3, toward % 3);
        if i == j {
            return Err(SphereError::Degenerate("toward must be another vertex".into()));
        }
        let (alpha, beta) = (&self.angles[i], &self.angles[j]);
        if !alpha.in_open_half_turn() {
            return Err(SphereError::Degenerate("split angle must lie in (0, π)".into()));
        }
        let (ca, sa) = (
            QuadSurd::rational(alpha.cos.clone()),
            QuadSurd::rational(
                alpha
                    .to_circle()
                    .ok_or_else(|| SphereError::NotRational("alpha".into()))?
                    .sin()
                    .clone(),
            ),
        );
        let bp = beta
            .to_circle()
            .ok_or_else(|| SphereError::NotRational("beta".into()))?;
        let (cb, sb) = (
            QuadSurd::rational(bp.cos().clone()),
            QuadSurd::rational(bp.sin().clone()),
        );
        let (ch, sh) = self.half_area()?;
        let one = QuadSurd::rational(Rational::one());
        let two = QuadSurd::rational(Rational::from_integer(2.into()));
        let num = -((ch.clone() - one.clone()) * cb.clone() * sa.clone() + sh.clone() * sa.clone() * sb.clone());
        let den = (two.clone() * ca.clone() * sh.clone() * sh.clone()
            - (two.clone() * ch.clone() - one.clone()) * sh.clone() * sa.clone())
            * cb
            - (two.clone() * ch.clone() * ca * sh.clone() + (two * sh.clone() * sh + ch - one) * sa) * sb;
        if den.is_zero() {
            return Err(SphereError::Degenerate(
                "area bisector tangent has vanishing denominator".into(),
            ));
        }
        num.div(&den)
            .and_then(|q| q.as_rational())
            .ok_or_else(|| SphereError::NotRational("tan α₁".into()))
    }

    /// The area bisector from `vertex` when its sub-angles are rational.
    pub fn area_bisector(&self, vertex: usize, toward: usize) -> Result<CevianResult, SphereError> {
        let (i, j) = (vertex % 3, toward % 3);
        let tan = self.area_bisector_tangent(i, j)?;
        if tan.is_zero() {
            return Err(SphereError::Degenerate("α₁ = 0".into()));
        }
        let one = Rational::one();
        let sec = is_perfect_square(&(&one + &tan * &tan)).ok_or_else(|| SphereError::NotRational("α₁".into()))?;
        let sign = if tan.is_negative() { -one.clone() } else { one.clone() };
        let a1 = CirclePoint::from_cos_sin(&sign / &sec, &tan.abs() / &sec)?;
        let alpha = self.angles[i]
            .to_circle()
            .ok_or_else(|| SphereError::NotRational("alpha".into()))?;
        let beta = self.angles[j]
            .to_circle()
            .ok_or_else(|| SphereError::NotRational("beta".into()))?;
        if a1.cmp_angle(&alpha) != std::cmp::Ordering::Less {
            return Err(SphereError::Degenerate("α₁ is not inside α".into()));
        }
        let (ch, sh) = self.half_area()?;
        let half = CirclePoint::from_cos_sin(
            ch.as_rational().ok_or_else(|| SphereError::NotRational("A/2".into()))?,
            sh.as_rational().ok_or_else(|| SphereError::NotRational("A/2".into()))?,
        )?;
        // θ = π + A/2 − α₁ − β
        let theta = CirclePoint::straight().add(&half).sub(&a1).sub(&beta);
        if !theta.in_open_half_turn() {
            return Err(SphereError::Degenerate("θ outside (0, π)".into()));
        }
        // side between vertex i and vertex j is opposite the third vertex
        let k = 3 - i - j;
        let c = &self.sides[k];
        let cos_len = (beta.cos() + a1.cos() * theta.cos()) / (a1.sin() * theta.sin());
        let length = SurdAngle::new(cos_len, &c.sin * beta.sin() / theta.sin(), c.radicand.clone())?;
        let rest = alpha.sub(&a1);
        Ok(CevianResult {
            kind: CevianKind::AreaBisector,
            vertex: i,
            length,
            foot_angle: Some(theta.surd()),
            sub_angles: Some((a1.surd(), rest.surd())),
        })
    }
}

/// a + b√d.
#[derive(Debug, Clone, PartialEq, Eq)]
struct QuadSurd {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadSurd {
    fn new(a: Rational, b: Rational, d: Rational) -> Self {
        QuadSurd { a, b, d }
    }

    fn rational(a: Rational) -> Self {
        QuadSurd::new(a, Rational::zero(), Rational::zero())
    }

    fn radicand(&self, o: &QuadSurd) -> Rational {
        if self.b.is_zero() {
            o.d.clone()
        } else {
            self.d.clone()
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn as_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn div(&self, o: &QuadSurd) -> Option<QuadSurd> {
        let d = self.radicand(o);
        let norm = &o.a * &o.a - &o.b * &o.b * &d;
        if norm.is_zero() {
            return None;
        }
        let conj = QuadSurd::new(o.a.clone(), -o.b.clone(), d);
        let p = self.clone() * conj;
        Some(QuadSurd::new(&p.a / &norm, &p.b / &norm, p.d))
    }
}

impl std::ops::Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: QuadSurd) -> QuadSurd {
        let d = self.radicand(&o);
        QuadSurd::new(self.a + o.a, self.b + o.b, d)
    }
}

impl std::ops::Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: QuadSurd) -> QuadSurd {
        self + (-o)
    }
}

impl std::ops::Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd::new(-self.a, -self.b, self.d)
    }
}

impl std::ops::Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: QuadSurd) -> QuadSurd {
        let d = self.radicand(&o);
        let a = &self.a * &o.a + &self.b * &o.b * &d;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadSurd::new(a, b, d)
    }
}

/// Isosceles triangle with base a on the equator and two half-meridians.
pub fn meridian_triangle(a: &CirclePoint) -> Result<SphericalTriangle, SphereError> {
    if !a.in_open_half_turn() {
        return Err(SphereError::Degenerate("a must lie in (0, π)".into()));
    }
    let r = CirclePoint::right().surd();
    SphericalTriangle::from_parts([a.surd(), r.clone(), r.clone()], [a.surd(), r.clone(), r]).validated()
}

/// The heights to the meridian sides have length a.
pub fn meridian_height(a: &CirclePoint) -> Result<CirclePoint, SphereError> {
    meridian_triangle(a)?;
    Ok(a.clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BisectorVerdict {
    Rational(CirclePoint),
    Irrational,
}

/// tan ♭ = 2 sin(π/4)·tan α, rational only when cos α = 0.
pub fn meridian_bisector_tan(a: &CirclePoint) -> Result<BisectorVerdict, SphereError> {
    meridian_triangle(a)?;
    Ok(if a.cos().is_zero() {
        BisectorVerdict::Rational(CirclePoint::right())
    } else {
        BisectorVerdict::Irrational
    })
}

/// Median to a meridian side: cos m = cos(π/4)·cos a.
pub fn meridian_median(a: &CirclePoint) -> Result<Option<CirclePoint>, SphereError> {
    let t = meridian_triangle(a)?;
    Ok(t.median(1).and_then(|m| m.length.to_circle()))
}

pub fn meridian_area_bisector_poly(n: &Rational) -> Rational {
    let n2 = n * n;
    let n4 = &n2 * &n2;
    &n4 * &n2 - Rational::from_integer(5.into()) * &n4 + Rational::from_integer(11.into()) * &n2 + Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::t_of;
    use crate::exactnum::{int, rat};

    fn right() -> CirclePoint {
        CirclePoint::right()
    }

    fn equilateral() -> SphericalTriangle {
        SphericalTriangle::from_angles(&right(), &right(), &right(), &int(1)).unwrap()
    }

    #[test]
    fn right_equilateral_from_angles() {
        let t = equilateral();
        for s in &t.sides {
            assert_eq!(s, &right().surd());
        }
        assert!(t.verify().all_passed());
        assert_eq!(t.area().unwrap(), right().surd());
    }

    #[test]
    fn two_right_angles_from_angles() {
        let g = t_of(1, 3);
        let t = SphericalTriangle::from_angles(&right(), &right(), &g, g.sin()).unwrap();
        assert_eq!(t.sides[2].cos, g.cos().clone());
        assert_eq!(t.sides[0], right().surd());
        assert!(t.verify().all_passed());
    }

    #[test]
    fn wrong_delta_rejected() {
        let e = SphericalTriangle::from_angles(&right(), &right(), &right(), &int(2));
        assert_eq!(e.unwrap_err(), SphereError::DeltaMismatch);
    }

    #[test]
    fn from_sides_examples() {
        let t = SphericalTriangle::from_sides(&right(), &right(), &right(), &int(1)).unwrap();
        assert_eq!(t, equilateral());
        let c = t_of(2, 3);
        let t = SphericalTriangle::from_sides(&right(), &right(), &c, c.sin()).unwrap();
        assert_eq!(t.angles[2].cos, c.cos().clone());
        assert!(SphericalTriangle::from_sides(&right(), &right(), &right(), &rat(1, 2)).is_err());
    }

    #[test]
    fn negated_angle_breaks_sines() {
        let t = equilateral();
        let mut angles = t.angles.clone();
        angles[2] = angles[2].neg();
        let bad = SphericalTriangle::from_parts(t.sides.clone(), angles);
        let r = bad.verify();
        assert_eq!(r.get("law-of-sines-betagamma"), Some(false));
    }

    #[test]
    fn straight_side_is_improper() {
        let s = CirclePoint::straight().surd();
        let r = right().surd();
        let bad = SphericalTriangle::from_parts([s, r.clone(), r.clone()], [r.clone(), r.clone(), r]);
        assert_eq!(bad.verify().get("proper-a"), Some(false));
    }

    #[test]
    fn equilateral_median() {
        let m = equilateral().median(0).unwrap();
        assert_eq!(m.length, right().surd());
    }

    #[test]
    fn meridian_examples() {
        assert_eq!(meridian_triangle(&right()).unwrap(), equilateral());
        let a = t_of(1, 2);
        assert!(meridian_triangle(&a).unwrap().verify().all_passed());
        assert!(meridian_triangle(&CirclePoint::straight()).is_err());
        assert_eq!(meridian_height(&t_of(3, 1)).unwrap(), t_of(3, 1));
        assert_eq!(meridian_median(&a).unwrap(), None);
        assert_eq!(meridian_median(&right()).unwrap(), Some(right()));
        assert_eq!(meridian_bisector_tan(&a).unwrap(), BisectorVerdict::Irrational);
        assert_eq!(meridian_bisector_tan(&t_of(2, 1)).unwrap(), BisectorVerdict::Irrational);
        assert_eq!(
            meridian_bisector_tan(&right()).unwrap(),
            BisectorVerdict::Rational(right())
        );
    }

    #[test]
    fn meridian_polynomial() {
        assert_eq!(meridian_area_bisector_poly(&int(0)), int(1));
        assert_eq!(meridian_area_bisector_poly(&int(1)), int(8));
        assert_eq!(meridian_area_bisector_poly(&int(2)), int(29));
    }

    #[test]
    fn equilateral_area_bisector_tangent() {
        assert_eq!(equilateral().area_bisector_tangent(0, 1).unwrap(), int(1));
    }

    #[test]
    fn meridian_area_bisector_tangent() {
        // α = 2·(angle with t = n): α/2 rational
        for n in [rat(1, 3), rat(1, 2), rat(2, 3)] {
            let half = CirclePoint::from_t_rational(&n);
            let alpha = half.double();
            let t = meridian_triangle(&alpha).unwrap();
            let expect = (half.cos() - alpha.cos()) / half.sin();
            assert_eq!(t.area_bisector_tangent(1, 0).unwrap(), expect);
        }
    }

    #[test]
    fn isosceles_median() {
        // b = c: cos m·cos(a/2) = cos b
        let half = t_of(1, 3);
        let a = half.double();
        let b = t_of(1, 2);
        let d2 = SphericalTriangle::delta2_squared_of(&[a.surd(), b.surd(), b.surd()]);
        if let Some(d) = is_perfect_square(&d2) {
            let t = SphericalTriangle::from_sides(&a, &b, &b, &d).unwrap();
            if let Some(m) = t.median(0) {
                assert_eq!(&m.length.cos * half.cos(), b.cos().clone());
            }
        }
        let t = SphericalTriangle::from_sides_surd([a.surd(), b.surd(), b.surd()]).unwrap();
        assert!(t.verify().all_passed());
    }
}
