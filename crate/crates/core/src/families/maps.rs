//! The printed birational maps between each family quartic and its curve.

use num_traits::{One, Signed, Zero};

use super::{from_t, FamilyError};
use crate::circle::{CirclePoint, SurdAngle};
use crate::ec::{
    find_isomorphism, quartic_to_weierstrass, BirationalMap, CasselsMap, CurvePoint, EcError, Isomorphism,
    QuarticModel, QuarticPoint, WeierstrassCurve,
};
use crate::exactnum::{int, Rational};
use crate::sphere::{CevianResult, SphericalTriangle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMap {
    /// w² = −16m(mt² + 2t − m)(t² − 2mt − 1), base (1, 8m).
    Congruent { m: Rational },
    /// w₁² = −4m(mt⁴ + 4t³ − 6mt² − 4t + m), base (1, 4m).
    IsoAngle { m: Rational },
    /// D² = (−uvw+u+v+w)(uvw−u+v+w)(uvw+u−v+w)(uvw+u+v−w) in u, base ((v+w)/(1−vw), 0).
    Sides { v: Rational, w: Rational },
    /// t² = (1−w²)²(1+u²)²(1+v²)² − (1+w²)²(1−u²v²)² in v.
    Median { u: Rational, w: Rational },
    /// The median map at u = 2w/(1−w²), rescaled by k = (w²+1)/(w²−1)².
    IsoMedian { w: Rational, u: Rational, k: Rational },
    AreaBisector {
        n: Rational,
        u: Rational,
        quartic: Box<QuarticModel<Rational>>,
        cassels: Box<CasselsMap<Rational>>,
        iso: Box<Isomorphism<Rational>>,
    },
    /// V² = −U⁴ + 2U² + 3 onto y² = x(x² − x + 1).
    Equilateral,
    /// s² = −4p⁴ + 5p² − 1 onto y² = (x − 3)(x − 4)(x − 12).
    EquilateralMedian,
}

fn exceptional(what: &str) -> EcError {
    EcError::Exceptional(what.to_string())
}

/// Σ c·aⁱ·bʲ·cᵏ over the listed terms.
fn poly3(terms: &[(i64, i32, i32, i32)], a: &Rational, b: &Rational, c: &Rational) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, &(k, i, j, l)| {
        acc + int(k) * a.pow(i) * b.pow(j) * c.pow(l)
    })
}

fn poly2(terms: &[(i64, i32, i32)], a: &Rational, b: &Rational) -> Rational {
    poly3(
        &terms.iter().map(|&(k, i, j)| (k, i, j, 0)).collect::<Vec<_>>(),
        a,
        b,
        &Rational::one(),
    )
}

// Part of the median y-numerator free of t, in (u, v, w).
const MEDIAN_Y: [(i64, i32, i32, i32); 32] = [
    (2, 2, 3, 4),
    (1, 0, 3, 4),
    (1, 5, 2, 4),
    (3, 3, 2, 4),
    (1, 1, 2, 4),
    (1, 4, 1, 4),
    (3, 2, 1, 4),
    (1, 0, 1, 4),
    (1, 5, 0, 4),
    (2, 3, 0, 4),
    (-4, 4, 3, 2),
    (-4, 2, 3, 2),
    (-2, 0, 3, 2),
    (-2, 5, 2, 2),
    (-2, 3, 2, 2),
    (-2, 1, 2, 2),
    (-2, 4, 1, 2),
    (-2, 2, 1, 2),
    (-2, 0, 1, 2),
    (-2, 5, 0, 2),
    (-4, 3, 0, 2),
    (-4, 1, 0, 2),
    (2, 2, 3, 0),
    (1, 0, 3, 0),
    (1, 5, 2, 0),
    (3, 3, 2, 0),
    (1, 1, 2, 0),
    (1, 4, 1, 0),
    (3, 2, 1, 0),
    (1, 0, 1, 0),
    (1, 5, 0, 0),
    (2, 3, 0, 0),
];

fn median_forward(u: &Rational, w: &Rational, p: &QuarticPoint<Rational>) -> Result<CurvePoint<Rational>, EcError> {
    let QuarticPoint::Affine { t: v, w: t } = p else {
        return Err(exceptional("median quartic point at v = ∞"));
    };
    let one = Rational::one();
    let (up, wm) = (u * u + &one, w * w - &one);
    let den = u * v - &one;
    if den.is_zero() {
        // v = 1/u: the base branch goes to O, the other to the finite point
        // where the inverse's v-formula meets 1/u
        let t0 = median_base_t(u, w);
        return if *t == t0 {
            Ok(CurvePoint::Infinity)
        } else if *t == -t0 {
            Ok(median_point_over_inverse_u(u, w))
        } else {
            Err(exceptional("median map at uv = 1"))
        };
    }
    let x = int(2) * up.pow(2) * &wm * (&up * (v * v + &one) * &wm + t) / den.pow(2);
    let y = int(4) * up.pow(2) * &wm / den.pow(3) * (poly3(&MEDIAN_Y, u, v, w) + t * &wm * &up * (u + v));
    Ok(CurvePoint::new(x, y))
}

fn median_base_t(u: &Rational, w: &Rational) -> Rational {
    let one = Rational::one();
    (&one - w * w) * (u * u + &one).pow(2) / (u * u)
}

/// (g, k) of the inverse's v-formula.
fn median_inverse_consts(u: &Rational, w: &Rational) -> (Rational, Rational) {
    let one = Rational::one();
    let up = u * u + &one;
    let g = int(2) * &up * (w * w - &one);
    let k = int(2) * &up * (w * w + &one).pow(2) * &g;
    (g, k)
}

/// Image of (1/u, −t₀): x = 2u²k/(g(u²+1)), with y the sign that keeps the
/// v-formula away from 0/0.
fn median_point_over_inverse_u(u: &Rational, w: &Rational) -> CurvePoint<Rational> {
    let (g, k) = median_inverse_consts(u, w);
    let x = int(2) * u * u * &k / (&g * (u * u + Rational::one()));
    let pole_y = (&g * &x - u * u * &k) / u;
    CurvePoint::new(x, -pole_y)
}

fn median_inverse(u: &Rational, w: &Rational, p: &CurvePoint<Rational>) -> Result<QuarticPoint<Rational>, EcError> {
    let one = Rational::one();
    let Some((x, y)) = p.coords() else {
        return Ok(QuarticPoint::affine(u.recip(), median_base_t(u, w)));
    };
    let up = u * u + &one;
    let (g, k) = median_inverse_consts(u, w);
    let num = -(-(u * &k) + u * &g * x + y);
    let den = -(u * u * &k) + &g * x - u * y;
    if den.is_zero() {
        return Err(exceptional("median inverse with v = ∞"));
    }
    let v = num / den;
    if (u * &v).is_one() {
        return Ok(QuarticPoint::affine(v, -median_base_t(u, w)));
    }
    let t = (x * (u * &v - &one).pow(2) - int(2) * up.pow(3) * (&v * &v + &one) * (w * w - &one).pow(2))
        / (int(2) * up.pow(2) * (w * w - &one));
    Ok(QuarticPoint::affine(v, t))
}

/// Returns (E_{n,u}, map, r, L).
pub(super) fn area_bisector(
    n: &Rational,
    u: &Rational,
) -> Result<(WeierstrassCurve<Rational>, FamilyMap, Rational, Rational), FamilyError> {
    let one = Rational::one();
    let nm = n - u;
    let nu1 = n * u + &one;
    if nm.is_zero() || nu1.is_zero() {
        return Err(FamilyError::Degenerate("n = u or nu = −1".into()));
    }
    let l = poly2(
        &[(3, 2, 2), (-1, 0, 2), (-2, 3, 1), (6, 1, 1), (-3, 2, 0), (1, 0, 0)],
        n,
        u,
    );
    let q2 = poly2(
        &[
            (1, 6, 4),
            (2, 6, 2),
            (-8, 5, 3),
            (11, 4, 4),
            (1, 6, 0),
            (8, 5, 1),
            (-50, 4, 2),
            (64, 3, 3),
            (-13, 2, 4),
            (11, 4, 0),
            (-64, 3, 1),
            (86, 2, 2),
            (-24, 1, 3),
            (1, 0, 4),
            (-13, 2, 0),
            (24, 1, 1),
            (-6, 0, 2),
            (1, 0, 0),
        ],
        n,
        u,
    );
    let outer = &nm * &nu1;
    let coeffs = [
        int(4) * outer.pow(2),
        -(int(4) * &outer * &l),
        q2,
        int(4) * &outer * &l,
        int(4) * outer.pow(2),
    ];
    let quartic = QuarticModel::new(coeffs, (Rational::zero(), -(int(2) * &outer)))?;
    let k = poly2(
        &[
            (1, 4, 4),
            (-8, 2, 4),
            (-1, 0, 4),
            (16, 3, 3),
            (-16, 1, 3),
            (-6, 4, 2),
            (32, 2, 2),
            (-10, 0, 2),
            (-16, 3, 1),
            (16, 1, 1),
            (1, 4, 0),
            (-8, 2, 0),
            (-1, 0, 0),
        ],
        n,
        u,
    );
    let n2p = n * n + &one;
    let r = n2p.pow(2) * (n * u * u + int(2) * u - n).pow(2);
    // (x − r)(x² − (n²+1)K·x − rL²)
    let s = -(&n2p * &k);
    let p = -(&r * &l * &l);
    let curve = WeierstrassCurve::monic(&s - &r, &p - &r * &s, -(&r * &p))
        .map_err(|_| FamilyError::Degenerate("area_bisector: singular curve".into()))?;
    let (cassels_curve, cassels) = quartic_to_weierstrass(&quartic)
        .map_err(|_| FamilyError::Degenerate("area_bisector: singular quartic".into()))?;
    let iso = find_isomorphism(&cassels_curve, &curve)
        .ok_or_else(|| FamilyError::Degenerate("area_bisector: quartic model not isomorphic over ℚ".into()))?;
    let map = FamilyMap::AreaBisector {
        n: n.clone(),
        u: u.clone(),
        quartic: Box::new(quartic),
        cassels: Box::new(cassels),
        iso: Box::new(iso),
    };
    Ok((curve, map, r, l))
}

impl BirationalMap<Rational> for FamilyMap {
    fn forward(&self, p: &QuarticPoint<Rational>) -> Result<CurvePoint<Rational>, EcError> {
        let one = Rational::one();
        match self {
            FamilyMap::Congruent { m } => {
                let (t, w) = p.affine_coords().ok_or_else(|| exceptional("t = ∞"))?;
                let d = t - &one;
                if d.is_zero() {
                    // the other point over t = 1 is P(m)
                    return Ok(if *w == int(8) * m {
                        CurvePoint::Infinity
                    } else {
                        let m2 = m * m;
                        CurvePoint::new((&m2 + &one) * (m + &one).pow(2), (&m2 + &one).pow(2) * (&m2 - &one))
                    });
                }
                let m2 = m * m;
                let x = m * (int(4) * (&m2 * t * t - (m - &one).pow(2) * t + &one) + w) / d.pow(2);
                let y = m
                    * ((&one + int(2) * m - &m2) * (int(4) * m * t.pow(3) - int(12) * m * t - w)
                        + (&one - int(2) * m - &m2) * (int(12) * m * t * t - int(4) * m + w * t))
                    / d.pow(3);
                Ok(CurvePoint::new(x, y))
            }
            FamilyMap::IsoAngle { m } => {
                let (t, w1) = p.affine_coords().ok_or_else(|| exceptional("t = ∞"))?;
                let d = t - &one;
                if d.is_zero() {
                    let c = m * m + &one;
                    return Ok(if *w1 == int(4) * m {
                        CurvePoint::Infinity
                    } else {
                        CurvePoint::new(c.clone(), c)
                    });
                }
                let x = m * (int(4) * m * t - int(2) * t * t + int(2) + w1) / (int(2) * d.pow(2));
                let y = m / (int(2) * d.pow(3))
                    * (-(int(2) * m * (m + &one) * t.pow(3))
                        + int(6) * m * (m - &one) * t * t
                        + int(6) * m * (m + &one) * t
                        + int(2) * m * (&one - m)
                        + (m * t + m - t + &one) * w1);
                Ok(CurvePoint::new(x, y))
            }
            FamilyMap::Sides { v, w } => {
                let (u, d) = p.affine_coords().ok_or_else(|| exceptional("u = ∞"))?;
                let (bv, bw) = (v + v.recip(), w + w.recip());
                let den = u * v * w - u + v + w;
                if den.is_zero() {
                    return Ok(CurvePoint::Infinity);
                }
                let x = -(&bv * &bw * (u * v * w - u - v - w)) / &den;
                let y = &bv * &bw * (v + w) * (v * w - &one) * d / (v * w * den.pow(2));
                Ok(CurvePoint::new(x, y))
            }
            FamilyMap::Median { u, w } => median_forward(u, w, p),
            FamilyMap::IsoMedian { w, u, k } => Ok(match median_forward(u, w, p)? {
                CurvePoint::Infinity => CurvePoint::Infinity,
                CurvePoint::Affine { x, y } => CurvePoint::new(x / k.pow(2), y / k.pow(3)),
            }),
            FamilyMap::AreaBisector { cassels, iso, .. } => Ok(iso.apply(&cassels.forward(p)?)),
            FamilyMap::Equilateral => {
                let (uu, vv) = p.affine_coords().ok_or_else(|| exceptional("U = ∞"))?;
                let d = uu - &one;
                if d.is_zero() {
                    return if *vv == int(2) {
                        Ok(CurvePoint::Infinity)
                    } else {
                        Err(exceptional("(U, V) = (1, −2)"))
                    };
                }
                let x = (vv + int(2)) / d.pow(2);
                let y = (int(2) * vv + int(3) - uu.pow(3) + uu * uu + uu) / d.pow(3);
                Ok(CurvePoint::new(x, y))
            }
            FamilyMap::EquilateralMedian => {
                let (pp, s) = p.affine_coords().ok_or_else(|| exceptional("p = ∞"))?;
                let d = pp - &one;
                if d.is_zero() {
                    return Ok(CurvePoint::Infinity);
                }
                Ok(CurvePoint::new(-(int(6) / &d), int(6) * s / d.pow(2)))
            }
        }
    }

    fn inverse(&self, p: &CurvePoint<Rational>) -> Result<QuarticPoint<Rational>, EcError> {
        let one = Rational::one();
        match self {
            FamilyMap::Congruent { m } => {
                let Some((x, y)) = p.coords() else {
                    return Ok(QuarticPoint::affine(one, int(8) * m));
                };
                let m2 = m * m;
                let num = int(4) * m.pow(4) + int(4) * m.pow(3) + &m2 * x + int(4) * &m2 - int(2) * m * x + int(4) * m
                    - x
                    + y;
                let den = -(int(4) * m.pow(5)) - int(4) * m.pow(4) - int(4) * m.pow(3) + &m2 * x - int(4) * &m2
                    + int(2) * m * x
                    - x
                    + y;
                if den.is_zero() {
                    return Err(exceptional("congruent inverse with t = ∞"));
                }
                let t = num / den;
                let w = x * (&t - &one).pow(2) / m - int(4) * (&m2 * &t * &t - (m - &one).pow(2) * &t + &one);
                Ok(QuarticPoint::affine(t, w))
            }
            FamilyMap::IsoAngle { m } => {
                let Some((x, y)) = p.coords() else {
                    return Ok(QuarticPoint::affine(one, int(4) * m));
                };
                let num = m.pow(3) - m * x + m - x - y;
                let den = -m.pow(3) + m * x - m - x - y;
                if den.is_zero() {
                    return Err(exceptional("iso_angle inverse: vanishing denominator"));
                }
                let t = num / den;
                let w1 = int(2) * (-(int(2) * m * m * &t) + m * &t * &t - m + &t * &t * x - int(2) * &t * x + x) / m;
                Ok(QuarticPoint::affine(t, w1))
            }
            FamilyMap::Sides { v, w } => {
                let Some((x, y)) = p.coords() else {
                    return Ok(QuarticPoint::affine((v + w) / (&one - v * w), Rational::zero()));
                };
                let (v2, w2) = (v * v, w * w);
                let base = &v2 * &w2 + &v2 + &w2 + &one;
                let den = (v * w - &one) * (&base + v * w * x);
                if den.is_zero() {
                    return Err(exceptional("sides inverse with u = ∞"));
                }
                let uu = (v + w) * (&base - v * w * x) / &den;
                let d = int(4) * &v2 * &w2 * y * (v + w) * (&v2 + &one) * (&w2 + &one)
                    / ((v * w - &one) * (&base + v * w * x).pow(2));
                Ok(QuarticPoint::affine(uu, d))
            }
            FamilyMap::Median { u, w } => median_inverse(u, w, p),
            FamilyMap::IsoMedian { w, u, k } => {
                let q = match p {
                    CurvePoint::Infinity => CurvePoint::Infinity,
                    CurvePoint::Affine { x, y } => CurvePoint::new(x * k.pow(2), y * k.pow(3)),
                };
                median_inverse(u, w, &q)
            }
            FamilyMap::AreaBisector { cassels, iso, .. } => cassels.inverse(&iso.invert(p)),
            FamilyMap::Equilateral => {
                let Some((x, y)) = p.coords() else {
                    return Ok(QuarticPoint::affine(one, int(2)));
                };
                if *y == -one.clone() {
                    return if x.is_one() {
                        Ok(QuarticPoint::affine(-one, int(2)))
                    } else {
                        Err(exceptional("y = −1"))
                    };
                }
                let uu = (int(2) * x + y - &one) / (y + &one);
                let vv = x * (&uu - &one).pow(2) - int(2);
                Ok(QuarticPoint::affine(uu, vv))
            }
            FamilyMap::EquilateralMedian => {
                let Some((x, y)) = p.coords() else {
                    return Ok(QuarticPoint::affine(one, Rational::zero()));
                };
                if x.is_zero() {
                    return Err(exceptional("x = 0 sends p to ∞"));
                }
                Ok(QuarticPoint::affine((x - int(6)) / x, int(6) * y / (x * x)))
            }
        }
    }

    fn exceptional_set(&self) -> String {
        match self {
            FamilyMap::Congruent { .. } => "t = ∞; on the curve, the pole of the t-formula".into(),
            FamilyMap::IsoAngle { .. } => {
                "t = ∞; on the curve, −m³ + mx − m − x − y = 0, i.e. (m² + 1, −m² − 1)".into()
            }
            FamilyMap::Sides { .. } => "u = ∞; on the curve, x = −(v²+1)(w²+1)/(vw)".into(),
            FamilyMap::Median { .. } | FamilyMap::IsoMedian { .. } => {
                "v = 1/u off the base branch and v = ∞; on the curve, the pole of the v-formula".into()
            }
            FamilyMap::AreaBisector { .. } => "the pole of the Cassels inverse (y = 0 with nonzero numerator)".into(),
            FamilyMap::Equilateral => "(U, V) = (1, −2); on the curve, y = −1 with x ≠ 1".into(),
            FamilyMap::EquilateralMedian => "x = 0 (p = ∞)".into(),
        }
    }
}

fn pi_plus(area: &CirclePoint, minus: &[&CirclePoint]) -> CirclePoint {
    minus
        .iter()
        .fold(CirclePoint::straight().add(area), |acc, x| acc.sub(x))
}

type Built = (SphericalTriangle, Option<CevianResult>);

/// The triangle (and cevian, where the family has one) encoded by a quartic point.
pub(super) fn triangle_from_quartic(map: &FamilyMap, q: &QuarticPoint<Rational>) -> Result<Built, FamilyError> {
    let one = Rational::one();
    let (t, w) = q
        .affine_coords()
        .ok_or_else(|| FamilyError::Degenerate("quartic point at infinity".into()))?;
    match map {
        FamilyMap::Congruent { m } => {
            let alpha = from_t(t);
            let beta = CirclePoint::right();
            let gamma = pi_plus(&from_t(m), &[&alpha, &beta]);
            let delta1 = w.abs() / (int(2) * (m * m + &one) * (t * t + &one));
            Ok((SphericalTriangle::from_angles(&alpha, &beta, &gamma, &delta1)?, None))
        }
        FamilyMap::IsoAngle { m } => {
            let alpha = from_t(t);
            let gamma = pi_plus(&from_t(m), &[&alpha, &alpha]);
            let delta1 = (w * (m * t * t + int(2) * t - m)).abs() / ((m * m + &one) * (t * t + &one).pow(2));
            Ok((SphericalTriangle::from_angles(&alpha, &alpha, &gamma, &delta1)?, None))
        }
        FamilyMap::Sides { v, w: ww } => {
            let delta2 = int(2) * w.abs() / ((t * t + &one) * (v * v + &one) * (ww * ww + &one));
            Ok((
                SphericalTriangle::from_sides(&from_t(t), &from_t(v), &from_t(ww), &delta2)?,
                None,
            ))
        }
        FamilyMap::Median { u, w: ww } | FamilyMap::IsoMedian { u, w: ww, .. } => {
            let sides = [from_t(ww).double().surd(), from_t(u).surd(), from_t(t).surd()];
            let tri = SphericalTriangle::from_sides_surd(sides)?;
            let med = tri.median(0);
            if med.as_ref().is_none_or(|m| !m.length.is_rational()) {
                return Err(FamilyError::Degenerate("median is not rational".into()));
            }
            Ok((tri, med))
        }
        FamilyMap::AreaBisector { n, u, .. } => {
            let alpha = from_t(t);
            let beta = from_t(u);
            let gamma = pi_plus(&from_t(n).double(), &[&alpha, &beta]);
            let angles = [alpha.surd(), beta.surd(), gamma.surd()];
            let tri = SphericalTriangle::from_angles_surd(angles)?;
            let cev = tri.area_bisector(0, 1)?;
            Ok((tri, Some(cev)))
        }
        FamilyMap::Equilateral => {
            // cos α = (1 − U²)/2, sin α = V/2
            let alpha = SurdAngle::new((&one - t * t) / int(2), w / int(2), one.clone())
                .map_err(|e| FamilyError::Sphere(e.into()))?;
            let tri = SphericalTriangle::from_angles_surd([alpha.clone(), alpha.clone(), alpha])?;
            Ok((tri, None))
        }
        FamilyMap::EquilateralMedian => Err(FamilyError::Degenerate(
            "equilateral_median points are read by the certificate, not as a single triangle".into(),
        )),
    }
}
