//! Rank-0 certificates for equilateral triangles and their medians.

use num_traits::{One, Signed, Zero};

use super::{instantiate, FamilyError, FamilyId, Params};
use crate::circle::SurdAngle;
use crate::ec::{naive_search, BirationalMap, CurvePoint, QuarticPoint, WeierstrassCurve};
use crate::exactnum::{format_rational, int, is_perfect_square, rat, Rational};
use crate::sphere::{CevianResult, SphericalTriangle};

type Survey = (Vec<(CurvePoint<Rational>, u32)>, Vec<CurvePoint<Rational>>);

/// Points found by search plus O, each with its order if it is torsion.
fn survey(curve: &WeierstrassCurve<Rational>, height: u64) -> Result<Survey, FamilyError> {
    let mut torsion = vec![(CurvePoint::Infinity, 1)];
    let mut extra = Vec::new();
    for p in naive_search(curve, height)? {
        match curve.torsion_probe(&p, 16) {
            Some(n) => torsion.push((p, n)),
            None => extra.push(p),
        }
    }
    Ok((torsion, extra))
}

fn octant() -> SphericalTriangle {
    let r = SurdAngle::new(Rational::zero(), Rational::one(), Rational::one()).expect("π/2");
    SphericalTriangle::from_angles_surd([r.clone(), r.clone(), r]).expect("the octant triangle is proper")
}

#[derive(Debug, Clone)]
pub struct EquilateralCertificate {
    pub curve: WeierstrassCurve<Rational>,
    pub height: u64,
    /// Rational points of finite order with their orders, O first.
    pub torsion: Vec<(CurvePoint<Rational>, u32)>,
    /// Points of infinite order met by the search; empty when the certificate holds.
    pub extra_points: Vec<CurvePoint<Rational>>,
    /// Each point with its (U, V) and (cos α, sin α) = ((1 − U²)/2, V/2).
    pub preimages: Vec<(CurvePoint<Rational>, QuarticPoint<Rational>, Rational, Rational)>,
    pub triangles: Vec<SphericalTriangle>,
    pub median: Option<CevianResult>,
}

impl EquilateralCertificate {
    pub fn holds(&self) -> bool {
        let r = octant();
        self.extra_points.is_empty()
            && self.torsion.len() == 4
            && self.triangles == vec![r]
            && self
                .median
                .as_ref()
                .is_some_and(|m| m.length.cos.is_zero() && m.length.sin.is_one())
            && self
                .preimages
                .iter()
                .all(|(_, _, c, s)| c.is_zero() && s.abs().is_one())
    }
}

pub fn equilateral_certificate(height: u64) -> Result<EquilateralCertificate, FamilyError> {
    let fam = instantiate(FamilyId::Equilateral, &Params::new())?;
    let (torsion, extra) = survey(&fam.curve, height)?;
    let mut preimages = Vec::new();
    let mut triangles: Vec<SphericalTriangle> = Vec::new();
    for (p, _) in torsion.iter() {
        let q = fam.map.inverse(p)?;
        let (u, v) = q.affine_coords().expect("equilateral inverse is affine");
        let (c, s) = ((Rational::one() - u * u) / int(2), v / int(2));
        if let Ok(Some(ft)) = fam.point_to_triangle(p) {
            if !triangles.contains(&ft.triangle) {
                triangles.push(ft.triangle);
            }
        }
        preimages.push((p.clone(), q, c, s));
    }
    let median = triangles.first().and_then(|t| t.median(0));
    Ok(EquilateralCertificate {
        curve: fam.curve,
        height,
        torsion,
        extra_points: extra,
        preimages,
        triangles,
        median,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MedianCase {
    /// cos m·cos(a/2) = cos a
    Side,
    /// cos m·sin(α/2) = cos α
    Angle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianCandidate {
    pub p: Rational,
    /// Which quantity p is read as.
    pub reading: &'static str,
    pub excluded: Option<String>,
}

#[derive(Debug, Clone)]
pub struct MedianCertificate {
    pub case: MedianCase,
    pub curve: WeierstrassCurve<Rational>,
    pub height: u64,
    pub torsion: Vec<(CurvePoint<Rational>, u32)>,
    pub extra_points: Vec<CurvePoint<Rational>>,
    /// p = (x − 6)/x at each affine torsion point.
    pub p_values: Vec<Rational>,
    pub candidates: Vec<MedianCandidate>,
    /// The cos a = 0 (or cos α = 0) triangle, where the median is π/2 outright.
    pub special: SphericalTriangle,
    pub special_median: Option<CevianResult>,
}

impl MedianCertificate {
    pub fn holds(&self) -> bool {
        self.extra_points.is_empty()
            && self.torsion.len() == 4
            && self.candidates.iter().all(|c| c.excluded.is_some())
            && self
                .special_median
                .as_ref()
                .is_some_and(|m| m.length.cos.is_zero() && m.length.sin.is_one())
    }
}

fn in_open(x: &Rational, lo: &Rational, hi: &Rational) -> bool {
    lo < x && x < hi
}

fn fmt(r: &Rational) -> String {
    format_rational(r)
}

/// Why a cos m value fails to give a median in (0, π).
fn median_reason(cos_m: &Rational) -> Option<String> {
    (cos_m.abs() >= Rational::one()).then(|| format!("cos m = {} leaves no median in (0, π)", fmt(cos_m)))
}

fn side_candidates(p: &Rational) -> Vec<MedianCandidate> {
    let (zero, one, two) = (Rational::zero(), Rational::one(), int(2));
    let half_side = if !in_open(p, &zero, &one) {
        Some(format!("cos(a/2) = {} puts a outside (0, π)", fmt(p)))
    } else {
        median_reason(&((&two * p * p - &one) / p))
    };
    let c2 = (&one + p) / &two;
    let cos_side = if !in_open(p, &-one.clone(), &one) {
        Some(format!("cos a = {} puts a outside (0, π)", fmt(p)))
    } else {
        match is_perfect_square(&c2) {
            None => Some(format!(
                "cos(a/2)² = {} is not a square, so cos m = cos a / cos(a/2) is irrational",
                fmt(&c2)
            )),
            Some(c) => median_reason(&(p / c)),
        }
    };
    vec![
        MedianCandidate {
            p: p.clone(),
            reading: "p = cos(a/2)",
            excluded: half_side,
        },
        MedianCandidate {
            p: p.clone(),
            reading: "p = cos a",
            excluded: cos_side,
        },
    ]
}

fn angle_candidates(p: &Rational) -> Vec<MedianCandidate> {
    let (zero, one, two) = (Rational::zero(), Rational::one(), int(2));
    let half_angle = if !in_open(p, &zero, &one) {
        Some(format!("sin(α/2) = {} puts α outside (0, π)", fmt(p)))
    } else {
        let cos_a = &one - &two * p * p;
        // 3α ∈ (π, 3π) means α ∈ (π/3, π)
        if cos_a >= rat(1, 2) {
            Some(format!("cos α = {} gives angle sum 3α ≤ π", fmt(&cos_a)))
        } else {
            median_reason(&(cos_a / p))
        }
    };
    let sin_reading = if !in_open(p, &zero, &one) {
        Some(format!("sin α = {} puts α outside (0, π)", fmt(p)))
    } else {
        let c2 = &one - p * p;
        match is_perfect_square(&c2) {
            None => Some(format!("cos α = ±√{} is irrational", fmt(&c2))),
            Some(c) => median_reason(&(c / p)),
        }
    };
    vec![
        MedianCandidate {
            p: p.clone(),
            reading: "p = sin(α/2)",
            excluded: half_angle,
        },
        MedianCandidate {
            p: p.clone(),
            reading: "p = sin α",
            excluded: sin_reading,
        },
    ]
}

/// The side and angle certificates, both read off y² = (x − 3)(x − 4)(x − 12).
pub fn equilateral_median_certificates(height: u64) -> Result<(MedianCertificate, MedianCertificate), FamilyError> {
    let fam = instantiate(FamilyId::EquilateralMedian, &Params::new())?;
    let (torsion, extra) = survey(&fam.curve, height)?;
    let mut p_values = Vec::new();
    for (pt, _) in &torsion {
        if pt.is_infinity() {
            continue;
        }
        if let QuarticPoint::Affine { t, .. } = fam.map.inverse(pt)? {
            p_values.push(t);
        }
    }
    p_values.sort();
    let special = octant();
    let special_median = special.median(0);
    let build = |case: MedianCase| MedianCertificate {
        case,
        curve: fam.curve.clone(),
        height,
        torsion: torsion.clone(),
        extra_points: extra.clone(),
        p_values: p_values.clone(),
        candidates: p_values
            .iter()
            .flat_map(|p| match case {
                MedianCase::Side => side_candidates(p),
                MedianCase::Angle => angle_candidates(p),
            })
            .collect(),
        special: special.clone(),
        special_median: special_median.clone(),
    };
    Ok((build(MedianCase::Side), build(MedianCase::Angle)))
}
