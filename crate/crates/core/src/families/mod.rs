//! Curve families attached to triangle problems, and the walk that turns
//! their rational points into triangles.

mod certificate;
mod maps;

pub use certificate::{
    equilateral_certificate, equilateral_median_certificates, EquilateralCertificate, MedianCandidate, MedianCase,
    MedianCertificate,
};
pub use maps::FamilyMap;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::circle::{CirclePoint, SurdAngle};
use crate::ec::{BirationalMap, CurvePoint, EcError, QuarticPoint, WeierstrassCurve};
use crate::exactnum::{int, GaussianRational, Rational};
use crate::sphere::{CevianResult, SphereError, SphericalTriangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("missing or malformed parameter {0}")]
    BadParams(String),
    #[error("rank-0 family: {0}")]
    RankZero(String),
    #[error("point is not on the family curve")]
    NotOnCurve,
    #[error("point lies on the exceptional locus: {0}")]
    Exceptional(String),
    #[error("found {found} of {requested} triangles within the walk cap {cap}")]
    CapReached { found: usize, requested: usize, cap: u32 },
    #[error(transparent)]
    Ec(#[from] EcError),
    #[error(transparent)]
    Sphere(#[from] SphereError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Congruent,
    IsoAngle,
    Sides,
    Median,
    IsoMedian,
    AreaBisector,
    Equilateral,
    EquilateralMedian,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::Congruent,
        FamilyId::IsoAngle,
        FamilyId::Sides,
        FamilyId::Median,
        FamilyId::IsoMedian,
        FamilyId::AreaBisector,
        FamilyId::Equilateral,
        FamilyId::EquilateralMedian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Congruent => "congruent",
            FamilyId::IsoAngle => "iso_angle",
            FamilyId::Sides => "sides",
            FamilyId::Median => "median",
            FamilyId::IsoMedian => "iso_median",
            FamilyId::AreaBisector => "area_bisector",
            FamilyId::Equilateral => "equilateral",
            FamilyId::EquilateralMedian => "equilateral_median",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyId::Congruent | FamilyId::IsoAngle => &["m"],
            FamilyId::Sides => &["v", "w"],
            FamilyId::Median => &["u", "w"],
            FamilyId::IsoMedian => &["w"],
            FamilyId::AreaBisector => &["n", "u"],
            FamilyId::Equilateral | FamilyId::EquilateralMedian => &[],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| FamilyError::BadParams(format!("unknown family {s:?}")))
    }
}

pub type Params = BTreeMap<String, Rational>;

pub fn params(pairs: &[(&str, Rational)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub params: Params,
    pub curve: WeierstrassCurve<Rational>,
    pub named_points: Vec<(String, CurvePoint<Rational>)>,
    /// Points defined only over ℚ(i), on the same curve read over ℚ(i).
    pub gaussian_points: Vec<(String, CurvePoint<GaussianRational>)>,
    /// Candidates for the infinite-order walk.
    pub generators: Vec<CurvePoint<Rational>>,
    /// Shifts added to each multiple, O first.
    pub torsion_shifts: Vec<CurvePoint<Rational>>,
    pub map: FamilyMap,
    pub semantics: &'static str,
    pub note: Option<String>,
}

/// A curve point carried through the family map to a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTriangle {
    pub point: CurvePoint<Rational>,
    pub quartic_point: QuarticPoint<Rational>,
    pub triangle: SphericalTriangle,
    pub cevian: Option<CevianResult>,
}

fn get(p: &Params, name: &str) -> Result<Rational, FamilyError> {
    p.get(name)
        .cloned()
        .ok_or_else(|| FamilyError::BadParams(name.to_string()))
}

fn nonsingular<T>(r: Result<T, EcError>, what: &str) -> Result<T, FamilyError> {
    r.map_err(|e| match e {
        EcError::Singular | EcError::SingularQuartic => FamilyError::Degenerate(format!("{what}: singular curve")),
        other => FamilyError::Ec(other),
    })
}

pub fn to_gaussian(c: &WeierstrassCurve<Rational>) -> WeierstrassCurve<GaussianRational> {
    WeierstrassCurve {
        lambda: GaussianRational::real(c.lambda.clone()),
        a2: GaussianRational::real(c.a2.clone()),
        a4: GaussianRational::real(c.a4.clone()),
        a6: GaussianRational::real(c.a6.clone()),
    }
}

fn g(re: Rational, im: Rational) -> GaussianRational {
    GaussianRational::new(re, im)
}

fn pt(x: Rational, y: Rational) -> CurvePoint<Rational> {
    CurvePoint::new(x, y)
}

pub fn instantiate(id: FamilyId, p: &Params) -> Result<FamilyInstance, FamilyError> {
    let one = Rational::one();
    let two = int(2);
    match id {
        FamilyId::Congruent => {
            let m = get(p, "m")?;
            if m.is_zero() {
                return Err(FamilyError::Degenerate("m = 0".into()));
            }
            let m2 = &m * &m;
            let k = &m * (&m2 + &one);
            let curve = nonsingular(
                WeierstrassCurve::from_roots(Rational::zero(), &two * &k, int(4) * &k),
                "congruent",
            )?;
            let mp1 = &m + &one;
            let big_p = pt((&m2 + &one) * &mp1 * &mp1, (&m2 + &one).pow(2) * (&m2 - &one));
            let big_q = CurvePoint::new(
                GaussianRational::real(&two * &m * &mp1 * &mp1),
                g(Rational::zero(), int(4) * &m2 * (&m2 - &one)),
            );
            let note = (m.abs() == one).then(|| {
                "rank 0; the only solution is t = 1, the triangle with every side, angle and area π/2".to_string()
            });
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                generators: vec![big_p.clone()],
                torsion_shifts: vec![
                    CurvePoint::Infinity,
                    pt(Rational::zero(), Rational::zero()),
                    pt(&two * &k, Rational::zero()),
                    pt(int(4) * &k, Rational::zero()),
                ],
                named_points: vec![("P".into(), big_p)],
                gaussian_points: vec![("Q".into(), big_q)],
                curve,
                map: FamilyMap::Congruent { m },
                semantics: "t = tan(α/2), β = π/2, m = tan(A/2); w = 2(m²+1)(t²+1)Δ₁",
                note,
            })
        }
        FamilyId::IsoAngle => {
            let m = get(p, "m")?;
            if m.is_zero() {
                return Err(FamilyError::Degenerate("m = 0".into()));
            }
            let m2 = &m * &m;
            let curve = nonsingular(
                WeierstrassCurve::monic(Rational::zero(), -(&m2 * (&one + &m2)), Rational::zero()),
                "iso_angle",
            )?;
            let big_p = pt(-m2.clone(), m2.clone());
            // Q = (m(im − 1), (i + 1)m²(im − 1))
            let im1 = g(-one.clone(), m.clone());
            let big_q = CurvePoint::new(
                GaussianRational::real(m.clone()) * im1.clone(),
                g(one.clone(), one.clone()) * GaussianRational::real(m2.clone()) * im1,
            );
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                generators: vec![big_p.clone()],
                torsion_shifts: vec![CurvePoint::Infinity, pt(Rational::zero(), Rational::zero())],
                named_points: vec![("P".into(), big_p)],
                gaussian_points: vec![("Q".into(), big_q)],
                curve,
                map: FamilyMap::IsoAngle { m },
                semantics: "t = tan(α/2) = tan(β/2), m = tan(A/2); w₁ = w/(mt²+2t−m)",
                note: None,
            })
        }
        FamilyId::Sides => {
            let v = get(p, "v")?;
            let w = get(p, "w")?;
            if v.is_zero() || w.is_zero() {
                return Err(FamilyError::Degenerate("v and w must be nonzero".into()));
            }
            if v == w || &v * &w == one {
                return Err(FamilyError::Degenerate(
                    "v = w or vw = 1: the roots (v+1/v)² and (w+1/w)² collide".into(),
                ));
            }
            let big_v = &v + v.recip();
            let big_w = &w + w.recip();
            let vw = &big_v * &big_w;
            let curve = nonsingular(
                WeierstrassCurve::from_roots(Rational::zero(), &big_v * &big_v, &big_w * &big_w),
                "sides",
            )?;
            let r = pt(&v * &w * &vw, &vw * (&v * &v * &w * &w - &one));
            let s1 = pt(&big_v * &big_v, Rational::zero());
            let s0 = CurvePoint::new(
                GaussianRational::real(vw.clone()),
                g(Rational::zero(), &vw * (v.recip() - w.recip()) * (&v * &w - &one)),
            );
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                generators: vec![r.clone()],
                torsion_shifts: vec![
                    CurvePoint::Infinity,
                    s1.clone(),
                    pt(&big_w * &big_w, Rational::zero()),
                    pt(Rational::zero(), Rational::zero()),
                ],
                named_points: vec![("R".into(), r), ("S1".into(), s1)],
                gaussian_points: vec![
                    ("S0".into(), s0),
                    (
                        "S1".into(),
                        CurvePoint::new(GaussianRational::real(&big_v * &big_v), GaussianRational::zero()),
                    ),
                ],
                curve,
                map: FamilyMap::Sides { v, w },
                semantics: "u = tan(a/2) (recovered), v = tan(b/2), w = tan(c/2); D = ½(u²+1)(v²+1)(w²+1)Δ₂",
                note: None,
            })
        }
        FamilyId::Median => {
            let u = get(p, "u")?;
            let w = get(p, "w")?;
            let (curve, big_p, big_q) = median_curve(&u, &w)?;
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                generators: vec![big_p.clone(), big_q.clone()],
                torsion_shifts: vec![CurvePoint::Infinity, pt(Rational::zero(), Rational::zero())],
                named_points: vec![("P".into(), big_p), ("Q".into(), big_q)],
                gaussian_points: vec![],
                curve,
                map: FamilyMap::Median { u, w },
                semantics: "w = tan(a/4), u = tan(b/2), v = tan(c/2) (recovered); the median from α meets a",
                note: None,
            })
        }
        FamilyId::IsoMedian => {
            let w = get(p, "w")?;
            let w2 = &w * &w;
            if w.is_zero() || w2 == one {
                return Err(FamilyError::Degenerate("w ∈ {0, ±1}".into()));
            }
            let wm = &w2 - &one;
            let wp = &w2 + &one;
            let a2 = -(int(4) * (&w2 * &w2 + int(6) * &w2 + &one) * &wm * &wm);
            let a4 = int(4) * wp.pow(6) * &wm * &wm;
            let curve = nonsingular(WeierstrassCurve::monic(a2, a4, Rational::zero()), "iso_median")?;
            let big_p = pt(
                wp.pow(4),
                wp.pow(4) * (&w2 - &two * &w - &one) * (&w2 + &two * &w - &one),
            );
            let wm1 = &w - &one;
            let big_t = pt(&two * &wm1 * &wm1 * wp.pow(3), int(16) * &w2 * &wm1 * &wm1 * wp.pow(3));
            let u = &two * &w / (&one - &w2);
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                generators: vec![big_p.clone(), big_t.clone()],
                torsion_shifts: vec![CurvePoint::Infinity, pt(Rational::zero(), Rational::zero())],
                named_points: vec![("P".into(), big_p), ("T".into(), big_t)],
                gaussian_points: vec![],
                curve,
                map: FamilyMap::IsoMedian {
                    w: w.clone(),
                    u,
                    k: &wp / (&wm * &wm),
                },
                semantics: "w = tan(a/4), b = a (u = 2w/(1−w²)), v = tan(c/2) (recovered)",
                note: None,
            })
        }
        FamilyId::AreaBisector => {
            let n = get(p, "n")?;
            let u = get(p, "u")?;
            let (curve, map, r, l) = maps::area_bisector(&n, &u)?;
            let t2 = pt(r.clone(), Rational::zero());
            let q = pt(Rational::zero(), &r * &l);
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                generators: vec![q.clone()],
                torsion_shifts: vec![CurvePoint::Infinity, t2.clone()],
                named_points: vec![("T".into(), t2), ("Q".into(), q)],
                gaussian_points: vec![],
                curve,
                map,
                semantics: "n = tan(A/4), u = tan(β/2), t = tan(α/2); α₁ is the part of α next to β",
                note: None,
            })
        }
        FamilyId::Equilateral => {
            let curve = WeierstrassCurve::monic(int(-1), int(1), int(0))?;
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                named_points: vec![("T2".into(), pt(int(0), int(0))), ("T4".into(), pt(int(1), int(1)))],
                gaussian_points: vec![],
                generators: vec![],
                torsion_shifts: vec![CurvePoint::Infinity],
                curve,
                map: FamilyMap::Equilateral,
                semantics: "U = Δ₁/(cos α + 1), V = 2 sin α with V² = −U⁴ + 2U² + 3",
                note: Some("rank 0".into()),
            })
        }
        FamilyId::EquilateralMedian => {
            let curve = WeierstrassCurve::from_roots(int(3), int(4), int(12))?;
            Ok(FamilyInstance {
                id,
                params: p.clone(),
                named_points: vec![
                    ("T3".into(), pt(int(3), int(0))),
                    ("T4".into(), pt(int(4), int(0))),
                    ("T12".into(), pt(int(12), int(0))),
                ],
                gaussian_points: vec![],
                generators: vec![],
                torsion_shifts: vec![CurvePoint::Infinity],
                curve,
                map: FamilyMap::EquilateralMedian,
                semantics: "p = cos(a/2) (sides) or sin(α/2) (angles), s = p·sin m with s² = −4p⁴ + 5p² − 1",
                note: Some("rank 0".into()),
            })
        }
    }
}

type CurveWithPoints = (WeierstrassCurve<Rational>, CurvePoint<Rational>, CurvePoint<Rational>);

/// E_{u,w} with its two printed points.
fn median_curve(u: &Rational, w: &Rational) -> Result<CurveWithPoints, FamilyError> {
    let one = Rational::one();
    let (u2, w2) = (u * u, w * w);
    let (u4, w4) = (&u2 * &u2, &w2 * &w2);
    let a2 = -(int(4)
        * (&u4 * &w4 + int(3) * &u2 * &w4 + &w4 - int(2) * &u4 * &w2 - int(2) * &u2 * &w2 - int(2) * &w2
            + &u4
            + int(3) * &u2
            + &one));
    let wm1 = w - &one;
    let wp1 = w + &one;
    let a4 = int(4) * (&u2 + &one).pow(4) * &wm1 * &wm1 * &wp1 * &wp1 * (&w2 + &one).pow(2);
    let curve = nonsingular(WeierstrassCurve::monic(a2, a4, Rational::zero()), "median")?;
    let up = &u2 + &one;
    let wp = &w2 + &one;
    let big_p = pt(up.pow(2) * wp.pow(2), (&u2 - &one) * up.pow(2) * wp.pow(3));
    let big_q = pt(
        int(4) * &u2 * wp.pow(2),
        int(4) * u * (&u4 - &one) * (&w2 - &one) * wp.pow(2),
    );
    Ok((curve, big_p, big_q))
}

impl FamilyInstance {
    pub fn new(id: FamilyId, pairs: &[(&str, Rational)]) -> Result<Self, FamilyError> {
        instantiate(id, &params(pairs))
    }

    pub fn param(&self, name: &str) -> Option<&Rational> {
        self.params.get(name)
    }

    pub fn point(&self, name: &str) -> Option<&CurvePoint<Rational>> {
        self.named_points.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    /// Range conditions on the parameters that a proper triangle needs.
    pub fn generation_blockers(&self) -> Vec<String> {
        let pos = |name: &str| self.params.get(name).map(|x| x.is_positive()).unwrap_or(true);
        let mut out = Vec::new();
        match self.id {
            FamilyId::Sides => {
                for n in ["v", "w"] {
                    if !pos(n) {
                        out.push(format!("{n} ≤ 0 puts a given side outside (0, π)"));
                    }
                }
            }
            FamilyId::Median | FamilyId::IsoMedian => {
                if !pos("u") {
                    out.push("u ≤ 0 puts b outside (0, π)".into());
                }
                let w = self.params.get("w").cloned().unwrap_or_else(Rational::zero);
                if !(w.is_positive() && w < Rational::one()) {
                    out.push("w ∉ (0, 1) puts a = 4·atan(w) outside (0, π)".into());
                }
            }
            FamilyId::AreaBisector => {
                if !pos("u") {
                    out.push("u ≤ 0 puts β outside (0, π)".into());
                }
                if !pos("n") {
                    out.push("n ≤ 0 makes the area nonpositive".into());
                }
                // polar triangle inequality α + γ < π + β, i.e. A < 2β
                if let (Some(n), Some(u)) = (self.params.get("n"), self.params.get("u")) {
                    if n.is_positive() && u.is_positive() && n >= u {
                        out.push("n ≥ u gives A ≥ 2β, but a proper triangle has α + γ < π + β".into());
                    }
                }
            }
            FamilyId::Equilateral | FamilyId::EquilateralMedian => {
                out.push("rank-0 curve; see the certificate".into());
            }
            _ => {}
        }
        out
    }

    pub fn point_to_triangle(&self, p: &CurvePoint<Rational>) -> Result<Option<FamilyTriangle>, FamilyError> {
        if !self.curve.on_curve(p) {
            return Err(FamilyError::NotOnCurve);
        }
        let q = match self.map.inverse(p) {
            Ok(q) => q,
            Err(EcError::Exceptional(s)) => return Err(FamilyError::Exceptional(s)),
            Err(e) => return Err(e.into()),
        };
        let built = maps::triangle_from_quartic(&self.map, &q);
        match built {
            Ok((triangle, cevian)) => Ok(Some(FamilyTriangle {
                point: p.clone(),
                quartic_point: q,
                triangle,
                cevian,
            })),
            Err(FamilyError::Sphere(_)) | Err(FamilyError::Degenerate(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Points ±k·G + S for k = 1, 2, … with G over the infinite-order generators
    /// and S over the torsion shifts, in that nesting order.
    pub fn generate(&self, count: usize, cap: u32) -> Result<Vec<FamilyTriangle>, FamilyError> {
        if let Some(note) = &self.note {
            if note.starts_with("rank 0") {
                return Err(FamilyError::RankZero(note.clone()));
            }
        }
        let blockers = self.generation_blockers();
        if !blockers.is_empty() {
            return Err(FamilyError::Degenerate(blockers.join("; ")));
        }
        let gens: Vec<&CurvePoint<Rational>> = self
            .generators
            .iter()
            .filter(|g| self.curve.torsion_probe(g, 16).is_none())
            .collect();
        if gens.is_empty() {
            return Err(FamilyError::RankZero("no generator of infinite order".into()));
        }
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        let mut multiples: Vec<CurvePoint<Rational>> = vec![CurvePoint::Infinity; gens.len()];
        for _k in 1..=cap {
            for (i, g) in gens.iter().enumerate() {
                multiples[i] = self.curve.add(&multiples[i], g);
                for sign in [1, -1] {
                    let base = if sign == 1 {
                        multiples[i].clone()
                    } else {
                        self.curve.neg(&multiples[i])
                    };
                    for s in &self.torsion_shifts {
                        let p = self.curve.add(&base, s);
                        let Ok(Some(ft)) = self.point_to_triangle(&p) else {
                            continue;
                        };
                        if seen.insert(triangle_key(&ft.triangle)) {
                            out.push(ft);
                            if out.len() == count {
                                return Ok(out);
                            }
                        }
                    }
                }
            }
        }
        Err(FamilyError::CapReached {
            found: out.len(),
            requested: count,
            cap,
        })
    }
}

type AngleKey = (Rational, Rational, Rational);

fn angle_key(a: &SurdAngle) -> AngleKey {
    (a.cos.clone(), a.sin.clone(), a.radicand.clone())
}

pub fn triangle_key(t: &SphericalTriangle) -> Vec<AngleKey> {
    t.sides.iter().chain(t.angles.iter()).map(angle_key).collect()
}

/// α = 2·atan(t) style helper: the circle point with parameter t.
pub(crate) fn from_t(t: &Rational) -> CirclePoint {
    CirclePoint::from_t_rational(t)
}

#[cfg(test)]
mod tests;
