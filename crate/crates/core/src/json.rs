//! JSON encoding of rationals, angles, curve points, triangles and generated records.
//!
//! Rationals are "p/q" strings. A rational angle is {"t", "cos", "sin"}; an angle whose
//! sine is sin·√radicand adds "radicand". Curve points are {"x", "y"} or "O".

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::circle::{CirclePoint, SurdAngle};
use crate::ec::{CurvePoint, QuarticPoint, WeierstrassCurve};
use crate::exactnum::{format_rational, parse_rational, ProjRational, Rational};
use crate::families::{EquilateralCertificate, FamilyInstance, FamilyTriangle, MedianCase, MedianCertificate};
use crate::sphere::{CevianKind, CevianResult, SphericalTriangle, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("missing field {0:?}")]
    Missing(String),
    #[error("field {0:?} is not a rational string")]
    BadRational(String),
    #[error("angle fields disagree: {0}")]
    Inconsistent(String),
    #[error("unknown cevian kind {0:?}")]
    BadKind(String),
    #[error("invalid JSON: {0}")]
    Syntax(String),
}

const SIDES: [&str; 3] = ["a", "b", "c"];
const ANGLES: [&str; 3] = ["alpha", "beta", "gamma"];

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, JsonError> {
    v.get(key).ok_or_else(|| JsonError::Missing(key.to_string()))
}

fn rational_field(v: &Value, key: &str) -> Result<Rational, JsonError> {
    let s = field(v, key)?
        .as_str()
        .ok_or_else(|| JsonError::BadRational(key.to_string()))?;
    parse_rational(s).map_err(|_| JsonError::BadRational(key.to_string()))
}

pub fn circle_point(p: &CirclePoint) -> Value {
    json!({"t": p.t().to_string(), "cos": rational(p.cos()), "sin": rational(p.sin())})
}

pub fn angle(a: &SurdAngle) -> Value {
    match a.to_circle() {
        Some(p) => circle_point(&p),
        None => json!({"cos": rational(&a.cos), "sin": rational(&a.sin), "radicand": rational(&a.radicand)}),
    }
}

/// Reads either encoding; for rational angles the t field must match cos and sin.
pub fn parse_angle(v: &Value) -> Result<SurdAngle, JsonError> {
    let cos = rational_field(v, "cos")?;
    let sin = rational_field(v, "sin")?;
    let radicand = match v.get("radicand") {
        Some(_) => rational_field(v, "radicand")?,
        None => Rational::one(),
    };
    if let Some(t) = v.get("t") {
        let t = t.as_str().ok_or_else(|| JsonError::BadRational("t".into()))?;
        let t = ProjRational::parse(t).map_err(|_| JsonError::BadRational("t".into()))?;
        let p = CirclePoint::from_t(&t);
        if p.cos() != &cos || p.sin() != &sin || !radicand.is_one() {
            return Err(JsonError::Inconsistent(format!(
                "t = {t} does not give the stated cos and sin"
            )));
        }
    }
    // a zero sine would otherwise trip the radicand fold
    if sin.is_zero() {
        return SurdAngle::new(cos, sin, Rational::one()).map_err(|e| JsonError::Inconsistent(e.to_string()));
    }
    SurdAngle::new(cos, sin, radicand).map_err(|e| JsonError::Inconsistent(e.to_string()))
}

pub fn point(p: &CurvePoint<Rational>) -> Value {
    match p.coords() {
        None => json!("O"),
        Some((x, y)) => json!({"x": rational(x), "y": rational(y)}),
    }
}

pub fn parse_point(v: &Value) -> Result<CurvePoint<Rational>, JsonError> {
    if v.as_str() == Some("O") {
        return Ok(CurvePoint::Infinity);
    }
    Ok(CurvePoint::new(rational_field(v, "x")?, rational_field(v, "y")?))
}

pub fn quartic_point(q: &QuarticPoint<Rational>) -> Value {
    match q {
        QuarticPoint::Affine { t, w } => json!({"t": rational(t), "w": rational(w)}),
        QuarticPoint::AtInfinity { w_over_t2 } => json!({"t": "inf", "w_over_t2": rational(w_over_t2)}),
    }
}

pub fn curve(c: &WeierstrassCurve<Rational>) -> Value {
    json!({"lambda": rational(&c.lambda), "a2": rational(&c.a2), "a4": rational(&c.a4), "a6": rational(&c.a6)})
}

pub fn cevian(c: &CevianResult) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(c.kind.name()));
    m.insert("vertex".into(), json!(c.vertex));
    m.insert("length".into(), angle(&c.length));
    if let Some(f) = &c.foot_angle {
        m.insert("foot_angle".into(), angle(f));
    }
    if let Some((a, b)) = &c.sub_angles {
        m.insert("sub_angles".into(), json!([angle(a), angle(b)]));
    }
    Value::Object(m)
}

pub fn parse_cevian_kind(s: &str) -> Result<CevianKind, JsonError> {
    [
        CevianKind::Median,
        CevianKind::Height,
        CevianKind::AngleBisector,
        CevianKind::AreaBisector,
    ]
    .into_iter()
    .find(|k| k.name() == s)
    .ok_or_else(|| JsonError::BadKind(s.to_string()))
}

pub fn triangle(t: &SphericalTriangle, cevians: &[CevianResult]) -> Value {
    let group = |names: [&str; 3], xs: &[SurdAngle; 3]| {
        let mut m = Map::new();
        for (n, x) in names.iter().zip(xs) {
            m.insert(n.to_string(), angle(x));
        }
        Value::Object(m)
    };
    json!({
        "sides": group(SIDES, &t.sides),
        "angles": group(ANGLES, &t.angles),
        "area": t.area().map(|a| angle(&a)).unwrap_or(Value::Null),
        "cevians": cevians.iter().map(cevian).collect::<Vec<_>>(),
    })
}

pub fn parse_triangle(v: &Value) -> Result<SphericalTriangle, JsonError> {
    let read = |key: &str, names: [&str; 3]| -> Result<[SurdAngle; 3], JsonError> {
        let g = field(v, key)?;
        Ok([
            parse_angle(field(g, names[0])?)?,
            parse_angle(field(g, names[1])?)?,
            parse_angle(field(g, names[2])?)?,
        ])
    };
    Ok(SphericalTriangle::from_parts(
        read("sides", SIDES)?,
        read("angles", ANGLES)?,
    ))
}

pub fn verify_report(r: &VerifyReport) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed}))
            .collect(),
    )
}

/// One generated triangle with its family, parameters and source points.
pub fn family_record(f: &FamilyInstance, ft: &FamilyTriangle) -> Value {
    let params: Map<String, Value> = f.params.iter().map(|(k, v)| (k.clone(), rational(v))).collect();
    let cevians: Vec<CevianResult> = ft.cevian.iter().cloned().collect();
    json!({
        "family": f.id.name(),
        "params": params,
        "curve": curve(&f.curve),
        "point": point(&ft.point),
        "quartic_point": quartic_point(&ft.quartic_point),
        "triangle": triangle(&ft.triangle, &cevians),
        "checks": verify_report(&ft.triangle.verify()),
    })
}

/// Outcome of re-checking one triangle record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordCheck {
    pub report: VerifyReport,
    /// Stated fields that disagree with recomputation.
    pub mismatches: Vec<String>,
}

impl RecordCheck {
    pub fn passed(&self) -> bool {
        self.report.all_passed() && self.mismatches.is_empty()
    }
}

fn recompute_cevian(t: &SphericalTriangle, kind: CevianKind, vertex: usize, stated: &Value) -> Option<CevianResult> {
    match kind {
        CevianKind::Median => t.median(vertex),
        CevianKind::AreaBisector => {
            // the far endpoint is not stored; accept whichever neighbour reproduces the record
            [(vertex + 1) % 3, (vertex + 2) % 3]
                .into_iter()
                .filter_map(|to| t.area_bisector(vertex, to).ok())
                .find(|c| &cevian(c) == stated)
        }
        _ => None,
    }
}

/// Accepts a bare triangle or a generated record with a "triangle" field.
pub fn check_record(v: &Value) -> Result<RecordCheck, JsonError> {
    let tv = v.get("triangle").unwrap_or(v);
    let t = parse_triangle(tv)?;
    let report = t.verify();
    let mut mismatches = Vec::new();
    if let Some(area) = tv.get("area").filter(|a| !a.is_null()) {
        let stated = parse_angle(area)?;
        if t.area().ok().as_ref() != Some(&stated) {
            mismatches.push("area".to_string());
        }
    }
    if let Some(cs) = tv.get("cevians").and_then(Value::as_array) {
        for (i, c) in cs.iter().enumerate() {
            let kind = parse_cevian_kind(field(c, "kind")?.as_str().unwrap_or_default())?;
            let vertex = field(c, "vertex")?.as_u64().unwrap_or(99) as usize;
            let ok = vertex < 3 && recompute_cevian(&t, kind, vertex, c).is_some_and(|r| &cevian(&r) == c);
            if !ok {
                mismatches.push(format!("cevians[{i}]"));
            }
        }
    }
    Ok(RecordCheck { report, mismatches })
}

pub fn parse_line(line: &str) -> Result<Value, JsonError> {
    serde_json::from_str(line).map_err(|e| JsonError::Syntax(e.to_string()))
}

fn torsion(ts: &[(CurvePoint<Rational>, u32)]) -> Value {
    Value::Array(ts.iter().map(|(p, n)| json!({"point": point(p), "order": n})).collect())
}

pub fn equilateral_certificate(c: &EquilateralCertificate) -> Value {
    json!({
        "certificate": "equilateral",
        "holds": c.holds(),
        "curve": curve(&c.curve),
        "search_height": c.height,
        "torsion": torsion(&c.torsion),
        "extra_points": c.extra_points.iter().map(point).collect::<Vec<_>>(),
        "preimages": c.preimages.iter().map(|(p, q, cos, sin)| json!({
            "point": point(p), "quartic_point": quartic_point(q), "cos_alpha": rational(cos), "sin_alpha": rational(sin),
        })).collect::<Vec<_>>(),
        "triangles": c.triangles.iter().map(|t| triangle(t, &c.median.iter().cloned().collect::<Vec<_>>())).collect::<Vec<_>>(),
    })
}

pub fn median_certificate(c: &MedianCertificate) -> Value {
    json!({
        "certificate": "equilateral-median",
        "case": match c.case { MedianCase::Side => "side", MedianCase::Angle => "angle" },
        "holds": c.holds(),
        "curve": curve(&c.curve),
        "search_height": c.height,
        "torsion": torsion(&c.torsion),
        "extra_points": c.extra_points.iter().map(point).collect::<Vec<_>>(),
        "p_values": c.p_values.iter().map(rational).collect::<Vec<_>>(),
        "candidates": c.candidates.iter().map(|k| json!({
            "p": rational(&k.p), "reading": k.reading, "excluded": k.excluded,
        })).collect::<Vec<_>>(),
        "special_triangle": triangle(&c.special, &c.special_median.iter().cloned().collect::<Vec<_>>()),
    })
}
