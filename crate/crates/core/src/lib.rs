//! Exact constructions of spherical Heron triangles through elliptic curves.

pub mod circle;
pub mod ec;
pub mod exactnum;
pub mod families;
pub mod gen2;
pub mod json;
pub mod sphere;

pub use circle::{CirclePoint, SurdAngle};
pub use ec::{CurvePoint, WeierstrassCurve};
pub use exactnum::{CubicNumber, Field, GaussianRational, ProjRational, Rational, ResidueCubic};
pub use sphere::{CevianResult, SphericalTriangle};

pub type RationalCurve = WeierstrassCurve<Rational>;
pub type RationalPoint = CurvePoint<Rational>;
pub type GaussianCurve = WeierstrassCurve<GaussianRational>;
pub type CubicCurve = WeierstrassCurve<CubicNumber>;
