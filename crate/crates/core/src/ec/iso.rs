use num_traits::Zero;

use super::{CurvePoint, WeierstrassCurve};
use crate::exactnum::{is_perfect_square, Field, Rational};

/// (x, y) ↦ (μ²x + r, μ³y) between monic models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism<F> {
    pub mu: F,
    pub r: F,
}

impl<F: Field> Isomorphism<F> {
    pub fn apply(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                let mu2 = self.mu.square();
                CurvePoint::new(
                    mu2.clone() * x.clone() + self.r.clone(),
                    mu2 * self.mu.clone() * y.clone(),
                )
            }
        }
    }

    pub fn invert(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                let mu2 = self.mu.square();
                CurvePoint::new(
                    (x.clone() - self.r.clone()) / mu2.clone(),
                    y.clone() / (mu2 * self.mu.clone()),
                )
            }
        }
    }

    /// Image of the monic curve `from` under the substitution.
    pub fn image(&self, from: &WeierstrassCurve<F>) -> Option<WeierstrassCurve<F>> {
        if !from.is_monic() {
            return None;
        }
        // x1 = (x2 − r)/μ², y1 = y2/μ³ substituted into `from`, times μ⁶
        let (mu2, r) = (self.mu.square(), self.r.clone());
        let mu4 = mu2.square();
        let mu6 = mu4.clone() * mu2.clone();
        let three = F::from_int(3);
        let a2 = mu2.clone() * from.a2.clone() - three.clone() * r.clone();
        let a4 = three * r.square() - F::from_int(2) * mu2.clone() * from.a2.clone() * r.clone()
            + mu4.clone() * from.a4.clone();
        let a6 = -(r.square() * r.clone()) + mu2 * from.a2.clone() * r.square() - mu4 * from.a4.clone() * r
            + mu6 * from.a6.clone();
        WeierstrassCurve::monic(a2, a4, a6).ok()
    }
}

fn rational_root(x: &Rational, k: u32) -> Option<Rational> {
    match k {
        1 => Some(x.clone()),
        2 => is_perfect_square(x),
        _ => {
            let s = is_perfect_square(x)?;
            rational_root(&s, k / 2)
        }
    }
}

fn rational_cube_root(x: &Rational) -> Option<Rational> {
    let n = x.numer().cbrt();
    let d = x.denom().cbrt();
    let c = Rational::new(n, d);
    (c.clone() * c.clone() * c.clone() == *x).then_some(c)
}

/// Isomorphism over ℚ carrying monic `from` onto monic `to`, if one exists.
pub fn find_isomorphism(
    from: &WeierstrassCurve<Rational>,
    to: &WeierstrassCurve<Rational>,
) -> Option<Isomorphism<Rational>> {
    if !from.is_monic() || !to.is_monic() {
        return None;
    }
    let (c4a, c6a) = from.c_invariants();
    let (c4b, c6b) = to.c_invariants();
    if c4a.is_zero() != c4b.is_zero() || c6a.is_zero() != c6b.is_zero() {
        return None;
    }
    let mu = if c4a.is_zero() {
        // j = 0: μ⁶ = c6'/c6
        let m2 = rational_cube_root(&(c6b / c6a))?;
        rational_root(&m2, 2)?
    } else if c6a.is_zero() {
        let m4 = c4b / c4a;
        rational_root(&m4, 4)?
    } else {
        let m2 = (c6b * c4a) / (c6a * c4b);
        rational_root(&m2, 2)?
    };
    if mu.is_zero() {
        return None;
    }
    let r = (mu.clone() * mu.clone() * from.a2.clone() - to.a2.clone()) / Rational::from_int(3);
    for cand in [mu.clone(), -mu] {
        let iso = Isomorphism { mu: cand, r: r.clone() };
        if let Some(img) = iso.image(from) {
            if img.a2 == to.a2 && img.a4 == to.a4 && img.a6 == to.a6 {
                return Some(iso);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn recovers_a_known_substitution() {
        let e = WeierstrassCurve::monic(int(-1), int(1), int(0)).unwrap();
        let iso = Isomorphism {
            mu: rat(2, 3),
            r: int(5),
        };
        let f = iso.image(&e).unwrap();
        let found = find_isomorphism(&e, &f).unwrap();
        let p = CurvePoint::new(int(1), int(1));
        let q = found.apply(&p);
        assert!(f.on_curve(&q));
        assert_eq!(found.invert(&q), p);
    }

    #[test]
    fn quadratic_twist_is_not_isomorphic() {
        let e = WeierstrassCurve::monic(int(0), int(-1), int(0)).unwrap();
        let twist = WeierstrassCurve::monic(int(0), int(-16), int(0)).unwrap();
        let minus = WeierstrassCurve::monic(int(0), int(-2), int(0)).unwrap();
        assert!(find_isomorphism(&e, &twist).is_some());
        assert!(find_isomorphism(&e, &minus).is_none());
    }

    #[test]
    fn j_zero_curves() {
        let e = WeierstrassCurve::monic(int(0), int(0), int(1)).unwrap();
        let f = WeierstrassCurve::monic(int(0), int(0), int(64)).unwrap();
        assert!(find_isomorphism(&e, &f).is_some());
        let g = WeierstrassCurve::monic(int(0), int(0), int(2)).unwrap();
        assert!(find_isomorphism(&e, &g).is_none());
    }
}
