use super::*;
use crate::exactnum::rat;
use num_traits::ToPrimitive;

fn r(n: i64) -> Rational {
    int(n)
}

fn p(x: Rational, y: Rational) -> CurvePoint<Rational> {
    CurvePoint::new(x, y)
}

#[test]
fn median_specialization() {
    let f = FamilyInstance::new(FamilyId::Median, &[("u", r(2)), ("w", r(2))]).unwrap();
    assert_eq!((&f.curve.a2, &f.curve.a4, &f.curve.a6), (&r(-1300), &r(562500), &r(0)));
    let (bp, bq) = (f.point("P").unwrap().clone(), f.point("Q").unwrap().clone());
    assert_eq!(bp, p(r(625), r(9375)));
    assert_eq!(bq, p(r(400), r(9000)));
    assert_eq!(f.curve.double(&bp), p(rat(3025, 36), rat(-1343375, 216)));
    assert_eq!(f.curve.double(&bq), p(rat(648025, 1296), rat(-420552125, 46656)));
    let (a, b) = (p(r(50), r(5000)), p(r(1250), r(25000)));
    assert_eq!(f.curve.sub(&a, &b), bp);
    assert_eq!(f.curve.double(&b), bq);
}

#[test]
fn iso_median_specialization() {
    let f = FamilyInstance::new(FamilyId::IsoMedian, &[("w", r(2))]).unwrap();
    assert_eq!((&f.curve.a2, &f.curve.a4), (&r(-1476), &r(562500)));
    let (bp, bt) = (f.point("P").unwrap(), f.point("T").unwrap());
    assert_eq!(*bp, p(r(625), r(-4375)));
    assert_eq!(*bt, p(r(250), r(8000)));
    assert_eq!(f.curve.double(bp), p(rat(75625, 196), rat(20301875, 2744)));
    assert_eq!(f.curve.double(bt), p(rat(15625, 16), rat(-546875, 64)));
}

#[test]
fn iso_angle_specialization() {
    let f = FamilyInstance::new(FamilyId::IsoAngle, &[("m", r(1))]).unwrap();
    assert_eq!((&f.curve.a2, &f.curve.a4), (&r(0), &r(-2)));
    let bp = f.point("P").unwrap();
    assert_eq!(*bp, p(r(-1), r(1)));
    assert_eq!(f.curve.double(bp), p(rat(9, 4), rat(-21, 8)));
}

#[test]
fn iso_median_is_a_rescaled_median_curve() {
    let w = rat(1, 3);
    let im = FamilyInstance::new(FamilyId::IsoMedian, &[("w", w.clone())]).unwrap();
    let u = int(2) * &w / (Rational::one() - &w * &w);
    let m = FamilyInstance::new(FamilyId::Median, &[("u", u), ("w", w.clone())]).unwrap();
    let FamilyMap::IsoMedian { k, .. } = &im.map else {
        panic!()
    };
    assert_eq!(m.curve.a2, &im.curve.a2 * k * k);
    assert_eq!(m.curve.a4, &im.curve.a4 * k.pow(4));
}

fn samples() -> Vec<FamilyInstance> {
    vec![
        FamilyInstance::new(FamilyId::Congruent, &[("m", r(2))]).unwrap(),
        FamilyInstance::new(FamilyId::Congruent, &[("m", rat(5, 2))]).unwrap(),
        FamilyInstance::new(FamilyId::IsoAngle, &[("m", r(3))]).unwrap(),
        FamilyInstance::new(FamilyId::IsoAngle, &[("m", rat(2, 3))]).unwrap(),
        FamilyInstance::new(FamilyId::Sides, &[("v", r(2)), ("w", r(3))]).unwrap(),
        FamilyInstance::new(FamilyId::Sides, &[("v", rat(1, 2)), ("w", rat(5, 3))]).unwrap(),
        FamilyInstance::new(FamilyId::Median, &[("u", r(2)), ("w", r(2))]).unwrap(),
        FamilyInstance::new(FamilyId::Median, &[("u", r(3)), ("w", rat(1, 2))]).unwrap(),
        FamilyInstance::new(FamilyId::IsoMedian, &[("w", rat(1, 3))]).unwrap(),
        FamilyInstance::new(FamilyId::AreaBisector, &[("n", rat(1, 2)), ("u", r(2))]).unwrap(),
        FamilyInstance::new(FamilyId::AreaBisector, &[("n", rat(1, 3)), ("u", rat(3, 4))]).unwrap(),
    ]
}

#[test]
fn named_points_lie_on_their_curves() {
    for f in samples() {
        for (name, q) in &f.named_points {
            assert!(f.curve.on_curve(q), "{} {name}", f.id);
        }
        let g = to_gaussian(&f.curve);
        for (name, q) in &f.gaussian_points {
            assert!(g.on_curve(q), "{} {name}", f.id);
        }
    }
}

#[test]
fn inverse_then_forward_is_identity() {
    for f in samples() {
        let gen = &f.generators[0];
        let mut q = CurvePoint::Infinity;
        let mut checked = 0;
        for _ in 0..4 {
            q = f.curve.add(&q, gen);
            for s in &f.torsion_shifts {
                let pt = f.curve.add(&q, s);
                let Ok(back) = f.map.inverse(&pt) else { continue };
                assert_eq!(f.map.forward(&back).unwrap(), pt, "{} {:?}", f.id, pt);
                checked += 1;
            }
        }
        assert!(checked >= 4, "{}", f.id);
        assert_eq!(
            f.map.forward(&f.map.inverse(&CurvePoint::Infinity).unwrap()).unwrap(),
            CurvePoint::Infinity
        );
    }
}

#[test]
fn congruent_point_gives_right_triangle() {
    let f = FamilyInstance::new(FamilyId::Congruent, &[("m", r(2))]).unwrap();
    let bp = p(r(45), r(75));
    assert_eq!(f.point("P"), Some(&bp));
    let ft = f.point_to_triangle(&bp).unwrap().expect("proper");
    assert!(ft.triangle.verify().all_passed());
    assert_eq!(ft.triangle.angle(1), &CirclePoint::right().surd());
    assert_eq!(ft.triangle.area().unwrap(), from_t(&r(2)).surd());
    assert_eq!(f.map.forward(&ft.quartic_point).unwrap(), bp);
}

#[test]
fn two_torsion_is_not_a_triangle() {
    let f = FamilyInstance::new(FamilyId::Congruent, &[("m", r(2))]).unwrap();
    assert!(!matches!(f.point_to_triangle(&p(r(0), r(0))), Ok(Some(_))));
}

#[test]
fn iso_angle_at_one() {
    let f = FamilyInstance::new(FamilyId::IsoAngle, &[("m", r(1))]).unwrap();
    let q = f.map.inverse(&p(r(-1), r(1))).unwrap();
    assert_eq!(q.affine_coords().unwrap().0, &r(-1));
    assert_eq!(f.point_to_triangle(&p(r(-1), r(1))).unwrap(), None);
    assert!(matches!(f.map.inverse(&p(r(2), r(-2))), Err(EcError::Exceptional(_))));
}

#[test]
fn generate_congruent() {
    let f = FamilyInstance::new(FamilyId::Congruent, &[("m", r(2))]).unwrap();
    let ts = f.generate(3, 50).unwrap();
    assert_eq!(ts.len(), 3);
    for t in &ts {
        assert!(t.triangle.verify().all_passed());
        assert_eq!(t.triangle.area().unwrap(), from_t(&r(2)).surd());
    }
    let keys: BTreeSet<_> = ts.iter().map(|t| triangle_key(&t.triangle)).collect();
    assert_eq!(keys.len(), 3);
}

#[test]
fn congruent_rank_zero() {
    let f = FamilyInstance::new(FamilyId::Congruent, &[("m", r(1))]).unwrap();
    assert_eq!((&f.curve.a2, &f.curve.a4), (&r(-12), &r(32)));
    assert!(matches!(f.generate(1, 10), Err(FamilyError::RankZero(_))));
    assert!(matches!(
        FamilyInstance::new(FamilyId::Congruent, &[("m", r(0))]),
        Err(FamilyError::Degenerate(_))
    ));
}

#[test]
fn sides_seeded_from_r() {
    let f = FamilyInstance::new(FamilyId::Sides, &[("v", r(2)), ("w", r(3))]).unwrap();
    assert_eq!(f.point("R"), Some(&p(r(50), rat(875, 3))));
    let t = &f.generate(1, 50).unwrap()[0];
    assert!(t.triangle.verify().all_passed());
    assert_eq!(t.triangle.side(1), &from_t(&r(2)).surd());
    assert_eq!(t.triangle.side(2), &from_t(&r(3)).surd());
}

#[test]
fn sides_degenerate() {
    for (v, w) in [(r(2), r(2)), (r(2), rat(1, 2))] {
        assert!(matches!(
            FamilyInstance::new(FamilyId::Sides, &[("v", v), ("w", w)]),
            Err(FamilyError::Degenerate(_))
        ));
    }
}

#[test]
fn generate_median_and_area_bisector() {
    let f = FamilyInstance::new(FamilyId::Median, &[("u", r(3)), ("w", rat(1, 2))]).unwrap();
    let t = &f.generate(1, 60).unwrap()[0];
    assert!(t.triangle.verify().all_passed());
    assert!(t.cevian.as_ref().unwrap().length.is_rational());
    let f = FamilyInstance::new(FamilyId::Median, &[("u", r(2)), ("w", r(2))]).unwrap();
    assert!(matches!(f.generate(1, 10), Err(FamilyError::Degenerate(_))));

    let f = FamilyInstance::new(FamilyId::AreaBisector, &[("n", rat(1, 2)), ("u", r(2))]).unwrap();
    let t = &f.generate(1, 60).unwrap()[0];
    assert!(t.triangle.verify().all_passed());
    let cev = t.cevian.as_ref().unwrap();
    let (a1, _) = cev.sub_angles.as_ref().unwrap();
    assert!(a1.is_rational());
}

#[test]
fn equilateral() {
    let c = equilateral_certificate(10).unwrap();
    assert!(c.holds(), "{c:?}");
    let pts: Vec<_> = c.torsion.iter().map(|(q, _)| q.clone()).collect();
    assert_eq!(
        pts,
        vec![CurvePoint::Infinity, p(r(0), r(0)), p(r(1), r(-1)), p(r(1), r(1))]
    );
    let big = equilateral_certificate(10_000).unwrap();
    assert_eq!(big.torsion, c.torsion);
}

#[test]
fn equilateral_median() {
    let (side, angle) = equilateral_median_certificates(1000).unwrap();
    assert_eq!(side.p_values, vec![r(-1), rat(-1, 2), rat(1, 2)]);
    assert!(side.holds());
    assert!(angle.holds());
    let third = side
        .candidates
        .iter()
        .find(|c| c.p == rat(1, 2) && c.reading == "p = cos a")
        .unwrap();
    assert!(third.excluded.as_ref().unwrap().contains("irrational"));
}

#[test]
fn median_fiber_over_inverse_u() {
    let f = FamilyInstance::new(FamilyId::Median, &[("u", r(3)), ("w", rat(1, 2))]).unwrap();
    let p = p(rat(225, 4), r(-1125));
    assert!(f.curve.on_curve(&p));
    let q = f.map.inverse(&p).unwrap();
    assert_eq!(q, QuarticPoint::affine(rat(1, 3), rat(-25, 3)));
    assert_eq!(f.map.forward(&q).unwrap(), p);
    // the base branch over v = 1/u still goes to O
    assert_eq!(
        f.map.forward(&QuarticPoint::affine(rat(1, 3), rat(25, 3))).unwrap(),
        CurvePoint::Infinity
    );
    // the mirror point is the 0/0 pole of the v-formula
    assert!(f.map.inverse(&f.curve.neg(&p)).is_err());
}

#[test]
fn area_bisector_needs_n_below_u() {
    let f = FamilyInstance::new(FamilyId::AreaBisector, &[("n", r(2)), ("u", rat(1, 3))]).unwrap();
    assert!(matches!(f.generate(1, 10), Err(FamilyError::Degenerate(_))));
    // floating-point oracle: the triangles the walk finds satisfy α + γ < π + β
    let approx = |x: &SurdAngle| {
        let f = |r: &Rational| r.to_f64().unwrap();
        (f(&x.sin) * f(&x.radicand).sqrt()).atan2(f(&x.cos))
    };
    let f = FamilyInstance::new(FamilyId::AreaBisector, &[("n", rat(1, 2)), ("u", r(2))]).unwrap();
    for t in f.generate(3, 200).unwrap() {
        let [a, b, g] = t.triangle.angles.each_ref().map(approx);
        assert!(a + g < std::f64::consts::PI + b);
    }
}
