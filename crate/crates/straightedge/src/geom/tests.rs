use super::*;
use crate::cn::Cn;

fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

fn ptq(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
    Point::new(Cn::from_ratio(xn, xd).unwrap(), Cn::from_ratio(yn, yd).unwrap())
}

fn circ(cx: i64, cy: i64, r: i64) -> Circle {
    Circle::new(pt(cx, cy), Cn::from_int(r)).unwrap()
}

/// The 3-4-5 arrangement: unit circle at the origin, radius 2 at (3,0),
/// radius 3 at (0,4), mutually externally tangent at Z, X, Y.
fn board_345() -> (Circle, Circle, Circle) {
    (circ(0, 0, 1), circ(3, 0, 2), circ(0, 4, 3))
}

#[test]
fn line_through_points() {
    let l = Line::through(&pt(0, 0), &pt(1, 0)).unwrap();
    assert_eq!(l, Line::from_coeffs(Cn::zero(), Cn::one(), Cn::zero()).unwrap());

    // Through X=(9/5, 8/5) and Z=(1,0): 2x − y − 2 = 0.
    let l = Line::through(&pt(1, 0), &ptq(9, 5, 8, 5)).unwrap();
    let want = Line::from_coeffs(Cn::from_int(2), Cn::from_int(-1), Cn::from_int(-2)).unwrap();
    assert_eq!(l, want);

    assert_eq!(Line::through(&pt(2, 3), &pt(2, 3)), Err(GeomError::CoincidentPoints));
}

#[test]
fn circle_center_through_points() {
    let c = Circle::center_through(&pt(0, 0), &pt(1, 0)).unwrap();
    assert_eq!(c.radius(), &Cn::one());

    let c = Circle::center_through(&pt(0, -2), &pt(0, 1)).unwrap();
    assert_eq!(c.radius(), &Cn::from_int(3));

    assert_eq!(Circle::center_through(&pt(5, 5), &pt(5, 5)), Err(GeomError::ZeroRadius));
}

#[test]
fn line_line() {
    let x_axis = Line::through(&pt(0, 0), &pt(1, 0)).unwrap();
    let y_axis = Line::through(&pt(0, 0), &pt(0, 1)).unwrap();
    assert_eq!(intersect_lines(&x_axis, &y_axis), LineLineIntersection::Point(pt(0, 0)));

    // XZ meets AC (the y-axis) at B' = (0, −2).
    let xz = Line::through(&ptq(9, 5, 8, 5), &pt(1, 0)).unwrap();
    assert_eq!(intersect_lines(&xz, &y_axis), LineLineIntersection::Point(pt(0, -2)));

    let y0 = Line::through(&pt(0, 0), &pt(1, 0)).unwrap();
    let y1 = Line::through(&pt(0, 1), &pt(1, 1)).unwrap();
    assert_eq!(intersect_lines(&y0, &y1), LineLineIntersection::Parallel);
    assert_eq!(intersect_lines(&y0, &y0), LineLineIntersection::Identical);
}

#[test]
fn line_circle() {
    let x_axis = Line::through(&pt(0, 0), &pt(1, 0)).unwrap();
    let unit = circ(0, 0, 1);
    assert_eq!(
        intersect_line_circle(&x_axis, &unit),
        LineCircleIntersection::Secant { lo: pt(-1, 0), hi: pt(1, 0) }
    );

    // x-axis against the circle centered (1,0) with radius 1/2.
    let oz = Circle::new(pt(1, 0), Cn::from_ratio(1, 2).unwrap()).unwrap();
    assert_eq!(
        intersect_line_circle(&x_axis, &oz),
        LineCircleIntersection::Secant { lo: ptq(1, 2, 0, 1), hi: ptq(3, 2, 0, 1) }
    );

    let y5 = Line::through(&pt(0, 5), &pt(1, 5)).unwrap();
    assert_eq!(intersect_line_circle(&y5, &unit), LineCircleIntersection::Empty);

    let y1 = Line::through(&pt(0, 1), &pt(1, 1)).unwrap();
    assert_eq!(intersect_line_circle(&y1, &unit), LineCircleIntersection::Tangent(pt(0, 1)));
}

#[test]
fn circle_circle() {
    // O_B' (center (0,−2), r 3) against O_B (center (3,0), r 2):
    // Q = (15/13, 10/13) on the left of the center ray, Q' = (3, −2) on the
    // right.
    let ob_prime = circ(0, -2, 3);
    let ob = circ(3, 0, 2);
    let got = intersect_circles(&ob_prime, &ob).unwrap();
    assert_eq!(
        got,
        CircleCircleIntersection::Secant {
            left: ptq(15, 13, 10, 13),
            right: pt(3, -2),
        }
    );

    assert_eq!(
        intersect_circles(&circ(0, 0, 1), &circ(2, 0, 1)).unwrap(),
        CircleCircleIntersection::Tangent(pt(1, 0))
    );
    assert_eq!(
        intersect_circles(&circ(0, 0, 1), &circ(5, 0, 1)).unwrap(),
        CircleCircleIntersection::Empty
    );
    assert_eq!(
        intersect_circles(&circ(0, 0, 1), &circ(0, 0, 2)).unwrap(),
        CircleCircleIntersection::Empty
    );
    assert_eq!(
        intersect_circles(&circ(0, 0, 1), &circ(0, 0, 1)),
        Err(GeomError::IdenticalCircles)
    );
}

#[test]
fn tangency_classification() {
    assert_eq!(
        tangency(&circ(0, 0, 1), &circ(3, 0, 2)).unwrap(),
        Tangency::External(pt(1, 0))
    );
    // Radius 6 at (3,4) contains the unit circle, touching at (−3/5, −4/5).
    assert_eq!(
        tangency(&circ(3, 4, 6), &circ(0, 0, 1)).unwrap(),
        Tangency::Internal(ptq(-3, 5, -4, 5))
    );
    assert_eq!(tangency(&circ(0, 0, 1), &circ(3, 0, 1)).unwrap(), Tangency::None);
    assert_eq!(tangency(&circ(0, 0, 1), &circ(0, 0, 1)), Err(GeomError::IdenticalCircles));
}

#[test]
fn incidence_and_collinearity() {
    let unit = circ(0, 0, 1);
    assert!(unit.contains(&pt(1, 0)));
    assert!(!Line::through(&pt(0, 1), &pt(1, 1)).unwrap().contains(&pt(0, 0)));

    // Q = (15/13, 10/13) lies on the line through B = (3,0) and
    // S = (21/23, 20/23).
    let line_bs = Line::through(&pt(3, 0), &ptq(21, 23, 20, 23)).unwrap();
    assert!(line_bs.contains(&ptq(15, 13, 10, 13)));

    // Gergonne line of the 3-4-5 arrangement.
    assert!(collinear(&pt(9, -8), &pt(0, -2), &pt(-3, 0)));
    assert!(!collinear(&pt(0, 0), &pt(1, 0), &pt(0, 1)));
    assert!(collinear(&pt(0, 0), &pt(1, 1), &pt(2, 2)));
}

#[test]
fn parallel_and_perpendicular() {
    let y0 = Line::through(&pt(0, 0), &pt(1, 0)).unwrap();
    let y3 = Line::through(&pt(0, 3), &pt(1, 3)).unwrap();
    let x0 = Line::through(&pt(0, 0), &pt(0, 1)).unwrap();
    let diag = Line::through(&pt(0, 0), &pt(1, 1)).unwrap();
    assert!(parallel(&y0, &y3));
    assert!(perpendicular(&x0, &y0));
    assert!(!parallel(&diag, &y0) && !perpendicular(&diag, &y0));
}

#[test]
fn inversion_points_and_circles() {
    // O_B' of the 3-4-5 arrangement: center (0,−2), radius 3.
    let inv = circ(0, -2, 3);

    // X ↦ Z.
    let x = GeoObject::Point(ptq(9, 5, 8, 5));
    assert_eq!(invert(&x, &inv).unwrap(), GeoObject::Point(pt(1, 0)));

    // O_A ↦ O_C.
    let (oa, _, oc) = board_345();
    assert_eq!(invert(&GeoObject::Circle(oa), &inv).unwrap(), GeoObject::Circle(oc));

    // Y is fixed: |B'Y| equals the inversion radius.
    let y = GeoObject::Point(pt(0, 1));
    assert_eq!(invert(&y, &inv).unwrap(), y);

    assert_eq!(
        invert(&GeoObject::Point(pt(0, -2)), &inv),
        Err(GeomError::PointAtInversionCenter)
    );
}

#[test]
fn inversion_line_circle_cases() {
    let unit = circ(0, 0, 1);
    // Line through the center is fixed.
    let diag = Line::through(&pt(0, 0), &pt(1, 1)).unwrap();
    assert_eq!(
        invert(&GeoObject::Line(diag.clone()), &unit).unwrap(),
        GeoObject::Line(diag)
    );
    // y = 1 maps to the circle of diameter (0,0)–(0,1) and back.
    let y1 = Line::through(&pt(0, 1), &pt(1, 1)).unwrap();
    let img = invert(&GeoObject::Line(y1.clone()), &unit).unwrap();
    let want = Circle::new(ptq(0, 1, 1, 2), Cn::from_ratio(1, 2).unwrap()).unwrap();
    assert_eq!(img, GeoObject::Circle(want));
    assert_eq!(invert(&img, &unit).unwrap(), GeoObject::Line(y1));
}

#[test]
fn inversion_is_involutive() {
    let inv = circ(0, -2, 3);
    for obj in [
        GeoObject::Point(ptq(7, 3, -2, 9)),
        GeoObject::Line(Line::through(&pt(5, 1), &pt(-2, 4)).unwrap()),
        GeoObject::Circle(circ(4, 4, 2)),
    ] {
        let once = invert(&obj, &inv).unwrap();
        assert_eq!(invert(&once, &inv).unwrap(), obj);
    }
}

#[test]
fn similitude() {
    let (oa, ob, oc) = board_345();
    let s = similitude_centers(&oa, &oc).unwrap();
    assert_eq!(s.external, ExternalCenter::Point(pt(0, -2)));
    assert_eq!(s.internal, pt(0, 1));

    let s = similitude_centers(&oa, &ob).unwrap();
    assert_eq!(s.internal, pt(1, 0));

    let s = similitude_centers(&circ(0, 0, 1), &circ(4, 0, 1)).unwrap();
    assert_eq!(s.external, ExternalCenter::Direction(Cn::from_int(4), Cn::zero()));
    assert_eq!(s.internal, pt(2, 0));

    assert_eq!(
        similitude_centers(&circ(0, 0, 1), &circ(0, 0, 1)),
        Err(GeomError::IdenticalCircles)
    );
}

#[test]
fn radical_constructions() {
    let l = radical_axis(&circ(0, 0, 1), &circ(2, 0, 1)).unwrap();
    assert_eq!(l, Line::from_coeffs(Cn::one(), Cn::zero(), Cn::from_int(-1)).unwrap());
    assert_eq!(
        radical_axis(&circ(0, 0, 1), &circ(0, 0, 2)),
        Err(GeomError::ConcentricCircles)
    );

    // Radical circle of the 3-4-5 arrangement is the incircle: center (1,1),
    // radius 1, through the tangency points.
    let (oa, ob, oc) = board_345();
    let rc = radical_circle(&oa, &ob, &oc).unwrap();
    assert_eq!(rc.center(), &pt(1, 1));
    assert_eq!(rc.radius(), &Cn::one());
    for p in [ptq(9, 5, 8, 5), pt(0, 1), pt(1, 0)] {
        assert!(rc.contains(&p));
    }
    // Orthogonality: dist(centers)² = r² + rᵢ².
    for c in [&oa, &ob, &oc] {
        let d2 = rc.center().dist2(c.center());
        assert_eq!(d2, &rc.radius2() + &c.radius2());
    }
}

#[test]
fn descartes_345() {
    let (oa, ob, oc) = board_345();
    let (inner, outer) = descartes_solve(&oa, &ob, &oc).unwrap();
    assert!(!inner.enclosing);
    assert_eq!(inner.circle.center(), &ptq(21, 23, 20, 23));
    assert_eq!(inner.circle.radius(), &Cn::from_ratio(6, 23).unwrap());
    assert!(outer.enclosing);
    assert_eq!(outer.circle.center(), &pt(3, 4));
    assert_eq!(outer.circle.radius(), &Cn::from_int(6));
}

#[test]
fn descartes_three_unit_circles() {
    let c1 = circ(0, 0, 1);
    let c2 = circ(2, 0, 1);
    let c3 = Circle::new(
        Point::new(Cn::one(), Cn::from_int(3).sqrt().unwrap()),
        Cn::one(),
    )
    .unwrap();
    let (inner, outer) = descartes_solve(&c1, &c2, &c3).unwrap();
    for c in [&c1, &c2, &c3] {
        assert!(tangency(&inner.circle, c).unwrap().is_tangent());
        assert!(tangency(&outer.circle, c).unwrap().is_tangent());
    }
    assert!(!inner.enclosing);
    assert!(outer.enclosing);
}

#[test]
fn descartes_rejects_non_tangent() {
    assert_eq!(
        descartes_solve(&circ(0, 0, 1), &circ(5, 0, 1), &circ(0, 5, 1)),
        Err(GeomError::NotMutuallyTangent)
    );
}

#[test]
fn intersection_soundness() {
    // Returned points satisfy both defining equations exactly.
    let l = Line::through(&ptq(1, 3, -2, 7), &pt(4, 1)).unwrap();
    let c = Circle::new(ptq(1, 2, 1, 5), Cn::from_int(3).sqrt().unwrap()).unwrap();
    if let LineCircleIntersection::Secant { lo, hi } = intersect_line_circle(&l, &c) {
        for p in [lo, hi] {
            assert!(l.contains(&p));
            assert!(c.contains(&p));
        }
    } else {
        panic!("expected a secant");
    }

    let c2 = circ(1, 1, 2);
    if let CircleCircleIntersection::Secant { left, right } = intersect_circles(&c, &c2).unwrap() {
        for p in [left, right] {
            assert!(c.contains(&p));
            assert!(c2.contains(&p));
        }
    } else {
        panic!("expected a secant");
    }
}
