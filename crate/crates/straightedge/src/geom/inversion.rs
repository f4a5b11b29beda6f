//! Circle inversion, similitude centers, radical circles and the
//! Descartes-circle-theorem solver used as an independent tangency oracle.

use super::{tangency, Circle, GeomError, GeoObject, Line, LineLineIntersection, Point};
use crate::cn::Cn;

/// Invert an object through a circle. The image variant encodes the case
/// analysis: lines through the center are fixed, other lines map to circles
/// through the center, circles through the center map to lines, everything
/// else maps within its kind.
pub fn invert(obj: &GeoObject, inv: &Circle) -> Result<GeoObject, GeomError> {
    let o = inv.center();
    let r2 = inv.radius2();
    match obj {
        GeoObject::Point(p) => {
            if p == o {
                return Err(GeomError::PointAtInversionCenter);
            }
            let scale = r2.checked_div(&p.dist2(o)).unwrap();
            Ok(GeoObject::Point(Point::new(
                &o.x + &(&scale * &(&p.x - &o.x)),
                &o.y + &(&scale * &(&p.y - &o.y)),
            )))
        }
        GeoObject::Line(l) => {
            if l.contains(o) {
                return Ok(GeoObject::Line(l.clone()));
            }
            // Image is the circle with diameter from the center to the image
            // of the line's nearest point.
            let s = l.eval(o);
            let two_s = &Cn::from_int(2) * &s;
            let cx = &o.x - &(&r2 * l.a()).checked_div(&two_s).unwrap();
            let cy = &o.y - &(&r2 * l.b()).checked_div(&two_s).unwrap();
            let center = Point::new(cx, cy);
            let radius = center.dist(o);
            Ok(GeoObject::Circle(Circle::new(center, radius)?))
        }
        GeoObject::Circle(c) => {
            let pow = c.power(o);
            if pow.is_zero() {
                // Circle through the center: image is the line through the
                // image of the antipode of the center, normal to the center
                // line.
                let nx = &c.center().x - &o.x;
                let ny = &c.center().y - &o.y;
                let scale = r2
                    .checked_div(&(&Cn::from_int(2) * &c.radius2()))
                    .unwrap();
                let px = &o.x + &(&scale * &nx);
                let py = &o.y + &(&scale * &ny);
                let cc = -&(&(&nx * &px) + &(&ny * &py));
                Ok(GeoObject::Line(Line::from_coeffs(nx, ny, cc)?))
            } else {
                let t = r2.checked_div(&pow).unwrap();
                let center = Point::new(
                    &o.x + &(&t * &(&c.center().x - &o.x)),
                    &o.y + &(&t * &(&c.center().y - &o.y)),
                );
                let radius = if t.is_negative() {
                    -&(&t * c.radius())
                } else {
                    &t * c.radius()
                };
                Ok(GeoObject::Circle(Circle::new(center, radius)?))
            }
        }
    }
}

/// External similitude center: at infinity (a direction) when the radii are
/// equal.
#[derive(Clone, Debug, PartialEq)]
pub enum ExternalCenter {
    Point(Point),
    Direction(Cn, Cn),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimilitudeCenters {
    pub external: ExternalCenter,
    pub internal: Point,
}

/// Fixed points of the dilations mapping one circle onto another. The
/// external center has positive ratio, the internal one negative; for
/// externally tangent circles the internal center is the tangency point.
pub fn similitude_centers(c1: &Circle, c2: &Circle) -> Result<SimilitudeCenters, GeomError> {
    if c1 == c2 {
        return Err(GeomError::IdenticalCircles);
    }
    if c1.center() == c2.center() && c1.radius() == c2.radius() {
        return Err(GeomError::IdenticalCircles);
    }
    let (r1, r2) = (c1.radius(), c2.radius());
    let (o1, o2) = (c1.center(), c2.center());
    let rsum = r1 + r2;
    let internal = Point::new(
        (&(r2 * &o1.x) + &(r1 * &o2.x)).checked_div(&rsum).unwrap(),
        (&(r2 * &o1.y) + &(r1 * &o2.y)).checked_div(&rsum).unwrap(),
    );
    let rdiff = r2 - r1;
    let external = if rdiff.is_zero() {
        ExternalCenter::Direction(&o2.x - &o1.x, &o2.y - &o1.y)
    } else {
        ExternalCenter::Point(Point::new(
            (&(r2 * &o1.x) - &(r1 * &o2.x)).checked_div(&rdiff).unwrap(),
            (&(r2 * &o1.y) - &(r1 * &o2.y)).checked_div(&rdiff).unwrap(),
        ))
    };
    Ok(SimilitudeCenters { external, internal })
}

/// The locus of points with equal power with respect to both circles.
pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<Line, GeomError> {
    let (o1, o2) = (c1.center(), c2.center());
    if o1 == o2 {
        return Err(GeomError::ConcentricCircles);
    }
    let two = Cn::from_int(2);
    let a = &two * &(&o2.x - &o1.x);
    let b = &two * &(&o2.y - &o1.y);
    let p1 = &(&(&o1.x * &o1.x) + &(&o1.y * &o1.y)) - &c1.radius2();
    let p2 = &(&(&o2.x * &o2.x) + &(&o2.y * &o2.y)) - &c2.radius2();
    Line::from_coeffs(a, b, &p1 - &p2)
}

/// The unique point with equal power with respect to all three circles.
pub fn radical_center(c1: &Circle, c2: &Circle, c3: &Circle) -> Result<Point, GeomError> {
    let l12 = radical_axis(c1, c2)?;
    let l13 = radical_axis(c1, c3)?;
    match super::intersect_lines(&l12, &l13) {
        LineLineIntersection::Point(p) => Ok(p),
        _ => Err(GeomError::CollinearCenters),
    }
}

/// The circle centered at the radical center whose squared radius is the
/// common power; it is orthogonal to all three inputs.
pub fn radical_circle(c1: &Circle, c2: &Circle, c3: &Circle) -> Result<Circle, GeomError> {
    let center = radical_center(c1, c2, c3)?;
    let pow = c1.power(&center);
    if pow.signum() <= 0 {
        return Err(GeomError::RadicalCenterInside);
    }
    Circle::new(center, pow.sqrt().unwrap())
}

/// Complex constructible numbers, only as far as the center computation of
/// the Descartes circle theorem needs them.
#[derive(Clone)]
struct Complex {
    re: Cn,
    im: Cn,
}

impl Complex {
    fn add(&self, o: &Complex) -> Complex {
        Complex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Complex) -> Complex {
        Complex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Complex) -> Complex {
        Complex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    fn scale(&self, k: &Cn) -> Complex {
        Complex {
            re: k * &self.re,
            im: k * &self.im,
        }
    }

    /// Principal square root: for `u + iv`, `(√((m+u)/2), sign(v)·√((m−u)/2))`
    /// with `m = |u + iv|`.
    fn sqrt(&self) -> Complex {
        if self.im.is_zero() {
            return if self.re.signum() >= 0 {
                Complex {
                    re: self.re.sqrt().unwrap(),
                    im: Cn::zero(),
                }
            } else {
                Complex {
                    re: Cn::zero(),
                    im: (-&self.re).sqrt().unwrap(),
                }
            };
        }
        let m = (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt().unwrap();
        let two = Cn::from_int(2);
        let p = (&m + &self.re).checked_div(&two).unwrap().sqrt().unwrap();
        let q = (&m - &self.re).checked_div(&two).unwrap().sqrt().unwrap();
        if self.im.signum() >= 0 {
            Complex { re: p, im: q }
        } else {
            Complex { re: p, im: -q }
        }
    }
}

/// One solution of the tangency problem for three mutually tangent circles.
/// `enclosing` marks negative curvature: the solution contains the three
/// inputs and its stored radius is positive.
#[derive(Clone, Debug, PartialEq)]
pub struct ApollonianSolution {
    pub circle: Circle,
    pub enclosing: bool,
}

/// Both circles tangent to three mutually externally tangent circles, via
/// the Descartes circle theorem `k₄ = k₁+k₂+k₃ ± 2√(k₁k₂+k₂k₃+k₃k₁)` and its
/// complex-centers analogue. Used as an oracle independent of any
/// construction.
pub fn descartes_solve(
    c1: &Circle,
    c2: &Circle,
    c3: &Circle,
) -> Result<(ApollonianSolution, ApollonianSolution), GeomError> {
    for (a, b) in [(c1, c2), (c1, c3), (c2, c3)] {
        match tangency(a, b) {
            Ok(super::Tangency::External(_)) => {}
            _ => return Err(GeomError::NotMutuallyTangent),
        }
    }
    let ks: Vec<Cn> = [c1, c2, c3]
        .iter()
        .map(|c| Cn::one().checked_div(c.radius()).unwrap())
        .collect();
    let zs: Vec<Complex> = [c1, c2, c3]
        .iter()
        .map(|c| Complex {
            re: c.center().x.clone(),
            im: c.center().y.clone(),
        })
        .collect();
    let ksum = &(&ks[0] + &ks[1]) + &ks[2];
    let e = &(&(&ks[0] * &ks[1]) + &(&ks[1] * &ks[2])) + &(&ks[2] * &ks[0]);
    let root = &Cn::from_int(2) * &e.sqrt().unwrap();

    let zk = zs[0]
        .scale(&ks[0])
        .add(&zs[1].scale(&ks[1]))
        .add(&zs[2].scale(&ks[2]));
    let w = zs[0]
        .mul(&zs[1])
        .scale(&(&ks[0] * &ks[1]))
        .add(&zs[1].mul(&zs[2]).scale(&(&ks[1] * &ks[2])))
        .add(&zs[2].mul(&zs[0]).scale(&(&ks[2] * &ks[0])));
    let wroot = w.sqrt().scale(&Cn::from_int(2));

    let solve_one = |k4: Cn| -> Result<ApollonianSolution, GeomError> {
        if k4.is_zero() {
            return Err(GeomError::ZeroCurvatureSolution);
        }
        let radius = if k4.is_negative() {
            -&Cn::one().checked_div(&k4).unwrap()
        } else {
            Cn::one().checked_div(&k4).unwrap()
        };
        for z in [zk.add(&wroot), zk.sub(&wroot)] {
            let center = Point::new(
                z.re.checked_div(&k4).unwrap(),
                z.im.checked_div(&k4).unwrap(),
            );
            let cand = Circle::new(center, radius.clone())?;
            let tangent_to_all = [c1, c2, c3]
                .iter()
                .all(|c| matches!(tangency(&cand, c), Ok(t) if t.is_tangent()));
            if tangent_to_all {
                return Ok(ApollonianSolution {
                    circle: cand,
                    enclosing: k4.is_negative(),
                });
            }
        }
        unreachable!("one complex root sign must match each curvature root")
    };

    let inner = solve_one(&ksum + &root)?;
    let outer = solve_one(&ksum - &root)?;
    Ok((inner, outer))
}
