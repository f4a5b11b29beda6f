//! Exact planar primitives and predicates.
//!
//! Points, lines and circles carry constructible-number coordinates, so every
//! predicate here (incidence, tangency, parallelism, intersection branch
//! labels) is an exact decision. Lines are stored canonically — the leading
//! nonzero coefficient of `(a, b)` is normalised to 1 — so two records denote
//! the same line exactly when their coefficient triples are equal.
//!
//! All objects are immutable and all operations pure.

mod inversion;

pub use inversion::{
    descartes_solve, invert, radical_axis, radical_center, radical_circle, similitude_centers,
    ApollonianSolution, ExternalCenter, SimilitudeCenters,
};

use crate::cn::Cn;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("coincident points")]
    CoincidentPoints,
    #[error("circle through its own center has zero radius")]
    ZeroRadius,
    #[error("circle radius must be positive")]
    NonPositiveRadius,
    #[error("line requires (a, b) != (0, 0)")]
    DegenerateLine,
    #[error("identical circles")]
    IdenticalCircles,
    #[error("concentric circles")]
    ConcentricCircles,
    #[error("cannot invert the center of the inversion circle")]
    PointAtInversionCenter,
    #[error("circle centers are collinear; radical center undefined")]
    CollinearCenters,
    #[error("radical center has nonpositive power; radical circle undefined")]
    RadicalCenterInside,
    #[error("circles are not mutually externally tangent")]
    NotMutuallyTangent,
    #[error("solution degenerates to a line (zero curvature)")]
    ZeroCurvatureSolution,
}

/// A point with exact coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Cn,
    pub y: Cn,
}

impl Point {
    pub fn new(x: Cn, y: Cn) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(Cn::from_int(x), Cn::from_int(y))
    }

    /// Squared distance (always constructible, no root needed).
    pub fn dist2(&self, other: &Point) -> Cn {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &(&dx * &dx) + &(&dy * &dy)
    }

    pub fn dist(&self, other: &Point) -> Cn {
        self.dist2(other).sqrt().expect("squared distance is nonnegative")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The line `{(x, y) : a·x + b·y + c = 0}`, canonicalised so the first
/// nonzero of `(a, b)` is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Line {
    a: Cn,
    b: Cn,
    c: Cn,
}

impl Line {
    pub fn from_coeffs(a: Cn, b: Cn, c: Cn) -> Result<Line, GeomError> {
        if !a.is_zero() {
            let b = b.checked_div(&a).unwrap();
            let c = c.checked_div(&a).unwrap();
            Ok(Line { a: Cn::one(), b, c })
        } else if !b.is_zero() {
            let c = c.checked_div(&b).unwrap();
            Ok(Line { a: Cn::zero(), b: Cn::one(), c })
        } else {
            Err(GeomError::DegenerateLine)
        }
    }

    /// The canonical line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Line, GeomError> {
        if p == q {
            return Err(GeomError::CoincidentPoints);
        }
        let a = &p.y - &q.y;
        let b = &q.x - &p.x;
        let c = &(&p.x * &q.y) - &(&q.x * &p.y);
        Line::from_coeffs(a, b, c)
    }

    pub fn a(&self) -> &Cn {
        &self.a
    }

    pub fn b(&self) -> &Cn {
        &self.b
    }

    pub fn c(&self) -> &Cn {
        &self.c
    }

    /// `a·x + b·y + c`; zero exactly on the line.
    pub fn eval(&self, p: &Point) -> Cn {
        &(&(&self.a * &p.x) + &(&self.b * &p.y)) + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    /// Canonical direction vector `(b, -a)`.
    pub fn direction(&self) -> (Cn, Cn) {
        (self.b.clone(), -&self.a)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}·x + {}·y + {} = 0]", self.a, self.b, self.c)
    }
}

/// A circle with exact center and positive radius.
#[derive(Clone, PartialEq, Eq)]
pub struct Circle {
    center: Point,
    radius: Cn,
}

impl Circle {
    pub fn new(center: Point, radius: Cn) -> Result<Circle, GeomError> {
        match radius.signum() {
            1 => Ok(Circle { center, radius }),
            0 => Err(GeomError::ZeroRadius),
            _ => Err(GeomError::NonPositiveRadius),
        }
    }

    /// The circle centered at `c` passing through `p`.
    pub fn center_through(c: &Point, p: &Point) -> Result<Circle, GeomError> {
        if c == p {
            return Err(GeomError::ZeroRadius);
        }
        Ok(Circle {
            center: c.clone(),
            radius: c.dist(p),
        })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> &Cn {
        &self.radius
    }

    pub fn radius2(&self) -> Cn {
        &self.radius * &self.radius
    }

    /// Power of a point: `|p − center|² − r²`. Zero on the circle, negative
    /// inside, positive outside.
    pub fn power(&self, p: &Point) -> Cn {
        &p.dist2(&self.center) - &self.radius2()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.power(p).is_zero()
    }
}

impl fmt::Debug for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[circle {:?} r={}]", self.center, self.radius)
    }
}

/// Any drawable or placeable object.
#[derive(Clone, PartialEq, Debug)]
pub enum GeoObject {
    Point(Point),
    Line(Line),
    Circle(Circle),
}

impl GeoObject {
    pub fn kind_name(&self) -> &'static str {
        match self {
            GeoObject::Point(_) => "point",
            GeoObject::Line(_) => "line",
            GeoObject::Circle(_) => "circle",
        }
    }

    /// Exact incidence test for a point against this object.
    pub fn passes_through(&self, p: &Point) -> bool {
        match self {
            GeoObject::Point(q) => p == q,
            GeoObject::Line(l) => l.contains(p),
            GeoObject::Circle(c) => c.contains(p),
        }
    }
}

/// Exact cross product `(q − p) × (r − p)`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Cn {
    let ux = &q.x - &p.x;
    let uy = &q.y - &p.y;
    let vx = &r.x - &p.x;
    let vy = &r.y - &p.y;
    &(&ux * &vy) - &(&uy * &vx)
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    cross(p, q, r).is_zero()
}

/// Normals cross to zero.
pub fn parallel(l1: &Line, l2: &Line) -> bool {
    (&(l1.a() * l2.b()) - &(l2.a() * l1.b())).is_zero()
}

/// Normals dot to zero.
pub fn perpendicular(l1: &Line, l2: &Line) -> bool {
    (&(l1.a() * l2.a()) + &(l1.b() * l2.b())).is_zero()
}

#[derive(Clone, Debug, PartialEq)]
pub enum LineLineIntersection {
    Point(Point),
    Parallel,
    Identical,
}

pub fn intersect_lines(l1: &Line, l2: &Line) -> LineLineIntersection {
    let det = &(l1.a() * l2.b()) - &(l2.a() * l1.b());
    if det.is_zero() {
        if l1 == l2 {
            LineLineIntersection::Identical
        } else {
            LineLineIntersection::Parallel
        }
    } else {
        let x = (&(l1.b() * l2.c()) - &(l2.b() * l1.c())).checked_div(&det).unwrap();
        let y = (&(l2.a() * l1.c()) - &(l1.a() * l2.c())).checked_div(&det).unwrap();
        LineLineIntersection::Point(Point::new(x, y))
    }
}

/// Intersections of a line and a circle. When two exist they are labelled
/// `lo`/`hi` by order along the line's canonical direction vector.
#[derive(Clone, Debug, PartialEq)]
pub enum LineCircleIntersection {
    Empty,
    Tangent(Point),
    Secant { lo: Point, hi: Point },
}

pub fn intersect_line_circle(l: &Line, c: &Circle) -> LineCircleIntersection {
    let s = l.eval(c.center());
    let n2 = &(l.a() * l.a()) + &(l.b() * l.b());
    let foot = Point::new(
        &c.center().x - &(&s * l.a()).checked_div(&n2).unwrap(),
        &c.center().y - &(&s * l.b()).checked_div(&n2).unwrap(),
    );
    let disc = &c.radius2() - &(&s * &s).checked_div(&n2).unwrap();
    match disc.signum() {
        -1 => LineCircleIntersection::Empty,
        0 => LineCircleIntersection::Tangent(foot),
        _ => {
            let t = disc.checked_div(&n2).unwrap().sqrt().unwrap();
            let (dx, dy) = l.direction();
            let off = (&t * &dx, &t * &dy);
            LineCircleIntersection::Secant {
                lo: Point::new(&foot.x - &off.0, &foot.y - &off.1),
                hi: Point::new(&foot.x + &off.0, &foot.y + &off.1),
            }
        }
    }
}

/// Intersections of two circles. When two exist they are labelled by the
/// exact sign of the cross product `(center₂ − center₁) × (p − center₁)`:
/// positive is `left`, negative is `right`.
#[derive(Clone, Debug, PartialEq)]
pub enum CircleCircleIntersection {
    Empty,
    Tangent(Point),
    Secant { left: Point, right: Point },
}

pub fn intersect_circles(c1: &Circle, c2: &Circle) -> Result<CircleCircleIntersection, GeomError> {
    let o1 = c1.center();
    let o2 = c2.center();
    let ux = &o2.x - &o1.x;
    let uy = &o2.y - &o1.y;
    let d2 = &(&ux * &ux) + &(&uy * &uy);
    if d2.is_zero() {
        return if c1.radius() == c2.radius() {
            Err(GeomError::IdenticalCircles)
        } else {
            Ok(CircleCircleIntersection::Empty)
        };
    }
    let alpha = (&(&d2 + &c1.radius2()) - &c2.radius2())
        .checked_div(&(&Cn::from_int(2) * &d2))
        .unwrap();
    let mid = Point::new(&o1.x + &(&alpha * &ux), &o1.y + &(&alpha * &uy));
    let disc = &c1.radius2().checked_div(&d2).unwrap() - &(&alpha * &alpha);
    match disc.signum() {
        -1 => Ok(CircleCircleIntersection::Empty),
        0 => Ok(CircleCircleIntersection::Tangent(mid)),
        _ => {
            let beta = disc.sqrt().unwrap();
            let off = (&beta * &(-&uy), &beta * &ux);
            Ok(CircleCircleIntersection::Secant {
                left: Point::new(&mid.x + &off.0, &mid.y + &off.1),
                right: Point::new(&mid.x - &off.0, &mid.y - &off.1),
            })
        }
    }
}

/// Exact tangency classification of two distinct circles; tangent variants
/// carry the point of tangency (always on the center line).
#[derive(Clone, Debug, PartialEq)]
pub enum Tangency {
    External(Point),
    Internal(Point),
    None,
}

impl Tangency {
    pub fn is_tangent(&self) -> bool {
        !matches!(self, Tangency::None)
    }

    pub fn point(&self) -> Option<&Point> {
        match self {
            Tangency::External(p) | Tangency::Internal(p) => Some(p),
            Tangency::None => None,
        }
    }
}

pub fn tangency(c1: &Circle, c2: &Circle) -> Result<Tangency, GeomError> {
    if c1 == c2 {
        return Err(GeomError::IdenticalCircles);
    }
    let d2 = c1.center().dist2(c2.center());
    let rsum = c1.radius() + c2.radius();
    if d2 == &rsum * &rsum {
        // External: the point divides the center segment in ratio r1 : r2.
        let t = c1.radius().checked_div(&rsum).unwrap();
        let p = Point::new(
            &c1.center().x + &(&t * &(&c2.center().x - &c1.center().x)),
            &c1.center().y + &(&t * &(&c2.center().y - &c1.center().y)),
        );
        return Ok(Tangency::External(p));
    }
    let rdiff = c1.radius() - c2.radius();
    if !rdiff.is_zero() && d2 == &rdiff * &rdiff {
        // Internal: T = (r1·O2 − r2·O1)/(r1 − r2), the external division.
        let x = (&(c1.radius() * &c2.center().x) - &(c2.radius() * &c1.center().x))
            .checked_div(&rdiff)
            .unwrap();
        let y = (&(c1.radius() * &c2.center().y) - &(c2.radius() * &c1.center().y))
            .checked_div(&rdiff)
            .unwrap();
        return Ok(Tangency::Internal(Point::new(x, y)));
    }
    Ok(Tangency::None)
}

#[cfg(test)]
mod tests;
