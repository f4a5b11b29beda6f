//! Program execution: deterministic sampling of free points, exact
//! intersection branch resolution, move counting.

use super::{
    Branch, Board, Constraint, Env, ExecError, GeoObject, Label, OnWhich, Precondition, Program,
    Rect, Step, StepRecord, Trace,
};
use crate::cn::Cn;
use crate::geom::{
    intersect_circles, intersect_line_circle, intersect_lines, parallel, Circle,
    CircleCircleIntersection, Line, LineCircleIntersection, LineLineIntersection, Point,
};
use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Sampling grid: coordinates land on a rational lattice with denominators
/// at most 2¹⁰, which keeps the exact arithmetic small while staying generic.
const GRID: u32 = 1 << 10;
const RETRIES: u32 = 64;

fn sample_rational(rng: &mut ChaCha8Rng, lo: &BigRational, hi: &BigRational) -> BigRational {
    let k = rng.gen_range(0..=GRID);
    lo + (hi - lo) * BigRational::new(BigInt::from(k), BigInt::from(GRID))
}

fn constraint_ok(
    p: &Point,
    c: &Constraint,
    objects: &IndexMap<Label, GeoObject>,
    step: &Label,
) -> Result<bool, ExecError> {
    let resolve = |label: &Label| -> Result<&GeoObject, ExecError> {
        objects.get(label).ok_or_else(|| ExecError::UnknownLabel {
            step: step.clone(),
            label: label.clone(),
        })
    };
    let as_point = |label: &Label| -> Result<&Point, ExecError> {
        match resolve(label)? {
            GeoObject::Point(q) => Ok(q),
            other => Err(ExecError::RefKindMismatch {
                step: step.clone(),
                label: label.clone(),
                want: "point".into(),
                got: other.kind_name().into(),
            }),
        }
    };
    let as_circle = |label: &Label| -> Result<&Circle, ExecError> {
        match resolve(label)? {
            GeoObject::Circle(c) => Ok(c),
            other => Err(ExecError::RefKindMismatch {
                step: step.clone(),
                label: label.clone(),
                want: "circle".into(),
                got: other.kind_name().into(),
            }),
        }
    };
    Ok(match c {
        Constraint::NotEqual(l) => p != as_point(l)?,
        Constraint::NotOn(l) => !resolve(l)?.passes_through(p),
        Constraint::Outside(l) => as_circle(l)?.power(p).signum() > 0,
        Constraint::Inside(l) => as_circle(l)?.power(p).signum() < 0,
        Constraint::NotEquidistant { center, through } => {
            let c0 = as_point(center)?;
            let t0 = as_point(through)?;
            p.dist2(c0) != t0.dist2(c0)
        }
        Constraint::Beyond { past, from } => {
            let z = as_point(past)?;
            let f = as_point(from)?;
            let dot = &(&(&p.x - &z.x) * &(&z.x - &f.x)) + &(&(&p.y - &z.y) * &(&z.y - &f.y));
            dot.signum() > 0
        }
        Constraint::FartherThan { center, through } => {
            let c0 = as_point(center)?;
            let t0 = as_point(through)?;
            (&p.dist2(c0) - &t0.dist2(c0)).signum() > 0
        }
    })
}

fn constraints_ok(
    p: &Point,
    avoid: &[Constraint],
    objects: &IndexMap<Label, GeoObject>,
    step: &Label,
) -> Result<bool, ExecError> {
    for c in avoid {
        if !constraint_ok(p, c, objects, step)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deterministically sample a rational point of the region passing all
/// supplied non-degeneracy predicates.
pub fn sample_free_point(
    rng: &mut ChaCha8Rng,
    region: &Rect,
    avoid: &[Constraint],
    objects: &IndexMap<Label, GeoObject>,
    step: &Label,
) -> Result<Point, ExecError> {
    if region.is_empty() {
        return Err(ExecError::EmptyRegion);
    }
    for _ in 0..RETRIES {
        let x = sample_rational(rng, &region.x0, &region.x1);
        let y = sample_rational(rng, &region.y0, &region.y1);
        let p = Point::new(Cn::from_big_ratio(x), Cn::from_big_ratio(y));
        if constraints_ok(&p, avoid, objects, step)? {
            return Ok(p);
        }
    }
    Err(ExecError::SamplerExhausted { step: step.clone(), retries: RETRIES })
}

/// A point on an object at a rational parameter. Lines use `base + t·dir`
/// (the drawing orientation when there is one); circles use the tangent
/// half-angle parametrisation, so rational parameters give exact points.
fn param_point(
    obj: &GeoObject,
    orient: Option<&(Point, Point)>,
    t: &BigRational,
    step: &Label,
) -> Result<Point, ExecError> {
    let t = Cn::from_big_ratio(t.clone());
    match obj {
        GeoObject::Line(l) => {
            let (base, dir) = line_frame(l, orient);
            Ok(Point::new(&base.x + &(&t * &dir.0), &base.y + &(&t * &dir.1)))
        }
        GeoObject::Circle(c) => {
            let t2 = &t * &t;
            let den = &Cn::one() + &t2;
            let cosu = (&Cn::one() - &t2).checked_div(&den).unwrap();
            let sinu = (&Cn::from_int(2) * &t).checked_div(&den).unwrap();
            Ok(Point::new(
                &c.center().x + &(c.radius() * &cosu),
                &c.center().y + &(c.radius() * &sinu),
            ))
        }
        GeoObject::Point(_) => Err(ExecError::RefKindMismatch {
            step: step.clone(),
            label: step.clone(),
            want: "line or circle".into(),
            got: "point".into(),
        }),
    }
}

/// Base point and direction for parametrising a line: the drawing
/// orientation when known, else the canonical frame (foot of the
/// perpendicular from the origin, direction `(b, −a)`).
fn line_frame(l: &Line, orient: Option<&(Point, Point)>) -> (Point, (Cn, Cn)) {
    if let Some((p, q)) = orient {
        return (p.clone(), (&q.x - &p.x, &q.y - &p.y));
    }
    let n2 = &(l.a() * l.a()) + &(l.b() * l.b());
    let base = Point::new(
        -&(l.a() * l.c()).checked_div(&n2).unwrap(),
        -&(l.b() * l.c()).checked_div(&n2).unwrap(),
    );
    (base, l.direction())
}

fn resolve_intersection(
    a_label: &Label,
    b_label: &Label,
    a: &GeoObject,
    b: &GeoObject,
    branch: &Branch,
    orients: &HashMap<Label, (Point, Point)>,
    objects: &IndexMap<Label, GeoObject>,
    step: &Label,
) -> Result<Point, ExecError> {
    let invalid = |detail: &str| ExecError::BranchInvalid { step: step.clone(), detail: detail.into() };
    let missing = |detail: &str| ExecError::BranchMissing { step: step.clone(), detail: detail.into() };

    // "The other intersection": both points computed, the one equal to the
    // named point is discarded.
    if let Branch::Other(known_label) = branch {
        let known = expect_point(objects, known_label, step)?.clone();
        let pts: Vec<Point> = match (a, b) {
            (GeoObject::Line(l1), GeoObject::Line(l2)) => match intersect_lines(l1, l2) {
                LineLineIntersection::Point(p) => vec![p],
                _ => vec![],
            },
            (GeoObject::Line(l), GeoObject::Circle(c))
            | (GeoObject::Circle(c), GeoObject::Line(l)) => match intersect_line_circle(l, c) {
                LineCircleIntersection::Empty => vec![],
                LineCircleIntersection::Tangent(p) => vec![p],
                LineCircleIntersection::Secant { lo, hi } => vec![lo, hi],
            },
            (GeoObject::Circle(c1), GeoObject::Circle(c2)) => {
                match intersect_circles(c1, c2).map_err(|e| missing(&e.to_string()))? {
                    CircleCircleIntersection::Empty => vec![],
                    CircleCircleIntersection::Tangent(p) => vec![p],
                    CircleCircleIntersection::Secant { left, right } => vec![left, right],
                }
            }
            _ => return Err(invalid("points cannot be intersected")),
        };
        if pts.is_empty() {
            return Err(missing("the objects do not intersect"));
        }
        if !pts.iter().any(|p| p == &known) {
            return Err(invalid(&format!("'{known_label}' is not an intersection point")));
        }
        let mut others = pts.into_iter().filter(|p| p != &known);
        return match (others.next(), others.next()) {
            (Some(p), None) => Ok(p),
            (None, _) => Err(missing(&format!(
                "tangent at '{known_label}'; no second intersection"
            ))),
            _ => Err(invalid("more than one intersection besides the named point")),
        };
    }

    match (a, b) {
        (GeoObject::Line(l1), GeoObject::Line(l2)) => match intersect_lines(l1, l2) {
            LineLineIntersection::Point(p) => {
                if *branch == Branch::Only {
                    Ok(p)
                } else {
                    Err(invalid("line-line intersections use branch 'only'"))
                }
            }
            LineLineIntersection::Parallel => Err(missing("the lines are parallel")),
            LineLineIntersection::Identical => Err(missing("the lines are identical")),
        },
        (GeoObject::Line(l), GeoObject::Circle(c)) | (GeoObject::Circle(c), GeoObject::Line(l)) => {
            let line_label = if matches!(a, GeoObject::Line(_)) { a_label } else { b_label };
            match intersect_line_circle(l, c) {
                LineCircleIntersection::Empty => Err(missing("line and circle are disjoint")),
                LineCircleIntersection::Tangent(p) => {
                    if *branch == Branch::Only {
                        Ok(p)
                    } else {
                        Err(invalid("tangent intersection requires branch 'only'"))
                    }
                }
                LineCircleIntersection::Secant { lo, hi } => {
                    // Reorder along the drawing orientation when there is one.
                    let (lo, hi) = match orients.get(line_label) {
                        Some((p, q)) => {
                            let dot = &(l.b() * &(&q.x - &p.x)) - &(l.a() * &(&q.y - &p.y));
                            if dot.signum() < 0 {
                                (hi, lo)
                            } else {
                                (lo, hi)
                            }
                        }
                        None => (lo, hi),
                    };
                    match branch {
                        Branch::Lo => Ok(lo),
                        Branch::Hi => Ok(hi),
                        Branch::Only => Err(invalid("two intersection points; pick 'lo' or 'hi'")),
                        _ => Err(invalid("line-circle intersections use 'lo'/'hi'")),
                    }
                }
            }
        }
        (GeoObject::Circle(c1), GeoObject::Circle(c2)) => {
            match intersect_circles(c1, c2).map_err(|e| missing(&e.to_string()))? {
                CircleCircleIntersection::Empty => Err(missing("circles are disjoint")),
                CircleCircleIntersection::Tangent(p) => {
                    if *branch == Branch::Only {
                        Ok(p)
                    } else {
                        Err(invalid("tangent intersection requires branch 'only'"))
                    }
                }
                CircleCircleIntersection::Secant { left, right } => match branch {
                    Branch::Left => Ok(left),
                    Branch::Right => Ok(right),
                    Branch::Only => Err(invalid("two intersection points; pick 'left' or 'right'")),
                    _ => Err(invalid("circle-circle intersections use 'left'/'right'")),
                },
            }
        }
        _ => Err(invalid("points cannot be intersected")),
    }
}

/// Evaluate a program on a board. Free points without overrides are sampled
/// deterministically from the seed; the same program, board and environment
/// always produce the identical trace.
pub fn execute(program: &Program, board: &Board, env: &Env) -> Result<Trace, ExecError> {
    program.validate()?;

    let mut objects: IndexMap<Label, GeoObject> = IndexMap::new();
    let mut orients: HashMap<Label, (Point, Point)> = HashMap::new();
    let mut samples: IndexMap<Label, Point> = IndexMap::new();
    let mut records: Vec<StepRecord> = Vec::new();

    for decl in &program.inputs {
        let obj = board
            .objects
            .get(&decl.label)
            .ok_or_else(|| ExecError::MissingInput(decl.label.clone()))?;
        if !decl.kind.matches(obj) {
            return Err(ExecError::InputKindMismatch {
                label: decl.label.clone(),
                want: decl.kind.name().into(),
                got: obj.kind_name().into(),
            });
        }
        objects.insert(decl.label.clone(), obj.clone());
        records.push(StepRecord { label: decl.label.clone(), op: "input".into(), is_move: false });
    }
    for decl in &program.inputs {
        if let Some((pl, ql)) = &decl.orient {
            let p = expect_point(&objects, pl, &decl.label)?.clone();
            let q = expect_point(&objects, ql, &decl.label)?.clone();
            let GeoObject::Line(line) = &objects[&decl.label] else {
                return Err(ExecError::InputKindMismatch {
                    label: decl.label.clone(),
                    want: "line".into(),
                    got: objects[&decl.label].kind_name().into(),
                });
            };
            if !line.contains(&p) || !line.contains(&q) || p == q {
                return Err(ExecError::PreconditionFailed(format!(
                    "orientation points {pl}, {ql} do not span input line {}",
                    decl.label
                )));
            }
            orients.insert(decl.label.clone(), (p, q));
        }
    }

    let mut pending: Vec<&Precondition> = program.preconditions.iter().collect();
    check_preconditions(&mut pending, &objects)?;

    let mut rng = ChaCha8Rng::seed_from_u64(env.seed);
    let mut moves = 0u32;

    for step in &program.steps {
        let label = step.label().clone();
        match step {
            Step::Free { region, avoid, .. } => {
                let p = match env.overrides.get(&label) {
                    Some(p) => {
                        if !constraints_ok(p, avoid, &objects, &label)? {
                            return Err(ExecError::OverrideInvalid {
                                step: label.clone(),
                                detail: "violates a non-degeneracy predicate".into(),
                            });
                        }
                        p.clone()
                    }
                    None => sample_free_point(&mut rng, region, avoid, &objects, &label)?,
                };
                samples.insert(label.clone(), p.clone());
                objects.insert(label.clone(), GeoObject::Point(p));
            }
            Step::On { object, which, avoid, .. } => {
                let obj = objects
                    .get(object)
                    .ok_or_else(|| ExecError::UnknownLabel { step: label.clone(), label: object.clone() })?
                    .clone();
                let p = match env.overrides.get(&label) {
                    Some(p) => {
                        if !obj.passes_through(p) {
                            return Err(ExecError::OverrideInvalid {
                                step: label.clone(),
                                detail: format!("override is not on {object}"),
                            });
                        }
                        if !constraints_ok(p, avoid, &objects, &label)? {
                            return Err(ExecError::OverrideInvalid {
                                step: label.clone(),
                                detail: "violates a non-degeneracy predicate".into(),
                            });
                        }
                        p.clone()
                    }
                    None => match which {
                        OnWhich::Param(t) => {
                            let p = param_point(&obj, orients.get(object), t, &label)?;
                            if !constraints_ok(&p, avoid, &objects, &label)? {
                                return Err(ExecError::OverrideInvalid {
                                    step: label.clone(),
                                    detail: "parameter violates a non-degeneracy predicate".into(),
                                });
                            }
                            p
                        }
                        OnWhich::Sampled => {
                            let lo = BigRational::from_integer((-8).into());
                            let hi = BigRational::from_integer(8.into());
                            let mut found = None;
                            for _ in 0..RETRIES {
                                let t = sample_rational(&mut rng, &lo, &hi);
                                let p = param_point(&obj, orients.get(object), &t, &label)?;
                                if constraints_ok(&p, avoid, &objects, &label)? {
                                    found = Some(p);
                                    break;
                                }
                            }
                            found.ok_or(ExecError::SamplerExhausted { step: label.clone(), retries: RETRIES })?
                        }
                    },
                };
                samples.insert(label.clone(), p.clone());
                objects.insert(label.clone(), GeoObject::Point(p));
            }
            Step::Intersect { a, b, branch, .. } => {
                let oa = objects
                    .get(a)
                    .ok_or_else(|| ExecError::UnknownLabel { step: label.clone(), label: a.clone() })?;
                let ob = objects
                    .get(b)
                    .ok_or_else(|| ExecError::UnknownLabel { step: label.clone(), label: b.clone() })?;
                let p = resolve_intersection(a, b, oa, ob, branch, &orients, &objects, &label)?;
                objects.insert(label.clone(), GeoObject::Point(p));
            }
            Step::Line { p, q, .. } => {
                let pp = expect_point(&objects, p, &label)?.clone();
                let qq = expect_point(&objects, q, &label)?.clone();
                let line = Line::through(&pp, &qq).map_err(|e| ExecError::DegenerateDraw {
                    step: label.clone(),
                    detail: e.to_string(),
                })?;
                orients.insert(label.clone(), (pp, qq));
                objects.insert(label.clone(), GeoObject::Line(line));
                moves += 1;
            }
            Step::Circle { center, through, .. } => {
                let c = expect_point(&objects, center, &label)?;
                let t = expect_point(&objects, through, &label)?;
                let circle = Circle::center_through(c, t).map_err(|e| ExecError::DegenerateDraw {
                    step: label.clone(),
                    detail: e.to_string(),
                })?;
                objects.insert(label.clone(), GeoObject::Circle(circle));
                moves += 1;
            }
        }
        records.push(StepRecord {
            label,
            op: step.op_name().into(),
            is_move: step.is_move(),
        });
        check_preconditions(&mut pending, &objects)?;
    }

    Ok(Trace {
        program: program.name.clone(),
        objects,
        move_count: moves,
        steps: records,
        seed: env.seed,
        samples,
    })
}

/// Evaluate any precondition whose referenced objects both exist; checked
/// ones are removed from `pending`.
fn check_preconditions(
    pending: &mut Vec<&Precondition>,
    objects: &IndexMap<Label, GeoObject>,
) -> Result<(), ExecError> {
    let mut i = 0;
    while i < pending.len() {
        let (want_parallel, a, b) = match pending[i] {
            Precondition::Parallel(a, b) => (true, a, b),
            Precondition::NotParallel(a, b) => (false, a, b),
        };
        if objects.contains_key(a) && objects.contains_key(b) {
            let step = "<precondition>".to_string();
            let la = expect_line(objects, a, &step)?;
            let lb = expect_line(objects, b, &step)?;
            if parallel(la, lb) != want_parallel {
                return Err(ExecError::PreconditionFailed(format!(
                    "lines {a} and {b} are {}parallel",
                    if want_parallel { "not " } else { "" }
                )));
            }
            pending.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(())
}

fn expect_point<'a>(
    objects: &'a IndexMap<Label, GeoObject>,
    label: &Label,
    step: &Label,
) -> Result<&'a Point, ExecError> {
    match objects.get(label) {
        Some(GeoObject::Point(p)) => Ok(p),
        Some(other) => Err(ExecError::RefKindMismatch {
            step: step.clone(),
            label: label.clone(),
            want: "point".into(),
            got: other.kind_name().into(),
        }),
        None => Err(ExecError::UnknownLabel { step: step.clone(), label: label.clone() }),
    }
}

fn expect_line<'a>(
    objects: &'a IndexMap<Label, GeoObject>,
    label: &Label,
    step: &Label,
) -> Result<&'a Line, ExecError> {
    match objects.get(label) {
        Some(GeoObject::Line(l)) => Ok(l),
        Some(other) => Err(ExecError::RefKindMismatch {
            step: step.clone(),
            label: label.clone(),
            want: "line".into(),
            got: other.kind_name().into(),
        }),
        None => Err(ExecError::UnknownLabel { step: step.clone(), label: label.clone() }),
    }
}
