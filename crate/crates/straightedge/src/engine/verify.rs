//! Exact goal verification with residual witnesses.

use super::{goal_refs, ExecError, GoalSpec, Label, Trace};
use crate::cn::Cn;
use crate::geom::{cross, invert, tangency, Circle, GeoObject, Point};

/// Outcome of one goal: an exact pass/fail plus, for failures, the nonzero
/// exact quantity witnessing the failure.
#[derive(Clone, Debug)]
pub struct GoalResult {
    pub goal: GoalSpec,
    pub pass: bool,
    pub residual: Option<Cn>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub results: Vec<GoalResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn push(&mut self, r: GoalResult) {
        self.results.push(r);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.results.extend(other.results);
    }
}

/// Squared-difference measure between two objects of the same kind: zero
/// exactly when they are equal. Lines compare canonical coefficients.
fn object_residual(a: &GeoObject, b: &GeoObject) -> Option<Cn> {
    let sq = |x: &Cn| x * x;
    match (a, b) {
        (GeoObject::Point(p), GeoObject::Point(q)) => Some(p.dist2(q)),
        (GeoObject::Line(l), GeoObject::Line(m)) => Some(
            &(&sq(&(l.a() - m.a())) + &sq(&(l.b() - m.b()))) + &sq(&(l.c() - m.c())),
        ),
        (GeoObject::Circle(c), GeoObject::Circle(d)) => Some(
            &c.center().dist2(d.center()) + &sq(&(c.radius() - d.radius())),
        ),
        _ => None,
    }
}

/// Zero exactly when the circles are tangent (externally or internally).
fn tangency_residual(a: &Circle, b: &Circle) -> Cn {
    let d2 = a.center().dist2(b.center());
    let rs = a.radius() + b.radius();
    let rd = a.radius() - b.radius();
    let ext = &d2 - &(&rs * &rs);
    let int = &d2 - &(&rd * &rd);
    &ext * &int
}

fn resolve<'a>(trace: &'a Trace, label: &Label) -> Result<&'a GeoObject, ExecError> {
    trace.objects.get(label).ok_or_else(|| ExecError::UnknownLabel {
        step: "<verify>".into(),
        label: label.clone(),
    })
}

fn resolve_circle<'a>(trace: &'a Trace, label: &Label) -> Result<&'a Circle, ExecError> {
    match resolve(trace, label)? {
        GeoObject::Circle(c) => Ok(c),
        other => Err(ExecError::RefKindMismatch {
            step: "<verify>".into(),
            label: label.clone(),
            want: "circle".into(),
            got: other.kind_name().into(),
        }),
    }
}

fn resolve_point<'a>(trace: &'a Trace, label: &Label) -> Result<&'a Point, ExecError> {
    match resolve(trace, label)? {
        GeoObject::Point(p) => Ok(p),
        other => Err(ExecError::RefKindMismatch {
            step: "<verify>".into(),
            label: label.clone(),
            want: "point".into(),
            got: other.kind_name().into(),
        }),
    }
}

fn check_goal(trace: &Trace, goal: &GoalSpec) -> Result<GoalResult, ExecError> {
    let done = |pass: bool, residual: Option<Cn>, note: Option<String>| {
        Ok(GoalResult { goal: goal.clone(), pass, residual, note })
    };
    match goal {
        GoalSpec::TangentTo { circles, target } => {
            let t = resolve_circle(trace, target)?;
            let mut residual = Cn::zero();
            let mut pass = true;
            let mut note = None;
            for label in circles {
                let c = resolve_circle(trace, label)?;
                match tangency(t, c) {
                    Ok(tg) if tg.is_tangent() => {}
                    Ok(_) => {
                        pass = false;
                        let r = tangency_residual(t, c);
                        residual = &residual + &(&r * &r);
                    }
                    Err(e) => {
                        pass = false;
                        note = Some(format!("{target} vs {label}: {e}"));
                    }
                }
            }
            done(pass, if pass { None } else { Some(residual) }, note)
        }
        GoalSpec::PassesThrough { point, object } => {
            let p = resolve_point(trace, point)?;
            let residual = match resolve(trace, object)? {
                GeoObject::Point(q) => p.dist2(q),
                GeoObject::Line(l) => l.eval(p),
                GeoObject::Circle(c) => c.power(p),
            };
            let pass = residual.is_zero();
            done(pass, if pass { None } else { Some(residual) }, None)
        }
        GoalSpec::MoveBudget(n) => {
            let pass = trace.move_count == *n;
            done(
                pass,
                if pass {
                    None
                } else {
                    Some(Cn::from_int(trace.move_count as i64 - *n as i64))
                },
                None,
            )
        }
        GoalSpec::Collinear(a, b, c) => {
            let (pa, pb, pc) = (
                resolve_point(trace, a)?,
                resolve_point(trace, b)?,
                resolve_point(trace, c)?,
            );
            let residual = cross(pa, pb, pc);
            let pass = residual.is_zero();
            done(pass, if pass { None } else { Some(residual) }, None)
        }
        GoalSpec::RadiusEquals(a, b) => {
            let ca = resolve_circle(trace, a)?;
            let cb = resolve_circle(trace, b)?;
            let residual = ca.radius() - cb.radius();
            let pass = residual.is_zero();
            done(pass, if pass { None } else { Some(residual) }, None)
        }
        GoalSpec::InversionSwaps { inv, a, b } => {
            let ic = resolve_circle(trace, inv)?;
            let oa = resolve(trace, a)?;
            let ob = resolve(trace, b)?;
            match (invert(oa, ic), invert(ob, ic)) {
                (Ok(ia), Ok(ib)) => {
                    match (object_residual(&ia, ob), object_residual(&ib, oa)) {
                        (Some(r1), Some(r2)) => {
                            let residual = &r1 + &r2;
                            let pass = residual.is_zero();
                            done(pass, if pass { None } else { Some(residual) }, None)
                        }
                        _ => done(false, None, Some("image kind differs from target".into())),
                    }
                }
                (Err(e), _) | (_, Err(e)) => done(false, None, Some(e.to_string())),
            }
        }
        GoalSpec::InversionFixes { inv, o } => {
            let ic = resolve_circle(trace, inv)?;
            let obj = resolve(trace, o)?;
            match invert(obj, ic) {
                Ok(img) => match object_residual(&img, obj) {
                    Some(residual) => {
                        let pass = residual.is_zero();
                        done(pass, if pass { None } else { Some(residual) }, None)
                    }
                    None => done(false, None, Some("image kind changed".into())),
                },
                Err(e) => done(false, None, Some(e.to_string())),
            }
        }
    }
}

/// Check every goal against a trace, exactly. Unresolvable labels are an
/// error; failing goals carry their residual witness.
pub fn verify(trace: &Trace, goals: &[GoalSpec]) -> Result<VerificationReport, ExecError> {
    for goal in goals {
        for label in goal_refs(goal) {
            if !trace.objects.contains_key(label) {
                return Err(ExecError::UnknownLabel {
                    step: "<verify>".into(),
                    label: label.clone(),
                });
            }
        }
    }
    let mut report = VerificationReport::default();
    for goal in goals {
        report.push(check_goal(trace, goal)?);
    }
    Ok(report)
}
