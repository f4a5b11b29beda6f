//! JSON wire formats for every exchangeable artifact: numbers, objects,
//! boards, programs, traces, reports, search tasks and outcomes.
//!
//! Constructible numbers travel as expression trees — `{"rat": [p, q]}`,
//! `{"add"|"sub"|"mul"|"div": [e, e]}`, `{"sqrt": e}` — with integers written
//! as arbitrary-precision JSON numbers, so round-trips are bit-exact.
//! Decoding errors carry a JSON-pointer-style path to the offending value.

use crate::cn::Cn;
use crate::engine::{
    Board, Branch, Constraint, GoalResult, GoalSpec, InputDecl, Label, ObjKind, OnWhich,
    Precondition, Program, Rect, Step, StepRecord, Trace, VerificationReport,
};
use crate::geom::{Circle, GeoObject, Line, Point};
use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Number, Value};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JsonError {
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("invalid JSON: {0}")]
    Parse(String),
}

fn err<T>(path: &str, msg: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError::Schema { path: path.to_string(), msg: msg.into() })
}

// ---------------------------------------------------------------------------
// Integers and rationals

fn bigint_to_number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integer literal is a valid JSON number")
}

fn bigint_from_value(v: &Value, path: &str) -> Result<BigInt, JsonError> {
    let Value::Number(n) = v else {
        return err(path, "expected an integer");
    };
    let s = n.to_string();
    if s.contains(['.', 'e', 'E']) {
        return err(path, format!("expected an integer, got {s}"));
    }
    BigInt::from_str(&s).map_err(|e| JsonError::Schema { path: path.into(), msg: e.to_string() })
}

pub fn ratio_to_value(q: &BigRational) -> Value {
    Value::Array(vec![
        Value::Number(bigint_to_number(q.numer())),
        Value::Number(bigint_to_number(q.denom())),
    ])
}

pub fn ratio_from_value(v: &Value, path: &str) -> Result<BigRational, JsonError> {
    let Value::Array(a) = v else {
        return err(path, "expected [p, q]");
    };
    if a.len() != 2 {
        return err(path, "expected [p, q]");
    }
    let p = bigint_from_value(&a[0], &format!("{path}/0"))?;
    let q = bigint_from_value(&a[1], &format!("{path}/1"))?;
    if q == BigInt::from(0) {
        return err(&format!("{path}/1"), "zero denominator");
    }
    Ok(BigRational::new(p, q))
}

// ---------------------------------------------------------------------------
// Constructible numbers as expression trees

pub fn cn_to_value(x: &Cn) -> Value {
    if let Some(q) = x.as_ratio() {
        return json!({ "rat": ratio_to_value(q) });
    }
    // a + b·√r, omitting zero a and unit b for compact, stable output.
    let (a, b, r) = x.parts().expect("non-rational value has extension parts");
    let sqrt = json!({ "sqrt": cn_to_value(&r) });
    let prod = if b.is_one() { sqrt } else { json!({ "mul": [cn_to_value(&b), sqrt] }) };
    if a.is_zero() {
        prod
    } else {
        json!({ "add": [cn_to_value(&a), prod] })
    }
}

pub fn cn_from_value(v: &Value, path: &str) -> Result<Cn, JsonError> {
    let Value::Object(m) = v else {
        return err(path, "expected an expression object");
    };
    if m.len() != 1 {
        return err(path, "expected exactly one operator key");
    }
    let (op, arg) = m.iter().next().unwrap();
    let sub = |i: usize| format!("{path}/{op}/{i}");
    let pair = |arg: &Value| -> Result<(Cn, Cn), JsonError> {
        let Value::Array(a) = arg else {
            return err(&format!("{path}/{op}"), "expected [e, e]");
        };
        if a.len() != 2 {
            return err(&format!("{path}/{op}"), "expected [e, e]");
        }
        Ok((cn_from_value(&a[0], &sub(0))?, cn_from_value(&a[1], &sub(1))?))
    };
    match op.as_str() {
        "rat" => Ok(Cn::from_big_ratio(ratio_from_value(arg, &format!("{path}/rat"))?)),
        "add" => pair(arg).map(|(a, b)| &a + &b),
        "sub" => pair(arg).map(|(a, b)| &a - &b),
        "mul" => pair(arg).map(|(a, b)| &a * &b),
        "div" => {
            let (a, b) = pair(arg)?;
            a.checked_div(&b)
                .map_err(|e| JsonError::Schema { path: format!("{path}/div"), msg: e.to_string() })
        }
        "sqrt" => {
            let a = cn_from_value(arg, &format!("{path}/sqrt"))?;
            a.sqrt()
                .map_err(|e| JsonError::Schema { path: format!("{path}/sqrt"), msg: e.to_string() })
        }
        other => err(path, format!("unknown operator '{other}'")),
    }
}

// ---------------------------------------------------------------------------
// Geometry

pub fn point_to_value(p: &Point) -> Value {
    json!({ "pt": [cn_to_value(&p.x), cn_to_value(&p.y)] })
}

pub fn geo_to_value(obj: &GeoObject) -> Value {
    match obj {
        GeoObject::Point(p) => point_to_value(p),
        GeoObject::Line(l) => {
            json!({ "ln": [cn_to_value(l.a()), cn_to_value(l.b()), cn_to_value(l.c())] })
        }
        GeoObject::Circle(c) => json!({
            "circ": { "c": [cn_to_value(&c.center().x), cn_to_value(&c.center().y)],
                       "r": cn_to_value(c.radius()) }
        }),
    }
}

pub fn point_from_value(v: &Value, path: &str) -> Result<Point, JsonError> {
    match geo_from_value(v, path)? {
        GeoObject::Point(p) => Ok(p),
        o => err(path, format!("expected a point, got a {}", o.kind_name())),
    }
}

pub fn geo_from_value(v: &Value, path: &str) -> Result<GeoObject, JsonError> {
    let Value::Object(m) = v else {
        return err(path, "expected an object");
    };
    if m.len() != 1 {
        return err(path, "expected exactly one of pt/ln/circ");
    }
    let (tag, arg) = m.iter().next().unwrap();
    match tag.as_str() {
        "pt" => {
            let Value::Array(a) = arg else { return err(path, "pt expects [x, y]") };
            if a.len() != 2 {
                return err(path, "pt expects [x, y]");
            }
            Ok(GeoObject::Point(Point::new(
                cn_from_value(&a[0], &format!("{path}/pt/0"))?,
                cn_from_value(&a[1], &format!("{path}/pt/1"))?,
            )))
        }
        "ln" => {
            let Value::Array(a) = arg else { return err(path, "ln expects [a, b, c]") };
            if a.len() != 3 {
                return err(path, "ln expects [a, b, c]");
            }
            let l = Line::from_coeffs(
                cn_from_value(&a[0], &format!("{path}/ln/0"))?,
                cn_from_value(&a[1], &format!("{path}/ln/1"))?,
                cn_from_value(&a[2], &format!("{path}/ln/2"))?,
            )
            .map_err(|e| JsonError::Schema { path: format!("{path}/ln"), msg: e.to_string() })?;
            Ok(GeoObject::Line(l))
        }
        "circ" => {
            let Value::Object(c) = arg else { return err(path, "circ expects an object") };
            let center = c.get("c").ok_or_else(|| JsonError::Schema {
                path: format!("{path}/circ"),
                msg: "missing 'c'".into(),
            })?;
            let Value::Array(cc) = center else { return err(path, "circ.c expects [x, y]") };
            if cc.len() != 2 {
                return err(path, "circ.c expects [x, y]");
            }
            let r = c.get("r").ok_or_else(|| JsonError::Schema {
                path: format!("{path}/circ"),
                msg: "missing 'r'".into(),
            })?;
            let circle = Circle::new(
                Point::new(
                    cn_from_value(&cc[0], &format!("{path}/circ/c/0"))?,
                    cn_from_value(&cc[1], &format!("{path}/circ/c/1"))?,
                ),
                cn_from_value(r, &format!("{path}/circ/r"))?,
            )
            .map_err(|e| JsonError::Schema { path: format!("{path}/circ"), msg: e.to_string() })?;
            Ok(GeoObject::Circle(circle))
        }
        other => err(path, format!("unknown object tag '{other}'")),
    }
}

/// Canonical single-line serialization; equal representations give equal
/// strings regardless of context.
pub fn geo_canonical_string(obj: &GeoObject) -> String {
    geo_to_value(obj).to_string()
}

// ---------------------------------------------------------------------------
// Boards

pub fn board_to_value(board: &Board) -> Value {
    let mut m = Map::new();
    for (label, obj) in &board.objects {
        m.insert(label.clone(), geo_to_value(obj));
    }
    json!({ "objects": Value::Object(m) })
}

pub fn board_from_value(v: &Value, path: &str) -> Result<Board, JsonError> {
    let Some(Value::Object(m)) = v.get("objects") else {
        return err(path, "expected {\"objects\": {...}}");
    };
    let mut board = Board::new();
    for (label, ov) in m {
        let obj = geo_from_value(ov, &format!("{path}/objects/{label}"))?;
        board.objects.insert(label.clone(), obj);
    }
    Ok(board)
}

// ---------------------------------------------------------------------------
// Programs

fn branch_to_value(b: &Branch) -> Value {
    match b {
        Branch::Lo => json!("lo"),
        Branch::Hi => json!("hi"),
        Branch::Left => json!("left"),
        Branch::Right => json!("right"),
        Branch::Only => json!("only"),
        Branch::Other(l) => json!({ "other": l }),
    }
}

fn branch_from_value(v: &Value, path: &str) -> Result<Branch, JsonError> {
    match v {
        Value::String(s) => Ok(match s.as_str() {
            "lo" => Branch::Lo,
            "hi" => Branch::Hi,
            "left" => Branch::Left,
            "right" => Branch::Right,
            "only" => Branch::Only,
            other => return err(path, format!("unknown branch '{other}'")),
        }),
        Value::Object(m) => match m.get("other") {
            Some(Value::String(l)) => Ok(Branch::Other(l.clone())),
            _ => err(path, "expected {\"other\": label}"),
        },
        _ => err(path, "expected a branch"),
    }
}

fn constraint_to_value(c: &Constraint) -> Value {
    match c {
        Constraint::NotEqual(l) => json!({ "not_equal": l }),
        Constraint::NotOn(l) => json!({ "not_on": l }),
        Constraint::Outside(l) => json!({ "outside": l }),
        Constraint::Inside(l) => json!({ "inside": l }),
        Constraint::NotEquidistant { center, through } => {
            json!({ "not_equidistant": { "center": center, "through": through } })
        }
        Constraint::Beyond { past, from } => json!({ "beyond": { "past": past, "from": from } }),
        Constraint::FartherThan { center, through } => {
            json!({ "farther_than": { "center": center, "through": through } })
        }
    }
}

fn get_str(v: &Value, key: &str, path: &str) -> Result<String, JsonError> {
    match v.get(key) {
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => err(&format!("{path}/{key}"), "expected a string"),
        None => err(path, format!("missing '{key}'")),
    }
}

fn get_u64(v: &Value, key: &str, path: &str) -> Result<u64, JsonError> {
    match v.get(key) {
        Some(Value::Number(n)) => n.as_u64().ok_or_else(|| JsonError::Schema {
            path: format!("{path}/{key}"),
            msg: "expected a nonnegative integer".into(),
        }),
        Some(_) => err(&format!("{path}/{key}"), "expected a number"),
        None => err(path, format!("missing '{key}'")),
    }
}

fn constraint_from_value(v: &Value, path: &str) -> Result<Constraint, JsonError> {
    let Value::Object(m) = v else {
        return err(path, "expected a constraint object");
    };
    if m.len() != 1 {
        return err(path, "expected exactly one constraint key");
    }
    let (key, arg) = m.iter().next().unwrap();
    let label = |arg: &Value| -> Result<Label, JsonError> {
        match arg {
            Value::String(s) => Ok(s.clone()),
            _ => err(&format!("{path}/{key}"), "expected a label"),
        }
    };
    Ok(match key.as_str() {
        "not_equal" => Constraint::NotEqual(label(arg)?),
        "not_on" => Constraint::NotOn(label(arg)?),
        "outside" => Constraint::Outside(label(arg)?),
        "inside" => Constraint::Inside(label(arg)?),
        "not_equidistant" => Constraint::NotEquidistant {
            center: get_str(arg, "center", path)?,
            through: get_str(arg, "through", path)?,
        },
        "beyond" => Constraint::Beyond {
            past: get_str(arg, "past", path)?,
            from: get_str(arg, "from", path)?,
        },
        "farther_than" => Constraint::FartherThan {
            center: get_str(arg, "center", path)?,
            through: get_str(arg, "through", path)?,
        },
        other => return err(path, format!("unknown constraint '{other}'")),
    })
}

fn step_to_value(s: &Step) -> Value {
    match s {
        Step::Free { label, region, avoid } => json!({
            "op": "free", "label": label,
            "region": [ratio_to_value(&region.x0), ratio_to_value(&region.y0),
                        ratio_to_value(&region.x1), ratio_to_value(&region.y1)],
            "avoid": avoid.iter().map(constraint_to_value).collect::<Vec<_>>(),
        }),
        Step::On { label, object, which, avoid } => json!({
            "op": "on", "label": label, "object": object,
            "which": match which {
                OnWhich::Sampled => Value::String("sampled".into()),
                OnWhich::Param(t) => json!({ "param": ratio_to_value(t) }),
            },
            "avoid": avoid.iter().map(constraint_to_value).collect::<Vec<_>>(),
        }),
        Step::Intersect { label, a, b, branch } => json!({
            "op": "isect", "label": label, "a": a, "b": b, "branch": branch_to_value(branch),
        }),
        Step::Line { label, p, q } => json!({ "op": "line", "label": label, "p": p, "q": q }),
        Step::Circle { label, center, through } => json!({
            "op": "circle", "label": label, "center": center, "through": through,
        }),
    }
}

fn step_from_value(v: &Value, path: &str) -> Result<Step, JsonError> {
    let op = get_str(v, "op", path)?;
    let label = get_str(v, "label", path)?;
    let avoid = |path: &str| -> Result<Vec<Constraint>, JsonError> {
        match v.get("avoid") {
            None => Ok(vec![]),
            Some(Value::Array(a)) => a
                .iter()
                .enumerate()
                .map(|(i, c)| constraint_from_value(c, &format!("{path}/avoid/{i}")))
                .collect(),
            Some(_) => err(&format!("{path}/avoid"), "expected an array"),
        }
    };
    Ok(match op.as_str() {
        "free" => {
            let Some(Value::Array(r)) = v.get("region") else {
                return err(path, "free step needs region [x0, y0, x1, y1]");
            };
            if r.len() != 4 {
                return err(&format!("{path}/region"), "expected four rationals");
            }
            let q = |i: usize| ratio_from_value(&r[i], &format!("{path}/region/{i}"));
            Step::Free {
                label,
                region: Rect { x0: q(0)?, y0: q(1)?, x1: q(2)?, y1: q(3)? },
                avoid: avoid(path)?,
            }
        }
        "on" => {
            let which = match v.get("which") {
                Some(Value::String(s)) if s == "sampled" => OnWhich::Sampled,
                Some(other) => match other.get("param") {
                    Some(p) => OnWhich::Param(ratio_from_value(p, &format!("{path}/which/param"))?),
                    None => return err(&format!("{path}/which"), "expected 'sampled' or {\"param\": [p, q]}"),
                },
                None => OnWhich::Sampled,
            };
            Step::On { label, object: get_str(v, "object", path)?, which, avoid: avoid(path)? }
        }
        "isect" => Step::Intersect {
            label,
            a: get_str(v, "a", path)?,
            b: get_str(v, "b", path)?,
            branch: branch_from_value(
                v.get("branch").ok_or_else(|| JsonError::Schema {
                    path: path.into(),
                    msg: "missing 'branch'".into(),
                })?,
                &format!("{path}/branch"),
            )?,
        },
        "line" => Step::Line { label, p: get_str(v, "p", path)?, q: get_str(v, "q", path)? },
        "circle" => Step::Circle {
            label,
            center: get_str(v, "center", path)?,
            through: get_str(v, "through", path)?,
        },
        other => return err(&format!("{path}/op"), format!("unknown op '{other}'")),
    })
}

pub fn goal_to_value(g: &GoalSpec) -> Value {
    match g {
        GoalSpec::TangentTo { circles, target } => {
            json!({ "tangent_to": { "circles": circles, "target": target } })
        }
        GoalSpec::PassesThrough { point, object } => {
            json!({ "passes_through": { "point": point, "object": object } })
        }
        GoalSpec::MoveBudget(n) => json!({ "move_budget": n }),
        GoalSpec::Collinear(a, b, c) => json!({ "collinear": [a, b, c] }),
        GoalSpec::RadiusEquals(a, b) => json!({ "radius_equals": [a, b] }),
        GoalSpec::InversionSwaps { inv, a, b } => {
            json!({ "inversion_swaps": { "inv": inv, "a": a, "b": b } })
        }
        GoalSpec::InversionFixes { inv, o } => {
            json!({ "inversion_fixes": { "inv": inv, "o": o } })
        }
    }
}

pub fn goal_from_value(v: &Value, path: &str) -> Result<GoalSpec, JsonError> {
    let Value::Object(m) = v else {
        return err(path, "expected a goal object");
    };
    if m.len() != 1 {
        return err(path, "expected exactly one goal key");
    }
    let (key, arg) = m.iter().next().unwrap();
    let labels = |arg: &Value, n: usize| -> Result<Vec<Label>, JsonError> {
        let Value::Array(a) = arg else {
            return err(&format!("{path}/{key}"), "expected an array of labels");
        };
        if a.len() != n {
            return err(&format!("{path}/{key}"), format!("expected {n} labels"));
        }
        a.iter()
            .map(|x| match x {
                Value::String(s) => Ok(s.clone()),
                _ => err(&format!("{path}/{key}"), "expected a label"),
            })
            .collect()
    };
    Ok(match key.as_str() {
        "tangent_to" => {
            let circles = match arg.get("circles") {
                Some(Value::Array(a)) => a
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => Ok(s.clone()),
                        _ => err(&format!("{path}/tangent_to/circles"), "expected a label"),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                _ => return err(&format!("{path}/tangent_to"), "missing 'circles'"),
            };
            GoalSpec::TangentTo { circles, target: get_str(arg, "target", path)? }
        }
        "passes_through" => GoalSpec::PassesThrough {
            point: get_str(arg, "point", path)?,
            object: get_str(arg, "object", path)?,
        },
        "move_budget" => {
            let Value::Number(n) = arg else {
                return err(&format!("{path}/move_budget"), "expected an integer");
            };
            GoalSpec::MoveBudget(n.as_u64().ok_or_else(|| JsonError::Schema {
                path: format!("{path}/move_budget"),
                msg: "expected a nonnegative integer".into(),
            })? as u32)
        }
        "collinear" => {
            let l = labels(arg, 3)?;
            GoalSpec::Collinear(l[0].clone(), l[1].clone(), l[2].clone())
        }
        "radius_equals" => {
            let l = labels(arg, 2)?;
            GoalSpec::RadiusEquals(l[0].clone(), l[1].clone())
        }
        "inversion_swaps" => GoalSpec::InversionSwaps {
            inv: get_str(arg, "inv", path)?,
            a: get_str(arg, "a", path)?,
            b: get_str(arg, "b", path)?,
        },
        "inversion_fixes" => GoalSpec::InversionFixes {
            inv: get_str(arg, "inv", path)?,
            o: get_str(arg, "o", path)?,
        },
        other => return err(path, format!("unknown goal '{other}'")),
    })
}

pub fn program_to_value(p: &Program) -> Value {
    json!({
        "name": p.name,
        "inputs": p.inputs.iter().map(|d| {
            let mut m = Map::new();
            m.insert("label".into(), json!(d.label));
            m.insert("kind".into(), json!(d.kind.name()));
            if let Some((a, b)) = &d.orient {
                m.insert("orient".into(), json!([a, b]));
            }
            Value::Object(m)
        }).collect::<Vec<_>>(),
        "steps": p.steps.iter().map(step_to_value).collect::<Vec<_>>(),
        "goals": p.goals.iter().map(goal_to_value).collect::<Vec<_>>(),
        "budget": p.budget,
        "preconditions": p.preconditions.iter().map(|pre| match pre {
            Precondition::Parallel(a, b) => json!({ "parallel": [a, b] }),
            Precondition::NotParallel(a, b) => json!({ "not_parallel": [a, b] }),
        }).collect::<Vec<_>>(),
    })
}

pub fn program_from_value(v: &Value, path: &str) -> Result<Program, JsonError> {
    let name = get_str(v, "name", path)?;
    let mut inputs = Vec::new();
    if let Some(arr) = v.get("inputs") {
        let Value::Array(arr) = arr else {
            return err(&format!("{path}/inputs"), "expected an array");
        };
        for (i, d) in arr.iter().enumerate() {
            let dpath = format!("{path}/inputs/{i}");
            let kind = match get_str(d, "kind", &dpath)?.as_str() {
                "point" => ObjKind::Point,
                "line" => ObjKind::Line,
                "circle" => ObjKind::Circle,
                other => return err(&format!("{dpath}/kind"), format!("unknown kind '{other}'")),
            };
            let orient = match d.get("orient") {
                None | Some(Value::Null) => None,
                Some(Value::Array(o)) if o.len() == 2 => match (&o[0], &o[1]) {
                    (Value::String(a), Value::String(b)) => Some((a.clone(), b.clone())),
                    _ => return err(&format!("{dpath}/orient"), "expected two labels"),
                },
                Some(_) => return err(&format!("{dpath}/orient"), "expected two labels"),
            };
            inputs.push(InputDecl { label: get_str(d, "label", &dpath)?, kind, orient });
        }
    }
    let Some(Value::Array(steps_v)) = v.get("steps") else {
        return err(path, "missing 'steps'");
    };
    let steps = steps_v
        .iter()
        .enumerate()
        .map(|(i, s)| step_from_value(s, &format!("{path}/steps/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let goals = match v.get("goals") {
        None => vec![],
        Some(Value::Array(gs)) => gs
            .iter()
            .enumerate()
            .map(|(i, g)| goal_from_value(g, &format!("{path}/goals/{i}")))
            .collect::<Result<Vec<_>, _>>()?,
        Some(_) => return err(&format!("{path}/goals"), "expected an array"),
    };
    let preconditions = match v.get("preconditions") {
        None => vec![],
        Some(Value::Array(ps)) => {
            let mut out = Vec::new();
            for (i, p) in ps.iter().enumerate() {
                let ppath = format!("{path}/preconditions/{i}");
                let Value::Object(m) = p else { return err(&ppath, "expected an object") };
                let (key, arg) = m.iter().next().ok_or_else(|| JsonError::Schema {
                    path: ppath.clone(),
                    msg: "empty precondition".into(),
                })?;
                let Value::Array(ab) = arg else { return err(&ppath, "expected [a, b]") };
                if ab.len() != 2 {
                    return err(&ppath, "expected [a, b]");
                }
                let (Value::String(a), Value::String(b)) = (&ab[0], &ab[1]) else {
                    return err(&ppath, "expected two labels");
                };
                out.push(match key.as_str() {
                    "parallel" => Precondition::Parallel(a.clone(), b.clone()),
                    "not_parallel" => Precondition::NotParallel(a.clone(), b.clone()),
                    other => return err(&ppath, format!("unknown precondition '{other}'")),
                });
            }
            out
        }
        Some(_) => return err(&format!("{path}/preconditions"), "expected an array"),
    };
    Ok(Program {
        name,
        inputs,
        steps,
        goals,
        budget: get_u64(v, "budget", path)? as u32,
        preconditions,
    })
}

// ---------------------------------------------------------------------------
// Traces and reports

pub fn trace_to_value(t: &Trace) -> Value {
    let mut objs = Map::new();
    for (label, obj) in &t.objects {
        objs.insert(label.clone(), geo_to_value(obj));
    }
    let mut samples = Map::new();
    for (label, p) in &t.samples {
        samples.insert(label.clone(), point_to_value(p));
    }
    json!({
        "program": t.program,
        "seed": t.seed,
        "move_count": t.move_count,
        "steps": t.steps.iter().map(|s| json!({
            "label": s.label, "op": s.op, "move": s.is_move,
        })).collect::<Vec<_>>(),
        "objects": Value::Object(objs),
        "samples": Value::Object(samples),
    })
}

pub fn trace_from_value(v: &Value, path: &str) -> Result<Trace, JsonError> {
    let Some(Value::Object(objs)) = v.get("objects") else {
        return err(path, "missing 'objects'");
    };
    let mut objects = IndexMap::new();
    for (label, ov) in objs {
        objects.insert(label.clone(), geo_from_value(ov, &format!("{path}/objects/{label}"))?);
    }
    let mut samples = IndexMap::new();
    if let Some(Value::Object(ss)) = v.get("samples") {
        for (label, sv) in ss {
            samples.insert(label.clone(), point_from_value(sv, &format!("{path}/samples/{label}"))?);
        }
    }
    let mut steps = Vec::new();
    if let Some(Value::Array(sv)) = v.get("steps") {
        for (i, s) in sv.iter().enumerate() {
            let spath = format!("{path}/steps/{i}");
            steps.push(StepRecord {
                label: get_str(s, "label", &spath)?,
                op: get_str(s, "op", &spath)?,
                is_move: matches!(s.get("move"), Some(Value::Bool(true))),
            });
        }
    }
    Ok(Trace {
        program: get_str(v, "program", path).unwrap_or_default(),
        objects,
        move_count: get_u64(v, "move_count", path)? as u32,
        steps,
        seed: get_u64(v, "seed", path).unwrap_or(0),
        samples,
    })
}

pub fn goal_result_to_value(r: &GoalResult) -> Value {
    let mut m = Map::new();
    m.insert("goal".into(), goal_to_value(&r.goal));
    m.insert("pass".into(), Value::Bool(r.pass));
    if let Some(res) = &r.residual {
        m.insert("residual".into(), cn_to_value(res));
    }
    if let Some(note) = &r.note {
        m.insert("note".into(), Value::String(note.clone()));
    }
    Value::Object(m)
}

pub fn report_to_value(r: &VerificationReport) -> Value {
    json!({
        "all_pass": r.all_pass(),
        "results": r.results.iter().map(goal_result_to_value).collect::<Vec<_>>(),
    })
}

pub fn check_report_to_value(r: &crate::catalog::CheckReport) -> Value {
    json!({
        "all_pass": r.all_pass(),
        "items": r.items.iter().map(|i| {
            let mut m = Map::new();
            m.insert("name".into(), Value::String(i.name.clone()));
            m.insert("pass".into(), Value::Bool(i.pass));
            if let Some(res) = &i.residual {
                m.insert("residual".into(), cn_to_value(res));
            }
            if let Some(note) = &i.note {
                m.insert("note".into(), Value::String(note.clone()));
            }
            Value::Object(m)
        }).collect::<Vec<_>>(),
    })
}

pub fn parse(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| JsonError::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::engine::{execute, Env};

    #[test]
    fn cn_round_trip_is_bit_exact() {
        let vals = [
            Cn::from_ratio(-7, 3).unwrap(),
            Cn::from_int(2).sqrt().unwrap(),
            &(&Cn::from_int(3).sqrt().unwrap() + &Cn::from_ratio(1, 2).unwrap())
                * &Cn::from_int(5).sqrt().unwrap(),
            (&Cn::from_int(5) + &Cn::from_int(2).sqrt().unwrap()).sqrt().unwrap(),
        ];
        for x in &vals {
            let s1 = cn_to_value(x).to_string();
            let x2 = cn_from_value(&parse(&s1).unwrap(), "").unwrap();
            assert_eq!(&x2, x);
            let s2 = cn_to_value(&x2).to_string();
            assert_eq!(s1, s2);
        }
    }

    #[test]
    fn huge_integers_survive() {
        let big = BigInt::from_str("123456789012345678901234567890123456789").unwrap();
        let x = Cn::from_big_ratio(BigRational::new(big, BigInt::from(7)));
        let v = cn_to_value(&x);
        let x2 = cn_from_value(&v, "").unwrap();
        assert_eq!(x, x2);
        assert!(v.to_string().contains("123456789012345678901234567890123456789"));
    }

    #[test]
    fn geo_round_trip() {
        let objs = [
            GeoObject::Point(Point::from_ints(3, -4)),
            GeoObject::Line(
                Line::through(&Point::from_ints(0, 0), &Point::from_ints(2, 5)).unwrap(),
            ),
            GeoObject::Circle(
                Circle::new(Point::from_ints(1, 1), Cn::from_int(2).sqrt().unwrap()).unwrap(),
            ),
        ];
        for o in &objs {
            let v = geo_to_value(o);
            let o2 = geo_from_value(&v, "").unwrap();
            assert_eq!(&o2, o);
            assert_eq!(geo_to_value(&o2).to_string(), v.to_string());
        }
    }

    #[test]
    fn program_round_trip() {
        for named in catalog::catalog() {
            let v = program_to_value(&named.program);
            let p2 = program_from_value(&v, "").unwrap();
            assert_eq!(p2, named.program, "{}", named.name());
            assert_eq!(program_to_value(&p2).to_string(), v.to_string());
        }
    }

    #[test]
    fn trace_round_trip() {
        let chain = catalog::build_four_tangent_circles();
        let trace = execute(&chain.program, &catalog::blank_board(), &Env::seeded(5)).unwrap();
        let v = trace_to_value(&trace);
        let t2 = trace_from_value(&v, "").unwrap();
        assert_eq!(t2.move_count, trace.move_count);
        assert_eq!(t2.objects, trace.objects);
        assert_eq!(trace_to_value(&t2).to_string(), v.to_string());
    }

    #[test]
    fn schema_errors_carry_paths() {
        let v = parse(r#"{"objects": {"A": {"pt": [{"rat": [1, 0]}, {"rat": [0, 1]}]}}}"#).unwrap();
        let e = board_from_value(&v, "").unwrap_err();
        let JsonError::Schema { path, .. } = e else { panic!("expected schema error") };
        assert!(path.contains("/objects/A/pt/0"), "{path}");
    }
}
