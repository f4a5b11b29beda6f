//! Deterministic SVG rendering of traces.
//!
//! Object classes follow the usual figure convention: initial and final
//! objects solid, intermediate constructions dotted, plus a grey accent
//! class for showcased circles. Coordinates are approximated only here, at a
//! configurable precision that never feeds back into any predicate; the same
//! trace and style always produce byte-identical output.

use crate::cn::Cn;
use crate::engine::{Label, Trace};
use crate::geom::{GeoObject, Line};
use crate::jsonio::JsonError;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectClass {
    Initial,
    Intermediate,
    Final,
    Accent,
}

impl ObjectClass {
    fn stroke_attrs(self) -> &'static str {
        match self {
            ObjectClass::Initial => "stroke=\"#000000\" stroke-width=\"1.5\"",
            ObjectClass::Intermediate => {
                "stroke=\"#666666\" stroke-width=\"1\" stroke-dasharray=\"4 3\""
            }
            ObjectClass::Final => "stroke=\"#000000\" stroke-width=\"2\"",
            ObjectClass::Accent => "stroke=\"#999999\" stroke-width=\"2\"",
        }
    }

    fn name(self) -> &'static str {
        match self {
            ObjectClass::Initial => "initial",
            ObjectClass::Intermediate => "intermediate",
            ObjectClass::Final => "final",
            ObjectClass::Accent => "accent",
        }
    }

    fn from_name(s: &str) -> Option<ObjectClass> {
        Some(match s {
            "initial" => ObjectClass::Initial,
            "intermediate" => ObjectClass::Intermediate,
            "final" => ObjectClass::Final,
            "accent" => ObjectClass::Accent,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug)]
pub struct RenderStyle {
    /// World-coordinate window (x0, y0, x1, y1).
    pub viewport: (f64, f64, f64, f64),
    pub scale: f64,
    pub labels: bool,
    /// Approximation precision in bits for exact coordinates.
    pub bits: u32,
    /// Per-label class overrides on top of the initial/intermediate/final
    /// default.
    pub classes: BTreeMap<Label, ObjectClass>,
}

impl Default for RenderStyle {
    fn default() -> RenderStyle {
        RenderStyle {
            viewport: (-6.0, -6.0, 10.0, 10.0),
            scale: 40.0,
            labels: true,
            bits: 40,
            classes: BTreeMap::new(),
        }
    }
}

impl RenderStyle {
    pub fn from_value(v: &Value, path: &str) -> Result<RenderStyle, JsonError> {
        let mut style = RenderStyle::default();
        if let Some(vp) = v.get("viewport") {
            let Value::Array(a) = vp else {
                return Err(JsonError::Schema {
                    path: format!("{path}/viewport"),
                    msg: "expected [x0, y0, x1, y1]".into(),
                });
            };
            if a.len() != 4 {
                return Err(JsonError::Schema {
                    path: format!("{path}/viewport"),
                    msg: "expected four numbers".into(),
                });
            }
            let f = |i: usize| -> Result<f64, JsonError> {
                a[i].as_f64().ok_or_else(|| JsonError::Schema {
                    path: format!("{path}/viewport/{i}"),
                    msg: "expected a number".into(),
                })
            };
            style.viewport = (f(0)?, f(1)?, f(2)?, f(3)?);
        }
        if let Some(s) = v.get("scale") {
            style.scale = s.as_f64().unwrap_or(style.scale);
        }
        if let Some(Value::Bool(b)) = v.get("labels") {
            style.labels = *b;
        }
        if let Some(b) = v.get("bits") {
            style.bits = b.as_u64().unwrap_or(style.bits as u64) as u32;
        }
        if let Some(Value::Object(m)) = v.get("classes") {
            for (label, c) in m {
                let Value::String(s) = c else {
                    return Err(JsonError::Schema {
                        path: format!("{path}/classes/{label}"),
                        msg: "expected a class name".into(),
                    });
                };
                let class = ObjectClass::from_name(s).ok_or_else(|| JsonError::Schema {
                    path: format!("{path}/classes/{label}"),
                    msg: format!("unknown class '{s}'"),
                })?;
                style.classes.insert(label.clone(), class);
            }
        }
        if style.viewport.2 <= style.viewport.0 || style.viewport.3 <= style.viewport.1 {
            return Err(JsonError::Schema {
                path: format!("{path}/viewport"),
                msg: "empty viewport".into(),
            });
        }
        Ok(style)
    }
}

fn approx_f64(x: &Cn, bits: u32) -> f64 {
    let iv = x.approx(bits);
    let two = BigRational::from_integer(2.into());
    ((iv.lo() + iv.hi()) / two).to_f64().unwrap_or(f64::NAN)
}

fn fmt_f(v: f64) -> String {
    format!("{v:.4}")
}

/// Default classification: inputs are initial, drawn objects intermediate,
/// the last drawn object final. Style overrides win.
fn classify(trace: &Trace, style: &RenderStyle) -> BTreeMap<Label, ObjectClass> {
    let mut out = BTreeMap::new();
    let mut last_drawn: Option<&Label> = None;
    for rec in &trace.steps {
        let class = if rec.op == "input" {
            ObjectClass::Initial
        } else {
            ObjectClass::Intermediate
        };
        out.insert(rec.label.clone(), class);
        if rec.is_move {
            last_drawn = Some(&rec.label);
        }
    }
    if let Some(label) = last_drawn {
        out.insert(label.clone(), ObjectClass::Final);
    }
    for (label, class) in &style.classes {
        out.insert(label.clone(), *class);
    }
    out
}

/// Clip the infinite line to the viewport; `None` when it misses entirely.
fn clip_line(l: &Line, vp: (f64, f64, f64, f64), bits: u32) -> Option<(f64, f64, f64, f64)> {
    let a = approx_f64(l.a(), bits);
    let b = approx_f64(l.b(), bits);
    let c = approx_f64(l.c(), bits);
    // Base point and direction in f64.
    let n2 = a * a + b * b;
    let (px, py) = (-a * c / n2, -b * c / n2);
    let (dx, dy) = (b, -a);
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    // Liang–Barsky against each viewport edge.
    for (p, q) in [
        (-dx, px - vp.0),
        (dx, vp.2 - px),
        (-dy, py - vp.1),
        (dy, vp.3 - py),
    ] {
        if p.abs() < 1e-12 {
            if q < 0.0 {
                return None;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                t0 = t0.max(r);
            } else {
                t1 = t1.min(r);
            }
        }
    }
    if t0 > t1 {
        return None;
    }
    Some((px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy))
}

/// Render a trace to a standalone SVG document. Returns the document and
/// any clipping warnings (one per object that fell fully outside the
/// viewport).
pub fn render_svg(trace: &Trace, style: &RenderStyle) -> (String, Vec<String>) {
    let (x0, y0, x1, y1) = style.viewport;
    let w = (x1 - x0) * style.scale;
    let h = (y1 - y0) * style.scale;
    let tx = |x: f64| (x - x0) * style.scale;
    let ty = |y: f64| (y1 - y) * style.scale;
    let classes = classify(trace, style);
    let mut warnings = Vec::new();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        fmt_f(w),
        fmt_f(h),
        fmt_f(w),
        fmt_f(h)
    );
    let _ = writeln!(
        svg,
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
        fmt_f(w),
        fmt_f(h)
    );

    // Lines and circles first, points and labels on top.
    for (label, obj) in &trace.objects {
        let class = classes.get(label).copied().unwrap_or(ObjectClass::Intermediate);
        match obj {
            GeoObject::Line(l) => match clip_line(l, style.viewport, style.bits) {
                Some((ax, ay, bx, by)) => {
                    let _ = writeln!(
                        svg,
                        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" fill=\"none\" {} class=\"{}\"/>",
                        fmt_f(tx(ax)),
                        fmt_f(ty(ay)),
                        fmt_f(tx(bx)),
                        fmt_f(ty(by)),
                        class.stroke_attrs(),
                        class.name()
                    );
                }
                None => warnings.push(format!("line {label} lies outside the viewport; clipped")),
            },
            GeoObject::Circle(c) => {
                let cx = approx_f64(&c.center().x, style.bits);
                let cy = approx_f64(&c.center().y, style.bits);
                let r = approx_f64(c.radius(), style.bits);
                if cx + r < x0 || cx - r > x1 || cy + r < y0 || cy - r > y1 {
                    warnings.push(format!("circle {label} lies outside the viewport; clipped"));
                    continue;
                }
                let _ = writeln!(
                    svg,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" {} class=\"{}\"/>",
                    fmt_f(tx(cx)),
                    fmt_f(ty(cy)),
                    fmt_f(r * style.scale),
                    class.stroke_attrs(),
                    class.name()
                );
            }
            GeoObject::Point(_) => {}
        }
    }
    for (label, obj) in &trace.objects {
        let GeoObject::Point(p) = obj else { continue };
        let px = approx_f64(&p.x, style.bits);
        let py = approx_f64(&p.y, style.bits);
        if px < x0 || px > x1 || py < y0 || py > y1 {
            warnings.push(format!("point {label} lies outside the viewport; clipped"));
            continue;
        }
        let _ = writeln!(
            svg,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"2\" fill=\"#000000\" class=\"point\"/>",
            fmt_f(tx(px)),
            fmt_f(ty(py))
        );
        if style.labels {
            let _ = writeln!(
                svg,
                "  <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"12\" fill=\"#000000\">{}</text>",
                fmt_f(tx(px) + 4.0),
                fmt_f(ty(py) - 4.0),
                xml_escape(label)
            );
        }
    }
    svg.push_str("</svg>\n");
    (svg, warnings)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{blank_board, build_one_circle, build_two_tangent_circles, fig1_board};
    use crate::catalog::{build_apollonius_seven, fig2_345_board};
    use crate::engine::{execute, Env};

    fn fig1_trace() -> Trace {
        let one = build_one_circle();
        let env = Env::seeded(1)
            .with_override("A", crate::geom::Point::from_ints(0, 0))
            .with_override("Z", crate::geom::Point::from_ints(1, 0));
        let board = execute(&one.program, &blank_board(), &env).unwrap().as_board();
        let two = build_two_tangent_circles();
        let env = Env::seeded(1).with_override("B", crate::geom::Point::from_ints(3, 0));
        execute(&two.program, &board, &env).unwrap()
    }

    #[test]
    fn renders_two_tangent_circles() {
        let trace = fig1_trace();
        let (svg, warnings) = render_svg(&trace, &RenderStyle::default());
        assert!(warnings.is_empty(), "{warnings:?}");
        assert_eq!(svg.matches("<circle").count() - svg.matches("r=\"2\"").count(), 2);
        assert_eq!(svg.matches("<line").count(), 1);
        for label in ["A", "B", "Z"] {
            assert!(svg.contains(&format!(">{label}</text>")), "missing label {label}");
        }
        assert!(svg.contains("stroke-dasharray"), "line should be dotted by default");
    }

    #[test]
    fn byte_identical_rendering() {
        let trace = fig1_trace();
        let style = RenderStyle::default();
        let (svg1, _) = render_svg(&trace, &style);
        let (svg2, _) = render_svg(&trace, &style);
        assert_eq!(svg1, svg2);
    }

    #[test]
    fn accent_class_override() {
        let seven = build_apollonius_seven();
        let trace = execute(&seven.program, &fig2_345_board(), &Env::seeded(0)).unwrap();
        let mut style = RenderStyle::default();
        style.classes.insert("O_S".into(), ObjectClass::Accent);
        let (svg, _) = render_svg(&trace, &style);
        assert!(svg.contains("class=\"accent\""));
        assert!(svg.contains("#999999"));
    }

    #[test]
    fn empty_trace_is_valid_svg() {
        let trace = Trace {
            program: "empty".into(),
            objects: Default::default(),
            move_count: 0,
            steps: vec![],
            seed: 0,
            samples: Default::default(),
        };
        let (svg, warnings) = render_svg(&trace, &RenderStyle::default());
        assert!(warnings.is_empty());
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn out_of_view_objects_warn() {
        let mut style = RenderStyle::default();
        style.viewport = (100.0, 100.0, 101.0, 101.0);
        let trace = fig1_trace();
        let (_, warnings) = render_svg(&trace, &style);
        assert!(!warnings.is_empty());
    }

    #[test]
    fn fig1_board_renders_without_warnings() {
        // Render a board-only trace for the canonical two-circle figure.
        let board = fig1_board();
        let trace = Trace {
            program: "fig1".into(),
            objects: board.objects,
            move_count: 0,
            steps: vec![],
            seed: 0,
            samples: Default::default(),
        };
        let (svg, warnings) = render_svg(&trace, &RenderStyle::default());
        assert!(warnings.is_empty(), "{warnings:?}");
        assert!(svg.contains("<line"));
    }
}
