//! Construction programs and the move model.
//!
//! A program is a sequence of steps over a board of named objects. Drawing a
//! line or a circle costs one move; placing points — free points, points on
//! objects, intersection picks — costs nothing. Lines are endless, so
//! "extending" a segment is not a step at all: a line through two existing
//! points is just drawn once.
//!
//! The executor evaluates a program into a [`Trace`] with exact coordinates
//! for every object, and [`verify`] checks goals exactly, attaching the
//! nonzero residual quantity to every failure.

mod exec;
mod verify;

pub use exec::{execute, sample_free_point};
pub use verify::{verify, GoalResult, VerificationReport};

use crate::geom::GeoObject;
use crate::geom::Point;
use indexmap::IndexMap;
use num_rational::BigRational;
use std::collections::BTreeMap;
use thiserror::Error;

pub type Label = String;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExecError {
    #[error("step {step}: unknown label '{label}'")]
    UnknownLabel { step: Label, label: Label },
    #[error("duplicate label '{0}'")]
    DuplicateLabel(Label),
    #[error("missing input '{0}' on the board")]
    MissingInput(Label),
    #[error("input '{label}' is a {got}, expected {want}")]
    InputKindMismatch { label: Label, want: String, got: String },
    #[error("step {step}: reference '{label}' is a {got}, expected {want}")]
    RefKindMismatch { step: Label, label: Label, want: String, got: String },
    #[error("step {step}: requested intersection branch does not exist: {detail}")]
    BranchMissing { step: Label, detail: String },
    #[error("step {step}: invalid branch request: {detail}")]
    BranchInvalid { step: Label, detail: String },
    #[error("step {step}: degenerate drawing: {detail}")]
    DegenerateDraw { step: Label, detail: String },
    #[error("step {step}: generic position not found after {retries} samples")]
    SamplerExhausted { step: Label, retries: u32 },
    #[error("step {step}: override does not satisfy the step's constraints: {detail}")]
    OverrideInvalid { step: Label, detail: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("program declares {moves} moves but budget {budget}")]
    OverBudget { moves: u32, budget: u32 },
    #[error("empty sample region")]
    EmptyRegion,
}

/// An axis-aligned rectangle with rational corners, used as a sampling
/// region hint for free points.
#[derive(Clone, Debug, PartialEq)]
pub struct Rect {
    pub x0: BigRational,
    pub y0: BigRational,
    pub x1: BigRational,
    pub y1: BigRational,
}

impl Rect {
    pub fn from_ints(x0: i64, y0: i64, x1: i64, y1: i64) -> Rect {
        Rect {
            x0: BigRational::from_integer(x0.into()),
            y0: BigRational::from_integer(y0.into()),
            x1: BigRational::from_integer(x1.into()),
            y1: BigRational::from_integer(y1.into()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.x1 < self.x0 || self.y1 < self.y0
    }
}

/// Non-degeneracy predicates a sampled point must satisfy. These are program
/// data, not executor heuristics: each "arbitrary" choice in a construction
/// states its own side conditions.
#[derive(Clone, Debug, PartialEq)]
pub enum Constraint {
    /// Differs from a named point.
    NotEqual(Label),
    /// Not incident to a named object.
    NotOn(Label),
    /// Strictly positive power with respect to a named circle.
    Outside(Label),
    /// Strictly negative power with respect to a named circle.
    Inside(Label),
    /// Not at the same distance from `center` as `through` is (rules out a
    /// radius coincidence without naming an undrawn circle).
    NotEquidistant { center: Label, through: Label },
    /// Strictly on the far side of `past` as seen from `from`:
    /// `(p − past) · (past − from) > 0`.
    Beyond { past: Label, from: Label },
    /// Strictly farther from `center` than `through` is.
    FartherThan { center: Label, through: Label },
}

/// Which intersection to take. `Lo`/`Hi` order line–circle intersections
/// along the line's drawing direction; `Left`/`Right` classify circle–circle
/// intersections by the sign of the cross product against the center ray of
/// the step's first argument toward its second; `Only` demands a unique
/// (tangent or line–line) intersection; `Other` picks the intersection
/// distinct from a named point already known to lie on both objects — the
/// stable way to say "the line through P meets the circle again at ...".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Branch {
    Lo,
    Hi,
    Left,
    Right,
    Only,
    Other(Label),
}

/// Placement rule for a point constrained to an object.
#[derive(Clone, Debug, PartialEq)]
pub enum OnWhich {
    /// Deterministically sampled rational parameter.
    Sampled,
    /// Explicit rational parameter.
    Param(BigRational),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    /// A free point, sampled in `region` unless overridden.
    Free {
        label: Label,
        region: Rect,
        avoid: Vec<Constraint>,
    },
    /// A free point constrained to an existing object.
    On {
        label: Label,
        object: Label,
        which: OnWhich,
        avoid: Vec<Constraint>,
    },
    /// An intersection point of two existing objects.
    Intersect {
        label: Label,
        a: Label,
        b: Label,
        branch: Branch,
    },
    /// Draw the line through two existing points (one move).
    Line { label: Label, p: Label, q: Label },
    /// Draw the circle centered at one existing point through another
    /// (one move).
    Circle {
        label: Label,
        center: Label,
        through: Label,
    },
}

impl Step {
    pub fn label(&self) -> &Label {
        match self {
            Step::Free { label, .. }
            | Step::On { label, .. }
            | Step::Intersect { label, .. }
            | Step::Line { label, .. }
            | Step::Circle { label, .. } => label,
        }
    }

    /// Drawing costs a move; points are free.
    pub fn is_move(&self) -> bool {
        matches!(self, Step::Line { .. } | Step::Circle { .. })
    }

    pub fn op_name(&self) -> &'static str {
        match self {
            Step::Free { .. } => "free",
            Step::On { .. } => "on",
            Step::Intersect { .. } => "isect",
            Step::Line { .. } => "line",
            Step::Circle { .. } => "circle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjKind {
    Point,
    Line,
    Circle,
}

impl ObjKind {
    pub fn name(&self) -> &'static str {
        match self {
            ObjKind::Point => "point",
            ObjKind::Line => "line",
            ObjKind::Circle => "circle",
        }
    }

    pub fn matches(&self, obj: &GeoObject) -> bool {
        matches!(
            (self, obj),
            (ObjKind::Point, GeoObject::Point(_))
                | (ObjKind::Line, GeoObject::Line(_))
                | (ObjKind::Circle, GeoObject::Circle(_))
        )
    }
}

/// A pre-existing object the program expects on the board. Lines may declare
/// an orientation through two named input points; `Lo`/`Hi` intersection
/// branches on that line then order along that direction.
#[derive(Clone, Debug, PartialEq)]
pub struct InputDecl {
    pub label: Label,
    pub kind: ObjKind,
    pub orient: Option<(Label, Label)>,
}

impl InputDecl {
    pub fn point(label: &str) -> InputDecl {
        InputDecl { label: label.into(), kind: ObjKind::Point, orient: None }
    }

    pub fn circle(label: &str) -> InputDecl {
        InputDecl { label: label.into(), kind: ObjKind::Circle, orient: None }
    }

    pub fn line(label: &str, from: &str, to: &str) -> InputDecl {
        InputDecl {
            label: label.into(),
            kind: ObjKind::Line,
            orient: Some((from.into(), to.into())),
        }
    }
}

/// Board-dependent applicability requirements. Each is checked as soon as
/// both referenced objects exist (inputs count from the start), so a
/// precondition may mention a line the program itself draws.
#[derive(Clone, Debug, PartialEq)]
pub enum Precondition {
    Parallel(Label, Label),
    NotParallel(Label, Label),
}

/// An exactly checkable claim about a trace.
#[derive(Clone, Debug, PartialEq)]
pub enum GoalSpec {
    /// `target` is tangent to every listed circle.
    TangentTo { circles: Vec<Label>, target: Label },
    PassesThrough { point: Label, object: Label },
    MoveBudget(u32),
    Collinear(Label, Label, Label),
    RadiusEquals(Label, Label),
    /// Inversion through `inv` exchanges `a` and `b`.
    InversionSwaps { inv: Label, a: Label, b: Label },
    /// Inversion through `inv` fixes `o`.
    InversionFixes { inv: Label, o: Label },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Program {
    pub name: String,
    pub inputs: Vec<InputDecl>,
    pub steps: Vec<Step>,
    pub goals: Vec<GoalSpec>,
    pub budget: u32,
    pub preconditions: Vec<Precondition>,
}

impl Program {
    /// Number of drawing steps; static, no execution.
    pub fn count_moves(&self) -> u32 {
        self.steps.iter().filter(|s| s.is_move()).count() as u32
    }

    /// Structural well-formedness: unique labels, references to earlier
    /// labels only, move count within the declared budget.
    pub fn validate(&self) -> Result<(), ExecError> {
        let mut seen: Vec<&Label> = Vec::new();
        for decl in &self.inputs {
            if seen.contains(&&decl.label) {
                return Err(ExecError::DuplicateLabel(decl.label.clone()));
            }
            seen.push(&decl.label);
        }
        let input_count = seen.len();
        for decl in &self.inputs {
            if let Some((p, q)) = &decl.orient {
                for l in [p, q] {
                    if !self.inputs.iter().any(|d| &d.label == l) {
                        return Err(ExecError::UnknownLabel {
                            step: decl.label.clone(),
                            label: l.clone(),
                        });
                    }
                }
            }
        }
        for step in &self.steps {
            let refs: Vec<&Label> = match step {
                Step::Free { avoid, .. } => constraint_refs(avoid),
                Step::On { object, avoid, .. } => {
                    let mut r = vec![object];
                    r.extend(constraint_refs(avoid));
                    r
                }
                Step::Intersect { a, b, branch, .. } => {
                    let mut r = vec![a, b];
                    if let Branch::Other(l) = branch {
                        r.push(l);
                    }
                    r
                }
                Step::Line { p, q, .. } => vec![p, q],
                Step::Circle { center, through, .. } => vec![center, through],
            };
            for r in refs {
                if !seen.contains(&r) {
                    return Err(ExecError::UnknownLabel {
                        step: step.label().clone(),
                        label: r.clone(),
                    });
                }
            }
            if seen.contains(&step.label()) {
                return Err(ExecError::DuplicateLabel(step.label().clone()));
            }
            seen.push(step.label());
        }
        let all: Vec<&Label> = seen;
        let _ = input_count;
        for goal in &self.goals {
            for r in goal_refs(goal) {
                if !all.contains(&r) {
                    return Err(ExecError::UnknownLabel { step: "<goal>".into(), label: r.clone() });
                }
            }
        }
        for pre in &self.preconditions {
            let (Precondition::Parallel(a, b) | Precondition::NotParallel(a, b)) = pre;
            for l in [a, b] {
                if !all.contains(&l) {
                    return Err(ExecError::UnknownLabel { step: "<precondition>".into(), label: l.clone() });
                }
            }
        }
        let moves = self.count_moves();
        if moves > self.budget {
            return Err(ExecError::OverBudget { moves, budget: self.budget });
        }
        Ok(())
    }
}

fn constraint_refs(cs: &[Constraint]) -> Vec<&Label> {
    let mut out = Vec::new();
    for c in cs {
        match c {
            Constraint::NotEqual(l)
            | Constraint::NotOn(l)
            | Constraint::Outside(l)
            | Constraint::Inside(l) => out.push(l),
            Constraint::NotEquidistant { center, through } => {
                out.push(center);
                out.push(through);
            }
            Constraint::Beyond { past, from } => {
                out.push(past);
                out.push(from);
            }
            Constraint::FartherThan { center, through } => {
                out.push(center);
                out.push(through);
            }
        }
    }
    out
}

pub(crate) fn goal_refs(goal: &GoalSpec) -> Vec<&Label> {
    match goal {
        GoalSpec::TangentTo { circles, target } => {
            let mut r: Vec<&Label> = circles.iter().collect();
            r.push(target);
            r
        }
        GoalSpec::PassesThrough { point, object } => vec![point, object],
        GoalSpec::MoveBudget(_) => vec![],
        GoalSpec::Collinear(a, b, c) => vec![a, b, c],
        GoalSpec::RadiusEquals(a, b) => vec![a, b],
        GoalSpec::InversionSwaps { inv, a, b } => vec![inv, a, b],
        GoalSpec::InversionFixes { inv, o } => vec![inv, o],
    }
}

/// Named objects a program starts from.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Board {
    pub objects: IndexMap<Label, GeoObject>,
}

impl Board {
    pub fn new() -> Board {
        Board::default()
    }

    pub fn insert(&mut self, label: &str, obj: GeoObject) {
        self.objects.insert(label.to_string(), obj);
    }

    pub fn get(&self, label: &str) -> Option<&GeoObject> {
        self.objects.get(label)
    }
}

/// Execution environment: the sampling seed plus per-label overrides for
/// free points.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub seed: u64,
    pub overrides: BTreeMap<Label, Point>,
}

impl Env {
    pub fn seeded(seed: u64) -> Env {
        Env { seed, overrides: BTreeMap::new() }
    }

    pub fn with_override(mut self, label: &str, p: Point) -> Env {
        self.overrides.insert(label.to_string(), p);
        self
    }
}

/// Per-step provenance kept in a trace.
#[derive(Clone, Debug, PartialEq)]
pub struct StepRecord {
    pub label: Label,
    pub op: String,
    pub is_move: bool,
}

/// The evaluated board: every object exact, move count equal to the number
/// of drawing steps executed.
#[derive(Clone, Debug)]
pub struct Trace {
    pub program: String,
    pub objects: IndexMap<Label, GeoObject>,
    pub move_count: u32,
    pub steps: Vec<StepRecord>,
    pub seed: u64,
    /// Sampled (or overridden) coordinates of free points, by label.
    pub samples: IndexMap<Label, Point>,
}

impl Trace {
    pub fn get(&self, label: &str) -> Option<&GeoObject> {
        self.objects.get(label)
    }

    /// Reuse the evaluated objects as the starting board of a follow-up
    /// program.
    pub fn as_board(&self) -> Board {
        Board { objects: self.objects.clone() }
    }
}
