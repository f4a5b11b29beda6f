//! Exhaustive minimal-move search.
//!
//! Iterative-deepening enumeration of drawing sequences over a point pool:
//! the board's named points, every intersection point of objects on the
//! board, and a fixed set of pre-sampled generic points standing in for
//! "arbitrary" choices. Drawing an object value-equal to one already on the
//! board is pruned (a shorter program reaches the same boards), and board
//! states are deduplicated per deepening round by a canonical digest of
//! their object serializations.
//!
//! Goals are tested exactly on every drawn object. A found program is only
//! reported after it re-verifies under fresh generic samples; an exhaustion
//! result can be turned into a machine-readable certificate that records the
//! move grammar, seeds, caps and the genericity assumptions it rests on.

use crate::cn::Cn;
use crate::engine::{Board, Label};
use crate::geom::{
    intersect_circles, intersect_line_circle, intersect_lines, tangency, Circle,
    CircleCircleIntersection, GeoObject, Line, LineCircleIntersection, LineLineIntersection, Point,
};
use crate::jsonio::geo_canonical_string;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Version tag for the move grammar; certificates embed it so their claims
/// stay pinned to the enumeration rules that produced them.
///
/// Grammar v1: moves are lines through two distinct pool points (unordered)
/// and circles on ordered (center, through) pool pairs; the pool is named
/// input points, all intersection points of board objects, and the task's
/// pre-sampled generic points (available from depth 0); redrawing an object
/// already on the board is never a move; goal objects must differ from every
/// input object.
pub const GRAMMAR_VERSION: &str = "lines+circles/pool=named+isect+generic/v1";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("task board is missing circle '{0}'")]
    MissingCircle(Label),
    #[error("could not sample {wanted} generic points ({got} placed)")]
    GenericSampling { wanted: u32, got: u32 },
    #[error("exhaustion incomplete: {0}")]
    IncompleteExhaustion(String),
}

/// What the enumerator is looking for, tested on each drawn object.
#[derive(Clone, Debug, PartialEq)]
pub enum SearchGoal {
    /// Any circle distinct from every input object.
    AnyCircle,
    /// A circle, distinct from every input object, tangent to each listed
    /// input circle — at pairwise distinct points when `distinct_points`.
    TangentCircle { to: Vec<Label>, distinct_points: bool },
}

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub name: String,
    pub board: Board,
    pub goal: SearchGoal,
    pub max_moves: u32,
    /// Number of pre-sampled generic free points in the pool.
    pub generics: u32,
    pub seed: u64,
    pub node_cap: u64,
    pub time_cap: Option<Duration>,
    pub pruning: bool,
    /// Candidate objects whose coordinates exceed this tower depth are
    /// pruned (and counted; their presence flags the exhaustion as partial).
    pub tower_cap: u32,
}

impl SearchTask {
    pub fn new(name: &str, board: Board, goal: SearchGoal, max_moves: u32) -> SearchTask {
        SearchTask {
            name: name.into(),
            board,
            goal,
            max_moves,
            generics: 2,
            seed: 0,
            node_cap: 50_000_000,
            time_cap: None,
            pruning: true,
            tower_cap: 8,
        }
    }
}

/// How a pool point arose; enough to replay a program on a fresh board.
#[derive(Clone, Debug, PartialEq)]
pub enum PointRef {
    Named(Label),
    Generic(u32),
    Isect { a: ObjRef, b: ObjRef, pick: &'static str },
}

#[derive(Clone, Debug, PartialEq)]
pub enum ObjRef {
    Input(Label),
    Move(u32),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MoveKind {
    Line,
    Circle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MoveDesc {
    pub kind: MoveKind,
    pub p1: PointRef,
    pub p2: PointRef,
}

#[derive(Clone, Debug)]
pub struct FoundProgram {
    pub moves: Vec<MoveDesc>,
    pub board_digest: String,
    /// Canonical serialization of the drawn object that satisfied the goal.
    pub goal_object: String,
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found {
        depth: u32,
        programs: Vec<FoundProgram>,
        nodes: u64,
        rejected_by_reverify: u32,
    },
    Exhausted {
        depth: u32,
        nodes: u64,
        generics: u32,
        caveat: bool,
        notes: Vec<String>,
    },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. } | SearchOutcome::Exhausted { nodes, .. } => *nodes,
        }
    }
}

#[derive(Clone)]
struct PoolPoint {
    point: Point,
    origin: PointRef,
}

#[derive(Clone)]
struct BoardState {
    /// Input objects first, then drawn ones.
    objects: Vec<(GeoObject, ObjRef)>,
    points: Vec<PoolPoint>,
    moves: Vec<MoveDesc>,
}

struct Ctx<'a> {
    task: &'a SearchTask,
    targets: Vec<(Label, Circle)>,
    input_count: usize,
    nodes: u64,
    tower_pruned: u64,
    started: Instant,
    capped: bool,
    memo: HashMap<String, u32>,
    found: Vec<FoundProgram>,
}

fn point_tower_depth(p: &Point) -> u32 {
    p.x.tower_depth().max(p.y.tower_depth())
}

fn object_tower_depth(obj: &GeoObject) -> u32 {
    match obj {
        GeoObject::Point(p) => point_tower_depth(p),
        GeoObject::Line(l) => l
            .a()
            .tower_depth()
            .max(l.b().tower_depth())
            .max(l.c().tower_depth()),
        GeoObject::Circle(c) => point_tower_depth(c.center()).max(c.radius().tower_depth()),
    }
}

/// Digest of an object set, independent of insertion order.
pub fn canonical_hash(objects: impl Iterator<Item = GeoObject>) -> String {
    let mut lines: Vec<String> = objects.map(|o| geo_canonical_string(&o)).collect();
    lines.sort();
    let mut h = Sha256::new();
    for l in &lines {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    hex_digest(h)
}

fn hex_digest(h: Sha256) -> String {
    let out = h.finalize();
    let mut s = String::with_capacity(64);
    for b in out {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

fn state_digest(state: &BoardState) -> String {
    canonical_hash(state.objects.iter().map(|(o, _)| o.clone()))
}

/// All intersection points of two objects, with replayable pick labels.
fn intersections(a: &GeoObject, b: &GeoObject, ra: &ObjRef, rb: &ObjRef) -> Vec<(Point, PointRef)> {
    let mk = |pick: &'static str| PointRef::Isect { a: ra.clone(), b: rb.clone(), pick };
    match (a, b) {
        (GeoObject::Line(l1), GeoObject::Line(l2)) => match intersect_lines(l1, l2) {
            LineLineIntersection::Point(p) => vec![(p, mk("only"))],
            _ => vec![],
        },
        (GeoObject::Line(l), GeoObject::Circle(c)) | (GeoObject::Circle(c), GeoObject::Line(l)) => {
            match intersect_line_circle(l, c) {
                LineCircleIntersection::Empty => vec![],
                LineCircleIntersection::Tangent(p) => vec![(p, mk("only"))],
                LineCircleIntersection::Secant { lo, hi } => {
                    vec![(lo, mk("lo")), (hi, mk("hi"))]
                }
            }
        }
        (GeoObject::Circle(c1), GeoObject::Circle(c2)) => match intersect_circles(c1, c2) {
            Ok(CircleCircleIntersection::Tangent(p)) => vec![(p, mk("only"))],
            Ok(CircleCircleIntersection::Secant { left, right }) => {
                vec![(left, mk("left")), (right, mk("right"))]
            }
            _ => vec![],
        },
        _ => vec![],
    }
}

fn add_point(points: &mut Vec<PoolPoint>, p: Point, origin: PointRef) {
    if points.iter().all(|q| q.point != p) {
        points.push(PoolPoint { point: p, origin });
    }
}

fn initial_state(task: &SearchTask, generics: &[Point]) -> BoardState {
    let mut objects = Vec::new();
    let mut points = Vec::new();
    for (label, obj) in &task.board.objects {
        match obj {
            GeoObject::Point(p) => add_point(&mut points, p.clone(), PointRef::Named(label.clone())),
            _ => objects.push((obj.clone(), ObjRef::Input(label.clone()))),
        }
    }
    let refs: Vec<ObjRef> = objects.iter().map(|(_, r)| r.clone()).collect();
    for i in 0..objects.len() {
        for j in (i + 1)..objects.len() {
            for (p, origin) in intersections(&objects[i].0, &objects[j].0, &refs[i], &refs[j]) {
                add_point(&mut points, p, origin);
            }
        }
    }
    for (k, g) in generics.iter().enumerate() {
        add_point(&mut points, g.clone(), PointRef::Generic(k as u32));
    }
    BoardState { objects, points, moves: Vec::new() }
}

/// Deterministically sample the task's generic points: rational coordinates,
/// pairwise distinct, off every input object and distinct from named points.
fn sample_generics(task: &SearchTask, seed: u64) -> Result<Vec<Point>, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: u32 = 1 << 10;
    let mut out: Vec<Point> = Vec::new();
    let mut attempts = 0;
    while (out.len() as u32) < task.generics {
        attempts += 1;
        if attempts > 64 * (task.generics + 1) {
            return Err(SearchError::GenericSampling {
                wanted: task.generics,
                got: out.len() as u32,
            });
        }
        let mut coord = || {
            let k = rng.gen_range(0..=8 * grid);
            Cn::from_big_ratio(BigRational::new(BigInt::from(k), BigInt::from(grid)))
        };
        let p = Point::new(coord(), coord());
        let clashes = task.board.objects.values().any(|obj| match obj {
            GeoObject::Point(q) => q == &p,
            other => other.passes_through(&p),
        }) || out.iter().any(|q| q == &p);
        if !clashes {
            out.push(p);
        }
    }
    Ok(out)
}

fn goal_hit(
    goal: &SearchGoal,
    targets: &[(Label, Circle)],
    inputs: &[(GeoObject, ObjRef)],
    obj: &GeoObject,
) -> bool {
    // A goal object must be new: value-distinct from every input object.
    if inputs.iter().any(|(o, _)| o == obj) {
        return false;
    }
    match goal {
        SearchGoal::AnyCircle => matches!(obj, GeoObject::Circle(_)),
        SearchGoal::TangentCircle { distinct_points, .. } => {
            let GeoObject::Circle(c) = obj else { return false };
            let mut pts: Vec<Point> = Vec::new();
            for (_, target) in targets {
                match tangency(c, target) {
                    Ok(t) if t.is_tangent() => pts.push(t.point().unwrap().clone()),
                    _ => return false,
                }
            }
            if *distinct_points {
                for i in 0..pts.len() {
                    for j in (i + 1)..pts.len() {
                        if pts[i] == pts[j] {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }
}

fn gen_moves(state: &BoardState) -> Vec<(MoveKind, usize, usize)> {
    let n = state.points.len();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((MoveKind::Line, i, j));
        }
    }
    for c in 0..n {
        for t in 0..n {
            if c != t {
                out.push((MoveKind::Circle, c, t));
            }
        }
    }
    out
}

fn build_object(state: &BoardState, kind: MoveKind, i: usize, j: usize) -> Option<GeoObject> {
    let (p, q) = (&state.points[i].point, &state.points[j].point);
    match kind {
        MoveKind::Line => Line::through(p, q).ok().map(GeoObject::Line),
        MoveKind::Circle => Circle::center_through(p, q).ok().map(GeoObject::Circle),
    }
}

fn apply_move(state: &BoardState, kind: MoveKind, i: usize, j: usize, obj: GeoObject) -> BoardState {
    let mut next = state.clone();
    let mref = ObjRef::Move(state.moves.len() as u32);
    for (existing, eref) in &state.objects {
        for (p, origin) in intersections(existing, &obj, eref, &mref) {
            add_point(&mut next.points, p, origin);
        }
    }
    next.objects.push((obj, mref));
    next.moves.push(MoveDesc {
        kind,
        p1: state.points[i].origin.clone(),
        p2: state.points[j].origin.clone(),
    });
    next
}

/// Depth-limited exhaustive sweep. Returns `false` when a resource cap cut
/// the sweep short.
fn dfs(ctx: &mut Ctx, state: &BoardState, remaining: u32) -> bool {
    for (kind, i, j) in gen_moves(state) {
        ctx.nodes += 1;
        if ctx.nodes > ctx.task.node_cap {
            ctx.capped = true;
            return false;
        }
        if ctx.nodes % 1024 == 0 {
            if let Some(cap) = ctx.task.time_cap {
                if ctx.started.elapsed() > cap {
                    ctx.capped = true;
                    return false;
                }
            }
        }
        let Some(obj) = build_object(state, kind, i, j) else {
            continue;
        };
        if object_tower_depth(&obj) > ctx.task.tower_cap {
            ctx.tower_pruned += 1;
            continue;
        }
        let duplicate = state.objects.iter().any(|(o, _)| o == &obj);
        if duplicate && ctx.task.pruning {
            continue;
        }
        if goal_hit(&ctx.task.goal, &ctx.targets, &state.objects[..ctx.input_count], &obj) {
            let mut moves = state.moves.clone();
            moves.push(MoveDesc {
                kind,
                p1: state.points[i].origin.clone(),
                p2: state.points[j].origin.clone(),
            });
            ctx.found.push(FoundProgram {
                moves,
                board_digest: canonical_hash(
                    state
                        .objects
                        .iter()
                        .map(|(o, _)| o.clone())
                        .chain(std::iter::once(obj.clone())),
                ),
                goal_object: geo_canonical_string(&obj),
            });
            continue;
        }
        if remaining > 1 {
            let next = apply_move(state, kind, i, j, obj);
            if ctx.task.pruning {
                let digest = state_digest(&next);
                match ctx.memo.get(&digest) {
                    Some(&seen) if seen >= remaining - 1 => continue,
                    _ => {
                        ctx.memo.insert(digest, remaining - 1);
                    }
                }
            }
            if !dfs(ctx, &next, remaining - 1) {
                return false;
            }
        }
    }
    true
}

/// Replay a found program against fresh generic points; `None` when a pick
/// fails to resolve, `Some(goal verdict)` otherwise.
fn replay(
    task: &SearchTask,
    moves: &[MoveDesc],
    generics: &[Point],
    targets: &[(Label, Circle)],
) -> Option<bool> {
    let mut state = initial_state(task, generics);
    let input_count = state.objects.len();
    let mut last: Option<GeoObject> = None;
    for mv in moves {
        let resolve_obj = |state: &BoardState, r: &ObjRef| -> Option<GeoObject> {
            match r {
                ObjRef::Input(label) => task.board.get(label).cloned(),
                ObjRef::Move(i) => state
                    .objects
                    .get(input_count + *i as usize)
                    .map(|(o, _)| o.clone()),
            }
        };
        let resolve_pt = |state: &BoardState, r: &PointRef| -> Option<Point> {
            match r {
                PointRef::Named(label) => match task.board.get(label) {
                    Some(GeoObject::Point(p)) => Some(p.clone()),
                    _ => None,
                },
                PointRef::Generic(k) => generics.get(*k as usize).cloned(),
                PointRef::Isect { a, b, pick } => {
                    let oa = resolve_obj(state, a)?;
                    let ob = resolve_obj(state, b)?;
                    intersections(&oa, &ob, a, b)
                        .into_iter()
                        .find(|(_, origin)| {
                            matches!(origin, PointRef::Isect { pick: p, .. } if p == pick)
                        })
                        .map(|(p, _)| p)
                }
            }
        };
        let p1 = resolve_pt(&state, &mv.p1)?;
        let p2 = resolve_pt(&state, &mv.p2)?;
        let obj = match mv.kind {
            MoveKind::Line => GeoObject::Line(Line::through(&p1, &p2).ok()?),
            MoveKind::Circle => GeoObject::Circle(Circle::center_through(&p1, &p2).ok()?),
        };
        state
            .objects
            .push((obj.clone(), ObjRef::Move(state.moves.len() as u32)));
        state.moves.push(mv.clone());
        last = Some(obj);
    }
    let obj = last?;
    Some(goal_hit(&task.goal, targets, &state.objects[..input_count], &obj))
}

/// Iterative-deepening exhaustive enumeration up to the task's move budget.
pub fn enumerate(task: &SearchTask) -> Result<SearchOutcome, SearchError> {
    let targets: Vec<(Label, Circle)> = match &task.goal {
        SearchGoal::AnyCircle => vec![],
        SearchGoal::TangentCircle { to, .. } => to
            .iter()
            .map(|label| match task.board.get(label) {
                Some(GeoObject::Circle(c)) => Ok((label.clone(), c.clone())),
                _ => Err(SearchError::MissingCircle(label.clone())),
            })
            .collect::<Result<_, _>>()?,
    };
    let generics = sample_generics(task, task.seed)?;
    let state0 = initial_state(task, &generics);
    let input_count = state0.objects.len();

    let started = Instant::now();
    let mut total_nodes = 0u64;
    let mut notes: Vec<String> = Vec::new();
    let mut tower_pruned_total = 0u64;

    for depth in 1..=task.max_moves {
        let mut ctx = Ctx {
            task,
            targets: targets.clone(),
            input_count,
            nodes: 0,
            tower_pruned: 0,
            started,
            capped: false,
            memo: HashMap::new(),
            found: Vec::new(),
        };
        let complete = dfs(&mut ctx, &state0, depth);
        total_nodes += ctx.nodes;
        tower_pruned_total += ctx.tower_pruned;

        if !ctx.found.is_empty() {
            // Deduplicate by final board, order deterministically, then make
            // sure each survivor works for other generic choices too.
            let mut programs = ctx.found;
            programs.sort_by(|a, b| {
                a.board_digest
                    .cmp(&b.board_digest)
                    .then_with(|| format!("{:?}", a.moves).cmp(&format!("{:?}", b.moves)))
            });
            programs.dedup_by(|a, b| a.board_digest == b.board_digest);
            let mut rejected = 0u32;
            let mut verified = Vec::new();
            'outer: for prog in programs {
                for round in 0..10u64 {
                    let fresh =
                        sample_generics_with(task, task.seed ^ (0x9e37_79b9 + round * 0x85eb_ca6b))?;
                    if replay(task, &prog.moves, &fresh, &targets) != Some(true) {
                        rejected += 1;
                        continue 'outer;
                    }
                }
                verified.push(prog);
            }
            if !verified.is_empty() {
                return Ok(SearchOutcome::Found {
                    depth,
                    programs: verified,
                    nodes: total_nodes,
                    rejected_by_reverify: rejected,
                });
            }
            notes.push(format!(
                "depth {depth}: {rejected} candidate(s) failed re-verification on fresh generics"
            ));
        }

        if !complete {
            notes.push(format!("resource cap hit at depth {depth}"));
            return Ok(SearchOutcome::Exhausted {
                depth,
                nodes: total_nodes,
                generics: task.generics,
                caveat: true,
                notes,
            });
        }
    }

    if tower_pruned_total > 0 {
        notes.push(format!(
            "{tower_pruned_total} candidate object(s) pruned by the tower-depth cap {}",
            task.tower_cap
        ));
    }
    Ok(SearchOutcome::Exhausted {
        depth: task.max_moves,
        nodes: total_nodes,
        generics: task.generics,
        caveat: tower_pruned_total > 0,
        notes,
    })
}

fn sample_generics_with(task: &SearchTask, seed: u64) -> Result<Vec<Point>, SearchError> {
    let mut shifted = task.clone();
    shifted.seed = seed;
    sample_generics(&shifted, seed)
}

/// Outcome of a lower-bound certification run.
#[derive(Clone, Debug)]
pub enum CertifyOutcome {
    /// No program within the grammar and depth achieves the goal on the
    /// sampled generic instance. Evidence relative to the stated
    /// assumptions, not a proof.
    Certificate {
        statement: String,
        depth: u32,
        nodes: u64,
        generics: u32,
        seed: u64,
        grammar: &'static str,
        assumptions: Vec<String>,
    },
    /// The enumerator found programs instead; the bound fails.
    Counterexample { depth: u32, programs: Vec<FoundProgram> },
}

/// Run the enumerator to `depth` and certify exhaustion (or surface the
/// counterexamples). Errors when the sweep was cut short by a cap, since an
/// incomplete exhaustion certifies nothing.
pub fn certify_lower_bound(task: &SearchTask, depth: u32) -> Result<CertifyOutcome, SearchError> {
    let mut bounded = task.clone();
    bounded.max_moves = depth;
    match enumerate(&bounded)? {
        SearchOutcome::Found { depth, programs, .. } => {
            Ok(CertifyOutcome::Counterexample { depth, programs })
        }
        SearchOutcome::Exhausted { depth, nodes, generics, caveat, notes } => {
            if caveat {
                return Err(SearchError::IncompleteExhaustion(notes.join("; ")));
            }
            Ok(CertifyOutcome::Certificate {
                statement: format!(
                    "no program of at most {depth} move(s) over the enumerated move grammar \
                     and the sampled generic parameters achieves the goal"
                ),
                depth,
                nodes,
                generics,
                seed: task.seed,
                grammar: GRAMMAR_VERSION,
                assumptions: vec![
                    "exhaustion is relative to one generic instance of the task board; \
                     transfer to all generic instances is assumed, not proved"
                        .into(),
                    "arbitrary point choices are modeled by the fixed pre-sampled generic \
                     points; the grammar admits no other free parameters"
                        .into(),
                ],
            })
        }
    }
}

// ---------------------------------------------------------------------------
// JSON forms

fn point_ref_to_value(r: &PointRef) -> Value {
    match r {
        PointRef::Named(l) => json!({ "named": l }),
        PointRef::Generic(k) => json!({ "generic": k }),
        PointRef::Isect { a, b, pick } => {
            json!({ "isect": { "a": obj_ref_to_value(a), "b": obj_ref_to_value(b), "pick": pick } })
        }
    }
}

fn obj_ref_to_value(r: &ObjRef) -> Value {
    match r {
        ObjRef::Input(l) => json!({ "input": l }),
        ObjRef::Move(i) => json!({ "move": i }),
    }
}

pub fn goal_to_value(g: &SearchGoal) -> Value {
    match g {
        SearchGoal::AnyCircle => json!({ "any_circle": {} }),
        SearchGoal::TangentCircle { to, distinct_points } => {
            json!({ "tangent_circle": { "to": to, "distinct_points": distinct_points } })
        }
    }
}

pub fn task_to_value(t: &SearchTask) -> Value {
    json!({
        "name": t.name,
        "board": crate::jsonio::board_to_value(&t.board),
        "goal": goal_to_value(&t.goal),
        "max_moves": t.max_moves,
        "generics": t.generics,
        "seed": t.seed,
        "node_cap": t.node_cap,
        "time_cap_secs": t.time_cap.map(|d| d.as_secs_f64()),
        "pruning": t.pruning,
        "tower_cap": t.tower_cap,
    })
}

pub fn task_from_value(v: &Value, path: &str) -> Result<SearchTask, crate::jsonio::JsonError> {
    use crate::jsonio::JsonError;
    let schema = |p: &str, m: &str| JsonError::Schema { path: p.into(), msg: m.into() };
    let name = match v.get("name") {
        Some(Value::String(s)) => s.clone(),
        _ => "task".to_string(),
    };
    let board = crate::jsonio::board_from_value(
        v.get("board").ok_or_else(|| schema(path, "missing 'board'"))?,
        &format!("{path}/board"),
    )?;
    let goal_v = v.get("goal").ok_or_else(|| schema(path, "missing 'goal'"))?;
    let goal = if goal_v.get("any_circle").is_some() {
        SearchGoal::AnyCircle
    } else if let Some(tc) = goal_v.get("tangent_circle") {
        let to = match tc.get("to") {
            Some(Value::Array(a)) => a
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    _ => Err(schema(
                        &format!("{path}/goal/tangent_circle/to"),
                        "expected a label",
                    )),
                })
                .collect::<Result<Vec<_>, _>>()?,
            _ => return Err(schema(&format!("{path}/goal/tangent_circle"), "missing 'to'")),
        };
        SearchGoal::TangentCircle {
            to,
            distinct_points: matches!(tc.get("distinct_points"), Some(Value::Bool(true))),
        }
    } else {
        return Err(schema(&format!("{path}/goal"), "unknown goal"));
    };
    let u = |key: &str, default: u64| -> Result<u64, JsonError> {
        match v.get(key) {
            None => Ok(default),
            Some(Value::Number(n)) => n
                .as_u64()
                .ok_or_else(|| schema(&format!("{path}/{key}"), "expected a nonnegative integer")),
            Some(_) => Err(schema(&format!("{path}/{key}"), "expected a number")),
        }
    };
    let time_cap = match v.get("time_cap_secs") {
        None | Some(Value::Null) => None,
        Some(Value::Number(n)) => n.as_f64().map(Duration::from_secs_f64),
        Some(_) => return Err(schema(&format!("{path}/time_cap_secs"), "expected a number")),
    };
    Ok(SearchTask {
        name,
        board,
        goal,
        max_moves: u("max_moves", 1)? as u32,
        generics: u("generics", 2)? as u32,
        seed: u("seed", 0)?,
        node_cap: u("node_cap", 50_000_000)?,
        time_cap,
        pruning: !matches!(v.get("pruning"), Some(Value::Bool(false))),
        tower_cap: u("tower_cap", 8)? as u32,
    })
}

pub fn outcome_to_value(task: &SearchTask, outcome: &SearchOutcome) -> Value {
    let mut m = Map::new();
    m.insert("task".into(), Value::String(task.name.clone()));
    m.insert("grammar_version".into(), json!(GRAMMAR_VERSION));
    m.insert("seed".into(), json!(task.seed));
    match outcome {
        SearchOutcome::Found { depth, programs, nodes, rejected_by_reverify } => {
            m.insert("outcome".into(), json!("found"));
            m.insert("depth".into(), json!(depth));
            m.insert("nodes".into(), json!(nodes));
            m.insert("rejected_by_reverify".into(), json!(rejected_by_reverify));
            m.insert(
                "programs".into(),
                Value::Array(
                    programs
                        .iter()
                        .map(|p| {
                            json!({
                                "board_digest": p.board_digest,
                                "goal_object": crate::jsonio::parse(&p.goal_object)
                                    .unwrap_or(Value::Null),
                                "moves": p.moves.iter().map(|mv| json!({
                                    "kind": match mv.kind {
                                        MoveKind::Line => "line",
                                        MoveKind::Circle => "circle",
                                    },
                                    "p1": point_ref_to_value(&mv.p1),
                                    "p2": point_ref_to_value(&mv.p2),
                                })).collect::<Vec<_>>(),
                            })
                        })
                        .collect(),
                ),
            );
        }
        SearchOutcome::Exhausted { depth, nodes, generics, caveat, notes } => {
            m.insert("outcome".into(), json!("exhausted"));
            m.insert("depth".into(), json!(depth));
            m.insert("nodes".into(), json!(nodes));
            m.insert("generics".into(), json!(generics));
            m.insert("caveat".into(), json!(caveat));
            m.insert("notes".into(), json!(notes));
        }
    }
    Value::Object(m)
}

pub fn certificate_to_value(c: &CertifyOutcome) -> Value {
    match c {
        CertifyOutcome::Certificate {
            statement,
            depth,
            nodes,
            generics,
            seed,
            grammar,
            assumptions,
        } => {
            json!({
                "certificate": {
                    "statement": statement,
                    "depth": depth,
                    "nodes": nodes,
                    "generics": generics,
                    "seed": seed,
                    "grammar_version": grammar,
                    "assumptions": assumptions,
                }
            })
        }
        CertifyOutcome::Counterexample { depth, programs } => json!({
            "counterexample": {
                "depth": depth,
                "programs": programs.iter().map(|p| p.board_digest.clone()).collect::<Vec<_>>(),
            }
        }),
    }
}

#[cfg(test)]
mod tests;
