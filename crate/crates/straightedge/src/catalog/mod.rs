//! The built-in construction programs and the checks backing them.
//!
//! Move counts: one circle costs 1 move; a second, tangent circle 2 more;
//! a third circle tangent to both 5 more; the Apollonian circle tangent to
//! all three 7 more (15 in total from a blank plane). Its twin solution
//! follows in 3 further moves. For comparison, the catalog also carries an
//! 11-move construction of the same circle that routes through dropped
//! perpendiculars, and its 5-move second solution.
//!
//! Tangency-point labels follow one convention everywhere: `X` joins `O_B`
//! and `O_C`, `Y` joins `O_A` and `O_C`, `Z` joins `O_A` and `O_B`.

mod boards;
mod checks;

pub use boards::{blank_board, fig1_board, fig2_345_board, random_tangent_board, symmetric_board};
pub use checks::{check_gergonne, check_inversion_properties, CheckItem, CheckReport};

use crate::engine::{
    Branch, Constraint, GoalSpec, InputDecl, OnWhich, Precondition, Program, Rect, Step,
};

/// A program plus a short description of what it builds.
#[derive(Clone, Debug)]
pub struct NamedProgram {
    pub program: Program,
    pub doc: &'static str,
}

impl NamedProgram {
    fn new(program: Program, doc: &'static str) -> NamedProgram {
        assert_eq!(
            program.count_moves(),
            program.budget,
            "{}: move count must equal the declared budget",
            program.name
        );
        program.validate().expect("catalog program is well-formed");
        NamedProgram { program, doc }
    }

    pub fn name(&self) -> &str {
        &self.program.name
    }
}

fn free(label: &str, region: Rect, avoid: Vec<Constraint>) -> Step {
    Step::Free { label: label.into(), region, avoid }
}

fn on(label: &str, object: &str, avoid: Vec<Constraint>) -> Step {
    Step::On {
        label: label.into(),
        object: object.into(),
        which: OnWhich::Sampled,
        avoid,
    }
}

fn isect(label: &str, a: &str, b: &str, branch: Branch) -> Step {
    Step::Intersect { label: label.into(), a: a.into(), b: b.into(), branch }
}

fn line(label: &str, p: &str, q: &str) -> Step {
    Step::Line { label: label.into(), p: p.into(), q: q.into() }
}

fn circle(label: &str, center: &str, through: &str) -> Step {
    Step::Circle { label: label.into(), center: center.into(), through: through.into() }
}

fn tangent_to(circles: &[&str], target: &str) -> GoalSpec {
    GoalSpec::TangentTo {
        circles: circles.iter().map(|s| s.to_string()).collect(),
        target: target.into(),
    }
}

fn passes_through(point: &str, object: &str) -> GoalSpec {
    GoalSpec::PassesThrough { point: point.into(), object: object.into() }
}

/// One circle on a blank board: two free points and one drawing move.
pub fn build_one_circle() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "one_circle".into(),
            inputs: vec![],
            steps: vec![
                free("A", Rect::from_ints(0, 0, 4, 4), vec![]),
                free("Z", Rect::from_ints(0, 0, 4, 4), vec![Constraint::NotEqual("A".into())]),
                circle("O_A", "A", "Z"),
            ],
            goals: vec![passes_through("Z", "O_A"), GoalSpec::MoveBudget(1)],
            budget: 1,
            preconditions: vec![],
        },
        "Draws one circle through a marked point: the cheapest possible construction.",
    )
}

/// A second circle tangent to the first, in two more moves: the line through
/// the center and the marked point, a free point on it outside the first
/// circle, and the circle about that point through the marked point.
pub fn build_two_tangent_circles() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "two_tangent_circles".into(),
            inputs: vec![InputDecl::point("A"), InputDecl::point("Z"), InputDecl::circle("O_A")],
            steps: vec![
                line("AB", "A", "Z"),
                on("B", "AB", vec![Constraint::Outside("O_A".into())]),
                circle("O_B", "B", "Z"),
            ],
            goals: vec![
                tangent_to(&["O_A"], "O_B"),
                passes_through("Z", "O_B"),
                GoalSpec::MoveBudget(2),
            ],
            budget: 2,
            preconditions: vec![],
        },
        "Adds a circle tangent to an existing one at its marked point; two moves, \
         and no fewer suffice.",
    )
}

fn third_circle_steps() -> Vec<Step> {
    vec![
        on("pz", "AB", vec![Constraint::NotEqual("Z".into())]),
        circle("O_Z", "Z", "pz"),
        isect("F", "AB", "O_Z", Branch::Lo),
        isect("G", "AB", "O_Z", Branch::Hi),
        circle("cAG", "A", "G"),
        circle("cBF", "B", "F"),
        isect("C", "cAG", "cBF", Branch::Left),
        line("AC", "A", "C"),
        isect("Y", "AC", "O_A", Branch::Hi),
        circle("O_C", "C", "Y"),
    ]
}

fn third_circle_goals() -> Vec<GoalSpec> {
    vec![
        tangent_to(&["O_A", "O_B"], "O_C"),
        GoalSpec::RadiusEquals("O_C".into(), "O_Z".into()),
        passes_through("Y", "O_C"),
        passes_through("Y", "O_A"),
        GoalSpec::MoveBudget(5),
    ]
}

/// A third circle tangent to two tangent circles, in five moves: an
/// arbitrary circle about the tangency point fixes a radius, two auxiliary
/// circles transfer it to locate the new center on the hyperbola of centers,
/// and the line to the center yields the touch point.
pub fn build_third_tangent_circle() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "third_tangent_circle".into(),
            inputs: vec![
                InputDecl::point("A"),
                InputDecl::point("B"),
                InputDecl::point("Z"),
                InputDecl::circle("O_A"),
                InputDecl::circle("O_B"),
                InputDecl::line("AB", "A", "B"),
            ],
            steps: third_circle_steps(),
            goals: third_circle_goals(),
            budget: 5,
            preconditions: vec![],
        },
        "Given two tangent circles and their center line, draws a third circle \
         tangent to both in five moves; the new radius equals the auxiliary \
         circle's radius.",
    )
}

fn fig2_inputs() -> Vec<InputDecl> {
    vec![
        InputDecl::point("A"),
        InputDecl::point("B"),
        InputDecl::point("C"),
        InputDecl::point("X"),
        InputDecl::point("Y"),
        InputDecl::point("Z"),
        InputDecl::circle("O_A"),
        InputDecl::circle("O_B"),
        InputDecl::circle("O_C"),
        InputDecl::line("AB", "A", "B"),
        InputDecl::line("AC", "A", "C"),
    ]
}

fn apollonius_steps() -> Vec<Step> {
    vec![
        line("XZ", "X", "Z"),
        isect("B'", "XZ", "AC", Branch::Only),
        circle("O_B'", "B'", "Y"),
        isect("Q", "O_B'", "O_B", Branch::Left),
        isect("Q'", "O_B'", "O_B", Branch::Right),
        line("XY", "X", "Y"),
        isect("C'", "XY", "AB", Branch::Only),
        circle("O_C'", "C'", "Z"),
        isect("R", "O_C'", "O_C", Branch::Right),
        isect("R'", "O_C'", "O_C", Branch::Left),
        line("BQ", "B", "Q"),
        line("CR", "C", "R"),
        isect("S", "BQ", "CR", Branch::Only),
        circle("O_S", "S", "Q"),
    ]
}

/// The fourth, mutually tangent (Apollonian) circle in seven moves. The
/// circle about B' = XZ∩AC through Y is the inversion circle that fixes O_B
/// and swaps O_A with O_C; it cuts O_B exactly in the two tangency points of
/// the two solutions. The branch pairing of Q and R (left against the B'→B
/// ray, right against the C'→C ray) keeps both picks on the same solution
/// for every board with both outer radii larger than O_A's — the component
/// the board builders stay inside. Crossing a radius-equality wall sends B'
/// or C' through infinity and swaps the labels, so boards from other
/// components fail the goals rather than silently picking mismatched points.
pub fn build_apollonius_seven() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "apollonius_seven".into(),
            inputs: fig2_inputs(),
            steps: apollonius_steps(),
            goals: vec![tangent_to(&["O_A", "O_B", "O_C"], "O_S"), GoalSpec::MoveBudget(7)],
            budget: 7,
            preconditions: vec![Precondition::NotParallel("XZ".into(), "AC".into())],
        },
        "Given three mutually tangent circles with tangency points and two center \
         lines, draws a circle tangent to all three in seven moves. Errors when \
         XZ is parallel to AC; use apollonius_parallel_variant there.",
    )
}

/// The second solution, three further moves from the seven-move trace: the
/// spare intersection points Q' and R' are already on the page.
pub fn build_apollonius_second_solution() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "apollonius_second_solution".into(),
            inputs: vec![
                InputDecl::point("B"),
                InputDecl::point("C"),
                InputDecl::point("Q'"),
                InputDecl::point("R'"),
                InputDecl::circle("O_A"),
                InputDecl::circle("O_B"),
                InputDecl::circle("O_C"),
            ],
            steps: vec![
                line("BQ'", "B", "Q'"),
                line("CR'", "C", "R'"),
                isect("S'", "BQ'", "CR'", Branch::Only),
                circle("O_S'", "S'", "Q'"),
            ],
            goals: vec![tangent_to(&["O_A", "O_B", "O_C"], "O_S'"), GoalSpec::MoveBudget(3)],
            budget: 3,
            preconditions: vec![],
        },
        "Extends the seven-move trace with the other tangent circle: two lines \
         through the spare intersection points and one final circle.",
    )
}

/// Degenerate-case variant: when XZ is parallel to AC the auxiliary center
/// B' escapes to infinity and the line BY stands in for the circle about it.
pub fn build_apollonius_parallel_variant() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "apollonius_parallel_variant".into(),
            inputs: fig2_inputs(),
            steps: vec![
                line("XZ", "X", "Z"),
                line("BY", "B", "Y"),
                isect("Q", "BY", "O_B", Branch::Hi),
                isect("Q'", "BY", "O_B", Branch::Lo),
                line("XY", "X", "Y"),
                isect("C'", "XY", "AB", Branch::Only),
                circle("O_C'", "C'", "Z"),
                isect("R", "O_C'", "O_C", Branch::Right),
                isect("R'", "O_C'", "O_C", Branch::Left),
                line("BQ", "B", "Q"),
                line("CR", "C", "R"),
                isect("S", "BQ", "CR", Branch::Only),
                circle("O_S", "S", "Q"),
            ],
            goals: vec![tangent_to(&["O_A", "O_B", "O_C"], "O_S"), GoalSpec::MoveBudget(7)],
            budget: 7,
            preconditions: vec![Precondition::Parallel("XZ".into(), "AC".into())],
        },
        "The seven-move construction for boards where XZ is parallel to AC: the \
         line BY replaces the circle about B'. Errors when the board is not \
         actually parallel.",
    )
}

/// Eleven-move comparison construction: finds Q by dropping the
/// perpendicular to AC through B (three moves, via the reflection of B in
/// the circles about A and C through B) and joining Y to one of its
/// intersections with O_B; symmetrically for R; then two center lines and
/// the final circle.
pub fn build_eppstein_eleven() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "eppstein_eleven".into(),
            inputs: fig2_inputs(),
            steps: vec![
                circle("cAB", "A", "B"),
                circle("cCB", "C", "B"),
                isect("B*", "cAB", "cCB", Branch::Left),
                line("perpB", "B", "B*"),
                isect("P_B", "perpB", "O_B", Branch::Lo),
                line("YP", "Y", "P_B"),
                isect("Q", "YP", "O_B", Branch::Other("P_B".into())),
                circle("cAC", "A", "C"),
                circle("cBC", "B", "C"),
                isect("C*", "cAC", "cBC", Branch::Right),
                line("perpC", "C", "C*"),
                isect("P_C", "perpC", "O_C", Branch::Lo),
                line("ZP", "Z", "P_C"),
                isect("R", "ZP", "O_C", Branch::Other("P_C".into())),
                line("BQ", "B", "Q"),
                line("CR", "C", "R"),
                isect("S", "BQ", "CR", Branch::Only),
                circle("O_S", "S", "Q"),
            ],
            goals: vec![tangent_to(&["O_A", "O_B", "O_C"], "O_S"), GoalSpec::MoveBudget(11)],
            budget: 11,
            preconditions: vec![],
        },
        "Eleven-move construction of the same tangent circle, routed through \
         dropped perpendiculars (a perpendicular costs three moves here).",
    )
}

/// The second solution by the perpendicular route costs five more moves:
/// the spare tangency points must each be produced by a fresh line first.
pub fn build_eppstein_second() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "eppstein_second".into(),
            inputs: vec![
                InputDecl::point("Y"),
                InputDecl::point("Z"),
                InputDecl::point("B"),
                InputDecl::point("C"),
                InputDecl::point("B*"),
                InputDecl::point("C*"),
                InputDecl::line("perpB", "B", "B*"),
                InputDecl::line("perpC", "C", "C*"),
                InputDecl::circle("O_A"),
                InputDecl::circle("O_B"),
                InputDecl::circle("O_C"),
            ],
            steps: vec![
                isect("P_B2", "perpB", "O_B", Branch::Hi),
                line("YP2", "Y", "P_B2"),
                isect("Q'", "YP2", "O_B", Branch::Other("P_B2".into())),
                isect("P_C2", "perpC", "O_C", Branch::Hi),
                line("ZP2", "Z", "P_C2"),
                isect("R'", "ZP2", "O_C", Branch::Other("P_C2".into())),
                line("BQ'", "B", "Q'"),
                line("CR'", "C", "R'"),
                isect("S'", "BQ'", "CR'", Branch::Only),
                circle("O_S'", "S'", "Q'"),
            ],
            goals: vec![tangent_to(&["O_A", "O_B", "O_C"], "O_S'"), GoalSpec::MoveBudget(5)],
            budget: 5,
            preconditions: vec![],
        },
        "Second solution by the perpendicular route: five further moves, since \
         the spare tangency points are not byproducts there.",
    )
}

fn chain_prefix_steps() -> Vec<Step> {
    let mut steps = vec![
        free("A", Rect::from_ints(0, 0, 4, 4), vec![]),
        free("Z", Rect::from_ints(0, 0, 4, 4), vec![Constraint::NotEqual("A".into())]),
        circle("O_A", "A", "Z"),
        line("AB", "A", "Z"),
        on(
            "B",
            "AB",
            vec![
                // Strictly beyond Z keeps the new circle externally tangent;
                // b > a keeps the later similitude center C' finite and pins
                // the intersection-branch pairing of the seven-move stage.
                Constraint::Beyond { past: "Z".into(), from: "A".into() },
                Constraint::FartherThan { center: "Z".into(), through: "A".into() },
            ],
        ),
        circle("O_B", "B", "Z"),
    ];
    let mut third = third_circle_steps();
    // c > a keeps B' finite and the branch pairing stable, as above.
    if let Step::On { avoid, .. } = &mut third[0] {
        avoid.push(Constraint::FartherThan { center: "Z".into(), through: "A".into() });
    }
    steps.extend(third);
    steps.push(isect("X", "O_B", "O_C", Branch::Only));
    steps
}

/// Blank board through three mutually tangent circles (eight moves), ending
/// with every label the seven-move stage expects.
pub fn build_fig2_setup() -> NamedProgram {
    NamedProgram::new(
        Program {
            name: "fig2_setup".into(),
            inputs: vec![],
            steps: chain_prefix_steps(),
            goals: vec![
                tangent_to(&["O_A"], "O_B"),
                tangent_to(&["O_A", "O_B"], "O_C"),
                GoalSpec::MoveBudget(8),
            ],
            budget: 8,
            preconditions: vec![],
        },
        "From a blank board to three mutually tangent circles with named tangency \
         points and center lines, in 1+2+5 = 8 moves.",
    )
}

/// The full chain: four mutually tangent circles from a blank board in
/// exactly 1+2+5+7 = 15 moves.
pub fn build_four_tangent_circles() -> NamedProgram {
    let mut steps = chain_prefix_steps();
    steps.extend(apollonius_steps());
    NamedProgram::new(
        Program {
            name: "four_tangent_circles".into(),
            inputs: vec![],
            steps,
            goals: vec![
                tangent_to(&["O_A"], "O_B"),
                tangent_to(&["O_A", "O_B"], "O_C"),
                tangent_to(&["O_A", "O_B", "O_C"], "O_S"),
                GoalSpec::MoveBudget(15),
            ],
            budget: 15,
            preconditions: vec![Precondition::NotParallel("XZ".into(), "AC".into())],
        },
        "Four mutually tangent circles from a blank plane in fifteen moves; all \
         six pairwise tangencies verify exactly.",
    )
}

/// Every built-in program.
pub fn catalog() -> Vec<NamedProgram> {
    vec![
        build_one_circle(),
        build_two_tangent_circles(),
        build_third_tangent_circle(),
        build_apollonius_seven(),
        build_apollonius_second_solution(),
        build_apollonius_parallel_variant(),
        build_eppstein_eleven(),
        build_eppstein_second(),
        build_fig2_setup(),
        build_four_tangent_circles(),
    ]
}

/// Look a built-in program up by name.
pub fn find(name: &str) -> Option<NamedProgram> {
    catalog().into_iter().find(|p| p.name() == name)
}

#[cfg(test)]
mod tests;
