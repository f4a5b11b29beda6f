use super::*;
use crate::cn::Cn;
use crate::engine::{execute, verify, Env, ExecError};
use crate::geom::{descartes_solve, Circle, GeoObject, Point};

fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

fn ptq(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
    Point::new(Cn::from_ratio(xn, xd).unwrap(), Cn::from_ratio(yn, yd).unwrap())
}

fn point_of(trace: &crate::engine::Trace, label: &str) -> Point {
    match trace.get(label).unwrap() {
        GeoObject::Point(p) => p.clone(),
        o => panic!("{label} is a {}", o.kind_name()),
    }
}

fn circle_of(trace: &crate::engine::Trace, label: &str) -> Circle {
    match trace.get(label).unwrap() {
        GeoObject::Circle(c) => c.clone(),
        o => panic!("{label} is a {}", o.kind_name()),
    }
}

#[test]
fn move_counts_match_budgets() {
    let expect = [
        ("one_circle", 1),
        ("two_tangent_circles", 2),
        ("third_tangent_circle", 5),
        ("apollonius_seven", 7),
        ("apollonius_second_solution", 3),
        ("apollonius_parallel_variant", 7),
        ("eppstein_eleven", 11),
        ("eppstein_second", 5),
        ("fig2_setup", 8),
        ("four_tangent_circles", 15),
    ];
    let cat = catalog();
    assert_eq!(cat.len(), expect.len());
    for (name, moves) in expect {
        let p = find(name).unwrap_or_else(|| panic!("missing {name}"));
        assert_eq!(p.program.count_moves(), moves, "{name}");
        assert_eq!(p.program.budget, moves, "{name}");
    }
}

#[test]
fn one_circle_unit() {
    let p = build_one_circle();
    let env = Env::seeded(1)
        .with_override("A", pt(0, 0))
        .with_override("Z", pt(1, 0));
    let trace = execute(&p.program, &blank_board(), &env).unwrap();
    assert_eq!(trace.move_count, 1);
    let oa = circle_of(&trace, "O_A");
    assert_eq!(oa.center(), &pt(0, 0));
    assert_eq!(oa.radius(), &Cn::one());
    assert!(verify(&trace, &p.program.goals).unwrap().all_pass());
}

#[test]
fn two_tangent_golden() {
    let p = build_two_tangent_circles();
    let one = build_one_circle();
    let env = Env::seeded(1)
        .with_override("A", pt(0, 0))
        .with_override("Z", pt(1, 0));
    let board = execute(&one.program, &blank_board(), &env).unwrap().as_board();
    let env = Env::seeded(1).with_override("B", pt(3, 0));
    let trace = execute(&p.program, &board, &env).unwrap();
    assert_eq!(trace.move_count, 2);
    let ob = circle_of(&trace, "O_B");
    assert_eq!(ob.radius(), &Cn::from_int(2));
    assert!(verify(&trace, &p.program.goals).unwrap().all_pass());
    use crate::geom::{tangency, Tangency};
    let oa = circle_of(&trace, "O_A");
    assert_eq!(tangency(&oa, &ob).unwrap(), Tangency::External(pt(1, 0)));
}

#[test]
fn two_tangent_inside_placement_still_tangent() {
    // A point between A and Z (inside O_A) still yields a tangent circle,
    // internally. The catalog program requires "outside", so build the board
    // directly.
    use crate::geom::tangency;
    let oa = Circle::new(pt(0, 0), Cn::from_int(4)).unwrap();
    let z = pt(4, 0);
    let b = pt(3, 0);
    let ob = Circle::center_through(&b, &z).unwrap();
    assert!(tangency(&oa, &ob).unwrap().is_tangent());
}

#[test]
fn third_circle_golden() {
    let p = build_third_tangent_circle();
    let trace = execute(
        &p.program,
        &fig1_board(),
        &Env::seeded(9).with_override("pz", ptq(3, 2, 0, 1)),
    )
    .unwrap();
    assert_eq!(trace.move_count, 5);

    let c = point_of(&trace, "C");
    let want_y = Cn::from_int(14).sqrt().unwrap().checked_div(&Cn::from_int(3)).unwrap();
    assert_eq!(c, Point::new(Cn::from_ratio(5, 6).unwrap(), want_y));

    let oc = circle_of(&trace, "O_C");
    assert_eq!(oc.radius(), &Cn::from_ratio(1, 2).unwrap());

    let report = verify(&trace, &p.program.goals).unwrap();
    assert!(report.all_pass(), "{report:?}");

    // |AC| − |BC| equals the radius difference of the two given circles.
    let a = point_of(&trace, "A");
    let b = point_of(&trace, "B");
    let diff = &a.dist(&c) - &b.dist(&c);
    assert_eq!(diff, Cn::from_int(-1));
}

#[test]
fn third_circle_generic_seeds() {
    let p = build_third_tangent_circle();
    let board = fig1_board();
    for seed in 0..40 {
        let trace = execute(&p.program, &board, &Env::seeded(seed)).unwrap();
        let report = verify(&trace, &p.program.goals).unwrap();
        assert!(report.all_pass(), "seed {seed}: {report:?}");
        let (a, b, c) = (point_of(&trace, "A"), point_of(&trace, "B"), point_of(&trace, "C"));
        assert_eq!(&a.dist(&c) - &b.dist(&c), Cn::from_int(-1), "seed {seed}");
    }
}

#[test]
fn apollonius_golden_345() {
    let p = build_apollonius_seven();
    let trace = execute(&p.program, &fig2_345_board(), &Env::seeded(0)).unwrap();
    assert_eq!(trace.move_count, 7);

    assert_eq!(point_of(&trace, "B'"), pt(0, -2));
    assert_eq!(point_of(&trace, "Q"), ptq(15, 13, 10, 13));
    assert_eq!(point_of(&trace, "Q'"), pt(3, -2));
    assert_eq!(point_of(&trace, "C'"), pt(-3, 0));
    assert_eq!(point_of(&trace, "S"), ptq(21, 23, 20, 23));

    let os = circle_of(&trace, "O_S");
    assert_eq!(os.radius(), &Cn::from_ratio(6, 23).unwrap());

    let report = verify(&trace, &p.program.goals).unwrap();
    assert!(report.all_pass(), "{report:?}");
}

#[test]
fn apollonius_second_solution_golden() {
    let seven = build_apollonius_seven();
    let second = build_apollonius_second_solution();
    let board = execute(&seven.program, &fig2_345_board(), &Env::seeded(0))
        .unwrap()
        .as_board();
    let trace = execute(&second.program, &board, &Env::seeded(0)).unwrap();
    assert_eq!(trace.move_count, 3);
    assert_eq!(point_of(&trace, "S'"), pt(3, 4));
    let os2 = circle_of(&trace, "O_S'");
    assert_eq!(os2.radius(), &Cn::from_int(6));
    assert!(verify(&trace, &second.program.goals).unwrap().all_pass());
}

#[test]
fn apollonius_rejects_parallel_board() {
    let p = build_apollonius_seven();
    let err = execute(&p.program, &symmetric_board(3), &Env::seeded(0)).unwrap_err();
    assert!(matches!(err, ExecError::PreconditionFailed(_)), "{err:?}");
}

#[test]
fn parallel_variant_golden() {
    let p = build_apollonius_parallel_variant();
    for seed in 0..12 {
        let board = symmetric_board(seed);
        let trace = execute(&p.program, &board, &Env::seeded(seed)).unwrap();
        assert_eq!(trace.move_count, 7);
        let report = verify(&trace, &p.program.goals).unwrap();
        assert!(report.all_pass(), "seed {seed}: {report:?}");
    }
    // Applying the variant on a non-parallel board is an error.
    let err = execute(&p.program, &fig2_345_board(), &Env::seeded(0)).unwrap_err();
    assert!(matches!(err, ExecError::PreconditionFailed(_)), "{err:?}");
}

#[test]
fn eppstein_matches_apollonius_on_golden() {
    let eleven = build_eppstein_eleven();
    let trace = execute(&eleven.program, &fig2_345_board(), &Env::seeded(0)).unwrap();
    assert_eq!(trace.move_count, 11);
    assert!(verify(&trace, &eleven.program.goals).unwrap().all_pass());
    let os = circle_of(&trace, "O_S");
    assert_eq!(os.center(), &ptq(21, 23, 20, 23));
    assert_eq!(os.radius(), &Cn::from_ratio(6, 23).unwrap());

    let second = build_eppstein_second();
    let trace2 = execute(&second.program, &trace.as_board(), &Env::seeded(0)).unwrap();
    assert_eq!(trace2.move_count, 5);
    assert!(verify(&trace2, &second.program.goals).unwrap().all_pass());
    let os2 = circle_of(&trace2, "O_S'");
    assert_eq!(os2.center(), &pt(3, 4));
    assert_eq!(os2.radius(), &Cn::from_int(6));
}

#[test]
fn full_chain_fifteen_moves() {
    let chain = build_four_tangent_circles();
    for seed in [0u64, 7, 23] {
        let trace = execute(&chain.program, &blank_board(), &Env::seeded(seed)).unwrap();
        assert_eq!(trace.move_count, 15, "seed {seed}");
        let report = verify(&trace, &chain.program.goals).unwrap();
        assert!(report.all_pass(), "seed {seed}: {report:?}");
    }
}

#[test]
fn replay_is_deterministic() {
    let chain = build_four_tangent_circles();
    let t1 = execute(&chain.program, &blank_board(), &Env::seeded(42)).unwrap();
    let t2 = execute(&chain.program, &blank_board(), &Env::seeded(42)).unwrap();
    assert_eq!(t1.objects, t2.objects);
    let t3 = execute(&chain.program, &blank_board(), &Env::seeded(43)).unwrap();
    assert_ne!(t1.objects, t3.objects);
}

#[test]
fn inversion_checks_golden() {
    let p = build_apollonius_seven();
    let trace = execute(&p.program, &fig2_345_board(), &Env::seeded(0)).unwrap();
    let report = check_inversion_properties(&trace).unwrap();
    assert!(report.all_pass(), "{report:?}");

    // Perturbing the inversion circle must break the checks with a nonzero
    // residual.
    let mut bad = trace.clone();
    let r = Cn::from_int(3) + Cn::from_ratio(1, 1000).unwrap();
    bad.objects.insert(
        "O_B'".into(),
        GeoObject::Circle(Circle::new(pt(0, -2), r).unwrap()),
    );
    let report = check_inversion_properties(&bad).unwrap();
    assert!(!report.all_pass());
    assert!(report
        .items
        .iter()
        .any(|i| !i.pass && i.residual.as_ref().is_some_and(|r| !r.is_zero())));
}

#[test]
fn gergonne_golden() {
    let p = build_apollonius_seven();
    let trace = execute(&p.program, &fig2_345_board(), &Env::seeded(0)).unwrap();
    let report = check_gergonne(&trace).unwrap();
    assert!(report.all_pass(), "{report:?}");
}

#[test]
fn descartes_agrees_with_construction() {
    for seed in 0..8 {
        let board = random_tangent_board(seed);
        let seven = build_apollonius_seven();
        let trace = execute(&seven.program, &board, &Env::seeded(seed)).unwrap();
        let second = build_apollonius_second_solution();
        let trace2 = execute(&second.program, &trace.as_board(), &Env::seeded(seed)).unwrap();

        let (oa, ob, oc) = (
            circle_of(&trace, "O_A"),
            circle_of(&trace, "O_B"),
            circle_of(&trace, "O_C"),
        );
        let (d1, d2) = descartes_solve(&oa, &ob, &oc).unwrap();
        let constructed = [circle_of(&trace, "O_S"), circle_of(&trace2, "O_S'")];
        let oracle = [d1.circle, d2.circle];
        for o in &oracle {
            assert!(constructed.iter().any(|c| c == o), "seed {seed}");
        }
        for c in &constructed {
            assert!(oracle.iter().any(|o| o == c), "seed {seed}");
        }
    }
}

#[test]
fn tanged_board_generator_is_sound() {
    let board = random_tangent_board(5);
    for label in ["A", "B", "C", "X", "Y", "Z", "O_A", "O_B", "O_C", "AB", "AC"] {
        assert!(board.get(label).is_some(), "missing {label}");
    }
    use crate::geom::tangency;
    let get = |l: &str| match board.get(l).unwrap() {
        GeoObject::Circle(c) => c.clone(),
        _ => panic!(),
    };
    let (oa, ob, oc) = (get("O_A"), get("O_B"), get("O_C"));
    for (a, b) in [(&oa, &ob), (&oa, &oc), (&ob, &oc)] {
        assert!(matches!(
            tangency(a, b).unwrap(),
            crate::geom::Tangency::External(_)
        ));
    }
}

#[test]
fn budget_honesty() {
    // The executed move count always equals the static count.
    for named in catalog() {
        if !named.program.inputs.is_empty() {
            continue;
        }
        let trace = execute(&named.program, &blank_board(), &Env::seeded(11)).unwrap();
        assert_eq!(trace.move_count, named.program.count_moves(), "{}", named.name());
    }
}
