//! Command-line front end: run, verify, count, render, search, export.
//!
//! Exit codes: 0 on success with all goals passing, 1 when verification or
//! execution fails, 2 on usage or schema errors.

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;
use straightedge::catalog::{
    self, blank_board, check_gergonne, check_inversion_properties, fig1_board, fig2_345_board,
    random_tangent_board, symmetric_board,
};
use straightedge::cn::Cn;
use straightedge::engine::{execute, verify, Board, Env, Program, Trace};
use straightedge::geom::Point;
use straightedge::jsonio;
use straightedge::render::{render_svg, RenderStyle};
use straightedge::search;

#[derive(Parser)]
#[command(
    name = "straightedge",
    about = "Exact straightedge-and-compass constructions with move counting",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in construction programs.
    List,
    /// Print the move count of a program (no execution).
    Count {
        /// Program name or path to a program JSON file.
        program: String,
    },
    /// Execute a program and verify its goals exactly.
    Run {
        /// Program name or path to a program JSON file.
        program: String,
        /// Starting board: a built-in name (blank, fig1, 345,
        /// random:<seed>, symmetric:<seed>) or a board JSON file.
        #[arg(long, default_value = "blank")]
        board: String,
        /// Sampling seed for free points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override a free point: LABEL=x,y with rational coordinates
        /// (e.g. B=3,0 or pz=3/2,0). Repeatable.
        #[arg(long = "override", value_name = "LABEL=x,y")]
        overrides: Vec<String>,
        /// Write the evaluated trace as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also run the proof checks that apply to this program's trace.
        #[arg(long)]
        checks: bool,
    },
    /// Re-verify a trace file against goals.
    Verify {
        /// Trace JSON file.
        trace: PathBuf,
        /// Program name or JSON file whose goals to check.
        #[arg(long)]
        goals: String,
    },
    /// Render a trace file to SVG.
    Render {
        /// Trace JSON file.
        trace: PathBuf,
        /// Style JSON file (viewport, scale, labels, bits, classes).
        #[arg(long)]
        style: Option<PathBuf>,
        /// Approximation precision in bits.
        #[arg(long)]
        bits: Option<u32>,
        /// Output SVG path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an exhaustive minimal-move search task.
    Search {
        /// Task JSON file.
        task: PathBuf,
        /// Override the task's move budget.
        #[arg(long)]
        max_moves: Option<u32>,
        /// Override the node cap.
        #[arg(long)]
        nodes: Option<u64>,
        /// Override the time cap, in seconds.
        #[arg(long)]
        time: Option<f64>,
        /// Certify exhaustion at this depth (errors if the sweep was cut
        /// short by a cap).
        #[arg(long)]
        certify: Option<u32>,
        /// Write the outcome (or certificate) as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the built-in program catalog as JSON files.
    Export {
        /// Target directory.
        #[arg(long, default_value = "programs")]
        dir: PathBuf,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            // Schema and file problems are usage errors.
            ExitCode::from(2)
        }
    }
}

fn read_json(path: &Path) -> anyhow::Result<serde_json::Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(jsonio::parse(&text)?)
}

fn load_program(name_or_path: &str) -> anyhow::Result<Program> {
    if let Some(named) = catalog::find(name_or_path) {
        return Ok(named.program);
    }
    let path = Path::new(name_or_path);
    if path.exists() {
        let v = read_json(path)?;
        return Ok(jsonio::program_from_value(&v, "")?);
    }
    anyhow::bail!(
        "unknown program '{name_or_path}' (try `straightedge list` or pass a JSON file)"
    )
}

fn load_board(spec: &str) -> anyhow::Result<Board> {
    match spec {
        "blank" => return Ok(blank_board()),
        "fig1" => return Ok(fig1_board()),
        "345" | "fig2_345" => return Ok(fig2_345_board()),
        _ => {}
    }
    if let Some(seed) = spec.strip_prefix("random:") {
        return Ok(random_tangent_board(seed.parse()?));
    }
    if let Some(seed) = spec.strip_prefix("symmetric:") {
        return Ok(symmetric_board(seed.parse()?));
    }
    let path = Path::new(spec);
    if path.exists() {
        let v = read_json(path)?;
        return Ok(jsonio::board_from_value(&v, "")?);
    }
    anyhow::bail!("unknown board '{spec}'")
}

fn parse_rational(s: &str) -> anyhow::Result<BigRational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let num = BigInt::from_str(p)?;
    let den = BigInt::from_str(q)?;
    anyhow::ensure!(den != BigInt::from(0), "zero denominator in '{s}'");
    Ok(BigRational::new(num, den))
}

fn parse_overrides(specs: &[String]) -> anyhow::Result<Env> {
    let mut env = Env::default();
    for spec in specs {
        let (label, coords) = spec
            .split_once('=')
            .ok_or_else(|| anyhow::anyhow!("override '{spec}' is not LABEL=x,y"))?;
        let (x, y) = coords
            .split_once(',')
            .ok_or_else(|| anyhow::anyhow!("override '{spec}' is not LABEL=x,y"))?;
        let p = Point::new(
            Cn::from_big_ratio(parse_rational(x)?),
            Cn::from_big_ratio(parse_rational(y)?),
        );
        env.overrides.insert(label.trim().to_string(), p);
    }
    Ok(env)
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            std::fs::write(path, content)?;
        }
        None => println!("{content}"),
    }
    Ok(())
}

fn print_report(report: &straightedge::engine::VerificationReport) {
    for r in &report.results {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let mut line = format!("  {verdict}  {:?}", r.goal);
        if let Some(residual) = &r.residual {
            line.push_str(&format!("  residual = {residual}"));
        }
        if let Some(note) = &r.note {
            line.push_str(&format!("  ({note})"));
        }
        println!("{line}");
    }
}

fn run_checks(trace: &Trace) {
    if trace.get("O_B'").is_some() && trace.get("O_S").is_some() {
        match check_inversion_properties(trace) {
            Ok(rep) => {
                println!(
                    "inversion checks: {}",
                    if rep.all_pass() { "all PASS" } else { "FAIL" }
                );
                for item in rep.items.iter().filter(|i| !i.pass) {
                    println!("  FAIL {}", item.name);
                }
            }
            Err(e) => println!("inversion checks skipped: {e}"),
        }
    }
    if trace.get("X").is_some() && trace.get("O_C").is_some() {
        match check_gergonne(trace) {
            Ok(rep) => {
                println!(
                    "gergonne checks: {}",
                    if rep.all_pass() { "all PASS" } else { "FAIL" }
                );
                for item in rep.items.iter().filter(|i| !i.pass) {
                    println!("  FAIL {}", item.name);
                }
            }
            Err(e) => println!("gergonne checks skipped: {e}"),
        }
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::List => {
            for named in catalog::catalog() {
                println!(
                    "{:28} {:>2} moves  {}",
                    named.name(),
                    named.program.budget,
                    named.doc
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { program } => {
            let p = load_program(&program)?;
            println!("{}", p.count_moves());
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { program, board, seed, overrides, out, checks } => {
            let p = load_program(&program)?;
            let board = load_board(&board)?;
            let mut env = parse_overrides(&overrides)?;
            env.seed = seed;
            let trace = match execute(&p, &board, &env) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("execution failed: {e}");
                    return Ok(ExitCode::from(1));
                }
            };
            let report = verify(&trace, &p.goals)?;
            println!(
                "{} moves; goals: {}",
                trace.move_count,
                if report.all_pass() { "all PASS" } else { "FAIL" }
            );
            print_report(&report);
            if checks {
                run_checks(&trace);
            }
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&jsonio::trace_to_value(&trace))?;
                write_or_print(&Some(path.clone()), &json)?;
                println!("trace written to {}", path.display());
            }
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { trace, goals } => {
            let v = read_json(&trace)?;
            let trace = jsonio::trace_from_value(&v, "")?;
            let goal_list = if let Some(named) = catalog::find(&goals) {
                named.program.goals
            } else {
                let path = Path::new(&goals);
                if path.exists() {
                    let v = read_json(path)?;
                    match v.as_array() {
                        Some(arr) => arr
                            .iter()
                            .enumerate()
                            .map(|(i, g)| jsonio::goal_from_value(g, &format!("/{i}")))
                            .collect::<Result<Vec<_>, _>>()?,
                        None => anyhow::bail!("goals file must be a JSON array"),
                    }
                } else {
                    anyhow::bail!("unknown goals '{goals}'")
                }
            };
            let report = match verify(&trace, &goal_list) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("verification failed: {e}");
                    return Ok(ExitCode::from(1));
                }
            };
            println!("goals: {}", if report.all_pass() { "all PASS" } else { "FAIL" });
            print_report(&report);
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Render { trace, style, bits, out } => {
            let v = read_json(&trace)?;
            let trace = jsonio::trace_from_value(&v, "")?;
            let mut style = match style {
                Some(path) => RenderStyle::from_value(&read_json(&path)?, "")?,
                None => RenderStyle::default(),
            };
            if let Some(bits) = bits {
                style.bits = bits;
            }
            let (svg, warnings) = render_svg(&trace, &style);
            for w in warnings {
                eprintln!("warning: {w}");
            }
            write_or_print(&out, &svg)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { task, max_moves, nodes, time, certify, out } => {
            let v = read_json(&task)?;
            let mut task = search::task_from_value(&v, "")?;
            if let Some(m) = max_moves {
                task.max_moves = m;
            }
            if let Some(n) = nodes {
                task.node_cap = n;
            }
            if let Some(secs) = time {
                task.time_cap = Some(Duration::from_secs_f64(secs));
            }
            if let Some(depth) = certify {
                let cert = match search::certify_lower_bound(&task, depth) {
                    Ok(c) => c,
                    Err(e) => {
                        eprintln!("certification failed: {e}");
                        return Ok(ExitCode::from(1));
                    }
                };
                match &cert {
                    search::CertifyOutcome::Certificate { statement, nodes, .. } => {
                        println!("certificate: {statement} ({nodes} nodes)");
                    }
                    search::CertifyOutcome::Counterexample { depth, programs } => {
                        println!(
                            "counterexample: {} program(s) of {depth} move(s) achieve the goal",
                            programs.len()
                        );
                    }
                }
                let json = serde_json::to_string_pretty(&search::certificate_to_value(&cert))?;
                write_or_print(&out, &json)?;
                return Ok(ExitCode::SUCCESS);
            }
            let outcome = search::enumerate(&task)?;
            match &outcome {
                search::SearchOutcome::Found { depth, programs, nodes, .. } => {
                    println!(
                        "found {} program(s) at depth {depth} ({nodes} nodes)",
                        programs.len()
                    );
                }
                search::SearchOutcome::Exhausted { depth, nodes, caveat, .. } => {
                    println!(
                        "exhausted depth {depth} ({nodes} nodes){}",
                        if *caveat { ", incomplete (cap hit)" } else { "" }
                    );
                }
            }
            let json = serde_json::to_string_pretty(&search::outcome_to_value(&task, &outcome))?;
            write_or_print(&out, &json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { dir } => {
            std::fs::create_dir_all(&dir)?;
            for named in catalog::catalog() {
                let path = dir.join(format!("{}.json", named.name()));
                let json = serde_json::to_string_pretty(&jsonio::program_to_value(&named.program))?;
                std::fs::write(&path, json)?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
