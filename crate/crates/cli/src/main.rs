//! `critcover`: thresholds, decisions, coverings, verification and the prover.
//!
//! Exit codes: 0 success, 1 negative verdict (not coverable, not covered),
//! 2 argument or input error, 3 internal failure.

mod json;
mod radii;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use critcover::geometry::{
    placement_from_json, placement_to_svg, verify_cover_with_slack, DiskSet, Placement, PlacementDoc, VerifyError,
    DEFAULT_DEPTH,
};
use critcover::interval::Interval;
use critcover::prover::{prove, ProverConfig, ProverError, ProverMode, Resolution};
use critcover::solver::{solve_traced, CoverTask, SolveError};
use critcover::thresholds::{branch, critical_coefficient, critical_weight, CriticalConstants};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::radii::read_radii;

const THREADS_ENV: &str = "CRITCOVER_THREADS";

#[derive(Parser, Debug)]
#[command(name = "critcover", version, about = "Worst-case-optimal disk coverings of λ × 1 rectangles")]
struct Cli {
    /// Print progress and diagnostics to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Critical weight and related constants for one skew.
    Thresholds {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
    },
    /// Whether the disks can cover the λ × 1 rectangle.
    Decide(Instance),
    /// Constructs a covering and writes it as JSON and/or SVG.
    Cover {
        #[command(flatten)]
        instance: Instance,
        /// SVG drawing destination, `-` for stdout.
        #[arg(long)]
        svg: Option<String>,
        /// Placement JSON destination, `-` for stdout.
        #[arg(long)]
        json: Option<String>,
    },
    /// Checks a placement document independently of the solver.
    Verify {
        #[arg(long)]
        placement: PathBuf,
        /// Enlarges every radius; only for configurations that touch exactly.
        #[arg(long, default_value_t = 0.0)]
        slack: f64,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        /// Drawing with the uncovered witness marked, `-` for stdout.
        #[arg(long)]
        svg: Option<String>,
    },
    /// Runs the branch-and-prune prover over a skew range.
    Prove {
        #[arg(long, default_value = "main")]
        mode: ProverMode,
        /// Skew range `a:b`.
        #[arg(long, default_value = "1:1.1")]
        lambda_range: String,
        /// Number of tracked largest disks.
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Fan-out per axis, `LxW` for the first generation then `LxW` for later ones.
        #[arg(long, default_value = "64x32,2x8")]
        resolution: Resolution,
        #[arg(long, default_value_t = 4)]
        generations: usize,
        /// Also report boxes that a routine resolved.
        #[arg(long)]
        keep_resolved: bool,
        /// Report destination, `-` for stdout.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Covers random instances and checks each placement after a JSON round trip.
    Fuzz {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest disk count drawn.
        #[arg(long, default_value_t = 200)]
        max_disks: usize,
    },
}

#[derive(Args, Debug)]
struct Instance {
    #[arg(long, allow_hyphen_values = true)]
    lambda: f64,
    /// File of radii, or an inline comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    radii: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| run(&cli));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Internal(m) => eprintln!("internal failure: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| Failure::Usage(format!("{THREADS_ENV}={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Internal(e.to_string()))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Thresholds { lambda } => thresholds(*lambda),
        Command::Decide(inst) => decide(inst),
        Command::Cover { instance, svg, json } => cover(instance, svg.as_deref(), json.as_deref(), cli.verbose),
        Command::Verify { placement, slack, depth, svg } => verify(placement, *slack, *depth, svg.as_deref()),
        Command::Prove { mode, lambda_range, k, resolution, generations, keep_resolved, out } => {
            let cfg = ProverConfig {
                mode: *mode,
                k: *k,
                resolution: resolution.clone(),
                generations: *generations,
                keep_resolved: *keep_resolved,
            };
            run_prover(&cfg, lambda_range, out, cli.verbose)
        }
        Command::Fuzz { count, seed, max_disks } => fuzz(*count, *seed, *max_disks, cli.verbose),
    }
}

fn emit(dest: &str, text: &str) -> Result<(), Failure> {
    if dest == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(dest, text).map_err(|e| Failure::Usage(format!("cannot write {dest}: {e}")))
    }
}

fn w_star(lambda: f64) -> Result<f64, Failure> {
    critical_weight(lambda).map_err(|e| Failure::Usage(e.to_string()))
}

fn thresholds(lambda: f64) -> Outcome {
    let w = w_star(lambda)?;
    let c = CriticalConstants::get();
    let out = json!({
        "lambda": lambda,
        "W_star": w,
        "A_star": std::f64::consts::PI * w,
        "E_star": critical_coefficient(lambda).map_err(|e| Failure::Usage(e.to_string()))?,
        "branch": branch(lambda),
        "lambda2": c.lambda2,
        "lambda_bar": c.lambda_bar,
    });
    emit("-", &json::to_string(&out))?;
    Ok(0)
}

fn load(inst: &Instance) -> Result<(DiskSet, f64), Failure> {
    let disks = read_radii(&inst.radii).map_err(|e| Failure::Usage(format!("radii: {e}")))?;
    Ok((disks, w_star(inst.lambda)?))
}

fn decide(inst: &Instance) -> Outcome {
    let (disks, need) = load(inst)?;
    let coverable = critcover::solver::is_coverable(inst.lambda, &disks);
    let out = json!({
        "coverable": coverable,
        "W": disks.weight(),
        "W_star": need,
        "margin": disks.weight() - need,
    });
    emit("-", &json::to_string(&out))?;
    Ok(if coverable { 0 } else { 1 })
}

fn solve_error(e: SolveError) -> Outcome {
    match e {
        SolveError::Insufficient { have, need } => {
            eprintln!("not coverable: weight {have} is below {need}");
            Ok(1)
        }
        SolveError::Precondition(m) => Err(Failure::Usage(m)),
        other => Err(Failure::Internal(other.to_string())),
    }
}

fn doc_of(p: &Placement, disks: &DiskSet) -> PlacementDoc {
    PlacementDoc {
        region: p.region,
        disks: disks.radii().to_vec(),
        centers: p.items.iter().map(|&(i, c)| [i as f64, c.x, c.y]).collect(),
    }
}

fn cover(inst: &Instance, svg: Option<&str>, json_out: Option<&str>, verbose: u8) -> Outcome {
    if svg == Some("-") && json_out == Some("-") {
        return Err(Failure::Usage("--svg and --json cannot both write to stdout".into()));
    }
    let (disks, need) = load(inst)?;
    let (placement, trace) = match solve_traced(&CoverTask::main(inst.lambda, disks.clone())) {
        Ok(r) => r,
        Err(e) => return solve_error(e),
    };
    if let Some(dest) = json_out {
        emit(dest, &json::to_string(&doc_of(&placement, &disks)))?;
    }
    if let Some(dest) = svg {
        emit(dest, &placement_to_svg(&placement, &disks, None))?;
    }
    let mut routines: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &trace {
        *routines.entry(r).or_default() += 1;
    }
    let summary = json::to_string(&json!({
        "lambda": inst.lambda,
        "disks": disks.len(),
        "placed": placement.items.len(),
        "W": disks.weight(),
        "W_star": need,
        "routines": routines,
    }));
    if svg != Some("-") && json_out != Some("-") {
        emit("-", &summary)?;
    } else if verbose > 0 {
        eprint!("{summary}");
    }
    Ok(0)
}

fn verify(path: &PathBuf, slack: f64, depth: u32, svg: Option<&str>) -> Outcome {
    if !(slack.is_finite() && slack >= 0.0) {
        return Err(Failure::Usage(format!("slack {slack} must be a non-negative number")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let (p, disks) = placement_from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let verdict = match verify_cover_with_slack(&p, &disks, depth, slack) {
        Ok(v) => v,
        Err(e @ VerifyError::Inconclusive { .. }) => return Err(Failure::Internal(e.to_string())),
        Err(e) => return Err(Failure::Usage(format!("{}: {e}", path.display()))),
    };
    if let Some(dest) = svg {
        emit(dest, &placement_to_svg(&p, &disks, verdict.witness))?;
    }
    let out = json!({
        "covered": verdict.covered,
        "witness": verdict.witness.map(|w| [w.x, w.y]),
        "cells_examined": verdict.cells_examined,
    });
    if svg != Some("-") {
        emit("-", &json::to_string(&out))?;
    }
    Ok(if verdict.covered { 0 } else { 1 })
}

fn parse_range(s: &str) -> Result<Interval, Failure> {
    let bad = || Failure::Usage(format!("lambda range {s:?} must look like a:b with 1 <= a <= b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    if !(a.is_finite() && b.is_finite() && 1.0 <= a && a <= b) {
        return Err(bad());
    }
    Ok(Interval::new(a, b))
}

fn run_prover(cfg: &ProverConfig, range: &str, out: &str, verbose: u8) -> Outcome {
    let range = parse_range(range)?;
    let report = prove(range, cfg).map_err(|e| match e {
        ProverError::Config(_) | ProverError::Range(_) | ProverError::UnknownCriterion(_) => {
            Failure::Usage(e.to_string())
        }
    })?;
    if verbose > 0 {
        for g in &report.history {
            eprintln!(
                "generation {}: {} roots, {} nodes, {} critical ({} merged), volume {:e}",
                g.generation, g.roots, g.nodes, g.critical, g.merged, g.critical_volume
            );
        }
    }
    emit(out, &json::to_string(&report))?;
    Ok(0)
}

/// Radii in `(0, 1]` with a random skew toward small disks, scaled to `W*(λ)(1 + spare)`.
fn random_instance(rng: &mut ChaCha8Rng, max_disks: usize) -> (f64, DiskSet) {
    let lambda = rng.gen_range(1.0..3.0);
    let n = rng.gen_range(1..=max_disks.max(1));
    let power = [1.0, 2.0, 4.0][rng.gen_range(0..3)];
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(1e-3f64..1.0).powf(power)).collect();
    let spare = rng.gen_range(1e-4..0.2);
    let w: f64 = raw.iter().map(|r| r * r).sum();
    let f = (critical_weight(lambda).expect("λ ≥ 1") * (1.0 + spare) / w).sqrt();
    (lambda, DiskSet::new(raw.iter().map(|r| r * f).collect()).expect("positive radii"))
}

fn fuzz(count: usize, seed: u64, max_disks: usize, verbose: u8) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut covered, mut uncovered, mut failed) = (0usize, Vec::new(), Vec::new());
    for k in 0..count {
        let (lambda, disks) = random_instance(&mut rng, max_disks);
        let p = match solve_traced(&CoverTask::main(lambda, disks.clone())) {
            Ok((p, _)) => p,
            Err(e) => {
                failed.push(json!({ "instance": k, "lambda": lambda, "error": e.to_string() }));
                continue;
            }
        };
        let text = json::to_string(&doc_of(&p, &disks));
        let ok = placement_from_json(&text)
            .map_err(|e| e.to_string())
            .and_then(|(q, d)| verify_cover_with_slack(&q, &d, DEFAULT_DEPTH, 0.0).map_err(|e| e.to_string()));
        match ok {
            Ok(v) if v.covered => covered += 1,
            Ok(v) => uncovered.push(json!({ "instance": k, "lambda": lambda, "witness": v.witness.map(|w| [w.x, w.y]) })),
            Err(e) => failed.push(json!({ "instance": k, "lambda": lambda, "error": e })),
        }
        if verbose > 0 && (k + 1) % 50 == 0 {
            eprintln!("{} / {count}", k + 1);
        }
    }
    let code = if !failed.is_empty() { 3 } else if !uncovered.is_empty() { 1 } else { 0 };
    let out = json!({
        "seed": seed,
        "instances": count,
        "covered": covered,
        "uncovered": uncovered,
        "failed": failed,
    });
    emit("-", &json::to_string(&out))?;
    Ok(code)
}
