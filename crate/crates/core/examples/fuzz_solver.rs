//! Solves random instances and reports failures and routine usage:
//! `cargo run --release --example fuzz_solver -- [count] [seed] [spare] [main|sb]`.

#[path = "../tests/common/mod.rs"]
mod common;

use critcover::geometry::{verify_cover_with_slack, RectRegion, DEFAULT_DEPTH};
use critcover::solver::{solve_traced, CoverTask, TaskRegime};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::Instant;

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let spare: Option<f64> = args.next().and_then(|s| s.parse().ok()).filter(|u: &f64| *u >= 0.0);
    let sb = args.next().as_deref() == Some("sb");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut solved, mut failed, mut uncovered) = (0, 0, 0);
    let mut usage: BTreeMap<&'static str, usize> = BTreeMap::new();
    let start = Instant::now();
    for k in 0..count {
        let (task, spare) = if sb {
            let inst = common::sb_instance(&mut rng, spare);
            (CoverTask::with_regime(RectRegion::unit(inst.lambda), inst.disks, TaskRegime::WeightBoundedSb), inst.spare)
        } else {
            let mut inst = common::instance(&mut rng);
            if let Some(u) = spare {
                inst.disks = common::scaled(inst.disks.radii(), inst.lambda, u);
                inst.spare = u;
            }
            (CoverTask::main(inst.lambda, inst.disks), inst.spare)
        };
        let t = Instant::now();
        let desc = format!("λ={} n={} spare={spare:.3e}", task.region.w, task.disks.len());
        match solve_traced(&task) {
            Ok((p, trace)) => {
                for r in trace {
                    *usage.entry(r).or_default() += 1;
                }
                // Tight instances touch with zero margin; they get the test slack.
                let slack = if spare < 1e-6 { 1e-9 } else { 0.0 };
                match verify_cover_with_slack(&p, &task.disks, DEFAULT_DEPTH, slack) {
                    Ok(v) if v.covered => solved += 1,
                    Ok(v) => {
                        uncovered += 1;
                        println!("#{k} UNCOVERED {desc} witness={:?}", v.witness);
                    }
                    Err(e) => {
                        uncovered += 1;
                        println!("#{k} VERIFY {e} {desc}");
                    }
                }
            }
            Err(e) => {
                failed += 1;
                println!("#{k} FAIL {desc}: {e}");
            }
        }
        let dt = t.elapsed().as_secs_f64();
        if dt > 2.0 {
            println!("#{k} slow {dt:.1}s {desc}");
        }
    }
    println!("routines: {usage:?}");
    println!("solved {solved} failed {failed} uncovered {uncovered} in {:.1}s", start.elapsed().as_secs_f64());
}
