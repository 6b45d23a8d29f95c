//! Constructive covering: a fixed cascade of placement routines per regime,
//! each placing a few disks and leaving sub-rectangles that are solved
//! recursively.
//!
//! Every task is normalized to `[0, λ] × [0, 1]` with `λ ≥ 1` before a routine
//! runs; placements and subtasks are mapped back to the task's coordinates.
//! Routine criteria are first evaluated strictly (accepted only when
//! definitely true) and, if no routine passes, once more accepting outcomes
//! that are indeterminate within rounding width. The final placement is always
//! re-checked by the independent verifier in tests.

pub(crate) mod main_catalog;
pub(crate) mod plan;
pub mod profile;
pub mod recursion;
pub(crate) mod sb_catalog;
pub(crate) mod shapes;
pub(crate) mod size_bounded;
pub mod wall;

use crate::geometry::{DiskSet, Placement, Point, RectRegion};
use crate::interval::Interval;
use crate::thresholds::{critical_weight, size_bounded_coefficient, E_SB, R_BOUND_SB};
use plan::{Attempt, Cx};
use profile::DiskProfile;
use recursion::Regime;
use thiserror::Error;

pub use wall::{wall_build, wall_conditions, WallColumn, WallError};

/// Relative radius margin used for construction when the weight allows it, so
/// the real disks overlap every seam by a little.
pub const CONSTRUCTION_MARGIN: f64 = 1e-7;

/// Relative tolerance on weight preconditions. Radii given as `√w` lose up to
/// a few ulps when squared again, so exactly critical inputs need it.
pub const WEIGHT_TOLERANCE: f64 = 1e-12;

/// Tripwire on recursion depth.
pub const MAX_DEPTH: u32 = 10_000;

/// Radii below this (relative to the task's short side) are not placed.
pub const DEGENERATE_RADIUS: f64 = 1e-12;

/// Which covering guarantee a task relies on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TaskRegime {
    /// Total weight at least the critical weight of the rectangle.
    MainTheorem,
    /// Largest weight at most `sigma` times the squared short side, total
    /// weight at least `E(σ)` times the area.
    SizeBounded { sigma: f64 },
    /// Radii at most 0.375 times the short side, total weight at least 0.61
    /// times the area.
    WeightBoundedSb,
}

impl From<Regime> for TaskRegime {
    fn from(r: Regime) -> TaskRegime {
        match r {
            Regime::Theorem => TaskRegime::MainTheorem,
            Regime::WeightBounded => TaskRegime::WeightBoundedSb,
            Regime::SizeBounded { sigma } => TaskRegime::SizeBounded { sigma },
        }
    }
}

/// A rectangle to cover with a set of disks.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverTask {
    pub region: RectRegion,
    pub disks: DiskSet,
    /// Caller's index of each disk of `disks`, in the same order.
    pub ids: Vec<usize>,
    pub regime: TaskRegime,
    pub depth: u32,
}

impl CoverTask {
    /// The `λ × 1` rectangle with every disk, under the critical-weight regime.
    pub fn main(lambda: f64, disks: DiskSet) -> CoverTask {
        let ids = (0..disks.len()).collect();
        CoverTask { region: RectRegion::unit(lambda), disks, ids, regime: TaskRegime::MainTheorem, depth: 0 }
    }

    pub fn with_regime(region: RectRegion, disks: DiskSet, regime: TaskRegime) -> CoverTask {
        let ids = (0..disks.len()).collect();
        CoverTask { region, disks, ids, regime, depth: 0 }
    }
}

/// One routine application: the disks it placed and what is left.
#[derive(Debug, Clone)]
pub struct RoutineOutcome {
    pub applied_routine: &'static str,
    /// Centers indexed by the caller's disk ids.
    pub placement_fragment: Placement,
    pub subtasks: Vec<CoverTask>,
}

/// State of the disks when no routine applied.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub lambda: f64,
    pub regime: TaskRegime,
    /// Normalized radii of the seven largest disks.
    pub largest: Vec<f64>,
    /// Normalized weight of all disks.
    pub weight: f64,
    pub disks: usize,
    pub depth: u32,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("total weight {have} is below the required {need}")]
    Insufficient { have: f64, need: f64 },
    #[error("task violates its regime: {0}")]
    Precondition(String),
    #[error("no routine applies: {0:?}")]
    NoRoutine(Box<Diagnostic>),
    #[error("recursion depth exceeded {MAX_DEPTH}")]
    DepthExceeded,
}

/// Similarity from the normalized frame to task coordinates.
#[derive(Debug, Clone, Copy)]
struct Frame {
    x: f64,
    y: f64,
    scale: f64,
    swap: bool,
    lambda: f64,
}

impl Frame {
    fn of(r: &RectRegion) -> Frame {
        let swap = r.h > r.w;
        let scale = r.w.min(r.h);
        Frame { x: r.x, y: r.y, scale, swap, lambda: r.w.max(r.h) / scale }
    }

    fn point(&self, px: f64, py: f64) -> Point {
        let (u, v) = if self.swap { (py, px) } else { (px, py) };
        Point::new(self.x + self.scale * u, self.y + self.scale * v)
    }

    fn rect(&self, r: &recursion::Rect) -> RectRegion {
        let (x, y, w, h) = if self.swap { (r.y, r.x, r.h, r.w) } else { (r.x, r.y, r.w, r.h) };
        RectRegion { x: self.x + self.scale * x, y: self.y + self.scale * y, w: self.scale * w, h: self.scale * h }
    }
}

/// Whether disks of total weight `W(D)` suffice for the `λ × 1` rectangle.
pub fn is_coverable(lambda: f64, disks: &DiskSet) -> bool {
    critical_weight(lambda).map_or(false, |w| disks.weight() >= w * (1.0 - WEIGHT_TOLERANCE))
}

/// Extremal instances that are coverable with zero spare weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WorstCase {
    /// Disks of weights `(λ²+1)/4` and `1/4`.
    TwoDisk,
    /// Three equal disks of weight `λ²/16 + 5/32 + 9/(256λ²)`.
    ThreeEqual,
}

pub fn worst_case_instances(lambda: f64, family: WorstCase) -> DiskSet {
    let weights = match family {
        WorstCase::TwoDisk => vec![(lambda * lambda + 1.0) / 4.0, 0.25],
        WorstCase::ThreeEqual => vec![crate::thresholds::three_equal_radius_sq(lambda); 3],
    };
    DiskSet::new(weights.into_iter().map(f64::sqrt).collect()).expect("positive weights")
}

/// Explicit covering of a worst-case instance of the `λ × 1` rectangle.
#[derive(Debug, Clone)]
pub struct WorstCaseCover {
    pub disks: DiskSet,
    pub placement: Placement,
    /// Width of the full-height strip covered by the first disk.
    pub first_strip: f64,
    /// Height of the rectangle covered by the second disk next to the strip
    /// (three equal disks only).
    pub second_height: Option<f64>,
}

/// Three equal disks: the first covers a full-height strip of width
/// `√(4r²−1)` on the left, the second and third cover the bottom and top of
/// the rest, split at the height the second disk reaches. Two disks: the
/// larger one is the circumcircle.
pub fn worst_case_cover(lambda: f64, family: WorstCase) -> WorstCaseCover {
    let disks = worst_case_instances(lambda, family);
    let mut placement = Placement::new(RectRegion::unit(lambda));
    match family {
        WorstCase::TwoDisk => {
            placement.items.push((0, Point::new(lambda / 2.0, 0.5)));
            placement.items.push((1, Point::new(lambda / 2.0, 0.5)));
            WorstCaseCover { disks, placement, first_strip: lambda, second_height: None }
        }
        WorstCase::ThreeEqual => {
            let d2 = 4.0 * crate::thresholds::three_equal_radius_sq(lambda);
            let s1 = (d2 - 1.0).max(0.0).sqrt();
            let h2 = (d2 - (lambda - s1).powi(2)).max(0.0).sqrt();
            let x = (s1 + lambda) / 2.0;
            placement.items.push((0, Point::new(s1 / 2.0, 0.5)));
            placement.items.push((1, Point::new(x, h2 / 2.0)));
            placement.items.push((2, Point::new(x, (1.0 + h2) / 2.0)));
            WorstCaseCover { disks, placement, first_strip: s1, second_height: Some(h2) }
        }
    }
}

fn normalized_weights(task: &CoverTask, scale: f64) -> Vec<f64> {
    task.disks.radii().iter().map(|r| (r / scale) * (r / scale)).collect()
}

/// Least normalized weight the task's regime demands, and its radius bound.
fn regime_need(regime: TaskRegime, lambda: f64) -> Result<(f64, Option<f64>), SolveError> {
    match regime {
        TaskRegime::MainTheorem => {
            let need = critical_weight(lambda).map_err(|e| SolveError::Precondition(e.to_string()))?;
            Ok((need, None))
        }
        TaskRegime::WeightBoundedSb => Ok((E_SB * lambda, Some(R_BOUND_SB * R_BOUND_SB))),
        TaskRegime::SizeBounded { sigma } => {
            let e = size_bounded_coefficient(sigma).map_err(|e| SolveError::Precondition(e.to_string()))?;
            Ok((e * lambda, Some(sigma)))
        }
    }
}

/// Checks the task's regime invariant.
pub fn validate(task: &CoverTask) -> Result<(), SolveError> {
    if task.ids.len() != task.disks.len() {
        return Err(SolveError::Precondition("ids and disks differ in length".into()));
    }
    let f = Frame::of(&task.region);
    let w = normalized_weights(task, f.scale);
    let have: f64 = w.iter().sum();
    let (need, bound) = regime_need(task.regime, f.lambda)?;
    if have < need * (1.0 - WEIGHT_TOLERANCE) {
        return Err(SolveError::Insufficient { have, need });
    }
    if let (Some(bound), Some(&w1)) = (bound, w.first()) {
        if w1 > bound {
            return Err(SolveError::Precondition(format!("largest weight {w1} exceeds {bound}")));
        }
    }
    if task.regime == TaskRegime::WeightBoundedSb && task.disks.len() < 5 {
        return Err(SolveError::Precondition("fewer than five disks under the radius bound".into()));
    }
    Ok(())
}

fn dispatch(cx: &Cx, regime: TaskRegime) -> Attempt {
    match regime {
        TaskRegime::MainTheorem => main_catalog::run(cx),
        TaskRegime::WeightBoundedSb => sb_catalog::run(cx),
        TaskRegime::SizeBounded { sigma } => size_bounded::run(cx, sigma),
    }
}

/// Applies the first routine whose criterion holds.
pub fn step(task: &CoverTask) -> Result<RoutineOutcome, SolveError> {
    if task.depth > MAX_DEPTH {
        return Err(SolveError::DepthExceeded);
    }
    let f = Frame::of(&task.region);
    let weights = normalized_weights(task, f.scale);
    let d = DiskProfile::concrete(&weights);
    let lam = Interval::point(f.lambda);
    let strict = Cx { lam, d: &d, tolerant: false };
    let mut a = dispatch(&strict, task.regime);
    if !a.verdict.is_true() {
        let tolerant = Cx { lam, d: &d, tolerant: true };
        a = dispatch(&tolerant, task.regime);
        if !a.verdict.possibly_true() {
            let diag = Diagnostic {
                lambda: f.lambda,
                regime: task.regime,
                largest: weights.iter().take(7).map(|w| w.sqrt()).collect(),
                weight: weights.iter().sum(),
                disks: weights.len(),
                depth: task.depth,
            };
            return Err(SolveError::NoRoutine(Box::new(diag)));
        }
    }
    let mut frag = Placement::new(task.region);
    for &(i, x, y) in &a.placed {
        if task.disks.radius(i) >= DEGENERATE_RADIUS * f.scale {
            frag.items.push((task.ids[i], f.point(x, y)));
        }
    }
    let mut subtasks = Vec::with_capacity(a.subs.len());
    for s in a.subs {
        let members = s.pool.members();
        if members.is_empty() {
            continue;
        }
        let radii: Vec<f64> = members.iter().map(|&i| task.disks.radius(i)).collect();
        let ids = members.iter().map(|&i| task.ids[i]).collect();
        let disks = DiskSet::new(radii).expect("radii of a valid set");
        subtasks.push(CoverTask { region: f.rect(&s.rect), disks, ids, regime: s.regime.into(), depth: task.depth + 1 });
    }
    Ok(RoutineOutcome { applied_routine: a.routine, placement_fragment: frag, subtasks })
}

/// Covers the task's region, returning centers indexed by the task's ids.
pub fn solve(task: &CoverTask) -> Result<Placement, SolveError> {
    solve_traced(task).map(|(p, _)| p)
}

/// As [`solve`], also listing the routine applied at every step.
pub fn solve_traced(task: &CoverTask) -> Result<(Placement, Vec<&'static str>), SolveError> {
    validate(task)?;
    let f = Frame::of(&task.region);
    let (need, _) = regime_need(task.regime, f.lambda)?;
    let have: f64 = normalized_weights(task, f.scale).iter().sum();
    let shrink = 1.0 - CONSTRUCTION_MARGIN;
    let mut root = task.clone();
    if have * shrink * shrink >= need {
        root.disks = task.disks.scaled(shrink);
    }
    let mut out = Placement::new(task.region);
    let mut trace = Vec::new();
    let mut stack = vec![root];
    while let Some(t) = stack.pop() {
        let o = step(&t)?;
        trace.push(o.applied_routine);
        out.items.extend(o.placement_fragment.items);
        stack.extend(o.subtasks);
    }
    Ok((out, trace))
}

/// Convenience for the `λ × 1` rectangle under the critical-weight regime.
pub fn cover(lambda: f64, disks: &DiskSet) -> Result<Placement, SolveError> {
    solve(&CoverTask::main(lambda, disks.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{verify_cover, verify_cover_with_slack, DEFAULT_DEPTH};

    fn assert_covers(p: &Placement, d: &DiskSet) {
        let v = verify_cover(p, d, DEFAULT_DEPTH).unwrap();
        assert!(v.covered, "witness {:?}", v.witness);
    }

    #[test]
    fn frame_round_trips_rotation() {
        let f = Frame::of(&RectRegion { x: 1.0, y: 2.0, w: 0.5, h: 1.5 });
        assert_eq!(f.lambda, 3.0);
        let p = f.point(3.0, 1.0);
        assert_eq!((p.x, p.y), (1.5, 3.5));
    }

    #[test]
    fn three_equal_cover_splits_at_half_height() {
        for lam in [1.0, 1.02, 1.035] {
            let w = worst_case_cover(lam, WorstCase::ThreeEqual);
            assert!((w.second_height.unwrap() - 0.5).abs() < 1e-12);
            let v = verify_cover_with_slack(&w.placement, &w.disks, DEFAULT_DEPTH, 1e-9).unwrap();
            assert!(v.covered, "λ = {lam}");
        }
        assert_eq!(worst_case_cover(1.0, WorstCase::ThreeEqual).first_strip, 0.125);
    }

    #[test]
    fn worst_case_weights() {
        let d = worst_case_instances(1.5, WorstCase::TwoDisk);
        assert!((d.radius(0).powi(2) - 0.8125).abs() < 1e-15);
        let t = worst_case_instances(1.0, WorstCase::ThreeEqual);
        assert!((t.weight() - 195.0 / 256.0).abs() < 1e-15);
    }

    #[test]
    fn shrunk_three_equal_is_not_coverable() {
        let d = worst_case_instances(1.0, WorstCase::ThreeEqual);
        let w = (65.0f64 / 256.0 - 1e-4).sqrt();
        assert!(is_coverable(1.0, &d));
        assert!(!is_coverable(1.0, &DiskSet::new(vec![w; 3]).unwrap()));
    }

    #[test]
    fn three_equal_disks_cover_the_square() {
        let d = worst_case_instances(1.0, WorstCase::ThreeEqual);
        let p = cover(1.0, &d).unwrap();
        let v = verify_cover_with_slack(&p, &d, DEFAULT_DEPTH, 1e-9).unwrap();
        assert!(v.covered, "{:?}", v.witness);
    }

    #[test]
    fn two_disk_worst_case_at_two() {
        let d = worst_case_instances(2.0, WorstCase::TwoDisk);
        let p = cover(2.0, &d).unwrap();
        let v = verify_cover_with_slack(&p, &d, DEFAULT_DEPTH, 1e-9).unwrap();
        assert!(v.covered, "{:?}", v.witness);
    }

    #[test]
    fn many_equal_disks_on_the_square() {
        let r = (195.0f64 / 256.0 / 200.0).sqrt() * 1.0001;
        let d = DiskSet::new(vec![r; 200]).unwrap();
        let p = cover(1.0, &d).unwrap();
        assert_covers(&p, &d);
    }

    #[test]
    fn insufficient_weight_is_rejected() {
        let d = DiskSet::new(vec![0.1; 3]).unwrap();
        assert!(matches!(cover(1.0, &d), Err(SolveError::Insufficient { .. })));
    }

    #[test]
    fn weight_bounded_five_disks() {
        let d = DiskSet::new(vec![0.3497; 5]).unwrap();
        let task = CoverTask::with_regime(RectRegion::unit(1.0), d.clone(), TaskRegime::WeightBoundedSb);
        let p = solve(&task).unwrap();
        assert_covers(&p, &d);
        let light = DiskSet::new(vec![0.349; 5]).unwrap();
        let task = CoverTask::with_regime(RectRegion::unit(1.0), light, TaskRegime::WeightBoundedSb);
        assert!(matches!(solve(&task), Err(SolveError::Insufficient { .. })));
    }
}
