//! Branch-and-prune search over boxes of `(λ, r₁², …, r_k²)`.
//!
//! Every box is checked against the success criteria of the solver's
//! routines, evaluated in interval arithmetic on a symbolic disk profile:
//! the first `k` squared radii range over the box, the remaining disks only
//! obey the ordering and the fixed total weight. A box is resolved when some
//! criterion is definitely true over all of it. Boxes left at the finest
//! subdivision are critical; they are merged and subdivided again in the
//! next generation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::{Interval, Ternary};
use crate::solver::main_catalog;
use crate::solver::plan::{Attempt, Cx};
use crate::solver::profile::DiskProfile;
use crate::solver::sb_catalog;
use crate::thresholds::{critical_weight, critical_weight_iv, E_SB, R_BOUND_SB};

/// Largest number of tracked disks.
pub const MAX_TRACKED: usize = 7;

/// Criterion id for sub-boxes outside every critical box of the previous
/// generation.
pub const EARLIER_GENERATION: &str = "earlier_generation";

#[derive(Debug, Error, PartialEq)]
pub enum ProverError {
    #[error("invalid prover configuration: {0}")]
    Config(String),
    #[error("invalid skew range {0}")]
    Range(Interval),
    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),
}

/// Which statement the boxes are checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProverMode {
    /// Total weight `W*(λ)`, no bound on the disks.
    #[serde(rename = "main")]
    Main,
    /// Total weight `0.61·λ`, radii at most `0.375`.
    #[serde(rename = "sb")]
    WeightBounded,
}

impl FromStr for ProverMode {
    type Err = ProverError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "main" => Ok(ProverMode::Main),
            "sb" => Ok(ProverMode::WeightBounded),
            _ => Err(ProverError::Config(format!("unknown mode `{s}` (expected main or sb)"))),
        }
    }
}

impl fmt::Display for ProverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProverMode::Main => "main",
            ProverMode::WeightBounded => "sb",
        })
    }
}

type Routine = (&'static str, fn(&Cx) -> Attempt);

impl ProverMode {
    /// Total weight of the disks over a skew box.
    pub fn total_weight(self, lam: Interval) -> Interval {
        match self {
            ProverMode::Main => critical_weight_iv(lam),
            ProverMode::WeightBounded => Interval::ratio(61.0, 100.0) * lam,
        }
    }

    /// Upper end of the `r₁²` axis. In the main mode a disk with
    /// `r₁² ≥ (λ²+1)/4` covers the rectangle alone.
    pub fn largest_weight_cap(self, lam: Interval) -> f64 {
        let total = self.total_weight(lam).hi();
        match self {
            ProverMode::Main => total.min(((lam.sqr() + 1.0) / 4.0).hi()),
            ProverMode::WeightBounded => total.min(R_BOUND_SB * R_BOUND_SB),
        }
    }

    fn routines(self, cx: &Cx) -> Vec<Routine> {
        match self {
            ProverMode::Main => main_catalog::cascade(cx),
            ProverMode::WeightBounded => sb_catalog::cascade().to_vec(),
        }
    }

    /// Stable criterion ids, in evaluation order.
    pub fn criterion_ids(self) -> Vec<&'static str> {
        let d = DiskProfile::concrete(&[]);
        let cx = Cx { lam: Interval::new(1.0, 3.0), d: &d, tolerant: false };
        self.routines(&cx).into_iter().map(|(name, _)| name).collect()
    }
}

/// How many pieces each axis is cut into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fanout {
    pub lambda: usize,
    pub weight: usize,
}

/// Fan-out of the first generation and of every later one, written
/// `64x32` or `64x32,2x8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Resolution {
    pub first: Fanout,
    pub later: Fanout,
}

impl Default for Resolution {
    fn default() -> Self {
        Resolution { first: Fanout { lambda: 64, weight: 32 }, later: Fanout { lambda: 2, weight: 8 } }
    }
}

impl FromStr for Resolution {
    type Err = ProverError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fanout = |part: &str| -> Result<Fanout, ProverError> {
            let bad = || ProverError::Config(format!("bad resolution `{part}` (expected e.g. 64x32)"));
            let (a, b) = part.trim().split_once('x').ok_or_else(bad)?;
            let lambda: usize = a.trim().parse().map_err(|_| bad())?;
            let weight: usize = b.trim().parse().map_err(|_| bad())?;
            if lambda == 0 || weight == 0 {
                return Err(ProverError::Config(format!("resolution `{part}` must be positive")));
            }
            Ok(Fanout { lambda, weight })
        };
        match s.split_once(',') {
            Some((a, b)) => Ok(Resolution { first: fanout(a)?, later: fanout(b)? }),
            None => Ok(Resolution { first: fanout(s)?, ..Resolution::default() }),
        }
    }
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.first, self.later);
        write!(f, "{}x{},{}x{}", a.lambda, a.weight, b.lambda, b.weight)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProverConfig {
    pub mode: ProverMode,
    /// Number of tracked squared radii, at most [`MAX_TRACKED`].
    pub k: usize,
    pub resolution: Resolution,
    pub generations: usize,
    /// Keep every box resolved by a criterion in the report.
    pub keep_resolved: bool,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            mode: ProverMode::Main,
            k: 4,
            resolution: Resolution::default(),
            generations: 4,
            keep_resolved: false,
        }
    }
}

impl ProverConfig {
    pub fn validate(&self) -> Result<(), ProverError> {
        if self.k == 0 || self.k > MAX_TRACKED {
            return Err(ProverError::Config(format!("k = {} must lie in 1..={MAX_TRACKED}", self.k)));
        }
        if self.generations == 0 {
            return Err(ProverError::Config("at least one generation is needed".into()));
        }
        let (a, b) = (self.resolution.first, self.resolution.later);
        if a.lambda == 0 || a.weight == 0 || b.lambda == 0 || b.weight == 0 {
            return Err(ProverError::Config("resolution must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxStatus {
    Unresolved,
    Resolved(String),
    Infeasible,
    Critical,
}

/// A box in `(λ, r₁², …)`. Fewer weight boxes than `k` means the remaining
/// tracked disks were still free when the box was decided.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hypercuboid {
    pub lambda_box: Interval,
    pub weight_boxes: Vec<Interval>,
    pub status: BoxStatus,
}

impl Hypercuboid {
    pub fn new(lambda_box: Interval, weight_boxes: Vec<Interval>) -> Hypercuboid {
        Hypercuboid { lambda_box, weight_boxes, status: BoxStatus::Unresolved }
    }

    /// Product of all side lengths.
    pub fn volume(&self) -> f64 {
        self.weight_boxes.iter().fold(self.lambda_box.width(), |v, w| v * w.width())
    }

    /// Whether the point `(λ, w₁, …)` lies in the box (extra coordinates are
    /// ignored).
    pub fn contains(&self, lambda: f64, weights: &[f64]) -> bool {
        self.lambda_box.contains(lambda) && self.weight_boxes.iter().zip(weights).all(|(b, &w)| b.contains(w))
    }

    fn axes(&self) -> impl Iterator<Item = Interval> + '_ {
        std::iter::once(self.lambda_box).chain(self.weight_boxes.iter().copied())
    }
}

/// Overlap with positive measure along one axis, or any overlap when one
/// side is a point.
fn meets(a: Interval, b: Interval) -> bool {
    a.overlaps(b) && ((a.lo() < b.hi() && b.lo() < a.hi()) || a.width() == 0.0 || b.width() == 0.0)
}

/// Evaluates one criterion over a box.
pub fn criterion_eval(mode: ProverMode, id: &str, b: &Hypercuboid) -> Result<Ternary, ProverError> {
    if !mode.criterion_ids().contains(&id) {
        return Err(ProverError::UnknownCriterion(id.to_string()));
    }
    let d = DiskProfile::symbolic(b.weight_boxes.clone(), mode.total_weight(b.lambda_box));
    let cx = Cx { lam: b.lambda_box, d: &d, tolerant: false };
    Ok(mode
        .routines(&cx)
        .into_iter()
        .find(|(name, _)| *name == id)
        .map_or(Ternary::False, |(_, f)| f(&cx).verdict))
}

/// First criterion that is definitely true over the box.
fn first_resolving(mode: ProverMode, lam: Interval, weights: &[Interval]) -> Option<&'static str> {
    let d = DiskProfile::symbolic(weights.to_vec(), mode.total_weight(lam));
    let cx = Cx { lam, d: &d, tolerant: false };
    mode.routines(&cx).into_iter().find(|(_, f)| f(&cx).verdict.is_true()).map(|(name, _)| name)
}

/// Merges critical boxes that share a skew interval and whose `r₁²` ranges
/// overlap (touching counts) into their enclosing box.
pub fn merge_critical(boxes: &[Hypercuboid]) -> Vec<Hypercuboid> {
    let mut sorted: Vec<&Hypercuboid> = boxes.iter().collect();
    let first_lo = |b: &Hypercuboid| b.weight_boxes.first().map_or(f64::NEG_INFINITY, |w| w.lo());
    sorted.sort_by(|a, b| {
        a.lambda_box
            .lo()
            .total_cmp(&b.lambda_box.lo())
            .then(a.lambda_box.hi().total_cmp(&b.lambda_box.hi()))
            .then(first_lo(a).total_cmp(&first_lo(b)))
    });
    let mut out: Vec<Hypercuboid> = Vec::new();
    for b in sorted {
        if let Some(cur) = out.last_mut() {
            let same_slice = cur.lambda_box == b.lambda_box && cur.weight_boxes.len() == b.weight_boxes.len();
            let touching = match (cur.weight_boxes.first(), b.weight_boxes.first()) {
                (Some(x), Some(y)) => x.overlaps(*y),
                _ => true,
            };
            if same_slice && touching {
                for (c, w) in cur.weight_boxes.iter_mut().zip(&b.weight_boxes) {
                    *c = Interval::hull(*c, *w);
                }
                continue;
            }
        }
        let mut m = b.clone();
        m.status = BoxStatus::Critical;
        out.push(m);
    }
    out
}

/// Per-generation counters.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GenerationSummary {
    pub generation: usize,
    pub roots: usize,
    pub nodes: u64,
    pub infeasible: u64,
    pub resolved_by: BTreeMap<String, u64>,
    pub critical: usize,
    pub merged: usize,
    pub critical_volume: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalReport {
    pub mode: ProverMode,
    pub k: usize,
    pub lambda_range: Interval,
    pub resolution: String,
    /// Number of generations run.
    pub generation: usize,
    /// Critical boxes of the last generation.
    pub boxes: Vec<Hypercuboid>,
    pub merged_boxes: Vec<Hypercuboid>,
    pub history: Vec<GenerationSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub resolved: Vec<Hypercuboid>,
}

impl CriticalReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A region explored in one generation: its bounds and, after the first
/// generation, the critical boxes it was merged from.
struct Root {
    bounds: Hypercuboid,
    prior: Option<Vec<Hypercuboid>>,
}

#[derive(Default)]
struct Acc {
    nodes: u64,
    infeasible: u64,
    resolved_by: BTreeMap<&'static str, u64>,
    critical: Vec<Hypercuboid>,
    resolved: Vec<Hypercuboid>,
}

impl Acc {
    fn absorb(&mut self, o: Acc) {
        self.nodes += o.nodes;
        self.infeasible += o.infeasible;
        for (k, v) in o.resolved_by {
            *self.resolved_by.entry(k).or_default() += v;
        }
        self.critical.extend(o.critical);
        self.resolved.extend(o.resolved);
    }
}

fn pieces(range: Interval, n: usize) -> Vec<Interval> {
    let (lo, hi) = (range.lo(), range.hi());
    let cut = |j: usize| if j == n { hi } else { lo + (hi - lo) * j as f64 / n as f64 };
    (0..n).map(|j| Interval::new(cut(j), cut(j + 1).max(cut(j)))).collect()
}

struct Search<'a> {
    cfg: &'a ProverConfig,
    fan: Fanout,
    root: &'a Root,
}

impl Search<'_> {
    fn explore(&self, lam: Interval, weights: &mut Vec<Interval>, acc: &mut Acc) {
        acc.nodes += 1;
        let mode = self.cfg.mode;
        let i = weights.len();
        let known: Interval = weights.iter().copied().sum();
        if known.lo() > mode.total_weight(lam).hi() {
            acc.infeasible += 1;
            return;
        }
        let prior: Vec<&Hypercuboid> = match &self.root.prior {
            Some(p) => p
                .iter()
                .filter(|b| meets(b.lambda_box, lam) && b.weight_boxes.iter().zip(weights.iter()).all(|(x, y)| meets(*x, *y)))
                .collect(),
            None => Vec::new(),
        };
        if self.root.prior.is_some() && prior.is_empty() {
            *acc.resolved_by.entry(EARLIER_GENERATION).or_default() += 1;
            return;
        }
        if i > 0 {
            if let Some(id) = first_resolving(mode, lam, weights) {
                *acc.resolved_by.entry(id).or_default() += 1;
                if self.cfg.keep_resolved {
                    acc.resolved.push(Hypercuboid {
                        lambda_box: lam,
                        weight_boxes: weights.clone(),
                        status: BoxStatus::Resolved(id.to_string()),
                    });
                }
                return;
            }
        }
        if i == self.cfg.k {
            let leaf = Hypercuboid { lambda_box: lam, weight_boxes: weights.clone(), status: BoxStatus::Critical };
            if self.root.prior.is_none() {
                acc.critical.push(leaf);
            } else {
                // Only the part inside last generation's critical boxes is open.
                for p in prior {
                    let clipped: Vec<Interval> = leaf.axes().zip(p.axes()).map(|(a, b)| a.intersect(b)).collect();
                    if clipped.iter().all(|c| c.is_valid()) {
                        acc.critical.push(Hypercuboid {
                            lambda_box: clipped[0],
                            weight_boxes: clipped[1..].to_vec(),
                            status: BoxStatus::Critical,
                        });
                    }
                }
            }
            return;
        }
        let cap = if i == 0 { mode.largest_weight_cap(lam) } else { weights[i - 1].hi() };
        let axis = self.root.bounds.weight_boxes[i].intersect(Interval::new(0.0, cap.max(0.0)));
        if !axis.is_valid() {
            acc.infeasible += 1;
            return;
        }
        for piece in pieces(axis, self.fan.weight) {
            weights.push(piece);
            self.explore(lam, weights, acc);
            weights.pop();
        }
    }
}

fn run_generation(cfg: &ProverConfig, roots: &[Root], fan: Fanout) -> Acc {
    let jobs: Vec<(usize, Interval)> = roots
        .iter()
        .enumerate()
        .flat_map(|(r, root)| pieces(root.bounds.lambda_box, fan.lambda).into_iter().map(move |l| (r, l)))
        .collect();
    let parts: Vec<Acc> = jobs
        .par_iter()
        .map(|&(r, lam)| {
            let mut acc = Acc::default();
            Search { cfg, fan, root: &roots[r] }.explore(lam, &mut Vec::with_capacity(cfg.k), &mut acc);
            acc
        })
        .collect();
    let mut all = Acc::default();
    for p in parts {
        all.absorb(p);
    }
    all
}

/// Runs the configured number of generations over `lambda_range`.
pub fn prove(lambda_range: Interval, cfg: &ProverConfig) -> Result<CriticalReport, ProverError> {
    cfg.validate()?;
    if !lambda_range.is_valid() || lambda_range.lo() < 1.0 {
        return Err(ProverError::Range(lambda_range));
    }
    let cap = cfg.mode.largest_weight_cap(lambda_range);
    let mut roots = vec![Root {
        bounds: Hypercuboid::new(lambda_range, vec![Interval::new(0.0, cap); cfg.k]),
        prior: None,
    }];
    let mut report = CriticalReport {
        mode: cfg.mode,
        k: cfg.k,
        lambda_range,
        resolution: cfg.resolution.to_string(),
        generation: 0,
        boxes: Vec::new(),
        merged_boxes: Vec::new(),
        history: Vec::new(),
        resolved: Vec::new(),
    };
    for g in 0..cfg.generations {
        let fan = if g == 0 { cfg.resolution.first } else { cfg.resolution.later };
        let acc = run_generation(cfg, &roots, fan);
        let merged = merge_critical(&acc.critical);
        report.history.push(GenerationSummary {
            generation: g + 1,
            roots: roots.len(),
            nodes: acc.nodes,
            infeasible: acc.infeasible,
            resolved_by: acc.resolved_by.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            critical: acc.critical.len(),
            merged: merged.len(),
            critical_volume: acc.critical.iter().map(Hypercuboid::volume).sum(),
        });
        report.generation = g + 1;
        report.resolved.extend(acc.resolved);
        roots = merged
            .iter()
            .map(|m| Root {
                bounds: m.clone(),
                prior: Some(acc.critical.iter().filter(|c| c.lambda_box == m.lambda_box && m.weight_boxes[0].overlaps(c.weight_boxes[0])).cloned().collect()),
            })
            .collect();
        report.boxes = acc.critical;
        report.merged_boxes = merged;
        if report.boxes.is_empty() {
            break;
        }
    }
    Ok(report)
}

/// Draws a concrete instance from a box: `λ`, then the tracked weights in
/// order, then further disks no heavier than the last tracked one until the
/// mode's total is reached. `uniform` yields samples in `[0, 1)`. Returns
/// `None` when the draw breaks the ordering or total, or needs more than
/// `max_disks` disks.
pub fn sample_instance(
    mode: ProverMode,
    b: &Hypercuboid,
    max_disks: usize,
    mut uniform: impl FnMut() -> f64,
) -> Option<(f64, Vec<f64>)> {
    let mut pick = |iv: Interval| iv.lo() + uniform() * iv.width();
    let lam = pick(b.lambda_box);
    let share = Interval::new(0.25, 1.0);
    let total = match mode {
        ProverMode::Main => critical_weight(lam).ok()?,
        ProverMode::WeightBounded => E_SB * lam,
    };
    let mut weights = Vec::new();
    let mut cap = mode.largest_weight_cap(Interval::point(lam));
    for w in &b.weight_boxes {
        let range = w.intersect(Interval::new(0.0, cap));
        if !range.is_valid() {
            return None;
        }
        let x = pick(range);
        weights.push(x);
        cap = x;
    }
    let mut rest = total - weights.iter().sum::<f64>();
    if rest < 0.0 || cap <= 0.0 {
        return None;
    }
    while rest > 0.0 {
        if weights.len() >= max_disks {
            return None;
        }
        let x = (cap * pick(share)).min(rest);
        weights.push(x);
        rest -= x;
        if rest <= total * 1e-15 {
            break;
        }
    }
    weights.sort_by(|a, b| b.total_cmp(a));
    Some((lam, weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thresholds::three_equal_radius_sq;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b)
    }

    fn critical(lam: Interval, w: &[(f64, f64)]) -> Hypercuboid {
        let mut b = Hypercuboid::new(lam, w.iter().map(|&(a, c)| iv(a, c)).collect());
        b.status = BoxStatus::Critical;
        b
    }

    #[test]
    fn touching_boxes_merge() {
        let lam = iv(1.0, 1.01);
        let m = merge_critical(&[critical(lam, &[(0.1, 0.2), (0.0, 0.1)]), critical(lam, &[(0.2, 0.3), (0.1, 0.2)])]);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].weight_boxes, vec![iv(0.1, 0.3), iv(0.0, 0.2)]);
    }

    #[test]
    fn disjoint_boxes_stay_apart() {
        let lam = iv(1.0, 1.01);
        let a = critical(lam, &[(0.1, 0.2)]);
        let b = critical(lam, &[(0.25, 0.3)]);
        let c = critical(iv(1.01, 1.02), &[(0.1, 0.2)]);
        assert_eq!(merge_critical(&[a.clone(), b.clone(), c.clone()]), vec![a, b, c]);
    }

    #[test]
    fn nothing_to_merge() {
        assert!(merge_critical(&[]).is_empty());
    }

    #[test]
    fn resolution_parses_both_forms() {
        let r: Resolution = "16x8".parse().unwrap();
        assert_eq!(r.first, Fanout { lambda: 16, weight: 8 });
        assert_eq!(r.later, Resolution::default().later);
        let r: Resolution = "4x4,2x3".parse().unwrap();
        assert_eq!(r.to_string(), "4x4,2x3");
        assert!("0x4".parse::<Resolution>().is_err());
        assert!("64".parse::<Resolution>().is_err());
    }

    #[test]
    fn config_rejects_bad_k() {
        let cfg = ProverConfig { k: 8, ..ProverConfig::default() };
        assert!(matches!(cfg.validate(), Err(ProverError::Config(_))));
        let cfg = ProverConfig { k: 0, ..ProverConfig::default() };
        assert!(cfg.validate().is_err());
        assert!(prove(iv(0.5, 1.0), &ProverConfig::default()).is_err());
    }

    #[test]
    fn criterion_ids_are_distinct() {
        for mode in [ProverMode::Main, ProverMode::WeightBounded] {
            let ids = mode.criterion_ids();
            let mut dedup = ids.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), ids.len());
        }
        assert!(matches!(
            criterion_eval(ProverMode::Main, "nope", &critical(iv(1.0, 1.0), &[(0.1, 0.1)])),
            Err(ProverError::UnknownCriterion(_))
        ));
    }

    #[test]
    fn small_first_disk_resolves() {
        let b = Hypercuboid::new(iv(1.0, 1.0), vec![iv(0.1, 0.11)]);
        assert_eq!(criterion_eval(ProverMode::Main, "small_disks", &b), Ok(Ternary::True));
    }

    #[test]
    fn heavy_seventh_disk_defeats_wall_building() {
        let w = vec![iv(0.0225, 0.0256); 7];
        let b = Hypercuboid::new(iv(1.5, 1.5), w);
        let t = criterion_eval(ProverMode::WeightBounded, "wb1", &b).unwrap();
        assert!(!t.is_true());
    }

    #[test]
    fn worst_case_point_is_never_resolved() {
        let lam = 1.0;
        let r2 = three_equal_radius_sq(lam);
        let b = Hypercuboid::new(iv(lam, lam), vec![iv(r2, r2); 3]);
        for id in ProverMode::Main.criterion_ids() {
            let t = criterion_eval(ProverMode::Main, id, &b).unwrap();
            assert!(!t.is_true(), "{id} resolved the worst case");
        }
    }

    #[test]
    fn coarse_run_keeps_the_worst_case_critical() {
        let cfg = ProverConfig { k: 2, resolution: "2x8,2x4".parse().unwrap(), generations: 2, ..ProverConfig::default() };
        let report = prove(iv(1.0, 1.02), &cfg).unwrap();
        let r2 = three_equal_radius_sq(1.01);
        assert!(report.boxes.iter().any(|b| b.contains(1.01, &[r2, r2])));
        let vols: Vec<f64> = report.history.iter().map(|h| h.critical_volume).collect();
        assert!(vols.windows(2).all(|w| w[1] <= w[0]), "{vols:?}");
    }

    #[test]
    fn samples_respect_the_box() {
        let b = Hypercuboid::new(iv(1.2, 1.3), vec![iv(0.2, 0.3), iv(0.1, 0.2)]);
        let mut state = 0.37_f64;
        let mut u = || {
            state = (state * 9301.0 + 0.49297).fract();
            state
        };
        for _ in 0..50 {
            if let Some((lam, w)) = sample_instance(ProverMode::Main, &b, 10_000, &mut u) {
                assert!(b.contains(lam, &w));
                assert!(w.windows(2).all(|p| p[0] >= p[1]));
                let total: f64 = w.iter().sum();
                assert!((total - critical_weight(lam).unwrap()).abs() < 1e-12);
            }
        }
    }
}
