//! Attempts produced by placement routines and the context they run in.

use super::profile::{DiskProfile, Pool};
use super::recursion::{self, Rect, Regime};
use crate::interval::{Interval, Ternary};

/// Inputs shared by every routine: the normalized length `λ` of the
/// `λ × 1` rectangle and the disks.
pub struct Cx<'a> {
    pub lam: Interval,
    pub d: &'a DiskProfile,
    pub tolerant: bool,
}

impl<'a> Cx<'a> {
    pub fn exact(&self) -> bool {
        self.d.is_exact()
    }

    pub fn accepts(&self, t: Ternary) -> bool {
        if self.tolerant {
            t.possibly_true()
        } else {
            t.is_true()
        }
    }
}

/// A rectangle left for recursive covering.
#[derive(Debug, Clone)]
pub struct SubTask {
    pub rect: Rect,
    pub regime: Regime,
    pub pool: Pool,
}

/// One routine's verdict with the placement that realizes it.
#[derive(Debug, Clone)]
pub struct Attempt {
    pub routine: &'static str,
    pub verdict: Ternary,
    /// Disk index and center in the normalized frame.
    pub placed: Vec<(usize, f64, f64)>,
    pub subs: Vec<SubTask>,
}

impl Attempt {
    pub fn with_verdict(routine: &'static str, verdict: Ternary) -> Attempt {
        Attempt { routine, verdict, placed: Vec::new(), subs: Vec::new() }
    }
}

/// Accumulates conditions, placements and subtasks of one attempt.
#[derive(Clone)]
pub struct Build {
    routine: &'static str,
    verdict: Ternary,
    placed: Vec<(usize, f64, f64)>,
    subs: Vec<SubTask>,
}

impl Build {
    pub fn new(routine: &'static str) -> Build {
        Build { routine, verdict: Ternary::True, placed: Vec::new(), subs: Vec::new() }
    }

    pub fn verdict(&self) -> Ternary {
        self.verdict
    }

    /// Conjoins a condition; returns `false` once the attempt cannot succeed.
    pub fn require(&mut self, t: Ternary) -> bool {
        self.verdict = self.verdict.and(t);
        !self.verdict.is_false()
    }

    pub fn place(&mut self, i: usize, x: f64, y: f64) {
        self.placed.push((i, x, y));
    }

    /// Requires recursive covering of the region with origin `(x, y)` and
    /// side enclosures `w`, `h` by `pool`.
    pub fn recurse(&mut self, cx: &Cx, x: f64, y: f64, w: Interval, h: Interval, pool: Pool) -> bool {
        let weight = pool.weight(cx.d);
        let rmax2 = pool.max_weight(cx.d);
        let c = recursion::check(w, h, weight, rmax2, cx.exact(), cx.tolerant);
        if let Some((tw, th, regime)) = c.target {
            self.subs.push(SubTask { rect: Rect::new(x, y, tw, th), regime, pool });
        }
        self.require(c.verdict)
    }

    /// Requires that `pool` alone, each disk scaled to the proportional
    /// width, satisfies the weight-bounded radius bound on a region of height
    /// `h` and width `w`. Used for subtasks whose weight matches their area by
    /// construction.
    pub fn recurse_proportional(&mut self, cx: &Cx, x: f64, y: f64, w: Interval, h: Interval, pool: Pool) -> bool {
        if w.hi() <= 0.0 || h.hi() <= 0.0 {
            return true;
        }
        let short = w.min(h);
        let bound = Interval::point(crate::thresholds::R_BOUND_SB).sqr() * short.sqr();
        let t = pool.max_weight(cx.d).le(bound);
        if t.possibly_true() {
            self.subs.push(SubTask { rect: Rect::new(x, y, w.hi(), h.hi()), regime: Regime::WeightBounded, pool });
        }
        self.require(t)
    }

    /// Adds a subtask whose feasibility the caller has established.
    pub fn push(&mut self, rect: Rect, regime: Regime, pool: Pool) {
        self.subs.push(SubTask { rect, regime, pool });
    }

    pub fn finish(self) -> Attempt {
        Attempt { routine: self.routine, verdict: self.verdict, placed: self.placed, subs: self.subs }
    }
}

/// Collects alternatives; the first accepted one wins.
pub struct Alts<'c, 'a> {
    cx: &'c Cx<'a>,
    routine: &'static str,
    acc: Ternary,
}

impl<'c, 'a> Alts<'c, 'a> {
    pub fn new(cx: &'c Cx<'a>, routine: &'static str) -> Self {
        Alts { cx, routine, acc: Ternary::False }
    }

    pub fn offer(&mut self, a: Attempt) -> Option<Attempt> {
        if self.cx.accepts(a.verdict) {
            let mut a = a;
            a.routine = self.routine;
            return Some(a);
        }
        self.acc = self.acc.or(a.verdict);
        None
    }

    pub fn done(self) -> Attempt {
        Attempt::with_verdict(self.routine, self.acc)
    }
}

/// Returns from the enclosing function with the attempt if it is accepted.
macro_rules! offer {
    ($alts:expr, $attempt:expr) => {
        if let Some(a) = $alts.offer($attempt) {
            return a;
        }
    };
}
pub(crate) use offer;

