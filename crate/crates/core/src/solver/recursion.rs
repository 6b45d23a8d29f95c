//! Whether a sub-rectangle can be covered recursively by a group of disks.
//!
//! Three recursion targets exist: the critical-weight theorem (no radius
//! bound), the size-bounded regime (largest weight at most `σ` times the short
//! side squared, coefficient `E(σ)`) and the weight-bounded regime (radius at
//! most 0.375 times the short side, coefficient 0.61). The last two are also
//! tried on the rectangle widened until the largest disk satisfies the bound.
//! Every requirement is monotone in the rectangle's sides and the largest
//! weight, so checking at upper bounds is sound for all points of a box.

use crate::interval::{Interval, Ternary};
use crate::thresholds::{size_bounded_coefficient_iv, CriticalConstants, CriticalConstantsIv, R_BOUND_SB};

/// How a subtask is to be solved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    Theorem,
    WeightBounded,
    /// `sigma` bounds the largest weight relative to the squared short side.
    SizeBounded { sigma: f64 },
}

/// Normalized-frame rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl Rect {
    pub fn new(x: f64, y: f64, w: f64, h: f64) -> Rect {
        Rect { x, y, w, h }
    }
}

/// Sub-rectangles thinner than this are treated as empty in concrete mode:
/// they only arise from rounding next to a disk whose true radius exceeds the
/// construction radius by the solver margin.
pub const SLIVER: f64 = 1e-12;

#[derive(Debug, Clone, Copy)]
struct Option_ {
    applicable: Ternary,
    need: Interval,
    w: f64,
    h: f64,
    regime: Regime,
}

fn theorem_need(long: f64, short: f64) -> Interval {
    let l2 = Interval::point(long).sqr();
    let s2 = Interval::point(short).sqr();
    let three = 3.0 * (l2 / 16.0 + 5.0 * s2 / 32.0 + 9.0 * s2.sqr() / (256.0 * l2));
    let two = (l2 + 2.0 * s2) / 4.0;
    three.max(two)
}

fn options(w: f64, h: f64, rmax2: f64) -> [Option_; 5] {
    let c = CriticalConstantsIv::get();
    let (long, short) = if w >= h { (w, h) } else { (h, w) };
    let area = Interval::point(w) * Interval::point(h);
    let r2 = Interval::point(rmax2.max(0.0));
    let s2 = Interval::point(short).sqr();
    let bound2 = Interval::point(R_BOUND_SB).sqr();

    let theorem = Option_ { applicable: Ternary::True, need: theorem_need(long, short), w, h, regime: Regime::Theorem };

    let sb = Option_ {
        applicable: r2.le(bound2 * s2),
        need: c.e_sb * area,
        w,
        h,
        regime: Regime::WeightBounded,
    };

    let m = (r2.sqrt_pos() / R_BOUND_SB).hi();
    let (ww, wh) = (w.max(m), h.max(m));
    let sb_wide = Option_ {
        applicable: Ternary::True,
        need: c.e_sb * Interval::point(ww) * Interval::point(wh),
        w: ww,
        h: wh,
        regime: Regime::WeightBounded,
    };

    let sigma = (r2 / s2).max(c.sigma_hat);
    let sigma = if sigma.is_valid() { sigma } else { Interval::new(c.sigma_hat.lo(), f64::MAX) };
    let sized = Option_ {
        applicable: Ternary::from_bool(sigma.hi() < f64::MAX),
        need: size_bounded_coefficient_iv(sigma) * area,
        w,
        h,
        regime: Regime::SizeBounded { sigma: sigma.hi() },
    };

    let m = (r2 / c.sigma_hat).sqrt_pos().hi();
    let (sw, sh) = (w.max(m), h.max(m));
    let sized_wide = Option_ {
        applicable: Ternary::True,
        need: c.w_star_one * Interval::point(sw) * Interval::point(sh),
        w: sw,
        h: sh,
        regime: Regime::SizeBounded { sigma: CriticalConstants::get().sigma_hat },
    };
    [theorem, sb, sb_wide, sized, sized_wide]
}

fn need_at(w: f64, h: f64, rmax2: f64, definite: bool) -> f64 {
    if w <= 0.0 || h <= 0.0 {
        return 0.0;
    }
    options(w, h, rmax2)
        .iter()
        .filter(|o| if definite { o.applicable.is_true() } else { o.applicable.possibly_true() })
        .map(|o| if definite { o.need.hi() } else { o.need.lo() })
        .fold(f64::INFINITY, f64::min)
}

/// Enclosure of the least weight that makes recursion on a `w × h` rectangle
/// possible, given the range of the group's largest weight.
pub fn need(w: Interval, h: Interval, rmax2: Interval) -> Interval {
    let lo = need_at(w.lo(), h.lo(), rmax2.lo(), false);
    let hi = need_at(w.hi(), h.hi(), rmax2.hi(), true);
    Interval::new(lo.min(hi), hi)
}

/// Outcome of a recursion check.
#[derive(Debug, Clone, Copy)]
pub struct Check {
    pub verdict: Ternary,
    /// Rectangle actually covered (possibly widened) and its regime; `None`
    /// when there is nothing to cover or no option is possible.
    pub target: Option<(f64, f64, Regime)>,
}

/// Checks recursion on a rectangle with side enclosures `w`, `h` using a group
/// of weight `weight` whose largest weight lies in `rmax2`. In tolerant mode
/// an indeterminate option is returned when no option is definite.
pub fn check(w: Interval, h: Interval, weight: Interval, rmax2: Interval, exact: bool, tolerant: bool) -> Check {
    let (wh, hh) = (w.hi(), h.hi());
    let empty = if exact { SLIVER } else { 0.0 };
    if wh <= empty || hh <= empty {
        return Check { verdict: Ternary::True, target: None };
    }
    if !weight.is_valid() || !w.is_valid() || !h.is_valid() || !rmax2.is_valid() {
        return Check { verdict: Ternary::Indeterminate, target: None };
    }
    let mut fallback = None;
    for o in options(wh, hh, rmax2.hi()) {
        let v = o.applicable.and(weight.ge(o.need));
        if v.is_true() {
            return Check { verdict: Ternary::True, target: Some((o.w, o.h, o.regime)) };
        }
        if fallback.is_none() && v.possibly_true() {
            fallback = Some((o.w, o.h, o.regime));
        }
    }
    let lower = need_at(w.lo(), h.lo(), rmax2.lo(), false);
    let verdict = if weight.hi() < lower { Ternary::False } else { Ternary::Indeterminate };
    let target = if tolerant && verdict.possibly_true() { fallback } else { None };
    Check { verdict, target }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thresholds::critical_weight;

    #[test]
    fn theorem_need_matches_critical_weight() {
        for &(w, h) in &[(1.0, 1.0), (2.0, 1.0), (0.5, 1.3), (1.02, 1.0)] {
            let (l, s): (f64, f64) = if w >= h { (w, h) } else { (h, w) };
            let expect = critical_weight(l / s).unwrap() * s * s;
            assert!(theorem_need(l, s).contains(expect) || (theorem_need(l, s).mid() - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn small_disks_use_the_weight_bounded_coefficient() {
        let c = check(Interval::point(2.0), Interval::point(1.0), Interval::point(1.23), Interval::point(0.01), true, false);
        assert!(c.verdict.is_true());
        assert_eq!(c.target.unwrap().2, Regime::WeightBounded);
    }

    #[test]
    fn theorem_preferred_when_it_suffices() {
        let c = check(Interval::point(1.0), Interval::point(1.0), Interval::point(0.77), Interval::point(0.3), true, false);
        assert_eq!(c.target.unwrap().2, Regime::Theorem);
    }

    #[test]
    fn empty_rectangles_always_succeed() {
        let c = check(Interval::new(-0.1, 0.0), Interval::ONE, Interval::ZERO, Interval::ZERO, false, false);
        assert!(c.verdict.is_true());
    }

    #[test]
    fn insufficient_weight_is_definitely_false() {
        let c = check(Interval::point(1.0), Interval::point(1.0), Interval::point(0.3), Interval::point(0.01), true, false);
        assert!(c.verdict.is_false());
    }

    #[test]
    fn need_is_monotone_in_the_largest_disk() {
        let small = need(Interval::point(1.0), Interval::point(0.5), Interval::point(0.001));
        let large = need(Interval::point(1.0), Interval::point(0.5), Interval::point(0.2));
        assert!(small.hi() <= large.hi());
    }
}
