//! Rectangles whose largest disk is bounded relative to the short side: up to
//! the skew `Λ(E(σ))` the critical-weight routines apply directly, longer
//! rectangles are split in proportion to a greedy split of the disks.

use super::main_catalog;
use super::plan::{Attempt, Build, Cx};
use crate::interval::{Interval, Ternary};
use crate::thresholds::{lambda_of_coefficient_iv, size_bounded_coefficient_iv};

pub fn run(cx: &Cx, sigma: f64) -> Attempt {
    let e = size_bounded_coefficient_iv(Interval::point(sigma));
    let short_enough = cx.lam.le(lambda_of_coefficient_iv(e));
    if short_enough.possibly_true() {
        let a = main_catalog::run(cx);
        if cx.accepts(a.verdict) || short_enough.is_true() {
            return a;
        }
    }
    split(cx)
}

/// Greedy splitting with the long side divided in proportion to the weights.
fn split(cx: &Cx) -> Attempt {
    let mut b = Build::new("size_bounded_split");
    let pool = cx.d.full_pool();
    let (pa, pb) = pool.greedy_split(cx.d);
    if !b.require(Ternary::from_bool(!pa.is_empty(cx.d) && !pb.is_empty(cx.d))) {
        return b.finish();
    }
    let wa = cx.lam * pa.weight(cx.d) / pool.weight(cx.d);
    if b.recurse(cx, 0.0, 0.0, wa, Interval::ONE, pa) {
        b.recurse(cx, wa.lo(), 0.0, cx.lam - wa, Interval::ONE, pb);
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::profile::DiskProfile;
    use crate::thresholds::{lambda_of_coefficient, size_bounded_coefficient};

    #[test]
    fn long_rectangles_are_split_in_two() {
        let sigma = 1.0;
        let e = size_bounded_coefficient(sigma).unwrap();
        let lam = 6.0;
        assert!(lam > lambda_of_coefficient(e).unwrap());
        let n = 40;
        let w = vec![e * lam / n as f64 * 1.001; n];
        let d = DiskProfile::concrete(&w);
        let cx = Cx { lam: Interval::point(lam), d: &d, tolerant: false };
        let a = run(&cx, sigma);
        assert!(a.verdict.is_true(), "{a:?}");
        assert_eq!(a.routine, "size_bounded_split");
        assert_eq!(a.subs.len(), 2);
    }
}
