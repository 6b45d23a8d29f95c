//! Placement primitives: strips, bands of disks and circle-chord geometry.
//!
//! Free parameters (band thickness, corner sizes) are searched in `f64` on
//! lower-bound weights and then verified in interval arithmetic at the chosen
//! point, so the region left over has point coordinates.

use crate::interval::{Interval, Ternary};

/// Length of the chord a disk of weight `w2` covers across a strip of
/// thickness `t`: `2√(w2 − t²/4)`, zero when the disk is too small.
pub fn chord(w2: Interval, t: Interval) -> Interval {
    2.0 * (w2 - t.max(Interval::ZERO).sqr() / 4.0).sqrt_pos()
}

fn chord_f(w2: f64, t: f64) -> f64 {
    2.0 * (w2 - t * t / 4.0).max(0.0).sqrt()
}

/// Whether a disk of weight `w2` covers a `w × h` rectangle.
pub fn covers_rect(w2: Interval, w: Interval, h: Interval) -> Ternary {
    let (w, h) = (w.max(Interval::ZERO), h.max(Interval::ZERO));
    (4.0 * w2).ge(w.sqr() + h.sqr())
}

/// Side of the square inscribed in a disk of weight `w2`.
pub fn inscribed_side(w2: Interval) -> Interval {
    (2.0 * w2).sqrt_pos()
}

/// A band of disks laid side by side along a segment of given length.
#[derive(Debug, Clone)]
pub struct Band {
    /// Thickness covered by every disk of the band.
    pub thickness: f64,
    /// Chord lengths (lower bounds) along the band, in order.
    pub chords: Vec<f64>,
    /// Whether the chords definitely reach the requested length.
    pub ok: Ternary,
}

impl Band {
    /// Offsets of the chord midpoints from the band start.
    pub fn centers(&self) -> Vec<f64> {
        let mut at = 0.0;
        self.chords
            .iter()
            .map(|&c| {
                let m = at + c / 2.0;
                at += c;
                m
            })
            .collect()
    }
}

/// Largest thickness `t` such that disks of weights `ws`, side by side, cover
/// a `length × t` strip. Returns `ok = False` when no positive thickness works.
pub fn band(ws: &[Interval], length: Interval) -> Band {
    let lo_w: Vec<f64> = ws.iter().map(|w| w.lo().max(0.0)).collect();
    let target = length.hi();
    let reach = |t: f64| lo_w.iter().map(|&w| chord_f(w, t)).sum::<f64>();
    let tmax = 2.0 * lo_w.iter().cloned().fold(0.0, f64::max).sqrt();
    let fail = |ok| Band { thickness: 0.0, chords: vec![0.0; ws.len()], ok };
    if target <= 0.0 {
        return Band { thickness: tmax, chords: lo_w.iter().map(|&w| chord_f(w, tmax)).collect(), ok: Ternary::True };
    }
    if reach(0.0) < target || tmax <= 0.0 {
        let possible = ws.iter().map(|w| 2.0 * w.hi().max(0.0).sqrt()).sum::<f64>() >= length.lo();
        return fail(if possible { Ternary::Indeterminate } else { Ternary::False });
    }
    let (mut a, mut b) = (0.0, tmax);
    for _ in 0..60 {
        let m = 0.5 * (a + b);
        if reach(m) >= target {
            a = m;
        } else {
            b = m;
        }
        if b - a <= 1e-15 * tmax {
            break;
        }
    }
    let mut t = a;
    for _ in 0..8 {
        let ti = Interval::point(t);
        let chords: Vec<Interval> = ws.iter().map(|&w| chord(w, ti)).collect();
        let sum: Interval = chords.iter().copied().sum();
        if sum.ge(length).is_true() {
            return Band { thickness: t, chords: chords.iter().map(|c| c.lo()).collect(), ok: Ternary::True };
        }
        t *= 1.0 - 1e-12;
    }
    Band { thickness: t, chords: ws.iter().map(|&w| chord(w, Interval::point(t)).lo()).collect(), ok: Ternary::Indeterminate }
}

/// Largest `x` in `[a, b]` with `pred(x)` true, assuming `pred` holds on a
/// prefix of the interval. `None` if `pred(a)` fails.
pub fn bisect_max(a: f64, b: f64, pred: impl Fn(f64) -> bool) -> Option<f64> {
    if !pred(a) {
        return None;
    }
    if pred(b) {
        return Some(b);
    }
    let (mut lo, mut hi) = (a, b);
    for _ in 0..60 {
        let m = 0.5 * (lo + hi);
        if pred(m) {
            lo = m;
        } else {
            hi = m;
        }
        if hi - lo <= 1e-15 * (1.0 + hi.abs()) {
            break;
        }
    }
    Some(lo)
}

/// Smallest `x` in `[a, b]` with `pred(x)` true, assuming `pred` holds on a
/// suffix of the interval.
pub fn bisect_min(a: f64, b: f64, pred: impl Fn(f64) -> bool) -> Option<f64> {
    bisect_max(-b, -a, |x| pred(-x)).map(|x| -x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_equal_disks_cover_the_critical_strip() {
        // Two disks of weight (λ²+4)/16 each cover λ × 1 with λ = 2: chord 1 at thickness 1.
        let w = Interval::point(0.5);
        let b = band(&[w, w], Interval::point(2.0));
        assert!(b.ok.is_true());
        assert!((b.thickness - 1.0).abs() < 1e-9);
        assert!(b.centers()[1] > b.centers()[0]);
    }

    #[test]
    fn band_too_long_fails() {
        let b = band(&[Interval::point(0.01)], Interval::point(1.0));
        assert!(b.ok.is_false());
    }

    proptest! {
        #[test]
        fn band_chords_reach_length(ws in prop::collection::vec(0.001f64..1.0, 1..6), frac in 0.05f64..0.95) {
            let ivs: Vec<Interval> = ws.iter().map(|&w| Interval::point(w)).collect();
            let full: f64 = ws.iter().map(|w| 2.0 * w.sqrt()).sum();
            let len = frac * full;
            let b = band(&ivs, Interval::point(len));
            prop_assert!(b.ok.is_true());
            prop_assert!(b.chords.iter().sum::<f64>() >= len);
            prop_assert!(b.thickness > 0.0);
        }

        #[test]
        fn bisect_max_finds_threshold(c in 0.0f64..1.0) {
            let x = bisect_max(0.0, 1.0, |x| x <= c).unwrap();
            prop_assert!(x <= c && c - x < 1e-12);
        }
    }
}
