//! Routines for a `λ × 1` rectangle whose disks reach the critical weight.
//!
//! Every routine works in the frame `[0, λ] × [0, 1]` and evaluates its
//! success criterion in interval arithmetic, so the same code answers both a
//! concrete instance and a prover box.

use super::plan::{offer, Alts, Attempt, Build, Cx};
use super::profile::Pool;
use super::recursion::{self, Rect, Regime};
use super::shapes::{band, bisect_max, bisect_min, chord, covers_rect, inscribed_side};
use crate::interval::{Interval, Ternary};
use crate::thresholds::{critical_weight_iv, CriticalConstantsIv, R_BOUND_SB};

const ONE: Interval = Interval::ONE;

fn half() -> Interval {
    Interval::point(0.5)
}

/// Rectangular region with point origin and enclosed sides.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Reg {
    pub x: f64,
    pub y: f64,
    pub w: Interval,
    pub h: Interval,
}

impl Reg {
    pub fn new(x: f64, y: f64, w: Interval, h: Interval) -> Reg {
        Reg { x, y, w, h }
    }

    pub fn center(&self) -> (f64, f64) {
        (self.x + self.w.hi().max(0.0) / 2.0, self.y + self.h.hi().max(0.0) / 2.0)
    }
}

pub(crate) fn recurse_reg(b: &mut Build, cx: &Cx, r: Reg, pool: Pool) -> bool {
    b.recurse(cx, r.x, r.y, r.w, r.h, pool)
}

/// Splits `pool` between two regions: disks are collected for `first` until
/// recursion there is guaranteed; the rest must cover `second`.
pub(crate) fn two_regions(cx: &Cx, mut b: Build, pool: &Pool, first: Reg, second: Reg) -> Attempt {
    let need = recursion::need(first.w, first.h, pool.max_weight(cx.d));
    let c = pool.collect_until(cx.d, need);
    if b.require(c.ok) && recurse_reg(&mut b, cx, first, c.group) {
        recurse_reg(&mut b, cx, second, c.rest);
    }
    b.finish()
}

/// Tries both collection orders.
pub(crate) fn either_order(cx: &Cx, alts: &mut Alts, b: &Build, pool: &Pool, p: Reg, q: Reg) -> Option<Attempt> {
    if let Some(a) = alts.offer(two_regions(cx, b.clone(), pool, p, q)) {
        return Some(a);
    }
    alts.offer(two_regions(cx, b.clone(), pool, q, p))
}

/// Remaining region after covering the bottom rows `[0, h]` up to `x = a`
/// and the rows `[h, 1]` up to `x = top`, split horizontally or vertically.
pub(crate) fn l_shape(cx: &Cx, name: &'static str, b: &Build, pool: &Pool, a: Interval, h: Interval, top: Interval) -> Attempt {
    let lam = cx.lam;
    let mut alts = Alts::new(cx, name);
    let lower = Reg::new(a.lo(), 0.0, lam - a, h);
    let upper = Reg::new(top.lo(), h.lo(), lam - top, ONE - h);
    if let Some(x) = either_order(cx, &mut alts, b, pool, lower, upper) {
        return x;
    }
    if a.le(top).is_true() {
        let p = Reg::new(a.lo(), 0.0, top - a, h);
        let q = Reg::new(top.lo(), 0.0, lam - top, ONE);
        if let Some(x) = either_order(cx, &mut alts, b, pool, p, q) {
            return x;
        }
    } else if a.ge(top).is_true() {
        let p = Reg::new(top.lo(), h.lo(), a - top, ONE - h);
        let q = Reg::new(a.lo(), 0.0, lam - a, ONE);
        if let Some(x) = either_order(cx, &mut alts, b, pool, p, q) {
            return x;
        }
    }
    alts.done()
}

/// Places disk `i` covering the vertical strip `[at, at + s] × [0, 1]`.
fn place_strip(cx: &Cx, b: &mut Build, i: usize, at: f64, s: Interval) {
    let right = (at + s.lo()).min(cx.lam.hi());
    b.place(i, (at + right) / 2.0, 0.5);
}

/// Places disks stacked along the left border according to a band.
fn place_column(b: &mut Build, idx: &[usize], x0: f64, band: &super::shapes::Band) {
    for (&i, y) in idx.iter().zip(band.centers()) {
        b.place(i, x0 + band.thickness / 2.0, y);
    }
}

/// Split Cover: greedy splitting with widths proportional to weight.
pub fn split_cover(cx: &Cx) -> Attempt {
    let c = CriticalConstantsIv::get();
    let mut b = Build::new("split_cover");
    if !b.require(cx.lam.ge(c.lambda_bar)) {
        return b.finish();
    }
    if !cx.exact() {
        b.require(cx.d.w(0).le(c.r_bar.sqr()));
        return b.finish();
    }
    let pool = cx.d.full_pool();
    let (pa, pb) = pool.greedy_split(cx.d);
    if !b.require(Ternary::from_bool(!pa.members().is_empty() && !pb.members().is_empty())) {
        return b.finish();
    }
    let wa = cx.lam * pa.weight(cx.d) / pool.weight(cx.d);
    if b.recurse(cx, 0.0, 0.0, wa, ONE, pa) {
        b.recurse(cx, wa.lo(), 0.0, cx.lam - wa, ONE, pb);
    }
    b.finish()
}

/// Large Disk: the largest disk covers a full-height strip at the left.
pub fn large_disk(cx: &Cx) -> Attempt {
    let c = CriticalConstantsIv::get();
    let mut b = Build::new("large_disk");
    if !b.require(cx.lam.ge(c.lambda_bar)) {
        return b.finish();
    }
    let w0 = cx.d.w(0);
    if !b.require(w0.gt_f(0.25)) {
        return b.finish();
    }
    let s1 = chord(w0, ONE);
    place_strip(cx, &mut b, 0, 0.0, s1);
    b.recurse(cx, s1.lo(), 0.0, cx.lam - s1, ONE, cx.d.pool_from(1));
    let mut a = b.finish();
    if !cx.exact() {
        a.verdict = a.verdict.or(w0.ge(c.r_bar.sqr()));
    }
    a
}

/// Small disks: hands the whole instance to the weight-bounded regime on an
/// enlarged rectangle.
pub fn small_disks(cx: &Cx) -> Attempt {
    let c = CriticalConstantsIv::get();
    let mut b = Build::new("small_disks");
    let ratio = critical_weight_iv(cx.lam) / cx.lam / c.e_sb;
    let bound = ratio * Interval::point(R_BOUND_SB).sqr();
    if !b.require(cx.d.w(0).le(bound)) {
        return b.finish();
    }
    let side = ratio.sqrt_pos();
    let rect = if cx.lam.ge(side).is_true() {
        Rect::new(0.0, 0.0, cx.lam.hi(), ratio.hi())
    } else {
        Rect::new(0.0, 0.0, side.hi().max(cx.lam.hi()), side.hi())
    };
    b.push(rect, Regime::WeightBounded, cx.d.full_pool());
    b.finish()
}

/// Largest disk covers a left strip; rows of `r₂, r₃, r₄` are added at the
/// bottom of the remainder one at a time.
pub fn cld1(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "cld1");
    let mut b = Build::new("cld1");
    let w0 = cx.d.w(0);
    if !b.require(w0.gt_f(0.25)) {
        return b.finish();
    }
    let s1 = chord(w0, ONE);
    place_strip(cx, &mut b, 0, 0.0, s1);
    let a = cx.lam - s1;
    let mut y = Interval::ZERO;
    for k in 1..=4 {
        let mut t = b.clone();
        t.recurse(cx, s1.lo(), y.lo(), a, ONE - y, cx.d.pool_from(k));
        offer!(alts, t.finish());
        if k == 4 {
            break;
        }
        let h = chord(cx.d.w(k), a);
        if h.hi() <= 0.0 {
            break;
        }
        b.place(k, (s1.lo() + cx.lam.hi()) / 2.0, y.lo() + h.lo() / 2.0);
        y = y + h;
    }
    alts.done()
}

/// Largest disk covers its inscribed square in the bottom-left corner; the
/// right and top regions are covered recursively.
pub fn cld2(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "cld2");
    let mut b = Build::new("cld2");
    let s = inscribed_side(cx.d.w(0));
    if !b.require(s.lt_f(1.0)) {
        return b.finish();
    }
    b.place(0, s.lo() / 2.0, s.lo() / 2.0);
    let pool = cx.d.pool_from(1);
    let lam = cx.lam;
    let splits = [
        (Reg::new(s.lo(), 0.0, lam - s, ONE), Reg::new(0.0, s.lo(), s, ONE - s)),
        (Reg::new(s.lo(), 0.0, lam - s, s), Reg::new(0.0, s.lo(), lam, ONE - s)),
    ];
    for (p, q) in splits {
        if let Some(a) = either_order(cx, &mut alts, &b, &pool, p, q) {
            return a;
        }
    }
    alts.done()
}

/// Two Pockets: the largest disk reaches the right border, leaving two
/// congruent pockets at the right corners.
pub fn cld3(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "cld3");
    let mut b = Build::new("cld3");
    let w0 = cx.d.w(0);
    if !b.require(w0.gt_f(0.25)) {
        return b.finish();
    }
    let s1 = chord(w0, ONE);
    let lam = cx.lam;
    let pw = lam - s1;
    if pw.hi() <= 0.0 {
        b.place(0, lam.hi() / 2.0, 0.5);
        return b.finish();
    }
    let dx = lam - s1 / 2.0;
    if !b.require(w0.gt(dx.sqr())) {
        return b.finish();
    }
    b.place(0, s1.lo() / 2.0, 0.5);
    let t = (w0 - dx.sqr()).sqrt_pos();
    let ph = half() - t;
    let top = Reg::new(s1.lo(), (half() + t).lo(), pw, ph);
    let bottom = Reg::new(s1.lo(), 0.0, pw, ph);
    let (w1, w2) = (cx.d.w(1), cx.d.w(2));

    let mut a = b.clone();
    a.require(covers_rect(w2, pw, ph));
    let (tx, ty) = top.center();
    let (bx, by) = bottom.center();
    a.place(1, tx, ty);
    a.place(2, bx, by);
    offer!(alts, a.finish());

    let mut a = b.clone();
    a.require(covers_rect(w1, pw, ONE));
    a.place(1, s1.lo() + pw.hi() / 2.0, 0.5);
    offer!(alts, a.finish());

    let mut a = b.clone();
    if a.require(covers_rect(w1, pw, ph)) {
        a.place(1, tx, ty);
        recurse_reg(&mut a, cx, bottom, cx.d.pool_from(2));
    }
    offer!(alts, a.finish());

    let mut a = b;
    let (pa, pb) = cx.d.pool_from(1).greedy_split(cx.d);
    if recurse_reg(&mut a, cx, top, pa) {
        recurse_reg(&mut a, cx, bottom, pb);
    }
    offer!(alts, a.finish());
    alts.done()
}

/// The two largest disks cover a full-height strip of maximal width, stacked
/// or side by side.
pub fn two_ld1(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "2ld1");
    let (w0, w1) = (cx.d.w(0), cx.d.w(1));
    let lam = cx.lam;

    let mut b = Build::new("2ld1");
    let col = band(&[w0, w1], ONE);
    if b.require(col.ok) {
        place_column(&mut b, &[0, 1], 0.0, &col);
        let t = Interval::point(col.thickness);
        b.recurse(cx, col.thickness, 0.0, lam - t, ONE, cx.d.pool_from(2));
    }
    offer!(alts, b.finish());

    let mut b = Build::new("2ld1");
    if b.require(w1.gt_f(0.25)) {
        let (sa, sb) = (chord(w0, ONE), chord(w1, ONE));
        place_strip(cx, &mut b, 0, 0.0, sa);
        place_strip(cx, &mut b, 1, sa.lo(), sb);
        let s = sa + sb;
        b.recurse(cx, s.lo(), 0.0, lam - s, ONE, cx.d.pool_from(2));
    }
    offer!(alts, b.finish());
    alts.done()
}

/// Largest disk in the corner, second disk covering the rest of the left
/// border; the L-shaped remainder is split in two.
pub fn two_ld2(cx: &Cx) -> Attempt {
    let mut b = Build::new("2ld2");
    let s = inscribed_side(cx.d.w(0));
    if !b.require(s.lt_f(1.0)) {
        return b.finish();
    }
    b.place(0, s.lo() / 2.0, s.lo() / 2.0);
    let rest = ONE - s;
    let w1 = cx.d.w(1);
    if !b.require(w1.gt(rest.sqr() / 4.0)) {
        return b.finish();
    }
    let top = chord(w1, rest);
    b.place(1, top.lo() / 2.0, (s.lo() + 1.0) / 2.0);
    l_shape(cx, "2ld2", &b, &cx.d.pool_from(2), s, s, top)
}

/// The three largest disks side by side, each covering a full-height strip.
pub fn three_ld1(cx: &Cx) -> Attempt {
    let mut b = Build::new("3ld1");
    if !b.require(cx.d.w(2).gt_f(0.25)) {
        return b.finish();
    }
    let mut at = Interval::ZERO;
    for i in 0..3 {
        let s = chord(cx.d.w(i), ONE);
        place_strip(cx, &mut b, i, at.lo(), s);
        at = at + s;
    }
    b.recurse(cx, at.lo(), 0.0, cx.lam - at, ONE, cx.d.pool_from(3));
    b.finish()
}

/// `r₁` at the bottom with `r₂`, `r₃` side by side above it, covering a
/// left strip of maximal width.
pub fn three_ld2(cx: &Cx) -> Attempt {
    let mut b = Build::new("3ld2");
    let (w0, w1, w2) = (cx.d.w(0), cx.d.w(1), cx.d.w(2));
    let fits = |x: f64| {
        let xi = Interval::point(x);
        let h1 = chord(w0, xi);
        let top = ONE - h1;
        h1.gt_f(0.0).and((chord(w1, top) + chord(w2, top)).ge(xi)).is_true()
    };
    let cap = (2.0 * w0.lo().max(0.0).sqrt()).min(cx.lam.hi());
    let Some(x) = bisect_max(cap * 1e-9, cap, fits) else {
        b.require(Ternary::Indeterminate.and(Ternary::from_bool(!cx.exact())));
        return b.finish();
    };
    let xi = Interval::point(x);
    let h1 = chord(w0, xi);
    let top = ONE - h1;
    let (c1, c2) = (chord(w1, top), chord(w2, top));
    b.place(0, x / 2.0, h1.lo() / 2.0);
    let ymid = (h1.lo() + 1.0) / 2.0;
    b.place(1, c1.lo() / 2.0, ymid);
    b.place(2, c1.lo() + c2.lo() / 2.0, ymid);
    b.recurse(cx, x, 0.0, cx.lam - xi, ONE, cx.d.pool_from(3));
    b.finish()
}

/// `r₂`, `r₃` stacked in a left strip; `r₁` covers the rest of the bottom.
pub fn three_ld3(cx: &Cx) -> Attempt {
    let mut b = Build::new("3ld3");
    let col = band(&[cx.d.w(1), cx.d.w(2)], ONE);
    if !b.require(col.ok) {
        return b.finish();
    }
    place_column(&mut b, &[1, 2], 0.0, &col);
    let t = Interval::point(col.thickness);
    let aw = cx.lam - t;
    if aw.hi() <= 0.0 {
        return b.finish();
    }
    let w0 = cx.d.w(0);
    if !b.require(w0.gt(aw.sqr() / 4.0)) {
        return b.finish();
    }
    let h0 = chord(w0, aw);
    b.place(0, (col.thickness + cx.lam.hi()) / 2.0, h0.lo().min(1.0) / 2.0);
    b.recurse(cx, col.thickness, h0.lo(), aw, ONE - h0, cx.d.pool_from(3));
    b.finish()
}

/// With a corner square of side `s` covered, disk `bottom` covers the rest of
/// the bottom side and disk `left` the rest of the left side. Returns the
/// lower-left corner of the bounding box of what remains uncovered.
fn corner_l(cx: &Cx, b: &mut Build, s: Interval, bottom: usize, left: usize) -> (Interval, Interval) {
    let hb = chord(cx.d.w(bottom), cx.lam - s);
    let wl = chord(cx.d.w(left), ONE - s);
    b.place(bottom, (s.lo() + cx.lam.hi()) / 2.0, hb.lo().min(1.0) / 2.0);
    b.place(left, wl.lo().min(cx.lam.hi()) / 2.0, (s.lo() + 1.0) / 2.0);
    let x_lo = if hb.lt(s).is_false() { wl } else { wl.min(s) };
    let y_lo = if wl.lt(s).is_false() { hb } else { hb.min(s) };
    (x_lo, y_lo)
}

/// `r₃` covers its inscribed square in the corner; `r₁` and `r₂` cover the
/// rest of the bottom and left sides in either assignment.
pub fn three_ld4(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "3ld4");
    let mut base = Build::new("3ld4");
    let s = inscribed_side(cx.d.w(2));
    if !base.require(s.lt_f(1.0)) {
        return base.finish();
    }
    base.place(2, s.lo() / 2.0, s.lo() / 2.0);
    for (bottom, left) in [(0, 1), (1, 0)] {
        let mut b = base.clone();
        let (x_lo, y_lo) = corner_l(cx, &mut b, s, bottom, left);
        b.recurse(cx, x_lo.lo(), y_lo.lo(), cx.lam - x_lo, ONE - y_lo, cx.d.pool_from(3));
        offer!(alts, b.finish());
    }
    alts.done()
}

/// Three Disk Pocket: `r₁` covers a left strip, `r₂` the rest of the top
/// side, `r₃` the rest of the right side; recursion covers the pocket left
/// between `r₁` and `r₃`.
pub fn three_ld5(cx: &Cx) -> Attempt {
    let mut b = Build::new("3ld5");
    let (w0, w1, w2) = (cx.d.w(0), cx.d.w(1), cx.d.w(2));
    let lam = cx.lam;
    if !b.require(w0.gt_f(0.25)) {
        return b.finish();
    }
    let s1 = chord(w0, ONE);
    let aw = lam - s1;
    if aw.hi() <= 0.0 {
        b.place(0, lam.hi() / 2.0, 0.5);
        return b.finish();
    }
    if !b.require(w1.gt(aw.sqr() / 4.0)) {
        return b.finish();
    }
    let h2 = chord(w1, aw);
    let rest = ONE - h2;
    b.place(0, s1.lo() / 2.0, 0.5);
    b.place(1, (s1.lo() + lam.hi()) / 2.0, 1.0 - h2.lo().min(1.0) / 2.0);
    if rest.hi() <= 0.0 {
        return b.finish();
    }
    if !b.require(w2.gt(rest.sqr() / 4.0)) {
        return b.finish();
    }
    let s3 = chord(w2, rest);
    let c3 = rest / 2.0;
    b.place(2, lam.hi() - s3.lo() / 2.0, c3.hi());
    let pw = lam - s1 - s3;
    if pw.hi() <= 0.0 {
        return b.finish();
    }
    let r1_right = |y: Interval| s1 / 2.0 + (w0 - (y - half()).sqr()).sqrt_pos();
    let r3_left = |y: Interval| lam - s3 / 2.0 - (w2 - (y - c3).sqr()).sqrt_pos();
    // Above the centre height of r₃, r₁'s boundary is concave and r₃'s stays left of λ − S₃.
    let upper_done = r1_right(c3).min(r1_right(2.0 * c3)).ge(lam - s3).is_true();
    let height = if upper_done {
        let meets = |y: f64| {
            let yi = Interval::point(y);
            r1_right(yi).ge(r3_left(yi)).is_true()
        };
        match bisect_min(0.0, c3.lo(), meets) {
            Some(y) => Interval::point(y),
            None => rest,
        }
    } else {
        rest
    };
    b.recurse(cx, s1.lo(), 0.0, pw, height, cx.d.pool_from(3));
    b.finish()
}

/// `r₁` in the corner, `r₂` and `r₄` on the bottom and left sides, `r₃`
/// covering everything else.
pub fn four_ld1(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "4ld1");
    let mut base = Build::new("4ld1");
    let s = inscribed_side(cx.d.w(0));
    if !base.require(s.lt_f(1.0)) {
        return base.finish();
    }
    base.place(0, s.lo() / 2.0, s.lo() / 2.0);
    for (bottom, left) in [(1, 3), (3, 1)] {
        let mut b = base.clone();
        let (x_lo, y_lo) = corner_l(cx, &mut b, s, bottom, left);
        let (w, h) = (cx.lam - x_lo, ONE - y_lo);
        if b.require(covers_rect(cx.d.w(2), w, h)) {
            b.place(2, (x_lo.lo() + cx.lam.hi()) / 2.0, (y_lo.lo() + 1.0) / 2.0);
        }
        offer!(alts, b.finish());
    }
    alts.done()
}

/// Two stacked pairs from the four largest disks cover two full-height
/// strips; recursion covers the rest.
pub fn four_ld2(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "4ld2");
    for (p, q) in [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 3], [1, 2])] {
        let mut b = Build::new("4ld2");
        let ca = band(&[cx.d.w(p[0]), cx.d.w(p[1])], ONE);
        let cb = band(&[cx.d.w(q[0]), cx.d.w(q[1])], ONE);
        if b.require(ca.ok.and(cb.ok)) {
            place_column(&mut b, &p, 0.0, &ca);
            place_column(&mut b, &q, ca.thickness, &cb);
            let t = Interval::point(ca.thickness) + Interval::point(cb.thickness);
            b.recurse(cx, t.lo(), 0.0, cx.lam - t, ONE, cx.d.pool_from(4));
        }
        offer!(alts, b.finish());
    }
    alts.done()
}

/// `r₁` and `r₂` cover full-height strips separated by a gap whose two
/// pockets `r₃` and `r₄` fill; the region right of `r₂` is recursed on.
pub fn four_ld3(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "4ld3");
    let mut base = Build::new("4ld3");
    let (w0, w1, w3) = (cx.d.w(0), cx.d.w(1), cx.d.w(3));
    let lam = cx.lam;
    if !base.require(w1.gt_f(0.25)) {
        return base.finish();
    }
    let (s1, s2) = (chord(w0, ONE), chord(w1, ONE));
    let c1 = s1 / 2.0;
    let (r0, r1) = (w0.sqrt_pos(), w1.sqrt_pos());
    // Half-height of the lens where the two disks overlap, for gap g.
    let lens = |g: Interval| {
        let dist = s1 / 2.0 + g + s2 / 2.0;
        let off = (w0 - w1 + dist.sqr()) / (2.0 * dist);
        (dist.lt(r0 + r1), (w0 - off.sqr()).sqrt_pos())
    };
    let fits = |g: f64| {
        let gi = Interval::point(g);
        let (meet, d) = lens(gi);
        meet.and(covers_rect(w3, gi, half() - d)).is_true()
    };
    let cap = (lam.hi() - s1.lo()).max(0.0);
    let Some(g) = bisect_max(0.0, cap, fits) else {
        base.require(Ternary::from_bool(!cx.exact()).and(Ternary::Indeterminate));
        return base.finish();
    };
    let gi = Interval::point(g);
    let (_, d) = lens(gi);
    let ph = half() - d;
    base.place(0, c1.lo(), 0.5);
    let c2 = s1 + gi + s2 / 2.0;
    base.place(1, s1.lo() + g + s2.lo() / 2.0, 0.5);
    base.place(2, s1.lo() + g / 2.0, 1.0 - ph.hi().max(0.0) / 2.0);
    base.place(3, s1.lo() + g / 2.0, ph.hi().max(0.0) / 2.0);
    let end = s1 + gi + s2;
    let rw = lam - end;

    let mut b = base.clone();
    b.recurse(cx, end.lo(), 0.0, rw, ONE, cx.d.pool_from(4));
    offer!(alts, b.finish());

    let mut b = base;
    let dx = lam - c2;
    if b.require(w1.gt(dx.sqr())) {
        let t2 = (w1 - dx.sqr()).sqrt_pos();
        let bh = half() - t2;
        let (pa, pb) = cx.d.pool_from(4).greedy_split(cx.d);
        if b.recurse(cx, end.lo(), 0.0, rw, bh, pa) {
            b.recurse(cx, end.lo(), (half() + t2).lo(), rw, bh, pb);
        }
    }
    offer!(alts, b.finish());
    alts.done()
}

/// Routines in cascade order for the given `λ`.
pub fn cascade(cx: &Cx) -> Vec<(&'static str, fn(&Cx) -> Attempt)> {
    let c = CriticalConstantsIv::get();
    let long: Vec<(&'static str, fn(&Cx) -> Attempt)> = vec![("split_cover", split_cover), ("large_disk", large_disk)];
    let short: Vec<(&'static str, fn(&Cx) -> Attempt)> = vec![
        ("small_disks", small_disks),
        ("cld1", cld1),
        ("cld2", cld2),
        ("cld3", cld3),
        ("2ld1", two_ld1),
        ("2ld2", two_ld2),
        ("3ld1", three_ld1),
        ("3ld2", three_ld2),
        ("3ld3", three_ld3),
        ("3ld4", three_ld4),
        ("3ld5", three_ld5),
        ("4ld1", four_ld1),
        ("4ld2", four_ld2),
        ("4ld3", four_ld3),
    ];
    let at_least = cx.lam.ge(c.lambda_bar);
    if at_least.is_true() {
        long
    } else if at_least.is_false() {
        short
    } else {
        long.into_iter().chain(short).collect()
    }
}

/// Runs the cascade, returning the first accepted attempt.
pub fn run(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "main");
    for (name, f) in cascade(cx) {
        let mut a = f(cx);
        a.routine = name;
        if cx.accepts(a.verdict) {
            return a;
        }
        let _ = alts.offer(a);
    }
    alts.done()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::profile::DiskProfile;
    use crate::thresholds::{three_equal_weight, two_disk_weight};

    fn cx_for(lam: f64, d: &DiskProfile) -> Cx<'_> {
        Cx { lam: Interval::point(lam), d, tolerant: false }
    }

    #[test]
    fn two_pockets_closes_the_two_disk_worst_case() {
        let lam = 1.5;
        let d = DiskProfile::concrete(&[(lam * lam + 1.0) / 4.0 * 1.000001, 0.25 * 1.000001]);
        let a = cld3(&cx_for(lam, &d));
        assert!(a.verdict.is_true(), "{a:?}");
    }

    #[test]
    fn corner_square_leaves_two_regions() {
        let mut w = vec![0.36];
        w.extend(std::iter::repeat(0.004).take(200));
        let d = DiskProfile::concrete(&w);
        let a = cld2(&cx_for(1.0, &d));
        assert!(a.verdict.is_true(), "{:?}", a.verdict);
        assert!((a.placed[0].1 - 0.6 * 2f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn strip_routine_skips_small_largest_disk() {
        let d = DiskProfile::concrete(&[0.25, 0.25, 0.25, 0.25]);
        assert!(cld1(&cx_for(1.0, &d)).verdict.is_false());
    }

    #[test]
    fn three_strips_leave_remainder() {
        let w = 0.51f64 * 0.51;
        let mut ws = vec![w, w, w];
        ws.extend(std::iter::repeat(0.01).take(40));
        let d = DiskProfile::concrete(&ws);
        let a = three_ld1(&cx_for(1.0, &d));
        let s = 2.0 * (w - 0.25f64).sqrt();
        assert!((a.placed[2].1 - 2.5 * s).abs() < 1e-9);
    }

    #[test]
    fn small_disks_criterion_matches_bound() {
        let d = DiskProfile::concrete(&[0.1; 10]);
        assert!(small_disks(&cx_for(1.0, &d)).verdict.is_true());
        let d = DiskProfile::concrete(&[0.2; 10]);
        assert!(small_disks(&cx_for(1.0, &d)).verdict.is_false());
    }

    #[test]
    fn three_disk_pocket_handles_near_worst_case() {
        let w = three_equal_weight(1.0) / 3.0 * 1.00001;
        let d = DiskProfile::concrete(&[w, w, w]);
        let a = three_ld5(&cx_for(1.0, &d));
        assert!(a.verdict.is_true(), "{a:?}");
    }

    #[test]
    fn large_disk_covers_two_disk_instance_at_long_skew() {
        let lam = 2.5;
        let d = DiskProfile::concrete(&[(lam * lam + 1.0) / 4.0, 0.25]);
        let a = large_disk(&cx_for(lam, &d));
        assert!(a.verdict.is_true());
        assert!(two_disk_weight(lam) > 0.0);
    }
}
