//! Routines for a `λ × 1` rectangle whose disks satisfy the radius bound
//! `r ≤ 0.375` and weigh at least `0.61 λ`.
//!
//! Inside this regime the working coefficient is `e = W / λ`, so subtasks
//! that receive weight proportional to their area only need the radius bound.

use super::main_catalog::{either_order, l_shape, recurse_reg, two_regions, Reg};
use super::plan::{offer, Alts, Attempt, Build, Cx};
use super::profile::Pool;
use super::recursion;
use super::shapes::{band, bisect_max, chord, covers_rect, inscribed_side, Band};
use super::wall;
use crate::interval::{Interval, Ternary};
use crate::splitting::min_gap_partition;
use crate::thresholds::{sb_wall_constants_iv, CriticalConstantsIv, E_SB, R_BOUND_SB, SB_LARGE_SKEW};

const ONE: Interval = Interval::ONE;

fn coeff(cx: &Cx) -> Interval {
    cx.d.total() / cx.lam
}

fn rho(w: Interval, h: Interval) -> Interval {
    R_BOUND_SB * w.min(h)
}

/// Whether a disk of weight `w2` satisfies the radius bound on `w × h`.
fn fits(w2: Interval, w: Interval, h: Interval) -> Ternary {
    w2.le(rho(w, h).sqr())
}

/// Failure when a free parameter could not be found: indeterminate for boxes,
/// false for concrete instances.
fn not_found(cx: &Cx) -> Ternary {
    Ternary::Indeterminate.and(Ternary::from_bool(!cx.exact()))
}

fn weights(cx: &Cx, idx: &[usize]) -> Vec<Interval> {
    idx.iter().map(|&i| cx.d.w(i)).collect()
}

/// Places a horizontal band starting at `(x0, y0)`.
fn place_row(b: &mut Build, idx: &[usize], x0: f64, y0: f64, band: &Band) {
    for (&i, c) in idx.iter().zip(band.centers()) {
        b.place(i, x0 + c, y0 + band.thickness / 2.0);
    }
}

/// Places a vertical band starting at `(x0, y0)`.
fn place_col(b: &mut Build, idx: &[usize], x0: f64, y0: f64, band: &Band) {
    for (&i, c) in idx.iter().zip(band.centers()) {
        b.place(i, x0 + band.thickness / 2.0, y0 + c);
    }
}

/// Subtask checked only against the radius bound; an empty pool may only
/// receive an empty region.
fn proportional(b: &mut Build, cx: &Cx, x: f64, w: Interval, pool: Pool) -> bool {
    if pool.is_empty(cx.d) && w.hi() > recursion::SLIVER {
        return b.require(Ternary::from_bool(w.hi() <= 0.0).or(not_found(cx)));
    }
    b.recurse_proportional(cx, x, 0.0, w, ONE, pool)
}

/// Disk `i` covers a strip across the short side at the start of `r`'s long
/// side. Returns the remaining region, or `None` if the disk is too small.
fn cut(b: &mut Build, cx: &Cx, i: usize, r: Reg) -> Option<Reg> {
    let wi = cx.d.w(i);
    if r.w.hi() >= r.h.hi() {
        let t = chord(wi, r.h);
        if t.lo() <= 0.0 {
            return None;
        }
        b.place(i, r.x + t.lo() / 2.0, r.y + r.h.hi() / 2.0);
        Some(Reg::new(r.x + t.lo(), r.y, r.w - t, r.h))
    } else {
        let t = chord(wi, r.w);
        if t.lo() <= 0.0 {
            return None;
        }
        b.place(i, r.x + r.w.hi() / 2.0, r.y + t.lo() / 2.0);
        Some(Reg::new(r.x, r.y + t.lo(), r.w, r.h - t))
    }
}

fn is_empty(r: &Reg) -> bool {
    r.w.hi() <= 0.0 || r.h.hi() <= 0.0
}

/// Disks are collected for each region but the last until recursion there is
/// guaranteed; the last region receives the rest.
fn regions_in_order(cx: &Cx, mut b: Build, pool: &Pool, regs: &[Reg]) -> Attempt {
    let mut rest = pool.clone();
    for (k, r) in regs.iter().enumerate() {
        if k + 1 == regs.len() {
            recurse_reg(&mut b, cx, *r, rest);
            break;
        }
        let need = recursion::need(r.w, r.h, rest.max_weight(cx.d));
        let c = rest.collect_until(cx.d, need);
        if !b.require(c.ok) || !recurse_reg(&mut b, cx, *r, c.group) {
            break;
        }
        rest = c.rest;
    }
    b.finish()
}

/// The widest full-height column two disks can cover, stacked or side by side.
fn pair_column(cx: &Cx, i: usize, j: usize) -> Option<(Interval, Vec<(usize, f64, f64)>)> {
    let stacked = band(&weights(cx, &[i, j]), ONE);
    let (ci, cj) = (chord(cx.d.w(i), ONE), chord(cx.d.w(j), ONE));
    let side = ci + cj;
    let mut best: Option<(Interval, Vec<(usize, f64, f64)>)> = None;
    if stacked.ok.is_true() {
        let c = stacked.centers();
        let t = stacked.thickness;
        best = Some((Interval::point(t), vec![(i, t / 2.0, c[0]), (j, t / 2.0, c[1])]));
    }
    if ci.lo() > 0.0 && cj.lo() > 0.0 && best.as_ref().map_or(true, |(w, _)| side.lo() > w.lo()) {
        best = Some((side, vec![(i, ci.lo() / 2.0, 0.5), (j, ci.lo() + cj.lo() / 2.0, 0.5)]));
    }
    best
}

/// Widest left block of `k` columns from the given groups.
fn columns(cx: &Cx, groups: &[Vec<usize>]) -> Option<(Interval, Vec<(usize, f64, f64)>)> {
    let mut at = Interval::ZERO;
    let mut placed = Vec::new();
    for g in groups {
        if g.len() == 2 {
            let (w, p) = pair_column(cx, g[0], g[1])?;
            placed.extend(p.into_iter().map(|(i, x, y)| (i, x + at.lo(), y)));
            at = at + w;
        } else {
            let col = band(&weights(cx, g), ONE);
            if !col.ok.is_true() {
                return None;
            }
            for (&i, c) in g.iter().zip(col.centers()) {
                placed.push((i, at.lo() + col.thickness / 2.0, c));
            }
            at = at + Interval::point(col.thickness);
        }
    }
    Some((at, placed))
}

fn best_columns(cx: &Cx, options: &[Vec<Vec<usize>>]) -> Option<(Interval, Vec<(usize, f64, f64)>)> {
    options
        .iter()
        .filter_map(|g| columns(cx, g))
        .max_by(|a, b| a.0.lo().total_cmp(&b.0.lo()))
}

fn pairings(idx: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if idx.is_empty() {
        return vec![Vec::new()];
    }
    let first = idx[0];
    let mut out = Vec::new();
    for k in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&j| j != idx[k]).collect();
        for mut p in pairings(&rest) {
            p.insert(0, vec![first, idx[k]]);
            out.push(p);
        }
    }
    out
}

fn place_all(b: &mut Build, placed: &[(usize, f64, f64)]) {
    for &(i, x, y) in placed {
        b.place(i, x, y);
    }
}

/// For `λ ≥ 2.5`: disks in decreasing order until their weight reaches `e`,
/// covering a full-height strip of proportional width.
pub fn large_skew(cx: &Cx) -> Attempt {
    let mut b = Build::new("large_skew");
    if !b.require(cx.lam.ge_f(SB_LARGE_SKEW)) {
        return b.finish();
    }
    let e = coeff(cx);
    let c = cx.d.full_pool().collect_until(cx.d, e);
    if !b.require(c.ok) {
        return b.finish();
    }
    let w1 = c.group.weight(cx.d) / e;
    if proportional(&mut b, cx, 0.0, w1, c.group) {
        proportional(&mut b, cx, w1.lo(), cx.lam - w1, c.rest);
    }
    b.finish()
}

/// Balanced splitting: the first seven disks are partitioned minimizing the
/// weight difference, the rest is added greedily.
pub fn eurs1(cx: &Cx) -> Attempt {
    let mut b = Build::new("eurs1");
    let k = cx.d.known().min(7);
    let head: Vec<f64> = (0..k).map(|i| cx.d.w(i).mid()).collect();
    let Ok(part) = min_gap_partition(&head) else {
        b.require(Ternary::False);
        return b.finish();
    };
    let gap = if cx.exact() {
        0.0
    } else {
        let wa: Interval = part.a.iter().map(|&i| cx.d.w(i)).sum();
        let wb: Interval = part.b.iter().map(|&i| cx.d.w(i)).sum();
        (wa - wb).abs().hi().max(cx.d.w(k.saturating_sub(1)).hi())
    };
    let (pa, pb) = cx.d.full_pool().seeded_split(cx.d, &part.a, &part.b, gap);
    if !b.require(Ternary::from_bool(!pa.is_empty(cx.d) && !pb.is_empty(cx.d))) {
        return b.finish();
    }
    let e = coeff(cx);
    let wa = pa.weight(cx.d) / e;
    if proportional(&mut b, cx, 0.0, wa, pa) {
        proportional(&mut b, cx, wa.lo(), cx.lam - wa, pb);
    }
    b.finish()
}

/// Unbalanced splitting: a first group large enough for the smallest strip
/// that satisfies the radius bound for `r₁`.
pub fn eurs2(cx: &Cx) -> Attempt {
    let mut b = Build::new("eurs2");
    let e = coeff(cx);
    let ell = cx.d.r(0) / R_BOUND_SB;
    let c = cx.d.full_pool().collect_until(cx.d, e * ell);
    if !b.require(c.ok) || !b.require(Ternary::from_bool(!c.rest.is_empty(cx.d))) {
        return b.finish();
    }
    let w1 = c.group.weight(cx.d) / e;
    if proportional(&mut b, cx, 0.0, w1, c.group) {
        proportional(&mut b, cx, w1.lo(), cx.lam - w1, c.rest);
    }
    b.finish()
}

/// Rows (or columns) of consecutive members of `idx`, each a band over
/// `length`; returns the band thicknesses of the first composition whose
/// thicknesses add up to `span`.
fn rows_cover(cx: &Cx, idx: &[usize], length: Interval, span: f64) -> Option<Vec<(Vec<usize>, Band)>> {
    let k = idx.len();
    let mut cache: std::collections::HashMap<(usize, usize), Band> = std::collections::HashMap::new();
    for mask in 0u32..(1 << (k - 1)) {
        let mut rows = Vec::new();
        let mut start = 0;
        let mut total = Interval::ZERO;
        let mut ok = true;
        for end in 1..=k {
            if end == k || mask & (1 << (end - 1)) != 0 {
                let bnd = cache
                    .entry((start, end))
                    .or_insert_with(|| band(&weights(cx, &idx[start..end]), length))
                    .clone();
                if !bnd.ok.is_true() {
                    ok = false;
                    break;
                }
                total = total + Interval::point(bnd.thickness);
                rows.push((idx[start..end].to_vec(), bnd));
                start = end;
            }
        }
        if ok && total.ge_f(span).is_true() {
            return Some(rows);
        }
    }
    None
}

/// Strip building: a subset of the seven largest disks covers a strip whose
/// area matches its weight, in rows; the rest recurse proportionally.
pub fn bas1(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "bas1");
    let k = cx.d.known().min(7);
    let e = coeff(cx);
    for mask in 1u32..(1 << k) {
        let t: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        let wt: Interval = t.iter().map(|&i| cx.d.w(i)).sum();
        let rest = cx.d.full_pool().without_all(&t);
        // Vertical strip at the left.
        let omega = wt / e;
        if omega.lt(cx.lam).is_true() {
            if let Some(rows) = rows_cover(cx, &t, omega, 1.0) {
                let mut b = Build::new("bas1");
                let mut y = 0.0;
                for (idx, bnd) in &rows {
                    place_row(&mut b, idx, 0.0, y, bnd);
                    y += bnd.thickness;
                }
                proportional(&mut b, cx, omega.lo(), cx.lam - omega, rest.clone());
                offer!(alts, b.finish());
            }
        }
        // Horizontal strip at the bottom.
        let eta = wt / (e * cx.lam);
        if eta.lt_f(1.0).is_true() {
            if let Some(cols) = rows_cover(cx, &t, eta, cx.lam.hi()) {
                let mut b = Build::new("bas1");
                let mut x = 0.0;
                for (idx, bnd) in &cols {
                    place_col(&mut b, idx, x, 0.0, bnd);
                    x += bnd.thickness;
                }
                let h = ONE - eta;
                let fit = fits(rest.max_weight(cx.d), cx.lam, h);
                if b.require(fit) && !(rest.is_empty(cx.d) && h.hi() > recursion::SLIVER) {
                    b.push(recursion::Rect::new(0.0, eta.lo(), cx.lam.hi(), h.hi()), recursion::Regime::WeightBounded, rest);
                    offer!(alts, b.finish());
                }
            }
        }
    }
    alts.done()
}

/// Sufficient criterion for wall building from the seven largest disks.
fn wb1_criterion(cx: &Cx) -> Ternary {
    let c = sb_wall_constants_iv();
    let e = CriticalConstantsIv::get().e_sb;
    let sqrt2 = Interval::point(2.0).sqrt();
    let (r1, r7) = (cx.d.r(0), cx.d.r(6));
    let cond1 = r1.le(R_BOUND_SB * (cx.lam - sqrt2 * r7));
    let cond2 = r7.le(c.q1_bound_factor);
    let head: Interval = (0..6).map(|i| cx.d.w(i)).sum();
    let mut geo = Interval::ZERO;
    let mut pow = ONE;
    let mut cond3 = Ternary::False;
    for _ in 0..=32 {
        geo = geo + pow;
        pow = pow * c.s;
        let t = r7 * pow;
        let a = e * cx.lam - head - sqrt2 * r7 * e * c.l_factor * geo;
        let ok = a.ge(t * e / R_BOUND_SB).and(r1.le(R_BOUND_SB * (cx.lam - t / R_BOUND_SB - t.sqr() / e)));
        cond3 = cond3.or(ok);
        if cond3.is_true() {
            break;
        }
    }
    cond1.and(cond2).and(cond3)
}

/// Wall building: a column of similar disks at the left border.
pub fn wb1(cx: &Cx) -> Attempt {
    let mut b = Build::new("wb1");
    if !cx.exact() {
        b.require(wb1_criterion(cx));
        return b.finish();
    }
    let n = cx.d.known();
    let radii: Vec<f64> = (0..n).map(|i| cx.d.r(i).lo()).collect();
    let e = coeff(cx);
    for start in 6..n {
        let Some(m) = wall::find_wall_run(&radii[start..], 1.0, E_SB) else { continue };
        let Ok(col) = wall::wall_build(&radii[start..start + m], 1.0, E_SB) else { continue };
        let used: Vec<usize> = (start..start + col.used()).collect();
        let rest = cx.d.full_pool().without_all(&used);
        let width = Interval::point(col.width);
        let mut w = b.clone();
        if !w.require(fits(cx.d.w(0), cx.lam - width, ONE)) {
            break;
        }
        for (&i, y) in used.iter().zip(col.centers()) {
            w.place(i, col.width / 2.0, y);
        }
        w.recurse(cx, col.width, 0.0, cx.lam - width, ONE, rest);
        if cx.accepts(w.verdict()) {
            return w.finish();
        }
        break;
    }
    // Fallback: collect from the smallest disk until the group can cover a
    // strip on which its largest disk satisfies the radius bound.
    let mut acc = Interval::ZERO;
    for i in (1..n).rev() {
        acc = acc + cx.d.w(i);
        let beta = cx.d.r(i) / R_BOUND_SB;
        if acc.ge(e * beta).is_true() {
            let group = Pool::of((i..n).collect());
            let rest = cx.d.full_pool().without_all(group.members());
            let w1 = acc / e;
            if proportional(&mut b, cx, 0.0, w1, group) {
                proportional(&mut b, cx, w1.lo(), cx.lam - w1, rest);
            }
            return b.finish();
        }
    }
    b.require(Ternary::False);
    b.finish()
}

/// Sufficient criterion for placing `r₁` in a corner with wall rows above it.
fn r1c_criterion(cx: &Cx) -> Ternary {
    let c = sb_wall_constants_iv();
    let e = CriticalConstantsIv::get().e_sb;
    let sqrt2 = Interval::point(2.0).sqrt();
    let (w1, r1, r7, w7) = (cx.d.w(0), cx.d.r(0), cx.d.r(6), cx.d.w(6));
    let ell = sqrt2 * r1;
    let (aw, ah) = (ell, ONE - ell);
    let area_a = aw * ah;
    let rho_a = rho(aw, ah);
    let bw = cx.lam - ell;
    let wg = (2.0 * e - 1.0) * w1;
    let neg = Interval::point(-1e300);
    let w2 = if fits(cx.d.w(1), bw, ONE).is_true() { Interval::ZERO } else { neg };
    let strip = |idx: &[usize], next: usize| {
        let bnd = band(&weights(cx, idx), bw);
        if !bnd.ok.is_true() {
            return neg;
        }
        let h = Interval::point(bnd.thickness);
        if !fits(cx.d.w(next), bw, ONE - h).is_true() {
            return neg;
        }
        idx.iter().fold(e * bw * h, |acc, &i| acc - cx.d.w(i))
    };
    let w23 = strip(&[1, 2], 3);
    let w234 = strip(&[1, 2, 3], 4);
    let best = w2.max(w23).max(w234);
    let cond1 = (wg + best).ge((2.0 * e * r1 * r7).max(w7.min(rho_a.sqr())));
    let cond2 = r7.le(r1 * (1.0 - c.l_factor));
    let head6: Interval = (0..6).map(|i| cx.d.w(i)).sum();
    let head7 = head6 + w7;
    let l_ell = c.l_factor * ell;
    let mut k = 0;
    let mut pow = ONE;
    while k < 64 && (r7 * pow).hi() > rho_a.lo() {
        pow = pow * c.s;
        k += 1;
    }
    let geo: Interval = (0..=k).fold((Interval::ZERO, ONE), |(acc, p), _| (acc + p, p * c.s)).0;
    let wk = e * (cx.lam - area_a) - head6 - l_ell * sqrt2 * r7 * geo;
    let winf = e * cx.lam - head7 - e * l_ell * sqrt2 * r7 / (1.0 - c.s);
    let cond3 = wk.max(winf).ge(e * area_a);
    let cond4 = (e * cx.lam - head7).ge(e * area_a);
    cond1.and(cond2).and(cond3).and(cond4)
}

/// Options for the region right of `r₁`: all disks, or `r₂, r₃` (and `r₄`)
/// in a strip at its bottom first.
fn r1c_right(cx: &Cx, base: &Build, ell: Interval, pool: &Pool) -> Attempt {
    let mut alts = Alts::new(cx, "r1c");
    let bw = cx.lam - ell;
    let mut b = base.clone();
    b.recurse(cx, ell.lo(), 0.0, bw, ONE, pool.clone());
    offer!(alts, b.finish());
    for strip in [&[1usize, 2][..], &[1, 2, 3][..]] {
        if !strip.iter().all(|&i| pool.contains(i)) {
            continue;
        }
        let bnd = band(&weights(cx, strip), bw);
        if !bnd.ok.is_true() {
            continue;
        }
        let mut b = base.clone();
        place_row(&mut b, strip, ell.lo(), 0.0, &bnd);
        let h = Interval::point(bnd.thickness);
        b.recurse(cx, ell.lo(), bnd.thickness, bw, ONE - h, pool.without_all(strip));
        offer!(alts, b.finish());
    }
    alts.done()
}

/// `r₁` covers its inscribed square in the bottom-left corner; the region
/// above it is covered recursively by the smallest disks or by wall rows.
pub fn r1c(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "r1c");
    let mut base = Build::new("r1c");
    if !cx.exact() {
        base.require(r1c_criterion(cx));
        return base.finish();
    }
    let ell = inscribed_side(cx.d.w(0));
    if !base.require(ell.lt_f(1.0)) {
        return base.finish();
    }
    base.place(0, ell.lo() / 2.0, ell.lo() / 2.0);
    let ah = ONE - ell;
    let area_a = ell * ah;
    let e = coeff(cx);
    let n = cx.d.known();
    let rest = cx.d.pool_from(1);

    // A.1: smallest disks first.
    let mut acc = Interval::ZERO;
    for i in (1..n).rev() {
        acc = acc + cx.d.w(i);
        if acc.ge(e * area_a).is_true() {
            let group = Pool::of((i..n).collect());
            let mut b = base.clone();
            if b.require(fits(cx.d.w(i), ell, ah)) {
                b.push(
                    recursion::Rect::new(0.0, ell.lo(), ell.hi(), ah.hi()),
                    recursion::Regime::WeightBounded,
                    group.clone(),
                );
                offer!(alts, r1c_right(cx, &b, ell, &rest.without_all(group.members())));
            }
            break;
        }
    }

    // A.2: horizontal wall rows of length ℓ, starting with r₇.
    let radii: Vec<f64> = (0..n).map(|i| cx.d.r(i).lo()).collect();
    let mut b = base.clone();
    let mut used = Vec::new();
    let mut height = 0.0;
    let mut start = 6;
    let target = ah.hi();
    while height < target && start < n {
        match wall::find_wall_run(&radii[start..], ell.lo(), E_SB) {
            Some(m) => {
                let Ok(col) = wall::wall_build(&radii[start..start + m], ell.lo(), E_SB) else { break };
                let ids: Vec<usize> = (start..start + col.used()).collect();
                for (&i, x) in ids.iter().zip(col.centers()) {
                    b.place(i, x, ell.lo() + height + col.width / 2.0);
                }
                height += col.width;
                used.extend(ids);
                start += col.used();
            }
            None => start += 1,
        }
    }
    if height >= target {
        offer!(alts, r1c_right(cx, &b, ell, &rest.without_all(&used)));
    }
    alts.done()
}

/// `r₁` and `r₂` cover squares in opposite corners; disks three to seven cut
/// the middle region, and the three remaining regions are covered recursively.
pub fn r12oc(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "r12oc");
    let mut b = Build::new("r12oc");
    let (s1, s2) = (inscribed_side(cx.d.w(0)), inscribed_side(cx.d.w(1)));
    if !b.require((s1 + s2).le_f(1.0)) {
        return b.finish();
    }
    let lam = cx.lam;
    b.place(0, s1.lo() / 2.0, s1.lo() / 2.0);
    b.place(1, lam.hi() - s2.lo() / 2.0, 1.0 - s2.lo() / 2.0);
    let a = Reg::new(0.0, s1.lo(), s1, ONE - s1);
    let bb = Reg::new((lam - s2).lo(), 0.0, s2, ONE - s2);
    let mut c = Reg::new(s1.lo(), 0.0, lam - s1 - s2, ONE);
    let e = coeff(cx);
    let mut next = 2;
    while next < 7 && !is_empty(&c) {
        let wi = cx.d.w(next);
        let strip = if c.w.hi() >= c.h.hi() { chord(wi, c.h) * c.h } else { chord(wi, c.w) * c.w };
        if !(e * strip).ge(wi).is_true() {
            break;
        }
        match cut(&mut b, cx, next, c) {
            Some(r) => c = r,
            None => break,
        }
        next += 1;
    }
    let pool = cx.d.pool_from(next);
    for order in [[a, bb, c], [c, a, bb], [bb, a, c], [a, c, bb]] {
        let regs: Vec<Reg> = order.iter().copied().filter(|r| !is_empty(r)).collect();
        if regs.is_empty() {
            offer!(alts, b.clone().finish());
            continue;
        }
        offer!(alts, regions_in_order(cx, b.clone(), &pool, &regs));
    }
    alts.done()
}

/// The widest full-height column from `r₁, r₂`, then `r₃` in the corner of
/// the remainder.
pub fn three_ld1(cx: &Cx) -> Attempt {
    let mut b = Build::new("sb3ld1");
    let Some((w, placed)) = pair_column(cx, 0, 1) else {
        b.require(Ternary::False);
        return b.finish();
    };
    if !b.require((coeff(cx) * w).ge(cx.d.w(0) + cx.d.w(1))) {
        return b.finish();
    }
    place_all(&mut b, &placed);
    let s3 = inscribed_side(cx.d.w(2));
    b.place(2, w.lo() + s3.lo() / 2.0, s3.lo() / 2.0);
    l_shape(cx, "sb3ld1", &b, &cx.d.pool_from(3), w + s3, s3, w)
}

/// Column from `r₁, r₂`, then `r₃` across the bottom of the remainder; the
/// next disks cut the remainder along its longer side.
pub fn three_ld2(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb3ld2");
    let mut b = Build::new("sb3ld2");
    let Some((w, placed)) = pair_column(cx, 0, 1) else {
        b.require(Ternary::False);
        return b.finish();
    };
    place_all(&mut b, &placed);
    let rw = cx.lam - w;
    let h3 = chord(cx.d.w(2), rw);
    if !b.require(h3.gt_f(0.0)) {
        return b.finish();
    }
    b.place(2, w.lo() + rw.hi() / 2.0, h3.lo() / 2.0);
    let mut r = Reg::new(w.lo(), h3.lo(), rw, ONE - h3);
    for i in 3..=6 {
        let mut t = b.clone();
        recurse_reg(&mut t, cx, r, cx.d.pool_from(i));
        offer!(alts, t.finish());
        if i == 6 || is_empty(&r) {
            break;
        }
        match cut(&mut b, cx, i, r) {
            Some(next) => r = next,
            None => break,
        }
    }
    alts.done()
}

/// `r₁` in the corner; the rest of the left side by recursion, or `r₃, r₄`
/// and `r₂` in strips at the bottom of the right region first.
pub fn four_ld1(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb4ld1");
    let mut b = Build::new("sb4ld1");
    let s = inscribed_side(cx.d.w(0));
    if !b.require(s.lt_f(1.0)) {
        return b.finish();
    }
    b.place(0, s.lo() / 2.0, s.lo() / 2.0);
    let a = Reg::new(0.0, s.lo(), s, ONE - s);
    let right = cx.lam - s;
    let rb = Reg::new(s.lo(), 0.0, right, ONE);
    if let Some(x) = either_order(cx, &mut alts, &b, &cx.d.pool_from(1), a, rb) {
        return x;
    }
    let bnd = band(&weights(cx, &[2, 3]), right);
    if bnd.ok.is_true() {
        let h34 = Interval::point(bnd.thickness);
        let h2 = chord(cx.d.w(1), right);
        if h2.lo() > 0.0 {
            place_row(&mut b, &[2, 3], s.lo(), 0.0, &bnd);
            b.place(1, s.lo() + right.hi() / 2.0, bnd.thickness + h2.lo() / 2.0);
            let top = h34 + h2;
            let rb2 = Reg::new(s.lo(), top.lo(), right, ONE - top);
            if let Some(x) = either_order(cx, &mut alts, &b, &cx.d.pool_from(4), a, rb2) {
                return x;
            }
        }
    }
    alts.done()
}

fn four_ld2(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb4ld2");
    let mut b = Build::new("sb4ld2");
    let Some((w, placed)) = best_columns(cx, &pairings(&[0, 1, 2, 3])) else {
        b.require(Ternary::False);
        return b.finish();
    };
    let w4: Interval = (0..4).map(|i| cx.d.w(i)).sum();
    if !b.require(w.ge(w4 / coeff(cx))) {
        return b.finish();
    }
    place_all(&mut b, &placed);
    let rw = cx.lam - w;
    let mut t = b.clone();
    t.recurse(cx, w.lo(), 0.0, rw, ONE, cx.d.pool_from(4));
    offer!(alts, t.finish());
    let h5 = chord(cx.d.w(4), rw);
    if h5.lo() <= 0.0 {
        return alts.done();
    }
    b.place(4, w.lo() + rw.hi() / 2.0, h5.lo() / 2.0);
    let mut t = b.clone();
    t.recurse(cx, w.lo(), h5.lo(), rw, ONE - h5, cx.d.pool_from(5));
    offer!(alts, t.finish());
    let h6 = chord(cx.d.w(5), rw);
    if h6.lo() > 0.0 {
        let mut t = b.clone();
        t.place(5, w.lo() + rw.hi() / 2.0, 1.0 - h6.lo() / 2.0);
        t.recurse(cx, w.lo(), h5.lo(), rw, ONE - h5 - h6, cx.d.pool_from(6));
        offer!(alts, t.finish());
    }
    // r₆ as a vertical strip at the right above r₅; the rest is bounded by
    // its bounding box.
    let t6 = chord(cx.d.w(5), ONE - h5);
    if t6.lo() > 0.0 {
        let mut t = b.clone();
        t.place(5, cx.lam.hi() - t6.lo() / 2.0, (h5.lo() + 1.0) / 2.0);
        t.recurse(cx, w.lo(), h5.lo(), rw - t6, ONE - h5, cx.d.pool_from(6));
        offer!(alts, t.finish());
    }
    alts.done()
}

/// Column from `r₁, r₂`; `r₃, r₄` in a strip across the bottom of the rest.
fn four_ld3(cx: &Cx) -> Attempt {
    let mut b = Build::new("sb4ld3");
    let Some((w, placed)) = pair_column(cx, 0, 1) else {
        b.require(Ternary::False);
        return b.finish();
    };
    place_all(&mut b, &placed);
    let rw = cx.lam - w;
    let bnd = band(&weights(cx, &[2, 3]), rw);
    if !b.require(bnd.ok) {
        return b.finish();
    }
    place_row(&mut b, &[2, 3], w.lo(), 0.0, &bnd);
    let h = Interval::point(bnd.thickness);
    b.recurse(cx, w.lo(), bnd.thickness, rw, ONE - h, cx.d.pool_from(4));
    b.finish()
}

/// Three disks across the bottom, two up the left side.
fn five_ld1(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb5ld1");
    for (row, col) in [([0, 1, 2], [3, 4]), ([0, 1, 4], [2, 3])] {
        let mut b = Build::new("sb5ld1");
        let bottom = band(&weights(cx, &row), cx.lam);
        if !b.require(bottom.ok) {
            continue;
        }
        place_row(&mut b, &row, 0.0, 0.0, &bottom);
        let h = Interval::point(bottom.thickness);
        let side = band(&weights(cx, &col), ONE - h);
        if !b.require(side.ok) {
            continue;
        }
        place_col(&mut b, &col, 0.0, bottom.thickness, &side);
        let w = Interval::point(side.thickness);
        b.recurse(cx, side.thickness, bottom.thickness, cx.lam - w, ONE - h, cx.d.pool_from(5));
        offer!(alts, b.finish());
    }
    alts.done()
}

/// `r₁, r₂` across the bottom; `r₅` left, `r₄` right, `r₃` on top.
fn five_ld2(cx: &Cx) -> Attempt {
    let mut b = Build::new("sb5ld2");
    let bottom = band(&weights(cx, &[0, 1]), cx.lam);
    if !b.require(bottom.ok) {
        return b.finish();
    }
    place_row(&mut b, &[0, 1], 0.0, 0.0, &bottom);
    let h = Interval::point(bottom.thickness);
    let rest_h = ONE - h;
    let c5 = chord(cx.d.w(4), rest_h);
    let c4 = chord(cx.d.w(3), rest_h);
    let ymid = (bottom.thickness + 1.0) / 2.0;
    b.place(4, c5.lo() / 2.0, ymid);
    b.place(3, cx.lam.hi() - c4.lo() / 2.0, ymid);
    let mid = cx.lam - c4 - c5;
    if mid.hi() <= 0.0 {
        return b.finish();
    }
    let h3 = chord(cx.d.w(2), mid);
    if !b.require(h3.gt_f(0.0)) {
        return b.finish();
    }
    b.place(2, c5.lo() + mid.hi() / 2.0, 1.0 - h3.lo() / 2.0);
    b.recurse(cx, c5.lo(), bottom.thickness, mid, rest_h - h3, cx.d.pool_from(5));
    b.finish()
}

/// `r₁, r₂` across the bottom, `r₄` left and `r₃` right; the two pockets
/// between `r₃` and `r₄` go to `r₅` and `r₆`.
fn six_ld1(cx: &Cx) -> Attempt {
    let mut b = Build::new("sb6ld1");
    let bottom = band(&weights(cx, &[0, 1]), cx.lam);
    if !b.require(bottom.ok) {
        return b.finish();
    }
    place_row(&mut b, &[0, 1], 0.0, 0.0, &bottom);
    let hh = ONE - Interval::point(bottom.thickness);
    let (w3, w4) = (cx.d.w(2), cx.d.w(3));
    let c4 = chord(w4, hh);
    let c3 = chord(w3, hh);
    let ymid = (bottom.thickness + 1.0) / 2.0;
    b.place(3, c4.lo() / 2.0, ymid);
    b.place(2, cx.lam.hi() - c3.lo() / 2.0, ymid);
    let gap = cx.lam - c3 - c4;
    if gap.hi() <= 0.0 {
        return b.finish();
    }
    // Lens of the two disks: centres `dist` apart, chord at offset `off` from r₄'s centre.
    let dist = cx.lam - c3 / 2.0 - c4 / 2.0;
    if !b.require((w3.sqrt_pos() + w4.sqrt_pos()).gt(dist)) {
        return b.finish();
    }
    let off = (w4 - w3 + dist.sqr()) / (2.0 * dist);
    let half_chord = (w4 - off.sqr()).sqrt_pos();
    let pocket = hh / 2.0 - half_chord;
    if pocket.hi() <= 0.0 {
        return b.finish();
    }
    if !b.require(covers_rect(cx.d.w(5), gap, pocket)) {
        return b.finish();
    }
    let xmid = c4.lo() + gap.hi() / 2.0;
    b.place(4, xmid, 1.0 - pocket.hi() / 2.0);
    b.place(5, xmid, bottom.thickness + pocket.hi() / 2.0);
    b.finish()
}

/// `r₁, r₂` side by side at the bottom with height chosen so that the rest
/// of the bottom row can be covered recursively by disks six onwards; then
/// `r₄`, `r₃` at the sides, `r₅` on top, `r₆` in the middle.
fn six_ld2(cx: &Cx) -> Attempt {
    let mut b = Build::new("sb6ld2");
    let (w1, w2) = (cx.d.w(0), cx.d.w(1));
    let tail = cx.d.pool_from(6);
    let (tw, tmax) = (tail.weight(cx.d), tail.max_weight(cx.d));
    let ok = |h: f64| {
        let hi = Interval::point(h);
        let c = chord(w1, hi) + chord(w2, hi);
        recursion::check(cx.lam - c, hi, tw, tmax, cx.exact(), false).verdict.is_true()
    };
    let Some(h) = bisect_max(1e-9, 1.0, ok) else {
        b.require(not_found(cx));
        return b.finish();
    };
    let hi = Interval::point(h);
    let (c1, c2) = (chord(w1, hi), chord(w2, hi));
    b.place(0, c1.lo() / 2.0, h / 2.0);
    b.place(1, c1.lo() + c2.lo() / 2.0, h / 2.0);
    let right = c1 + c2;
    if !b.recurse(cx, right.lo(), 0.0, cx.lam - right, hi, tail) {
        return b.finish();
    }
    let hh = ONE - hi;
    let c4 = chord(cx.d.w(3), hh);
    let c3 = chord(cx.d.w(2), hh);
    let ymid = (h + 1.0) / 2.0;
    b.place(3, c4.lo() / 2.0, ymid);
    b.place(2, cx.lam.hi() - c3.lo() / 2.0, ymid);
    let mid = cx.lam - c3 - c4;
    if mid.hi() <= 0.0 {
        return b.finish();
    }
    let h5 = chord(cx.d.w(4), mid);
    let xmid = c4.lo() + mid.hi() / 2.0;
    b.place(4, xmid, 1.0 - h5.lo() / 2.0);
    let left = hh - h5;
    if left.hi() > 0.0 && b.require(covers_rect(cx.d.w(5), mid, left)) {
        b.place(5, xmid, h + left.hi() / 2.0);
    }
    b.finish()
}

/// Columns from `r₁, r₂` and `r₄, r₅, r₆`; `r₃` across the bottom of the rest.
fn six_ld3(cx: &Cx) -> Attempt {
    let mut b = Build::new("sb6ld3");
    let Some((w, placed)) = columns(cx, &[vec![0, 1], vec![3, 4, 5]]) else {
        b.require(Ternary::False);
        return b.finish();
    };
    place_all(&mut b, &placed);
    let rw = cx.lam - w;
    let h3 = chord(cx.d.w(2), rw);
    if rw.hi() > 0.0 && !b.require(h3.gt_f(0.0)) {
        return b.finish();
    }
    b.place(2, w.lo() + rw.hi() / 2.0, h3.lo() / 2.0);
    b.recurse(cx, w.lo(), h3.lo(), rw, ONE - h3, cx.d.pool_from(6));
    b.finish()
}

fn triples_of_six() -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for a in 1..6 {
        for c in a + 1..6 {
            let first = vec![0, a, c];
            let second: Vec<usize> = (1..6).filter(|i| *i != a && *i != c).collect();
            out.push(vec![first, second]);
        }
    }
    out
}

/// The six largest disks in columns of pairs or triples; `r₇` across the
/// bottom of the rest.
fn seven_ld1(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb7ld1");
    let mut options = pairings(&[0, 1, 2, 3, 4, 5]);
    options.extend(triples_of_six());
    let mut b = Build::new("sb7ld1");
    let Some((w, placed)) = best_columns(cx, &options) else {
        b.require(Ternary::False);
        return b.finish();
    };
    place_all(&mut b, &placed);
    let rw = cx.lam - w;
    let mut t = b.clone();
    t.recurse(cx, w.lo(), 0.0, rw, ONE, cx.d.pool_from(6));
    offer!(alts, t.finish());
    let h7 = chord(cx.d.w(6), rw);
    if h7.lo() > 0.0 {
        b.place(6, w.lo() + rw.hi() / 2.0, h7.lo() / 2.0);
        b.recurse(cx, w.lo(), h7.lo(), rw, ONE - h7, cx.d.pool_from(7));
        offer!(alts, b.finish());
    }
    alts.done()
}

/// Two pair columns; `r₅` and `r₆` in rows; the pockets left above `r₆` go
/// to `r₇` and recursion, or both to recursion.
fn seven_ld2(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb7ld2");
    let mut b = Build::new("sb7ld2");
    let Some((w, placed)) = best_columns(cx, &pairings(&[0, 1, 2, 3])) else {
        b.require(Ternary::False);
        return b.finish();
    };
    place_all(&mut b, &placed);
    let rw = cx.lam - w;
    let h5 = chord(cx.d.w(4), rw);
    let h6 = chord(cx.d.w(5), rw);
    if !b.require(h5.gt_f(0.0).and(h6.gt_f(0.0))) {
        return b.finish();
    }
    let xmid = w.lo() + rw.hi() / 2.0;
    b.place(4, xmid, h5.lo() / 2.0);
    b.place(5, xmid, h5.lo() + h6.lo() / 2.0);
    let top = h5 + h6;
    if top.ge_f(1.0).is_true() {
        return b.finish();
    }
    // r₆ spans past its strip; the top side is cut where the disk meets it.
    let above = ONE - h5 - h6 / 2.0;
    let dx = (cx.d.w(5) - above.sqr()).sqrt_pos();
    let pw = rw / 2.0 - dx;
    let ph = ONE - top;
    if pw.hi() <= 0.0 {
        return b.finish();
    }
    let left = Reg::new(w.lo(), top.lo(), pw, ph);
    let right = Reg::new(cx.lam.hi() - pw.hi(), top.lo(), pw, ph);
    let mut t = b.clone();
    if t.require(covers_rect(cx.d.w(6), pw, ph)) {
        t.place(6, right.center().0, right.center().1);
        recurse_reg(&mut t, cx, left, cx.d.pool_from(7));
        offer!(alts, t.finish());
    }
    if let Some(x) = either_order(cx, &mut alts, &b, &cx.d.pool_from(6), left, right) {
        return x;
    }
    alts.done()
}

/// Column of `r₃, r₄, r₅`; `r₁` on top and `r₂` at the bottom of the rest, or
/// both covering a full-height block followed by a column of `r₆, r₇`.
fn seven_ld3(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb7ld3");
    let mut base = Build::new("sb7ld3");
    let col = band(&weights(cx, &[2, 3, 4]), ONE);
    if !base.require(col.ok) {
        return base.finish();
    }
    place_col(&mut base, &[2, 3, 4], 0.0, 0.0, &col);
    let w = Interval::point(col.thickness);
    let rw = cx.lam - w;
    let (w1, w2) = (cx.d.w(0), cx.d.w(1));
    let (h1, h2) = (chord(w1, rw), chord(w2, rw));
    if h1.lo() > 0.0 && h2.lo() > 0.0 {
        let mut b = base.clone();
        let xmid = col.thickness + rw.hi() / 2.0;
        b.place(0, xmid, 1.0 - h1.lo() / 2.0);
        b.place(1, xmid, h2.lo() / 2.0);
        b.recurse(cx, col.thickness, h2.lo(), rw, ONE - h1 - h2, cx.d.pool_from(5));
        offer!(alts, b.finish());
    }
    let reach = |x: f64| {
        let xi = Interval::point(x);
        (chord(w1, xi) + chord(w2, xi)).ge_f(1.0).is_true()
    };
    let cap = rw.lo().min(2.0 * w2.lo().max(0.0).sqrt());
    if let Some(x) = bisect_max(cap * 1e-9, cap, reach) {
        let mut b = base.clone();
        let xi = Interval::point(x);
        let c1 = chord(w1, xi);
        b.place(0, col.thickness + x / 2.0, 1.0 - c1.lo() / 2.0);
        b.place(1, col.thickness + x / 2.0, (1.0 - c1.lo()) / 2.0);
        let col67 = band(&weights(cx, &[5, 6]), ONE);
        if b.require(col67.ok) {
            place_col(&mut b, &[5, 6], col.thickness + x, 0.0, &col67);
            let used = w + xi + Interval::point(col67.thickness);
            b.recurse(cx, used.lo(), 0.0, cx.lam - used, ONE, cx.d.pool_from(7));
            offer!(alts, b.finish());
        }
    }
    alts.done()
}

/// Three disks in a full-length top row; the widest right block that disks
/// eight onwards can cover; a pair across the bottom of the left block and
/// the last pair on what remains.
fn seven_ld4(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb7ld4");
    let tail = cx.d.pool_from(7);
    let (tw, tmax) = (tail.weight(cx.d), tail.max_weight(cx.d));
    for a in 0..7 {
        for bi in a + 1..7 {
            for c in bi + 1..7 {
                let top = [a, bi, c];
                let row = band(&weights(cx, &top), cx.lam);
                if !row.ok.is_true() {
                    continue;
                }
                let h = Interval::point(row.thickness);
                let hh = ONE - h;
                if hh.hi() <= 0.0 {
                    let mut b = Build::new("sb7ld4");
                    place_row(&mut b, &top, 0.0, 1.0 - row.thickness, &row);
                    offer!(alts, b.finish());
                    continue;
                }
                let ok = |x: f64| recursion::check(Interval::point(x), hh, tw, tmax, cx.exact(), false).verdict.is_true();
                let aw = bisect_max(0.0, cx.lam.lo(), ok).unwrap_or(0.0);
                let left = cx.lam - Interval::point(aw);
                let others: Vec<usize> = (0..7).filter(|i| !top.contains(i)).collect();
                for p in 0..4 {
                    for q in p + 1..4 {
                        let pair = [others[p], others[q]];
                        let last: Vec<usize> = others.iter().copied().filter(|i| !pair.contains(i)).collect();
                        let bottom = band(&weights(cx, &pair), left);
                        if !bottom.ok.is_true() {
                            continue;
                        }
                        let rem_h = hh - Interval::point(bottom.thickness);
                        let mut b = Build::new("sb7ld4");
                        place_row(&mut b, &top, 0.0, 1.0 - row.thickness, &row);
                        place_row(&mut b, &pair, 0.0, 0.0, &bottom);
                        if rem_h.hi() > 0.0 {
                            let horiz = band(&weights(cx, &last), left);
                            let vert = band(&weights(cx, &last), rem_h);
                            if horiz.ok.is_true() && Interval::point(horiz.thickness).ge(rem_h).is_true() {
                                place_row(&mut b, &last, 0.0, bottom.thickness, &horiz);
                            } else if vert.ok.is_true() && Interval::point(vert.thickness).ge(left).is_true() {
                                place_col(&mut b, &last, 0.0, bottom.thickness, &vert);
                            } else {
                                continue;
                            }
                        }
                        if aw > 0.0 {
                            b.recurse(cx, cx.lam.hi() - aw, 0.0, Interval::point(aw), hh, tail.clone());
                        } else {
                            b.require(Ternary::from_bool(tail.is_empty(cx.d)));
                        }
                        offer!(alts, b.finish());
                    }
                }
            }
        }
    }
    alts.done()
}

/// `r₂` in the corner with `r₁` above it; strips of `r₃, r₄` and `r₅, r₆`
/// at the bottom right; the regions above are covered recursively.
fn seven_ld5(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb7ld5");
    let mut b = Build::new("sb7ld5");
    let s2 = inscribed_side(cx.d.w(1));
    let h1 = chord(cx.d.w(0), s2);
    let (wc, col_top) = if (s2 + h1).ge_f(1.0).is_true() {
        b.place(1, s2.lo() / 2.0, s2.lo() / 2.0);
        b.place(0, s2.lo() / 2.0, 1.0 - h1.lo() / 2.0);
        (s2, ONE)
    } else {
        let col = band(&weights(cx, &[0, 1]), ONE);
        if col.ok.is_true() && col.thickness > s2.lo() {
            place_col(&mut b, &[0, 1], 0.0, 0.0, &col);
            (Interval::point(col.thickness), ONE)
        } else {
            b.place(1, s2.lo() / 2.0, s2.lo() / 2.0);
            b.place(0, s2.lo() / 2.0, s2.lo() + h1.lo() / 2.0);
            (s2, s2 + h1)
        }
    };
    let rw = cx.lam - wc;
    let b34 = band(&weights(cx, &[2, 3]), rw);
    let b56 = band(&weights(cx, &[4, 5]), rw);
    if !b.require(b34.ok.and(b56.ok)) {
        return b.finish();
    }
    place_row(&mut b, &[2, 3], wc.lo(), 0.0, &b34);
    place_row(&mut b, &[4, 5], wc.lo(), b34.thickness, &b56);
    let strips = Interval::point(b34.thickness) + Interval::point(b56.thickness);
    let a = Reg::new(wc.lo(), strips.lo(), rw, ONE - strips);
    let upper = ONE - col_top;
    if upper.hi() <= 0.0 {
        recurse_reg(&mut b, cx, a, cx.d.pool_from(6));
        return b.finish();
    }
    let t7 = chord(cx.d.w(6), upper);
    let mut pool = cx.d.pool_from(6);
    let mut reg_b = Reg::new(0.0, col_top.lo(), wc, upper);
    let e = coeff(cx);
    if t7.lo() > 0.0 && (e * t7 * upper).ge(cx.d.w(6)).is_true() {
        b.place(6, t7.lo() / 2.0, col_top.lo() + upper.hi() / 2.0);
        reg_b = Reg::new(t7.lo(), col_top.lo(), wc - t7, upper);
        pool = cx.d.pool_from(7);
    }
    if is_empty(&reg_b) {
        recurse_reg(&mut b, cx, a, pool);
        return b.finish();
    }
    if let Some(x) = either_order(cx, &mut alts, &b, &pool, a, reg_b) {
        return x;
    }
    alts.done()
}

/// `r₁, r₂` across the bottom and `r₆, r₅, r₇` above them; `r₄`, `r₃` at the
/// sides of the rest.
fn seven_ld6(cx: &Cx) -> Attempt {
    let mut b = Build::new("sb7ld6");
    let b12 = band(&weights(cx, &[0, 1]), cx.lam);
    let b567 = band(&weights(cx, &[5, 4, 6]), cx.lam);
    if !b.require(b12.ok.and(b567.ok)) {
        return b.finish();
    }
    place_row(&mut b, &[0, 1], 0.0, 0.0, &b12);
    place_row(&mut b, &[5, 4, 6], 0.0, b12.thickness, &b567);
    let low = Interval::point(b12.thickness) + Interval::point(b567.thickness);
    let hh = ONE - low;
    if hh.hi() <= 0.0 {
        return b.finish();
    }
    let c4 = chord(cx.d.w(3), hh);
    let c3 = chord(cx.d.w(2), hh);
    let ymid = (low.lo() + 1.0) / 2.0;
    b.place(3, c4.lo() / 2.0, ymid);
    b.place(2, cx.lam.hi() - c3.lo() / 2.0, ymid);
    b.recurse(cx, c4.lo(), low.lo(), cx.lam - c3 - c4, hh, cx.d.pool_from(7));
    b.finish()
}

/// `r₂` in the corner, `r₁` beside it, `r₄, r₃` on top at the same width;
/// the T-shaped rest is split into a right strip and a middle strip, with
/// `r₅` to `r₇` cutting the middle strip when recursion fails.
fn seven_ld7(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb7ld7");
    let mut b = Build::new("sb7ld7");
    let s2 = inscribed_side(cx.d.w(1));
    let c1 = chord(cx.d.w(0), s2);
    if !b.require(c1.gt_f(0.0)) {
        return b.finish();
    }
    b.place(1, s2.lo() / 2.0, s2.lo() / 2.0);
    b.place(0, s2.lo() + c1.lo() / 2.0, s2.lo() / 2.0);
    let w12 = s2 + c1;
    let top = band(&weights(cx, &[3, 2]), w12);
    if !b.require(top.ok) {
        return b.finish();
    }
    place_row(&mut b, &[3, 2], 0.0, 1.0 - top.thickness, &top);
    let a = Reg::new(w12.lo(), 0.0, cx.lam - w12, ONE);
    let mut mid = Reg::new(0.0, s2.lo(), w12, ONE - s2 - Interval::point(top.thickness));
    for i in 4..=7 {
        let pool = cx.d.pool_from(i);
        if is_empty(&mid) {
            recurse_reg(&mut b, cx, a, pool);
            offer!(alts, b.finish());
            break;
        }
        offer!(alts, two_regions(cx, b.clone(), &pool, a, mid));
        offer!(alts, two_regions(cx, b.clone(), &pool, mid, a));
        if i == 7 {
            break;
        }
        match cut(&mut b, cx, i, mid) {
            Some(r) => mid = r,
            None => break,
        }
    }
    alts.done()
}

/// `r₂` to `r₅` across the top; `r₁` below them at the left with `r₆` under
/// it; the regions right of and under `r₁` are covered recursively.
fn seven_ld8(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "sb7ld8");
    let mut b = Build::new("sb7ld8");
    let row = band(&weights(cx, &[1, 2, 3, 4]), cx.lam);
    if !b.require(row.ok) {
        return b.finish();
    }
    place_row(&mut b, &[1, 2, 3, 4], 0.0, 1.0 - row.thickness, &row);
    let hh = ONE - Interval::point(row.thickness);
    if hh.hi() <= 0.0 {
        return b.finish();
    }
    let s1 = inscribed_side(cx.d.w(0));
    if s1.ge(hh).is_true() {
        let c1 = chord(cx.d.w(0), hh);
        b.place(0, c1.lo() / 2.0, hh.hi() / 2.0);
        b.recurse(cx, c1.lo(), 0.0, cx.lam - c1, hh, cx.d.pool_from(5));
        return b.finish();
    }
    let below = hh - s1;
    b.place(0, s1.lo() / 2.0, hh.hi() - s1.lo() / 2.0);
    let c6 = chord(cx.d.w(5), below);
    b.place(5, c6.lo() / 2.0, below.hi() / 2.0);
    let a = Reg::new(s1.lo(), 0.0, cx.lam - s1, hh);
    let under = Reg::new(c6.lo(), 0.0, s1 - c6, below);
    if is_empty(&under) {
        recurse_reg(&mut b, cx, a, cx.d.pool_from(6));
        return b.finish();
    }
    if let Some(x) = either_order(cx, &mut alts, &b, &cx.d.pool_from(6), a, under) {
        return x;
    }
    if b.require(covers_rect(cx.d.w(6), under.w, under.h)) {
        let (x, y) = under.center();
        b.place(6, x, y);
        recurse_reg(&mut b, cx, a, cx.d.pool_from(7));
        offer!(alts, b.finish());
    }
    alts.done()
}

type Routine = (&'static str, fn(&Cx) -> Attempt);

/// Routines in the order they are tried.
pub fn cascade() -> &'static [Routine] {
    &[
        ("large_skew", large_skew),
        ("eurs1", eurs1),
        ("eurs2", eurs2),
        ("wb1", wb1),
        ("bas1", bas1),
        ("r1c", r1c),
        ("r12oc", r12oc),
        ("sb3ld1", three_ld1),
        ("sb3ld2", three_ld2),
        ("sb4ld1", four_ld1),
        ("sb4ld2", four_ld2),
        ("sb4ld3", four_ld3),
        ("sb5ld1", five_ld1),
        ("sb5ld2", five_ld2),
        ("sb6ld1", six_ld1),
        ("sb6ld2", six_ld2),
        ("sb6ld3", six_ld3),
        ("sb7ld1", seven_ld1),
        ("sb7ld2", seven_ld2),
        ("sb7ld3", seven_ld3),
        ("sb7ld4", seven_ld4),
        ("sb7ld5", seven_ld5),
        ("sb7ld6", seven_ld6),
        ("sb7ld7", seven_ld7),
        ("sb7ld8", seven_ld8),
    ]
}

/// Runs the catalog, returning the first accepted attempt.
pub fn run(cx: &Cx) -> Attempt {
    let mut alts = Alts::new(cx, "weight_bounded");
    for &(name, f) in cascade() {
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

    fn cx_for(lam: f64, d: &DiskProfile) -> Cx<'_> {
        Cx { lam: Interval::point(lam), d, tolerant: false }
    }

    #[test]
    fn large_skew_peels_a_proportional_strip() {
        let d = DiskProfile::concrete(&vec![0.1; 30]);
        let a = large_skew(&cx_for(4.0, &d));
        assert!(a.verdict.is_true(), "{a:?}");
        assert_eq!(a.subs.len(), 2);
    }

    #[test]
    fn balanced_split_of_equal_disks() {
        let d = DiskProfile::concrete(&vec![0.05; 30]);
        let a = eurs1(&cx_for(1.5 / 0.61, &d));
        assert!(a.verdict.is_true(), "{a:?}");
    }

    #[test]
    fn pairings_of_four_are_three() {
        assert_eq!(pairings(&[0, 1, 2, 3]).len(), 3);
        assert_eq!(pairings(&[0, 1, 2, 3, 4, 5]).len(), 15);
    }

    #[test]
    fn wall_criterion_rejects_large_seventh_disk() {
        let mut w = vec![0.14f64.powi(2); 6];
        w.push(0.155f64.powi(2));
        let d = DiskProfile::symbolic(w.iter().map(|&x| Interval::new(x, x)).collect(), Interval::point(1.0));
        let t = wb1_criterion(&cx_for(1.5, &d));
        assert!(!t.is_true());
    }
}
