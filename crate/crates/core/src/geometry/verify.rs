//! Adaptive quadtree check that a placement covers its region.
//!
//! A cell is accepted once a single disk definitely contains it, judged by the
//! farthest point of the cell from the disk center in interval arithmetic. A
//! cell whose center is definitely outside every disk is a witness of
//! non-coverage. Anything else is subdivided until the depth limit.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use super::{DiskSet, Placement, Point};
use crate::interval::{Interval, Ternary};

pub const DEFAULT_DEPTH: u32 = 40;

/// Hard cap on examined cells; exceeding it is reported as inconclusive.
const CELL_BUDGET: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CoverageVerdict {
    pub covered: bool,
    pub witness: Option<Point>,
    pub cells_examined: u64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("disk index {index} out of range for {len} disks")]
    BadIndex { index: usize, len: usize },
    #[error("disk index {0} placed more than once")]
    DuplicateIndex(usize),
    #[error("inconclusive after {cells} cells (depth limit {depth})")]
    Inconclusive { cells: u64, depth: u32 },
}

#[derive(Clone, Copy)]
struct Disk {
    cx: f64,
    cy: f64,
    r2: Interval,
}

#[derive(Clone, Copy)]
struct Cell {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

enum Outcome {
    Covered,
    Witness(Point),
    Inconclusive,
}

/// Checks that `p` covers `p.region` using the radii of `disks`.
pub fn verify_cover(p: &Placement, disks: &DiskSet, depth_limit: u32) -> Result<CoverageVerdict, VerifyError> {
    verify_cover_with_slack(p, disks, depth_limit, 0.0)
}

/// As [`verify_cover`], with every radius enlarged by `slack`.
///
/// Only meant for tests of tight configurations, where disks touch with zero
/// margin and strict containment can never be certified.
pub fn verify_cover_with_slack(
    p: &Placement,
    disks: &DiskSet,
    depth_limit: u32,
    slack: f64,
) -> Result<CoverageVerdict, VerifyError> {
    let mut seen = vec![false; disks.len()];
    let mut list = Vec::with_capacity(p.items.len());
    for &(index, c) in &p.items {
        if index >= disks.len() {
            return Err(VerifyError::BadIndex { index, len: disks.len() });
        }
        if seen[index] {
            return Err(VerifyError::DuplicateIndex(index));
        }
        seen[index] = true;
        let r = Interval::point(disks.radius(index)) + slack;
        list.push(Disk { cx: c.x, cy: c.y, r2: r.sqr() });
    }
    let reg = p.region;
    // Start from a grid of roughly square cells so elongated regions do not
    // produce needle-shaped quadtree cells.
    let (nx, ny) = if reg.w >= reg.h {
        (((reg.w / reg.h).ceil() as usize).clamp(1, 64), 1)
    } else {
        (1, ((reg.h / reg.w).ceil() as usize).clamp(1, 64))
    };
    let xs: Vec<f64> = (0..=nx).map(|i| if i == nx { reg.x + reg.w } else { reg.x + reg.w * i as f64 / nx as f64 }).collect();
    let ys: Vec<f64> = (0..=ny).map(|j| if j == ny { reg.y + reg.h } else { reg.y + reg.h * j as f64 / ny as f64 }).collect();
    let mut cells = Vec::with_capacity(nx * ny);
    for i in 0..nx {
        for j in 0..ny {
            cells.push(Cell { x0: xs[i], x1: xs[i + 1], y0: ys[j], y1: ys[j + 1] });
        }
    }
    let counter = AtomicU64::new(0);
    let all: Vec<usize> = (0..list.len()).collect();
    let outcomes: Vec<Outcome> = cells
        .par_iter()
        .map(|&c| visit(c, &all, &list, 0, depth_limit, &counter))
        .collect();
    let cells_examined = counter.load(Ordering::Relaxed);
    let mut inconclusive = false;
    for o in outcomes {
        match o {
            Outcome::Witness(w) => {
                return Ok(CoverageVerdict { covered: false, witness: Some(w), cells_examined });
            }
            Outcome::Inconclusive => inconclusive = true,
            Outcome::Covered => {}
        }
    }
    if inconclusive {
        Err(VerifyError::Inconclusive { cells: cells_examined, depth: depth_limit })
    } else {
        Ok(CoverageVerdict { covered: true, witness: None, cells_examined })
    }
}

#[inline]
fn far_sq(lo: f64, hi: f64, c: f64) -> Interval {
    let a = (Interval::point(lo) - c).abs();
    let b = (Interval::point(hi) - c).abs();
    a.max(b).sqr()
}

#[inline]
fn near_sq(lo: f64, hi: f64, c: f64) -> Interval {
    if c < lo {
        (Interval::point(lo) - c).sqr()
    } else if c > hi {
        (Interval::point(c) - hi).sqr()
    } else {
        Interval::ZERO
    }
}

fn visit(cell: Cell, cands: &[usize], disks: &[Disk], depth: u32, limit: u32, counter: &AtomicU64) -> Outcome {
    if counter.fetch_add(1, Ordering::Relaxed) > CELL_BUDGET {
        return Outcome::Inconclusive;
    }
    let mut next = Vec::with_capacity(cands.len());
    for &i in cands {
        let d = disks[i];
        let far = far_sq(cell.x0, cell.x1, d.cx) + far_sq(cell.y0, cell.y1, d.cy);
        if far.le(d.r2) == Ternary::True {
            return Outcome::Covered;
        }
        let near = near_sq(cell.x0, cell.x1, d.cx) + near_sq(cell.y0, cell.y1, d.cy);
        if near.gt(d.r2) != Ternary::True {
            next.push(i);
        }
    }
    let xm = 0.5 * (cell.x0 + cell.x1);
    let ym = 0.5 * (cell.y0 + cell.y1);
    let outside = next.iter().all(|&i| {
        let d = disks[i];
        let dist = (Interval::point(xm) - d.cx).sqr() + (Interval::point(ym) - d.cy).sqr();
        dist.gt(d.r2) == Ternary::True
    });
    if outside {
        return Outcome::Witness(Point::new(xm, ym));
    }
    if depth >= limit || !(cell.x0 < xm && xm < cell.x1 && cell.y0 < ym && ym < cell.y1) {
        return Outcome::Inconclusive;
    }
    let kids = [
        Cell { x0: cell.x0, x1: xm, y0: cell.y0, y1: ym },
        Cell { x0: xm, x1: cell.x1, y0: cell.y0, y1: ym },
        Cell { x0: cell.x0, x1: xm, y0: ym, y1: cell.y1 },
        Cell { x0: xm, x1: cell.x1, y0: ym, y1: cell.y1 },
    ];
    let mut inconclusive = false;
    for k in kids {
        match visit(k, &next, disks, depth + 1, limit, counter) {
            Outcome::Witness(w) => return Outcome::Witness(w),
            Outcome::Inconclusive => inconclusive = true,
            Outcome::Covered => {}
        }
    }
    if inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Covered
    }
}
