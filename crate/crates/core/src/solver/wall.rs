//! Wall building: stacking disks of similar size into a column of fixed
//! length `ℓ` and variable width `b`, using at most `E·ℓ·b` weight.

use crate::thresholds::{wall_building_constants, WallConstants};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WallError {
    #[error("no disks given")]
    Empty,
    #[error("covering coefficient {0} is not above 1/2")]
    Coefficient(f64),
    #[error("largest radius {q1} exceeds the bound {bound} for this length")]
    TooLarge { q1: f64, bound: f64 },
    #[error("radius {q} drops below {floor}")]
    TooUneven { q: f64, floor: f64 },
    #[error("total weight {have} is below {need}")]
    TooLight { have: f64, need: f64 },
}

/// A built column, listed bottom to top.
#[derive(Debug, Clone, PartialEq)]
pub struct WallColumn {
    /// Common width of the rectangles covered by the disks.
    pub width: f64,
    /// Height of each disk's rectangle; their sum is at least `ℓ`.
    pub heights: Vec<f64>,
}

impl WallColumn {
    /// Number of disks actually used, always a prefix of the input.
    pub fn used(&self) -> usize {
        self.heights.len()
    }

    /// Vertical centres of the disks' rectangles.
    pub fn centers(&self) -> Vec<f64> {
        let mut at = 0.0;
        self.heights
            .iter()
            .map(|&h| {
                let c = at + h / 2.0;
                at += h;
                c
            })
            .collect()
    }
}

fn constants(e: f64) -> Result<WallConstants, WallError> {
    wall_building_constants(e).map_err(|_| WallError::Coefficient(e))
}

/// Checks the three preconditions of wall building on radii `q`
/// (non-increasing).
pub fn wall_conditions(q: &[f64], ell: f64, e: f64) -> Result<(), WallError> {
    let c = constants(e)?;
    let (&q1, &qm) = match (q.first(), q.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(WallError::Empty),
    };
    let bound = ell * c.q1_bound_factor;
    if q1 > bound {
        return Err(WallError::TooLarge { q1, bound });
    }
    if qm < q1 * c.s {
        return Err(WallError::TooUneven { q: qm, floor: q1 * c.s });
    }
    let have: f64 = q.iter().map(|r| r * r).sum();
    let need = std::f64::consts::SQRT_2 * q1 * e * c.l_factor * ell;
    if have < need {
        return Err(WallError::TooLight { have, need });
    }
    Ok(())
}

/// Length of the shortest prefix of `q` satisfying the wall conditions, if
/// one exists before the size ratio breaks.
pub fn find_wall_run(q: &[f64], ell: f64, e: f64) -> Option<usize> {
    let c = constants(e).ok()?;
    let q1 = *q.first()?;
    if q1 > ell * c.q1_bound_factor || q1 <= 0.0 {
        return None;
    }
    let need = std::f64::consts::SQRT_2 * q1 * e * c.l_factor * ell;
    let mut have = 0.0;
    for (m, &r) in q.iter().enumerate() {
        if r < q1 * c.s {
            return None;
        }
        have += r * r;
        if have >= need {
            return Some(m + 1);
        }
    }
    None
}

fn column_height(q: &[f64], b: f64) -> f64 {
    q.iter().map(|&r| (4.0 * r * r - b * b).max(0.0).sqrt()).sum()
}

/// Builds a column of length `ell` from radii `q` at coefficient `e`.
pub fn wall_build(q: &[f64], ell: f64, e: f64) -> Result<WallColumn, WallError> {
    wall_conditions(q, ell, e)?;
    let c = constants(e)?;
    let b0 = std::f64::consts::SQRT_2 * q[0];
    // Stack at full width until the partial length is reached.
    let target = c.l_factor * ell;
    let mut acc = 0.0;
    let mut used = q.len();
    for (i, &r) in q.iter().enumerate() {
        acc += (4.0 * r * r - b0 * b0).max(0.0).sqrt();
        if acc >= target {
            used = i + 1;
            break;
        }
    }
    let stack = &q[..used];
    let width = if column_height(stack, b0) >= ell {
        b0
    } else {
        let (mut lo, mut hi) = (0.0, b0);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if column_height(stack, mid) >= ell {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    let heights = stack.iter().map(|&r| (4.0 * r * r - width * width).max(0.0).sqrt()).collect();
    Ok(WallColumn { width, heights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_disk_square_case() {
        let q1 = 0.1;
        let ell = std::f64::consts::SQRT_2 * q1;
        // One disk alone is too light for condition (3) unless ℓ is tiny relative to it.
        let r = wall_conditions(&[q1], ell, 0.61);
        assert!(matches!(r, Err(WallError::TooLarge { .. })));
    }

    #[test]
    fn sixty_equal_disks_build_a_column() {
        let q = vec![0.14; 60];
        let col = wall_build(&q, 1.0, 0.61).unwrap();
        let used: f64 = q[..col.used()].iter().map(|r| r * r).sum();
        assert!(used <= 0.61 * col.width + 1e-12);
        assert!(col.heights.iter().sum::<f64>() >= 1.0 - 1e-12);
        assert!(col.width <= std::f64::consts::SQRT_2 * 0.14);
    }

    #[test]
    fn oversized_first_disk_is_rejected() {
        let q = vec![0.15; 60];
        assert!(matches!(wall_conditions(&q, 1.0, 0.61), Err(WallError::TooLarge { .. })));
    }

    proptest! {
        #[test]
        fn column_coefficient_at_most_e(q1 in 0.01f64..0.1433, ratio in 0.8f64..1.0, n in 5usize..400) {
            let q: Vec<f64> = (0..n).map(|i| q1 * (1.0 - (1.0 - ratio) * i as f64 / n as f64)).collect();
            if let Some(m) = find_wall_run(&q, 1.0, 0.61) {
                let col = wall_build(&q[..m], 1.0, 0.61).unwrap();
                let used: f64 = q[..col.used()].iter().map(|r| r * r).sum();
                prop_assert!(used <= 0.61 * col.width + 1e-12);
                prop_assert!(col.width <= std::f64::consts::SQRT_2 * q1 + 1e-15);
                prop_assert!(col.heights.iter().sum::<f64>() >= 1.0 - 1e-9);
            }
        }
    }
}
