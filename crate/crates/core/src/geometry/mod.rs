//! Disks, rectangles, placements and the coverage verifier.
//!
//! Coordinates have the origin at the bottom-left, x to the right and y up.

mod io;
mod verify;

pub use io::{placement_from_json, placement_to_json, placement_to_svg, PlacementDoc};
pub use verify::{verify_cover, verify_cover_with_slack, CoverageVerdict, VerifyError, DEFAULT_DEPTH};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("radius {value} at position {index} is not a positive finite number")]
    BadRadius { index: usize, value: f64 },
    #[error("rectangle {w} x {h} must have positive finite sides")]
    BadRect { w: f64, h: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }
}

/// A multiset of radii, sorted non-increasing, with its cached total weight.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskSet {
    radii: Vec<f64>,
    total_weight: f64,
}

impl DiskSet {
    pub fn new(mut radii: Vec<f64>) -> Result<DiskSet, GeometryError> {
        for (index, &value) in radii.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(GeometryError::BadRadius { index, value });
            }
        }
        radii.sort_by(|a, b| b.total_cmp(a));
        let total_weight = radii.iter().map(|r| r * r).sum();
        Ok(DiskSet { radii, total_weight })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    pub fn radius(&self, i: usize) -> f64 {
        self.radii[i]
    }

    pub fn weight(&self) -> f64 {
        self.total_weight
    }

    /// Same disks with every radius multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> DiskSet {
        DiskSet::new(self.radii.iter().map(|r| r * factor).collect()).expect("positive scale keeps radii valid")
    }
}

/// Axis-aligned rectangle given by its bottom-left corner and side lengths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectRegion {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl RectRegion {
    pub fn new(x: f64, y: f64, w: f64, h: f64) -> Result<RectRegion, GeometryError> {
        if !(w.is_finite() && h.is_finite() && w > 0.0 && h > 0.0 && x.is_finite() && y.is_finite()) {
            return Err(GeometryError::BadRect { w, h });
        }
        Ok(RectRegion { x, y, w, h })
    }

    /// The `λ × 1` rectangle at the origin.
    pub fn unit(lambda: f64) -> RectRegion {
        RectRegion { x: 0.0, y: 0.0, w: lambda, h: 1.0 }
    }

    pub fn skew(&self) -> f64 {
        self.w.max(self.h) / self.w.min(self.h)
    }

    pub fn short_side(&self) -> f64 {
        self.w.min(self.h)
    }

    pub fn long_side(&self) -> f64 {
        self.w.max(self.h)
    }

    pub fn area(&self) -> f64 {
        self.w * self.h
    }
}

/// Disk centers assigned to a target region. Indices refer to a [`DiskSet`].
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub region: RectRegion,
    pub items: Vec<(usize, Point)>,
}

impl Placement {
    pub fn new(region: RectRegion) -> Placement {
        Placement { region, items: Vec::new() }
    }
}

/// Widest rectangle of height `h` inscribed in a disk of radius `r`: `2√(r² − h²/4)`.
///
/// Returns `None` when `2r < h`.
pub fn strip_width_of_disk(r: f64, h: f64) -> Option<f64> {
    let d = r * r - h * h / 4.0;
    if d < 0.0 {
        None
    } else {
        Some(2.0 * d.sqrt())
    }
}

/// Side of the square inscribed in a disk of radius `r`.
pub fn inscribed_square_side(r: f64) -> f64 {
    std::f64::consts::SQRT_2 * r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn strip_width_examples() {
        let r = 65f64.sqrt() / 16.0;
        assert!((strip_width_of_disk(r, 1.0).unwrap() - 0.125).abs() < 1e-15);
        assert_eq!(strip_width_of_disk(0.5, 1.0), Some(0.0));
        assert_eq!(strip_width_of_disk(0.4, 1.0), None);
    }

    #[test]
    fn inscribed_square_examples() {
        assert!((inscribed_square_side(1.0) - 2f64.sqrt()).abs() < 1e-15);
        assert!((inscribed_square_side(0.375) - 0.5303300858899106).abs() < 1e-15);
        let r = 65f64.sqrt() / 16.0;
        assert!((inscribed_square_side(r) - 130f64.sqrt() / 16.0).abs() < 1e-15);
    }

    #[test]
    fn disk_set_sorts_and_weighs() {
        let d = DiskSet::new(vec![0.25, 1.0, 0.5]).unwrap();
        assert_eq!(d.radii(), &[1.0, 0.5, 0.25]);
        assert!((d.weight() - 1.3125).abs() < 1e-15);
        assert!(DiskSet::new(vec![0.0, 1.0]).is_err());
        assert!(DiskSet::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn rect_skew() {
        let r = RectRegion::new(0.0, 0.0, 1.0, 3.0).unwrap();
        assert_eq!(r.skew(), 3.0);
        assert!(RectRegion::new(0.0, 0.0, 0.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn strip_width_on_circle(r in 0.01f64..10.0, t in 0.0f64..1.0) {
            let h = 2.0 * r * t;
            let s = strip_width_of_disk(r, h).unwrap();
            prop_assert!(((s / 2.0).powi(2) + (h / 2.0).powi(2) - r * r).abs() < 1e-12 * (1.0 + r * r));
        }

        #[test]
        fn disk_set_weight_matches(rs in proptest::collection::vec(0.001f64..2.0, 1..50)) {
            let d = DiskSet::new(rs.clone()).unwrap();
            let w: f64 = rs.iter().map(|r| r * r).sum();
            prop_assert!((d.weight() - w).abs() <= 1e-12 * w);
            prop_assert!(d.radii().windows(2).all(|p| p[0] >= p[1]));
        }
    }
}
