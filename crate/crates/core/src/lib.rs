//! Worst-case-optimal disk coverings of rectangles.
//!
//! Any set of disks whose total weight (sum of squared radii) reaches the
//! critical weight of a `λ × 1` rectangle can cover it. This crate computes
//! those thresholds, constructs explicit coverings by a recursive cascade of
//! placement routines, verifies coverings independently, and re-runs a small
//! branch-and-prune interval prover over the routines' success criteria.

pub mod geometry;
pub mod interval;
pub mod prover;
pub mod solver;
pub mod splitting;
pub mod thresholds;
