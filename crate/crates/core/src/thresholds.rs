//! Critical weights, covering coefficients and the constants derived from them.
//!
//! Everything is expressed in weights (area divided by pi). Each function has
//! a real-valued form using nearest rounding and an `_iv` twin returning a
//! sound enclosure.

use std::sync::OnceLock;

use thiserror::Error;

use crate::interval::Interval;

/// Covering coefficient guaranteed for radius-bounded disk sets.
pub const E_SB: f64 = 0.61;
/// Largest radius, relative to the shorter side, for the radius-bounded regime.
pub const R_BOUND_SB: f64 = 0.375;
/// Skew above which the radius-bounded regime peels strips off the long side.
pub const SB_LARGE_SKEW: f64 = 2.5;

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum ThresholdError {
    #[error("skew {0} is below 1")]
    SkewBelowOne(f64),
    #[error("size bound {0} is below the smallest admissible value")]
    SigmaTooSmall(f64),
    #[error("coefficient {0} is below 195/256")]
    CoefficientTooSmall(f64),
    #[error("coefficient {0} must exceed 1/2")]
    CoefficientNotAboveHalf(f64),
}

/// Which closed form attains the critical weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Three equal disks are the worst case.
    ThreeEqual,
    /// A circumcircle-sized disk plus a disk of weight 1/4 is the worst case.
    TwoDisk,
}

/// The named constants, evaluated once from their closed forms.
#[derive(Debug, Clone, Copy)]
pub struct CriticalConstants {
    /// Skew where the two critical-weight branches meet.
    pub lambda2: f64,
    /// Skew above `√2` where the critical coefficient returns to 195/256.
    pub lambda_bar: f64,
    /// Smallest admissible size bound for the size-bounded regime.
    pub sigma_hat: f64,
    pub e_sb: f64,
    pub r_bound_sb: f64,
    /// Largest-disk cutoff between split cover and the large-disk routine.
    pub r_bar: f64,
}

/// Interval enclosures of the same constants.
#[derive(Debug, Clone, Copy)]
pub struct CriticalConstantsIv {
    pub lambda2: Interval,
    pub lambda_bar: Interval,
    pub sigma_hat: Interval,
    pub e_sb: Interval,
    pub r_bound_sb: Interval,
    pub r_bar: Interval,
    /// 195/256 as an enclosure (exact in binary, kept as an interval for uniformity).
    pub w_star_one: Interval,
    pub pi: Interval,
}

impl CriticalConstants {
    pub fn get() -> &'static CriticalConstants {
        static C: OnceLock<CriticalConstants> = OnceLock::new();
        C.get_or_init(|| {
            let lambda2 = (7f64.sqrt() / 2.0 - 0.25).sqrt();
            let s5257 = 5257f64.sqrt();
            let lambda_bar = (195.0 + s5257) / 128.0;
            let sigma_hat = 195.0 * s5257 / 16384.0;
            let r_bar = (195.0 * lambda_bar / 128.0 - 2.75).sqrt();
            CriticalConstants { lambda2, lambda_bar, sigma_hat, e_sb: E_SB, r_bound_sb: R_BOUND_SB, r_bar }
        })
    }
}

impl CriticalConstantsIv {
    pub fn get() -> &'static CriticalConstantsIv {
        static C: OnceLock<CriticalConstantsIv> = OnceLock::new();
        C.get_or_init(|| {
            let i = Interval::point;
            let lambda2 = (i(7.0).sqrt() / 2.0 - 0.25).sqrt();
            let s5257 = i(5257.0).sqrt();
            let lambda_bar = (195.0 + s5257) / 128.0;
            let sigma_hat = 195.0 * s5257 / 16384.0;
            let r_bar = (195.0 * lambda_bar / 128.0 - 2.75).sqrt();
            let pi = Interval::new(std::f64::consts::PI, std::f64::consts::PI.next_up());
            CriticalConstantsIv {
                lambda2,
                lambda_bar,
                sigma_hat,
                e_sb: Interval::ratio(61.0, 100.0),
                r_bound_sb: i(R_BOUND_SB),
                r_bar,
                w_star_one: Interval::ratio(195.0, 256.0),
                pi,
            }
        })
    }
}

/// Weight of three equal worst-case disks: `3(λ²/16 + 5/32 + 9/(256λ²))`.
pub fn three_equal_weight(lambda: f64) -> f64 {
    3.0 * three_equal_radius_sq(lambda)
}

/// Squared radius of each of the three equal worst-case disks.
pub fn three_equal_radius_sq(lambda: f64) -> f64 {
    let l2 = lambda * lambda;
    l2 / 16.0 + 5.0 / 32.0 + 9.0 / (256.0 * l2)
}

/// Weight of the two-disk worst case: `(λ²+2)/4`.
pub fn two_disk_weight(lambda: f64) -> f64 {
    (lambda * lambda + 2.0) / 4.0
}

pub fn three_equal_radius_sq_iv(lambda: Interval) -> Interval {
    let l2 = lambda.sqr();
    l2 / 16.0 + Interval::ratio(5.0, 32.0) + 9.0 / (256.0 * l2)
}

pub fn three_equal_weight_iv(lambda: Interval) -> Interval {
    3.0 * three_equal_radius_sq_iv(lambda)
}

pub fn two_disk_weight_iv(lambda: Interval) -> Interval {
    (lambda.sqr() + 2.0) / 4.0
}

fn check_skew(lambda: f64) -> Result<(), ThresholdError> {
    if lambda >= 1.0 {
        Ok(())
    } else {
        Err(ThresholdError::SkewBelowOne(lambda))
    }
}

/// Which branch the critical weight uses at `lambda`.
pub fn branch(lambda: f64) -> Branch {
    if lambda < CriticalConstants::get().lambda2 {
        Branch::ThreeEqual
    } else {
        Branch::TwoDisk
    }
}

/// Critical weight `W*(λ)` of a `λ × 1` rectangle.
pub fn critical_weight(lambda: f64) -> Result<f64, ThresholdError> {
    check_skew(lambda)?;
    Ok(match branch(lambda) {
        Branch::ThreeEqual => three_equal_weight(lambda),
        Branch::TwoDisk => two_disk_weight(lambda),
    })
}

/// Enclosure of `W*` over a skew interval, valid for `lambda.lo() >= 1`.
///
/// Uses the maximum of both closed forms, which equals `W*` for every skew
/// at least 1 and avoids branching on an interval that straddles `λ₂`.
pub fn critical_weight_iv(lambda: Interval) -> Interval {
    if !lambda.is_valid() || lambda.lo() < 1.0 {
        return Interval::INVALID;
    }
    three_equal_weight_iv(lambda).max(two_disk_weight_iv(lambda))
}

/// Critical covering coefficient `E*(λ) = W*(λ)/λ`.
pub fn critical_coefficient(lambda: f64) -> Result<f64, ThresholdError> {
    Ok(critical_weight(lambda)? / lambda)
}

pub fn critical_coefficient_iv(lambda: Interval) -> Interval {
    critical_weight_iv(lambda) / lambda
}

/// `E(σ) = ½√(√(σ²+1)+1)` for size bounds `σ ≥ σ̂`.
pub fn size_bounded_coefficient(sigma: f64) -> Result<f64, ThresholdError> {
    if !(sigma >= CriticalConstants::get().sigma_hat) {
        return Err(ThresholdError::SigmaTooSmall(sigma));
    }
    Ok(size_bounded_coefficient_unchecked(sigma))
}

fn size_bounded_coefficient_unchecked(sigma: f64) -> f64 {
    0.5 * ((sigma * sigma + 1.0).sqrt() + 1.0).sqrt()
}

pub fn size_bounded_coefficient_iv(sigma: Interval) -> Interval {
    0.5 * ((sigma.sqr() + 1.0).sqrt() + 1.0).sqrt()
}

/// `Λ(E) = 2E + √(4E²−2)`, the skew at or above `λ̄` whose critical coefficient is `E`.
pub fn lambda_of_coefficient(e: f64) -> Result<f64, ThresholdError> {
    if !(e >= 195.0 / 256.0) {
        return Err(ThresholdError::CoefficientTooSmall(e));
    }
    Ok(2.0 * e + (4.0 * e * e - 2.0).sqrt())
}

pub fn lambda_of_coefficient_iv(e: Interval) -> Interval {
    2.0 * e + (4.0 * e.sqr() - 2.0).sqrt()
}

/// `σ(E) = E(Λ(E) − 2/Λ(E))`, the inverse of [`size_bounded_coefficient`].
pub fn sigma_of_coefficient(e: f64) -> Result<f64, ThresholdError> {
    let l = lambda_of_coefficient(e)?;
    Ok(e * (l - 2.0 / l))
}

pub fn sigma_of_coefficient_iv(e: Interval) -> Interval {
    let l = lambda_of_coefficient_iv(e);
    e * (l - 2.0 / l)
}

/// Constants of the wall-building construction for coefficient `E`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WallConstants {
    /// Smallest admissible ratio `q_m / q_1` of the last to the first disk.
    pub s: f64,
    /// `L(ℓ)/ℓ`: the fraction of the wall length built before shrinking the width.
    pub l_factor: f64,
    /// `(1/√2)(1 − l_factor)`: bound on `q_1 / ℓ`.
    pub q1_bound_factor: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct WallConstantsIv {
    pub s: Interval,
    pub l_factor: Interval,
    pub q1_bound_factor: Interval,
}

pub fn wall_building_constants(e: f64) -> Result<WallConstants, ThresholdError> {
    if !(e > 0.5) {
        return Err(ThresholdError::CoefficientNotAboveHalf(e));
    }
    let s = (4.0 * e * e - 2.0 * e * (4.0 * e * e - 1.0).sqrt()).sqrt();
    let l_factor = 1.0 / (1.0 + (1.0 - 1.0 / (4.0 * e * e)).sqrt()).sqrt();
    let q1_bound_factor = (1.0 - l_factor) / std::f64::consts::SQRT_2;
    Ok(WallConstants { s, l_factor, q1_bound_factor })
}

pub fn wall_building_constants_iv(e: Interval) -> WallConstantsIv {
    let e2 = e.sqr();
    let s = (4.0 * e2 - 2.0 * e * (4.0 * e2 - 1.0).sqrt()).sqrt();
    let l_factor = 1.0 / (1.0 + (1.0 - 1.0 / (4.0 * e2)).sqrt()).sqrt();
    let q1_bound_factor = (1.0 - l_factor) / Interval::point(2.0).sqrt();
    WallConstantsIv { s, l_factor, q1_bound_factor }
}

/// Wall constants at the radius-bounded coefficient, computed once.
pub fn sb_wall_constants_iv() -> &'static WallConstantsIv {
    static C: OnceLock<WallConstantsIv> = OnceLock::new();
    C.get_or_init(|| wall_building_constants_iv(CriticalConstantsIv::get().e_sb))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_in_documented_ranges() {
        let c = CriticalConstants::get();
        assert!((1.035796..=1.035798).contains(&c.lambda2));
        assert!((2.089884..=2.089885).contains(&c.lambda_bar));
        assert!((0.86293..=0.86295).contains(&c.sigma_hat));
        assert!((c.r_bar - 0.6586).abs() < 1e-4);
    }

    #[test]
    fn critical_weight_examples() {
        assert_eq!(critical_weight(1.0).unwrap(), 195.0 / 256.0);
        assert!((critical_weight(2.0).unwrap() - 1.5).abs() < 1e-15);
        let l2 = CriticalConstants::get().lambda2;
        assert!((three_equal_weight(l2) - two_disk_weight(l2)).abs() < 1e-12);
        assert!(critical_weight(0.9).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let c = CriticalConstants::get();
        let r2 = std::f64::consts::SQRT_2;
        assert!((critical_coefficient(r2).unwrap() - 1.0 / r2).abs() < 1e-12);
        assert!((critical_coefficient(c.lambda_bar).unwrap() - 195.0 / 256.0).abs() < 1e-12);
        assert_eq!(critical_coefficient(1.0).unwrap(), 195.0 / 256.0);
    }

    #[test]
    fn size_bounded_examples() {
        let c = CriticalConstants::get();
        assert!((size_bounded_coefficient(c.sigma_hat).unwrap() - 195.0 / 256.0).abs() < 1e-12);
        let expect = 0.5 * (2f64.sqrt() + 1.0).sqrt();
        assert!((size_bounded_coefficient(1.0).unwrap() - expect).abs() < 1e-15);
        assert!((expect - 0.77689).abs() < 1e-5);
        assert!(size_bounded_coefficient(c.sigma_hat - 0.01).is_err());
    }

    #[test]
    fn inverse_examples() {
        let c = CriticalConstants::get();
        let w1 = 195.0 / 256.0;
        assert!((lambda_of_coefficient(w1).unwrap() - c.lambda_bar).abs() < 1e-10);
        assert!((sigma_of_coefficient(w1).unwrap() - c.sigma_hat).abs() < 1e-10);
        let l = lambda_of_coefficient(0.8).unwrap();
        assert!((critical_coefficient(l).unwrap() - 0.8).abs() < 1e-12);
        assert!(lambda_of_coefficient(0.7).is_err());
    }

    #[test]
    fn wall_constant_examples() {
        let w = wall_building_constants(0.61).unwrap();
        assert!((w.s - 0.7974).abs() < 5e-5);
        assert!((w.q1_bound_factor - 0.1433).abs() < 5e-5);
        assert!((1.0 - w.l_factor - 0.20263).abs() < 5e-5);
        assert!(wall_building_constants(0.5).is_err());
    }

    #[test]
    fn interval_twins_enclose_reals() {
        let c = CriticalConstants::get();
        let ci = CriticalConstantsIv::get();
        assert!(ci.lambda2.contains(c.lambda2) && ci.lambda2.width() < 1e-10);
        assert!(ci.lambda_bar.contains(c.lambda_bar));
        assert!(ci.sigma_hat.contains(c.sigma_hat));
        assert!(ci.r_bar.contains(c.r_bar));
        assert!(ci.e_sb.contains(0.61));
        for k in 0..200 {
            let l = 1.0 + k as f64 * 0.01;
            assert!(critical_weight_iv(Interval::point(l)).contains(critical_weight(l).unwrap()));
        }
        let w = wall_building_constants(0.61).unwrap();
        let wi = sb_wall_constants_iv();
        assert!(wi.s.contains(w.s) && wi.l_factor.contains(w.l_factor));
    }

    #[test]
    fn max_form_matches_branches() {
        for k in 0..1000 {
            let l = 1.0 + k as f64 * 0.004;
            let m = three_equal_weight(l).max(two_disk_weight(l));
            assert!((critical_weight(l).unwrap() - m).abs() < 1e-12);
        }
    }
}
