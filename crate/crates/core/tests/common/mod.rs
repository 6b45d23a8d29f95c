//! Random instance generation shared by the integration tests.
#![allow(dead_code)]

use critcover::geometry::DiskSet;
use critcover::thresholds::critical_weight;
use rand::Rng;

/// Shapes of radius distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mix {
    Uniform,
    Equal,
    PowerLaw,
    OneLarge,
    TwoLarge,
    Bimodal,
    Geometric,
}

pub const MIXES: [Mix; 7] = [Mix::Uniform, Mix::Equal, Mix::PowerLaw, Mix::OneLarge, Mix::TwoLarge, Mix::Bimodal, Mix::Geometric];

#[derive(Debug, Clone)]
pub struct Instance {
    pub lambda: f64,
    pub disks: DiskSet,
    pub mix: Mix,
    pub spare: f64,
}

/// Raw (unscaled) radii of the given shape.
pub fn raw_radii<R: Rng>(rng: &mut R, mix: Mix, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| match mix {
            Mix::Uniform => rng.gen_range(0.01..1.0),
            Mix::Equal => 1.0,
            Mix::PowerLaw => rng.gen_range(0.01f64..1.0).powf(3.0),
            Mix::OneLarge => if i == 0 { 10.0 } else { rng.gen_range(0.1..1.0) },
            Mix::TwoLarge => if i < 2 { rng.gen_range(3.0..6.0) } else { rng.gen_range(0.1..1.0) },
            Mix::Bimodal => if rng.gen_bool(0.2) { rng.gen_range(2.0..3.0) } else { rng.gen_range(0.2..0.4) },
            Mix::Geometric => 0.8f64.powi(i as i32) * rng.gen_range(0.9..1.1),
        })
        .collect()
}

/// Scales `raw` so the total weight is `W*(λ)·(1 + spare)`.
pub fn scaled(raw: &[f64], lambda: f64, spare: f64) -> DiskSet {
    let w: f64 = raw.iter().map(|r| r * r).sum();
    let target = critical_weight(lambda).unwrap() * (1.0 + spare);
    let f = (target / w).sqrt();
    DiskSet::new(raw.iter().map(|r| r * f).collect()).unwrap()
}

/// λ ∈ [1, 3], 2–500 disks (log-uniform count), spare weight in [0, 0.2].
pub fn instance<R: Rng>(rng: &mut R) -> Instance {
    let lambda = rng.gen_range(1.0..3.0);
    let n = (2.0f64 * (250.0f64).powf(rng.gen_range(0.0..1.0))).round() as usize;
    let mix = MIXES[rng.gen_range(0..MIXES.len())];
    let spare = rng.gen_range(0.0..0.2);
    let raw = raw_radii(rng, mix, n.clamp(2, 500));
    Instance { lambda, disks: scaled(&raw, lambda, spare), mix, spare }
}

/// Instance for the radius-bounded regime on `λ × 1`: radii at most 0.375,
/// weight `0.61 λ (1 + spare)`.
pub fn sb_instance<R: Rng>(rng: &mut R, spare: Option<f64>) -> Instance {
    loop {
        let lambda = rng.gen_range(1.0..3.0);
        let n = (5.0f64 * (100.0f64).powf(rng.gen_range(0.0..1.0))).round() as usize;
        let mix = MIXES[rng.gen_range(0..MIXES.len())];
        let spare = spare.unwrap_or_else(|| rng.gen_range(0.0..0.2));
        let raw = raw_radii(rng, mix, n);
        let w: f64 = raw.iter().map(|r| r * r).sum();
        let f = (0.61 * lambda * (1.0 + spare) / w).sqrt();
        if raw.iter().all(|r| r * f <= 0.375) {
            let disks = DiskSet::new(raw.iter().map(|r| r * f).collect()).unwrap();
            return Instance { lambda, disks, mix, spare };
        }
    }
}
