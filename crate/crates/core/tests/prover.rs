use critcover::interval::Interval;
use critcover::prover::{merge_critical, prove, BoxStatus, CriticalReport, Hypercuboid, ProverConfig, ProverMode};
use proptest::prelude::*;

fn volumes_non_increasing(r: &CriticalReport) -> bool {
    r.history.windows(2).all(|w| w[1].critical_volume <= w[0].critical_volume)
}

#[test]
fn weight_bounded_mode_shrinks_or_empties() {
    let cfg = ProverConfig {
        mode: ProverMode::WeightBounded,
        k: 7,
        resolution: "2x3,2x2".parse().unwrap(),
        generations: 2,
        keep_resolved: false,
    };
    let r = prove(Interval::new(1.0, 1.05), &cfg).unwrap();
    assert!(r.boxes.is_empty() || volumes_non_increasing(&r), "{:?}", r.history);
    assert!(r.history[0].resolved_by.contains_key("wb1"));
}

#[test]
fn two_disk_region_stays_critical_and_shrinks() {
    let cfg = ProverConfig { k: 2, resolution: "4x16,2x4".parse().unwrap(), generations: 3, ..ProverConfig::default() };
    let r = prove(Interval::new(1.5, 1.52), &cfg).unwrap();
    assert!(volumes_non_increasing(&r));
    for lam in [1.503, 1.511, 1.519] {
        assert!(r.boxes.iter().any(|b| b.contains(lam, &[(lam * lam + 1.0) / 4.0, 0.25])), "λ = {lam}");
    }
}

#[test]
fn report_round_trips_through_json() {
    let cfg = ProverConfig { k: 2, resolution: "2x4,2x2".parse().unwrap(), generations: 2, ..ProverConfig::default() };
    let r = prove(Interval::new(1.0, 1.01), &cfg).unwrap();
    let back: CriticalReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert!(r.boxes.iter().all(|b| b.status == BoxStatus::Critical));
}

fn boxes() -> impl Strategy<Value = Vec<Hypercuboid>> {
    let one = (0usize..3, 0.0f64..0.5, 0.0f64..0.05, 0.0f64..0.3, 0.0f64..0.05).prop_map(|(slice, a, da, b, db)| {
        let lam = Interval::new(1.0 + slice as f64 * 0.01, 1.01 + slice as f64 * 0.01);
        let mut h = Hypercuboid::new(lam, vec![Interval::new(a, a + da), Interval::new(b, b + db)]);
        h.status = BoxStatus::Critical;
        h
    });
    prop::collection::vec(one, 0..30)
}

proptest! {
    #[test]
    fn merged_boxes_enclose_inputs(input in boxes()) {
        let merged = merge_critical(&input);
        prop_assert!(merged.len() <= input.len());
        for b in &input {
            prop_assert!(merged.iter().any(|m| m.lambda_box == b.lambda_box
                && b.weight_boxes.iter().zip(&m.weight_boxes).all(|(x, y)| x.is_subset_of(*y))));
        }
    }

    #[test]
    fn merged_first_axes_are_disjoint_per_slice(input in boxes()) {
        let merged = merge_critical(&input);
        for (i, a) in merged.iter().enumerate() {
            for b in &merged[i + 1..] {
                if a.lambda_box == b.lambda_box {
                    prop_assert!(!a.weight_boxes[0].overlaps(b.weight_boxes[0]));
                }
            }
        }
    }
}
