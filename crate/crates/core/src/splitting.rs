//! Greedy splitting of disk multisets into two groups of nearly equal weight.
//!
//! Disks are taken in non-increasing order and each goes to the currently
//! lighter group, ties to group A. The weight gap is then at most the weight
//! of the smallest disk in the heavier group.

use thiserror::Error;

use crate::geometry::DiskSet;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SplitError {
    #[error("greedy splitting needs at least two disks, got {0}")]
    TooFewDisks(usize),
    #[error("seed partition supports at most 7 disks, got {0}")]
    TooManySeeds(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitResult {
    pub group_a: DiskSet,
    pub group_b: DiskSet,
    pub weight_gap: f64,
}

/// Index-level split of a weight list.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IndexSplit {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub weight_a: f64,
    pub weight_b: f64,
}

impl IndexSplit {
    pub fn gap(&self) -> f64 {
        (self.weight_a - self.weight_b).abs()
    }
}

/// Continues greedy assignment of `rest` (indices into `weights`, already in
/// non-increasing weight order) on top of the given partial split.
pub fn greedy_extend(weights: &[f64], mut split: IndexSplit, rest: &[usize]) -> IndexSplit {
    for &i in rest {
        if split.weight_a <= split.weight_b {
            split.a.push(i);
            split.weight_a += weights[i];
        } else {
            split.b.push(i);
            split.weight_b += weights[i];
        }
    }
    split
}

/// Greedy split of indices `0..weights.len()`, which must be sorted non-increasing.
pub fn greedy_split_indices(weights: &[f64]) -> IndexSplit {
    let order: Vec<usize> = (0..weights.len()).collect();
    greedy_extend(weights, IndexSplit::default(), &order)
}

/// Partition of up to seven weights minimizing the weight difference.
///
/// Ties are broken by the first mask in enumeration order with element 0 in A.
pub fn min_gap_partition(weights: &[f64]) -> Result<IndexSplit, SplitError> {
    let n = weights.len();
    if n > 7 {
        return Err(SplitError::TooManySeeds(n));
    }
    if n == 0 {
        return Ok(IndexSplit::default());
    }
    let total: f64 = weights.iter().sum();
    let mut best = (f64::INFINITY, 1u32);
    for mask in (1u32..(1 << n)).filter(|m| m & 1 == 1) {
        let wa: f64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| weights[i]).sum();
        let gap = (2.0 * wa - total).abs();
        if gap < best.0 {
            best = (gap, mask);
        }
    }
    let mut s = IndexSplit::default();
    for (i, &w) in weights.iter().enumerate() {
        if best.1 >> i & 1 == 1 {
            s.a.push(i);
            s.weight_a += w;
        } else {
            s.b.push(i);
            s.weight_b += w;
        }
    }
    Ok(s)
}

fn subset(d: &DiskSet, idx: &[usize]) -> DiskSet {
    DiskSet::new(idx.iter().map(|&i| d.radius(i)).collect()).expect("radii from a valid set")
}

fn to_result(d: &DiskSet, s: &IndexSplit) -> SplitResult {
    SplitResult { group_a: subset(d, &s.a), group_b: subset(d, &s.b), weight_gap: s.gap() }
}

/// Greedy splitting of a disk set.
pub fn greedy_split(d: &DiskSet) -> Result<SplitResult, SplitError> {
    if d.len() < 2 {
        return Err(SplitError::TooFewDisks(d.len()));
    }
    let w: Vec<f64> = d.radii().iter().map(|r| r * r).collect();
    Ok(to_result(d, &greedy_split_indices(&w)))
}

/// Greedy splitting of `rest` starting from the seed groups.
pub fn seeded_greedy_split(seed_a: &DiskSet, seed_b: &DiskSet, rest: &DiskSet) -> SplitResult {
    let mut radii: Vec<f64> = seed_a.radii().to_vec();
    radii.extend_from_slice(seed_b.radii());
    radii.extend_from_slice(rest.radii());
    let w: Vec<f64> = radii.iter().map(|r| r * r).collect();
    let na = seed_a.len();
    let nb = seed_b.len();
    let start = IndexSplit {
        a: (0..na).collect(),
        b: (na..na + nb).collect(),
        weight_a: seed_a.weight(),
        weight_b: seed_b.weight(),
    };
    let rest_idx: Vec<usize> = (na + nb..radii.len()).collect();
    let s = greedy_extend(&w, start, &rest_idx);
    let pick = |idx: &[usize]| DiskSet::new(idx.iter().map(|&i| radii[i]).collect()).expect("valid radii");
    SplitResult { group_a: pick(&s.a), group_b: pick(&s.b), weight_gap: s.gap() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_weights(w: &[f64]) -> DiskSet {
        DiskSet::new(w.iter().map(|x| x.sqrt()).collect()).unwrap()
    }

    fn weights(d: &DiskSet) -> Vec<f64> {
        d.radii().iter().map(|r| (r * r * 1e9).round() / 1e9).collect()
    }

    #[test]
    fn six_weights_step_through() {
        let s = greedy_split(&from_weights(&[5.0, 4.0, 3.0, 3.0, 2.0, 1.0])).unwrap();
        assert_eq!(weights(&s.group_a), vec![5.0, 3.0, 1.0]);
        assert_eq!(weights(&s.group_b), vec![4.0, 3.0, 2.0]);
        assert!(s.weight_gap < 1e-12);
    }

    #[test]
    fn pair_and_heavy_head() {
        let s = greedy_split(&from_weights(&[1.0, 1.0])).unwrap();
        assert_eq!(s.group_a.len(), 1);
        assert!(s.weight_gap < 1e-12);
        let s = greedy_split(&from_weights(&[4.0, 1.0, 1.0, 1.0])).unwrap();
        assert_eq!(weights(&s.group_a), vec![4.0]);
        assert_eq!(weights(&s.group_b), vec![1.0, 1.0, 1.0]);
        assert!((s.weight_gap - 1.0).abs() < 1e-12);
        assert!(greedy_split(&from_weights(&[1.0])).is_err());
    }

    #[test]
    fn seeded_examples() {
        let empty = DiskSet::new(vec![]).unwrap();
        let rest = from_weights(&[2.0, 2.0]);
        let s = seeded_greedy_split(&empty, &empty, &rest);
        assert_eq!(s, greedy_split(&rest).unwrap());
        let s = seeded_greedy_split(&from_weights(&[10.0]), &from_weights(&[1.0]), &from_weights(&[2.0, 2.0, 2.0]));
        assert_eq!(s.group_a.len(), 1);
        assert_eq!(s.group_b.len(), 4);
        assert!((s.weight_gap - 3.0).abs() < 1e-9);
    }

    #[test]
    fn seven_weights_min_gap_matches_brute_force() {
        let w = [7.0, 6.0, 5.0, 4.0, 3.0, 2.0, 1.0];
        let s = min_gap_partition(&w).unwrap();
        assert_eq!(s.gap(), 0.0);
        assert_eq!(s.a.len() + s.b.len(), 7);
        assert!(min_gap_partition(&[1.0; 8]).is_err());
    }

    fn brute_min_gap(w: &[f64]) -> f64 {
        let n = w.len();
        let total: f64 = w.iter().sum();
        (0u32..(1 << n))
            .map(|m| {
                let a: f64 = (0..n).filter(|i| m >> i & 1 == 1).map(|i| w[i]).sum();
                (2.0 * a - total).abs()
            })
            .fold(f64::INFINITY, f64::min)
    }

    proptest! {
        #[test]
        fn min_gap_is_optimal(mut w in proptest::collection::vec(0.001f64..1.0, 1..=7)) {
            w.sort_by(|a, b| b.total_cmp(a));
            let s = min_gap_partition(&w).unwrap();
            prop_assert!((s.gap() - brute_min_gap(&w)).abs() < 1e-12);
        }

        #[test]
        fn guarantee_and_conservation(rs in proptest::collection::vec(0.001f64..1.0, 2..60)) {
            let d = DiskSet::new(rs).unwrap();
            let s = greedy_split(&d).unwrap();
            let (wa, wb) = (s.group_a.weight(), s.group_b.weight());
            let heavier = if wa >= wb { &s.group_a } else { &s.group_b };
            let smallest = heavier.radii().last().map(|r| r * r).unwrap_or(0.0);
            prop_assert!(s.weight_gap <= smallest + 1e-12);
            prop_assert!((wa + wb - d.weight()).abs() <= 1e-12 * d.weight());
            prop_assert_eq!(s.group_a.len() + s.group_b.len(), d.len());
        }

        #[test]
        fn permutation_invariant(mut rs in proptest::collection::vec(0.001f64..1.0, 2..30)) {
            let a = greedy_split(&DiskSet::new(rs.clone()).unwrap()).unwrap();
            rs.reverse();
            let b = greedy_split(&DiskSet::new(rs).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
