//! What a routine knows about the disks: a few largest weights plus an opaque
//! remainder. Concrete instances know every weight as a point interval;
//! prover boxes know the first `k` weights as intervals and only bounds on the
//! rest.

use crate::interval::{Interval, Ternary};
use crate::splitting::greedy_split_indices;

#[derive(Debug, Clone)]
pub struct DiskProfile {
    weights: Vec<Interval>,
    radii: Vec<Interval>,
    tail_weight: Interval,
    tail_max: f64,
    /// Total weight of all disks as given.
    given_total: Interval,
    exact: bool,
}

impl DiskProfile {
    /// Every disk known; `weights` must be sorted non-increasing.
    pub fn concrete(weights: &[f64]) -> DiskProfile {
        let weights: Vec<Interval> = weights.iter().map(|&w| Interval::point(w)).collect();
        let radii = weights.iter().map(|w| w.sqrt_pos()).collect();
        let given_total = weights.iter().copied().sum();
        DiskProfile { weights, radii, tail_weight: Interval::ZERO, tail_max: 0.0, given_total, exact: true }
    }

    /// The first weights as boxes; the remaining disks weigh `total − Σ known`
    /// in sum and no more than the last known box each.
    pub fn symbolic(weights: Vec<Interval>, total: Interval) -> DiskProfile {
        let known: Interval = weights.iter().copied().sum();
        let mut tail_weight = (total - known).clamp_lo(0.0);
        if !tail_weight.is_valid() {
            tail_weight = Interval::ZERO;
        }
        let last = weights.last().map_or(f64::INFINITY, |w| w.hi());
        let tail_max = last.min(tail_weight.hi()).max(0.0);
        let radii = weights.iter().map(|w| w.sqrt_pos()).collect();
        let given_total = (known + tail_weight).intersect(total);
        let given_total = if given_total.is_valid() { given_total } else { known + tail_weight };
        DiskProfile { weights, radii, tail_weight, tail_max, given_total, exact: false }
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn known(&self) -> usize {
        self.weights.len()
    }

    /// Weight of the `i`-th largest disk (0-based). Missing disks weigh zero.
    pub fn w(&self, i: usize) -> Interval {
        match self.weights.get(i) {
            Some(&w) => w,
            None if self.exact => Interval::ZERO,
            None => Interval::new(0.0, self.tail_max),
        }
    }

    pub fn r(&self, i: usize) -> Interval {
        match self.radii.get(i) {
            Some(&r) => r,
            None => self.w(i).sqrt_pos(),
        }
    }

    pub fn total(&self) -> Interval {
        self.given_total
    }

    /// Weight of disks `i..` (including the opaque tail).
    pub fn weight_from(&self, i: usize) -> Interval {
        let known: Interval = self.weights.iter().skip(i).copied().sum();
        known + self.tail_after(i)
    }

    /// Tail weight left once the untracked disks below index `i` are used.
    fn tail_after(&self, i: usize) -> Interval {
        let used = i.saturating_sub(self.weights.len()) as f64;
        if used == 0.0 {
            return self.tail_weight;
        }
        Interval::new((self.tail_weight.lo() - used * self.tail_max).max(0.0), self.tail_weight.hi())
    }

    pub fn full_pool(&self) -> Pool {
        let opaque =
            (!self.exact).then_some(Opaque { weight: self.tail_weight, max: self.tail_max });
        let total = (!self.exact).then_some(self.given_total);
        Pool { known: (0..self.weights.len()).collect(), opaque, total }
    }

    /// Pool of disks with index `i` and larger (smaller radius).
    pub fn pool_from(&self, i: usize) -> Pool {
        let mut p = self.full_pool();
        p.known.retain(|&j| j >= i);
        if let Some(o) = p.opaque.as_mut() {
            o.weight = self.tail_after(i);
        }
        p.total = (!self.exact && i <= self.weights.len())
            .then(|| self.given_total - self.weights[..i].iter().copied().sum::<Interval>());
        p
    }
}

/// Disks whose identities are not tracked: only their total and the largest
/// possible single weight are known. Never larger than any tracked disk of the
/// same pool.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Opaque {
    pub weight: Interval,
    pub max: f64,
}

/// A sub-collection of a profile's disks.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Pool {
    known: Vec<usize>,
    opaque: Option<Opaque>,
    /// Enclosure of the pool's total weight known beyond the sum of its parts.
    total: Option<Interval>,
}

/// Result of collecting disks in decreasing order until a weight is reached.
#[derive(Debug, Clone)]
pub struct Collected {
    pub group: Pool,
    pub rest: Pool,
    /// Whether the pool held enough weight.
    pub ok: Ternary,
}

impl Pool {
    pub fn empty() -> Pool {
        Pool::default()
    }

    pub fn of(known: Vec<usize>) -> Pool {
        Pool { known, opaque: None, total: None }
    }

    pub fn members(&self) -> &[usize] {
        &self.known
    }

    pub fn is_opaque(&self) -> bool {
        self.opaque.is_some()
    }

    pub fn first(&self) -> Option<usize> {
        self.known.first().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.known.contains(&i)
    }

    pub fn weight(&self, d: &DiskProfile) -> Interval {
        let known: Interval = self.known.iter().map(|&i| d.w(i)).sum();
        let sum = match self.opaque {
            Some(o) => known + o.weight,
            None => known,
        };
        match self.total.map(|t| t.intersect(sum)) {
            Some(t) if t.is_valid() => t,
            _ => sum,
        }
    }

    /// Enclosure of the largest weight in the pool.
    pub fn max_weight(&self, d: &DiskProfile) -> Interval {
        match (self.known.first(), self.opaque) {
            (Some(&i), _) => d.w(i),
            (None, Some(o)) => Interval::new(0.0, o.max.min(o.weight.hi()).max(0.0)),
            (None, None) => Interval::ZERO,
        }
    }

    /// Upper bound on the `n`-th largest weight (0-based) in the pool.
    pub fn nth_weight_hi(&self, d: &DiskProfile, n: usize) -> f64 {
        match (self.known.get(n), self.opaque) {
            (Some(&i), _) => d.w(i).hi(),
            (None, Some(o)) => o.max.min(o.weight.hi()).max(0.0),
            (None, None) => 0.0,
        }
    }

    /// Removes a tracked disk; missing indices are ignored.
    pub fn without(&self, i: usize) -> Pool {
        let mut p = self.clone();
        p.known.retain(|&j| j != i);
        if p.known.len() != self.known.len() {
            p.total = None;
        }
        p
    }

    pub fn without_all(&self, idx: &[usize]) -> Pool {
        let mut p = self.clone();
        p.known.retain(|j| !idx.contains(j));
        if p.known.len() != self.known.len() {
            p.total = None;
        }
        p
    }

    /// Definitely holds no weight.
    pub fn is_empty(&self, d: &DiskProfile) -> bool {
        self.weight(d).hi() <= 0.0
    }

    /// Adds disks in decreasing order of radius until the collected weight
    /// reaches `need`. When the stopping point is uncertain the group and the
    /// rest become opaque with sound bounds.
    pub fn collect_until(&self, d: &DiskProfile, need: Interval) -> Collected {
        let total = self.weight(d);
        let ok = total.ge(need);
        if need.hi() <= 0.0 {
            return Collected { group: Pool::empty(), rest: self.clone(), ok: Ternary::True };
        }
        if d.is_exact() {
            let mut acc = Interval::ZERO;
            for (t, &i) in self.known.iter().enumerate() {
                acc = acc + d.w(i);
                if acc.lo() >= need.hi() {
                    let group = Pool::of(self.known[..=t].to_vec());
                    let rest = Pool::of(self.known[t + 1..].to_vec());
                    return Collected { group, rest, ok: Ternary::True };
                }
            }
            return Collected { group: self.clone(), rest: Pool::empty(), ok };
        }
        // Collect up to the upper end of `need`: one stopping rule that works
        // for every instance in the box.
        let need = Interval::point(need.hi());
        let ok = total.ge(need);
        // First index whose prefix may reach `need`, and first that surely does.
        let mut acc = Interval::ZERO;
        let mut first_possible = None;
        let mut first_sure = None;
        for (t, &i) in self.known.iter().enumerate() {
            acc = acc + d.w(i);
            if first_possible.is_none() && acc.hi() >= need.lo() {
                first_possible = Some(t);
            }
            if acc.lo() >= need.hi() {
                first_sure = Some(t);
                break;
            }
        }
        if let (Some(a), Some(b)) = (first_possible, first_sure) {
            if a == b {
                let group = Pool::of(self.known[..=a].to_vec());
                let rest = Pool { known: self.known[a + 1..].to_vec(), opaque: self.opaque, total: None };
                return Collected { group, rest, ok: Ternary::True };
            }
        }
        let tail_max = self.opaque.map_or(0.0, |o| o.max);
        let (last_hi, rest_max) = match first_possible {
            Some(a) => {
                let next = self.known.get(a + 1).map_or(tail_max, |&i| d.w(i).hi());
                (d.w(self.known[a]).hi(), next)
            }
            None => (tail_max, tail_max),
        };
        // Prefixes before `first_possible` surely fall short, so the disk at
        // `first_possible` is always taken.
        let definite = match first_possible {
            Some(a) => a + 1,
            None => self.known.len(),
        };
        let prefix: Interval = self.known[..definite].iter().map(|&i| d.w(i)).sum();
        let group_weight = Interval::new(need.lo().max(prefix.lo()), (need.hi() + last_hi).max(prefix.hi()))
            .intersect(Interval::new(0.0, total.hi()));
        let group_weight = if group_weight.is_valid() { group_weight } else { total };
        let extra = (group_weight - prefix).clamp_lo(0.0);
        let group = Pool {
            known: self.known[..definite].to_vec(),
            opaque: extra.is_valid().then_some(Opaque { weight: extra, max: last_hi }),
            total: Some(group_weight),
        };
        let rest_weight = (total - group_weight).clamp_lo(0.0);
        let rest_weight = if rest_weight.is_valid() { rest_weight } else { Interval::ZERO };
        let rest = Pool { known: Vec::new(), opaque: Some(Opaque { weight: rest_weight, max: rest_max }), total: None };
        Collected { group, rest, ok }
    }

    /// Greedy splitting into two groups; the first group receives the largest disk.
    pub fn greedy_split(&self, d: &DiskProfile) -> (Pool, Pool) {
        if d.is_exact() {
            let w: Vec<f64> = self.known.iter().map(|&i| d.w(i).mid()).collect();
            let s = greedy_split_indices(&w);
            let pick = |v: &[usize]| Pool::of(v.iter().map(|&t| self.known[t]).collect());
            return (pick(&s.a), pick(&s.b));
        }
        let total = self.weight(d);
        let gap = self.max_weight(d).hi();
        let half = Interval::new(((total.lo() - gap) / 2.0).max(0.0), ((total.hi() + gap) / 2.0).min(total.hi()));
        let a = Pool { known: Vec::new(), opaque: Some(Opaque { weight: half, max: self.nth_weight_hi(d, 0) }), total: None };
        let b = Pool { known: Vec::new(), opaque: Some(Opaque { weight: half, max: self.nth_weight_hi(d, 1) }), total: None };
        (a, b)
    }

    /// Greedy splitting continued from two seed groups taken out of this pool.
    /// `gap_bound` bounds the final weight difference when the assignment of
    /// the remaining disks is not tracked.
    pub fn seeded_split(&self, d: &DiskProfile, seed_a: &[usize], seed_b: &[usize], gap_bound: f64) -> (Pool, Pool) {
        let rest = self.without_all(seed_a).without_all(seed_b);
        if d.is_exact() {
            let mut wa: f64 = seed_a.iter().map(|&i| d.w(i).mid()).sum();
            let mut wb: f64 = seed_b.iter().map(|&i| d.w(i).mid()).sum();
            let mut a = seed_a.to_vec();
            let mut b = seed_b.to_vec();
            for &i in &rest.known {
                let wi = d.w(i).mid();
                if wa <= wb {
                    a.push(i);
                    wa += wi;
                } else {
                    b.push(i);
                    wb += wi;
                }
            }
            a.sort_unstable();
            b.sort_unstable();
            return (Pool::of(a), Pool::of(b));
        }
        let total = self.weight(d);
        let half = Interval::new(((total.lo() - gap_bound) / 2.0).max(0.0), ((total.hi() + gap_bound) / 2.0).min(total.hi()));
        let max_of = |seed: &[usize]| {
            let seed_max = seed.iter().map(|&i| d.w(i).hi()).fold(0.0, f64::max);
            seed_max.max(rest.nth_weight_hi(d, 0))
        };
        let a = Pool { known: Vec::new(), opaque: Some(Opaque { weight: half, max: max_of(seed_a) }), total: None };
        let b = Pool { known: Vec::new(), opaque: Some(Opaque { weight: half, max: max_of(seed_b) }), total: None };
        (a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_collect_stops_at_first_sufficient_prefix() {
        let d = DiskProfile::concrete(&[0.3, 0.2, 0.1, 0.05]);
        let c = d.full_pool().collect_until(&d, Interval::point(0.45));
        assert_eq!(c.group.members(), &[0, 1]);
        assert_eq!(c.rest.members(), &[2, 3]);
        assert!(c.ok.is_true());
    }

    #[test]
    fn exact_collect_reports_shortfall() {
        let d = DiskProfile::concrete(&[0.3, 0.2]);
        let c = d.full_pool().collect_until(&d, Interval::point(0.7));
        assert!(c.ok.is_false());
    }

    #[test]
    fn symbolic_collect_bounds_contain_concrete_outcomes() {
        let boxes = vec![Interval::new(0.3, 0.31), Interval::new(0.2, 0.21), Interval::new(0.1, 0.2)];
        let d = DiskProfile::symbolic(boxes, Interval::new(1.0, 1.0));
        let need = Interval::point(0.55);
        let c = d.full_pool().collect_until(&d, need);
        let gw = c.group.weight(&d);
        let rw = c.rest.weight(&d);
        for w3 in [0.1, 0.15, 0.2] {
            for w1 in [0.3, 0.31] {
                // The tail is split into disks no heavier than the last known one.
                let mut conc = vec![w1, 0.2, w3];
                let mut tail: f64 = 1.0 - w1 - 0.2 - w3;
                while tail > 1e-12 {
                    let piece = tail.min(w3);
                    conc.push(piece);
                    tail -= piece;
                }
                let mut acc = 0.0;
                let mut k = 0;
                while acc < 0.55 {
                    acc += conc[k];
                    k += 1;
                }
                assert!(gw.contains(acc), "{gw:?} {acc}");
                assert!(rw.contains(1.0 - acc), "{rw:?}");
                assert!(c.rest.max_weight(&d).hi() >= conc[k..].iter().cloned().fold(0.0, f64::max));
            }
        }
    }

    #[test]
    fn symbolic_split_halves_share_total() {
        let d = DiskProfile::symbolic(vec![Interval::point(0.1)], Interval::point(1.0));
        let (a, b) = d.full_pool().greedy_split(&d);
        assert!(a.weight(&d).contains(0.5) && b.weight(&d).contains(0.45));
        assert!(a.weight(&d).lo() >= 0.45 - 1e-12);
    }
}
