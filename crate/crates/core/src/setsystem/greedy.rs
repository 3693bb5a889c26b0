//! Farthest-point greedy ordering of a set family, and the packing check
//! built on its prefix distances.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::setsystem::{primal_shatter, SetFamily};
use crate::Rat;

/// The greedy separation ordering.
///
/// `order[0]` is the seed row; for `i = 2..=m`, `deltas[i - 2]` is the
/// distance from the i-th picked row to the nearest earlier pick, and
/// `pointers[i - 2]` is the 1-based position (into `order`) of the earliest
/// pick attaining that distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyOrdering {
    pub order: Vec<usize>,
    pub deltas: Vec<usize>,
    pub pointers: Vec<usize>,
}

/// Builds the ordering deterministically:
///
/// - the seed is the row with the smallest value (rows read as little-endian
///   integers), ties broken by the smaller index;
/// - each later pick maximizes the distance to the chosen prefix, with the
///   same (value, index) tie-break among the maximizers.
pub fn greedy_ordering(f: &SetFamily) -> GreedyOrdering {
    let m = f.m();
    let by_value = |a: usize, b: usize| {
        f.row(a)
            .cmp_value(f.row(b))
            .then(a.cmp(&b))
    };
    let seed = (0..m).min_by(|&a, &b| by_value(a, b)).expect("m >= 1");

    let mut order = vec![seed];
    let mut deltas = Vec::with_capacity(m - 1);
    let mut pointers = Vec::with_capacity(m - 1);
    let mut chosen = vec![false; m];
    chosen[seed] = true;
    // Distance from each unpicked row to the current prefix.
    let mut min_dist: Vec<usize> = (0..m).map(|r| f.dist(r, seed)).collect();

    while order.len() < m {
        let delta = (0..m)
            .filter(|&r| !chosen[r])
            .map(|r| min_dist[r])
            .max()
            .expect("rows remain");
        let pick = (0..m)
            .filter(|&r| !chosen[r] && min_dist[r] == delta)
            .min_by(|&a, &b| by_value(a, b))
            .expect("a maximizer exists");
        let pointer = order
            .iter()
            .position(|&p| f.dist(p, pick) == delta)
            .expect("the prefix attains its own minimum")
            + 1;
        chosen[pick] = true;
        order.push(pick);
        deltas.push(delta);
        pointers.push(pointer);
        for r in 0..m {
            if !chosen[r] {
                min_dist[r] = min_dist[r].min(f.dist(r, pick));
            }
        }
    }
    debug_assert!(deltas.windows(2).all(|w| w[0] >= w[1]));
    GreedyOrdering {
        order,
        deltas,
        pointers,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixTerm {
    /// Position `i` in the greedy order, 2-based like the delta it scales.
    pub position: usize,
    pub delta: usize,
    /// `i * (delta_i / n)^d`, exact.
    pub ratio: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingReport {
    pub max_ratio: Rat,
    pub per_prefix: Vec<PrefixTerm>,
}

fn rat_pow(base: &Rat, d: u32) -> Rat {
    let mut out = Rat::from_integer(1.into());
    for _ in 0..d {
        out *= base;
    }
    out
}

/// Verifies the polynomial shatter hypothesis `primal(z) <= c * z^d` for all
/// `z <= z_max` (exact rational comparison, error on the first failure),
/// then reports the packing ratios `i * (delta_i / n)^d` along the greedy
/// ordering. Each shatter evaluation is subject to `budget`.
pub fn packing_check(
    f: &SetFamily,
    c: &Rat,
    d: u32,
    z_max: usize,
    budget: u64,
) -> Result<PackingReport> {
    if *c <= Rat::zero() {
        return Err(Error::BadParams("c must be positive".into()));
    }
    if d == 0 {
        return Err(Error::BadParams("d must be at least 1".into()));
    }
    if z_max < 1 {
        return Err(Error::BadParams("z_max must be at least 1".into()));
    }
    for z in 1..=z_max.min(f.n()).min(63) {
        let value = primal_shatter(f, z, budget)?;
        let bound = c * rat_pow(&Rat::from_integer((z as i64).into()), d);
        if Rat::from_integer((value as i64).into()) > bound {
            return Err(Error::ShatterHypothesisFailed { z, value });
        }
    }
    let greedy = greedy_ordering(f);
    let n = Rat::from_integer((f.n() as i64).into());
    let mut per_prefix = Vec::with_capacity(greedy.deltas.len());
    let mut max_ratio = Rat::zero();
    for (t, &delta) in greedy.deltas.iter().enumerate() {
        let position = t + 2;
        let frac = Rat::from_integer((delta as i64).into()) / n.clone();
        let ratio = Rat::from_integer((position as i64).into()) * rat_pow(&frac, d);
        if ratio > max_ratio {
            max_ratio = ratio.clone();
        }
        per_prefix.push(PrefixTerm {
            position,
            delta,
            ratio,
        });
    }
    Ok(PackingReport {
        max_ratio,
        per_prefix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_order_deltas_pointers() {
        // F = {{}, {1}, {2}} over [2]: seed is {}, then both others sit at
        // distance 1; value order picks {1} before {2}.
        let f = SetFamily::from_sets(2, &[vec![2], vec![], vec![1]]).unwrap();
        let g = greedy_ordering(&f);
        assert_eq!(g.order, vec![1, 2, 0]);
        assert_eq!(g.deltas, vec![1, 1]);
        assert_eq!(g.pointers, vec![1, 1]);
    }

    #[test]
    fn deltas_are_non_increasing_and_prefixes_separated() {
        let sets: Vec<Vec<usize>> = vec![
            vec![1, 2, 3, 4, 5, 6],
            vec![1],
            vec![4, 5],
            vec![2, 3, 4],
            vec![1, 2, 3, 4, 5, 6, 7, 8],
            vec![7],
            vec![5, 6, 7],
        ];
        let f = SetFamily::from_sets(8, &sets).unwrap();
        let g = greedy_ordering(&f);
        assert!(g.deltas.windows(2).all(|w| w[0] >= w[1]));
        // Every prefix of length i has pairwise distances >= delta_i.
        for (t, &delta) in g.deltas.iter().enumerate() {
            let prefix = &g.order[..t + 2];
            for a in 0..prefix.len() {
                for b in (a + 1)..prefix.len() {
                    assert!(f.dist(prefix[a], prefix[b]) >= delta);
                }
            }
        }
        // Pointers index the true nearest earlier pick.
        for (t, (&delta, &ptr)) in g.deltas.iter().zip(&g.pointers).enumerate() {
            let pick = g.order[t + 1];
            let dists: Vec<usize> = g.order[..t + 1].iter().map(|&p| f.dist(p, pick)).collect();
            assert_eq!(dists.iter().copied().min(), Some(delta));
            assert_eq!(dists[ptr - 1], delta);
            assert!(dists[..ptr - 1].iter().all(|&d| d > delta));
        }
    }

    #[test]
    fn ordering_is_deterministic() {
        let f = SetFamily::from_sets(6, &[vec![1, 3], vec![2], vec![1, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!(greedy_ordering(&f), greedy_ordering(&f));
        // Duplicate rows end with delta 0.
        assert_eq!(greedy_ordering(&f).deltas.last(), Some(&0));
    }

    #[test]
    fn packing_check_reports_exact_ratios() {
        let f = SetFamily::from_sets(2, &[vec![], vec![1], vec![2]]).unwrap();
        let c = Rat::from_integer(2.into());
        let report = packing_check(&f, &c, 1, 2, 1 << 20).unwrap();
        assert_eq!(report.per_prefix.len(), 2);
        // delta = 1, n = 2: ratios are 2 * 1/2 = 1 and 3 * 1/2 = 3/2.
        assert_eq!(report.per_prefix[0].ratio, Rat::new(1.into(), 1.into()));
        assert_eq!(report.per_prefix[1].ratio, Rat::new(3.into(), 2.into()));
        assert_eq!(report.max_ratio, Rat::new(3.into(), 2.into()));
    }

    #[test]
    fn packing_check_rejects_wrong_hypothesis() {
        // Power set over [3] has primal(1) = 2 > c = 1/2.
        let all: Vec<Vec<usize>> = (0u32..8)
            .map(|mask| (1..=3).filter(|&e| mask >> (e - 1) & 1 == 1).collect())
            .collect();
        let f = SetFamily::from_sets(3, &all).unwrap();
        let c = Rat::new(1.into(), 2.into());
        match packing_check(&f, &c, 1, 3, 1 << 20) {
            Err(Error::ShatterHypothesisFailed { z: 1, value: 2 }) => {}
            other => panic!("expected hypothesis failure at z = 1, got {other:?}"),
        }
    }
}
