//! Shatter functions and VC dimension by exhaustive trace enumeration.

use crate::error::{Error, Result};
use crate::setsystem::SetFamily;

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

// Lexicographically next z-combination of {0, ..., n-1}; false when done.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let z = idx.len();
    let mut i = z;
    while i > 0 {
        i -= 1;
        if idx[i] < n - z + i {
            idx[i] += 1;
            for j in (i + 1)..z {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn check_budget(f: &SetFamily, z: usize, budget: u64) -> Result<u64> {
    let needed = binomial(f.n() as u64, z as u64)
        .and_then(|c| c.checked_mul(f.m() as u64))
        .ok_or(Error::BudgetExceeded {
            needed: u64::MAX,
            budget,
        })?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed)
}

/// The primal shatter function at `z`: the maximum, over z-element subsets
/// `V0` of the ground set, of the number of distinct restrictions
/// `{ S intersect V0 : S in F }`. Work is `binomial(n, z) * m` row
/// restrictions; exceeding `budget` is an error before any work happens.
pub fn primal_shatter(f: &SetFamily, z: usize, budget: u64) -> Result<u64> {
    if z < 1 || z > f.n() {
        return Err(Error::BadParams(format!(
            "z = {z} outside [1, {}]",
            f.n()
        )));
    }
    if z > 63 {
        return Err(Error::BadParams("z above 63 is not supported".into()));
    }
    check_budget(f, z, budget)?;
    let mut idx: Vec<usize> = (0..z).collect();
    let mut best = 0u64;
    let mut patterns: Vec<u64> = Vec::with_capacity(f.m());
    loop {
        patterns.clear();
        for row in f.rows() {
            let mut p = 0u64;
            for (b, &e) in idx.iter().enumerate() {
                if row.get(e) {
                    p |= 1 << b;
                }
            }
            patterns.push(p);
        }
        patterns.sort_unstable();
        patterns.dedup();
        best = best.max(patterns.len() as u64);
        if !next_combination(&mut idx, f.n()) {
            break;
        }
    }
    Ok(best)
}

/// The dual shatter function at `z`: the primal shatter function of the
/// transposed family (multiset semantics).
pub fn dual_shatter(f: &SetFamily, z: usize, budget: u64) -> Result<u64> {
    let t = f.transpose();
    if z < 1 || z > t.n() {
        return Err(Error::BadParams(format!(
            "z = {z} outside [1, {}]",
            t.n()
        )));
    }
    primal_shatter(&t, z, budget)
}

/// The largest `z` such that some z-subset of the ground set is fully
/// shattered (all `2^z` restrictions occur); 0 when no singleton is.
/// The cumulative work over all checked levels is capped by `budget`.
pub fn vc_dimension(f: &SetFamily, budget: u64) -> Result<usize> {
    let upper = (f.n() as u64).min(63.min(f.m().ilog2() as u64));
    let mut spent = 0u64;
    let mut dim = 0;
    for z in 1..=upper as usize {
        let needed = binomial(f.n() as u64, z as u64)
            .and_then(|c| c.checked_mul(f.m() as u64))
            .and_then(|c| c.checked_add(spent))
            .ok_or(Error::BudgetExceeded {
                needed: u64::MAX,
                budget,
            })?;
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let shattered = has_shattered_subset(f, z);
        spent = needed;
        if shattered {
            dim = z;
        } else {
            // Shattering is monotone: a shattered z-set restricts to a
            // shattered set at every smaller size, so stop at the first gap.
            break;
        }
    }
    Ok(dim)
}

fn has_shattered_subset(f: &SetFamily, z: usize) -> bool {
    let want = 1usize << z;
    let mut idx: Vec<usize> = (0..z).collect();
    let mut patterns: Vec<u64> = Vec::with_capacity(f.m());
    loop {
        patterns.clear();
        for row in f.rows() {
            let mut p = 0u64;
            for (b, &e) in idx.iter().enumerate() {
                if row.get(e) {
                    p |= 1 << b;
                }
            }
            patterns.push(p);
        }
        patterns.sort_unstable();
        patterns.dedup();
        if patterns.len() == want {
            return true;
        }
        if !next_combination(&mut idx, f.n()) {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), Some(120));
        assert_eq!(binomial(5, 0), Some(1));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(64, 32), Some(1_832_624_140_942_590_534));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn shatter_of_singletons() {
        // All singletons over [4]: a z-set V0 with z < 4 yields the empty
        // pattern plus |V0| singleton patterns; at z = 4 no row is empty.
        let f = SetFamily::from_sets(4, &[vec![1], vec![2], vec![3], vec![4]]).unwrap();
        assert_eq!(primal_shatter(&f, 1, 1 << 20).unwrap(), 2);
        assert_eq!(primal_shatter(&f, 2, 1 << 20).unwrap(), 3);
        assert_eq!(primal_shatter(&f, 4, 1 << 20).unwrap(), 4);
        assert_eq!(vc_dimension(&f, 1 << 20).unwrap(), 1);
    }

    #[test]
    fn shatter_of_power_set() {
        let all: Vec<Vec<usize>> = (0u32..16)
            .map(|mask| (1..=4).filter(|&e| mask >> (e - 1) & 1 == 1).collect())
            .collect();
        let f = SetFamily::from_sets(4, &all).unwrap();
        assert_eq!(primal_shatter(&f, 3, 1 << 20).unwrap(), 8);
        assert_eq!(vc_dimension(&f, 1 << 20).unwrap(), 4);
    }

    #[test]
    fn dual_shatter_uses_the_transpose() {
        let f = SetFamily::from_sets(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        // Transpose over ground {rows 1..2}: rows {1}, {1,2}, {2}.
        assert_eq!(dual_shatter(&f, 2, 1 << 20).unwrap(), 3);
        assert!(matches!(
            dual_shatter(&f, 3, 1 << 20),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn budget_is_enforced_up_front() {
        let f = SetFamily::from_sets(20, &[vec![1], vec![2], vec![3]]).unwrap();
        match primal_shatter(&f, 10, 100) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 184_756 * 3);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(matches!(
            vc_dimension(&f, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn z_bounds_checked() {
        let f = SetFamily::from_sets(3, &[vec![1]]).unwrap();
        assert!(matches!(
            primal_shatter(&f, 0, 1000),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            primal_shatter(&f, 4, 1000),
            Err(Error::BadParams(_))
        ));
    }
}
