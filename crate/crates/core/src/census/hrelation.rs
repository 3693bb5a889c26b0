//! The repeated-set identity: counting multiset systems by their support.
//!
//! Over the systems of m subsets of [n] whose primal shatter function obeys
//! π(z) ≤ c·z^d for all z ≤ n, the multiset count h(m,n) decomposes by the
//! number m' of distinct rows: a multiset with support size m' distributes
//! its m slots over the support in C(m−1, m'−1) ways, and the π condition
//! ignores multiplicity. Verified literally by exhaustive enumeration.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rat;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn rat_pow(base: &Rat, d: u32) -> Rat {
    let mut out = Rat::from_integer(1.into());
    for _ in 0..d {
        out *= base;
    }
    out
}

/// Whether `rows` (bit masks over ground [n]) leaves at most c·z^d distinct
/// traces on every nonempty Z ⊆ [n] with |Z| = z.
fn admissible(rows: &[u8], n: usize, c: &Rat, d: u32) -> bool {
    for zmask in 1u8..(1u8 << n) {
        let z = zmask.count_ones();
        let traces: BTreeSet<u8> = rows.iter().map(|r| r & zmask).collect();
        let bound = c * rat_pow(&Rat::from_integer((z as i64).into()), d);
        if Rat::from_integer((traces.len() as i64).into()) > bound {
            return false;
        }
    }
    true
}

/// Counts admissible sorted row sequences of length `len` over masks
/// `0..2^n`; `strict` restricts to strictly increasing rows (sets).
fn count_systems(n: usize, len: usize, strict: bool, c: &Rat, d: u32) -> u64 {
    fn rec(
        n: usize,
        rows: &mut Vec<u8>,
        from: u8,
        left: usize,
        strict: bool,
        c: &Rat,
        d: u32,
    ) -> u64 {
        if left == 0 {
            return admissible(rows, n, c, d) as u64;
        }
        let mut total = 0;
        for mask in from..(1u8 << n) {
            rows.push(mask);
            let next = if strict { mask + 1 } else { mask };
            total += rec(n, rows, next, left - 1, strict, c, d);
            rows.pop();
        }
        total
    }
    rec(n, &mut Vec::new(), 0, len, strict, c, d)
}

/// Exhaustively checks h(m,n) = Σ_{m' ≤ m} h'(m',n) · C(m−1, m'−1), where
/// h counts multisets (sorted row lists) and h' counts distinct-row
/// systems, both under the π(z) ≤ c·z^d condition for all z ≤ n.
pub fn verify_h_relation(n: usize, m: usize, c: &Rat, d: u32) -> Result<bool> {
    if n == 0 || m == 0 {
        return Err(Error::BadParams("n and m must be positive".into()));
    }
    if n > 3 {
        return Err(Error::TooLarge {
            what: "n",
            got: n,
            max: 3,
        });
    }
    if m > 4 {
        return Err(Error::TooLarge {
            what: "m",
            got: m,
            max: 4,
        });
    }
    if *c < Rat::zero() {
        return Err(Error::BadParams("c must be nonnegative".into()));
    }
    let h = count_systems(n, m, false, c, d);
    let mut rhs = 0u64;
    for mp in 1..=m {
        rhs += count_systems(n, mp, true, c, d) * binom(m as u64 - 1, mp as u64 - 1);
    }
    Ok(h == rhs)
}
