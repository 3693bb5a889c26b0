//! Exact trace bounds for the crossing set system of a double-grounded
//! family 𝒜 against free curves ℬ.
//!
//! Rows are the neighborhoods N(α) ⊆ ℬ. The primal trace at `z` is capped
//! by (z+1)(2z+1): walking along any of the z chosen curves, the crossing
//! pattern changes only at crossings among the others. Dually, the pattern
//! of a β on z chosen 𝒜-curves is determined by the pair of vertical-
//! decomposition cells holding β's endpoints, so at most C(t,2) + t
//! patterns exist when the decomposition has t cells.

use crate::arrangement::vertical_decomposition;
use crate::error::{Error, Result};
use crate::geom::{crossing_count, double_grounds, CurveFamily};
use crate::scalar::Scalar;
use crate::setsystem::{primal_shatter, SetFamily};
use crate::util::Bits;

/// Work cap per shatter evaluation; generous for z ≤ 6 on desk-scale inputs.
const BUDGET: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceBound {
    pub max_primal: u64,
    pub bound: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTrace {
    /// Largest number of distinct ℬ-patterns over any z-subset of 𝒜.
    pub max_dual: u64,
    /// C(t,2) + t for the decomposition of the subset attaining `max_dual`.
    pub cell_bound: u64,
    pub ok: bool,
}

/// Crossing rows of `a` over ground set `b`, validating on the way that
/// the union is a pseudo-segment family with distinct labels and that
/// every `b` endpoint lies strictly inside `a`'s strip.
fn crossing_rows<S: Scalar>(
    a: &CurveFamily<S>,
    b: &CurveFamily<S>,
) -> Result<Vec<Bits>> {
    let (x0, x1) = double_grounds(a)?;
    for c in b.curves() {
        if a.get(c.id()).is_some() {
            return Err(Error::InvalidFamily(format!(
                "label `{}` appears in both families",
                c.id()
            )));
        }
        if c.first().x <= x0 || c.last().x >= x1 {
            return Err(Error::InvalidFamily(format!(
                "curve `{}` has an endpoint outside the open strip",
                c.id()
            )));
        }
    }
    let all: Vec<_> = a.curves().iter().chain(b.curves()).collect();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            if crossing_count(all[i], all[j])? > 1 {
                return Err(Error::NotPseudoSegments {
                    a: all[i].id().to_string(),
                    b: all[j].id().to_string(),
                });
            }
        }
    }
    let mut rows = Vec::with_capacity(a.len());
    for alpha in a.curves() {
        let mut bits = Bits::new(b.len());
        for (j, beta) in b.curves().iter().enumerate() {
            if crossing_count(alpha, beta)? == 1 {
                bits.set(j, true);
            }
        }
        rows.push(bits);
    }
    Ok(rows)
}

/// Computes the exact primal shatter value of the crossing system at `z`
/// and compares it against (z+1)(2z+1).
pub fn trace_bound_check<S: Scalar>(
    a: &CurveFamily<S>,
    b: &CurveFamily<S>,
    z: usize,
) -> Result<TraceBound> {
    if z > 6 {
        return Err(Error::TooLarge {
            what: "z",
            got: z,
            max: 6,
        });
    }
    let rows = crossing_rows(a, b)?;
    let fam = SetFamily::new(b.len(), rows)?;
    let max_primal = primal_shatter(&fam, z, BUDGET)?;
    let bound = ((z + 1) * (2 * z + 1)) as u64;
    Ok(TraceBound {
        max_primal,
        bound,
        ok: max_primal <= bound,
    })
}

/// For every z-subset of 𝒜, counts the distinct patterns of ℬ on it and
/// checks the count against C(t,2) + t, where t is the cell count of the
/// subset's vertical decomposition.
pub fn dual_trace_check<S: Scalar>(
    a: &CurveFamily<S>,
    b: &CurveFamily<S>,
    z: usize,
) -> Result<DualTrace> {
    if z > 6 {
        return Err(Error::TooLarge {
            what: "z",
            got: z,
            max: 6,
        });
    }
    if z < 1 || z > a.len() {
        return Err(Error::BadParams(format!(
            "z = {z} outside [1, {}]",
            a.len()
        )));
    }
    let (x0, x1) = double_grounds(a)?;
    let rows = crossing_rows(a, b)?;
    let mut idx: Vec<usize> = (0..z).collect();
    let mut max_dual = 0u64;
    let mut cell_bound = 0u64;
    let mut ok = true;
    loop {
        let mut patterns: Vec<u8> = (0..b.len())
            .map(|j| {
                idx.iter()
                    .enumerate()
                    .filter(|&(_, &i)| rows[i].get(j))
                    .fold(0u8, |p, (bit, _)| p | 1 << bit)
            })
            .collect();
        patterns.sort_unstable();
        patterns.dedup();
        let count = patterns.len() as u64;
        let sub = a.subfamily(&idx)?;
        let t = vertical_decomposition(&sub, &x0, &x1)?.cell_count() as u64;
        let bound = t * (t + 1) / 2;
        if count > max_dual {
            max_dual = count;
            cell_bound = bound;
        }
        if count > bound {
            ok = false;
        }
        if !next_subset(&mut idx, a.len()) {
            break;
        }
    }
    Ok(DualTrace {
        max_dual,
        cell_bound,
        ok,
    })
}

// Lexicographically next z-subset of {0, ..., n-1}; false when exhausted.
fn next_subset(idx: &mut [usize], n: usize) -> bool {
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
