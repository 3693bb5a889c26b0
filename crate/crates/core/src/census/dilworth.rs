//! Patience coloring of through-curves into non-crossing classes.
//!
//! Two curves spanning the same strip cross exactly when their boundary
//! order flips, so the crossing structure is the permutation sending
//! left-boundary positions to right-boundary positions. An increasing
//! subsequence is a pairwise non-crossing class, and greedy patience
//! placement uses the minimum number of classes: the length of the longest
//! strictly decreasing subsequence (the crossing graph's clique number).

use crate::error::{Error, Result};
use crate::geom::CurveFamily;
use crate::scalar::Scalar;

/// A permutation of `[t]`, position `i` (1-based) holding the
/// right-boundary rank of the curve that is `i`-th on the left boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPoset {
    perm: Vec<usize>,
}

impl PermutationPoset {
    /// Validates that `perm` is a bijection on `[t]`, `t = perm.len()`.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let t = perm.len();
        let mut seen = vec![false; t];
        for &v in &perm {
            if v < 1 || v > t || seen[v - 1] {
                return Err(Error::BadParams(format!(
                    "not a permutation of [{t}]: value {v}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(PermutationPoset { perm })
    }

    /// Reads the permutation off a family of curves spanning a common
    /// x-interval: sort by left endpoint height, record right ranks.
    pub fn from_family<S: Scalar>(f: &CurveFamily<S>) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::InvalidThroughs("no through curves".into()));
        }
        let x0 = &f.curves()[0].first().x;
        let x1 = &f.curves()[0].last().x;
        for c in f.curves() {
            if c.first().x != *x0 || c.last().x != *x1 {
                return Err(Error::InvalidThroughs(format!(
                    "curve `{}` does not span the common interval",
                    c.id()
                )));
            }
        }
        let rank = |key: fn(&crate::geom::MonotoneCurve<S>) -> &S| -> Result<Vec<usize>> {
            let mut idx: Vec<usize> = (0..f.len()).collect();
            idx.sort_by(|&a, &b| key(&f.curves()[a]).cmp(key(&f.curves()[b])));
            if idx
                .windows(2)
                .any(|w| key(&f.curves()[w[0]]) == key(&f.curves()[w[1]]))
            {
                return Err(Error::InvalidThroughs(
                    "two curves share a boundary endpoint".into(),
                ));
            }
            let mut rank = vec![0; f.len()];
            for (r, &i) in idx.iter().enumerate() {
                rank[i] = r;
            }
            Ok(rank)
        };
        let left = rank(|c| &c.first().y)?;
        let right = rank(|c| &c.last().y)?;
        let mut perm = vec![0; f.len()];
        for i in 0..f.len() {
            perm[left[i]] = right[i] + 1;
        }
        PermutationPoset::new(perm)
    }

    pub fn t(&self) -> usize {
        self.perm.len()
    }

    /// 1-based values; `perm()[i]` is the image of position `i + 1`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }
}

/// Partitions the positions `1..=t` into increasing subsequences by
/// patience placement: each position joins the first class whose running
/// last value stays below its own. The class count equals the longest
/// strictly decreasing subsequence.
pub fn dilworth_color(p: &PermutationPoset) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last: Vec<usize> = Vec::new();
    for (pos0, &v) in p.perm().iter().enumerate() {
        match last.iter().position(|&l| l < v) {
            Some(k) => {
                classes[k].push(pos0 + 1);
                last[k] = v;
            }
            None => {
                classes.push(vec![pos0 + 1]);
                last.push(v);
            }
        }
    }
    classes
}
