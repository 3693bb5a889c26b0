//! Finite set families over a ground set `[n] = {1, ..., n}`, bit-packed.

mod codec;
mod greedy;
mod shatter;

pub use codec::{ceil_log2, decode, encode, encoded_bit_length, Encoded};
pub use greedy::{greedy_ordering, packing_check, GreedyOrdering, PackingReport, PrefixTerm};
pub use shatter::{dual_shatter, primal_shatter, vc_dimension};

use crate::error::{Error, Result};
use crate::util::Bits;

/// A list of `m >= 1` subsets ("rows") of the ground set `[n]`, in a fixed
/// order, duplicates allowed. Element `e` of row `i` is bit `e - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    rows: Vec<Bits>,
}

impl SetFamily {
    pub fn new(n: usize, rows: Vec<Bits>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParams("ground set must be nonempty".into()));
        }
        if rows.is_empty() {
            return Err(Error::BadParams("family must have at least one row".into()));
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
        }
        Ok(SetFamily { n, rows })
    }

    /// Builds from 1-based element lists.
    pub fn from_sets(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let rows = sets
            .iter()
            .map(|s| {
                let mut b = Bits::new(n);
                for &e in s {
                    if e < 1 || e > n {
                        return Err(Error::BadParams(format!("element {e} outside [1, {n}]")));
                    }
                    b.set(e - 1, true);
                }
                Ok(b)
            })
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Bits] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Bits {
        &self.rows[i]
    }

    /// Symmetric-difference distance between rows `i` and `j`.
    pub fn dist(&self, i: usize, j: usize) -> usize {
        self.rows[i].xor_count(&self.rows[j])
    }

    /// The dual family: ground set indexes this family's rows, and row `e`
    /// of the dual records which original rows contain element `e`.
    /// Duplicates are kept (multiset semantics).
    pub fn transpose(&self) -> SetFamily {
        let mut rows = vec![Bits::new(self.m()); self.n];
        for (i, r) in self.rows.iter().enumerate() {
            for e in r.iter_ones() {
                rows[e].set(i, true);
            }
        }
        SetFamily {
            n: self.m(),
            rows,
        }
    }

    pub fn distinct_rows(&self) -> usize {
        let mut sorted: Vec<&Bits> = self.rows.iter().collect();
        sorted.sort();
        sorted.dedup();
        sorted.len()
    }

    /// Equality as multisets of rows, ignoring order.
    pub fn multiset_eq(&self, other: &SetFamily) -> bool {
        if self.n != other.n || self.m() != other.m() {
            return false;
        }
        let mut a: Vec<&Bits> = self.rows.iter().collect();
        let mut b: Vec<&Bits> = other.rows.iter().collect();
        a.sort();
        b.sort();
        a == b
    }

    /// Checks that all pairwise distances are at least `delta`.
    pub fn is_separated(&self, delta: usize) -> bool {
        for i in 0..self.m() {
            for j in (i + 1)..self.m() {
                if self.dist(i, j) < delta {
                    return false;
                }
            }
        }
        true
    }

    /// Text format: a header line `n m`, then `m` lines of `n` characters
    /// from `{0, 1}`, one row per line, element 1 leftmost.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for r in &self.rows {
            for e in 0..self.n {
                out.push(if r.get(e) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Malformed("empty set-family input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Malformed("bad header, expected `n m`".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Malformed("bad header, expected `n m`".into()))?;
        if it.next().is_some() {
            return Err(Error::Malformed("bad header, expected `n m`".into()));
        }
        let mut rows = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Malformed(format!("expected {m} rows")))?;
            let line = line.trim();
            if line.len() != n {
                return Err(Error::Malformed(format!(
                    "row `{line}` does not have {n} characters"
                )));
            }
            let mut b = Bits::new(n);
            for (e, ch) in line.chars().enumerate() {
                match ch {
                    '1' => b.set(e, true),
                    '0' => {}
                    _ => {
                        return Err(Error::Malformed(format!("bad character `{ch}` in row")));
                    }
                }
            }
            rows.push(b);
        }
        if lines.next().is_some() {
            return Err(Error::Malformed("trailing content after rows".into()));
        }
        SetFamily::new(n, rows)
    }
}

/// Symmetric-difference distance of two rows; errors unless the ground
/// sizes agree.
pub fn sym_diff_distance(a: &Bits, b: &Bits) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.xor_count(b))
}
