//! Staircase families.
//!
//! Three groups of k near-vertical segments -- left, middle, right -- with
//! the middle tops forming an increasing staircase, plus h horizontal
//! segments. Horizontal t carries a choice triple `(i, j, l)` in `[1,k]^3`
//! and is placed so that it crosses exactly the last `i` left verticals, the
//! last `l` middle verticals (the `l` tallest steps) and the first `j` right
//! verticals. The triple is recoverable from the intersection graph, so the
//! family realizes `(k^3)^h` distinct graphs, all bipartite.

use std::collections::BTreeSet;
use std::ops::Range;

use num_bigint::BigUint;
use rand::Rng;
use rand::RngCore;

use crate::constructions::grid::run_census;
use crate::constructions::CensusResult;
use crate::error::{Error, Result};
use crate::geom::{
    checked_intersection_graph, CurveFamily, MonotoneCurve, Point,
};
use crate::scalar::{s_frac, s_i64, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseParams {
    k: u64,
    /// Choice triples `(i, j, l)`, one per horizontal, each component in `[1, k]`.
    choices: Vec<(u64, u64, u64)>,
}

impl StaircaseParams {
    pub fn new(k: u64, choices: Vec<(u64, u64, u64)>) -> Result<Self> {
        if k < 1 {
            return Err(Error::BadParams("k must be positive".into()));
        }
        for &(i, j, l) in &choices {
            if [i, j, l].iter().any(|&v| v < 1 || v > k) {
                return Err(Error::BadParams(format!(
                    "choice triple ({i}, {j}, {l}) outside [1, {k}]^3"
                )));
            }
        }
        Ok(StaircaseParams { k, choices })
    }

    pub fn random(k: u64, h: u64, rng: &mut impl RngCore) -> Result<Self> {
        if k < 1 {
            return Err(Error::BadParams("k must be positive".into()));
        }
        let mut draw = || rng.gen_range(1..=k);
        let choices = (0..h).map(|_| (draw(), draw(), draw())).collect();
        StaircaseParams::new(k, choices)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn h(&self) -> u64 {
        self.choices.len() as u64
    }

    pub fn choices(&self) -> &[(u64, u64, u64)] {
        &self.choices
    }
}

/// Builds the family. Curve labels: `L1..Lk`, `M1..Mk`, `R1..Rk`, `H1..Hh`.
pub fn staircase_build<S: Scalar>(p: &StaircaseParams) -> Result<CurveFamily<S>> {
    let k = p.k as i64;
    let h = p.choices.len() as i64;
    // Column pitch; verticals get a tiny slant to stay x-monotone.
    let pitch = s_frac::<S>(1, k + 1);
    let slant = pitch.clone() / s_i64::<S>(32);
    let half = pitch.clone() / s_i64::<S>(2); // step height
    let top = |u: i64| half.clone() * s_i64::<S>(u);
    let one = S::one();
    let neg = |v: &S| S::zero() - v.clone();

    let mut curves = Vec::new();
    for u in 1..=k {
        let x = s_i64::<S>(u) * pitch.clone() - one.clone();
        curves.push(MonotoneCurve::new(
            format!("L{u}"),
            vec![
                Point::new(x.clone(), neg(&one)),
                Point::new(x + slant.clone(), one.clone()),
            ],
        )?);
    }
    for u in 1..=k {
        let x = s_i64::<S>(u) * pitch.clone() / s_i64::<S>(4);
        curves.push(MonotoneCurve::new(
            format!("M{u}"),
            vec![
                Point::new(x.clone(), neg(&one)),
                Point::new(x + slant.clone(), top(u)),
            ],
        )?);
    }
    for u in 1..=k {
        let x = s_i64::<S>(u) * pitch.clone() + one.clone();
        curves.push(MonotoneCurve::new(
            format!("R{u}"),
            vec![
                Point::new(x.clone(), neg(&one)),
                Point::new(x + slant.clone(), one.clone()),
            ],
        )?);
    }
    for (t0, &(i, j, l)) in p.choices.iter().enumerate() {
        let t = t0 as i64 + 1;
        // Strictly between step tops k-l and k-l+1, at a height unique to t.
        let y = top(k - l as i64) + half.clone() * s_frac::<S>(t, h + 1);
        // Endpoint abscissas get a per-index nudge (within the half-pitch
        // safety margin, so crossings are unaffected) to keep every endpoint
        // x in the family distinct.
        let nudge = slant.clone() * s_frac::<S>(t, h + 1);
        let x_left = s_frac::<S>(2 * (k - i as i64) + 1, 2) * pitch.clone()
            - one.clone()
            - nudge.clone();
        let x_right =
            s_frac::<S>(2 * j as i64 + 1, 2) * pitch.clone() + one.clone() + nudge;
        curves.push(MonotoneCurve::new(
            format!("H{t}"),
            vec![Point::new(x_left, y.clone()), Point::new(x_right, y)],
        )?);
    }
    CurveFamily::new(curves, None)
}

/// Expected neighborhood of horizontal `t` under choices `(i, j, l)`.
fn expected_neighbors(k: u64, (i, j, l): (u64, u64, u64)) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    out.extend((k - i + 1..=k).map(|u| format!("L{u}")));
    out.extend((k - l + 1..=k).map(|u| format!("M{u}")));
    out.extend((1..=j).map(|u| format!("R{u}")));
    out
}

fn census_chunk(k: u64, h: u64, range: Range<u64>) -> Result<BTreeSet<Vec<u8>>> {
    let mut set = BTreeSet::new();
    for index in range {
        // Mixed-radix decode: one digit in [0, k^3) per horizontal.
        let mut rest = index;
        let cell = k * k * k;
        let choices: Vec<(u64, u64, u64)> = (0..h)
            .map(|_| {
                let d = rest % cell;
                rest /= cell;
                (d % k + 1, d / k % k + 1, d / (k * k) + 1)
            })
            .collect();
        let params = StaircaseParams::new(k, choices)?;
        let fam = staircase_build::<crate::Rat>(&params)?;
        let graph = match checked_intersection_graph(&fam) {
            Ok(g) => g,
            Err(Error::NotPseudoSegments { a, b }) => {
                return Err(Error::CensusMismatch(format!(
                    "`{a}` and `{b}` cross more than once"
                )))
            }
            Err(e) => return Err(e),
        };
        if !graph.is_bipartite() {
            return Err(Error::CensusMismatch("graph is not bipartite".into()));
        }
        for (t0, &c) in params.choices().iter().enumerate() {
            let got: BTreeSet<String> = graph
                .neighbors(&format!("H{}", t0 + 1))
                .unwrap()
                .into_iter()
                .map(str::to_string)
                .collect();
            if got != expected_neighbors(k, c) {
                return Err(Error::CensusMismatch(format!(
                    "horizontal {} has the wrong neighborhood",
                    t0 + 1
                )));
            }
        }
        set.insert(graph.canonical_bits());
    }
    Ok(set)
}

/// Counts the distinct intersection graphs over all `(k^3)^h` choice
/// vectors. When the count is at most `limit`, builds and checks every
/// family geometrically (across `jobs` threads) and confirms distinctness.
pub fn staircase_census(k: u64, h: u64, limit: u64, jobs: usize) -> Result<CensusResult> {
    if k < 1 {
        return Err(Error::BadParams("k must be positive".into()));
    }
    let count = BigUint::from(k).pow(3 * h as u32);
    let fits = count.bits() <= 63 && count <= BigUint::from(limit);
    if !fits {
        return Ok(CensusResult {
            count,
            verified: false,
        });
    }
    let space = u64::try_from(&count).expect("fits");
    let set = run_census(jobs, space, |range| census_chunk(k, h, range))?;
    if set.len() as u64 != space {
        return Err(Error::CensusMismatch(format!(
            "enumerated {} distinct graphs, expected {space}",
            set.len()
        )));
    }
    Ok(CensusResult {
        count,
        verified: true,
    })
}
