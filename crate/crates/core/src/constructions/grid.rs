//! Grid incidence families.
//!
//! Points of the integer grid `[0, n^(1/3)) x [0, n^(2/3))` together with the
//! lines `y = s*x + b` for slopes `1 <= s < k` and intercepts
//! `0 <= b < ceil(n^(2/3) / 2)`. Each point becomes a short horizontal
//! segment, each line an x-monotone curve that detours around every grid
//! point it is incident to; a per-incidence choice decides whether the curve
//! crosses that point's segment or avoids it. Distinct choice assignments
//! produce distinct intersection graphs, so the family realizes
//! `2^(#incidences)` graphs.

use std::collections::BTreeSet;
use std::ops::Range;

use num_bigint::BigUint;
use num_traits::One;
use rand::RngCore;
use rayon::prelude::*;

use crate::constructions::CensusResult;
use crate::error::{Error, Result};
use crate::geom::{
    checked_intersection_graph, CurveFamily, MonotoneCurve, Point,
};
use crate::graph::LabelledGraph;
use crate::scalar::{s_frac, s_i64, s_pow2, Scalar};

/// Largest `x` with `x^3 <= v`.
fn icbrt(v: u128) -> u64 {
    let (mut lo, mut hi) = (0u128, 1u128 << 43);
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        let cube = mid.checked_mul(mid).and_then(|m| m.checked_mul(mid));
        match cube {
            Some(c) if c <= v => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridLine {
    pub slope: u64,
    pub intercept: u64,
    /// Indices into the point list, in increasing column order.
    pub incidences: Vec<usize>,
}

/// The combinatorial point/line incidence structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridIncidence {
    n: u64,
    k: u64,
    nx: u64,
    ny: u64,
    points: Vec<(u64, u64)>,
    lines: Vec<GridLine>,
}

impl GridIncidence {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Column bound `floor(n^(1/3))`.
    pub fn nx(&self) -> u64 {
        self.nx
    }

    /// Row bound `floor(n^(2/3))`.
    pub fn ny(&self) -> u64 {
        self.ny
    }

    pub fn points(&self) -> &[(u64, u64)] {
        &self.points
    }

    pub fn lines(&self) -> &[GridLine] {
        &self.lines
    }

    pub fn incidence_count(&self) -> usize {
        self.lines.iter().map(|l| l.incidences.len()).sum()
    }

    pub fn point_label(&self, i: usize) -> String {
        let (a, b) = self.points[i];
        format!("p{a}_{b}")
    }

    pub fn line_label(&self, r: usize) -> String {
        let l = &self.lines[r];
        format!("l{}_{}", l.slope, l.intercept)
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.lines.len() + 1);
        let mut acc = 0;
        for l in &self.lines {
            off.push(acc);
            acc += l.incidences.len();
        }
        off.push(acc);
        off
    }
}

pub fn build_grid(n: u64, k: u64) -> Result<GridIncidence> {
    if n < 8 {
        return Err(Error::BadParams(format!("n = {n}, need n >= 8")));
    }
    if k < 1 {
        return Err(Error::BadParams("k must be positive".into()));
    }
    if (k as u128).pow(3) > n as u128 {
        return Err(Error::BadParams(format!(
            "k = {k} too large: k^3 must not exceed n = {n}"
        )));
    }
    let nx = icbrt(n as u128);
    let ny = icbrt(n as u128 * n as u128);
    let points: Vec<(u64, u64)> = (0..nx).flat_map(|a| (0..ny).map(move |b| (a, b))).collect();
    debug_assert!(points.len() as u128 <= n as u128);
    let intercepts = ny.div_ceil(2);
    let mut lines = Vec::new();
    for slope in 1..k {
        for intercept in 0..intercepts {
            let incidences: Vec<usize> = (0..nx)
                .filter_map(|a| {
                    let b = slope * a + intercept;
                    (b < ny).then(|| (a * ny + b) as usize)
                })
                .collect();
            // Every line meets at least a quarter of the columns: follows
            // from ny >= nx^2 and slope < k <= nx.
            assert!(4 * incidences.len() as u64 >= nx);
            lines.push(GridLine {
                slope,
                intercept,
                incidences,
            });
        }
    }
    Ok(GridIncidence {
        n,
        k,
        nx,
        ny,
        points,
        lines,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Choice {
    Avoid,
    Cross,
}

/// One [`Choice`] per incidence, flattened in line-rank order (incidences
/// within a line in increasing column order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceAssignment {
    bits: Vec<bool>, // true = Cross
}

impl ChoiceAssignment {
    pub fn uniform(g: &GridIncidence, choice: Choice) -> Self {
        ChoiceAssignment {
            bits: vec![choice == Choice::Cross; g.incidence_count()],
        }
    }

    pub fn from_bits(g: &GridIncidence, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != g.incidence_count() {
            return Err(Error::ChoiceMismatch(format!(
                "{} bits for {} incidences",
                bits.len(),
                g.incidence_count()
            )));
        }
        Ok(ChoiceAssignment { bits })
    }

    /// Bit `t` of `mask` drives incidence `t`. Usable while the incidence
    /// count is below 64.
    pub fn from_mask(g: &GridIncidence, mask: u64) -> Result<Self> {
        let total = g.incidence_count();
        if total >= 64 {
            return Err(Error::ChoiceMismatch(format!(
                "{total} incidences exceed the mask width"
            )));
        }
        if mask >> total != 0 {
            return Err(Error::ChoiceMismatch("mask has stray high bits".into()));
        }
        Ok(ChoiceAssignment {
            bits: (0..total).map(|t| mask >> t & 1 == 1).collect(),
        })
    }

    pub fn random(g: &GridIncidence, rng: &mut impl RngCore) -> Self {
        ChoiceAssignment {
            bits: (0..g.incidence_count())
                .map(|_| rng.next_u32() & 1 == 1)
                .collect(),
        }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, flat_index: usize) -> Choice {
        if self.bits[flat_index] {
            Choice::Cross
        } else {
            Choice::Avoid
        }
    }

    fn check(&self, g: &GridIncidence) -> Result<()> {
        if self.bits.len() != g.incidence_count() {
            return Err(Error::ChoiceMismatch(format!(
                "{} bits for {} incidences",
                self.bits.len(),
                g.incidence_count()
            )));
        }
        Ok(())
    }
}

/// The intersection graph the realization must produce: points are pairwise
/// non-adjacent, lines of distinct slopes are always adjacent, and a
/// point/line pair is adjacent exactly when incident with a Cross choice.
pub fn combinatorial_graph(g: &GridIncidence, c: &ChoiceAssignment) -> Result<LabelledGraph> {
    c.check(g)?;
    let np = g.points.len();
    let labels = (0..np)
        .map(|i| g.point_label(i))
        .chain((0..g.lines.len()).map(|r| g.line_label(r)));
    let mut graph = LabelledGraph::new(labels)?;
    for r1 in 0..g.lines.len() {
        for r2 in (r1 + 1)..g.lines.len() {
            if g.lines[r1].slope != g.lines[r2].slope {
                graph.add_edge_by_index(np + r1, np + r2);
            }
        }
    }
    let off = g.offsets();
    for (r, line) in g.lines.iter().enumerate() {
        for (t, &p) in line.incidences.iter().enumerate() {
            if c.get(off[r] + t) == Choice::Cross {
                graph.add_edge_by_index(p, np + r);
            }
        }
    }
    Ok(graph)
}

/// The largest segment scale guaranteed safe for [`realize_geometric`].
pub fn default_scale<S: Scalar>(g: &GridIncidence) -> S {
    s_frac(1, 2 * g.k.max(1) as i64)
}

/// Realizes the chosen intersection graph by an explicit family of
/// x-monotone polylines and verifies the result exactly: the family must be
/// pseudo-segment (pairwise at most one crossing, no degeneracies) and its
/// intersection graph must equal [`combinatorial_graph`].
pub fn realize_geometric<S: Scalar>(
    g: &GridIncidence,
    c: &ChoiceAssignment,
    scale: &S,
) -> Result<CurveFamily<S>> {
    c.check(g)?;
    if *scale <= S::zero() {
        return Err(Error::BadParams("scale must be positive".into()));
    }
    let mut curves = Vec::with_capacity(g.points.len() + g.lines.len());
    for (i, &(a, b)) in g.points.iter().enumerate() {
        let (x, y) = (s_i64::<S>(a as i64), s_i64::<S>(b as i64));
        curves.push(MonotoneCurve::new(
            g.point_label(i),
            vec![
                Point::new(x.clone(), y.clone()),
                Point::new(x + scale.clone(), y),
            ],
        )?);
    }
    let intercepts = g.ny.div_ceil(2) as i64;
    let (xl, xr) = (
        s_i64::<S>(-(intercepts + 1)),
        s_i64::<S>(g.nx as i64 + intercepts),
    );
    let off = g.offsets();
    for (r, line) in g.lines.iter().enumerate() {
        let slope = s_i64::<S>(line.slope as i64);
        let b0 = s_i64::<S>(line.intercept as i64);
        let line_y = |x: &S| slope.clone() * x.clone() + b0.clone();
        // Deviation shrinks with the line's global rank so that detour
        // windows of lines through a shared point nest strictly.
        let dev = scale.clone() / (s_i64::<S>(4) * s_pow2::<S>(r as u32));
        let w = dev.clone() / slope.clone();
        let flat = s_frac::<S>(2, 3) * dev.clone();
        let mut pts = vec![Point::new(xl.clone(), line_y(&xl))];
        for (t, &p) in line.incidences.iter().enumerate() {
            let a = s_i64::<S>(g.points[p].0 as i64);
            let cy = line_y(&a);
            let enter = a.clone() - w.clone();
            let exit = a.clone() + w.clone();
            let near = a.clone() - s_frac::<S>(3, 4) * w.clone();
            let far = a.clone() + s_frac::<S>(3, 4) * w.clone();
            let level = match c.get(off[r] + t) {
                // Crossing the point's row left of its segment, then passing
                // flat underneath and rising back through the row inside the
                // segment -- or staying above the row across the segment.
                Choice::Avoid => cy.clone() + flat.clone(),
                Choice::Cross => cy.clone() - flat.clone(),
            };
            pts.push(Point::new(enter.clone(), cy.clone() - dev.clone()));
            pts.push(Point::new(near, level.clone()));
            pts.push(Point::new(far, level));
            pts.push(Point::new(exit.clone(), cy.clone() + dev.clone()));
        }
        pts.push(Point::new(xr.clone(), line_y(&xr)));
        curves.push(MonotoneCurve::new(g.line_label(r), pts)?);
    }
    let fam = CurveFamily::new(curves, None)?;
    let got = match checked_intersection_graph(&fam) {
        Ok(graph) => graph,
        Err(Error::NotPseudoSegments { a, b }) => {
            return Err(Error::RealizationFailure(format!(
                "curves `{a}` and `{b}` cross more than once"
            )))
        }
        Err(e) => return Err(Error::RealizationFailure(format!("degeneracy: {e}"))),
    };
    let want = combinatorial_graph(g, c)?;
    if got != want {
        return Err(Error::RealizationFailure(
            "intersection graph does not match the choice assignment".into(),
        ));
    }
    Ok(fam)
}

fn census_chunk(g: &GridIncidence, range: Range<u64>) -> Result<BTreeSet<Vec<u8>>> {
    let mut set = BTreeSet::new();
    for mask in range {
        let c = ChoiceAssignment::from_mask(g, mask)?;
        let graph = combinatorial_graph(g, &c)?;
        let clique = graph.clique_number() as u64;
        if clique > g.k.max(1) {
            return Err(Error::CensusMismatch(format!(
                "clique number {clique} exceeds k = {}",
                g.k
            )));
        }
        set.insert(graph.canonical_bits());
    }
    Ok(set)
}

/// Counts the distinct intersection graphs over all choice assignments:
/// `2^(#incidences)`. When that count is at most `limit`, additionally
/// enumerates every assignment (across `jobs` threads), confirming the count
/// and the clique bound.
pub fn grid_census(g: &GridIncidence, limit: u64, jobs: usize) -> Result<CensusResult> {
    let total = g.incidence_count();
    let count = BigUint::one() << total;
    let verified = total < 64 && (1u64 << total) <= limit;
    if verified {
        let space = 1u64 << total;
        let set = run_census(jobs, space, |range| census_chunk(g, range))?;
        if set.len() as u64 != space {
            return Err(Error::CensusMismatch(format!(
                "enumerated {} distinct graphs, expected {space}",
                set.len()
            )));
        }
    }
    Ok(CensusResult { count, verified })
}

/// Splits `0..space` into chunks and unions the per-chunk canonical-graph
/// sets; sequential when `jobs <= 1`.
pub(crate) fn run_census<F>(jobs: usize, space: u64, chunk: F) -> Result<BTreeSet<Vec<u8>>>
where
    F: Fn(Range<u64>) -> Result<BTreeSet<Vec<u8>>> + Sync + Send,
{
    if jobs <= 1 || space < 2 {
        return chunk(0..space);
    }
    let pieces = (jobs as u64 * 8).min(space);
    let step = space.div_ceil(pieces);
    let ranges: Vec<Range<u64>> = (0..pieces)
        .map(|i| i * step..((i + 1) * step).min(space))
        .filter(|r| !r.is_empty())
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParams(format!("thread pool: {e}")))?;
    let sets: Result<Vec<BTreeSet<Vec<u8>>>> =
        pool.install(|| ranges.into_par_iter().map(chunk).collect());
    let mut out = BTreeSet::new();
    for s in sets? {
        out.extend(s);
    }
    Ok(out)
}
