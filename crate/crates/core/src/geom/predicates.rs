//! Exact incidence predicates on x-monotone curves.
//!
//! Every contact that is not a proper (transversal, interior-to-both-edges)
//! crossing is reported as [`Error::Degenerate`] with the offending segment
//! pair. No perturbation happens anywhere.

use crate::error::{Error, Result};
use crate::geom::{CurveFamily, MonotoneCurve, Point};
use crate::graph::LabelledGraph;
use crate::scalar::Scalar;

/// Sign of the orientation determinant of the triple `(a, b, c)`:
/// `+1` for a left turn, `-1` for a right turn, `0` for collinear.
pub fn orient<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> i32 {
    let v = (b.x.clone() - a.x.clone()) * (c.y.clone() - a.y.clone())
        - (b.y.clone() - a.y.clone()) * (c.x.clone() - a.x.clone());
    match v.cmp(&S::zero()) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// How two closed segments meet. Segments must have strictly increasing x.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegRel {
    Disjoint,
    /// One transversal crossing, interior to both segments.
    Proper,
    /// Any other nonempty intersection: shared endpoint, endpoint on the
    /// other segment, or collinear overlap.
    Contact,
}

// Containment of a collinear point in a segment's closed x-range.
fn on_collinear<S: Scalar>(a: &Point<S>, b: &Point<S>, q: &Point<S>) -> bool {
    a.x <= q.x && q.x <= b.x
}

pub fn seg_relation<S: Scalar>(
    p1: &Point<S>,
    p2: &Point<S>,
    q1: &Point<S>,
    q2: &Point<S>,
) -> SegRel {
    let o1 = orient(p1, p2, q1);
    let o2 = orient(p1, p2, q2);
    let o3 = orient(q1, q2, p1);
    let o4 = orient(q1, q2, p2);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return SegRel::Proper;
    }
    if (o1 == 0 && on_collinear(p1, p2, q1))
        || (o2 == 0 && on_collinear(p1, p2, q2))
        || (o3 == 0 && on_collinear(q1, q2, p1))
        || (o4 == 0 && on_collinear(q1, q2, p2))
    {
        return SegRel::Contact;
    }
    SegRel::Disjoint
}

/// The crossing point of two properly crossing segments.
pub fn proper_crossing<S: Scalar>(
    p1: &Point<S>,
    p2: &Point<S>,
    q1: &Point<S>,
    q2: &Point<S>,
) -> Point<S> {
    let dx1 = p2.x.clone() - p1.x.clone();
    let dy1 = p2.y.clone() - p1.y.clone();
    let dx2 = q2.x.clone() - q1.x.clone();
    let dy2 = q2.y.clone() - q1.y.clone();
    let denom = dx1.clone() * dy2.clone() - dy1.clone() * dx2.clone();
    debug_assert!(denom != S::zero());
    let t = ((q1.x.clone() - p1.x.clone()) * dy2 - (q1.y.clone() - p1.y.clone()) * dx2) / denom;
    Point::new(
        p1.x.clone() + t.clone() * dx1,
        p1.y.clone() + t * dy1,
    )
}

/// Visits every segment pair of `a` x `b` whose closed x-ranges overlap, by a
/// two-pointer merge over the x-sorted segment lists.
fn for_overlapping_segments<S, F>(
    a: &MonotoneCurve<S>,
    b: &MonotoneCurve<S>,
    mut visit: F,
) -> Result<()>
where
    S: Scalar,
    F: FnMut(usize, usize) -> Result<()>,
{
    if a.last().x < b.first().x || b.last().x < a.first().x {
        return Ok(());
    }
    let (na, nb) = (a.segment_count(), b.segment_count());
    let (mut i, mut j) = (0, 0);
    while i < na && j < nb {
        let (a1, a2) = a.segment(i);
        let (b1, b2) = b.segment(j);
        if a2.x < b1.x {
            i += 1;
            continue;
        }
        if b2.x < a1.x {
            j += 1;
            continue;
        }
        visit(i, j)?;
        if a2.x <= b2.x {
            i += 1;
        } else {
            j += 1;
        }
    }
    Ok(())
}

/// Number of proper crossings between two curves. Any non-proper contact is
/// a [`Error::Degenerate`] error.
pub fn crossing_count<S: Scalar>(a: &MonotoneCurve<S>, b: &MonotoneCurve<S>) -> Result<usize> {
    let mut count = 0;
    for_overlapping_segments(a, b, |i, j| {
        let (p1, p2) = a.segment(i);
        let (q1, q2) = b.segment(j);
        match seg_relation(p1, p2, q1, q2) {
            SegRel::Proper => {
                count += 1;
                Ok(())
            }
            SegRel::Contact => Err(Error::Degenerate {
                a: a.id().to_string(),
                a_seg: i,
                b: b.id().to_string(),
                b_seg: j,
            }),
            SegRel::Disjoint => Ok(()),
        }
    })?;
    Ok(count)
}

/// All proper crossing points of two curves, in increasing x order.
pub fn curve_crossings<S: Scalar>(
    a: &MonotoneCurve<S>,
    b: &MonotoneCurve<S>,
) -> Result<Vec<Point<S>>> {
    let mut out = Vec::new();
    for_overlapping_segments(a, b, |i, j| {
        let (p1, p2) = a.segment(i);
        let (q1, q2) = b.segment(j);
        match seg_relation(p1, p2, q1, q2) {
            SegRel::Proper => {
                out.push(proper_crossing(p1, p2, q1, q2));
                Ok(())
            }
            SegRel::Contact => Err(Error::Degenerate {
                a: a.id().to_string(),
                a_seg: i,
                b: b.id().to_string(),
                b_seg: j,
            }),
            SegRel::Disjoint => Ok(()),
        }
    })?;
    Ok(out)
}

// Bounding boxes strictly apart => curves cannot meet; skips the scan.
fn boxes_apart<S: Scalar>(a: &MonotoneCurve<S>, ab: &(S, S), b: &MonotoneCurve<S>, bb: &(S, S)) -> bool {
    a.last().x < b.first().x || b.last().x < a.first().x || ab.1 < bb.0 || bb.1 < ab.0
}

/// Intersection graph of the family: vertices are the curves in family
/// order, an edge wherever two curves cross at least once.
pub fn intersection_graph<S: Scalar>(f: &CurveFamily<S>) -> Result<LabelledGraph> {
    let mut g = LabelledGraph::new(f.curves().iter().map(|c| c.id().to_string()))?;
    let ybox: Vec<(S, S)> = f.curves().iter().map(|c| c.y_bounds()).collect();
    for i in 0..f.len() {
        for j in (i + 1)..f.len() {
            let (a, b) = (&f.curves()[i], &f.curves()[j]);
            if boxes_apart(a, &ybox[i], b, &ybox[j]) {
                continue;
            }
            if crossing_count(a, b)? > 0 {
                g.add_edge_by_index(i, j);
            }
        }
    }
    Ok(g)
}

/// Intersection graph and pseudo-segment certificate in a single pairwise
/// pass: an edge wherever two curves cross exactly once, an error as soon as
/// any pair crosses twice (or touches improperly).
pub fn checked_intersection_graph<S: Scalar>(f: &CurveFamily<S>) -> Result<LabelledGraph> {
    let mut g = LabelledGraph::new(f.curves().iter().map(|c| c.id().to_string()))?;
    let ybox: Vec<(S, S)> = f.curves().iter().map(|c| c.y_bounds()).collect();
    for i in 0..f.len() {
        for j in (i + 1)..f.len() {
            let (a, b) = (&f.curves()[i], &f.curves()[j]);
            if boxes_apart(a, &ybox[i], b, &ybox[j]) {
                continue;
            }
            match crossing_count(a, b)? {
                0 => {}
                1 => g.add_edge_by_index(i, j),
                _ => {
                    return Err(Error::NotPseudoSegments {
                        a: a.id().to_string(),
                        b: b.id().to_string(),
                    })
                }
            }
        }
    }
    Ok(g)
}

/// Outcome of the pairwise crossing-number check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoCheck {
    Ok,
    /// First pair (in family order) crossing two or more times.
    Violation { a: String, b: String },
}

/// Checks that every pair of curves crosses at most once.
pub fn is_pseudosegment_family<S: Scalar>(f: &CurveFamily<S>) -> Result<PseudoCheck> {
    let ybox: Vec<(S, S)> = f.curves().iter().map(|c| c.y_bounds()).collect();
    for i in 0..f.len() {
        for j in (i + 1)..f.len() {
            let (a, b) = (&f.curves()[i], &f.curves()[j]);
            if boxes_apart(a, &ybox[i], b, &ybox[j]) {
                continue;
            }
            if crossing_count(a, b)? > 1 {
                return Ok(PseudoCheck::Violation {
                    a: a.id().to_string(),
                    b: b.id().to_string(),
                });
            }
        }
    }
    Ok(PseudoCheck::Ok)
}

/// The common ground x-coordinates of a double-grounded family: taken from
/// the strip when present, otherwise from the first curve. Errors unless
/// every curve starts at the left ground and ends at the right ground.
pub fn double_grounds<S: Scalar>(f: &CurveFamily<S>) -> Result<(S, S)> {
    if f.is_empty() {
        return Err(Error::NotDoubleGrounded("empty family".into()));
    }
    let (x0, x1) = match f.strip() {
        Some((a, b)) => (a.clone(), b.clone()),
        None => (f.curves()[0].first().x.clone(), f.curves()[0].last().x.clone()),
    };
    for c in f.curves() {
        if c.first().x != x0 || c.last().x != x1 {
            return Err(Error::NotDoubleGrounded(format!(
                "curve `{}` does not span both grounds",
                c.id()
            )));
        }
    }
    Ok((x0, x1))
}

pub fn is_double_grounded<S: Scalar>(f: &CurveFamily<S>) -> bool {
    double_grounds(f).is_ok()
}

/// Checks that the set of through curves crossed by `gamma` is contiguous in
/// the vertical order of the through curves.
///
/// The through curves must all span the same strip and be pairwise disjoint;
/// they are ordered by their y-coordinate on the left ground.
pub fn neighborhood_interval_check<S: Scalar>(
    gamma: &MonotoneCurve<S>,
    throughs: &CurveFamily<S>,
) -> Result<bool> {
    if throughs.is_empty() {
        return Err(Error::InvalidThroughs("no through curves".into()));
    }
    let (x0, x1) = match throughs.strip() {
        Some((a, b)) => (a.clone(), b.clone()),
        None => (
            throughs.curves()[0].first().x.clone(),
            throughs.curves()[0].last().x.clone(),
        ),
    };
    for t in throughs.curves() {
        if t.first().x != x0 || t.last().x != x1 {
            return Err(Error::InvalidThroughs(format!(
                "curve `{}` does not span the strip",
                t.id()
            )));
        }
    }
    for i in 0..throughs.len() {
        for j in (i + 1)..throughs.len() {
            let (a, b) = (&throughs.curves()[i], &throughs.curves()[j]);
            match crossing_count(a, b) {
                Ok(0) => {}
                Ok(_) => {
                    return Err(Error::InvalidThroughs(format!(
                        "curves `{}` and `{}` cross",
                        a.id(),
                        b.id()
                    )))
                }
                Err(_) => {
                    return Err(Error::InvalidThroughs(format!(
                        "curves `{}` and `{}` touch",
                        a.id(),
                        b.id()
                    )))
                }
            }
        }
    }
    // Disjoint spanning curves are totally ordered by height; sort by the
    // left-ground y (distinct, else the pairwise check above would have
    // rejected a shared endpoint).
    let mut order: Vec<usize> = (0..throughs.len()).collect();
    order.sort_by(|&i, &j| {
        throughs.curves()[i]
            .first()
            .y
            .cmp(&throughs.curves()[j].first().y)
    });
    let mut crossed = Vec::new();
    for (rank, &i) in order.iter().enumerate() {
        if crossing_count(gamma, &throughs.curves()[i])? > 0 {
            crossed.push(rank);
        }
    }
    Ok(match (crossed.first(), crossed.last()) {
        (Some(&lo), Some(&hi)) => hi - lo + 1 == crossed.len(),
        _ => true,
    })
}
