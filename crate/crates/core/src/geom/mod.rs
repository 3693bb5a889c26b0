//! x-monotone polyline curves and curve families.
//!
//! All coordinates are exact scalars (see [`crate::scalar::Scalar`]); nothing
//! here is perturbed or rounded. Degenerate inputs are detected and reported,
//! never repaired.

mod json;
mod predicates;

pub use json::{family_from_json, family_from_reader, family_to_json};
pub use predicates::{
    checked_intersection_graph, crossing_count, curve_crossings, double_grounds,
    intersection_graph, is_double_grounded, is_pseudosegment_family,
    neighborhood_interval_check, orient, proper_crossing, seg_relation, PseudoCheck, SegRel,
};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }
}

/// An x-monotone curve: a polyline whose vertex x-coordinates strictly
/// increase. Always has at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneCurve<S> {
    id: String,
    pts: Vec<Point<S>>,
}

impl<S: Scalar> MonotoneCurve<S> {
    pub fn new(id: impl Into<String>, pts: Vec<Point<S>>) -> Result<Self> {
        let id = id.into();
        if pts.len() < 2 {
            return Err(Error::InvalidCurve {
                id,
                reason: "needs at least two vertices".into(),
            });
        }
        for w in pts.windows(2) {
            if w[0].x >= w[1].x {
                return Err(Error::InvalidCurve {
                    id,
                    reason: "vertex x-coordinates must strictly increase".into(),
                });
            }
        }
        Ok(MonotoneCurve { id, pts })
    }

    /// Straight segment between two points (`x0 < x1`).
    pub fn segment_curve(id: impl Into<String>, a: Point<S>, b: Point<S>) -> Result<Self> {
        MonotoneCurve::new(id, vec![a, b])
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn with_id(&self, id: impl Into<String>) -> Self {
        MonotoneCurve {
            id: id.into(),
            pts: self.pts.clone(),
        }
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.pts
    }

    pub fn first(&self) -> &Point<S> {
        &self.pts[0]
    }

    pub fn last(&self) -> &Point<S> {
        self.pts.last().unwrap()
    }

    pub fn segment_count(&self) -> usize {
        self.pts.len() - 1
    }

    pub fn segment(&self, i: usize) -> (&Point<S>, &Point<S>) {
        (&self.pts[i], &self.pts[i + 1])
    }

    /// Exact y-value at `x`, or `None` outside the curve's x-span.
    pub fn y_at(&self, x: &S) -> Option<S> {
        if *x < self.first().x || *x > self.last().x {
            return None;
        }
        // Last segment whose left vertex is <= x.
        let i = match self.pts.partition_point(|p| p.x <= *x) {
            0 => 0,
            k if k >= self.pts.len() => self.pts.len() - 2,
            k => k - 1,
        };
        let (a, b) = self.segment(i.min(self.segment_count() - 1));
        let t = (x.clone() - a.x.clone()) / (b.x.clone() - a.x.clone());
        Some(a.y.clone() + t * (b.y.clone() - a.y.clone()))
    }

    /// Smallest and largest vertex y. For a polyline these bound the curve.
    pub fn y_bounds(&self) -> (S, S) {
        let mut lo = self.pts[0].y.clone();
        let mut hi = lo.clone();
        for p in &self.pts[1..] {
            if p.y < lo {
                lo = p.y.clone();
            }
            if p.y > hi {
                hi = p.y.clone();
            }
        }
        (lo, hi)
    }

    pub fn translate_y(&self, dy: &S) -> Self {
        MonotoneCurve {
            id: self.id.clone(),
            pts: self
                .pts
                .iter()
                .map(|p| Point::new(p.x.clone(), p.y.clone() + dy.clone()))
                .collect(),
        }
    }
}

/// A finite family of x-monotone curves with distinct labels, optionally
/// confined to a vertical strip `x0 <= x <= x1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily<S> {
    strip: Option<(S, S)>,
    curves: Vec<MonotoneCurve<S>>,
}

impl<S: Scalar> CurveFamily<S> {
    pub fn new(curves: Vec<MonotoneCurve<S>>, strip: Option<(S, S)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for c in &curves {
            if !seen.insert(c.id().to_string()) {
                return Err(Error::InvalidFamily(format!(
                    "duplicate curve label `{}`",
                    c.id()
                )));
            }
        }
        if let Some((x0, x1)) = &strip {
            if x0 >= x1 {
                return Err(Error::InvalidFamily("strip needs x0 < x1".into()));
            }
            for c in &curves {
                if c.first().x < *x0 || c.last().x > *x1 {
                    return Err(Error::InvalidFamily(format!(
                        "curve `{}` leaves the strip",
                        c.id()
                    )));
                }
            }
        }
        Ok(CurveFamily { strip, curves })
    }

    pub fn curves(&self) -> &[MonotoneCurve<S>] {
        &self.curves
    }

    pub fn strip(&self) -> Option<(&S, &S)> {
        self.strip.as_ref().map(|(a, b)| (a, b))
    }

    pub fn get(&self, id: &str) -> Option<&MonotoneCurve<S>> {
        self.curves.iter().find(|c| c.id() == id)
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Sub-family with the given curve indices, same strip.
    pub fn subfamily(&self, indices: &[usize]) -> Result<Self> {
        let curves = indices.iter().map(|&i| self.curves[i].clone()).collect();
        CurveFamily::new(curves, self.strip.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::s_frac;
    use crate::Rat;

    fn p(x: i64, y: i64) -> Point<Rat> {
        Point::new(s_frac(x, 1), s_frac(y, 1))
    }

    #[test]
    fn curve_rejects_non_monotone_vertices() {
        assert!(MonotoneCurve::new("c", vec![p(0, 0)]).is_err());
        assert!(MonotoneCurve::new("c", vec![p(0, 0), p(0, 1)]).is_err());
        assert!(MonotoneCurve::new("c", vec![p(0, 0), p(2, 1), p(1, 3)]).is_err());
        assert!(MonotoneCurve::new("c", vec![p(0, 0), p(2, 1), p(3, 3)]).is_ok());
    }

    #[test]
    fn y_at_interpolates_exactly() {
        let c = MonotoneCurve::new("c", vec![p(0, 0), p(2, 4), p(4, 0)]).unwrap();
        assert_eq!(c.y_at(&s_frac(1, 1)), Some(s_frac(2, 1)));
        assert_eq!(c.y_at(&s_frac(2, 1)), Some(s_frac(4, 1)));
        assert_eq!(c.y_at(&s_frac(3, 1)), Some(s_frac(2, 1)));
        assert_eq!(c.y_at(&s_frac(7, 2)), Some(s_frac(1, 1)));
        assert_eq!(c.y_at(&s_frac(-1, 1)), None);
        assert_eq!(c.y_at(&s_frac(5, 1)), None);
        assert_eq!(c.y_bounds(), (s_frac(0, 1), s_frac(4, 1)));
    }

    #[test]
    fn family_enforces_labels_and_strip() {
        let a = MonotoneCurve::new("a", vec![p(0, 0), p(1, 1)]).unwrap();
        let a2 = MonotoneCurve::new("a", vec![p(0, 2), p(1, 3)]).unwrap();
        let b = MonotoneCurve::new("b", vec![p(0, 2), p(3, 3)]).unwrap();
        assert!(CurveFamily::new(vec![a.clone(), a2], None).is_err());
        assert!(CurveFamily::new(
            vec![a.clone(), b.clone()],
            Some((s_frac(0, 1), s_frac(1, 1)))
        )
        .is_err());
        let fam = CurveFamily::new(vec![a, b], Some((s_frac(0, 1), s_frac(3, 1)))).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(fam.get("b").is_some());
        assert!(fam.get("z").is_none());
    }
}
