//! Vertical decomposition of a double-grounded family inside its strip:
//! from every crossing, a wall runs up and down to the next curve (or on to
//! infinity), cutting the arrangement into generalized trapezoids — each
//! bounded by at most two curves and at most two walls.
//!
//! Slots are (slab, gap) pairs as in the face census. A crossing at
//! position p closes gap p and its walls cut gaps p-1 and p+1, so slots
//! merge across a slab boundary exactly when g is outside {p-1, p, p+1}.
//! Every event therefore adds three cells: t = m + 1 + 3·(crossings).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geom::{curve_crossings, CurveFamily};
use crate::scalar::Scalar;

use super::sweep::sweep_events;
use super::Uf;

/// Top or bottom boundary of a cell. The infinities are symbolic, never
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VBound {
    NegInf,
    Curve(String),
    PosInf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WallOrigin {
    /// A ground line bounding the strip.
    Ground,
    /// Dropped from the crossing of the two named curves.
    Crossing(String, String),
    /// Dropped from a curve endpoint. Double-grounded input puts every
    /// endpoint on a ground, so decompositions built here never emit it;
    /// it exists for interchange with clipped or partial inputs.
    Endpoint(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall<S> {
    pub x: S,
    pub origin: WallOrigin,
}

#[derive(Clone, Debug)]
pub struct Cell<S> {
    pub bottom: VBound,
    pub top: VBound,
    pub left: Wall<S>,
    pub right: Wall<S>,
    /// Labels of query curves meeting the open cell, in query order.
    pub crossings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VerticalDecomposition<S> {
    pub x0: S,
    pub x1: S,
    pub cells: Vec<Cell<S>>,
    /// Cell index pairs sharing a positive-length piece of wall.
    pub adjacency: Vec<(usize, usize)>,
}

impl<S> VerticalDecomposition<S> {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn max_cell_crossing(&self) -> usize {
        self.cells
            .iter()
            .map(|c| c.crossings.len())
            .max()
            .unwrap_or(0)
    }
}

/// Decomposes the family inside [x0, x1]. The family's own curves bound the
/// cells and never meet their interiors, so all crossing lists stay empty.
pub fn vertical_decomposition<S: Scalar>(
    f: &CurveFamily<S>,
    x0: &S,
    x1: &S,
) -> Result<VerticalDecomposition<S>> {
    let empty = CurveFamily::new(Vec::new(), None)?;
    vertical_decomposition_with_query(f, x0, x1, &empty)
}

/// Decomposes `f` and records, per cell, which `query` curves meet the open
/// cell. Query curves sharing a label with a family member are the cell
/// boundaries themselves and are skipped; the rest must span the same
/// grounds and cross every family curve at most once, transversally, at
/// abscissas distinct from the wall abscissas.
pub fn vertical_decomposition_with_query<S: Scalar>(
    f: &CurveFamily<S>,
    x0: &S,
    x1: &S,
    query: &CurveFamily<S>,
) -> Result<VerticalDecomposition<S>> {
    let (gx0, gx1, order, events) = sweep_events(f)?;
    if gx0 != *x0 || gx1 != *x1 {
        return Err(Error::NotDoubleGrounded(
            "family grounds differ from the requested strip".into(),
        ));
    }

    let m = f.len();
    let t_max = events.len();
    let slot = |c: usize, g: usize| c * (m + 1) + g;

    // 1-based position of each curve per slab, and each event's position
    let mut pos_of = vec![0usize; m];
    for (p, &i) in order.iter().enumerate() {
        pos_of[i] = p + 1;
    }
    let mut slab_pos: Vec<Vec<usize>> = Vec::with_capacity(t_max + 1);
    slab_pos.push(pos_of.clone());
    let mut swap_pos = Vec::with_capacity(t_max);
    for ev in &events {
        let (p, q) = (pos_of[ev.i], pos_of[ev.j]);
        swap_pos.push(p.min(q));
        pos_of[ev.i] = q;
        pos_of[ev.j] = p;
        slab_pos.push(pos_of.clone());
    }

    let mut uf = Uf::new((t_max + 1) * (m + 1));
    for (t, &p) in swap_pos.iter().enumerate() {
        let c = t + 1;
        for g in 0..=m {
            if g + 1 < p || g > p + 1 {
                uf.union(slot(c - 1, g), slot(c, g));
            }
        }
    }

    // cells in first-seen slot order; remember slab range and gap
    let mut id_of = vec![usize::MAX; (t_max + 1) * (m + 1)];
    let mut spans: Vec<(usize, usize, usize)> = Vec::new(); // (first slab, last slab, gap)
    for c in 0..=t_max {
        for g in 0..=m {
            let r = uf.find(slot(c, g));
            if id_of[r] == usize::MAX {
                id_of[r] = spans.len();
                spans.push((c, c, g));
            } else {
                let s = &mut spans[id_of[r]];
                debug_assert!(s.2 == g && s.1 + 1 == c, "cell slabs must be contiguous");
                s.1 = c;
            }
        }
    }

    let occupant = |c: usize, p: usize| -> usize {
        (0..m)
            .find(|&i| slab_pos[c][i] == p)
            .expect("positions are a permutation")
    };
    let label = |i: usize| f.curves()[i].id().to_string();
    let wall_at = |boundary: usize| -> Wall<S> {
        if boundary == 0 {
            Wall {
                x: x0.clone(),
                origin: WallOrigin::Ground,
            }
        } else if boundary == t_max + 1 {
            Wall {
                x: x1.clone(),
                origin: WallOrigin::Ground,
            }
        } else {
            let ev = &events[boundary - 1];
            Wall {
                x: ev.x.clone(),
                origin: WallOrigin::Crossing(label(ev.i), label(ev.j)),
            }
        }
    };

    let mut cells: Vec<Cell<S>> = spans
        .iter()
        .map(|&(first, last, g)| Cell {
            bottom: if g == 0 {
                VBound::NegInf
            } else {
                VBound::Curve(label(occupant(first, g)))
            },
            top: if g == m {
                VBound::PosInf
            } else {
                VBound::Curve(label(occupant(first, g + 1)))
            },
            left: wall_at(first),
            right: wall_at(last + 1),
            crossings: Vec::new(),
        })
        .collect();

    // walls have positive length only in the gaps beside the crossing
    let mut adjacency: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (t, &p) in swap_pos.iter().enumerate() {
        let c = t + 1;
        for g in [p - 1, p + 1] {
            let a = id_of[uf.find(slot(c - 1, g))];
            let b = id_of[uf.find(slot(c, g))];
            adjacency.insert((a.min(b), a.max(b)));
        }
    }

    // walk each query curve through the slabs, tracking how many family
    // curves lie below it; within one slab the visited gaps are contiguous,
    // since leaving a gap and returning would need a second crossing
    let family_labels: BTreeSet<&str> = f.curves().iter().map(|c| c.id()).collect();
    for gamma in query.curves() {
        if family_labels.contains(gamma.id()) {
            continue;
        }
        if gamma.first().x != *x0 || gamma.last().x != *x1 {
            return Err(Error::NotDoubleGrounded(format!(
                "query curve `{}` does not span both grounds",
                gamma.id()
            )));
        }
        // (x of hit, family index, whether that curve started below gamma)
        let mut hits: Vec<(S, usize, bool)> = Vec::new();
        let mut below = 0usize;
        for (k, c) in f.curves().iter().enumerate() {
            let pts = curve_crossings(gamma, c)?;
            if pts.len() > 1 {
                return Err(Error::NotPseudoSegments {
                    a: gamma.id().to_string(),
                    b: c.id().to_string(),
                });
            }
            debug_assert!(c.first().y != gamma.first().y);
            let started_below = c.first().y < gamma.first().y;
            if started_below {
                below += 1;
            }
            if let Some(p) = pts.into_iter().next() {
                hits.push((p.x, k, started_below));
            }
        }
        hits.sort_by(|a, b| a.0.cmp(&b.0));
        for w in hits.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::SharedCrossingX {
                    a: gamma.id().to_string(),
                    b: label(w[0].1),
                    c: gamma.id().to_string(),
                    d: label(w[1].1),
                });
            }
        }

        let mut met: BTreeSet<usize> = BTreeSet::new();
        let mut next = 0usize;
        for c in 0..=t_max {
            let (mut lo_g, mut hi_g) = (below, below);
            while next < hits.len()
                && events.get(c).map_or(true, |ev| hits[next].0 <= ev.x)
            {
                if let Some(ev) = events.get(c) {
                    if hits[next].0 == ev.x {
                        return Err(Error::SharedCrossingX {
                            a: gamma.id().to_string(),
                            b: label(hits[next].1),
                            c: label(ev.i),
                            d: label(ev.j),
                        });
                    }
                }
                if hits[next].2 {
                    below -= 1; // that curve moves above gamma
                } else {
                    below += 1;
                }
                lo_g = lo_g.min(below);
                hi_g = hi_g.max(below);
                next += 1;
            }
            for g in lo_g..=hi_g {
                met.insert(id_of[uf.find(slot(c, g))]);
            }
        }
        for id in met {
            cells[id].crossings.push(gamma.id().to_string());
        }
    }

    Ok(VerticalDecomposition {
        x0: x0.clone(),
        x1: x1.clone(),
        cells,
        adjacency: adjacency.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::wiring::{realize_wiring, WiringDiagram};
    use crate::geom::{MonotoneCurve, Point};
    use crate::scalar::s_frac;
    use crate::Rat;

    fn seg(id: &str, x0: i64, y0: i64, x1: i64, y1: i64) -> MonotoneCurve<Rat> {
        MonotoneCurve::segment_curve(
            id,
            Point::new(s_frac(x0, 1), s_frac(y0, 1)),
            Point::new(s_frac(x1, 1), s_frac(y1, 1)),
        )
        .unwrap()
    }

    fn rat(v: i64) -> Rat {
        s_frac(v, 1)
    }

    fn full_reversal_diagram(m: usize) -> WiringDiagram {
        WiringDiagram::full_reversal(m).unwrap()
    }

    #[test]
    fn single_curve_yields_two_half_planes() {
        let f = CurveFamily::new(vec![seg("a", 0, 0, 4, 1)], None).unwrap();
        let d = vertical_decomposition(&f, &rat(0), &rat(4)).unwrap();
        assert_eq!(d.cell_count(), 2);
        assert!(d.cells.iter().all(|c| c.left.origin == WallOrigin::Ground
            && c.right.origin == WallOrigin::Ground
            && c.crossings.is_empty()));
        assert!(d
            .cells
            .iter()
            .any(|c| c.bottom == VBound::NegInf && c.top == VBound::Curve("a".into())));
        assert!(d
            .cells
            .iter()
            .any(|c| c.bottom == VBound::Curve("a".into()) && c.top == VBound::PosInf));
        assert!(d.adjacency.is_empty());
    }

    #[test]
    fn two_crossing_curves_make_six_cells() {
        let f = CurveFamily::new(vec![seg("a", 0, 0, 4, 4), seg("b", 0, 3, 4, 1)], None).unwrap();
        let d = vertical_decomposition(&f, &rat(0), &rat(4)).unwrap();
        assert_eq!(d.cell_count(), 6);

        // one left wedge, one right wedge, split top, split bottom
        let wedges: Vec<&Cell<Rat>> = d
            .cells
            .iter()
            .filter(|c| {
                matches!(c.bottom, VBound::Curve(_)) && matches!(c.top, VBound::Curve(_))
            })
            .collect();
        assert_eq!(wedges.len(), 2);
        assert!(wedges.iter().any(|c| c.left.origin == WallOrigin::Ground
            && matches!(c.right.origin, WallOrigin::Crossing(..))));
        assert!(wedges.iter().any(|c| c.right.origin == WallOrigin::Ground
            && matches!(c.left.origin, WallOrigin::Crossing(..))));
        let tops = d.cells.iter().filter(|c| c.top == VBound::PosInf).count();
        let bottoms = d
            .cells
            .iter()
            .filter(|c| c.bottom == VBound::NegInf)
            .count();
        assert_eq!((tops, bottoms), (2, 2));
        // top-left/top-right and bottom-left/bottom-right share wall pieces
        assert_eq!(d.adjacency.len(), 2);
    }

    #[test]
    fn pairwise_crossings_give_three_cells_each() {
        for m in 1..=6usize {
            let d = full_reversal_diagram(m);
            let fam: CurveFamily<Rat> = realize_wiring(&d).unwrap();
            let (x0, x1) = (rat(0), rat(d.swaps().len() as i64 + 1));
            let vd = vertical_decomposition(&fam, &x0, &x1).unwrap();
            let pairs = m * (m - 1) / 2;
            assert_eq!(vd.cell_count(), m + 1 + 3 * pairs);
        }
    }

    #[test]
    fn cells_stack_to_cover_every_abscissa() {
        let f = CurveFamily::new(
            vec![
                seg("a", 0, 0, 10, 40),
                seg("b", 0, 10, 10, 30),
                seg("c", 0, 30, 10, 20),
            ],
            None,
        )
        .unwrap();
        let d = vertical_decomposition(&f, &rat(0), &rat(10)).unwrap();
        let mut xs: Vec<Rat> = Vec::new();
        for c in &d.cells {
            xs.push(c.left.x.clone());
            xs.push(c.right.x.clone());
        }
        xs.sort();
        xs.dedup();
        for w in xs.windows(2) {
            let mid = (&w[0] + &w[1]) / rat(2);
            let covering: Vec<&Cell<Rat>> = d
                .cells
                .iter()
                .filter(|c| c.left.x < mid && mid < c.right.x)
                .collect();
            assert_eq!(covering.len(), f.len() + 1);
            // sort by the height of the bottom boundary at mid and check the
            // column chains NegInf -> ... -> PosInf across shared curves
            let height = |b: &VBound| match b {
                VBound::NegInf => None,
                VBound::Curve(l) => Some(f.get(l).unwrap().y_at(&mid).unwrap()),
                VBound::PosInf => unreachable!("bottom is never +inf"),
            };
            let mut chain: Vec<(&VBound, &VBound)> =
                covering.iter().map(|c| (&c.bottom, &c.top)).collect();
            chain.sort_by(|a, b| match (height(a.0), height(b.0)) {
                (None, None) => std::cmp::Ordering::Equal,
                (None, _) => std::cmp::Ordering::Less,
                (_, None) => std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => x.cmp(&y),
            });
            assert_eq!(chain.first().unwrap().0, &VBound::NegInf);
            assert_eq!(chain.last().unwrap().1, &VBound::PosInf);
            for pair in chain.windows(2) {
                assert_eq!(pair[0].1, pair[1].0, "consecutive cells share a curve");
            }
        }
    }

    #[test]
    fn query_curves_are_counted_into_open_cells() {
        let f = CurveFamily::new(vec![seg("a", 0, 0, 4, 0)], None).unwrap();
        let q = CurveFamily::new(vec![seg("a", 0, 0, 4, 0), seg("g", 0, -1, 4, 1)], None)
            .unwrap();
        let d = vertical_decomposition_with_query(&f, &rat(0), &rat(4), &q).unwrap();
        assert_eq!(d.cell_count(), 2);
        // g passes through both half-planes; a itself is skipped
        for c in &d.cells {
            assert_eq!(c.crossings, vec!["g".to_string()]);
        }
        assert_eq!(d.max_cell_crossing(), 1);
    }

    #[test]
    fn self_query_meets_no_open_cell() {
        let f = CurveFamily::new(
            vec![
                seg("a", 0, 0, 10, 40),
                seg("b", 0, 10, 10, 30),
                seg("c", 0, 30, 10, 20),
            ],
            None,
        )
        .unwrap();
        let d = vertical_decomposition_with_query(&f, &rat(0), &rat(10), &f).unwrap();
        assert_eq!(d.max_cell_crossing(), 0);
    }

    #[test]
    fn query_walk_visits_exactly_the_pierced_cells() {
        // a: y = x, b: y = 3 - x/2, crossing at (2, 2)
        let f = CurveFamily::new(vec![seg("a", 0, 0, 4, 4), seg("b", 0, 3, 4, 1)], None).unwrap();
        // g: y = 1 + x/12 starts between a and b, drops under a at 12/11,
        // then rises over b at 24/7 — wedge, bottom-left, bottom-right, wedge
        let g = MonotoneCurve::segment_curve(
            "g",
            Point::new(s_frac(0, 1), s_frac(1, 1)),
            Point::new(s_frac(4, 1), s_frac(4, 3)),
        )
        .unwrap();
        let q = CurveFamily::new(vec![g], None).unwrap();
        let d = vertical_decomposition_with_query(&f, &rat(0), &rat(4), &q).unwrap();

        let met: Vec<(&VBound, &VBound)> = d
            .cells
            .iter()
            .filter(|c| !c.crossings.is_empty())
            .map(|c| (&c.bottom, &c.top))
            .collect();
        assert_eq!(met.len(), 4);
        let a = VBound::Curve("a".into());
        let b = VBound::Curve("b".into());
        for want in [
            (&a, &b),                // left wedge
            (&VBound::NegInf, &a),   // bottom left
            (&VBound::NegInf, &b),   // bottom right
            (&b, &a),                // right wedge
        ] {
            assert!(met.contains(&want), "missing cell {:?}", want);
        }
        assert_eq!(d.max_cell_crossing(), 1);
    }

    #[test]
    fn query_crossing_at_a_wall_is_rejected() {
        // family crossing (wall) at x = 2; query hits curve c also at x = 2
        let f = CurveFamily::new(
            vec![
                seg("a", 0, 0, 4, 4),
                seg("b", 0, 3, 4, 1),
                seg("c", 0, 10, 4, 10),
            ],
            None,
        )
        .unwrap();
        let g = seg("g", 0, 8, 4, 12);
        let q = CurveFamily::new(vec![g], None).unwrap();
        assert!(matches!(
            vertical_decomposition_with_query(&f, &rat(0), &rat(4), &q),
            Err(Error::SharedCrossingX { .. })
        ));

        // a query through the triple point collides with both curves at once
        let t = seg("t", 0, 4, 4, 0);
        let q2 = CurveFamily::new(vec![t], None).unwrap();
        let f2 =
            CurveFamily::new(vec![seg("a", 0, 0, 4, 4), seg("b", 0, 3, 4, 1)], None).unwrap();
        assert!(matches!(
            vertical_decomposition_with_query(&f2, &rat(0), &rat(4), &q2),
            Err(Error::SharedCrossingX { .. })
        ));
    }
}
