//! Balanced recursive x-splitting of a family inside a strip.
//!
//! Each node owns an x-interval and classifies the curves meeting its
//! interior: spanning curves (𝒜) versus curves with an endpoint strictly
//! inside (ℬ). Splitting at the median interior-endpoint abscissa leaves at
//! most ⌈p/2⌉ endpoints strictly inside either side, so the tree has depth
//! at most ⌈log2 p⌉ + 1.

use crate::error::{Error, Result};
use crate::geom::CurveFamily;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitNode<S> {
    x_lo: S,
    x_hi: S,
    through: Vec<String>,
    endpoint_curves: Vec<String>,
    p: usize,
    children: Option<Box<[SplitNode<S>; 2]>>,
}

impl<S: Scalar> SplitNode<S> {
    /// The node's x-interval.
    pub fn strip(&self) -> (&S, &S) {
        (&self.x_lo, &self.x_hi)
    }

    /// Labels of curves spanning the whole node interval (𝒜).
    pub fn through(&self) -> &[String] {
        &self.through
    }

    /// Labels of curves with an endpoint strictly inside (ℬ).
    pub fn endpoint_curves(&self) -> &[String] {
        &self.endpoint_curves
    }

    /// Number of curve endpoints strictly inside the node interval.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    pub fn children(&self) -> Option<(&SplitNode<S>, &SplitNode<S>)> {
        self.children.as_ref().map(|c| (&c[0], &c[1]))
    }

    fn depth(&self) -> usize {
        match &self.children {
            None => 1,
            Some(c) => 1 + c[0].depth().max(c[1].depth()),
        }
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a SplitNode<S>>) {
        out.push(self);
        if let Some(c) = &self.children {
            c[0].collect(out);
            c[1].collect(out);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitTree<S> {
    root: SplitNode<S>,
}

impl<S: Scalar> SplitTree<S> {
    pub fn root(&self) -> &SplitNode<S> {
        &self.root
    }

    /// Nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes().iter().filter(|n| n.is_leaf()).count()
    }

    /// All nodes in preorder.
    pub fn nodes(&self) -> Vec<&SplitNode<S>> {
        let mut out = Vec::new();
        self.root.collect(&mut out);
        out
    }
}

/// x-extent of curve `i` in the family.
fn extent<S: Scalar>(f: &CurveFamily<S>, i: usize) -> (&S, &S) {
    let c = &f.curves()[i];
    (&c.first().x, &c.last().x)
}

fn build<S: Scalar>(f: &CurveFamily<S>, cand: Vec<usize>, x_lo: S, x_hi: S) -> SplitNode<S> {
    let mut through = Vec::new();
    let mut endpoint_curves = Vec::new();
    let mut interior: Vec<S> = Vec::new();
    for &i in &cand {
        let (lo, hi) = extent(f, i);
        let mut inside = 0;
        for e in [lo, hi] {
            if *e > x_lo && *e < x_hi {
                interior.push((*e).clone());
                inside += 1;
            }
        }
        if inside > 0 {
            endpoint_curves.push(f.curves()[i].id().to_string());
        } else {
            // No endpoint strictly inside and the extent meets the open
            // interval, so the curve covers it.
            debug_assert!(*lo <= x_lo && *hi >= x_hi);
            through.push(f.curves()[i].id().to_string());
        }
    }
    let p = interior.len();
    if p <= 1 {
        return SplitNode {
            x_lo,
            x_hi,
            through,
            endpoint_curves,
            p,
            children: None,
        };
    }
    interior.sort();
    // The ⌈p/2⌉-th smallest endpoint abscissa: at most ⌈p/2⌉ - 1 endpoints
    // strictly to its left and p - ⌈p/2⌉ strictly to its right.
    let x_star = interior[(p - 1) / 2].clone();
    let pick = |lo: &S, hi: &S| -> Vec<usize> {
        cand.iter()
            .copied()
            .filter(|&i| {
                let (a, b) = extent(f, i);
                a < hi && b > lo
            })
            .collect()
    };
    let left = build(f, pick(&x_lo, &x_star), x_lo.clone(), x_star.clone());
    let right = build(f, pick(&x_star, &x_hi), x_star, x_hi.clone());
    SplitNode {
        x_lo,
        x_hi,
        through,
        endpoint_curves,
        p,
        children: Some(Box::new([left, right])),
    }
}

/// Recursively splits `f` at median endpoint abscissas.
///
/// The root strip is the family's own strip when it has one, else the
/// bounding x-interval. Endpoints exactly on a split line belong to the
/// boundary of the two sides (counted strictly inside neither); the curve
/// ending there stays with the left side only.
///
/// Errors with [`Error::SharedEndpointX`] when two endpoints strictly inside
/// the root strip share an abscissa (median splits need distinct keys).
pub fn strip_split<S: Scalar>(f: &CurveFamily<S>) -> Result<SplitTree<S>> {
    if f.is_empty() {
        return Err(Error::InvalidFamily("no curves to split".into()));
    }
    let (x_lo, x_hi) = match f.strip() {
        Some((a, b)) => (a.clone(), b.clone()),
        None => {
            let mut lo = f.curves()[0].first().x.clone();
            let mut hi = f.curves()[0].last().x.clone();
            for c in f.curves() {
                lo = lo.min(c.first().x.clone());
                hi = hi.max(c.last().x.clone());
            }
            (lo, hi)
        }
    };
    let mut interior: Vec<&S> = Vec::new();
    for c in f.curves() {
        for e in [&c.first().x, &c.last().x] {
            if *e > x_lo && *e < x_hi {
                interior.push(e);
            }
        }
    }
    interior.sort();
    if interior.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::SharedEndpointX);
    }
    let cand = (0..f.len())
        .filter(|&i| {
            let (a, b) = extent(f, i);
            *a < x_hi && *b > x_lo
        })
        .collect();
    Ok(SplitTree {
        root: build(f, cand, x_lo, x_hi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{staircase_build, StaircaseParams};
    use crate::geom::{MonotoneCurve, Point};
    use crate::scalar::s_i64;
    use crate::Rat;

    fn seg(id: &str, x0: i64, y0: i64, x1: i64, y1: i64) -> MonotoneCurve<Rat> {
        MonotoneCurve::segment_curve(
            id,
            Point::new(s_i64(x0), s_i64(y0)),
            Point::new(s_i64(x1), s_i64(y1)),
        )
        .unwrap()
    }

    /// Recomputes each node's curve classification from scratch and checks
    /// the structural invariants.
    fn check_node(f: &CurveFamily<Rat>, node: &SplitNode<Rat>) {
        let (x_lo, x_hi) = node.strip();
        let mut through = Vec::new();
        let mut enders = Vec::new();
        for c in f.curves() {
            let (a, b) = (&c.first().x, &c.last().x);
            if !(a < x_hi && b > x_lo) {
                continue;
            }
            if a > x_lo || b < x_hi {
                enders.push(c.id().to_string());
            } else {
                through.push(c.id().to_string());
            }
        }
        assert_eq!(node.through(), &through[..]);
        assert_eq!(node.endpoint_curves(), &enders[..]);
        assert_eq!(node.is_leaf(), node.p() <= 1);
        if let Some((l, r)) = node.children() {
            let half = node.p().div_ceil(2);
            assert!(l.p() <= half && r.p() <= half);
            assert_eq!(l.strip().0, x_lo);
            assert_eq!(l.strip().1, r.strip().0);
            assert_eq!(r.strip().1, x_hi);
            check_node(f, l);
            check_node(f, r);
        }
    }

    #[test]
    fn through_curves_alone_make_a_single_leaf() {
        let f = CurveFamily::new(
            vec![seg("a", 0, 0, 10, 1), seg("b", 0, 5, 10, 4)],
            Some((s_i64(0), s_i64(10))),
        )
        .unwrap();
        let t = strip_split(&f).unwrap();
        assert_eq!(t.depth(), 1);
        assert!(t.root().is_leaf());
        assert_eq!(t.root().p(), 0);
        assert_eq!(t.root().through(), ["a", "b"]);
        assert!(t.root().endpoint_curves().is_empty());
    }

    #[test]
    fn eight_interior_endpoints_split_in_half() {
        let f = CurveFamily::new(
            vec![
                seg("a", 1, 0, 2, 0),
                seg("b", 3, 2, 5, 2),
                seg("c", 4, 4, 7, 4),
                seg("d", 6, 6, 8, 6),
            ],
            Some((s_i64(0), s_i64(9))),
        )
        .unwrap();
        let t = strip_split(&f).unwrap();
        assert_eq!(t.root().p(), 8);
        let (l, r) = t.root().children().unwrap();
        assert!(l.p() <= 4 && r.p() <= 4);
        // Median of 1..8 picked at the 4th smallest endpoint.
        assert_eq!(*l.strip().1, s_i64::<Rat>(4));
        assert!(t.depth() <= 4); // ceil(log2 8) + 1
        assert!(t.leaf_count() <= 16);
        check_node(&f, t.root());
    }

    #[test]
    fn staircase_family_splits_cleanly() {
        let params = StaircaseParams::new(2, vec![(1, 2, 1), (2, 1, 2)]).unwrap();
        let f: CurveFamily<Rat> = staircase_build(&params).unwrap();
        let t = strip_split(&f).unwrap();
        let p = t.root().p();
        assert!(p >= 2);
        assert!(t.depth() <= (usize::BITS - (p - 1).leading_zeros()) as usize + 1);
        assert!(t.leaf_count() <= 2 * p);
        check_node(&f, t.root());
        // Root covers the whole family, so every curve is classified.
        let root = t.root();
        assert_eq!(root.through().len() + root.endpoint_curves().len(), f.len());
    }

    #[test]
    fn split_line_endpoint_stays_with_the_left_side() {
        // `b` ends exactly on the root median x = 4: the left child records
        // it via its other endpoint, the right child never sees it.
        let f = CurveFamily::new(
            vec![
                seg("a", 1, 0, 9, 0),
                seg("b", 2, 2, 4, 2),
                seg("c", 3, 4, 6, 4),
                seg("d", 5, 6, 7, 6),
            ],
            Some((s_i64(0), s_i64(9))),
        )
        .unwrap();
        // Interior endpoints 1..7 (a's right end sits on the boundary).
        let t = strip_split(&f).unwrap();
        assert_eq!(t.root().p(), 7);
        let (l, r) = t.root().children().unwrap();
        assert_eq!(*l.strip().1, s_i64::<Rat>(4));
        assert!(l.endpoint_curves().contains(&"b".to_string()));
        assert!(!r.endpoint_curves().contains(&"b".to_string()));
        assert!(!r.through().contains(&"b".to_string()));
        check_node(&f, t.root());
    }

    #[test]
    fn shared_interior_abscissa_is_rejected() {
        let f = CurveFamily::new(
            vec![seg("a", 1, 0, 4, 0), seg("b", 2, 2, 4, 3)],
            Some((s_i64(0), s_i64(5))),
        )
        .unwrap();
        assert!(matches!(strip_split(&f), Err(Error::SharedEndpointX)));
    }
}
