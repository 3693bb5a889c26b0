//! Sweeping a double-grounded family into its wiring diagram.

use crate::error::{Error, Result};
use crate::geom::{curve_crossings, double_grounds, CurveFamily};
use crate::scalar::Scalar;

use super::wiring::{Swap, WiringDiagram};

/// One proper crossing between family members `i < j`.
pub(crate) struct CrossEvent<S> {
    pub x: S,
    pub i: usize,
    pub j: usize,
}

/// Grounds, the bottom-to-top curve order at the left ground, and all
/// crossing events sorted by x. Rejects pairs crossing twice, improper
/// contacts, and crossings sharing an abscissa — the sweep order must be
/// unambiguous.
pub(crate) fn sweep_events<S: Scalar>(
    f: &CurveFamily<S>,
) -> Result<(S, S, Vec<usize>, Vec<CrossEvent<S>>)> {
    let (x0, x1) = double_grounds(f)?;
    let mut events: Vec<CrossEvent<S>> = Vec::new();
    for i in 0..f.len() {
        for j in (i + 1)..f.len() {
            let (a, b) = (&f.curves()[i], &f.curves()[j]);
            let pts = curve_crossings(a, b)?;
            if pts.len() > 1 {
                return Err(Error::NotPseudoSegments {
                    a: a.id().to_string(),
                    b: b.id().to_string(),
                });
            }
            if let Some(p) = pts.into_iter().next() {
                events.push(CrossEvent {
                    x: p.x,
                    i,
                    j,
                });
            }
        }
    }
    events.sort_by(|a, b| a.x.cmp(&b.x));
    for w in events.windows(2) {
        if w[0].x == w[1].x {
            return Err(Error::SharedCrossingX {
                a: f.curves()[w[0].i].id().to_string(),
                b: f.curves()[w[0].j].id().to_string(),
                c: f.curves()[w[1].i].id().to_string(),
                d: f.curves()[w[1].j].id().to_string(),
            });
        }
    }
    // Left-ground heights are distinct: equal heights would mean a shared
    // endpoint, already rejected as a degenerate contact above.
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by(|&a, &b| f.curves()[a].first().y.cmp(&f.curves()[b].first().y));
    debug_assert!(order
        .windows(2)
        .all(|w| f.curves()[w[0]].first().y != f.curves()[w[1]].first().y));
    Ok((x0, x1, order, events))
}

/// Sweeps a vertical line across the family and records the order changes.
/// Wires come out in left-ground bottom-to-top order; swaps in increasing
/// crossing-x order.
pub fn sweep<S: Scalar>(f: &CurveFamily<S>) -> Result<WiringDiagram> {
    let (_, _, order, events) = sweep_events(f)?;
    let wires: Vec<String> = order
        .iter()
        .map(|&i| f.curves()[i].id().to_string())
        .collect();
    let mut pos_of = vec![0usize; f.len()];
    for (p, &i) in order.iter().enumerate() {
        pos_of[i] = p;
    }
    let mut occ = order.clone();
    let mut swaps = Vec::with_capacity(events.len());
    for ev in &events {
        let (p, q) = (pos_of[ev.i], pos_of[ev.j]);
        let lo = p.min(q);
        // with distinct crossing abscissas the two curves are adjacent when
        // they cross: anything between would cross one of them at the same x
        assert!(
            p.max(q) == lo + 1,
            "crossing curves not adjacent in the sweep order"
        );
        swaps.push(Swap::new(
            lo + 1,
            f.curves()[occ[lo]].id(),
            f.curves()[occ[lo + 1]].id(),
        ));
        occ.swap(lo, lo + 1);
        pos_of[ev.i] = q;
        pos_of[ev.j] = p;
    }
    WiringDiagram::new(wires, swaps)
}
