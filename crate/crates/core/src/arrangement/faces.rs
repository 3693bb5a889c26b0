//! Faces of the strip subdivision induced by a wiring diagram, and zone
//! complexity along a wire.
//!
//! The strip between the grounds is cut into slabs by the crossing
//! abscissas; slab c (0..=T) times gap g (0..=m, bottom-to-top between
//! consecutive wires) is one slot. A crossing at position p pinches gap p
//! shut, so neighbouring slots merge across a slab boundary exactly when
//! g != p. A face's sides are the wire edges on its boundary; ground walls
//! and the unbounded directions do not count as sides.

use std::collections::BTreeSet;

use crate::error::Result;

use super::wiring::WiringDiagram;
use super::Uf;

pub struct FaceSet {
    wires: Vec<String>,
    side_counts: Vec<usize>,
    /// Per wire: the faces with at least one side on it.
    wire_faces: Vec<BTreeSet<usize>>,
}

impl FaceSet {
    pub fn count(&self) -> usize {
        self.side_counts.len()
    }

    /// Boundary side count per face, in an arbitrary but stable order.
    pub fn side_counts(&self) -> &[usize] {
        &self.side_counts
    }

    pub fn faces_on_wire(&self, wire: &str) -> Result<&BTreeSet<usize>> {
        let i = self
            .wires
            .iter()
            .position(|w| w == wire)
            .ok_or_else(|| crate::error::Error::UnknownWire(wire.to_string()))?;
        Ok(&self.wire_faces[i])
    }

    /// Total side count over the faces supported by the wire.
    pub fn zone(&self, wire: &str) -> Result<usize> {
        Ok(self
            .faces_on_wire(wire)?
            .iter()
            .map(|&f| self.side_counts[f])
            .sum())
    }
}

/// Face census of the diagram's strip subdivision.
pub fn faces(w: &WiringDiagram) -> FaceSet {
    let m = w.m();
    let t_max = w.swaps().len();
    let slot = |c: usize, g: usize| c * (m + 1) + g;
    let mut uf = Uf::new((t_max + 1) * (m + 1));
    for (t, s) in w.swaps().iter().enumerate() {
        let c = t + 1; // slab to the right of swap number c
        for g in 0..=m {
            if g != s.pos {
                uf.union(slot(c - 1, g), slot(c, g));
            }
        }
    }

    // face ids in first-seen slot order
    let mut id_of = vec![usize::MAX; (t_max + 1) * (m + 1)];
    let mut count = 0;
    for s in 0..id_of.len() {
        let r = uf.find(s);
        if id_of[r] == usize::MAX {
            id_of[r] = count;
            count += 1;
        }
    }
    let face = |c: usize, g: usize, uf: &mut Uf| id_of[uf.find(slot(c, g))];

    let tl = w.timeline();
    let mut pos_of = vec![vec![0usize; m]; tl.len()];
    for (t, occ) in tl.iter().enumerate() {
        for (p, &i) in occ.iter().enumerate() {
            pos_of[t][i] = p + 1;
        }
    }
    // slab boundaries where each wire is swapped
    let mut own_events: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut occ: Vec<usize> = (0..m).collect();
    for (t, s) in w.swaps().iter().enumerate() {
        own_events[occ[s.pos - 1]].push(t + 1);
        own_events[occ[s.pos]].push(t + 1);
        occ.swap(s.pos - 1, s.pos);
    }

    let mut side_counts = vec![0usize; count];
    let mut wire_faces: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    for i in 0..m {
        let mut starts = vec![0usize];
        starts.extend(own_events[i].iter().copied());
        for &c0 in &starts {
            // one wire edge spans slabs c0.. up to the wire's next swap;
            // no swap in that range touches positions adjacent to the wire,
            // so the faces above and below are constant along the edge
            let p = pos_of[c0][i];
            let above = face(c0, p, &mut uf);
            let below = face(c0, p - 1, &mut uf);
            side_counts[above] += 1;
            side_counts[below] += 1;
            wire_faces[i].insert(above);
            wire_faces[i].insert(below);
        }
    }

    FaceSet {
        wires: w.wires().to_vec(),
        side_counts,
        wire_faces,
    }
}

/// Sum of side counts over all faces having a side on the given wire.
pub fn zone_complexity(w: &WiringDiagram, wire: &str) -> Result<usize> {
    faces(w).zone(wire)
}
