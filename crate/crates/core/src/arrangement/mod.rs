//! Swept arrangements of double-grounded curves: wiring diagrams and
//! allowable sequences, strip faces and zones, vertical decompositions,
//! and randomized weak cuttings.

mod cutting;
mod faces;
mod sweep;
mod vdecomp;
mod wiring;

pub use cutting::{weak_cutting, CuttingResult};
pub use faces::{faces, zone_complexity, FaceSet};
pub use sweep::sweep;
pub use vdecomp::{
    vertical_decomposition, vertical_decomposition_with_query, Cell, VBound,
    VerticalDecomposition, Wall, WallOrigin,
};
pub use wiring::{
    enumerate_full_allowable, realize_wiring, x_iso_canonical, Swap, WiringDiagram,
};

/// Union-find with path halving, used to glue slab-and-gap slots into faces
/// and cells.
pub(crate) struct Uf {
    parent: Vec<usize>,
}

impl Uf {
    pub(crate) fn new(n: usize) -> Self {
        Uf {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
