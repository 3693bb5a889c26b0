//! Curve-family constructions with counted intersection-graph censuses.

pub mod grid;
pub mod staircase;

pub use grid::{
    build_grid, combinatorial_graph, default_scale, grid_census, realize_geometric, Choice,
    ChoiceAssignment, GridIncidence, GridLine,
};
pub use staircase::{staircase_build, staircase_census, StaircaseParams};

use num_bigint::BigUint;

/// Census outcome: the closed-form count, and whether it was confirmed by
/// exhaustive enumeration (skipped when the count exceeds the given limit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub count: BigUint,
    pub verified: bool,
}

impl CensusResult {
    /// log2 of the count for closed-form powers of two, else a float estimate.
    pub fn log2_count(&self) -> f64 {
        let bits = self.count.bits();
        if bits == 0 {
            return 0.0;
        }
        // count = msb * 2^(bits-64) approximately; exact for powers of two.
        let top = (&self.count >> bits.saturating_sub(53)) // keep 53 bits
            .to_u64_digits()
            .first()
            .copied()
            .unwrap_or(0);
        (top as f64).log2() + bits.saturating_sub(53) as f64
    }
}
