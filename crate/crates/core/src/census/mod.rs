//! Small-scale exhaustive experiments tying the geometry to the counting:
//! strip-splitting certificates, Dilworth coloring of through-curves,
//! exact trace-bound checks, labelled-graph censuses of double-grounded
//! families, the repeated-set identity for bounded-shatter systems, and a
//! CSV aggregation of census sizes against the exponent models.

mod dilworth;
mod grounded;
mod hrelation;
mod split;
mod table;
mod trace;

pub use dilworth::{dilworth_color, PermutationPoset};
pub use grounded::{enumerate_double_grounded, GroundedCensus};
pub use hrelation::verify_h_relation;
pub use split::{strip_split, SplitNode, SplitTree};
pub use table::{bound_table, Experiment};
pub use trace::{dual_trace_check, trace_bound_check, DualTrace, TraceBound};
