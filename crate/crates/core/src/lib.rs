//! Exact-arithmetic toolkit for families of x-monotone curves.
//!
//! The crate provides:
//!
//! - a geometric kernel over exact scalars ([`geom`], [`scalar`]): x-monotone
//!   polylines, crossing predicates, intersection graphs, with degeneracies
//!   detected rather than perturbed;
//! - incidence constructions on integer grids and staircase families, and the
//!   censuses of the intersection graphs they generate ([`constructions`]);
//! - bit-packed set systems: shatter functions, VC dimension, a greedy
//!   separation ordering and the packing codec built on it ([`setsystem`]);
//! - sweeps of double-grounded families into wiring diagrams, face and zone
//!   statistics, vertical decompositions, and random weak cuttings
//!   ([`arrangement`]);
//! - counting and verification layers on top of all of the above ([`census`]).
//!
//! Everything is generic over the coordinate scalar via [`scalar::Scalar`];
//! the default instantiation is the arbitrary-precision rational [`Rat`].

pub mod arrangement;
pub mod census;
pub mod constructions;
pub mod error;
pub mod geom;
pub mod graph;
pub mod scalar;
pub mod setsystem;
pub mod util;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational scalar used by default throughout.
pub type Rat = num_rational::BigRational;
/// A point with [`Rat`] coordinates.
pub type RatPoint = geom::Point<Rat>;
/// An x-monotone curve with [`Rat`] coordinates.
pub type RatCurve = geom::MonotoneCurve<Rat>;
/// A curve family with [`Rat`] coordinates.
pub type RatFamily = geom::CurveFamily<Rat>;

/// Crate version, stamped into report outputs.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One-line tool banner for report headers.
pub fn version_line() -> String {
    format!("pseudoseg {VERSION}")
}
