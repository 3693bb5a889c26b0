//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid curve `{id}`: {reason}")]
    InvalidCurve { id: String, reason: String },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    /// Genericity failure: a non-transversal contact between two curves,
    /// witnessed by the offending segment pair (0-based segment indices).
    #[error("degenerate contact: curve `{a}` segment {a_seg} vs curve `{b}` segment {b_seg}")]
    Degenerate {
        a: String,
        a_seg: usize,
        b: String,
        b_seg: usize,
    },

    #[error("invalid through family: {0}")]
    InvalidThroughs(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("choice assignment does not match the incidence structure: {0}")]
    ChoiceMismatch(String),

    /// A produced geometric family failed its own postcondition check.
    /// Treated as an internal bug, surfaced for debugging.
    #[error("realization failed postcondition: {0}")]
    RealizationFailure(String),

    /// An exhaustive census contradicted the counting formula (internal bug).
    #[error("census mismatch: {0}")]
    CensusMismatch(String),

    #[error("ground size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("work budget exceeded: needs {needed} elementary operations, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("shatter hypothesis failed at z = {z}: observed {value} > c * z^d")]
    ShatterHypothesisFailed { z: usize, value: u64 },

    #[error("malformed stream: {0}")]
    MalformedStream(String),

    /// Malformed textual or JSON input.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("crossings share an x-coordinate: pair (`{a}`, `{b}`) and pair (`{c}`, `{d}`)")]
    SharedCrossingX {
        a: String,
        b: String,
        c: String,
        d: String,
    },

    #[error("family is not double-grounded: {0}")]
    NotDoubleGrounded(String),

    #[error("curves `{a}` and `{b}` cross more than once")]
    NotPseudoSegments { a: String, b: String },

    #[error("two endpoints share an x-coordinate inside the strip")]
    SharedEndpointX,

    #[error("instance too large: {what} = {got}, maximum {max}")]
    TooLarge {
        what: &'static str,
        got: usize,
        max: usize,
    },

    #[error("unknown wire `{0}`")]
    UnknownWire(String),

    #[error("no acceptable cutting within {attempts} attempts")]
    RetryLimit { attempts: u32 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
