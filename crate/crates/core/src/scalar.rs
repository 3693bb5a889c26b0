//! Scalar bound for exact coordinate arithmetic.
//!
//! The geometric kernel is generic over any ordered exact field exposed
//! through num-traits. Requiring `Ord` (total order) rules out IEEE floats
//! by construction; the intended instantiation is [`crate::Rat`], with
//! fixed-width `Ratio<i64>` as a faster option when coordinates are known
//! to stay small.

use num_traits::{FromPrimitive, Num, Signed};

pub trait Scalar: Num + Signed + Ord + Clone + FromPrimitive + std::fmt::Debug {}

impl<T> Scalar for T where T: Num + Signed + Ord + Clone + FromPrimitive + std::fmt::Debug {}

/// Scalar from a small signed integer.
pub fn s_i64<S: Scalar>(v: i64) -> S {
    S::from_i64(v).expect("scalar must represent small integers")
}

/// The scalar `num / den`; `den` must be nonzero.
pub fn s_frac<S: Scalar>(num: i64, den: i64) -> S {
    assert!(den != 0, "zero denominator");
    s_i64::<S>(num) / s_i64::<S>(den)
}

/// `2^r` as a scalar.
pub fn s_pow2<S: Scalar>(r: u32) -> S {
    let two = s_i64::<S>(2);
    let mut out = S::one();
    for _ in 0..r {
        out = out * two.clone();
    }
    out
}
