//! Scalar abstraction shared by the weight sums, the Potts energies and
//! polynomial evaluation.
//!
//! Exact types (integers, rationals) compare with `==`; floating types compare
//! with a relative tolerance, see [`FLOAT_TOLERANCE`].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num};

/// Relative tolerance used by the floating weight mode.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

pub trait Scalar: Num + Clone + Debug + FromPrimitive {
    /// Equality in the sense appropriate for the type.
    fn approx_eq(&self, other: &Self) -> bool;

    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count representable in scalar type")
    }
}

macro_rules! exact_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn approx_eq(&self, other: &Self) -> bool {
                self == other
            }
        }
    )*};
}

exact_scalar!(i32, i64, i128, BigInt, BigRational);

impl Scalar for Ratio<i64> {
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn approx_eq(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= (FLOAT_TOLERANCE as $t) * scale
            }
        }
    )*};
}

float_scalar!(f32, f64);

/// `base^exp` for any scalar, by repeated squaring.
pub fn pow<T: Scalar>(base: &T, mut exp: u32) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        b = b.clone() * b;
        exp >>= 1;
    }
    acc
}
