//! Coefficient rings for Laurent polynomials in `t`.
//!
//! Everything in this crate is exact. Coefficients live in a ring of integers
//! that is either a fixed-width primitive (with every operation overflow
//! checked) or an arbitrary precision [`BigInt`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Zero};

/// An exact integer type usable as a coefficient of [`crate::Laurent`].
///
/// Arithmetic must be performed through the `checked_*` methods; a `None`
/// result is reported as [`crate::Error::Overflow`] by the callers.
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Negation that reports overflow (`-i64::MIN`).
    fn checked_negate(&self) -> Option<Self>;

    fn from_int(v: i64) -> Option<Self> {
        Self::from_i64(v)
    }
}

macro_rules! impl_primitive_coefficient {
    ($($t:ty),*) => {
        $(
            impl Coefficient for $t {
                fn checked_negate(&self) -> Option<Self> {
                    self.checked_neg()
                }
            }
        )*
    };
}

impl_primitive_coefficient!(i32, i64, i128);

impl Coefficient for BigInt {
    fn checked_negate(&self) -> Option<Self> {
        Some(-self)
    }
}
