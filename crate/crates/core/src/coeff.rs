//! Exact coefficient types.
//!
//! Every series in the crate is generic over a [`Coefficient`]. The default is
//! [`num_bigint::BigInt`]; fixed-width machine integers are accepted as well,
//! but every arithmetic step on them is checked and an overflow panics with
//! `"coefficient overflow"` instead of wrapping.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, Zero};

/// An exact integer ring element usable as a series coefficient.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + FromStr
    + PartialEq
    + Eq
    + Zero
    + One
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("coefficient overflow")
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.checked_add(rhs).expect("coefficient overflow");
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = self.checked_sub(rhs).expect("coefficient overflow");
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        let prod = a.checked_mul(b).expect("coefficient overflow");
        self.add_assign_ref(&prod);
    }

    fn checked_scale(&self, k: i64) -> Self {
        self.checked_mul(&Self::from_int(k))
            .expect("coefficient overflow")
    }
}

impl Coefficient for BigInt {
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_one() {
            *self += b;
        } else if b.is_one() {
            *self += a;
        } else if (-a).is_one() {
            *self -= b;
        } else {
            *self += a * b;
        }
    }
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
