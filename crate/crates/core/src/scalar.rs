//! Scalar traits the exact kernels are generic over.
//!
//! Counts use [`Natural`]: any exact unsigned integer with checked arithmetic.
//! `u64` and `u128` work for small parameters and report overflow instead of
//! wrapping; `BigUint` never overflows. Rational computations use
//! `Ratio<I>` for an [`RationalBase`] integer `I` (`i64`, `i128` or `BigInt`).

use std::fmt::{Debug, Display};

use num_bigint::ToBigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact nonnegative integer with checked arithmetic.
pub trait Natural:
    Clone
    + Ord
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + ToBigInt
    + Debug
    + Display
    + Send
    + Sync
{
}

impl<T> Natural for T where
    T: Clone
        + Ord
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + ToBigInt
        + Debug
        + Display
        + Send
        + Sync
{
}

/// Signed integer usable as numerator/denominator of an exact rational.
pub trait RationalBase:
    Integer + Signed + Clone + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToBigInt + Debug + Display + Send + Sync
{
}

impl<T> RationalBase for T where
    T: Integer
        + Signed
        + Clone
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToBigInt
        + Debug
        + Display
        + Send
        + Sync
{
}

pub(crate) fn add<T: Natural>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sub<T: Natural>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul<T: Natural>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn from_u64<T: Natural>(v: u64, ctx: &'static str) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow(ctx))
}

pub(crate) fn rat_from<I: RationalBase>(v: i64, ctx: &'static str) -> Result<Ratio<I>> {
    I::from_i64(v).map(Ratio::from_integer).ok_or(Error::Overflow(ctx))
}

pub(crate) fn rat_add<I: RationalBase>(a: &Ratio<I>, b: &Ratio<I>, ctx: &'static str) -> Result<Ratio<I>> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn rat_mul<I: RationalBase>(a: &Ratio<I>, b: &Ratio<I>, ctx: &'static str) -> Result<Ratio<I>> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

/// Natural logarithm of a large integer, accurate to double precision.
pub fn ln_big(v: &num_bigint::BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let top = (v >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
