//! Coefficient-ring abstractions shared by every polynomial type.
//!
//! The algebra in this crate is written once against [`Ring`] and
//! [`ExactDiv`] and instantiated with arbitrary-precision integers,
//! rationals, floats, intervals and multivariate polynomials.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// A commutative ring with cheap by-reference arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn from_int(v: i64) -> Self;
}

impl<T> Ring for T
where
    T: Clone
        + PartialEq
        + Debug
        + Send
        + Sync
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + FromPrimitive,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    #[inline]
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    #[inline]
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    #[inline]
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    #[inline]
    fn from_int(v: i64) -> Self {
        T::from_i64(v).expect("small integer is representable")
    }
}

/// Rings in which division is available whenever the quotient exists.
///
/// For fields this is ordinary division; for integers and polynomials it is
/// exact division, which must only be called when the divisor divides.
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Self;

    /// Quotient when `divisor` divides `self`, `None` otherwise.
    fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self.exact_div(divisor))
        }
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, divisor: &Self) -> Self {
        debug_assert!((self % divisor).is_zero(), "inexact integer division");
        self / divisor
    }

    fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, divisor);
        r.is_zero().then_some(q)
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

impl ExactDiv for f64 {
    fn exact_div(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

impl ExactDiv for f32 {
    fn exact_div(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

/// Fields: every nonzero element is invertible.
pub trait Field: ExactDiv {
    fn inv(&self) -> Self {
        Self::one().exact_div(self)
    }
}

impl Field for BigRational {}
impl Field for f64 {}
impl Field for f32 {}

/// Scalars with a total order on the values we evaluate at.
pub trait OrderedScalar: Ring + PartialOrd {
    fn signum_i8(&self) -> i8 {
        if self.is_zero() {
            0
        } else if *self > Self::zero() {
            1
        } else {
            -1
        }
    }
    fn to_f64_lossy(&self) -> f64;
}

impl OrderedScalar for BigInt {
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(if self.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
    }
}

impl OrderedScalar for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        rat_to_f64(self)
    }
}

impl OrderedScalar for f64 {
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl OrderedScalar for f32 {
    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

/// Converts a rational to the nearest double, also when numerator and
/// denominator individually overflow `f64`.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    // scale both to ~60 significant bits
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let n = (r.numer() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    let e = shift_n - shift_d;
    (n / d) * 2f64.powi(e.clamp(-2000, 2000) as i32)
}

/// Exact rational value of a finite double.
pub fn f64_to_rat(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite float")
}

/// `num / 2^k` as a rational.
pub fn dyadic(num: BigInt, k: u64) -> BigRational {
    BigRational::new(num, BigInt::one() << k as usize)
}

/// Bit length of |v| (0 for zero).
pub fn bit_length(v: &BigInt) -> u64 {
    v.bits()
}
