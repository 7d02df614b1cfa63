//! The scalar abstraction shared by every floating routine.
//!
//! Implemented for `f32`, `f64` (fixed mantissa, context precision is
//! ignored) and [`BigReal`](super::BigReal) (context precision honoured).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Float, ToPrimitive};

use super::{PrecisionContext, Rational};

pub trait Real:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialOrd
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    /// Mantissa width of hardware floats; `None` when precision follows the context.
    const FIXED_BITS: Option<u32>;

    /// Correctly rounded conversion.
    fn from_rational(q: &Rational, ctx: &PrecisionContext) -> Self;
    fn from_i64(v: i64, ctx: &PrecisionContext) -> Self;
    fn pi(ctx: &PrecisionContext) -> Self;

    /// Re-rounds `self` to the working precision of `ctx`.
    fn at(&self, ctx: &PrecisionContext) -> Self;

    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn powf(&self, e: &Self) -> Self;
    fn abs(&self) -> Self;
    /// `self * 2^e`, exact barring overflow.
    fn mul_pow2(&self, e: i32) -> Self;

    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_finite(&self) -> bool;
    fn is_integer(&self) -> bool;
    fn to_f64(&self) -> f64;
    /// Decimal rendering carrying every significant digit of the value.
    fn to_decimal(&self) -> String;

    fn zero(ctx: &PrecisionContext) -> Self {
        Self::from_i64(0, ctx)
    }

    fn one(ctx: &PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    /// Effective mantissa bits under `ctx`.
    fn bits(ctx: &PrecisionContext) -> u32 {
        Self::FIXED_BITS.unwrap_or_else(|| ctx.working_bits())
    }

    /// Relative spacing `2^(1 - bits)`.
    fn epsilon(ctx: &PrecisionContext) -> Self {
        Self::one(ctx).mul_pow2(1 - Self::bits(ctx) as i32)
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

macro_rules! impl_real_for_float {
    ($t:ty, $bits:expr, $to:ident) => {
        impl Real for $t {
            const FIXED_BITS: Option<u32> = Some($bits);

            fn from_rational(q: &Rational, _ctx: &PrecisionContext) -> Self {
                q.$to().unwrap_or(<$t>::NAN)
            }

            fn from_i64(v: i64, _ctx: &PrecisionContext) -> Self {
                v as $t
            }

            fn pi(_ctx: &PrecisionContext) -> Self {
                <$t as num_traits::FloatConst>::PI()
            }

            fn at(&self, _ctx: &PrecisionContext) -> Self {
                *self
            }

            fn sqrt(&self) -> Self {
                Float::sqrt(*self)
            }

            fn exp(&self) -> Self {
                Float::exp(*self)
            }

            fn ln(&self) -> Self {
                Float::ln(*self)
            }

            fn powf(&self, e: &Self) -> Self {
                Float::powf(*self, *e)
            }

            fn abs(&self) -> Self {
                Float::abs(*self)
            }

            fn mul_pow2(&self, e: i32) -> Self {
                *self * Float::powi(2.0 as $t, e)
            }

            fn is_zero(&self) -> bool {
                *self == 0.0
            }

            fn is_negative(&self) -> bool {
                *self < 0.0
            }

            fn is_finite(&self) -> bool {
                Float::is_finite(*self)
            }

            fn is_integer(&self) -> bool {
                Float::is_finite(*self) && Float::fract(*self) == 0.0
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn to_decimal(&self) -> String {
                format!("{:e}", self)
            }
        }
    };
}

impl_real_for_float!(f64, 53, to_f64);
impl_real_for_float!(f32, 24, to_f32);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    #[test]
    fn f64_basics() {
        let ctx = PrecisionContext::default();
        assert_eq!(<f64 as Real>::bits(&ctx), 53);
        assert_eq!(<f64 as Real>::epsilon(&ctx), f64::EPSILON);
        assert_eq!(f64::from_rational(&ratio(1, 4), &ctx), 0.25);
        assert_eq!(f32::from_rational(&ratio(-3, 8), &ctx), -0.375f32);
        assert!(Real::is_integer(&-3.0f64));
        assert!(!Real::is_integer(&0.5f64));
        assert_eq!(Real::mul_pow2(&3.0f64, -2), 0.75);
    }
}
