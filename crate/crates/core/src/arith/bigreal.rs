//! MPFR-backed arbitrary precision real.
//!
//! Each value carries its own precision. Binary operations round to nearest
//! at the larger precision of the two operands, so values created under one
//! context stay at that context's working precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use rug::float::Constant;
use rug::integer::Order;
use rug::{Float, Integer};

use super::{PrecisionContext, Rational, Real};

#[derive(Clone, Debug)]
pub struct BigReal(Float);

impl BigReal {
    pub fn from_float(f: Float) -> Self {
        Self(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }
}

fn to_integer(n: &BigInt) -> Integer {
    let (sign, bytes) = n.to_bytes_le();
    let i = Integer::from_digits(&bytes, Order::Lsf);
    if sign == Sign::Minus {
        -i
    } else {
        i
    }
}

/// Converts an exact rational into an MPFR rational.
pub fn to_rug_rational(q: &Rational) -> rug::Rational {
    rug::Rational::from((to_integer(q.numer()), to_integer(q.denom())))
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }

        impl<'a> $tr<&'a BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'a BigReal) -> BigReal {
                let prec = self.0.prec().max(rhs.0.prec());
                BigReal(Float::with_val(prec, (&self.0).$method(&rhs.0)))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Real for BigReal {
    const FIXED_BITS: Option<u32> = None;

    fn from_rational(q: &Rational, ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.working_bits(), &to_rug_rational(q)))
    }

    fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.working_bits(), v))
    }

    fn pi(ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.working_bits(), Constant::Pi))
    }

    fn at(&self, ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.working_bits(), &self.0))
    }

    fn sqrt(&self) -> Self {
        BigReal(self.0.clone().sqrt())
    }

    fn exp(&self) -> Self {
        BigReal(self.0.clone().exp())
    }

    fn ln(&self) -> Self {
        BigReal(self.0.clone().ln())
    }

    fn powf(&self, e: &Self) -> Self {
        let prec = self.0.prec().max(e.0.prec());
        BigReal(Float::with_val(prec, rug::ops::Pow::pow(&self.0, &e.0)))
    }

    fn abs(&self) -> Self {
        BigReal(self.0.clone().abs())
    }

    fn mul_pow2(&self, e: i32) -> Self {
        BigReal(self.0.clone() << e)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn to_decimal(&self) -> String {
        // enough digits to pin the binary value uniquely
        let digits = (self.0.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1;
        self.0.to_string_radix(10, Some(digits))
    }
}
