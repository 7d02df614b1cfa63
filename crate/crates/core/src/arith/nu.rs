use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::rational::{is_half_odd, parse_rational, to_pq};
use super::Rational;
use crate::error::{Error, Result};

/// The Bessel order `nu`, held exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NuParam(Rational);

impl NuParam {
    pub fn new(value: Rational) -> Self {
        Self(value)
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_rational(s).map(Self)
    }

    /// `nu = m + 1/2`.
    pub fn half_integer(m: u64) -> Self {
        Self(Rational::new(BigInt::from(2 * m + 1), BigInt::from(2)))
    }

    pub fn integer(m: u64) -> Self {
        Self(Rational::from_integer(BigInt::from(m)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// True for `nu` in `{-1/2, -1, -3/2, -2, ...}`.
    pub fn is_excluded(&self) -> bool {
        let twice = &self.0 * BigInt::from(2);
        twice.is_integer() && twice.is_negative()
    }

    /// Fails with `InvalidOrder` for excluded orders.
    pub fn admissible(self) -> Result<Self> {
        if self.is_excluded() {
            Err(Error::InvalidOrder(to_pq(&self.0)))
        } else {
            Ok(self)
        }
    }

    /// `Some(m)` when `nu = m + 1/2` with `m >= 0`.
    pub fn as_half_integer(&self) -> Option<u64> {
        if is_half_odd(&self.0) && self.0.is_positive() {
            (self.0.numer() / BigInt::from(2)).to_u64()
        } else {
            None
        }
    }

    /// `Some(m)` when `nu = m` with `m >= 0`.
    pub fn as_integer(&self) -> Option<u64> {
        if self.0.is_integer() {
            self.0.numer().to_u64()
        } else {
            None
        }
    }
}

impl std::fmt::Display for NuParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&to_pq(&self.0))
    }
}
