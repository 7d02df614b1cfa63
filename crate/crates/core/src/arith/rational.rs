//! Exact rational kernels: Pochhammer products, binomials and text I/O.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn rising_factorial(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut f = x.clone();
    for _ in 0..n {
        if f.is_zero() {
            return Rational::zero();
        }
        acc *= &f;
        f += Rational::one();
    }
    acc
}

/// Falling factorial `<x>_n = x (x-1) ... (x-n+1)`, with `<x>_0 = 1`.
pub fn falling_factorial(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut f = x.clone();
    for _ in 0..n {
        if f.is_zero() {
            return Rational::zero();
        }
        acc *= &f;
        f -= Rational::one();
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc == C(n, i) here, so the division is exact
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

/// Exact `q` with `Gamma(m+1) / Gamma(m+k+1/2) = q / sqrt(pi)`, i.e. `m! / (1/2)_{m+k}`.
pub fn gamma_quotient_exact(m: u64, k: u64) -> Rational {
    Rational::from_integer(factorial(m)) / rising_factorial(&ratio(1, 2), m + k)
}

/// Formats a rational as `p/q` (always with a denominator).
pub fn to_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q`, a plain integer, or a terminating decimal such as `-2.375`,
/// with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_decimal(p).ok_or_else(bad)?;
        let q = parse_decimal(q).ok_or_else(bad)?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(p / q);
    }
    parse_decimal(s).ok_or_else(bad)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let mantissa: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let v = Rational::new(mantissa, scale);
    Some(if neg { -v } else { v })
}

/// `Some(n)` when `q` is an integer that fits in `i64`.
pub fn as_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        i64::try_from(q.numer()).ok()
    } else {
        None
    }
}

/// True when `2q` is an odd integer.
pub fn is_half_odd(q: &Rational) -> bool {
    q.denom() == &BigInt::from(2) && q.numer().is_odd()
}
