//! Heaviside's shifted exponential series
//! `exp(t) ~ sum_{k=-inf}^{inf} t^(k+delta) / Gamma(k+1+delta)` for `t > 0`.
//!
//! The `k >= 0` half is entire; the `k < 0` half is only asymptotic and is
//! cut at its smallest term unless a cut is given. Integer `delta` reduces to
//! the ordinary Taylor series because `1/Gamma` vanishes at the poles.

use num_traits::ToPrimitive;

use crate::arith::rational::{as_i64, factorial};
use crate::arith::{gamma, PrecisionContext, Rational, Real};
use crate::error::{Error, Result};

/// Result of a Heaviside evaluation.
#[derive(Debug, Clone)]
pub struct HeavisideSum<R> {
    pub value: R,
    /// Number of `k < 0` terms included.
    pub k_neg: u64,
}

/// `sum_{k=-k_neg}^{k_pos} t^(k+delta) / Gamma(k+1+delta)`.
///
/// With `k_neg = None` the negative half stops at its smallest term.
pub fn heaviside_exp<R: Real>(
    t: &R,
    delta: &Rational,
    k_pos: u64,
    k_neg: Option<u64>,
    ctx: &PrecisionContext,
) -> Result<HeavisideSum<R>> {
    if !t.is_finite() || *t <= R::zero(ctx) {
        return Err(Error::Domain(format!("heaviside_exp needs t > 0, got {t}")));
    }
    let t = t.at(ctx);
    match as_i64(delta) {
        Some(d) => Ok(integer_shift(&t, d, k_pos, k_neg, ctx)),
        None => fractional_shift(&t, delta, k_pos, k_neg, ctx),
    }
}

/// Integer `delta`: the surviving terms are `t^j / j!` for `j = k + delta >= 0`.
fn integer_shift<R: Real>(
    t: &R,
    delta: i64,
    k_pos: u64,
    k_neg: Option<u64>,
    ctx: &PrecisionContext,
) -> HeavisideSum<R> {
    let hi = k_pos as i64 + delta;
    let k_neg = k_neg.unwrap_or_else(|| delta.max(0) as u64);
    let lo = (delta - k_neg as i64).max(0);
    let mut value = R::zero(ctx);
    if hi >= lo {
        let lo_u = lo as u64;
        let mut term = t.powf(&R::from_i64(lo, ctx)) / R::from_rational(&Rational::from_integer(factorial(lo_u)), ctx);
        for j in lo..=hi {
            value = value + &term;
            term = term * t / R::from_i64(j + 1, ctx);
        }
    }
    HeavisideSum { value, k_neg }
}

fn fractional_shift<R: Real>(
    t: &R,
    delta: &Rational,
    k_pos: u64,
    k_neg: Option<u64>,
    ctx: &PrecisionContext,
) -> Result<HeavisideSum<R>> {
    let d = R::from_rational(delta, ctx);
    let one = R::one(ctx);
    // k = 0 anchor: t^delta / Gamma(1 + delta)
    let anchor = t.powf(&d) / gamma(&(d.clone() + &one), ctx)?;

    let mut value = R::zero(ctx);
    let mut term = anchor.clone();
    for k in 0..=k_pos {
        value = value + &term;
        term = term * t / (R::from_i64(k as i64 + 1, ctx) + &d);
    }

    // backwards: 1/Gamma(k+delta) = (k+delta) / Gamma(k+1+delta)
    let mut used = 0u64;
    let mut term = anchor;
    let mut best = None::<R>;
    let limit = k_neg.unwrap_or_else(|| {
        // terms shrink while |k + delta| < t; allow a little past that point
        t.to_f64()
            .to_u64()
            .unwrap_or(u64::MAX / 4)
            .saturating_mul(2)
            .saturating_add(8)
    });
    for k in 0..limit as i64 {
        term = term * (R::from_i64(-k, ctx) + &d) / t;
        if k_neg.is_none() {
            let mag = term.abs();
            if best.as_ref().is_some_and(|b| mag >= *b) {
                break;
            }
            best = Some(mag);
        }
        value = value + &term;
        used += 1;
    }
    Ok(HeavisideSum { value, k_neg: used })
}
