//! Numerical check of `W{K_nu, I_nu}(z) = 1/z` from the series for `K_nu`
//! and `I_nu`.
//!
//! Both functions are handled in their `e^z`-scaled forms
//!
//! ```text
//! P(z) = e^z K_nu(z) ~ sqrt(pi/2) sum_n a_n z^(-n-1/2)
//! Q(z) = e^z I_nu(z) = C sum_j b_j z^(j+nu),   C = 1 / (2^nu Gamma(nu+1))
//! ```
//!
//! so that `z W{K, I} = z e^(-2z) (P Q' - P' Q)`, with derivatives taken term
//! by term. The reported deviation is that quantity minus one.

use num_traits::Zero;

use super::bessel::{a_coeffs, b_stream};
use crate::arith::rational::{int, ratio};
use crate::arith::{gamma, NuParam, PrecisionContext, Real};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct WronskianReport<R> {
    /// `z W{K_nu, I_nu}(z) - 1`.
    pub deviation: R,
    /// Linearised effect of the first omitted terms of all four series,
    /// plus accumulated rounding.
    pub bound: R,
    pub trunc_k: u64,
    pub trunc_i: u64,
}

fn check_inputs<R: Real>(nu: &NuParam, z: &R, ctx: &PrecisionContext) -> Result<NuParam> {
    if !z.is_finite() || *z <= R::zero(ctx) {
        return Err(Error::Domain(format!("z must be positive, got {}", z.to_f64())));
    }
    nu.clone().admissible()
}

/// Truncation index for the asymptotic `K` series: the sum stops just before
/// its smallest term. Terminating orders return their last non-zero index.
pub fn optimal_k_truncation<R: Real>(nu: &NuParam, z: &R, ctx: &PrecisionContext) -> Result<u64> {
    let nu = check_inputs(nu, z, ctx)?;
    if let Some(m) = nu.as_half_integer() {
        return Ok(m);
    }
    let cap = (4.0 * z.to_f64()).min(1.0e5) as usize + 16;
    let a = a_coeffs(&nu, cap + 1);
    let zi = R::one(ctx) / z;
    let mut prev = R::from_rational(&a[0], ctx).abs();
    let mut zpow = R::one(ctx);
    for (n, an) in a.iter().enumerate().skip(1) {
        zpow = zpow * &zi;
        let mag = R::from_rational(an, ctx).abs() * &zpow;
        if mag >= prev {
            // smallest term sits at n - 1
            return Ok((n as u64).saturating_sub(2));
        }
        prev = mag;
    }
    Ok(cap as u64)
}

/// Number of `I` terms after which the remaining tail is below the working
/// precision relative to the partial sum.
pub fn auto_i_truncation<R: Real>(nu: &NuParam, z: &R, ctx: &PrecisionContext) -> Result<u64> {
    let nu = check_inputs(nu, z, ctx)?;
    let tol = R::epsilon(ctx).mul_pow2(-4);
    let mut s = b_stream(&nu);
    let mut zpow = R::one(ctx);
    let mut sum = R::zero(ctx);
    let peak = 2.0 * z.to_f64();
    for j in 0..1_000_000u64 {
        let t = R::from_rational(&s.term(), ctx).abs() * &zpow;
        sum = sum + &t;
        s.advance()?;
        let next = R::from_rational(&s.term(), ctx).abs() * &zpow * z;
        if (j as f64) > peak && next <= sum.clone() * &tol {
            return Ok(j);
        }
        zpow = zpow * z;
    }
    Err(Error::PrecisionExhausted(
        "I series did not settle within 10^6 terms".into(),
    ))
}

/// Evaluates the deviation of `z W{K_nu, I_nu}(z)` from one.
///
/// `trunc_k` and `trunc_i` are the last retained indices of the `K` and `I`
/// series.
pub fn wronskian_check<R: Real>(
    nu: &NuParam,
    z: &R,
    trunc_k: u64,
    trunc_i: u64,
    ctx: &PrecisionContext,
) -> Result<WronskianReport<R>> {
    let nu = check_inputs(nu, z, ctx)?;
    let z = z.at(ctx);
    let v = R::from_rational(nu.value(), ctx);
    let half = R::one(ctx).mul_pow2(-1);
    let zi = R::one(ctx) / &z;

    // K side: P = sum a_n z^(-n-1/2), P' = sum a_n (-n-1/2) z^(-n-3/2)
    let a = a_coeffs(&nu, trunc_k as usize + 2);
    let mut p = R::zero(ctx);
    let mut dp = R::zero(ctx);
    let mut zpow = R::one(ctx) / z.sqrt(); // z^(-n-1/2)
    let mut k_omitted = (R::zero(ctx), R::zero(ctx));
    for (n, an) in a.iter().enumerate() {
        let an = R::from_rational(an, ctx);
        let expo = -(R::from_i64(n as i64, ctx) + &half);
        let t = an * &zpow;
        let dt = t.clone() * &expo * &zi;
        if n as u64 <= trunc_k {
            p = p + &t;
            dp = dp + &dt;
        } else if n as u64 == trunc_k + 1 {
            k_omitted = (t.abs(), dt.abs());
        }
        zpow = zpow * &zi;
    }

    // I side: Q = sum b_j z^(j+nu), Q' = sum b_j (j+nu) z^(j+nu-1)
    let mut s = b_stream(&nu);
    let mut q = R::zero(ctx);
    let mut dq = R::zero(ctx);
    let mut zpow = z.powf(&v);
    for j in 0..=trunc_i {
        let t = R::from_rational(&s.term(), ctx) * &zpow;
        let dt = t.clone() * (R::from_i64(j as i64, ctx) + &v) * &zi;
        q = q + &t;
        dq = dq + &dt;
        s.advance()?;
        zpow = zpow * &z;
    }
    let i_omitted = i_tail_bounds(&s, &nu, &z, &zpow, &v, ctx)?;

    let sqrt_half_pi = (R::pi(ctx).mul_pow2(-1)).sqrt();
    let c = R::one(ctx) / (R::from_i64(2, ctx).powf(&v) * gamma(&(v.clone() + R::one(ctx)), ctx)?);
    let scale = z.clone() * (-(z.clone().mul_pow2(1))).exp() * sqrt_half_pi * c;

    let w = scale.clone() * (p.clone() * &dq - dp.clone() * &q);
    let deviation = w - R::one(ctx);

    let truncation = scale.abs()
        * (dq.abs() * &k_omitted.0 + p.abs() * &i_omitted.1 + q.abs() * &k_omitted.1 + dp.abs() * &i_omitted.0);
    let rounding = R::epsilon(ctx) * R::from_i64((trunc_k + trunc_i) as i64 + 16, ctx);
    Ok(WronskianReport {
        deviation,
        bound: truncation + rounding,
        trunc_k,
        trunc_i,
    })
}

/// Tail bounds for `Q` and `Q'` beyond the current stream position, from a
/// geometric majorant on the term ratio. Infinite while the ratio is >= 1.
fn i_tail_bounds<R: Real>(
    s: &super::stream::TermStream,
    nu: &NuParam,
    z: &R,
    zpow: &R,
    v: &R,
    ctx: &PrecisionContext,
) -> Result<(R, R)> {
    let j = s.index();
    let bj = s.term();
    if bj.is_zero() {
        return Ok((R::zero(ctx), R::zero(ctx)));
    }
    let t = R::from_rational(&bj, ctx) * zpow;
    let jr = R::from_i64(j as i64, ctx);
    let dt = t.clone() * (jr.clone() + v) / z;

    // b_{j+1} z / b_j = 2 z (j + nu + 1/2) / ((j + 1)(j + 2 nu + 1))
    let nv = nu.value();
    let ratio_exact = (int(j as i64) + nv + ratio(1, 2)) * int(2)
        / ((int(j as i64) + int(1)) * (int(j as i64) + nv * int(2) + int(1)));
    let rho = (R::from_rational(&ratio_exact, ctx) * z).abs();
    let drho = rho.clone() * ((jr.clone() + R::one(ctx) + v) / (jr + v)).abs();
    let one = R::one(ctx);
    let big = R::one(ctx).mul_pow2(1 << 20);
    let tail = |mag: R, r: R| if r < one { mag / (one.clone() - r) } else { big.clone() };
    Ok((tail(t.abs(), rho), tail(dt.abs(), drho)))
}
