//! The formal gamma-quotient expansion obtained by matching the Bessel
//! Wronskian term by term against the shifted exponential series.
//!
//! ```text
//! Gamma(nu+1) / Gamma(nu+k+1/2) ~ sqrt(pi) / 2^(2nu) * sum_n T_n
//! T_n = (nu+1/2)_n <nu-1/2>_n (nu+1/2)_{k+n} (k+nu+2n+1/2) / (n! (k+n)! (2nu+1)_{k+n})
//! ```
//!
//! For `nu = m + 1/2` the factor `<m>_n` kills every term past `n = m`, so the
//! sum is finite and exact. For other orders the series is treated as formal:
//! [`gamma_quotient_expansion`] reports how close its best partial sum gets to
//! the true quotient rather than asserting convergence.

use num_traits::{Signed, Zero};

use super::bessel::{a_coeffs, b_coeffs};
use super::stream::TermStream;
use crate::arith::rational::{factorial, int, ratio, rising_factorial};
use crate::arith::{gamma, gamma_quotient_exact, NuParam, PrecisionContext, Rational, Real};
use crate::error::{Error, Result};

/// Partial sum `sum_{n=max(0,-k)}^{upper} a_n(nu) b_{n+k}(nu) (k+2n+nu+1/2)`.
pub fn c_coeff_partial(nu: &NuParam, k: i64, upper: u64) -> Result<Rational> {
    let start = if k < 0 { k.unsigned_abs() } else { 0 };
    if start > upper {
        return Ok(Rational::zero());
    }
    let a = a_coeffs(nu, upper as usize + 1);
    let b_len = (upper as i64 + k + 1) as usize;
    let b = b_coeffs(nu, b_len)?;
    let mut sum = Rational::zero();
    for n in start..=upper {
        let an = &a[n as usize];
        if an.is_zero() {
            continue;
        }
        let j = (n as i64 + k) as usize;
        let linear = int(k) + int(2 * n as i64) + nu.value() + ratio(1, 2);
        sum += an * &b[j] * linear;
    }
    Ok(sum)
}

/// Exact `c_k(nu)` for `nu = m + 1/2`, where the defining sum is finite.
pub fn c_coeff_half_integer(m: u64, k: i64) -> Result<Rational> {
    c_coeff_partial(&NuParam::half_integer(m), k, m)
}

/// Stream of the summands `T_n` for fixed `nu` and `k`.
pub fn expansion_stream(nu: &NuParam, k: u64) -> Result<TermStream> {
    let v = nu.value();
    let half = ratio(1, 2);
    let two_nu_1 = v * int(2) + int(1);
    let pk = rising_factorial(&(v + &half), k);
    let dk = rising_factorial(&two_nu_1, k);
    if dk.is_zero() {
        return Err(Error::InvalidOrder(nu.to_string()));
    }
    let prefactor = pk / (dk * Rational::from_integer(factorial(k)));
    let kq = int(k as i64);
    Ok(TermStream::new(
        prefactor,
        vec![v + &half, &half - v, v + &half + &kq],
        vec![int(1), &kq + int(1), two_nu_1 + &kq],
        int(-1),
    )
    .with_linear(&kq + v + &half, int(2)))
}

/// Exact value of `Gamma(nu+1) / Gamma(nu+k+1/2)` as `q * sqrt(pi)^e`, when
/// one exists (integer or half-integer order).
pub fn exact_gamma_quotient(nu: &NuParam, k: u64) -> Option<(Rational, i32)> {
    if let Some(m) = nu.as_integer() {
        return Some((gamma_quotient_exact(m, k), -1));
    }
    if let Some(m) = nu.as_half_integer() {
        // Gamma(m+3/2) / Gamma(m+k+1) = (1/2)_{m+1} sqrt(pi) / (m+k)!
        let q = rising_factorial(&ratio(1, 2), m + 1) / Rational::from_integer(factorial(m + k));
        return Some((q, 1));
    }
    None
}

/// `Gamma(nu+1) / Gamma(nu+k+1/2)`, from closed forms when available and
/// from the Spouge gamma otherwise.
pub fn gamma_quotient_reference<R: Real>(nu: &NuParam, k: u64, ctx: &PrecisionContext) -> Result<R> {
    if let Some((q, e)) = exact_gamma_quotient(nu, k) {
        let sqrt_pi = R::pi(ctx).sqrt();
        let q = R::from_rational(&q, ctx);
        return Ok(if e > 0 { q * sqrt_pi } else { q / sqrt_pi });
    }
    let v = nu.value();
    let num = gamma(&R::from_rational(&(v + int(1)), ctx), ctx)?;
    let den = gamma(&R::from_rational(&(v + int(k as i64) + ratio(1, 2)), ctx), ctx)?;
    Ok(num / den)
}

/// Outcome of summing the formal expansion for one `(nu, k)`.
#[derive(Debug, Clone)]
pub struct FormalExpansionDiagnostics<R> {
    pub nu: NuParam,
    pub k: u64,
    /// `sqrt(pi)/2^(2nu) * sum_{n<=N} T_n` for `N = 0, 1, ...`.
    pub partial_sums: Vec<R>,
    /// Index of the smallest `|T_n|`; for a terminating series, the last
    /// non-zero term, where the sum is already complete.
    pub min_term_index: u64,
    pub best_relative_error: R,
    pub reference_value: R,
    /// Whether the series ended with an exact zero term.
    pub terminated: bool,
}

impl<R: Real> FormalExpansionDiagnostics<R> {
    pub fn best_partial_sum(&self) -> &R {
        &self.partial_sums[self.min_term_index as usize]
    }

    pub fn terms_computed(&self) -> usize {
        self.partial_sums.len()
    }
}

pub fn gamma_quotient_expansion<R: Real>(
    nu: &NuParam,
    k: u64,
    max_terms: usize,
    ctx: &PrecisionContext,
) -> Result<FormalExpansionDiagnostics<R>> {
    let nu = nu.clone().admissible()?;
    if max_terms == 0 {
        return Err(Error::Domain("max_terms must be positive".into()));
    }
    let mut stream = expansion_stream(&nu, k)?;

    // sqrt(pi) / 2^(2 nu)
    let two_nu = R::from_rational(&(nu.value() * int(2)), ctx);
    let prefactor = R::pi(ctx).sqrt() / R::from_i64(2, ctx).powf(&two_nu);

    let mut partial_sums = Vec::with_capacity(max_terms);
    let mut running = R::zero(ctx);
    let mut min_index = 0u64;
    let mut min_abs: Option<Rational> = None;
    let mut terminated = false;
    for n in 0..max_terms as u64 {
        let t = stream.next_term()?;
        running = running + R::from_rational(&t, ctx);
        partial_sums.push(running.clone() * &prefactor);
        let a = t.abs();
        if !a.is_zero() && min_abs.as_ref().is_none_or(|m| a < *m) {
            min_abs = Some(a);
            min_index = n;
        }
        if stream.terminated() {
            terminated = true;
            break;
        }
    }
    if terminated {
        min_index = (partial_sums.len() - 1) as u64;
    }

    let reference_value: R = gamma_quotient_reference(&nu, k, ctx)?;
    let best = &partial_sums[min_index as usize];
    let best_relative_error = ((best.clone() - &reference_value) / &reference_value).abs();
    Ok(FormalExpansionDiagnostics {
        nu,
        k,
        partial_sums,
        min_term_index: min_index,
        best_relative_error,
        reference_value,
        terminated,
    })
}

/// Residuals `(k+nu-1/2) c_k - 2 c_{k-1}` for `k = 1..=k_max`, exact.
///
/// Only defined for `nu = m + 1/2`, where each `c_k` is a finite sum.
pub fn recurrence_residual(nu: &NuParam, k_max: u64) -> Result<Vec<Rational>> {
    let m = nu
        .as_half_integer()
        .ok_or_else(|| Error::InvalidOrder(format!("{nu} (need nu = m + 1/2, m >= 0)")))?;
    let mut prev = c_coeff_half_integer(m, 0)?;
    let mut out = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max as i64 {
        let ck = c_coeff_half_integer(m, k)?;
        let factor = int(k) + nu.value() - ratio(1, 2);
        out.push(factor * &ck - int(2) * &prev);
        prev = ck;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::falling_factorial;
    use crate::arith::BigReal;
    use crate::series::bessel::b_coeff;

    fn term_direct(nu: &Rational, k: u64, n: u64) -> Rational {
        let h = ratio(1, 2);
        let num = rising_factorial(&(nu + &h), n)
            * falling_factorial(&(nu - &h), n)
            * rising_factorial(&(nu + &h), k + n)
            * (int(k as i64) + nu + int(2 * n as i64) + &h);
        let den =
            Rational::from_integer(factorial(n) * factorial(k + n)) * rising_factorial(&(nu * int(2) + int(1)), k + n);
        num / den
    }

    #[test]
    fn c_examples() {
        let half = NuParam::half_integer(0);
        for k in 0..8i64 {
            let want = b_coeff(&half, k as u64).unwrap() * int(k + 1);
            for upper in [0, 3] {
                assert_eq!(c_coeff_partial(&half, k, upper).unwrap(), want);
            }
        }
        let three_halves = NuParam::half_integer(1);
        for k in [0i64, 3, 7] {
            assert_eq!(
                c_coeff_partial(&three_halves, k, 1).unwrap(),
                c_coeff_partial(&three_halves, k, 5).unwrap()
            );
        }
        // b_2(0) = 3/4, times (2 + 0 + 0 + 1/2)
        assert_eq!(c_coeff_partial(&NuParam::integer(0), 2, 0).unwrap(), ratio(15, 8));
    }

    #[test]
    fn c_skips_undefined_b() {
        // k = -2: only n >= 2 contribute
        let nu = NuParam::half_integer(3);
        let got = c_coeff_partial(&nu, -2, 3).unwrap();
        let a = a_coeffs(&nu, 4);
        let b = b_coeffs(&nu, 2).unwrap();
        let want = &a[2] * &b[0] * (int(-2) + int(4) + ratio(7, 2) + ratio(1, 2))
            + &a[3] * &b[1] * (int(-2) + int(6) + ratio(7, 2) + ratio(1, 2));
        assert_eq!(got, want);
        assert_eq!(c_coeff_partial(&nu, -5, 3).unwrap(), int(0));
    }

    #[test]
    fn half_integer_c_matches_exponential_coefficients() {
        // sqrt(pi) c_k / (2^(nu+1/2) Gamma(nu+1)) = 2^(k+nu-1/2) / Gamma(k+nu+1/2) at nu = m + 1/2
        // reduces to c_k = 2^(k+2m+1) (1/2)_{m+1} / (k+m)!
        for m in 0..6u64 {
            for k in 0..15u64 {
                let want = int(2).pow((k + 2 * m + 1) as i32) * rising_factorial(&ratio(1, 2), m + 1)
                    / Rational::from_integer(factorial(k + m));
                assert_eq!(c_coeff_half_integer(m, k as i64).unwrap(), want, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn stream_matches_closed_form_summand() {
        for nu in [ratio(0, 1), ratio(1, 4), ratio(5, 2), ratio(-1, 3), ratio(3, 1)] {
            for k in [0u64, 1, 4] {
                let mut s = expansion_stream(&NuParam::new(nu.clone()), k).unwrap();
                for n in 0..15 {
                    assert_eq!(s.next_term().unwrap(), term_direct(&nu, k, n), "nu={nu} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn terminating_single_term() {
        // nu = 1/2, k = 0: one term, equal to Gamma(3/2) / Gamma(1) = sqrt(pi)/2
        let ctx = PrecisionContext::new(128).unwrap();
        let d: FormalExpansionDiagnostics<BigReal> =
            gamma_quotient_expansion(&NuParam::half_integer(0), 0, 50, &ctx).unwrap();
        assert!(d.terminated);
        assert_eq!(d.partial_sums.len(), 1);
        assert_eq!(d.min_term_index, 0);
        let want = BigReal::pi(&ctx).sqrt().mul_pow2(-1);
        let rel = ((d.best_partial_sum().clone() - &want) / &want).abs().to_f64();
        assert!(rel < 2f64.powi(-120));
        assert!(d.best_relative_error.to_f64() < 2f64.powi(-120));
    }

    #[test]
    fn integer_order_reference() {
        let ctx = PrecisionContext::new(128).unwrap();
        let d: FormalExpansionDiagnostics<BigReal> =
            gamma_quotient_expansion(&NuParam::integer(0), 2, 200, &ctx).unwrap();
        let want = BigReal::from_rational(&ratio(4, 3), &ctx) / BigReal::pi(&ctx).sqrt();
        assert!(((d.reference_value.clone() - &want) / &want).abs().to_f64() < 1e-35);
        assert!(d.best_relative_error.is_finite());
        assert!(d.best_relative_error.to_f64() < 1e-4);
        assert!(!d.terminated);
    }

    #[test]
    fn reference_agrees_with_spouge_route() {
        let ctx = PrecisionContext::new(128).unwrap();
        for (nu, k) in [(NuParam::integer(3), 4u64), (NuParam::half_integer(2), 5)] {
            let closed: BigReal = gamma_quotient_reference(&nu, k, &ctx).unwrap();
            let v = nu.value();
            let num: BigReal = gamma(&BigReal::from_rational(&(v + int(1)), &ctx), &ctx).unwrap();
            let den: BigReal = gamma(&BigReal::from_rational(&(v + int(k as i64) + ratio(1, 2)), &ctx), &ctx).unwrap();
            let spouge = num / den;
            assert!(((closed - &spouge) / &spouge).abs().to_f64() < 2f64.powi(-118));
        }
    }

    #[test]
    fn quarter_order_improves_with_k() {
        let ctx = PrecisionContext::new(256).unwrap();
        let nu = NuParam::new(ratio(1, 4));
        let e5: FormalExpansionDiagnostics<BigReal> = gamma_quotient_expansion(&nu, 5, 200, &ctx).unwrap();
        let e20: FormalExpansionDiagnostics<BigReal> = gamma_quotient_expansion(&nu, 20, 200, &ctx).unwrap();
        assert!(e20.best_relative_error < e5.best_relative_error);
    }

    #[test]
    fn excluded_orders_rejected() {
        let ctx = PrecisionContext::new(64).unwrap();
        for s in ["-1/2", "-1", "-7/2"] {
            let r = gamma_quotient_expansion::<BigReal>(&NuParam::parse(s).unwrap(), 3, 10, &ctx);
            assert!(matches!(r, Err(Error::InvalidOrder(_))), "{s}");
        }
        let r = gamma_quotient_expansion::<f64>(&NuParam::integer(1), 3, 0, &ctx);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn residual_examples() {
        for (m, k_max) in [(0u64, 10u64), (1, 10), (2, 25)] {
            let r = recurrence_residual(&NuParam::half_integer(m), k_max).unwrap();
            assert_eq!(r.len(), k_max as usize);
            assert!(r.iter().all(Zero::is_zero), "m={m}");
        }
        assert!(matches!(
            recurrence_residual(&NuParam::integer(1), 5),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn f64_instantiation() {
        let ctx = PrecisionContext::default();
        let d: FormalExpansionDiagnostics<f64> =
            gamma_quotient_expansion(&NuParam::half_integer(2), 3, 20, &ctx).unwrap();
        assert!(d.terminated);
        assert!(d.best_relative_error < 1e-14);
    }
}
