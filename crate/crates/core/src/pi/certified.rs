//! Certified summation of alternating series with exact terms.
//!
//! Write the series as `S = sum_{n<N} t_n + sign(t_N) * sum_{i>=0} (-1)^i u_{N+i}`
//! with `u_n = |t_n|`. Repeating `sum (-1)^i u_i = u_0/2 - 1/2 sum (-1)^i (Du)_i`,
//! where `(Du)_n = u_n - u_{n+1}`, `J` times gives
//!
//! ```text
//! sum_{i>=0} (-1)^i u_{N+i} = sum_{j<J} (D^j u)_N / 2^(j+1) + 2^-J sum_{i>=0} (-1)^i (D^J u)_{N+i}
//! ```
//!
//! When `D^J u` is positive and decreasing from `N` on, the last sum is again a
//! Leibniz series and `|remainder| <= (D^J u)_N / 2^J`. `J = 0` is the plain
//! alternating-series bound `|S - S_{N-1}| <= |t_N|`.
//!
//! All differences are computed exactly on integers scaled by a common
//! denominator. The positivity and monotonicity of `D^J u` are checked
//! exactly over a finite window past `N`; beyond the window they are assumed,
//! just as the Leibniz hypotheses on `t_n` themselves are.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{PrecisionContext, Rational, Real};
use crate::error::{Error, Result};
use crate::series::TermStream;

#[derive(Debug, Clone)]
pub struct SummationOptions {
    /// Largest number of plain (undifferenced) steps tried past the start of
    /// the alternating regime before switching to differenced tails.
    pub plain_budget: u64,
    /// Number of consecutive indices on which the hypotheses are checked.
    pub window: u64,
    /// Difference orders tried, in order.
    pub levels: Vec<u64>,
}

impl Default for SummationOptions {
    fn default() -> Self {
        Self {
            plain_budget: 64,
            window: 32,
            levels: vec![2, 4, 6, 8, 12, 16, 24, 32, 40, 48, 64, 80, 96, 128, 160, 192, 256],
        }
    }
}

#[derive(Debug, Clone)]
pub struct CertifiedSum<R> {
    pub value: R,
    /// Bound on `|value - limit|` from the alternating tail argument.
    pub remainder_bound: R,
    /// `terms_used * 2^(2 - bits) * max |partial sum|`.
    pub rounding_slack: R,
    pub terms_used: u64,
    /// Difference order `J` of the certificate (0 for plain summation).
    pub euler_levels: u64,
    /// First index `N` of the tail that the certificate covers.
    pub tail_start: u64,
}

struct Terms {
    stream: TermStream,
    cache: Vec<Rational>,
    regime_start: u64,
}

impl Terms {
    /// Generates terms up to `n` and checks sign alternation and strict
    /// decrease on every new index inside the regime.
    fn ensure(&mut self, n: u64) -> Result<()> {
        while (self.cache.len() as u64) <= n {
            let idx = self.cache.len() as u64;
            let t = self.stream.next_term()?;
            if idx > self.regime_start {
                let prev = &self.cache[idx as usize - 1];
                let alternates = prev.is_positive() != t.is_positive() && !t.is_zero();
                if !alternates || t.abs() >= prev.abs() {
                    return Err(Error::NonDecreasingTerms { index: idx });
                }
            }
            self.cache.push(t);
        }
        Ok(())
    }

    fn get(&self, n: u64) -> &Rational {
        &self.cache[n as usize]
    }
}

/// Prefix sums `sums[n] = sum_{i<n} t_i`, rounded at each accumulation.
struct Prefix<R> {
    sums: Vec<R>,
    max_abs: R,
}

impl<R: Real> Prefix<R> {
    fn new(ctx: &PrecisionContext) -> Self {
        Self {
            sums: vec![R::zero(ctx)],
            max_abs: R::zero(ctx),
        }
    }

    fn extend(&mut self, terms: &Terms, upto: u64, ctx: &PrecisionContext) {
        while (self.sums.len() as u64) <= upto {
            let n = self.sums.len() - 1;
            let s = self.sums[n].clone() + R::from_rational(terms.get(n as u64), ctx);
            let a = s.abs();
            if a > self.max_abs {
                self.max_abs = a;
            }
            self.sums.push(s);
        }
    }
}

/// Effective bits of precision the caller's target is compared against.
pub(crate) fn effective_bits<R: Real>(ctx: &PrecisionContext) -> u32 {
    R::FIXED_BITS.map_or(ctx.precision_bits(), |b| b.min(ctx.precision_bits()))
}

/// Rejects targets the working precision cannot support.
pub(crate) fn check_target<R: Real>(target: &R, ctx: &PrecisionContext) -> Result<()> {
    let bits = effective_bits::<R>(ctx);
    let floor = R::one(ctx).mul_pow2(16 - bits as i32);
    if !target.is_finite() || *target <= floor {
        return Err(Error::PrecisionExhausted(format!(
            "target relative error {} must exceed 2^({}) at {} bits",
            target.to_f64(),
            16 - bits as i32,
            bits
        )));
    }
    Ok(())
}

/// Sums the alternating series produced by `stream` to relative accuracy
/// `target`. Terms with index `>= regime_start` must alternate in sign and
/// decrease strictly in magnitude.
pub fn sum_alternating<R: Real>(
    stream: TermStream,
    regime_start: u64,
    target: &R,
    ctx: &PrecisionContext,
    opts: &SummationOptions,
) -> Result<CertifiedSum<R>> {
    check_target(target, ctx)?;
    let mut terms = Terms {
        stream,
        cache: Vec::new(),
        regime_start,
    };
    let mut prefix = Prefix::new(ctx);

    // plain Leibniz steps: first omitted index N, bound |t_N|
    for first_omitted in regime_start + 1..=regime_start + opts.plain_budget {
        terms.ensure(first_omitted)?;
        prefix.extend(&terms, first_omitted, ctx);
        let partial: &R = &prefix.sums[first_omitted as usize];
        let bound = R::from_rational(&terms.get(first_omitted).abs(), ctx);
        if bound <= target.clone() * partial.abs() {
            let value = partial.clone();
            let slack = slack(&prefix.max_abs, first_omitted + 1, ctx);
            return Ok(CertifiedSum {
                value,
                remainder_bound: bound,
                rounding_slack: slack,
                terms_used: first_omitted + 1,
                euler_levels: 0,
                tail_start: first_omitted,
            });
        }
    }

    // differenced tails starting at N = regime_start + 1 + J
    for &levels in &opts.levels {
        let start = regime_start + 1 + levels;
        let last = start + levels + opts.window + 1;
        terms.ensure(last)?;
        prefix.extend(&terms, start, ctx);
        let Some((tail, bound)) = differenced_tail(&terms, start, levels, opts.window) else {
            continue;
        };
        let head = prefix.sums[start as usize].clone();
        let tail_r = R::from_rational(&tail, ctx);
        let value = if terms.get(start).is_positive() {
            head + &tail_r
        } else {
            head - &tail_r
        };
        let bound = R::from_rational(&bound, ctx);
        let a = value.abs();
        if bound <= target.clone() * &a {
            let slack = slack(&prefix.max_abs.clone().max_of(a), last + 1, ctx);
            return Ok(CertifiedSum {
                value,
                remainder_bound: bound,
                rounding_slack: slack,
                terms_used: last + 1,
                euler_levels: levels,
                tail_start: start,
            });
        }
    }
    Err(Error::PrecisionExhausted(format!(
        "no certificate reached relative error {} after {} terms",
        target.to_f64(),
        terms.cache.len()
    )))
}

fn slack<R: Real>(max_partial: &R, terms_used: u64, ctx: &PrecisionContext) -> R {
    let ulp = R::one(ctx).mul_pow2(2 - R::bits(ctx) as i32);
    R::from_i64(terms_used as i64, ctx) * ulp * max_partial
}

/// Exact `(sum_{j<J} (D^j u)_N / 2^(j+1), (D^J u)_N / 2^J)`, or `None` when
/// `D^J u` is not positive and decreasing over the window.
fn differenced_tail(terms: &Terms, start: u64, levels: u64, window: u64) -> Option<(Rational, Rational)> {
    let len = (levels + window + 2) as usize;
    let u: Vec<Rational> = (0..len).map(|i| terms.get(start + i as u64).abs()).collect();

    // scale to integers with a common denominator
    let denom = u.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut d: Vec<BigInt> = u.iter().map(|q| q.numer() * (&denom / q.denom())).collect();

    // sum_{j<J} (D^j u)_N 2^(J-1-j), all over denom * 2^J
    let mut acc = BigInt::zero();
    for _ in 0..levels {
        acc = (acc << 1) + &d[0];
        let next: Vec<BigInt> = d.windows(2).map(|w| &w[0] - &w[1]).collect();
        d = next;
    }
    let ok = (0..window as usize).all(|i| d[i].is_positive() && d[i + 1] < d[i]);
    if !ok {
        return None;
    }
    let scale = denom << levels as usize;
    Some((Rational::new(acc, scale.clone()), Rational::new(d[0].clone(), scale)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, ratio};
    use crate::arith::BigReal;

    /// sum (-1)^n / (n+1) = ln 2: u_n = 1/(n+1) is completely monotone.
    fn log2_stream() -> TermStream {
        TermStream::new(int(1), vec![int(1)], vec![int(2)], int(-1))
    }

    #[test]
    fn log2_plain_and_differenced() {
        let ctx = PrecisionContext::new(128).unwrap();
        let ln2 = BigReal::from_i64(2, &ctx).ln();

        // coarse target: the plain phase suffices
        let coarse: CertifiedSum<BigReal> = sum_alternating(
            log2_stream(),
            0,
            &BigReal::from_rational(&ratio(1, 20), &ctx),
            &ctx,
            &Default::default(),
        )
        .unwrap();
        assert_eq!(coarse.euler_levels, 0);
        let err = (coarse.value.clone() - &ln2).abs();
        assert!(err <= coarse.remainder_bound.clone() + &coarse.rounding_slack);

        // 1e-30 is far out of reach of plain summation
        let target = BigReal::from_rational(&ratio(1, 10).pow(30), &ctx);
        let fine: CertifiedSum<BigReal> =
            sum_alternating(log2_stream(), 0, &target, &ctx, &Default::default()).unwrap();
        assert!(fine.euler_levels > 0);
        let err = (fine.value.clone() - &ln2).abs();
        assert!(err <= fine.remainder_bound.clone() + &fine.rounding_slack, "err {err}");
        assert!((err / &ln2).to_f64() < 1e-30);
    }

    #[test]
    fn differences_of_harmonic_terms() {
        // u_n = 1/(n+1): (D^j u)_0 = j! / (j+1)! = 1/(j+1)
        let terms = {
            let mut t = Terms {
                stream: log2_stream(),
                cache: vec![],
                regime_start: 0,
            };
            t.ensure(20).unwrap();
            t
        };
        let (tail, bound) = differenced_tail(&terms, 0, 3, 4).unwrap();
        // 1/2 + (1/2)/4 + (1/3)/8, bound (1/4)/8
        assert_eq!(tail, ratio(1, 2) + ratio(1, 8) + ratio(1, 24));
        assert_eq!(bound, ratio(1, 32));
    }

    #[test]
    fn monotonicity_violation_is_reported() {
        // (-1)^n * (n+1): alternates but grows
        let s = TermStream::new(int(1), vec![int(2)], vec![int(1)], int(-1));
        let ctx = PrecisionContext::new(64).unwrap();
        let r: Result<CertifiedSum<BigReal>> = sum_alternating(
            s,
            0,
            &BigReal::from_rational(&ratio(1, 1000), &ctx),
            &ctx,
            &Default::default(),
        );
        assert!(matches!(r, Err(Error::NonDecreasingTerms { index: 1 })));
    }

    #[test]
    fn target_below_precision_floor() {
        let ctx = PrecisionContext::new(64).unwrap();
        let tiny = BigReal::one(&ctx).mul_pow2(-60);
        let r: Result<CertifiedSum<BigReal>> = sum_alternating(log2_stream(), 0, &tiny, &ctx, &Default::default());
        assert!(matches!(r, Err(Error::PrecisionExhausted(_))));
        let r: Result<CertifiedSum<f64>> = sum_alternating(log2_stream(), 0, &1e-14, &ctx, &Default::default());
        assert!(matches!(r, Err(Error::PrecisionExhausted(_))));
    }

    #[test]
    fn f64_log2() {
        let ctx = PrecisionContext::default();
        let r: CertifiedSum<f64> = sum_alternating(log2_stream(), 0, &1e-10, &ctx, &Default::default()).unwrap();
        assert!((r.value - std::f64::consts::LN_2).abs() <= r.remainder_bound + r.rounding_slack);
    }
}
