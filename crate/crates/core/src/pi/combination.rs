//! Normalized linear combinations of the `m = 0` series,
//!
//! ```text
//! 1/pi = sum_n (-1)^n ((1/2)_n / n!)^3 g(n),   g(n) = sum_k alpha_k f_k(n) / sum_k alpha_k
//! ```
//!
//! with arbitrary complex `alpha_k`. The sum is linear in the `f_k`, so it is
//! evaluated as `sum_k w_k V_k` with `w_k = alpha_k / sum alpha` and `V_k` the
//! certified value of the `(0, k)` series; the bound is `sum |w_k| B_k`.

use num_complex::Complex;
use num_traits::{Signed, Zero};

use super::certified::{sum_alternating, SummationOptions};
use super::family::{central_weight, f_k, family_stream, FamilyParams};
use super::EvaluationReport;
use crate::arith::rational::parse_rational;
use crate::arith::{PrecisionContext, Rational, Real};
use crate::error::{Error, Result};

pub type ComplexRational = Complex<Rational>;

/// Weights `alpha_k` of a combination, in the order given.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationSpec {
    weights: Vec<(u64, ComplexRational)>,
}

impl CombinationSpec {
    pub fn new(weights: Vec<(u64, ComplexRational)>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidCombination("no weights given".into()));
        }
        for (i, (k, _)) in weights.iter().enumerate() {
            if *k < 2 {
                return Err(Error::InvalidCombination(format!(
                    "k = {k}: every series in a combination needs k >= 2"
                )));
            }
            if weights[..i].iter().any(|(j, _)| j == k) {
                return Err(Error::InvalidCombination(format!("k = {k} appears twice")));
            }
        }
        let spec = Self { weights };
        if spec.normalization().is_zero() {
            return Err(Error::ZeroNormalization);
        }
        Ok(spec)
    }

    /// Real weights.
    pub fn real(weights: &[(u64, Rational)]) -> Result<Self> {
        Self::new(
            weights
                .iter()
                .map(|(k, a)| (*k, Complex::new(a.clone(), Rational::zero())))
                .collect(),
        )
    }

    /// Parses `k:re[+im i]` entries separated by commas, e.g. `2:1+5i,4:-3`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut weights = Vec::new();
        for entry in s.split(',') {
            let (k, alpha) = entry
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("weight entry {entry:?} is not of the form k:alpha")))?;
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad k in weight entry {entry:?}")))?;
            weights.push((k, parse_complex(alpha)?));
        }
        Self::new(weights)
    }

    pub fn weights(&self) -> &[(u64, ComplexRational)] {
        &self.weights
    }

    /// `sum alpha_k`.
    pub fn normalization(&self) -> ComplexRational {
        self.weights.iter().fold(Complex::zero(), |acc, (_, a)| acc + a)
    }

    /// Normalized weights `w_k = alpha_k / sum alpha`.
    pub fn normalized(&self) -> Vec<(u64, ComplexRational)> {
        let s = self.normalization();
        self.weights.iter().map(|(k, a)| (*k, a / &s)).collect()
    }

    /// Canonical text form, re-parseable by [`CombinationSpec::parse`].
    pub fn to_spec_string(&self) -> String {
        self.weights
            .iter()
            .map(|(k, a)| format!("{k}:{}", complex_to_string(a)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn complex_to_string(a: &ComplexRational) -> String {
    let re = crate::arith::to_pq(&a.re);
    if a.im.is_zero() {
        return re;
    }
    let sign = if a.im.is_negative() { '-' } else { '+' };
    format!("{re}{sign}{}i", crate::arith::to_pq(&a.im.abs()))
}

/// `re`, `re+im i`, `re-im i`, `im i`; `i` alone stands for a unit coefficient.
fn parse_complex(s: &str) -> Result<ComplexRational> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(s)?, Rational::zero()));
    };
    // split at the last sign that is not leading
    let cut = body.rfind(['+', '-']).filter(|&p| p > 0);
    let (re, im) = match cut {
        Some(p) => (&body[..p], &body[p..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => Rational::from_integer(1.into()),
        "-" => Rational::from_integer((-1).into()),
        _ => parse_rational(im)?,
    };
    Ok(Complex::new(parse_rational(re)?, im))
}

/// `g(n) = sum alpha_k f_k(n) / sum alpha_k`.
pub fn g_term(spec: &CombinationSpec, n: u64) -> ComplexRational {
    spec.normalized()
        .iter()
        .fold(Complex::zero(), |acc, (k, w)| acc + w * f_k(*k, n))
}

/// Full summand `(-1)^n ((1/2)_n / n!)^3 g(n)`.
pub fn combination_term(spec: &CombinationSpec, n: u64) -> ComplexRational {
    g_term(spec, n) * central_weight(n)
}

/// `|re| + |im|`, an upper bound for the modulus that stays rational.
fn l1(z: &ComplexRational) -> Rational {
    z.re.abs() + z.im.abs()
}

/// Certified value of the combination. The real part carries the value,
/// the imaginary part converges to zero and is bounded by the same bound.
pub fn eval_combination<R: Real>(
    spec: &CombinationSpec,
    target: &R,
    ctx: &PrecisionContext,
) -> Result<EvaluationReport<R>> {
    let w = spec.normalized();
    let spread = w.iter().fold(Rational::zero(), |acc, (_, z)| acc + l1(z));
    // sum |w_k| t_k |V_k| <= target |value| when every V_k is within t_k of
    // the common limit; halve and retry if the combined check still fails
    let mut per_k = target.clone() / R::from_rational(&spread, ctx);
    for _ in 0..4 {
        let report = combine(&w, &per_k, ctx)?;
        if report.remainder_bound <= target.clone() * report.value.abs() {
            return Ok(EvaluationReport {
                converged: true,
                ..report
            });
        }
        per_k = per_k.mul_pow2(-1);
    }
    Err(Error::PrecisionExhausted(format!(
        "combination {} did not reach relative error {}",
        spec.to_spec_string(),
        target.to_f64()
    )))
}

fn combine<R: Real>(w: &[(u64, ComplexRational)], per_k: &R, ctx: &PrecisionContext) -> Result<EvaluationReport<R>> {
    let opts = SummationOptions::default();
    let mut re = R::zero(ctx);
    let mut im = R::zero(ctx);
    let mut bound = R::zero(ctx);
    let mut slack = R::zero(ctx);
    let (mut terms, mut levels, mut tail) = (0, 0, 0);
    for (k, wk) in w {
        let params = FamilyParams::new(0, *k)?;
        let s = sum_alternating::<R>(family_stream(&params), params.alternating_from(), per_k, ctx, &opts)?;
        let a = R::from_rational(&l1(wk), ctx);
        re = re + R::from_rational(&wk.re, ctx) * &s.value;
        im = im + R::from_rational(&wk.im, ctx) * &s.value;
        bound = bound + a.clone() * &s.remainder_bound;
        slack = slack + a * &s.rounding_slack;
        terms = terms.max(s.terms_used);
        levels = levels.max(s.euler_levels);
        tail = tail.max(s.tail_start);
    }
    let imag_present = w.iter().any(|(_, z)| !z.im.is_zero());
    Ok(EvaluationReport {
        value: re,
        imag: imag_present.then_some(im),
        remainder_bound: bound,
        rounding_slack: slack,
        terms_used: terms,
        euler_levels: levels,
        tail_start: tail,
        precision_bits: ctx.precision_bits(),
        converged: false,
    })
}
