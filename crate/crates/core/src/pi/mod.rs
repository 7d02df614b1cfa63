//! The two-parameter family of series for `1/pi`, certified summation and
//! normalized combinations.

pub mod certified;
pub mod combination;
pub mod family;

pub use certified::{sum_alternating, CertifiedSum, SummationOptions};
pub use combination::{combination_term, eval_combination, g_term, CombinationSpec, ComplexRational};
pub use family::{central_weight, f_k, family_prefactor, family_stream, family_term, FamilyParams};

use crate::arith::{PrecisionContext, Real};
use crate::error::Result;

/// Certified evaluation of a `1/pi` series.
///
/// When `converged`, `|value - 1/pi| <= remainder_bound + rounding_slack`.
#[derive(Debug, Clone)]
pub struct EvaluationReport<R> {
    pub value: R,
    /// Imaginary part, present for combinations with complex weights.
    pub imag: Option<R>,
    pub remainder_bound: R,
    pub rounding_slack: R,
    pub terms_used: u64,
    pub euler_levels: u64,
    pub tail_start: u64,
    pub precision_bits: u32,
    pub converged: bool,
}

impl<R: Real> From<(CertifiedSum<R>, &PrecisionContext)> for EvaluationReport<R> {
    fn from((s, ctx): (CertifiedSum<R>, &PrecisionContext)) -> Self {
        Self {
            value: s.value,
            imag: None,
            remainder_bound: s.remainder_bound,
            rounding_slack: s.rounding_slack,
            terms_used: s.terms_used,
            euler_levels: s.euler_levels,
            tail_start: s.tail_start,
            precision_bits: ctx.precision_bits(),
            converged: true,
        }
    }
}

/// Sums the `(m, k)` series until the certified remainder is below
/// `target * |value|`.
pub fn eval_family<R: Real>(params: &FamilyParams, target: &R, ctx: &PrecisionContext) -> Result<EvaluationReport<R>> {
    let s = sum_alternating(
        family_stream(params),
        params.alternating_from(),
        target,
        ctx,
        &SummationOptions::default(),
    )?;
    Ok((s, ctx).into())
}
