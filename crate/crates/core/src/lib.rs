//! Formal gamma-quotient expansions, certified series for `1/pi` and exact
//! checks of the accompanying binomial identities.
//!
//! Numerical routines are generic over [`Real`]; `f64` and `f32` give quick
//! answers, [`BigReal`] (MPFR) gives arbitrary precision. Coefficients are
//! always exact [`Rational`]s and only rounded when accumulated.

pub mod arith;
pub mod error;
pub mod identity;
pub mod pi;
pub mod series;

pub use arith::{gamma, BigReal, NuParam, PrecisionContext, Rational, Real};
pub use error::{Error, Result};
pub use identity::{sweep, verify_iv1, verify_iv2, verify_iv3, verify_iv3_exploratory, IdentityId, IdentityReport};
pub use pi::{eval_combination, eval_family, f_k, family_term, CombinationSpec, EvaluationReport, FamilyParams};
pub use series::{
    gamma_quotient_expansion, heaviside_exp, recurrence_residual, wronskian_check, FormalExpansionDiagnostics,
    HeavisideSum, WronskianReport,
};

pub type BigEvaluationReport = EvaluationReport<BigReal>;
pub type BigDiagnostics = FormalExpansionDiagnostics<BigReal>;
pub type BigWronskianReport = WronskianReport<BigReal>;
pub type BigHeavisideSum = HeavisideSum<BigReal>;
