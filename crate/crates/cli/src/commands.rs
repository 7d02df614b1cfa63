use pi_forge::arith::{parse_rational, to_pq};
use pi_forge::series::expansion::gamma_quotient_expansion;
use pi_forge::series::{auto_i_truncation, optimal_k_truncation};
use pi_forge::{
    eval_combination, eval_family, sweep, wronskian_check, BigReal, CombinationSpec, Error, EvaluationReport,
    FamilyParams, IdentityId, NuParam, PrecisionContext, Rational, Real,
};
use serde_json::Value;

use crate::record::{Fields, OutputRecord};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Usage = 1,
    Precision = 2,
    Falsified = 3,
}

pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::PrecisionExhausted(_) | Error::NonDecreasingTerms { .. } => Status::Precision,
            _ => Status::Usage,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

pub type Outcome = std::result::Result<(Vec<OutputRecord>, Status), Failure>;

pub fn context(prec_bits: u32) -> Result<PrecisionContext, Failure> {
    Ok(PrecisionContext::new(prec_bits)?)
}

/// Decimal literal with optional exponent, e.g. `1e-30`, `2.5E3`, `1/7`.
pub fn parse_real_literal(s: &str) -> pi_forge::Result<Rational> {
    let t = s.trim();
    let Some(pos) = t.find(['e', 'E']) else {
        return parse_rational(t);
    };
    let mantissa = parse_rational(&t[..pos])?;
    let exp: i32 = t[pos + 1..]
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
    if exp.unsigned_abs() > 100_000 {
        return Err(Error::Parse(format!("exponent out of range in {s:?}")));
    }
    let ten = Rational::from_integer(10.into());
    Ok(mantissa * ten.pow(exp))
}

fn target(s: &str, ctx: &PrecisionContext) -> Result<BigReal, Failure> {
    let q = parse_real_literal(s)?;
    if q <= Rational::from_integer(0.into()) {
        return Err(Error::Domain(format!("target-rel-err must be positive, got {s}")).into());
    }
    Ok(BigReal::from_rational(&q, ctx))
}

fn eval_fields(r: &EvaluationReport<BigReal>, with_imag: bool) -> Fields {
    let mut f = Fields::new().put("value", r.value.to_decimal());
    if with_imag {
        f = f.put("imag", r.imag.as_ref().map_or(Value::Null, |v| v.to_decimal().into()));
    }
    f.put("remainder_bound", r.remainder_bound.to_decimal())
        .put("rounding_slack", r.rounding_slack.to_decimal())
        .put("terms_used", r.terms_used)
        .put("euler_levels", r.euler_levels)
        .put("tail_start", r.tail_start)
        .put("precision_bits", r.precision_bits)
        .put("converged", r.converged)
}

pub fn pi(m: u64, k: u64, target_rel_err: &str, prec_bits: u32) -> Outcome {
    let ctx = context(prec_bits)?;
    let params = FamilyParams::new(m, k)?;
    let t = target(target_rel_err, &ctx)?;
    let report = eval_family(&params, &t, &ctx)?;
    let rec = OutputRecord::new(
        "pi",
        Fields::new()
            .put("m", m)
            .put("k", k)
            .put("target_rel_err", target_rel_err)
            .put("prec_bits", prec_bits)
            .build(),
    )
    .with_results(eval_fields(&report, false).build());
    Ok((vec![rec], Status::Ok))
}

pub fn combine(weights: &str, target_rel_err: &str, prec_bits: u32) -> Outcome {
    let ctx = context(prec_bits)?;
    let spec = CombinationSpec::parse(weights)?;
    let t = target(target_rel_err, &ctx)?;
    let report = eval_combination(&spec, &t, &ctx)?;
    let rec = OutputRecord::new(
        "combine",
        Fields::new()
            .put("weights", spec.to_spec_string())
            .put("target_rel_err", target_rel_err)
            .put("prec_bits", prec_bits)
            .build(),
    )
    .with_results(eval_fields(&report, true).build());
    Ok((vec![rec], Status::Ok))
}

pub fn identity(id: IdentityId, m_max: u64, k_max: u64) -> Outcome {
    let params = Fields::new()
        .put("id", id.as_str())
        .put("m_max", m_max)
        .put("k_max", k_max)
        .build();
    let reports = sweep(id, m_max, k_max);
    let mut status = Status::Ok;
    let records: Vec<OutputRecord> = reports
        .iter()
        .map(|r| {
            let rec = OutputRecord::new("identity", params.clone()).with_results(
                Fields::new()
                    .put("identity_id", r.identity_id.as_str())
                    .put("m", r.m)
                    .put("k", r.k)
                    .put("lhs", to_pq(&r.lhs))
                    .put("target", to_pq(&r.target))
                    .put("holds", r.holds)
                    .put(
                        "matches_iv2_termwise",
                        r.matches_iv2_termwise.map_or(Value::Null, Value::Bool),
                    )
                    .build(),
            );
            if !r.holds || r.matches_iv2_termwise == Some(false) {
                if status == Status::Ok {
                    eprintln!("counterexample: {}", rec.to_json_line());
                }
                status = Status::Falsified;
            }
            rec
        })
        .collect();
    Ok((records, status))
}

pub fn parse_k_range(s: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure {
        status: Status::Usage,
        message: format!("--k-range expects A:B with A <= B, got {s:?}"),
    };
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn gamma_quotient(nu: &str, ks: (u64, u64), max_terms: usize, prec_bits: u32) -> Outcome {
    let ctx = context(prec_bits)?;
    let nu = NuParam::parse(nu)?.admissible()?;
    let params = Fields::new()
        .put("nu", nu.to_string())
        .put("k_from", ks.0)
        .put("k_to", ks.1)
        .put("max_terms", max_terms as u64)
        .put("prec_bits", prec_bits)
        .build();
    let mut records = Vec::new();
    for k in ks.0..=ks.1 {
        let d = gamma_quotient_expansion::<BigReal>(&nu, k, max_terms, &ctx)?;
        records.push(
            OutputRecord::new("gamma-quotient", params.clone()).with_results(
                Fields::new()
                    .put("k", k)
                    .put("terminated", d.terminated)
                    .put("terms_computed", d.terms_computed() as u64)
                    .put("min_term_index", d.min_term_index)
                    .put("best_partial_sum", d.best_partial_sum().to_decimal())
                    .put("reference_value", d.reference_value.to_decimal())
                    .put("best_relative_error", d.best_relative_error.to_decimal())
                    .build(),
            ),
        );
    }
    Ok((records, Status::Ok))
}

pub fn wronskian(nu: &str, z: &str, max_terms: Option<u64>, prec_bits: u32) -> Outcome {
    let ctx = context(prec_bits)?;
    let nu = NuParam::parse(nu)?;
    let zq = parse_real_literal(z)?;
    let zr = BigReal::from_rational(&zq, &ctx);
    let trunc_k = optimal_k_truncation(&nu, &zr, &ctx)?;
    let trunc_i = match max_terms {
        Some(n) => n,
        None => auto_i_truncation(&nu, &zr, &ctx)?,
    };
    let r = wronskian_check(&nu, &zr, trunc_k, trunc_i, &ctx)?;
    let rec = OutputRecord::new(
        "wronskian",
        Fields::new()
            .put("nu", nu.to_string())
            .put("z", to_pq(&zq))
            .put("prec_bits", prec_bits)
            .build(),
    )
    .with_results(
        Fields::new()
            .put("deviation", r.deviation.to_decimal())
            .put("bound", r.bound.to_decimal())
            .put("within_bound", r.deviation.abs() <= r.bound)
            .put("trunc_k", r.trunc_k)
            .put("trunc_i", r.trunc_i)
            .build(),
    );
    Ok((vec![rec], Status::Ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use pi_forge::arith::rational::ratio;

    #[test]
    fn real_literals() {
        assert_eq!(parse_real_literal("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_real_literal("2.5E2").unwrap(), ratio(250, 1));
        assert_eq!(parse_real_literal("-1/2").unwrap(), ratio(-1, 2));
        assert!(parse_real_literal("1e").is_err());
        assert!(parse_real_literal("abc").is_err());
    }

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("5:40").ok(), Some((5, 40)));
        assert!(parse_k_range("9:3").is_err());
        assert!(parse_k_range("9").is_err());
    }
}
