//! Gamma function by Spouge's approximation.
//!
//! For `z >= 0` and integer parameter `a`,
//!
//! ```text
//! Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) [ c_0 + sum_{k=1}^{a-1} c_k / (z+k) + eps ]
//! c_0 = sqrt(2 pi),  c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!
//! ```
//!
//! with relative error below `a^(-1/2) (2 pi)^-(a+1/2)`. Arguments below 1
//! are first shifted up with `Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1))`.
//!
//! The coefficient sum cancels heavily: roughly `0.71` bits are lost per
//! target bit. Arbitrary precision scalars absorb this with extra internal
//! bits; fixed-width floats instead aim at a reduced target so that the
//! cancellation and truncation errors balance.

use super::rational::ratio;
use super::{PrecisionContext, Real};
use crate::error::{Error, Result};

/// Slack `s` in the bound `|rel. error| <= 2^(-precision_bits + s)`.
pub const GAMMA_SLACK_BITS: i32 = 8;

/// Spouge parameter for a target of `bits` correct bits.
pub fn spouge_parameter(bits: u32) -> u32 {
    let ln2pi = (2.0 * std::f64::consts::PI).ln();
    (bits as f64 * std::f64::consts::LN_2 / ln2pi).ceil() as u32 + 2
}

fn internal_bits(target: u32) -> u32 {
    target + (target * 3).div_ceil(4) + 16
}

/// `Gamma(x)` at the precision of `ctx`.
pub fn gamma<R: Real>(x: &R, ctx: &PrecisionContext) -> Result<R> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite {x}")));
    }
    let zero = R::zero(ctx);
    if *x <= zero && x.is_integer() {
        return Err(Error::Pole(x.to_decimal()));
    }

    let (target, inner) = match R::FIXED_BITS {
        // keep 4/7 of the mantissa for truncation, the rest is eaten by cancellation
        Some(bits) => (bits * 4 / 7, *ctx),
        None => {
            let target = ctx.working_bits();
            (target, ctx.widened(internal_bits(target) - target))
        }
    };
    let a = spouge_parameter(target);

    let one = R::one(&inner);
    let mut y = x.at(&inner);
    let mut shift = one.clone();
    while y < one {
        shift = shift * &y;
        y = y + &one;
    }

    let z = y - &one;
    let a_r = R::from_i64(a as i64, &inner);
    let half = R::from_rational(&ratio(1, 2), &inner);

    let two_pi = R::pi(&inner).mul_pow2(1);
    let mut series = two_pi.sqrt();
    let mut fact = one.clone(); // (k-1)!
    for k in 1..a {
        let ak = R::from_i64((a - k) as i64, &inner);
        let kr = R::from_i64(k as i64, &inner);
        let mut c = ak.powf(&(kr.clone() - &half)) * ak.exp() / &fact;
        if k % 2 == 0 {
            c = -c;
        }
        series = series + c / (z.clone() + &kr);
        fact = fact * &kr;
    }

    let base = z.clone() + &a_r;
    let value = base.powf(&(z + &half)) * (-base).exp() * series / shift;
    Ok(value.at(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, ratio, Rational};
    use crate::arith::BigReal;
    use rug::Float;

    fn mpfr_gamma(x: &Rational, bits: u32) -> Float {
        let r = crate::arith::bigreal::to_rug_rational(x);
        Float::with_val(bits, &r).gamma()
    }

    fn rel_err(got: &BigReal, want: &Float) -> f64 {
        let d = Float::with_val(want.prec(), got.as_float() - want);
        (d / want).abs().to_f64()
    }

    #[test]
    fn parameter_rule() {
        // 256 * ln 2 / ln(2 pi) = 96.57...
        assert_eq!(spouge_parameter(256), 99);
        assert_eq!(spouge_parameter(53), 22);
    }

    #[test]
    fn classical_values() {
        let ctx = PrecisionContext::new(128).unwrap();
        let tol = 2f64.powi(-128 + GAMMA_SLACK_BITS);

        let half: BigReal = gamma(&BigReal::from_rational(&ratio(1, 2), &ctx), &ctx).unwrap();
        let sqrt_pi = Float::with_val(512, rug::float::Constant::Pi).sqrt();
        assert!(rel_err(&half, &sqrt_pi) < tol);
        assert!(half.to_decimal().starts_with("1.7724538509"));

        let one: BigReal = gamma(&BigReal::from_i64(1, &ctx), &ctx).unwrap();
        assert!(rel_err(&one, &Float::with_val(64, 1)) < tol);

        let g72: BigReal = gamma(&BigReal::from_rational(&ratio(7, 2), &ctx), &ctx).unwrap();
        let want = sqrt_pi * 15u32 / 8u32;
        assert!(rel_err(&g72, &want) < tol);
        assert!(g72.to_decimal().starts_with("3.3233509704"));
    }

    #[test]
    fn agrees_with_mpfr_across_range() {
        for bits in [64u32, 128, 256] {
            let ctx = PrecisionContext::new(bits).unwrap();
            let tol = 2f64.powi(-(bits as i32) + GAMMA_SLACK_BITS);
            for q in [
                ratio(1, 10),
                ratio(-7, 3),
                ratio(-1, 2),
                ratio(9, 4),
                int(17),
                ratio(251, 7),
            ] {
                let got: BigReal = gamma(&BigReal::from_rational(&q, &ctx), &ctx).unwrap();
                let want = mpfr_gamma(&q, bits * 2 + 64);
                assert!(rel_err(&got, &want) < tol, "bits={bits} x={q}");
            }
        }
    }

    #[test]
    fn poles_are_rejected() {
        let ctx = PrecisionContext::new(64).unwrap();
        for v in [0, -1, -5] {
            let r = gamma(&BigReal::from_i64(v, &ctx), &ctx);
            assert!(matches!(r, Err(Error::Pole(_))));
        }
        assert!(matches!(gamma(&-2.0f64, &ctx), Err(Error::Pole(_))));
    }

    #[test]
    fn hardware_floats() {
        let ctx = PrecisionContext::default();
        let g = gamma(&0.5f64, &ctx).unwrap();
        assert!((g / std::f64::consts::PI.sqrt() - 1.0).abs() < 1e-12);
        let g = gamma(&5.0f64, &ctx).unwrap();
        assert!((g / 24.0 - 1.0).abs() < 1e-12);
        let g = gamma(&-1.5f64, &ctx).unwrap();
        let want = 4.0 * std::f64::consts::PI.sqrt() / 3.0;
        assert!((g / want - 1.0).abs() < 1e-12);
        let g = gamma(&3.5f32, &ctx).unwrap();
        assert!((g / 3.323_351 - 1.0).abs() < 1e-5);
    }
}
