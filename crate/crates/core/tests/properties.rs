use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use pi_forge::arith::rational::{factorial, int, ratio};
use pi_forge::arith::{binomial, falling_factorial, gamma_quotient_exact, rising_factorial, to_pq};
use pi_forge::pi::{central_weight, g_term, CombinationSpec};
use pi_forge::series::bessel::a_coeff;
use pi_forge::series::expansion::expansion_stream;
use pi_forge::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rising_splits(x in small_rational(), a in 0u64..12, b in 0u64..12) {
        let lhs = rising_factorial(&x, a + b);
        let rhs = rising_factorial(&x, a) * rising_factorial(&(&x + int(a as i64)), b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn falling_is_reflected_rising(x in small_rational(), n in 0u64..15) {
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(falling_factorial(&x, n), sign * rising_factorial(&-x, n));
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 1u64..80, k in 0u64..80) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        if k >= 1 {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
        prop_assert_eq!(binomial(n, k) * Rational::from_integer(factorial(k) * factorial(n - k)),
                        Rational::from_integer(factorial(n)));
    }

    #[test]
    fn pq_round_trip(x in small_rational()) {
        prop_assert_eq!(arith::parse_rational(&to_pq(&x)).unwrap(), x);
    }

    #[test]
    fn a_coeff_matches_product(num in -30i64..30, den in prop::sample::select(vec![1i64, 2, 3, 4, 5, 7]), n in 0u64..20) {
        let nu = NuParam::new(ratio(num, den));
        prop_assume!(!nu.is_excluded());
        let v = nu.value().clone();
        let h = ratio(1, 2);
        let want = rising_factorial(&(&v + &h), n) * falling_factorial(&(&v - &h), n)
            / (Rational::from_integer(factorial(n)) * int(2).pow(n as i32));
        prop_assert_eq!(a_coeff(&nu, n), want);
    }

    #[test]
    fn half_integer_expansion_terminates(m in 0u64..12, k in 0u64..25) {
        let mut s = expansion_stream(&NuParam::half_integer(m), k).unwrap();
        for _ in 0..=m {
            prop_assert!(!s.next_term().unwrap().is_zero());
        }
        prop_assert!(s.terminated());
        prop_assert!(s.next_term().unwrap().is_zero());
    }

    #[test]
    fn gamma_quotient_matches_exact_form(m in 0u64..8, k in 0u64..8) {
        // Gamma(m+1)/Gamma(m+k+1/2) = q / sqrt(pi)
        let ctx = PrecisionContext::new(256).unwrap();
        let g1: BigReal = gamma(&BigReal::from_i64(m as i64 + 1, &ctx), &ctx).unwrap();
        let g2: BigReal = gamma(&BigReal::from_rational(&(int((m + k) as i64) + ratio(1, 2)), &ctx), &ctx).unwrap();
        let want = BigReal::from_rational(&gamma_quotient_exact(m, k), &ctx) / BigReal::pi(&ctx).sqrt();
        let rel = ((g1 / g2 - &want) / &want).abs().to_f64();
        prop_assert!(rel < 1e-70, "rel = {}", rel);
    }

    #[test]
    fn gamma_recurrence(num in 1i64..400, den in 1i64..16) {
        let ctx = PrecisionContext::new(256).unwrap();
        let x = BigReal::from_rational(&ratio(num, den), &ctx);
        let g: BigReal = gamma(&x, &ctx).unwrap();
        let g1: BigReal = gamma(&(x.clone() + BigReal::one(&ctx)), &ctx).unwrap();
        let rel = ((g1 - g * &x) / (gamma::<BigReal>(&(x.clone() + BigReal::one(&ctx)), &ctx).unwrap())).abs().to_f64();
        prop_assert!(rel < 1e-70, "rel = {}", rel);
    }

    #[test]
    fn leibniz_window(m in 0u64..10, k in 2u64..20, start in 0u64..60) {
        let p = FamilyParams::new(m, k).unwrap();
        let n = p.alternating_from() + start;
        let a = family_term(&p, n);
        let b = family_term(&p, n + 1);
        prop_assert!(a.is_positive() != b.is_positive());
        prop_assert!(b.abs() < a.abs());
    }

    #[test]
    fn weight_scaling_leaves_g_unchanged(
        ws in prop::collection::vec(1i64..9, 1..5),
        scale_re in 1i64..7, scale_im in -3i64..4, n in 0u64..12,
    ) {
        let ks: Vec<(u64, Rational)> = ws.iter().enumerate().map(|(i, a)| (2 + i as u64, int(*a))).collect();
        let spec = CombinationSpec::real(&ks).unwrap();
        let s = num_complex::Complex::new(int(scale_re), int(scale_im));
        let scaled = CombinationSpec::new(spec.weights().iter().map(|(k, a)| (*k, a * &s)).collect()).unwrap();
        prop_assert_eq!(g_term(&spec, n), g_term(&scaled, n));
    }
}

#[test]
fn central_weight_is_signed_cube() {
    assert_eq!(central_weight(0), Rational::one());
    assert_eq!(central_weight(1), ratio(-1, 8));
    assert_eq!(central_weight(2), ratio(27, 512));
}
