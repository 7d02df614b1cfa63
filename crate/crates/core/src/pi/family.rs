//! Summands of the two-parameter family of series for `1/pi`:
//!
//! ```text
//! 1/pi = (1/2)_{m+k} (2m)! / (2^(2m) m!)
//!        * sum_n (m+1/2)_n <m-1/2>_n (m+1/2)_{k+n} (k+m+2n+1/2) / (n! (k+n)! (2m+k+n)!)
//! ```
//!
//! valid for `m >= 0`, `k >= 2`. Written as a term stream the summand has
//! upper parameters `m+1/2, 1/2-m, m+k+1/2`, lower parameters `1, k+1,
//! 2m+k+1`, argument `-1` and the affine factor `k+m+1/2+2n`.

use num_bigint::BigInt;

use crate::arith::rational::{factorial, int, ratio, rising_factorial};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::series::TermStream;

/// Indices `(m, k)` of one member of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    m: u64,
    k: u64,
}

impl FamilyParams {
    pub fn new(m: u64, k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::Domain(format!(
                "k = {k}: the 1/pi series is only known to converge for k >= 2"
            )));
        }
        Ok(Self { m, k })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// First index of the alternating, strictly decreasing regime.
    pub fn alternating_from(&self) -> u64 {
        self.m + 1
    }
}

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `(1/2)_{m+k} (2m)! / (2^(2m) m!)`.
pub fn family_prefactor(params: &FamilyParams) -> Rational {
    let (m, k) = (params.m, params.k);
    rising_factorial(&ratio(1, 2), m + k) * fact(2 * m)
        / (Rational::from_integer(BigInt::from(4).pow(m as u32)) * fact(m))
}

/// Stream of full summands, prefactor included.
pub fn family_stream(params: &FamilyParams) -> TermStream {
    let (m, k) = (params.m as i64, params.k as i64);
    let half = ratio(1, 2);
    let mh = int(m) + &half;
    // the n = 0 value of everything except the affine factor
    let c = family_prefactor(params) * rising_factorial(&mh, k as u64) / (fact(k as u64) * fact((2 * m + k) as u64));
    TermStream::new(
        c,
        vec![mh.clone(), &half - int(m), &mh + int(k)],
        vec![int(1), int(k + 1), int(2 * m + k + 1)],
        int(-1),
    )
    .with_linear(int(k + m) + &half, int(2))
}

/// The `n`-th summand of the `(m, k)` series, exactly.
pub fn family_term(params: &FamilyParams, n: u64) -> Rational {
    family_stream(params)
        .term_at(n)
        .expect("family lower parameters are positive")
}

/// `f_k(n) = (1/2)_k (n+1/2)_k (k+2n+1/2) / ((n+1)_k)^2`.
pub fn f_k(k: u64, n: u64) -> Rational {
    let nq = int(n as i64);
    let rf = rising_factorial(&(&nq + int(1)), k);
    rising_factorial(&ratio(1, 2), k)
        * rising_factorial(&(&nq + ratio(1, 2)), k)
        * (int(k as i64) + int(2 * n as i64) + ratio(1, 2))
        / (&rf * &rf)
}

/// `(-1)^n ((1/2)_n / n!)^3`, the weight shared by the `m = 0` series.
pub fn central_weight(n: u64) -> Rational {
    let w = rising_factorial(&ratio(1, 2), n) / fact(n);
    let c = &w * &w * &w;
    if n % 2 == 1 {
        -c
    } else {
        c
    }
}
