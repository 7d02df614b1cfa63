//! Exact checks of the finite gamma-quotient sum and the binomial identity
//!
//! ```text
//! IV1: Gamma(m+3/2)/Gamma(m+k+1) = sqrt(pi)/2^(2m+1) sum_{n<=m} (m+1)_n <m>_n (m+1)_{k+n} (k+m+2n+1)
//!                                                              / (n! (k+n)! (2m+2)_{k+n})
//! IV2: sum_{n<=m} C(m,n) C(m+n+k,m) / C(2m+n+k,n+m) * (m+2n+k+1)/(2m+n+k+1) = 1
//! IV3: sum_{n<=m} C(m,n) C(n+k,m)   / C(m+n+k,n+m)  * (2n+k+1)/(n+m+k+1)    = 1,   k >= m
//! ```
//!
//! In IV1 `Gamma(m+3/2) = (1/2)_{m+1} sqrt(pi)` so `sqrt(pi)` cancels and both
//! sides are rationals. IV3 at `(m, k+m)` is IV2 at `(m, k)` term by term.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::rational::{factorial, int};
use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};
use crate::series::TermStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    IV1,
    IV2,
    IV3,
}

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::IV1 => "iv1",
            Self::IV2 => "iv2",
            Self::IV3 => "iv3",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "iv1" => Ok(Self::IV1),
            "iv2" => Ok(Self::IV2),
            "iv3" => Ok(Self::IV3),
            _ => Err(Error::Parse(format!(
                "unknown identity {s:?} (expected iv1, iv2 or iv3)"
            ))),
        }
    }
}

/// One exact certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub m: u64,
    pub k: u64,
    pub lhs: Rational,
    pub target: Rational,
    pub holds: bool,
    /// IV3 only: whether every summand equals the IV2 summand at `(m, k-m)`.
    pub matches_iv2_termwise: Option<bool>,
    /// Set for IV3 cells with `k < m`, which lie outside the proven range.
    pub exploratory: bool,
}

impl IdentityReport {
    fn new(identity_id: IdentityId, m: u64, k: u64, lhs: Rational, target: Rational) -> Self {
        let holds = lhs == target;
        Self {
            identity_id,
            m,
            k,
            lhs,
            target,
            holds,
            matches_iv2_termwise: None,
            exploratory: false,
        }
    }
}

/// Stream of the IV1 summands with the `sqrt(pi)/2^(2m+1)` factor removed:
/// `<m>_n = (-1)^n (-m)_n` and `(a)_{k+n} = (a)_k (a+k)_n`.
fn iv1_stream(m: u64, k: u64) -> TermStream {
    let (mi, ki) = (m as i64, k as i64);
    // (m+1)_k / (k! (2m+2)_k) = (m+k)! (2m+1)! / (m! k! (2m+k+1)!)
    let prefactor = Rational::new(
        factorial(m + k) * factorial(2 * m + 1),
        factorial(m) * factorial(k) * factorial(2 * m + k + 1),
    );
    TermStream::new(
        prefactor,
        vec![int(mi + 1), int(-mi), int(mi + 1 + ki)],
        vec![int(1), int(ki + 1), int(2 * mi + 2 + ki)],
        int(-1),
    )
    .with_linear(int(ki + mi + 1), int(2))
}

pub fn iv1_terms(m: u64, k: u64) -> Vec<Rational> {
    let mut s = iv1_stream(m, k);
    (0..=m)
        .map(|_| s.next_term().expect("lower parameters are positive"))
        .collect()
}

pub fn iv2_terms(m: u64, k: u64) -> Vec<Rational> {
    (0..=m)
        .map(|n| {
            binomial(m, n) * binomial(m + n + k, m) / binomial(2 * m + n + k, n + m)
                * Rational::new((m + 2 * n + k + 1).into(), (2 * m + n + k + 1).into())
        })
        .collect()
}

/// IV3 summands; `k` may be below `m` here.
pub fn iv3_terms(m: u64, k: u64) -> Vec<Rational> {
    (0..=m)
        .map(|n| {
            binomial(m, n) * binomial(n + k, m) / binomial(m + n + k, n + m)
                * Rational::new((2 * n + k + 1).into(), (n + m + k + 1).into())
        })
        .collect()
}

fn sum(terms: Vec<Rational>) -> Rational {
    terms.into_iter().fold(Rational::zero(), |a, t| a + t)
}

/// `lhs = 2^-(2m+1) sum`, `target = Gamma(m+3/2) / (sqrt(pi) Gamma(m+k+1)) = (1/2)_{m+1} / (m+k)!`.
pub fn verify_iv1(m: u64, k: u64) -> IdentityReport {
    let scale = Rational::new(1.into(), BigInt::one() << (2 * m + 1) as usize);
    let lhs = iv1_stream(m, k).finite_sum(m).expect("lower parameters are positive") * scale;
    // (1/2)_{m+1} = (2m+1)!! / 2^(m+1)
    let odd = (0..=m).fold(BigInt::one(), |acc, i| acc * (2 * i + 1));
    let target = Rational::new(odd, factorial(m + k) << (m + 1) as usize);
    IdentityReport::new(IdentityId::IV1, m, k, lhs, target)
}

pub fn verify_iv2(m: u64, k: u64) -> IdentityReport {
    IdentityReport::new(IdentityId::IV2, m, k, sum(iv2_terms(m, k)), Rational::one())
}

/// IV3 on its stated range `k >= m`.
pub fn verify_iv3(m: u64, k: i64) -> Result<IdentityReport> {
    if k < m as i64 {
        return Err(Error::Domain(format!(
            "IV3 is only stated for k >= m; got m = {m}, k = {k}"
        )));
    }
    Ok(iv3_report(m, k as u64))
}

/// IV3 without the `k >= m` restriction. Cells with `k < m` are marked
/// exploratory; they are not covered by the identity as stated.
pub fn verify_iv3_exploratory(m: u64, k: u64) -> IdentityReport {
    iv3_report(m, k)
}

fn iv3_report(m: u64, k: u64) -> IdentityReport {
    let terms = iv3_terms(m, k);
    let termwise = (k >= m).then(|| terms == iv2_terms(m, k - m));
    let mut r = IdentityReport::new(IdentityId::IV3, m, k, sum(terms), Rational::one());
    r.matches_iv2_termwise = termwise;
    r.exploratory = k < m;
    r
}

/// All admissible cells of `[0, m_max] x [0, k_max]`, ordered by `(m, k)`.
/// IV3 keeps only `k >= m`.
pub fn sweep(id: IdentityId, m_max: u64, k_max: u64) -> Vec<IdentityReport> {
    let cells: Vec<(u64, u64)> = (0..=m_max)
        .flat_map(|m| (0..=k_max).map(move |k| (m, k)))
        .filter(|&(m, k)| id != IdentityId::IV3 || k >= m)
        .collect();
    cells
        .into_par_iter()
        .map(|(m, k)| match id {
            IdentityId::IV1 => verify_iv1(m, k),
            IdentityId::IV2 => verify_iv2(m, k),
            IdentityId::IV3 => iv3_report(m, k),
        })
        .collect()
}
