//! Coefficients of the modified Bessel expansions.
//!
//! `K_nu(z) ~ sqrt(pi/2) e^-z sum_n a_n(nu) z^(-n-1/2)` with
//! `a_n(nu) = (nu+1/2)_n <nu-1/2>_n / (n! 2^n)`, and
//! `I_nu(z) = e^-z / (2^nu Gamma(nu+1)) sum_j b_j(nu) z^(j+nu)` with
//! `b_j(nu) = 2^j (nu+1/2)_j / (j! (2nu+1)_j)`.

use super::stream::TermStream;
use crate::arith::rational::{int, ratio};
use crate::arith::{NuParam, Rational};
use crate::error::Result;

/// Stream of `a_n(nu)`; `<nu-1/2>_n = (-1)^n (1/2-nu)_n`.
pub fn a_stream(nu: &NuParam) -> TermStream {
    let v = nu.value();
    TermStream::new(
        int(1),
        vec![v + ratio(1, 2), ratio(1, 2) - v],
        vec![int(1)],
        ratio(-1, 2),
    )
}

/// Stream of `b_j(nu)`.
pub fn b_stream(nu: &NuParam) -> TermStream {
    let v = nu.value();
    TermStream::new(int(1), vec![v + ratio(1, 2)], vec![int(1), v * int(2) + int(1)], int(2))
}

pub fn a_coeff(nu: &NuParam, n: u64) -> Rational {
    // lower parameter is 1, never degenerate
    a_stream(nu).term_at(n).expect("a_n has no vanishing denominator")
}

pub fn b_coeff(nu: &NuParam, j: u64) -> Result<Rational> {
    b_stream(nu).term_at(j)
}

/// First `count` values of `a_n(nu)` by recurrence.
pub fn a_coeffs(nu: &NuParam, count: usize) -> Vec<Rational> {
    let mut s = a_stream(nu);
    (0..count)
        .map(|_| s.next_term().expect("a_n has no vanishing denominator"))
        .collect()
}

/// First `count` values of `b_j(nu)` by recurrence.
pub fn b_coeffs(nu: &NuParam, count: usize) -> Result<Vec<Rational>> {
    let mut s = b_stream(nu);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(s.term());
        if out.len() < count {
            s.advance()?;
        }
    }
    Ok(out)
}
