//! Exact hypergeometric-type term streams.
//!
//! A stream produces
//!
//! ```text
//! term_n = C * x^n * prod_i (u_i)_n / prod_j (l_j)_n * (c0 + c1 n)
//! ```
//!
//! by advancing the Pochhammer core with its ratio
//! `x * prod_i (u_i + n) / prod_j (l_j + n)`. The optional affine factor is
//! applied on read, so a zero of it never breaks the recurrence.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::{int, rising_factorial, to_pq};
use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct TermStream {
    prefactor: Rational,
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    argument: Rational,
    linear: Option<(Rational, Rational)>,
    index: u64,
    core: Rational,
}

impl TermStream {
    pub fn new(prefactor: Rational, upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        Self {
            core: prefactor.clone(),
            prefactor,
            upper,
            lower,
            argument,
            linear: None,
            index: 0,
        }
    }

    /// Multiplies every term by `c0 + c1 n`.
    pub fn with_linear(mut self, c0: Rational, c1: Rational) -> Self {
        self.linear = Some((c0, c1));
        self
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    fn linear_at(&self, n: u64) -> Rational {
        match &self.linear {
            Some((c0, c1)) => c0 + c1 * int(n as i64),
            None => Rational::one(),
        }
    }

    /// Term at the current index.
    pub fn term(&self) -> Rational {
        if self.core.is_zero() {
            return Rational::zero();
        }
        &self.core * self.linear_at(self.index)
    }

    /// True once the core has hit an exact zero: every later term vanishes.
    pub fn terminated(&self) -> bool {
        self.core.is_zero()
    }

    /// Moves to the next index via the exact ratio rule.
    pub fn advance(&mut self) -> Result<()> {
        let n = int(self.index as i64);
        if !self.core.is_zero() {
            let mut den = Rational::one();
            for l in &self.lower {
                let f = l + &n;
                if f.is_zero() {
                    return Err(Error::DegenerateOrder {
                        base: to_pq(l),
                        index: self.index + 1,
                    });
                }
                den *= f;
            }
            let mut num = self.argument.clone();
            for u in &self.upper {
                num *= u + &n;
            }
            self.core = &self.core * num / den;
        } else {
            // a zero core stays zero, but the denominators must still be defined
            for l in &self.lower {
                if (l + &n).is_zero() {
                    return Err(Error::DegenerateOrder {
                        base: to_pq(l),
                        index: self.index + 1,
                    });
                }
            }
        }
        self.index += 1;
        Ok(())
    }

    /// Returns the current term, then advances.
    pub fn next_term(&mut self) -> Result<Rational> {
        let t = self.term();
        self.advance()?;
        Ok(t)
    }

    /// `sum_{n=0}^{last} term_n`, independent of the current position.
    ///
    /// Nested (Horner) evaluation `L_0 + r_0 (L_1 + r_1 (L_2 + ...))` on an
    /// integer numerator/denominator pair, reduced once at the end; much
    /// cheaper than adding reduced rationals term by term.
    pub fn finite_sum(&self, last: u64) -> Result<Rational> {
        // every denominator up to `last` must exist, even past a zero
        for l in &self.lower {
            if l.is_integer() && !l.is_positive() && -l < int(last as i64) {
                return Err(Error::DegenerateOrder {
                    base: to_pq(l),
                    index: last,
                });
            }
        }
        // r_n = A(n)/B(n) with u + n = (u_num + n u_den) / u_den
        let scale_a = self
            .lower
            .iter()
            .fold(self.argument.numer().clone(), |acc, l| acc * l.denom());
        let scale_b = self
            .upper
            .iter()
            .fold(self.argument.denom().clone(), |acc, u| acc * u.denom());
        let shifted = |q: &Rational, n: &BigInt| q.numer() + n * q.denom();
        let (c0, c1) = self.linear.clone().unwrap_or((Rational::one(), Rational::zero()));
        // L_n = (c0_num c1_den + n c1_num c0_den) / (c0_den c1_den)
        let f = c0.denom() * c1.denom();
        let lin = |n: &BigInt| c0.numer() * c1.denom() + n * c1.numer() * c0.denom();

        let (mut p, mut q) = (lin(&BigInt::from(last)), f.clone());
        for n in (0..last).rev() {
            let n = BigInt::from(n);
            let a = self.upper.iter().fold(scale_a.clone(), |acc, u| acc * shifted(u, &n));
            let e = lin(&n);
            if a.is_zero() {
                (p, q) = (e, f.clone());
                continue;
            }
            let b = self.lower.iter().fold(scale_b.clone(), |acc, l| acc * shifted(l, &n));
            let bq = b * &q;
            (p, q) = (e * &bq + &f * a * &p, &f * bq);
        }
        Ok(&self.prefactor * Rational::new(p, q))
    }

    /// Regenerates term `n` from the closed form, independent of the recurrence.
    pub fn term_at(&self, n: u64) -> Result<Rational> {
        let mut den = Rational::one();
        for l in &self.lower {
            let p = rising_factorial(l, n);
            if p.is_zero() {
                return Err(Error::DegenerateOrder {
                    base: to_pq(l),
                    index: n,
                });
            }
            den *= p;
        }
        let mut num = &self.prefactor * num_traits::pow(self.argument.clone(), n as usize);
        for u in &self.upper {
            num *= rising_factorial(u, n);
        }
        Ok(num / den * self.linear_at(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{factorial, ratio};

    #[test]
    fn exponential_terms() {
        // 3^n / n!
        let mut s = TermStream::new(int(1), vec![], vec![int(1)], int(3));
        for n in 0..20u64 {
            let want = Rational::new(num_traits::pow(3.into(), n as usize), factorial(n));
            assert_eq!(s.next_term().unwrap(), want);
        }
    }

    #[test]
    fn incremental_matches_direct() {
        let mut s = TermStream::new(
            ratio(2, 7),
            vec![ratio(1, 3), ratio(-5, 2)],
            vec![int(1), ratio(7, 4)],
            ratio(-3, 5),
        )
        .with_linear(ratio(1, 2), int(2));
        for n in 0..30 {
            assert_eq!(s.term(), s.term_at(n).unwrap());
            s.advance().unwrap();
        }
    }

    #[test]
    fn finite_sum_matches_term_sum() {
        let s = TermStream::new(
            ratio(2, 7),
            vec![ratio(1, 3), ratio(-5, 2)],
            vec![int(1), ratio(7, 4)],
            ratio(-3, 5),
        )
        .with_linear(ratio(1, 2), int(2));
        let mut t = s.clone();
        let mut acc = Rational::zero();
        for last in 0..25 {
            acc += t.next_term().unwrap();
            assert_eq!(s.finite_sum(last).unwrap(), acc, "last = {last}");
        }
        // terminating: (-2)_n
        let s = TermStream::new(int(1), vec![int(-2)], vec![int(1)], int(1)).with_linear(int(3), int(1));
        assert_eq!(s.finite_sum(6).unwrap(), int(3) - int(8) + int(5));
        let s = TermStream::new(int(1), vec![], vec![int(-1)], int(1));
        assert!(matches!(s.finite_sum(2), Err(Error::DegenerateOrder { .. })));
    }

    #[test]
    fn termination_is_sticky() {
        // (-2)_n vanishes from n = 3 on
        let mut s = TermStream::new(int(1), vec![int(-2)], vec![int(1)], int(1));
        let terms: Vec<_> = (0..6).map(|_| s.next_term().unwrap()).collect();
        assert_eq!(terms, vec![int(1), int(-2), int(1), int(0), int(0), int(0)]);
        assert!(s.terminated());
    }

    #[test]
    fn degenerate_denominator() {
        let mut s = TermStream::new(int(1), vec![], vec![int(-1)], int(1));
        s.advance().unwrap(); // (-1)_1 = -1
        assert!(matches!(s.advance(), Err(Error::DegenerateOrder { index: 2, .. })));
        assert!(matches!(s.term_at(2), Err(Error::DegenerateOrder { .. })));
    }

    #[test]
    fn linear_zero_does_not_poison_later_terms() {
        // (n - 2) * 1
        let mut s = TermStream::new(int(1), vec![], vec![], int(1)).with_linear(int(-2), int(1));
        let terms: Vec<_> = (0..4).map(|_| s.next_term().unwrap()).collect();
        assert_eq!(terms, vec![int(-2), int(-1), int(0), int(1)]);
    }
}
