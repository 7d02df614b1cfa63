//! Exact rationals, factorial kernels, the scalar trait and the gamma function.

pub mod bigreal;
pub mod context;
pub mod gamma;
pub mod nu;
pub mod rational;
pub mod real;

pub use bigreal::BigReal;
pub use context::PrecisionContext;
pub use gamma::gamma;
pub use nu::NuParam;
pub use rational::{
    binomial, falling_factorial, gamma_quotient_exact, parse_rational, rising_factorial, to_pq, Rational,
};
pub use real::Real;
