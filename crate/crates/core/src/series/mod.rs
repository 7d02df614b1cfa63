//! Coefficient streams, the formal gamma-quotient expansion and its checks.

pub mod bessel;
pub mod expansion;
pub mod heaviside;
pub mod stream;
pub mod wronskian;

pub use bessel::{a_coeff, b_coeff};
pub use expansion::{c_coeff_partial, gamma_quotient_expansion, recurrence_residual, FormalExpansionDiagnostics};
pub use heaviside::{heaviside_exp, HeavisideSum};
pub use stream::TermStream;
pub use wronskian::{auto_i_truncation, optimal_k_truncation, wronskian_check, WronskianReport};
