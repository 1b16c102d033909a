//! Special functions and Gauss quadrature.

mod gamma;
mod poly;
mod quadrature;
pub mod series;

pub use gamma::log_gamma;
pub use poly::{jacobi, jacobi_deriv, laguerre, laguerre_deriv};
pub use quadrature::{gauss_rule, QuadratureRule, RuleKind};

pub(crate) use gamma::{ln_factorial, ln_gamma};
pub(crate) use poly::{jacobi_deriv_raw, jacobi_raw, laguerre_deriv_raw, laguerre_raw};
