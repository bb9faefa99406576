//! Wright hypergeometric and Mittag-Leffler functions, Appell/Humbert/
//! Lauricella series, closed-form evaluators for Euler-type integrals over
//! these functions, and a tanh-sinh quadrature oracle that checks every
//! closed form against the defining integral.

// Validity checks are written as !(x < bound) so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod identities;
pub mod multivar;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use identities::{ChiXiFamily, EulerIntegralSpec, GeneratingIntegralSpec, GeneratorSpec, IdentityCase};
pub use quadrature::{
    evaluate_generating_integral_direct, evaluate_integral_direct, tanh_sinh_integrate, QuadraturePolicy, QuadratureResult,
};
pub use scalar::{beta_fn, gamma_fn, log_gamma, log_gamma_signed, pochhammer, ComplexScalar};
pub use series::{
    hyper_pfq, mittag_leffler, wright_psi, wright_psi_normalized, SeriesPolicy, SeriesResult, WrightSpec,
};
