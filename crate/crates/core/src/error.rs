use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at {arg} ({context})")]
    Pole { arg: f64, context: &'static str },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series diverges: term {term:.3e} at index {index} exceeds growth limit")]
    Divergence { index: usize, term: f64 },

    #[error("series not converged after {max_terms} terms (last term {last_term:.3e})")]
    MaxTerms { max_terms: usize, last_term: f64 },

    #[error("quadrature did not converge: estimate {value} with error {err_estimate:.3e} after {levels} levels")]
    NonConvergence { value: f64, err_estimate: f64, levels: usize },

    #[error("integrand returned a non-finite value at t = {0}")]
    Evaluation(f64),

    #[error("invalid policy: {0}")]
    Policy(String),
}

impl Error {
    /// Domain, pole and overflow failures mean the inputs are outside what
    /// can be evaluated; the rest are convergence failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. } | Error::Overflow(_) | Error::Domain(_) | Error::Policy(_)
        )
    }

    pub fn is_convergence(&self) -> bool {
        !self.is_domain()
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
