//! Truncated-series evaluation of the Wright function, its normalized form,
//! the generalized hypergeometric series and the Mittag-Leffler function.
//!
//! All series share one stopping rule ([`SeriesPolicy`]): the partial sum is
//! accepted once `consecutive_small` successive terms satisfy
//! `|term| <= rel_tol * |partial| + abs_tol`.

mod dd;
mod mittag_leffler;
mod pfq;
mod wright;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use mittag_leffler::{mittag_leffler, mittag_leffler_fast};
pub use pfq::hyper_pfq;
pub use wright::{wright_psi, wright_psi_normalized, WrightSpec};

/// Environment variable overriding [`SeriesPolicy::max_terms`].
pub const MAX_TERMS_ENV: &str = "WRIGHTLAB_MAX_TERMS";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub consecutive_small: usize,
    pub max_terms: usize,
    pub divergence_growth_limit: f64,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            abs_tol: 1e-300,
            consecutive_small: 3,
            max_terms: 20_000,
            divergence_growth_limit: 1e8,
        }
    }
}

impl SeriesPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Policy(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::Policy(format!("abs_tol must be nonnegative, got {}", self.abs_tol)));
        }
        if self.consecutive_small < 1 {
            return Err(Error::Policy("consecutive_small must be at least 1".into()));
        }
        if self.max_terms < 1 {
            return Err(Error::Policy("max_terms must be at least 1".into()));
        }
        if !(self.divergence_growth_limit > 0.0) {
            return Err(Error::Policy("divergence_growth_limit must be positive".into()));
        }
        Ok(())
    }

    /// Applies `WRIGHTLAB_MAX_TERMS` when set to a positive integer.
    pub fn with_env_overrides(mut self) -> Result<Self> {
        if let Ok(raw) = std::env::var(MAX_TERMS_ENV) {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::Policy(format!("{MAX_TERMS_ENV}={raw:?} is not an integer")))?;
            self.max_terms = n;
            self.validate()?;
        }
        Ok(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_estimate: f64,
}

/// Convergence bookkeeping shared by every series in the crate. Callers
/// either hand over complex terms (`add`) or keep their own accumulator and
/// report magnitudes (`observe`).
pub(crate) struct Summation<'a> {
    policy: &'a SeriesPolicy,
    sum: Complex64,
    comp: Complex64,
    small_run: usize,
    max_partial: f64,
    terms: usize,
    last_term: f64,
}

impl<'a> Summation<'a> {
    pub(crate) fn new(policy: &'a SeriesPolicy) -> Self {
        Self {
            policy,
            sum: Complex64::new(0.0, 0.0),
            comp: Complex64::new(0.0, 0.0),
            small_run: 0,
            max_partial: 0.0,
            terms: 0,
            last_term: 0.0,
        }
    }

    /// Adds one term with Neumaier compensation; returns `true` once the
    /// stopping rule is met.
    pub(crate) fn add(&mut self, term: Complex64) -> Result<bool> {
        let (re, cre) = neumaier(self.sum.re, self.comp.re, term.re);
        let (im, cim) = neumaier(self.sum.im, self.comp.im, term.im);
        self.sum = Complex64::new(re, im);
        self.comp = Complex64::new(cre, cim);
        let partial = self.value().norm();
        self.observe(term.norm(), partial)
    }

    pub(crate) fn observe(&mut self, term_mag: f64, partial_mag: f64) -> Result<bool> {
        let index = self.terms;
        self.terms += 1;
        if !term_mag.is_finite() || !partial_mag.is_finite() {
            return Err(Error::Divergence { index, term: term_mag });
        }
        if index > 50 && term_mag > self.policy.divergence_growth_limit * self.max_partial {
            return Err(Error::Divergence { index, term: term_mag });
        }
        self.max_partial = self.max_partial.max(partial_mag);
        self.last_term = term_mag;
        if term_mag <= self.policy.rel_tol * partial_mag + self.policy.abs_tol {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        if self.small_run >= self.policy.consecutive_small {
            return Ok(true);
        }
        if self.terms >= self.policy.max_terms {
            return Err(Error::MaxTerms { max_terms: self.policy.max_terms, last_term: term_mag });
        }
        Ok(false)
    }

    pub(crate) fn value(&self) -> Complex64 {
        self.sum + self.comp
    }

    pub(crate) fn tail_estimate(&self) -> f64 {
        self.last_term * self.policy.consecutive_small as f64
    }

    pub(crate) fn finish(self) -> SeriesResult {
        self.finish_with(self.value())
    }

    pub(crate) fn finish_with(&self, value: Complex64) -> SeriesResult {
        SeriesResult { value, terms_used: self.terms, tail_estimate: self.tail_estimate() }
    }
}

/// One step of Neumaier's compensated summation.
pub(crate) fn neumaier(sum: f64, comp: f64, x: f64) -> (f64, f64) {
    let t = sum + x;
    let c = if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
    (t, comp + c)
}

/// Compensated sum of a handful of logarithms.
pub(crate) struct LogSum {
    sum: f64,
    comp: f64,
}

impl LogSum {
    pub(crate) fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    pub(crate) fn add(&mut self, x: f64) {
        let (s, c) = neumaier(self.sum, self.comp, x);
        self.sum = s;
        self.comp = c;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// z^k / |z|^k, exact for real and purely imaginary z.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Phase {
    Real(f64),
    Imaginary(f64),
    General(f64),
}

impl Phase {
    pub(crate) fn of(z: Complex64) -> Self {
        if z.im == 0.0 {
            Phase::Real(if z.re < 0.0 { -1.0 } else { 1.0 })
        } else if z.re == 0.0 {
            Phase::Imaginary(z.im.signum())
        } else {
            Phase::General(z.arg())
        }
    }

    pub(crate) fn power(self, k: usize) -> Complex64 {
        match self {
            Phase::Real(s) => Complex64::new(if k % 2 == 1 { s } else { 1.0 }, 0.0),
            Phase::Imaginary(s) => {
                let sk = if k % 2 == 1 { s } else { 1.0 };
                match k % 4 {
                    0 => Complex64::new(1.0, 0.0),
                    1 => Complex64::new(0.0, sk),
                    2 => Complex64::new(-1.0, 0.0),
                    _ => Complex64::new(0.0, -sk),
                }
            }
            Phase::General(theta) => {
                let a = theta * k as f64;
                Complex64::new(a.cos(), a.sin())
            }
        }
    }
}
