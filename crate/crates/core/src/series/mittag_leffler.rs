use num_complex::Complex64;

use super::dd::ComplexDD;
use super::{LogSum, Phase, SeriesPolicy, SeriesResult, Summation};
use crate::error::{Error, Result};
use crate::scalar::log_gamma_signed;

/// Integer orders up to this bound use the exact factorial recurrence.
const MAX_RECURRENCE_ORDER: f64 = 16.0;

/// E_λ(z) = Σ_n z^n / Γ(λn + 1) for real λ ≥ 0.
///
/// For integer λ the terms satisfy t_n = t_{n−1} · z / ((λn)(λn−1)…(λn−λ+1))
/// with exact integer divisors; that recurrence and the partial sum are
/// carried in double-double so that cancelling sums (negative real z)
/// keep full double accuracy. Other orders use log-gamma terms.
pub fn mittag_leffler(lambda: f64, z: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    policy.validate()?;
    check_args(lambda, z)?;
    if lambda == lambda.floor() && lambda <= MAX_RECURRENCE_ORDER {
        integer_order(lambda as u32, z, policy)
    } else {
        general_order(lambda, z, policy)
    }
}

fn check_args(lambda: f64, z: Complex64) -> Result<()> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!("Mittag-Leffler order must be a finite λ >= 0, got {lambda}")));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if lambda == 0.0 && z.norm() >= 1.0 {
        return Err(Error::Domain(format!("E_0(z) = 1/(1-z) requires |z| < 1, got |z| = {}", z.norm())));
    }
    Ok(())
}

fn integer_order(order: u32, z: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    let mut sum = Summation::new(policy);
    let mut acc = ComplexDD::ZERO;
    let mut term = ComplexDD::one();
    let mut n: u64 = 0;
    loop {
        acc = acc.add(term);
        let t = term.to_c64();
        if sum.observe(t.norm(), acc.to_c64().norm())? {
            return Ok(sum.finish_with(acc.to_c64()));
        }
        n += 1;
        term = term.mul_c64(z);
        let top = u64::from(order) * n;
        for j in 0..u64::from(order) {
            term = term.div_f64((top - j) as f64);
        }
    }
}

fn general_order(lambda: f64, z: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    let mut sum = Summation::new(policy);
    let ln_abs_z = z.norm().ln();
    let phase = Phase::of(z);
    let zero = z.norm() == 0.0;
    let mut n = 0usize;
    loop {
        let term = if n == 0 {
            Complex64::new(1.0, 0.0)
        } else if zero {
            Complex64::new(0.0, 0.0)
        } else {
            let nf = n as f64;
            let (lg, sign) = log_gamma_signed(lambda * nf + 1.0)?;
            let mut log = LogSum::new();
            log.add(nf * ln_abs_z);
            log.add(-lg);
            phase.power(n) * (sign * log.value().exp())
        };
        if sum.add(term)? {
            return Ok(sum.finish());
        }
        n += 1;
    }
}

/// Mittag-Leffler value for quadrature nodes: the elementary closed forms
/// 1/(1−z), e^z and cosh √z for λ ∈ {0, 1, 2}, the series otherwise.
pub fn mittag_leffler_fast(lambda: f64, z: Complex64, policy: &SeriesPolicy) -> Result<Complex64> {
    check_args(lambda, z)?;
    if lambda == 0.0 {
        Ok(1.0 / (1.0 - z))
    } else if lambda == 1.0 {
        Ok(z.exp())
    } else if lambda == 2.0 {
        Ok(z.sqrt().cosh())
    } else {
        Ok(mittag_leffler(lambda, z, policy)?.value)
    }
}
