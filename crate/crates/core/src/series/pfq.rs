use num_complex::Complex64;

use super::{SeriesPolicy, SeriesResult, Summation};
use crate::error::{Error, Result};
use crate::scalar::is_nonpositive_integer;

/// pFq(a; b; z) = Σ_n Π (a_i)_n / Π (b_j)_n · z^n / n!.
///
/// Terms follow the Pochhammer ratio recurrence, which is exact for unit
/// weights and independent of the log-gamma route used by the Wright series.
pub fn hyper_pfq(num: &[f64], den: &[f64], z: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    policy.validate()?;
    for &b in den {
        if is_nonpositive_integer(b) {
            return Err(Error::Pole { arg: b, context: "pFq denominator parameter" });
        }
        if !b.is_finite() {
            return Err(Error::Domain(format!("non-finite denominator parameter {b}")));
        }
    }
    if num.iter().any(|a| !a.is_finite()) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("non-finite pFq input".into()));
    }
    let mut sum = Summation::new(policy);
    let mut term = Complex64::new(1.0, 0.0);
    let mut n = 0usize;
    loop {
        if sum.add(term)? {
            return Ok(sum.finish());
        }
        let nf = n as f64;
        let mut ratio = 1.0;
        for &a in num {
            ratio *= a + nf;
        }
        for &b in den {
            ratio /= b + nf;
        }
        term = term * z * (ratio / (nf + 1.0));
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, LN_2};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn zero_f_zero_is_exp() {
        let r = hyper_pfq(&[], &[], c(1.0), &SeriesPolicy::default()).unwrap();
        assert!((r.value.re - E).abs() / E < 1e-15);
    }

    #[test]
    fn log_series() {
        let r = hyper_pfq(&[1.0, 1.0], &[2.0], c(0.5), &SeriesPolicy::default()).unwrap();
        assert!((r.value.re - 2.0 * LN_2).abs() < 1e-14);
    }

    #[test]
    fn terminating_polynomial() {
        // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        let (b, cc, z) = (1.5, 2.5, 0.7);
        let expect = 1.0 - 2.0 * b * z / cc + b * (b + 1.0) * z * z / (cc * (cc + 1.0));
        let r = hyper_pfq(&[-2.0, b], &[cc], c(z), &SeriesPolicy::default()).unwrap();
        assert!((r.value.re - expect).abs() < 1e-15);
        assert!(r.terms_used < 10);
    }

    #[test]
    fn denominator_pole() {
        let err = hyper_pfq(&[1.0], &[-3.0], c(0.1), &SeriesPolicy::default()).unwrap_err();
        assert!(matches!(err, Error::Pole { .. }));
    }

    #[test]
    fn divergent_two_f_zero() {
        let err = hyper_pfq(&[1.0, 1.0], &[], c(1.0), &SeriesPolicy::default()).unwrap_err();
        assert!(err.is_convergence());
    }
}
