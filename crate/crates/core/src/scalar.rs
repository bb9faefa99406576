//! Real scalar kernels: log-gamma, gamma, Pochhammer symbol and beta.
//!
//! Gamma is evaluated with the Lanczos approximation (g = 7, nine
//! coefficients) and the reflection formula below one half. Series
//! coefficients elsewhere in the crate are assembled from
//! [`log_gamma_signed`] so that large gamma ratios never overflow.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex value used for every series argument and result.
pub type ComplexScalar = Complex64;

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// n! for n = 0..=22, all exactly representable.
const FACTORIALS: [f64; 23] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// Largest argument for which Γ(x) is finite in double precision.
const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

/// True for 0, −1, −2, …
pub fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// sin(πx) with exact argument reduction, so that sin_pi(n) is exactly zero.
pub fn sin_pi(x: f64) -> f64 {
    let mut r = x - 2.0 * (x * 0.5).round();
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

fn factorial_index(x: f64) -> Option<usize> {
    if (1.0..=23.0).contains(&x) && x == x.floor() {
        Some(x as usize - 1)
    } else {
        None
    }
}

fn lanczos_sum(z: f64) -> f64 {
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    acc
}

fn pole(arg: f64, context: &'static str) -> Error {
    Error::Pole { arg, context }
}

/// ln|Γ(x)| together with the sign of Γ(x).
pub fn log_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(Error::Domain("log_gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(pole(x, "log_gamma"));
    }
    if let Some(i) = factorial_index(x) {
        return Ok((FACTORIALS[i].ln(), 1.0));
    }
    if x >= 0.5 {
        let z = x - 1.0;
        let t = z + LANCZOS_G + 0.5;
        let value = LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln();
        return Ok((value, 1.0));
    }
    // Γ(x)Γ(1−x) = π / sin(πx); Γ(1−x) > 0 here.
    let s = sin_pi(x);
    let (reflected, _) = log_gamma_signed(1.0 - x)?;
    Ok((PI.ln() - s.abs().ln() - reflected, s.signum()))
}

/// ln Γ(x) for x > 0 and ln|Γ(x)| for negative non-integers.
pub fn log_gamma(x: f64) -> Result<f64> {
    log_gamma_signed(x).map(|(v, _)| v)
}

/// Γ(x), with the reflection formula for x < 1/2.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(pole(x, "gamma"));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow(format!("gamma({x}) exceeds double range")));
    }
    if let Some(i) = factorial_index(x) {
        return Ok(FACTORIALS[i]);
    }
    let value = if x >= 0.5 {
        let z = x - 1.0;
        let t = z + LANCZOS_G + 0.5;
        // split the power so t^(z+1/2) cannot overflow before the exponential damps it
        let half_pow = t.powf(0.5 * (z + 0.5));
        (2.0 * PI).sqrt() * half_pow * (-t).exp() * half_pow * lanczos_sum(z)
    } else if 1.0 - x > GAMMA_MAX_ARG {
        let (lg, sign) = log_gamma_signed(x)?;
        sign * lg.exp()
    } else {
        PI / (sin_pi(x) * gamma_fn(1.0 - x)?)
    };
    if !value.is_finite() {
        return Err(Error::Overflow(format!("gamma({x}) exceeds double range")));
    }
    Ok(value)
}

/// Rising factorial (a)_n = a(a+1)…(a+n−1), with (a)_0 = 1.
pub fn pochhammer(a: f64, n: u32) -> Result<f64> {
    let mut acc = 1.0;
    for i in 0..n {
        acc *= a + f64::from(i);
    }
    if !acc.is_finite() {
        return Err(Error::Overflow(format!(
            "pochhammer({a}, {n}) exceeds double range; use log_pochhammer_signed"
        )));
    }
    Ok(acc)
}

/// ln|(a)_n| and the sign of (a)_n. A vanishing symbol is reported as
/// `(-inf, 0.0)`.
pub fn log_pochhammer_signed(a: f64, n: u32) -> Result<(f64, f64)> {
    if n == 0 {
        return Ok((0.0, 1.0));
    }
    if is_nonpositive_integer(a) {
        if f64::from(n) > -a {
            return Ok((f64::NEG_INFINITY, 0.0));
        }
        let mut log = 0.0;
        let mut sign = 1.0;
        for i in 0..n {
            let f = a + f64::from(i);
            log += f.abs().ln();
            sign *= f.signum();
        }
        return Ok((log, sign));
    }
    let (top, s1) = log_gamma_signed(a + f64::from(n))?;
    let (bottom, s2) = log_gamma_signed(a)?;
    Ok((top - bottom, s1 * s2))
}

/// ln|B(x, y)| and its sign.
pub fn log_beta_signed(x: f64, y: f64) -> Result<(f64, f64)> {
    let (lx, sx) = log_gamma_signed(x)?;
    let (ly, sy) = log_gamma_signed(y)?;
    if is_nonpositive_integer(x + y) {
        // 1/Γ(x+y) vanishes
        return Ok((f64::NEG_INFINITY, 0.0));
    }
    let (lxy, sxy) = log_gamma_signed(x + y)?;
    Ok((lx + ly - lxy, sx * sy * sxy))
}

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y), evaluated in log space.
pub fn beta_fn(x: f64, y: f64) -> Result<f64> {
    let (log, sign) = log_beta_signed(x, y)?;
    let value = sign * log.exp();
    if !value.is_finite() {
        return Err(Error::Overflow(format!("beta({x}, {y}) exceeds double range")));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn log_gamma_known_values() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-15);
        assert!((log_gamma(0.5).unwrap() - 0.572_364_942_924_700_1).abs() < 1e-14);
        assert!(rel(log_gamma(10.0).unwrap(), 362880f64.ln()) < 1e-15);
        assert!(rel(log_gamma(100.0).unwrap(), 359.134_205_369_575_4) < 1e-14);
    }

    #[test]
    fn gamma_known_values() {
        assert_eq!(gamma_fn(5.0).unwrap(), 24.0);
        assert!(rel(gamma_fn(0.5).unwrap(), PI.sqrt()) < 1e-14);
        assert!(rel(gamma_fn(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-14);
        assert!(rel(gamma_fn(-1.5).unwrap(), 4.0 * PI.sqrt() / 3.0) < 1e-14);
        assert!(rel(gamma_fn(170.5).unwrap(), log_gamma(170.5).unwrap().exp()) < 1e-12);
    }

    #[test]
    fn poles_are_reported() {
        for x in [0.0, -1.0, -2.0, -17.0] {
            assert!(matches!(gamma_fn(x), Err(Error::Pole { .. })));
            assert!(matches!(log_gamma(x), Err(Error::Pole { .. })));
        }
        assert!(matches!(beta_fn(-1.0, 2.0), Err(Error::Pole { .. })));
    }

    #[test]
    fn gamma_overflow() {
        assert!(matches!(gamma_fn(172.0), Err(Error::Overflow(_))));
        assert!(log_gamma(172.0).unwrap().is_finite());
    }

    #[test]
    fn negative_sign_tracking() {
        let (_, s) = log_gamma_signed(-0.5).unwrap();
        assert_eq!(s, -1.0);
        let (_, s) = log_gamma_signed(-1.5).unwrap();
        assert_eq!(s, 1.0);
        let (l, s) = log_gamma_signed(-2.3).unwrap();
        assert!(rel(s * l.exp(), gamma_fn(-2.3).unwrap()) < 1e-13);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.0, 4).unwrap(), 360.0);
        assert_eq!(pochhammer(0.0, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(-2.7, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(1.0, 6).unwrap(), 720.0);
        assert_eq!(pochhammer(-3.0, 5).unwrap(), 0.0);
        assert_eq!(pochhammer(-3.0, 3).unwrap(), -6.0);
        assert!(matches!(pochhammer(10.0, 400), Err(Error::Overflow(_))));
    }

    #[test]
    fn log_pochhammer_matches_product() {
        for &(a, n) in &[(0.3, 7u32), (-2.5, 6), (4.0, 20), (-3.0, 3), (-0.7, 1)] {
            let (l, s) = log_pochhammer_signed(a, n).unwrap();
            assert!(rel(s * l.exp(), pochhammer(a, n).unwrap()) < 1e-13, "({a},{n})");
        }
        assert_eq!(log_pochhammer_signed(-3.0, 4).unwrap().1, 0.0);
    }

    #[test]
    fn beta_values() {
        assert!(rel(beta_fn(1.0, 1.0).unwrap(), 1.0) < 1e-15);
        assert!(rel(beta_fn(2.0, 3.0).unwrap(), 1.0 / 12.0) < 1e-15);
        assert!(rel(beta_fn(0.5, 0.5).unwrap(), PI) < 1e-14);
        assert_eq!(beta_fn(-0.5, -0.5).unwrap(), 0.0);
    }

    #[test]
    fn sin_pi_is_exact_at_integers() {
        for n in -5..5 {
            assert_eq!(sin_pi(f64::from(n)), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(-1.5) - 1.0).abs() < 1e-16);
    }
}
