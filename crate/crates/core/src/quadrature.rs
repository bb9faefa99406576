//! Tanh-sinh (double-exponential) quadrature with level doubling, used as an
//! independent oracle for the integral identities.
//!
//! Nodes are handed to the integrand together with their distances to both
//! endpoints, so factors like (t−a)^{α−1} keep full relative precision next
//! to the endpoints.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::{ChiXiFamily, EulerIntegralSpec, GeneratingIntegralSpec};
use crate::scalar::{beta_fn, log_beta_signed};
use crate::series::{mittag_leffler_fast, neumaier, SeriesPolicy};

/// Largest |s| of the transformed variable; at this point the node sits
/// about 1e-300 from the endpoint.
const S_MAX: f64 = 6.1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraturePolicy {
    pub target_abs_tol: f64,
    pub max_levels: usize,
    pub min_levels: usize,
}

impl Default for QuadraturePolicy {
    fn default() -> Self {
        Self { target_abs_tol: 1e-12, max_levels: 12, min_levels: 3 }
    }
}

impl QuadraturePolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_tol > 0.0) {
            return Err(Error::Policy(format!("target_abs_tol must be positive, got {}", self.target_abs_tol)));
        }
        if self.min_levels < 1 || self.max_levels < self.min_levels {
            return Err(Error::Policy(format!(
                "need max_levels >= min_levels >= 1, got {} and {}",
                self.max_levels, self.min_levels
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub evaluations: usize,
    /// |I_L − I_{L−1}| for L = 1, 2, …
    pub level_errors: Vec<f64>,
}

/// A quadrature node t with its distances t − a and b − t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub t: f64,
    pub from_a: f64,
    pub to_b: f64,
}

#[derive(Default)]
struct ComplexSum {
    re: (f64, f64),
    im: (f64, f64),
}

impl ComplexSum {
    fn add(&mut self, z: Complex64) {
        self.re = neumaier(self.re.0, self.re.1, z.re);
        self.im = neumaier(self.im.0, self.im.1, z.im);
    }

    fn value(&self) -> Complex64 {
        Complex64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

/// Weighted sum over the nodes s = k·h with odd k (or every k when `all`).
fn level_sum<F>(f: &mut F, a: f64, b: f64, h: f64, all: bool, evals: &mut usize) -> Result<Complex64>
where
    F: FnMut(Node) -> Result<Complex64>,
{
    let len = b - a;
    let half = 0.5 * len;
    let mut sum = ComplexSum::default();
    if all {
        let mid = f(Node { t: a + half, from_a: half, to_b: half })?;
        *evals += 1;
        if !(mid.re.is_finite() && mid.im.is_finite()) {
            return Err(Error::Evaluation(a + half));
        }
        sum.add(mid * FRAC_PI_2);
    }
    let step = if all { 1 } else { 2 };
    let mut k = 1usize;
    loop {
        let s = k as f64 * h;
        if s > S_MAX {
            break;
        }
        let u = FRAC_PI_2 * s.sinh();
        let e = (-2.0 * u).exp();
        // distance of the node from the nearer endpoint, and its weight
        let near = len * e / (1.0 + e);
        let w = FRAC_PI_2 * s.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if near > 0.0 && w > 0.0 {
            let far = len - near;
            let right = f(Node { t: b - near, from_a: far, to_b: near })?;
            let left = f(Node { t: a + near, from_a: near, to_b: far })?;
            *evals += 2;
            for (v, t) in [(right, b - near), (left, a + near)] {
                if !(v.re.is_finite() && v.im.is_finite()) {
                    return Err(Error::Evaluation(t));
                }
            }
            sum.add((right + left) * w);
        }
        k += step;
    }
    Ok(sum.value() * (half * h))
}

/// ∫_a^b f over nodes carrying endpoint distances.
pub fn tanh_sinh_integrate_nodes<F>(mut f: F, a: f64, b: f64, policy: &QuadraturePolicy) -> Result<QuadratureResult>
where
    F: FnMut(Node) -> Result<Complex64>,
{
    policy.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("need finite a < b, got a = {a}, b = {b}")));
    }
    let mut evals = 0;
    let mut h = 1.0;
    let mut value = level_sum(&mut f, a, b, h, true, &mut evals)?;
    let mut level_errors = Vec::new();
    let mut stalled = 0;
    for level in 1..=policy.max_levels {
        h *= 0.5;
        let fresh = level_sum(&mut f, a, b, h, false, &mut evals)?;
        let next = value * 0.5 + fresh;
        let err = (next - value).norm();
        value = next;
        let tol = policy.target_abs_tol * value.norm().max(1.0);
        if level >= policy.min_levels && err <= tol {
            level_errors.push(err);
            return Ok(QuadratureResult { value, err_estimate: err, evaluations: evals, level_errors });
        }
        if level > policy.min_levels && level_errors.last().is_some_and(|&prev| err >= prev) {
            stalled += 1;
        } else {
            stalled = 0;
        }
        level_errors.push(err);
        if stalled >= 2 {
            break;
        }
    }
    let err_estimate = level_errors.last().copied().unwrap_or(f64::INFINITY);
    Err(Error::NonConvergence { value: value.norm(), err_estimate, levels: level_errors.len() })
}

/// ∫_a^b f(t) dt.
pub fn tanh_sinh_integrate<F>(mut f: F, a: f64, b: f64, policy: &QuadraturePolicy) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Complex64,
{
    tanh_sinh_integrate_nodes(|node| Ok(f(node.t)), a, b, policy)
}

/// 1/B(α,β) ∫_a^b (t−a)^{α−1}(b−t)^{β−1} χ(t)^γ E_λ[p ξ(t)] dt by quadrature.
pub fn evaluate_integral_direct(
    spec: &EulerIntegralSpec,
    qpolicy: &QuadraturePolicy,
    spolicy: &SeriesPolicy,
) -> Result<QuadratureResult> {
    spec.validate()?;
    let (alpha, beta, gamma, lambda, p) = (spec.alpha, spec.beta, spec.gamma, spec.lambda, spec.p);
    let (a, b) = (spec.a, spec.b);
    let len = b - a;
    let (log_b, _) = log_beta_signed(alpha, beta)?;
    let integrand = |n: Node| -> Result<Complex64> {
        let kernel = ((alpha - 1.0) * n.from_a.ln() + (beta - 1.0) * n.to_b.ln() - log_b).exp();
        let (chi_pow, xi) = match &spec.family {
            ChiXiFamily::T1 { alpha1, alpha2, x1, x2 } => (
                (1.0 - x1 * n.t).powf(-alpha1) * (1.0 - x2 * n.t).powf(-alpha2),
                n.from_a * n.to_b,
            ),
            ChiXiFamily::T2 { alpha1, alpha2, x1, x2 } => (
                (1.0 - x1 * n.from_a).powf(-alpha1) * (1.0 - x2 * n.to_b).powf(-alpha2),
                n.from_a * n.to_b,
            ),
            ChiXiFamily::T3 { u, v } => ((u * n.t + v).powf(gamma), n.from_a * n.to_b),
            ChiXiFamily::T4 { nu, mu } => {
                let chi = len + nu * n.from_a + mu * n.to_b;
                (chi.powf(gamma), n.from_a * n.to_b / (chi * chi))
            }
            ChiXiFamily::TN { alphas, xs } => (
                alphas.iter().zip(xs).map(|(al, x)| (1.0 - x * n.from_a).powf(-al)).product(),
                n.from_a * n.to_b,
            ),
        };
        let e = mittag_leffler_fast(lambda, p * xi, spolicy)?;
        Ok(e * (kernel * chi_pow))
    };
    tanh_sinh_integrate_nodes(integrand, a, b, qpolicy)
}

/// ∫₀¹ u^{r−1}(1−u)^{s−r−1} G(x, t u^δ(1−u)^ω) Π(1−x_i u)^{−α_i} E_λ[p u(1−u)] du by quadrature.
pub fn evaluate_generating_integral_direct(
    spec: &GeneratingIntegralSpec,
    qpolicy: &QuadraturePolicy,
    spolicy: &SeriesPolicy,
) -> Result<QuadratureResult> {
    spec.validate()?;
    let (r, s) = (spec.r, spec.s);
    let integrand = |n: Node| -> Result<Complex64> {
        let kernel = ((r - 1.0) * n.from_a.ln() + (s - r - 1.0) * n.to_b.ln()).exp();
        let g = spec.weight_factor(n.from_a, n.to_b, spolicy)?;
        let e = mittag_leffler_fast(spec.lambda, spec.p * (n.from_a * n.to_b), spolicy)?;
        Ok(g * e * kernel)
    };
    tanh_sinh_integrate_nodes(integrand, 0.0, 1.0, qpolicy)
}

/// B(x, y) by quadrature of its defining integral.
pub fn beta_by_quadrature(x: f64, y: f64, policy: &QuadraturePolicy) -> Result<QuadratureResult> {
    beta_fn(x, y)?;
    tanh_sinh_integrate_nodes(
        |n| Ok(Complex64::new(((x - 1.0) * n.from_a.ln() + (y - 1.0) * n.to_b.ln()).exp(), 0.0)),
        0.0,
        1.0,
        policy,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::hyper_pfq;
    use std::f64::consts::PI;

    fn q() -> QuadraturePolicy {
        QuadraturePolicy::default()
    }

    #[test]
    fn constant() {
        let r = tanh_sinh_integrate(|_| Complex64::new(1.0, 0.0), 0.0, 1.0, &q()).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-14);
        assert!(r.err_estimate >= 0.0);
    }

    #[test]
    fn arcsine_density() {
        let r = tanh_sinh_integrate_nodes(|n| Ok(Complex64::new(1.0 / (n.from_a * n.to_b).sqrt(), 0.0)), 0.0, 1.0, &q()).unwrap();
        assert!((r.value.re - PI).abs() < 1e-13 * PI, "{}", r.value.re);
    }

    #[test]
    fn gauss_integral_representation() {
        let r = tanh_sinh_integrate_nodes(
            |n| Ok(Complex64::new(n.from_a.powf(0.2) * n.to_b.powf(1.3) * (1.0 - 0.3 * n.t).powf(-0.5), 0.0)),
            0.0,
            1.0,
            &q(),
        )
        .unwrap();
        let f = hyper_pfq(&[0.5, 1.2], &[3.5], Complex64::new(0.3, 0.0), &SeriesPolicy::default()).unwrap().value.re;
        let expect = beta_fn(1.2, 2.3).unwrap() * f;
        assert!((r.value.re - expect).abs() < 1e-13 * expect);
    }

    #[test]
    fn shifted_interval() {
        let r = tanh_sinh_integrate(|t| Complex64::new(t * t, t), -1.0, 2.0, &q()).unwrap();
        assert!((r.value - Complex64::new(3.0, 1.5)).norm() < 1e-13);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(tanh_sinh_integrate(|_| Complex64::new(1.0, 0.0), 1.0, 0.0, &q()).is_err());
        let bad = QuadraturePolicy { min_levels: 5, max_levels: 4, ..q() };
        assert!(matches!(tanh_sinh_integrate(|_| Complex64::new(1.0, 0.0), 0.0, 1.0, &bad), Err(Error::Policy(_))));
    }

    #[test]
    fn non_finite_integrand() {
        let e = tanh_sinh_integrate(|_| Complex64::new(f64::NAN, 0.0), 0.0, 1.0, &q()).unwrap_err();
        assert!(matches!(e, Error::Evaluation(_)));
    }

    #[test]
    fn non_convergence_on_nonintegrable() {
        let e = tanh_sinh_integrate_nodes(|n| Ok(Complex64::new(1.0 / n.from_a, 0.0)), 0.0, 1.0, &q()).unwrap_err();
        assert!(matches!(e, Error::NonConvergence { .. }), "{e:?}");
    }

    #[test]
    fn unit_chi_at_zero_p() {
        let spec = EulerIntegralSpec::theorem3(0.7, 2.2, -1.3, 0.0, 1.0, 0.0, 1.0, 0.5, Complex64::new(0.0, 0.0)).unwrap();
        let r = evaluate_integral_direct(&spec, &q(), &SeriesPolicy::default()).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-13);
    }

    #[test]
    fn order_zero_domain_at_nodes() {
        let mut spec = EulerIntegralSpec::theorem1(1.0, 1.0, 0.5, 0.5, 0.1, 0.1, 0.0, Complex64::new(3.0, 0.0)).unwrap();
        spec.p = Complex64::new(4.5, 0.0);
        assert!(matches!(evaluate_integral_direct(&spec, &q(), &SeriesPolicy::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn beta_oracle() {
        let r = beta_by_quadrature(0.3, 4.1, &q()).unwrap();
        let b = beta_fn(0.3, 4.1).unwrap();
        assert!((r.value.re - b).abs() < 1e-13 * b);
    }
}
