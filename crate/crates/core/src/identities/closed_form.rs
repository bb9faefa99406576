use num_complex::Complex64;

use super::{ChiXiFamily, EulerIntegralSpec, MAX_LAURICELLA_VARIABLES};
use crate::error::{Error, Result};
use crate::multivar::{split_ratios, sum_diagonals, PochhammerPowers, PochhammerRatio, ProductCoefficients};
use crate::scalar::beta_fn;
use crate::series::{hyper_pfq, wright_psi, wright_psi_normalized, SeriesPolicy, SeriesResult, WrightSpec};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn inner_spec(a1: f64, a2: f64, b1: f64, lambda: f64) -> Result<WrightSpec> {
    WrightSpec::new(vec![(a1, 1.0), (a2, 1.0), (1.0, 1.0)], vec![(b1, 2.0), (1.0, lambda)])
}

/// ₃Ψ̂₂[(a₁,1), (a₂,1), (1,1); (b₁,2), (1,λ); p].
pub fn psi_hat_3_2(a1: f64, a2: f64, b1: f64, lambda: f64, p: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    wright_psi_normalized(&inner_spec(a1, a2, b1, lambda)?, p, policy)
}

/// Un-normalized ₃Ψ₂ with the same parameter layout as [`psi_hat_3_2`].
pub(crate) fn psi_3_2(a1: f64, a2: f64, b1: f64, lambda: f64, p: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    wright_psi(&inner_spec(a1, a2, b1, lambda)?, p, policy)
}

/// Outer series whose terms each need one inner Wright evaluation; the
/// reported term count includes the inner ones.
struct Nested {
    inner_terms: usize,
}

impl Nested {
    fn new() -> Self {
        Self { inner_terms: 0 }
    }

    fn psi_hat(&mut self, a1: f64, a2: f64, b1: f64, lambda: f64, p: Complex64, policy: &SeriesPolicy) -> Result<Complex64> {
        let r = psi_hat_3_2(a1, a2, b1, lambda, p, policy)?;
        self.inner_terms += r.terms_used;
        Ok(r.value)
    }

    fn psi(&mut self, a1: f64, a2: f64, b1: f64, lambda: f64, p: Complex64, policy: &SeriesPolicy) -> Result<Complex64> {
        let r = psi_3_2(a1, a2, b1, lambda, p, policy)?;
        self.inner_terms += r.terms_used;
        Ok(r.value)
    }

    fn finish(self, mut outer: SeriesResult, scale: Complex64) -> SeriesResult {
        outer.value *= scale;
        outer.tail_estimate *= scale.norm();
        outer.terms_used += self.inner_terms;
        outer
    }
}

/// Evaluates the closed form matching the family of `spec`.
pub fn closed_form(spec: &EulerIntegralSpec, policy: &SeriesPolicy) -> Result<SeriesResult> {
    spec.validate()?;
    let (al, be, la, p) = (spec.alpha, spec.beta, spec.lambda, spec.p);
    match &spec.family {
        ChiXiFamily::T1 { alpha1, alpha2, x1, x2 } => closed_form_theorem1(al, be, *alpha1, *alpha2, *x1, *x2, la, p, policy),
        ChiXiFamily::T2 { alpha1, alpha2, x1, x2 } => closed_form_theorem2(al, be, *alpha1, *alpha2, *x1, *x2, la, p, policy),
        ChiXiFamily::T3 { u, v } => closed_form_theorem3(al, be, spec.gamma, spec.a, spec.b, *u, *v, la, p, policy),
        ChiXiFamily::T4 { nu, mu } => closed_form_theorem4(al, be, spec.a, spec.b, *nu, *mu, la, p, policy),
        ChiXiFamily::TN { alphas, xs } => closed_form_lauricella(al, be, alphas, xs, la, p, policy),
    }
}

/// χ = (1−x₁t)^{−α₁}(1−x₂t)^{−α₂}:
/// Σ (α)_{m+n}(α₁)_m(α₂)_n x₁^m x₂^n / ((α+β)_{m+n} m! n!) · ₃Ψ̂₂[(α+m+n,1),(β,1),(1,1);(α+β+m+n,2),(1,λ);p].
#[allow(clippy::too_many_arguments)]
pub fn closed_form_theorem1(
    alpha: f64,
    beta: f64,
    alpha1: f64,
    alpha2: f64,
    x1: f64,
    x2: f64,
    lambda: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    EulerIntegralSpec::theorem1(alpha, beta, alpha1, alpha2, x1, x2, lambda, p)?;
    let mut nested = Nested::new();
    let mut ratio = PochhammerRatio::new(alpha, alpha + beta);
    let mut coeffs = ProductCoefficients::new(vec![
        PochhammerPowers::new(vec![alpha1], real(x1)),
        PochhammerPowers::new(vec![alpha2], real(x2)),
    ]);
    let outer = sum_diagonals(policy, |d| {
        let c = coeffs.get(d) * ratio.get(d);
        if c == Complex64::new(0.0, 0.0) {
            return Ok(c);
        }
        let df = d as f64;
        Ok(c * nested.psi_hat(alpha + df, beta, alpha + beta + df, lambda, p, policy)?)
    })?;
    Ok(nested.finish(outer, real(1.0)))
}

/// χ = (1−x₁t)^{−α₁}(1−x₂(1−t))^{−α₂}:
/// Σ (α)_m(β)_n(α₁)_m(α₂)_n x₁^m x₂^n / ((α+β)_{m+n} m! n!) · ₃Ψ̂₂[(α+m,1),(β+n,1),(1,1);(α+β+m+n,2),(1,λ);p].
#[allow(clippy::too_many_arguments)]
pub fn closed_form_theorem2(
    alpha: f64,
    beta: f64,
    alpha1: f64,
    alpha2: f64,
    x1: f64,
    x2: f64,
    lambda: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    EulerIntegralSpec::theorem2(alpha, beta, alpha1, alpha2, x1, x2, lambda, p)?;
    let ab = alpha + beta;
    let mut nested = Nested::new();
    let mut xs = PochhammerPowers::with_denominator(vec![alpha, alpha1], ab, real(x1));
    let mut ys = PochhammerPowers::with_denominator(vec![beta, alpha2], ab, real(x2));
    let outer = sum_diagonals(policy, |d| {
        let split = split_ratios(ab, d);
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, s) in split.iter().enumerate() {
            let n = d - m;
            let c = xs.get(m) * ys.get(n) * *s;
            if c == Complex64::new(0.0, 0.0) {
                continue;
            }
            acc += c * nested.psi_hat(alpha + m as f64, beta + n as f64, ab + d as f64, lambda, p, policy)?;
        }
        Ok(acc)
    })?;
    Ok(nested.finish(outer, real(1.0)))
}

/// χ = ut + v on [a, b]:
/// (b−a)^{α+β−1}(au+v)^γ Σ (−γ)_m(α)_m / ((α+β)_m m!) w^m ·
/// ₃Ψ̂₂[(α+m,1),(β,1),(1,1);(α+β+m,2),(1,λ); p(b−a)²] with w = −u(b−a)/(au+v).
///
/// On [0, 1] the leading factor is (au+v)^γ alone.
#[allow(clippy::too_many_arguments)]
pub fn closed_form_theorem3(
    alpha: f64,
    beta: f64,
    gamma: f64,
    a: f64,
    b: f64,
    u: f64,
    v: f64,
    lambda: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    EulerIntegralSpec::theorem3(alpha, beta, gamma, a, b, u, v, lambda, p)?;
    let len = b - a;
    let chi_a = a * u + v;
    let w = -u * len / chi_a;
    let terminating = gamma >= 0.0 && gamma.fract() == 0.0;
    if w.abs() >= 1.0 && !terminating {
        return Err(Error::Divergence { index: 0, term: w.abs() });
    }
    let scaled_p = p * (len * len);
    let prefactor = len.powf(alpha + beta - 1.0) * chi_a.powf(gamma);
    let mut nested = Nested::new();
    let mut coeffs = PochhammerPowers::with_denominator(vec![-gamma, alpha], alpha + beta, real(w));
    let outer = sum_diagonals(policy, |m| {
        let c = coeffs.get(m);
        if c == Complex64::new(0.0, 0.0) {
            return Ok(c);
        }
        let mf = m as f64;
        Ok(c * nested.psi_hat(alpha + mf, beta, alpha + beta + mf, lambda, scaled_p, policy)?)
    })?;
    Ok(nested.finish(outer, real(prefactor)))
}

/// χ = b−a+ν(t−a)+μ(b−t), ξ = (t−a)(b−t)/χ², γ = −(α+β):
/// (ν+1)^{−α}(μ+1)^{−β}/(b−a) · ₃Ψ̂₂[(α,1),(β,1),(1,1);(α+β,2),(1,λ); p/((ν+1)(μ+1))].
#[allow(clippy::too_many_arguments)]
pub fn closed_form_theorem4(
    alpha: f64,
    beta: f64,
    a: f64,
    b: f64,
    nu: f64,
    mu: f64,
    lambda: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    EulerIntegralSpec::theorem4(alpha, beta, a, b, nu, mu, lambda, p)?;
    let scale = (nu + 1.0) * (mu + 1.0);
    let prefactor = (nu + 1.0).powf(-alpha) * (mu + 1.0).powf(-beta) / (b - a);
    let inner = psi_hat_3_2(alpha, beta, alpha + beta, lambda, p / scale, policy)?;
    Ok(Nested::new().finish(inner, real(prefactor)))
}

fn lauricella_spec(alpha: f64, beta: f64, alphas: &[f64], xs: &[f64], lambda: f64, p: Complex64) -> Result<()> {
    EulerIntegralSpec::lauricella(alpha, beta, alphas.to_vec(), xs.to_vec(), lambda, p)?;
    if alphas.len() > MAX_LAURICELLA_VARIABLES {
        return Err(Error::Domain(format!(
            "at most {MAX_LAURICELLA_VARIABLES} variables are supported, got {}",
            alphas.len()
        )));
    }
    Ok(())
}

fn lauricella_coefficients(alphas: &[f64], xs: &[f64]) -> ProductCoefficients {
    ProductCoefficients::new(alphas.iter().zip(xs).map(|(&a, &x)| PochhammerPowers::new(vec![a], real(x))).collect())
}

/// χ = Π(1−x_i t)^{−α_i}:
/// Σ (α)_M Π(α_i)_{m_i} x_i^{m_i} / ((α+β)_M Π m_i!) · ₃Ψ̂₂[(α+M,1),(β,1),(1,1);(α+β+M,2),(1,λ);p], M = Σm_i.
pub fn closed_form_lauricella(
    alpha: f64,
    beta: f64,
    alphas: &[f64],
    xs: &[f64],
    lambda: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    lauricella_spec(alpha, beta, alphas, xs, lambda, p)?;
    let mut nested = Nested::new();
    let mut coeffs = lauricella_coefficients(alphas, xs);
    let mut ratio = PochhammerRatio::new(alpha, alpha + beta);
    let outer = sum_diagonals(policy, |d| {
        let c = coeffs.get(d) * ratio.get(d);
        if c == Complex64::new(0.0, 0.0) {
            return Ok(c);
        }
        let df = d as f64;
        Ok(c * nested.psi_hat(alpha + df, beta, alpha + beta + df, lambda, p, policy)?)
    })?;
    Ok(nested.finish(outer, real(1.0)))
}

/// Same value as [`closed_form_lauricella`], written as
/// 1/B(α,β) · Σ Π(α_i)_{m_i} x_i^{m_i}/m_i! · ₃Ψ₂[(α+M,1),(β,1),(1,1);(α+β+M,2),(1,λ);p]
/// with the un-normalized ₃Ψ₂.
pub fn closed_form_lauricella_unnormalized(
    alpha: f64,
    beta: f64,
    alphas: &[f64],
    xs: &[f64],
    lambda: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    lauricella_spec(alpha, beta, alphas, xs, lambda, p)?;
    let norm = beta_fn(alpha, beta)?;
    let mut nested = Nested::new();
    let mut coeffs = lauricella_coefficients(alphas, xs);
    let outer = sum_diagonals(policy, |d| {
        let c = coeffs.get(d);
        if c == Complex64::new(0.0, 0.0) {
            return Ok(c);
        }
        let df = d as f64;
        Ok(c * nested.psi(alpha + df, beta, alpha + beta + df, lambda, p, policy)?)
    })?;
    Ok(nested.finish(outer, real(1.0 / norm)))
}

/// λ = 1 form of ₃Ψ̂₂[(α,1),(β,1),(1,1);(α+β,2),(1,1);p]:
/// ₂F₂[α, β; (α+β)/2, (α+β+1)/2; p/4].
pub fn reduce_lambda1(alpha: f64, beta: f64, p: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::Domain(format!("need α, β > 0, got α = {alpha}, β = {beta}")));
    }
    let s = alpha + beta;
    hyper_pfq(&[alpha, beta], &[0.5 * s, 0.5 * (s + 1.0)], p / 4.0, policy)
}

/// [(ν+1)(μ+1)]^{−α} ₁F₁[α; α+½; p/(4(ν+1)(μ+1))], the λ = 1, α = β,
/// [a, b] = [0, 1] value of the χ = 1+νt+μ(1−t) integral.
pub fn example45_kummer_form(alpha: f64, nu: f64, mu: f64, p: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    EulerIntegralSpec::theorem4(alpha, alpha, 0.0, 1.0, nu, mu, 1.0, p)?;
    let scale = (nu + 1.0) * (mu + 1.0);
    let inner = hyper_pfq(&[alpha], &[alpha + 0.5], p / (4.0 * scale), policy)?;
    Ok(Nested::new().finish(inner, real(scale.powf(-alpha))))
}

/// χ = (1−x₁t)^{−α₁−α₂}/(1−x₁) on [0, 1]:
/// 1/(1−x₁) Σ (α)_m(α₁+α₂)_m x₁^m / ((α+β)_m m!) · ₃Ψ̂₂[(α+m,1),(β,1),(1,1);(α+β+m,2),(1,λ);p].
#[allow(clippy::too_many_arguments)]
pub fn example42_closed_form(
    alpha: f64,
    beta: f64,
    alpha1: f64,
    alpha2: f64,
    x1: f64,
    lambda: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    let mut r = closed_form_theorem1(alpha, beta, alpha1 + alpha2, 0.0, x1, 0.0, lambda, p, policy)?;
    r.value /= 1.0 - x1;
    r.tail_estimate /= 1.0 - x1;
    Ok(r)
}

/// λ = 1 form of [`example42_closed_form`]: the inner functions become
/// ₂F₂[α+m, β; (α+β+m)/2, (α+β+m+1)/2; p/4].
pub fn example42_lambda1_form(
    alpha: f64,
    beta: f64,
    alpha1: f64,
    alpha2: f64,
    x1: f64,
    p: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    EulerIntegralSpec::theorem1(alpha, beta, alpha1 + alpha2, 0.0, x1, 0.0, 1.0, p)?;
    let mut inner_terms = 0;
    let mut coeffs = PochhammerPowers::with_denominator(vec![alpha, alpha1 + alpha2], alpha + beta, real(x1));
    let outer = sum_diagonals(policy, |m| {
        let c = coeffs.get(m);
        if c == Complex64::new(0.0, 0.0) {
            return Ok(c);
        }
        let s = alpha + beta + m as f64;
        let f = hyper_pfq(&[alpha + m as f64, beta], &[0.5 * s, 0.5 * (s + 1.0)], p / 4.0, policy)?;
        inner_terms += f.terms_used;
        Ok(c * f.value)
    })?;
    Ok(Nested { inner_terms }.finish(outer, real(1.0 / (1.0 - x1))))
}
