//! Closed-form (series-side) evaluation of Euler-type integrals
//!
//! ```text
//! I = 1/B(α,β) ∫_a^b (t−a)^{α−1} (b−t)^{β−1} χ(t)^γ E_λ[p ξ(t)] dt
//! ```
//!
//! for the χ/ξ families in [`ChiXiFamily`], the generating-function
//! integrals of [`GeneratingIntegralSpec`], and the scenario catalog that
//! pairs each closed form with its direct quadrature.

mod catalog;
mod closed_form;
mod generating;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalog::{application_case, default_catalog, CaseParams, CaseTemplate, IdentityCase, ParamKind, ParamSpec, ParamValue};
pub use closed_form::{
    closed_form, closed_form_lauricella, closed_form_lauricella_unnormalized, closed_form_theorem1,
    closed_form_theorem2, closed_form_theorem3, closed_form_theorem4, example42_closed_form,
    example42_lambda1_form, example45_kummer_form, psi_hat_3_2, reduce_lambda1,
};
pub use generating::{
    generating_integral_closed_form, generating_integral_corollary2, CoefficientStream, CustomGenerator,
    GeneratingIntegralSpec, GeneratorSpec,
};

/// Maximum number of variables accepted by [`closed_form_lauricella`].
pub const MAX_LAURICELLA_VARIABLES: usize = 4;

/// Choice of χ(t) and ξ(t) in the integral functional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ChiXiFamily {
    /// χ = (1−x₁t)^{−α₁}(1−x₂t)^{−α₂}, ξ = t(1−t) on [0, 1], γ = 1.
    T1 { alpha1: f64, alpha2: f64, x1: f64, x2: f64 },
    /// χ = (1−x₁t)^{−α₁}(1−x₂(1−t))^{−α₂}, ξ = t(1−t) on [0, 1], γ = 1.
    T2 { alpha1: f64, alpha2: f64, x1: f64, x2: f64 },
    /// χ = ut + v, ξ = (t−a)(b−t).
    T3 { u: f64, v: f64 },
    /// χ = b−a+ν(t−a)+μ(b−t), ξ = (t−a)(b−t)/χ², γ = −(α+β).
    T4 { nu: f64, mu: f64 },
    /// χ = Π(1−x_i t)^{−α_i}, ξ = t(1−t) on [0, 1], γ = 1.
    TN { alphas: Vec<f64>, xs: Vec<f64> },
}

/// One instance of the integral functional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EulerIntegralSpec {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
    pub p: Complex64,
    pub family: ChiXiFamily,
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {v} is not finite")))
    }
}

fn inside_unit_interval(name: &str, x: f64) -> Result<()> {
    if x.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("|{name}| = {} must be < 1", x.abs())))
    }
}

impl EulerIntegralSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn theorem1(alpha: f64, beta: f64, alpha1: f64, alpha2: f64, x1: f64, x2: f64, lambda: f64, p: Complex64) -> Result<Self> {
        Self::unit_interval(alpha, beta, lambda, p, ChiXiFamily::T1 { alpha1, alpha2, x1, x2 })
    }

    #[allow(clippy::too_many_arguments)]
    pub fn theorem2(alpha: f64, beta: f64, alpha1: f64, alpha2: f64, x1: f64, x2: f64, lambda: f64, p: Complex64) -> Result<Self> {
        Self::unit_interval(alpha, beta, lambda, p, ChiXiFamily::T2 { alpha1, alpha2, x1, x2 })
    }

    #[allow(clippy::too_many_arguments)]
    pub fn theorem3(alpha: f64, beta: f64, gamma: f64, a: f64, b: f64, u: f64, v: f64, lambda: f64, p: Complex64) -> Result<Self> {
        let spec = Self { alpha, beta, gamma, a, b, lambda, p, family: ChiXiFamily::T3 { u, v } };
        spec.validate()?;
        Ok(spec)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn theorem4(alpha: f64, beta: f64, a: f64, b: f64, nu: f64, mu: f64, lambda: f64, p: Complex64) -> Result<Self> {
        let spec = Self { alpha, beta, gamma: -(alpha + beta), a, b, lambda, p, family: ChiXiFamily::T4 { nu, mu } };
        spec.validate()?;
        Ok(spec)
    }

    pub fn lauricella(alpha: f64, beta: f64, alphas: Vec<f64>, xs: Vec<f64>, lambda: f64, p: Complex64) -> Result<Self> {
        Self::unit_interval(alpha, beta, lambda, p, ChiXiFamily::TN { alphas, xs })
    }

    fn unit_interval(alpha: f64, beta: f64, lambda: f64, p: Complex64, family: ChiXiFamily) -> Result<Self> {
        let spec = Self { alpha, beta, gamma: 1.0, a: 0.0, b: 1.0, lambda, p, family };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the validity region of the family.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma), ("a", self.a), ("b", self.b), ("lambda", self.lambda), ("Re p", self.p.re), ("Im p", self.p.im)] {
            finite(name, v)?;
        }
        if !(self.alpha > 0.0 && self.beta > 0.0) {
            return Err(Error::Domain(format!("need α > 0 and β > 0, got α = {}, β = {}", self.alpha, self.beta)));
        }
        if self.lambda < 0.0 {
            return Err(Error::Domain(format!("need λ >= 0, got {}", self.lambda)));
        }
        if !(self.a < self.b) {
            return Err(Error::Domain(format!("need a < b, got a = {}, b = {}", self.a, self.b)));
        }
        let unit = |spec: &Self| -> Result<()> {
            if spec.a != 0.0 || spec.b != 1.0 || spec.gamma != 1.0 {
                return Err(Error::Domain("this family is defined on [0, 1] with γ = 1".into()));
            }
            Ok(())
        };
        match &self.family {
            ChiXiFamily::T1 { alpha1, alpha2, x1, x2 } | ChiXiFamily::T2 { alpha1, alpha2, x1, x2 } => {
                unit(self)?;
                finite("alpha1", *alpha1)?;
                finite("alpha2", *alpha2)?;
                inside_unit_interval("x1", *x1)?;
                inside_unit_interval("x2", *x2)?;
            }
            ChiXiFamily::TN { alphas, xs } => {
                unit(self)?;
                if alphas.len() != xs.len() || alphas.is_empty() {
                    return Err(Error::Domain(format!(
                        "need matching nonempty parameter lists, got {} and {}",
                        alphas.len(),
                        xs.len()
                    )));
                }
                for (i, (a, x)) in alphas.iter().zip(xs).enumerate() {
                    finite(&format!("alpha{}", i + 1), *a)?;
                    inside_unit_interval(&format!("x{}", i + 1), *x)?;
                }
            }
            ChiXiFamily::T3 { u, v } => {
                finite("u", *u)?;
                finite("v", *v)?;
                let (left, right) = (self.a * u + v, self.b * u + v);
                if !(left > 0.0 && right > 0.0) {
                    return Err(Error::Domain(format!(
                        "χ(t) = ut + v must stay positive on [a, b]; got χ(a) = {left}, χ(b) = {right}"
                    )));
                }
            }
            ChiXiFamily::T4 { nu, mu } => {
                finite("nu", *nu)?;
                finite("mu", *mu)?;
                if (self.gamma + self.alpha + self.beta).abs() > 1e-12 * (1.0 + self.alpha + self.beta) {
                    return Err(Error::Domain(format!("this family needs γ = −(α+β), got γ = {}", self.gamma)));
                }
                if !(*nu > -1.0 && *mu > -1.0) {
                    return Err(Error::Domain(format!("χ(t) vanishes on [a, b] unless ν, μ > −1; got ν = {nu}, μ = {mu}")));
                }
            }
        }
        if self.lambda == 0.0 {
            let bound = self.p.norm() * self.max_xi();
            if bound >= 1.0 {
                return Err(Error::Domain(format!("E_0 needs |p ξ(t)| < 1 on [a, b]; max is {bound}")));
            }
        }
        Ok(())
    }

    /// max of ξ(t) over [a, b].
    pub fn max_xi(&self) -> f64 {
        let len = self.b - self.a;
        match &self.family {
            ChiXiFamily::T3 { .. } => 0.25 * len * len,
            ChiXiFamily::T4 { nu, mu } => 0.25 / ((1.0 + nu) * (1.0 + mu)),
            _ => 0.25,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            ChiXiFamily::T1 { .. } => "theorem1",
            ChiXiFamily::T2 { .. } => "theorem2",
            ChiXiFamily::T3 { .. } => "theorem3",
            ChiXiFamily::T4 { .. } => "theorem4",
            ChiXiFamily::TN { .. } => "lauricella",
        }
    }
}
