use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::multivar::{gegenbauer_sequence, humbert_phi2, sum_diagonals, PochhammerPowers, ProductCoefficients};
use crate::scalar::is_nonpositive_integer;
use crate::series::{hyper_pfq, wright_psi, SeriesPolicy, SeriesResult, Summation, WrightSpec};

type CoefficientFn = Arc<dyn Fn(usize) -> Complex64 + Send + Sync>;
type GeneratorFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// User-supplied generating function G(τ) = Σ c_n τ^n.
#[derive(Clone)]
pub struct CustomGenerator {
    pub name: String,
    /// n ↦ c_n g_n(x)
    pub coefficient: CoefficientFn,
    /// Closed form of G, if known; otherwise the series is summed.
    pub closed_form: Option<GeneratorFn>,
    /// Radius of convergence in τ.
    pub radius: f64,
}

impl CustomGenerator {
    pub fn new(name: impl Into<String>, radius: f64, coefficient: impl Fn(usize) -> Complex64 + Send + Sync + 'static) -> Self {
        Self { name: name.into(), coefficient: Arc::new(coefficient), closed_form: None, radius }
    }

    pub fn with_closed_form(mut self, g: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        self.closed_form = Some(Arc::new(g));
        self
    }
}

impl fmt::Debug for CustomGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomGenerator")
            .field("name", &self.name)
            .field("radius", &self.radius)
            .field("closed_form", &self.closed_form.is_some())
            .finish()
    }
}

/// Generating function G(x, τ) = Σ c_n g_n(x) τ^n.
#[derive(Debug, Clone)]
pub enum GeneratorSpec {
    /// (1 − xτ)^{−a}
    Binomial { a: f64, x: f64 },
    /// Φ₂[a, a; b; x, τ]
    HumbertGen { a: f64, b: f64, x: f64 },
    /// (1 − 2xτ + τ²)^{−a}
    GegenbauerGen { a: f64, x: f64 },
    Custom(CustomGenerator),
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        let finite = |vals: &[f64]| {
            if vals.iter().all(|v| v.is_finite()) {
                Ok(())
            } else {
                Err(Error::Domain(format!("generator parameters {vals:?} must be finite")))
            }
        };
        match self {
            GeneratorSpec::Binomial { a, x } | GeneratorSpec::GegenbauerGen { a, x } => finite(&[*a, *x]),
            GeneratorSpec::HumbertGen { a, b, x } => {
                finite(&[*a, *b, *x])?;
                if is_nonpositive_integer(*b) {
                    return Err(Error::Pole { arg: *b, context: "Humbert generator b" });
                }
                Ok(())
            }
            GeneratorSpec::Custom(c) => {
                if c.radius > 0.0 {
                    Ok(())
                } else {
                    Err(Error::Domain(format!("custom generator radius {} must be positive", c.radius)))
                }
            }
        }
    }

    /// Radius of convergence of Σ c_n g_n(x) τ^n.
    pub fn radius(&self) -> f64 {
        match self {
            GeneratorSpec::Binomial { x, .. } => {
                if *x == 0.0 {
                    f64::INFINITY
                } else {
                    1.0 / x.abs()
                }
            }
            GeneratorSpec::HumbertGen { .. } => f64::INFINITY,
            GeneratorSpec::GegenbauerGen { x, .. } => {
                // smallest root modulus of τ² − 2xτ + 1
                if x.abs() <= 1.0 {
                    1.0
                } else {
                    x.abs() - (x * x - 1.0).sqrt()
                }
            }
            GeneratorSpec::Custom(c) => c.radius,
        }
    }

    pub fn coefficients(&self, policy: &SeriesPolicy) -> CoefficientStream {
        let kind = match self {
            GeneratorSpec::Binomial { a, x } => StreamKind::Powers(PochhammerPowers::new(vec![*a], Complex64::new(*x, 0.0))),
            GeneratorSpec::HumbertGen { a, b, x } => StreamKind::Humbert {
                a: *a,
                b: *b,
                x: *x,
                ratio: PochhammerPowers::with_denominator(vec![*a], *b, Complex64::new(1.0, 0.0)),
                policy: *policy,
            },
            GeneratorSpec::GegenbauerGen { a, x } => StreamKind::Gegenbauer { a: *a, x: *x },
            GeneratorSpec::Custom(c) => StreamKind::Custom(c.coefficient.clone()),
        };
        CoefficientStream { kind, cache: Vec::new() }
    }

    /// G(x, τ).
    pub fn evaluate(&self, tau: Complex64, policy: &SeriesPolicy) -> Result<Complex64> {
        if !(tau.norm() < self.radius()) {
            return Err(Error::Domain(format!(
                "generator argument |τ| = {} outside the radius {}",
                tau.norm(),
                self.radius()
            )));
        }
        match self {
            GeneratorSpec::Binomial { a, x } => Ok((1.0 - tau * *x).powc(Complex64::new(-a, 0.0))),
            GeneratorSpec::HumbertGen { a, b, x } => {
                Ok(humbert_phi2(*a, *a, *b, Complex64::new(*x, 0.0), tau, policy)?.value)
            }
            GeneratorSpec::GegenbauerGen { a, x } => {
                let base = 1.0 - tau * (2.0 * x) + tau * tau;
                Ok(base.powc(Complex64::new(-a, 0.0)))
            }
            GeneratorSpec::Custom(c) => match &c.closed_form {
                Some(g) => Ok(g(tau)),
                None => {
                    let mut sum = Summation::new(policy);
                    let mut power = Complex64::new(1.0, 0.0);
                    let mut n = 0;
                    while !sum.add((c.coefficient)(n) * power)? {
                        power *= tau;
                        n += 1;
                    }
                    Ok(sum.finish().value)
                }
            },
        }
    }
}

enum StreamKind {
    Powers(PochhammerPowers),
    Humbert { a: f64, b: f64, x: f64, ratio: PochhammerPowers, policy: SeriesPolicy },
    Gegenbauer { a: f64, x: f64 },
    Custom(CoefficientFn),
}

/// Lazily computed coefficients c_n g_n(x) of a generator.
pub struct CoefficientStream {
    kind: StreamKind,
    cache: Vec<Complex64>,
}

impl CoefficientStream {
    pub fn get(&mut self, n: usize) -> Result<Complex64> {
        if n >= self.cache.len() {
            match &mut self.kind {
                StreamKind::Powers(p) => {
                    for k in self.cache.len()..=n {
                        self.cache.push(p.get(k));
                    }
                }
                StreamKind::Humbert { a, b, x, ratio, policy } => {
                    for k in self.cache.len()..=n {
                        let f = hyper_pfq(&[*a], &[*b + k as f64], Complex64::new(*x, 0.0), policy)?.value;
                        self.cache.push(ratio.get(k) * f);
                    }
                }
                StreamKind::Gegenbauer { a, x } => {
                    let target = (2 * n).max(16);
                    self.cache = gegenbauer_sequence(target, *a, *x).into_iter().map(|c| Complex64::new(c, 0.0)).collect();
                }
                StreamKind::Custom(f) => {
                    for k in self.cache.len()..=n {
                        self.cache.push(f(k));
                    }
                }
            }
        }
        Ok(self.cache[n])
    }
}

/// ∫₀¹ u^{r−1}(1−u)^{s−r−1} Π(1−x_i u)^{−α_i} G(x, t u^δ(1−u)^ω) E_λ[p u(1−u)] du.
#[derive(Debug, Clone)]
pub struct GeneratingIntegralSpec {
    pub generator: GeneratorSpec,
    pub r: f64,
    pub s: f64,
    pub delta: f64,
    pub omega: f64,
    pub lambda: f64,
    pub p: Complex64,
    pub t: Complex64,
    /// (α_i, x_i) pairs of the extra product Π(1−x_i u)^{−α_i}.
    pub product_factors: Vec<(f64, f64)>,
}

impl GeneratingIntegralSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(generator: GeneratorSpec, r: f64, s: f64, delta: f64, omega: f64, lambda: f64, p: Complex64, t: Complex64) -> Result<Self> {
        let spec = Self { generator, r, s, delta, omega, lambda, p, t, product_factors: Vec::new() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_product_factors(mut self, factors: Vec<(f64, f64)>) -> Result<Self> {
        self.product_factors = factors;
        self.validate()?;
        Ok(self)
    }

    /// max over u ∈ [0, 1] of u^δ(1−u)^ω.
    pub fn max_weight(&self) -> f64 {
        let (d, w) = (self.delta, self.omega);
        let pow = |x: f64, e: f64| if e == 0.0 { 1.0 } else { x.powf(e) };
        pow(d, d) * pow(w, w) / (d + w).powf(d + w)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.r, self.s, self.delta, self.omega, self.lambda, self.p.re, self.p.im, self.t.re, self.t.im];
        if !all.iter().all(|v| v.is_finite()) {
            return Err(Error::Domain("generating-integral parameters must be finite".into()));
        }
        if !(self.s > self.r && self.r > 0.0) {
            return Err(Error::Domain(format!("need s > r > 0, got r = {}, s = {}", self.r, self.s)));
        }
        if !(self.delta >= 0.0 && self.omega >= 0.0 && self.delta + self.omega > 0.0) {
            return Err(Error::Domain(format!(
                "need δ, ω >= 0 with δ + ω > 0, got δ = {}, ω = {}",
                self.delta, self.omega
            )));
        }
        if self.lambda < 0.0 {
            return Err(Error::Domain(format!("need λ >= 0, got {}", self.lambda)));
        }
        if self.lambda == 0.0 && self.p.norm() >= 4.0 {
            return Err(Error::Domain(format!("E_0 needs |p|/4 < 1, got |p| = {}", self.p.norm())));
        }
        for &(a, x) in &self.product_factors {
            if !a.is_finite() || !(x.abs() < 1.0) {
                return Err(Error::Domain(format!("product factor ({a}, {x}) needs |x| < 1")));
            }
        }
        self.generator.validate()?;
        let reach = self.t.norm() * self.max_weight();
        if !(reach < self.generator.radius()) {
            return Err(Error::Domain(format!(
                "generator series diverges: |t|·max u^δ(1−u)^ω = {reach} >= radius {}",
                self.generator.radius()
            )));
        }
        Ok(())
    }

    /// Integrand without the E_λ factor is u^{r−1}(1−u)^{s−r−1} times this.
    pub(crate) fn weight_factor(&self, u: f64, one_minus_u: f64, policy: &SeriesPolicy) -> Result<Complex64> {
        let tau = self.t * (pow0(u, self.delta) * pow0(one_minus_u, self.omega));
        let mut g = self.generator.evaluate(tau, policy)?;
        for &(a, x) in &self.product_factors {
            g *= (1.0 - x * u).powf(-a);
        }
        Ok(g)
    }
}

fn pow0(x: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        x.powf(e)
    }
}

fn generating_sum(spec: &GeneratingIntegralSpec, collapse: bool, policy: &SeriesPolicy) -> Result<SeriesResult> {
    spec.validate()?;
    let mut gen = spec.generator.coefficients(policy);
    let mut products = ProductCoefficients::new(
        spec.product_factors.iter().map(|&(a, x)| PochhammerPowers::new(vec![a], Complex64::new(x, 0.0))).collect(),
    );
    let has_products = !spec.product_factors.is_empty();
    let mut t_powers = vec![Complex64::new(1.0, 0.0)];
    let mut inner_terms = 0;
    let mut outer = sum_diagonals(policy, |d| {
        while t_powers.len() <= d {
            let last = t_powers[t_powers.len() - 1];
            t_powers.push(last * spec.t);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        let first = if has_products { 0 } else { d };
        #[allow(clippy::needless_range_loop)]
        for n in first..=d {
            let big_m = d - n;
            let c = gen.get(n)? * t_powers[n] * products.get(big_m);
            if c == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (nf, mf) = (n as f64, big_m as f64);
            let a1 = spec.r + spec.delta * nf + mf;
            let a2 = spec.s - spec.r + spec.omega * nf;
            let b1 = spec.s + (spec.delta + spec.omega) * nf + mf;
            let inner = if collapse {
                WrightSpec::new(vec![(a1, 1.0), (a2, 1.0)], vec![(b1, 2.0)])?
            } else {
                WrightSpec::new(vec![(a1, 1.0), (a2, 1.0), (1.0, 1.0)], vec![(b1, 2.0), (1.0, spec.lambda)])?
            };
            let r = wright_psi(&inner, spec.p, policy)?;
            inner_terms += r.terms_used;
            acc += c * r.value;
        }
        Ok(acc)
    })?;
    outer.terms_used += inner_terms;
    Ok(outer)
}

/// Σ_{n, m₁…m_j} c_n g_n(x) t^n Π(α_i)_{m_i} x_i^{m_i}/m_i! ·
/// ₃Ψ₂[(r+δn+M,1),(s−r+ωn,1),(1,1);(s+δn+ωn+M,2),(1,λ);p] (un-normalized ₃Ψ₂,
/// M = Σm_i), summed by total degree n + M.
pub fn generating_integral_closed_form(spec: &GeneratingIntegralSpec, policy: &SeriesPolicy) -> Result<SeriesResult> {
    generating_sum(spec, false, policy)
}

/// The λ = 1 form of [`generating_integral_closed_form`], with each inner
/// function collapsed to ₂Ψ₁[(r+δn+M,1),(s−r+ωn,1);(s+δn+ωn+M,2);p].
pub fn generating_integral_corollary2(spec: &GeneratingIntegralSpec, policy: &SeriesPolicy) -> Result<SeriesResult> {
    if spec.lambda != 1.0 {
        return Err(Error::Domain(format!("the collapsed form needs λ = 1, got {}", spec.lambda)));
    }
    generating_sum(spec, true, policy)
}
