//! Double and multiple hypergeometric series: Appell F1 and F3, Humbert Φ2,
//! Lauricella F_D in n variables, and Gegenbauer polynomials.
//!
//! Every multiple series is summed by total degree (diagonals m + n = d);
//! the stopping rule of [`SeriesPolicy`] is applied to whole-diagonal
//! contributions and `max_terms` caps the total degree.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::is_nonpositive_integer;
use crate::series::{SeriesPolicy, SeriesResult, Summation};

fn check_denominator(c: f64, context: &'static str) -> Result<()> {
    if !c.is_finite() {
        return Err(Error::Domain(format!("non-finite parameter {c} ({context})")));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Pole { arg: c, context });
    }
    Ok(())
}

fn check_unit_disk(name: &str, x: Complex64) -> Result<()> {
    if !(x.norm() < 1.0) {
        return Err(Error::Domain(format!("|{name}| = {} must be < 1", x.norm())));
    }
    Ok(())
}

/// Sums `diagonal(d)` for d = 0, 1, … under the policy.
pub(crate) fn sum_diagonals<F>(policy: &SeriesPolicy, mut diagonal: F) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<Complex64>,
{
    policy.validate()?;
    let mut sum = Summation::new(policy);
    let mut d = 0;
    loop {
        if sum.add(diagonal(d)?)? {
            return Ok(sum.finish());
        }
        d += 1;
    }
}

/// Lazily extended sequence c_m = (a)_m x^m / m! (optionally divided by
/// (g)_m), built by its ratio recurrence.
pub(crate) struct PochhammerPowers {
    params: Vec<f64>,
    den: Option<f64>,
    x: Complex64,
    values: Vec<Complex64>,
}

impl PochhammerPowers {
    /// (Π_i (params_i)_m) x^m / m!
    pub(crate) fn new(params: Vec<f64>, x: Complex64) -> Self {
        Self { params, den: None, x, values: vec![Complex64::new(1.0, 0.0)] }
    }

    /// (Π_i (params_i)_m) x^m / (m! (den)_m)
    pub(crate) fn with_denominator(params: Vec<f64>, den: f64, x: Complex64) -> Self {
        Self { params, den: Some(den), x, values: vec![Complex64::new(1.0, 0.0)] }
    }

    pub(crate) fn get(&mut self, m: usize) -> Complex64 {
        while self.values.len() <= m {
            let k = (self.values.len() - 1) as f64;
            let mut ratio = 1.0 / (k + 1.0);
            for &p in &self.params {
                ratio *= p + k;
            }
            if let Some(g) = self.den {
                ratio /= g + k;
            }
            let next = self.values[self.values.len() - 1] * self.x * ratio;
            self.values.push(next);
        }
        self.values[m]
    }
}

/// Running ratio (a)_d / (b)_d.
pub(crate) struct PochhammerRatio {
    a: f64,
    b: f64,
    values: Vec<f64>,
}

impl PochhammerRatio {
    pub(crate) fn new(a: f64, b: f64) -> Self {
        Self { a, b, values: vec![1.0] }
    }

    pub(crate) fn get(&mut self, d: usize) -> f64 {
        while self.values.len() <= d {
            let k = (self.values.len() - 1) as f64;
            let next = self.values[self.values.len() - 1] * (self.a + k) / (self.b + k);
            self.values.push(next);
        }
        self.values[d]
    }
}

/// Coefficient stream of a product of power series: C_M = Σ_{|m| = M} Π_i
/// c^{(i)}_{m_i}. Extending to degree M costs O(n·M).
pub(crate) struct ProductCoefficients {
    factors: Vec<PochhammerPowers>,
    partial: Vec<Vec<Complex64>>,
}

impl ProductCoefficients {
    pub(crate) fn new(factors: Vec<PochhammerPowers>) -> Self {
        let n = factors.len();
        Self { factors, partial: vec![Vec::new(); n] }
    }

    pub(crate) fn get(&mut self, degree: usize) -> Complex64 {
        if self.factors.is_empty() {
            return if degree == 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
        }
        while self.partial[0].len() <= degree {
            let d = self.partial[0].len();
            let first = self.factors[0].get(d);
            self.partial[0].push(first);
            for k in 1..self.factors.len() {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..=d {
                    acc += self.partial[k - 1][j] * self.factors[k].get(d - j);
                }
                self.partial[k].push(acc);
            }
        }
        self.partial[self.factors.len() - 1][degree]
    }
}

/// Σ_{m+n=d} u_m v_n, adding the m and d−m terms together so that swapping
/// u and v gives bit-identical results.
fn mirrored_convolution(
    d: usize,
    mut u: impl FnMut(usize) -> Complex64,
    mut v: impl FnMut(usize) -> Complex64,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 0..=d / 2 {
        let n = d - m;
        acc += if m == n { u(m) * v(n) } else { u(m) * v(n) + u(n) * v(m) };
    }
    acc
}

/// (γ)_m (γ)_n / (γ)_{m+n} along the diagonal m + n = d, for m = 0..=d.
pub(crate) fn split_ratios(gamma: f64, d: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(d + 1);
    let mut r = 1.0;
    out.push(r);
    for m in 0..d {
        r *= (gamma + m as f64) / (gamma + (d - m - 1) as f64);
        out.push(r);
    }
    out
}

/// Appell F1(α; β, β′; γ; x, y) = Σ (α)_{m+n} (β)_m (β′)_n / ((γ)_{m+n} m! n!) x^m y^n.
pub fn appell_f1(
    alpha: f64,
    beta: f64,
    beta_p: f64,
    gamma: f64,
    x: Complex64,
    y: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_denominator(gamma, "Appell F1 γ")?;
    check_unit_disk("x", x)?;
    check_unit_disk("y", y)?;
    let mut ratio = PochhammerRatio::new(alpha, gamma);
    let mut xs = PochhammerPowers::new(vec![beta], x);
    let mut ys = PochhammerPowers::new(vec![beta_p], y);
    sum_diagonals(policy, |d| {
        Ok(mirrored_convolution(d, |m| xs.get(m), |n| ys.get(n)) * ratio.get(d))
    })
}

/// Appell F3(α, α′; β, β′; γ; x, y) = Σ (α)_m (α′)_n (β)_m (β′)_n / ((γ)_{m+n} m! n!) x^m y^n.
#[allow(clippy::too_many_arguments)]
pub fn appell_f3(
    alpha: f64,
    alpha_p: f64,
    beta: f64,
    beta_p: f64,
    gamma: f64,
    x: Complex64,
    y: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_denominator(gamma, "Appell F3 γ")?;
    check_unit_disk("x", x)?;
    check_unit_disk("y", y)?;
    let mut xs = PochhammerPowers::with_denominator(vec![alpha, beta], gamma, x);
    let mut ys = PochhammerPowers::with_denominator(vec![alpha_p, beta_p], gamma, y);
    sum_diagonals(policy, |d| {
        let split = split_ratios(gamma, d);
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, s) in split.iter().enumerate() {
            acc += xs.get(m) * ys.get(d - m) * *s;
        }
        Ok(acc)
    })
}

/// Humbert Φ2[b₁, b₂; c; x, y] = Σ (b₁)_m (b₂)_n x^m y^n / ((c)_{m+n} m! n!),
/// entire in both arguments.
pub fn humbert_phi2(
    b1: f64,
    b2: f64,
    c: f64,
    x: Complex64,
    y: Complex64,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_denominator(c, "Humbert Φ2 c")?;
    if !(x.norm().is_finite() && y.norm().is_finite()) {
        return Err(Error::Domain("Humbert Φ2 arguments must be finite".into()));
    }
    let mut xs = PochhammerPowers::with_denominator(vec![b1], c, x);
    let mut ys = PochhammerPowers::with_denominator(vec![b2], c, y);
    sum_diagonals(policy, |d| {
        let split = split_ratios(c, d);
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, s) in split.iter().enumerate() {
            acc += xs.get(m) * ys.get(d - m) * *s;
        }
        Ok(acc)
    })
}

/// Lauricella F_D^{(n)}(α; α₁…α_n; γ; x₁…x_n)
/// = Σ (α)_M Π (α_i)_{m_i} x_i^{m_i} / m_i! / (γ)_M with M = Σ m_i.
pub fn lauricella_fd(
    alpha: f64,
    alphas: &[f64],
    gamma: f64,
    xs: &[Complex64],
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    if alphas.len() != xs.len() {
        return Err(Error::Domain(format!(
            "Lauricella F_D needs as many parameters ({}) as arguments ({})",
            alphas.len(),
            xs.len()
        )));
    }
    check_denominator(gamma, "Lauricella F_D γ")?;
    for (i, x) in xs.iter().enumerate() {
        check_unit_disk(&format!("x{}", i + 1), *x)?;
    }
    let factors = alphas.iter().zip(xs).map(|(&a, &x)| PochhammerPowers::new(vec![a], x)).collect();
    let mut coeffs = ProductCoefficients::new(factors);
    let mut ratio = PochhammerRatio::new(alpha, gamma);
    sum_diagonals(policy, |d| Ok(coeffs.get(d) * ratio.get(d)))
}

/// Gegenbauer polynomial C_n^{(a)}(x) by the three-term recurrence
/// n C_n = 2x(n + a − 1) C_{n−1} − (n + 2a − 2) C_{n−2}.
pub fn gegenbauer(n: usize, a: f64, x: f64) -> f64 {
    gegenbauer_sequence(n, a, x)[n]
}

/// C_0^{(a)}(x), …, C_n^{(a)}(x).
pub fn gegenbauer_sequence(n: usize, a: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push(2.0 * a * x);
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * x * (kf + a - 1.0) * out[k - 1] - (kf + 2.0 * a - 2.0) * out[k - 2]) / kf;
        out.push(next);
    }
    out
}
