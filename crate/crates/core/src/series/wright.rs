use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{LogSum, Phase, SeriesPolicy, SeriesResult, Summation};
use crate::error::{Error, Result};
use crate::scalar::{is_nonpositive_integer, log_gamma_signed};

/// Parameter pairs (α_j, A_j) over (β_j, B_j) of a Wright function pΨq.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WrightSpec {
    upper: Vec<(f64, f64)>,
    lower: Vec<(f64, f64)>,
}

impl WrightSpec {
    /// Validates weights and the convergence margin 1 + ΣB − ΣA ≥ 0.
    ///
    /// Upper weights must be positive. Lower weights may be zero: the
    /// Mittag-Leffler factor (1, λ) enters with λ = 0, where Γ(β) is simply
    /// a constant.
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        for &(a, w) in &upper {
            if !a.is_finite() || !w.is_finite() || w <= 0.0 {
                return Err(Error::Domain(format!("upper pair ({a}, {w}) needs a positive weight")));
            }
        }
        for &(b, w) in &lower {
            if !b.is_finite() || !w.is_finite() || w < 0.0 {
                return Err(Error::Domain(format!("lower pair ({b}, {w}) needs a nonnegative weight")));
            }
        }
        let spec = Self { upper, lower };
        let margin = spec.margin();
        if margin < -1e-12 {
            return Err(Error::Domain(format!("convergence margin {margin} is negative")));
        }
        for &(a, _) in &spec.upper {
            if is_nonpositive_integer(a) {
                return Err(Error::Pole { arg: a, context: "wright upper parameter" });
            }
        }
        for &(b, _) in &spec.lower {
            if is_nonpositive_integer(b) {
                return Err(Error::Pole { arg: b, context: "wright lower parameter" });
            }
        }
        Ok(spec)
    }

    pub fn upper(&self) -> &[(f64, f64)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(f64, f64)] {
        &self.lower
    }

    /// Δ = 1 + ΣB_j − ΣA_j.
    pub fn margin(&self) -> f64 {
        1.0 + self.lower.iter().map(|p| p.1).sum::<f64>() - self.upper.iter().map(|p| p.1).sum::<f64>()
    }

    /// Drops every pair that appears identically in both the upper and the
    /// lower list.
    pub fn cancel_matching_pairs(&self) -> WrightSpec {
        let mut upper = self.upper.clone();
        let mut lower = Vec::with_capacity(self.lower.len());
        for &pair in &self.lower {
            if let Some(pos) = upper.iter().position(|&u| u == pair) {
                upper.remove(pos);
            } else {
                lower.push(pair);
            }
        }
        WrightSpec { upper, lower }
    }

    /// True when every weight is one, i.e. the function is a pFq up to the
    /// normalizing gammas.
    pub fn has_unit_weights(&self) -> bool {
        self.upper.iter().chain(&self.lower).all(|p| p.1 == 1.0)
    }
}

struct TermBuilder<'a> {
    spec: &'a WrightSpec,
    normalized: bool,
    norm_log: f64,
    norm_sign: f64,
    ln_abs_z: f64,
    phase: Phase,
    zero: bool,
}

impl<'a> TermBuilder<'a> {
    fn new(spec: &'a WrightSpec, z: Complex64, normalized: bool) -> Result<Self> {
        let (mut norm_log, mut norm_sign) = (0.0, 1.0);
        if normalized {
            let mut acc = LogSum::new();
            for &(a, _) in &spec.upper {
                let (l, s) = log_gamma_signed(a)?;
                acc.add(-l);
                norm_sign *= s;
            }
            for &(b, _) in &spec.lower {
                let (l, s) = log_gamma_signed(b)?;
                acc.add(l);
                norm_sign *= s;
            }
            norm_log = acc.value();
        }
        Ok(Self {
            spec,
            normalized,
            norm_log,
            norm_sign,
            ln_abs_z: z.norm().ln(),
            phase: Phase::of(z),
            zero: z.norm() == 0.0,
        })
    }

    fn term(&self, k: usize) -> Result<Complex64> {
        if k == 0 && self.normalized {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if k > 0 && self.zero {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let kf = k as f64;
        let mut log = LogSum::new();
        let mut sign = self.norm_sign;
        for &(a, w) in &self.spec.upper {
            let arg = a + w * kf;
            if is_nonpositive_integer(arg) {
                return Err(Error::Pole { arg, context: "wright upper gamma" });
            }
            let (l, s) = log_gamma_signed(arg)?;
            log.add(l);
            sign *= s;
        }
        for &(b, w) in &self.spec.lower {
            let arg = b + w * kf;
            if is_nonpositive_integer(arg) {
                return Err(Error::Pole { arg, context: "wright lower gamma" });
            }
            let (l, s) = log_gamma_signed(arg)?;
            log.add(-l);
            sign *= s;
        }
        log.add(-log_gamma_signed(kf + 1.0)?.0);
        if k > 0 {
            log.add(kf * self.ln_abs_z);
        }
        if self.normalized {
            log.add(self.norm_log);
        }
        Ok(self.phase.power(k) * (sign * log.value().exp()))
    }
}

fn sum_wright(spec: &WrightSpec, z: Complex64, policy: &SeriesPolicy, normalized: bool) -> Result<SeriesResult> {
    policy.validate()?;
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    let builder = TermBuilder::new(spec, z, normalized)?;
    let mut sum = Summation::new(policy);
    let mut k = 0;
    loop {
        if sum.add(builder.term(k)?)? {
            return Ok(sum.finish());
        }
        k += 1;
    }
}

/// pΨq(z) = Σ_k Π Γ(α_j + A_j k) / Π Γ(β_j + B_j k) · z^k / k!.
///
/// Each term is assembled from log-gamma values with sign tracking, never by
/// coefficient recurrence.
pub fn wright_psi(spec: &WrightSpec, z: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    sum_wright(spec, z, policy, false)
}

/// The Wright function divided by Π Γ(α_j) / Π Γ(β_j), so its value at
/// z = 0 is exactly one. The normalization is applied per term in log space.
pub fn wright_psi_normalized(spec: &WrightSpec, z: Complex64, policy: &SeriesPolicy) -> Result<SeriesResult> {
    sum_wright(spec, z, policy, true)
}
