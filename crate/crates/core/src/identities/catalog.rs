use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::closed_form::{
    closed_form, closed_form_lauricella_unnormalized, closed_form_theorem2, example42_closed_form, example42_lambda1_form,
    example45_kummer_form, reduce_lambda1,
};
use super::generating::{generating_integral_closed_form, generating_integral_corollary2, GeneratingIntegralSpec, GeneratorSpec};
use super::EulerIntegralSpec;
use crate::error::{domain, Error, Result};
use crate::quadrature::{evaluate_generating_integral_direct, evaluate_integral_direct, QuadraturePolicy, QuadratureResult};
use crate::series::{SeriesPolicy, SeriesResult};

/// A case parameter: a real number, or a complex number written `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Real(f64),
    Complex([f64; 2]),
}

impl ParamValue {
    pub fn as_complex(&self) -> Complex64 {
        match *self {
            ParamValue::Real(x) => Complex64::new(x, 0.0),
            ParamValue::Complex([re, im]) => Complex64::new(re, im),
        }
    }

    pub fn as_real(&self) -> Option<f64> {
        match *self {
            ParamValue::Real(x) => Some(x),
            ParamValue::Complex(_) => None,
        }
    }
}

impl From<f64> for ParamValue {
    fn from(x: f64) -> Self {
        ParamValue::Real(x)
    }
}

impl From<Complex64> for ParamValue {
    fn from(z: Complex64) -> Self {
        ParamValue::Complex([z.re, z.im])
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Real(x) => write!(f, "{x:?}"),
            ParamValue::Complex([re, im]) => write!(f, "[{re:?},{im:?}]"),
        }
    }
}

pub type CaseParams = BTreeMap<String, ParamValue>;

type ClosedFormFn = Arc<dyn Fn(&SeriesPolicy) -> Result<SeriesResult> + Send + Sync>;
type OracleFn = Arc<dyn Fn(&QuadraturePolicy, &SeriesPolicy) -> Result<QuadratureResult> + Send + Sync>;

/// One identity instance: a closed-form series paired with the direct
/// quadrature of the same integral.
#[derive(Clone)]
pub struct IdentityCase {
    pub name: String,
    pub params: CaseParams,
    pub validity_note: &'static str,
    closed_form: ClosedFormFn,
    oracle: OracleFn,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase").field("name", &self.name).field("params", &self.params).finish()
    }
}

impl IdentityCase {
    pub fn new(
        name: impl Into<String>,
        params: CaseParams,
        validity_note: &'static str,
        closed_form: impl Fn(&SeriesPolicy) -> Result<SeriesResult> + Send + Sync + 'static,
        oracle: impl Fn(&QuadraturePolicy, &SeriesPolicy) -> Result<QuadratureResult> + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), params, validity_note, closed_form: Arc::new(closed_form), oracle: Arc::new(oracle) }
    }

    pub fn closed_form(&self, policy: &SeriesPolicy) -> Result<SeriesResult> {
        (self.closed_form)(policy)
    }

    pub fn oracle(&self, qpolicy: &QuadraturePolicy, spolicy: &SeriesPolicy) -> Result<QuadratureResult> {
        (self.oracle)(qpolicy, spolicy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Real,
    Complex,
}

#[derive(Debug, Clone)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub defaults: Vec<ParamValue>,
}

/// A named family of cases with its parameter schema and default grid.
#[derive(Clone)]
pub struct CaseTemplate {
    pub name: &'static str,
    pub validity_note: &'static str,
    pub params: Vec<ParamSpec>,
    build: fn(&CaseParams) -> Result<IdentityCase>,
}

impl fmt::Debug for CaseTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CaseTemplate").field("name", &self.name).field("params", &self.params).finish()
    }
}

impl CaseTemplate {
    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }

    /// Builds the case; a domain error means the point lies outside the
    /// validity region.
    pub fn build(&self, params: &CaseParams) -> Result<IdentityCase> {
        (self.build)(params)
    }

    /// Cartesian product of the parameter lists, with `overrides` replacing
    /// the defaults of the named parameters. Points are in lexicographic
    /// order of parameter names.
    pub fn grid(&self, overrides: &BTreeMap<String, Vec<ParamValue>>) -> Vec<CaseParams> {
        let mut axes: Vec<(&str, &[ParamValue])> = self
            .params
            .iter()
            .map(|p| (p.name, overrides.get(p.name).map_or(p.defaults.as_slice(), |v| v.as_slice())))
            .collect();
        axes.sort_by_key(|a| a.0);
        let mut points = vec![CaseParams::new()];
        for (name, values) in axes {
            let mut next = Vec::with_capacity(points.len() * values.len());
            for point in &points {
                for v in values {
                    let mut p = point.clone();
                    p.insert(name.to_string(), *v);
                    next.push(p);
                }
            }
            points = next;
        }
        points
    }
}

struct Get<'a>(&'a CaseParams);

impl Get<'_> {
    fn value(&self, name: &str) -> Result<ParamValue> {
        self.0.get(name).copied().map_or_else(|| domain(format!("missing parameter {name}")), Ok)
    }

    fn r(&self, name: &str) -> Result<f64> {
        match self.value(name)?.as_real() {
            Some(x) => Ok(x),
            None => domain(format!("parameter {name} must be real")),
        }
    }

    fn c(&self, name: &str) -> Result<Complex64> {
        Ok(self.value(name)?.as_complex())
    }
}

fn euler_case(name: &str, params: &CaseParams, note: &'static str, spec: EulerIntegralSpec) -> IdentityCase {
    let oracle_spec = spec.clone();
    IdentityCase::new(
        name,
        params.clone(),
        note,
        move |s| closed_form(&spec, s),
        move |q, s| evaluate_integral_direct(&oracle_spec, q, s),
    )
}

fn scaled(mut r: QuadratureResult, k: f64) -> QuadratureResult {
    r.value *= k;
    r.err_estimate *= k.abs();
    r
}

fn generating_case(name: &str, params: &CaseParams, note: &'static str, spec: GeneratingIntegralSpec, collapse: bool) -> IdentityCase {
    let oracle_spec = spec.clone();
    IdentityCase::new(
        name,
        params.clone(),
        note,
        move |s| {
            if collapse {
                generating_integral_corollary2(&spec, s)
            } else {
                generating_integral_closed_form(&spec, s)
            }
        },
        move |q, s| evaluate_generating_integral_direct(&oracle_spec, q, s),
    )
}

fn half_plane(x1: f64) -> Result<()> {
    if x1 < 0.5 {
        Ok(())
    } else {
        domain(format!("x1 = {x1}: need Re(x1) < 1/2 so that |x1/(x1−1)| < 1"))
    }
}

const NOTE_T1: &str = "α, β > 0; λ >= 0; |x1|, |x2| < 1";
const NOTE_T3: &str = "α, β > 0; λ >= 0; a < b; au+v > 0 and bu+v > 0; |u(b−a)/(au+v)| < 1 unless γ is a nonnegative integer";
const NOTE_T4: &str = "α, β > 0; λ >= 0; a < b; ν, μ > −1";
const NOTE_TN: &str = "α, β > 0; λ >= 0; max|x_i| < 1";
const NOTE_41: &str = "α > 0; λ >= 0; |x1| < 1; Re(x1) < 1/2";
const NOTE_42: &str = "α, β > 0; λ >= 0; |x1| < 1";
const NOTE_42_T2: &str = "α, β > 0; λ >= 0; |x1| < 1; Re(x1) < 1/2";
const NOTE_43: &str = "α, β > 0; λ >= 0; |x1| < 1";
const NOTE_45: &str = "α > 0; λ >= 0; ν, μ > −1";
const NOTE_GEN: &str = "s > r > 0; δ, ω >= 0; δ + ω > 0; λ >= 0; |t|·max u^δ(1−u)^ω below the generator radius";

/// Builds one of the application cases "4.1" … "4.5"; `p` overrides any
/// `p` entry in `params`.
pub fn application_case(id: &str, params: &CaseParams, p: Complex64) -> Result<IdentityCase> {
    let mut params = params.clone();
    params.insert("p".into(), ParamValue::from(p));
    let g = Get(&params);
    match id {
        "4.1" => {
            let (alpha, alpha1, x1) = (g.r("alpha")?, g.r("alpha1")?, g.r("x1")?);
            half_plane(x1)?;
            let spec = EulerIntegralSpec::theorem1(alpha, alpha, alpha1, alpha1, x1, x1 / (x1 - 1.0), g.r("lambda")?, p)?;
            Ok(euler_case("example4.1", &params, NOTE_41, spec))
        }
        "4.2" => {
            let (alpha, beta, alpha1, alpha2, x1, lambda) =
                (g.r("alpha")?, g.r("beta")?, g.r("alpha1")?, g.r("alpha2")?, g.r("x1")?, g.r("lambda")?);
            let spec = EulerIntegralSpec::theorem1(alpha, beta, alpha1 + alpha2, 0.0, x1, 0.0, lambda, p)?;
            Ok(IdentityCase::new(
                "example4.2",
                params,
                NOTE_42,
                move |s| example42_closed_form(alpha, beta, alpha1, alpha2, x1, lambda, p, s),
                move |q, s| Ok(scaled(evaluate_integral_direct(&spec, q, s)?, 1.0 / (1.0 - x1))),
            ))
        }
        "4.3" => {
            let (alpha, beta, alpha1, x1) = (g.r("alpha")?, g.r("beta")?, g.r("alpha1")?, g.r("x1")?);
            if !(x1.abs() < 1.0) {
                return domain(format!("|x1| = {} must be < 1", x1.abs()));
            }
            let spec = EulerIntegralSpec::theorem3(alpha, beta, -alpha1, 0.0, 1.0, -x1, 1.0, g.r("lambda")?, p)?;
            Ok(euler_case("example4.3", &params, NOTE_43, spec))
        }
        "4.4" => {
            let spec = EulerIntegralSpec::theorem4(g.r("alpha")?, g.r("beta")?, g.r("a")?, g.r("b")?, 0.0, 0.0, g.r("lambda")?, p)?;
            Ok(euler_case("example4.4", &params, NOTE_T4, spec))
        }
        "4.5" => {
            let alpha = g.r("alpha")?;
            let spec = EulerIntegralSpec::theorem4(alpha, alpha, 0.0, 1.0, g.r("nu")?, g.r("mu")?, g.r("lambda")?, p)?;
            Ok(euler_case("example4.5", &params, NOTE_45, spec))
        }
        other => Err(Error::Domain(format!("unknown application case {other}"))),
    }
}

fn build_application(id: &str, params: &CaseParams) -> Result<IdentityCase> {
    let p = Get(params).c("p")?;
    application_case(id, params, p)
}

fn build_theorem1(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = EulerIntegralSpec::theorem1(g.r("alpha")?, g.r("beta")?, g.r("alpha1")?, g.r("alpha2")?, g.r("x1")?, g.r("x2")?, g.r("lambda")?, g.c("p")?)?;
    Ok(euler_case("theorem1", params, NOTE_T1, spec))
}

fn build_theorem2(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = EulerIntegralSpec::theorem2(g.r("alpha")?, g.r("beta")?, g.r("alpha1")?, g.r("alpha2")?, g.r("x1")?, g.r("x2")?, g.r("lambda")?, g.c("p")?)?;
    Ok(euler_case("theorem2", params, NOTE_T1, spec))
}

fn build_theorem3(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = EulerIntegralSpec::theorem3(
        g.r("alpha")?,
        g.r("beta")?,
        g.r("gamma")?,
        g.r("a")?,
        g.r("b")?,
        g.r("u")?,
        g.r("v")?,
        g.r("lambda")?,
        g.c("p")?,
    )?;
    Ok(euler_case("theorem3", params, NOTE_T3, spec))
}

fn build_theorem4(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = EulerIntegralSpec::theorem4(g.r("alpha")?, g.r("beta")?, g.r("a")?, g.r("b")?, g.r("nu")?, g.r("mu")?, g.r("lambda")?, g.c("p")?)?;
    Ok(euler_case("theorem4", params, NOTE_T4, spec))
}

fn lauricella_inputs(g: &Get) -> Result<(Vec<f64>, Vec<f64>)> {
    let alphas = vec![g.r("alpha1")?, g.r("alpha2")?, g.r("alpha3")?];
    let xs = vec![g.r("x1")?, g.r("x2")?, g.r("x3")?];
    Ok((alphas, xs))
}

fn build_lauricella(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let (alphas, xs) = lauricella_inputs(&g)?;
    let spec = EulerIntegralSpec::lauricella(g.r("alpha")?, g.r("beta")?, alphas, xs, g.r("lambda")?, g.c("p")?)?;
    Ok(euler_case("lauricella", params, NOTE_TN, spec))
}

fn build_lauricella_unnormalized(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let (alphas, xs) = lauricella_inputs(&g)?;
    let spec = EulerIntegralSpec::lauricella(g.r("alpha")?, g.r("beta")?, alphas, xs, g.r("lambda")?, g.c("p")?)?;
    let s2 = spec.clone();
    Ok(IdentityCase::new(
        "lauricella_unnormalized",
        params.clone(),
        NOTE_TN,
        move |s| {
            let super::ChiXiFamily::TN { alphas, xs } = &spec.family else { unreachable!() };
            closed_form_lauricella_unnormalized(spec.alpha, spec.beta, alphas, xs, spec.lambda, spec.p, s)
        },
        move |q, s| evaluate_integral_direct(&s2, q, s),
    ))
}

fn build_example42_theorem2(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let (alpha, beta, alpha1, alpha2, x1, lambda, p) =
        (g.r("alpha")?, g.r("beta")?, g.r("alpha1")?, g.r("alpha2")?, g.r("x1")?, g.r("lambda")?, g.c("p")?);
    half_plane(x1)?;
    let spec = EulerIntegralSpec::theorem1(alpha, beta, alpha1 + alpha2, 0.0, x1, 0.0, lambda, p)?;
    // χ of the second family at x2 = x1/(x1−1) equals (1−x1)^{α2}(1−x1 t)^{−α1−α2}
    let scale = (1.0 - x1).powf(-1.0 - alpha2);
    Ok(IdentityCase::new(
        "example4.2_theorem2",
        params.clone(),
        NOTE_42_T2,
        move |s| {
            let mut r = closed_form_theorem2(alpha, beta, alpha1, alpha2, x1, x1 / (x1 - 1.0), lambda, p, s)?;
            r.value *= scale;
            r.tail_estimate *= scale;
            Ok(r)
        },
        move |q, s| Ok(scaled(evaluate_integral_direct(&spec, q, s)?, 1.0 / (1.0 - x1))),
    ))
}

fn build_example42_lambda1(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let (alpha, beta, alpha1, alpha2, x1, p) = (g.r("alpha")?, g.r("beta")?, g.r("alpha1")?, g.r("alpha2")?, g.r("x1")?, g.c("p")?);
    let spec = EulerIntegralSpec::theorem1(alpha, beta, alpha1 + alpha2, 0.0, x1, 0.0, 1.0, p)?;
    Ok(IdentityCase::new(
        "example4.2_lambda1",
        params.clone(),
        NOTE_42,
        move |s| example42_lambda1_form(alpha, beta, alpha1, alpha2, x1, p, s),
        move |q, s| Ok(scaled(evaluate_integral_direct(&spec, q, s)?, 1.0 / (1.0 - x1))),
    ))
}

fn build_example45_lambda1(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let (alpha, nu, mu, p) = (g.r("alpha")?, g.r("nu")?, g.r("mu")?, g.c("p")?);
    let spec = EulerIntegralSpec::theorem4(alpha, alpha, 0.0, 1.0, nu, mu, 1.0, p)?;
    Ok(IdentityCase::new(
        "example4.5_lambda1",
        params.clone(),
        NOTE_45,
        move |s| example45_kummer_form(alpha, nu, mu, p, s),
        move |q, s| evaluate_integral_direct(&spec, q, s),
    ))
}

fn build_unit_chi_2f2(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let (alpha, beta, p) = (g.r("alpha")?, g.r("beta")?, g.c("p")?);
    let spec = EulerIntegralSpec::theorem3(alpha, beta, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, p)?;
    Ok(IdentityCase::new(
        "unit_chi_2f2",
        params.clone(),
        "α, β > 0",
        move |s| reduce_lambda1(alpha, beta, p, s),
        move |q, s| evaluate_integral_direct(&spec, q, s),
    ))
}

fn generating_spec(g: &Get, generator: GeneratorSpec, lambda: f64) -> Result<GeneratingIntegralSpec> {
    GeneratingIntegralSpec::new(generator, g.r("r")?, g.r("s")?, g.r("delta")?, g.r("omega")?, lambda, g.c("p")?, g.c("t")?)
}

fn build_theorem5_binomial(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = generating_spec(&g, GeneratorSpec::Binomial { a: g.r("a")?, x: g.r("x")? }, g.r("lambda")?)?;
    Ok(generating_case("theorem5_binomial", params, NOTE_GEN, spec, false))
}

fn build_theorem5_humbert(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = generating_spec(&g, GeneratorSpec::HumbertGen { a: g.r("a")?, b: g.r("b")?, x: g.r("x")? }, g.r("lambda")?)?;
    Ok(generating_case("theorem5_humbert", params, NOTE_GEN, spec, false))
}

fn build_theorem5_gegenbauer(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = generating_spec(&g, GeneratorSpec::GegenbauerGen { a: g.r("a")?, x: g.r("x")? }, g.r("lambda")?)?;
    Ok(generating_case("theorem5_gegenbauer", params, NOTE_GEN, spec, false))
}

fn build_corollary1(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let (r, omega) = (g.r("r")?, g.r("omega")?);
    let generator = GeneratorSpec::Binomial { a: g.r("a")?, x: g.r("x")? };
    let spec = GeneratingIntegralSpec::new(generator, r, 2.0 * r, omega, omega, g.r("lambda")?, g.c("p")?, g.c("t")?)?;
    Ok(generating_case("corollary1", params, "r > 0; ω > 0; λ >= 0", spec, false))
}

fn product_spec(g: &Get, lambda: f64) -> Result<GeneratingIntegralSpec> {
    let generator = GeneratorSpec::Binomial { a: g.r("a")?, x: g.r("x")? };
    generating_spec(g, generator, lambda)?.with_product_factors(vec![(g.r("alpha1")?, g.r("x1")?), (g.r("alpha2")?, g.r("x2")?)])
}

fn build_theorem6(params: &CaseParams) -> Result<IdentityCase> {
    let g = Get(params);
    let spec = product_spec(&g, g.r("lambda")?)?;
    Ok(generating_case("theorem6", params, NOTE_GEN, spec, false))
}

fn build_corollary2(params: &CaseParams) -> Result<IdentityCase> {
    let spec = product_spec(&Get(params), 1.0)?;
    Ok(generating_case("corollary2", params, NOTE_GEN, spec, true))
}

fn reals(name: &'static str, values: &[f64]) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Real, defaults: values.iter().map(|&v| ParamValue::Real(v)).collect() }
}

fn complexes(name: &'static str, values: Vec<ParamValue>) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Complex, defaults: values }
}

/// Default complex arguments p: {0, ±0.8, 1.5, 0.5+0.5i, −1.2i}.
fn default_p() -> ParamSpec {
    complexes(
        "p",
        vec![
            ParamValue::Real(0.0),
            ParamValue::Real(0.8),
            ParamValue::Real(-0.8),
            ParamValue::Real(1.5),
            ParamValue::Complex([0.5, 0.5]),
            ParamValue::Complex([0.0, -1.2]),
        ],
    )
}

fn generating_p() -> ParamSpec {
    complexes("p", vec![ParamValue::Real(0.0), ParamValue::Real(0.6), ParamValue::Complex([0.5, 0.5])])
}

fn generating_t() -> ParamSpec {
    complexes("t", vec![ParamValue::Real(0.3), ParamValue::Real(-0.4), ParamValue::Complex([0.2, 0.2])])
}

fn template(name: &'static str, validity_note: &'static str, params: Vec<ParamSpec>, build: fn(&CaseParams) -> Result<IdentityCase>) -> CaseTemplate {
    CaseTemplate { name, validity_note, params, build }
}

/// Every identity case with its built-in parameter grid, sorted by name.
pub fn default_catalog() -> Vec<CaseTemplate> {
    let lambda = || reals("lambda", &[0.5, 1.0, 2.0]);
    let mut out = vec![
        template(
            "theorem1",
            NOTE_T1,
            vec![
                reals("alpha", &[0.5, 2.5]),
                reals("beta", &[1.0]),
                reals("alpha1", &[0.3]),
                reals("alpha2", &[1.2]),
                reals("x1", &[-0.2, 0.5]),
                reals("x2", &[0.3]),
                lambda(),
                default_p(),
            ],
            build_theorem1,
        ),
        template(
            "theorem2",
            NOTE_T1,
            vec![
                reals("alpha", &[1.5]),
                reals("beta", &[0.6, 1.1]),
                reals("alpha1", &[0.4]),
                reals("alpha2", &[0.6]),
                reals("x1", &[0.2, -0.5]),
                reals("x2", &[0.3]),
                lambda(),
                default_p(),
            ],
            build_theorem2,
        ),
        template(
            "theorem3",
            NOTE_T3,
            vec![
                reals("alpha", &[0.9]),
                reals("beta", &[1.3]),
                reals("gamma", &[-0.7, 2.0]),
                reals("a", &[0.0, -0.5]),
                reals("b", &[1.0]),
                reals("u", &[-0.4, 0.3]),
                reals("v", &[1.0]),
                reals("lambda", &[1.0, 2.5]),
                default_p(),
            ],
            build_theorem3,
        ),
        template(
            "theorem4",
            NOTE_T4,
            vec![
                reals("alpha", &[1.0]),
                reals("beta", &[2.0]),
                reals("a", &[0.0, -1.0]),
                reals("b", &[1.0, 3.0]),
                reals("nu", &[0.5, -0.3]),
                reals("mu", &[2.0]),
                reals("lambda", &[0.5, 1.0]),
                default_p(),
            ],
            build_theorem4,
        ),
        template(
            "lauricella",
            NOTE_TN,
            vec![
                reals("alpha", &[1.1]),
                reals("beta", &[0.9]),
                reals("alpha1", &[0.3]),
                reals("alpha2", &[0.5]),
                reals("alpha3", &[0.7]),
                reals("x1", &[0.2]),
                reals("x2", &[-0.15]),
                reals("x3", &[0.3, -0.4]),
                lambda(),
                default_p(),
            ],
            build_lauricella,
        ),
        template(
            "lauricella_unnormalized",
            NOTE_TN,
            vec![
                reals("alpha", &[1.1]),
                reals("beta", &[0.9]),
                reals("alpha1", &[0.3]),
                reals("alpha2", &[0.5]),
                reals("alpha3", &[0.7]),
                reals("x1", &[0.2]),
                reals("x2", &[-0.15]),
                reals("x3", &[0.3]),
                reals("lambda", &[1.0]),
                default_p(),
            ],
            build_lauricella_unnormalized,
        ),
        template(
            "example4.1",
            NOTE_41,
            vec![reals("alpha", &[0.7, 1.5]), reals("alpha1", &[0.6]), reals("x1", &[-0.5, 0.3]), lambda(), default_p()],
            |p| build_application("4.1", p),
        ),
        template(
            "example4.2",
            NOTE_42,
            vec![
                reals("alpha", &[1.0]),
                reals("beta", &[1.4]),
                reals("alpha1", &[0.3]),
                reals("alpha2", &[0.4]),
                reals("x1", &[0.25, -0.6]),
                lambda(),
                default_p(),
            ],
            |p| build_application("4.2", p),
        ),
        template(
            "example4.2_theorem2",
            NOTE_42_T2,
            vec![
                reals("alpha", &[1.0]),
                reals("beta", &[1.4]),
                reals("alpha1", &[0.3]),
                reals("alpha2", &[0.4]),
                reals("x1", &[0.25, -0.6]),
                lambda(),
                default_p(),
            ],
            build_example42_theorem2,
        ),
        template(
            "example4.2_lambda1",
            NOTE_42,
            vec![
                reals("alpha", &[1.0]),
                reals("beta", &[1.4]),
                reals("alpha1", &[0.3]),
                reals("alpha2", &[0.4]),
                reals("x1", &[0.25, -0.6]),
                default_p(),
            ],
            build_example42_lambda1,
        ),
        template(
            "example4.3",
            NOTE_43,
            vec![reals("alpha", &[0.9]), reals("beta", &[1.3]), reals("alpha1", &[0.7, 1.6]), reals("x1", &[0.4, -0.3]), lambda(), default_p()],
            |p| build_application("4.3", p),
        ),
        template(
            "example4.4",
            NOTE_T4,
            vec![reals("alpha", &[1.0, 0.6]), reals("beta", &[1.0]), reals("a", &[0.0, 2.0]), reals("b", &[2.5]), lambda(), default_p()],
            |p| build_application("4.4", p),
        ),
        template(
            "example4.5",
            NOTE_45,
            vec![reals("alpha", &[0.8, 2.0]), reals("nu", &[0.3]), reals("mu", &[1.7, -0.5]), lambda(), default_p()],
            |p| build_application("4.5", p),
        ),
        template(
            "example4.5_lambda1",
            NOTE_45,
            vec![reals("alpha", &[0.8, 2.0]), reals("nu", &[0.3]), reals("mu", &[1.7, -0.5]), default_p()],
            build_example45_lambda1,
        ),
        template(
            "unit_chi_2f2",
            "α, β > 0",
            vec![reals("alpha", &[1.0, 1.3]), reals("beta", &[1.0, 0.9]), default_p()],
            build_unit_chi_2f2,
        ),
        template(
            "theorem5_binomial",
            NOTE_GEN,
            vec![
                reals("a", &[0.7]),
                reals("x", &[1.0]),
                reals("r", &[0.8, 1.5]),
                reals("s", &[2.1, 3.0]),
                reals("delta", &[1.0]),
                reals("omega", &[1.0]),
                reals("lambda", &[1.0, 2.0]),
                generating_p(),
                generating_t(),
            ],
            build_theorem5_binomial,
        ),
        template(
            "theorem5_humbert",
            NOTE_GEN,
            vec![
                reals("a", &[0.8]),
                reals("b", &[1.5]),
                reals("x", &[0.4]),
                reals("r", &[0.8, 1.5]),
                reals("s", &[2.1, 3.0]),
                reals("delta", &[1.0]),
                reals("omega", &[1.0]),
                reals("lambda", &[1.0, 2.0]),
                generating_p(),
                generating_t(),
            ],
            build_theorem5_humbert,
        ),
        template(
            "theorem5_gegenbauer",
            NOTE_GEN,
            vec![
                reals("a", &[0.35]),
                reals("x", &[1.0, 0.5]),
                reals("r", &[0.8, 1.5]),
                reals("s", &[2.1, 3.0]),
                reals("delta", &[1.0]),
                reals("omega", &[1.0]),
                reals("lambda", &[1.0, 2.0]),
                generating_p(),
                generating_t(),
            ],
            build_theorem5_gegenbauer,
        ),
        template(
            "corollary1",
            "r > 0; ω > 0; λ >= 0",
            vec![
                reals("a", &[0.7]),
                reals("x", &[1.0]),
                reals("r", &[0.8, 1.5]),
                reals("omega", &[1.0, 0.5]),
                reals("lambda", &[1.0, 2.0]),
                generating_p(),
                generating_t(),
            ],
            build_corollary1,
        ),
        template(
            "theorem6",
            NOTE_GEN,
            vec![
                reals("a", &[0.7]),
                reals("x", &[1.0]),
                reals("r", &[0.8]),
                reals("s", &[2.1]),
                reals("delta", &[1.0, 2.0]),
                reals("omega", &[1.0]),
                reals("alpha1", &[0.5]),
                reals("x1", &[0.3]),
                reals("alpha2", &[1.2]),
                reals("x2", &[-0.4]),
                reals("lambda", &[0.5, 1.0, 2.0]),
                generating_p(),
                generating_t(),
            ],
            build_theorem6,
        ),
        template(
            "corollary2",
            NOTE_GEN,
            vec![
                reals("a", &[0.7]),
                reals("x", &[1.0]),
                reals("r", &[0.8, 1.5]),
                reals("s", &[2.1]),
                reals("delta", &[1.0]),
                reals("omega", &[1.0]),
                reals("alpha1", &[0.5]),
                reals("x1", &[0.3]),
                reals("alpha2", &[1.2]),
                reals("x2", &[-0.4]),
                generating_p(),
                generating_t(),
            ],
            build_corollary2,
        ),
    ];
    out.sort_by_key(|t| t.name);
    out
}
