use std::collections::BTreeMap;
use std::str::FromStr;

use num_complex::Complex64;
use wrightlab::identities::{
    closed_form_lauricella, closed_form_theorem1, closed_form_theorem2, closed_form_theorem3, closed_form_theorem4,
    generating_integral_closed_form, EulerIntegralSpec, GeneratingIntegralSpec, GeneratorSpec,
};
use wrightlab::multivar::{appell_f1, appell_f3, gegenbauer, humbert_phi2, lauricella_fd};
use wrightlab::quadrature::{evaluate_generating_integral_direct, evaluate_integral_direct, QuadraturePolicy};
use wrightlab::scalar::{beta_fn, gamma_fn, log_gamma, pochhammer};
use wrightlab::series::{hyper_pfq, mittag_leffler, wright_psi, wright_psi_normalized, SeriesPolicy, WrightSpec};
use wrightlab::Error;

pub const FUNCTIONS: &[(&str, &str)] = &[
    ("gamma", "x"),
    ("log_gamma", "x"),
    ("pochhammer", "a n"),
    ("beta", "x y"),
    ("wright_psi", "upper=a:A,.. lower=b:B,.. z"),
    ("wright_psi_normalized", "upper=a:A,.. lower=b:B,.. z"),
    ("pfq", "num=a,.. den=b,.. z"),
    ("mittag_leffler", "lambda z"),
    ("appell_f1", "alpha beta beta_p gamma x y"),
    ("appell_f3", "alpha alpha_p beta beta_p gamma x y"),
    ("humbert_phi2", "b1 b2 c x y"),
    ("lauricella_fd", "alpha alphas=a,.. gamma xs=x,.."),
    ("gegenbauer", "n a x"),
    ("theorem1", "alpha beta alpha1 alpha2 x1 x2 lambda p"),
    ("theorem2", "alpha beta alpha1 alpha2 x1 x2 lambda p"),
    ("theorem3", "alpha beta gamma a b u v lambda p"),
    ("theorem4", "alpha beta a b nu mu lambda p"),
    ("lauricella_closed", "alpha beta alphas=a,.. xs=x,.. lambda p"),
    ("generating", "generator=binomial|humbert|gegenbauer a [b] x r s delta omega lambda p t [factors=a:x,..]"),
    ("integral_direct", "family=theorem1..theorem4|lauricella plus that family's arguments, or generator=… as for generating"),
];

pub fn usage() -> String {
    let mut s = String::from("usage: wrightlab eval FUNCTION key=value ...\n\nfunctions:\n");
    for (name, args) in FUNCTIONS {
        s.push_str(&format!("  {name:<22} {args}\n"));
    }
    s.push_str("\ncomplex arguments are written 1.5, 0.5+0.5i or -1.2i; lambda may also be spelled λ\n");
    s
}

/// Outcome of `eval`, mapped to the process exit code.
#[derive(Debug)]
pub enum EvalError {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Numeric(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub estimate: f64,
    pub terms: usize,
    pub nodes: usize,
}

impl Evaluation {
    fn scalar(x: f64) -> Self {
        Self { value: Complex64::new(x, 0.0), estimate: 0.0, terms: 0, nodes: 0 }
    }

    fn series(r: wrightlab::SeriesResult) -> Self {
        Self { value: r.value, estimate: r.tail_estimate, terms: r.terms_used, nodes: 0 }
    }

    fn quadrature(r: wrightlab::QuadratureResult) -> Self {
        Self { value: r.value, estimate: r.err_estimate, terms: 0, nodes: r.evaluations }
    }
}

pub fn format_value(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:?}", z.re)
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{:?}{sign}{:?}i", z.re, z.im.abs())
    }
}

impl std::fmt::Display for Evaluation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} estimate={:e} terms={} nodes={}", format_value(self.value), self.estimate, self.terms, self.nodes)
    }
}

struct Args {
    map: BTreeMap<String, String>,
}

impl Args {
    fn parse(raw: &[String]) -> Result<Self, EvalError> {
        let mut map = BTreeMap::new();
        for item in raw {
            let Some((k, v)) = item.split_once('=') else {
                return Err(EvalError::Usage(format!("argument {item:?} is not key=value")));
            };
            let key = if k == "λ" { "lambda" } else { k };
            if map.insert(key.to_string(), v.to_string()).is_some() {
                return Err(EvalError::Usage(format!("argument {key} given twice")));
            }
        }
        Ok(Self { map })
    }

    fn raw(&self, key: &str) -> Result<&str, EvalError> {
        self.map.get(key).map(String::as_str).ok_or_else(|| EvalError::Usage(format!("missing argument {key}=")))
    }

    fn real(&self, key: &str) -> Result<f64, EvalError> {
        let s = self.raw(key)?;
        s.trim().parse().map_err(|_| EvalError::Usage(format!("{key}={s:?} is not a real number")))
    }

    fn real_or(&self, key: &str, default: f64) -> Result<f64, EvalError> {
        if self.map.contains_key(key) {
            self.real(key)
        } else {
            Ok(default)
        }
    }

    fn complex(&self, key: &str) -> Result<Complex64, EvalError> {
        let s = self.raw(key)?;
        Complex64::from_str(s.trim()).map_err(|_| EvalError::Usage(format!("{key}={s:?} is not a complex number")))
    }

    fn count(&self, key: &str) -> Result<usize, EvalError> {
        let s = self.raw(key)?;
        s.trim().parse().map_err(|_| EvalError::Usage(format!("{key}={s:?} is not a nonnegative integer")))
    }

    fn list(&self, key: &str) -> Result<Vec<f64>, EvalError> {
        let s = self.raw(key)?;
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|x| x.trim().parse().map_err(|_| EvalError::Usage(format!("{key}: {x:?} is not a real number"))))
            .collect()
    }

    fn pairs(&self, key: &str) -> Result<Vec<(f64, f64)>, EvalError> {
        let s = self.raw(key)?;
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|item| {
                let bad = || EvalError::Usage(format!("{key}: {item:?} is not value:weight"));
                let (a, b) = item.split_once(':').ok_or_else(bad)?;
                Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
            })
            .collect()
    }
}

fn generator(args: &Args) -> Result<GeneratorSpec, EvalError> {
    match args.raw("generator")? {
        "binomial" => Ok(GeneratorSpec::Binomial { a: args.real("a")?, x: args.real_or("x", 1.0)? }),
        "humbert" => Ok(GeneratorSpec::HumbertGen { a: args.real("a")?, b: args.real("b")?, x: args.real("x")? }),
        "gegenbauer" => Ok(GeneratorSpec::GegenbauerGen { a: args.real("a")?, x: args.real_or("x", 1.0)? }),
        other => Err(EvalError::Usage(format!("unknown generator {other:?} (binomial, humbert, gegenbauer)"))),
    }
}

fn generating_spec(args: &Args) -> Result<GeneratingIntegralSpec, EvalError> {
    let spec = GeneratingIntegralSpec::new(
        generator(args)?,
        args.real("r")?,
        args.real("s")?,
        args.real("delta")?,
        args.real("omega")?,
        args.real("lambda")?,
        args.complex("p")?,
        args.complex("t")?,
    )?;
    if args.map.contains_key("factors") {
        return Ok(spec.with_product_factors(args.pairs("factors")?)?);
    }
    Ok(spec)
}

fn euler_spec(family: &str, a: &Args) -> Result<EulerIntegralSpec, EvalError> {
    Ok(match family {
        "theorem1" => EulerIntegralSpec::theorem1(
            a.real("alpha")?,
            a.real("beta")?,
            a.real("alpha1")?,
            a.real("alpha2")?,
            a.real("x1")?,
            a.real("x2")?,
            a.real("lambda")?,
            a.complex("p")?,
        )?,
        "theorem2" => EulerIntegralSpec::theorem2(
            a.real("alpha")?,
            a.real("beta")?,
            a.real("alpha1")?,
            a.real("alpha2")?,
            a.real("x1")?,
            a.real("x2")?,
            a.real("lambda")?,
            a.complex("p")?,
        )?,
        "theorem3" => EulerIntegralSpec::theorem3(
            a.real("alpha")?,
            a.real("beta")?,
            a.real("gamma")?,
            a.real_or("a", 0.0)?,
            a.real_or("b", 1.0)?,
            a.real("u")?,
            a.real("v")?,
            a.real("lambda")?,
            a.complex("p")?,
        )?,
        "theorem4" => EulerIntegralSpec::theorem4(
            a.real("alpha")?,
            a.real("beta")?,
            a.real_or("a", 0.0)?,
            a.real_or("b", 1.0)?,
            a.real("nu")?,
            a.real("mu")?,
            a.real("lambda")?,
            a.complex("p")?,
        )?,
        "lauricella" => EulerIntegralSpec::lauricella(
            a.real("alpha")?,
            a.real("beta")?,
            a.list("alphas")?,
            a.list("xs")?,
            a.real("lambda")?,
            a.complex("p")?,
        )?,
        other => return Err(EvalError::Usage(format!("unknown family {other:?}"))),
    })
}

pub fn evaluate(name: &str, raw: &[String], series: &SeriesPolicy, quad: &QuadraturePolicy) -> Result<Evaluation, EvalError> {
    let a = Args::parse(raw)?;
    let s = series;
    Ok(match name {
        "gamma" => Evaluation::scalar(gamma_fn(a.real("x")?)?),
        "log_gamma" => Evaluation::scalar(log_gamma(a.real("x")?)?),
        "pochhammer" => {
            let n = u32::try_from(a.count("n")?).map_err(|_| EvalError::Usage("n is too large".into()))?;
            Evaluation::scalar(pochhammer(a.real("a")?, n)?)
        }
        "beta" => Evaluation::scalar(beta_fn(a.real("x")?, a.real("y")?)?),
        "wright_psi" | "wright_psi_normalized" => {
            let spec = WrightSpec::new(a.pairs("upper")?, a.pairs("lower")?)?;
            let r = if name == "wright_psi" { wright_psi(&spec, a.complex("z")?, s)? } else { wright_psi_normalized(&spec, a.complex("z")?, s)? };
            Evaluation::series(r)
        }
        "pfq" => Evaluation::series(hyper_pfq(&a.list("num")?, &a.list("den")?, a.complex("z")?, s)?),
        "mittag_leffler" => Evaluation::series(mittag_leffler(a.real("lambda")?, a.complex("z")?, s)?),
        "appell_f1" => Evaluation::series(appell_f1(
            a.real("alpha")?,
            a.real("beta")?,
            a.real("beta_p")?,
            a.real("gamma")?,
            a.complex("x")?,
            a.complex("y")?,
            s,
        )?),
        "appell_f3" => Evaluation::series(appell_f3(
            a.real("alpha")?,
            a.real("alpha_p")?,
            a.real("beta")?,
            a.real("beta_p")?,
            a.real("gamma")?,
            a.complex("x")?,
            a.complex("y")?,
            s,
        )?),
        "humbert_phi2" => {
            Evaluation::series(humbert_phi2(a.real("b1")?, a.real("b2")?, a.real("c")?, a.complex("x")?, a.complex("y")?, s)?)
        }
        "lauricella_fd" => {
            let xs: Vec<Complex64> = a.list("xs")?.into_iter().map(|x| Complex64::new(x, 0.0)).collect();
            Evaluation::series(lauricella_fd(a.real("alpha")?, &a.list("alphas")?, a.real("gamma")?, &xs, s)?)
        }
        "gegenbauer" => Evaluation::scalar(gegenbauer(a.count("n")?, a.real("a")?, a.real("x")?)),
        "theorem1" => Evaluation::series(closed_form_theorem1(
            a.real("alpha")?,
            a.real("beta")?,
            a.real("alpha1")?,
            a.real("alpha2")?,
            a.real("x1")?,
            a.real("x2")?,
            a.real("lambda")?,
            a.complex("p")?,
            s,
        )?),
        "theorem2" => Evaluation::series(closed_form_theorem2(
            a.real("alpha")?,
            a.real("beta")?,
            a.real("alpha1")?,
            a.real("alpha2")?,
            a.real("x1")?,
            a.real("x2")?,
            a.real("lambda")?,
            a.complex("p")?,
            s,
        )?),
        "theorem3" => Evaluation::series(closed_form_theorem3(
            a.real("alpha")?,
            a.real("beta")?,
            a.real("gamma")?,
            a.real_or("a", 0.0)?,
            a.real_or("b", 1.0)?,
            a.real("u")?,
            a.real("v")?,
            a.real("lambda")?,
            a.complex("p")?,
            s,
        )?),
        "theorem4" => Evaluation::series(closed_form_theorem4(
            a.real("alpha")?,
            a.real("beta")?,
            a.real_or("a", 0.0)?,
            a.real_or("b", 1.0)?,
            a.real("nu")?,
            a.real("mu")?,
            a.real("lambda")?,
            a.complex("p")?,
            s,
        )?),
        "lauricella_closed" => Evaluation::series(closed_form_lauricella(
            a.real("alpha")?,
            a.real("beta")?,
            &a.list("alphas")?,
            &a.list("xs")?,
            a.real("lambda")?,
            a.complex("p")?,
            s,
        )?),
        "generating" => Evaluation::series(generating_integral_closed_form(&generating_spec(&a)?, s)?),
        "integral_direct" => {
            if a.map.contains_key("generator") {
                Evaluation::quadrature(evaluate_generating_integral_direct(&generating_spec(&a)?, quad, s)?)
            } else {
                Evaluation::quadrature(evaluate_integral_direct(&euler_spec(a.raw("family")?, &a)?, quad, s)?)
            }
        }
        other => return Err(EvalError::Usage(format!("unknown function {other:?}"))),
    })
}
