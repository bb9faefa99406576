//! Dual-evaluation runner: every catalog case is evaluated at each grid
//! point through its closed form and through quadrature, and the two are
//! compared at the case tolerance.

mod config;
mod report;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::identities::{default_catalog, CaseParams, CaseTemplate, ParamValue};
use crate::quadrature::QuadraturePolicy;
use crate::series::SeriesPolicy;

pub use config::{ConfigError, GridConfig, OutputFormat, RandomDraws, ValueList};
pub use report::{Report, ReportMeta, Status, Summary, VerificationReport};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const RNG_NAME: &str = "ChaCha8";
/// Relative errors are measured against max(|oracle|, this floor).
pub const REL_ERR_FLOOR: f64 = 1e-300;

/// Command-line overrides and numerical policies for a verification run.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Replaces the config's default tolerance (per-case overrides still win).
    pub tolerance: Option<f64>,
    /// Replaces the config's case patterns.
    pub case_pattern: Option<String>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub series: SeriesPolicy,
    pub quadrature: QuadraturePolicy,
}

/// One grid point of one case.
#[derive(Debug, Clone)]
pub struct Job<'a> {
    pub template: &'a CaseTemplate,
    pub params: CaseParams,
    pub tolerance: f64,
}

fn source_date_epoch() -> Option<u64> {
    std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.trim().parse().ok())
}

/// Expands the configuration into jobs: grid points first, then random
/// draws, per case in name order.
pub fn plan<'a>(config: &GridConfig, opts: &RunOptions, catalog: &'a [CaseTemplate]) -> Result<Vec<Job<'a>>, ConfigError> {
    let mut config = config.clone();
    if let Some(pattern) = &opts.case_pattern {
        config.cases = vec![pattern.clone()];
    }
    let selected = config.select(catalog)?;
    config.validate(&selected)?;
    if let Some(t) = opts.tolerance {
        if !(t > 0.0 && t.is_finite()) {
            return Err(ConfigError(format!("--tolerance {t} must be positive")));
        }
    }
    let default_tol = opts.tolerance.or(config.tolerance).unwrap_or(DEFAULT_TOLERANCE);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.unwrap_or(config.seed));
    let mut jobs = Vec::new();
    for template in selected {
        let tolerance = config.tolerances.get(template.name).copied().unwrap_or(default_tol);
        let overrides = config.overrides_for(template);
        for params in template.grid(&overrides) {
            jobs.push(Job { template, params, tolerance });
        }
        if let Some(draws) = config.random.get(template.name) {
            let mut names: Vec<_> = template.params.iter().collect();
            names.sort_by_key(|p| p.name);
            for _ in 0..draws.count {
                let mut params = CaseParams::new();
                for spec in &names {
                    let value = match draws.ranges.get(spec.name) {
                        Some(&[lo, hi]) => ParamValue::Real(if lo == hi { lo } else { rng.random_range(lo..=hi) }),
                        None => overrides.get(spec.name).unwrap_or(&spec.defaults)[0],
                    };
                    params.insert(spec.name.to_string(), value);
                }
                jobs.push(Job { template, params, tolerance });
            }
        }
    }
    Ok(jobs)
}

fn failed(job: &Job, e: &Error) -> VerificationReport {
    VerificationReport {
        case_name: job.template.name.to_string(),
        params: job.params.clone(),
        closed_form: None,
        oracle: None,
        abs_err: None,
        rel_err: None,
        terms_used: 0,
        node_evals: 0,
        status: if e.is_domain() { Status::SkippedDomain } else { Status::Error },
    }
}

/// Evaluates one job; never panics on numerical failure.
pub fn verify_point(job: &Job, series: &SeriesPolicy, quadrature: &QuadraturePolicy) -> VerificationReport {
    let case = match job.template.build(&job.params) {
        Ok(c) => c,
        Err(e) => return failed(job, &e),
    };
    let closed = case.closed_form(series);
    let oracle = case.oracle(quadrature, series);
    let mut rec = failed(job, &Error::Domain(String::new()));
    if let Ok(c) = &closed {
        rec.closed_form = Some(c.value);
        rec.terms_used = c.terms_used;
    }
    if let Ok(o) = &oracle {
        rec.oracle = Some(o.value);
        rec.node_evals = o.evaluations;
    }
    match (&closed, &oracle) {
        (Ok(c), Ok(o)) => {
            let abs = (c.value - o.value).norm();
            let rel = abs / o.value.norm().max(REL_ERR_FLOOR);
            rec.abs_err = Some(abs);
            rec.rel_err = Some(rel);
            rec.status = if rel <= job.tolerance { Status::Pass } else { Status::Fail };
        }
        (Err(e), _) | (_, Err(e)) => {
            rec.status = if e.is_domain() { Status::SkippedDomain } else { Status::Error };
        }
    }
    rec
}

/// Runs every job of the configuration against the built-in catalog.
pub fn run_verification(config: &GridConfig, opts: &RunOptions) -> Result<Report, ConfigError> {
    opts.series.validate().map_err(|e| ConfigError(e.to_string()))?;
    opts.quadrature.validate().map_err(|e| ConfigError(e.to_string()))?;
    let catalog = default_catalog();
    let jobs = plan(config, opts, &catalog)?;
    let evaluate = || -> Vec<VerificationReport> {
        jobs.par_iter().map(|job| verify_point(job, &opts.series, &opts.quadrature)).collect()
    };
    let records = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| ConfigError(format!("--jobs {n}: {e}")))?
            .install(evaluate),
        None => evaluate(),
    };
    let mut report = Report {
        meta: ReportMeta {
            seed: opts.seed.unwrap_or(config.seed),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: source_date_epoch(),
            rng: RNG_NAME.to_string(),
        },
        records,
    };
    report.sort();
    Ok(report)
}
