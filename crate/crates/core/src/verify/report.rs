use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::identities::{CaseParams, ParamValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-domain")]
    SkippedDomain,
    #[serde(rename = "error")]
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedDomain => "skipped-domain",
            Status::Error => "error",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        [Status::Pass, Status::Fail, Status::SkippedDomain, Status::Error].into_iter().find(|st| st.as_str() == s)
    }
}

/// Outcome of one (case, parameter point) comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case_name: String,
    pub params: CaseParams,
    pub closed_form: Option<Complex64>,
    pub oracle: Option<Complex64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub terms_used: usize,
    pub node_evals: usize,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub seed: u64,
    pub version: String,
    /// Seconds since the Unix epoch, taken from `SOURCE_DATE_EPOCH` when set.
    pub timestamp: Option<u64>,
    /// Generator used for random draws.
    #[serde(default = "default_rng")]
    pub rng: String,
}

fn default_rng() -> String {
    super::RNG_NAME.to_owned()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub records: Vec<VerificationReport>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub error: usize,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.fail == 0 && self.error == 0
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} pass, {} fail, {} skipped-domain, {} error", self.pass, self.fail, self.skipped, self.error)
    }
}

fn value_key(v: &ParamValue) -> (u8, f64, f64) {
    match *v {
        ParamValue::Real(x) => (0, x, 0.0),
        ParamValue::Complex([re, im]) => (1, re, im),
    }
}

/// Lexicographic order over (name, value) pairs.
pub(crate) fn compare_params(a: &CaseParams, b: &CaseParams) -> Ordering {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((ka, va)), Some((kb, vb))) => {
                let (ta, ra, ja) = value_key(va);
                let (tb, rb, jb) = value_key(vb);
                let ord = ka.cmp(kb).then(ta.cmp(&tb)).then(ra.total_cmp(&rb)).then(ja.total_cmp(&jb));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
        }
    }
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedDomain => s.skipped += 1,
                Status::Error => s.error += 1,
            }
        }
        s
    }

    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| a.case_name.cmp(&b.case_name).then_with(|| compare_params(&a.params, &b.params)));
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid JSON report at line {}, column {}: {e}", e.line(), e.column()))
    }

    fn param_columns(&self) -> Vec<String> {
        let set: BTreeSet<&String> = self.records.iter().flat_map(|r| r.params.keys()).collect();
        set.into_iter().cloned().collect()
    }

    /// CSV with a leading `#meta` comment line, then the header
    /// case_name, sorted parameter columns, closed_form_re, closed_form_im,
    /// oracle_re, oracle_im, abs_err, rel_err, terms_used, node_evals, status.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<(), String> {
        let meta = serde_json::to_string(&self.meta).map_err(|e| e.to_string())?;
        writeln!(out, "{META_PREFIX}{meta}").map_err(|e| e.to_string())?;
        let params = self.param_columns();
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["case_name".to_string()];
        header.extend(params.iter().cloned());
        header.extend(FIXED_COLUMNS.iter().map(|s| s.to_string()));
        w.write_record(&header).map_err(|e| e.to_string())?;
        let num = |x: Option<f64>| x.map(|v| format!("{v:?}")).unwrap_or_default();
        for r in &self.records {
            let mut row = vec![r.case_name.clone()];
            row.extend(params.iter().map(|p| r.params.get(p).map(|v| v.to_string()).unwrap_or_default()));
            row.push(num(r.closed_form.map(|z| z.re)));
            row.push(num(r.closed_form.map(|z| z.im)));
            row.push(num(r.oracle.map(|z| z.re)));
            row.push(num(r.oracle.map(|z| z.im)));
            row.push(num(r.abs_err));
            row.push(num(r.rel_err));
            row.push(r.terms_used.to_string());
            row.push(r.node_evals.to_string());
            row.push(r.status.as_str().to_string());
            w.write_record(&row).map_err(|e| e.to_string())?;
        }
        w.flush().map_err(|e| e.to_string())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn read_csv<R: Read>(mut input: R) -> Result<Self, String> {
        let mut text = String::new();
        input.read_to_string(&mut text).map_err(|e| e.to_string())?;
        let (meta_line, body) = text.split_once('\n').ok_or("empty CSV report")?;
        let meta_json = meta_line.strip_prefix(META_PREFIX).ok_or("CSV report lacks the #meta line")?;
        let meta: ReportMeta = serde_json::from_str(meta_json).map_err(|e| format!("bad #meta line: {e}"))?;
        let mut rd = csv::Reader::from_reader(body.as_bytes());
        let header: Vec<String> = rd.headers().map_err(|e| e.to_string())?.iter().map(String::from).collect();
        let n = header.len();
        if n < 1 + FIXED_COLUMNS.len() || header[0] != "case_name" || header[n - FIXED_COLUMNS.len()..] != FIXED_COLUMNS {
            return Err(format!("unexpected CSV header {header:?}"));
        }
        let params = &header[1..n - FIXED_COLUMNS.len()];
        let mut records = Vec::new();
        for (i, row) in rd.records().enumerate() {
            let row = row.map_err(|e| e.to_string())?;
            let line = i + 3;
            let cell = |j: usize| row.get(j).unwrap_or("");
            let float = |j: usize| -> Result<Option<f64>, String> {
                let c = cell(j);
                if c.is_empty() {
                    Ok(None)
                } else {
                    c.parse().map(Some).map_err(|_| format!("line {line}: bad number {c:?} in {}", header[j]))
                }
            };
            let count = |j: usize| -> Result<usize, String> {
                cell(j).parse().map_err(|_| format!("line {line}: bad count {:?} in {}", cell(j), header[j]))
            };
            let mut map = CaseParams::new();
            for (k, name) in params.iter().enumerate() {
                let c = cell(k + 1);
                if !c.is_empty() {
                    let v: ParamValue =
                        serde_json::from_str(c).map_err(|_| format!("line {line}: bad parameter {c:?} in {name}"))?;
                    map.insert(name.clone(), v);
                }
            }
            let base = n - FIXED_COLUMNS.len();
            let complex = |re: Option<f64>, im: Option<f64>| match (re, im) {
                (Some(a), Some(b)) => Some(Complex64::new(a, b)),
                _ => None,
            };
            records.push(VerificationReport {
                case_name: cell(0).to_string(),
                params: map,
                closed_form: complex(float(base)?, float(base + 1)?),
                oracle: complex(float(base + 2)?, float(base + 3)?),
                abs_err: float(base + 4)?,
                rel_err: float(base + 5)?,
                terms_used: count(base + 6)?,
                node_evals: count(base + 7)?,
                status: Status::parse(cell(base + 8)).ok_or_else(|| format!("line {line}: bad status {:?}", cell(base + 8)))?,
            });
        }
        Ok(Report { meta, records })
    }

    /// Reads a report in either format, detected from its first byte.
    pub fn parse_any(text: &str) -> Result<Self, String> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::read_csv(text.as_bytes())
        }
    }
}

const META_PREFIX: &str = "#meta ";

const FIXED_COLUMNS: [&str; 9] =
    ["closed_form_re", "closed_form_im", "oracle_re", "oracle_im", "abs_err", "rel_err", "terms_used", "node_evals", "status"];
