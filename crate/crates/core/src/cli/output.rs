//! JSON, CSV and plain-text renderings of verify and compute results.

use serde::Serialize;
use serde_json::Value;

use crate::report::Report;

use super::compute::{Computed, ComputeRequest, Object};
use super::suites::{Suite, SuiteConfig};
use super::{ComputeArgs, Format, VerifyArgs};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub n: Option<u32>,
    pub n_range: Option<(u32, u32)>,
    pub x_order: Option<usize>,
    pub smax: Option<usize>,
    pub kmax: Option<usize>,
    pub perturb: Option<usize>,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    #[serde(flatten)]
    pub report: Report,
}

#[derive(Serialize)]
pub struct VerifyDocument {
    pub version: &'static str,
    pub config: VerifyConfig,
    pub reports: Vec<SuiteReport>,
}

impl VerifyDocument {
    pub fn new(args: &VerifyArgs, cfg: &SuiteConfig, reports: Vec<(Suite, Report)>) -> Self {
        VerifyDocument {
            version: VERSION,
            config: VerifyConfig {
                suite: args.suite,
                n: args.common.n,
                n_range: args.common.n_range,
                x_order: cfg.order,
                smax: cfg.smax,
                kmax: cfg.kmax,
                perturb: cfg.perturb,
            },
            reports: reports.into_iter().map(|(suite, report)| SuiteReport { suite, report }).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ComputeConfig {
    pub object: Object,
    #[serde(flatten)]
    pub request: ComputeRequest,
}

pub struct ComputeDocument {
    pub config: ComputeConfig,
    pub computed: Computed,
}

impl ComputeDocument {
    pub fn new(args: &ComputeArgs, req: &ComputeRequest, computed: Computed) -> Self {
        ComputeDocument {
            config: ComputeConfig {
                object: args.object,
                request: *req,
            },
            computed,
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let f: Vec<String> = fields.iter().map(|s| csv_field(s)).collect();
    f.join(",") + "\n"
}

pub fn render_reports(doc: &VerifyDocument, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(doc).expect("report serialization") + "\n",
        Format::Csv => {
            let mut s = csv_line(&[
                "suite", "check", "n", "order", "status", "degree", "location", "expected", "actual",
            ].map(String::from));
            for r in &doc.reports {
                let rep = &r.report;
                let suite = serde_json::to_value(r.suite).expect("suite name");
                let status = serde_json::to_value(rep.status).expect("status name");
                let f = rep.first_failure.clone().unwrap_or_default();
                s += &csv_line(&[
                    suite.as_str().unwrap_or_default().to_string(),
                    rep.check.clone(),
                    rep.n.to_string(),
                    rep.order.to_string(),
                    status.as_str().unwrap_or_default().to_string(),
                    f.degree.map(|d| d.to_string()).unwrap_or_default(),
                    f.location,
                    f.expected,
                    f.actual,
                ]);
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &doc.reports {
                s += &format!("{}\n", r.report);
            }
            let failed = doc.reports.iter().filter(|r| !r.report.passed()).count();
            s += &format!("{} checks, {} failed\n", doc.reports.len(), failed);
            s
        }
    }
}

pub fn render_objects(doc: &ComputeDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "version": VERSION,
                "config": doc.config,
                "objects": Value::Array(doc.computed.json.clone()),
            });
            serde_json::to_string(&v).expect("object serialization") + "\n"
        }
        Format::Csv => {
            let mut s = csv_line(&["object", "index", "exponent", "value"].map(String::from));
            for r in &doc.computed.records {
                s += &csv_line(&[r.object.clone(), r.index.clone(), r.exponent.to_string(), r.value.clone()]);
            }
            s
        }
        Format::Pretty => doc.computed.lines.iter().map(|l| format!("{l}\n")).collect(),
    }
}
