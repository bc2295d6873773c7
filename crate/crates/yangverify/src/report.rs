//! The report document of a suite run and its two layouts.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};
use yangverify_core::reduction_engine::{CheckResult, Status, TruncationParams};

use crate::runner::TimedResult;

pub const SCHEMA: &str = "yangverify/1";

/// Output layout of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    JsonLike,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level_bound: Option<u32>,
    pub max_word_length: usize,
    pub max_filtration_degree: u32,
    pub max_rounds: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub zero: usize,
    pub nonzero: usize,
    pub inconclusive: usize,
    pub error: usize,
    /// Probes whose status is not zero. Probes do not affect the verdict.
    pub failed_probes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub id: String,
    pub status: String,
    pub rule_applications: u64,
    pub probe: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub id: String,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub total_ms: f64,
    pub checks: Vec<Timing>,
}

/// Overall outcome of a run, ignoring probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AllZero,
    Nonzero,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::AllZero => "all-zero",
            Verdict::Nonzero => "nonzero",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::AllZero => 0,
            Verdict::Nonzero => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

/// A suite report. Everything except `timings` is covered by `checksum`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema: String,
    pub suite: String,
    pub parameters: Parameters,
    pub summary: Summary,
    pub verdict: Verdict,
    pub checks: Vec<Entry>,
    pub checksum: String,
    pub timings: Timings,
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn entry_of(r: &CheckResult) -> Entry {
    let (status, rule_applications, detail) = match &r.outcome {
        Ok(rep) => {
            let status = match rep.status {
                Status::Zero => "zero",
                Status::NonzeroNormalForm => "nonzero",
                Status::Inconclusive => "inconclusive",
            };
            let detail = match rep.status {
                Status::NonzeroNormalForm => Some(rep.normal_form.to_string()),
                _ => rep.reason.clone(),
            };
            (status, rep.rule_applications, detail)
        }
        Err(e) => ("error", 0, Some(e.to_string())),
    };
    Entry {
        id: r.id.clone(),
        status: status.into(),
        rule_applications,
        probe: r.probe,
        detail,
    }
}

impl ReportDocument {
    pub fn assemble(
        suite: &str,
        level_bound: Option<u32>,
        params: TruncationParams,
        results: &[TimedResult],
        total: Duration,
    ) -> Self {
        let checks: Vec<Entry> = results.iter().map(|(r, _)| entry_of(r)).collect();
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        let mut verdict = Verdict::AllZero;
        for e in &checks {
            match e.status.as_str() {
                "zero" => summary.zero += 1,
                "nonzero" => summary.nonzero += 1,
                "inconclusive" => summary.inconclusive += 1,
                _ => summary.error += 1,
            }
            if e.status == "zero" {
                continue;
            }
            if e.probe {
                summary.failed_probes += 1;
            } else if e.status == "nonzero" {
                verdict = Verdict::Nonzero;
            } else if verdict == Verdict::AllZero {
                verdict = Verdict::Inconclusive;
            }
        }
        let timings = Timings {
            total_ms: ms(total),
            checks: results
                .iter()
                .map(|(r, d)| Timing {
                    id: r.id.clone(),
                    wall_ms: ms(*d),
                })
                .collect(),
        };
        let mut doc = ReportDocument {
            schema: SCHEMA.into(),
            suite: suite.into(),
            parameters: Parameters {
                level_bound,
                max_word_length: params.max_word_length,
                max_filtration_degree: params.max_filtration_degree,
                max_rounds: params.max_rounds,
            },
            summary,
            verdict,
            checks,
            checksum: String::new(),
            timings,
        };
        doc.checksum = format!(
            "sha256:{}",
            hex::encode(Sha256::digest(doc.body().as_bytes()))
        );
        doc
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    /// The checksummed part of the text layout.
    pub fn body(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let mut out = String::new();
        let p = &self.parameters;
        let s = &self.summary;
        writeln!(out, "schema: {}", self.schema).unwrap();
        writeln!(out, "suite: {}", self.suite).unwrap();
        writeln!(out, "parameters:").unwrap();
        if let Some(d) = p.level_bound {
            writeln!(out, "  level_bound: {d}").unwrap();
        }
        writeln!(out, "  max_word_length: {}", p.max_word_length).unwrap();
        writeln!(out, "  max_filtration_degree: {}", p.max_filtration_degree).unwrap();
        writeln!(out, "  max_rounds: {}", p.max_rounds).unwrap();
        writeln!(out, "summary:").unwrap();
        for (k, v) in [
            ("total", s.total),
            ("zero", s.zero),
            ("nonzero", s.nonzero),
            ("inconclusive", s.inconclusive),
            ("error", s.error),
            ("failed_probes", s.failed_probes),
        ] {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        writeln!(out, "verdict: {}", self.verdict.name()).unwrap();
        writeln!(out, "checks:").unwrap();
        for e in &self.checks {
            writeln!(out, "  - id: {}", q(&e.id)).unwrap();
            writeln!(out, "    status: {}", e.status).unwrap();
            writeln!(out, "    rule_applications: {}", e.rule_applications).unwrap();
            writeln!(out, "    probe: {}", e.probe).unwrap();
            if let Some(d) = &e.detail {
                writeln!(out, "    detail: {}", q(d)).unwrap();
            }
        }
        out
    }

    /// The text layout: body, checksum, then timings.
    pub fn to_text(&self) -> String {
        let mut out = self.body();
        writeln!(out, "checksum: {}", self.checksum).unwrap();
        writeln!(out, "timings:").unwrap();
        writeln!(out, "  total_ms: {}", self.timings.total_ms).unwrap();
        writeln!(out, "  checks:").unwrap();
        for t in &self.timings.checks {
            writeln!(out, "    - id: {}", serde_json::to_string(&t.id).unwrap()).unwrap();
            writeln!(out, "      wall_ms: {}", t.wall_ms).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::JsonLike => self.to_json(),
        }
    }

    /// One line for standard error.
    pub fn summary_line(&self) -> String {
        let s = &self.summary;
        format!(
            "{}: {} checks, {} zero, {} nonzero, {} inconclusive, {} errors, {} failed probes; {} in {:.1} s",
            self.suite,
            s.total,
            s.zero,
            s.nonzero,
            s.inconclusive,
            s.error,
            s.failed_probes,
            self.verdict.name(),
            self.timings.total_ms / 1e3
        )
    }
}
