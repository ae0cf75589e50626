//! Output records. Every number is written as a decimal string.

use std::collections::BTreeMap;
use std::io::Write;

use clap::ValueEnum;
use qpart_core::verify::Finding;
use qpart_core::{MappingTrace, VerificationReport, Witness};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

pub trait Record: Serialize {
    const HEADER: &'static [&'static str];
    fn row(&self) -> Vec<String>;
}

/// Writes records as CSV with a header row, or as one JSON object per line. No
/// records means no output at all.
pub fn emit<R: Record>(out: &mut impl Write, format: Format, records: &[R]) -> anyhow::Result<()> {
    if records.is_empty() {
        return Ok(());
    }
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(R::HEADER)?;
            for r in records {
                w.write_record(r.row())?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct CoefficientRecord {
    pub command: &'static str,
    pub n: String,
    pub coefficient: String,
}

impl Record for CoefficientRecord {
    const HEADER: &'static [&'static str] = &["n", "coefficient"];
    fn row(&self) -> Vec<String> {
        vec![self.n.clone(), self.coefficient.clone()]
    }
}

#[derive(Debug, Serialize)]
pub struct PartTraceRecord {
    pub part: String,
    pub frequency: String,
    pub q: String,
    pub r: String,
}

#[derive(Debug, Serialize)]
pub struct MappingRecord {
    pub command: &'static str,
    pub direction: String,
    pub y: String,
    #[serde(rename = "L")]
    pub l: String,
    pub source: String,
    pub image: String,
    pub mu: String,
    pub sums: BTreeMap<String, String>,
    pub trace: Vec<PartTraceRecord>,
}

impl MappingRecord {
    pub fn with_trace(mut self, trace: &MappingTrace) -> Self {
        self.mu = trace.mu.to_string();
        self.sums = trace
            .sums
            .labelled()
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        self.trace = trace
            .parts
            .iter()
            .map(|p| PartTraceRecord {
                part: p.part.to_string(),
                frequency: p.frequency.to_string(),
                q: p.quotient.to_string(),
                r: p.remainder.to_string(),
            })
            .collect();
        self
    }
}

impl Record for MappingRecord {
    const HEADER: &'static [&'static str] = &[
        "direction",
        "y",
        "L",
        "source",
        "image",
        "mu",
        "sums",
        "trace",
    ];
    fn row(&self) -> Vec<String> {
        let sums = self
            .sums
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        let trace = self
            .trace
            .iter()
            .map(|t| format!("{}:{}={}*2+{}", t.part, t.frequency, t.q, t.r))
            .collect::<Vec<_>>()
            .join(";");
        vec![
            self.direction.clone(),
            self.y.clone(),
            self.l.clone(),
            self.source.clone(),
            self.image.clone(),
            self.mu.clone(),
            sums,
            trace,
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct FindingRecord {
    pub kind: &'static str,
    pub n: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl FindingRecord {
    fn from_finding(f: &Finding) -> Self {
        let rec = |kind, n: &u64, value: String, detail| FindingRecord {
            kind,
            n: n.to_string(),
            value,
            detail,
        };
        match f {
            Finding::Negative { n, value } => rec("negative", n, value.to_string(), None),
            Finding::UnexpectedZero { n } => rec("unexpected_zero", n, "0".into(), None),
            Finding::MissingZero { n, value } => rec("missing_zero", n, value.to_string(), None),
            Finding::SignViolation { n, value } => {
                rec("sign_violation", n, value.to_string(), None)
            }
            Finding::Domination {
                n,
                dominant,
                dominated,
            } => rec(
                "domination",
                n,
                dominant.to_string(),
                Some(format!("rho(S)={dominated}")),
            ),
            Finding::Witness(w) => rec(
                "witness",
                &w.partition.norm(),
                w.mu_value.to_string(),
                Some(format!("{} {}", w.subcase, w.partition)),
            ),
        }
    }

    fn compact(&self) -> String {
        let mut s = format!("{}:n={}:value={}", self.kind, self.n, self.value);
        if let Some(d) = &self.detail {
            s.push(':');
            s.push_str(d);
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct ReportRecord {
    pub command: &'static str,
    pub subject: String,
    pub parameters: BTreeMap<String, String>,
    // keeps the report's own parameter order for CSV
    #[serde(skip)]
    pub parameter_order: Vec<(String, String)>,
    pub max_degree: String,
    pub status: String,
    pub as_expected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_set: Option<Vec<String>>,
    pub findings: Vec<FindingRecord>,
    pub notes: Vec<String>,
}

impl ReportRecord {
    pub fn new(command: &'static str, r: &VerificationReport) -> Self {
        Self {
            command,
            subject: r.subject.to_string(),
            parameters: r.parameters.iter().cloned().collect(),
            parameter_order: r.parameters.clone(),
            max_degree: r.max_degree.to_string(),
            status: r.status.to_string(),
            as_expected: r.as_expected,
            zero_set: r
                .zero_set
                .as_ref()
                .map(|z| z.iter().map(u64::to_string).collect()),
            findings: r.findings.iter().map(FindingRecord::from_finding).collect(),
            notes: r.notes.clone(),
        }
    }
}

impl Record for ReportRecord {
    const HEADER: &'static [&'static str] = &[
        "subject",
        "parameters",
        "max_degree",
        "status",
        "as_expected",
        "zero_set",
        "findings",
        "notes",
    ];
    fn row(&self) -> Vec<String> {
        vec![
            self.subject.clone(),
            self.parameter_order
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";"),
            self.max_degree.clone(),
            self.status.clone(),
            self.as_expected.to_string(),
            self.zero_set
                .as_ref()
                .map(|z| z.join(";"))
                .unwrap_or_default(),
            self.findings
                .iter()
                .map(FindingRecord::compact)
                .collect::<Vec<_>>()
                .join(";"),
            self.notes.join("; "),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessRecord {
    pub command: &'static str,
    pub y: String,
    #[serde(rename = "L")]
    pub l: String,
    pub n: String,
    pub subcase: String,
    pub partition: String,
    pub mu: String,
    pub predicted_mu: String,
}

impl WitnessRecord {
    pub fn found(y: u64, l: u64, n: u64, w: &Witness) -> Self {
        Self {
            command: "witness",
            y: y.to_string(),
            l: l.to_string(),
            n: n.to_string(),
            subcase: w.subcase.to_string(),
            partition: w.partition.to_string(),
            mu: w.mu_value.to_string(),
            predicted_mu: w.predicted_mu().to_string(),
        }
    }

    pub fn none(y: u64, l: u64, n: u64) -> Self {
        Self {
            command: "witness",
            y: y.to_string(),
            l: l.to_string(),
            n: n.to_string(),
            subcase: "NONE".into(),
            partition: String::new(),
            mu: String::new(),
            predicted_mu: String::new(),
        }
    }
}

impl Record for WitnessRecord {
    const HEADER: &'static [&'static str] =
        &["y", "L", "n", "subcase", "partition", "mu", "predicted_mu"];
    fn row(&self) -> Vec<String> {
        vec![
            self.y.clone(),
            self.l.clone(),
            self.n.clone(),
            self.subcase.clone(),
            self.partition.clone(),
            self.mu.clone(),
            self.predicted_mu.clone(),
        ]
    }
}
