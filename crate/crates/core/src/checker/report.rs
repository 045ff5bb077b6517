use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use super::classify::{dag_consistency, separation_table, ClassificationRow, Expected, Separation, SeparationStatus};
use super::PropertyId;
use crate::domains::DomainId;
use crate::error::Error;
use crate::verdict::{Certificate, Outcome, SearchBounds, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}; valid: json, markdown, csv"))),
        }
    }
}

/// One (domain, property) cell.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub domain: DomainId,
    pub property: PropertyId,
    pub outcome: Outcome,
    pub certificate: Certificate,
    pub bounds: Option<SearchBounds>,
    pub expected: Expected,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixReport {
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dag_consistency: Option<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub separations: Vec<Separation>,
}

impl MatrixReport {
    pub fn all_agree(&self) -> bool {
        self.records.iter().all(|r| r.agrees) && self.dag_consistency.as_ref().is_none_or(Verdict::is_holds)
    }
}

pub fn row_records(row: &ClassificationRow) -> Vec<Record> {
    PropertyId::ALL
        .into_iter()
        .map(|p| {
            let v = row.verdict(p);
            Record {
                domain: row.domain,
                property: p,
                outcome: v.outcome,
                certificate: v.certificate.clone(),
                bounds: v.bounds.clone(),
                expected: row.expected(p),
                agrees: row.agrees(p),
            }
        })
        .collect()
}

/// Records for every row; with more than one row also the consistency check and separations.
pub fn matrix_report(rows: &[ClassificationRow], full: bool) -> MatrixReport {
    MatrixReport {
        records: rows.iter().flat_map(row_records).collect(),
        dag_consistency: full.then(|| dag_consistency(rows)),
        separations: if full { separation_table(rows) } else { Vec::new() },
    }
}

fn kind(c: &Certificate) -> String {
    let v = serde_json::to_value(c).unwrap();
    v["kind"].as_str().unwrap_or("none").to_string()
}

fn expected_text(e: Expected) -> &'static str {
    match e {
        Expected::Yes => "yes",
        Expected::No => "no",
        Expected::Open => "open",
    }
}

fn status_text(s: &SeparationStatus) -> String {
    match s {
        SeparationStatus::Witnessed { domain } => format!("witnessed by {domain}"),
        SeparationStatus::Open => "OPEN".into(),
        SeparationStatus::NotComputed => "not computed".into(),
        SeparationStatus::NotWitnessed => "not witnessed".into(),
    }
}

pub fn render(r: &MatrixReport, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("domain,property,outcome,certificate,expected,agrees\n");
            for x in &r.records {
                let _ = writeln!(s, "{},{},{},{},{},{}", x.domain, x.property, x.outcome, kind(&x.certificate), expected_text(x.expected), x.agrees);
            }
            s
        }
        Format::Markdown => {
            let mut s = String::from("| domain | property | outcome | certificate | expected | agrees |\n|---|---|---|---|---|---|\n");
            for x in &r.records {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} |",
                    x.domain,
                    x.property,
                    x.outcome,
                    kind(&x.certificate),
                    expected_text(x.expected),
                    if x.agrees { "yes" } else { "NO" }
                );
            }
            if let Some(v) = &r.dag_consistency {
                let _ = writeln!(s, "\nImplication consistency: {}", v.outcome);
                if let Certificate::Structural { subject, detail, .. } = &v.certificate {
                    let _ = writeln!(s, "  {subject}: {detail}");
                }
            }
            if !r.separations.is_empty() {
                s.push_str("\n| separation | holds | fails | status |\n|---|---|---|---|\n");
                for sep in &r.separations {
                    let _ = writeln!(s, "| ({}) | {} | {} | {} |", sep.item, sep.holds, sep.fails, status_text(&sep.status));
                }
            }
            s
        }
    }
}
