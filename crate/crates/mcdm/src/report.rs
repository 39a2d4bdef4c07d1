//! Text, JSON and CSV renderings of ranking and consistency reports.
//!
//! Tables print 4 decimals; JSON and CSV print 6.

use std::fmt::Write as _;

use mcdm_core::{ConsistencyReport, RankingReport};
use serde::{Deserialize, Serialize};

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyJson {
    pub lambda_max: f64,
    pub n: usize,
    pub ci: f64,
    pub ri: f64,
    pub cr: f64,
    pub consistent: bool,
}

impl From<&ConsistencyReport> for ConsistencyJson {
    fn from(c: &ConsistencyReport) -> Self {
        Self {
            lambda_max: round6(c.lambda_max),
            n: c.n,
            ci: round6(c.ci),
            ri: round6(c.ri),
            cr: round6(c.cr),
            consistent: c.consistent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub rank: usize,
    pub name: String,
    pub weight: f64,
    pub raw_score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub method: String,
    pub consistency: Option<ConsistencyJson>,
    pub mse_vs_manual: Option<f64>,
    pub entries: Vec<EntryJson>,
}

impl From<&RankingReport> for ReportJson {
    fn from(r: &RankingReport) -> Self {
        Self {
            method: r.method.as_str().to_string(),
            consistency: r.consistency.as_ref().map(ConsistencyJson::from),
            mse_vs_manual: r.mse_vs_manual.map(round6),
            entries: r
                .entries
                .iter()
                .map(|e| EntryJson {
                    rank: e.rank,
                    name: e.name.clone(),
                    weight: round6(e.weight),
                    raw_score: round6(e.raw_score),
                })
                .collect(),
        }
    }
}

/// JSON array with one object per report.
pub fn reports_json(reports: &[&RankingReport]) -> String {
    let body: Vec<ReportJson> = reports.iter().map(|r| ReportJson::from(*r)).collect();
    let mut s = serde_json::to_string_pretty(&body).expect("report serializes");
    s.push('\n');
    s
}

pub fn consistency_json(c: &ConsistencyReport) -> String {
    let mut s = serde_json::to_string_pretty(&ConsistencyJson::from(c)).expect("report serializes");
    s.push('\n');
    s
}

fn consistency_line(c: &ConsistencyReport) -> String {
    format!(
        "lambda_max={:.4} CI={:.4} RI={:.2} CR={:.4} {}",
        c.lambda_max,
        c.ci,
        c.ri,
        c.cr,
        if c.consistent { "PASS" } else { "FAIL" }
    )
}

pub fn reports_table(reports: &[&RankingReport]) -> String {
    let width = reports
        .iter()
        .flat_map(|r| r.entries.iter().map(|e| e.name.chars().count()))
        .max()
        .unwrap_or(0)
        .max("Alternative".len());
    let mut out = String::new();
    for (k, r) in reports.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "== {} ==", r.method);
        if let Some(c) = &r.consistency {
            let _ = writeln!(out, "consistency: {}", consistency_line(c));
            if !c.consistent {
                let _ = writeln!(out, "FLAGGED: consistency ratio above threshold");
            }
        }
        if let Some(m) = r.mse_vs_manual {
            let _ = writeln!(out, "mse_vs_manual: {m:.4e}");
        }
        let _ = writeln!(
            out,
            "{:>4}  {:<width$}  {:>6}  {:>6}",
            "Rank", "Alternative", "Weight", "Score"
        );
        for e in &r.entries {
            let _ = writeln!(
                out,
                "{:>4}  {:<width$}  {:>6.4}  {:>6.4}",
                e.rank, e.name, e.weight, e.raw_score
            );
        }
    }
    out
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 output")
}

/// `method,rank,name,weight,raw_score`, one row per entry.
pub fn reports_csv(reports: &[&RankingReport]) -> String {
    let mut w = csv_writer();
    w.write_record(["method", "rank", "name", "weight", "raw_score"])
        .expect("in-memory write");
    for r in reports {
        for e in &r.entries {
            w.write_record([
                r.method.as_str().to_string(),
                e.rank.to_string(),
                e.name.clone(),
                format!("{:.6}", e.weight),
                format!("{:.6}", e.raw_score),
            ])
            .expect("in-memory write");
        }
    }
    finish(w)
}

/// Long-format plot data: `method,alternative,weight,rank`, ordered by
/// method then rank.
pub fn plotdata_csv(reports: &[&RankingReport]) -> String {
    let mut w = csv_writer();
    w.write_record(["method", "alternative", "weight", "rank"])
        .expect("in-memory write");
    for r in reports {
        for e in &r.entries {
            w.write_record([
                r.method.as_str().to_string(),
                e.name.clone(),
                format!("{:.6}", e.weight),
                e.rank.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    finish(w)
}

pub fn consistency_table(c: &ConsistencyReport, threshold: f64) -> String {
    format!(
        "n:          {}\nlambda_max: {:.6}\nCI:         {:.6}\nRI:         {:.2}\nCR:         {:.6}\nthreshold:  {}\nresult:     {}\n",
        c.n,
        c.lambda_max,
        c.ci,
        c.ri,
        c.cr,
        threshold,
        if c.consistent { "PASS" } else { "FAIL" }
    )
}

pub fn consistency_csv(c: &ConsistencyReport) -> String {
    let mut w = csv_writer();
    w.write_record(["n", "lambda_max", "ci", "ri", "cr", "consistent"])
        .expect("in-memory write");
    w.write_record([
        c.n.to_string(),
        format!("{:.6}", c.lambda_max),
        format!("{:.6}", c.ci),
        format!("{:.6}", c.ri),
        format!("{:.6}", c.cr),
        c.consistent.to_string(),
    ])
    .expect("in-memory write");
    finish(w)
}
