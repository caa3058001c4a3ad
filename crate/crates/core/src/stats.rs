//! Frequency tables over depth profiles and their rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::depmetrics::DepthProfile;

/// Thresholds reported by default: the lower bound, centre and upper bound
/// of seven plus or minus two.
pub const DEFAULT_THRESHOLDS: [usize; 3] = [5, 7, 9];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("unsupported output format `{0}` (expected text, csv or json)")]
    UnsupportedFormat(String),
    #[error("malformed report: {0}")]
    MalformedReport(String),
}

/// Value → frequency map. Only non-zero bins are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "BTreeMap<usize, u64>", into = "BTreeMap<usize, u64>")]
pub struct Histogram {
    bins: BTreeMap<usize, u64>,
    total: u64,
}

impl From<BTreeMap<usize, u64>> for Histogram {
    fn from(bins: BTreeMap<usize, u64>) -> Self {
        bins.into_iter().collect()
    }
}

impl From<Histogram> for BTreeMap<usize, u64> {
    fn from(h: Histogram) -> Self {
        h.bins
    }
}

impl FromIterator<(usize, u64)> for Histogram {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        let mut h = Histogram::new();
        for (value, count) in iter {
            h.add_count(value, count);
        }
        h
    }
}

impl Histogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: usize) {
        self.add_count(value, 1);
    }

    pub fn add_count(&mut self, value: usize, count: u64) {
        if count > 0 {
            *self.bins.entry(value).or_insert(0) += count;
            self.total += count;
        }
    }

    /// Adds every bin of `other`. Merging is associative and commutative.
    pub fn merge(&mut self, other: &Histogram) {
        for (&v, &c) in &other.bins {
            self.add_count(v, c);
        }
    }

    pub fn get(&self, value: usize) -> u64 {
        self.bins.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn max_value(&self) -> Option<usize> {
        self.bins.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.bins.iter().map(|(&v, &c)| (v, c))
    }

    pub fn bins(&self) -> &BTreeMap<usize, u64> {
        &self.bins
    }

    /// Frequency of values strictly greater than `threshold`.
    pub fn count_above(&self, threshold: usize) -> u64 {
        self.bins.range(threshold + 1..).map(|(_, &c)| c).sum()
    }
}

/// Histogram of every individual value across all profiles.
pub fn unit_histogram<'a>(profiles: impl IntoIterator<Item = &'a DepthProfile>) -> Histogram {
    let mut h = Histogram::new();
    for p in profiles {
        for &v in p.values() {
            h.add(v);
        }
    }
    h
}

/// Histogram of per-sentence maxima. Empty profiles count at 0.
pub fn sentence_histogram<'a>(profiles: impl IntoIterator<Item = &'a DepthProfile>) -> Histogram {
    let mut h = Histogram::new();
    for p in profiles {
        h.add(p.sentence_max());
    }
    h
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdReport {
    pub thresholds: Vec<usize>,
    pub exceed_counts: Vec<u64>,
    pub exceed_fractions: Vec<f64>,
}

/// How much of the histogram lies strictly above each threshold.
/// Thresholds are reported in ascending order without duplicates.
pub fn threshold_report(hist: &Histogram, thresholds: &[usize]) -> ThresholdReport {
    let mut thresholds = thresholds.to_vec();
    thresholds.sort_unstable();
    thresholds.dedup();
    let exceed_counts = thresholds.iter().map(|&t| hist.count_above(t)).collect::<Vec<_>>();
    let exceed_fractions = exceed_counts
        .iter()
        .map(|&c| if hist.total() == 0 { 0.0 } else { c as f64 / hist.total() as f64 })
        .collect();
    ThresholdReport {
        thresholds,
        exceed_counts,
        exceed_fractions,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(StatsError::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Everything one run reports: unit and sentence histograms for a method.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub method: String,
    pub units: Histogram,
    pub sentences: Histogram,
    pub thresholds: Vec<usize>,
}

impl Report {
    pub fn new(method: impl Into<String>, units: Histogram, sentences: Histogram) -> Self {
        Report {
            method: method.into(),
            units,
            sentences,
            thresholds: DEFAULT_THRESHOLDS.to_vec(),
        }
    }

    pub fn with_thresholds(mut self, thresholds: &[usize]) -> Self {
        self.thresholds = thresholds.to_vec();
        self
    }

    pub fn max_value(&self) -> usize {
        self.units.max_value().into_iter().chain(self.sentences.max_value()).max().unwrap_or(0)
    }

    fn has_rows(&self) -> bool {
        !(self.units.is_empty() && self.sentences.is_empty())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonThreshold {
    threshold: usize,
    units_exceeding: u64,
    unit_fraction: f64,
    sentences_exceeding: u64,
    sentence_fraction: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonReport {
    method: String,
    unit_histogram: Histogram,
    sentence_histogram: Histogram,
    total_units: u64,
    total_sentences: u64,
    max_value: usize,
    thresholds: Vec<JsonThreshold>,
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(report),
        OutputFormat::Csv => render_csv(report),
        OutputFormat::Json => render_json(report),
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = String::from("value,units,sentences\n");
    if report.has_rows() {
        for v in 0..=report.max_value() {
            let _ = writeln!(out, "{},{},{}", v, report.units.get(v), report.sentences.get(v));
        }
    }
    out
}

fn render_json(report: &Report) -> String {
    let unit_t = threshold_report(&report.units, &report.thresholds);
    let sent_t = threshold_report(&report.sentences, &report.thresholds);
    let thresholds = unit_t
        .thresholds
        .iter()
        .enumerate()
        .map(|(i, &t)| JsonThreshold {
            threshold: t,
            units_exceeding: unit_t.exceed_counts[i],
            unit_fraction: unit_t.exceed_fractions[i],
            sentences_exceeding: sent_t.exceed_counts[i],
            sentence_fraction: sent_t.exceed_fractions[i],
        })
        .collect();
    let json = JsonReport {
        method: report.method.clone(),
        unit_histogram: report.units.clone(),
        sentence_histogram: report.sentences.clone(),
        total_units: report.units.total(),
        total_sentences: report.sentences.total(),
        max_value: report.max_value(),
        thresholds,
    };
    let mut s = serde_json::to_string_pretty(&json).expect("report serializes");
    s.push('\n');
    s
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", report.method);

    let width = |header: &str, values: &mut dyn Iterator<Item = u64>| {
        values.map(|v| v.to_string().len()).chain([header.len()]).max().unwrap_or(0)
    };
    let vw = width("value", &mut [report.max_value() as u64].into_iter()).max("total".len());
    let uw = width("units", &mut report.units.iter().map(|(_, c)| c).chain([report.units.total()]));
    let sw = width("sentences", &mut report.sentences.iter().map(|(_, c)| c).chain([report.sentences.total()]));

    let _ = writeln!(out, "{:>vw$}  {:>uw$}  {:>sw$}", "value", "units", "sentences");
    if report.has_rows() {
        for v in 0..=report.max_value() {
            let _ = writeln!(
                out,
                "{:>vw$}  {:>uw$}  {:>sw$}",
                v,
                report.units.get(v),
                report.sentences.get(v)
            );
        }
    }
    let _ = writeln!(
        out,
        "{:>vw$}  {:>uw$}  {:>sw$}",
        "total",
        report.units.total(),
        report.sentences.total()
    );

    let unit_t = threshold_report(&report.units, &report.thresholds);
    let sent_t = threshold_report(&report.sentences, &report.thresholds);
    if !unit_t.thresholds.is_empty() {
        out.push('\n');
        for (i, t) in unit_t.thresholds.iter().enumerate() {
            let _ = writeln!(
                out,
                "> {}: {} units ({:.4}%), {} sentences ({:.4}%)",
                t,
                unit_t.exceed_counts[i],
                100.0 * unit_t.exceed_fractions[i],
                sent_t.exceed_counts[i],
                100.0 * sent_t.exceed_fractions[i],
            );
        }
    }
    out
}

/// Recovers the unit and sentence histograms from CSV output.
pub fn parse_csv(text: &str) -> Result<(Histogram, Histogram), StatsError> {
    let bad = |msg: String| StatsError::MalformedReport(msg);
    let mut lines = text.lines();
    match lines.next() {
        Some("value,units,sentences") => {}
        other => return Err(bad(format!("unexpected header {other:?}"))),
    }
    let mut units = Histogram::new();
    let mut sentences = Histogram::new();
    for (no, line) in lines.enumerate() {
        let fields = line.split(',').map(str::parse::<u64>).collect::<Result<Vec<_>, _>>();
        match fields.as_deref() {
            Ok([v, u, s]) => {
                units.add_count(*v as usize, *u);
                sentences.add_count(*v as usize, *s);
            }
            _ => return Err(bad(format!("row {}: {line:?}", no + 2))),
        }
    }
    Ok((units, sentences))
}

/// Recovers the method name and both histograms from JSON output.
pub fn parse_json(text: &str) -> Result<Report, StatsError> {
    let json: JsonReport = serde_json::from_str(text).map_err(|e| StatsError::MalformedReport(e.to_string()))?;
    Ok(Report {
        method: json.method,
        units: json.unit_histogram,
        sentences: json.sentence_histogram,
        thresholds: json.thresholds.iter().map(|t| t.threshold).collect(),
    })
}
