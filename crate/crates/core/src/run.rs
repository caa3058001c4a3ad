//! Corpus → profiles → report pipeline behind the `memload` binary.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::dependency::{dep_sentences, DepError};
use crate::depmetrics::{load_profile, DepthProfile};
use crate::normalize::{normalize_tree, NormalizationOptions, NormalizeError};
use crate::ptb::{ptb_sentences, PtbError};
use crate::stats::{render, sentence_histogram, unit_histogram, OutputFormat, Report, DEFAULT_THRESHOLDS};
use crate::treemetrics::{depth_profile, MetricConfig, NpSelector, NumberingScheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Ptb,
    Dep,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ptb" => Ok(InputFormat::Ptb),
            "dep" => Ok(InputFormat::Dep),
            other => Err(format!("unknown input format `{other}` (expected ptb or dep)")),
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputFormat::Ptb => "ptb",
            InputFormat::Dep => "dep",
        })
    }
}

/// The analyses a run can perform. `SampsonNp` is an extension: Sampson
/// numbering counted at NP level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DepLoad,
    YngveWord,
    SampsonWord,
    YngveNp,
    SampsonNp,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::DepLoad,
        Method::YngveWord,
        Method::SampsonWord,
        Method::YngveNp,
        Method::SampsonNp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::DepLoad => "dep-load",
            Method::YngveWord => "yngve-word",
            Method::SampsonWord => "sampson-word",
            Method::YngveNp => "yngve-np",
            Method::SampsonNp => "sampson-np",
        }
    }

    pub fn input_format(self) -> InputFormat {
        match self {
            Method::DepLoad => InputFormat::Dep,
            _ => InputFormat::Ptb,
        }
    }

    pub fn is_np(self) -> bool {
        matches!(self, Method::YngveNp | Method::SampsonNp)
    }

    /// Tree metric configuration, `None` for the dependency method.
    pub fn metric(self) -> Option<MetricConfig> {
        match self {
            Method::DepLoad => None,
            Method::YngveWord => Some(MetricConfig::words(NumberingScheme::Yngve)),
            Method::SampsonWord => Some(MetricConfig::words(NumberingScheme::Sampson)),
            Method::YngveNp => Some(MetricConfig::nps(NumberingScheme::Yngve)),
            Method::SampsonNp => Some(MetricConfig::nps(NumberingScheme::Sampson)),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input_path: PathBuf,
    pub format: InputFormat,
    pub method: Method,
    pub coordination_adjust: bool,
    pub strip_punctuation: bool,
    pub np_selector: NpSelector,
    pub output_format: OutputFormat,
    pub thresholds: Vec<usize>,
    pub strict: bool,
    pub strict_rightward: bool,
}

impl RunConfig {
    /// Defaults for `method`, reading `input_path` in the method's format.
    pub fn new(input_path: impl Into<PathBuf>, method: Method) -> Self {
        RunConfig {
            input_path: input_path.into(),
            format: method.input_format(),
            method,
            coordination_adjust: true,
            strip_punctuation: true,
            np_selector: NpSelector::All,
            output_format: OutputFormat::Text,
            thresholds: DEFAULT_THRESHOLDS.to_vec(),
            strict: false,
            strict_rightward: false,
        }
    }

    pub fn validate(&self) -> Result<(), RunError> {
        let invalid = |msg: String| Err(RunError::InvalidConfig(msg));
        if self.method.input_format() != self.format {
            return invalid(format!(
                "method {} needs --format {}, got {}",
                self.method,
                self.method.input_format(),
                self.format
            ));
        }
        match self.format {
            InputFormat::Dep => {
                if !self.coordination_adjust {
                    return invalid("--no-coord-adjust applies to ptb input only".into());
                }
                if !self.strip_punctuation {
                    return invalid("--keep-punct applies to ptb input only".into());
                }
            }
            InputFormat::Ptb => {
                if self.strict_rightward {
                    return invalid("--strict-rightward applies to dep input only".into());
                }
            }
        }
        if self.np_selector != NpSelector::All && !self.method.is_np() {
            return invalid("--np-selector applies to NP methods only".into());
        }
        Ok(())
    }

    fn metric(&self) -> Option<MetricConfig> {
        self.method.metric().map(|m| {
            m.with_coordination_adjust(self.coordination_adjust)
                .with_np_selector(self.np_selector)
        })
    }

    fn normalization(&self) -> NormalizationOptions {
        NormalizationOptions {
            strip_punctuation: self.strip_punctuation,
            ..NormalizationOptions::default()
        }
    }
}

/// Why a single sentence was left out of the statistics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SentenceError {
    #[error(transparent)]
    Ptb(#[from] PtbError),
    #[error(transparent)]
    Dep(#[from] DepError),
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("sentence {sentence}: {source}")]
    Sentence {
        sentence: usize,
        #[source]
        source: SentenceError,
    },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::InvalidConfig(_) => 2,
            RunError::Io { .. } | RunError::Sentence { .. } => 1,
        }
    }
}

/// Counts of analysed and skipped sentences, plus one message per skip.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub analysed: usize,
    pub parse_errors: usize,
    pub empty_after_normalization: usize,
    pub warnings: Vec<String>,
}

impl Diagnostics {
    pub fn skipped(&self) -> usize {
        self.parse_errors + self.empty_after_normalization
    }

    pub fn summary(&self) -> String {
        format!(
            "memload: {} sentences analysed, {} skipped ({} parse errors, {} empty after normalization)",
            self.analysed,
            self.skipped(),
            self.parse_errors,
            self.empty_after_normalization
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub report: Report,
    pub profiles: Vec<DepthProfile>,
    pub diagnostics: Diagnostics,
}

impl RunOutcome {
    pub fn render(&self, format: OutputFormat) -> String {
        render(&self.report, format)
    }
}

/// Per-sentence profiles of a PTB corpus, in input order.
pub fn ptb_profiles(text: &str, metric: &MetricConfig, norm: &NormalizationOptions) -> Vec<Result<DepthProfile, SentenceError>> {
    ptb_sentences(text)
        .into_par_iter()
        .map(|parsed| {
            let tree = parsed?;
            let tree = normalize_tree(tree, norm)?;
            Ok(depth_profile(&tree, metric))
        })
        .collect()
}

/// Per-sentence profiles of a dependency corpus, in input order.
pub fn dep_profiles(text: &str, strict_rightward: bool) -> Vec<Result<DepthProfile, SentenceError>> {
    dep_sentences(text)
        .into_par_iter()
        .map(|block| {
            let sentence = block.sentence?;
            if strict_rightward {
                sentence.check_rightward(&block.lines)?;
            }
            Ok(load_profile(&sentence))
        })
        .collect()
}

/// Runs the configured analysis over corpus text already in memory.
pub fn run_on_text(config: &RunConfig, text: &str) -> Result<RunOutcome, RunError> {
    config.validate()?;
    let results = match config.metric() {
        None => dep_profiles(text, config.strict_rightward),
        Some(metric) => ptb_profiles(text, &metric, &config.normalization()),
    };

    let mut diagnostics = Diagnostics::default();
    let mut profiles = Vec::with_capacity(results.len());
    for (i, result) in results.into_iter().enumerate() {
        match result {
            Ok(p) => profiles.push(p),
            Err(err) if config.strict => {
                return Err(RunError::Sentence {
                    sentence: i + 1,
                    source: err,
                })
            }
            Err(err) => {
                match err {
                    SentenceError::Normalize(_) => diagnostics.empty_after_normalization += 1,
                    _ => diagnostics.parse_errors += 1,
                }
                diagnostics.warnings.push(format!("skipping sentence {}: {}", i + 1, err));
            }
        }
    }
    diagnostics.analysed = profiles.len();

    let report = Report::new(config.method.name(), unit_histogram(&profiles), sentence_histogram(&profiles))
        .with_thresholds(&config.thresholds);
    Ok(RunOutcome {
        report,
        profiles,
        diagnostics,
    })
}

/// Reads `config.input_path` and runs the analysis.
pub fn run(config: &RunConfig) -> Result<RunOutcome, RunError> {
    config.validate()?;
    let text = fs::read_to_string(&config.input_path).map_err(|source| RunError::Io {
        path: config.input_path.clone(),
        source,
    })?;
    run_on_text(config, &text)
}
