use std::io::{self, Write};
use std::path::PathBuf;
use std::process;

use clap::Parser;

use memload::run::{run, InputFormat, Method, RunConfig};
use memload::stats::OutputFormat;
use memload::treemetrics::NpSelector;

/// Memory-load statistics (undetermined modifiees, Yngve and Sampson stack
/// depth) over a treebank.
#[derive(Debug, Parser)]
#[command(name = "memload", version)]
struct Args {
    /// Treebank file.
    #[arg(long)]
    input: PathBuf,

    /// Input format: ptb (bracketed trees) or dep (INDEX<TAB>SURFACE<TAB>HEAD).
    #[arg(long)]
    format: InputFormat,

    /// dep-load, yngve-word, sampson-word, yngve-np or sampson-np.
    #[arg(long)]
    method: Method,

    /// Use plain branch numbers inside coordinate structures (ptb only).
    #[arg(long)]
    no_coord_adjust: bool,

    /// Keep punctuation preterminals (ptb only).
    #[arg(long)]
    keep_punct: bool,

    /// NP nodes counted by the NP methods: all or maximal.
    #[arg(long)]
    np_selector: Option<NpSelector>,

    /// Comma-separated thresholds for the exceedance report.
    #[arg(long, value_delimiter = ',', default_value = "5,7,9")]
    thresholds: Vec<usize>,

    /// Report format: text, csv or json.
    #[arg(long, default_value = "text")]
    output: OutputFormat,

    /// Abort on the first malformed or empty sentence instead of skipping it.
    #[arg(long)]
    strict: bool,

    /// Reject dependencies pointing to the left (dep only).
    #[arg(long)]
    strict_rightward: bool,
}

impl Args {
    fn into_config(self) -> RunConfig {
        RunConfig {
            input_path: self.input,
            format: self.format,
            method: self.method,
            coordination_adjust: !self.no_coord_adjust,
            strip_punctuation: !self.keep_punct,
            np_selector: self.np_selector.unwrap_or_default(),
            output_format: self.output,
            thresholds: self.thresholds,
            strict: self.strict,
            strict_rightward: self.strict_rightward,
        }
    }
}

fn main() {
    let config = Args::parse().into_config();
    match run(&config) {
        Ok(outcome) => {
            let mut stderr = io::stderr();
            for w in &outcome.diagnostics.warnings {
                let _ = writeln!(stderr, "memload: warning: {}", w);
            }
            let _ = writeln!(stderr, "{}", outcome.diagnostics.summary());
            let mut stdout = io::stdout();
            let _ = stdout.write_all(outcome.render(config.output_format).as_bytes());
        }
        Err(e) => {
            eprintln!("memload: error: {}", e);
            process::exit(e.exit_code());
        }
    }
}
