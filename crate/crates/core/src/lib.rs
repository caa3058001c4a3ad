//! Short-term-memory load metrics over treebanks.
//!
//! Two families of measures are provided:
//!
//! * for dependency treebanks, the number of units whose head has not yet
//!   been read at each point of a left-to-right pass ([`depmetrics`]);
//! * for constituency treebanks, Yngve and Sampson stack depths per word or
//!   per noun phrase ([`treemetrics`]).
//!
//! Per-sentence profiles are aggregated into per-unit and per-sentence
//! frequency tables by [`stats`]; [`run`] wires the whole pipeline together
//! for the `memload` binary.
//!
//! ```
//! use memload::{normalize_tree, parse_ptb_tree, word_depths, MetricConfig, NumberingScheme};
//!
//! let tree = parse_ptb_tree("(S (NP (DT The) (N boy)) (VP (V has) (NP (DT a) (J small) (N doll))) (. .))").unwrap();
//! let tree = normalize_tree(tree, &Default::default()).unwrap();
//! let depths = word_depths(&tree, &MetricConfig::words(NumberingScheme::Yngve));
//! assert_eq!(depths.values(), &[2, 1, 1, 2, 1, 0]);
//! ```

pub mod dependency;
pub mod depmetrics;
pub mod normalize;
pub mod ptb;
pub mod run;
pub mod stats;
pub mod tree;
pub mod treemetrics;

pub use dependency::{parse_dep_corpus, DepError, DependencySentence};
pub use depmetrics::{load_profile, load_profile_oracle, DepthProfile};
pub use normalize::{normalize_tree, NormalizationOptions, NormalizeError};
pub use ptb::{parse_ptb_corpus, parse_ptb_tree, PtbError};
pub use run::{run, run_on_text, Method, RunConfig, RunError};
pub use stats::{render, sentence_histogram, threshold_report, unit_histogram, Histogram, OutputFormat, Report};
pub use tree::ConstituencyTree;
pub use treemetrics::{
    branch_numbers, coordination_adjusted_numbers, grouped_stack_oracle_depths, np_depths, stack_oracle_depths,
    word_depths, MetricConfig, NpSelector, NumberingScheme,
};
