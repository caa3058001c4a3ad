//! Tree clean-up before counting: punctuation and empty-element removal and
//! label simplification.

use thiserror::Error;

use crate::tree::ConstituencyTree;

/// Preterminal tags treated as punctuation. `$` is deliberately absent: it
/// is read aloud.
pub const PUNCTUATION_TAGS: &[&str] = &[".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#"];

/// Tag of Penn Treebank empty elements.
pub const TRACE_TAG: &str = "-NONE-";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizationOptions {
    pub strip_punctuation: bool,
    pub strip_traces: bool,
    pub normalize_labels: bool,
}

impl Default for NormalizationOptions {
    fn default() -> Self {
        NormalizationOptions {
            strip_punctuation: true,
            strip_traces: true,
            normalize_labels: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("tree is empty after normalization")]
    EmptyAfterNormalization,
}

/// Strips function tags and coindices: `NP-SBJ-1` → `NP`, `NP=2` → `NP`.
/// Labels wrapped in dashes (`-NONE-`, `-LRB-`) are returned verbatim.
pub fn normalize_label(label: &str) -> &str {
    if label.len() > 1 && label.starts_with('-') && label.ends_with('-') {
        return label;
    }
    match label.char_indices().skip(1).find(|&(_, c)| c == '-' || c == '=') {
        Some((i, _)) => &label[..i],
        None => label,
    }
}

pub fn is_punctuation_tag(label: &str) -> bool {
    PUNCTUATION_TAGS.contains(&normalize_label(label))
}

pub fn is_trace_tag(label: &str) -> bool {
    normalize_label(label) == TRACE_TAG
}

fn should_drop(label: &str, opts: &NormalizationOptions) -> bool {
    (opts.strip_punctuation && is_punctuation_tag(label)) || (opts.strip_traces && is_trace_tag(label))
}

fn prune(tree: ConstituencyTree, opts: &NormalizationOptions) -> Option<ConstituencyTree> {
    match tree {
        ConstituencyTree::Leaf(_) => Some(tree),
        ConstituencyTree::Node { mut label, children } => {
            if matches!(children.as_slice(), [ConstituencyTree::Leaf(_)]) && should_drop(&label, opts) {
                return None;
            }
            let kept = children.into_iter().filter_map(|c| prune(c, opts)).collect::<Vec<_>>();
            if kept.is_empty() {
                return None;
            }
            if opts.normalize_labels {
                let len = normalize_label(&label).len();
                label.truncate(len);
            }
            Some(ConstituencyTree::Node { label, children: kept })
        }
    }
}

/// Removes punctuation and trace preterminals together with any ancestor
/// left without children, and simplifies labels.
pub fn normalize_tree(
    tree: ConstituencyTree,
    opts: &NormalizationOptions,
) -> Result<ConstituencyTree, NormalizeError> {
    prune(tree, opts).ok_or(NormalizeError::EmptyAfterNormalization)
}
