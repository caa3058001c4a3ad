//! Stack-depth metrics over constituency trees.
//!
//! Every edge from a node to its k-th of n children gets a branch number;
//! the depth of a word is the sum of branch numbers on its path from the
//! root. With Yngve numbering (n − k) this equals the number of symbols a
//! top-down, leftmost-first push-down automaton holds on its stack when it
//! reaches the word. Sampson numbering (min(n − k, 1)) counts all pending
//! right siblings of a node as one stored set.

use std::fmt;
use std::str::FromStr;

use crate::depmetrics::DepthProfile;
use crate::normalize::normalize_label;
use crate::tree::ConstituencyTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberingScheme {
    Yngve,
    Sampson,
}

impl NumberingScheme {
    fn clamp(self, pending: usize) -> usize {
        match self {
            NumberingScheme::Yngve => pending,
            NumberingScheme::Sampson => pending.min(1),
        }
    }
}

impl fmt::Display for NumberingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NumberingScheme::Yngve => "yngve",
            NumberingScheme::Sampson => "sampson",
        })
    }
}

impl FromStr for NumberingScheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "yngve" => Ok(NumberingScheme::Yngve),
            "sampson" => Ok(NumberingScheme::Sampson),
            other => Err(format!("unknown numbering scheme `{other}`")),
        }
    }
}

/// What a depth is reported for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountingUnit {
    Word,
    Np,
}

/// Which NP nodes are counted in NP mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NpSelector {
    /// Every node labeled `NP`, nested ones included.
    #[default]
    All,
    /// Only NPs without an NP ancestor.
    Maximal,
}

impl FromStr for NpSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(NpSelector::All),
            "maximal" => Ok(NpSelector::Maximal),
            other => Err(format!("unknown NP selector `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MetricConfig {
    pub scheme: NumberingScheme,
    pub coordination_adjust: bool,
    pub unit: CountingUnit,
    pub np_selector: NpSelector,
}

impl MetricConfig {
    pub fn words(scheme: NumberingScheme) -> Self {
        MetricConfig {
            scheme,
            coordination_adjust: true,
            unit: CountingUnit::Word,
            np_selector: NpSelector::All,
        }
    }

    pub fn nps(scheme: NumberingScheme) -> Self {
        MetricConfig {
            unit: CountingUnit::Np,
            ..Self::words(scheme)
        }
    }

    pub fn with_coordination_adjust(mut self, on: bool) -> Self {
        self.coordination_adjust = on;
        self
    }

    pub fn with_np_selector(mut self, selector: NpSelector) -> Self {
        self.np_selector = selector;
        self
    }
}

/// Branch numbers for the children of an n-ary node, left to right.
pub fn branch_numbers(n_children: usize, scheme: NumberingScheme) -> Vec<usize> {
    (1..=n_children).map(|k| scheme.clamp(n_children - k)).collect()
}

fn is_coordinator(label: &str) -> bool {
    matches!(normalize_label(label), "CC" | "CONJP")
}

fn is_group_prefix(label: &str) -> bool {
    is_coordinator(label) || normalize_label(label) == ","
}

/// A node is a coordination node if a CC or CONJP child occurs after the
/// first position.
pub fn is_coordination<S: AsRef<str>>(child_labels: &[S]) -> bool {
    child_labels.iter().skip(1).any(|l| is_coordinator(l.as_ref()))
}

/// Branch numbers with coordinate structures renumbered.
///
/// Children of a coordination node are grouped into conjuncts, each conjunct
/// taking any coordinators and commas immediately before it. A group is
/// stored as one item, so a child's number is the number of groups to its
/// right, plus one if the rest of its own group is still pending. Other
/// nodes get plain [`branch_numbers`].
pub fn coordination_adjusted_numbers<S: AsRef<str>>(child_labels: &[S], scheme: NumberingScheme) -> Vec<usize> {
    let n = child_labels.len();
    if !is_coordination(child_labels) {
        return branch_numbers(n, scheme);
    }

    // group id of each child; a group closes at its first non-prefix child
    let mut group_of = Vec::with_capacity(n);
    let mut group = 0;
    for (i, label) in child_labels.iter().enumerate() {
        group_of.push(group);
        let closes = !is_group_prefix(label.as_ref());
        if closes && i + 1 < n {
            group += 1;
        }
    }
    let last_group = group;

    (0..n)
        .map(|i| {
            let g = group_of[i];
            let rest_of_own = usize::from(i + 1 < n && group_of[i + 1] == g);
            scheme.clamp(last_group - g + rest_of_own)
        })
        .collect()
}

fn child_numbers(children: &[ConstituencyTree], config: &MetricConfig) -> Vec<usize> {
    if config.coordination_adjust {
        let labels = children.iter().map(|c| c.label().unwrap_or("")).collect::<Vec<_>>();
        coordination_adjusted_numbers(&labels, config.scheme)
    } else {
        branch_numbers(children.len(), config.scheme)
    }
}

fn collect_word_depths(tree: &ConstituencyTree, acc: usize, config: &MetricConfig, out: &mut Vec<usize>) {
    match tree {
        ConstituencyTree::Leaf(_) => out.push(acc),
        ConstituencyTree::Node { children, .. } => {
            for (child, num) in children.iter().zip(child_numbers(children, config)) {
                collect_word_depths(child, acc + num, config, out);
            }
        }
    }
}

/// Depth of every word: the sum of branch numbers on its root path.
pub fn word_depths(tree: &ConstituencyTree, config: &MetricConfig) -> DepthProfile {
    let mut out = Vec::with_capacity(tree.leaf_count());
    collect_word_depths(tree, 0, config, &mut out);
    DepthProfile::new(out)
}

fn collect_np_depths(tree: &ConstituencyTree, acc: usize, inside_np: bool, config: &MetricConfig, out: &mut Vec<usize>) {
    let ConstituencyTree::Node { label, children } = tree else {
        return;
    };
    let is_np = label == "NP";
    if is_np && !(inside_np && config.np_selector == NpSelector::Maximal) {
        out.push(acc);
    }
    for (child, num) in children.iter().zip(child_numbers(children, config)) {
        collect_np_depths(child, acc + num, inside_np || is_np, config, out);
    }
}

/// Depth of every NP node in preorder: the sum of branch numbers from the
/// root down to the NP. Structure inside the NP does not contribute.
pub fn np_depths(tree: &ConstituencyTree, config: &MetricConfig) -> DepthProfile {
    let mut out = Vec::new();
    collect_np_depths(tree, 0, false, config, &mut out);
    DepthProfile::new(out)
}

/// Word or NP depths according to `config.unit`.
pub fn depth_profile(tree: &ConstituencyTree, config: &MetricConfig) -> DepthProfile {
    match config.unit {
        CountingUnit::Word => word_depths(tree, config),
        CountingUnit::Np => np_depths(tree, config),
    }
}

/// Runs a top-down push-down automaton over the tree and records, for each
/// word, how many symbols remain on the stack once the word is matched.
pub fn stack_oracle_depths(tree: &ConstituencyTree) -> DepthProfile {
    let mut stack = vec![tree];
    let mut out = Vec::new();
    while let Some(top) = stack.pop() {
        match top {
            ConstituencyTree::Leaf(_) => out.push(stack.len()),
            ConstituencyTree::Node { children, .. } => stack.extend(children.iter().rev()),
        }
    }
    DepthProfile::new(out)
}

/// Push-down automaton where the right siblings of an expanded node sit on
/// the stack as a single set entry, taken apart one symbol at a time.
pub fn grouped_stack_oracle_depths(tree: &ConstituencyTree) -> DepthProfile {
    enum Entry<'a> {
        Symbol(&'a ConstituencyTree),
        Set(&'a [ConstituencyTree]),
    }

    let mut stack = vec![Entry::Symbol(tree)];
    let mut out = Vec::new();
    while let Some(top) = stack.pop() {
        let (first, rest) = match top {
            Entry::Symbol(ConstituencyTree::Leaf(_)) => {
                out.push(stack.len());
                continue;
            }
            Entry::Symbol(ConstituencyTree::Node { children, .. }) => (&children[0], &children[1..]),
            Entry::Set(members) => (&members[0], &members[1..]),
        };
        if !rest.is_empty() {
            stack.push(Entry::Set(rest));
        }
        stack.push(Entry::Symbol(first));
    }
    DepthProfile::new(out)
}
