#![allow(dead_code)]

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use memload::{normalize_tree, ConstituencyTree, DependencySentence, NormalizationOptions};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

const PHRASES: &[&str] = &["S", "NP", "VP", "PP", "SBAR", "ADJP", "NP", "NP"];
const TAGS: &[&str] = &["DT", "NN", "VB", "JJ", "IN", "CC", ",", "NNS", "CC"];

/// Random tree with at most `max_depth` levels of phrase nodes above the
/// preterminals and at most `max_branching` children per node. Coordinators
/// and commas are frequent so coordination nodes show up often.
pub fn random_tree(rng: &mut impl Rng, max_depth: usize, max_branching: usize) -> ConstituencyTree {
    fn go(rng: &mut impl Rng, depth: usize, max_depth: usize, max_branching: usize, word: &mut usize) -> ConstituencyTree {
        if depth + 1 >= max_depth || (depth > 0 && rng.gen_bool(0.35)) {
            *word += 1;
            let tag = TAGS[rng.gen_range(0..TAGS.len())];
            return ConstituencyTree::preterminal(tag, format!("w{}", word));
        }
        let label = if rng.gen_bool(0.15) { "CONJP" } else { PHRASES[rng.gen_range(0..PHRASES.len())] };
        let n = rng.gen_range(1..=max_branching);
        let children = (0..n).map(|_| go(rng, depth + 1, max_depth, max_branching, word)).collect();
        ConstituencyTree::node(label, children)
    }
    let mut word = 0;
    go(rng, 0, max_depth, max_branching, &mut word)
}

/// Random sentence of length `n` with exactly one root; heads may point
/// either way.
pub fn random_dep(rng: &mut impl Rng, n: usize) -> DependencySentence {
    let root = rng.gen_range(1..=n);
    let heads = (1..=n)
        .map(|i| {
            if i == root {
                0
            } else {
                loop {
                    let h = rng.gen_range(1..=n);
                    if h != i {
                        break h;
                    }
                }
            }
        })
        .collect::<Vec<_>>();
    DependencySentence::from_head_indices(&heads).unwrap()
}

/// Random head-final sentence: every non-final unit points to its right.
pub fn random_rightward_dep(rng: &mut impl Rng, n: usize) -> DependencySentence {
    let heads = (1..=n).map(|i| if i == n { 0 } else { rng.gen_range(i + 1..=n) }).collect::<Vec<_>>();
    DependencySentence::from_head_indices(&heads).unwrap()
}

/// Every valid head assignment for a sentence of length `n`.
pub fn all_dep_sentences(n: usize) -> Vec<DependencySentence> {
    let mut out = Vec::new();
    let mut heads = vec![0usize; n];
    fn rec(pos: usize, n: usize, heads: &mut Vec<usize>, out: &mut Vec<DependencySentence>) {
        if pos == n {
            if heads.iter().filter(|&&h| h == 0).count() == 1 {
                out.push(DependencySentence::from_head_indices(heads).unwrap());
            }
            return;
        }
        for h in 0..=n {
            if h != pos + 1 {
                heads[pos] = h;
                rec(pos + 1, n, heads, out);
            }
        }
    }
    rec(0, n, &mut heads, &mut out);
    out
}

/// Same-label-set check used by the coordination oracle; kept separate from
/// the library so the grouping is written down twice.
fn coordinator(label: &str) -> bool {
    label == "CC" || label == "CONJP"
}

/// Top-down push-down automaton in which the conjuncts of a coordination
/// node (each with its preceding coordinators and commas) are pushed as one
/// stack entry per conjunct. Other nodes push one entry per child.
pub fn coordination_stack_oracle(tree: &ConstituencyTree) -> Vec<usize> {
    enum Entry<'a> {
        Symbol(&'a ConstituencyTree),
        Set(Vec<&'a ConstituencyTree>),
    }

    let mut stack = vec![Entry::Symbol(tree)];
    let mut out = Vec::new();
    while let Some(top) = stack.pop() {
        match top {
            Entry::Symbol(ConstituencyTree::Leaf(_)) => out.push(stack.len()),
            Entry::Symbol(node) => {
                let children = node.children();
                let labels = children.iter().map(|c| c.label().unwrap_or("")).collect::<Vec<_>>();
                let coordination = labels.iter().skip(1).any(|l| coordinator(l));
                let mut groups: Vec<Vec<&ConstituencyTree>> = Vec::new();
                if coordination {
                    let mut current = Vec::new();
                    for (c, l) in children.iter().zip(&labels) {
                        current.push(c);
                        if !(coordinator(l) || *l == ",") {
                            groups.push(std::mem::take(&mut current));
                        }
                    }
                    if !current.is_empty() {
                        groups.push(current);
                    }
                } else {
                    groups = children.iter().map(|c| vec![c]).collect();
                }
                for g in groups.into_iter().rev() {
                    stack.push(Entry::Set(g));
                }
            }
            Entry::Set(mut members) => {
                let first = members.remove(0);
                if !members.is_empty() {
                    stack.push(Entry::Set(members));
                }
                stack.push(Entry::Symbol(first));
            }
        }
    }
    out
}

/// Synthetic PTB corpus text of `n` random sentences in WSJ wrapper form,
/// each ending in a period preterminal. Sentences are redrawn until they
/// hold at least one non-punctuation word and stay under 80 words.
pub fn synthetic_ptb_corpus(seed: u64, n: usize) -> String {
    let mut rng = rng(seed);
    let mut out = String::new();
    let mut made = 0;
    while made < n {
        let mut t = random_tree(&mut rng, 7, 4);
        let words = t.leaf_count();
        if words > 80 || normalize_tree(t.clone(), &NormalizationOptions::default()).is_err() {
            continue;
        }
        if let ConstituencyTree::Node { children, .. } = &mut t {
            children.push(ConstituencyTree::preterminal(".", "."));
        }
        out.push_str("( ");
        out.push_str(&t.to_bracketed());
        out.push_str(" )\n");
        made += 1;
    }
    out
}

pub fn synthetic_dep_corpus(seed: u64, n: usize) -> String {
    let mut rng = rng(seed);
    let mut out = String::new();
    for _ in 0..n {
        let len = rng.gen_range(1..=30);
        let s = random_rightward_dep(&mut rng, len);
        for u in s.units() {
            out.push_str(&format!("{}\t{}\t{}\n", u.index, u.surface, u.head));
        }
        out.push('\n');
    }
    out
}
