//! Undetermined-modifiee counts for left-to-right dependency analysis.
//!
//! Reading a sentence unit by unit, a unit has to be held in memory until the
//! unit it modifies (its head) has been read. The load at position `i` is the
//! number of units `j <= i` whose head lies after `i`. The root is held until
//! the last unit, at which point everything is resolved.

use std::collections::BTreeSet;

use crate::dependency::DependencySentence;

/// Per-unit load values of one sentence and their maximum.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DepthProfile {
    values: Vec<usize>,
    sentence_max: usize,
}

impl DepthProfile {
    pub fn new(values: Vec<usize>) -> Self {
        let sentence_max = values.iter().copied().max().unwrap_or(0);
        DepthProfile { values, sentence_max }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn sentence_max(&self) -> usize {
        self.sentence_max
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl From<Vec<usize>> for DepthProfile {
    fn from(values: Vec<usize>) -> Self {
        DepthProfile::new(values)
    }
}

/// Position (1-based) at which unit `index`'s modifiee becomes known.
fn resolution_point(index: usize, head: usize, n: usize) -> usize {
    match head {
        0 => n,
        h => h.max(index),
    }
}

/// Load per unit, computed from head positions with a difference array.
pub fn load_profile(sentence: &DependencySentence) -> DepthProfile {
    let n = sentence.len();
    // delta[p] for p in 1..=n+1
    let mut delta = vec![0isize; n + 2];
    for u in sentence.units() {
        let until = resolution_point(u.index, u.head, n);
        // held at positions index..until-1
        if until > u.index {
            delta[u.index] += 1;
            delta[until] -= 1;
        }
    }
    let mut running = 0isize;
    let values = (1..=n)
        .map(|i| {
            running += delta[i];
            running as usize
        })
        .collect();
    DepthProfile::new(values)
}

/// Step-by-step simulation of the memory store, returning the store contents
/// (unit indices) after every step alongside the counts.
pub fn simulate_store(sentence: &DependencySentence) -> (DepthProfile, Vec<BTreeSet<usize>>) {
    let n = sentence.len();
    let units = sentence.units();
    let mut store: BTreeSet<usize> = BTreeSet::new();
    let mut snapshots = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);

    for i in 1..=n {
        // units modifying i are attached to it and no longer needed
        store.retain(|&j| {
            let head = units[j - 1].head;
            head != i && !(head == 0 && i == n)
        });
        let head = units[i - 1].head;
        if head > i || (head == 0 && i < n) {
            store.insert(i);
        }
        values.push(store.len());
        snapshots.push(store.clone());
    }
    (DepthProfile::new(values), snapshots)
}

/// Explicit-store oracle for [`load_profile`].
pub fn load_profile_oracle(sentence: &DependencySentence) -> DepthProfile {
    simulate_store(sentence).0
}
