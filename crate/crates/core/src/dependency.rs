//! Dependency sentences and the tab-separated reader for them.
//!
//! One unit per line, `INDEX<TAB>SURFACE<TAB>HEAD`, sentences separated by
//! blank lines, `#` lines ignored. Head 0 marks the root.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub index: usize,
    pub surface: String,
    pub head: usize,
}

/// A validated sentence: indices are 1..=n, exactly one root, no self heads,
/// every head in 0..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencySentence {
    units: Vec<Unit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepError {
    #[error("line {line}: malformed line, expected INDEX<TAB>SURFACE<TAB>HEAD")]
    MalformedLine { line: usize },
    #[error("line {line}: expected index {expected}, found {found}")]
    NonContiguousIndices { line: usize, expected: usize, found: usize },
    #[error("line {line}: second root (head 0) in sentence")]
    MultipleRoots { line: usize },
    #[error("line {line}: sentence has no root (head 0)")]
    NoRoot { line: usize },
    #[error("line {line}: unit {index} is its own head")]
    SelfHead { line: usize, index: usize },
    #[error("line {line}: head {head} outside 0..={len}")]
    HeadOutOfRange { line: usize, head: usize, len: usize },
    #[error("line {line}: unit {index} has leftward head {head}")]
    LeftwardHead { line: usize, index: usize, head: usize },
    #[error("empty sentence")]
    Empty,
}

impl DepError {
    /// Source line the error refers to, when known. Lines are 1-based.
    pub fn line(&self) -> Option<usize> {
        match *self {
            DepError::MalformedLine { line }
            | DepError::NonContiguousIndices { line, .. }
            | DepError::MultipleRoots { line }
            | DepError::NoRoot { line }
            | DepError::SelfHead { line, .. }
            | DepError::HeadOutOfRange { line, .. }
            | DepError::LeftwardHead { line, .. } => Some(line),
            DepError::Empty => None,
        }
    }
}

impl DependencySentence {
    /// Builds a sentence from `(surface, head)` pairs, indices assigned 1..=n.
    pub fn from_heads<S: Into<String>>(units: impl IntoIterator<Item = (S, usize)>) -> Result<Self, DepError> {
        let units = units
            .into_iter()
            .enumerate()
            .map(|(i, (surface, head))| Unit {
                index: i + 1,
                surface: surface.into(),
                head,
            })
            .collect::<Vec<_>>();
        let lines = (1..=units.len()).collect::<Vec<_>>();
        Self::validate(units, &lines)
    }

    /// Anonymous sentence with the given heads; surfaces are `w1..wn`.
    pub fn from_head_indices(heads: &[usize]) -> Result<Self, DepError> {
        Self::from_heads(heads.iter().enumerate().map(|(i, &h)| (format!("w{}", i + 1), h)))
    }

    fn validate(units: Vec<Unit>, lines: &[usize]) -> Result<Self, DepError> {
        if units.is_empty() {
            return Err(DepError::Empty);
        }
        let n = units.len();
        if let Some(pos) = units.iter().enumerate().position(|(pos, u)| u.index != pos + 1) {
            return Err(DepError::NonContiguousIndices {
                line: lines[pos],
                expected: pos + 1,
                found: units[pos].index,
            });
        }
        let mut root_seen = false;
        for (pos, u) in units.iter().enumerate() {
            let line = lines[pos];
            if u.head > n {
                return Err(DepError::HeadOutOfRange { line, head: u.head, len: n });
            }
            if u.head == u.index {
                return Err(DepError::SelfHead { line, index: u.index });
            }
            if u.head == 0 {
                if root_seen {
                    return Err(DepError::MultipleRoots { line });
                }
                root_seen = true;
            }
        }
        if !root_seen {
            return Err(DepError::NoRoot { line: lines[n - 1] });
        }
        Ok(DependencySentence { units })
    }

    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    /// Heads in unit order (0 = root).
    pub fn heads(&self) -> Vec<usize> {
        self.units.iter().map(|u| u.head).collect()
    }

    pub fn root(&self) -> usize {
        self.units.iter().find(|u| u.head == 0).map(|u| u.index).unwrap()
    }

    /// True when every non-root unit points to a unit on its right, the
    /// head-final shape of Japanese bunsetsu dependencies.
    pub fn is_strictly_rightward(&self) -> bool {
        self.units.iter().all(|u| u.head == 0 || u.head > u.index)
    }

    /// Rejects the first leftward dependency. `lines[i]` is the source line
    /// of unit i + 1, used only for the error message.
    pub fn check_rightward(&self, lines: &[usize]) -> Result<(), DepError> {
        match self.units.iter().find(|u| u.head != 0 && u.head < u.index) {
            Some(u) => Err(DepError::LeftwardHead {
                line: lines.get(u.index - 1).copied().unwrap_or(u.index),
                index: u.index,
                head: u.head,
            }),
            None => Ok(()),
        }
    }
}

/// A parsed block together with the source line of each unit line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepBlock {
    pub lines: Vec<usize>,
    pub sentence: Result<DependencySentence, DepError>,
}

fn parse_line(line: &str, line_no: usize) -> Result<Unit, DepError> {
    let malformed = || DepError::MalformedLine { line: line_no };
    let mut fields = line.split('\t');
    let (index, surface, head) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
        (Some(i), Some(s), Some(h), None) => (i, s, h),
        _ => return Err(malformed()),
    };
    let index = index.trim().parse::<usize>().map_err(|_| malformed())?;
    let head = head.trim().parse::<usize>().map_err(|_| malformed())?;
    if surface.is_empty() {
        return Err(malformed());
    }
    Ok(Unit {
        index,
        surface: surface.to_string(),
        head,
    })
}

fn parse_block(lines: &[(usize, &str)]) -> Result<DependencySentence, DepError> {
    let units = lines
        .iter()
        .map(|&(no, l)| parse_line(l, no))
        .collect::<Result<Vec<_>, _>>()?;
    let numbers = lines.iter().map(|&(no, _)| no).collect::<Vec<_>>();
    DependencySentence::validate(units, &numbers)
}

/// Splits the text into blank-line separated blocks and parses each one.
pub fn dep_sentences(text: &str) -> Vec<DepBlock> {
    let mut blocks = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    let flush = |current: &mut Vec<(usize, &str)>, blocks: &mut Vec<DepBlock>| {
        if !current.is_empty() {
            blocks.push(DepBlock {
                lines: current.iter().map(|&(no, _)| no).collect(),
                sentence: parse_block(current),
            });
            current.clear();
        }
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            flush(&mut current, &mut blocks);
        } else if !line.starts_with('#') {
            current.push((i + 1, line));
        }
    }
    flush(&mut current, &mut blocks);
    blocks
}

/// Parses a whole corpus, failing on the first invalid sentence.
pub fn parse_dep_corpus(text: &str) -> Result<Vec<DependencySentence>, DepError> {
    dep_sentences(text).into_iter().map(|b| b.sentence).collect()
}
