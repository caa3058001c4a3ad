//! Ordered, labeled constituency trees.

use std::fmt;

/// A constituency tree. Internal nodes carry a category label and at least
/// one child; leaves carry the surface form of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstituencyTree {
    Node {
        label: String,
        children: Vec<ConstituencyTree>,
    },
    Leaf(String),
}

impl ConstituencyTree {
    pub fn node<S: Into<String>>(label: S, children: Vec<ConstituencyTree>) -> Self {
        ConstituencyTree::Node {
            label: label.into(),
            children,
        }
    }

    pub fn leaf<S: Into<String>>(surface: S) -> Self {
        ConstituencyTree::Leaf(surface.into())
    }

    /// Shorthand for a preterminal: `(label surface)`.
    pub fn preterminal<L: Into<String>, S: Into<String>>(label: L, surface: S) -> Self {
        Self::node(label, vec![Self::leaf(surface)])
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, ConstituencyTree::Leaf(_))
    }

    /// Category label of an internal node, `None` for leaves.
    pub fn label(&self) -> Option<&str> {
        match self {
            ConstituencyTree::Node { label, .. } => Some(label),
            ConstituencyTree::Leaf(_) => None,
        }
    }

    pub fn children(&self) -> &[ConstituencyTree] {
        match self {
            ConstituencyTree::Node { children, .. } => children,
            ConstituencyTree::Leaf(_) => &[],
        }
    }

    pub fn surface(&self) -> Option<&str> {
        match self {
            ConstituencyTree::Leaf(s) => Some(s),
            ConstituencyTree::Node { .. } => None,
        }
    }

    /// True for a node whose only child is a leaf, e.g. `(DT The)`.
    pub fn is_preterminal(&self) -> bool {
        matches!(self.children(), [ConstituencyTree::Leaf(_)])
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            ConstituencyTree::Leaf(_) => 1,
            ConstituencyTree::Node { children, .. } => {
                children.iter().map(ConstituencyTree::leaf_count).sum()
            }
        }
    }

    /// Surface forms left to right.
    pub fn words(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_words(&mut out);
        out
    }

    fn collect_words<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            ConstituencyTree::Leaf(s) => out.push(s),
            ConstituencyTree::Node { children, .. } => {
                for c in children {
                    c.collect_words(out);
                }
            }
        }
    }

    /// Checks the structural invariants: non-empty labels and surfaces, and
    /// no childless internal node.
    pub fn is_well_formed(&self) -> bool {
        match self {
            ConstituencyTree::Leaf(s) => !s.is_empty(),
            ConstituencyTree::Node { label, children } => {
                !label.is_empty()
                    && !children.is_empty()
                    && children.iter().all(ConstituencyTree::is_well_formed)
            }
        }
    }

    /// Canonical single-line bracketed rendering, without the outer wrapper.
    pub fn to_bracketed(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ConstituencyTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstituencyTree::Leaf(s) => f.write_str(s),
            ConstituencyTree::Node { label, children } => {
                write!(f, "({}", label)?;
                for c in children {
                    write!(f, " {}", c)?;
                }
                f.write_str(")")
            }
        }
    }
}
