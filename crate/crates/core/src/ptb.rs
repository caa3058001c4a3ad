//! Reader for Penn Treebank style bracketed trees.
//!
//! Each top-level bracketed expression is one sentence. The WSJ files wrap
//! every tree in an unlabeled outer pair of brackets, `( (S ...) )`; that
//! wrapper is removed. Errors are reported per sentence so that one bad
//! tree does not take the rest of the corpus with it.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::tree::ConstituencyTree;

/// 1-based line and column of a character in the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PtbError {
    #[error("unbalanced brackets at {0}")]
    UnbalancedBrackets(Position),
    #[error("empty tree at {0}")]
    EmptyTree(Position),
    #[error("leaf without a labeled parent at {0}")]
    LeafWithoutLabel(Position),
    #[error("unlabeled node at {0}")]
    MissingLabel(Position),
}

impl PtbError {
    pub fn position(&self) -> Position {
        match *self {
            PtbError::UnbalancedBrackets(p)
            | PtbError::EmptyTree(p)
            | PtbError::LeafWithoutLabel(p)
            | PtbError::MissingLabel(p) => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind<'a> {
    Open,
    Close,
    Atom(&'a str),
}

#[derive(Debug, Clone)]
struct Token<'a> {
    kind: TokenKind<'a>,
    pos: Position,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut atom_start: Option<(usize, Position)> = None;

    for (offset, ch) in text.char_indices() {
        let pos = Position { line, column };
        let is_delim = ch == '(' || ch == ')' || ch.is_whitespace();
        if is_delim {
            if let Some((start, apos)) = atom_start.take() {
                tokens.push(Token {
                    kind: TokenKind::Atom(&text[start..offset]),
                    pos: apos,
                });
            }
            match ch {
                '(' => tokens.push(Token { kind: TokenKind::Open, pos }),
                ')' => tokens.push(Token { kind: TokenKind::Close, pos }),
                _ => {}
            }
        } else if atom_start.is_none() {
            atom_start = Some((offset, pos));
        }
        if ch == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    if let Some((start, apos)) = atom_start {
        tokens.push(Token {
            kind: TokenKind::Atom(&text[start..]),
            pos: apos,
        });
    }
    tokens
}

/// Splits the token stream into balanced top-level segments. Stray closing
/// brackets, bare top-level words and an unterminated final tree become
/// error entries in sequence.
fn segments<'t, 'a>(tokens: &'t [Token<'a>]) -> Vec<Result<&'t [Token<'a>], PtbError>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        match tokens[i].kind {
            TokenKind::Close => {
                out.push(Err(PtbError::UnbalancedBrackets(tokens[i].pos)));
                i += 1;
            }
            TokenKind::Atom(_) => {
                out.push(Err(PtbError::LeafWithoutLabel(tokens[i].pos)));
                // a run of bare words (e.g. a file header) is one error
                while i < tokens.len() && matches!(tokens[i].kind, TokenKind::Atom(_)) {
                    i += 1;
                }
            }
            TokenKind::Open => {
                let start = i;
                let mut depth = 0usize;
                let mut end = None;
                while i < tokens.len() {
                    match tokens[i].kind {
                        TokenKind::Open => depth += 1,
                        TokenKind::Close => {
                            depth -= 1;
                            if depth == 0 {
                                end = Some(i);
                                break;
                            }
                        }
                        TokenKind::Atom(_) => {}
                    }
                    i += 1;
                }
                match end {
                    Some(e) => {
                        out.push(Ok(&tokens[start..=e]));
                        i = e + 1;
                    }
                    None => {
                        out.push(Err(PtbError::UnbalancedBrackets(tokens[start].pos)));
                        i = tokens.len();
                    }
                }
            }
        }
    }
    out
}

struct SegmentParser<'t, 'a> {
    tokens: &'t [Token<'a>],
    next: usize,
}

impl<'t, 'a> SegmentParser<'t, 'a> {
    fn peek(&self) -> &'t Token<'a> {
        // segments are balanced, so a closing bracket always ends the scan
        &self.tokens[self.next]
    }

    fn bump(&mut self) -> &'t Token<'a> {
        let t = &self.tokens[self.next];
        self.next += 1;
        t
    }

    /// Parses `( ... )` starting at an opening bracket.
    fn node(&mut self, top_level: bool) -> Result<ConstituencyTree, PtbError> {
        let open = self.bump().pos;
        let label = match self.peek().kind {
            TokenKind::Close => return Err(PtbError::EmptyTree(open)),
            TokenKind::Atom(a) => {
                self.bump();
                Some(a)
            }
            TokenKind::Open => None,
        };

        let mut children = Vec::new();
        loop {
            let tok = self.peek();
            match tok.kind {
                TokenKind::Close => {
                    self.bump();
                    break;
                }
                TokenKind::Open => children.push(self.node(false)?),
                TokenKind::Atom(a) => {
                    if label.is_none() {
                        return Err(PtbError::LeafWithoutLabel(tok.pos));
                    }
                    self.bump();
                    children.push(ConstituencyTree::leaf(a));
                }
            }
        }

        match label {
            Some(_) if children.is_empty() => Err(PtbError::EmptyTree(open)),
            Some(l) => Ok(ConstituencyTree::node(l, children)),
            None if top_level && children.len() == 1 => Ok(children.pop().unwrap()),
            None => Err(PtbError::MissingLabel(open)),
        }
    }
}

fn parse_segment(seg: &[Token<'_>]) -> Result<ConstituencyTree, PtbError> {
    let mut p = SegmentParser { tokens: seg, next: 0 };
    p.node(true)
}

/// Parses every top-level tree, keeping per-sentence errors in input order.
pub fn ptb_sentences(text: &str) -> Vec<Result<ConstituencyTree, PtbError>> {
    let tokens = tokenize(text);
    segments(&tokens)
        .into_par_iter()
        .map(|seg| seg.and_then(parse_segment))
        .collect()
}

/// Parses a whole corpus, failing on the first malformed tree.
pub fn parse_ptb_corpus(text: &str) -> Result<Vec<ConstituencyTree>, PtbError> {
    ptb_sentences(text).into_iter().collect()
}

/// Parses exactly one tree. Trailing material is an error.
pub fn parse_ptb_tree(text: &str) -> Result<ConstituencyTree, PtbError> {
    let mut all = ptb_sentences(text).into_iter();
    match (all.next(), all.next()) {
        (Some(first), None) => first,
        (Some(Err(e)), Some(_)) => Err(e),
        (Some(Ok(_)), Some(second)) => Err(match second {
            Err(e) => e,
            Ok(_) => PtbError::UnbalancedBrackets(last_position(text)),
        }),
        (None, _) => Err(PtbError::EmptyTree(Position { line: 1, column: 1 })),
    }
}

fn last_position(text: &str) -> Position {
    let line = text.lines().count().max(1);
    let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    Position { line, column }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BOY_DOLL: &str = "(S (NP (DT The) (N boy)) (VP (V has) (NP (DT a) (J small) (N doll))))";

    #[test]
    fn parses_boy_doll() {
        let t = parse_ptb_tree(BOY_DOLL).unwrap();
        assert_eq!(t.label(), Some("S"));
        assert_eq!(t.leaf_count(), 6);
        assert_eq!(t.to_string(), BOY_DOLL);
    }

    #[test]
    fn minimal_chain() {
        let t = parse_ptb_tree("(X (Y w))").unwrap();
        assert_eq!(t, ConstituencyTree::node("X", vec![ConstituencyTree::preterminal("Y", "w")]));
    }

    #[test]
    fn unwraps_outer_wrapper() {
        let t = parse_ptb_tree("( (S (N w)))").unwrap();
        assert_eq!(t.label(), Some("S"));
        let t = parse_ptb_tree("((S (N w)) )").unwrap();
        assert_eq!(t.to_string(), "(S (N w))");
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_ptb_corpus("(S\n  (NP (N a))\n\t(VP (V b)))").unwrap();
        let b = parse_ptb_corpus("(S (NP (N a)) (VP (V b)))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn multiple_sentences() {
        let trees = parse_ptb_corpus("( (S (N a)) )\n( (S (N b)) )\n(X (Y c))").unwrap();
        assert_eq!(trees.len(), 3);
        assert_eq!(trees[1].words(), ["b"]);
    }

    #[test]
    fn unbalanced_reports_position() {
        let err = parse_ptb_corpus("(S (N a))\n  (S (N b)").unwrap_err();
        assert_eq!(err, PtbError::UnbalancedBrackets(Position { line: 2, column: 3 }));

        let err = parse_ptb_corpus("(S (N a)))").unwrap_err();
        assert_eq!(err, PtbError::UnbalancedBrackets(Position { line: 1, column: 10 }));
    }

    #[test]
    fn empty_trees() {
        assert!(matches!(parse_ptb_tree("()"), Err(PtbError::EmptyTree(_))));
        assert!(matches!(parse_ptb_tree("(S (NP))"), Err(PtbError::EmptyTree(_))));
        assert!(matches!(parse_ptb_tree(""), Err(PtbError::EmptyTree(_))));
    }

    #[test]
    fn leaf_without_label() {
        assert!(matches!(
            parse_ptb_tree("( (S (N a)) w )"),
            Err(PtbError::LeafWithoutLabel(Position { line: 1, column: 13 }))
        ));
        // a lone word in brackets is read as a label with no children
        assert!(matches!(parse_ptb_tree("( w )"), Err(PtbError::EmptyTree(_))));
        assert!(matches!(parse_ptb_corpus("stray (S (N a))"), Err(PtbError::LeafWithoutLabel(_))));
    }

    #[test]
    fn unlabeled_inner_node() {
        assert!(matches!(
            parse_ptb_tree("(S (N a) ((N b)))"),
            Err(PtbError::MissingLabel(Position { line: 1, column: 10 }))
        ));
        assert!(matches!(parse_ptb_tree("( (S (N a)) (S (N b)) )"), Err(PtbError::MissingLabel(_))));
    }

    #[test]
    fn errors_only_abort_their_sentence() {
        let out = ptb_sentences("(S (N a))\n(S (NP))\n(S (N c))");
        assert_eq!(out.len(), 3);
        assert!(out[0].is_ok());
        assert_eq!(out[1], Err(PtbError::EmptyTree(Position { line: 2, column: 4 })));
        assert_eq!(out[2].as_ref().unwrap().words(), ["c"]);
    }
}
