//! The plain-text lattice file format.
//!
//! ```text
//! # a single cover
//! elements: 0 1
//! covers: 0<1
//! ```
//!
//! `elements:` lists whitespace-separated labels. `covers:` lists comma
//! separated `lower<upper` pairs; the list may continue on following lines.
//! `#` starts a comment that runs to the end of the line and blank lines are
//! ignored.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

/// Element labels plus a Hasse diagram, as read from a lattice file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub element_labels: Vec<String>,
    pub cover_pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `elements:` or `covers:` section header")]
    MissingSection,
    #[error("`elements:` section missing")]
    MissingElements,
    #[error("section `{0}` given twice")]
    RepeatedSection(String),
    #[error("label `{0}` contains a reserved character")]
    InvalidLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("malformed cover `{0}`, expected `lower<upper`")]
    MalformedCover(String),
    #[error("cover refers to unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cover `{0}<{0}` relates an element to itself")]
    SelfCover(String),
}

const RESERVED: &[char] = &['<', ',', '#', ':'];

fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.contains(|c: char| c.is_whitespace() || RESERVED.contains(&c))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Elements,
    Covers,
}

struct Located<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl LatticeSpec {
    /// Reads a lattice file. Labels and covers keep their order of appearance.
    pub fn parse(text: &str) -> Result<LatticeSpec, ParseError> {
        let mut section = None;
        let mut seen_elements = false;
        let mut seen_covers = false;
        let mut labels: Vec<Located> = Vec::new();
        let mut covers: Vec<Located> = Vec::new();
        let mut last_line = 1;

        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            last_line = line_no;
            let content = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            if content.trim().is_empty() {
                continue;
            }
            let leading = content.len() - content.trim_start().len();
            let trimmed = content.trim_start();
            let mut body_offset = leading;
            let mut body = trimmed;
            for (kw, sec) in [("elements:", Section::Elements), ("covers:", Section::Covers)] {
                if let Some(rest) = trimmed.strip_prefix(kw) {
                    let seen = match sec {
                        Section::Elements => &mut seen_elements,
                        Section::Covers => &mut seen_covers,
                    };
                    if *seen {
                        return Err(ParseError {
                            line: line_no,
                            column: leading + 1,
                            kind: ParseErrorKind::RepeatedSection(kw.trim_end_matches(':').into()),
                        });
                    }
                    *seen = true;
                    section = Some(sec);
                    body_offset = leading + kw.len();
                    body = rest;
                    break;
                }
            }
            match section {
                None => {
                    return Err(ParseError {
                        line: line_no,
                        column: leading + 1,
                        kind: ParseErrorKind::MissingSection,
                    })
                }
                Some(Section::Elements) => {
                    let mut pos = 0;
                    for tok in body.split_whitespace() {
                        let at = body[pos..].find(tok).unwrap() + pos;
                        pos = at + tok.len();
                        labels.push(Located {
                            text: tok,
                            line: line_no,
                            column: body_offset + at + 1,
                        });
                    }
                }
                Some(Section::Covers) => {
                    let mut pos = 0;
                    for piece in body.split(',') {
                        let start = pos;
                        pos += piece.len() + 1;
                        let t = piece.trim();
                        if t.is_empty() {
                            continue;
                        }
                        let lead = piece.len() - piece.trim_start().len();
                        covers.push(Located {
                            text: t,
                            line: line_no,
                            column: body_offset + start + lead + 1,
                        });
                    }
                }
            }
        }

        if !seen_elements {
            return Err(ParseError {
                line: last_line,
                column: 1,
                kind: ParseErrorKind::MissingElements,
            });
        }

        let mut index = HashMap::new();
        let mut element_labels = Vec::with_capacity(labels.len());
        for l in &labels {
            if !valid_label(l.text) {
                return Err(l.error(ParseErrorKind::InvalidLabel(l.text.into())));
            }
            if index.insert(l.text, element_labels.len()).is_some() {
                return Err(l.error(ParseErrorKind::DuplicateLabel(l.text.into())));
            }
            element_labels.push(l.text.to_string());
        }

        let mut cover_pairs = Vec::with_capacity(covers.len());
        for c in &covers {
            let mut parts = c.text.split('<');
            let (lo, hi) = match (parts.next(), parts.next(), parts.next()) {
                (Some(lo), Some(hi), None) if !lo.trim().is_empty() && !hi.trim().is_empty() => {
                    (lo.trim(), hi.trim())
                }
                _ => return Err(c.error(ParseErrorKind::MalformedCover(c.text.into()))),
            };
            for side in [lo, hi] {
                if !index.contains_key(side) {
                    return Err(c.error(ParseErrorKind::UnknownLabel(side.into())));
                }
            }
            if lo == hi {
                return Err(c.error(ParseErrorKind::SelfCover(lo.into())));
            }
            cover_pairs.push((lo.to_string(), hi.to_string()));
        }

        Ok(LatticeSpec {
            element_labels,
            cover_pairs,
        })
    }

    /// Renders the diagram in the file format; `parse` reads it back unchanged.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Located<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::from("elements:");
        for l in &self.element_labels {
            write!(s, " {l}")?;
        }
        s.push_str("\ncovers:");
        for (i, (lo, hi)) in self.cover_pairs.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(s, "{sep}{lo}<{hi}")?;
        }
        s.push('\n');
        f.write_str(&s)
    }
}
