//! The line-oriented `.ars` text format.
//!
//! ```text
//! # comments run to the end of the line
//! ars newman
//! objects s t u v
//! labels ls lt lu
//! prec lt < ls
//! prec lu < ls
//! step s -> t : ls
//! ```
//!
//! Identifiers must be declared before use. `prec` lines give covering
//! pairs; the precedence is their transitive closure and must be acyclic.
//! Repeated step lines are accepted once.

use std::fmt::Write as _;

use thiserror::Error;

use crate::lars::{LabeledArs, RewriteSeq, SeqStep, Step, UnlabeledArs};
use crate::multiset::{Precedence, PrecedenceError};
use crate::symbol::{Label, Obj};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cycle in precedence: {0}")]
    Cycle(PrecedenceError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A parsed `.ars` file, in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArsDocument {
    pub name: String,
    pub objects: Vec<Obj>,
    pub labels: Vec<Label>,
    pub prec: Vec<(Label, Label)>,
    pub steps: Vec<Step>,
}

impl ArsDocument {
    pub fn ars(&self) -> LabeledArs {
        self.steps.iter().cloned().collect()
    }

    pub fn unlabeled(&self) -> UnlabeledArs {
        self.steps
            .iter()
            .map(|s| (s.source.clone(), s.target.clone()))
            .collect()
    }

    /// The transitive closure of the declared pairs.
    pub fn precedence(&self) -> Precedence {
        Precedence::from_covering(self.prec.iter().cloned()).expect("validated while parsing")
    }
}

fn is_ident(token: &str) -> bool {
    !token.is_empty()
        && token
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '.'))
}

struct Parser {
    doc: ArsDocument,
    labeled: bool,
    line: usize,
}

impl Parser {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            kind,
        }
    }

    fn malformed(&self, msg: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Malformed(msg.into()))
    }

    fn ident<'t>(&self, token: &'t str) -> Result<&'t str, ParseError> {
        if is_ident(token) {
            Ok(token)
        } else {
            Err(self.malformed(format!("`{token}` is not an identifier")))
        }
    }

    fn object(&self, token: &str) -> Result<Obj, ParseError> {
        let name = self.ident(token.trim())?;
        let obj = Obj::new(name);
        if self.doc.objects.contains(&obj) {
            Ok(obj)
        } else {
            Err(self.err(ParseErrorKind::UnknownObject(name.to_string())))
        }
    }

    fn label(&self, token: &str) -> Result<Label, ParseError> {
        let name = self.ident(token.trim())?;
        let label = Label::new(name);
        if self.doc.labels.contains(&label) {
            Ok(label)
        } else {
            Err(self.err(ParseErrorKind::UnknownLabel(name.to_string())))
        }
    }

    fn parse_line(&mut self, text: &str) -> Result<(), ParseError> {
        let text = text.split('#').next().unwrap_or("").trim();
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match keyword {
            "" => Ok(()),
            "ars" => {
                if !self.doc.name.is_empty() {
                    return Err(self.malformed("`ars` given twice"));
                }
                self.doc.name = self.ident(rest)?.to_string();
                Ok(())
            }
            "objects" => {
                if rest.is_empty() {
                    return Err(self.malformed("`objects` needs at least one name"));
                }
                for token in rest.split_whitespace() {
                    let obj = Obj::new(self.ident(token)?);
                    if !self.doc.objects.contains(&obj) {
                        self.doc.objects.push(obj);
                    }
                }
                Ok(())
            }
            "labels" | "prec" if !self.labeled => Ok(()),
            "labels" => {
                if rest.is_empty() {
                    return Err(self.malformed("`labels` needs at least one name"));
                }
                for token in rest.split_whitespace() {
                    let label = Label::new(self.ident(token)?);
                    if !self.doc.labels.contains(&label) {
                        self.doc.labels.push(label);
                    }
                }
                Ok(())
            }
            "prec" => {
                let (lo, hi) = rest
                    .split_once('<')
                    .ok_or_else(|| self.malformed("expected `prec <label> < <label>`"))?;
                let pair = (self.label(lo)?, self.label(hi)?);
                let mut pairs = self.doc.prec.clone();
                pairs.push(pair.clone());
                Precedence::from_covering(pairs).map_err(|e| self.err(ParseErrorKind::Cycle(e)))?;
                if !self.doc.prec.contains(&pair) {
                    self.doc.prec.push(pair);
                }
                Ok(())
            }
            "step" => {
                let (source, rest) = rest
                    .split_once("->")
                    .ok_or_else(|| self.malformed("expected `step <obj> -> <obj> : <label>`"))?;
                let (target, label) = match rest.split_once(':') {
                    Some((t, l)) => (t, Some(l)),
                    None => (rest, None),
                };
                let label = match (label, self.labeled) {
                    (Some(l), true) => self.label(l)?,
                    (None, true) => return Err(self.malformed("step needs `: <label>`")),
                    (_, false) => Label::new(self.ident(source.trim())?),
                };
                let step = Step {
                    source: self.object(source)?,
                    label,
                    target: self.object(target)?,
                };
                if !self.doc.steps.contains(&step) {
                    self.doc.steps.push(step);
                }
                Ok(())
            }
            other => Err(self.malformed(format!("unknown keyword `{other}`"))),
        }
    }
}

fn parse(text: &str, labeled: bool) -> Result<ArsDocument, ParseError> {
    let mut p = Parser {
        doc: ArsDocument::default(),
        labeled,
        line: 0,
    };
    for (i, line) in text.lines().enumerate() {
        p.line = i + 1;
        p.parse_line(line)?;
    }
    Ok(p.doc)
}

/// Parses a labeled document: every step carries a declared label.
pub fn parse_ars(text: &str) -> Result<ArsDocument, ParseError> {
    parse(text, true)
}

/// Parses a document as an unlabeled system: `labels` and `prec` lines are
/// skipped, step labels are optional and ignored, and each step is labeled
/// by its source object.
pub fn parse_unlabeled_ars(text: &str) -> Result<ArsDocument, ParseError> {
    parse(text, false)
}

/// The canonical text of a document; parsing it gives the document back.
pub fn print_ars(doc: &ArsDocument) -> String {
    let mut out = String::new();
    let join = |items: Vec<&str>| items.join(" ");
    if !doc.name.is_empty() {
        let _ = writeln!(out, "ars {}", doc.name);
    }
    if !doc.objects.is_empty() {
        let _ = writeln!(
            out,
            "objects {}",
            join(doc.objects.iter().map(Obj::as_str).collect())
        );
    }
    if !doc.labels.is_empty() {
        let _ = writeln!(
            out,
            "labels {}",
            join(doc.labels.iter().map(Label::as_str).collect())
        );
    }
    for (lo, hi) in &doc.prec {
        let _ = writeln!(out, "prec {lo} < {hi}");
    }
    for s in &doc.steps {
        let _ = writeln!(out, "step {} -> {} : {}", s.source, s.target, s.label);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path `{0}` must alternate objects and labels, starting and ending with an object")]
    Malformed(String),
    #[error("path `{0}` is not a rewrite sequence of the system")]
    NotASequence(String),
}

/// Parses `obj,label,obj,…,obj` into a sequence of `ars`.
pub fn parse_path(ars: &LabeledArs, text: &str) -> Result<RewriteSeq, PathError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len().is_multiple_of(2) || !parts.iter().all(|p| is_ident(p)) {
        return Err(PathError::Malformed(text.to_string()));
    }
    let seq = RewriteSeq {
        start: Obj::new(parts[0]),
        steps: parts[1..]
            .chunks(2)
            .map(|c| SeqStep {
                label: Label::new(c[0]),
                target: Obj::new(c[1]),
            })
            .collect(),
    };
    if ars.is_seq(&seq) {
        Ok(seq)
    } else {
        Err(PathError::NotASequence(text.to_string()))
    }
}
