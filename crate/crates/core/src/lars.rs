//! Labeled abstract rewrite systems, labeled rewrite sequences,
//! conversions, peaks and diagrams.
//!
//! Sequences and conversions carry every intermediate object, so validating
//! them against a system is a local check per step.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::measures::{lexmax, LabelQuad, LabelSeq};
use crate::multiset::{LabelMultiset, LabelSet, Precedence};
use crate::symbol::{Label, Obj};

/// A labeled rewrite step `source →label target`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Step {
    pub source: Obj,
    pub label: Label,
    pub target: Obj,
}

impl Step {
    pub fn new(source: impl Into<Obj>, label: impl Into<Label>, target: impl Into<Obj>) -> Self {
        Self {
            source: source.into(),
            label: label.into(),
            target: target.into(),
        }
    }
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -{}-> {}", self.source, self.label, self.target)
    }
}

/// A finite labeled ARS: a set of steps.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabeledArs {
    steps: BTreeSet<Step>,
}

impl LabeledArs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, step: Step) -> bool {
        self.steps.insert(step)
    }

    pub fn contains(&self, source: &Obj, label: &Label, target: &Obj) -> bool {
        // Cloning three Arcs is cheaper than a custom borrow key.
        self.steps.contains(&Step {
            source: source.clone(),
            label: label.clone(),
            target: target.clone(),
        })
    }

    pub fn steps(&self) -> impl Iterator<Item = &Step> + '_ {
        self.steps.iter()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Steps leaving `source`.
    pub fn outgoing<'a>(&'a self, source: &'a Obj) -> impl Iterator<Item = &'a Step> + 'a {
        self.steps.iter().filter(move |s| &s.source == source)
    }

    /// Objects occurring in some step.
    pub fn objects(&self) -> BTreeSet<Obj> {
        self.steps
            .iter()
            .flat_map(|s| [s.source.clone(), s.target.clone()])
            .collect()
    }

    pub fn labels(&self) -> LabelSet {
        self.steps.iter().map(|s| s.label.clone()).collect()
    }

    pub fn unlabel(&self) -> UnlabeledArs {
        self.steps
            .iter()
            .map(|s| (s.source.clone(), s.target.clone()))
            .collect()
    }

    pub fn is_seq(&self, seq: &RewriteSeq) -> bool {
        seq.steps()
            .all(|s| self.contains(&s.source, &s.label, &s.target))
    }

    pub fn is_conv(&self, conv: &Conversion) -> bool {
        conv.oriented_steps()
            .all(|s| self.contains(&s.source, &s.label, &s.target))
    }

    /// Both sides are sequences of this system leaving the same object.
    pub fn is_peak(&self, peak: &Peak) -> bool {
        peak.left.start == peak.right.start && self.is_seq(&peak.left) && self.is_seq(&peak.right)
    }

    /// Every ordered pair of co-initial single steps, including a step
    /// paired with itself.
    pub fn local_peaks(&self) -> Vec<Peak> {
        let mut by_source: BTreeMap<&Obj, Vec<&Step>> = BTreeMap::new();
        for step in &self.steps {
            by_source.entry(&step.source).or_default().push(step);
        }
        let mut out = Vec::new();
        for steps in by_source.values() {
            for left in steps {
                for right in steps {
                    out.push(Peak {
                        left: RewriteSeq::from_step(left),
                        right: RewriteSeq::from_step(right),
                    });
                }
            }
        }
        out
    }

    pub fn is_diagram(&self, d: &Diagram) -> bool {
        d.endpoints_match()
            && self.is_seq(&d.top)
            && self.is_seq(&d.left)
            && self.is_seq(&d.right)
            && self.is_seq(&d.bottom)
    }

    /// A diagram of this system whose labels are decreasing.
    pub fn dd_check(&self, prec: &Precedence, d: &Diagram) -> bool {
        self.is_diagram(d) && d.labels().is_decreasing(prec)
    }
}

impl FromIterator<Step> for LabeledArs {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Self {
            steps: iter.into_iter().collect(),
        }
    }
}

impl fmt::Debug for LabeledArs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.steps.iter()).finish()
    }
}

/// An unlabeled ARS: a finite binary relation on objects.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UnlabeledArs {
    pairs: BTreeSet<(Obj, Obj)>,
}

impl UnlabeledArs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, from: Obj, to: Obj) -> bool {
        self.pairs.insert((from, to))
    }

    pub fn contains(&self, from: &Obj, to: &Obj) -> bool {
        self.pairs.contains(&(from.clone(), to.clone()))
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(Obj, Obj)> + '_ {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn objects(&self) -> BTreeSet<Obj> {
        self.pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect()
    }

    /// Adjacency lists.
    pub fn successors(&self) -> BTreeMap<Obj, Vec<Obj>> {
        let mut out: BTreeMap<Obj, Vec<Obj>> = BTreeMap::new();
        for (a, b) in &self.pairs {
            out.entry(a.clone()).or_default().push(b.clone());
        }
        out
    }
}

impl FromIterator<(Obj, Obj)> for UnlabeledArs {
    fn from_iter<I: IntoIterator<Item = (Obj, Obj)>>(iter: I) -> Self {
        Self {
            pairs: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("cannot join: first ends at `{end}` but second starts at `{start}`")]
    EndpointMismatch { end: Obj, start: Obj },
    #[error("split index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("labels {expected:?} do not match sequence labels {actual:?}")]
    LabelMismatch {
        expected: LabelSeq,
        actual: LabelSeq,
    },
    #[error("sequences start at different objects `{0}` and `{1}`")]
    NotCoinitial(Obj, Obj),
}

/// One step of a sequence: the label and the object reached.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SeqStep {
    pub label: Label,
    pub target: Obj,
}

/// A labeled rewrite sequence: a start object followed by
/// `(label, target)` pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RewriteSeq {
    pub start: Obj,
    pub steps: Vec<SeqStep>,
}

impl RewriteSeq {
    pub fn empty(start: Obj) -> Self {
        Self {
            start,
            steps: Vec::new(),
        }
    }

    pub fn from_step(step: &Step) -> Self {
        Self {
            start: step.source.clone(),
            steps: vec![SeqStep {
                label: step.label.clone(),
                target: step.target.clone(),
            }],
        }
    }

    /// Builds a sequence from alternating objects and labels:
    /// `[a, α, b, β, c]`.
    pub fn from_path(start: impl Into<Obj>, rest: &[(&str, &str)]) -> Self {
        Self {
            start: start.into(),
            steps: rest
                .iter()
                .map(|(label, target)| SeqStep {
                    label: Label::new(label),
                    target: Obj::new(target),
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Last object: the start for an empty sequence.
    pub fn lst(&self) -> &Obj {
        self.steps.last().map_or(&self.start, |s| &s.target)
    }

    pub fn labels(&self) -> LabelSeq {
        self.steps.iter().map(|s| s.label.clone()).collect()
    }

    /// The steps as `(source, label, target)` triples.
    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        let sources = std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.target));
        sources.zip(self.steps.iter()).map(|(src, s)| Step {
            source: src.clone(),
            label: s.label.clone(),
            target: s.target.clone(),
        })
    }

    /// The first step and the remaining sequence.
    pub fn uncons(&self) -> Option<(Step, RewriteSeq)> {
        let first = self.steps.first()?;
        let step = Step {
            source: self.start.clone(),
            label: first.label.clone(),
            target: first.target.clone(),
        };
        let rest = RewriteSeq {
            start: first.target.clone(),
            steps: self.steps[1..].to_vec(),
        };
        Some((step, rest))
    }

    pub fn concat(&self, other: &RewriteSeq) -> Result<RewriteSeq, SeqError> {
        if self.lst() != &other.start {
            return Err(SeqError::EndpointMismatch {
                end: self.lst().clone(),
                start: other.start.clone(),
            });
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(RewriteSeq {
            start: self.start.clone(),
            steps,
        })
    }

    /// The first `index` steps and the rest.
    pub fn split(&self, index: usize) -> Result<(RewriteSeq, RewriteSeq), SeqError> {
        if index > self.steps.len() {
            return Err(SeqError::IndexOutOfRange {
                index,
                len: self.steps.len(),
            });
        }
        let head = RewriteSeq {
            start: self.start.clone(),
            steps: self.steps[..index].to_vec(),
        };
        let tail = RewriteSeq {
            start: head.lst().clone(),
            steps: self.steps[index..].to_vec(),
        };
        Ok((head, tail))
    }

    /// Splits so that the pieces carry the labels `first` and `second`.
    pub fn split_by_labels(
        &self,
        first: &LabelSeq,
        second: &LabelSeq,
    ) -> Result<(RewriteSeq, RewriteSeq), SeqError> {
        let actual = self.labels();
        if first.concat(second) != actual {
            return Err(SeqError::LabelMismatch {
                expected: first.concat(second),
                actual,
            });
        }
        self.split(first.len())
    }

    pub fn to_conversion(&self) -> Conversion {
        Conversion {
            start: self.start.clone(),
            steps: self
                .steps
                .iter()
                .map(|s| ConvStep {
                    forward: true,
                    label: s.label.clone(),
                    target: s.target.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Debug for RewriteSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            write!(f, " -{}-> {}", s.label, s.target)?;
        }
        Ok(())
    }
}

pub fn is_seq(ars: &LabeledArs, seq: &RewriteSeq) -> bool {
    ars.is_seq(seq)
}

pub fn seq_concat(first: &RewriteSeq, second: &RewriteSeq) -> Result<RewriteSeq, SeqError> {
    first.concat(second)
}

pub fn seq_split(seq: &RewriteSeq, index: usize) -> Result<(RewriteSeq, RewriteSeq), SeqError> {
    seq.split(index)
}

pub fn seq_split_by_labels(
    seq: &RewriteSeq,
    first: &LabelSeq,
    second: &LabelSeq,
) -> Result<(RewriteSeq, RewriteSeq), SeqError> {
    seq.split_by_labels(first, second)
}

/// One step of a conversion. A forward step goes from the current object to
/// `target`; a backward step is a system step from `target` to the current
/// object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConvStep {
    pub forward: bool,
    pub label: Label,
    pub target: Obj,
}

/// A labeled conversion: a walk using steps in either direction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Conversion {
    pub start: Obj,
    pub steps: Vec<ConvStep>,
}

impl Conversion {
    pub fn empty(start: Obj) -> Self {
        Self {
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn lst(&self) -> &Obj {
        self.steps.last().map_or(&self.start, |s| &s.target)
    }

    pub fn labels(&self) -> LabelSeq {
        self.steps.iter().map(|s| s.label.clone()).collect()
    }

    /// Walk order: `(from, step)` for each step.
    pub fn walk(&self) -> impl Iterator<Item = (&Obj, &ConvStep)> + '_ {
        let sources = std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.target));
        sources.zip(self.steps.iter())
    }

    /// The underlying system steps, oriented as they occur in the system.
    pub fn oriented_steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.walk().map(|(from, s)| {
            if s.forward {
                Step::new(from.clone(), s.label.clone(), s.target.clone())
            } else {
                Step::new(s.target.clone(), s.label.clone(), from.clone())
            }
        })
    }

    pub fn concat(&self, other: &Conversion) -> Result<Conversion, SeqError> {
        if self.lst() != &other.start {
            return Err(SeqError::EndpointMismatch {
                end: self.lst().clone(),
                start: other.start.clone(),
            });
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(Conversion {
            start: self.start.clone(),
            steps,
        })
    }

    pub fn split(&self, index: usize) -> Result<(Conversion, Conversion), SeqError> {
        if index > self.steps.len() {
            return Err(SeqError::IndexOutOfRange {
                index,
                len: self.steps.len(),
            });
        }
        let head = Conversion {
            start: self.start.clone(),
            steps: self.steps[..index].to_vec(),
        };
        let tail = Conversion {
            start: head.lst().clone(),
            steps: self.steps[index..].to_vec(),
        };
        Ok((head, tail))
    }

    /// The same walk traversed backwards: reversed, with every direction
    /// flipped.
    pub fn mirror(&self) -> Conversion {
        let mut steps = Vec::with_capacity(self.steps.len());
        for (from, s) in self.walk() {
            steps.push(ConvStep {
                forward: !s.forward,
                label: s.label.clone(),
                target: from.clone(),
            });
        }
        steps.reverse();
        Conversion {
            start: self.lst().clone(),
            steps,
        }
    }

    /// The conversion as a forward sequence, if it has no backward step.
    pub fn as_forward_seq(&self) -> Option<RewriteSeq> {
        self.steps.iter().all(|s| s.forward).then(|| RewriteSeq {
            start: self.start.clone(),
            steps: self
                .steps
                .iter()
                .map(|s| SeqStep {
                    label: s.label.clone(),
                    target: s.target.clone(),
                })
                .collect(),
        })
    }
}

impl fmt::Debug for Conversion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            if s.forward {
                write!(f, " -{}-> {}", s.label, s.target)?;
            } else {
                write!(f, " <-{}- {}", s.label, s.target)?;
            }
        }
        Ok(())
    }
}

pub fn conv_concat(first: &Conversion, second: &Conversion) -> Result<Conversion, SeqError> {
    first.concat(second)
}

pub fn conv_split(conv: &Conversion, index: usize) -> Result<(Conversion, Conversion), SeqError> {
    conv.split(index)
}

pub fn conv_mirror(conv: &Conversion) -> Conversion {
    conv.mirror()
}

pub fn seq_to_conv(seq: &RewriteSeq) -> Conversion {
    seq.to_conversion()
}

pub fn conv_labels(conv: &Conversion) -> LabelSeq {
    conv.labels()
}

/// Two co-initial sequences.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Peak {
    pub left: RewriteSeq,
    pub right: RewriteSeq,
}

impl Peak {
    pub fn new(left: RewriteSeq, right: RewriteSeq) -> Result<Self, SeqError> {
        if left.start != right.start {
            return Err(SeqError::NotCoinitial(left.start, right.start));
        }
        Ok(Self { left, right })
    }

    pub fn empty(at: Obj) -> Self {
        Self {
            left: RewriteSeq::empty(at.clone()),
            right: RewriteSeq::empty(at),
        }
    }

    pub fn source(&self) -> &Obj {
        &self.left.start
    }

    pub fn is_local(&self) -> bool {
        self.left.len() == 1 && self.right.len() == 1
    }

    pub fn swap(&self) -> Peak {
        Peak {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// `|left| + |right|`.
    pub fn measure(&self, prec: &Precedence) -> LabelMultiset {
        lexmax(prec, &self.left.labels()) + lexmax(prec, &self.right.labels())
    }

    /// `self ≺peak other`.
    pub fn less(&self, prec: &Precedence, other: &Peak) -> bool {
        prec.mul_less(&self.measure(prec), &other.measure(prec))
    }
}

impl fmt::Debug for Peak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} | {:?})", self.left, self.right)
    }
}

pub fn peak_measure(prec: &Precedence, peak: &Peak) -> LabelMultiset {
    peak.measure(prec)
}

pub fn peak_less(prec: &Precedence, lhs: &Peak, rhs: &Peak) -> bool {
    lhs.less(prec, rhs)
}

/// Four sequences closing a peak: `top` and `left` leave a common object,
/// `right` continues `top`, `bottom` continues `left`, and `right` and
/// `bottom` end at the same object.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    pub top: RewriteSeq,
    pub left: RewriteSeq,
    pub right: RewriteSeq,
    pub bottom: RewriteSeq,
}

impl Diagram {
    /// The diagram closing a peak in which one side is empty.
    pub fn trivial(peak: &Peak) -> Option<Diagram> {
        if peak.left.is_empty() {
            Some(Diagram {
                top: peak.left.clone(),
                left: peak.right.clone(),
                right: peak.right.clone(),
                bottom: RewriteSeq::empty(peak.right.lst().clone()),
            })
        } else if peak.right.is_empty() {
            Some(Diagram {
                top: peak.left.clone(),
                left: peak.right.clone(),
                right: RewriteSeq::empty(peak.left.lst().clone()),
                bottom: peak.left.clone(),
            })
        } else {
            None
        }
    }

    pub fn peak(&self) -> Peak {
        Peak {
            left: self.top.clone(),
            right: self.left.clone(),
        }
    }

    /// `fst σ = fst τ`, `lst σ = fst τ′`, `lst τ = fst σ′`, `lst σ′ = lst τ′`.
    pub fn endpoints_match(&self) -> bool {
        self.left.start == self.top.start
            && self.left.lst() == &self.bottom.start
            && self.top.lst() == &self.right.start
            && self.right.lst() == self.bottom.lst()
    }

    pub fn labels(&self) -> LabelQuad {
        LabelQuad::new(
            self.top.labels(),
            self.left.labels(),
            self.right.labels(),
            self.bottom.labels(),
        )
    }

    pub fn transpose(&self) -> Diagram {
        Diagram {
            top: self.left.clone(),
            left: self.top.clone(),
            right: self.bottom.clone(),
            bottom: self.right.clone(),
        }
    }

    /// `other` pasted to the right, sharing `self.right == other.left`.
    pub fn paste_right(&self, other: &Diagram) -> Result<Diagram, SeqError> {
        if self.right != other.left {
            return Err(SeqError::EndpointMismatch {
                end: self.right.start.clone(),
                start: other.left.start.clone(),
            });
        }
        Ok(Diagram {
            top: self.top.concat(&other.top)?,
            left: self.left.clone(),
            right: other.right.clone(),
            bottom: self.bottom.concat(&other.bottom)?,
        })
    }

    /// `other` pasted below, sharing `self.bottom == other.top`.
    pub fn paste_below(&self, other: &Diagram) -> Result<Diagram, SeqError> {
        self.transpose()
            .paste_right(&other.transpose())
            .map(|d| d.transpose())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Diagram")
            .field("top", &self.top)
            .field("left", &self.left)
            .field("right", &self.right)
            .field("bottom", &self.bottom)
            .finish()
    }
}

pub fn is_diagram(ars: &LabeledArs, d: &Diagram) -> bool {
    ars.is_diagram(d)
}

pub fn dd_check(ars: &LabeledArs, prec: &Precedence, d: &Diagram) -> bool {
    ars.dd_check(prec, d)
}

pub fn local_peaks(ars: &LabeledArs) -> Vec<Peak> {
    ars.local_peaks()
}

pub fn unlabel(ars: &LabeledArs) -> UnlabeledArs {
    ars.unlabel()
}
