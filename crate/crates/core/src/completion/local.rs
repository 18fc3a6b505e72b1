//! Local joining data: valley joins and conversion-shaped joins for every
//! local peak, validated once at construction.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CompletionError;
use crate::lars::{Conversion, Diagram, LabeledArs, Peak, RewriteSeq};
use crate::measures::ld_decompose;
use crate::multiset::{LabelSet, Precedence};
use crate::symbol::{Label, Obj};

/// The labels `(β, α)` of a local peak: top step first.
pub(crate) fn local_labels(peak: &Peak) -> Option<(Label, Label)> {
    if !peak.is_local() {
        return None;
    }
    Some((
        peak.left.steps[0].label.clone(),
        peak.right.steps[0].label.clone(),
    ))
}

fn invalid(peak: &Peak, reason: &'static str) -> CompletionError {
    CompletionError::InvalidLocalJoin {
        peak: Box::new(peak.clone()),
        reason,
    }
}

/// A valley join for a local peak: `right` continues the top step and
/// `bottom` continues the left step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValleyJoin {
    pub right: RewriteSeq,
    pub bottom: RewriteSeq,
}

impl ValleyJoin {
    pub fn empty_at(peak: &Peak) -> Self {
        Self {
            right: RewriteSeq::empty(peak.left.lst().clone()),
            bottom: RewriteSeq::empty(peak.right.lst().clone()),
        }
    }

    pub fn diagram(&self, peak: &Peak) -> Diagram {
        Diagram {
            top: peak.left.clone(),
            left: peak.right.clone(),
            right: self.right.clone(),
            bottom: self.bottom.clone(),
        }
    }
}

/// Valley joins for all local peaks, each forming a decreasing diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LocalCompletionMap {
    entries: BTreeMap<Peak, ValleyJoin>,
}

impl LocalCompletionMap {
    /// Validates every entry. Peaks of a step with itself may be omitted;
    /// they are closed with empty joins.
    pub fn new(
        ars: &LabeledArs,
        prec: &Precedence,
        mut entries: BTreeMap<Peak, ValleyJoin>,
    ) -> Result<Self, CompletionError> {
        for peak in ars.local_peaks() {
            if peak.left == peak.right {
                entries
                    .entry(peak.clone())
                    .or_insert_with(|| ValleyJoin::empty_at(&peak));
            }
            let Some(join) = entries.get(&peak) else {
                return Err(CompletionError::MissingLocalJoin(Box::new(peak)));
            };
            if !ars.dd_check(prec, &join.diagram(&peak)) {
                return Err(invalid(&peak, "join is not a decreasing diagram"));
            }
        }
        if let Some(extra) = entries.keys().find(|p| !p.is_local() || !ars.is_peak(p)) {
            return Err(invalid(extra, "not a local peak of the system"));
        }
        Ok(Self { entries })
    }

    pub fn get(&self, peak: &Peak) -> Option<&ValleyJoin> {
        self.entries.get(peak)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Peak, &ValleyJoin)> + '_ {
        self.entries.iter()
    }
}

/// One side of a conversion-shaped join: a conversion, an optional single
/// step, and a second conversion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvJoinSide {
    pub first: Conversion,
    pub middle: RewriteSeq,
    pub last: Conversion,
}

impl ConvJoinSide {
    pub fn empty_at(at: &Obj) -> Self {
        Self {
            first: Conversion::empty(at.clone()),
            middle: RewriteSeq::empty(at.clone()),
            last: Conversion::empty(at.clone()),
        }
    }

    pub fn start(&self) -> &Obj {
        &self.first.start
    }

    pub fn end(&self) -> &Obj {
        self.last.lst()
    }

    /// `first ⊆ ↓own`, `middle` is empty or one `other`-step,
    /// `last ⊆ ↓{own, other}`, with matching endpoints.
    pub fn has_shape(
        &self,
        ars: &LabeledArs,
        prec: &Precedence,
        own: &Label,
        other: &Label,
    ) -> bool {
        let both: LabelSet = [own.clone(), other.clone()].into_iter().collect();
        self.first.lst() == &self.middle.start
            && self.middle.lst() == &self.last.start
            && ars.is_conv(&self.first)
            && ars.is_seq(&self.middle)
            && ars.is_conv(&self.last)
            && self.first.labels().set_of().is_subset(&prec.downset(own))
            && self.middle.len() <= 1
            && self.middle.labels().iter().all(|l| l == other)
            && self.last.labels().set_of().is_subset(&prec.downset(&both))
    }
}

/// Conversion-shaped join of a local peak with top label `β` and left
/// label `α`. `right` leaves the top step's target with `first ⊆ ↓β` and an
/// optional `α`-step; `bottom` leaves the left step's target with
/// `first ⊆ ↓α` and an optional `β`-step. Both end at the same object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvJoin {
    pub right: ConvJoinSide,
    pub bottom: ConvJoinSide,
}

impl ConvJoin {
    pub fn empty_at(peak: &Peak) -> Self {
        Self {
            right: ConvJoinSide::empty_at(peak.left.lst()),
            bottom: ConvJoinSide::empty_at(peak.right.lst()),
        }
    }

    /// The embedding of a decreasing valley join.
    pub fn from_valley(
        prec: &Precedence,
        peak: &Peak,
        join: &ValleyJoin,
    ) -> Result<Self, CompletionError> {
        let (beta, alpha) = local_labels(peak).ok_or_else(|| invalid(peak, "not a local peak"))?;
        let side = |seq: &RewriteSeq, own: &Label, other: &Label| {
            let dec = ld_decompose(prec, other, own, &seq.labels())?;
            let (first, rest) = seq.split(dec.first.len())?;
            let (middle, last) = rest.split(dec.middle.len())?;
            Ok::<_, CompletionError>(ConvJoinSide {
                first: first.to_conversion(),
                middle,
                last: last.to_conversion(),
            })
        };
        Ok(Self {
            right: side(&join.right, &beta, &alpha)?,
            bottom: side(&join.bottom, &alpha, &beta)?,
        })
    }

    pub fn check(
        &self,
        ars: &LabeledArs,
        prec: &Precedence,
        peak: &Peak,
    ) -> Result<(), CompletionError> {
        let (beta, alpha) = local_labels(peak).ok_or_else(|| invalid(peak, "not a local peak"))?;
        if !ars.is_peak(peak) {
            return Err(invalid(peak, "not a local peak of the system"));
        }
        if self.right.start() != peak.left.lst() || self.bottom.start() != peak.right.lst() {
            return Err(invalid(peak, "join does not start at the peak's ends"));
        }
        if self.right.end() != self.bottom.end() {
            return Err(invalid(peak, "join sides do not meet"));
        }
        if !self.right.has_shape(ars, prec, &beta, &alpha) {
            return Err(invalid(peak, "right side violates the conversion shape"));
        }
        if !self.bottom.has_shape(ars, prec, &alpha, &beta) {
            return Err(invalid(peak, "bottom side violates the conversion shape"));
        }
        Ok(())
    }
}

/// Conversion-shaped joins for all local peaks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LocalConvMap {
    entries: BTreeMap<Peak, ConvJoin>,
}

impl LocalConvMap {
    /// Validates every entry. Peaks of a step with itself may be omitted.
    pub fn new(
        ars: &LabeledArs,
        prec: &Precedence,
        mut entries: BTreeMap<Peak, ConvJoin>,
    ) -> Result<Self, CompletionError> {
        for peak in ars.local_peaks() {
            if peak.left == peak.right {
                entries
                    .entry(peak.clone())
                    .or_insert_with(|| ConvJoin::empty_at(&peak));
            }
            if !entries.contains_key(&peak) {
                return Err(CompletionError::MissingLocalJoin(Box::new(peak)));
            }
        }
        for (peak, join) in &entries {
            join.check(ars, prec, peak)?;
        }
        Ok(Self { entries })
    }

    /// Every valley join embedded as a conversion-shaped join.
    pub fn from_valley_map(
        ars: &LabeledArs,
        prec: &Precedence,
        map: &LocalCompletionMap,
    ) -> Result<Self, CompletionError> {
        let entries = map
            .iter()
            .map(|(peak, join)| Ok((peak.clone(), ConvJoin::from_valley(prec, peak, join)?)))
            .collect::<Result<BTreeMap<_, _>, CompletionError>>()?;
        Self::new(ars, prec, entries)
    }

    pub fn get(&self, peak: &Peak) -> Option<&ConvJoin> {
        self.entries.get(peak)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Peak, &ConvJoin)> + '_ {
        self.entries.iter()
    }
}
