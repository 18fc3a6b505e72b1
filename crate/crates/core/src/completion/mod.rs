//! Completing arbitrary peaks of a locally decreasing labeled ARS into
//! decreasing diagrams.
//!
//! The recursion splits off the first step of each side, closes the local
//! corner, completes the peak to its right, pastes, then completes the peak
//! below and pastes again. Every recursive call is checked to strictly
//! decrease the peak measure and consumes one unit of fuel, so invalid input
//! ends in an error instead of a loop.
//!
//! With conversion-shaped local data, the local corner is first closed into
//! a valley using [`Completer::key1_close`] and [`Completer::key2_close`].

mod key;
mod local;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::lars::{Diagram, LabeledArs, Peak, RewriteSeq, SeqError};
use crate::measures::{DecomposeError, LabelSeq};
use crate::multiset::{LabelMultiset, LabelSet, Precedence};

pub use key::Key2Closing;
pub use local::{ConvJoin, ConvJoinSide, LocalCompletionMap, LocalConvMap, ValleyJoin};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("no local join for peak {0:?}")]
    MissingLocalJoin(Box<Peak>),
    #[error("invalid local join for peak {peak:?}: {reason}")]
    InvalidLocalJoin {
        peak: Box<Peak>,
        reason: &'static str,
    },
    #[error("{0:?} is not a peak of the system")]
    NotAPeak(Box<Peak>),
    #[error("peak {peak:?} has measure {after:?}, not below {before:?}")]
    MeasureNotDecreasing {
        peak: Box<Peak>,
        before: LabelMultiset,
        after: LabelMultiset,
    },
    #[error("completion fuel of {0} steps exhausted")]
    FuelExhausted(usize),
    #[error("labels {labels:?} leave the downset of {bound:?}")]
    DownsetViolation { labels: LabelSeq, bound: LabelSet },
    #[error("completed diagram is not decreasing: {0:?}")]
    NotDecreasing(Box<Diagram>),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

/// Which recursive call an event records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// The peak right of the local corner.
    Right,
    /// The peak below the pasted upper half.
    Below,
    /// A peak closed while turning a conversion into a valley.
    Key1,
    /// The peak of a `↓β` sequence and an optional `α`-step.
    Key2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub before: LabelMultiset,
    pub after: LabelMultiset,
    pub rule: Rule,
}

/// Every recursive call made during one completion, in call order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CompletionTrace {
    pub events: Vec<TraceEvent>,
}

impl CompletionTrace {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Each event's measure is strictly below the measure it came from.
    pub fn is_descending(&self, prec: &Precedence) -> bool {
        self.events
            .iter()
            .all(|e| prec.mul_less(&e.after, &e.before))
    }
}

/// `objects × steps × 16`.
pub fn default_fuel(ars: &LabeledArs) -> usize {
    ars.objects().len() * ars.len() * 16
}

enum LocalData<'a> {
    Valley(&'a LocalCompletionMap),
    Conv(&'a LocalConvMap, BTreeMap<Peak, ValleyJoin>),
}

/// The recursive completion engine. One instance accumulates a single
/// trace and a single fuel budget.
pub struct Completer<'a> {
    ars: &'a LabeledArs,
    prec: &'a Precedence,
    local: LocalData<'a>,
    fuel: usize,
    budget: usize,
    trace: CompletionTrace,
}

impl<'a> Completer<'a> {
    pub fn valley(ars: &'a LabeledArs, prec: &'a Precedence, map: &'a LocalCompletionMap) -> Self {
        Self::with_local(ars, prec, LocalData::Valley(map))
    }

    pub fn conv(ars: &'a LabeledArs, prec: &'a Precedence, map: &'a LocalConvMap) -> Self {
        Self::with_local(ars, prec, LocalData::Conv(map, BTreeMap::new()))
    }

    fn with_local(ars: &'a LabeledArs, prec: &'a Precedence, local: LocalData<'a>) -> Self {
        let fuel = default_fuel(ars);
        Self {
            ars,
            prec,
            local,
            fuel,
            budget: fuel,
            trace: CompletionTrace::default(),
        }
    }

    pub fn with_fuel(mut self, fuel: usize) -> Self {
        self.fuel = fuel;
        self.budget = fuel;
        self
    }

    pub fn trace(&self) -> &CompletionTrace {
        &self.trace
    }

    pub fn into_trace(self) -> CompletionTrace {
        self.trace
    }

    /// Completes `peak` and checks the result is a decreasing diagram of
    /// the system.
    pub fn complete_checked(&mut self, peak: &Peak) -> Result<Diagram, CompletionError> {
        if !self.ars.is_peak(peak) {
            return Err(CompletionError::NotAPeak(Box::new(peak.clone())));
        }
        let d = self.complete(peak)?;
        if !self.ars.dd_check(self.prec, &d) {
            return Err(CompletionError::NotDecreasing(Box::new(d)));
        }
        Ok(d)
    }

    /// Completes a peak known to belong to the system.
    pub fn complete(&mut self, peak: &Peak) -> Result<Diagram, CompletionError> {
        if let Some(d) = Diagram::trivial(peak) {
            return Ok(d);
        }
        if self.fuel == 0 {
            return Err(CompletionError::FuelExhausted(self.budget));
        }
        self.fuel -= 1;

        let (top_step, upsilon) = peak.left.uncons().expect("non-empty top");
        let (left_step, rho) = peak.right.uncons().expect("non-empty left");
        let corner = Peak {
            left: RewriteSeq::from_step(&top_step),
            right: RewriteSeq::from_step(&left_step),
        };
        let join = self.local_join(&corner)?;
        let local = join.diagram(&corner);

        let right = Peak {
            left: upsilon,
            right: local.right.clone(),
        };
        self.descend(peak, &right, Rule::Right)?;
        let upper = local.paste_right(&self.complete(&right)?)?;

        let below = Peak {
            left: upper.bottom.clone(),
            right: rho,
        };
        self.descend(peak, &below, Rule::Below)?;
        Ok(upper.paste_below(&self.complete(&below)?)?)
    }

    /// Records a call on `to` made while completing `from`. Calls that
    /// close trivially are not recursion and are not recorded.
    fn descend(&mut self, from: &Peak, to: &Peak, rule: Rule) -> Result<(), CompletionError> {
        if to.left.is_empty() || to.right.is_empty() {
            return Ok(());
        }
        self.record(from.measure(self.prec), to, rule)
    }

    fn record(
        &mut self,
        before: LabelMultiset,
        to: &Peak,
        rule: Rule,
    ) -> Result<(), CompletionError> {
        let after = to.measure(self.prec);
        if !self.prec.mul_less(&after, &before) {
            return Err(CompletionError::MeasureNotDecreasing {
                peak: Box::new(to.clone()),
                before,
                after,
            });
        }
        self.trace.events.push(TraceEvent {
            before,
            after,
            rule,
        });
        Ok(())
    }

    fn local_join(&mut self, corner: &Peak) -> Result<ValleyJoin, CompletionError> {
        match &self.local {
            LocalData::Valley(map) => map
                .get(corner)
                .cloned()
                .ok_or_else(|| CompletionError::MissingLocalJoin(Box::new(corner.clone()))),
            LocalData::Conv(map, cache) => {
                if let Some(join) = cache.get(corner) {
                    return Ok(join.clone());
                }
                let conv = map
                    .get(corner)
                    .cloned()
                    .ok_or_else(|| CompletionError::MissingLocalJoin(Box::new(corner.clone())))?;
                let join = self.close_conv_join(corner, &conv)?;
                if let LocalData::Conv(_, cache) = &mut self.local {
                    cache.insert(corner.clone(), join.clone());
                }
                Ok(join)
            }
        }
    }
}

/// Completes `peak` into a decreasing diagram with `top = peak.left` and
/// `left = peak.right`, using the default fuel.
pub fn complete_peak(
    ars: &LabeledArs,
    prec: &Precedence,
    map: &LocalCompletionMap,
    peak: &Peak,
) -> Result<(Diagram, CompletionTrace), CompletionError> {
    let mut c = Completer::valley(ars, prec, map);
    let d = c.complete_checked(peak)?;
    Ok((d, c.into_trace()))
}

/// Completes the swapped peak and transposes the result, so the diagram
/// again has `top = peak.left`.
pub fn mirror_peak_complete(
    ars: &LabeledArs,
    prec: &Precedence,
    map: &LocalCompletionMap,
    peak: &Peak,
) -> Result<(Diagram, CompletionTrace), CompletionError> {
    let (d, trace) = complete_peak(ars, prec, map, &peak.swap())?;
    Ok((d.transpose(), trace))
}

/// As [`complete_peak`] with conversion-shaped local data.
pub fn complete_peak_conv(
    ars: &LabeledArs,
    prec: &Precedence,
    map: &LocalConvMap,
    peak: &Peak,
) -> Result<(Diagram, CompletionTrace), CompletionError> {
    let mut c = Completer::conv(ars, prec, map);
    let d = c.complete_checked(peak)?;
    Ok((d, c.into_trace()))
}

#[cfg(test)]
mod tests;
