//! Turning conversion-shaped local joins into valleys.

use super::{Completer, CompletionError, ConvJoin, ConvJoinSide, Rule, ValleyJoin};
use crate::lars::{Conversion, Peak, RewriteSeq, SeqError, Step};
use crate::measures::{
    ld_decompose_seqlabels, ld_prime_check_both, LabelSeq, LdPrimeDecomposition,
};
use crate::multiset::{LabelMultiset, LabelSet};
use crate::symbol::Label;

/// A closed peak of a `↓β` sequence `t` and an optional `α`-step `s`:
/// from the end of `t` the steps `σ1 ⊆ ↓β`, `σ2` (at most one `α`) and
/// `σ3 ⊆ ↓{α, β}`; from the end of `s` the steps `τ′ ⊆ ↓{α, β}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Key2Closing {
    pub sigma1: RewriteSeq,
    pub sigma2: RewriteSeq,
    pub sigma3: RewriteSeq,
    pub tau_prime: RewriteSeq,
}

impl Key2Closing {
    pub fn sigma(&self) -> Result<RewriteSeq, SeqError> {
        self.sigma1.concat(&self.sigma2)?.concat(&self.sigma3)
    }
}

impl Completer<'_> {
    fn require_below(&self, labels: LabelSeq, bound: &LabelSet) -> Result<(), CompletionError> {
        if labels.set_of().is_subset(&self.prec.downset(bound)) {
            Ok(())
        } else {
            Err(CompletionError::DownsetViolation {
                labels,
                bound: bound.clone(),
            })
        }
    }

    /// Closes a conversion with labels in `↓bound` into a valley
    /// `(s1, s2)`: `s1` leaves the conversion's start, `s2` leaves its end,
    /// and both stay in `↓bound`. Peaks met on the way are completed
    /// recursively and must lie strictly below `ambient`.
    pub fn key1_close(
        &mut self,
        ambient: &LabelMultiset,
        bound: &LabelMultiset,
        conv: &Conversion,
    ) -> Result<(RewriteSeq, RewriteSeq), CompletionError> {
        let bound = bound.set_of();
        self.require_below(conv.labels(), &bound)?;
        let mut s1 = RewriteSeq::empty(conv.lst().clone());
        let mut s2 = RewriteSeq::empty(conv.lst().clone());
        let walk: Vec<_> = conv.walk().collect();
        for (from, step) in walk.into_iter().rev() {
            if step.forward {
                let head = Step::new(from.clone(), step.label.clone(), step.target.clone());
                s1 = RewriteSeq::from_step(&head).concat(&s1)?;
                continue;
            }
            // A system step from `step.target` back to `from`, facing `s1`.
            let back = Step::new(step.target.clone(), step.label.clone(), from.clone());
            let peak = Peak {
                left: RewriteSeq::from_step(&back),
                right: s1.clone(),
            };
            if !peak.right.is_empty() {
                self.record(ambient.clone(), &peak, Rule::Key1)?;
            }
            let d = self.complete(&peak)?;
            self.require_below(d.right.labels(), &bound)?;
            self.require_below(d.bottom.labels(), &bound)?;
            s1 = d.right;
            s2 = s2.concat(&d.bottom)?;
        }
        Ok((s1, s2))
    }

    /// Closes the peak of `t` (labels in `↓β`) and `s` (empty or one
    /// `α`-step) into the four-part shape of [`Key2Closing`].
    pub fn key2_close(
        &mut self,
        ambient: &LabelMultiset,
        alpha: &Label,
        beta: &Label,
        t: &RewriteSeq,
        s: &RewriteSeq,
    ) -> Result<Key2Closing, CompletionError> {
        let both: LabelSet = [alpha.clone(), beta.clone()].into_iter().collect();
        self.require_below(t.labels(), &LabelSet::singleton(beta.clone()))?;
        if s.len() > 1 || s.labels().iter().any(|l| l != alpha) {
            return Err(CompletionError::DownsetViolation {
                labels: s.labels(),
                bound: LabelSet::singleton(alpha.clone()),
            });
        }
        let peak = Peak {
            left: t.clone(),
            right: s.clone(),
        };
        if !peak.left.is_empty() && !peak.right.is_empty() {
            self.record(ambient.clone(), &peak, Rule::Key2)?;
        }
        let d = self.complete(&peak)?;
        self.require_below(d.bottom.labels(), &both)?;
        let dec = ld_decompose_seqlabels(self.prec, alpha, &t.labels(), &d.right.labels())?;
        let (sigma1, rest) = d.right.split(dec.first.len())?;
        let (sigma2, sigma3) = rest.split(dec.middle.len())?;
        Ok(Key2Closing {
            sigma1,
            sigma2,
            sigma3,
            tau_prime: d.bottom,
        })
    }

    /// One side: key1 on the first conversion, then key2 on the peak it
    /// leaves behind the optional step. Returns the sequence from the
    /// side's start, its decomposition, and the key2 `τ′`.
    fn close_side(
        &mut self,
        ambient: &LabelMultiset,
        side: &ConvJoinSide,
        own: &Label,
        other: &Label,
    ) -> Result<(RewriteSeq, LdPrimeDecomposition, RewriteSeq), CompletionError> {
        let own_bound = LabelMultiset::singleton(own.clone());
        let (p1, p2) = self.key1_close(ambient, &own_bound, &side.first)?;
        let k = self.key2_close(ambient, other, own, &p2, &side.middle)?;
        let seq = p1.concat(&k.sigma()?)?;
        let dec = LdPrimeDecomposition::new(
            p1.labels().concat(&k.sigma1.labels()),
            k.sigma2.labels(),
            k.sigma3.labels(),
        );
        Ok((seq, dec, k.tau_prime))
    }

    /// Closes a conversion-shaped local join into a valley and checks its
    /// explicit locally decreasing shape.
    pub(super) fn close_conv_join(
        &mut self,
        corner: &Peak,
        join: &ConvJoin,
    ) -> Result<ValleyJoin, CompletionError> {
        let (beta, alpha) = super::local::local_labels(corner)
            .ok_or_else(|| CompletionError::NotAPeak(Box::new(corner.clone())))?;
        let ambient = corner.measure(self.prec);
        let (right, mut right_dec, right_tau) =
            self.close_side(&ambient, &join.right, &beta, &alpha)?;
        let (bottom, mut bottom_dec, bottom_tau) =
            self.close_side(&ambient, &join.bottom, &alpha, &beta)?;

        let middle = right_tau
            .to_conversion()
            .mirror()
            .concat(&join.right.last)?
            .concat(&join.bottom.last.mirror())?
            .concat(&bottom_tau.to_conversion())?;
        let both = [alpha.clone(), beta.clone()]
            .into_iter()
            .collect::<LabelSet>();
        let (f_right, f_bottom) =
            self.key1_close(&ambient, &LabelMultiset::from_set(&both), &middle)?;
        right_dec.last = right_dec.last.concat(&f_right.labels());
        bottom_dec.last = bottom_dec.last.concat(&f_bottom.labels());

        let valley = ValleyJoin {
            right: right.concat(&f_right)?,
            bottom: bottom.concat(&f_bottom)?,
        };
        let shaped = ld_prime_check_both(self.prec, &alpha, &beta, &right_dec, &bottom_dec);
        let d = valley.diagram(corner);
        if !shaped || !self.ars.dd_check(self.prec, &d) {
            return Err(CompletionError::NotDecreasing(Box::new(d)));
        }
        Ok(valley)
    }
}
