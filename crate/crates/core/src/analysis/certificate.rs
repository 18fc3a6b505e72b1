//! Self-contained certificates of local decreasingness, checked without
//! any search.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::search::{check_locally_decreasing, LdReport, Witness};
use super::Mode;
use crate::completion::{ConvJoin, ValleyJoin};
use crate::lars::{LabeledArs, Peak, Step};
use crate::multiset::Precedence;
use crate::symbol::Label;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinData {
    Valley(ValleyJoin),
    Conv(ConvJoin),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeakJoin {
    pub peak: Peak,
    pub join: JoinData,
}

/// A system, a precedence given by all its pairs, a join for every local
/// peak, and a linear extension of the precedence attesting acyclicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub mode: Mode,
    pub steps: Vec<Step>,
    pub precedence: Vec<(Label, Label)>,
    pub joins: Vec<PeakJoin>,
    pub attestation: Vec<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("{} local peaks have no decreasing join", .0.len())]
    NotLocallyDecreasing(Vec<Peak>),
}

/// Searches joins for every local peak and packages them.
pub fn certify(
    ars: &LabeledArs,
    prec: &Precedence,
    mode: Mode,
) -> Result<Certificate, CertifyError> {
    certify_report(ars, prec, &check_locally_decreasing(ars, prec, mode))
}

/// Packages an all-decreasing report.
pub fn certify_report(
    ars: &LabeledArs,
    prec: &Precedence,
    report: &LdReport,
) -> Result<Certificate, CertifyError> {
    if !report.all_decreasing() {
        return Err(CertifyError::NotLocallyDecreasing(
            report.failures().map(|p| p.peak.clone()).collect(),
        ));
    }
    let joins = report
        .peaks
        .iter()
        .map(|p| PeakJoin {
            peak: p.peak.clone(),
            join: match p.witness.clone().expect("decreasing peaks carry a witness") {
                Witness::Valley { join, .. } => JoinData::Valley(join),
                Witness::Conv(join) => JoinData::Conv(join),
            },
        })
        .collect();
    Ok(Certificate {
        mode: report.mode,
        steps: ars.steps().cloned().collect(),
        precedence: prec.pairs().cloned().collect(),
        joins,
        attestation: prec.linear_extension(&ars.labels()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerifyFailure {
    #[error("step {index} is listed twice")]
    DuplicateStep { index: usize },
    #[error("precedence pair {index} relates {label} to itself")]
    ReflexivePair { index: usize, label: Label },
    #[error("precedence has {lo} < {mid} < {hi} but not {lo} < {hi}")]
    NotTransitive { lo: Label, mid: Label, hi: Label },
    #[error("attestation lists {label} more than once")]
    AttestationDuplicate { label: Label },
    #[error("attestation omits {label}")]
    AttestationMissing { label: Label },
    #[error("attestation places {hi} before {lo}, contradicting {lo} < {hi}")]
    AttestationOrder { lo: Label, hi: Label },
    #[error("join {index} is not for a local peak of the system")]
    UnknownPeak { index: usize },
    #[error("join {index} repeats an earlier peak")]
    DuplicatePeak { index: usize },
    #[error("no join for local peak {peak:?}")]
    MissingPeak { peak: Peak },
    #[error("join {index} does not match the certificate mode")]
    ModeMismatch { index: usize },
    #[error("join {index} is invalid: {reason}")]
    InvalidJoin { index: usize, reason: String },
}

/// Every failure found, in field order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyOutcome {
    pub failures: Vec<VerifyFailure>,
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_certificate(cert: &Certificate) -> bool {
    verify(cert).is_valid()
}

fn check_order(cert: &Certificate, failures: &mut Vec<VerifyFailure>) {
    let pairs: BTreeSet<&(Label, Label)> = cert.precedence.iter().collect();
    for (index, (lo, hi)) in cert.precedence.iter().enumerate() {
        if lo == hi {
            failures.push(VerifyFailure::ReflexivePair {
                index,
                label: lo.clone(),
            });
        }
    }
    for (lo, mid) in &pairs {
        for (mid2, hi) in &pairs {
            if mid == mid2 && !pairs.contains(&(lo.clone(), hi.clone())) {
                failures.push(VerifyFailure::NotTransitive {
                    lo: lo.clone(),
                    mid: mid.clone(),
                    hi: hi.clone(),
                });
            }
        }
    }
    let mut position: BTreeMap<&Label, usize> = BTreeMap::new();
    for (i, label) in cert.attestation.iter().enumerate() {
        if position.insert(label, i).is_some() {
            failures.push(VerifyFailure::AttestationDuplicate {
                label: label.clone(),
            });
        }
    }
    let mentioned: BTreeSet<&Label> = cert
        .precedence
        .iter()
        .flat_map(|(a, b)| [a, b])
        .chain(cert.steps.iter().map(|s| &s.label))
        .collect();
    for label in mentioned {
        if !position.contains_key(label) {
            failures.push(VerifyFailure::AttestationMissing {
                label: label.clone(),
            });
        }
    }
    for (lo, hi) in &cert.precedence {
        if let (Some(i), Some(j)) = (position.get(lo), position.get(hi)) {
            if i >= j {
                failures.push(VerifyFailure::AttestationOrder {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
        }
    }
}

/// Re-checks every field of `cert`. Joins are checked only once the
/// precedence itself is valid.
pub fn verify(cert: &Certificate) -> VerifyOutcome {
    let mut failures = Vec::new();
    let mut ars = LabeledArs::new();
    for (index, step) in cert.steps.iter().enumerate() {
        if !ars.insert(step.clone()) {
            failures.push(VerifyFailure::DuplicateStep { index });
        }
    }
    check_order(cert, &mut failures);

    let local: BTreeSet<Peak> = ars.local_peaks().into_iter().collect();
    let mut seen = BTreeSet::new();
    let mut to_check = Vec::new();
    for (index, entry) in cert.joins.iter().enumerate() {
        if !local.contains(&entry.peak) {
            failures.push(VerifyFailure::UnknownPeak { index });
        } else if !seen.insert(&entry.peak) {
            failures.push(VerifyFailure::DuplicatePeak { index });
        } else {
            to_check.push((index, entry));
        }
    }
    for peak in local.iter().filter(|p| !seen.contains(p)) {
        failures.push(VerifyFailure::MissingPeak { peak: peak.clone() });
    }

    let order_ok = failures.iter().all(|f| {
        !matches!(
            f,
            VerifyFailure::ReflexivePair { .. }
                | VerifyFailure::NotTransitive { .. }
                | VerifyFailure::AttestationOrder { .. }
                | VerifyFailure::AttestationDuplicate { .. }
        )
    });
    let prec = order_ok
        .then(|| Precedence::from_closed(cert.precedence.iter().cloned()).ok())
        .flatten();
    let Some(prec) = prec else {
        return VerifyOutcome { failures };
    };
    for (index, entry) in to_check {
        match (&entry.join, cert.mode) {
            (JoinData::Valley(join), Mode::Valley) => {
                if !ars.dd_check(&prec, &join.diagram(&entry.peak)) {
                    failures.push(VerifyFailure::InvalidJoin {
                        index,
                        reason: "not a decreasing diagram of the system".into(),
                    });
                }
            }
            (JoinData::Conv(join), Mode::Conv) => {
                if let Err(e) = join.check(&ars, &prec, &entry.peak) {
                    failures.push(VerifyFailure::InvalidJoin {
                        index,
                        reason: e.to_string(),
                    });
                }
            }
            _ => failures.push(VerifyFailure::ModeMismatch { index }),
        }
    }
    VerifyOutcome { failures }
}
