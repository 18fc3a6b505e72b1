//! Brute-force oracles and end-to-end checks: confluence by reachability,
//! the local decreasingness search, precedence search, source labeling of
//! terminating systems, and self-contained certificates.

mod certificate;
mod newman;
mod oracle;
mod precedence_search;
mod search;

use serde::{Deserialize, Serialize};

pub use certificate::{
    certify, certify_report, verify, verify_certificate, Certificate, CertifyError, JoinData,
    PeakJoin, VerifyFailure, VerifyOutcome,
};
pub use newman::{newman_labeling, NewmanError};
pub use oracle::{
    confluent_oracle, find_cycle, joinable_oracle, local_confluence_counterexample, reachability,
    reachable,
};
pub use precedence_search::{
    find_precedence, find_precedence_with_cap, strict_orders, PrecedenceSearchError,
    DEFAULT_LABEL_CAP,
};
pub use search::{
    check_locally_decreasing, check_locally_decreasing_with_budget, LdReport, PeakReport,
    PeakStatus, Witness,
};

/// Which shape of local join is required.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Joins are valleys.
    Valley,
    /// Joins may use conversions.
    Conv,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Valley => "valley",
            Mode::Conv => "conv",
        })
    }
}
