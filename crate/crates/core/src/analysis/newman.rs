//! Source labeling of terminating, locally confluent systems.

use thiserror::Error;

use super::oracle::{find_cycle, local_confluence_counterexample, reachability};
use crate::lars::{LabeledArs, Step, UnlabeledArs};
use crate::multiset::Precedence;
use crate::symbol::{Label, Obj};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewmanError {
    #[error("system does not terminate: cycle {0:?}")]
    NonTerminating(Vec<Obj>),
    #[error("system is not locally confluent: {0} -> {1} and {0} -> {2} have no common reduct")]
    NotLocallyConfluent(Obj, Obj, Obj),
}

/// Labels every step by its source object and orders labels by proper
/// reachability: `y ≺ x` whenever `x →⁺ y`.
pub fn newman_labeling(ars: &UnlabeledArs) -> Result<(LabeledArs, Precedence), NewmanError> {
    if let Some(cycle) = find_cycle(ars) {
        return Err(NewmanError::NonTerminating(cycle));
    }
    if let Some((a, b, c)) = local_confluence_counterexample(ars) {
        return Err(NewmanError::NotLocallyConfluent(a, b, c));
    }
    let labeled = ars
        .pairs()
        .map(|(a, b)| Step::new(a.clone(), Label::new(a.as_str()), b.clone()))
        .collect();
    let pairs = reachability(ars).into_iter().flat_map(|(x, below)| {
        below
            .into_iter()
            .filter(|y| *y != x)
            .map(|y| (Label::new(y.as_str()), Label::new(x.as_str())))
            .collect::<Vec<_>>()
    });
    let prec = Precedence::from_closed(pairs).expect("reachability of a terminating system");
    Ok((labeled, prec))
}
