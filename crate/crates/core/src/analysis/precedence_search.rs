//! Exhaustive search for a precedence under which a system is locally
//! decreasing.

use thiserror::Error;

use super::search::check_locally_decreasing;
use super::Mode;
use crate::lars::LabeledArs;
use crate::multiset::Precedence;
use crate::symbol::Label;

/// Label sets larger than this are rejected by [`find_precedence`].
pub const DEFAULT_LABEL_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrecedenceSearchError {
    #[error("{labels} labels exceed the search cap of {cap}")]
    CapExceeded { labels: usize, cap: usize },
}

/// Strict partial orders on `labels`, as closed pair sets, in order of
/// size and then bitmask; the empty order comes first.
pub fn strict_orders(labels: &[Label]) -> Vec<Precedence> {
    let n = labels.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut masks: Vec<u64> = (0..1u64 << pairs.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut out = Vec::new();
    for mask in masks {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !rel[i][j] || (0..n).all(|k| !rel[j][k] || rel[i][k])));
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| !(rel[i][j] && rel[j][i])));
        if !(transitive && antisymmetric) {
            continue;
        }
        let chosen = pairs
            .iter()
            .filter(|&&(i, j)| rel[i][j])
            .map(|&(i, j)| (labels[i].clone(), labels[j].clone()));
        out.push(Precedence::from_closed(chosen).expect("checked closed and acyclic"));
    }
    out
}

/// The first strict partial order on the system's labels under which every
/// local peak has a join of the explicit shape.
pub fn find_precedence(
    ars: &LabeledArs,
    mode: Mode,
) -> Result<Option<Precedence>, PrecedenceSearchError> {
    find_precedence_with_cap(ars, mode, DEFAULT_LABEL_CAP)
}

pub fn find_precedence_with_cap(
    ars: &LabeledArs,
    mode: Mode,
    cap: usize,
) -> Result<Option<Precedence>, PrecedenceSearchError> {
    let labels: Vec<Label> = ars.labels().into_iter().collect();
    if labels.len() > cap {
        return Err(PrecedenceSearchError::CapExceeded {
            labels: labels.len(),
            cap,
        });
    }
    Ok(strict_orders(&labels)
        .into_iter()
        .find(|p| check_locally_decreasing(ars, p, mode).all_decreasing()))
}
