//! Shorthand constructors and proptest strategies shared by unit tests.

use proptest::prelude::*;

use crate::measures::LabelSeq;
use crate::multiset::{LabelMultiset, LabelSet, Precedence};
use crate::symbol::{Label, Obj};

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn l(name: &str) -> Label {
    Label::new(name)
}

pub fn o(name: &str) -> Obj {
    Obj::new(name)
}

pub fn set(names: &[&str]) -> LabelSet {
    names.iter().map(|n| l(n)).collect()
}

pub fn ms(names: &[&str]) -> LabelMultiset {
    names.iter().map(|n| l(n)).collect()
}

pub fn seq(names: &[&str]) -> LabelSeq {
    names.iter().map(|n| l(n)).collect()
}

/// `pairs` are `(smaller, larger)`; closed transitively.
pub fn prec(pairs: &[(&str, &str)]) -> Precedence {
    Precedence::from_covering(pairs.iter().map(|(a, b)| (l(a), l(b)))).unwrap()
}

/// A random strict partial order on the first `n` names: pairs are drawn
/// along a random linear order, then closed.
pub fn precedence(n: usize) -> impl Strategy<Value = Precedence> {
    let order = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
    (order, prop::collection::vec(any::<bool>(), n * n)).prop_map(move |(order, flags)| {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if flags[i * n + j] {
                    pairs.push((l(NAMES[order[i]]), l(NAMES[order[j]])));
                }
            }
        }
        Precedence::from_covering(pairs).unwrap()
    })
}

pub fn label(n: usize) -> impl Strategy<Value = Label> {
    (0..n).prop_map(|i| l(NAMES[i]))
}

pub fn multiset(n: usize, max: usize) -> impl Strategy<Value = LabelMultiset> {
    prop::collection::vec(label(n), 0..=max).prop_map(|v| v.into_iter().collect())
}

pub fn label_seq(n: usize, max: usize) -> impl Strategy<Value = LabelSeq> {
    prop::collection::vec(label(n), 0..=max).prop_map(LabelSeq::from)
}

pub fn label_set(n: usize) -> impl Strategy<Value = LabelSet> {
    prop::collection::vec(label(n), 0..=n).prop_map(|v| v.into_iter().collect())
}

pub fn prec_and_two_multisets(
    n: usize,
    max: usize,
) -> impl Strategy<Value = (Precedence, LabelMultiset, LabelMultiset)> {
    (precedence(n), multiset(n, max), multiset(n, max))
}

/// `s →ls t`, `s →ls u`, `t →lt v`, `u →lu v`.
pub fn newman_ars() -> crate::lars::LabeledArs {
    use crate::lars::Step;
    [
        Step::new("s", "ls", "t"),
        Step::new("s", "ls", "u"),
        Step::new("t", "lt", "v"),
        Step::new("u", "lu", "v"),
    ]
    .into_iter()
    .collect()
}

pub fn newman_prec() -> Precedence {
    prec(&[("lt", "ls"), ("lu", "ls")])
}

/// Builds a sequence from `start` and `(label, target)` pairs.
pub fn path(start: &str, rest: &[(&str, &str)]) -> crate::lars::RewriteSeq {
    crate::lars::RewriteSeq::from_path(start, rest)
}

pub fn peak(left: crate::lars::RewriteSeq, right: crate::lars::RewriteSeq) -> crate::lars::Peak {
    crate::lars::Peak::new(left, right).unwrap()
}
