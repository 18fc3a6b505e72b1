//! Finite label sets and multisets, down-sets, and the multiset extension of
//! a strict order on labels.
//!
//! Sets and multisets are distinct types; converting between them is always
//! explicit (`LabelMultiset::set_of`, `LabelMultiset::from_set`).

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::symbol::Label;

/// A finite set of labels.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LabelSet(BTreeSet<Label>);

impl LabelSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: Label) -> Self {
        Self(BTreeSet::from([label]))
    }

    pub fn insert(&mut self, label: Label) -> bool {
        self.0.insert(label)
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.0.contains(label)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> + '_ {
        self.0.iter()
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        Self(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &LabelSet) -> LabelSet {
        Self(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &LabelSet) -> LabelSet {
        Self(self.0.difference(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &LabelSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<Label> for LabelSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<&'a Label> for LabelSet {
    fn from_iter<I: IntoIterator<Item = &'a Label>>(iter: I) -> Self {
        Self(iter.into_iter().cloned().collect())
    }
}

impl IntoIterator for LabelSet {
    type Item = Label;
    type IntoIter = std::collections::btree_set::IntoIter<Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A finite multiset of labels. Only positive counts are stored, so
/// structural equality is count-wise equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelMultiset(BTreeMap<Label, BigUint>);

impl LabelMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: Label) -> Self {
        Self(BTreeMap::from([(label, BigUint::one())]))
    }

    /// Every element of `set` with multiplicity one.
    pub fn from_set(set: &LabelSet) -> Self {
        set.iter().cloned().collect()
    }

    pub fn insert(&mut self, label: Label) {
        self.insert_many(label, BigUint::one());
    }

    pub fn insert_many(&mut self, label: Label, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.0.entry(label).or_default() += count;
    }

    /// Multiplicity of `label` (zero when absent).
    pub fn count(&self, label: &Label) -> BigUint {
        self.0.get(label).cloned().unwrap_or_default()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.0.contains_key(label)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of elements, counted with multiplicity.
    pub fn size(&self) -> BigUint {
        self.0.values().sum()
    }

    /// Distinct labels with their (positive) multiplicities.
    pub fn counts(&self) -> impl Iterator<Item = (&Label, &BigUint)> + '_ {
        self.0.iter()
    }

    /// The set of distinct elements.
    pub fn set_of(&self) -> LabelSet {
        self.0.keys().collect()
    }

    /// Pointwise minimum.
    pub fn intersection(&self, other: &LabelMultiset) -> LabelMultiset {
        let mut out = BTreeMap::new();
        for (label, count) in &self.0 {
            if let Some(theirs) = other.0.get(label) {
                out.insert(label.clone(), count.min(theirs).clone());
            }
        }
        Self(out)
    }

    /// Truncated difference: counts of `other` are subtracted, never going
    /// below zero.
    pub fn difference(&self, other: &LabelMultiset) -> LabelMultiset {
        let mut out = BTreeMap::new();
        for (label, count) in &self.0 {
            match other.0.get(label) {
                Some(theirs) if theirs >= count => {}
                Some(theirs) => {
                    out.insert(label.clone(), count - theirs);
                }
                None => {
                    out.insert(label.clone(), count.clone());
                }
            }
        }
        Self(out)
    }

    /// Sub-multiset test (`M ≤ N`).
    pub fn is_submultiset(&self, other: &LabelMultiset) -> bool {
        self.0
            .iter()
            .all(|(label, count)| other.0.get(label).is_some_and(|c| c >= count))
    }

    /// Removes every occurrence of the labels in `set`.
    pub fn diff_s(&self, set: &LabelSet) -> LabelMultiset {
        Self(
            self.0
                .iter()
                .filter(|(label, _)| !set.contains(label))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        )
    }

    /// Keeps exactly the occurrences of the labels in `set`.
    pub fn cap_s(&self, set: &LabelSet) -> LabelMultiset {
        Self(
            self.0
                .iter()
                .filter(|(label, _)| set.contains(label))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        )
    }

    /// Elements expanded with multiplicity, in label order. Only meant for
    /// small multisets; panics if a count does not fit in `usize`.
    pub fn elements(&self) -> Vec<Label> {
        let mut out = Vec::new();
        for (label, count) in &self.0 {
            let n = count.to_usize().expect("multiset count exceeds usize");
            out.extend(std::iter::repeat_n(label.clone(), n));
        }
        out
    }
}

/// Removes every occurrence in `m` of the labels in `s`.
pub fn diff_s(m: &LabelMultiset, s: &LabelSet) -> LabelMultiset {
    m.diff_s(s)
}

/// Keeps the occurrences in `m` of the labels in `s`.
pub fn cap_s(m: &LabelMultiset, s: &LabelSet) -> LabelMultiset {
    m.cap_s(s)
}

impl Add for LabelMultiset {
    type Output = LabelMultiset;

    fn add(mut self, rhs: LabelMultiset) -> LabelMultiset {
        for (label, count) in rhs.0 {
            self.insert_many(label, count);
        }
        self
    }
}

impl Add<&LabelMultiset> for &LabelMultiset {
    type Output = LabelMultiset;

    fn add(self, rhs: &LabelMultiset) -> LabelMultiset {
        self.clone() + rhs.clone()
    }
}

impl FromIterator<Label> for LabelMultiset {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        let mut m = Self::new();
        for label in iter {
            m.insert(label);
        }
        m
    }
}

impl<'a> FromIterator<&'a Label> for LabelMultiset {
    fn from_iter<I: IntoIterator<Item = &'a Label>>(iter: I) -> Self {
        iter.into_iter().cloned().collect()
    }
}

impl fmt::Debug for LabelMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{#")?;
        let mut first = true;
        for (label, count) in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if count.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{label}^{count}")?;
            }
        }
        f.write_str("#}")
    }
}

/// Serialized as an object from label to count. Counts that fit in a `u64`
/// are JSON numbers, larger ones decimal strings.
impl Serialize for LabelMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (label, count) in &self.0 {
            match count.to_u64() {
                Some(n) => map.serialize_entry(label, &n)?,
                None => map.serialize_entry(label, &count.to_string())?,
            }
        }
        map.end()
    }
}

/// Anything that generates a down-set through its set of elements.
pub trait Generators {
    fn generators(&self) -> LabelSet;
}

impl Generators for Label {
    fn generators(&self) -> LabelSet {
        LabelSet::singleton(self.clone())
    }
}

impl Generators for LabelSet {
    fn generators(&self) -> LabelSet {
        self.clone()
    }
}

impl Generators for LabelMultiset {
    fn generators(&self) -> LabelSet {
        self.set_of()
    }
}

impl Generators for [Label] {
    fn generators(&self) -> LabelSet {
        self.iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrecedenceError {
    #[error("precedence has a cycle through label `{0}`")]
    Cycle(Label),
    #[error("precedence is not irreflexive: `{0} < {0}`")]
    Reflexive(Label),
    #[error("precedence is not transitive: `{0} < {1}` and `{1} < {2}` but not `{0} < {2}`")]
    NotTransitive(Label, Label, Label),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("multiset search budget of {budget} states exceeded")]
    BudgetExceeded { budget: usize },
}

/// Default state budget for [`Precedence::mult_less`].
pub const DEFAULT_MULT_BUDGET: usize = 200_000;

/// A strict partial order on labels, stored as its full set of
/// `(smaller, larger)` pairs.
///
/// Every constructor guarantees the pair set is irreflexive and transitive,
/// which on a finite set also makes it acyclic and hence well-founded.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Precedence {
    pairs: BTreeSet<(Label, Label)>,
    below: BTreeMap<Label, LabelSet>,
}

impl Precedence {
    /// The empty order.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Takes the transitive closure of `pairs` (each `(x, y)` meaning
    /// `x ≺ y`) and rejects the result if it relates any label to itself.
    pub fn from_covering<I>(pairs: I) -> Result<Self, PrecedenceError>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let mut succ: BTreeMap<Label, BTreeSet<Label>> = BTreeMap::new();
        for (lo, hi) in pairs {
            succ.entry(lo).or_default().insert(hi);
        }
        let mut closed = BTreeSet::new();
        for start in succ.keys() {
            let mut seen = BTreeSet::new();
            let mut stack: Vec<&Label> = succ[start].iter().collect();
            while let Some(next) = stack.pop() {
                if !seen.insert(next.clone()) {
                    continue;
                }
                if let Some(more) = succ.get(next) {
                    stack.extend(more.iter());
                }
            }
            if seen.contains(start) {
                return Err(PrecedenceError::Cycle(start.clone()));
            }
            closed.extend(seen.into_iter().map(|hi| (start.clone(), hi)));
        }
        Ok(Self::from_valid_pairs(closed))
    }

    /// Accepts `pairs` only if it already is a strict partial order.
    pub fn from_closed<I>(pairs: I) -> Result<Self, PrecedenceError>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let pairs: BTreeSet<(Label, Label)> = pairs.into_iter().collect();
        for (lo, hi) in &pairs {
            if lo == hi {
                return Err(PrecedenceError::Reflexive(lo.clone()));
            }
        }
        for (x, y) in &pairs {
            for (y2, z) in pairs.range((y.clone(), Label::new(""))..) {
                if y2 != y {
                    break;
                }
                if !pairs.contains(&(x.clone(), z.clone())) {
                    return Err(PrecedenceError::NotTransitive(
                        x.clone(),
                        y.clone(),
                        z.clone(),
                    ));
                }
            }
        }
        Ok(Self::from_valid_pairs(pairs))
    }

    fn from_valid_pairs(pairs: BTreeSet<(Label, Label)>) -> Self {
        let mut below: BTreeMap<Label, LabelSet> = BTreeMap::new();
        for (lo, hi) in &pairs {
            below.entry(hi.clone()).or_default().insert(lo.clone());
        }
        Self { pairs, below }
    }

    /// `lo ≺ hi`.
    pub fn less(&self, lo: &Label, hi: &Label) -> bool {
        self.below.get(hi).is_some_and(|s| s.contains(lo))
    }

    /// All `(smaller, larger)` pairs, in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = &(Label, Label)> + '_ {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Labels mentioned by some pair.
    pub fn labels(&self) -> LabelSet {
        self.pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect()
    }

    /// The covering relation: pairs not implied by two others.
    pub fn covering_pairs(&self) -> Vec<(Label, Label)> {
        self.pairs
            .iter()
            .filter(|(lo, hi)| {
                !self
                    .below
                    .get(hi)
                    .is_some_and(|mid| mid.iter().any(|m| self.less(lo, m)))
            })
            .cloned()
            .collect()
    }

    /// A linear extension of the order on `labels` (smaller labels first),
    /// ties broken by label name.
    pub fn linear_extension(&self, labels: &LabelSet) -> Vec<Label> {
        let mut remaining: BTreeSet<Label> = labels.union(&self.labels()).into_iter().collect();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let next = remaining
                .iter()
                .find(|l| !remaining.iter().any(|o| self.less(o, l)))
                .cloned()
                .expect("strict partial order always has a minimal element");
            remaining.remove(&next);
            out.push(next);
        }
        out
    }

    /// `{β | ∃α ∈ g. β ≺ α}`.
    pub fn downset<G: Generators + ?Sized>(&self, g: &G) -> LabelSet {
        let mut out = LabelSet::new();
        for top in g.generators().iter() {
            if let Some(lower) = self.below.get(top) {
                for l in lower.iter() {
                    out.insert(l.clone());
                }
            }
        }
        out
    }

    /// Maximal-cancellation decomposition `(I, J, K)` with `m = I + K`,
    /// `n = I + J`, and `J`, `K` disjoint, when `set(K) ⊆ ↓J`.
    pub fn mul_decomposition(
        &self,
        m: &LabelMultiset,
        n: &LabelMultiset,
    ) -> Option<(LabelMultiset, LabelMultiset, LabelMultiset)> {
        let common = m.intersection(n);
        let k = m.difference(&common);
        let j = n.difference(&common);
        let dominated = k
            .set_of()
            .iter()
            .all(|small| j.set_of().iter().any(|big| self.less(small, big)));
        dominated.then_some((common, j, k))
    }

    /// Strict multiset extension `m ≺mul n`.
    pub fn mul_less(&self, m: &LabelMultiset, n: &LabelMultiset) -> bool {
        self.mul_decomposition(m, n)
            .is_some_and(|(_, j, _)| !j.is_empty())
    }

    /// Reflexive multiset extension `m ⪯mul n`.
    pub fn mul_leq(&self, m: &LabelMultiset, n: &LabelMultiset) -> bool {
        self.mul_decomposition(m, n).is_some()
    }

    /// One-step extension: `n` with one element replaced by finitely many
    /// strictly smaller ones yields `m`.
    pub fn mult1_less(&self, m: &LabelMultiset, n: &LabelMultiset) -> bool {
        n.set_of().iter().any(|a| {
            let rest = n.difference(&LabelMultiset::singleton(a.clone()));
            rest.is_submultiset(m) && m.difference(&rest).set_of().iter().all(|k| self.less(k, a))
        })
    }

    /// Transitive closure of [`Self::mult1_less`], by breadth-first search
    /// downward from `n`. Intermediate multisets are bounded by `m + n`
    /// pointwise, so the search space is finite. Oracle use only.
    pub fn mult_less(&self, m: &LabelMultiset, n: &LabelMultiset) -> Result<bool, OracleError> {
        self.mult_less_with_budget(m, n, DEFAULT_MULT_BUDGET)
    }

    pub fn mult_less_with_budget(
        &self,
        m: &LabelMultiset,
        n: &LabelMultiset,
        budget: usize,
    ) -> Result<bool, OracleError> {
        let cap = m + n;
        let mut seen: HashSet<LabelMultiset> = HashSet::new();
        let mut queue = VecDeque::from([n.clone()]);
        seen.insert(n.clone());
        while let Some(current) = queue.pop_front() {
            for a in current.set_of().iter() {
                let rest = current.difference(&LabelMultiset::singleton(a.clone()));
                // Room left for replacement elements below `a`.
                let room: Vec<(Label, usize)> = self
                    .downset(a)
                    .iter()
                    .filter_map(|l| {
                        let cap_l = cap.count(l).to_usize()?;
                        let used = rest.count(l).to_usize()?;
                        let free = cap_l.saturating_sub(used);
                        (free > 0).then(|| (l.clone(), free))
                    })
                    .collect();
                for extra in bounded_submultisets(&room) {
                    let next = &rest + &extra;
                    if next == *m {
                        return Ok(true);
                    }
                    if seen.insert(next.clone()) {
                        if seen.len() > budget {
                            return Err(OracleError::BudgetExceeded { budget });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(false)
    }
}

/// All multisets with `count(l) ≤ bound` for each `(l, bound)`.
fn bounded_submultisets(bounds: &[(Label, usize)]) -> Vec<LabelMultiset> {
    let mut out = vec![LabelMultiset::new()];
    for (label, bound) in bounds {
        let mut next = Vec::with_capacity(out.len() * (bound + 1));
        for base in &out {
            for c in 0..=*bound {
                let mut m = base.clone();
                m.insert_many(label.clone(), BigUint::from(c));
                next.push(m);
            }
        }
        out = next;
    }
    out
}

impl fmt::Debug for Precedence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (lo, hi)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{lo}<{hi}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Precedence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.pairs.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;
    use proptest::prelude::*;

    fn abc() -> Precedence {
        prec(&[("c", "b"), ("b", "a"), ("c", "a")])
    }

    #[test]
    fn downset_examples() {
        let p = abc();
        assert!(p.downset(&LabelSet::new()).is_empty());
        assert_eq!(p.downset(&set(&["a"])), set(&["b", "c"]));
        assert_eq!(p.downset(&set(&["b", "c"])), set(&["c"]));
        assert_eq!(p.downset(&l("a")), set(&["b", "c"]));
        assert_eq!(p.downset(&ms(&["b", "b"])), set(&["c"]));
    }

    #[test]
    fn diff_and_cap_examples() {
        let m = ms(&["a", "a", "b"]);
        assert_eq!(diff_s(&m, &set(&["a"])), ms(&["b"]));
        assert_eq!(diff_s(&m, &LabelSet::new()), m);
        assert_eq!(
            diff_s(&LabelMultiset::new(), &set(&["a"])),
            LabelMultiset::new()
        );
        assert_eq!(cap_s(&m, &set(&["a"])), ms(&["a", "a"]));
        assert_eq!(cap_s(&m, &LabelSet::new()), LabelMultiset::new());
        assert_eq!(cap_s(&ms(&["a", "b"]), &set(&["a", "b"])), ms(&["a", "b"]));
    }

    #[test]
    fn mul_examples() {
        let p = abc();
        assert!(p.mul_less(&ms(&["b", "c"]), &ms(&["a"])));
        assert!(!p.mul_less(&ms(&["a", "b"]), &ms(&["a", "b"])));
        let ba = prec(&[("b", "a")]);
        assert!(!ba.mul_less(&ms(&["a"]), &ms(&["b"])));
        assert!(p.mul_leq(&ms(&["a", "c"]), &ms(&["a", "c"])));
        assert!(p.mul_leq(&ms(&["b", "c"]), &ms(&["a"])));
        assert!(!p.mul_leq(&ms(&["a"]), &LabelMultiset::new()));
    }

    #[test]
    fn mult_examples() {
        let p = abc();
        assert!(p.mult1_less(&ms(&["b", "c"]), &ms(&["a"])));
        assert!(!p.mult_less(&ms(&["a"]), &ms(&["a"])).unwrap());
        assert!(p.mult_less(&ms(&["b", "b", "c"]), &ms(&["a"])).unwrap());
        // two one-step replacements are needed when the bigger side has two tops
        assert!(!p.mult1_less(&ms(&["b", "c"]), &ms(&["a", "a"])));
        assert!(p.mult_less(&ms(&["b", "c"]), &ms(&["a", "a"])).unwrap());
    }

    #[test]
    fn mult_budget_is_reported() {
        let p = abc();
        let err = p
            .mult_less_with_budget(&ms(&["c", "c", "c", "c"]), &ms(&["a", "a", "a"]), 3)
            .unwrap_err();
        assert_eq!(err, OracleError::BudgetExceeded { budget: 3 });
    }

    #[test]
    fn precedence_construction() {
        let p = Precedence::from_covering([(l("c"), l("b")), (l("b"), l("a"))]).unwrap();
        assert!(p.less(&l("c"), &l("a")));
        assert_eq!(p.len(), 3);
        assert_eq!(p.covering_pairs(), vec![(l("b"), l("a")), (l("c"), l("b"))]);
        assert_eq!(
            Precedence::from_covering([(l("a"), l("a"))]),
            Err(PrecedenceError::Cycle(l("a")))
        );
        assert!(matches!(
            Precedence::from_covering([(l("a"), l("b")), (l("b"), l("a"))]),
            Err(PrecedenceError::Cycle(_))
        ));
        assert_eq!(
            Precedence::from_closed([(l("c"), l("b")), (l("b"), l("a"))]),
            Err(PrecedenceError::NotTransitive(l("c"), l("b"), l("a")))
        );
        assert_eq!(
            Precedence::from_closed([(l("a"), l("a"))]),
            Err(PrecedenceError::Reflexive(l("a")))
        );
        assert_eq!(
            Precedence::from_closed(abc().pairs().cloned()).unwrap(),
            abc()
        );
    }

    #[test]
    fn linear_extension_respects_order() {
        let p = abc();
        let order = p.linear_extension(&set(&["a", "b", "c", "d"]));
        assert_eq!(order, vec![l("c"), l("b"), l("a"), l("d")]);
    }

    #[test]
    fn multiset_serializes_as_count_map() {
        let json = serde_json::to_string(&ms(&["b", "a", "b"])).unwrap();
        assert_eq!(json, r#"{"a":1,"b":2}"#);
    }

    proptest! {
        #[test]
        fn leq_is_reflexive_closure_of_less(
            (p, m, n) in prec_and_two_multisets(4, 5)
        ) {
            prop_assert_eq!(p.mul_leq(&m, &n), m == n || p.mul_less(&m, &n));
        }

        #[test]
        fn decomposition_is_disjoint_and_exact(
            (p, m, n) in prec_and_two_multisets(4, 5)
        ) {
            if let Some((i, j, k)) = p.mul_decomposition(&m, &n) {
                prop_assert_eq!(&i + &k, m);
                prop_assert_eq!(&i + &j, n);
                prop_assert!(j.intersection(&k).is_empty());
            }
        }

        #[test]
        fn cap_plus_diff_restores(
            (m, s) in (multiset(5, 8), label_set(5))
        ) {
            prop_assert_eq!(&cap_s(&m, &s) + &diff_s(&m, &s), m);
        }
    }
}
