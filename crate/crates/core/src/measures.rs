//! The lexicographic maximum measure on label sequences and decreasingness
//! of label quadruples, including the explicit (LD′) shape of local
//! decreasingness and its constructive decomposition.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::multiset::{Generators, LabelMultiset, LabelSet, Precedence};
use crate::symbol::Label;

/// A finite, order-significant list of labels.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelSeq(Vec<Label>);

impl LabelSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: Label) -> Self {
        Self(vec![label])
    }

    pub fn as_slice(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Label> {
        self.0.iter()
    }

    pub fn concat(&self, other: &LabelSeq) -> LabelSeq {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Self(v)
    }

    /// `(self[..at], self[at..])`.
    pub fn split_at(&self, at: usize) -> (LabelSeq, LabelSeq) {
        let (a, b) = self.0.split_at(at);
        (Self(a.to_vec()), Self(b.to_vec()))
    }

    pub fn set_of(&self) -> LabelSet {
        self.0.iter().collect()
    }

    /// The multiset of all elements.
    pub fn multiset_of(&self) -> LabelMultiset {
        self.0.iter().collect()
    }
}

impl From<Vec<Label>> for LabelSeq {
    fn from(v: Vec<Label>) -> Self {
        Self(v)
    }
}

impl FromIterator<Label> for LabelSeq {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Debug for LabelSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Generators for LabelSeq {
    fn generators(&self) -> LabelSet {
        self.set_of()
    }
}

/// `|[]| = ∅` and `|α·σ| = {α} + (|σ| −s ↓α)`, evaluated from the right.
pub fn lexmax(prec: &Precedence, seq: &LabelSeq) -> LabelMultiset {
    seq.iter().rev().fold(LabelMultiset::new(), |rest, head| {
        LabelMultiset::singleton(head.clone()) + rest.diff_s(&prec.downset(head))
    })
}

/// Four label sequences laid out as a diagram: `top` (τ) and `left` (σ)
/// leave the common source, `right` (σ′) continues `top`, `bottom` (τ′)
/// continues `left`, and both joins meet.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelQuad {
    pub top: LabelSeq,
    pub left: LabelSeq,
    pub right: LabelSeq,
    pub bottom: LabelSeq,
}

impl LabelQuad {
    pub fn new(top: LabelSeq, left: LabelSeq, right: LabelSeq, bottom: LabelSeq) -> Self {
        Self {
            top,
            left,
            right,
            bottom,
        }
    }

    /// Swaps the roles of the two peak sides.
    pub fn transpose(&self) -> LabelQuad {
        LabelQuad::new(
            self.left.clone(),
            self.top.clone(),
            self.bottom.clone(),
            self.right.clone(),
        )
    }

    pub fn is_decreasing(&self, prec: &Precedence) -> bool {
        decreasing(prec, &self.top, &self.left, &self.right, &self.bottom)
    }
}

impl fmt::Debug for LabelQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}, {:?}, {:?}, {:?})",
            self.top, self.left, self.right, self.bottom
        )
    }
}

/// `|σ·τ′| ⪯mul |τ| + |σ|` and `|τ·σ′| ⪯mul |τ| + |σ|`.
pub fn decreasing(
    prec: &Precedence,
    top: &LabelSeq,
    left: &LabelSeq,
    right: &LabelSeq,
    bottom: &LabelSeq,
) -> bool {
    let peak = lexmax(prec, top) + lexmax(prec, left);
    prec.mul_leq(&lexmax(prec, &left.concat(bottom)), &peak)
        && prec.mul_leq(&lexmax(prec, &top.concat(right)), &peak)
}

/// Equivalent form: `|τ′| −s ↓σ ⪯mul |τ|` and `|σ′| −s ↓τ ⪯mul |σ|`.
pub fn decreasing_alt(
    prec: &Precedence,
    top: &LabelSeq,
    left: &LabelSeq,
    right: &LabelSeq,
    bottom: &LabelSeq,
) -> bool {
    prec.mul_leq(
        &lexmax(prec, bottom).diff_s(&prec.downset(left)),
        &lexmax(prec, top),
    ) && prec.mul_leq(
        &lexmax(prec, right).diff_s(&prec.downset(top)),
        &lexmax(prec, left),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PasteError {
    #[error("shared edge differs: {first:?} vs {second:?}")]
    EdgeMismatch { first: LabelSeq, second: LabelSeq },
    #[error("{which} quadruple {quad:?} is not decreasing")]
    NotDecreasing {
        which: &'static str,
        quad: LabelQuad,
    },
}

fn require_decreasing(
    prec: &Precedence,
    which: &'static str,
    quad: &LabelQuad,
) -> Result<(), PasteError> {
    if quad.is_decreasing(prec) {
        Ok(())
    } else {
        Err(PasteError::NotDecreasing {
            which,
            quad: quad.clone(),
        })
    }
}

/// Pastes `second` to the right of `first` along `first.right ==
/// second.left`: `(τ, σ, σ′, τ′)` and `(υ, σ′, σ″, υ′)` give
/// `(τυ, σ, σ″, τ′υ′)`.
pub fn paste(
    prec: &Precedence,
    first: &LabelQuad,
    second: &LabelQuad,
) -> Result<LabelQuad, PasteError> {
    if first.right != second.left {
        return Err(PasteError::EdgeMismatch {
            first: first.right.clone(),
            second: second.left.clone(),
        });
    }
    require_decreasing(prec, "first", first)?;
    require_decreasing(prec, "second", second)?;
    Ok(LabelQuad::new(
        first.top.concat(&second.top),
        first.left.clone(),
        second.right.clone(),
        first.bottom.concat(&second.bottom),
    ))
}

/// Mirrored pasting: `second` below `first` along `first.bottom ==
/// second.top`.
pub fn paste_below(
    prec: &Precedence,
    first: &LabelQuad,
    second: &LabelQuad,
) -> Result<LabelQuad, PasteError> {
    paste(prec, &first.transpose(), &second.transpose()).map(|q| q.transpose())
}

/// For a decreasing `(τ, σ, σ′, _)` with `τ` non-empty:
/// `|σ′| + |υ| ≺mul |σ| + |τ·υ|`.
pub fn hypothesis_decrease_holds(
    prec: &Precedence,
    top: &LabelSeq,
    left: &LabelSeq,
    right: &LabelSeq,
    extension: &LabelSeq,
) -> bool {
    prec.mul_less(
        &(lexmax(prec, right) + lexmax(prec, extension)),
        &(lexmax(prec, left) + lexmax(prec, &top.concat(extension))),
    )
}

/// Local decreasingness of a peak `β` (top), `α` (left) joined by `σ′`
/// (right) and `τ′` (bottom): `|σ′| −s ↓β ⪯mul {α}` and
/// `|τ′| −s ↓α ⪯mul {β}`.
pub fn ld_check(
    prec: &Precedence,
    alpha: &Label,
    beta: &Label,
    right: &LabelSeq,
    bottom: &LabelSeq,
) -> bool {
    prec.mul_leq(
        &lexmax(prec, right).diff_s(&prec.downset(beta)),
        &LabelMultiset::singleton(alpha.clone()),
    ) && prec.mul_leq(
        &lexmax(prec, bottom).diff_s(&prec.downset(alpha)),
        &LabelMultiset::singleton(beta.clone()),
    )
}

/// A join sequence cut into `first ++ middle ++ last`, with `middle` of
/// length at most one.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LdPrimeDecomposition {
    pub first: LabelSeq,
    pub middle: LabelSeq,
    pub last: LabelSeq,
}

impl LdPrimeDecomposition {
    pub fn new(first: LabelSeq, middle: LabelSeq, last: LabelSeq) -> Self {
        Self {
            first,
            middle,
            last,
        }
    }

    pub fn concat(&self) -> LabelSeq {
        self.first.concat(&self.middle).concat(&self.last)
    }
}

impl fmt::Debug for LdPrimeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.first, self.middle, self.last)
    }
}

/// The σ-side of the explicit shape: `first ⊆ ↓β`, `middle` is empty or
/// `[α]`, `last ⊆ ↓{α, β}`. The τ-side is the same call with `α` and `β`
/// exchanged (see [`ld_prime_check_both`]).
pub fn ld_prime_check(
    prec: &Precedence,
    alpha: &Label,
    beta: &Label,
    dec: &LdPrimeDecomposition,
) -> bool {
    ld_prime_check_seq(prec, alpha, &LabelSeq::single(beta.clone()), dec)
}

/// Both sides of the explicit shape for the local peak (`β` top, `α` left).
pub fn ld_prime_check_both(
    prec: &Precedence,
    alpha: &Label,
    beta: &Label,
    right: &LdPrimeDecomposition,
    bottom: &LdPrimeDecomposition,
) -> bool {
    ld_prime_check(prec, alpha, beta, right) && ld_prime_check(prec, beta, alpha, bottom)
}

/// The shape with the single label `β` generalised to a sequence `τ`:
/// `first ⊆ ↓τ`, `middle` empty or `[α]`, `last ⊆ ↓(α·τ)`.
pub fn ld_prime_check_seq(
    prec: &Precedence,
    alpha: &Label,
    tau: &LabelSeq,
    dec: &LdPrimeDecomposition,
) -> bool {
    let below_tau = prec.downset(tau);
    let mut gens = tau.set_of();
    gens.insert(alpha.clone());
    let below_both = prec.downset(&gens);
    dec.first.set_of().is_subset(&below_tau)
        && dec.middle.len() <= 1
        && dec.middle.iter().all(|m| m == alpha)
        && dec.last.set_of().is_subset(&below_both)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    /// The sequence is not locally decreasing: `excess` is `|σ′| −s ↓τ`,
    /// which should have been `⪯mul {α}`.
    #[error("sequence {seq:?} is not locally decreasing for {alpha}: excess {excess:?}")]
    NotLocallyDecreasing {
        alpha: Label,
        seq: LabelSeq,
        excess: LabelMultiset,
    },
}

/// Splits `σ′` into the explicit shape for the peak `β` (top), `α` (left).
pub fn ld_decompose(
    prec: &Precedence,
    alpha: &Label,
    beta: &Label,
    right: &LabelSeq,
) -> Result<LdPrimeDecomposition, DecomposeError> {
    ld_decompose_seqlabels(prec, alpha, &LabelSeq::single(beta.clone()), right)
}

/// As [`ld_decompose`] with `↓β` replaced by `↓τ`.
///
/// If `α` survives in `|σ′| −s ↓τ`, the split is at the leftmost
/// occurrence of `α` whose prefix does not dominate it; otherwise the whole
/// sequence is the last part.
pub fn ld_decompose_seqlabels(
    prec: &Precedence,
    alpha: &Label,
    tau: &LabelSeq,
    right: &LabelSeq,
) -> Result<LdPrimeDecomposition, DecomposeError> {
    let excess = lexmax(prec, right).diff_s(&prec.downset(tau));
    if !prec.mul_leq(&excess, &LabelMultiset::singleton(alpha.clone())) {
        return Err(DecomposeError::NotLocallyDecreasing {
            alpha: alpha.clone(),
            seq: right.clone(),
            excess,
        });
    }
    if !excess.contains(alpha) {
        return Ok(LdPrimeDecomposition::new(
            LabelSeq::new(),
            LabelSeq::new(),
            right.clone(),
        ));
    }
    let items = right.as_slice();
    let at = (0..items.len())
        .find(|&i| items[i] == *alpha && !prec.downset(&items[..i]).contains(alpha))
        .expect("a label of the lexmax measure has an undominated occurrence");
    Ok(LdPrimeDecomposition::new(
        LabelSeq::from(items[..at].to_vec()),
        LabelSeq::single(alpha.clone()),
        LabelSeq::from(items[at + 1..].to_vec()),
    ))
}
