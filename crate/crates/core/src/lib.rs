//! Decreasing diagrams for finite labeled abstract rewrite systems.
//!
//! The crate is organised bottom-up:
//!
//! - [`multiset`]: label sets and multisets, down-sets, and the multiset
//!   extension of a strict order;
//! - [`measures`]: the lexicographic maximum measure and decreasingness of
//!   label quadruples;
//! - [`lars`]: labeled rewrite systems, sequences, conversions, peaks and
//!   diagrams;
//! - [`completion`]: completing arbitrary peaks into decreasing diagrams from
//!   local joining data (valley and conversion versions);
//! - [`analysis`]: brute-force confluence oracles, the local decreasingness
//!   search, precedence search, source labeling, and certificates;
//! - [`format`] and [`cli`]: the `.ars` text format and the command-line
//!   front end.

pub mod analysis;
pub mod cli;
pub mod completion;
pub mod format;
pub mod lars;
pub mod measures;
pub mod multiset;
pub mod symbol;

#[cfg(test)]
pub(crate) mod test_support;

pub use measures::{LabelQuad, LabelSeq, LdPrimeDecomposition};
pub use multiset::{LabelMultiset, LabelSet, Precedence, PrecedenceError};
pub use symbol::{Label, Obj};
