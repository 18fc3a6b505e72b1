//! Searching joins of the explicit locally decreasing shape for every local
//! peak.
//!
//! From each end of a local peak the search walks a two-phase automaton:
//! while in the first phase, labels below the own label keep the phase and
//! either the other label (as a single forward step) or a label below both
//! moves to the second phase; in the second phase only labels below both are
//! allowed. Every automaton state is accepting, so the two ends are joinable
//! in the required shape exactly when their reachable object sets meet.
//! Visited sets are kept per `(object, phase)`, so the search terminates on
//! every finite system.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::Mode;
use crate::completion::{
    CompletionError, ConvJoin, ConvJoinSide, LocalCompletionMap, LocalConvMap, ValleyJoin,
};
use crate::lars::{ConvStep, Conversion, LabeledArs, Peak, RewriteSeq, Step};
use crate::measures::LdPrimeDecomposition;
use crate::multiset::{LabelSet, Precedence};
use crate::symbol::{Label, Obj};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeakStatus {
    Decreasing,
    NotDecreasing,
    SearchExhausted,
}

/// A join found for one local peak.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Valley {
        join: ValleyJoin,
        right_parts: LdPrimeDecomposition,
        bottom_parts: LdPrimeDecomposition,
    },
    Conv(ConvJoin),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeakReport {
    pub peak: Peak,
    pub status: PeakStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Per-peak results, sorted by peak.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdReport {
    pub mode: Mode,
    pub peaks: Vec<PeakReport>,
}

impl LdReport {
    pub fn all_decreasing(&self) -> bool {
        self.peaks
            .iter()
            .all(|p| p.status == PeakStatus::Decreasing)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PeakReport> + '_ {
        self.peaks
            .iter()
            .filter(|p| p.status != PeakStatus::Decreasing)
    }

    /// The valley witnesses as a validated local completion map.
    pub fn local_map(
        &self,
        ars: &LabeledArs,
        prec: &Precedence,
    ) -> Result<LocalCompletionMap, CompletionError> {
        let entries = self
            .peaks
            .iter()
            .filter_map(|p| match &p.witness {
                Some(Witness::Valley { join, .. }) => Some((p.peak.clone(), join.clone())),
                _ => None,
            })
            .collect();
        LocalCompletionMap::new(ars, prec, entries)
    }

    /// The conversion witnesses, or embedded valley witnesses, as a
    /// validated conversion map.
    pub fn conv_map(
        &self,
        ars: &LabeledArs,
        prec: &Precedence,
    ) -> Result<LocalConvMap, CompletionError> {
        let mut entries = BTreeMap::new();
        for p in &self.peaks {
            match &p.witness {
                Some(Witness::Conv(join)) => {
                    entries.insert(p.peak.clone(), join.clone());
                }
                Some(Witness::Valley { join, .. }) => {
                    entries.insert(p.peak.clone(), ConvJoin::from_valley(prec, &p.peak, join)?);
                }
                None => {}
            }
        }
        LocalConvMap::new(ars, prec, entries)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Part {
    First,
    Middle,
    Last,
}

type State = (Obj, bool);

struct Adjacency<'a> {
    out: BTreeMap<&'a Obj, Vec<&'a Step>>,
    into: BTreeMap<&'a Obj, Vec<&'a Step>>,
}

impl<'a> Adjacency<'a> {
    fn new(ars: &'a LabeledArs) -> Self {
        let mut out: BTreeMap<&Obj, Vec<&Step>> = BTreeMap::new();
        let mut into: BTreeMap<&Obj, Vec<&Step>> = BTreeMap::new();
        for s in ars.steps() {
            out.entry(&s.source).or_default().push(s);
            into.entry(&s.target).or_default().push(s);
        }
        Self { out, into }
    }
}

struct Side {
    /// BFS predecessor of each reached state.
    parent: BTreeMap<State, Option<(State, ConvStep, Part)>>,
    dist: BTreeMap<State, usize>,
}

impl Side {
    /// The closest state at `obj`, first phase preferred on ties.
    fn best(&self, obj: &Obj) -> Option<(usize, State)> {
        [(obj.clone(), false), (obj.clone(), true)]
            .into_iter()
            .filter_map(|s| self.dist.get(&s).map(|d| (*d, s)))
            .min_by_key(|(d, s)| (*d, s.1))
    }

    fn path(&self, mut state: State) -> (Obj, Vec<(ConvStep, Part)>) {
        let mut steps = Vec::new();
        while let Some(Some((prev, step, part))) = self.parent.get(&state) {
            steps.push((step.clone(), *part));
            state = prev.clone();
        }
        steps.reverse();
        (state.0, steps)
    }
}

struct Search<'a> {
    adj: Adjacency<'a>,
    prec: &'a Precedence,
    conv: bool,
    budget: Option<usize>,
}

struct Exhausted;

impl Search<'_> {
    fn explore(&self, start: &Obj, own: &Label, other: &Label) -> Result<Side, Exhausted> {
        let below_own = self.prec.downset(own);
        let both: LabelSet = [own.clone(), other.clone()].into_iter().collect();
        let below_both = self.prec.downset(&both);
        let start_state = (start.clone(), false);
        let mut side = Side {
            parent: BTreeMap::from([(start_state.clone(), None)]),
            dist: BTreeMap::from([(start_state.clone(), 0)]),
        };
        let mut queue = VecDeque::from([start_state]);
        while let Some(state) = queue.pop_front() {
            if self.budget.is_some_and(|b| side.dist.len() > b) {
                return Err(Exhausted);
            }
            let (x, last) = &state;
            let d = side.dist[&state];
            let mut moves: Vec<(State, ConvStep, Part)> = Vec::new();
            for s in self.adj.out.get(x).into_iter().flatten() {
                let step = ConvStep {
                    forward: true,
                    label: s.label.clone(),
                    target: s.target.clone(),
                };
                if !last && below_own.contains(&s.label) {
                    moves.push(((s.target.clone(), false), step.clone(), Part::First));
                }
                if !last && &s.label == other {
                    moves.push(((s.target.clone(), true), step.clone(), Part::Middle));
                }
                if below_both.contains(&s.label) {
                    moves.push(((s.target.clone(), true), step, Part::Last));
                }
            }
            if self.conv {
                for s in self.adj.into.get(x).into_iter().flatten() {
                    let step = ConvStep {
                        forward: false,
                        label: s.label.clone(),
                        target: s.source.clone(),
                    };
                    if !last && below_own.contains(&s.label) {
                        moves.push(((s.source.clone(), false), step.clone(), Part::First));
                    }
                    if below_both.contains(&s.label) {
                        moves.push(((s.source.clone(), true), step, Part::Last));
                    }
                }
            }
            for (next, step, part) in moves {
                if side.dist.contains_key(&next) {
                    continue;
                }
                side.dist.insert(next.clone(), d + 1);
                side.parent
                    .insert(next.clone(), Some((state.clone(), step, part)));
                queue.push_back(next);
            }
        }
        Ok(side)
    }
}

fn split_parts(start: Obj, steps: Vec<(ConvStep, Part)>) -> (Conversion, Conversion, Conversion) {
    let conv = Conversion {
        start,
        steps: steps.iter().map(|(s, _)| s.clone()).collect(),
    };
    let first = steps.iter().take_while(|(_, p)| *p == Part::First).count();
    let middle = steps[first..]
        .iter()
        .take_while(|(_, p)| *p == Part::Middle)
        .count();
    let (a, rest) = conv.split(first).expect("in range");
    let (b, c) = rest.split(middle).expect("in range");
    (a, b, c)
}

fn forward(conv: Conversion) -> RewriteSeq {
    conv.as_forward_seq()
        .expect("valley search takes forward steps only")
}

/// Looks for a join of the explicit shape for every local peak.
pub fn check_locally_decreasing(ars: &LabeledArs, prec: &Precedence, mode: Mode) -> LdReport {
    check_locally_decreasing_with_budget(ars, prec, mode, None)
}

/// As [`check_locally_decreasing`]; a side search visiting more than
/// `budget` states gives up with [`PeakStatus::SearchExhausted`].
pub fn check_locally_decreasing_with_budget(
    ars: &LabeledArs,
    prec: &Precedence,
    mode: Mode,
    budget: Option<usize>,
) -> LdReport {
    let search = Search {
        adj: Adjacency::new(ars),
        prec,
        conv: mode == Mode::Conv,
        budget,
    };
    let mut peaks: Vec<PeakReport> = ars
        .local_peaks()
        .into_iter()
        .map(|peak| check_peak(&search, ars, peak, mode))
        .collect();
    peaks.sort_by(|a, b| a.peak.cmp(&b.peak));
    LdReport { mode, peaks }
}

fn check_peak(search: &Search<'_>, ars: &LabeledArs, peak: Peak, mode: Mode) -> PeakReport {
    let beta = peak.left.steps[0].label.clone();
    let alpha = peak.right.steps[0].label.clone();
    let (b, c) = (peak.left.lst().clone(), peak.right.lst().clone());
    let report = |status, witness| PeakReport {
        peak: peak.clone(),
        status,
        witness,
    };
    let (from_b, from_c) = match (
        search.explore(&b, &beta, &alpha),
        search.explore(&c, &alpha, &beta),
    ) {
        (Ok(x), Ok(y)) => (x, y),
        _ => return report(PeakStatus::SearchExhausted, None),
    };
    let reached_b: BTreeSet<&Obj> = from_b.dist.keys().map(|(o, _)| o).collect();
    let meet = from_c
        .dist
        .keys()
        .map(|(o, _)| o)
        .filter(|o| reached_b.contains(o))
        .filter_map(|o| {
            let (db, sb) = from_b.best(o)?;
            let (dc, sc) = from_c.best(o)?;
            Some((db + dc, o.clone(), sb, sc))
        })
        .min_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
    let Some((_, _, sb, sc)) = meet else {
        return report(PeakStatus::NotDecreasing, None);
    };
    let (rs, rsteps) = from_b.path(sb);
    let (cs, csteps) = from_c.path(sc);
    let (r1, r2, r3) = split_parts(rs, rsteps);
    let (c1, c2, c3) = split_parts(cs, csteps);
    let witness = match mode {
        Mode::Conv => Witness::Conv(ConvJoin {
            right: ConvJoinSide {
                first: r1,
                middle: forward(r2),
                last: r3,
            },
            bottom: ConvJoinSide {
                first: c1,
                middle: forward(c2),
                last: c3,
            },
        }),
        Mode::Valley => {
            let parts = |a: &Conversion, b: &Conversion, c: &Conversion| {
                LdPrimeDecomposition::new(a.labels(), b.labels(), c.labels())
            };
            let right_parts = parts(&r1, &r2, &r3);
            let bottom_parts = parts(&c1, &c2, &c3);
            let right = forward(r1.concat(&r2).and_then(|x| x.concat(&r3)).expect("chained"));
            let bottom = forward(c1.concat(&c2).and_then(|x| x.concat(&c3)).expect("chained"));
            let join = ValleyJoin { right, bottom };
            debug_assert!(ars.is_diagram(&join.diagram(&peak)));
            Witness::Valley {
                join,
                right_parts,
                bottom_parts,
            }
        }
    };
    report(PeakStatus::Decreasing, Some(witness))
}
