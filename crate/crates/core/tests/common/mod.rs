//! Seeded generators and brute-force oracles shared by the integration
//! suites. Nothing here calls the library's own decision procedures.

#![allow(dead_code)]

use std::collections::BTreeSet;

use decdiag::lars::{LabeledArs, Peak, RewriteSeq, SeqStep, Step, UnlabeledArs};
use decdiag::{Label, LabelMultiset, LabelSeq, LabelSet, Obj, Precedence};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn l(name: &str) -> Label {
    Label::new(name)
}

pub fn labels(n: usize) -> Vec<Label> {
    NAMES[..n].iter().map(|s| l(s)).collect()
}

pub fn seq(names: &[&str]) -> LabelSeq {
    names.iter().map(|s| l(s)).collect()
}

/// A random strict partial order on the first `n` names: each pair along a
/// shuffled linear order is kept with probability `density`, then closed.
pub fn random_prec(r: &mut impl Rng, n: usize, density: f64) -> Precedence {
    let mut order = labels(n);
    order.shuffle(r);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(density) {
                pairs.push((order[i].clone(), order[j].clone()));
            }
        }
    }
    Precedence::from_covering(pairs).expect("pairs follow a linear order")
}

pub fn random_label(r: &mut impl Rng, n: usize) -> Label {
    l(NAMES[r.gen_range(0..n)])
}

pub fn random_multiset(r: &mut impl Rng, n: usize, max: usize) -> LabelMultiset {
    let len = r.gen_range(0..=max);
    (0..len).map(|_| random_label(r, n)).collect()
}

pub fn random_seq(r: &mut impl Rng, n: usize, max: usize) -> LabelSeq {
    let len = r.gen_range(0..=max);
    (0..len).map(|_| random_label(r, n)).collect()
}

pub fn random_set(r: &mut impl Rng, n: usize) -> LabelSet {
    labels(n).into_iter().filter(|_| r.gen_bool(0.4)).collect()
}

/// A random sequence drawn from `pool`; empty when the pool is.
pub fn random_seq_from(r: &mut impl Rng, pool: &LabelSet, max: usize) -> LabelSeq {
    let pool: Vec<&Label> = pool.iter().collect();
    if pool.is_empty() {
        return LabelSeq::new();
    }
    let len = r.gen_range(0..=max);
    (0..len)
        .map(|_| (*pool.choose(r).unwrap()).clone())
        .collect()
}

/// `{x | x ≺ g for some g in gens}`, straight from the pair relation.
pub fn downset_oracle(prec: &Precedence, gens: &LabelSet) -> LabelSet {
    prec.pairs()
        .filter(|(_, hi)| gens.contains(hi))
        .map(|(lo, _)| lo.clone())
        .collect()
}

fn counts(m: &LabelMultiset) -> Vec<(Label, usize)> {
    m.counts()
        .map(|(k, v)| (k.clone(), v.to_string().parse().unwrap()))
        .collect()
}

fn repeat(parts: &[(Label, usize)]) -> LabelMultiset {
    parts
        .iter()
        .flat_map(|(k, c)| std::iter::repeat_n(k.clone(), *c))
        .collect()
}

/// Every sub-multiset of `m`.
pub fn sub_multisets(m: &LabelMultiset) -> Vec<LabelMultiset> {
    let mut out = vec![Vec::new()];
    for (k, c) in counts(m) {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<(Label, usize)>| {
                let k = k.clone();
                (0..=c).map(move |i| {
                    let mut next = prefix.clone();
                    next.push((k.clone(), i));
                    next
                })
            })
            .collect();
    }
    out.iter().map(|parts| repeat(parts)).collect()
}

/// Multiset difference by counts, `None` unless `sub ≤ m`.
fn minus(m: &LabelMultiset, sub: &LabelMultiset) -> Option<LabelMultiset> {
    let mc = counts(m);
    let sc = counts(sub);
    let mut rest = Vec::new();
    for (k, c) in &mc {
        let s = sc.iter().find(|(x, _)| x == k).map_or(0, |(_, s)| *s);
        rest.push((k.clone(), c.checked_sub(s)?));
    }
    if sc.iter().any(|(k, _)| !mc.iter().any(|(x, _)| x == k)) {
        return None;
    }
    Some(repeat(&rest))
}

/// Tries every common part `I` and checks the remaining `K` is dominated by
/// the remaining `J`. `strict` also requires `J` non-empty.
pub fn mul_oracle(prec: &Precedence, m: &LabelMultiset, n: &LabelMultiset, strict: bool) -> bool {
    sub_multisets(m).into_iter().any(|i| {
        let (Some(k), Some(j)) = (minus(m, &i), minus(n, &i)) else {
            return false;
        };
        (!strict || !j.is_empty())
            && k.set_of()
                .iter()
                .all(|x| j.set_of().iter().any(|y| prec.less(x, y)))
    })
}

/// Every multiset over `alphabet` with at most `max` elements.
pub fn all_multisets(alphabet: &[Label], max: usize) -> Vec<LabelMultiset> {
    fn go(
        alphabet: &[Label],
        max: usize,
        from: usize,
        cur: &mut Vec<Label>,
        out: &mut Vec<LabelMultiset>,
    ) {
        out.push(cur.iter().cloned().collect());
        if cur.len() == max {
            return;
        }
        for i in from..alphabet.len() {
            cur.push(alphabet[i].clone());
            go(alphabet, max, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(alphabet, max, 0, &mut Vec::new(), &mut out);
    out
}

/// Every irreflexive transitive relation on `alphabet`, by brute force over
/// all sets of off-diagonal pairs.
pub fn all_strict_orders(alphabet: &[Label]) -> Vec<Precedence> {
    let pairs: Vec<(Label, Label)> = alphabet
        .iter()
        .flat_map(|a| alphabet.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| a != b)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let chosen: BTreeSet<&(Label, Label)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        let transitive = chosen.iter().all(|(a, b)| {
            chosen
                .iter()
                .filter(|(c, _)| c == b)
                .all(|(_, d)| chosen.contains(&(a.clone(), d.clone())))
        });
        let irreflexive = chosen
            .iter()
            .all(|(a, b)| !chosen.contains(&(b.clone(), a.clone())));
        if transitive && irreflexive {
            out.push(Precedence::from_closed(chosen.into_iter().cloned()).expect("checked"));
        }
    }
    out
}

fn obj(i: usize) -> Obj {
    Obj::new(format!("o{i}"))
}

/// A random labeled system: up to `objects` objects, `steps` steps and
/// `label_count` labels.
pub fn random_ars(
    r: &mut impl Rng,
    objects: usize,
    steps: usize,
    label_count: usize,
) -> LabeledArs {
    let n = r.gen_range(1..=objects);
    let k = r.gen_range(1..=label_count);
    let m = r.gen_range(0..=steps);
    (0..m)
        .map(|_| {
            Step::new(
                obj(r.gen_range(0..n)),
                random_label(r, k),
                obj(r.gen_range(0..n)),
            )
        })
        .collect()
}

/// The first single-step peak whose ends have no common reduct.
fn unjoinable_local_peak(ars: &UnlabeledArs) -> Option<(Obj, Obj)> {
    let succ = ars.successors();
    let reach = |from: &Obj| {
        let mut seen = BTreeSet::from([from.clone()]);
        let mut todo = vec![from.clone()];
        while let Some(x) = todo.pop() {
            for y in succ.get(&x).into_iter().flatten() {
                if seen.insert(y.clone()) {
                    todo.push(y.clone());
                }
            }
        }
        seen
    };
    for next in succ.values() {
        for (i, b) in next.iter().enumerate() {
            for c in &next[i + 1..] {
                if reach(b).is_disjoint(&reach(c)) {
                    return Some((b.clone(), c.clone()));
                }
            }
        }
    }
    None
}

/// A random terminating, locally confluent system. Steps only go from
/// lower to higher object indices, and each unjoinable local peak is
/// repaired by a step between its ends in the same direction.
pub fn random_terminating_lc(r: &mut impl Rng, objects: usize, steps: usize) -> UnlabeledArs {
    let n = r.gen_range(2..=objects);
    let m = r.gen_range(1..=steps);
    let mut ars = UnlabeledArs::new();
    for _ in 0..m {
        let a = r.gen_range(0..n - 1);
        let b = r.gen_range(a + 1..n);
        ars.insert(obj(a), obj(b));
    }
    let index = |o: &Obj| o.as_str()[1..].parse::<usize>().unwrap();
    while let Some((b, c)) = unjoinable_local_peak(&ars) {
        if index(&b) < index(&c) {
            ars.insert(b, c);
        } else {
            ars.insert(c, b);
        }
    }
    ars
}

/// Every rewrite sequence from `start` with at most `max` steps.
pub fn sequences_from(ars: &LabeledArs, start: &Obj, max: usize) -> Vec<RewriteSeq> {
    let mut out = vec![RewriteSeq::empty(start.clone())];
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next = Vec::new();
        for s in &frontier {
            for step in ars.outgoing(s.lst()) {
                let mut longer = s.clone();
                longer.steps.push(SeqStep {
                    label: step.label.clone(),
                    target: step.target.clone(),
                });
                next.push(longer);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every peak whose sides have at most `max` steps.
pub fn peaks_up_to(ars: &LabeledArs, max: usize) -> Vec<Peak> {
    let mut out = Vec::new();
    for o in ars.objects() {
        let seqs = sequences_from(ars, &o, max);
        for a in &seqs {
            for b in &seqs {
                out.push(Peak::new(a.clone(), b.clone()).expect("co-initial"));
            }
        }
    }
    out
}
