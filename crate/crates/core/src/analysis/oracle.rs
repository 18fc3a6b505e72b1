//! Brute-force reachability oracles on finite unlabeled systems.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::lars::UnlabeledArs;
use crate::symbol::Obj;

/// Objects reachable from `from` in zero or more steps.
pub fn reachable(ars: &UnlabeledArs, from: &Obj) -> BTreeSet<Obj> {
    reachable_with(&ars.successors(), from)
}

fn reachable_with(succ: &BTreeMap<Obj, Vec<Obj>>, from: &Obj) -> BTreeSet<Obj> {
    let mut seen = BTreeSet::from([from.clone()]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in succ.get(&x).into_iter().flatten() {
            if seen.insert(y.clone()) {
                queue.push_back(y.clone());
            }
        }
    }
    seen
}

/// Reachability sets of every object of the system.
pub fn reachability(ars: &UnlabeledArs) -> BTreeMap<Obj, BTreeSet<Obj>> {
    let succ = ars.successors();
    ars.objects()
        .into_iter()
        .map(|o| {
            let r = reachable_with(&succ, &o);
            (o, r)
        })
        .collect()
}

pub fn joinable_oracle(ars: &UnlabeledArs, a: &Obj, b: &Obj) -> bool {
    !reachable(ars, a).is_disjoint(&reachable(ars, b))
}

/// Every two reducts of a common object have a common reduct.
pub fn confluent_oracle(ars: &UnlabeledArs) -> bool {
    let reach = reachability(ars);
    reach.values().all(|below| {
        let below: Vec<_> = below.iter().collect();
        below.iter().enumerate().all(|(i, b)| {
            below[i + 1..]
                .iter()
                .all(|c| !reach[*b].is_disjoint(&reach[*c]))
        })
    })
}

/// The first single-step peak `b ← a → c` whose ends are not joinable.
pub fn local_confluence_counterexample(ars: &UnlabeledArs) -> Option<(Obj, Obj, Obj)> {
    let reach = reachability(ars);
    let succ = ars.successors();
    for (a, next) in &succ {
        for (i, b) in next.iter().enumerate() {
            for c in &next[i + 1..] {
                if reach[b].is_disjoint(&reach[c]) {
                    return Some((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    None
}

/// A cycle `x0 → x1 → … → x0`, listed without repeating `x0`.
pub fn find_cycle(ars: &UnlabeledArs) -> Option<Vec<Obj>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done,
    }
    let succ = ars.successors();
    let mut marks: BTreeMap<Obj, Mark> = BTreeMap::new();
    for root in ars.objects() {
        if marks.contains_key(&root) {
            continue;
        }
        // Iterative DFS; `stack` holds the current path with child cursors.
        let mut stack: Vec<(Obj, usize)> = vec![(root.clone(), 0)];
        marks.insert(root, Mark::Open);
        while let Some((x, cursor)) = stack.last().cloned() {
            let children = succ.get(&x).map(Vec::as_slice).unwrap_or(&[]);
            if cursor == children.len() {
                marks.insert(x, Mark::Done);
                stack.pop();
                continue;
            }
            stack.last_mut().expect("non-empty").1 += 1;
            let y = &children[cursor];
            match marks.get(y) {
                Some(Mark::Open) => {
                    let at = stack
                        .iter()
                        .position(|(o, _)| o == y)
                        .expect("open on path");
                    return Some(stack[at..].iter().map(|(o, _)| o.clone()).collect());
                }
                Some(Mark::Done) => {}
                None => {
                    marks.insert(y.clone(), Mark::Open);
                    stack.push((y.clone(), 0));
                }
            }
        }
    }
    None
}
