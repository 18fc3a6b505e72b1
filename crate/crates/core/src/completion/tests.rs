use std::collections::BTreeMap;

use super::*;
use crate::lars::{ConvStep, Conversion, Step};
use crate::test_support::*;

fn newman_map() -> LocalCompletionMap {
    let b = newman_ars();
    let p = newman_prec();
    let mut entries = BTreeMap::new();
    entries.insert(
        peak(path("s", &[("ls", "t")]), path("s", &[("ls", "u")])),
        ValleyJoin {
            right: path("t", &[("lt", "v")]),
            bottom: path("u", &[("lu", "v")]),
        },
    );
    entries.insert(
        peak(path("s", &[("ls", "u")]), path("s", &[("ls", "t")])),
        ValleyJoin {
            right: path("u", &[("lu", "v")]),
            bottom: path("t", &[("lt", "v")]),
        },
    );
    LocalCompletionMap::new(&b, &p, entries).unwrap()
}

fn newman_peak() -> Peak {
    peak(
        path("s", &[("ls", "t"), ("lt", "v")]),
        path("s", &[("ls", "u"), ("lu", "v")]),
    )
}

#[test]
fn empty_peak_closes_trivially() {
    let b = LabeledArs::new();
    let p = Precedence::empty();
    let map = LocalCompletionMap::new(&b, &p, BTreeMap::new()).unwrap();
    let (d, trace) = complete_peak(&b, &p, &map, &Peak::empty(o("a"))).unwrap();
    assert!(d.top.is_empty() && d.left.is_empty() && d.right.is_empty() && d.bottom.is_empty());
    assert_eq!(d.right.start, o("a"));
    assert!(trace.is_empty());
}

#[test]
fn local_peak_is_the_map_entry() {
    let b = newman_ars();
    let p = newman_prec();
    let map = newman_map();
    let local = peak(path("s", &[("ls", "t")]), path("s", &[("ls", "u")]));
    let (d, trace) = complete_peak(&b, &p, &map, &local).unwrap();
    assert_eq!(d, map.get(&local).unwrap().diagram(&local));
    assert!(trace.is_empty());
}

#[test]
fn newman_two_step_peak() {
    let b = newman_ars();
    let p = newman_prec();
    let (d, trace) = complete_peak(&b, &p, &newman_map(), &newman_peak()).unwrap();
    assert_eq!(d.right, RewriteSeq::empty(o("v")));
    assert_eq!(d.bottom, RewriteSeq::empty(o("v")));
    assert!(b.dd_check(&p, &d));
    assert_eq!(trace.events[0].before, ms(&["ls", "ls"]));
    assert_eq!(trace.events[0].rule, Rule::Right);
    assert!(trace.is_descending(&p));
    assert_eq!(trace.len(), 2);
}

#[test]
fn mirrored_completion() {
    let b = newman_ars();
    let p = newman_prec();
    let map = newman_map();
    let (d, trace) = mirror_peak_complete(&b, &p, &map, &newman_peak()).unwrap();
    assert_eq!(d.top, newman_peak().left);
    assert_eq!(d.left, newman_peak().right);
    assert!(b.dd_check(&p, &d));
    assert!(trace.is_descending(&p));
    let local = peak(path("s", &[("ls", "t")]), path("s", &[("ls", "u")]));
    let (m, _) = mirror_peak_complete(&b, &p, &map, &local).unwrap();
    assert_eq!(m.right, path("t", &[("lt", "v")]));
    assert_eq!(m.bottom, path("u", &[("lu", "v")]));
}

#[test]
fn map_construction_errors() {
    let b = newman_ars();
    let p = newman_prec();
    let one = peak(path("s", &[("ls", "t")]), path("s", &[("ls", "u")]));
    let mut entries = BTreeMap::new();
    entries.insert(
        one.clone(),
        ValleyJoin {
            right: path("t", &[("lt", "v")]),
            bottom: path("u", &[("lu", "v")]),
        },
    );
    assert!(matches!(
        LocalCompletionMap::new(&b, &p, entries.clone()),
        Err(CompletionError::MissingLocalJoin(_))
    ));
    // Decreasing only under the precedence.
    let mut full = newman_map()
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect::<BTreeMap<_, _>>();
    assert!(matches!(
        LocalCompletionMap::new(&b, &Precedence::empty(), full.clone()),
        Err(CompletionError::InvalidLocalJoin { .. })
    ));
    full.insert(
        one,
        ValleyJoin {
            right: path("t", &[("lt", "v")]),
            bottom: path("u", &[]),
        },
    );
    assert!(matches!(
        LocalCompletionMap::new(&b, &p, full),
        Err(CompletionError::InvalidLocalJoin { .. })
    ));
}

#[test]
fn completion_errors() {
    let b = newman_ars();
    let p = newman_prec();
    let map = newman_map();
    let mut c = Completer::valley(&b, &p, &map).with_fuel(0);
    assert_eq!(
        c.complete(&newman_peak()),
        Err(CompletionError::FuelExhausted(0))
    );
    let bogus = peak(path("s", &[("lt", "v")]), path("s", &[]));
    assert!(matches!(
        complete_peak(&b, &p, &map, &bogus),
        Err(CompletionError::NotAPeak(_))
    ));
    // The ambient measure is not above the peak closed inside key1.
    let mut c = Completer::valley(&b, &p, &map);
    let conv = Conversion {
        start: o("t"),
        steps: vec![
            ConvStep {
                forward: false,
                label: l("ls"),
                target: o("s"),
            },
            ConvStep {
                forward: true,
                label: l("ls"),
                target: o("u"),
            },
        ],
    };
    let top = prec(&[("lt", "ls"), ("lu", "ls"), ("ls", "lx")]);
    let mut c2 = Completer::valley(&b, &top, &map);
    assert!(matches!(
        c2.key1_close(&ms(&["ls"]), &ms(&["lx"]), &conv),
        Err(CompletionError::MeasureNotDecreasing { .. })
    ));
    assert!(matches!(
        c.key1_close(&ms(&["ls", "ls"]), &ms(&["ls"]), &conv),
        Err(CompletionError::DownsetViolation { .. })
    ));
}

#[test]
fn key1_base_cases() {
    let b = newman_ars();
    let p = newman_prec();
    let map = newman_map();
    let mut c = Completer::valley(&b, &p, &map);
    let ambient = ms(&["ls", "ls"]);
    let (s1, s2) = c
        .key1_close(&ambient, &ms(&["ls"]), &Conversion::empty(o("t")))
        .unwrap();
    assert_eq!((s1, s2.clone()), (path("t", &[]), path("t", &[])));
    let forward = path("t", &[("lt", "v")]).to_conversion();
    let (s1, s2) = c.key1_close(&ambient, &ms(&["ls"]), &forward).unwrap();
    assert_eq!(s1, path("t", &[("lt", "v")]));
    assert_eq!(s2, path("v", &[]));
    assert!(c.trace().is_empty());
}

#[test]
fn key1_closes_a_backward_peak() {
    let b = newman_ars();
    let p = prec(&[("lt", "ls"), ("lu", "ls"), ("ls", "lx")]);
    let map = LocalCompletionMap::new(
        &b,
        &p,
        newman_map()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
    )
    .unwrap();
    let mut c = Completer::valley(&b, &p, &map);
    // t ←ls s →ls u
    let conv = Conversion {
        start: o("t"),
        steps: vec![
            ConvStep {
                forward: false,
                label: l("ls"),
                target: o("s"),
            },
            ConvStep {
                forward: true,
                label: l("ls"),
                target: o("u"),
            },
        ],
    };
    let (s1, s2) = c
        .key1_close(&ms(&["lx", "lx"]), &ms(&["lx"]), &conv)
        .unwrap();
    assert_eq!(s1, path("t", &[("lt", "v")]));
    assert_eq!(s2, path("u", &[("lu", "v")]));
    let below = p.downset(&l("lx"));
    assert!(s1.labels().set_of().is_subset(&below));
    assert_eq!(c.trace().events[0].rule, Rule::Key1);
    assert!(c.trace().is_descending(&p));
}

#[test]
fn key2_cases() {
    let b = newman_ars();
    let p = newman_prec();
    let map = newman_map();
    let mut c = Completer::valley(&b, &p, &map);
    let ambient = ms(&["ls", "lu"]);
    let k = c
        .key2_close(
            &ambient,
            &l("lu"),
            &l("ls"),
            &path("t", &[]),
            &path("t", &[]),
        )
        .unwrap();
    assert!(k.sigma1.is_empty() && k.sigma2.is_empty() && k.sigma3.is_empty());
    assert!(k.tau_prime.is_empty());

    // A single ↓β step and no α-step: the step itself is the bottom join.
    let t = path("t", &[("lt", "v")]);
    let k = c
        .key2_close(&ambient, &l("lu"), &l("ls"), &t, &path("t", &[]))
        .unwrap();
    assert!(k.sigma().unwrap().is_empty());
    assert_eq!(k.tau_prime, t);
}

#[test]
fn key2_with_an_alpha_step() {
    // t →lt v, t →la w, v →la x, w →lt x with lt ≺ ls.
    let b: LabeledArs = [
        Step::new("t", "lt", "v"),
        Step::new("t", "la", "w"),
        Step::new("v", "la", "x"),
        Step::new("w", "lt", "x"),
    ]
    .into_iter()
    .collect();
    let p = prec(&[("lt", "ls")]);
    let mut entries = BTreeMap::new();
    entries.insert(
        peak(path("t", &[("lt", "v")]), path("t", &[("la", "w")])),
        ValleyJoin {
            right: path("v", &[("la", "x")]),
            bottom: path("w", &[("lt", "x")]),
        },
    );
    entries.insert(
        peak(path("t", &[("la", "w")]), path("t", &[("lt", "v")])),
        ValleyJoin {
            right: path("w", &[("lt", "x")]),
            bottom: path("v", &[("la", "x")]),
        },
    );
    let map = LocalCompletionMap::new(&b, &p, entries).unwrap();
    let mut c = Completer::valley(&b, &p, &map);
    let k = c
        .key2_close(
            &ms(&["la", "ls"]),
            &l("la"),
            &l("ls"),
            &path("t", &[("lt", "v")]),
            &path("t", &[("la", "w")]),
        )
        .unwrap();
    assert_eq!(k.sigma1, path("v", &[]));
    assert_eq!(k.sigma2, path("v", &[("la", "x")]));
    assert_eq!(k.sigma3, path("x", &[]));
    assert_eq!(k.tau_prime, path("w", &[("lt", "x")]));
    let both: LabelSet = [l("la"), l("ls")].into_iter().collect();
    assert!(k.tau_prime.labels().set_of().is_subset(&p.downset(&both)));
    assert_eq!(c.trace().events[0].rule, Rule::Key2);
}

#[test]
fn valley_embedding_reproduces_valley_joins() {
    let b = newman_ars();
    let p = newman_prec();
    let map = newman_map();
    let conv = LocalConvMap::from_valley_map(&b, &p, &map).unwrap();
    for pk in b
        .local_peaks()
        .into_iter()
        .chain([newman_peak(), newman_peak().swap()])
    {
        let (dv, tv) = complete_peak(&b, &p, &map, &pk).unwrap();
        let (dc, tc) = complete_peak_conv(&b, &p, &conv, &pk).unwrap();
        assert_eq!(dv, dc);
        assert!(tv.is_descending(&p) && tc.is_descending(&p));
    }
}

/// `a →β b`, `a →α c`, `d →g b`, `d →g c`, `b →h e`, `c →h e`, with `b`
/// and `c` related by the conversion `b ←g d →g c` below both `α` and `β`.
fn diamond_below() -> (LabeledArs, Precedence) {
    let b: LabeledArs = [
        Step::new("a", "beta", "b"),
        Step::new("a", "alpha", "c"),
        Step::new("d", "g", "b"),
        Step::new("d", "g", "c"),
        Step::new("b", "h", "e"),
        Step::new("c", "h", "e"),
    ]
    .into_iter()
    .collect();
    let p = prec(&[("h", "g"), ("g", "alpha"), ("g", "beta")]);
    (b, p)
}

fn back(label: &str, target: &str) -> ConvStep {
    ConvStep {
        forward: false,
        label: l(label),
        target: o(target),
    }
}

fn fwd(label: &str, target: &str) -> ConvStep {
    ConvStep {
        forward: true,
        label: l(label),
        target: o(target),
    }
}

fn diamond_conv_map(b: &LabeledArs, p: &Precedence) -> LocalConvMap {
    let local = peak(path("a", &[("beta", "b")]), path("a", &[("alpha", "c")]));
    let side = |from: &str, via: Vec<ConvStep>| ConvJoinSide {
        first: Conversion::empty(o(from)),
        middle: path(from, &[]),
        last: Conversion {
            start: o(from),
            steps: via,
        },
    };
    let mut entries = BTreeMap::new();
    entries.insert(
        local.clone(),
        ConvJoin {
            right: side("b", vec![back("g", "d"), fwd("g", "c")]),
            bottom: ConvJoinSide::empty_at(&o("c")),
        },
    );
    entries.insert(
        local.swap(),
        ConvJoin {
            right: side("c", vec![back("g", "d"), fwd("g", "b")]),
            bottom: ConvJoinSide::empty_at(&o("b")),
        },
    );
    for (x, y) in [("b", "c"), ("c", "b")] {
        let pk = peak(path("d", &[("g", x)]), path("d", &[("g", y)]));
        let join = ValleyJoin {
            right: path(x, &[("h", "e")]),
            bottom: path(y, &[("h", "e")]),
        };
        entries.insert(pk.clone(), ConvJoin::from_valley(p, &pk, &join).unwrap());
    }
    LocalConvMap::new(b, p, entries).unwrap()
}

#[test]
fn conversion_shaped_local_join() {
    let (b, p) = diamond_below();
    let map = diamond_conv_map(&b, &p);
    let local = peak(path("a", &[("beta", "b")]), path("a", &[("alpha", "c")]));
    let (d, trace) = complete_peak_conv(&b, &p, &map, &local).unwrap();
    assert_eq!(d.right, path("b", &[("h", "e")]));
    assert_eq!(d.bottom, path("c", &[("h", "e")]));
    assert!(b.dd_check(&p, &d));
    assert_eq!(trace.events[0].rule, Rule::Key1);
    assert!(trace.is_descending(&p));
    let (d, _) = complete_peak_conv(&b, &p, &map, &local.swap()).unwrap();
    assert!(b.dd_check(&p, &d));
}

#[test]
fn conversion_shape_is_enforced() {
    let (b, p) = diamond_below();
    let map = diamond_conv_map(&b, &p);
    let mut entries: BTreeMap<_, _> = map.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    let local = peak(path("a", &[("beta", "b")]), path("a", &[("alpha", "c")]));
    // The same conversion placed in the `↓β` part leaves its downset.
    let moved = {
        let mut j = entries[&local].clone();
        std::mem::swap(&mut j.right.first, &mut j.right.last);
        j.right.middle = path("c", &[]);
        j
    };
    let flat = Precedence::empty();
    entries.insert(local.clone(), moved);
    assert!(matches!(
        LocalConvMap::new(&b, &p, entries),
        Err(CompletionError::InvalidLocalJoin { .. })
    ));
    assert!(LocalConvMap::new(
        &b,
        &flat,
        map.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    )
    .is_err());
}

/// All conversions from `start` of length at most `max`.
fn conversions(b: &LabeledArs, start: &str, max: usize) -> Vec<Conversion> {
    let mut out = vec![Conversion::empty(o(start))];
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next = Vec::new();
        for c in &frontier {
            for s in b.steps() {
                let mut ext = |forward: bool, target: &crate::symbol::Obj| {
                    let mut c2 = c.clone();
                    c2.steps.push(ConvStep {
                        forward,
                        label: s.label.clone(),
                        target: target.clone(),
                    });
                    next.push(c2);
                };
                if &s.source == c.lst() {
                    ext(true, &s.target);
                }
                if &s.target == c.lst() {
                    ext(false, &s.source);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every way to cut a conversion into a conversion, at most one forward
/// step, and a conversion.
fn sides(c: &Conversion) -> Vec<ConvJoinSide> {
    let mut out = Vec::new();
    for i in 0..=c.len() {
        for j in i..=(i + 1).min(c.len()) {
            let (first, rest) = c.split(i).unwrap();
            let (mid, last) = rest.split(j - i).unwrap();
            if let Some(middle) = mid.as_forward_seq() {
                out.push(ConvJoinSide {
                    first,
                    middle,
                    last,
                });
            }
        }
    }
    out
}

#[test]
fn fork_has_no_conversion_join() {
    let b: LabeledArs = [Step::new("a", "x", "b"), Step::new("a", "y", "c")]
        .into_iter()
        .collect();
    let orders = [
        Precedence::empty(),
        prec(&[("x", "y")]),
        prec(&[("y", "x")]),
    ];
    let local = peak(path("a", &[("x", "b")]), path("a", &[("y", "c")]));
    let mut tried = 0;
    for p in &orders {
        for right in conversions(&b, "b", 3).iter().flat_map(sides) {
            for bottom in conversions(&b, "c", 3).iter().flat_map(sides) {
                if right.end() != bottom.end() {
                    continue;
                }
                tried += 1;
                let join = ConvJoin {
                    right: right.clone(),
                    bottom,
                };
                assert!(join.check(&b, p, &local).is_err(), "{join:?} under {p:?}");
            }
        }
    }
    assert!(tried > 100);
}
