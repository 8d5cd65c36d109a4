use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use edgefan::enumerate::connected_up_to;
use edgefan::verify::{run_checks, CheckId, Context, VerifyConfig};
use edgefan::{
    chromatic_index, enumerate_all, enumerate_colorings, enumerate_connected, grow_multifan, is_critical, make_family,
    tau_sequences_outside, ColorSet, Graph, MultiFan, SolverConfig, TauSeqType,
};

/// Plain backtracking over edges in index order, no pruning beyond
/// properness.
fn brute_colorable(g: &Graph, skip: Option<usize>, k: usize) -> bool {
    fn go(g: &Graph, skip: Option<usize>, k: usize, e: usize, colors: &mut Vec<usize>) -> bool {
        if e == g.edge_count() {
            return true;
        }
        if Some(e) == skip {
            return go(g, skip, k, e + 1, colors);
        }
        let (u, v) = g.endpoints(e);
        for c in 1..=k {
            let clash = (0..e).any(|f| {
                colors[f] == c && {
                    let (a, b) = g.endpoints(f);
                    a == u || a == v || b == u || b == v
                }
            });
            if !clash {
                colors[e] = c;
                if go(g, skip, k, e + 1, colors) {
                    return true;
                }
                colors[e] = 0;
            }
        }
        false
    }
    go(g, skip, k, 0, &mut vec![0; g.edge_count()])
}

fn brute_chi(g: &Graph) -> usize {
    (g.max_degree()..).find(|&k| brute_colorable(g, None, k)).unwrap()
}

#[test]
fn enumeration_matches_known_counts() {
    let connected = [1, 1, 2, 6, 21, 112, 853];
    let all = [1, 2, 4, 11, 34, 156, 1044];
    for n in 1..=7 {
        assert_eq!(
            enumerate_connected(n).unwrap().count(),
            connected[n - 1],
            "connected n={n}"
        );
        assert_eq!(enumerate_all(n).unwrap().count(), all[n - 1], "all n={n}");
    }
}

#[test]
fn chromatic_index_and_criticality_match_brute_force() {
    let cfg = SolverConfig::default();
    for g in connected_up_to(6).unwrap() {
        if g.edge_count() == 0 {
            continue;
        }
        let chi = brute_chi(&g);
        assert_eq!(chromatic_index(&g, &cfg).unwrap().chi_prime, chi, "{:?}", g.edges());
        let d = g.max_degree();
        let brute_critical = chi == d + 1 && (0..g.edge_count()).all(|e| brute_colorable(&g, Some(e), d));
        assert_eq!(is_critical(&g, &cfg).unwrap(), brute_critical, "{:?}", g.edges());
    }
}

#[test]
fn overfull_matches_edge_count_definition() {
    for g in connected_up_to(6).unwrap() {
        let overfull = g.edge_count() > g.max_degree() * (g.n() / 2);
        assert_eq!(g.is_overfull().unwrap(), overfull);
    }
}

fn relabel(g: &Graph, p: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().iter().map(|&(u, v)| (p[u], p[v]))).unwrap()
}

fn verdict_profile(g: Graph) -> BTreeMap<(CheckId, String), usize> {
    let cfg = VerifyConfig::default();
    let ctx = Context::new(g, 0, &cfg.solver).unwrap();
    let mut out = BTreeMap::new();
    for o in run_checks(&ctx, &CheckId::ALL, &cfg).unwrap() {
        let tag = serde_json::to_value(&o.verdict).unwrap()["verdict"]
            .as_str()
            .unwrap()
            .to_string();
        *out.entry((o.check, tag)).or_default() += 1;
    }
    out
}

#[test]
fn check_verdicts_are_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let fixtures = ["cycle:5", "petersen-v", "complete:5"];
    let mut count = 0;
    for spec in fixtures {
        let g = make_family(spec).unwrap();
        let base = verdict_profile(g.clone());
        for _ in 0..34 {
            let mut p: Vec<usize> = (0..g.n()).collect();
            p.shuffle(&mut rng);
            assert_eq!(verdict_profile(relabel(&g, &p)), base, "{spec} under {p:?}");
            count += 1;
        }
    }
    assert!(count >= 100);
}

/// The four terminal predicates recomputed from the raw coloring.
fn predicates(fan: &MultiFan, tail: &[usize], tau: u8) -> [bool; 4] {
    let c = fan.coloring();
    let fan_missing = fan
        .vertices()
        .iter()
        .fold(ColorSet::EMPTY, |acc, &v| acc.union(c.missing(v)));
    let disjoint = |vs: &[usize]| {
        let mut seen = ColorSet::EMPTY;
        vs.iter().all(|&v| {
            let m = c.missing(v);
            let ok = m.is_disjoint(seen);
            seen = seen.union(m);
            ok
        })
    };
    let mut union = fan.vertices();
    union.extend_from_slice(tail);
    let end = *tail.last().unwrap();
    let b = tail.iter().any(|&v| !c.missing(v).is_disjoint(fan_missing));
    [
        disjoint(&union) && c.missing(end).contains(tau),
        b,
        !b && !disjoint(tail),
        disjoint(&union) && c.missing(end).is_empty(),
    ]
}

#[test]
fn tau_sequence_types_partition_corpus_sequences() {
    let cfg = SolverConfig::default();
    let mut seen = BTreeMap::new();
    let mut corpus = connected_up_to(7).unwrap();
    corpus.push(make_family("petersen-v").unwrap());
    for g in corpus
        .iter()
        .filter(|g| g.edge_count() > 0 && is_critical(g, &cfg).unwrap())
    {
        let d = g.max_degree();
        for e in 0..g.edge_count() {
            let (a, b) = g.endpoints(e);
            for c in enumerate_colorings(g, e, d, &cfg).unwrap().colorings {
                for r in [a, b] {
                    let fan = grow_multifan(&c, r).unwrap();
                    assert!(fan.is_elementary().is_ok());
                    for tau in c.palette().iter() {
                        let Some(x) = c.edge_with_color(r, tau).map(|f| g.other_end(f, r)) else {
                            continue;
                        };
                        if fan.contains(x) {
                            continue;
                        }
                        for (seq, kind) in tau_sequences_outside(&fan, tau).unwrap() {
                            let tail = seq.tail_vertices();
                            let p = predicates(&fan, &tail, tau);
                            assert_eq!(p.iter().filter(|&&h| h).count(), 1, "{tail:?} {p:?}");
                            let expected = ['A', 'B', 'C', 'D'][p.iter().position(|&h| h).unwrap()];
                            assert_eq!(kind.tag(), expected);
                            if let TauSeqType::A { end, .. } | TauSeqType::D { end } = kind {
                                assert_eq!(end, *tail.last().unwrap());
                            }
                            *seen.entry(kind.tag()).or_insert(0usize) += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(seen.values().sum::<usize>() > 0, "{seen:?}");
}
