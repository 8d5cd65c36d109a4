use super::*;
use crate::chromatic::enumerate_colorings;
use crate::coloring::PartialColoring;
use crate::enumerate::enumerate_connected;
use crate::families::make_family;
use crate::graph6::write_graph6;

fn ctx(spec: &str) -> Context {
    Context::new(make_family(spec).unwrap(), 0, &SolverConfig::default()).unwrap()
}

fn orbits(ctx: &Context, e: EdgeId) -> Vec<PartialColoring> {
    enumerate_colorings(&ctx.graph, e, ctx.delta, &SolverConfig::default())
        .unwrap()
        .colorings
}

#[test]
fn vf1_and_vf2_on_c5() {
    let ctx = ctx("cycle:5");
    for e in 0..5 {
        let all = orbits(&ctx, e);
        assert_eq!(all.len(), 1);
        assert!(check_vf1(&ctx, &all[0], Some(0)).unwrap().verdict.is_pass());
        assert!(check_vf2(&ctx, &all[0], Some(0)).unwrap().verdict.is_pass());
    }
}

#[test]
fn non_critical_edges_are_vacuous() {
    let k5 = ctx("complete:5");
    assert!(k5.class2 && k5.critical.iter().all(|&b| !b));
    let c = chromatic::vizing_color(&k5.graph).unwrap();
    let one_hole = PartialColoring::from_colors(
        k5.graph.clone(),
        5,
        &(0..10)
            .map(|i| (i != 0).then(|| c.color(i).unwrap()))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    assert!(matches!(
        check_vf1(&k5, &one_hole, None).unwrap().verdict,
        Verdict::Vacuous(_)
    ));
    let k4 = ctx("complete:4");
    assert!(matches!(check_val(&k4).verdict, Verdict::Vacuous(_)));
}

#[test]
fn val_on_small_class_two_graphs() {
    assert!(check_val(&ctx("cycle:5")).verdict.is_pass());
    let pv = ctx("petersen-v");
    let o = check_val(&pv);
    assert!(o.verdict.is_pass());
    assert_eq!(o.instance.params["critical_edges"], "12");
}

#[test]
fn edge_count_on_c5() {
    let ctx = ctx("cycle:5");
    let c = &orbits(&ctx, 0)[0];
    assert!(check_elementary_edge_count(&ctx, c, Some(0)).verdict.is_pass());
}

#[test]
fn even_order_elementary_instance_fails_and_replays() {
    let k2 = Context::new(make_family("complete:2").unwrap(), 3, &SolverConfig::default()).unwrap();
    let full = PartialColoring::from_colors(k2.graph.clone(), 1, &[Some(1)]).unwrap();
    let o = check_elementary_edge_count(&k2, &full, None);
    assert!(o.verdict.is_fail());
    let w = o.witness.clone().unwrap();
    assert_eq!(replay(&o).unwrap(), Some(w));

    // The same edge left uncolored makes both ends miss color 1.
    let open = PartialColoring::from_colors(k2.graph.clone(), 1, &[None]).unwrap();
    assert!(matches!(
        check_elementary_edge_count(&k2, &open, None).verdict,
        Verdict::Vacuous(_)
    ));
}

#[test]
fn extend_on_c5_and_gating() {
    let ctx = ctx("cycle:5");
    let cfg = VerifyConfig::default();
    let full = EdgeOrbits::enumerate(&ctx, 0, &cfg).unwrap();
    let (o, summary) = check_extend(&ctx, &full, &cfg).unwrap();
    assert!(o.verdict.is_pass(), "{o:?}");
    assert!(summary.pivots > 0);
    let cut = EdgeOrbits {
        complete: false,
        ..full
    };
    let (o, _) = check_extend(&ctx, &cut, &cfg).unwrap();
    assert!(matches!(o.verdict, Verdict::Skipped(ref r) if r.contains("best-found")));
}

#[test]
fn theorem_and_lemma1_are_vacuous_at_small_order() {
    let c5 = ctx("cycle:5");
    assert!(matches!(check_theorem_main(&c5).verdict, Verdict::Vacuous(_)));
    assert!(matches!(
        check_lemma1(&c5, &VerifyConfig::default()).unwrap().verdict,
        Verdict::Vacuous(_)
    ));
    let pet = ctx("petersen");
    assert!(matches!(check_theorem_main(&pet).verdict, Verdict::Vacuous(ref r) if r.contains("not critical")));
}

#[test]
fn scan_small_corpus() {
    let corpus: Vec<CorpusItem> = enumerate_connected(5).unwrap().map(Ok).collect();
    let count = corpus.len();
    let report = scan("n=5", corpus, &[CheckId::Vf1, CheckId::Val], &VerifyConfig::default());
    assert_eq!(report.stats.graphs, count);
    assert_eq!(report.failures(), 0);
    assert!(report.reconciles());
    assert_eq!(report.tallies[&CheckId::Val].instances, count);
    assert!(report.tallies[&CheckId::Vf1].pass > 0);
}

#[test]
fn scan_reports_malformed_lines() {
    let text = format!(
        "{}\n!!bad\n\n{}\n",
        write_graph6(&make_family("cycle:5").unwrap()).unwrap(),
        "A_"
    );
    let corpus = read_corpus(&text);
    let report = scan("mixed", corpus, &[CheckId::Val], &VerifyConfig::default());
    assert_eq!(report.input_errors.len(), 1);
    assert_eq!(report.input_errors[0].line, 2);
    assert_eq!(report.stats.graphs, 2);
    let empty = scan("empty", Vec::new(), &[CheckId::Val], &VerifyConfig::default());
    assert!(empty.outcomes.is_empty());
    assert_eq!(empty.tallies[&CheckId::Val], Tally::default());
}

#[test]
fn outcomes_round_trip_through_json() {
    let ctx = ctx("cycle:5");
    let c = &orbits(&ctx, 0)[0];
    let k2 = Context::new(make_family("complete:2").unwrap(), 1, &SolverConfig::default()).unwrap();
    let full = PartialColoring::from_colors(k2.graph.clone(), 1, &[Some(1)]).unwrap();
    for o in [
        check_vf1(&ctx, c, Some(0)).unwrap(),
        check_theorem_main(&ctx),
        check_elementary_edge_count(&k2, &full, None),
    ] {
        let line = o.to_json();
        let back: CheckOutcome = serde_json::from_str(&line).unwrap();
        assert_eq!(back, o, "{line}");
    }
}

#[test]
fn check_names() {
    assert_eq!(parse_checks("vf1, val").unwrap(), vec![CheckId::Vf1, CheckId::Val]);
    assert_eq!(parse_checks("all").unwrap().len(), 7);
    assert_eq!(parse_checks("vf1,nosuch").unwrap_err(), UnknownCheck("nosuch".into()));
}
