use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{check_extend, ExtendSummary};
use super::hypotheses::smallest_satisfiable_order;
use super::{
    check_edge_orbits, check_lemma1, check_theorem_main, check_val, CheckId, CheckOutcome, Context, EdgeOrbits,
    SolverStats, Tally, VerificationReport, VerifyConfig, VerifyError,
};
use crate::chromatic::SolverError;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// A corpus line that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

pub type CorpusItem = Result<Graph, InputError>;

/// Parses one graph6 string per line; blank lines are ignored.
pub fn read_corpus(text: &str) -> Vec<CorpusItem> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim().as_bytes()).map_err(|e| InputError {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Per-graph results before reduction.
#[derive(Debug, Default)]
pub(crate) struct GraphRun {
    pub outcomes: Vec<CheckOutcome>,
    pub stats: SolverStats,
    pub extend: ExtendSummary,
}

fn wants(checks: &[CheckId], c: CheckId) -> bool {
    checks.contains(&c)
}

/// Every selected check on one graph, in a fixed order.
pub fn run_checks(ctx: &Context, checks: &[CheckId], config: &VerifyConfig) -> Result<Vec<CheckOutcome>, VerifyError> {
    run_graph(ctx, checks, config).map(|r| r.outcomes)
}

pub(crate) fn run_graph(ctx: &Context, checks: &[CheckId], config: &VerifyConfig) -> Result<GraphRun, VerifyError> {
    let mut run = GraphRun::default();
    run.stats.graphs = 1;
    let per_orbit: Vec<CheckId> = [CheckId::Vf1, CheckId::Vf2, CheckId::Edgecount]
        .into_iter()
        .filter(|&c| wants(checks, c))
        .collect();
    let per_edge = !per_orbit.is_empty() || wants(checks, CheckId::Extend);
    if per_edge {
        if !ctx.class2 {
            for &c in per_orbit
                .iter()
                .chain(wants(checks, CheckId::Extend).then_some(&CheckId::Extend))
            {
                run.outcomes
                    .push(super::checks::vacuous(c, ctx.instance(), "graph is class 1"));
            }
        } else {
            for e in 0..ctx.graph.edge_count() {
                if !ctx.critical[e] {
                    for &c in per_orbit
                        .iter()
                        .chain(wants(checks, CheckId::Extend).then_some(&CheckId::Extend))
                    {
                        run.outcomes
                            .push(super::checks::vacuous(c, ctx.edge_instance(e), "edge is not critical"));
                    }
                    continue;
                }
                let orbits = EdgeOrbits::enumerate(ctx, e, config)?;
                run.stats.enumeration_nodes += orbits.nodes;
                run.stats.orbits += orbits.colorings.len();
                run.stats.truncated_enumerations += usize::from(!orbits.complete);
                run.outcomes.extend(check_edge_orbits(ctx, &orbits, &per_orbit)?);
                if wants(checks, CheckId::Extend) {
                    let (o, summary) = check_extend(ctx, &orbits, config)?;
                    run.outcomes.push(o);
                    run.extend.pivots += summary.pivots;
                    run.extend.nonempty += summary.nonempty;
                    if run.extend.first_nonempty.is_none() {
                        run.extend.first_nonempty = summary.first_nonempty;
                    }
                }
            }
        }
    }
    if wants(checks, CheckId::Val) {
        run.outcomes.push(check_val(ctx));
    }
    if wants(checks, CheckId::Lemma1) {
        run.outcomes.push(check_lemma1(ctx, config)?);
    }
    if wants(checks, CheckId::Theorem) {
        run.outcomes.push(check_theorem_main(ctx));
    }
    Ok(run)
}

fn undecided_run(g: &Graph, index: usize, checks: &[CheckId], err: &VerifyError) -> GraphRun {
    let graph6 = crate::graph6::write_graph6(g).unwrap_or_default();
    let reason = format!("undecided: {err}");
    let outcomes = checks
        .iter()
        .map(|&c| {
            super::checks::skipped(
                c,
                super::Instance {
                    graph6: graph6.clone(),
                    index,
                    edge: None,
                    orbit: None,
                    fingerprint: None,
                    params: BTreeMap::new(),
                },
                &reason,
            )
        })
        .collect();
    GraphRun {
        outcomes,
        stats: SolverStats {
            graphs: 1,
            undecided: 1,
            ..SolverStats::default()
        },
        ..GraphRun::default()
    }
}

/// Runs `checks` over every graph of `corpus` in parallel. Parse errors are
/// recorded and skipped; graphs the solver cannot decide within budget get
/// `skipped` outcomes.
pub fn scan(corpus_id: &str, corpus: Vec<CorpusItem>, checks: &[CheckId], config: &VerifyConfig) -> VerificationReport {
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let results: Vec<Result<GraphRun, InputError>> = corpus
        .into_par_iter()
        .enumerate()
        .map(|(index, item)| {
            let g = item?;
            let run = Context::new(g.clone(), index, &config.solver)
                .and_then(|ctx| run_graph(&ctx, &checks, config))
                .unwrap_or_else(|e| match e {
                    VerifyError::Solver(SolverError::Undecided { .. }) => undecided_run(&g, index, &checks, &e),
                    other => GraphRun {
                        outcomes: checks
                            .iter()
                            .map(|&c| {
                                let mut inst = super::Instance {
                                    graph6: crate::graph6::write_graph6(&g).unwrap_or_default(),
                                    index,
                                    edge: None,
                                    orbit: None,
                                    fingerprint: None,
                                    params: BTreeMap::new(),
                                };
                                inst.params.insert("error".into(), other.to_string());
                                super::checks::skipped(c, inst, "internal error")
                            })
                            .collect(),
                        stats: SolverStats {
                            graphs: 1,
                            ..SolverStats::default()
                        },
                        ..GraphRun::default()
                    },
                });
            Ok(run)
        })
        .collect();

    let mut report = VerificationReport {
        corpus: corpus_id.to_string(),
        seed: config.fan.seed,
        budget: config.solver.budget,
        checks: checks.clone(),
        hypothesis_threshold: smallest_satisfiable_order(2),
        ..VerificationReport::default()
    };
    for &c in &checks {
        report.tallies.insert(c, Tally::default());
    }
    for r in results {
        match r {
            Err(e) => report.input_errors.push(e),
            Ok(run) => {
                for o in &run.outcomes {
                    report.tallies.entry(o.check).or_default().add(&o.verdict);
                }
                report.outcomes.extend(run.outcomes);
                let s = &mut report.stats;
                s.graphs += run.stats.graphs;
                s.undecided += run.stats.undecided;
                s.enumeration_nodes += run.stats.enumeration_nodes;
                s.truncated_enumerations += run.stats.truncated_enumerations;
                s.orbits += run.stats.orbits;
                report.nonempty_extensions += run.extend.nonempty;
                if report.first_nonempty_extension.is_none() {
                    report.first_nonempty_extension = run.extend.first_nonempty;
                }
            }
        }
    }
    report
}
