use std::sync::Arc;

use thiserror::Error;

use super::checks::{edgecount_at, extend_at, lemma1_at, val_edge, vf1_at, vf2_at};
use super::{check_theorem_main, CheckId, CheckOutcome, Context, VerifyError, Witness};
use crate::chromatic::SolverConfig;
use crate::coloring::{ColoringError, PartialColoring};
use crate::graph6::{parse_graph6, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("outcome carries no witness")]
    NoWitness,
    #[error("witness is missing field `{0}`")]
    Incomplete(&'static str),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// Re-evaluates a failing outcome from its graph6 string and witness alone.
/// Returns the witness found now; a faithful replay returns one equal to
/// the recorded witness.
pub fn replay(outcome: &CheckOutcome) -> Result<Option<Witness>, ReplayError> {
    let w = outcome.witness.as_ref().ok_or(ReplayError::NoWitness)?;
    let g = Arc::new(parse_graph6(outcome.instance.graph6.as_bytes())?);
    let coloring = || PartialColoring::from_dump(g.clone(), &w.coloring, None);
    let found = match outcome.check {
        CheckId::Vf1 => vf1_at(&coloring()?).map_err(VerifyError::from)?,
        CheckId::Vf2 => vf2_at(&coloring()?, w.center.ok_or(ReplayError::Incomplete("center"))?)?,
        CheckId::Extend => {
            let r = w.center.ok_or(ReplayError::Incomplete("center"))?;
            let (pivot, beta) = w.pivot.ok_or(ReplayError::Incomplete("pivot"))?;
            extend_at(&coloring()?, r, pivot, beta)?.0
        }
        CheckId::Lemma1 => {
            let k = outcome
                .instance
                .params
                .get("k")
                .and_then(|k| k.parse().ok())
                .ok_or(ReplayError::Incomplete("k"))?;
            lemma1_at(&coloring()?, k)
        }
        CheckId::Edgecount => edgecount_at(&g, &coloring()?).ok().flatten(),
        CheckId::Val => match w.vertices.as_slice() {
            [x, y] => val_edge(&g, *x, *y),
            _ => return Err(ReplayError::Incomplete("vertices")),
        },
        CheckId::Theorem => {
            let ctx = Context::new((*g).clone(), outcome.instance.index, &SolverConfig::default())?;
            check_theorem_main(&ctx).witness
        }
    };
    Ok(found)
}
