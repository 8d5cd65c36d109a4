//! Executable checks of the fan lemmas on concrete instances.
//!
//! Checks quantify over coloring orbits (colorings of `G − e` modulo
//! permutations of the palette). Every predicate evaluated here is
//! invariant under renaming colors: missing sets, elementarity, Kempe
//! linkage, the fan order and the stopping colors all transform by the same
//! permutation, and each claim quantifies over all colors. One
//! representative per orbit therefore decides the claim for the whole orbit.
//!
//! Checks whose hypotheses mention a maximum multi-fan only run when the
//! maximum was certified by a complete orbit enumeration; otherwise they
//! report `skipped`.

mod checks;
mod gadget;
mod hypotheses;
mod replay;
mod scan;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chromatic::{self, SolverConfig, SolverError};
use crate::coloring::{Color, ColoringError};
use crate::fan::{FanError, FanSearchConfig};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::graph6::{write_graph6, Graph6Error};

pub use checks::{
    check_edge_orbits, check_elementary_edge_count, check_extend, check_lemma1, check_theorem_main, check_val,
    check_vf1, check_vf2, EdgeOrbits,
};
pub use gadget::{search_extension_gadget, GadgetSearch};
pub use hypotheses::{degree_bound_holds, smallest_satisfiable_order, TheoremHypotheses};
pub use replay::{replay, ReplayError};
pub use scan::{read_corpus, run_checks, scan, CorpusItem, InputError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckId {
    Vf1,
    Vf2,
    Val,
    Extend,
    Lemma1,
    Theorem,
    Edgecount,
}

impl CheckId {
    pub const ALL: [CheckId; 7] = [
        CheckId::Vf1,
        CheckId::Vf2,
        CheckId::Val,
        CheckId::Extend,
        CheckId::Lemma1,
        CheckId::Theorem,
        CheckId::Edgecount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Vf1 => "vf1",
            CheckId::Vf2 => "vf2",
            CheckId::Val => "val",
            CheckId::Extend => "extend",
            CheckId::Lemma1 => "lemma1",
            CheckId::Theorem => "theorem",
            CheckId::Edgecount => "edgecount",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check `{0}` (expected one of vf1, vf2, val, extend, lemma1, theorem, edgecount)")]
pub struct UnknownCheck(pub String);

impl FromStr for CheckId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| UnknownCheck(s.trim().to_string()))
    }
}

/// Parses a comma-separated check list; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<Vec<CheckId>, UnknownCheck> {
    if list.trim() == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut out: Vec<CheckId> = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
    Vacuous(String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// The evaluated instance: graph, optional edge and coloring orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub graph6: String,
    /// Position of the graph in its corpus.
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge: Option<(Vertex, Vertex)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fingerprint: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub params: BTreeMap<String, String>,
}

/// A counterexample that [`replay`] re-derives from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which sub-claim failed, e.g. `vf2(c)` or `extend(a)`.
    pub part: String,
    /// Coloring dump (see `PartialColoring::to_dump`); empty for
    /// coloring-free claims.
    pub coloring: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub center: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pivot: Option<(Vertex, Color)>,
    pub vertices: Vec<Vertex>,
    pub colors: Vec<Color>,
    /// Operations applied to reach `coloring` from the enumerated orbit
    /// representative; empty when `coloring` is the representative itself.
    #[serde(default)]
    pub trace: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: CheckId,
    #[serde(flatten)]
    pub instance: Instance,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("outcomes serialize")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn add(&mut self, v: &Verdict) {
        self.instances += 1;
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Vacuous(_) => self.vacuous += 1,
            Verdict::Skipped(_) => self.skipped += 1,
        }
    }

    pub fn reconciles(&self) -> bool {
        self.pass + self.fail + self.vacuous + self.skipped == self.instances
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverStats {
    pub graphs: usize,
    pub undecided: usize,
    /// Search nodes spent enumerating coloring orbits.
    pub enumeration_nodes: u64,
    /// Critical edges whose orbit enumeration hit the budget.
    pub truncated_enumerations: usize,
    pub orbits: usize,
}

/// First instance (in corpus order) whose extended multi-fan has a
/// nonempty F′.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSighting {
    pub graph6: String,
    pub edge: (Vertex, Vertex),
    pub center: Vertex,
    pub pivot: Vertex,
    pub beta: Color,
    pub extension_vertices: Vec<Vertex>,
    /// Dump of the coloring the fan was grown from.
    pub coloring: String,
    /// Whether the fan is a maximum multi-fan over all orbits.
    pub maximum_fan: bool,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub seed: u64,
    pub budget: u64,
    pub checks: Vec<CheckId>,
    pub tallies: BTreeMap<CheckId, Tally>,
    /// Every outcome, ordered by corpus index.
    pub outcomes: Vec<CheckOutcome>,
    pub input_errors: Vec<InputError>,
    pub stats: SolverStats,
    /// (edge, pivot) pairs evaluated by the extend check with nonempty F′.
    pub nonempty_extensions: usize,
    pub first_nonempty_extension: Option<ExtensionSighting>,
    /// Smallest order at which the degree hypothesis can hold for k = 2.
    pub hypothesis_threshold: usize,
}

impl VerificationReport {
    pub fn non_pass(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.verdict.is_pass())
    }

    pub fn failures(&self) -> usize {
        self.tallies.values().map(|t| t.fail).sum()
    }

    pub fn reconciles(&self) -> bool {
        let mut recount: BTreeMap<CheckId, Tally> = BTreeMap::new();
        for o in &self.outcomes {
            recount.entry(o.check).or_default().add(&o.verdict);
        }
        self.tallies.values().all(Tally::reconciles)
            && self
                .tallies
                .iter()
                .all(|(k, t)| recount.get(k).copied().unwrap_or_default() == *t)
    }

    /// One JSON object per line: a header, then every outcome.
    pub fn to_jsonl(&self) -> String {
        let header = serde_json::json!({
            "record": "header",
            "corpus": self.corpus,
            "seed": self.seed,
            "budget": self.budget,
            "checks": self.checks,
            "tallies": self.tallies,
            "input_errors": self.input_errors,
            "stats": self.stats,
            "nonempty_extensions": self.nonempty_extensions,
            "first_nonempty_extension": self.first_nonempty_extension,
            "hypothesis_threshold": self.hypothesis_threshold,
        });
        let mut out = header.to_string();
        out.push('\n');
        for o in &self.outcomes {
            out.push_str(&o.to_json());
            out.push('\n');
        }
        out
    }

    /// Human-readable tally table.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "corpus {}  seed {}  budget {}\n{:<10} {:>9} {:>9} {:>6} {:>9} {:>9}\n",
            self.corpus, self.seed, self.budget, "check", "instances", "pass", "fail", "vacuous", "skipped"
        );
        for (id, t) in &self.tallies {
            out.push_str(&format!(
                "{:<10} {:>9} {:>9} {:>6} {:>9} {:>9}\n",
                id.name(),
                t.instances,
                t.pass,
                t.fail,
                t.vacuous,
                t.skipped
            ));
        }
        out.push_str(&format!(
            "graphs {}  undecided {}  orbits {}  truncated enumerations {}  input errors {}\n",
            self.stats.graphs,
            self.stats.undecided,
            self.stats.orbits,
            self.stats.truncated_enumerations,
            self.input_errors.len()
        ));
        if self.checks.contains(&CheckId::Extend) {
            match &self.first_nonempty_extension {
                Some(s) => out.push_str(&format!(
                    "nonempty F' instances {}  first {} edge {}-{} center {} pivot {} beta {}\n",
                    self.nonempty_extensions, s.graph6, s.edge.0, s.edge.1, s.center, s.pivot, s.beta
                )),
                None => {
                    out.push_str("nonempty F' instances 0: no extended multi-fan with nonempty F' in this corpus\n")
                }
            }
        }
        if self
            .checks
            .iter()
            .any(|c| matches!(c, CheckId::Lemma1 | CheckId::Theorem))
        {
            out.push_str(&format!(
                "degree hypothesis first satisfiable at n = {} (k = 2)\n",
                self.hypothesis_threshold
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub solver: SolverConfig,
    /// Node budget for enumerating coloring orbits of one `G − e`.
    pub orbit_budget: u64,
    pub fan: FanSearchConfig,
}

pub const DEFAULT_ORBIT_BUDGET: u64 = 2_000_000;

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            solver: SolverConfig::default(),
            orbit_budget: DEFAULT_ORBIT_BUDGET,
            fan: FanSearchConfig::default(),
        }
    }
}

impl VerifyConfig {
    pub fn with_budget(budget: u64) -> Self {
        let solver = SolverConfig { budget };
        VerifyConfig {
            solver,
            orbit_budget: budget.min(DEFAULT_ORBIT_BUDGET),
            fan: FanSearchConfig {
                solver,
                ..FanSearchConfig::default()
            },
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.fan.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Per-graph facts shared by every check.
#[derive(Debug, Clone)]
pub struct Context {
    pub graph: Arc<Graph>,
    pub graph6: String,
    pub index: usize,
    pub delta: usize,
    pub chi_prime: usize,
    pub class2: bool,
    /// Indexed by edge id; all false for class 1 graphs.
    pub critical: Vec<bool>,
}

impl Context {
    pub fn new(g: Graph, index: usize, config: &SolverConfig) -> Result<Self, VerifyError> {
        let graph6 = write_graph6(&g)?;
        let delta = g.max_degree();
        let chi_prime = chromatic::chromatic_index(&g, config)?.chi_prime;
        let class2 = g.edge_count() > 0 && chi_prime == delta + 1;
        let critical = if class2 {
            chromatic::critical_edges(&g, chi_prime, config)?
        } else {
            vec![false; g.edge_count()]
        };
        Ok(Context {
            graph: Arc::new(g),
            graph6,
            index,
            delta,
            chi_prime,
            class2,
            critical,
        })
    }

    pub fn is_critical_graph(&self) -> bool {
        self.class2 && self.graph.is_connected() && self.critical.iter().all(|&b| b)
    }

    pub fn critical_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.critical.len()).filter(|&e| self.critical[e])
    }

    pub(crate) fn instance(&self) -> Instance {
        Instance {
            graph6: self.graph6.clone(),
            index: self.index,
            edge: None,
            orbit: None,
            fingerprint: None,
            params: BTreeMap::new(),
        }
    }

    pub(crate) fn edge_instance(&self, e: EdgeId) -> Instance {
        Instance {
            edge: Some(self.graph.endpoints(e)),
            ..self.instance()
        }
    }
}

#[cfg(test)]
mod tests;
