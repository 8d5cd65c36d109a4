//! Multi-fans, linear sequences and shifting.
//!
//! Every structure here is a snapshot of one coloring state. A [`MultiFan`]
//! owns a copy of its source coloring; a [`LinearSequence`] records the stamp
//! of the coloring it was validated against and is rejected by [`shift`] when
//! applied to any other state.
//!
//! Maximal fans are grown deterministically: the colored edges at the center
//! are scanned in ascending `(color, neighbor)` order and the first admissible
//! one is appended, repeating until nothing is admissible. The resulting
//! vertex set does not depend on the scan order (it is the closure of `s_0`
//! under the fan condition), only the sequence order does.

mod extended;
mod order;
mod render;

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::chromatic::{self, SolverConfig, SolverError};
use crate::coloring::{Color, ColorSet, ColoringError, NonElementary, PartialColoring};
use crate::graph::{EdgeId, Graph, GraphError, Vertex};

pub use extended::{extend_multifan, tau_sequences_outside, ExtendedMultiFan, ExtensionSequence, TauSeqType};
pub use order::{fan_order, stopping_colors, FanOrder, StoppingColors};
pub use render::{render_extended, render_fan, render_order, render_sequence, render_stopping};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("the coloring has no uncolored edge")]
    NoUncoloredEdge,
    #[error("the uncolored edge is not incident to center {0}")]
    UncoloredNotAtCenter(Vertex),
    #[error("fan vertex set is not elementary: {0}")]
    NonElementary(NonElementary),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("fan order is not a strict partial order: {0}")]
    InvalidOrder(String),
    #[error("sequence was built on coloring state {expected}, not {found}")]
    Stale { expected: u64, found: u64 },
    #[error("shift indices {i}..{j} out of range for a sequence with last index {q}")]
    IndexOutOfRange { i: usize, j: usize, q: usize },
    #[error("color {0} is not on an edge from the center to a vertex outside the fan")]
    TauNotOutside(Color),
    #[error("the fan is not maximal")]
    NotMaximal,
    #[error("color {color} is not a stopping color missing at fan vertex {vertex}")]
    NotStoppingPivot { vertex: Vertex, color: Color },
    #[error("edge {edge:?} is not a critical edge of a class 2 graph")]
    NotCritical { edge: (Vertex, Vertex) },
    #[error("vertex {0} is not an endpoint of the edge")]
    NotEndpoint(Vertex),
    #[error("extremal sequence matches {0} of the four terminal types")]
    Unclassifiable(usize),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(r, e_0, s_0, e_1, s_1, ..., e_q, s_q)` with `e_i = r s_i` and, for
/// `i ≥ 1`, the color of `e_i` missing at `s_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSequence {
    center: Vertex,
    items: Vec<(EdgeId, Vertex)>,
    stamp: u64,
}

impl LinearSequence {
    /// Validates `items` as a linear sequence at `center` under `c`.
    pub fn new(c: &PartialColoring, center: Vertex, items: Vec<(EdgeId, Vertex)>) -> Result<Self, FanError> {
        let g = c.host();
        let bad = |m: String| Err(FanError::InvalidSequence(m));
        if items.is_empty() {
            return bad("a linear sequence has at least one edge".into());
        }
        let mut seen = vec![center];
        for (i, &(e, s)) in items.iter().enumerate() {
            if seen.contains(&s) {
                return bad(format!("vertex {s} repeats"));
            }
            seen.push(s);
            if g.edge_id(center, s) != Some(e) {
                return bad(format!("edge {e} does not join {center} and {s}"));
            }
            if i >= 1 {
                let prev = items[i - 1].1;
                match c.color(e) {
                    Some(col) if c.missing(prev).contains(col) => {}
                    _ => return bad(format!("color of edge {center}-{s} is not missing at {prev}")),
                }
            }
        }
        Ok(LinearSequence {
            center,
            items,
            stamp: c.stamp(),
        })
    }

    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn items(&self) -> &[(EdgeId, Vertex)] {
        &self.items
    }

    /// Index `q` of the last vertex.
    pub fn last_index(&self) -> usize {
        self.items.len() - 1
    }

    /// `s_0, ..., s_q` (without the center).
    pub fn tail_vertices(&self) -> Vec<Vertex> {
        self.items.iter().map(|&(_, s)| s).collect()
    }

    /// V(L): the center followed by `s_0, ..., s_q`.
    pub fn vertices(&self) -> Vec<Vertex> {
        std::iter::once(self.center)
            .chain(self.items.iter().map(|&(_, s)| s))
            .collect()
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        self.items.iter().map(|&(e, _)| e).collect()
    }

    pub fn stamp(&self) -> u64 {
        self.stamp
    }
}

/// A multi-fan at `center` with respect to the uncolored edge of its source
/// coloring.
#[derive(Debug, Clone)]
pub struct MultiFan {
    center: Vertex,
    items: Vec<(EdgeId, Vertex)>,
    coloring: PartialColoring,
    maximal: bool,
}

impl MultiFan {
    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn items(&self) -> &[(EdgeId, Vertex)] {
        &self.items
    }

    pub fn coloring(&self) -> &PartialColoring {
        &self.coloring
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    /// V(F) in sequence order, center first.
    pub fn vertices(&self) -> Vec<Vertex> {
        std::iter::once(self.center)
            .chain(self.items.iter().map(|&(_, s)| s))
            .collect()
    }

    /// `s_0, ..., s_p`.
    pub fn fan_vertices(&self) -> Vec<Vertex> {
        self.items.iter().map(|&(_, s)| s).collect()
    }

    /// |V(F)|, counting the center.
    pub fn size(&self) -> usize {
        self.items.len() + 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v == self.center || self.items.iter().any(|&(_, s)| s == v)
    }

    /// φ̄(V(F)), including the center.
    pub fn missing_union(&self) -> ColorSet {
        self.coloring.missing_union(self.vertices())
    }

    pub fn is_elementary(&self) -> Result<(), NonElementary> {
        self.coloring.is_elementary(&self.vertices())
    }

    /// The unique fan vertex missing `color`, assuming V(F) is elementary.
    pub fn locate(&self, color: Color) -> Option<Vertex> {
        self.vertices()
            .into_iter()
            .find(|&v| self.coloring.missing(v).contains(color))
    }

    /// Colored edges `r x` with `x` outside the fan whose color is missing at
    /// some `s_j`, in ascending `(color, x)` order.
    pub fn admissible_extensions(&self) -> Vec<(Color, Vertex, EdgeId)> {
        let c = &self.coloring;
        let tail_missing = c.missing_union(self.fan_vertices());
        let mut out: Vec<(Color, Vertex, EdgeId)> = c
            .host()
            .incident(self.center)
            .filter_map(|e| {
                let x = c.host().other_end(e, self.center);
                let col = c.color(e)?;
                (!self.contains(x) && tail_missing.contains(col)).then_some((col, x, e))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Re-checks the fan condition at every prefix.
    pub fn check_fan_condition(&self) -> Result<(), FanError> {
        let c = &self.coloring;
        let (e0, s0) = self.items[0];
        if c.uncolored_edge() != Some(e0) || c.host().edge_id(self.center, s0) != Some(e0) {
            return Err(FanError::InvalidSequence("e_0 must be the uncolored edge r s_0".into()));
        }
        let mut seen = vec![self.center, s0];
        let mut missing = c.missing(s0);
        for &(e, s) in &self.items[1..] {
            if seen.contains(&s) || c.host().edge_id(self.center, s) != Some(e) {
                return Err(FanError::InvalidSequence(format!("bad fan item {s}")));
            }
            match c.color(e) {
                Some(col) if missing.contains(col) => {}
                _ => return Err(FanError::InvalidSequence(format!("fan condition fails at {s}"))),
            }
            seen.push(s);
            missing = missing.union(c.missing(s));
        }
        Ok(())
    }

    /// Every linear sequence at the center starting from `s_0` that stays
    /// inside V(F) (all prefixes included), in depth-first order.
    pub fn linear_sequences(&self) -> Vec<LinearSequence> {
        let c = &self.coloring;
        let fan = self.fan_vertices();
        let (e0, s0) = self.items[0];
        let mut out = Vec::new();
        let mut path = vec![(e0, s0)];
        fn walk(
            c: &PartialColoring,
            center: Vertex,
            fan: &[Vertex],
            path: &mut Vec<(EdgeId, Vertex)>,
            out: &mut Vec<LinearSequence>,
        ) {
            out.push(LinearSequence {
                center,
                items: path.clone(),
                stamp: c.stamp(),
            });
            let last = path.last().unwrap().1;
            let miss = c.missing(last);
            for &x in fan {
                if path.iter().any(|&(_, s)| s == x) {
                    continue;
                }
                let e = c.host().edge_id(center, x).expect("fan vertices are neighbors");
                if c.color(e).is_some_and(|col| miss.contains(col)) {
                    path.push((e, x));
                    walk(c, center, fan, path, out);
                    path.pop();
                }
            }
        }
        walk(c, self.center, &fan, &mut path, &mut out);
        out
    }
}

fn seed_fan(c: &PartialColoring, r: Vertex) -> Result<MultiFan, FanError> {
    let e = c.uncolored_edge().ok_or(FanError::NoUncoloredEdge)?;
    let (a, b) = c.host().endpoints(e);
    let s0 = match r {
        _ if r == a => b,
        _ if r == b => a,
        _ => return Err(FanError::UncoloredNotAtCenter(r)),
    };
    Ok(MultiFan {
        center: r,
        items: vec![(e, s0)],
        coloring: c.clone(),
        maximal: false,
    })
}

/// A maximal multi-fan at `r` with respect to the uncolored edge of `c`.
pub fn grow_multifan(c: &PartialColoring, r: Vertex) -> Result<MultiFan, FanError> {
    let mut fan = seed_fan(c, r)?;
    while let Some(&(_, x, e)) = fan.admissible_extensions().first() {
        fan.items.push((e, x));
    }
    fan.maximal = true;
    Ok(fan)
}

/// Like [`grow_multifan`], but picks uniformly among admissible extensions.
pub fn grow_multifan_shuffled<R: Rng>(c: &PartialColoring, r: Vertex, rng: &mut R) -> Result<MultiFan, FanError> {
    let mut fan = seed_fan(c, r)?;
    loop {
        let options = fan.admissible_extensions();
        match options.choose(rng) {
            Some(&(_, x, e)) => fan.items.push((e, x)),
            None => break,
        }
    }
    fan.maximal = true;
    Ok(fan)
}

/// Shifts colors backward along `seq` from `s_i` to `s_j`: `e_t` takes the
/// old color of `e_{t+1}` for `i ≤ t < j`, and `e_j` is left uncolored and
/// returned. If the designated uncolored edge gets colored, `e_j` becomes
/// the designated edge; otherwise `e_j` is the coloring's dangling edge.
pub fn shift(
    c: &PartialColoring,
    seq: &LinearSequence,
    i: usize,
    j: usize,
) -> Result<(PartialColoring, EdgeId), FanError> {
    if seq.stamp != c.stamp() {
        return Err(FanError::Stale {
            expected: seq.stamp,
            found: c.stamp(),
        });
    }
    let q = seq.last_index();
    if i > j || j > q {
        return Err(FanError::IndexOutOfRange { i, j, q });
    }
    let edges = seq.edges();
    let mut changes: Vec<(EdgeId, Color)> = (i..j)
        .map(|t| (edges[t], c.color(edges[t + 1]).expect("e_t for t ≥ 1 is colored")))
        .collect();
    let dangling = edges[j];
    changes.push((dangling, 0));
    let still_open = |e: EdgeId| e == dangling || !edges[i..j].contains(&e);
    let mut holes: Vec<EdgeId> = c
        .uncolored_edge()
        .into_iter()
        .chain(c.dangling_edge())
        .filter(|&e| still_open(e))
        .collect();
    if !holes.contains(&dangling) {
        holes.push(dangling);
    }
    if holes.len() > 2 {
        return Err(ColoringError::TooManyUncolored.into());
    }
    let designated = holes[0];
    let extra = holes.get(1).copied();
    let next = c.reassign(&changes, Some(designated), extra)?;
    Ok((next, dangling))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    /// Maximum taken over a complete enumeration of coloring orbits.
    Certified,
    /// Best over a partial enumeration plus randomized restarts.
    BestFound,
}

#[derive(Debug, Clone, Copy)]
pub struct FanSearchConfig {
    pub solver: SolverConfig,
    pub restarts: usize,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x5eed_fa11;

impl Default for FanSearchConfig {
    fn default() -> Self {
        FanSearchConfig {
            solver: SolverConfig::default(),
            restarts: 512,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone)]
pub struct MaximumFan {
    pub coloring: PartialColoring,
    pub fan: MultiFan,
    pub certainty: Certainty,
    /// Number of coloring orbits examined.
    pub orbits: usize,
    /// Every examined orbit whose maximal fan at the center reaches the
    /// maximum size, in enumeration order.
    pub maximizers: Vec<PartialColoring>,
}

/// Requires `e` to be a critical edge of a class 2 graph; returns Δ.
pub(crate) fn require_critical(g: &Graph, e: EdgeId, solver: &SolverConfig) -> Result<usize, FanError> {
    let delta = g.max_degree();
    let cert = chromatic::chromatic_index(g, solver)?;
    let critical = cert.chi_prime == delta + 1 && chromatic::colorable_without(g, e, delta, solver)?;
    if critical {
        Ok(delta)
    } else {
        Err(FanError::NotCritical { edge: g.endpoints(e) })
    }
}

/// The largest maximal multi-fan at `r` over all Δ-colorings of `G − e`.
pub fn maximum_multifan(g: &Graph, e: EdgeId, r: Vertex, config: &FanSearchConfig) -> Result<MaximumFan, FanError> {
    if e >= g.edge_count() {
        return Err(SolverError::UnknownEdgeId(e).into());
    }
    let (a, b) = g.endpoints(e);
    if r != a && r != b {
        return Err(FanError::NotEndpoint(r));
    }
    let delta = require_critical(g, e, &config.solver)?;
    let listing = chromatic::enumerate_colorings(g, e, delta, &config.solver)?;
    maximum_over(listing.colorings, listing.complete, r, config)
}

/// Maximum fan at `r` over the given orbit representatives; when
/// `complete` is false the pool is widened by random Kempe walks.
pub(crate) fn maximum_over(
    pool: Vec<PartialColoring>,
    complete: bool,
    r: Vertex,
    config: &FanSearchConfig,
) -> Result<MaximumFan, FanError> {
    let mut best: Option<MultiFan> = None;
    let mut maximizers = Vec::new();
    let mut consider = |c: &PartialColoring, best: &mut Option<MultiFan>, keep: bool| -> Result<(), FanError> {
        let fan = grow_multifan(c, r)?;
        let size = fan.size();
        let current = best.as_ref().map_or(0, MultiFan::size);
        if size > current {
            maximizers.clear();
            *best = Some(fan);
        }
        if keep && size >= current.max(size) {
            maximizers.push(c.clone());
        }
        Ok(())
    };
    for c in &pool {
        consider(c, &mut best, true)?;
    }
    let orbits = pool.len();
    if !complete {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let starts = if pool.is_empty() {
            return Err(SolverError::Undecided {
                budget: config.solver.budget,
            }
            .into());
        } else {
            pool
        };
        for _ in 0..config.restarts {
            let mut c = starts.choose(&mut rng).expect("pool is nonempty").clone();
            let n = c.host().n();
            let palette = c.palette_size() as Color;
            for _ in 0..4 * n {
                let v = rng.gen_range(0..n);
                let Some(alpha) = c.missing(v).iter().nth(rng.gen_range(0..c.missing(v).len().max(1))) else {
                    continue;
                };
                let beta = rng.gen_range(1..=palette);
                if beta != alpha {
                    c.alpha_to_beta_in_place(v, alpha, beta)?;
                }
            }
            consider(&c, &mut best, false)?;
        }
    }
    let fan = best.ok_or(FanError::NoUncoloredEdge)?;
    Ok(MaximumFan {
        coloring: fan.coloring.clone(),
        fan,
        certainty: if complete {
            Certainty::Certified
        } else {
            Certainty::BestFound
        },
        orbits,
        maximizers,
    })
}

impl fmt::Display for MultiFan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.center)?;
        let g = self.coloring.host();
        for &(e, s) in &self.items {
            let (a, b) = g.endpoints(e);
            write!(f, ", {a}{b}, {s}")?;
        }
        write!(f, ")")
    }
}
