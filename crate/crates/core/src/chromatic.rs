//! Exact chromatic index, criticality, constructive Vizing colorings, and
//! enumeration of colorings up to color permutation.
//!
//! The exact solver is a backtracking search over edges. At every node it
//! picks the uncolored edge with the fewest available colors (ties broken
//! toward larger degree sum, then smaller id), and only tries colors already
//! introduced plus the smallest unused one, since unused colors are
//! interchangeable. A node is cut when some color cannot cover its share of
//! the remaining edges: color `c` can still be placed on at most
//! `⌊m_c / 2⌋` more edges, where `m_c` counts vertices with an uncolored
//! edge at which `c` is free. At the root this bound alone refutes every
//! overfull graph.
//!
//! Critical graphs: `G` is called critical here when it is connected, class 2,
//! and `χ′(G − e) < χ′(G)` for every edge `e`. For the chromatic index this
//! agrees with "every proper subgraph has smaller χ′": removing vertices only
//! removes edges (or isolated vertices, which a connected graph with an edge
//! does not have), and χ′ is monotone under taking subgraphs, so it suffices to
//! check single-edge deletions.

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, Graph, GraphError, Vertex};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of search nodes per search before giving up.
    pub budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("undecided: search budget of {budget} nodes exhausted")]
    Undecided { budget: u64 },
    #[error("edge id {0} is out of range")]
    UnknownEdgeId(EdgeId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBound {
    /// χ′ ≥ Δ holds for every graph.
    MaxDegree,
    /// No Δ-coloring exists; the search tree of this many nodes was exhausted.
    SearchExhaustion { nodes: u64 },
}

#[derive(Debug, Clone)]
pub struct ChromaticCertificate {
    pub chi_prime: usize,
    pub witness: PartialColoring,
    pub lower_bound: LowerBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Class1,
    Class2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

/// Backtracking k-edge-coloring of `g`, optionally skipping one edge.
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    active: Vec<bool>,
    colors: Vec<Color>,
    used: Vec<u64>,
    open_degree: Vec<usize>,
    degree_sum: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, skip: Option<EdgeId>, budget: u64) -> Self {
        let active: Vec<bool> = (0..g.edge_count()).map(|i| Some(i) != skip).collect();
        let mut open_degree = vec![0; g.n()];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if active[id] {
                open_degree[u] += 1;
                open_degree[v] += 1;
            }
        }
        let degree_sum = g
            .edges()
            .iter()
            .map(|&(u, v)| open_degree[u] + open_degree[v])
            .collect();
        Search {
            g,
            k,
            colors: vec![0; g.edge_count()],
            used: vec![0; g.n()],
            degree_sum,
            open_degree,
            active,
            nodes: 0,
            budget,
        }
    }

    fn full(&self) -> u64 {
        ((1u64 << self.k) - 1) << 1
    }

    fn trivially_infeasible(&self) -> bool {
        self.open_degree.iter().any(|&d| d > self.k)
    }

    fn set(&mut self, id: EdgeId, c: Color) {
        let (u, v) = self.g.endpoints(id);
        self.colors[id] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
        self.open_degree[u] -= 1;
        self.open_degree[v] -= 1;
    }

    fn unset(&mut self, id: EdgeId) {
        let (u, v) = self.g.endpoints(id);
        let c = self.colors[id];
        self.colors[id] = 0;
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
        self.open_degree[u] += 1;
        self.open_degree[v] += 1;
    }

    fn available(&self, id: EdgeId) -> u64 {
        let (u, v) = self.g.endpoints(id);
        self.full() & !(self.used[u] | self.used[v])
    }

    fn capacity_ok(&self, remaining: usize) -> bool {
        let mut total = 0;
        for c in 1..=self.k {
            let free = (0..self.g.n())
                .filter(|&v| self.open_degree[v] > 0 && self.used[v] >> c & 1 == 0)
                .count();
            total += free / 2;
            if total >= remaining {
                return true;
            }
        }
        total >= remaining
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.budget
    }

    /// Finds one coloring, choosing the most constrained edge at each node.
    fn solve(&mut self, remaining: usize, introduced: usize) -> Outcome {
        if !self.tick() {
            return Outcome::OutOfBudget;
        }
        if remaining == 0 {
            return Outcome::Found;
        }
        if !self.capacity_ok(remaining) {
            return Outcome::Exhausted;
        }
        let mut pick: Option<(u32, usize, EdgeId, u64)> = None;
        for id in 0..self.colors.len() {
            if !self.active[id] || self.colors[id] != 0 {
                continue;
            }
            let avail = self.available(id);
            let count = avail.count_ones();
            let better = match pick {
                None => true,
                Some((bc, bs, _, _)) => count < bc || (count == bc && self.degree_sum[id] > bs),
            };
            if better {
                pick = Some((count, self.degree_sum[id], id, avail));
                if count == 0 {
                    return Outcome::Exhausted;
                }
            }
        }
        let (_, _, id, avail) = pick.expect("remaining > 0 implies an open edge");
        let limit = (introduced + 1).min(self.k);
        for c in 1..=limit {
            if avail >> c & 1 == 0 {
                continue;
            }
            self.set(id, c as Color);
            let out = self.solve(remaining - 1, introduced.max(c));
            if out != Outcome::Exhausted {
                return out;
            }
            self.unset(id);
        }
        Outcome::Exhausted
    }

    fn open_edges(&self) -> usize {
        (0..self.colors.len())
            .filter(|&i| self.active[i] && self.colors[i] == 0)
            .count()
    }
}

/// Searches for a proper `k`-edge-coloring of `g` minus `skip`.
/// `Ok(None)` is a proof of infeasibility.
pub(crate) fn find_coloring(
    g: &Graph,
    k: usize,
    skip: Option<EdgeId>,
    budget: u64,
) -> Result<(Option<Vec<Color>>, u64), SolverError> {
    let mut search = Search::new(g, k, skip, budget);
    if search.trivially_infeasible() {
        return Ok((None, 0));
    }
    let remaining = search.open_edges();
    match search.solve(remaining, 0) {
        Outcome::Found => Ok((Some(search.colors), search.nodes)),
        Outcome::Exhausted => Ok((None, search.nodes)),
        Outcome::OutOfBudget => Err(SolverError::Undecided { budget }),
    }
}

pub(crate) fn to_coloring(g: &Graph, k: usize, colors: &[Color]) -> PartialColoring {
    let opts: Vec<Option<Color>> = colors.iter().map(|&c| (c != 0).then_some(c)).collect();
    PartialColoring::from_colors(Arc::new(g.clone()), k, &opts).expect("solver output is proper")
}

/// Exact χ′ with a witness coloring and a lower-bound justification.
pub fn chromatic_index(g: &Graph, config: &SolverConfig) -> Result<ChromaticCertificate, SolverError> {
    if g.n() == 0 {
        return Err(GraphError::Empty.into());
    }
    let delta = g.max_degree();
    match find_coloring(g, delta, None, config.budget)? {
        (Some(colors), _) => Ok(ChromaticCertificate {
            chi_prime: delta,
            witness: to_coloring(g, delta, &colors),
            lower_bound: LowerBound::MaxDegree,
        }),
        (None, nodes) => Ok(ChromaticCertificate {
            chi_prime: delta + 1,
            witness: vizing_color(g)?,
            lower_bound: LowerBound::SearchExhaustion { nodes },
        }),
    }
}

pub fn classify(g: &Graph, config: &SolverConfig) -> Result<EdgeClass, SolverError> {
    let cert = chromatic_index(g, config)?;
    Ok(if cert.chi_prime == g.max_degree() {
        EdgeClass::Class1
    } else {
        EdgeClass::Class2
    })
}

/// Whether `G − e` admits a proper `k`-edge-coloring.
pub fn colorable_without(g: &Graph, e: EdgeId, k: usize, config: &SolverConfig) -> Result<bool, SolverError> {
    Ok(find_coloring(g, k, Some(e), config.budget)?.0.is_some())
}

fn critical_given(g: &Graph, chi: usize, e: EdgeId, config: &SolverConfig) -> Result<bool, SolverError> {
    if chi == 0 {
        return Ok(false);
    }
    colorable_without(g, e, chi - 1, config)
}

/// `χ′(G − e) < χ′(G)`.
pub fn is_critical_edge(g: &Graph, (u, v): (Vertex, Vertex), config: &SolverConfig) -> Result<bool, SolverError> {
    let e = g.edge_id(u, v).ok_or(GraphError::UnknownEdge(u, v))?;
    let chi = chromatic_index(g, config)?.chi_prime;
    critical_given(g, chi, e, config)
}

/// Critical edges of `g` given its chromatic index, checked in parallel.
pub fn critical_edges(g: &Graph, chi: usize, config: &SolverConfig) -> Result<Vec<bool>, SolverError> {
    (0..g.edge_count())
        .into_par_iter()
        .map(|e| critical_given(g, chi, e, config))
        .collect()
}

/// Connected, class 2, and every edge critical.
pub fn is_critical(g: &Graph, config: &SolverConfig) -> Result<bool, SolverError> {
    if g.n() == 0 {
        return Err(GraphError::Empty.into());
    }
    if !g.is_connected() || g.edge_count() == 0 {
        return Ok(false);
    }
    let cert = chromatic_index(g, config)?;
    if cert.chi_prime == g.max_degree() {
        return Ok(false);
    }
    Ok(critical_edges(g, cert.chi_prime, config)?.into_iter().all(|b| b))
}

/// Proper (Δ+1)-edge-coloring by the fan-rotation method of Misra and Gries.
pub fn vizing_color(g: &Graph) -> Result<PartialColoring, SolverError> {
    if g.n() == 0 {
        return Err(GraphError::Empty.into());
    }
    let k = g.max_degree() + 1;
    let mut st = Raw::new(g, k);
    for id in 0..g.edge_count() {
        let (u, v) = g.endpoints(id);
        st.color_edge(u, v);
    }
    Ok(to_coloring(g, k, &st.colors))
}

struct Raw<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Color>,
    at: Vec<Vec<Option<EdgeId>>>,
}

impl<'a> Raw<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Raw {
            g,
            k,
            colors: vec![0; g.edge_count()],
            at: vec![vec![None; k + 1]; g.n()],
        }
    }

    fn is_free(&self, v: Vertex, c: Color) -> bool {
        self.at[v][c as usize].is_none()
    }

    fn free(&self, v: Vertex) -> Color {
        (1..=self.k as Color).find(|&c| self.is_free(v, c)).expect("degree < k")
    }

    fn assign(&mut self, id: EdgeId, c: Color) {
        let (u, v) = self.g.endpoints(id);
        let old = self.colors[id];
        if old != 0 {
            self.at[u][old as usize] = None;
            self.at[v][old as usize] = None;
        }
        self.colors[id] = c;
        if c != 0 {
            self.at[u][c as usize] = Some(id);
            self.at[v][c as usize] = Some(id);
        }
    }

    fn edge_color(&self, u: Vertex, v: Vertex) -> Color {
        self.colors[self.g.edge_id(u, v).unwrap()]
    }

    fn color_edge(&mut self, u: Vertex, v: Vertex) {
        // Maximal sequential fan at u starting from v.
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self.g.neighbors(u).iter().copied().find(|&w| {
                let c = self.edge_color(u, w);
                c != 0 && !fan.contains(&w) && self.is_free(last, c)
            });
            match next {
                Some(w) => fan.push(w),
                None => break,
            }
        }
        let c = self.free(u);
        let d = self.free(*fan.last().unwrap());
        if c != d && !self.is_free(u, d) {
            // Invert the cd-path starting at u (u misses c, so it leaves on d).
            let mut path = Vec::new();
            let mut cur = u;
            let mut col = d;
            while let Some(id) = self.at[cur][col as usize] {
                path.push(id);
                cur = self.g.other_end(id, cur);
                col = if col == c { d } else { c };
            }
            for &id in &path {
                let (a, b) = self.g.endpoints(id);
                let old = self.colors[id];
                self.at[a][old as usize] = None;
                self.at[b][old as usize] = None;
            }
            for &id in &path {
                let new = if self.colors[id] == c { d } else { c };
                self.colors[id] = 0;
                self.assign(id, new);
            }
        }
        // First fan vertex w with d free whose prefix is still a fan.
        let mut end = 0;
        for i in 0..fan.len() {
            if i > 0 {
                let c_i = self.edge_color(u, fan[i]);
                if c_i == 0 || !self.is_free(fan[i - 1], c_i) {
                    break;
                }
            }
            if self.is_free(fan[i], d) {
                end = i;
                break;
            }
        }
        debug_assert!(self.is_free(fan[end], d));
        for j in 0..end {
            let next = self.edge_color(u, fan[j + 1]);
            let id_next = self.g.edge_id(u, fan[j + 1]).unwrap();
            self.assign(id_next, 0);
            let id = self.g.edge_id(u, fan[j]).unwrap();
            self.assign(id, next);
        }
        let id = self.g.edge_id(u, fan[end]).unwrap();
        self.assign(id, d);
    }
}

/// Result of enumerating colorings of `G − e`.
#[derive(Debug, Clone)]
pub struct ColoringEnumeration {
    /// One representative per color-permutation orbit.
    pub colorings: Vec<PartialColoring>,
    /// False when the node budget ran out before the search tree was exhausted.
    pub complete: bool,
    pub nodes: u64,
}

/// Every proper `k`-edge-coloring of `G − e`, one per orbit under
/// permutations of the palette.
///
/// Edges are colored in a fixed order and each edge may only use a color
/// already used earlier in that order or the smallest unused color. This is
/// exactly the set of colorings that are lexicographically minimal in their
/// orbit along the fixed order, so each orbit appears once.
pub fn enumerate_colorings(
    g: &Graph,
    e: EdgeId,
    k: usize,
    config: &SolverConfig,
) -> Result<ColoringEnumeration, SolverError> {
    if g.n() == 0 {
        return Err(GraphError::Empty.into());
    }
    if e >= g.edge_count() {
        return Err(SolverError::UnknownEdgeId(e));
    }
    let host = Arc::new(g.clone());
    let mut out = Vec::new();
    let (complete, nodes) = for_each_coloring(g, Some(e), k, config.budget, |colors| {
        let opts: Vec<Option<Color>> = colors.iter().map(|&c| (c != 0).then_some(c)).collect();
        out.push(PartialColoring::from_colors(host.clone(), k, &opts).expect("enumerated coloring is proper"));
    });
    Ok(ColoringEnumeration {
        colorings: out,
        complete,
        nodes,
    })
}

/// Visits one representative per orbit; returns `(complete, nodes)`.
pub(crate) fn for_each_coloring(
    g: &Graph,
    skip: Option<EdgeId>,
    k: usize,
    budget: u64,
    mut visit: impl FnMut(&[Color]),
) -> (bool, u64) {
    let mut search = Search::new(g, k, skip, budget);
    if search.trivially_infeasible() {
        return (true, 0);
    }
    let order = static_order(g, &search.active);
    let ok = enumerate_rec(&mut search, &order, 0, 0, &mut visit);
    (ok, search.nodes)
}

fn static_order(g: &Graph, active: &[bool]) -> Vec<EdgeId> {
    let m = g.edge_count();
    let mut placed = vec![false; m];
    let mut touched = vec![0usize; g.n()];
    let mut order = Vec::new();
    for (id, &a) in active.iter().enumerate() {
        if !a {
            placed[id] = true;
        }
    }
    let dsum = |id: EdgeId| {
        let (u, v) = g.endpoints(id);
        g.degree(u) + g.degree(v)
    };
    while order.len() < active.iter().filter(|&&a| a).count() {
        let best = (0..m)
            .filter(|&id| !placed[id])
            .max_by_key(|&id| {
                let (u, v) = g.endpoints(id);
                (touched[u] + touched[v], dsum(id), std::cmp::Reverse(id))
            })
            .unwrap();
        placed[best] = true;
        let (u, v) = g.endpoints(best);
        touched[u] += 1;
        touched[v] += 1;
        order.push(best);
    }
    order
}

fn enumerate_rec(
    s: &mut Search,
    order: &[EdgeId],
    pos: usize,
    introduced: usize,
    visit: &mut impl FnMut(&[Color]),
) -> bool {
    if !s.tick() {
        return false;
    }
    if pos == order.len() {
        visit(&s.colors);
        return true;
    }
    if !s.capacity_ok(order.len() - pos) {
        return true;
    }
    let id = order[pos];
    let avail = s.available(id);
    let limit = (introduced + 1).min(s.k);
    for c in 1..=limit {
        if avail >> c & 1 == 0 {
            continue;
        }
        s.set(id, c as Color);
        let (u, v) = s.g.endpoints(id);
        let dead = [u, v].iter().any(|&x| {
            s.g.incident(x)
                .any(|f| s.active[f] && s.colors[f] == 0 && s.available(f) == 0)
        });
        let ok = dead || enumerate_rec(s, order, pos + 1, introduced.max(c), visit);
        s.unset(id);
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_family;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn small_chromatic_indices() {
        for (spec, chi) in [
            ("cycle:5", 3),
            ("cycle:6", 2),
            ("complete:4", 3),
            ("petersen", 4),
            ("complete:5", 5),
        ] {
            let g = make_family(spec).unwrap();
            let cert = chromatic_index(&g, &cfg()).unwrap();
            assert_eq!(cert.chi_prime, chi, "{spec}");
            assert!(cert.witness.validate().is_ok());
            assert_eq!(cert.witness.palette_size(), chi);
        }
    }

    #[test]
    fn edgeless_graph_has_index_zero() {
        let cert = chromatic_index(&Graph::empty(3), &cfg()).unwrap();
        assert_eq!(cert.chi_prime, 0);
        assert!(chromatic_index(&Graph::empty(0), &cfg()).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = make_family("petersen").unwrap();
        let tiny = SolverConfig { budget: 3 };
        assert_eq!(
            chromatic_index(&g, &tiny).unwrap_err(),
            SolverError::Undecided { budget: 3 }
        );
    }

    #[test]
    fn classification() {
        let c = |s: &str| classify(&make_family(s).unwrap(), &cfg()).unwrap();
        assert_eq!(c("cycle:6"), EdgeClass::Class1);
        assert_eq!(c("cycle:5"), EdgeClass::Class2);
        assert_eq!(c("petersen"), EdgeClass::Class2);
    }

    #[test]
    fn critical_edges_and_graphs() {
        let c5 = make_family("cycle:5").unwrap();
        assert!(is_critical_edge(&c5, (0, 1), &cfg()).unwrap());
        assert!(is_critical(&c5, &cfg()).unwrap());
        let c6 = make_family("cycle:6").unwrap();
        assert!(!is_critical_edge(&c6, (0, 1), &cfg()).unwrap());
        let p = make_family("petersen").unwrap();
        assert!(!is_critical(&p, &cfg()).unwrap());
        for &(u, v) in p.edges() {
            assert!(!is_critical_edge(&p, (u, v), &cfg()).unwrap());
        }
        let pv = make_family("petersen-v").unwrap();
        assert!(is_critical(&pv, &cfg()).unwrap());
        assert!(is_critical_edge(&c5, (0, 2), &cfg()).is_err());
    }

    #[test]
    fn vizing_bounds() {
        for spec in ["complete:4", "cycle:5", "petersen", "wheel:6", "bipartite:3,4"] {
            let g = make_family(spec).unwrap();
            let c = vizing_color(&g).unwrap();
            assert!(c.validate().is_ok());
            assert!(c.palette_size() <= g.max_degree() + 1);
        }
    }

    #[test]
    fn enumeration_on_c5_minus_edge() {
        let g = make_family("cycle:5").unwrap();
        let all = enumerate_colorings(&g, 0, 2, &cfg()).unwrap();
        assert!(all.complete);
        assert_eq!(all.colorings.len(), 1);
        assert_eq!(all.colorings[0].uncolored_edge(), Some(0));
    }

    #[test]
    fn enumeration_below_max_degree_is_empty() {
        let g = make_family("star:3").unwrap();
        let all = enumerate_colorings(&g, 0, 1, &cfg()).unwrap();
        assert!(all.complete);
        assert!(all.colorings.is_empty());
    }
}
