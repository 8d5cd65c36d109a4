//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Canonical form: vertices are first split into cells by color refinement
//! (start from degrees, refine by the multiset of neighbor colors until
//! stable, order cells by their refined color). The canonical labeling is the
//! cell-respecting permutation whose upper-triangle adjacency bit string, read
//! in graph6 column order with the first bit most significant, is minimal.
//! Refinement is isomorphism-invariant, so two graphs share a canonical form
//! iff they are isomorphic.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Largest `n` accepted by [`enumerate_connected`] and [`enumerate_all`].
pub const MAX_ENUMERATION_ORDER: usize = 8;
/// Largest `n` accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration is capped at n = {MAX_ENUMERATION_ORDER}, got {0}")]
    TooLarge(usize),
    #[error("canonical forms are capped at n = {MAX_CANONICAL_ORDER}, got {0}")]
    CanonicalTooLarge(usize),
}

/// Isomorphism class key: vertex count plus the minimal bit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u128,
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = {
        let mut c = color.clone();
        c.sort_unstable();
        c.dedup();
        color = color.iter().map(|x| c.binary_search(x).unwrap()).collect();
        c.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    // cell id for each position, nondecreasing.
    slot_cell: Vec<usize>,
    cell_of: Vec<usize>,
    order: Vec<Vertex>,
    used: Vec<bool>,
    best: Option<(u128, Vec<Vertex>)>,
}

impl Search<'_> {
    fn total_bits(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn dfs(&mut self, pos: usize, prefix: u128, bits_so_far: usize) {
        if let Some((best, _)) = &self.best {
            let shift = self.total_bits() - bits_so_far;
            let best_prefix = if shift >= 128 { 0 } else { best >> shift };
            if prefix > best_prefix {
                return;
            }
        }
        if pos == self.n {
            let better = self.best.as_ref().is_none_or(|(b, _)| prefix < *b);
            if better {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        let cell = self.slot_cell[pos];
        for v in 0..self.n {
            if self.used[v] || self.cell_of[v] != cell {
                continue;
            }
            let mut p = prefix;
            for &u in &self.order {
                p = p << 1 | self.g.has_edge(u, v) as u128;
            }
            self.used[v] = true;
            self.order.push(v);
            self.dfs(pos + 1, p, bits_so_far + pos);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical form and the labeling achieving it: `labeling[i]` is the
/// original vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<Vertex>), EnumerationError> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(EnumerationError::CanonicalTooLarge(n));
    }
    if n <= 1 {
        return Ok((CanonicalForm { n, bits: 0 }, (0..n).collect()));
    }
    let cell_of = refine(g);
    let mut slot_cell = cell_of.clone();
    slot_cell.sort_unstable();
    let mut search = Search {
        g,
        n,
        slot_cell,
        cell_of,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.dfs(0, 0, 0);
    let (bits, labeling) = search.best.expect("at least one labeling exists");
    Ok((CanonicalForm { n, bits }, labeling))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, EnumerationError> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// `g` relabeled into canonical position order.
pub fn canonical_graph(g: &Graph) -> Result<Graph, EnumerationError> {
    let (_, labeling) = canonical_labeling(g)?;
    Ok(g.induced(&labeling))
}

fn next_level(graphs: &[Graph], n: usize) -> Vec<Graph> {
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in graphs {
        for mask in 0u32..(1 << (n - 1)) {
            let new = n - 1;
            let edges = g
                .edges()
                .iter()
                .copied()
                .chain((0..new).filter(|&u| mask >> u & 1 == 1).map(|u| (u, new)));
            let h = Graph::from_edges(n, edges).expect("extension keeps the graph simple");
            let (form, labeling) = canonical_labeling(&h).expect("n is within the canonical cap");
            classes.entry(form).or_insert_with(|| h.induced(&labeling));
        }
    }
    classes.into_values().collect()
}

fn all_levels(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let next = next_level(&levels[n - 1], n);
        levels.push(next);
    }
    levels
}

/// Every simple graph on `n` vertices, one per isomorphism class, in
/// canonical-form order and canonically labeled.
pub fn enumerate_all(n: usize) -> Result<std::vec::IntoIter<Graph>, EnumerationError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::TooLarge(n));
    }
    let mut levels = all_levels(n);
    Ok(levels.swap_remove(n).into_iter())
}

/// Every connected simple graph on `n` vertices, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    Ok(enumerate_all(n)?.filter(Graph::is_connected))
}

/// Connected graphs for every order `1..=max_n`, smallest orders first.
pub fn connected_up_to(max_n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if max_n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::TooLarge(max_n));
    }
    Ok(all_levels(max_n)
        .into_iter()
        .skip(1)
        .flatten()
        .filter(Graph::is_connected)
        .collect())
}
