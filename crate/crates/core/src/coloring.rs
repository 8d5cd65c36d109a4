//! Partial proper edge colorings, missing-color sets, and Kempe chains.
//!
//! Colors are `1..=palette`. A [`PartialColoring`] colors every edge of its
//! host graph except a designated uncolored edge and, transiently after a
//! shift, one dangling edge. Transformations return new colorings; each
//! distinct coloring state carries a process-wide unique stamp so that chains
//! and sequences extracted from one state are rejected when applied to
//! another.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

pub type Color = u8;

/// Palette sizes above this do not fit a [`ColorSet`].
pub const MAX_PALETTE: usize = 63;

const NONE: u32 = u32::MAX;

static NEXT_STAMP: AtomicU64 = AtomicU64::new(1);

fn fresh_stamp() -> u64 {
    NEXT_STAMP.fetch_add(1, Ordering::Relaxed)
}

/// A set of colors from `1..=63`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn full(k: usize) -> Self {
        assert!(k <= MAX_PALETTE);
        ColorSet(((1u64 << k) - 1) << 1)
    }

    pub fn single(c: Color) -> Self {
        ColorSet(1 << c)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: ColorSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as Color;
            bits &= bits - 1;
            Some(c)
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A reason a coloring is not a valid partial proper coloring.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum Violation {
    #[error("two edges at vertex {vertex} share color {color}")]
    Conflict { vertex: Vertex, color: Color },
    #[error("edge {edge:?} has color {color} outside the palette 1..={palette}")]
    OutOfPalette {
        edge: (Vertex, Vertex),
        color: Color,
        palette: usize,
    },
    #[error("edge {edge:?} is uncolored but not designated")]
    StrayUncolored { edge: (Vertex, Vertex) },
    #[error("designated edge {edge:?} carries a color")]
    DesignatedColored { edge: (Vertex, Vertex) },
    #[error("assignment has {found} entries for {expected} edges")]
    WrongLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("invalid coloring: {0}")]
    Invalid(#[from] Violation),
    #[error("palette size {0} exceeds {MAX_PALETTE}")]
    Palette(usize),
    #[error("vertex {0} is not in the host graph")]
    UnknownVertex(Vertex),
    #[error("no edge {0}-{1} in the host graph")]
    UnknownEdge(Vertex, Vertex),
    #[error("the two chain colors must differ (got {0} twice)")]
    EqualColors(Color),
    #[error("color {0} is outside the palette")]
    ColorOutOfPalette(Color),
    #[error("color {color} is not missing at vertex {vertex}")]
    NotMissing { vertex: Vertex, color: Color },
    #[error("stale {what}: extracted from coloring state {expected}, applied to state {found}")]
    Stale {
        what: &'static str,
        expected: u64,
        found: u64,
    },
    #[error("edge {0:?} is already colored")]
    AlreadyColored((Vertex, Vertex)),
    #[error("color {color} is present at an endpoint of {edge:?}")]
    ColorPresent { edge: (Vertex, Vertex), color: Color },
    #[error("a coloring may leave at most two edges uncolored")]
    TooManyUncolored,
    #[error("coloring dump line {line}: {reason}")]
    Dump { line: usize, reason: String },
}

/// Checks properness and uncolored-edge bookkeeping for a raw assignment
/// (`0` = uncolored). This does not trust any cached index.
pub fn check_assignment(g: &Graph, palette: usize, colors: &[Color], designated: &[EdgeId]) -> Result<(), Violation> {
    if colors.len() != g.edge_count() {
        return Err(Violation::WrongLength {
            expected: g.edge_count(),
            found: colors.len(),
        });
    }
    for (id, &c) in colors.iter().enumerate() {
        let edge = g.endpoints(id);
        if c == 0 && !designated.contains(&id) {
            return Err(Violation::StrayUncolored { edge });
        }
        if c != 0 && designated.contains(&id) {
            return Err(Violation::DesignatedColored { edge });
        }
        if c as usize > palette {
            return Err(Violation::OutOfPalette {
                edge,
                color: c,
                palette,
            });
        }
    }
    for v in 0..g.n() {
        let mut seen = 0u64;
        for id in g.incident(v) {
            let c = colors[id];
            if c == 0 {
                continue;
            }
            if seen >> c & 1 == 1 {
                return Err(Violation::Conflict { vertex: v, color: c });
            }
            seen |= 1 << c;
        }
    }
    Ok(())
}

#[derive(Clone)]
pub struct PartialColoring {
    host: Arc<Graph>,
    palette: usize,
    colors: Vec<Color>,
    uncolored: Option<EdgeId>,
    dangling: Option<EdgeId>,
    present: Vec<u64>,
    // n * (palette + 1): edge with color c at v.
    at: Vec<u32>,
    stamp: u64,
}

impl PartialColoring {
    /// Builds a coloring from a per-edge assignment (`None` = uncolored). At
    /// most one edge may be uncolored; it becomes the designated edge.
    pub fn from_colors(host: Arc<Graph>, palette: usize, colors: &[Option<Color>]) -> Result<Self, ColoringError> {
        let raw: Vec<Color> = colors.iter().map(|c| c.unwrap_or(0)).collect();
        let holes: Vec<EdgeId> = (0..raw.len()).filter(|&i| raw[i] == 0).collect();
        if holes.len() > 1 {
            let edge = host.endpoints(holes[1]);
            return Err(Violation::StrayUncolored { edge }.into());
        }
        Self::from_raw(host, palette, raw, holes.first().copied(), None)
    }

    fn from_raw(
        host: Arc<Graph>,
        palette: usize,
        colors: Vec<Color>,
        uncolored: Option<EdgeId>,
        dangling: Option<EdgeId>,
    ) -> Result<Self, ColoringError> {
        if palette > MAX_PALETTE {
            return Err(ColoringError::Palette(palette));
        }
        let designated: Vec<EdgeId> = uncolored.into_iter().chain(dangling).collect();
        check_assignment(&host, palette, &colors, &designated)?;
        let n = host.n();
        let mut c = PartialColoring {
            present: vec![0; n],
            at: vec![NONE; n * (palette + 1)],
            host,
            palette,
            colors,
            uncolored,
            dangling,
            stamp: fresh_stamp(),
        };
        for id in 0..c.colors.len() {
            let col = c.colors[id];
            if col != 0 {
                c.index(id, col);
            }
        }
        Ok(c)
    }

    /// Colors every edge of `host` except `uncolored` from `(u, v, color)`
    /// triples.
    pub fn from_triples(
        host: Arc<Graph>,
        palette: usize,
        triples: &[(Vertex, Vertex, Color)],
    ) -> Result<Self, ColoringError> {
        let mut colors = vec![None; host.edge_count()];
        for &(u, v, c) in triples {
            let id = host.edge_id(u, v).ok_or(ColoringError::UnknownEdge(u, v))?;
            colors[id] = Some(c);
        }
        Self::from_colors(host, palette, &colors)
    }

    fn index(&mut self, id: EdgeId, c: Color) {
        let (u, v) = self.host.endpoints(id);
        let w = self.palette + 1;
        for x in [u, v] {
            self.present[x] |= 1 << c;
            self.at[x * w + c as usize] = id as u32;
        }
    }

    fn unindex(&mut self, id: EdgeId, c: Color) {
        let (u, v) = self.host.endpoints(id);
        let w = self.palette + 1;
        for x in [u, v] {
            self.present[x] &= !(1 << c);
            self.at[x * w + c as usize] = NONE;
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<Graph> {
        &self.host
    }

    pub fn palette_size(&self) -> usize {
        self.palette
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::full(self.palette)
    }

    pub fn stamp(&self) -> u64 {
        self.stamp
    }

    pub fn uncolored_edge(&self) -> Option<EdgeId> {
        self.uncolored
    }

    pub fn dangling_edge(&self) -> Option<EdgeId> {
        self.dangling
    }

    pub fn color(&self, id: EdgeId) -> Option<Color> {
        match self.colors[id] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn color_between(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.host.edge_id(u, v).and_then(|id| self.color(id))
    }

    /// Raw assignment, `0` for uncolored edges.
    pub fn raw_colors(&self) -> &[Color] {
        &self.colors
    }

    /// The edge colored `c` at `v`, if any.
    pub fn edge_with_color(&self, v: Vertex, c: Color) -> Option<EdgeId> {
        match self.at[v * (self.palette + 1) + c as usize] {
            NONE => None,
            id => Some(id as EdgeId),
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), ColoringError> {
        if v < self.host.n() {
            Ok(())
        } else {
            Err(ColoringError::UnknownVertex(v))
        }
    }

    fn check_color(&self, c: Color) -> Result<(), ColoringError> {
        if c >= 1 && c as usize <= self.palette {
            Ok(())
        } else {
            Err(ColoringError::ColorOutOfPalette(c))
        }
    }

    /// φ(v): colors on colored edges at `v`.
    pub fn present(&self, v: Vertex) -> ColorSet {
        ColorSet(self.present[v])
    }

    /// φ̄(v), unchecked.
    pub fn missing(&self, v: Vertex) -> ColorSet {
        self.palette().difference(self.present(v))
    }

    /// φ̄(v), rejecting vertices outside the host.
    pub fn missing_colors(&self, v: Vertex) -> Result<ColorSet, ColoringError> {
        self.check_vertex(v)?;
        Ok(self.missing(v))
    }

    /// Union of missing sets over `vs`.
    pub fn missing_union(&self, vs: impl IntoIterator<Item = Vertex>) -> ColorSet {
        vs.into_iter()
            .fold(ColorSet::EMPTY, |acc, v| acc.union(self.missing(v)))
    }

    /// Ok when the missing sets of `xs` are pairwise disjoint; otherwise the
    /// first clash found, scanning `xs` in order.
    pub fn is_elementary(&self, xs: &[Vertex]) -> Result<(), NonElementary> {
        let mut owner: [Option<Vertex>; 64] = [None; 64];
        for &v in xs {
            for c in self.missing(v).iter() {
                match owner[c as usize] {
                    Some(u) if u != v => {
                        return Err(NonElementary {
                            first: u,
                            second: v,
                            color: c,
                        })
                    }
                    _ => owner[c as usize] = Some(v),
                }
            }
        }
        Ok(())
    }

    /// Re-validates the whole coloring from its raw assignment.
    pub fn validate(&self) -> Result<(), Violation> {
        let designated: Vec<EdgeId> = self.uncolored.into_iter().chain(self.dangling).collect();
        check_assignment(&self.host, self.palette, &self.colors, &designated)
    }

    /// The (α, β)-chain through `v`.
    pub fn kempe_chain(&self, v: Vertex, alpha: Color, beta: Color) -> Result<Chain, ColoringError> {
        self.check_vertex(v)?;
        self.check_color(alpha)?;
        self.check_color(beta)?;
        if alpha == beta {
            return Err(ColoringError::EqualColors(alpha));
        }
        // Walk from v starting with `first`, alternating colors.
        let walk = |first: Color| {
            let mut verts = Vec::new();
            let mut edges = Vec::new();
            let mut cur = v;
            let mut col = first;
            while let Some(id) = self.edge_with_color(cur, col) {
                let next = self.host.other_end(id, cur);
                edges.push(id);
                if next == v {
                    return (verts, edges, true);
                }
                verts.push(next);
                cur = next;
                col = if col == alpha { beta } else { alpha };
            }
            (verts, edges, false)
        };
        let (fwd_v, fwd_e, closed) = walk(alpha);
        let (vertices, edges, kind) = if closed {
            let mut vs = vec![v];
            vs.extend(fwd_v);
            (vs, fwd_e, ChainKind::Cycle)
        } else {
            let (back_v, back_e, _) = walk(beta);
            let mut vs: Vec<Vertex> = back_v.into_iter().rev().collect();
            vs.push(v);
            vs.extend(fwd_v);
            let mut es: Vec<EdgeId> = back_e.into_iter().rev().collect();
            es.extend(fwd_e);
            (vs, es, ChainKind::Path)
        };
        let (vertices, edges) = orient(vertices, edges, kind, v);
        Ok(Chain {
            kind,
            colors: (alpha, beta),
            origin: v,
            vertices,
            edges,
            stamp: self.stamp,
        })
    }

    /// Interchanges the chain's two colors on its edges.
    pub fn kempe_swap(&self, chain: &Chain) -> Result<PartialColoring, ColoringError> {
        let mut next = self.clone();
        next.swap_in_place(chain)?;
        Ok(next)
    }

    pub fn swap_in_place(&mut self, chain: &Chain) -> Result<(), ColoringError> {
        if chain.stamp != self.stamp {
            return Err(ColoringError::Stale {
                what: "chain",
                expected: chain.stamp,
                found: self.stamp,
            });
        }
        let (a, b) = chain.colors;
        for &id in &chain.edges {
            let c = self.colors[id];
            self.unindex(id, c);
        }
        for &id in &chain.edges {
            let c = if self.colors[id] == a { b } else { a };
            self.colors[id] = c;
            self.index(id, c);
        }
        self.stamp = fresh_stamp();
        Ok(())
    }

    /// The α→β operation at `v`: swap the (α, β)-chain through `v`, where
    /// α must be missing at `v`.
    pub fn apply_alpha_to_beta(&self, v: Vertex, alpha: Color, beta: Color) -> Result<PartialColoring, ColoringError> {
        let mut next = self.clone();
        next.alpha_to_beta_in_place(v, alpha, beta)?;
        Ok(next)
    }

    pub fn alpha_to_beta_in_place(&mut self, v: Vertex, alpha: Color, beta: Color) -> Result<(), ColoringError> {
        self.check_vertex(v)?;
        self.check_color(alpha)?;
        if !self.missing(v).contains(alpha) {
            return Err(ColoringError::NotMissing {
                vertex: v,
                color: alpha,
            });
        }
        let chain = self.kempe_chain(v, alpha, beta)?;
        self.swap_in_place(&chain)
    }

    /// Whether `x` and `y` lie on one (α, β)-chain; always true for `x = y`.
    pub fn are_linked(&self, x: Vertex, y: Vertex, alpha: Color, beta: Color) -> Result<bool, ColoringError> {
        self.check_vertex(y)?;
        let chain = self.kempe_chain(x, alpha, beta)?;
        Ok(x == y || chain.vertices.contains(&y))
    }

    /// Colors an uncolored (designated or dangling) edge with a color missing
    /// at both ends. The edge stops being designated.
    pub fn recolor(&self, id: EdgeId, c: Color) -> Result<PartialColoring, ColoringError> {
        let edge = self.host.endpoints(id);
        self.check_color(c)?;
        if self.colors[id] != 0 {
            return Err(ColoringError::AlreadyColored(edge));
        }
        if !self.missing(edge.0).contains(c) || !self.missing(edge.1).contains(c) {
            return Err(ColoringError::ColorPresent { edge, color: c });
        }
        let mut next = self.clone();
        next.colors[id] = c;
        next.index(id, c);
        if next.uncolored == Some(id) {
            next.uncolored = next.dangling.take();
        } else {
            next.dangling = None;
        }
        next.stamp = fresh_stamp();
        Ok(next)
    }

    /// Replaces the colors of several edges at once; `0` uncolors. The
    /// result is re-validated against `uncolored`/`dangling`.
    pub(crate) fn reassign(
        &self,
        changes: &[(EdgeId, Color)],
        uncolored: Option<EdgeId>,
        dangling: Option<EdgeId>,
    ) -> Result<PartialColoring, ColoringError> {
        let mut colors = self.colors.clone();
        for &(id, c) in changes {
            colors[id] = c;
        }
        PartialColoring::from_raw(self.host.clone(), self.palette, colors, uncolored, dangling)
    }

    /// Applies a permutation of the palette: color `c` becomes `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[Color]) -> Result<PartialColoring, ColoringError> {
        assert_eq!(perm.len(), self.palette, "permutation must cover the palette");
        let colors = self
            .colors
            .iter()
            .map(|&c| if c == 0 { 0 } else { perm[c as usize - 1] })
            .collect();
        PartialColoring::from_raw(self.host.clone(), self.palette, colors, self.uncolored, self.dangling)
    }

    /// Relabels colors by order of first appearance along edge ids; two
    /// colorings are equal up to color permutation iff their canonical forms
    /// are equal.
    pub fn canonical(&self) -> PartialColoring {
        let mut map = [0 as Color; 64];
        let mut next = 1;
        let mut perm = vec![0 as Color; self.palette];
        for &c in &self.colors {
            if c != 0 && map[c as usize] == 0 {
                map[c as usize] = next;
                next += 1;
            }
        }
        for c in 1..=self.palette {
            if map[c] == 0 {
                map[c] = next;
                next += 1;
            }
            perm[c - 1] = map[c];
        }
        self.permute_colors(&perm).expect("a permutation preserves validity")
    }

    /// Compact, permutation-invariant identity of the coloring: the
    /// canonical assignment as one character per edge (`.` = uncolored).
    pub fn fingerprint(&self) -> String {
        self.canonical()
            .colors
            .iter()
            .map(|&c| match c {
                0 => '.',
                1..=9 => (b'0' + c) as char,
                _ => (b'a' + c - 10) as char,
            })
            .collect()
    }

    /// Text dump: one `u-v:color` line per colored edge, then
    /// `uncolored:u-v` and `dangling:u-v` lines when present.
    pub fn to_dump(&self) -> String {
        let mut out = format!("palette:{}\n", self.palette);
        for (id, &(u, v)) in self.host.edges().iter().enumerate() {
            if self.colors[id] != 0 {
                out.push_str(&format!("{u}-{v}:{}\n", self.colors[id]));
            }
        }
        if let Some(id) = self.uncolored {
            let (u, v) = self.host.endpoints(id);
            out.push_str(&format!("uncolored:{u}-{v}\n"));
        }
        if let Some(id) = self.dangling {
            let (u, v) = self.host.endpoints(id);
            out.push_str(&format!("dangling:{u}-{v}\n"));
        }
        out
    }

    /// Parses [`PartialColoring::to_dump`] output. `palette:k` is optional
    /// when `palette` is given; blank lines and `#` comments are skipped.
    pub fn from_dump(host: Arc<Graph>, text: &str, palette: Option<usize>) -> Result<PartialColoring, ColoringError> {
        let mut colors = vec![0 as Color; host.edge_count()];
        let mut uncolored = None;
        let mut dangling = None;
        let mut declared = None;
        let dump_err = |line: usize, reason: String| ColoringError::Dump { line, reason };
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| dump_err(line_no, format!("expected `key:value`, got `{line}`")))?;
            let parse_edge = |s: &str| -> Result<EdgeId, ColoringError> {
                let (a, b) = s
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| dump_err(line_no, format!("expected `u-v`, got `{s}`")))?;
                let a: Vertex = a
                    .trim()
                    .parse()
                    .map_err(|_| dump_err(line_no, format!("bad vertex `{a}`")))?;
                let b: Vertex = b
                    .trim()
                    .parse()
                    .map_err(|_| dump_err(line_no, format!("bad vertex `{b}`")))?;
                host.edge_id(a, b).ok_or(ColoringError::UnknownEdge(a, b))
            };
            match lhs.trim() {
                "palette" => {
                    declared = Some(
                        rhs.trim()
                            .parse::<usize>()
                            .map_err(|_| dump_err(line_no, format!("bad palette `{rhs}`")))?,
                    )
                }
                "uncolored" => uncolored = Some(parse_edge(rhs)?),
                "dangling" => dangling = Some(parse_edge(rhs)?),
                edge => {
                    let id = parse_edge(edge)?;
                    let c: Color = rhs
                        .trim()
                        .parse()
                        .map_err(|_| dump_err(line_no, format!("bad color `{rhs}`")))?;
                    if c == 0 {
                        return Err(dump_err(line_no, "colors start at 1".into()));
                    }
                    colors[id] = c;
                }
            }
        }
        let palette = declared
            .or(palette)
            .ok_or_else(|| dump_err(0, "no palette given".into()))?;
        if uncolored.is_none() {
            let holes: Vec<EdgeId> = (0..colors.len()).filter(|&i| colors[i] == 0).collect();
            if holes.len() == 1 {
                uncolored = Some(holes[0]);
            }
        }
        PartialColoring::from_raw(host, palette, colors, uncolored, dangling)
    }
}

impl fmt::Debug for PartialColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialColoring")
            .field("palette", &self.palette)
            .field("colors", &self.colors)
            .field("uncolored", &self.uncolored)
            .field("dangling", &self.dangling)
            .finish()
    }
}

/// Equality ignores the stamp: two states with the same host, palette and
/// assignment are equal.
impl PartialEq for PartialColoring {
    fn eq(&self, other: &Self) -> bool {
        self.palette == other.palette
            && self.colors == other.colors
            && self.uncolored == other.uncolored
            && self.dangling == other.dangling
            && *self.host == *other.host
    }
}

impl Eq for PartialColoring {}

/// Two vertices of a set sharing a missing color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("vertices {first} and {second} both miss color {color}")]
pub struct NonElementary {
    pub first: Vertex,
    pub second: Vertex,
    pub color: Color,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainKind {
    Path,
    Cycle,
}

/// A component of the subgraph spanned by two color classes.
///
/// Paths start at the query vertex when it is an end, otherwise at the
/// smaller-labeled end. Cycles start at their smallest vertex and proceed
/// toward its smaller neighbor; `edges[i]` joins `vertices[i]` to
/// `vertices[i + 1]` (cyclically for cycles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub kind: ChainKind,
    pub colors: (Color, Color),
    pub origin: Vertex,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    stamp: u64,
}

impl Chain {
    pub fn stamp(&self) -> u64 {
        self.stamp
    }

    pub fn is_single_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// End vertices of a path chain.
    pub fn ends(&self) -> Option<(Vertex, Vertex)> {
        match self.kind {
            ChainKind::Path => Some((self.vertices[0], *self.vertices.last().unwrap())),
            ChainKind::Cycle => None,
        }
    }
}

fn orient(
    mut vertices: Vec<Vertex>,
    mut edges: Vec<EdgeId>,
    kind: ChainKind,
    origin: Vertex,
) -> (Vec<Vertex>, Vec<EdgeId>) {
    match kind {
        ChainKind::Path => {
            let first = vertices[0];
            let last = *vertices.last().unwrap();
            let flip = if first == origin {
                false
            } else if last == origin {
                true
            } else {
                last < first
            };
            if flip {
                vertices.reverse();
                edges.reverse();
            }
        }
        ChainKind::Cycle => {
            let len = vertices.len();
            let start = (0..len).min_by_key(|&i| vertices[i]).unwrap();
            vertices.rotate_left(start);
            edges.rotate_left(start);
            // edges[i] joins vertices[i] and vertices[i+1]; the closing edge is last.
            if vertices[len - 1] < vertices[1] {
                vertices[1..].reverse();
                edges.reverse();
            }
        }
    }
    (vertices, edges)
}
