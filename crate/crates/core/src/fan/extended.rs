use std::fmt;

use super::{stopping_colors, FanError, LinearSequence, MultiFan, StoppingColors};
use crate::coloring::{Color, ColorSet};
use crate::graph::{EdgeId, Vertex};

/// Terminal behavior of an extremal τ-sequence `(r, f_0, v_0, ..., f_t, v_t)`
/// outside a fan F.
///
/// Type A holds when V(L) ∪ V(F) is elementary and `τ ∈ φ̄(v_t)`; `exact`
/// records whether `φ̄(v_t) = {τ}`. An extremal sequence can stop at a vertex
/// missing τ together with colors seen nowhere else, so the exact form is
/// not required for the tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauSeqType {
    A {
        end: Vertex,
        tau: Color,
        exact: bool,
    },
    /// `color ∈ φ̄(vertex) ∩ φ̄(fan_vertex)` with `fan_vertex ∈ V(F)`.
    B {
        vertex: Vertex,
        color: Color,
        fan_vertex: Vertex,
    },
    /// `color ∈ φ̄(first) ∩ φ̄(second)`, both on the sequence, `first` earlier.
    C {
        first: Vertex,
        second: Vertex,
        color: Color,
    },
    D {
        end: Vertex,
    },
}

impl TauSeqType {
    pub fn tag(&self) -> char {
        match self {
            TauSeqType::A { .. } => 'A',
            TauSeqType::B { .. } => 'B',
            TauSeqType::C { .. } => 'C',
            TauSeqType::D { .. } => 'D',
        }
    }
}

impl fmt::Display for TauSeqType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TauSeqType::A { end, tau, exact } => {
                write!(f, "A(end={end}, tau={tau}{})", if exact { ", exact" } else { "" })
            }
            TauSeqType::B {
                vertex,
                color,
                fan_vertex,
            } => {
                write!(f, "B(vertex={vertex}, color={color}, fan_vertex={fan_vertex})")
            }
            TauSeqType::C { first, second, color } => {
                write!(f, "C(first={first}, second={second}, color={color})")
            }
            TauSeqType::D { end } => write!(f, "D(end={end})"),
        }
    }
}

fn stops(missing: ColorSet, seen: ColorSet) -> bool {
    missing.is_empty() || !missing.is_disjoint(seen)
}

/// Evaluates the four terminal predicates independently; exactly one must
/// hold.
fn classify(fan: &MultiFan, seq: &LinearSequence, tau: Color) -> Result<TauSeqType, FanError> {
    let c = fan.coloring();
    let fan_missing = fan.missing_union();
    let tail = seq.tail_vertices();
    let end = *tail.last().unwrap();

    let b = tail.iter().find_map(|&v| {
        let shared = c.missing(v).intersection(fan_missing);
        let color = shared.min()?;
        Some(TauSeqType::B {
            vertex: v,
            color,
            fan_vertex: fan.locate(color)?,
        })
    });
    let c_pred = match (b, c.is_elementary(&tail)) {
        (None, Err(w)) => Some(TauSeqType::C {
            first: w.first,
            second: w.second,
            color: w.color,
        }),
        _ => None,
    };
    let mut union = fan.vertices();
    union.extend(&tail);
    let union_elementary = c.is_elementary(&union).is_ok();
    let end_missing = c.missing(end);
    let a = (union_elementary && end_missing.contains(tau)).then_some(TauSeqType::A {
        end,
        tau,
        exact: end_missing == ColorSet::single(tau),
    });
    let d = (union_elementary && end_missing.is_empty()).then_some(TauSeqType::D { end });

    let hits: Vec<TauSeqType> = [a, b, c_pred, d].into_iter().flatten().collect();
    match hits.as_slice() {
        [one] => Ok(*one),
        _ => Err(FanError::Unclassifiable(hits.len())),
    }
}

/// Every extremal τ-sequence at the center outside `fan`, tagged.
///
/// The first vertex is the far end of the center's τ-edge. A non-terminal
/// vertex `v_j` branches over each `α ∈ φ̄(v_j)`, continuing along the
/// center's α-edge; such an edge always leads to a new vertex outside F.
pub fn tau_sequences_outside(fan: &MultiFan, tau: Color) -> Result<Vec<(LinearSequence, TauSeqType)>, FanError> {
    let c = fan.coloring();
    let g = c.host();
    let r = fan.center();
    let f0 = c.edge_with_color(r, tau).ok_or(FanError::TauNotOutside(tau))?;
    let v0 = g.other_end(f0, r);
    if fan.contains(v0) {
        return Err(FanError::TauNotOutside(tau));
    }
    let fan_missing = fan.missing_union().union(ColorSet::single(tau));
    let mut out = Vec::new();
    let mut path: Vec<(EdgeId, Vertex)> = vec![(f0, v0)];
    grow(fan, tau, fan_missing, ColorSet::EMPTY, &mut path, &mut out)?;
    Ok(out)
}

fn grow(
    fan: &MultiFan,
    tau: Color,
    blocked: ColorSet,
    earlier: ColorSet,
    path: &mut Vec<(EdgeId, Vertex)>,
    out: &mut Vec<(LinearSequence, TauSeqType)>,
) -> Result<(), FanError> {
    let c = fan.coloring();
    let r = fan.center();
    let v = path.last().unwrap().1;
    let miss = c.missing(v);
    if stops(miss, blocked.union(earlier)) {
        let seq = LinearSequence::new(c, r, path.clone())?;
        let kind = classify(fan, &seq, tau)?;
        out.push((seq, kind));
        return Ok(());
    }
    for alpha in miss.iter() {
        let e = c
            .edge_with_color(r, alpha)
            .ok_or_else(|| FanError::InvalidSequence(format!("center has no edge colored {alpha}")))?;
        let x = c.host().other_end(e, r);
        if fan.contains(x) || path.iter().any(|&(_, s)| s == x) {
            return Err(FanError::InvalidSequence(format!("sequence revisits vertex {x}")));
        }
        path.push((e, x));
        grow(fan, tau, blocked, earlier.union(miss), path, out)?;
        path.pop();
    }
    Ok(())
}

/// One φ(rv)-sequence of F′, rooted at a qualifying neighbor `v` of the
/// pivot.
#[derive(Debug, Clone)]
pub struct ExtensionSequence {
    pub root: Vertex,
    /// φ(v s_h).
    pub root_color: Color,
    /// φ(r v).
    pub tau: Color,
    pub sequence: LinearSequence,
    pub kind: TauSeqType,
}

/// F ∪ F′ for a pivot `s_h` and a stopping color `β ∈ φ̄(s_h)`.
#[derive(Debug, Clone)]
pub struct ExtendedMultiFan {
    pub base: MultiFan,
    pub pivot: Vertex,
    pub pivot_color: Color,
    pub stopping: StoppingColors,
    pub extension: Vec<ExtensionSequence>,
    /// Neighbors `v` of the pivot adjacent to the center with `d(v) < Δ`
    /// and `φ(v s_h) ∈ K_F`, with that color.
    pub excluded: Vec<(Vertex, Color)>,
}

impl ExtendedMultiFan {
    /// V(F′): the center followed by the vertices of every extension
    /// sequence, without repeats.
    pub fn extension_vertices(&self) -> Vec<Vertex> {
        let mut out = vec![self.base.center()];
        for ext in &self.extension {
            for v in ext.sequence.tail_vertices() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// V(F ∪ F′).
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = self.base.vertices();
        for v in self.extension_vertices() {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.extension.is_empty()
    }

    pub fn missing_union(&self) -> ColorSet {
        self.base.coloring().missing_union(self.vertices())
    }

    pub fn extension_missing(&self) -> ColorSet {
        self.base.coloring().missing_union(self.extension_vertices())
    }

    /// v_{F∪F′}(γ).
    pub fn locate(&self, color: Color) -> Option<Vertex> {
        let c = self.base.coloring();
        self.vertices().into_iter().find(|&v| c.missing(v).contains(color))
    }

    /// v_{F′}(γ).
    pub fn locate_extension(&self, color: Color) -> Option<Vertex> {
        let c = self.base.coloring();
        self.extension_vertices()
            .into_iter()
            .find(|&v| c.missing(v).contains(color))
    }
}

/// Builds F ∪ F′ from a maximal fan, a pivot fan vertex `s_h` and a
/// stopping color `β` missing at `s_h`.
pub fn extend_multifan(fan: &MultiFan, pivot: Vertex, beta: Color) -> Result<ExtendedMultiFan, FanError> {
    if !fan.is_maximal() {
        return Err(FanError::NotMaximal);
    }
    let c = fan.coloring();
    let g = c.host();
    let r = fan.center();
    let stopping = stopping_colors(fan);
    let valid_pivot =
        pivot != r && fan.contains(pivot) && c.missing(pivot).contains(beta) && stopping.all.contains(beta);
    if !valid_pivot {
        return Err(FanError::NotStoppingPivot {
            vertex: pivot,
            color: beta,
        });
    }
    let delta = g.max_degree();
    let mut extension = Vec::new();
    let mut excluded = Vec::new();
    for &v in g.neighbors(pivot) {
        if v == r || g.degree(v) >= delta || !g.has_edge(r, v) {
            continue;
        }
        let Some(root_color) = c.color_between(v, pivot) else {
            continue;
        };
        if stopping.outside.contains(root_color) {
            excluded.push((v, root_color));
            continue;
        }
        if fan.contains(v) {
            continue;
        }
        let tau = c
            .color_between(r, v)
            .expect("only r s_0 is uncolored and s_0 lies in F");
        for (sequence, kind) in tau_sequences_outside(fan, tau)? {
            extension.push(ExtensionSequence {
                root: v,
                root_color,
                tau,
                sequence,
                kind,
            });
        }
    }
    Ok(ExtendedMultiFan {
        base: fan.clone(),
        pivot,
        pivot_color: beta,
        stopping,
        extension,
        excluded,
    })
}
