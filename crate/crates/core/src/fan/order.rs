use std::collections::{BTreeMap, BTreeSet};

use super::{FanError, MultiFan};
use crate::coloring::{Color, ColorSet};

/// The relation ⪯_F over φ̄(V(F)) and the locator v_F(·).
///
/// `(α, β)` is in the relation when some linear sequence from `s_0` inside F
/// has an edge colored `α` before a vertex missing `β`. Under elementarity
/// this relation is strict (never `α ⪯ α`), so it is stored without the
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanOrder {
    pub relation: BTreeSet<(Color, Color)>,
    pub locator: BTreeMap<Color, usize>,
}

impl FanOrder {
    pub fn precedes(&self, alpha: Color, beta: Color) -> bool {
        self.relation.contains(&(alpha, beta))
    }

    pub fn comparable(&self, alpha: Color, beta: Color) -> bool {
        self.precedes(alpha, beta) || self.precedes(beta, alpha)
    }

    pub fn locate(&self, color: Color) -> Option<usize> {
        self.locator.get(&color).copied()
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.locator.keys().copied()
    }
}

/// Builds ⪯_F from every linear sequence at the center from `s_0` within F.
pub fn fan_order(fan: &MultiFan) -> Result<FanOrder, FanError> {
    fan.is_elementary().map_err(FanError::NonElementary)?;
    let c = fan.coloring();
    let mut locator = BTreeMap::new();
    for v in fan.vertices() {
        for col in c.missing(v).iter() {
            locator.insert(col, v);
        }
    }
    let mut relation = BTreeSet::new();
    for seq in fan.linear_sequences() {
        let items = seq.items();
        for i in 1..items.len() {
            let alpha = c.color(items[i].0).expect("e_i for i ≥ 1 is colored");
            for &(_, v) in &items[i..] {
                for beta in c.missing(v).iter() {
                    relation.insert((alpha, beta));
                }
            }
        }
    }
    for &(a, b) in &relation {
        if a == b {
            return Err(FanError::InvalidOrder(format!("{a} precedes itself")));
        }
        for &(_, d) in relation.range((b, 0)..=(b, Color::MAX)) {
            if !relation.contains(&(a, d)) {
                return Err(FanError::InvalidOrder(format!(
                    "{a} ⪯ {b} and {b} ⪯ {d} but not {a} ⪯ {d}"
                )));
            }
        }
    }
    Ok(FanOrder { relation, locator })
}

/// K: colors on center edges to Δ-degree neighbors. K_F = K \ φ̄(V(F)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StoppingColors {
    pub all: ColorSet,
    pub outside: ColorSet,
}

pub fn stopping_colors(fan: &MultiFan) -> StoppingColors {
    let c = fan.coloring();
    let g = c.host();
    let r = fan.center();
    let delta = g.max_degree();
    let all: ColorSet = g
        .incident(r)
        .filter(|&e| g.degree(g.other_end(e, r)) == delta)
        .filter_map(|e| c.color(e))
        .collect();
    StoppingColors {
        all,
        outside: all.difference(fan.missing_union()),
    }
}
