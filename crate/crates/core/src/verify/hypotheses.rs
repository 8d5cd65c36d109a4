use serde::{Deserialize, Serialize};

use super::Context;

/// `Δ ≥ 2n/3 + 3k/2`, evaluated as `6Δ ≥ 4n + 9k`.
pub fn degree_bound_holds(n: usize, delta: usize, k: usize) -> bool {
    6 * delta >= 4 * n + 9 * k
}

/// Smallest `n` for which some simple graph of order `n` can meet the
/// degree bound with core parameter `k`: `Δ ≤ n − 1` forces `2n ≥ 9k + 6`.
pub fn smallest_satisfiable_order(k: usize) -> usize {
    (9 * k + 6).div_ceil(2)
}

/// The hypotheses of the main theorem for one graph.
///
/// Some `k ≥ 2` with `δ(G_Δ) ≤ k` and the degree bound exists iff it exists
/// for `k = max(2, δ(G_Δ))`, since the bound only gets harder as `k` grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremHypotheses {
    pub n: usize,
    pub delta: usize,
    pub core_min_degree: usize,
    pub k: usize,
    pub critical: bool,
    pub degree_bound: bool,
}

impl TheoremHypotheses {
    pub fn evaluate(ctx: &Context) -> Self {
        let g = &ctx.graph;
        let core_min_degree = g.core_info().map_or(0, |c| c.core_min_degree);
        let k = core_min_degree.max(2);
        TheoremHypotheses {
            n: g.n(),
            delta: ctx.delta,
            core_min_degree,
            k,
            critical: ctx.is_critical_graph(),
            degree_bound: degree_bound_holds(g.n(), ctx.delta, k),
        }
    }

    pub fn hold(&self) -> bool {
        self.critical && self.degree_bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert_eq!(smallest_satisfiable_order(2), 12);
        assert!(degree_bound_holds(12, 11, 2));
        assert!(!degree_bound_holds(12, 10, 2));
        assert!(!degree_bound_holds(11, 10, 2));
    }
}
