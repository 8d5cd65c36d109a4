use super::{Context, EdgeOrbits, ExtensionSighting, VerifyConfig, VerifyError};
use crate::fan::{extend_multifan, grow_multifan, stopping_colors};
use crate::graph::Graph;

/// Result of [`search_extension_gadget`].
#[derive(Debug, Clone, Default)]
pub struct GadgetSearch {
    pub graphs: usize,
    /// Maximal fans examined, over every orbit and both ends of every
    /// critical edge.
    pub fans: usize,
    /// First nonempty F′ whose base fan is a maximum multi-fan.
    pub maximum: Option<ExtensionSighting>,
    /// First nonempty F′ over any maximal fan.
    pub any: Option<ExtensionSighting>,
}

/// Looks for an extended multi-fan with nonempty F′ over every maximal fan
/// at a critical edge, not only the maximum ones. Stops at the first
/// sighting on a maximum fan.
pub fn search_extension_gadget(graphs: &[Graph], config: &VerifyConfig) -> Result<GadgetSearch, VerifyError> {
    let mut out = GadgetSearch::default();
    for (index, g) in graphs.iter().enumerate() {
        out.graphs += 1;
        if g.edge_count() == 0 {
            continue;
        }
        let ctx = Context::new(g.clone(), index, &config.solver)?;
        if !ctx.class2 {
            continue;
        }
        for e in (0..g.edge_count()).filter(|&e| ctx.critical[e]) {
            let orbits = EdgeOrbits::enumerate(&ctx, e, config)?;
            if !orbits.complete {
                continue;
            }
            let (a, b) = g.endpoints(e);
            for r in [a, b] {
                let fans = orbits
                    .colorings
                    .iter()
                    .map(|c| grow_multifan(c, r))
                    .collect::<Result<Vec<_>, _>>()?;
                let best = fans.iter().map(|f| f.size()).max().unwrap_or(0);
                for fan in &fans {
                    out.fans += 1;
                    let c = fan.coloring();
                    let k = stopping_colors(fan);
                    for s_h in fan.fan_vertices() {
                        for beta in c.missing(s_h).intersection(k.all).iter() {
                            let ext = extend_multifan(fan, s_h, beta)?;
                            if ext.is_trivial() {
                                continue;
                            }
                            let sighting = ExtensionSighting {
                                graph6: ctx.graph6.clone(),
                                edge: (a, b),
                                center: r,
                                pivot: s_h,
                                beta,
                                extension_vertices: ext.extension_vertices(),
                                coloring: c.to_dump(),
                                maximum_fan: fan.size() == best,
                            };
                            if sighting.maximum_fan {
                                out.maximum = Some(sighting.clone());
                                out.any.get_or_insert(sighting);
                                return Ok(out);
                            }
                            out.any.get_or_insert(sighting);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
