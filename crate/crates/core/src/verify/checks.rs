use std::collections::BTreeMap;

use super::hypotheses::{degree_bound_holds, TheoremHypotheses};
use super::{CheckId, CheckOutcome, Context, ExtensionSighting, Instance, Verdict, VerifyConfig, VerifyError, Witness};
use crate::chromatic::{self, SolverConfig};
use crate::coloring::{Color, PartialColoring};
use crate::fan::{self, extend_multifan, fan_order, grow_multifan, stopping_colors, FanError, MultiFan};
use crate::graph::{EdgeId, Graph, Vertex};

/// Coloring orbits of `G − e` for one critical edge.
#[derive(Debug, Clone)]
pub struct EdgeOrbits {
    pub edge: EdgeId,
    pub colorings: Vec<PartialColoring>,
    pub complete: bool,
    pub nodes: u64,
}

impl EdgeOrbits {
    pub fn enumerate(ctx: &Context, e: EdgeId, config: &VerifyConfig) -> Result<Self, VerifyError> {
        let listing = chromatic::enumerate_colorings(
            &ctx.graph,
            e,
            ctx.delta,
            &SolverConfig {
                budget: config.orbit_budget,
            },
        )?;
        Ok(EdgeOrbits {
            edge: e,
            colorings: listing.colorings,
            complete: listing.complete,
            nodes: listing.nodes,
        })
    }
}

fn witness(part: &str, c: &PartialColoring, center: Option<Vertex>, detail: String) -> Witness {
    Witness {
        part: part.to_string(),
        coloring: c.to_dump(),
        center,
        pivot: None,
        vertices: Vec::new(),
        colors: Vec::new(),
        trace: Vec::new(),
        detail,
    }
}

fn outcome(check: CheckId, instance: Instance, result: Option<Witness>) -> CheckOutcome {
    let verdict = if result.is_some() { Verdict::Fail } else { Verdict::Pass };
    CheckOutcome {
        check,
        instance,
        verdict,
        witness: result,
    }
}

pub(crate) fn vacuous(check: CheckId, instance: Instance, reason: &str) -> CheckOutcome {
    CheckOutcome {
        check,
        instance,
        verdict: Verdict::Vacuous(reason.to_string()),
        witness: None,
    }
}

pub(crate) fn skipped(check: CheckId, instance: Instance, reason: &str) -> CheckOutcome {
    CheckOutcome {
        check,
        instance,
        verdict: Verdict::Skipped(reason.to_string()),
        witness: None,
    }
}

fn orbit_instance(ctx: &Context, c: &PartialColoring, orbit: Option<usize>) -> Instance {
    let edge = c.uncolored_edge().map(|e| ctx.graph.endpoints(e));
    Instance {
        edge,
        orbit,
        fingerprint: Some(c.fingerprint()),
        ..ctx.instance()
    }
}

fn edge_precondition(check: CheckId, ctx: &Context, c: &PartialColoring, orbit: Option<usize>) -> Option<CheckOutcome> {
    let inst = orbit_instance(ctx, c, orbit);
    if !ctx.class2 {
        return Some(vacuous(check, inst, "graph is class 1"));
    }
    match c.uncolored_edge() {
        Some(e) if ctx.critical[e] => None,
        Some(_) => Some(vacuous(check, inst, "edge is not critical")),
        None => Some(vacuous(check, inst, "coloring has no uncolored edge")),
    }
}

fn endpoints(c: &PartialColoring) -> Result<[Vertex; 2], FanError> {
    let e = c.uncolored_edge().ok_or(FanError::NoUncoloredEdge)?;
    let (a, b) = c.host().endpoints(e);
    Ok([a, b])
}

/// Maximal fans at both ends of the uncolored edge are elementary.
pub(crate) fn vf1_at(c: &PartialColoring) -> Result<Option<Witness>, FanError> {
    for r in endpoints(c)? {
        let fan = grow_multifan(c, r)?;
        if let Err(w) = fan.is_elementary() {
            let mut wit = witness("vf1", c, Some(r), format!("fan {fan}: {w}"));
            wit.vertices = vec![w.first, w.second];
            wit.colors = vec![w.color];
            return Ok(Some(wit));
        }
    }
    Ok(None)
}

pub fn check_vf1(ctx: &Context, c: &PartialColoring, orbit: Option<usize>) -> Result<CheckOutcome, VerifyError> {
    if let Some(o) = edge_precondition(CheckId::Vf1, ctx, c, orbit) {
        return Ok(o);
    }
    Ok(outcome(CheckId::Vf1, orbit_instance(ctx, c, orbit), vf1_at(c)?))
}

fn vf2_fan(c: &PartialColoring, fan: &MultiFan) -> Result<Option<Witness>, VerifyError> {
    let r = fan.center();
    let fail = |part: &str, vertices: Vec<Vertex>, colors: Vec<Color>, detail: String| {
        let mut w = witness(part, c, Some(r), detail);
        w.vertices = vertices;
        w.colors = colors;
        Some(w)
    };
    let order = match fan_order(fan) {
        Ok(o) => o,
        Err(e) => return Ok(fail("vf2(order)", Vec::new(), Vec::new(), format!("fan {fan}: {e}"))),
    };
    let colors: Vec<Color> = order.colors().collect();
    for &alpha in &colors {
        for &beta in &colors {
            if alpha == beta {
                continue;
            }
            let (va, vb) = (order.locator[&alpha], order.locator[&beta]);
            let linked = c.are_linked(va, vb, alpha, beta)?;
            if linked {
                continue;
            }
            if va == r {
                return Ok(fail(
                    "vf2(a)",
                    vec![va, vb],
                    vec![alpha, beta],
                    "v_F(α) = r but not linked".into(),
                ));
            }
            if !order.comparable(alpha, beta) {
                return Ok(fail(
                    "vf2(b)",
                    vec![va, vb],
                    vec![alpha, beta],
                    "incomparable but not linked".into(),
                ));
            }
            if order.precedes(alpha, beta) && !c.kempe_chain(vb, alpha, beta)?.contains(r) {
                return Ok(fail(
                    "vf2(c)",
                    vec![va, vb],
                    vec![alpha, beta],
                    "α ⪯ β, not linked, and the chain at v_F(β) avoids r".into(),
                ));
            }
        }
    }
    let g = c.host();
    let delta = g.max_degree();
    let heavy = fan.fan_vertices().into_iter().filter(|&v| g.degree(v) == delta).count();
    for v in fan.fan_vertices() {
        let m = c.missing(v).len();
        if m > heavy {
            return Ok(fail(
                "vf2(d)",
                vec![v],
                c.missing(v).iter().collect(),
                format!("{heavy} Δ-degree fan vertices but |φ̄({v})| = {m}"),
            ));
        }
    }
    Ok(None)
}

pub(crate) fn vf2_at(c: &PartialColoring, r: Vertex) -> Result<Option<Witness>, VerifyError> {
    let fan = grow_multifan(c, r)?;
    vf2_fan(c, &fan)
}

/// Parts (a)-(d) on the maximal fans at both ends of the uncolored edge.
pub fn check_vf2(ctx: &Context, c: &PartialColoring, orbit: Option<usize>) -> Result<CheckOutcome, VerifyError> {
    if let Some(o) = edge_precondition(CheckId::Vf2, ctx, c, orbit) {
        return Ok(o);
    }
    for r in endpoints(c)? {
        if let Some(w) = vf2_at(c, r)? {
            return Ok(outcome(CheckId::Vf2, orbit_instance(ctx, c, orbit), Some(w)));
        }
    }
    Ok(outcome(CheckId::Vf2, orbit_instance(ctx, c, orbit), None))
}

/// The adjacency count for one orientation `x → y` of a critical edge.
pub(crate) fn val_edge(g: &Graph, x: Vertex, y: Vertex) -> Option<Witness> {
    let delta = g.max_degree();
    let have = g
        .neighbors(x)
        .iter()
        .filter(|&&z| z != y && g.degree(z) == delta)
        .count();
    let need = delta + 1 - g.degree(y);
    (have < need).then(|| Witness {
        part: "val".into(),
        coloring: String::new(),
        center: None,
        pivot: None,
        vertices: vec![x, y],
        colors: Vec::new(),
        trace: Vec::new(),
        detail: format!("{x} has {have} Δ-neighbors besides {y}, needs {need}"),
    })
}

pub fn check_val(ctx: &Context) -> CheckOutcome {
    let inst = ctx.instance();
    if !ctx.class2 {
        return vacuous(CheckId::Val, inst, "graph is class 1");
    }
    let g = &ctx.graph;
    let mut edges = 0;
    for e in ctx.critical_edges() {
        let (x, y) = g.endpoints(e);
        for (a, b) in [(x, y), (y, x)] {
            if let Some(w) = val_edge(g, a, b) {
                return outcome(
                    CheckId::Val,
                    Instance {
                        edge: Some((x, y)),
                        ..inst
                    },
                    Some(w),
                );
            }
        }
        edges += 1;
    }
    let mut o = outcome(CheckId::Val, inst, None);
    o.instance.params.insert("critical_edges".into(), edges.to_string());
    o
}

/// V(G) elementary under `c` forces odd order and `|E| = (n−1)/2·Δ + 1`.
pub(crate) fn edgecount_at(g: &Graph, c: &PartialColoring) -> Result<Option<Witness>, &'static str> {
    let all: Vec<Vertex> = (0..g.n()).collect();
    if c.is_elementary(&all).is_err() {
        return Err("V(G) is not elementary");
    }
    let n = g.n();
    let delta = g.max_degree();
    let ok = n % 2 == 1 && g.edge_count() == (n - 1) / 2 * delta + 1;
    Ok((!ok).then(|| {
        let detail = if n.is_multiple_of(2) {
            format!("V(G) elementary at even order n = {n}, which cannot happen")
        } else {
            format!(
                "|E| = {} but (n−1)/2·Δ + 1 = {}",
                g.edge_count(),
                (n - 1) / 2 * delta + 1
            )
        };
        Witness {
            part: "edgecount".into(),
            coloring: c.to_dump(),
            center: None,
            pivot: None,
            vertices: Vec::new(),
            colors: Vec::new(),
            trace: Vec::new(),
            detail,
        }
    }))
}

pub fn check_elementary_edge_count(ctx: &Context, c: &PartialColoring, orbit: Option<usize>) -> CheckOutcome {
    let inst = orbit_instance(ctx, c, orbit);
    match edgecount_at(&ctx.graph, c) {
        Err(reason) => vacuous(CheckId::Edgecount, inst, reason),
        Ok(w) => outcome(CheckId::Edgecount, inst, w),
    }
}

/// Lemma extend parts (a)-(d) for one maximum-fan coloring, center and
/// pivot. The fan is regrown from `c`, so the result depends only on the
/// arguments.
pub(crate) fn extend_at(
    c: &PartialColoring,
    r: Vertex,
    pivot: Vertex,
    beta: Color,
) -> Result<(Option<Witness>, usize), VerifyError> {
    let fan = grow_multifan(c, r)?;
    let ext = extend_multifan(&fan, pivot, beta)?;
    let k = ext.stopping;
    let fail = |part: &str, vertices: Vec<Vertex>, colors: Vec<Color>, detail: String| {
        let mut w = witness(part, c, Some(r), detail);
        w.pivot = Some((pivot, beta));
        w.vertices = vertices;
        w.colors = colors;
        Some(w)
    };
    let size = ext.extension_vertices().len() - 1;
    let all = ext.vertices();
    if let Err(w) = c.is_elementary(&all) {
        return Ok((
            fail(
                "extend(a)",
                vec![w.first, w.second],
                vec![w.color],
                format!("V(F∪F′) = {all:?}: {w}"),
            ),
            size,
        ));
    }
    let ones: Vec<Color> = c.missing(r).iter().collect();
    // (b)
    for &one in &ones {
        for gamma in ext.missing_union().difference(k.outside).iter() {
            if gamma == one {
                continue;
            }
            let v = ext.locate(gamma).expect("γ is missing in V(F∪F′)");
            if !c.are_linked(r, v, one, gamma)? {
                return Ok((
                    fail(
                        "extend(b)",
                        vec![r, v],
                        vec![one, gamma],
                        "r and v(γ) not (1,γ)-linked".into(),
                    ),
                    size,
                ));
            }
        }
    }
    // (c)
    for gamma in ext.extension_missing().iter() {
        if gamma == beta {
            continue;
        }
        let v = ext.locate_extension(gamma).expect("γ is missing in V(F′)");
        if !c.are_linked(pivot, v, beta, gamma)? {
            return Ok((
                fail(
                    "extend(c)",
                    vec![pivot, v],
                    vec![beta, gamma],
                    "s_h and v_F′(γ) not (β,γ)-linked".into(),
                ),
                size,
            ));
        }
    }
    // (d)
    let fan_k = fan.missing_union().intersection(k.all);
    for gamma in ext.extension_missing().intersection(k.outside).iter() {
        let v = ext.locate_extension(gamma).expect("γ is missing in V(F′)");
        for seq in ext.extension.iter().filter(|s| s.sequence.tail_vertices().contains(&v)) {
            for &one in &ones {
                if seq.root_color != one {
                    if !c.are_linked(r, v, one, gamma)? {
                        return Ok((
                            fail(
                                "extend(d)",
                                vec![r, v, seq.root],
                                vec![one, gamma],
                                "φ(s_h v_0) ≠ 1 and r, v_F′(γ) not (1,γ)-linked".into(),
                            ),
                            size,
                        ));
                    }
                } else {
                    for zeta in fan_k.iter() {
                        let z = fan.locate(zeta).expect("ζ is missing in V(F)");
                        if !c.are_linked(v, z, zeta, gamma)? {
                            return Ok((
                                fail(
                                    "extend(d)",
                                    vec![v, z, seq.root],
                                    vec![zeta, gamma],
                                    "φ(s_h v_0) = 1 and v_F′(γ), v_F(ζ) not (ζ,γ)-linked".into(),
                                ),
                                size,
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok((None, size))
}

/// Results of the extend check for one critical edge.
#[derive(Debug, Clone, Default)]
pub struct ExtendSummary {
    pub pivots: usize,
    pub nonempty: usize,
    pub first_nonempty: Option<ExtensionSighting>,
}

/// Lemma extend over every maximum-fan orbit at both ends of the edge and
/// every admissible pivot `(s_h, β)`.
pub fn check_extend(
    ctx: &Context,
    orbits: &EdgeOrbits,
    config: &VerifyConfig,
) -> Result<(CheckOutcome, ExtendSummary), VerifyError> {
    let e = orbits.edge;
    let mut inst = ctx.edge_instance(e);
    let mut summary = ExtendSummary::default();
    if !ctx.class2 || !ctx.critical[e] {
        return Ok((
            vacuous(CheckId::Extend, inst, "edge is not critical in a class 2 graph"),
            summary,
        ));
    }
    if !orbits.complete {
        return Ok((
            skipped(CheckId::Extend, inst, "best-found fan: orbit enumeration incomplete"),
            summary,
        ));
    }
    let (a, b) = ctx.graph.endpoints(e);
    let mut pivotless = 0;
    let mut maximizers = 0;
    for r in [a, b] {
        let best = fan::maximum_over(orbits.colorings.clone(), true, r, &config.fan)?;
        inst.params
            .insert(format!("max_fan_at_{r}"), best.fan.size().to_string());
        for c in &best.maximizers {
            maximizers += 1;
            let fan = grow_multifan(c, r)?;
            let k = stopping_colors(&fan);
            let pivots: Vec<(Vertex, Color)> = fan
                .fan_vertices()
                .into_iter()
                .flat_map(|s| c.missing(s).intersection(k.all).iter().map(move |beta| (s, beta)))
                .collect();
            if pivots.is_empty() {
                pivotless += 1;
                continue;
            }
            for (s_h, beta) in pivots {
                summary.pivots += 1;
                let (found, size) = extend_at(c, r, s_h, beta)?;
                if size > 0 {
                    summary.nonempty += 1;
                    if summary.first_nonempty.is_none() {
                        let ext = extend_multifan(&fan, s_h, beta)?;
                        summary.first_nonempty = Some(ExtensionSighting {
                            graph6: ctx.graph6.clone(),
                            edge: (a, b),
                            center: r,
                            pivot: s_h,
                            beta,
                            extension_vertices: ext.extension_vertices(),
                            coloring: c.to_dump(),
                            maximum_fan: true,
                        });
                    }
                }
                if let Some(w) = found {
                    inst.fingerprint = Some(c.fingerprint());
                    return Ok((outcome(CheckId::Extend, inst, Some(w)), summary));
                }
            }
        }
    }
    inst.params.insert("maximizers".into(), maximizers.to_string());
    inst.params.insert("pivots".into(), summary.pivots.to_string());
    inst.params
        .insert("nonempty_extensions".into(), summary.nonempty.to_string());
    if pivotless > 0 {
        inst.params.insert("pivotless_maximizers".into(), pivotless.to_string());
    }
    if summary.pivots == 0 {
        return Ok((
            vacuous(CheckId::Extend, inst, "no fan vertex misses a stopping color"),
            summary,
        ));
    }
    Ok((outcome(CheckId::Extend, inst, None), summary))
}

/// Vertices of degree at least `Δ − k + 1` are elementary under `c`.
pub(crate) fn lemma1_at(c: &PartialColoring, k: usize) -> Option<Witness> {
    let g = c.host();
    let delta = g.max_degree();
    let heavy: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) + k > delta).collect();
    c.is_elementary(&heavy).err().map(|w| {
        let mut wit = witness(
            "lemma1",
            c,
            None,
            format!("degree ≥ Δ−{k}+1 set is not elementary: {w}"),
        );
        wit.vertices = vec![w.first, w.second];
        wit.colors = vec![w.color];
        wit
    })
}

/// The lemma1 check on every light center `r` and neighbor `s` with `d(s) < Δ`.
///
/// The verdict follows the reading where the claim concerns each coloring
/// achieving the maximum fan. The `all_orbits_elementary` parameter records
/// whether the conclusion also holds for every orbit of `G − rs`.
pub fn check_lemma1(ctx: &Context, config: &VerifyConfig) -> Result<CheckOutcome, VerifyError> {
    let mut inst = ctx.instance();
    let g = &ctx.graph;
    if !ctx.is_critical_graph() {
        return Ok(vacuous(CheckId::Lemma1, inst, "graph is not critical"));
    }
    let k = g
        .core_info()
        .map_err(crate::chromatic::SolverError::from)?
        .core_min_degree;
    inst.params.insert("k".into(), k.to_string());
    if !degree_bound_holds(g.n(), ctx.delta, k) {
        return Ok(vacuous(CheckId::Lemma1, inst, "Δ < 2n/3 + 3k/2"));
    }
    let mut pairs = 0;
    let mut all_orbits = true;
    for r in g.light_vertices().map_err(crate::chromatic::SolverError::from)? {
        for &s in g.neighbors(r) {
            if g.degree(s) >= ctx.delta {
                continue;
            }
            pairs += 1;
            let e = g.edge_id(r, s).expect("neighbors share an edge");
            let orbits = EdgeOrbits::enumerate(ctx, e, config)?;
            if !orbits.complete {
                return Ok(skipped(
                    CheckId::Lemma1,
                    inst,
                    "best-found fan: orbit enumeration incomplete",
                ));
            }
            all_orbits &= orbits.colorings.iter().all(|c| lemma1_at(c, k).is_none());
            let best = fan::maximum_over(orbits.colorings, true, r, &config.fan)?;
            for c in &best.maximizers {
                if let Some(w) = lemma1_at(c, k) {
                    inst.edge = Some((r.min(s), r.max(s)));
                    inst.fingerprint = Some(c.fingerprint());
                    return Ok(outcome(CheckId::Lemma1, inst, Some(w)));
                }
            }
        }
    }
    if pairs == 0 {
        return Ok(vacuous(CheckId::Lemma1, inst, "no light vertex has a neighbor below Δ"));
    }
    inst.params
        .insert("all_orbits_elementary".into(), all_orbits.to_string());
    Ok(outcome(CheckId::Lemma1, inst, None))
}

pub fn check_theorem_main(ctx: &Context) -> CheckOutcome {
    let h = TheoremHypotheses::evaluate(ctx);
    let mut inst = ctx.instance();
    let params: BTreeMap<String, String> = [
        ("n", h.n),
        ("delta", h.delta),
        ("core_min_degree", h.core_min_degree),
        ("k", h.k),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    inst.params = params;
    if !h.critical {
        return vacuous(CheckId::Theorem, inst, "graph is not critical");
    }
    if !h.degree_bound {
        return vacuous(CheckId::Theorem, inst, "Δ < 2n/3 + 3k/2");
    }
    let overfull = ctx.graph.is_overfull().unwrap_or(false);
    let w = (!overfull).then(|| Witness {
        part: "theorem".into(),
        coloring: String::new(),
        center: None,
        pivot: None,
        vertices: Vec::new(),
        colors: Vec::new(),
        trace: Vec::new(),
        detail: format!("hypotheses hold but |E| = {} ≤ Δ⌊n/2⌋", ctx.graph.edge_count()),
    });
    outcome(CheckId::Theorem, inst, w)
}

/// vf1, vf2 and edgecount outcomes for every orbit of one critical edge.
pub fn check_edge_orbits(
    ctx: &Context,
    orbits: &EdgeOrbits,
    checks: &[CheckId],
) -> Result<Vec<CheckOutcome>, VerifyError> {
    let mut out = Vec::new();
    for (i, c) in orbits.colorings.iter().enumerate() {
        for &check in checks {
            let o = match check {
                CheckId::Vf1 => check_vf1(ctx, c, Some(i))?,
                CheckId::Vf2 => check_vf2(ctx, c, Some(i))?,
                CheckId::Edgecount => check_elementary_edge_count(ctx, c, Some(i)),
                _ => continue,
            };
            out.push(o);
        }
    }
    if !orbits.complete {
        for &check in checks {
            if matches!(check, CheckId::Vf1 | CheckId::Vf2 | CheckId::Edgecount) {
                out.push(skipped(
                    check,
                    ctx.edge_instance(orbits.edge),
                    &format!("orbit enumeration stopped after {} orbits", orbits.colorings.len()),
                ));
            }
        }
    }
    Ok(out)
}
