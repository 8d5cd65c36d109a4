//! Indented text dumps for fans and sequences. Field order is stable.

use std::fmt::Write;

use super::{ExtendedMultiFan, FanOrder, LinearSequence, MultiFan, StoppingColors};
use crate::coloring::PartialColoring;
use crate::graph::{EdgeId, Vertex};

fn edge_line(out: &mut String, c: &PartialColoring, indent: &str, label: &str, e: EdgeId, v: Vertex) {
    let (a, b) = c.host().endpoints(e);
    let color = c.color(e).map_or_else(|| "-".to_string(), |x| x.to_string());
    let _ = writeln!(
        out,
        "{indent}{label} {v} edge={a}-{b} color={color} missing={}",
        c.missing(v)
    );
}

pub fn render_fan(fan: &MultiFan) -> String {
    let c = fan.coloring();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "fan center={} size={} maximal={}",
        fan.center(),
        fan.size(),
        fan.is_maximal()
    );
    let _ = writeln!(out, "  r {} missing={}", fan.center(), c.missing(fan.center()));
    for (i, &(e, s)) in fan.items().iter().enumerate() {
        edge_line(&mut out, c, "  ", &format!("s{i}"), e, s);
    }
    out
}

pub fn render_sequence(seq: &LinearSequence, c: &PartialColoring, indent: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{indent}sequence center={} length={}",
        seq.center(),
        seq.items().len()
    );
    for (i, &(e, v)) in seq.items().iter().enumerate() {
        edge_line(&mut out, c, &format!("{indent}  "), &format!("v{i}"), e, v);
    }
    out
}

pub fn render_order(order: &FanOrder) -> String {
    let mut out = String::from("order");
    if order.relation.is_empty() {
        out.push_str(" (empty)");
    }
    out.push('\n');
    for &(a, b) in &order.relation {
        let _ = writeln!(out, "  {a} < {b}");
    }
    out.push_str("locator\n");
    for (col, v) in &order.locator {
        let _ = writeln!(out, "  {col} -> {v}");
    }
    out
}

pub fn render_stopping(stopping: &StoppingColors) -> String {
    format!("stopping K={} K_F={}\n", stopping.all, stopping.outside)
}

pub fn render_extended(ext: &ExtendedMultiFan) -> String {
    let c = ext.base.coloring();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "extended pivot={} beta={} sequences={} vertices={}",
        ext.pivot,
        ext.pivot_color,
        ext.extension.len(),
        ext.vertices().len()
    );
    for &(v, col) in &ext.excluded {
        let _ = writeln!(out, "  excluded {v} color={col}");
    }
    for seq in &ext.extension {
        let _ = writeln!(
            out,
            "  root={} root_color={} tau={} type={}",
            seq.root, seq.root_color, seq.tau, seq.kind
        );
        out.push_str(&render_sequence(&seq.sequence, c, "    "));
    }
    out
}
