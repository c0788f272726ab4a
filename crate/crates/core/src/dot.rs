//! Graphviz export.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::graph::{BipartiteGraph, CycleFamily};

/// DOT document for `g`, A-vertices as `a<i>` and B-vertices as `b<j>`, one
/// rank per side. Edges of `highlight` (in combined vertex ids) are drawn
/// bold and red.
pub fn export_dot(g: &BipartiteGraph, highlight: Option<&CycleFamily>) -> String {
    let marked: BTreeSet<(usize, usize)> = highlight
        .map(|f| f.edges().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect())
        .unwrap_or_default();
    let mut out = String::from("graph dhp {\n  rankdir=TB;\n  node [shape=circle];\n");
    let side = |prefix: &str, count: usize| {
        let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        format!("  {{ rank=same; {} }}\n", names.iter().map(|s| format!("{s};")).collect::<Vec<_>>().join(" "))
    };
    if g.a_count() > 0 {
        out.push_str(&side("a", g.a_count()));
    }
    if g.b_count() > 0 {
        out.push_str(&side("b", g.b_count()));
    }
    for (a, b) in g.edges() {
        let (u, v) = (g.a_id(a), g.b_id(b));
        let style = if marked.contains(&(u.min(v), u.max(v))) { " [color=red, penwidth=2]" } else { "" };
        writeln!(out, "  a{a} -- b{b}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}
