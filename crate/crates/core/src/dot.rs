//! Graphviz export.

use std::fmt::Write;

use crate::extract::TwoRegularSubgraph;
use crate::graph::Multigraph;

const PALETTE: [&str; 8] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "deeppink", "teal",
];
const STYLES: [&str; 3] = ["solid", "dashed", "dotted"];

/// Undirected DOT text for `g`. When a subgraph is given, each of its cycles
/// gets its own colour and line style, and vertices it misses are greyed out.
pub fn to_dot(g: &Multigraph, highlight: Option<&TwoRegularSubgraph>) -> String {
    let mut cycle_of = vec![None; g.edge_count()];
    if let Some(h) = highlight {
        for (i, cycle) in h.cycles.iter().enumerate() {
            for &e in cycle {
                cycle_of[e] = Some(i);
            }
        }
    }
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let omitted = highlight.is_some_and(|h| !h.covered.contains(&v));
        if omitted {
            writeln!(out, "  {v} [color=gray, fontcolor=gray, style=dashed];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match cycle_of[e] {
            Some(i) => writeln!(
                out,
                "  {u} -- {v} [color={}, style={}, penwidth=2.5];",
                PALETTE[i % PALETTE.len()],
                STYLES[(i / PALETTE.len()) % STYLES.len()]
            )
            .unwrap(),
            None if highlight.is_some() => {
                writeln!(out, "  {u} -- {v} [color=gray];").unwrap()
            }
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
