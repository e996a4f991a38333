use std::fmt::Write;

use super::graph::ReachGraph;
use crate::field::{Elem, FieldCtx};

const NAMES: [&str; 8] = ["f", "g", "h", "k", "l", "m", "n", "r"];

/// Display name of generator `i`: `f`, `g`, `h`, ... then `f8`, `f9`, ...
pub fn generator_name(i: usize) -> String {
    NAMES
        .get(i)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("f{i}"))
}

/// Renders the reachable subgraph together with its entry points.
///
/// Distinguished elements are double circles, squares are shaded, and each
/// edge carries the name of its generator.
pub fn export_dot(ctx: &FieldCtx, graph: &ReachGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph reach {{").unwrap();
    writeln!(out, "    node [shape=circle];").unwrap();

    let mut drawn: Vec<Elem> = graph.entries().to_vec();
    drawn.extend(
        graph
            .nodes()
            .iter()
            .copied()
            .filter(|x| !graph.entries().contains(x)),
    );
    for x in drawn {
        let mut attrs = Vec::new();
        if graph.entries().contains(&x) {
            attrs.push("shape=doublecircle");
        }
        if ctx.is_square(x) {
            attrs.push("style=filled");
            attrs.push("fillcolor=lightgray");
        }
        if attrs.is_empty() {
            writeln!(out, "    \"{x}\";").unwrap();
        } else {
            writeln!(out, "    \"{x}\" [{}];", attrs.join(", ")).unwrap();
        }
    }
    for e in graph.edges() {
        writeln!(
            out,
            "    \"{}\" -> \"{}\" [label=\"{}\"];",
            e.from,
            e.to,
            generator_name(e.gen)
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
