//! DOT emission for submodule lattices: dim-labelled nodes, factor-labelled
//! edges, bottom-to-top rank direction.

use crate::formats::LatticeDoc;
use std::fmt::Write;

pub fn lattice_dot(doc: &LatticeDoc, title: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{title}\" {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=circle, fontsize=10];");
    for n in &doc.nodes {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", n.id, n.dim);
    }
    for e in &doc.edges {
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.label);
    }
    out.push_str("}\n");
    out
}

/// Minimal parser for the graphs we emit, to check round-tripping.
pub fn parse_lattice_dot(s: &str) -> Option<LatticeDoc> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for line in s.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix('n') {
            if let Some((head, tail)) = rest.split_once(" [label=\"") {
                let label = tail.strip_suffix("\"];")?;
                if let Some((from, to)) = head.split_once(" -> n") {
                    edges.push(crate::formats::EdgeDoc {
                        from: from.parse().ok()?,
                        to: to.trim().parse().ok()?,
                        label: label.to_string(),
                    });
                } else {
                    nodes.push(crate::formats::NodeDoc {
                        id: head.trim().parse().ok()?,
                        dim: label.parse().ok()?,
                    });
                }
            }
        }
    }
    if nodes.is_empty() {
        return None;
    }
    let bottom = nodes.iter().position(|n| n.dim == 0)?;
    let top = nodes
        .iter()
        .enumerate()
        .max_by_key(|(_, n)| n.dim)
        .map(|(i, _)| i)?;
    Some(LatticeDoc { nodes, edges, top, bottom })
}
