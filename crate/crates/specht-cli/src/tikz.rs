//! TikZ emission for submodule lattices: one horizontal layer per distinct
//! dimension, labelled covering edges.

use crate::formats::LatticeDoc;
use std::collections::BTreeMap;
use std::fmt::Write;

pub fn lattice_tikz(doc: &LatticeDoc, title: &str) -> String {
    // layers bottom-up by dim; ties spread horizontally
    let mut layers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for n in &doc.nodes {
        layers.entry(n.dim).or_default().push(n.id);
    }
    let mut pos: BTreeMap<usize, (f64, f64)> = BTreeMap::new();
    for (level, (_, ids)) in layers.iter().enumerate() {
        let w = ids.len() as f64;
        for (k, &id) in ids.iter().enumerate() {
            let x = (k as f64) - (w - 1.0) / 2.0;
            pos.insert(id, (1.8 * x, 1.2 * level as f64));
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "% {title}");
    let _ = writeln!(out, "\\begin{{tikzpicture}}[every node/.style={{font=\\small}}]");
    for n in &doc.nodes {
        let (x, y) = pos[&n.id];
        let _ = writeln!(
            out,
            "  \\node[draw, circle, inner sep=2pt] (n{}) at ({x:.1},{y:.1}) {{{}}};",
            n.id, n.dim
        );
    }
    for e in &doc.edges {
        let label = e.label.replace("^(", "^{(").replace(')', ")}");
        let _ = writeln!(
            out,
            "  \\draw (n{}) -- (n{}) node[midway, right, font=\\scriptsize] {{${label}$}};",
            e.from, e.to
        );
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::{EdgeDoc, NodeDoc};

    #[test]
    fn tikz_mentions_every_node_and_edge() {
        let doc = LatticeDoc {
            nodes: vec![NodeDoc { id: 0, dim: 0 }, NodeDoc { id: 1, dim: 5 }],
            edges: vec![EdgeDoc { from: 0, to: 1, label: "D^(5,1)".into() }],
            top: 1,
            bottom: 0,
        };
        let s = lattice_tikz(&doc, "test");
        assert!(s.contains("(n0)"));
        assert!(s.contains("(n1)"));
        assert!(s.contains("D^{(5,1)}"));
        assert!(s.starts_with("% test"));
        assert!(s.ends_with("\\end{tikzpicture}\n"));
    }
}
