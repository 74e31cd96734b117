use std::fmt::Write;

use super::{EdgeKind, GraphDoc, NodeKind};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Graphviz digraph: classes as boxes, individuals as ellipses.
pub fn render_dot(g: &GraphDoc) -> String {
    let mut out = String::from("digraph aieo {\n");
    for n in &g.nodes {
        let (label, shape) = match n.kind {
            NodeKind::Class => (format!("{} ({})", n.label, n.members.unwrap_or(0)), "box"),
            NodeKind::Individual => (n.label.clone(), "ellipse"),
        };
        writeln!(out, "  {} [label={}, shape={shape}];", quote(&n.id), quote(&label)).unwrap();
    }
    for e in &g.edges {
        let style = match e.kind {
            EdgeKind::Subclass => "arrowhead=empty",
            EdgeKind::Equivalence => "dir=both, style=dashed",
            EdgeKind::Membership => "style=dotted",
            EdgeKind::Assertion => "style=solid",
        };
        writeln!(out, "  {} -> {} [label={}, {style}];", quote(&e.from), quote(&e.to), quote(&e.label)).unwrap();
    }
    out.push_str("}\n");
    out
}
