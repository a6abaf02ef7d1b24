use std::fmt::Write as _;

use crate::embedding::Tessellation;

/// Undirected Graphviz graph; boundary vertices of a patch are drawn dashed.
pub fn export_dot(t: &Tessellation) -> String {
    let mut out = String::from("graph planar {\n");
    writeln!(out, "  // mode: {}", t.mode().as_str()).unwrap();
    for v in t.vertices() {
        let style = if t.is_interior_vertex(v) { "" } else { " [style=dashed]" };
        writeln!(out, "  {}{style};", v.0).unwrap();
    }
    for e in t.edges() {
        let (a, b) = t.edge_endpoints(e);
        writeln!(out, "  {} -- {};", a.0, b.0).unwrap();
    }
    out.push_str("}\n");
    out
}
