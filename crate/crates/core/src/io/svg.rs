use std::fmt::Write as _;

use log::warn;

use crate::curvature::combinatorial_curvature;
use crate::embedding::{Tessellation, VertexId};
use crate::error::{Error, Result};
use crate::io::layout::{ring_layout, tutte_layout, Layout};

#[derive(Clone, Copy, Debug)]
pub struct SvgOptions {
    /// Mark interior vertices with `curv-pos`, `curv-zero` or `curv-neg`.
    pub color_curvature: bool,
    /// Width and height of the drawing in pixels.
    pub size: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { color_curvature: false, size: 800.0 }
    }
}

const STYLE: &str = "\
.edge { stroke: #333; stroke-width: 1; fill: none; }
.face-degree { font: 10px sans-serif; fill: #666; text-anchor: middle; dominant-baseline: middle; }
.vertex { fill: #999; }
.curv-pos { fill: #d62728; }
.curv-zero { fill: #7f7f7f; }
.curv-neg { fill: #1f77b4; }
";

/// Tutte drawing with one polyline per edge and a degree label per face.
/// Falls back to a ring layout if the harmonic system cannot be solved.
pub fn export_svg(t: &Tessellation, options: &SvgOptions) -> Result<String> {
    let layout = match tutte_layout(t) {
        Ok(l) => l,
        Err(Error::LayoutSingular) => {
            warn!("harmonic layout failed, using ring layout");
            ring_layout(t)
        }
        Err(e) => return Err(e),
    };
    Ok(render(t, &layout, options))
}

fn render(t: &Tessellation, layout: &Layout, options: &SvgOptions) -> String {
    let size = options.size;
    let margin = 20.0;
    let scale = (size - 2.0 * margin) / 2.0;
    let at = |v: VertexId| {
        let (x, y) = layout.positions[v.0];
        (margin + (x + 1.0) * scale, margin + (1.0 - y) * scale)
    };

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(out, "<style>\n{STYLE}</style>").unwrap();

    for e in t.edges() {
        let (a, b) = t.edge_endpoints(e);
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        writeln!(out, r#"<polyline class="edge" points="{x1:.3},{y1:.3} {x2:.3},{y2:.3}"/>"#).unwrap();
    }

    for f in t.faces() {
        if t.is_outer(f) {
            continue;
        }
        let degree = t.face_degree(f);
        let (x, y) = if f == layout.pinned_face {
            (margin, margin / 2.0)
        } else {
            let pts: Vec<(f64, f64)> = t.face_boundary(f).expect("face exists").into_iter().map(at).collect();
            let n = pts.len() as f64;
            (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n)
        };
        writeln!(out, r#"<text class="face-degree" x="{x:.3}" y="{y:.3}">{degree}</text>"#).unwrap();
    }

    for v in t.vertices() {
        let class = if options.color_curvature && t.is_interior_vertex(v) {
            let phi = combinatorial_curvature(t, v).expect("interior vertex");
            if phi.is_positive() {
                "curv-pos"
            } else if phi.is_negative() {
                "curv-neg"
            } else {
                "curv-zero"
            }
        } else {
            "vertex"
        };
        let radius = if class == "vertex" { 2.0 } else { 4.0 };
        let (x, y) = at(v);
        writeln!(out, r#"<circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="{radius}"/>"#).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
