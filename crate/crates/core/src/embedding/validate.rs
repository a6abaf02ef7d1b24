use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::{EdgeId, FaceId, Mode, Tessellation, VertexId};

/// One violated tessellation condition, with the offending elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EulerCharacteristic { vertices: usize, edges: usize, faces: usize },
    MultiEdge { endpoints: (VertexId, VertexId), edges: Vec<EdgeId> },
    /// Both sides of the edge belong to the same face.
    EdgeOnSingleFace { edge: EdgeId, face: FaceId },
    VertexDegree { vertex: VertexId, degree: usize },
    FaceDegree { face: FaceId, degree: usize },
    /// The face boundary revisits a vertex, so its closure is not a disk.
    FaceNotSimple { face: FaceId, repeated: VertexId },
    /// Two closed faces meet in something other than nothing, a vertex or an edge.
    FaceIntersection {
        faces: (FaceId, FaceId),
        shared_vertices: Vec<VertexId>,
        shared_edges: Vec<EdgeId>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EulerCharacteristic { vertices, edges, faces } => {
                write!(f, "euler: V-E+F = {}-{}+{} != 2", vertices, edges, faces)
            }
            Violation::MultiEdge { endpoints: (a, b), edges } => {
                write!(f, "multi-edge: {a}-{b} via {edges:?}")
            }
            Violation::EdgeOnSingleFace { edge, face } => {
                write!(f, "edge {edge} has {face} on both sides")
            }
            Violation::VertexDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} < 3")
            }
            Violation::FaceDegree { face, degree } => {
                write!(f, "face {face} has degree {degree} < 3")
            }
            Violation::FaceNotSimple { face, repeated } => {
                write!(f, "face {face} visits {repeated} more than once")
            }
            Violation::FaceIntersection { faces: (a, b), shared_vertices, shared_edges } => write!(
                f,
                "faces {a} and {b} share vertices {shared_vertices:?} and edges {shared_edges:?}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }
}

/// Checks the tessellation conditions and reports every violation.
///
/// Patches are judged on what the window can see: degree bounds apply to
/// interior vertices and faces, and face-pair intersections are checked
/// among faces other than the outer face.
pub fn validate_tessellation(t: &Tessellation) -> ValidationReport {
    let mut out = Vec::new();
    let map = t.map();

    let chi = t.vertex_count() as i64 - t.edge_count() as i64 + t.face_count() as i64;
    if chi != 2 {
        out.push(Violation::EulerCharacteristic {
            vertices: t.vertex_count(),
            edges: t.edge_count(),
            faces: t.face_count(),
        });
    }

    let mut by_pair: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for e in t.edges() {
        let (a, b) = t.edge_endpoints(e);
        by_pair.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    for (endpoints, edges) in by_pair {
        if edges.len() > 1 {
            out.push(Violation::MultiEdge { endpoints, edges });
        }
    }

    for e in t.edges() {
        let (f, g) = t.edge_faces(e);
        if f == g {
            out.push(Violation::EdgeOnSingleFace { edge: e, face: f });
        }
    }

    let patch = t.mode() == Mode::Patch;
    for v in t.vertices() {
        if patch && !t.is_interior_vertex(v) {
            continue;
        }
        let degree = map.degree(v);
        if degree < 3 {
            out.push(Violation::VertexDegree { vertex: v, degree });
        }
    }
    for f in t.faces() {
        if patch && !t.is_interior_face(f) {
            continue;
        }
        let degree = t.face_degree(f);
        if degree < 3 {
            out.push(Violation::FaceDegree { face: f, degree });
        }
    }

    let considered = |f: FaceId| !t.is_outer(f);
    for f in t.faces().filter(|&f| considered(f)) {
        let mut seen = BTreeSet::new();
        for v in t.face_boundary(f).expect("face exists") {
            if !seen.insert(v) {
                out.push(Violation::FaceNotSimple { face: f, repeated: v });
                break;
            }
        }
    }

    let mut shared_vertices: HashMap<(FaceId, FaceId), BTreeSet<VertexId>> = HashMap::new();
    for v in t.vertices() {
        let around: BTreeSet<FaceId> = t.faces_at(v).filter(|&f| considered(f)).collect();
        let around: Vec<_> = around.into_iter().collect();
        for (i, &a) in around.iter().enumerate() {
            for &b in &around[i + 1..] {
                shared_vertices.entry((a, b)).or_default().insert(v);
            }
        }
    }
    let mut shared_edges: HashMap<(FaceId, FaceId), Vec<EdgeId>> = HashMap::new();
    for e in t.edges() {
        let (f, g) = t.edge_faces(e);
        if f != g && considered(f) && considered(g) {
            shared_edges.entry((f.min(g), f.max(g))).or_default().push(e);
        }
    }
    let mut pairs: Vec<_> = shared_vertices.into_iter().collect();
    pairs.sort();
    for (pair, verts) in pairs {
        let edges = shared_edges.remove(&pair).unwrap_or_default();
        let ok = match (verts.len(), edges.as_slice()) {
            (1, []) => true,
            (2, [e]) => {
                let (a, b) = t.edge_endpoints(*e);
                verts.contains(&a) && verts.contains(&b)
            }
            _ => false,
        };
        if !ok {
            out.push(Violation::FaceIntersection {
                faces: pair,
                shared_vertices: verts.into_iter().collect(),
                shared_edges: edges,
            });
        }
    }

    ValidationReport { violations: out }
}
