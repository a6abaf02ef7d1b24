//! Dual and medial graphs with their correspondence maps.
//!
//! The medial graph has one vertex `m(e)` per edge and one edge per corner
//! (two edges consecutive around a face). Its faces are `Σ_x` for vertices
//! and `Σ_σ` for faces, with `|Σ_x| = |x|` and `|Σ_σ| = |σ|`.

use std::collections::BTreeMap;

use crate::analysis::census;
use crate::curvature::{combinatorial_curvature, psi_curvature};
use crate::embedding::{
    build_from_rotation_system, CombinatorialMap, DartId, EdgeId, FaceId, Mode, Tessellation,
    VertexId,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct DualMapping {
    pub dual: Tessellation,
    /// Face `σ` of the primal to its dual vertex `σ*`.
    pub face_to_vertex: Vec<VertexId>,
    /// Vertex `x` of the primal to the dual face around it.
    pub vertex_to_face: Vec<FaceId>,
    /// Edge `e` to `e*`.
    pub edge_to_edge: Vec<EdgeId>,
}

/// Medial graph with its correspondences. On patches only interior edges
/// get a medial vertex, and only complete `Σ` faces are mapped; the partial
/// ones merge into the medial's outer face.
#[derive(Clone, Debug)]
pub struct MedialMapping {
    pub medial: Tessellation,
    pub edge_to_vertex: Vec<Option<VertexId>>,
    pub vertex_to_edge: Vec<EdgeId>,
    /// `x ↦ Σ_x`.
    pub vertex_to_face: Vec<Option<FaceId>>,
    /// `σ ↦ Σ_σ`.
    pub face_to_face: Vec<Option<FaceId>>,
}

impl MedialMapping {
    pub fn m(&self, e: EdgeId) -> Option<VertexId> {
        self.edge_to_vertex.get(e.0).copied().flatten()
    }
}

pub fn dual(t: &Tessellation) -> Result<DualMapping> {
    if t.mode() != Mode::Sphere {
        return Err(Error::PatchModeUnsupported);
    }
    // Faces are traced clockwise, so the reversed dart cycle of σ is the
    // counterclockwise order of its neighbours across each side.
    let rotations: Vec<Vec<usize>> = t
        .faces()
        .map(|f| t.face_darts(f).iter().rev().map(|&d| t.face_of(d.twin()).0).collect())
        .collect();
    let dual = build_from_rotation_system(&rotations, Mode::Sphere, None)?;
    let dm = dual.map();

    let dual_dart = |d: DartId| {
        dm.dart_between(VertexId(t.face_of(d).0), VertexId(t.face_of(d.twin()).0))
            .expect("dual edge exists")
    };
    let edge_to_edge = t.edges().map(|e| dual_dart(e.dart()).edge()).collect();

    let mut vertex_to_face = Vec::with_capacity(t.vertex_count());
    for x in t.vertices() {
        let out = t.map().rotation(x);
        let pick = [false, true].into_iter().find_map(|flip| {
            let faces: Vec<FaceId> = out
                .iter()
                .map(|&d| {
                    let dd = dual_dart(d);
                    dual.face_of(if flip { dd.twin() } else { dd })
                })
                .collect();
            (faces.iter().all(|&f| f == faces[0]) && dual.face_degree(faces[0]) == out.len())
                .then_some(faces[0])
        });
        vertex_to_face.push(pick.ok_or_else(|| {
            Error::MalformedMap(format!("no dual face corresponds to vertex {x}"))
        })?);
    }

    Ok(DualMapping {
        face_to_vertex: t.faces().map(|f| VertexId(f.0)).collect(),
        vertex_to_face,
        edge_to_edge,
        dual,
    })
}

/// Which `Σ` a medial face is: around a vertex or inside a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sigma {
    Vertex(VertexId),
    Face(FaceId),
}

pub fn medial(t: &Tessellation) -> Result<MedialMapping> {
    let map = t.map();
    let mut keep: Vec<bool> = t.edges().map(|e| t.is_interior_edge(e)).collect();
    if !keep.iter().any(|&k| k) {
        return Err(Error::EmptyInterior);
    }

    // A corner joins edge(d) to edge(face_next(d)) inside face(d). In
    // patch mode both edges must survive.
    let corner_ok = |d: DartId| {
        let n = map.face_next(d);
        keep[d.edge().0] && keep[n.edge().0] && !t.is_outer(t.face_of(d))
    };
    // Neighbours of m(e) counterclockwise: both corners in face(d), then
    // both corners in face(twin d).
    let mut nbrs: Vec<Vec<EdgeId>> = vec![Vec::new(); t.edge_count()];
    for e in t.edges().filter(|e| keep[e.0]) {
        let d = e.dart();
        let candidates = [
            (map.face_prev(d), corner_ok(map.face_prev(d))),
            (map.face_next(d), corner_ok(d)),
            (map.face_prev(d.twin()), corner_ok(map.face_prev(d.twin()))),
            (map.face_next(d.twin()), corner_ok(d.twin())),
        ];
        nbrs[e.0] = candidates.iter().filter(|c| c.1).map(|c| c.0.edge()).collect();
    }
    // Prune dangling medial vertices on the frontier.
    loop {
        let weak: Vec<usize> = (0..nbrs.len())
            .filter(|&i| keep[i] && nbrs[i].len() <= 1)
            .collect();
        if weak.is_empty() {
            break;
        }
        for i in weak {
            keep[i] = false;
            nbrs[i].clear();
        }
        for list in nbrs.iter_mut() {
            list.retain(|e| keep[e.0]);
        }
    }
    let vertex_to_edge: Vec<EdgeId> = t.edges().filter(|e| keep[e.0]).collect();
    if vertex_to_edge.is_empty() {
        return Err(Error::EmptyInterior);
    }
    let mut edge_to_vertex = vec![None; t.edge_count()];
    for (i, &e) in vertex_to_edge.iter().enumerate() {
        edge_to_vertex[e.0] = Some(VertexId(i));
    }
    let rotations: Vec<Vec<usize>> = vertex_to_edge
        .iter()
        .map(|e| nbrs[e.0].iter().map(|n| edge_to_vertex[n.0].expect("kept").0).collect())
        .collect();

    let mmap = CombinatorialMap::from_rotation_system(&rotations)?;
    let traced = mmap.trace_faces();

    // Label each medial dart m(e) -> m(e') by the corner it crosses.
    let corner_of = |md: DartId| -> (VertexId, FaceId) {
        let e = vertex_to_edge[mmap.origin(md).0];
        let f = vertex_to_edge[mmap.head(md).0];
        let d = e.dart();
        for dd in [d, d.twin()] {
            if map.face_next(dd).edge() == f {
                return (map.head(dd), t.face_of(dd));
            }
            if map.face_prev(dd).edge() == f {
                return (map.origin(dd), t.face_of(dd));
            }
        }
        unreachable!("medial edges come from corners")
    };
    let classify = |cycle: &[DartId]| -> Option<Sigma> {
        let corners: Vec<_> = cycle.iter().map(|&md| corner_of(md)).collect();
        let (x0, f0) = corners[0];
        if corners.iter().all(|c| c.1 == f0) && cycle.len() == t.face_degree(f0) {
            Some(Sigma::Face(f0))
        } else if corners.iter().all(|c| c.0 == x0) && cycle.len() == t.vertex_degree(x0) {
            Some(Sigma::Vertex(x0))
        } else {
            None
        }
    };
    let labels: Vec<Option<Sigma>> = traced.iter().map(|c| classify(c)).collect();

    let medial = match t.mode() {
        Mode::Sphere => {
            if labels.iter().any(Option::is_none) {
                return Err(Error::MalformedMap("medial face is neither Σ_x nor Σ_σ".into()));
            }
            Tessellation::sphere(mmap.clone())?
        }
        Mode::Patch => {
            let frontier: Vec<usize> = (0..traced.len()).filter(|&i| labels[i].is_none()).collect();
            if frontier.len() != 1 {
                return Err(Error::FragmentedFrontier(frontier.len()));
            }
            Tessellation::patch(mmap.clone(), traced[frontier[0]][0])?
        }
    };

    let mut vertex_to_face = vec![None; t.vertex_count()];
    let mut face_to_face = vec![None; t.face_count()];
    for f in medial.faces() {
        let cycle = medial.face_darts(f);
        if medial.is_outer(f) {
            continue;
        }
        match classify(cycle) {
            Some(Sigma::Vertex(x)) => vertex_to_face[x.0] = Some(f),
            Some(Sigma::Face(s)) => face_to_face[s.0] = Some(f),
            None => return Err(Error::MalformedMap("unlabelled medial face".into())),
        }
    }

    Ok(MedialMapping { medial, edge_to_vertex, vertex_to_edge, vertex_to_face, face_to_face })
}

/// Whether `Ψ(e) = Φ(m(e))` on every edge whose medial vertex has a
/// complete star (every edge, on a sphere).
pub fn psi_medial_transfer_check(t: &Tessellation) -> Result<bool> {
    let mm = medial(t)?;
    Ok(t.interior_edges().all(|e| match mm.m(e) {
        Some(v) if mm.medial.is_interior_vertex(v) => {
            psi_curvature(t, e).expect("interior edge")
                == combinatorial_curvature(&mm.medial, v).expect("interior medial vertex")
        }
        _ => t.mode() == Mode::Patch,
    }))
}

/// Degree counts `(V_k + F_k, F_k(medial))` per `k` over the compared
/// region: vertices and faces whose `Σ` is an interior medial face, and the
/// interior medial faces that are such a `Σ`.
pub fn census_transfer_table(t: &Tessellation) -> Result<BTreeMap<usize, (usize, usize)>> {
    let mm = medial(t)?;
    let mut table: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    if t.mode() == Mode::Sphere {
        let (c, cm) = (census(t), census(&mm.medial));
        for (&k, &n) in c.vertices.iter().chain(c.faces.iter()) {
            table.entry(k).or_default().0 += n;
        }
        for (&k, &n) in &cm.faces {
            table.entry(k).or_default().1 += n;
        }
        return Ok(table);
    }
    let complete = |f: Option<FaceId>| f.filter(|&f| mm.medial.is_interior_face(f));
    let mut compared = Vec::new();
    for x in t.vertices() {
        if let Some(f) = complete(mm.vertex_to_face[x.0]) {
            table.entry(t.vertex_degree(x)).or_default().0 += 1;
            compared.push(f);
        }
    }
    for s in t.faces() {
        if let Some(f) = complete(mm.face_to_face[s.0]) {
            table.entry(t.face_degree(s)).or_default().0 += 1;
            compared.push(f);
        }
    }
    for f in compared {
        table.entry(mm.medial.face_degree(f)).or_default().1 += 1;
    }
    Ok(table)
}

/// Whether `V_k + F_k = F_k(medial)` for every `k`.
pub fn census_transfer_check(t: &Tessellation) -> Result<bool> {
    Ok(census_transfer_table(t)?.values().all(|(a, b)| a == b))
}
