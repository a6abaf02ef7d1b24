use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{CombinatorialMap, DartId, EdgeId, FaceId, VertexId};
use crate::error::{Error, Result};

/// Whether a tessellation is closed or a finite window with an outer face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sphere,
    Patch,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Sphere => "sphere",
            Mode::Patch => "patch",
        }
    }
}

/// An embedded planar graph with its traced faces.
///
/// In patch mode one face is the outer face and only elements with complete
/// stars are interior:
/// - a vertex is interior iff none of its faces is the outer face;
/// - an edge is interior iff both endpoints are interior;
/// - a face is interior iff it is not the outer face and all its vertices
///   are interior.
///
/// In sphere mode everything is interior.
#[derive(Clone, Debug)]
pub struct Tessellation {
    map: CombinatorialMap,
    faces: Vec<Vec<DartId>>,
    face_of: Vec<FaceId>,
    outer: Option<FaceId>,
    interior_vertex: Vec<bool>,
    interior_edge: Vec<bool>,
    interior_face: Vec<bool>,
}

/// Builds a tessellation from counterclockwise neighbor lists.
///
/// In patch mode `outer_hint = (u, v)` names the dart `u -> v`; the face
/// traced from that dart becomes the outer face.
pub fn build_from_rotation_system(
    rotations: &[Vec<usize>],
    mode: Mode,
    outer_hint: Option<(usize, usize)>,
) -> Result<Tessellation> {
    let map = CombinatorialMap::from_rotation_system(rotations)?;
    match mode {
        Mode::Sphere => Tessellation::sphere(map),
        Mode::Patch => {
            let (u, v) = outer_hint.ok_or_else(|| {
                Error::InvalidParameter("patch mode needs an outer face hint".into())
            })?;
            let d = map
                .dart_between(VertexId(u), VertexId(v))
                .ok_or(Error::OuterFaceNotFound(u, v))?;
            Tessellation::patch(map, d)
        }
    }
}

impl Tessellation {
    /// Closed tessellation of the sphere; checks V - E + F = 2.
    pub fn sphere(map: CombinatorialMap) -> Result<Self> {
        Self::assemble(map, None)
    }

    /// Patch whose outer face is the face of `outer_dart`.
    ///
    /// The underlying map is still a planar map, so Euler's formula is
    /// checked here as well.
    pub fn patch(map: CombinatorialMap, outer_dart: DartId) -> Result<Self> {
        if outer_dart.0 >= map.dart_count() {
            return Err(Error::MalformedMap(format!("dart {outer_dart} out of range")));
        }
        Self::assemble(map, Some(outer_dart))
    }

    fn assemble(map: CombinatorialMap, outer_dart: Option<DartId>) -> Result<Self> {
        let faces = map.trace_faces();
        let (v, e, f) = (map.vertex_count(), map.edge_count(), faces.len());
        let chi = v as i64 - e as i64 + f as i64;
        if chi != 2 {
            return Err(Error::EulerViolation { v, e, f, chi });
        }
        let mut face_of = vec![FaceId(0); map.dart_count()];
        for (i, cycle) in faces.iter().enumerate() {
            for &d in cycle {
                face_of[d.0] = FaceId(i);
            }
        }
        let outer = outer_dart.map(|d| face_of[d.0]);

        let interior_vertex: Vec<bool> = map
            .vertices()
            .map(|x| match outer {
                None => true,
                Some(o) => map.rotation(x).iter().all(|&d| face_of[d.0] != o),
            })
            .collect();
        let interior_edge = map
            .edges()
            .map(|e| {
                let (a, b) = map.endpoints(e);
                interior_vertex[a.0] && interior_vertex[b.0]
            })
            .collect();
        let interior_face = faces
            .iter()
            .enumerate()
            .map(|(i, cycle)| {
                Some(FaceId(i)) != outer
                    && cycle.iter().all(|&d| interior_vertex[map.origin(d).0])
            })
            .collect();

        Ok(Tessellation {
            map,
            faces,
            face_of,
            outer,
            interior_vertex,
            interior_edge,
            interior_face,
        })
    }

    /// Same map in the other mode. `outer_dart` is required for patches.
    pub fn with_mode(&self, mode: Mode, outer_dart: Option<DartId>) -> Result<Self> {
        match mode {
            Mode::Sphere => Self::sphere(self.map.clone()),
            Mode::Patch => {
                let d = outer_dart.ok_or_else(|| {
                    Error::InvalidParameter("patch mode needs an outer dart".into())
                })?;
                Self::patch(self.map.clone(), d)
            }
        }
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn mode(&self) -> Mode {
        if self.outer.is_some() {
            Mode::Patch
        } else {
            Mode::Sphere
        }
    }

    pub fn outer_face(&self) -> Option<FaceId> {
        self.outer
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        self.map.vertices()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        self.map.edges()
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> {
        (0..self.faces.len()).map(FaceId)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.0))
        }
    }

    pub fn check_face(&self, f: FaceId) -> Result<()> {
        if f.0 < self.faces.len() {
            Ok(())
        } else {
            Err(Error::UnknownFace(f))
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edge_count() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub fn vertex_degree(&self, v: VertexId) -> usize {
        self.map.degree(v)
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f.0].len()
    }

    /// Darts of `f` in traversal order (the face lies to their right).
    pub fn face_darts(&self, f: FaceId) -> &[DartId] {
        &self.faces[f.0]
    }

    #[inline]
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d.0]
    }

    /// Boundary vertices of `f` in traversal order.
    pub fn face_boundary(&self, f: FaceId) -> Result<Vec<VertexId>> {
        self.check_face(f)?;
        Ok(self.faces[f.0].iter().map(|&d| self.map.origin(d)).collect())
    }

    pub fn face_vertex_set(&self, f: FaceId) -> BTreeSet<VertexId> {
        self.faces[f.0].iter().map(|&d| self.map.origin(d)).collect()
    }

    /// Faces around `v`, one per outgoing dart, in rotation order.
    pub fn faces_at(&self, v: VertexId) -> impl Iterator<Item = FaceId> + '_ {
        self.map.rotation(v).iter().map(|&d| self.face_of[d.0])
    }

    /// The two faces on either side of `e`: first the face of dart `2e`.
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        let d = e.dart();
        (self.face_of[d.0], self.face_of[d.twin().0])
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.map.endpoints(e)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.map.neighbors(v)
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.map.dart_between(u, v).is_some()
    }

    pub fn is_outer(&self, f: FaceId) -> bool {
        self.outer == Some(f)
    }

    pub fn is_interior_vertex(&self, v: VertexId) -> bool {
        self.interior_vertex[v.0]
    }

    pub fn is_interior_edge(&self, e: EdgeId) -> bool {
        self.interior_edge[e.0]
    }

    pub fn is_interior_face(&self, f: FaceId) -> bool {
        self.interior_face[f.0]
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.interior_vertex[v.0])
    }

    pub fn interior_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().filter(|&e| self.interior_edge[e.0])
    }

    pub fn interior_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.faces().filter(|&f| self.interior_face[f.0])
    }

    /// Faces that are not the outer face.
    pub fn inner_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.faces().filter(|&f| !self.is_outer(f))
    }

    /// Whether `v` lies on the closure of `f`.
    pub fn is_incident(&self, v: VertexId, f: FaceId) -> bool {
        self.faces_at(v).any(|g| g == f)
    }

    /// Counterclockwise neighbor lists.
    pub fn rotation_lists(&self) -> Vec<Vec<usize>> {
        self.map.neighbor_lists()
    }

    /// The first dart of the outer face, as an `(origin, head)` pair.
    pub fn outer_hint(&self) -> Option<(usize, usize)> {
        self.outer.map(|f| {
            let d = self.faces[f.0][0];
            (self.map.origin(d).0, self.map.head(d).0)
        })
    }

    /// `sigma` and `tau` are distinct and share an edge.
    pub fn lower_adjacent_faces(&self, sigma: FaceId, tau: FaceId) -> Result<bool> {
        self.check_face(sigma)?;
        self.check_face(tau)?;
        Ok(sigma != tau
            && self.faces[sigma.0]
                .iter()
                .any(|&d| self.face_of[d.twin().0] == tau))
    }

    /// Faces lower-adjacent to `sigma`, one per boundary dart, in traversal order.
    pub fn lower_adjacent_to(&self, sigma: FaceId) -> Result<Vec<FaceId>> {
        self.check_face(sigma)?;
        Ok(self.faces[sigma.0]
            .iter()
            .map(|&d| self.face_of[d.twin().0])
            .collect())
    }

    /// `tau` and `omega` are both lower-adjacent to `sigma` and their
    /// closures meet in exactly one vertex, which lies on `sigma`.
    pub fn sigma_neighbours(&self, sigma: FaceId, tau: FaceId, omega: FaceId) -> Result<bool> {
        if tau == omega {
            self.check_face(tau)?;
            return Ok(false);
        }
        if !self.lower_adjacent_faces(sigma, tau)? || !self.lower_adjacent_faces(sigma, omega)? {
            return Ok(false);
        }
        let common: Vec<_> = self
            .face_vertex_set(tau)
            .intersection(&self.face_vertex_set(omega))
            .copied()
            .collect();
        Ok(common.len() == 1 && self.face_vertex_set(sigma).contains(&common[0]))
    }

    /// Alias of [`Self::sigma_neighbours`]; the relation is symmetric.
    pub fn sigma_adjacent(&self, sigma: FaceId, tau: FaceId, omega: FaceId) -> Result<bool> {
        self.sigma_neighbours(sigma, tau, omega)
    }
}
