use std::collections::{HashMap, VecDeque};

use super::{DartId, EdgeId, VertexId};
use crate::error::{Error, Result};

/// A rotation system: darts in twin pairs plus a counterclockwise cyclic
/// order of outgoing darts at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    origin: Vec<VertexId>,
    rot_next: Vec<DartId>,
    rot_prev: Vec<DartId>,
    rotations: Vec<Vec<DartId>>,
}

impl CombinatorialMap {
    /// Builds a map from per-vertex neighbor lists in counterclockwise order.
    ///
    /// Rejects asymmetric adjacency, self-loops, repeated neighbors and
    /// disconnected input. Edges are numbered in order of first appearance
    /// when scanning vertices by increasing id.
    pub fn from_rotation_system(neighbors: &[Vec<usize>]) -> Result<Self> {
        let n = neighbors.len();
        for (u, list) in neighbors.iter().enumerate() {
            for (i, &w) in list.iter().enumerate() {
                if w >= n {
                    return Err(Error::UnknownVertex(w));
                }
                if w == u {
                    return Err(Error::SelfLoop(u));
                }
                if list[..i].contains(&w) {
                    return Err(Error::MultiEdge(u, w));
                }
            }
        }
        for (u, list) in neighbors.iter().enumerate() {
            for &w in list {
                if !neighbors[w].contains(&u) {
                    return Err(Error::AsymmetricAdjacency { vertex: u, neighbor: w });
                }
            }
        }

        let mut edges = Vec::new();
        let mut dart_of: HashMap<(usize, usize), DartId> = HashMap::new();
        for (u, list) in neighbors.iter().enumerate() {
            for &w in list {
                if u < w {
                    let e = edges.len();
                    edges.push((u, w));
                    dart_of.insert((u, w), DartId(2 * e));
                    dart_of.insert((w, u), DartId(2 * e + 1));
                }
            }
        }
        let rotations = neighbors
            .iter()
            .enumerate()
            .map(|(u, list)| list.iter().map(|&w| dart_of[&(u, w)]).collect())
            .collect();
        Self::from_darts(n, &edges, rotations)
    }

    /// Low-level constructor: `edges[i] = (a, b)` defines darts `2i: a -> b`
    /// and `2i + 1: b -> a`; `rotations[v]` lists the darts leaving `v`.
    ///
    /// Parallel edges are accepted here (validation reports them); self-loops
    /// and disconnected maps are not.
    pub fn from_darts(
        vertex_count: usize,
        edges: &[(usize, usize)],
        rotations: Vec<Vec<DartId>>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::MalformedMap("no vertices".into()));
        }
        if rotations.len() != vertex_count {
            return Err(Error::MalformedMap(format!(
                "{} rotations for {} vertices",
                rotations.len(),
                vertex_count
            )));
        }
        let dart_count = 2 * edges.len();
        let mut origin = Vec::with_capacity(dart_count);
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            origin.push(VertexId(a));
            origin.push(VertexId(b));
        }

        let mut seen = vec![false; dart_count];
        let mut rot_next = vec![DartId(usize::MAX); dart_count];
        let mut rot_prev = vec![DartId(usize::MAX); dart_count];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d.0 >= dart_count {
                    return Err(Error::MalformedMap(format!("dart {d} out of range")));
                }
                if origin[d.0] != VertexId(v) {
                    return Err(Error::MalformedMap(format!(
                        "dart {d} listed at v{v} but leaves {}",
                        origin[d.0]
                    )));
                }
                if std::mem::replace(&mut seen[d.0], true) {
                    return Err(Error::MalformedMap(format!("dart {d} listed twice")));
                }
                let next = rot[(i + 1) % rot.len()];
                rot_next[d.0] = next;
                rot_prev[next.0] = d;
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedMap(format!("dart d{d} missing from its rotation")));
        }

        let map = CombinatorialMap { origin, rot_next, rot_prev, rotations };
        let components = map.component_count();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(map)
    }

    fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &d in &self.rotations[u] {
                    let w = self.head(d).0;
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn darts(&self) -> impl Iterator<Item = DartId> {
        (0..self.dart_count()).map(DartId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId)
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d.0]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        self.origin[d.twin().0]
    }

    #[inline]
    pub fn rot_next(&self, d: DartId) -> DartId {
        self.rot_next[d.0]
    }

    #[inline]
    pub fn rot_prev(&self, d: DartId) -> DartId {
        self.rot_prev[d.0]
    }

    /// Next dart along the face to the right of `d`.
    #[inline]
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next[d.twin().0]
    }

    #[inline]
    pub fn face_prev(&self, d: DartId) -> DartId {
        self.rot_prev[d.0].twin()
    }

    /// Outgoing darts of `v`, counterclockwise.
    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotations[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v.0].len()
    }

    /// Neighbors of `v` in rotation order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations[v.0].iter().map(|&d| self.head(d))
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let d = e.dart();
        (self.origin(d), self.head(d))
    }

    /// Dart `u -> v`, if that edge exists.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.rotations
            .get(u.0)?
            .iter()
            .copied()
            .find(|&d| self.head(d) == v)
    }

    /// Per-vertex neighbor lists, the inverse of [`Self::from_rotation_system`].
    pub fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        self.vertices()
            .map(|v| self.neighbors(v).map(|w| w.0).collect())
            .collect()
    }

    /// Orbits of `face_next`, each starting at its smallest dart, in order of
    /// that dart.
    pub fn trace_faces(&self) -> Vec<Vec<DartId>> {
        let mut visited = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in self.darts() {
            if visited[start.0] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while !visited[d.0] {
                visited[d.0] = true;
                cycle.push(d);
                d = self.face_next(d);
            }
            faces.push(cycle);
        }
        faces
    }

    /// The same map with every rotation reversed.
    pub fn mirrored(&self) -> CombinatorialMap {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        CombinatorialMap {
            origin: self.origin.clone(),
            rot_next: self.rot_prev.clone(),
            rot_prev: self.rot_next.clone(),
            rotations,
        }
    }
}
