//! Brute-force reimplementations working only from the rotation lists.

use std::collections::{BTreeMap, BTreeSet};

use planar_curvature::embedding::Tessellation;

pub struct Naive {
    pub rotations: Vec<Vec<usize>>,
    /// Faces as vertex cycles, each rotated to start at its smallest
    /// `(origin, head)` dart.
    pub faces: Vec<Vec<usize>>,
    pub outer: Option<usize>,
}

/// Dart `(u, v)` is followed by `(v, w)`, `w` the entry after `u` in the
/// rotation at `v`.
fn next(rotations: &[Vec<usize>], u: usize, v: usize) -> (usize, usize) {
    let rot = &rotations[v];
    let i = rot.iter().position(|&x| x == u).expect("symmetric adjacency");
    (v, rot[(i + 1) % rot.len()])
}

pub fn canonical(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let start = (0..n)
        .min_by_key(|&i| (cycle[i], cycle[(i + 1) % n]))
        .unwrap();
    (0..n).map(|i| cycle[(start + i) % n]).collect()
}

impl Naive {
    pub fn new(t: &Tessellation) -> Self {
        let rotations = t.rotation_lists();
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for u in 0..rotations.len() {
            for &v in &rotations[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut d = (u, v);
                while seen.insert(d) {
                    cycle.push(d.0);
                    d = next(&rotations, d.0, d.1);
                }
                faces.push(canonical(&cycle));
            }
        }
        let outer = t.outer_hint().map(|(u, v)| {
            faces
                .iter()
                .position(|f| {
                    let n = f.len();
                    (0..n).any(|i| f[i] == u && f[(i + 1) % n] == v)
                })
                .expect("outer dart lies on a face")
        });
        Naive { rotations, faces, outer }
    }

    pub fn interior_vertex(&self, v: usize) -> bool {
        self.outer.is_none_or(|o| !self.faces[o].contains(&v))
    }

    pub fn interior_face(&self, f: usize) -> bool {
        Some(f) != self.outer && self.faces[f].iter().all(|&v| self.interior_vertex(v))
    }

    /// Face boundary plus every vertex adjacent to it, or `None` when that
    /// set reaches the window boundary.
    pub fn one_neighborhood(&self, f: usize) -> Option<BTreeSet<usize>> {
        if Some(f) == self.outer {
            return None;
        }
        let n = self.rotations.len();
        let mut adjacent = vec![vec![false; n]; n];
        for (u, nbrs) in self.rotations.iter().enumerate() {
            for &v in nbrs {
                adjacent[u][v] = true;
            }
        }
        let rim: BTreeSet<usize> = self.faces[f].iter().copied().collect();
        let mut u1 = rim.clone();
        for v in 0..n {
            if rim.iter().any(|&z| adjacent[z][v]) {
                u1.insert(v);
            }
        }
        u1.iter().all(|&v| self.interior_vertex(v)).then_some(u1)
    }

    /// `(V_k, F_k)` over interior vertices and faces.
    pub fn census(&self) -> (BTreeMap<usize, usize>, BTreeMap<usize, usize>) {
        let mut vk = BTreeMap::new();
        for v in 0..self.rotations.len() {
            if self.interior_vertex(v) {
                *vk.entry(self.rotations[v].len()).or_insert(0) += 1;
            }
        }
        let mut fk = BTreeMap::new();
        for f in 0..self.faces.len() {
            if self.interior_face(f) {
                *fk.entry(self.faces[f].len()).or_insert(0) += 1;
            }
        }
        (vk, fk)
    }
}

/// Disagreements between the library and the brute-force versions.
pub fn mismatches(t: &Tessellation) -> Vec<String> {
    use planar_curvature::analysis::{census, one_neighborhood};
    use planar_curvature::embedding::FaceId;

    let naive = Naive::new(t);
    let mut out = Vec::new();

    let mut ours: Vec<Vec<usize>> = t
        .faces()
        .map(|f| canonical(&t.face_boundary(f).unwrap().iter().map(|v| v.0).collect::<Vec<_>>()))
        .collect();
    let mut theirs = naive.faces.clone();
    ours.sort();
    theirs.sort();
    if ours != theirs {
        out.push("face cycles differ".to_string());
    }
    if let Some(o) = t.outer_face() {
        let cycle = canonical(&t.face_boundary(o).unwrap().iter().map(|v| v.0).collect::<Vec<_>>());
        if Some(&cycle) != naive.outer.map(|i| &naive.faces[i]) {
            out.push("outer face differs".to_string());
        }
    }

    for f in t.faces() {
        let cycle = canonical(&t.face_boundary(f).unwrap().iter().map(|v| v.0).collect::<Vec<_>>());
        let i = naive.faces.iter().position(|c| *c == cycle).unwrap_or(usize::MAX);
        if i == usize::MAX {
            continue;
        }
        let lib = one_neighborhood(t, f).ok().map(|h| h.u1.iter().map(|v| v.0).collect());
        if lib != naive.one_neighborhood(i) {
            out.push(format!("U_1({}) differs", FaceId(f.0)));
        }
    }

    let c = census(t);
    if (c.vertices.clone(), c.faces.clone()) != naive.census() {
        out.push("census differs".to_string());
    }
    out
}
