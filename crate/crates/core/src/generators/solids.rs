use std::fmt;

use serde::{Deserialize, Serialize};

use super::from_faces;
use crate::embedding::{Mode, Tessellation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub const ALL: [PlatonicSolid; 5] = [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Dodecahedron,
        PlatonicSolid::Icosahedron,
    ];
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        })
    }
}

pub fn platonic(solid: PlatonicSolid) -> Result<Tessellation> {
    match solid {
        PlatonicSolid::Tetrahedron => from_faces(
            4,
            &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
            Mode::Sphere,
        ),
        PlatonicSolid::Cube => prism(4),
        PlatonicSolid::Octahedron => antiprism(3),
        PlatonicSolid::Dodecahedron => dodecahedron(),
        PlatonicSolid::Icosahedron => icosahedron(),
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")))
    } else {
        Ok(())
    }
}

/// Two n-gons `a` (0..n) and `b` (n..2n) joined by n squares.
pub fn prism(n: usize) -> Result<Tessellation> {
    check_n(n)?;
    let a = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let mut faces = vec![(0..n).map(a).collect::<Vec<_>>(), (0..n).rev().map(b).collect()];
    for i in 0..n {
        faces.push(vec![a(i + 1), a(i), b(i), b(i + 1)]);
    }
    from_faces(2 * n, &faces, Mode::Sphere)
}

fn antiprism_band(n: usize, a: impl Fn(usize) -> usize, b: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut faces = Vec::with_capacity(2 * n);
    for i in 0..n {
        faces.push(vec![a(i + 1), a(i), b(i)]);
        faces.push(vec![b(i), b(i + 1), a(i + 1)]);
    }
    faces
}

/// Two n-gons joined by a band of 2n triangles; every vertex is (3,3,3,n).
pub fn antiprism(n: usize) -> Result<Tessellation> {
    check_n(n)?;
    let a = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let mut faces = vec![(0..n).map(a).collect::<Vec<_>>(), (0..n).rev().map(b).collect()];
    faces.extend(antiprism_band(n, a, b));
    from_faces(2 * n, &faces, Mode::Sphere)
}

/// Pentagonal antiprism with a pyramid on each pentagon.
fn icosahedron() -> Result<Tessellation> {
    let n = 5;
    let a = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let (top, bottom) = (10, 11);
    let mut faces = antiprism_band(n, a, b);
    for i in 0..n {
        faces.push(vec![a(i), a(i + 1), top]);
        faces.push(vec![b(i + 1), b(i), bottom]);
    }
    from_faces(12, &faces, Mode::Sphere)
}

/// Top pentagon `a`, a zigzag ring `b`/`c` of ten vertices, bottom pentagon `d`.
fn dodecahedron() -> Result<Tessellation> {
    let n = 5;
    let a = |i: usize| i % n;
    let b = |i: usize| 5 + i % n;
    let c = |i: usize| 10 + i % n;
    let d = |i: usize| 15 + i % n;
    let mut faces = vec![(0..n).map(a).collect::<Vec<_>>(), (0..n).rev().map(d).collect()];
    for i in 0..n {
        faces.push(vec![a(i + 1), a(i), b(i), c(i), b(i + 1)]);
        faces.push(vec![b(i + 1), c(i), d(i), d(i + 1), c(i + 1)]);
    }
    from_faces(20, &faces, Mode::Sphere)
}

/// Cuts every vertex of a closed tessellation: each dart becomes a vertex
/// near its origin, each face of degree q becomes a 2q-gon and each vertex
/// of degree N becomes an N-gon.
pub fn truncate(t: &Tessellation) -> Result<Tessellation> {
    if t.mode() != Mode::Sphere {
        return Err(Error::PatchModeUnsupported);
    }
    let map = t.map();
    let mut faces = Vec::with_capacity(t.face_count() + t.vertex_count());
    for f in t.faces() {
        faces.push(
            t.face_darts(f)
                .iter()
                .flat_map(|&d| [d.0, d.twin().0])
                .collect(),
        );
    }
    for v in t.vertices() {
        faces.push(map.rotation(v).iter().rev().map(|d| d.0).collect());
    }
    from_faces(map.dart_count(), &faces, Mode::Sphere)
}

pub fn truncated_cube() -> Result<Tessellation> {
    truncate(&prism(4)?)
}
