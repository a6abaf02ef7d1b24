//! Shared corpus and hand-built adversarial inputs for the integration tests.
#![allow(dead_code)]

pub mod naive;

use std::collections::{BTreeMap, HashSet};

use planar_curvature::curvature::combinatorial_curvature;
use planar_curvature::embedding::{DartId, FaceId, Mode, Tessellation};
use planar_curvature::generators::{
    antiprism, capped_tube, from_faces, platonic, prism, rhombille, rhombitrihexagonal,
    ring_cap, sharp_big_face, square_lattice, tiling_3_12_12, trihexagonal, truncated_cube,
    PlatonicSolid,
};

pub type Named = (String, Tessellation);

pub fn sphere_corpus() -> Vec<Named> {
    let mut out: Vec<Named> = PlatonicSolid::ALL
        .iter()
        .map(|&s| (format!("{s:?}").to_lowercase(), platonic(s).unwrap()))
        .collect();
    for n in 3..=20 {
        out.push((format!("prism({n})"), prism(n).unwrap()));
        out.push((format!("antiprism({n})"), antiprism(n).unwrap()));
    }
    out.push(("truncated_cube".into(), truncated_cube().unwrap()));
    out.push(("capped_tube(12,5)".into(), capped_tube(12, 5).unwrap()));
    out
}

pub fn patch_corpus() -> Vec<Named> {
    let mut out: Vec<Named> = vec![
        ("square_lattice(6,6)".into(), square_lattice(6, 6).unwrap()),
        ("trihexagonal(3)".into(), trihexagonal(3).unwrap()),
        ("rhombitrihexagonal(2)".into(), rhombitrihexagonal(2).unwrap()),
        ("rhombille(3)".into(), rhombille(3).unwrap()),
        ("tiling_3_12_12(2)".into(), tiling_3_12_12(2).unwrap()),
        ("ring_cap(6,3)".into(), ring_cap(6, 3).unwrap()),
    ];
    for k in 8..=12 {
        out.push((format!("sharp_big_face({k},3)"), sharp_big_face(k, 3).unwrap()));
    }
    out
}

pub fn corpus() -> Vec<Named> {
    let mut out = sphere_corpus();
    out.extend(patch_corpus());
    out
}

/// Every interior vertex has degree 4 and nonnegative curvature.
pub fn is_four_regular_nng(t: &Tessellation) -> bool {
    t.interior_vertices().all(|x| {
        t.vertex_degree(x) == 4 && !combinatorial_curvature(t, x).unwrap().is_negative()
    })
}

/// Reopens a sphere as a window whose outer face is `f`.
pub fn window(t: &Tessellation, f: FaceId) -> Tessellation {
    let d: DartId = t.face_darts(f)[0];
    t.with_mode(Mode::Patch, Some(d)).unwrap()
}

/// Adds `layers` rings of squares around a disk given by oriented faces.
pub fn surround(vertex_count: usize, faces: &[Vec<usize>], layers: usize) -> (usize, Vec<Vec<usize>>) {
    let mut n = vertex_count;
    let mut faces = faces.to_vec();
    for _ in 0..layers {
        let darts: HashSet<(usize, usize)> = faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i], f[(i + 1) % f.len()])))
            .collect();
        // Boundary darts run with the faces; each gets a square on its far side.
        let boundary: BTreeMap<usize, usize> =
            darts.iter().filter(|&&(u, v)| !darts.contains(&(v, u))).copied().collect();
        let ring: BTreeMap<usize, usize> =
            boundary.keys().enumerate().map(|(i, &u)| (u, n + i)).collect();
        n += ring.len();
        for (&u, &v) in &boundary {
            faces.push(vec![v, u, ring[&u], ring[&v]]);
        }
    }
    (n, faces)
}

pub fn patch_from(vertex_count: usize, faces: &[Vec<usize>], layers: usize) -> Tessellation {
    let (n, faces) = surround(vertex_count, faces, layers);
    from_faces(n, &faces, Mode::Patch).unwrap()
}

/// An `n`-gon ringed by `n` faces of degree `q`, consecutive ones sharing a
/// spoke. Vertices: `z_i = i`, spokes `a_i = n + i`, then `q - 4` chain
/// vertices per side face.
pub fn flower(n: usize, q: usize) -> (usize, Vec<Vec<usize>>) {
    assert!(q >= 4);
    let chain = q - 4;
    let z = |i: usize| i % n;
    let a = |i: usize| n + i % n;
    let c = |i: usize, j: usize| 2 * n + (i % n) * chain + j;
    let mut faces = vec![(0..n).collect::<Vec<_>>()];
    for i in 0..n {
        let mut f = vec![z(i + 1), z(i), a(i)];
        f.extend((0..chain).map(|j| c(i, j)));
        f.push(a(i + 1));
        faces.push(f);
    }
    (2 * n + n * chain, faces)
}

/// An `n`-gon whose edge faces are squares separated by triangles, so
/// consecutive squares meet only at a vertex of the `n`-gon.
pub fn squares_and_triangles(n: usize) -> (usize, Vec<Vec<usize>>) {
    let z = |i: usize| i % n;
    let a = |i: usize| n + i % n;
    let d = |i: usize| 2 * n + i % n;
    let mut faces = vec![(0..n).collect::<Vec<_>>()];
    for i in 0..n {
        faces.push(vec![z(i + 1), z(i), a(i), d(i + 1)]);
        faces.push(vec![z(i), d(i), a(i)]);
    }
    (3 * n, faces)
}

/// Sphere made of an `n`-gon and the `n` triangles of a cone over it.
pub fn pyramid(n: usize) -> Tessellation {
    let mut faces = vec![(0..n).collect::<Vec<_>>()];
    for i in 0..n {
        faces.push(vec![(i + 1) % n, i, n]);
    }
    from_faces(n + 1, &faces, Mode::Sphere).unwrap()
}

/// Antiprism with a pyramid on each `n`-gon: `2n` vertices of degree 5 and
/// two apexes of degree `n`.
pub fn gyroelongated_bipyramid(n: usize) -> Tessellation {
    let t = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let (top, bottom) = (2 * n, 2 * n + 1);
    let mut faces = Vec::new();
    for i in 0..n {
        faces.push(vec![top, t(i + 1), t(i)]);
        faces.push(vec![t(i), t(i + 1), b(i)]);
        faces.push(vec![t(i + 1), b(i + 1), b(i)]);
        faces.push(vec![bottom, b(i), b(i + 1)]);
    }
    from_faces(2 * n + 2, &faces, Mode::Sphere).unwrap()
}
