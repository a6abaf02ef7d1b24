use super::from_faces;
use crate::embedding::{Mode, Tessellation};
use crate::error::{Error, Result};

/// Vertex `i` (mod k) of ring `j`.
fn r(k: usize, j: usize, i: isize) -> usize {
    j * k + i.rem_euclid(k as isize) as usize
}

/// Faces of a k-gon `σ` (ring 0) surrounded by alternating triangles and
/// squares (apexes on ring 1, square tips on ring 2), then `collar` rings of
/// squares reaching ring `collar + 2`.
fn cap_faces(k: usize, collar: usize) -> Vec<Vec<usize>> {
    let ki = |i: usize| i as isize;
    let mut faces = vec![(0..k).map(|i| r(k, 0, ki(i))).collect::<Vec<_>>()];
    for i in 0..k {
        let i = ki(i);
        faces.push(vec![r(k, 0, i + 1), r(k, 0, i), r(k, 1, i)]);
        faces.push(vec![r(k, 0, i), r(k, 1, i - 1), r(k, 2, i), r(k, 1, i)]);
    }
    for j in 1..=collar {
        for i in 0..k {
            let i = ki(i);
            faces.push(if j % 2 == 1 {
                vec![r(k, j, i), r(k, j + 1, i), r(k, j + 2, i), r(k, j + 1, i + 1)]
            } else {
                vec![r(k, j, i), r(k, j + 1, i - 1), r(k, j + 2, i), r(k, j + 1, i)]
            });
        }
    }
    faces
}

/// A k-gon ringed by `(3,3,4,k)` vertices, with `layers` rings of interior
/// vertices in total (the k-gon's ring included). Triangle apexes have
/// pattern `(3,4,4,4)`; the rings beyond them are square collars.
///
/// Accepts any `k ≥ 3`; see [`sharp_big_face`] for the range the big-face
/// analysis cares about.
pub fn ring_cap(k: usize, layers: usize) -> Result<Tessellation> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
    }
    if layers < 2 {
        return Err(Error::InvalidParameter(format!("layers must be at least 2, got {layers}")));
    }
    let faces = cap_faces(k, layers - 1);
    from_faces(k * (layers + 2), &faces, Mode::Patch)
}

/// [`ring_cap`] restricted to `8 ≤ k ≤ 12`: the big face has `k` vertices of
/// pattern `(3,3,4,k)`, each of curvature `1/k - 1/12`.
pub fn sharp_big_face(k: usize, layers: usize) -> Result<Tessellation> {
    if !(8..=12).contains(&k) {
        return Err(Error::InvalidParameter(format!("k must lie in 8..=12, got {k}")));
    }
    ring_cap(k, layers)
}

/// Closed tessellation made of two [`ring_cap`]s joined through a square
/// collar: two k-gons `rings` rings apart. `rings` must be odd and at least 3.
pub fn capped_tube(k: usize, rings: usize) -> Result<Tessellation> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
    }
    if rings < 3 || rings.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("rings must be odd and at least 3, got {rings}")));
    }
    // Rings 0..=m+1: σ, apexes, collar, apexes of the second cap, σ'.
    let m = rings;
    let mut faces = cap_faces(k, m - 2);
    for i in 0..k {
        let i = i as isize;
        faces.push(vec![r(k, m, i), r(k, m - 1, i), r(k, m, i - 1), r(k, m + 1, i)]);
        faces.push(vec![r(k, m, i), r(k, m + 1, i), r(k, m + 1, i + 1)]);
    }
    faces.push((0..k).rev().map(|i| r(k, m + 1, i as isize)).collect());
    from_faces(k * (m + 2), &faces, Mode::Sphere)
}
