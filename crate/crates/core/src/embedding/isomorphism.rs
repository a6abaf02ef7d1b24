use std::collections::VecDeque;

use super::{CombinatorialMap, DartId, Mode, Tessellation};
use crate::error::{Error, Result};

/// Relabels darts in breadth-first order from `start`, following `twin`
/// and `rot`, and returns `(label(twin d), label(rot d))` in label order.
/// Two connected maps are isomorphic iff some start in one reproduces the
/// code of a fixed start in the other.
fn bfs_code(map: &CombinatorialMap, start: DartId, mirrored: bool) -> Vec<(u32, u32)> {
    let n = map.dart_count();
    let rot = |d: DartId| if mirrored { map.rot_prev(d) } else { map.rot_next(d) };
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[start.0] = 0;
    order.push(start);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for next in [d.twin(), rot(d)] {
            if label[next.0] == u32::MAX {
                label[next.0] = order.len() as u32;
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    order
        .iter()
        .map(|&d| (label[d.twin().0], label[rot(d).0]))
        .collect()
}

/// Whether two sphere tessellations are isomorphic as combinatorial maps,
/// allowing orientation reversal. Quadratic in the number of darts.
pub fn isomorphic(a: &Tessellation, b: &Tessellation) -> Result<bool> {
    if a.mode() != Mode::Sphere || b.mode() != Mode::Sphere {
        return Err(Error::ModeMismatch { expected: "sphere" });
    }
    let (ma, mb) = (a.map(), b.map());
    if ma.vertex_count() != mb.vertex_count()
        || ma.dart_count() != mb.dart_count()
        || a.face_count() != b.face_count()
    {
        return Ok(false);
    }
    let mut deg_a: Vec<_> = ma.vertices().map(|v| ma.degree(v)).collect();
    let mut deg_b: Vec<_> = mb.vertices().map(|v| mb.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return Ok(false);
    }
    let reference = bfs_code(ma, DartId(0), false);
    Ok([false, true]
        .into_iter()
        .any(|mirrored| mb.darts().any(|s| bfs_code(mb, s, mirrored) == reference)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::build_from_rotation_system;

    fn relabel(rot: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); rot.len()];
        for (v, list) in rot.iter().enumerate() {
            out[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        out
    }

    fn cube() -> Vec<Vec<usize>> {
        // Bottom 0..4 counterclockwise seen from outside below, top 4..8.
        vec![
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![0, 5, 7],
            vec![1, 6, 4],
            vec![2, 7, 5],
            vec![3, 4, 6],
        ]
    }

    #[test]
    fn relabeled_cube_is_isomorphic() {
        let a = build_from_rotation_system(&cube(), Mode::Sphere, None).unwrap();
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        let b = build_from_rotation_system(&relabel(&cube(), &perm), Mode::Sphere, None).unwrap();
        assert!(isomorphic(&a, &b).unwrap());
        let mirrored: Vec<Vec<usize>> =
            cube().into_iter().map(|r| r.into_iter().rev().collect()).collect();
        let c = build_from_rotation_system(&mirrored, Mode::Sphere, None).unwrap();
        assert!(isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn tetrahedron_is_not_a_cube() {
        let a = build_from_rotation_system(&cube(), Mode::Sphere, None).unwrap();
        let k4 = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        let b = build_from_rotation_system(&k4, Mode::Sphere, None).unwrap();
        assert!(!isomorphic(&a, &b).unwrap());
    }
}
