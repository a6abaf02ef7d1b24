//! Straight-line drawings.
//!
//! The outer face of a patch (the largest face of a sphere) is pinned to a
//! regular polygon on the unit circle and every other vertex is placed at
//! the average of its neighbours.

use std::collections::VecDeque;
use std::f64::consts::TAU;

use nalgebra::DMatrix;

use crate::embedding::{FaceId, Tessellation};
use crate::error::{Error, Result};

const MAX_RELATIVE_RESIDUAL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayoutMethod {
    Tutte,
    /// Concentric rings by graph distance from the pinned face.
    Rings,
}

#[derive(Clone, Debug)]
pub struct Layout {
    pub positions: Vec<(f64, f64)>,
    pub pinned_face: FaceId,
    pub method: LayoutMethod,
    /// Relative residual of the harmonic solve; zero for ring layouts.
    pub residual: f64,
}

fn pinned_face(t: &Tessellation) -> FaceId {
    t.outer_face().unwrap_or_else(|| {
        t.faces()
            .max_by_key(|&f| (t.face_degree(f), std::cmp::Reverse(f.0)))
            .expect("tessellation has faces")
    })
}

/// Distinct boundary vertices of `f`, in traversal order, on the unit circle.
fn pin(t: &Tessellation, f: FaceId, positions: &mut [Option<(f64, f64)>]) -> Vec<usize> {
    let mut ring = Vec::new();
    for v in t.face_boundary(f).expect("face exists") {
        if positions[v.0].is_none() {
            positions[v.0] = Some((0.0, 0.0));
            ring.push(v.0);
        }
    }
    let n = ring.len() as f64;
    for (i, &v) in ring.iter().enumerate() {
        let a = TAU * i as f64 / n;
        positions[v] = Some((a.cos(), a.sin()));
    }
    ring
}

pub fn tutte_layout(t: &Tessellation) -> Result<Layout> {
    let face = pinned_face(t);
    let mut fixed = vec![None; t.vertex_count()];
    pin(t, face, &mut fixed);

    let free: Vec<usize> = (0..t.vertex_count()).filter(|&v| fixed[v].is_none()).collect();
    let mut slot = vec![usize::MAX; t.vertex_count()];
    for (i, &v) in free.iter().enumerate() {
        slot[v] = i;
    }

    let n = free.len();
    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut b = DMatrix::<f64>::zeros(n, 2);
    for (i, &v) in free.iter().enumerate() {
        for u in t.neighbors(crate::embedding::VertexId(v)) {
            a[(i, i)] += 1.0;
            match fixed[u.0] {
                Some((x, y)) => {
                    b[(i, 0)] += x;
                    b[(i, 1)] += y;
                }
                None => a[(i, slot[u.0])] -= 1.0,
            }
        }
    }

    let solution = if n == 0 {
        DMatrix::zeros(0, 2)
    } else {
        a.clone().cholesky().ok_or(Error::LayoutSingular)?.solve(&b)
    };
    let residual = if n == 0 {
        0.0
    } else {
        let scale = b.norm().max(f64::MIN_POSITIVE);
        (&a * &solution - &b).norm() / scale
    };
    if !residual.is_finite() || residual > MAX_RELATIVE_RESIDUAL {
        return Err(Error::LayoutSingular);
    }

    let positions = (0..t.vertex_count())
        .map(|v| fixed[v].unwrap_or_else(|| (solution[(slot[v], 0)], solution[(slot[v], 1)])))
        .collect();
    Ok(Layout { positions, pinned_face: face, method: LayoutMethod::Tutte, residual })
}

/// Fallback drawing: the pinned face on the unit circle, every other vertex
/// on a smaller circle according to its distance from that face.
pub fn ring_layout(t: &Tessellation) -> Layout {
    let face = pinned_face(t);
    let mut fixed = vec![None; t.vertex_count()];
    let ring = pin(t, face, &mut fixed);

    let mut dist = vec![usize::MAX; t.vertex_count()];
    let mut queue: VecDeque<usize> = ring.iter().copied().collect();
    for &v in &ring {
        dist[v] = 0;
    }
    let mut order = Vec::new();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for u in t.neighbors(crate::embedding::VertexId(v)) {
            if dist[u.0] == usize::MAX {
                dist[u.0] = dist[v] + 1;
                queue.push_back(u.0);
            }
        }
    }
    let depth = order.iter().map(|&v| dist[v]).max().unwrap_or(0);
    let mut by_ring: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
    for &v in &order {
        if dist[v] > 0 {
            by_ring[dist[v]].push(v);
        }
    }
    let mut positions: Vec<(f64, f64)> = fixed.iter().map(|p| p.unwrap_or((0.0, 0.0))).collect();
    for (r, members) in by_ring.iter().enumerate().skip(1) {
        let radius = 1.0 - r as f64 / (depth + 1) as f64;
        for (i, &v) in members.iter().enumerate() {
            let a = TAU * i as f64 / members.len() as f64;
            positions[v] = (radius * a.cos(), radius * a.sin());
        }
    }
    Layout { positions, pinned_face: face, method: LayoutMethod::Rings, residual: 0.0 }
}
