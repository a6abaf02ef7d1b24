//! Vertex, corner and edge curvature in exact arithmetic.
//!
//! - vertex: `Φ(x) = 1 - |x|/2 + Σ 1/|σ|` over the faces at `x`;
//! - corner: `C(x, σ) = 1/|x| + 1/|σ| - 1/2`;
//! - edge: `Ψ(e) = 1/|x₁| + 1/|x₂| + 1/|σ₁| + 1/|σ₂| - 1`.
//!
//! On patches every quantity needs a complete star, so only interior
//! vertices and edges are accepted.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embedding::{EdgeId, FaceId, Mode, Tessellation, VertexId};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sorted degrees of the faces around a vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexPattern(pub Vec<usize>);

impl VertexPattern {
    /// Sorts `degrees` into a pattern.
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        VertexPattern(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_degree(&self) -> usize {
        self.0.len()
    }

    /// Curvature of any vertex with this pattern.
    pub fn curvature(&self) -> Rational {
        curvature_of_degrees(&self.0)
    }
}

impl fmt::Display for VertexPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// `1 - N/2 + Σ 1/f` for face degrees `f` around a vertex of degree `N`.
pub fn curvature_of_degrees(face_degrees: &[usize]) -> Rational {
    let n = face_degrees.len() as i128;
    Rational::ONE - Rational::new(n, 2)
        + face_degrees.iter().map(|&f| Rational::recip_of(f)).sum::<Rational>()
}

fn require_interior_vertex(t: &Tessellation, x: VertexId) -> Result<()> {
    t.check_vertex(x)?;
    if t.is_interior_vertex(x) {
        Ok(())
    } else {
        Err(Error::BoundaryVertex(x))
    }
}

pub fn combinatorial_curvature(t: &Tessellation, x: VertexId) -> Result<Rational> {
    require_interior_vertex(t, x)?;
    let degree = t.vertex_degree(x) as i128;
    let face_sum: Rational = t
        .faces_at(x)
        .map(|f| Rational::recip_of(t.face_degree(f)))
        .sum();
    Ok(Rational::ONE - Rational::new(degree, 2) + face_sum)
}

pub fn corner_curvature(t: &Tessellation, x: VertexId, sigma: FaceId) -> Result<Rational> {
    t.check_face(sigma)?;
    require_interior_vertex(t, x)?;
    if !t.is_incident(x, sigma) {
        return Err(Error::NotACorner(x, sigma));
    }
    Ok(Rational::recip_of(t.vertex_degree(x)) + Rational::recip_of(t.face_degree(sigma))
        - Rational::new(1, 2))
}

pub fn psi_curvature(t: &Tessellation, e: EdgeId) -> Result<Rational> {
    t.check_edge(e)?;
    if !t.is_interior_edge(e) {
        return Err(Error::BoundaryEdge(e));
    }
    let (a, b) = t.edge_endpoints(e);
    let (f, g) = t.edge_faces(e);
    Ok(Rational::recip_of(t.vertex_degree(a))
        + Rational::recip_of(t.vertex_degree(b))
        + Rational::recip_of(t.face_degree(f))
        + Rational::recip_of(t.face_degree(g))
        - Rational::ONE)
}

pub fn vertex_pattern(t: &Tessellation, x: VertexId) -> Result<VertexPattern> {
    require_interior_vertex(t, x)?;
    Ok(VertexPattern::new(t.faces_at(x).map(|f| t.face_degree(f)).collect()))
}

/// Sum of `Φ` over all vertices (sphere) or over interior vertices (patch).
pub fn total_curvature(t: &Tessellation) -> Rational {
    t.interior_vertices()
        .map(|x| combinatorial_curvature(t, x).expect("interior vertex"))
        .sum()
}

/// Whether `Ψ(e)` equals half the sum of the four corner curvatures at
/// `e`'s endpoints and faces, on every interior edge.
pub fn psi_corner_identity_check(t: &Tessellation) -> bool {
    t.interior_edges().all(|e| {
        let (a, b) = t.edge_endpoints(e);
        let (f, g) = t.edge_faces(e);
        let corners: Rational = [(a, f), (a, g), (b, f), (b, g)]
            .into_iter()
            .map(|(x, s)| corner_curvature(t, x, s).expect("interior corner"))
            .sum();
        psi_curvature(t, e).expect("interior edge") == corners * Rational::new(1, 2)
    })
}

/// Membership in the nonnegative-curvature classes.
///
/// For patches the flags only say the visible window is consistent with
/// membership; a finite window cannot certify an infinite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    /// `Φ(x) ≥ 0` at every (interior) vertex.
    pub in_nng: bool,
    /// `C(x, σ) ≥ 0` at every (interior) corner.
    pub in_cc: bool,
    /// `Ψ(e) ≥ 0` on every (interior) edge.
    pub in_mm: bool,
    /// Computed on a patch window rather than a closed tessellation.
    pub window_only: bool,
}

impl fmt::Display for ClassFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "NNG: {}, CC: {}, MM: {}",
            yn(self.in_nng),
            yn(self.in_cc),
            yn(self.in_mm)
        )?;
        if self.window_only {
            write!(f, " (consistent with membership on the visible window)")?;
        }
        Ok(())
    }
}

pub fn classify(t: &Tessellation) -> ClassFlags {
    let in_nng = t
        .interior_vertices()
        .all(|x| !combinatorial_curvature(t, x).expect("interior").is_negative());
    let in_cc = t.interior_vertices().all(|x| {
        t.faces_at(x)
            .all(|s| !corner_curvature(t, x, s).expect("interior corner").is_negative())
    });
    let in_mm = t
        .interior_edges()
        .all(|e| !psi_curvature(t, e).expect("interior").is_negative());
    debug_assert!(!in_cc || (in_nng && in_mm), "CC must imply NNG and MM");
    ClassFlags { in_nng, in_cc, in_mm, window_only: t.mode() == Mode::Patch }
}
