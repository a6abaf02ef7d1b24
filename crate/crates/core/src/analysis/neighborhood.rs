use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::curvature::combinatorial_curvature;
use crate::embedding::{FaceId, Tessellation, VertexId};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `U_1(σ)`: the boundary of `σ` plus every neighbour of it; `boundary` is
/// the outer ring `U_1(σ) ∖ ∂σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodSet {
    pub face: FaceId,
    pub u1: BTreeSet<VertexId>,
    pub boundary: BTreeSet<VertexId>,
}

pub fn one_neighborhood(t: &Tessellation, sigma: FaceId) -> Result<NeighborhoodSet> {
    t.check_face(sigma)?;
    if t.is_outer(sigma) {
        return Err(Error::TruncatedNeighborhood(sigma));
    }
    let rim = t.face_vertex_set(sigma);
    let mut u1 = rim.clone();
    for &z in &rim {
        u1.extend(t.neighbors(z));
    }
    if u1.iter().any(|&v| !t.is_interior_vertex(v)) {
        return Err(Error::TruncatedNeighborhood(sigma));
    }
    let boundary = u1.difference(&rim).copied().collect();
    Ok(NeighborhoodSet { face: sigma, u1, boundary })
}

/// Faces other than the outer face with degree in `8..=12`.
pub fn big_faces(t: &Tessellation) -> Vec<FaceId> {
    t.inner_faces().filter(|&f| (8..=12).contains(&t.face_degree(f))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureViolation {
    /// Precondition: the window is not 4-regular here.
    NotFourRegular { vertex: VertexId, degree: usize },
    /// Precondition: the window is not in NNG here.
    NegativeCurvature { vertex: VertexId, value: Rational },
    /// A face sharing an edge with `σ` is neither a triangle nor a square.
    LowerAdjacentDegree { sigma: FaceId, face: FaceId, degree: usize },
    /// Two squares on `σ` meet in a single vertex of `σ`.
    SigmaAdjacentSquares { sigma: FaceId, faces: (FaceId, FaceId) },
    /// Two faces on `σ` share a vertex off `σ`.
    SharedOffFaceVertex { sigma: FaceId, faces: (FaceId, FaceId), shared: Vec<VertexId> },
    /// The 1-neighbourhoods of two big faces meet.
    OverlappingNeighborhoods { faces: (FaceId, FaceId), shared: Vec<VertexId> },
}

impl StructureViolation {
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            StructureViolation::NotFourRegular { .. } | StructureViolation::NegativeCurvature { .. }
        )
    }
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureViolation::NotFourRegular { vertex, degree } => {
                write!(f, "precondition: {vertex} has degree {degree}, not 4")
            }
            StructureViolation::NegativeCurvature { vertex, value } => {
                write!(f, "precondition: Φ({vertex}) = {value} < 0")
            }
            StructureViolation::LowerAdjacentDegree { sigma, face, degree } => {
                write!(f, "{face} shares an edge with {sigma} but has degree {degree}")
            }
            StructureViolation::SigmaAdjacentSquares { sigma, faces: (a, b) } => {
                write!(f, "squares {a} and {b} are {sigma}-adjacent")
            }
            StructureViolation::SharedOffFaceVertex { sigma, faces: (a, b), shared } => {
                write!(f, "{a} and {b} share {shared:?} off {sigma}")
            }
            StructureViolation::OverlappingNeighborhoods { faces: (a, b), shared } => {
                write!(f, "U_1({a}) and U_1({b}) share {shared:?}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub violations: Vec<StructureViolation>,
}

impl StructureReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn preconditions_hold(&self) -> bool {
        !self.violations.iter().any(StructureViolation::is_precondition)
    }
}

/// Degree-4 and `Φ ≥ 0` failures among `vertices`, which must be interior.
fn precondition_violations(
    t: &Tessellation,
    vertices: impl IntoIterator<Item = VertexId>,
) -> Vec<StructureViolation> {
    let mut out = Vec::new();
    for v in vertices {
        let degree = t.vertex_degree(v);
        if degree != 4 {
            out.push(StructureViolation::NotFourRegular { vertex: v, degree });
        }
        let value = combinatorial_curvature(t, v).expect("interior vertex");
        if value.is_negative() {
            out.push(StructureViolation::NegativeCurvature { vertex: v, value });
        }
    }
    out
}

/// Checks the faces around a big face `σ`: every face sharing an edge with
/// `σ` is a triangle or a square, no two such squares are `σ`-adjacent, and
/// no two such faces share a vertex off `σ`. Preconditions (4-regular,
/// `Φ ≥ 0` on `U_1(σ)`) are reported first.
pub fn big_face_structure_check(t: &Tessellation, sigma: FaceId) -> Result<StructureReport> {
    t.check_face(sigma)?;
    let degree = t.face_degree(sigma);
    if !(8..=12).contains(&degree) {
        return Err(Error::InvalidParameter(format!(
            "{sigma} has degree {degree}, outside 8..=12"
        )));
    }
    let hood = one_neighborhood(t, sigma)?;
    let mut out = precondition_violations(t, hood.u1.iter().copied());

    let lower = t.lower_adjacent_to(sigma)?;
    for &f in &lower {
        let d = t.face_degree(f);
        if d != 3 && d != 4 {
            out.push(StructureViolation::LowerAdjacentDegree { sigma, face: f, degree: d });
        }
    }
    let rim = t.face_vertex_set(sigma);
    for (i, &a) in lower.iter().enumerate() {
        for &b in &lower[i + 1..] {
            if t.face_degree(a) == 4 && t.face_degree(b) == 4 && t.sigma_adjacent(sigma, a, b)? {
                out.push(StructureViolation::SigmaAdjacentSquares { sigma, faces: (a, b) });
            }
            let off_a: BTreeSet<_> = t.face_vertex_set(a).difference(&rim).copied().collect();
            let off_b: BTreeSet<_> = t.face_vertex_set(b).difference(&rim).copied().collect();
            let shared: Vec<_> = off_a.intersection(&off_b).copied().collect();
            if !shared.is_empty() {
                out.push(StructureViolation::SharedOffFaceVertex { sigma, faces: (a, b), shared });
            }
        }
    }
    Ok(StructureReport { violations: out })
}

/// Checks that the 1-neighbourhoods of any two big faces are disjoint.
/// Big faces whose neighbourhood leaves the window are skipped.
/// Preconditions on the compared neighbourhoods are reported first.
pub fn disjoint_neighborhoods_check(t: &Tessellation) -> StructureReport {
    let hoods: Vec<NeighborhoodSet> =
        big_faces(t).into_iter().filter_map(|f| one_neighborhood(t, f).ok()).collect();
    let covered: BTreeSet<VertexId> = hoods.iter().flat_map(|h| h.u1.iter().copied()).collect();
    let mut out = precondition_violations(t, covered);
    for (i, a) in hoods.iter().enumerate() {
        for b in &hoods[i + 1..] {
            let shared: Vec<_> = a.u1.intersection(&b.u1).copied().collect();
            if !shared.is_empty() {
                out.push(StructureViolation::OverlappingNeighborhoods {
                    faces: (a.face, b.face),
                    shared,
                });
            }
        }
    }
    StructureReport { violations: out }
}
