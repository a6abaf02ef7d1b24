use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{big_faces, one_neighborhood};
use crate::curvature::combinatorial_curvature;
use crate::embedding::{FaceId, Tessellation, VertexId};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Curvature after moving half of each `W_1` vertex's curvature to each of
/// its neighbours in `W`.
///
/// `W` is the union of the boundaries of the big faces (degree 8..=12) and
/// `W_1` the union of their outer rings `∂U_1(σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DischargeState {
    pub big_faces: Vec<FaceId>,
    pub w: BTreeSet<VertexId>,
    pub w1: BTreeSet<VertexId>,
    pub phi: BTreeMap<VertexId, Rational>,
    pub phi_tilde: BTreeMap<VertexId, Rational>,
}

impl DischargeState {
    pub fn total_phi(&self) -> Rational {
        self.phi.values().sum()
    }

    pub fn total_phi_tilde(&self) -> Rational {
        self.phi_tilde.values().sum()
    }

    pub fn conserved(&self) -> bool {
        self.total_phi() == self.total_phi_tilde()
    }

    /// `Σ_{z ∈ ∂σ} Φ̃(z)`.
    pub fn face_sum(&self, t: &Tessellation, sigma: FaceId) -> Rational {
        t.face_vertex_set(sigma).iter().map(|z| self.phi_tilde[z]).sum()
    }

    /// Vertices whose value changed.
    pub fn changed(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.phi.iter().filter(|(v, p)| self.phi_tilde[v] != **p).map(|(v, _)| *v)
    }
}

/// Runs the discharging rule over every interior vertex:
/// `Φ̃(x) = Φ(x) + ½ Σ_{y ∈ W_1, y ∼ x} Φ(y)` for `x ∈ W` and
/// `Φ̃(y) = Φ(y) − ½ #{x ∈ W : x ∼ y} Φ(y)` for `y ∈ W_1`.
///
/// The subtracted count is the number of `W`-neighbours, which is what makes
/// the total conserved. A vertex in both sets gets both terms.
pub fn discharge(t: &Tessellation) -> Result<DischargeState> {
    let faces = big_faces(t);
    let mut w = BTreeSet::new();
    let mut w1 = BTreeSet::new();
    for &sigma in &faces {
        let hood = one_neighborhood(t, sigma)?;
        w.extend(t.face_vertex_set(sigma));
        w1.extend(hood.boundary);
    }
    let phi: BTreeMap<VertexId, Rational> = t
        .interior_vertices()
        .map(|x| (x, combinatorial_curvature(t, x).expect("interior")))
        .collect();
    let mut phi_tilde = phi.clone();
    let half = Rational::new(1, 2);
    for &y in &w1 {
        for x in t.neighbors(y).filter(|x| w.contains(x)) {
            let share = phi[&y] * half;
            *phi_tilde.get_mut(&x).expect("W is interior") += share;
            *phi_tilde.get_mut(&y).expect("W_1 is interior") -= share;
        }
    }
    Ok(DischargeState { big_faces: faces, w, w1, phi, phi_tilde })
}

/// Local redistribution over a vertex set `B` around two faces: receivers
/// are `B ∩ (∂σ₁ ∪ ∂σ₂)`, donors the rest of `B`, and every receiver gains
/// `1/N` of the donors' total curvature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalDischargeState {
    pub b: BTreeSet<VertexId>,
    pub sigma1: FaceId,
    pub sigma2: FaceId,
    pub n: usize,
    pub donors: BTreeSet<VertexId>,
    pub phi_prime: BTreeMap<VertexId, Rational>,
}

impl LocalDischargeState {
    pub fn receiver_total(&self) -> Rational {
        self.phi_prime.values().sum()
    }
}

pub fn modified_curvature_b(
    t: &Tessellation,
    sigma1: FaceId,
    sigma2: FaceId,
    b: &BTreeSet<VertexId>,
) -> Result<LocalDischargeState> {
    t.check_face(sigma1)?;
    t.check_face(sigma2)?;
    for &v in b {
        t.check_vertex(v)?;
        if !t.is_interior_vertex(v) {
            return Err(Error::TruncatedNeighborhood(sigma1));
        }
    }
    let mut rims = t.face_vertex_set(sigma1);
    rims.extend(t.face_vertex_set(sigma2));
    let receivers: BTreeSet<VertexId> = b.intersection(&rims).copied().collect();
    let donors: BTreeSet<VertexId> = b.difference(&rims).copied().collect();
    if donors.is_empty() {
        return Err(Error::EmptyDonorSet);
    }
    if receivers.is_empty() {
        return Err(Error::EmptyReceiverSet);
    }
    let phi = |v: VertexId| combinatorial_curvature(t, v).expect("interior");
    let n = receivers.len();
    let gain = donors.iter().map(|&v| phi(v)).sum::<Rational>() / Rational::from_integer(n as i128);
    let phi_prime = receivers.iter().map(|&z| (z, phi(z) + gain)).collect();
    Ok(LocalDischargeState { b: b.clone(), sigma1, sigma2, n, donors, phi_prime })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{antiprism, sharp_big_face, square_lattice};

    #[test]
    fn sharp_discharge() {
        let t = sharp_big_face(12, 3).unwrap();
        let s = discharge(&t).unwrap();
        assert!(s.conserved());
        assert_eq!(s.total_phi(), Rational::ONE);
        let sigma = s.big_faces[0];
        assert_eq!(s.face_sum(&t, sigma), Rational::ONE);
        for &z in &s.w {
            assert_eq!(s.phi_tilde[&z], Rational::new(1, 12));
        }
        for &x in &s.w1 {
            assert_eq!(s.phi_tilde[&x], Rational::ZERO);
        }
        let t8 = sharp_big_face(8, 3).unwrap();
        let s8 = discharge(&t8).unwrap();
        for &z in &s8.w {
            assert_eq!(s8.phi_tilde[&z], Rational::new(1, 8));
        }
    }

    #[test]
    fn no_big_faces_means_no_change() {
        let t = square_lattice(4, 4).unwrap();
        let s = discharge(&t).unwrap();
        assert!(s.w.is_empty() && s.changed().next().is_none());
    }

    #[test]
    fn local_rule() {
        // antiprism(4): top square plus one band triangle cover 6 vertices.
        let t = antiprism(4).unwrap();
        let top = t.faces().find(|&f| t.face_degree(f) == 4).unwrap();
        let rim = t.face_vertex_set(top);
        let tri = t
            .faces()
            .find(|&f| t.face_degree(f) == 3 && t.face_vertex_set(f).intersection(&rim).count() == 1)
            .unwrap();
        let all: BTreeSet<VertexId> = t.vertices().collect();
        let s = modified_curvature_b(&t, top, tri, &all).unwrap();
        assert_eq!(s.n, 6);
        assert_eq!(s.donors.len(), 2);
        for v in s.phi_prime.values() {
            assert_eq!(*v, Rational::new(1, 4) + Rational::new(1, 12));
        }
        let just_rims: BTreeSet<VertexId> = s.phi_prime.keys().copied().collect();
        assert_eq!(modified_curvature_b(&t, top, tri, &just_rims), Err(Error::EmptyDonorSet));
        let just_donors = s.donors.clone();
        assert_eq!(modified_curvature_b(&t, top, tri, &just_donors), Err(Error::EmptyReceiverSet));
    }
}
