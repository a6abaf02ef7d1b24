//! Degree censuses, pattern enumeration, structural checkers and the
//! big-face discharging engine.

mod checkers;
mod discharge;
mod neighborhood;
mod patterns;

use std::collections::BTreeMap;

use serde::Serialize;

pub use checkers::{
    cohn_vossen, face_count_bounds, gauss_bonnet, is_antiprism, max_face_degree, run_all_checks,
    CheckResult, CheckStatus,
};
pub use discharge::{discharge, modified_curvature_b, DischargeState, LocalDischargeState};
pub use neighborhood::{
    big_face_structure_check, big_faces, disjoint_neighborhoods_check, one_neighborhood,
    NeighborhoodSet, StructureReport, StructureViolation,
};
pub use patterns::{enumerate_positive_patterns, PatternEnumeration, PatternFamily};

use crate::embedding::Tessellation;

/// Vertex and face counts by degree, over interior elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    #[serde(rename = "V_k")]
    pub vertices: BTreeMap<usize, usize>,
    #[serde(rename = "F_k")]
    pub faces: BTreeMap<usize, usize>,
}

impl Census {
    pub fn vertices_of_degree(&self, k: usize) -> usize {
        self.vertices.get(&k).copied().unwrap_or(0)
    }

    pub fn faces_of_degree(&self, k: usize) -> usize {
        self.faces.get(&k).copied().unwrap_or(0)
    }

    pub fn vertex_total(&self) -> usize {
        self.vertices.values().sum()
    }

    pub fn face_total(&self) -> usize {
        self.faces.values().sum()
    }

    /// Largest degree present on either side.
    pub fn max_degree(&self) -> usize {
        let v = self.vertices.keys().next_back().copied().unwrap_or(0);
        let f = self.faces.keys().next_back().copied().unwrap_or(0);
        v.max(f)
    }
}

pub fn census(t: &Tessellation) -> Census {
    let mut c = Census::default();
    for x in t.interior_vertices() {
        *c.vertices.entry(t.vertex_degree(x)).or_default() += 1;
    }
    for f in t.interior_faces() {
        *c.faces.entry(t.face_degree(f)).or_default() += 1;
    }
    c
}
