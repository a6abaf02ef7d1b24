use std::fmt;

use serde::Serialize;

use super::{big_face_structure_check, big_faces, census, disjoint_neighborhoods_check};
use crate::curvature::{combinatorial_curvature, total_curvature};
use crate::embedding::{isomorphic, Mode, Tessellation};
use crate::error::{Error, Result};
use crate::generators::antiprism;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        })
    }
}

/// Outcome of one check with the exact quantity it compared.
///
/// On patches a pass means the bound holds on the visible window; it does
/// not certify anything about an infinite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub value: Rational,
    pub witnesses: Vec<String>,
}

impl CheckResult {
    fn new(name: &str, pass: bool, value: Rational, witnesses: Vec<String>) -> Self {
        let status = if pass { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckResult { name: name.to_string(), status, value, witnesses }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

fn require(t: &Tessellation, mode: Mode) -> Result<()> {
    if t.mode() == mode {
        Ok(())
    } else {
        Err(Error::ModeMismatch { expected: mode.as_str() })
    }
}

/// Total curvature of a closed tessellation equals 2.
pub fn gauss_bonnet(t: &Tessellation) -> Result<CheckResult> {
    require(t, Mode::Sphere)?;
    let total = total_curvature(t);
    Ok(CheckResult::new("gauss_bonnet", total == Rational::from_integer(2), total, vec![]))
}

/// Interior total curvature of a window is at most 1. Only meaningful when
/// every interior vertex has `Φ ≥ 0`; negative vertices are listed as
/// witnesses.
pub fn cohn_vossen(t: &Tessellation) -> Result<CheckResult> {
    require(t, Mode::Patch)?;
    let total = total_curvature(t);
    let negative: Vec<String> = t
        .interior_vertices()
        .filter(|&x| combinatorial_curvature(t, x).expect("interior").is_negative())
        .map(|x| format!("negative curvature at {x}"))
        .collect();
    Ok(CheckResult::new("cohn_vossen", total <= Rational::ONE, total, negative))
}

/// No interior face has degree above 12.
pub fn max_face_degree(t: &Tessellation) -> Result<CheckResult> {
    require(t, Mode::Patch)?;
    let max = t.interior_faces().map(|f| t.face_degree(f)).max().unwrap_or(0);
    let witnesses = t
        .interior_faces()
        .filter(|&f| t.face_degree(f) > 12)
        .map(|f| format!("{f} has degree {}", t.face_degree(f)))
        .collect();
    Ok(CheckResult::new("max_face_degree", max <= 12, Rational::from_integer(max as i128), witnesses))
}

/// `F_5 ≤ 21`, `F_7 ≤ 15` and `Σ_{k=8}^{12} F_k ≤ 1` over interior faces.
pub fn face_count_bounds(t: &Tessellation) -> Result<Vec<CheckResult>> {
    require(t, Mode::Patch)?;
    let c = census(t);
    let big: usize = (8..=12).map(|k| c.faces_of_degree(k)).sum();
    let bound = |name: &str, n: usize, limit: usize| {
        CheckResult::new(name, n <= limit, Rational::from_integer(n as i128), vec![])
    };
    Ok(vec![
        bound("f5_bound", c.faces_of_degree(5), 21),
        bound("f7_bound", c.faces_of_degree(7), 15),
        bound("big_face_count", big, 1),
    ])
}

/// Whether `t` is the antiprism on `V/2`-gons.
pub fn is_antiprism(t: &Tessellation) -> Result<bool> {
    require(t, Mode::Sphere)?;
    let v = t.vertex_count();
    if v % 2 == 1 || v < 6 {
        return Ok(false);
    }
    isomorphic(t, &antiprism(v / 2)?)
}

/// Every checker that applies to the tessellation's mode.
pub fn run_all_checks(t: &Tessellation) -> Vec<CheckResult> {
    let mut out = Vec::new();
    match t.mode() {
        Mode::Sphere => {
            out.push(gauss_bonnet(t).expect("sphere"));
            let anti = is_antiprism(t).expect("sphere");
            out.push(CheckResult::new(
                "is_antiprism",
                true,
                Rational::from_integer(i128::from(anti)),
                vec![],
            ));
        }
        Mode::Patch => {
            out.push(cohn_vossen(t).expect("patch"));
            out.push(max_face_degree(t).expect("patch"));
            out.extend(face_count_bounds(t).expect("patch"));
        }
    }
    let mut witnesses = Vec::new();
    for sigma in big_faces(t) {
        match big_face_structure_check(t, sigma) {
            Ok(r) => witnesses.extend(r.violations.iter().map(ToString::to_string)),
            Err(Error::TruncatedNeighborhood(_)) => {}
            Err(e) => witnesses.push(e.to_string()),
        }
    }
    out.push(CheckResult::new(
        "big_face_structure",
        witnesses.is_empty(),
        Rational::from_integer(witnesses.len() as i128),
        witnesses,
    ));
    let r = disjoint_neighborhoods_check(t);
    out.push(CheckResult::new(
        "disjoint_neighborhoods",
        r.is_empty(),
        Rational::from_integer(r.violations.len() as i128),
        r.violations.iter().map(ToString::to_string).collect(),
    ));
    out
}
