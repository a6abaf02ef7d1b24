//! Deterministic builders for the example tessellations.
//!
//! Closed polyhedra come out in sphere mode; periodic tilings come out as
//! patch windows grown by face layers around a seed vertex, so every interior
//! element has its complete star.

mod sharp;
mod solids;
mod soup;
mod tilings;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use sharp::{capped_tube, ring_cap, sharp_big_face};
pub use solids::{antiprism, platonic, prism, truncate, truncated_cube, PlatonicSolid};
pub use soup::PolygonSoup;
pub use tilings::{
    rhombille, rhombitrihexagonal, square_lattice, tiling_3_12_12, trihexagonal,
};

use crate::embedding::{build_from_rotation_system, Mode, Tessellation};
use crate::error::{Error, Result};

/// What to build, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Platonic { solid: PlatonicSolid },
    Prism { n: usize },
    Antiprism { n: usize },
    TruncatedCube,
    SquareLattice { width: usize, height: usize },
    Trihexagonal { radius: usize },
    Rhombitrihexagonal { radius: usize },
    Rhombille { radius: usize },
    Tiling31212 { radius: usize },
    SharpBigFace { k: usize, layers: usize },
}

pub fn generate(spec: &GeneratorSpec) -> Result<Tessellation> {
    match *spec {
        GeneratorSpec::Platonic { solid } => platonic(solid),
        GeneratorSpec::Prism { n } => prism(n),
        GeneratorSpec::Antiprism { n } => antiprism(n),
        GeneratorSpec::TruncatedCube => truncated_cube(),
        GeneratorSpec::SquareLattice { width, height } => square_lattice(width, height),
        GeneratorSpec::Trihexagonal { radius } => trihexagonal(radius),
        GeneratorSpec::Rhombitrihexagonal { radius } => rhombitrihexagonal(radius),
        GeneratorSpec::Rhombille { radius } => rhombille(radius),
        GeneratorSpec::Tiling31212 { radius } => tiling_3_12_12(radius),
        GeneratorSpec::SharpBigFace { k, layers } => sharp_big_face(k, layers),
    }
}

impl GeneratorSpec {
    /// Parses CLI-style arguments such as `["antiprism", "9"]`,
    /// `["platonic", "cube"]` or `["sharp-big-face", "12", "3"]`.
    pub fn from_args<S: AsRef<str>>(args: &[S]) -> Result<Self> {
        let bad = |msg: String| Error::InvalidParameter(msg);
        let (kind, rest) = args
            .split_first()
            .ok_or_else(|| bad("missing generator kind".into()))?;
        let kind = kind.as_ref().replace('_', "-");
        let num = |i: usize| -> Result<usize> {
            let s = rest
                .get(i)
                .ok_or_else(|| bad(format!("{kind}: missing argument {}", i + 1)))?;
            s.as_ref()
                .parse()
                .map_err(|_| bad(format!("{kind}: `{}` is not a count", s.as_ref())))
        };
        let expect = |n: usize| -> Result<()> {
            if rest.len() == n {
                Ok(())
            } else {
                Err(bad(format!("{kind} takes {n} argument(s), got {}", rest.len())))
            }
        };
        let spec = match kind.as_str() {
            "platonic" => {
                expect(1)?;
                GeneratorSpec::Platonic { solid: rest[0].as_ref().parse()? }
            }
            "tetrahedron" | "cube" | "octahedron" | "dodecahedron" | "icosahedron" => {
                expect(0)?;
                GeneratorSpec::Platonic { solid: kind.parse()? }
            }
            "prism" => {
                expect(1)?;
                GeneratorSpec::Prism { n: num(0)? }
            }
            "antiprism" => {
                expect(1)?;
                GeneratorSpec::Antiprism { n: num(0)? }
            }
            "truncated-cube" => {
                expect(0)?;
                GeneratorSpec::TruncatedCube
            }
            "square-lattice" => {
                expect(2)?;
                GeneratorSpec::SquareLattice { width: num(0)?, height: num(1)? }
            }
            "trihexagonal" => {
                expect(1)?;
                GeneratorSpec::Trihexagonal { radius: num(0)? }
            }
            "rhombitrihexagonal" => {
                expect(1)?;
                GeneratorSpec::Rhombitrihexagonal { radius: num(0)? }
            }
            "rhombille" => {
                expect(1)?;
                GeneratorSpec::Rhombille { radius: num(0)? }
            }
            "tiling-3-12-12" | "3-12-12" => {
                expect(1)?;
                GeneratorSpec::Tiling31212 { radius: num(0)? }
            }
            "sharp-big-face" => {
                expect(2)?;
                GeneratorSpec::SharpBigFace { k: num(0)?, layers: num(1)? }
            }
            other => return Err(bad(format!("unknown generator kind `{other}`"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Platonic { solid } => write!(f, "{solid}"),
            GeneratorSpec::Prism { n } => write!(f, "prism({n})"),
            GeneratorSpec::Antiprism { n } => write!(f, "antiprism({n})"),
            GeneratorSpec::TruncatedCube => write!(f, "truncated-cube"),
            GeneratorSpec::SquareLattice { width, height } => {
                write!(f, "square-lattice({width},{height})")
            }
            GeneratorSpec::Trihexagonal { radius } => write!(f, "trihexagonal({radius})"),
            GeneratorSpec::Rhombitrihexagonal { radius } => {
                write!(f, "rhombitrihexagonal({radius})")
            }
            GeneratorSpec::Rhombille { radius } => write!(f, "rhombille({radius})"),
            GeneratorSpec::Tiling31212 { radius } => write!(f, "tiling-3-12-12({radius})"),
            GeneratorSpec::SharpBigFace { k, layers } => write!(f, "sharp-big-face({k},{layers})"),
        }
    }
}

impl FromStr for PlatonicSolid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tetrahedron" => PlatonicSolid::Tetrahedron,
            "cube" => PlatonicSolid::Cube,
            "octahedron" => PlatonicSolid::Octahedron,
            "dodecahedron" => PlatonicSolid::Dodecahedron,
            "icosahedron" => PlatonicSolid::Icosahedron,
            other => return Err(Error::InvalidParameter(format!("unknown solid `{other}`"))),
        })
    }
}

/// Builds a tessellation from consistently oriented face cycles.
///
/// Each face `[v0, v1, …]` owns the darts `v_i -> v_{i+1}`; every directed
/// edge may be used once. In sphere mode the faces must close up around
/// every vertex. In patch mode `faces` lists the inner faces only; each
/// boundary vertex must have exactly one gap, and the gaps together form the
/// outer face.
///
/// Faces oriented clockwise in the plane produce counterclockwise rotations.
pub fn from_faces(vertex_count: usize, faces: &[Vec<usize>], mode: Mode) -> Result<Tessellation> {
    // successor[v][u] = w when some face runs u -> v -> w.
    let mut successor: Vec<HashMap<usize, usize>> = vec![HashMap::new(); vertex_count];
    let mut used = std::collections::HashSet::new();
    for face in faces {
        let q = face.len();
        if q < 3 {
            return Err(Error::InvalidParameter(format!("face {face:?} has fewer than 3 vertices")));
        }
        for i in 0..q {
            let (u, v, w) = (face[i], face[(i + 1) % q], face[(i + 2) % q]);
            if u.max(v).max(w) >= vertex_count {
                return Err(Error::UnknownVertex(u.max(v).max(w)));
            }
            if !used.insert((u, v)) {
                return Err(Error::InvalidParameter(format!(
                    "directed edge {u}->{v} used by two faces (inconsistent orientation)"
                )));
            }
            successor[v].insert(u, w);
        }
    }

    let mut rotations = Vec::with_capacity(vertex_count);
    let mut outer_hint = None;
    for (v, succ) in successor.iter().enumerate() {
        if succ.is_empty() {
            return Err(Error::InvalidParameter(format!("vertex {v} lies on no face")));
        }
        let has_pred: std::collections::HashSet<usize> = succ.values().copied().collect();
        let starts: Vec<usize> = {
            let mut s: Vec<usize> = succ.keys().copied().filter(|u| !has_pred.contains(u)).collect();
            s.sort_unstable();
            s
        };
        let ends: Vec<usize> = {
            let mut e: Vec<usize> = succ.values().copied().filter(|w| !succ.contains_key(w)).collect();
            e.sort_unstable();
            e
        };
        let start = match (mode, starts.len()) {
            (_, 0) => *succ.keys().min().expect("nonempty"),
            (Mode::Patch, 1) => {
                if outer_hint.is_none() {
                    outer_hint = Some((ends[0], v));
                }
                starts[0]
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "faces around vertex {v} leave {} gaps",
                    starts.len()
                )))
            }
        };
        let mut order = vec![start];
        let mut cur = start;
        while let Some(&next) = succ.get(&cur) {
            if next == start {
                break;
            }
            order.push(next);
            cur = next;
            if order.len() > succ.len() + 1 {
                break;
            }
        }
        let expected = succ.len() + usize::from(!starts.is_empty());
        if order.len() != expected {
            return Err(Error::InvalidParameter(format!(
                "faces around vertex {v} do not form a single fan"
            )));
        }
        rotations.push(order);
    }

    let t = match mode {
        Mode::Sphere => build_from_rotation_system(&rotations, Mode::Sphere, None)?,
        Mode::Patch => {
            let hint = outer_hint
                .ok_or_else(|| Error::InvalidParameter("patch faces close up into a sphere".into()))?;
            build_from_rotation_system(&rotations, Mode::Patch, Some(hint))?
        }
    };
    let expected_faces = faces.len() + usize::from(mode == Mode::Patch);
    if t.face_count() != expected_faces {
        return Err(Error::InvalidParameter(format!(
            "traced {} faces, expected {expected_faces} (the face set has holes)",
            t.face_count()
        )));
    }
    Ok(t)
}
