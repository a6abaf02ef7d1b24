//! Dart-based combinatorial maps and the tessellations built on them.
//!
//! Every edge `i` owns the twin darts `2i` and `2i + 1`. A vertex stores its
//! outgoing darts in counterclockwise order, and faces are the orbits of
//! `face_next(d) = rot_next(twin(d))`: after arriving at `v` from `u`, the
//! walk leaves along the neighbor that follows `u` in the rotation at `v`.

mod isomorphism;
mod map;
mod tessellation;
mod validate;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use isomorphism::isomorphic;
pub use map::CombinatorialMap;
pub use tessellation::{build_from_rotation_system, Mode, Tessellation};
pub use validate::{validate_tessellation, ValidationReport, Violation};

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident, $prefix:literal) => {
        $(#[$doc])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub usize);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

id_type!(VertexId, "v");
id_type!(
    /// Half of an edge. Darts `2i` and `2i + 1` are the two orientations of edge `i`.
    DartId,
    "d"
);
id_type!(EdgeId, "e");
id_type!(FaceId, "f");

impl DartId {
    #[inline]
    pub fn twin(self) -> DartId {
        DartId(self.0 ^ 1)
    }

    #[inline]
    pub fn edge(self) -> EdgeId {
        EdgeId(self.0 / 2)
    }
}

impl EdgeId {
    /// The dart oriented from the edge's first endpoint to its second.
    #[inline]
    pub fn dart(self) -> DartId {
        DartId(self.0 * 2)
    }
}
