use thiserror::Error;

use crate::embedding::{EdgeId, FaceId, VertexId};

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} lists {neighbor} but {neighbor} does not list {vertex}")]
    AsymmetricAdjacency { vertex: usize, neighbor: usize },
    #[error("vertex {0} is adjacent to itself")]
    SelfLoop(usize),
    #[error("more than one edge joins {0} and {1}")]
    MultiEdge(usize, usize),
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("Euler characteristic is {chi}, expected 2 (V={v}, E={e}, F={f})")]
    EulerViolation { v: usize, e: usize, f: usize, chi: i64 },
    #[error("no dart {0} -> {1} to locate the outer face")]
    OuterFaceNotFound(usize, usize),
    #[error("malformed dart structure: {0}")]
    MalformedMap(String),
    #[error("face {0} does not exist")]
    UnknownFace(FaceId),
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("expected {expected} mode input")]
    ModeMismatch { expected: &'static str },
    #[error("vertex {0} does not have a complete star")]
    BoundaryVertex(VertexId),
    #[error("edge {0} is not interior")]
    BoundaryEdge(EdgeId),
    #[error("vertex {0} is not incident to face {1}")]
    NotACorner(VertexId, FaceId),
    #[error("operation needs a closed (sphere) tessellation")]
    PatchModeUnsupported,
    #[error("patch has no interior edges")]
    EmptyInterior,
    #[error("medial frontier splits into {0} faces; the window is not a disk")]
    FragmentedFrontier(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("1-neighborhood of face {0} reaches the outer face")]
    TruncatedNeighborhood(FaceId),
    #[error("no donor vertices outside the two face boundaries")]
    EmptyDonorSet,
    #[error("no receiver vertices on the two face boundaries")]
    EmptyReceiverSet,
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("harmonic layout system is singular")]
    LayoutSingular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AsymmetricAdjacency { .. } => "AsymmetricAdjacency",
            Error::SelfLoop(_) => "SelfLoop",
            Error::MultiEdge(..) => "MultiEdge",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::Disconnected { .. } => "Disconnected",
            Error::EulerViolation { .. } => "EulerViolation",
            Error::OuterFaceNotFound(..) => "OuterFaceNotFound",
            Error::MalformedMap(_) => "MalformedMap",
            Error::UnknownFace(_) => "UnknownFace",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::ModeMismatch { .. } => "ModeMismatch",
            Error::BoundaryVertex(_) => "BoundaryVertex",
            Error::BoundaryEdge(_) => "BoundaryEdge",
            Error::NotACorner(..) => "NotACorner",
            Error::PatchModeUnsupported => "PatchModeUnsupported",
            Error::EmptyInterior => "EmptyInterior",
            Error::FragmentedFrontier(_) => "FragmentedFrontier",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::TruncatedNeighborhood(_) => "TruncatedNeighborhood",
            Error::EmptyDonorSet => "EmptyDonorSet",
            Error::EmptyReceiverSet => "EmptyReceiverSet",
            Error::Syntax { .. } => "SyntaxError",
            Error::LayoutSingular => "LayoutSingular",
        }
    }
}
