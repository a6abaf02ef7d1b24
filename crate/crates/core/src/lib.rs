//! Combinatorial curvature on planar tessellations.
//!
//! Tessellations are dart-based combinatorial maps ([`embedding`]). On top of
//! them the crate evaluates vertex, corner and edge curvature exactly
//! ([`curvature`]), builds dual and medial graphs ([`operators`]), generates
//! the standard example graphs ([`generators`]), and runs censuses, structural
//! checkers and a curvature-discharging engine ([`analysis`]). Text formats and
//! drawings live in [`io`].

pub mod analysis;
pub mod curvature;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod io;
pub mod operators;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
