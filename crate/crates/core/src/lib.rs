//! Symmetry type graphs of maps on surfaces.
//!
//! A map is stored as its flag graph: three fixed-point-free involutions
//! `s0`, `s1`, `s2` on the flags. Quotienting by the automorphism group gives
//! the symmetry type graph, where fixed points become semi-edges. The crate
//! computes both, applies the dual, Petrie and medial operators at either
//! level, and enumerates type graphs up to isomorphism.

pub mod enumeration;
pub mod flagmap;
pub mod formats;
pub mod names;
pub mod orbit;
pub mod selftest;
pub mod transforms;
pub mod typegraph;

pub use enumeration::{Census, CensusRow, DualityMode};
pub use flagmap::{ColorPerm, FlagBijection, FlagError, FlagGraph, MapSkeleton};
pub use formats::{Document, FaceWalks, FormatError};
pub use orbit::Partition;
pub use typegraph::{quotient, CanonicalCode, ExtendedTypeGraph, TypeError, TypeGraph};
