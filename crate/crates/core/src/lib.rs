//! Tropical (min-plus) metric geometry of ℝⁿ.
//!
//! Points of ℝⁿ are identified with the tropical projective torus
//! ℝⁿ⁺¹/ℝ𝟙 by appending a zero coordinate. The crate covers the tropical
//! distance and norm, tropical segments, curve length and geodesic hulls
//! ([`geodesy`]), the unit ball and sphere ([`ball`]), and the lattice tiling
//! of ℝⁿ by unit balls ([`honeycomb`]). The `tropical` binary exposes all of
//! it on the command line.

pub mod ball;
pub mod cli;
pub mod error;
pub mod geodesy;
pub mod honeycomb;
pub mod metric;
pub mod par;
pub mod point;
pub mod segment;
pub mod tolerance;

pub use error::{Error, Result};
pub use metric::{dist, dist_proj, lp_distances, norm, norm_proj};
pub use par::Execution;
pub use point::{OrthantCoords, Point, ProjectivePoint};
pub use segment::{segment, Mode, TropSegment};
pub use tolerance::Tolerance;
