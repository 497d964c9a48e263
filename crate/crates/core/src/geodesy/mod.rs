//! Tropical length, geodesics and geodesic hulls.

mod classify;
mod hull;
mod length;
mod region;

pub use classify::{
    classify2d, classify_sweep, planar_region, ClassHistogram, Shape2D, Shape2DType, EDGE_NAMES,
};
pub use hull::{hull, hull_iterate_oracle, pair_hull};
pub use length::{
    curve_length, polyline_length, Circle, Curve, CurveLengthOptions, FnCurve, Polyline,
};
pub use region::{is_tropically_geodesic, GeodesicRegion, HalfSpaceSystem};

use crate::error::{Error, Result};
use crate::metric::dist;
use crate::point::Point;
use crate::tolerance::Tolerance;

/// A polyline is a geodesic when its length equals the distance between its
/// endpoints.
pub fn is_geodesic(p: &Polyline, tol: Tolerance) -> Result<bool> {
    if p.points().len() < 2 {
        return Err(Error::TooFewPoints { min: 2 });
    }
    Ok(tol.eq(p.length(), dist(p.first(), p.last())?))
}

/// `d(x, z) + d(z, y) = d(x, y)`: `z` lies on some geodesic from `x` to `y`.
pub fn is_between(x: &Point, z: &Point, y: &Point, tol: Tolerance) -> Result<bool> {
    let through = dist(x, z)? + dist(z, y)?;
    Ok(tol.eq(through, dist(x, y)?))
}
