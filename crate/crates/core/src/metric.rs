//! The tropical metric: an additive form of Hilbert's projective metric.

use crate::error::{Error, Result};
use crate::point::{Point, ProjectivePoint};

/// `max(0, maxᵢ vᵢ) - min(0, minᵢ vᵢ)`, the tropical norm of `(v : 0)`.
#[inline]
fn spread_with_zero(values: impl Iterator<Item = f64>) -> f64 {
    let (lo, hi) = values.fold((0.0_f64, 0.0_f64), |(lo, hi), v| (lo.min(v), hi.max(v)));
    hi - lo
}

#[inline]
fn spread(values: impl Iterator<Item = f64>) -> f64 {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    hi - lo
}

/// Tropical distance between two points of ℝⁿ.
pub fn dist(x: &Point, y: &Point) -> Result<f64> {
    Error::check_dims(x.dim(), y.dim())?;
    Ok(dist_slices(x.coords(), y.coords()))
}

#[inline]
pub(crate) fn dist_slices(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    spread_with_zero(x.iter().zip(y).map(|(a, b)| a - b))
}

/// Tropical distance in homogeneous coordinates,
/// `max_{i,j} (xᵢ - yᵢ - xⱼ + yⱼ)`.
pub fn dist_proj(x: &ProjectivePoint, y: &ProjectivePoint) -> Result<f64> {
    Error::check_dims(x.dim(), y.dim())?;
    Ok(spread(
        x.hcoords().iter().zip(y.hcoords()).map(|(a, b)| a - b),
    ))
}

/// Tropical norm, the distance from the origin.
pub fn norm(x: &Point) -> f64 {
    norm_slice(x.coords())
}

#[inline]
pub(crate) fn norm_slice(x: &[f64]) -> f64 {
    spread_with_zero(x.iter().copied())
}

/// `max_{i,j} (xᵢ - xⱼ)` on homogeneous coordinates.
pub fn norm_proj(x: &ProjectivePoint) -> f64 {
    spread(x.hcoords().iter().copied())
}

/// Manhattan and Chebyshev distances `(d₁, d_∞)`.
pub fn lp_distances(x: &Point, y: &Point) -> Result<(f64, f64)> {
    Error::check_dims(x.dim(), y.dim())?;
    Ok(x.coords()
        .iter()
        .zip(y.coords())
        .fold((0.0, 0.0), |(l1, linf): (f64, f64), (a, b)| {
            let d = (a - b).abs();
            (l1 + d, linf.max(d))
        }))
}
