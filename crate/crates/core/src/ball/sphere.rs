//! Distances and angles on the tropical sphere.

use super::{check_unit_sphere, BallSpec};
use crate::error::{Error, Result};
use crate::metric::norm;
use crate::point::Point;
use crate::tolerance::Tolerance;

/// Intrinsic distances `(d⁺, d⁻)` from a point of the unit sphere to the
/// poles `𝟙` and `-𝟙`. They always sum to 3.
///
/// A point with a nonnegative coordinate lies on an upper or a difference
/// facet, where `d⁺ = 1 - min xᵢ`; otherwise it lies on a lower facet and the
/// mirrored formula applies.
pub fn pole_distances(x: &Point, tol: Tolerance) -> Result<(f64, f64)> {
    check_unit_sphere(x, tol)?;
    let (lo, hi) = (x.min_coord(), x.max_coord());
    Ok(if hi >= 0.0 {
        (1.0 - lo, 2.0 + lo)
    } else {
        (2.0 - hi, 1.0 + hi)
    })
}

/// Arc position of a point of the unit hexagon, walking counterclockwise
/// from `(1, 0)` through `(1,1), (0,1), (-1,0), (-1,-1), (0,-1)`. Every edge
/// has tropical length 1.
fn hexagon_position(u: &Point, tol: Tolerance) -> f64 {
    let (x, y) = (u[0], u[1]);
    let within = |v: f64, lo: f64, hi: f64| tol.le(lo, v) && tol.le(v, hi);
    if tol.eq(x, 1.0) && within(y, 0.0, 1.0) {
        y
    } else if (tol.eq(y, 1.0) && within(x, 0.0, 1.0))
        || (tol.eq(y - x, 1.0) && within(x, -1.0, 0.0))
    {
        2.0 - x
    } else if tol.eq(x, -1.0) && within(y, -1.0, 0.0) {
        3.0 - y
    } else if tol.eq(y, -1.0) && within(x, -1.0, 0.0) {
        5.0 + x
    } else {
        // y - x = -1 with 0 ≤ x ≤ 1
        5.0 + x
    }
}

/// Shortest path length between two points of a planar tropical circle,
/// measured along the circle.
pub fn intrinsic_distance_2d(b: &BallSpec, x: &Point, y: &Point, tol: Tolerance) -> Result<f64> {
    Error::check_dims(2, b.dim())?;
    let (u, v) = (b.normalize(x)?, b.normalize(y)?);
    b.check_on_sphere(x, tol)?;
    b.check_on_sphere(y, tol)?;
    let d = (hexagon_position(&u, tol) - hexagon_position(&v, tol)).abs();
    Ok(d.min(6.0 - d) * b.radius())
}

fn unit_step(p: &Point, v: &Point) -> Result<Point> {
    Error::check_dims(p.dim(), v.dim())?;
    let len = norm(v);
    if len == 0.0 {
        return Err(Error::ZeroDirection);
    }
    Ok(p + &v.scale(1.0 / len))
}

/// Angle at `p` between the rays `p + t·v₁` and `p + t·v₂`: the intrinsic
/// distance between the points where they cross the unit circle around `p`.
/// Ranges over `[0, 3]`.
pub fn angle_2d(p: &Point, v1: &Point, v2: &Point, tol: Tolerance) -> Result<f64> {
    Error::check_dims(2, p.dim())?;
    let b = BallSpec::new(p.clone(), 1.0)?;
    intrinsic_distance_2d(&b, &unit_step(p, v1)?, &unit_step(p, v2)?, tol)
}

/// Angle between the full lines through `p` along `v₁` and `v₂`: the
/// smallest intrinsic distance between a crossing point of one line and one
/// of the other. Ranges over `[0, 1.5]`.
pub fn line_angle_2d(p: &Point, v1: &Point, v2: &Point, tol: Tolerance) -> Result<f64> {
    let mut best = f64::INFINITY;
    for a in [v1.clone(), -v1] {
        for c in [v2.clone(), -v2] {
            best = best.min(angle_2d(p, &a, &c, tol)?);
        }
    }
    Ok(best)
}
