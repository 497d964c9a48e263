//! The tropical ball `{x : d(p, x) ≤ R}` and its unit sphere.
//!
//! The unit ball `Bⁿ` is a zonotope with `2ⁿ⁺¹ - 2` vertices and `n(n+1)`
//! facets. It can be presented as a half-space system, as a Minkowski sum of
//! the unit segments along `ẽ₁, …, ẽₙ₊₁`, as the union of `n + 1` unit
//! hypercubes, as a geodesic hull, and as the tropical convex hull of
//! `-ẽ₁, …, -ẽₙ₊₁`. Each presentation has its own membership test here.

mod decompose;
mod facets;
mod sphere;

pub use decompose::{
    check_presentations, eval_trop_combination, generator_coeffs, hypercube_coeffs, in_hypercube,
    in_trop_hull, minkowski_coeffs, orthant_of, unit_ball_generators, zonotope_contains,
    PresentationReport, TropCombination, ZonotopeCoeffs,
};
pub use facets::{facet_of, facets, is_diametral_pair, opposite, FacetId};
pub use sphere::{angle_2d, intrinsic_distance_2d, line_angle_2d, pole_distances};

use crate::error::{Error, Result};
use crate::geodesy::{GeodesicRegion, HalfSpaceSystem};
use crate::metric::{dist, norm};
use crate::point::Point;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, PartialEq)]
pub struct BallSpec {
    center: Point,
    radius: f64,
}

impl BallSpec {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if radius > 0.0 && radius.is_finite() {
            Ok(Self { center, radius })
        } else {
            Err(Error::InvalidRadius(radius))
        }
    }

    /// `Bⁿ`, the unit ball at the origin.
    pub fn unit(n: usize) -> Self {
        Self {
            center: Point::zero(n),
            radius: 1.0,
        }
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    /// Map a point to the unit ball at the origin.
    pub(crate) fn normalize(&self, x: &Point) -> Result<Point> {
        Error::check_dims(self.dim(), x.dim())?;
        Ok((x - &self.center).scale(1.0 / self.radius))
    }

    /// Fail with [`Error::NotOnSphere`] unless `|d(center, x) - R| ≤ eps`.
    pub(crate) fn check_on_sphere(&self, x: &Point, tol: Tolerance) -> Result<()> {
        let deviation = (dist(&self.center, x)? - self.radius).abs();
        if deviation <= tol.eps() {
            Ok(())
        } else {
            Err(Error::NotOnSphere { deviation })
        }
    }
}

pub fn contains(b: &BallSpec, x: &Point, tol: Tolerance) -> Result<bool> {
    Ok(tol.le(dist(&b.center, x)?, b.radius))
}

/// `|d(center, x) - R| ≤ eps`
pub fn on_sphere(b: &BallSpec, x: &Point, tol: Tolerance) -> Result<bool> {
    Ok(tol.eq(dist(&b.center, x)?, b.radius))
}

/// Half-space system of a ball: `|xᵢ - cᵢ| ≤ R` and `|(xᵢ - xⱼ) - (cᵢ - cⱼ)| ≤ R`.
pub fn hrep(b: &BallSpec) -> GeodesicRegion {
    let c = b.center.coords();
    let r = b.radius;
    let n = c.len();
    let system = HalfSpaceSystem {
        lower: c.iter().map(|ci| ci - r).collect(),
        upper: c.iter().map(|ci| ci + r).collect(),
        diff_lb: (0..n)
            .map(|i| (0..n).map(|j| c[i] - c[j] - r).collect())
            .collect(),
    };
    GeodesicRegion::new(&system, Tolerance::default()).expect("a ball is nonempty")
}

/// Vertices of `Bⁿ`: the nonzero points of `{0,1}ⁿ` followed by those of
/// `{0,-1}ⁿ`, generated lazily.
pub fn vertices(n: usize) -> impl Iterator<Item = Point> {
    assert!((1..64).contains(&n), "dimension {n} out of range");
    let count = 1u64 << n;
    [1.0, -1.0].into_iter().flat_map(move |sign| {
        (1..count).map(move |mask| {
            Point::from_vec_unchecked(
                (0..n)
                    .map(|i| if mask & (1 << i) != 0 { sign } else { 0.0 })
                    .collect(),
            )
        })
    })
}

/// Vertex count `2ⁿ⁺¹ - 2`.
pub fn vertex_count(n: usize) -> u64 {
    (1u64 << (n + 1)) - 2
}

/// Norm check shared by the sphere operations on the unit ball.
pub(crate) fn check_unit_sphere(x: &Point, tol: Tolerance) -> Result<()> {
    let deviation = (norm(x) - 1.0).abs();
    if deviation <= tol.eps() {
        Ok(())
    } else {
        Err(Error::NotOnSphere { deviation })
    }
}
