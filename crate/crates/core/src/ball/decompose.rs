//! Alternative presentations of the unit ball.

use rand::Rng;

use super::{hrep, BallSpec};
use crate::error::{Error, Result};
use crate::geodesy::hull;
use crate::metric::{norm, norm_slice};
use crate::par::{map_shards, shard_range, shard_rng, Execution};
use crate::point::Point;
use crate::segment::Mode;
use crate::tolerance::Tolerance;

fn check_in_unit_ball(x: &Point, tol: Tolerance) -> Result<()> {
    let distance = norm(x);
    if tol.le(distance, 1.0) {
        Ok(())
    } else {
        Err(Error::OutsideBall {
            distance,
            radius: 1.0,
        })
    }
}

/// Coefficients `a₁, …, aₙ₊₁` of `x = Σ aₖ ẽₖ`, where `ẽₙ₊₁ = -𝟙`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZonotopeCoeffs(pub Vec<f64>);

impl ZonotopeCoeffs {
    /// Canonical coefficients of any point: the shift along `𝟙` is the
    /// smallest that makes all of them nonnegative.
    pub fn of(x: &Point) -> Self {
        let m = x.min_coord().min(0.0);
        let mut a: Vec<f64> = x.coords().iter().map(|v| v - m).collect();
        a.push(-m);
        Self(a)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    /// `Σ aₖ ẽₖ`
    pub fn recompose(&self) -> Point {
        let (last, head) = self.0.split_last().expect("at least two coefficients");
        Point::from_vec_unchecked(head.iter().map(|a| a - last).collect())
    }

    fn in_unit_cube(&self, tol: Tolerance) -> bool {
        self.0.iter().all(|&a| tol.le(0.0, a) && tol.le(a, 1.0))
    }
}

/// Coefficients in `[0, 1]` writing a ball point as a sum of unit segments.
pub fn minkowski_coeffs(x: &Point, tol: Tolerance) -> Result<ZonotopeCoeffs> {
    check_in_unit_ball(x, tol)?;
    Ok(ZonotopeCoeffs::of(x))
}

/// Membership in `Σ [0, ẽₖ]`. Any representation differs from the canonical
/// one by a multiple of `𝟙`, and the canonical one has the smallest
/// coefficients, so testing it alone decides membership.
pub fn zonotope_contains(x: &Point, tol: Tolerance) -> bool {
    ZonotopeCoeffs::of(x).in_unit_cube(tol)
}

/// Indices attaining the minimum of `(x₁, …, xₙ, 0)`; index `n` stands for
/// the appended zero. These name the unit hypercubes containing `x`.
pub fn orthant_of(x: &Point, tol: Tolerance) -> Vec<usize> {
    let n = x.dim();
    let at = |i: usize| if i == n { 0.0 } else { x[i] };
    let m = (0..=n).map(at).fold(f64::INFINITY, f64::min);
    (0..=n).filter(|&i| tol.eq(at(i), m)).collect()
}

/// Coefficients of `x` over the generators `ẽₖ, k ≠ j`, of the unit
/// hypercube `Iⱼ`, in increasing `k`.
pub fn hypercube_coeffs(j: usize, x: &Point) -> Result<Vec<f64>> {
    let n = x.dim();
    if j > n {
        return Err(Error::InvalidFacet(format!(
            "hypercube index {j} for n = {n}"
        )));
    }
    if j == n {
        return Ok(x.coords().to_vec());
    }
    let xj = x[j];
    let mut a: Vec<f64> = (0..n).filter(|&k| k != j).map(|k| x[k] - xj).collect();
    a.push(-xj);
    Ok(a)
}

pub fn in_hypercube(j: usize, x: &Point, tol: Tolerance) -> Result<bool> {
    Ok(hypercube_coeffs(j, x)?
        .iter()
        .all(|&a| tol.le(0.0, a) && tol.le(a, 1.0)))
}

/// `-ẽ₁, …, -ẽₙ₊₁`, i.e. `-e₁, …, -eₙ, 𝟙`.
pub fn unit_ball_generators(n: usize) -> Vec<Point> {
    (0..=n).map(|j| -&Point::unit(n, j)).collect()
}

/// Coefficients of a tropical (min-plus) combination of the unit-ball
/// generators.
#[derive(Debug, Clone, PartialEq)]
pub struct TropCombination(pub Vec<f64>);

impl TropCombination {
    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn evaluate(&self) -> Point {
        let n = self.0.len() - 1;
        eval_trop_combination(&self.0, &unit_ball_generators(n), Mode::Min)
            .expect("one coefficient per generator")
    }
}

/// `x = min(1 + x₁ - e₁, …, 1 + xₙ - eₙ, 0 + 𝟙)` for every `x` in the unit ball.
pub fn generator_coeffs(x: &Point, tol: Tolerance) -> Result<TropCombination> {
    check_in_unit_ball(x, tol)?;
    let mut c: Vec<f64> = x.coords().iter().map(|v| 1.0 + v).collect();
    c.push(0.0);
    Ok(TropCombination(c))
}

/// `⊕ₖ cₖ ⊙ gₖ`, with `⊕` being `min` or `max` according to `mode`.
pub fn eval_trop_combination(coeffs: &[f64], generators: &[Point], mode: Mode) -> Result<Point> {
    Error::check_dims(generators.len(), coeffs.len())?;
    let first = generators.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    let init = match mode {
        Mode::Min => f64::INFINITY,
        Mode::Max => f64::NEG_INFINITY,
    };
    let mut out = vec![init; n];
    for (c, g) in coeffs.iter().zip(generators) {
        Error::check_dims(n, g.dim())?;
        for (o, v) in out.iter_mut().zip(g.coords()) {
            *o = match mode {
                Mode::Min => o.min(c + v),
                Mode::Max => o.max(c + v),
            };
        }
    }
    Ok(Point::from_vec_unchecked(out))
}

/// Membership in the min-plus convex hull of `generators`, by projecting the
/// homogenized point onto their tropical span.
pub fn in_trop_hull(generators: &[Point], x: &Point, tol: Tolerance) -> Result<bool> {
    let n = x.dim();
    let mut best = vec![f64::INFINITY; n + 1];
    for g in generators {
        Error::check_dims(n, g.dim())?;
        // largest λ with λ + (g, 0) ≥ (x, 0) coordinatewise
        let lambda = x
            .coords()
            .iter()
            .zip(g.coords())
            .map(|(a, b)| a - b)
            .fold(0.0, f64::max);
        for i in 0..n {
            best[i] = best[i].min(lambda + g[i]);
        }
        best[n] = best[n].min(lambda);
    }
    Ok(x.coords().iter().zip(&best).all(|(a, b)| tol.eq(*a, *b)) && tol.eq(best[n], 0.0))
}

/// Outcome of comparing the ball presentations on random points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PresentationReport {
    pub samples: u64,
    /// Points inside the ball by the distance test.
    pub inside: u64,
    /// Points where some presentation disagreed with the distance test.
    pub disagreements: u64,
    pub first_disagreement: Option<Point>,
}

impl PresentationReport {
    fn merge(mut self, other: Self) -> Self {
        self.samples += other.samples;
        self.inside += other.inside;
        self.disagreements += other.disagreements;
        if self.first_disagreement.is_none() {
            self.first_disagreement = other.first_disagreement;
        }
        self
    }
}

/// Test `samples` uniform points of `[-1.5, 1.5]ⁿ` against the distance
/// test, the half-space system, the zonotope, the hypercube union, the
/// geodesic hull of `ẽ₁, …, ẽₙ₊₁` and the tropical hull of the generators.
pub fn check_presentations(
    n: usize,
    samples: usize,
    seed: u64,
    exec: Execution,
    tol: Tolerance,
) -> PresentationReport {
    let region = hrep(&BallSpec::unit(n));
    let units: Vec<Point> = (0..=n).map(|j| Point::unit(n, j)).collect();
    let geodesic_hull = hull(&units).expect("nonempty input");
    let generators = unit_ball_generators(n);
    let reports = map_shards(exec, |shard| {
        let mut rng = shard_rng(seed, shard);
        let mut report = PresentationReport::default();
        let mut buf = vec![0.0; n];
        for _ in shard_range(samples, shard) {
            for v in buf.iter_mut() {
                *v = rng.random_range(-1.5..1.5);
            }
            let x = Point::from_vec_unchecked(buf.clone());
            let by_dist = tol.le(norm_slice(&buf), 1.0);
            let by_cubes = (0..=n).any(|j| in_hypercube(j, &x, tol).expect("index in range"));
            let agree = region.contains_slice(&buf, tol) == by_dist
                && geodesic_hull.contains_slice(&buf, tol) == by_dist
                && zonotope_contains(&x, tol) == by_dist
                && by_cubes == by_dist
                && in_trop_hull(&generators, &x, tol).expect("dimensions match") == by_dist;
            report.samples += 1;
            report.inside += u64::from(by_dist);
            if !agree {
                report.disagreements += 1;
                report.first_disagreement.get_or_insert(x);
            }
        }
        report
    });
    reports
        .into_iter()
        .fold(PresentationReport::default(), PresentationReport::merge)
}
