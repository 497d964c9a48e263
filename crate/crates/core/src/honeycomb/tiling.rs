use rand::Rng;

use super::locate::for_each_integer_near;
use super::{in_lattice, locate, locate_bruteforce, LatticeCenter, Status};
use crate::ball::{hrep, BallSpec};
use crate::error::{Error, Result};
use crate::par::{map_shards, shard_range, shard_rng, Execution};
use crate::point::Point;
use crate::tolerance::Tolerance;

/// Largest dimension accepted by [`verify_tiling`].
pub const VERIFY_MAX_DIM: usize = 10;

/// Lattice centers whose tile shares an `(n-1)`-dimensional face with the
/// tile at `c`.
///
/// Candidates are the lattice offsets within tropical distance 2 (hence
/// inside the `‖δ‖∞ ≤ 2` window); unit tiles farther apart cannot meet.
pub fn neighbors(c: &LatticeCenter, tol: Tolerance) -> Result<Vec<LatticeCenter>> {
    let n = c.dim();
    let own = hrep(&BallSpec::unit(n));
    let mut out = Vec::new();
    let mut failure = None;
    for_each_integer_near(&vec![0.0; n], 2.0, tol, |delta| {
        if failure.is_some() || delta.iter().all(|&d| d == 0) || !in_lattice(delta) {
            return;
        }
        let shifted = Point::from_vec_unchecked(delta.iter().map(|&d| d as f64).collect());
        let other = hrep(&BallSpec::new(shifted, 1.0).expect("unit radius"));
        match own.intersect(&other, tol) {
            Ok(face) if face.affine_dim(tol) + 1 == n => match c.offset(delta) {
                Ok(v) => out.push(v),
                Err(e) => failure = Some(e),
            },
            Ok(_) | Err(Error::EmptyRegion) => {}
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TilingReport {
    pub samples: u64,
    pub interior: u64,
    pub boundary: u64,
    /// Samples where the locator and the enumeration disagree, or where an
    /// interior point is not covered by exactly one tile.
    pub mismatches: u64,
    pub first_mismatch: Option<Point>,
}

impl TilingReport {
    fn merge(mut self, other: Self) -> Self {
        self.samples += other.samples;
        self.interior += other.interior;
        self.boundary += other.boundary;
        self.mismatches += other.mismatches;
        if self.first_mismatch.is_none() {
            self.first_mismatch = other.first_mismatch;
        }
        self
    }
}

fn agrees(x: &Point, tol: Tolerance) -> Result<(Status, bool)> {
    let fast = locate(x, tol)?;
    let brute = locate_bruteforce(x, tol)?;
    let ok = match fast.status {
        Status::Interior => {
            brute.len() == 1 && brute[0] == fast.primary_center && tol.lt(fast.distance, 1.0)
        }
        Status::Boundary => brute.contains(&fast.primary_center) && brute == fast.all_centers,
    };
    Ok((fast.status, ok))
}

/// Check the locator against enumeration on `samples` uniform points of
/// `[-w, w]ⁿ`.
pub fn verify_tiling(
    n: usize,
    w: f64,
    samples: usize,
    seed: u64,
    exec: Execution,
    tol: Tolerance,
) -> Result<TilingReport> {
    if n == 0 {
        return Err(Error::TooFewCoordinates { min: 1 });
    }
    if n > VERIFY_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: VERIFY_MAX_DIM,
        });
    }
    if !(w > 0.0 && w.is_finite()) {
        return Err(Error::InvalidRadius(w));
    }
    let reports = map_shards(exec, |shard| -> Result<TilingReport> {
        let mut rng = shard_rng(seed, shard);
        let mut report = TilingReport::default();
        for _ in shard_range(samples, shard) {
            let x = Point::from_vec_unchecked((0..n).map(|_| rng.random_range(-w..w)).collect());
            let (status, ok) = agrees(&x, tol)?;
            report.samples += 1;
            match status {
                Status::Interior => report.interior += 1,
                Status::Boundary => report.boundary += 1,
            }
            if !ok {
                report.mismatches += 1;
                report.first_mismatch.get_or_insert(x);
            }
        }
        Ok(report)
    });
    reports
        .into_iter()
        .try_fold(TilingReport::default(), |acc, r| Ok(acc.merge(r?)))
}
