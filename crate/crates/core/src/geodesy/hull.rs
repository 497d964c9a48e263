use rand::Rng;

use super::region::{GeodesicRegion, HalfSpaceSystem};
use crate::error::{Error, Result};
use crate::par::shard_rng;
use crate::point::Point;
use crate::tolerance::Tolerance;

/// Geodesic hull of a finite nonempty set: the tightest region of the
/// canonical form that contains every input point.
pub fn hull(points: &[Point]) -> Result<GeodesicRegion> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    for p in points {
        Error::check_dims(n, p.dim())?;
    }
    let mut system = HalfSpaceSystem {
        lower: vec![f64::INFINITY; n],
        upper: vec![f64::NEG_INFINITY; n],
        diff_lb: vec![vec![f64::INFINITY; n]; n],
    };
    for p in points {
        let x = p.coords();
        for i in 0..n {
            system.lower[i] = system.lower[i].min(x[i]);
            system.upper[i] = system.upper[i].max(x[i]);
            for j in 0..n {
                if i != j {
                    system.diff_lb[i][j] = system.diff_lb[i][j].min(x[i] - x[j]);
                }
            }
        }
    }
    for (i, row) in system.diff_lb.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    // Every bound is attained by an input point, so closure only moves bounds
    // by rounding.
    GeodesicRegion::new(&system, Tolerance::default())
}

/// Smallest difference-bound region containing `x` and `y`.
///
/// Every member satisfies `d(x, z) + d(z, y) = d(x, y)`. The converse holds
/// for `n ≤ 2` only: from `n = 3` on, some between-points fall outside.
pub fn pair_hull(x: &Point, y: &Point) -> Result<GeodesicRegion> {
    Error::check_dims(x.dim(), y.dim())?;
    hull(&[x.clone(), y.clone()])
}

/// Monte-Carlo stand-in for the iterated geodesic closure `g^depth(S)`.
///
/// Each level adds `samples` points, each drawn from the pair hull of two
/// points picked at random among those generated so far. The input points
/// come first in the output.
pub fn hull_iterate_oracle(
    points: &[Point],
    depth: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<Point>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut current = points.to_vec();
    for level in 0..depth {
        let mut rng = shard_rng(seed, level);
        let base = current.len();
        let mut fresh = Vec::with_capacity(samples);
        for _ in 0..samples {
            let a = &current[rng.random_range(0..base)];
            let b = &current[rng.random_range(0..base)];
            fresh.push(pair_hull(a, b)?.sample_point(&mut rng));
        }
        current.extend(fresh);
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::dist;

    fn p(v: &[f64]) -> Point {
        Point::new(v.to_vec()).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn simplex_vertices() -> Vec<Point> {
        vec![
            p(&[0.0, 0.0, 0.0]),
            p(&[1.0, 0.0, 0.0]),
            p(&[1.0, 1.0, 0.0]),
            p(&[1.0, 1.0, 1.0]),
        ]
    }

    #[test]
    fn hull_of_single_point() {
        let x = p(&[0.5, -2.0]);
        let r = hull(std::slice::from_ref(&x)).unwrap();
        assert_eq!(r.affine_dim(tol()), 0);
        assert!(r.contains(&x, tol()).unwrap());
        assert!(!r.contains(&p(&[0.5, -1.9]), tol()).unwrap());
    }

    #[test]
    fn empty_and_mixed_input() {
        assert_eq!(hull(&[]), Err(Error::EmptyInput));
        assert!(hull(&[p(&[0.0]), p(&[0.0, 1.0])]).is_err());
        assert!(hull_iterate_oracle(&[], 1, 1, 0).is_err());
    }

    #[test]
    fn pair_hull_parallelogram() {
        let r = pair_hull(&p(&[0.0, 0.0]), &p(&[1.0, 2.0])).unwrap();
        assert_eq!((r.lower(0), r.upper(0)), (0.0, 1.0));
        assert_eq!((r.lower(1), r.upper(1)), (0.0, 2.0));
        // 0 ≤ y - x ≤ 1
        assert_eq!(r.diff_lb(1, 0), 0.0);
        assert_eq!(-r.diff_lb(0, 1), 1.0);
        for v in [[0.0, 0.0], [1.0, 1.0], [1.0, 2.0], [0.0, 1.0], [0.5, 1.5]] {
            assert!(r.contains(&p(&v), tol()).unwrap());
        }
        assert!(!r.contains(&p(&[1.0, 0.0]), tol()).unwrap());
    }

    #[test]
    fn pair_hull_rectangle() {
        let r = pair_hull(&p(&[0.0, 2.0]), &p(&[3.0, 0.0])).unwrap();
        assert_eq!((r.lower(0), r.upper(0)), (0.0, 3.0));
        assert_eq!((r.lower(1), r.upper(1)), (0.0, 2.0));
        // the diagonal bounds are implied by the box
        assert_eq!(r.diff_lb(1, 0), -3.0);
        assert_eq!(r.diff_lb(0, 1), -2.0);
        for v in [[0.0, 0.0], [3.0, 2.0], [1.5, 1.0]] {
            assert!(r.contains(&p(&v), tol()).unwrap());
        }
    }

    #[test]
    fn simplex_hull_matches_chain_of_inequalities() {
        let r = hull(&simplex_vertices()).unwrap();
        for i in 0..3 {
            assert_eq!((r.lower(i), r.upper(i)), (0.0, 1.0));
        }
        assert_eq!(r.diff_lb(0, 1), 0.0);
        assert_eq!(r.diff_lb(1, 2), 0.0);
        assert_eq!(r.diff_lb(0, 2), 0.0);
        assert!(r.contains(&p(&[0.5, 0.2, 0.1]), tol()).unwrap());
        assert!(!r.contains(&p(&[0.1, 0.5, 0.2]), tol()).unwrap());
    }

    #[test]
    fn simplex_interior_point_lies_between_edge_points() {
        // p = (a, b, c) sits between ((a-b)/(1-b), 0, 0) and (1, 1, c/b)
        let (a, b, c) = (0.7, 0.4, 0.1);
        let u = p(&[(a - b) / (1.0 - b), 0.0, 0.0]);
        let v = p(&[1.0, 1.0, c / b]);
        let q = p(&[a, b, c]);
        let lhs = dist(&u, &q).unwrap() + dist(&q, &v).unwrap();
        assert!((lhs - dist(&u, &v).unwrap()).abs() < 1e-12);
        let edges = hull(&simplex_vertices()).unwrap();
        assert!(edges.contains(&u, tol()).unwrap());
        assert!(edges.contains(&v, tol()).unwrap());
    }

    #[test]
    fn oracle_depth_zero_is_identity_and_outputs_stay_in_hull() {
        let s = simplex_vertices();
        assert_eq!(hull_iterate_oracle(&s, 0, 100, 1).unwrap(), s);
        let h = hull(&s).unwrap();
        let pts = hull_iterate_oracle(&s, 2, 500, 9).unwrap();
        assert_eq!(pts.len(), 4 + 2 * 500);
        assert!(pts.iter().all(|x| h.contains(x, tol()).unwrap()));
    }

    #[test]
    fn oracle_reaches_simplex_interior_at_depth_two() {
        let s = simplex_vertices();
        let pts = hull_iterate_oracle(&s, 2, 4000, 11).unwrap();
        // strictly interior: 0 < z < y < x < 1 with some margin
        let interior = pts.iter().filter(|q| {
            let (x, y, z) = (q[0], q[1], q[2]);
            0.05 < z && z + 0.05 < y && y + 0.05 < x && x < 0.95
        });
        assert!(interior.count() > 0);
    }
}
