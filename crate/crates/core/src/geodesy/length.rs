//! Tropical length of polylines and parametric curves.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::metric::{dist, dist_slices};
use crate::point::Point;

/// An ordered list of at least one point, all of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline(Vec<Point>);

impl Polyline {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let first = points.first().ok_or(Error::TooFewPoints { min: 1 })?;
        let n = first.dim();
        for p in &points {
            Error::check_dims(n, p.dim())?;
        }
        Ok(Self(points))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0[0].dim()
    }

    pub fn first(&self) -> &Point {
        &self.0[0]
    }

    pub fn last(&self) -> &Point {
        &self.0[self.0.len() - 1]
    }

    /// Sum of tropical distances over consecutive points.
    pub fn length(&self) -> f64 {
        self.0
            .windows(2)
            .map(|w| dist(&w[0], &w[1]).expect("polyline points share a dimension"))
            .sum()
    }
}

pub fn polyline_length(p: &Polyline) -> f64 {
    p.length()
}

/// A continuous, Lipschitz map `[0, 1] → ℝⁿ`.
pub trait Curve {
    fn dim(&self) -> usize;

    /// Evaluate at `t ∈ [0, 1]`, writing `dim()` coordinates into `out`.
    fn eval_into(&self, t: f64, out: &mut [f64]);
}

/// Adapter for closures returning a coordinate vector.
pub struct FnCurve<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(f64) -> Vec<f64>> FnCurve<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F: Fn(f64) -> Vec<f64>> Curve for FnCurve<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval_into(&self, t: f64, out: &mut [f64]) {
        let v = (self.f)(t);
        assert_eq!(v.len(), self.dim, "curve returned the wrong dimension");
        out.copy_from_slice(&v);
    }
}

/// A polyline traversed with equal parameter time per edge.
impl Curve for Polyline {
    fn dim(&self) -> usize {
        Polyline::dim(self)
    }

    fn eval_into(&self, t: f64, out: &mut [f64]) {
        let pts = &self.0;
        if pts.len() == 1 {
            out.copy_from_slice(pts[0].coords());
            return;
        }
        let edges = pts.len() - 1;
        let s = t.clamp(0.0, 1.0) * edges as f64;
        let i = (s.floor() as usize).min(edges - 1);
        let u = s - i as f64;
        let (a, b) = (pts[i].coords(), pts[i + 1].coords());
        for k in 0..out.len() {
            out[k] = if u == 0.0 {
                a[k]
            } else if u == 1.0 {
                b[k]
            } else {
                a[k] + u * (b[k] - a[k])
            };
        }
    }
}

/// The Euclidean circle of a given radius, run once counterclockwise from
/// `center + (R, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: [f64; 2],
    pub radius: f64,
}

impl Curve for Circle {
    fn dim(&self) -> usize {
        2
    }

    fn eval_into(&self, t: f64, out: &mut [f64]) {
        let (s, c) = (TAU * t).sin_cos();
        out[0] = self.center[0] + self.radius * c;
        out[1] = self.center[1] + self.radius * s;
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveLengthOptions {
    /// Stop once two successive estimates differ by less than this.
    pub tol: f64,
    /// Largest `k` for which `2^k` intervals are tried.
    pub max_depth: u32,
    /// Successive estimates are not compared before this depth, so that
    /// closed or self-overlapping curves cannot stop on a coarse sample.
    pub min_depth: u32,
}

impl Default for CurveLengthOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_depth: 24,
            min_depth: 4,
        }
    }
}

impl CurveLengthOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }
}

fn sampled_length(curve: &dyn Curve, k: u32, prev: &mut [f64], cur: &mut [f64]) -> Result<f64> {
    let intervals = 1u64 << k;
    let mut total = 0.0;
    curve.eval_into(0.0, prev);
    check_finite(prev, 0.0)?;
    for i in 1..=intervals {
        let t = i as f64 / intervals as f64;
        curve.eval_into(t, cur);
        check_finite(cur, t)?;
        total += dist_slices(prev, cur);
        prev.copy_from_slice(cur);
    }
    Ok(total)
}

fn check_finite(x: &[f64], t: f64) -> Result<()> {
    if x.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFiniteCurve { t })
    }
}

/// Tropical length of a curve by uniform dyadic refinement.
///
/// The estimate over `2^k` equal parameter steps never decreases with `k`
/// (triangle inequality), so the first pair of successive estimates closer
/// than `opts.tol` is accepted.
pub fn curve_length(curve: &dyn Curve, opts: CurveLengthOptions) -> Result<f64> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::InvalidTolerance(opts.tol));
    }
    let n = curve.dim();
    if n == 0 {
        return Err(Error::TooFewCoordinates { min: 1 });
    }
    let (mut prev, mut cur) = (vec![0.0; n], vec![0.0; n]);
    let mut last = sampled_length(curve, 0, &mut prev, &mut cur)?;
    for k in 1..=opts.max_depth {
        let next = sampled_length(curve, k, &mut prev, &mut cur)?;
        if k >= opts.min_depth && (next - last).abs() < opts.tol {
            return Ok(next);
        }
        last = next;
    }
    let final_depth = opts.max_depth;
    let lower = if final_depth == 0 {
        last
    } else {
        sampled_length(curve, final_depth - 1, &mut prev, &mut cur)?
    };
    Err(Error::NoConvergence {
        depth: final_depth,
        lower,
        upper: last,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[f64]) -> Point {
        Point::new(v.to_vec()).unwrap()
    }

    #[test]
    fn polyline_examples() {
        assert_eq!(Polyline::new(vec![p(&[0.0, 0.0])]).unwrap().length(), 0.0);
        let stair = Polyline::new(vec![p(&[0.0, 0.0]), p(&[1.0, 1.0]), p(&[1.0, 2.0])]).unwrap();
        assert_eq!(polyline_length(&stair), 2.0);
        let back = Polyline::new(vec![p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[0.0, 0.0])]).unwrap();
        assert_eq!(back.length(), 2.0);
        assert!(Polyline::new(vec![]).is_err());
        assert!(Polyline::new(vec![p(&[0.0]), p(&[0.0, 0.0])]).is_err());
    }

    #[test]
    fn straight_segment_length_is_distance() {
        let (x, y) = ([0.3, -1.0, 2.0], [1.5, 0.5, -0.25]);
        let line = FnCurve::new(3, move |t| {
            (0..3).map(|i| (1.0 - t) * x[i] + t * y[i]).collect()
        });
        let len = curve_length(&line, CurveLengthOptions::default()).unwrap();
        assert!((len - dist(&p(&x), &p(&y)).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn circle_circumference() {
        let expected = 4.0 + 2.0 * 2f64.sqrt();
        for r in [0.5, 1.0, 3.0] {
            let c = Circle {
                center: [0.0, 0.0],
                radius: r,
            };
            let len = curve_length(&c, CurveLengthOptions::with_tol(1e-6)).unwrap();
            assert!((len - expected * r).abs() < 1e-6, "R = {r}: {len}");
        }
    }

    #[test]
    fn offset_circle_has_the_same_length() {
        let c = Circle {
            center: [3.0, -7.5],
            radius: 1.0,
        };
        let len = curve_length(&c, CurveLengthOptions::with_tol(1e-6)).unwrap();
        assert!((len - (4.0 + 2.0 * 2f64.sqrt())).abs() < 1e-6);
    }

    #[test]
    fn polyline_curve_matches_polyline_length() {
        let pl = Polyline::new(vec![
            p(&[0.0, 0.0]),
            p(&[1.0, 0.5]),
            p(&[-0.5, 2.0]),
            p(&[0.25, 0.25]),
            p(&[3.0, -1.0]),
        ])
        .unwrap();
        let len = curve_length(&pl, CurveLengthOptions::default()).unwrap();
        assert!((len - pl.length()).abs() < 1e-12);
    }

    #[test]
    fn non_finite_and_non_convergent() {
        let bad = FnCurve::new(1, |t| vec![if t > 0.5 { f64::NAN } else { t }]);
        assert!(matches!(
            curve_length(&bad, CurveLengthOptions::default()),
            Err(Error::NonFiniteCurve { .. })
        ));

        // length grows without bound as the sampling gets finer
        let wiggle = FnCurve::new(1, |t: f64| vec![(t * 1e6).sin()]);
        let opts = CurveLengthOptions {
            tol: 1e-12,
            max_depth: 6,
            min_depth: 1,
        };
        match curve_length(&wiggle, opts) {
            Err(Error::NoConvergence {
                depth,
                lower,
                upper,
            }) => {
                assert_eq!(depth, 6);
                assert!(lower.is_finite() && upper.is_finite());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(curve_length(&wiggle, CurveLengthOptions::with_tol(0.0)).is_err());
    }
}
