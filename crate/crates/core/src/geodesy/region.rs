//! Compact tropically geodesic regions.
//!
//! A region is the solution set of
//!
//! ```text
//! aᵢ ≤ xᵢ ≤ a′ᵢ            (i = 1..n)
//! xᵢ - xⱼ ≥ bᵢⱼ            (i ≠ j)
//! ```
//!
//! Adding a dummy coordinate `x₀ = 0` turns every constraint into a bound on
//! a difference `xᵢ - xⱼ`, so the system is a difference-bound matrix over
//! `n + 1` variables. [`GeodesicRegion`] stores that matrix in closed
//! (tightest) form: every bound is attained by some point of the region.

use rand::Rng;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::tolerance::Tolerance;

/// A raw, unvalidated half-space system in the `aᵢ, a′ᵢ, bᵢⱼ` form.
///
/// `diff_lb[i][j]` is the lower bound on `xᵢ - xⱼ`; diagonal entries are
/// ignored and `f64::NEG_INFINITY` marks an absent constraint. Coordinate
/// bounds must be finite.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpaceSystem {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub diff_lb: Vec<Vec<f64>>,
}

impl HalfSpaceSystem {
    /// Box `lower ≤ x ≤ upper` with no difference constraints.
    pub fn from_box(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        let n = lower.len();
        Self {
            lower,
            upper,
            diff_lb: vec![vec![f64::NEG_INFINITY; n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::InvalidRegion("dimension must be at least 1".into()));
        }
        Error::check_dims(n, self.upper.len())?;
        Error::check_dims(n, self.diff_lb.len())?;
        for row in &self.diff_lb {
            Error::check_dims(n, row.len())?;
        }
        if self.lower.iter().chain(&self.upper).any(|v| !v.is_finite()) {
            return Err(Error::InvalidRegion(
                "coordinate bounds must be finite".into(),
            ));
        }
        for (i, row) in self.diff_lb.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if i != j && (b.is_nan() || b == f64::INFINITY) {
                    return Err(Error::InvalidRegion(format!(
                        "difference bound b[{i}][{j}] = {b} is not allowed"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Upper-bound matrix over `x₀..xₙ₋₁` plus the zero coordinate at index `n`.
    #[allow(clippy::needless_range_loop)]
    fn upper_bounds(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        let mut ub = vec![vec![f64::INFINITY; n + 1]; n + 1];
        for (i, row) in ub.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        for i in 0..n {
            ub[i][n] = self.upper[i];
            ub[n][i] = -self.lower[i];
            for j in 0..n {
                if i != j {
                    // xᵢ - xⱼ ≥ b  ⇔  xⱼ - xᵢ ≤ -b
                    ub[j][i] = ub[j][i].min(-self.diff_lb[i][j]);
                }
            }
        }
        ub
    }

    /// Every constraint of the system holds at `x` within `tol`.
    pub fn is_satisfied_by(&self, x: &[f64], tol: Tolerance) -> bool {
        let n = self.dim();
        if x.len() != n {
            return false;
        }
        (0..n).all(|i| tol.le(self.lower[i], x[i]) && tol.le(x[i], self.upper[i]))
            && (0..n).all(|i| (0..n).all(|j| i == j || tol.le(self.diff_lb[i][j], x[i] - x[j])))
    }
}

/// A nonempty compact tropically geodesic region in canonical (closed) form.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicRegion {
    n: usize,
    /// `ub[i][j]` bounds `xᵢ - xⱼ` from above; index `n` is the zero coordinate.
    ub: Vec<Vec<f64>>,
}

#[allow(clippy::needless_range_loop)]
fn close(ub: &mut [Vec<f64>]) {
    let m = ub.len();
    for k in 0..m {
        for i in 0..m {
            let ik = ub[i][k];
            if ik == f64::INFINITY {
                continue;
            }
            for j in 0..m {
                let via = ik + ub[k][j];
                if via < ub[i][j] {
                    ub[i][j] = via;
                }
            }
        }
    }
}

impl GeodesicRegion {
    /// Validate, tighten every bound to its implied value, and check that the
    /// region is nonempty.
    pub fn new(system: &HalfSpaceSystem, tol: Tolerance) -> Result<Self> {
        system.validate()?;
        let n = system.dim();
        let mut ub = system.upper_bounds();
        close(&mut ub);
        if (0..=n).any(|i| ub[i][i] < -tol.eps()) {
            return Err(Error::EmptyRegion);
        }
        for (i, row) in ub.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        let region = Self { n, ub };
        if !system.is_satisfied_by(&region.witness_coords(), tol) {
            return Err(Error::EmptyRegion);
        }
        Ok(region)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `aᵢ`
    pub fn lower(&self, i: usize) -> f64 {
        -self.ub[self.n][i]
    }

    /// `a′ᵢ`
    pub fn upper(&self, i: usize) -> f64 {
        self.ub[i][self.n]
    }

    /// `bᵢⱼ`, the lower bound on `xᵢ - xⱼ`.
    pub fn diff_lb(&self, i: usize, j: usize) -> f64 {
        -self.ub[j][i]
    }

    /// Upper bound on `xᵢ - xⱼ` where index `n` denotes the zero coordinate.
    #[inline]
    pub fn bound(&self, i: usize, j: usize) -> f64 {
        self.ub[i][j]
    }

    pub fn to_system(&self) -> HalfSpaceSystem {
        let n = self.n;
        HalfSpaceSystem {
            lower: (0..n).map(|i| self.lower(i)).collect(),
            upper: (0..n).map(|i| self.upper(i)).collect(),
            diff_lb: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { 0.0 } else { self.diff_lb(i, j) })
                        .collect()
                })
                .collect(),
        }
    }

    /// `xᵢ = max(aᵢ, maxⱼ(bᵢⱼ + aⱼ))` over the tightened bounds.
    fn witness_coords(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| j != i)
                    .map(|j| self.diff_lb(i, j) + self.lower(j))
                    .fold(self.lower(i), f64::max)
            })
            .collect()
    }

    /// A point of the region (its componentwise-minimal corner).
    pub fn witness(&self) -> Point {
        Point::from_vec_unchecked(self.witness_coords())
    }

    pub fn contains(&self, x: &Point, tol: Tolerance) -> Result<bool> {
        Error::check_dims(self.n, x.dim())?;
        Ok(self.contains_slice(x.coords(), tol))
    }

    pub(crate) fn contains_slice(&self, x: &[f64], tol: Tolerance) -> bool {
        let n = self.n;
        let at = |i: usize| if i == n { 0.0 } else { x[i] };
        (0..=n).all(|i| (0..=n).all(|j| i == j || tol.le(at(i) - at(j), self.ub[i][j])))
    }

    /// Intersection of two regions of the same dimension.
    pub fn intersect(&self, other: &GeodesicRegion, tol: Tolerance) -> Result<GeodesicRegion> {
        Error::check_dims(self.n, other.n)?;
        let mut ub: Vec<Vec<f64>> = self
            .ub
            .iter()
            .zip(&other.ub)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.min(*y)).collect())
            .collect();
        close(&mut ub);
        if (0..=self.n).any(|i| ub[i][i] < -tol.eps()) {
            return Err(Error::EmptyRegion);
        }
        for (i, row) in ub.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        Ok(Self { n: self.n, ub })
    }

    /// Dimension of the affine hull: one less than the number of classes of
    /// coordinates (including the zero coordinate) pinned to each other.
    pub fn affine_dim(&self, tol: Tolerance) -> usize {
        let m = self.n + 1;
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..m {
            for j in i + 1..m {
                if tol.is_zero(self.ub[i][j] + self.ub[j][i]) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let classes = (0..m).filter(|&i| find(&mut parent, i) == i).count();
        classes - 1
    }

    /// Same bounds within `tol`.
    pub fn approx_eq(&self, other: &GeodesicRegion, tol: Tolerance) -> bool {
        self.n == other.n
            && self
                .ub
                .iter()
                .flatten()
                .zip(other.ub.iter().flatten())
                .all(|(a, b)| tol.eq(*a, *b))
    }

    /// Draw a point of the region by fixing coordinates one at a time, each
    /// uniformly within the interval left open by the ones already fixed.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Point {
        let n = self.n;
        let mut x = vec![0.0; n];
        for i in 0..n {
            let mut lo = -self.ub[n][i];
            let mut hi = self.ub[i][n];
            for (j, &xj) in x.iter().enumerate().take(i) {
                lo = lo.max(xj - self.ub[j][i]);
                hi = hi.min(xj + self.ub[i][j]);
            }
            x[i] = if hi > lo {
                rng.random_range(lo..=hi)
            } else {
                lo
            };
        }
        Point::from_vec_unchecked(x)
    }
}

/// Whether a half-space system describes a nonempty compact tropically
/// geodesic set.
pub fn is_tropically_geodesic(system: &HalfSpaceSystem, tol: Tolerance) -> bool {
    GeodesicRegion::new(system, tol).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn simplex_system() -> HalfSpaceSystem {
        // 0 ≤ x₃ ≤ x₂ ≤ x₁ ≤ 1 stated with loose extra bounds
        let mut s = HalfSpaceSystem::from_box(vec![-5.0, -5.0, 0.0], vec![1.0, 5.0, 5.0]);
        s.diff_lb[0][1] = 0.0;
        s.diff_lb[1][2] = 0.0;
        s
    }

    #[test]
    fn tightening_propagates_chains() {
        let r = GeodesicRegion::new(&simplex_system(), tol()).unwrap();
        for i in 0..3 {
            assert_eq!(r.lower(i), 0.0);
            assert_eq!(r.upper(i), 1.0);
        }
        assert_eq!(r.diff_lb(0, 2), 0.0);
        assert_eq!(r.diff_lb(2, 0), -1.0);
        assert_eq!(r.affine_dim(tol()), 3);
    }

    #[test]
    fn membership_in_simplex() {
        let r = GeodesicRegion::new(&simplex_system(), tol()).unwrap();
        let p = |v: &[f64]| Point::new(v.to_vec()).unwrap();
        assert!(r.contains(&p(&[0.5, 0.2, 0.1]), tol()).unwrap());
        assert!(!r.contains(&p(&[0.1, 0.5, 0.2]), tol()).unwrap());
        assert!(r.contains(&p(&[1.0, 1.0, 0.0]), tol()).unwrap());
        assert!(r.contains(&p(&[0.0]), tol()).is_err());
    }

    #[test]
    fn contradictory_bounds_are_empty() {
        let mut s = HalfSpaceSystem::from_box(vec![0.0, 0.0], vec![1.0, 1.0]);
        s.diff_lb[1][0] = 2.0; // y - x ≥ 2
        s.diff_lb[0][1] = 0.0; // x - y ≥ 0
        assert_eq!(GeodesicRegion::new(&s, tol()), Err(Error::EmptyRegion));
        assert!(!is_tropically_geodesic(&s, tol()));

        let s = HalfSpaceSystem::from_box(vec![1.0], vec![0.0]);
        assert!(!is_tropically_geodesic(&s, tol()));
    }

    #[test]
    fn rejects_malformed_systems() {
        let s = HalfSpaceSystem::from_box(vec![0.0, f64::NEG_INFINITY], vec![1.0, 1.0]);
        assert!(matches!(
            GeodesicRegion::new(&s, tol()),
            Err(Error::InvalidRegion(_))
        ));
        let mut s = HalfSpaceSystem::from_box(vec![0.0, 0.0], vec![1.0, 1.0]);
        s.diff_lb[0][1] = f64::NAN;
        assert!(GeodesicRegion::new(&s, tol()).is_err());
        let s = HalfSpaceSystem {
            lower: vec![0.0, 0.0],
            upper: vec![1.0],
            diff_lb: vec![vec![0.0; 2]; 2],
        };
        assert!(GeodesicRegion::new(&s, tol()).is_err());
    }

    #[test]
    fn witness_lies_in_region() {
        let r = GeodesicRegion::new(&simplex_system(), tol()).unwrap();
        assert!(r.contains(&r.witness(), tol()).unwrap());
    }

    #[test]
    fn round_trip_through_system_is_stable() {
        let r = GeodesicRegion::new(&simplex_system(), tol()).unwrap();
        let again = GeodesicRegion::new(&r.to_system(), tol()).unwrap();
        assert!(r.approx_eq(&again, tol()));
    }

    #[test]
    fn samples_stay_inside() {
        let r = GeodesicRegion::new(&simplex_system(), tol()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let x = r.sample_point(&mut rng);
            assert!(r.contains(&x, tol()).unwrap(), "{x}");
        }
    }

    #[test]
    fn degenerate_regions_have_lower_affine_dimension() {
        let point = GeodesicRegion::new(
            &HalfSpaceSystem::from_box(vec![1.0, 2.0], vec![1.0, 2.0]),
            tol(),
        )
        .unwrap();
        assert_eq!(point.affine_dim(tol()), 0);

        let mut s = HalfSpaceSystem::from_box(vec![0.0, 0.0], vec![1.0, 1.0]);
        s.diff_lb[0][1] = 0.0;
        s.diff_lb[1][0] = 0.0;
        let diagonal = GeodesicRegion::new(&s, tol()).unwrap();
        assert_eq!(diagonal.affine_dim(tol()), 1);
    }

    #[test]
    fn intersection() {
        let a = GeodesicRegion::new(
            &HalfSpaceSystem::from_box(vec![0.0, 0.0], vec![2.0, 2.0]),
            tol(),
        )
        .unwrap();
        let b = GeodesicRegion::new(
            &HalfSpaceSystem::from_box(vec![2.0, 1.0], vec![3.0, 3.0]),
            tol(),
        )
        .unwrap();
        let c = a.intersect(&b, tol()).unwrap();
        assert_eq!(c.affine_dim(tol()), 1);
        let far = GeodesicRegion::new(
            &HalfSpaceSystem::from_box(vec![5.0, 5.0], vec![6.0, 6.0]),
            tol(),
        )
        .unwrap();
        assert_eq!(a.intersect(&far, tol()), Err(Error::EmptyRegion));
    }
}
