//! Combinatorial types of compact tropically geodesic sets in the plane.
//!
//! A two-dimensional such set is bounded by at most six edges, one per
//! constraint, met in the cyclic order
//!
//! ```text
//! 0: x = a′   1: y = b′   2: y - x = c′   3: x = a   4: y = b   5: y - x = c
//! ```
//!
//! Which of them are redundant determines the type. Missing edges never sit
//! next to each other on the cycle, which leaves 1 + 6 + 9 + 2 = 18 types.

use std::fmt;

use rand::Rng;

use super::region::{GeodesicRegion, HalfSpaceSystem};
use crate::error::{Error, Result};
use crate::par::{map_shards, shard_range, shard_rng, Execution, SHARDS};
use crate::tolerance::Tolerance;

/// Ordered index pairs `(i, j)` of the constraint `xᵢ - xⱼ ≤ ub`, with index
/// 0 = x, 1 = y and 2 = the zero coordinate, in cycle order.
const EDGE_PAIRS: [(usize, usize); 6] = [(0, 2), (1, 2), (1, 0), (2, 0), (2, 1), (0, 1)];

pub const EDGE_NAMES: [&str; 6] = ["x=a'", "y=b'", "y-x=c'", "x=a", "y=b", "y-x=c"];

/// Bitmasks (bit `k` = edge `k` missing) with no two cyclically adjacent
/// bits, in increasing order. The position in this table is the canonical id.
const VALID_MISSING: [u8; 18] = {
    let mut out = [0u8; 18];
    let mut len = 0;
    let mut mask = 0u8;
    while mask < 64 {
        let rotated = ((mask << 1) | (mask >> 5)) & 0x3f;
        if mask & rotated == 0 {
            out[len] = mask;
            len += 1;
        }
        mask += 1;
    }
    assert!(len == 18);
    out
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape2DType {
    missing: u8,
}

impl Shape2DType {
    pub const COUNT: usize = 18;

    pub fn from_missing_mask(mask: u8) -> Option<Self> {
        VALID_MISSING
            .contains(&mask)
            .then_some(Self { missing: mask })
    }

    pub fn from_id(id: usize) -> Option<Self> {
        VALID_MISSING.get(id).map(|&missing| Self { missing })
    }

    /// All 18 types in canonical-id order.
    pub fn all() -> impl Iterator<Item = Shape2DType> {
        VALID_MISSING.iter().map(|&missing| Self { missing })
    }

    pub fn canonical_id(self) -> usize {
        VALID_MISSING
            .iter()
            .position(|&m| m == self.missing)
            .expect("constructed from a valid mask")
    }

    pub fn missing_mask(self) -> u8 {
        self.missing
    }

    pub fn present_edges(self) -> [bool; 6] {
        std::array::from_fn(|k| self.missing & (1 << k) == 0)
    }

    pub fn edge_count(self) -> usize {
        6 - self.missing.count_ones() as usize
    }
}

impl fmt::Display for Shape2DType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .present_edges()
            .iter()
            .zip(EDGE_NAMES)
            .filter(|(p, _)| **p)
            .map(|(_, n)| n)
            .collect();
        write!(
            f,
            "type {} ({} edges: {})",
            self.canonical_id(),
            self.edge_count(),
            names.join(" ")
        )
    }
}

/// Classification of a nonempty compact geodesic set in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape2D {
    Point,
    /// A segment in direction (1,0), (0,1) or (1,1).
    Segment {
        direction: [u8; 2],
    },
    Polygon(Shape2DType),
}

/// Classify a planar region by which of its six constraints bound an edge of
/// positive length.
pub fn classify2d(region: &GeodesicRegion, tol: Tolerance) -> Result<Shape2D> {
    Error::check_dims(2, region.dim())?;
    let ub = |i: usize, j: usize| region.bound(i, j);
    let width = |i: usize, j: usize| ub(i, j) + ub(j, i);
    let (wx, wy, wd) = (width(0, 2), width(1, 2), width(1, 0));
    let flat = |w: f64| w <= tol.eps();
    match (flat(wx), flat(wy), flat(wd)) {
        (true, true, _) | (true, _, true) | (_, true, true) => return Ok(Shape2D::Point),
        (false, true, false) => return Ok(Shape2D::Segment { direction: [1, 0] }),
        (true, false, false) => return Ok(Shape2D::Segment { direction: [0, 1] }),
        (false, false, true) => return Ok(Shape2D::Segment { direction: [1, 1] }),
        (false, false, false) => {}
    }
    let mut missing = 0u8;
    for (k, &(i, j)) in EDGE_PAIRS.iter().enumerate() {
        let l = 3 - i - j;
        // Length of the face xᵢ - xⱼ = ub(i, j), measured along x_l - x_j.
        let edge = ub(i, l) + ub(l, j) - ub(i, j);
        if edge <= tol.eps() {
            missing |= 1 << k;
        }
    }
    Shape2DType::from_missing_mask(missing)
        .map(Shape2D::Polygon)
        .ok_or_else(|| {
            Error::InvalidRegion(format!("adjacent missing edges (mask {missing:#08b})"))
        })
}

/// Build the planar region `a ≤ x ≤ a′, b ≤ y ≤ b′, c ≤ y - x ≤ c′`.
pub fn planar_region(
    (a, a2): (f64, f64),
    (b, b2): (f64, f64),
    (c, c2): (f64, f64),
    tol: Tolerance,
) -> Result<GeodesicRegion> {
    let mut s = HalfSpaceSystem::from_box(vec![a, b], vec![a2, b2]);
    s.diff_lb[1][0] = c;
    s.diff_lb[0][1] = -c2;
    GeodesicRegion::new(&s, tol)
}

/// Histogram of classifications over random bound tuples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassHistogram {
    pub by_id: [u64; Shape2DType::COUNT],
    pub points: u64,
    pub segments: u64,
    pub empty: u64,
    /// Regions whose missing edges were adjacent on the cycle; always zero
    /// unless tolerance effects break the classification.
    pub anomalies: u64,
}

impl ClassHistogram {
    fn merge(mut self, other: &ClassHistogram) -> Self {
        for (a, b) in self.by_id.iter_mut().zip(other.by_id) {
            *a += b;
        }
        self.points += other.points;
        self.segments += other.segments;
        self.empty += other.empty;
        self.anomalies += other.anomalies;
        self
    }

    /// Number of distinct two-dimensional types observed.
    pub fn distinct_types(&self) -> usize {
        self.by_id.iter().filter(|&&c| c > 0).count()
    }

    /// Observed types grouped by edge count 3..=6.
    pub fn types_by_edge_count(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for t in Shape2DType::all() {
            if self.by_id[t.canonical_id()] > 0 {
                out[t.edge_count() - 3] += 1;
            }
        }
        out
    }
}

fn random_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    // Occasionally collapse the pair so degenerate shapes show up too.
    let u = rng.random_range(-2.0..2.0);
    if rng.random_bool(0.02) {
        (u, u)
    } else {
        let v = rng.random_range(-2.0..2.0);
        (f64::min(u, v), f64::max(u, v))
    }
}

/// Classify `samples` random bound tuples.
pub fn classify_sweep(
    samples: usize,
    seed: u64,
    exec: Execution,
    tol: Tolerance,
) -> ClassHistogram {
    let parts = map_shards(exec, |shard| {
        let mut rng = shard_rng(seed, shard);
        let mut h = ClassHistogram::default();
        for _ in shard_range(samples, shard) {
            let (x, y, d) = (
                random_pair(&mut rng),
                random_pair(&mut rng),
                random_pair(&mut rng),
            );
            match planar_region(x, y, d, tol).and_then(|r| classify2d(&r, tol)) {
                Ok(Shape2D::Point) => h.points += 1,
                Ok(Shape2D::Segment { .. }) => h.segments += 1,
                Ok(Shape2D::Polygon(t)) => h.by_id[t.canonical_id()] += 1,
                Err(Error::EmptyRegion) => h.empty += 1,
                Err(_) => h.anomalies += 1,
            }
        }
        h
    });
    debug_assert_eq!(parts.len(), SHARDS);
    parts
        .iter()
        .fold(ClassHistogram::default(), ClassHistogram::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesy::hull;
    use crate::point::Point;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn polygon(r: &GeodesicRegion) -> Shape2DType {
        match classify2d(r, tol()).unwrap() {
            Shape2D::Polygon(t) => t,
            other => panic!("expected a polygon, got {other:?}"),
        }
    }

    #[test]
    fn type_table() {
        let counts = Shape2DType::all().fold([0; 4], |mut acc, t| {
            acc[t.edge_count() - 3] += 1;
            acc
        });
        assert_eq!(counts, [2, 9, 6, 1]);
        for (id, t) in Shape2DType::all().enumerate() {
            assert_eq!(t.canonical_id(), id);
            assert_eq!(Shape2DType::from_id(id), Some(t));
        }
        assert_eq!(Shape2DType::from_missing_mask(0b000011), None);
        assert_eq!(Shape2DType::from_missing_mask(0b100001), None);
    }

    #[test]
    fn hexagon_has_all_edges() {
        let r = planar_region((-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0), tol()).unwrap();
        let t = polygon(&r);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.canonical_id(), 0);
    }

    #[test]
    fn square_cut_by_diagonal_band_is_a_triangle() {
        // vertices (0,0), (0,1), (1,1)
        let r = planar_region((0.0, 1.0), (0.0, 1.0), (0.0, 1.0), tol()).unwrap();
        let t = polygon(&r);
        assert_eq!(t.edge_count(), 3);
        // x = a, y = b′ and y - x = c remain
        assert_eq!(t.present_edges(), [false, true, false, true, false, true]);
    }

    #[test]
    fn degenerate_classes() {
        let pt = planar_region((1.0, 1.0), (2.0, 2.0), (-5.0, 5.0), tol()).unwrap();
        assert_eq!(classify2d(&pt, tol()).unwrap(), Shape2D::Point);
        let horiz = planar_region((0.0, 1.0), (2.0, 2.0), (-5.0, 5.0), tol()).unwrap();
        assert_eq!(
            classify2d(&horiz, tol()).unwrap(),
            Shape2D::Segment { direction: [1, 0] }
        );
        let vert = planar_region((0.0, 0.0), (0.0, 3.0), (-5.0, 5.0), tol()).unwrap();
        assert_eq!(
            classify2d(&vert, tol()).unwrap(),
            Shape2D::Segment { direction: [0, 1] }
        );
        let diag = planar_region((0.0, 1.0), (0.0, 3.0), (0.5, 0.5), tol()).unwrap();
        assert_eq!(
            classify2d(&diag, tol()).unwrap(),
            Shape2D::Segment { direction: [1, 1] }
        );
    }

    #[test]
    fn wrong_dimension() {
        let r = hull(&[Point::zero(3)]).unwrap();
        assert!(classify2d(&r, tol()).is_err());
    }

    /// The 18 shapes in their usual drawing order, by vertex list.
    pub(crate) fn drawn_polygons() -> Vec<Vec<[f64; 2]>> {
        vec![
            vec![[0., 0.], [1., 0.], [1., 1.]],
            vec![[0., 0.], [1., 1.], [0., 1.]],
            vec![[0., 0.], [2., 0.], [2., 1.], [0., 1.]],
            vec![[0., 0.], [2., 0.], [2., 1.], [1., 1.]],
            vec![[0., 0.], [1., 0.], [2., 1.], [0., 1.]],
            vec![[0., 0.], [1., 1.], [1., 2.], [0., 1.]],
            vec![[0., 0.], [1., 0.], [1., 2.], [0., 1.]],
            vec![[0., 0.], [1., 1.], [1., 2.], [0., 2.]],
            vec![[0., 0.], [1., 0.], [3., 2.], [2., 2.]],
            vec![[0., 0.], [2., 2.], [1., 2.], [0., 1.]],
            vec![[0., 0.], [1., 0.], [2., 1.], [2., 2.]],
            vec![[0., 0.], [2., 0.], [2., 2.], [1., 2.], [0., 1.]],
            vec![[0., 0.], [1., 0.], [2., 1.], [2., 2.], [0., 2.]],
            vec![[0., 0.], [1., 0.], [3., 2.], [1., 2.], [0., 1.]],
            vec![[0., 0.], [2., 0.], [3., 1.], [3., 2.], [2., 2.]],
            vec![[0., 0.], [1., 0.], [1.5, 0.5], [1.5, 2.], [0., 0.5]],
            vec![[0., 0.], [1.5, 1.5], [1.5, 2.], [0.5, 2.], [0., 1.5]],
            vec![[0., 0.], [2., 0.], [3., 1.], [3., 2.], [1.3, 2.], [0., 0.7]],
        ]
    }

    #[test]
    fn drawn_polygons_realize_all_eighteen_types() {
        // canonical id of each drawn shape, as listed in the README
        const IDS: [usize; 18] = [17, 12, 15, 16, 4, 10, 14, 11, 6, 9, 7, 13, 3, 1, 5, 2, 8, 0];
        let mut seen = std::collections::HashSet::new();
        for (label, verts) in drawn_polygons().iter().enumerate() {
            let pts: Vec<Point> = verts
                .iter()
                .map(|v| Point::new(v.to_vec()).unwrap())
                .collect();
            let t = polygon(&hull(&pts).unwrap());
            assert_eq!(t.edge_count(), verts.len(), "shape {}", label + 1);
            assert_eq!(t.canonical_id(), IDS[label], "shape {}", label + 1);
            seen.insert(t.canonical_id());
        }
        assert_eq!(seen.len(), 18);
    }

    #[test]
    fn sweep_is_deterministic_and_thread_independent() {
        let a = classify_sweep(5_000, 42, Execution::Sequential, tol());
        let b = classify_sweep(5_000, 42, Execution::Parallel, tol());
        assert_eq!(a, b);
        let total: u64 =
            a.by_id.iter().sum::<u64>() + a.points + a.segments + a.empty + a.anomalies;
        assert_eq!(a.anomalies, 0);
        assert_eq!(total, 5_000);
    }
}
