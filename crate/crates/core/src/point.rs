//! Points of ℝⁿ and of the tropical projective torus ℝⁿ⁺¹/ℝ𝟙.
//!
//! A [`Point`] `(x₁, …, xₙ)` stands for the class `(x₁ : … : xₙ : 0)`. A
//! [`ProjectivePoint`] keeps all `n + 1` homogeneous coordinates and is only
//! meaningful up to adding a constant to every entry.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

fn validate(coords: &[f64], min: usize) -> Result<()> {
    if coords.len() < min {
        return Err(Error::TooFewCoordinates { min });
    }
    if let Some((index, &value)) = coords.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite { index, value });
    }
    Ok(())
}

fn parse_list(s: &str, sep: char) -> Result<Vec<f64>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty coordinate list".into()));
    }
    s.split(sep)
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<f64>()
                .map_err(|e| Error::Parse(format!("invalid coordinate {tok:?}: {e}")))
        })
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[f64], sep: &str) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// A point of ℝⁿ with finite coordinates, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        validate(&coords, 1)?;
        Ok(Self(coords))
    }

    /// The origin 𝟘 of ℝⁿ.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        Self(vec![0.0; n])
    }

    /// The all-ones vector 𝟙 of ℝⁿ.
    pub fn ones(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        Self(vec![1.0; n])
    }

    /// Tropical unit vector `ẽ_j` for `j ∈ 0..=n`: the standard basis for
    /// `j < n` and `-𝟙` for `j = n`.
    pub fn unit(n: usize, j: usize) -> Self {
        assert!(j <= n, "unit vector index {j} out of range for n = {n}");
        if j == n {
            Self(vec![-1.0; n])
        } else {
            let mut v = vec![0.0; n];
            v[j] = 1.0;
            Self(v)
        }
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<f64>) -> Self {
        debug_assert!(!coords.is_empty());
        Self(coords)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    /// Homogenize to `(x₁ : … : xₙ : 0)`.
    pub fn to_projective(&self) -> ProjectivePoint {
        let mut h = self.0.clone();
        h.push(0.0);
        ProjectivePoint(h)
    }

    pub fn scale(&self, s: f64) -> Point {
        Point(self.0.iter().map(|v| v * s).collect())
    }

    pub fn min_coord(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_coord(&self) -> f64 {
        self.0.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub(crate) fn zip_map(&self, other: &Point, f: impl Fn(f64, f64) -> f64) -> Result<Point> {
        Error::check_dims(self.dim(), other.dim())?;
        Ok(Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        ))
    }

    /// Componentwise minimum `x ⊕ y` in the min-plus semiring.
    pub fn trop_add(&self, other: &Point) -> Result<Point> {
        self.zip_map(other, f64::min)
    }

    /// Componentwise maximum, the max-plus counterpart of [`Point::trop_add`].
    pub fn trop_add_max(&self, other: &Point) -> Result<Point> {
        self.zip_map(other, f64::max)
    }

    /// Tropical scalar multiplication `a ⊙ x`.
    pub fn trop_scale(&self, a: f64) -> Point {
        Point(self.0.iter().map(|v| v + a).collect())
    }
}

impl Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add<&Point> for &Point {
    type Output = Point;

    /// Panics on dimension mismatch; use [`Point::zip_map`]-based methods for
    /// fallible arithmetic.
    fn add(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;

    fn sub(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;

    fn neg(self) -> Point {
        Point(self.0.iter().map(|v| -v).collect())
    }
}

impl FromStr for Point {
    type Err = Error;

    /// Comma-separated decimals, e.g. `"1.5,-2,0"`.
    fn from_str(s: &str) -> Result<Self> {
        Point::new(parse_list(s, ',')?)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0, ",")
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Point::new(v)
    }
}

/// Homogeneous coordinates `(x₁ : … : xₙ₊₁)`, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint(Vec<f64>);

impl ProjectivePoint {
    pub fn new(hcoords: Vec<f64>) -> Result<Self> {
        validate(&hcoords, 2)?;
        Ok(Self(hcoords))
    }

    /// Dimension `n` of the torus (one less than the number of entries).
    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    #[inline]
    pub fn hcoords(&self) -> &[f64] {
        &self.0
    }

    /// Representative with last entry zero, as a point of ℝⁿ.
    pub fn canonical(&self) -> Point {
        let last = self.0[self.0.len() - 1];
        Point(
            self.0[..self.0.len() - 1]
                .iter()
                .map(|v| v - last)
                .collect(),
        )
    }

    /// Same class, shifted by a constant.
    pub fn shifted(&self, a: f64) -> ProjectivePoint {
        ProjectivePoint(self.0.iter().map(|v| v + a).collect())
    }

    /// Coordinates in the tropical coordinate system: subtract the minimum
    /// entry and omit the (first) position where it occurs.
    pub fn to_orthant_coords(&self) -> OrthantCoords {
        let (omitted, min) =
            self.0
                .iter()
                .copied()
                .enumerate()
                .fold(
                    (0, f64::INFINITY),
                    |(bi, bv), (i, v)| {
                        if v < bv {
                            (i, v)
                        } else {
                            (bi, bv)
                        }
                    },
                );
        let values = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != omitted)
            .map(|(_, v)| v - min)
            .collect();
        OrthantCoords { omitted, values }
    }
}

impl FromStr for ProjectivePoint {
    type Err = Error;

    /// Colon-separated decimals, e.g. `"1:2:0"`.
    fn from_str(s: &str) -> Result<Self> {
        ProjectivePoint::new(parse_list(s, ':')?)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0, ":")
    }
}

impl From<&Point> for ProjectivePoint {
    fn from(p: &Point) -> Self {
        p.to_projective()
    }
}

/// `(x₁, …, x̂ⱼ, …, xₙ₊₁)ⱼ`: a class written with its `j`-th entry zero and
/// all others nonnegative. `omitted` is a 0-based index into the `n + 1`
/// homogeneous positions.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthantCoords {
    pub omitted: usize,
    pub values: Vec<f64>,
}

impl OrthantCoords {
    pub fn to_projective(&self) -> ProjectivePoint {
        let mut h = self.values.clone();
        h.insert(self.omitted, 0.0);
        ProjectivePoint(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(v: &[f64]) -> ProjectivePoint {
        ProjectivePoint::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(Point::new(vec![]), Err(Error::TooFewCoordinates { min: 1 }));
        assert!(matches!(
            Point::new(vec![0.0, f64::INFINITY]),
            Err(Error::NonFinite { index: 1, .. })
        ));
        assert!(ProjectivePoint::new(vec![1.0]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p: Point = "1.5, -2,0".parse().unwrap();
        assert_eq!(p.coords(), &[1.5, -2.0, 0.0]);
        assert_eq!(p.to_string(), "1.5,-2,0");
        let q: ProjectivePoint = "1:2:0".parse().unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.to_string(), "1:2:0");
        assert!("1,,2".parse::<Point>().is_err());
        assert!("".parse::<Point>().is_err());
        assert!("inf,0".parse::<Point>().is_err());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let x = pp(&[3.0, 4.5, 1.0]);
        let c = x.canonical();
        assert_eq!(c.coords(), &[2.0, 3.5]);
        assert_eq!(c.to_projective().canonical(), c);
        assert_eq!(x.shifted(-7.25).canonical(), c);
    }

    #[test]
    fn orthant_coords_examples() {
        let c = pp(&[0.0, 0.0, 0.0]).to_orthant_coords();
        assert_eq!((c.omitted, c.values.as_slice()), (0, &[0.0, 0.0][..]));

        let c = pp(&[0.5, 0.3, 0.0]).to_orthant_coords();
        assert_eq!((c.omitted, c.values.as_slice()), (2, &[0.5, 0.3][..]));

        let c = pp(&[-1.0, 2.0, 0.0]).to_orthant_coords();
        assert_eq!((c.omitted, c.values.as_slice()), (0, &[3.0, 1.0][..]));
    }

    #[test]
    fn orthant_coords_round_trip_class() {
        let x = pp(&[2.0, -0.5, 1.25, 0.0]);
        let oc = x.to_orthant_coords();
        assert!(oc.values.iter().all(|&v| v >= 0.0));
        assert_eq!(oc.to_projective().canonical(), x.canonical());
    }

    #[test]
    fn unit_vectors() {
        assert_eq!(Point::unit(3, 1).coords(), &[0.0, 1.0, 0.0]);
        assert_eq!(Point::unit(3, 3).coords(), &[-1.0, -1.0, -1.0]);
    }
}
