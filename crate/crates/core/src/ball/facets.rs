use std::fmt;
use std::str::FromStr;

use super::{check_unit_sphere, BallSpec};
use crate::error::{Error, Result};
use crate::metric::dist;
use crate::point::Point;
use crate::tolerance::Tolerance;

/// A facet of the unit ball. Indices are 0-based; `Display` uses the 1-based
/// `F(i)`, `F(-i)`, `F(i,j)` notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FacetId {
    /// `xᵢ = 1`, all other coordinates in `[0, 1]`.
    Upper(usize),
    /// `xᵢ = -1`, all other coordinates in `[-1, 0]`.
    Lower(usize),
    /// `xⱼ = xᵢ - 1` with `0 ≤ xᵢ ≤ 1` and every coordinate between `xⱼ` and `xᵢ`.
    Diff(usize, usize),
}

impl FacetId {
    pub fn validate(self, n: usize) -> Result<Self> {
        let ok = match self {
            FacetId::Upper(i) | FacetId::Lower(i) => i < n,
            FacetId::Diff(i, j) => n > 1 && i < n && j < n && i != j,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidFacet(format!("{self} for n = {n}")))
        }
    }

    /// Whether `x` (relative to the unit ball at the origin) lies on this facet.
    pub fn contains(self, x: &[f64], tol: Tolerance) -> bool {
        match self {
            FacetId::Upper(i) => {
                tol.eq(x[i], 1.0) && x.iter().all(|&v| tol.le(0.0, v) && tol.le(v, 1.0))
            }
            FacetId::Lower(i) => {
                tol.eq(x[i], -1.0) && x.iter().all(|&v| tol.le(-1.0, v) && tol.le(v, 0.0))
            }
            FacetId::Diff(i, j) => {
                let (hi, lo) = (x[i], x[j]);
                tol.le(0.0, hi)
                    && tol.le(hi, 1.0)
                    && tol.eq(lo, hi - 1.0)
                    && x.iter().all(|&v| tol.le(lo, v) && tol.le(v, hi))
            }
        }
    }
}

impl fmt::Display for FacetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FacetId::Upper(i) => write!(f, "F({})", i + 1),
            FacetId::Lower(i) => write!(f, "F(-{})", i + 1),
            FacetId::Diff(i, j) => write!(f, "F({},{})", i + 1, j + 1),
        }
    }
}

impl FromStr for FacetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "invalid facet {s:?}; expected F(i), F(-i) or F(i,j)"
            ))
        };
        let inner = s
            .trim()
            .strip_prefix("F(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let index = |t: &str| -> Result<usize> {
            match t.trim().parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(bad()),
            }
        };
        match inner.split_once(',') {
            Some((a, b)) => Ok(FacetId::Diff(index(a)?, index(b)?)),
            None => match inner.trim().strip_prefix('-') {
                Some(rest) => Ok(FacetId::Lower(index(rest)?)),
                None => Ok(FacetId::Upper(index(inner)?)),
            },
        }
    }
}

/// All `n(n+1)` facets of `Bⁿ`.
pub fn facets(n: usize) -> Vec<FacetId> {
    let mut out = Vec::with_capacity(n * (n + 1));
    out.extend((0..n).map(FacetId::Upper));
    out.extend((0..n).map(FacetId::Lower));
    for i in 0..n {
        out.extend((0..n).filter(|&j| j != i).map(|j| FacetId::Diff(i, j)));
    }
    out
}

/// Facets of the unit ball containing `x`, which must lie on the unit sphere.
pub fn facet_of(x: &Point, tol: Tolerance) -> Result<Vec<FacetId>> {
    check_unit_sphere(x, tol)?;
    Ok(facets(x.dim())
        .into_iter()
        .filter(|f| f.contains(x.coords(), tol))
        .collect())
}

/// `F₋ᵢ = -Fᵢ` and `Fⱼᵢ = -Fᵢⱼ`.
pub fn opposite(f: FacetId) -> FacetId {
    match f {
        FacetId::Upper(i) => FacetId::Lower(i),
        FacetId::Lower(i) => FacetId::Upper(i),
        FacetId::Diff(i, j) => FacetId::Diff(j, i),
    }
}

/// Two sphere points at tropical distance `2R`, i.e. joined by a geodesic
/// through the center.
pub fn is_diametral_pair(b: &BallSpec, p: &Point, q: &Point, tol: Tolerance) -> Result<bool> {
    b.check_on_sphere(p, tol)?;
    b.check_on_sphere(q, tol)?;
    Ok(tol.eq(dist(p, q)?, 2.0 * b.radius()))
}
