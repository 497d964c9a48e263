//! The tiling of ℝⁿ by unit tropical balls centred on the lattice
//! `Λ = {c ∈ ℤⁿ : Σcᵢ ≡ 0 mod n+1}`.

mod locate;
mod plot;
mod tiling;

pub use locate::{locate, locate_bruteforce, LocateResult, Status, BRUTEFORCE_MAX_DIM};
pub use plot::{hexagon_rings, rings_to_csv, rings_to_svg};
pub use tiling::{neighbors, verify_tiling, TilingReport, VERIFY_MAX_DIM};

use std::fmt;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::tolerance::Tolerance;

pub fn in_lattice(c: &[i64]) -> bool {
    let m = c.len() as i64 + 1;
    c.iter().map(|v| v.rem_euclid(m)).sum::<i64>() % m == 0
}

/// Integer coordinates of `x`, failing on any entry farther than `eps` from
/// an integer.
pub fn integer_coords(x: &Point, tol: Tolerance) -> Result<Vec<i64>> {
    x.coords()
        .iter()
        .enumerate()
        .map(|(index, &value)| {
            let r = value.round();
            if tol.eq(value, r) {
                Ok(r as i64)
            } else {
                Err(Error::NonInteger { index, value })
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeCenter(Vec<i64>);

impl LatticeCenter {
    pub fn new(c: Vec<i64>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::TooFewCoordinates { min: 1 });
        }
        if in_lattice(&c) {
            Ok(Self(c))
        } else {
            Err(Error::NotInLattice(c))
        }
    }

    pub fn origin(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn from_point(x: &Point, tol: Tolerance) -> Result<Self> {
        Self::new(integer_coords(x, tol)?)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_point(&self) -> Point {
        Point::from_vec_unchecked(self.0.iter().map(|&v| v as f64).collect())
    }

    pub fn offset(&self, v: &[i64]) -> Result<Self> {
        Error::check_dims(self.dim(), v.len())?;
        Self::new(self.0.iter().zip(v).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LatticeCenter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `e₁ - e₂, …, eₙ₋₁ - eₙ, (n+1)eₙ`
pub fn lattice_basis(n: usize) -> Vec<Vec<i64>> {
    let mut basis: Vec<Vec<i64>> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    if n > 0 {
        let mut last = vec![0; n];
        last[n - 1] = n as i64 + 1;
        basis.push(last);
    }
    basis
}

/// The planar basis `(2, 1), (-1, 1)` of the hexagonal tiling.
pub fn hexagonal_basis() -> Vec<Vec<i64>> {
    vec![vec![2, 1], vec![-1, 1]]
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "matrix must be square");
            r.iter().map(|&v| v as i128).collect()
        })
        .collect();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Whether two full-rank integer bases (as rows) span the same lattice.
pub fn same_lattice(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let (da, db) = (det(a), det(b));
    if da == 0 || da.abs() != db.abs() {
        return false;
    }
    // each row of `a` has integer coordinates over `b` (Cramer's rule)
    a.iter().all(|v| {
        (0..b.len()).all(|k| {
            let mut m = b.to_vec();
            m[k] = v.clone();
            det(&m) % db == 0
        })
    })
}
