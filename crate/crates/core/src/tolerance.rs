//! Floating-point comparison policy shared by every predicate in the crate.

use crate::error::{Error, Result};

/// Absolute tolerance used for all equality and inequality tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps.is_finite() {
            Ok(Self(eps))
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    #[inline]
    pub fn eps(self) -> f64 {
        self.0
    }

    /// `|a - b| <= eps`
    #[inline]
    pub fn eq(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.0
    }

    /// `a <= b + eps`
    #[inline]
    pub fn le(self, a: f64, b: f64) -> bool {
        a <= b + self.0
    }

    /// `a < b - eps`
    #[inline]
    pub fn lt(self, a: f64, b: f64) -> bool {
        a < b - self.0
    }

    #[inline]
    pub fn is_zero(self, a: f64) -> bool {
        a.abs() <= self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self(Self::DEFAULT_EPS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive() {
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(-1e-3).is_err());
        assert!(Tolerance::new(f64::NAN).is_err());
        assert!(Tolerance::new(f64::INFINITY).is_err());
    }

    #[test]
    fn comparisons() {
        let tol = Tolerance::default();
        assert_eq!(tol.eps(), 1e-9);
        assert!(tol.eq(1.0, 1.0 + 5e-10));
        assert!(!tol.eq(1.0, 1.0 + 5e-9));
        assert!(tol.le(1.0 + 5e-10, 1.0));
        assert!(!tol.lt(1.0 - 5e-10, 1.0));
        assert!(tol.lt(0.5, 1.0));
    }
}
