//! Tropical line segments.
//!
//! The min segment between `x` and `y` runs from `x` down to the apex
//! `z = x ⊕ y` and back up to `y`. Along each branch the vertices are the
//! moments at which one of the `n` "clocks" started at `z` reaches its
//! target coordinate; clocks that stop together produce a single vertex.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::metric::dist;
use crate::point::Point;

/// Min-plus or max-plus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Min,
    Max,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Mode::Min),
            "max" => Ok(Mode::Max),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Min => "min",
            Mode::Max => "max",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TropSegment {
    pub x: Point,
    pub y: Point,
    pub apex: Point,
    /// Vertex chain from `x` through the apex to `y`, without repeats.
    pub vertices: Vec<Point>,
    pub mode: Mode,
}

impl TropSegment {
    /// Sum of tropical distances along the vertex chain.
    pub fn chain_length(&self) -> f64 {
        self.vertices
            .windows(2)
            .map(|w| dist(&w[0], &w[1]).expect("chain vertices share a dimension"))
            .sum()
    }
}

/// Vertices on the branch from `apex` to `target`, apex first.
fn branch(apex: &Point, target: &Point, mode: Mode) -> Vec<Point> {
    let mut stops: Vec<f64> = apex
        .coords()
        .iter()
        .zip(target.coords())
        .map(|(z, t)| (t - z).abs())
        .collect();
    stops.sort_by(f64::total_cmp);
    stops.dedup();

    let mut out = vec![apex.clone()];
    for t in stops.into_iter().filter(|&t| t > 0.0) {
        let coords = apex
            .coords()
            .iter()
            .zip(target.coords())
            .map(|(&z, &x)| match mode {
                Mode::Min => (z + t).min(x),
                Mode::Max => (z - t).max(x),
            })
            .collect();
        let v = Point::from_vec_unchecked(coords);
        if out.last() != Some(&v) {
            out.push(v);
        }
    }
    // The last stop lands exactly on the target in exact arithmetic; pin it.
    if out.last() != Some(target) {
        out.pop_if(|v| *v != *apex);
        out.push(target.clone());
    }
    out
}

/// The min or max tropical segment between `x` and `y`.
pub fn segment(x: &Point, y: &Point, mode: Mode) -> Result<TropSegment> {
    let apex = match mode {
        Mode::Min => x.trop_add(y)?,
        Mode::Max => x.trop_add_max(y)?,
    };
    let mut vertices = branch(&apex, x, mode);
    vertices.reverse();
    for v in branch(&apex, y, mode).into_iter().skip(1) {
        if vertices.last() != Some(&v) {
            vertices.push(v);
        }
    }
    Ok(TropSegment {
        x: x.clone(),
        y: y.clone(),
        apex,
        vertices,
        mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[f64]) -> Point {
        Point::new(v.to_vec()).unwrap()
    }

    fn coords(s: &TropSegment) -> Vec<Vec<f64>> {
        s.vertices.iter().map(|v| v.coords().to_vec()).collect()
    }

    #[test]
    fn degenerate_segment() {
        let x = p(&[0.5, -1.0, 2.0]);
        let s = segment(&x, &x, Mode::Min).unwrap();
        assert_eq!(s.vertices, vec![x.clone()]);
        assert_eq!(s.apex, x);
    }

    #[test]
    fn min_segment_staircase() {
        let s = segment(&p(&[0.0, 0.0]), &p(&[1.0, 2.0]), Mode::Min).unwrap();
        assert_eq!(s.apex.coords(), &[0.0, 0.0]);
        assert_eq!(
            coords(&s),
            vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![1.0, 2.0]]
        );
    }

    #[test]
    fn max_segment_staircase() {
        let s = segment(&p(&[0.0, 0.0]), &p(&[1.0, 2.0]), Mode::Max).unwrap();
        assert_eq!(s.apex.coords(), &[1.0, 2.0]);
        assert_eq!(
            coords(&s),
            vec![vec![0.0, 0.0], vec![0.0, 1.0], vec![1.0, 2.0]]
        );
    }

    #[test]
    fn both_branches_and_simultaneous_clocks() {
        // apex (0, 0, 2); one clock runs toward x, two stop together toward y
        let x = p(&[2.0, 0.0, 2.0]);
        let y = p(&[0.0, 1.0, 3.0]);
        let s = segment(&x, &y, Mode::Min).unwrap();
        assert_eq!(s.apex.coords(), &[0.0, 0.0, 2.0]);
        assert_eq!(
            coords(&s),
            vec![
                vec![2.0, 0.0, 2.0],
                vec![0.0, 0.0, 2.0],
                vec![0.0, 1.0, 3.0],
            ]
        );
        assert!((s.chain_length() - dist(&x, &y).unwrap()).abs() < 1e-12);
        assert!(s.vertices.len() <= 2 * x.dim() + 1);
    }

    #[test]
    fn chain_length_and_edge_directions() {
        let x = p(&[0.3, -1.2, 2.5, 0.0]);
        let y = p(&[1.7, 0.4, -0.5, 0.9]);
        for mode in [Mode::Min, Mode::Max] {
            let s = segment(&x, &y, mode).unwrap();
            assert!((s.chain_length() - dist(&x, &y).unwrap()).abs() < 1e-12);
            assert_eq!(s.vertices.first(), Some(&x));
            assert_eq!(s.vertices.last(), Some(&y));
            for w in s.vertices.windows(2) {
                let d = &w[1] - &w[0];
                let step = d
                    .coords()
                    .iter()
                    .copied()
                    .find(|v| v.abs() > 1e-12)
                    .unwrap();
                for &c in d.coords() {
                    assert!(c.abs() < 1e-12 || (c - step).abs() < 1e-12, "{d}");
                }
            }
        }
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(segment(&p(&[0.0]), &p(&[0.0, 1.0]), Mode::Min).is_err());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("min".parse::<Mode>().unwrap(), Mode::Min);
        assert_eq!("max".parse::<Mode>().unwrap(), Mode::Max);
        assert!("avg".parse::<Mode>().is_err());
    }
}
