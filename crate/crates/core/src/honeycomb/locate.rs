use std::fmt;

use super::{in_lattice, LatticeCenter};
use crate::error::{Error, Result};
use crate::metric::dist_slices;
use crate::point::Point;
use crate::tolerance::Tolerance;

/// Largest dimension accepted by [`locate_bruteforce`].
pub const BRUTEFORCE_MAX_DIM: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Interior,
    Boundary,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Interior => "interior",
            Status::Boundary => "boundary",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocateResult {
    pub primary_center: LatticeCenter,
    pub status: Status,
    /// Every center within `1 + eps`, in lexicographic order.
    pub all_centers: Vec<LatticeCenter>,
    /// `d(primary_center, x)`
    pub distance: f64,
}

/// Visit every integer vector within tropical distance `radius + eps` of `x`.
pub(crate) fn for_each_integer_near(
    x: &[f64],
    radius: f64,
    tol: Tolerance,
    mut visit: impl FnMut(&[i64]),
) {
    fn go(
        x: &[f64],
        limit: f64,
        c: &mut Vec<i64>,
        hi: f64,
        lo: f64,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        let i = c.len();
        if i == x.len() {
            visit(c);
            return;
        }
        let first = (x[i] - limit).ceil() as i64;
        let last = (x[i] + limit).floor() as i64;
        for ci in first..=last {
            let diff = ci as f64 - x[i];
            let (h, l) = (hi.max(diff), lo.min(diff));
            if h - l <= limit {
                c.push(ci);
                go(x, limit, c, h, l, visit);
                c.pop();
            }
        }
    }
    let mut c = Vec::with_capacity(x.len());
    go(x, radius + tol.eps(), &mut c, 0.0, 0.0, &mut visit);
}

/// All lattice centers within `1 + eps` of `x`, by enumeration.
pub fn locate_bruteforce(x: &Point, tol: Tolerance) -> Result<Vec<LatticeCenter>> {
    let n = x.dim();
    if n > BRUTEFORCE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: BRUTEFORCE_MAX_DIM,
        });
    }
    let mut out = Vec::new();
    for_each_integer_near(x.coords(), 1.0, tol, |c| {
        if in_lattice(c) {
            out.push(LatticeCenter(c.to_vec()));
        }
    });
    out.sort();
    Ok(out)
}

/// Candidate center from the floor/ceiling count argument, plus whether the
/// point was flagged as a boundary candidate (a coordinate snapped to an
/// integer, or a tie between the last floored and first raised fractional
/// part).
fn fast_center(x: &[f64], tol: Tolerance) -> (Vec<i64>, bool) {
    let n = x.len();
    let mut flagged = false;
    let mut floor = Vec::with_capacity(n);
    let mut frac = Vec::with_capacity(n);
    for &v in x {
        let r = v.round();
        let (f, fl) = if tol.eq(v, r) {
            flagged = true;
            (0.0, r)
        } else {
            (v - v.floor(), v.floor())
        };
        floor.push(fl as i64);
        frac.push(f);
    }
    let m = n as i64 + 1;
    let k = floor.iter().sum::<i64>().rem_euclid(m) as usize;
    // number of coordinates rounded up
    let ups = (n + 1 - k) % (n + 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| frac[a].total_cmp(&frac[b]).then(a.cmp(&b)));
    let downs = n - ups;
    if downs > 0 && ups > 0 && tol.eq(frac[order[downs - 1]], frac[order[downs]]) {
        flagged = true;
    }
    let mut c = floor;
    for &i in &order[downs..] {
        c[i] += 1;
    }
    (c, flagged)
}

/// Lattice center(s) of the tiles containing `x`.
///
/// The fast path picks the unique candidate from the floor/ceiling count and
/// certifies it by computing its distance. Boundary candidates and failed
/// certificates go through [`locate_bruteforce`], which is why this can fail
/// above [`BRUTEFORCE_MAX_DIM`].
pub fn locate(x: &Point, tol: Tolerance) -> Result<LocateResult> {
    let (c, flagged) = fast_center(x.coords(), tol);
    let as_f64: Vec<f64> = c.iter().map(|&v| v as f64).collect();
    let distance = dist_slices(&as_f64, x.coords());
    debug_assert!(in_lattice(&c));
    let fast = LatticeCenter(c);
    if !flagged && tol.lt(distance, 1.0) {
        return Ok(LocateResult {
            all_centers: vec![fast.clone()],
            primary_center: fast,
            status: Status::Interior,
            distance,
        });
    }
    if !flagged {
        log::warn!("locate: certificate failed at {x} (distance {distance}); enumerating");
    }
    let all = locate_bruteforce(x, tol)?;
    let (primary_center, distance) = if all.contains(&fast) {
        (fast, distance)
    } else {
        all.iter()
            .map(|c| (c.clone(), dist_slices(c.to_point().coords(), x.coords())))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("every point lies in some tile")
    };
    let status = if all.len() == 1 && tol.lt(distance, 1.0) {
        Status::Interior
    } else {
        Status::Boundary
    };
    Ok(LocateResult {
        primary_center,
        status,
        all_centers: all,
        distance,
    })
}
