use proptest::prelude::*;
use rand::Rng;
use tropical_core::ball::{self, BallSpec};
use tropical_core::geodesy::{hull, is_between, pair_hull};
use tropical_core::honeycomb::{self, Status};
use tropical_core::par::shard_rng;
use tropical_core::{dist, dist_proj, norm, segment, Mode, Point, ProjectivePoint, Tolerance};

const EPS: f64 = 1e-9;

fn coords(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-5.0..5.0f64, n)
}

fn pair(max_n: usize) -> impl Strategy<Value = (Point, Point)> {
    (1..=max_n).prop_flat_map(|n| {
        (coords(n), coords(n)).prop_map(|(a, b)| (Point::new(a).unwrap(), Point::new(b).unwrap()))
    })
}

fn triple(max_n: usize) -> impl Strategy<Value = (Point, Point, Point)> {
    (1..=max_n).prop_flat_map(|n| {
        (coords(n), coords(n), coords(n)).prop_map(|(a, b, c)| {
            (
                Point::new(a).unwrap(),
                Point::new(b).unwrap(),
                Point::new(c).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn metric_axioms((x, y, z) in triple(6)) {
        let dxy = dist(&x, &y).unwrap();
        prop_assert!(dxy >= 0.0);
        prop_assert_eq!(dist(&x, &x).unwrap(), 0.0);
        prop_assert!((dxy - dist(&y, &x).unwrap()).abs() < EPS);
        prop_assert!(dxy <= dist(&x, &z).unwrap() + dist(&z, &y).unwrap() + EPS);
        let diff = Point::new(x.coords().iter().zip(y.coords()).map(|(a, b)| a - b).collect()).unwrap();
        prop_assert!((dxy - norm(&diff)).abs() < EPS);
    }

    #[test]
    fn translation_invariance((x, y, t) in triple(6)) {
        let shift = |p: &Point| Point::new(p.coords().iter().zip(t.coords()).map(|(a, b)| a + b).collect()).unwrap();
        prop_assert!((dist(&x, &y).unwrap() - dist(&shift(&x), &shift(&y)).unwrap()).abs() < EPS);
    }

    #[test]
    fn segment_chain_is_a_geodesic((x, y) in pair(6), max in any::<bool>()) {
        let mode = if max { Mode::Max } else { Mode::Min };
        let s = segment(&x, &y, mode).unwrap();
        let d = dist(&x, &y).unwrap();
        prop_assert!((s.chain_length() - d).abs() < 1e-8);
        prop_assert_eq!(s.vertices.first().unwrap(), &x);
        prop_assert_eq!(s.vertices.last().unwrap(), &y);
        prop_assert!(s.vertices.len() <= x.dim() + 2);
    }

    #[test]
    fn segment_stays_in_pair_hull((x, y) in pair(6)) {
        let tol = Tolerance::default();
        let h = pair_hull(&x, &y).unwrap();
        for v in &segment(&x, &y, Mode::Min).unwrap().vertices {
            prop_assert!(h.contains(v, tol).unwrap());
            prop_assert!(is_between(&x, v, &y, tol).unwrap());
        }
    }

    #[test]
    fn pair_hull_members_are_between((x, y, z) in triple(5)) {
        let tol = Tolerance::default();
        let inside = pair_hull(&x, &y).unwrap().contains(&z, tol).unwrap();
        let between = is_between(&x, &z, &y, tol).unwrap();
        prop_assert!(!inside || between);
        if x.dim() <= 2 {
            prop_assert_eq!(inside, between);
        }
    }

    #[test]
    fn hull_contains_its_generators(pts in (1usize..=4).prop_flat_map(|n| prop::collection::vec(coords(n), 1..6))) {
        let tol = Tolerance::default();
        let pts: Vec<Point> = pts.into_iter().map(|c| Point::new(c).unwrap()).collect();
        let h = hull(&pts).unwrap();
        for p in &pts {
            prop_assert!(h.contains(p, tol).unwrap());
        }
        for w in pts.windows(2) {
            for v in &segment(&w[0], &w[1], Mode::Min).unwrap().vertices {
                prop_assert!(h.contains(v, tol).unwrap());
            }
        }
    }

    #[test]
    fn projective_coordinates(h in (2usize..=6).prop_flat_map(coords), a in -3.0..3.0f64) {
        let p = ProjectivePoint::new(h).unwrap();
        let q = p.shifted(a);
        prop_assert!(dist_proj(&p, &q).unwrap().abs() < EPS);
        let back = p.to_orthant_coords().to_projective();
        prop_assert!(dist_proj(&p, &back).unwrap().abs() < EPS);
        let c = p.canonical();
        prop_assert!(dist_proj(&p, &c.to_projective()).unwrap().abs() < EPS);
    }

    #[test]
    fn honeycomb_cover(x in (1usize..=5).prop_flat_map(|n| prop::collection::vec(-20.0..20.0f64, n))) {
        let tol = Tolerance::default();
        let x = Point::new(x).unwrap();
        let r = honeycomb::locate(&x, tol).unwrap();
        prop_assert!(!r.all_centers.is_empty());
        prop_assert!(r.all_centers.contains(&r.primary_center));
        prop_assert!(r.distance <= 1.0 + tol.eps());
        for c in &r.all_centers {
            prop_assert!(honeycomb::in_lattice(c.coords()));
            prop_assert!(dist(&c.to_point(), &x).unwrap() <= 1.0 + tol.eps());
        }
        prop_assert_eq!(r.status == Status::Interior, r.all_centers.len() == 1);
        prop_assert_eq!(&r.all_centers, &honeycomb::locate_bruteforce(&x, tol).unwrap());
    }

    #[test]
    fn honeycomb_cover_on_quarter_grid(x in (1usize..=4).prop_flat_map(|n| prop::collection::vec(-12i32..12, n))) {
        // Coarse dyadic points land on shared faces often.
        let tol = Tolerance::default();
        let x = Point::new(x.into_iter().map(|k| k as f64 / 4.0).collect()).unwrap();
        let r = honeycomb::locate(&x, tol).unwrap();
        prop_assert_eq!(&r.all_centers, &honeycomb::locate_bruteforce(&x, tol).unwrap());
        prop_assert_eq!(r.status == Status::Interior, r.all_centers.len() == 1);
    }
}

#[test]
fn between_point_outside_pair_hull_in_3d() {
    let tol = Tolerance::default();
    let x = Point::new(vec![1.5, 0.0, 2.25]).unwrap();
    let y = Point::new(vec![-1.25, 3.0, 1.25]).unwrap();
    let z = Point::new(vec![-0.5, 0.0, 0.5]).unwrap();
    assert!(is_between(&x, &z, &y, tol).unwrap());
    assert!(!pair_hull(&x, &y).unwrap().contains(&z, tol).unwrap());
}

#[test]
fn unit_ball_volume() {
    for n in 1..=5 {
        let b = BallSpec::unit(n);
        let tol = Tolerance::default();
        let mut rng = shard_rng(17, n);
        let samples = 200_000;
        let mut hits = 0usize;
        for _ in 0..samples {
            let x = Point::new((0..n).map(|_| rng.random_range(-1.0..1.0)).collect()).unwrap();
            hits += usize::from(ball::contains(&b, &x, tol).unwrap());
        }
        let vol = hits as f64 / samples as f64 * 2f64.powi(n as i32);
        let expected = (n + 1) as f64;
        assert!((vol - expected).abs() / expected < 0.02, "n={n}: {vol}");
    }
}
