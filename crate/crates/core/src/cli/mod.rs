//! The `tropical` command line.
//!
//! Output goes through [`Rendered`] so every command supports the `text`,
//! `records` and `csv` formats; `svg` is only produced by `honeycomb plot2d`.
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 failed
//! verification.

mod input;
mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::ball::{self, BallSpec, FacetId};
use crate::error::Error;
use crate::geodesy::{self, GeodesicRegion, HalfSpaceSystem, Polyline, Shape2D};
use crate::honeycomb::{self, LatticeCenter};
use crate::metric;
use crate::par::Execution;
use crate::point::{Point, ProjectivePoint};
use crate::segment::{self, Mode};
use crate::tolerance::Tolerance;

pub use output::{Format, Record, Rendered};

use input::{parse_floats, parse_ints, parse_points, read_points};
use output::list;

/// Every library operation with the one invocation that reaches it.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("dist", "dist 0,0 1,2"),
    ("dist_proj", "dist --projective 0:0:0 1:2:0"),
    ("norm", "norm -- -3,-2,1"),
    ("norm_proj", "norm --projective 1:2:0"),
    ("to_orthant_coords", "norm --orthant 2:1:3"),
    ("lp_distances", "dist --compare 0,0 1,-1"),
    ("segment", "segment 0,0 1,2 --mode max"),
    ("polyline_length", "length 0,0 1,1 1,2"),
    ("curve_length", "circle-length --radius 1 --tol 1e-6"),
    ("is_geodesic", "geodesic-check 0,0 1,1 1,2"),
    ("is_between", "between 0,0 1,1 1,2"),
    ("pair_hull", "hull --pair 0,0 1,2"),
    ("hull", "hull 0,0,0 1,0,0 1,1,0 1,1,1"),
    ("hull_iterate_oracle", "hull --depth 2 --samples 5 0,0 1,2"),
    (
        "region_contains",
        "region-contains --lower 0,0 --upper 1,1 --point 0.5,0.5",
    ),
    (
        "is_tropically_geodesic",
        "region-contains --lower 0,0 --upper 1,1 --diff 2,1,2",
    ),
    (
        "classify2d",
        "classify2d --a 0 --a2 1 --b 0 --b2 1 --c -0.5 --c2 0.5",
    ),
    ("classify_sweep", "classify2d --sweep 1000"),
    ("contains", "ball contains --point 0.5,-0.5"),
    ("hrep", "ball hrep --center 1,1 --radius 2"),
    ("vertices", "ball vertices --dim 2"),
    ("facets", "ball facets --dim 2"),
    ("facet_of", "ball facets --point 1,0.5"),
    ("opposite", "ball opposite --facet F(1,2)"),
    ("is_diametral_pair", "ball diametral 1,1 -1,-1"),
    ("minkowski_coeffs", "ball decompose --point 0.5,-0.5"),
    ("orthant_of", "ball orthant --point 0.5,-0.5"),
    ("generator_coeffs", "ball generators --point 0.5,-0.5"),
    ("eval_trop_combination", "ball eval --coeffs 1.5,0.5,0"),
    (
        "check_presentations",
        "ball presentations --dim 2 --samples 1000",
    ),
    ("pole_distances", "sphere poles --point 1,0.5"),
    ("intrinsic_distance_2d", "sphere distance 1,0 0,1"),
    ("angle_2d", "sphere angle --at 0,0 --v1 1,0 --v2 0,1"),
    ("in_lattice", "honeycomb in-lattice --center 2,1"),
    ("locate", "honeycomb locate --point 0.9,-0.4"),
    (
        "locate_bruteforce",
        "honeycomb locate --bruteforce --point 1,0.5",
    ),
    ("neighbors", "honeycomb neighbors --center 0,0"),
    (
        "verify_tiling",
        "honeycomb verify --dim 2 --samples 1000 --box 5",
    ),
    ("lattice_basis", "honeycomb basis --dim 2"),
    ("plot2d", "honeycomb plot2d --box 2"),
];

#[derive(Debug, Parser)]
#[command(name = "tropical", version, about = "Tropical metric geometry of R^n")]
pub struct Cli {
    /// Tolerance for every comparison.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_EPS)]
    eps: f64,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run sampling sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tropical distance between two points.
    Dist {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        /// Read colon-separated homogeneous coordinates.
        #[arg(long)]
        projective: bool,
        /// Also print the l1 and l-infinity distances.
        #[arg(long, conflicts_with = "projective")]
        compare: bool,
    },
    /// Tropical norm of a point.
    Norm {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        projective: bool,
        /// Print orthant coordinates of a projective point instead.
        #[arg(long)]
        orthant: bool,
    },
    /// Tropical segment between two points.
    Segment {
        #[arg(allow_hyphen_values = true)]
        x: Point,
        #[arg(allow_hyphen_values = true)]
        y: Point,
        #[arg(long, default_value_t = Mode::Min)]
        mode: Mode,
    },
    /// Tropical length of a polyline.
    Length(PointList),
    /// Tropical length of a Euclidean circle.
    CircleLength {
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, allow_hyphen_values = true)]
        center: Option<Point>,
    },
    /// Whether a polyline is a tropical geodesic.
    GeodesicCheck(PointList),
    /// Whether z lies between x and y.
    Between {
        #[arg(allow_hyphen_values = true)]
        x: Point,
        #[arg(allow_hyphen_values = true)]
        z: Point,
        #[arg(allow_hyphen_values = true)]
        y: Point,
    },
    /// Geodesic hull of a point set.
    Hull {
        #[command(flatten)]
        points: PointList,
        /// Hull of exactly two points.
        #[arg(long, conflicts_with = "depth")]
        pair: bool,
        /// Print Monte-Carlo samples of the iterated pairwise closure instead.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Build a region from bounds (or as a hull) and test a point.
    RegionContains {
        /// Use the hull of these points as the region.
        #[arg(long, conflicts_with_all = ["lower", "upper", "diff"])]
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true, requires = "upper")]
        lower: Option<Point>,
        #[arg(long, allow_hyphen_values = true, requires = "lower")]
        upper: Option<Point>,
        /// Lower bound on x_i - x_j as `i,j,value` (1-based), repeatable.
        #[arg(long, allow_hyphen_values = true)]
        diff: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<Point>,
    },
    /// Classify the planar region a <= x <= a2, b <= y <= b2, c <= y - x <= c2.
    Classify2d {
        #[command(flatten)]
        bounds: PlanarBounds,
        /// Classify this many random bound tuples instead.
        #[arg(long, conflicts_with_all = ["a", "a2", "b", "b2", "c", "c2"])]
        sweep: Option<usize>,
    },
    /// Tropical balls.
    #[command(subcommand)]
    Ball(BallCmd),
    /// Tropical spheres.
    #[command(subcommand)]
    Sphere(SphereCmd),
    /// The lattice tiling by unit balls.
    #[command(subcommand)]
    Honeycomb(HoneycombCmd),
}

#[derive(Debug, Args)]
struct PointList {
    #[arg(allow_hyphen_values = true, num_args = 0..)]
    points: Vec<Point>,
    /// Point-list file (`-` for standard input).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PlanarBounds {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    a2: Option<f64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    b: Option<f64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    b2: Option<f64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    c: Option<f64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    c2: Option<f64>,
}

#[derive(Debug, Args)]
struct BallArgs {
    /// Center (defaults to the origin).
    #[arg(long, allow_hyphen_values = true)]
    center: Option<Point>,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
}

impl BallArgs {
    fn ball(&self, n: usize) -> Result<BallSpec, Error> {
        let c = self.center.clone().unwrap_or_else(|| Point::zero(n));
        Error::check_dims(n, c.dim())?;
        BallSpec::new(c, self.radius)
    }
}

#[derive(Debug, Subcommand)]
enum BallCmd {
    /// Whether a point lies in the ball.
    Contains {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
    },
    /// Half-space system of the ball.
    Hrep {
        #[command(flatten)]
        ball: BallArgs,
        /// Dimension of a ball centered at the origin.
        #[arg(long, required_unless_present = "center")]
        dim: Option<usize>,
    },
    /// Vertices of the unit ball.
    Vertices {
        #[arg(long)]
        dim: usize,
    },
    /// Facets of the unit ball, or those containing a sphere point.
    Facets {
        #[arg(long, required_unless_present = "point")]
        dim: Option<usize>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "dim")]
        point: Option<Point>,
    },
    /// The facet opposite to one given as F(i), F(-i) or F(i,j).
    Opposite {
        #[arg(long, allow_hyphen_values = true)]
        facet: FacetId,
    },
    /// Whether two sphere points are at distance 2R.
    Diametral {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(allow_hyphen_values = true)]
        p: Point,
        #[arg(allow_hyphen_values = true)]
        q: Point,
    },
    /// Unit-segment (zonotope) coefficients of a unit-ball point.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
    },
    /// Unit hypercubes of the orthant decomposition containing a point.
    Orthant {
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
    },
    /// Coefficients writing a unit-ball point as a min-plus combination of
    /// the generators -e_1, ..., -e_n, 1.
    Generators {
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
    },
    /// Evaluate a tropical combination of the unit-ball generators (or of the
    /// points in a file).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        generators: Option<PathBuf>,
        #[arg(long, default_value_t = Mode::Min)]
        mode: Mode,
    },
    /// Compare the membership tests of every ball presentation on random points.
    Presentations {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
enum SphereCmd {
    /// Intrinsic distances from a unit-sphere point to the poles 1 and -1.
    Poles {
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
    },
    /// Intrinsic distance between two points of a planar circle.
    Distance {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(allow_hyphen_values = true)]
        x: Point,
        #[arg(allow_hyphen_values = true)]
        y: Point,
    },
    /// Tropical angle at a point between two directions (planar).
    Angle {
        #[arg(long, allow_hyphen_values = true)]
        at: Point,
        #[arg(long, allow_hyphen_values = true)]
        v1: Point,
        #[arg(long, allow_hyphen_values = true)]
        v2: Point,
    },
}

#[derive(Debug, Subcommand)]
enum HoneycombCmd {
    /// Whether an integer vector is a tile center.
    InLattice {
        #[arg(long, allow_hyphen_values = true)]
        center: String,
    },
    /// Tile(s) containing a point.
    Locate {
        #[arg(long, allow_hyphen_values = true)]
        point: Point,
        /// List the containing centers by enumeration only.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Tiles sharing a facet with the tile at a center.
    Neighbors {
        #[arg(long, allow_hyphen_values = true)]
        center: String,
    },
    /// Check the locator against enumeration on random points.
    Verify {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long = "box", default_value_t = 10.0)]
        half_width: f64,
    },
    /// A basis of the center lattice.
    Basis {
        #[arg(long)]
        dim: usize,
    },
    /// Planar tiling clipped to [-W, W]^2 as SVG (or CSV with --format csv).
    Plot2d {
        #[arg(long = "box", default_value_t = 3.0)]
        half_width: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(Error::Parse(_)) | CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Ctx {
    tol: Tolerance,
    seed: u64,
    exec: Execution,
    format: Format,
}

/// Parse `args` (including the program name), run the command and return the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    let report = |err: &mut dyn Write, e: CliError| {
        let _ = writeln!(err, "error: {e}");
        e.exit_code()
    };
    let tol = match Tolerance::new(cli.eps) {
        Ok(t) => t,
        Err(e) => return report(err, CliError::Usage(e.to_string())),
    };
    let ctx = Ctx {
        tol,
        seed: cli.seed,
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        format: cli.format,
    };
    let rendered = match execute(cli.command, &ctx) {
        Ok(r) => r,
        Err(e) => return report(err, e),
    };
    let Some(text) = rendered.render(ctx.format) else {
        return report(
            err,
            CliError::Usage(format!(
                "format {:?} is not available for this command",
                ctx.format
            )),
        );
    };
    if let Err(e) = out.write_all(text.as_bytes()) {
        return report(err, e.into());
    }
    if rendered.failed {
        3
    } else {
        0
    }
}

fn point_list(p: PointList) -> CliResult<Vec<Point>> {
    let mut pts = p.points;
    if let Some(path) = p.input {
        pts.extend(parse_points(&read_points(&path)?)?);
    }
    if pts.is_empty() {
        return Err(CliError::Usage("no points given".into()));
    }
    Ok(pts)
}

fn region_text(r: &GeodesicRegion) -> String {
    let n = r.dim();
    let mut s = String::new();
    for i in 0..n {
        s.push_str(&format!("{} <= x{} <= {}\n", r.lower(i), i + 1, r.upper(i)));
    }
    for i in 0..n {
        for j in i + 1..n {
            s.push_str(&format!(
                "{} <= x{} - x{} <= {}\n",
                r.diff_lb(i, j),
                i + 1,
                j + 1,
                -r.diff_lb(j, i)
            ));
        }
    }
    s
}

fn region_rendered(r: &GeodesicRegion, tol: Tolerance) -> Rendered {
    let n = r.dim();
    let lower: Vec<f64> = (0..n).map(|i| r.lower(i)).collect();
    let upper: Vec<f64> = (0..n).map(|i| r.upper(i)).collect();
    let diff: Vec<String> = (0..n)
        .map(|i| list(&(0..n).map(|j| r.diff_lb(i, j)).collect::<Vec<_>>()))
        .collect();
    let rec = Record::new()
        .with("dim", n)
        .with("lower", list(&lower))
        .with("upper", list(&upper))
        .with("diff_lb", diff.join(";"))
        .with("affine_dim", r.affine_dim(tol))
        .with(
            "geodesic",
            geodesy::is_tropically_geodesic(&r.to_system(), tol),
        );
    Rendered {
        text: Some(region_text(r)),
        ..Rendered::one(rec)
    }
}

fn execute(cmd: Command, ctx: &Ctx) -> CliResult<Rendered> {
    let tol = ctx.tol;
    Ok(match cmd {
        Command::Dist {
            x,
            y,
            projective,
            compare,
        } => {
            if projective {
                let (x, y): (ProjectivePoint, ProjectivePoint) = (x.parse()?, y.parse()?);
                Rendered::one(Record::new().with("dist", metric::dist_proj(&x, &y)?))
            } else {
                let (x, y): (Point, Point) = (x.parse()?, y.parse()?);
                let mut rec = Record::new().with("dist", metric::dist(&x, &y)?);
                if compare {
                    let (l1, linf) = metric::lp_distances(&x, &y)?;
                    rec.push("l1", l1);
                    rec.push("linf", linf);
                }
                Rendered::one(rec)
            }
        }
        Command::Norm {
            x,
            projective,
            orthant,
        } => {
            if orthant {
                let p: ProjectivePoint = if projective || x.contains(':') {
                    x.parse()?
                } else {
                    x.parse::<Point>()?.to_projective()
                };
                let o = p.to_orthant_coords();
                Rendered::one(
                    Record::new()
                        .with("omitted", o.omitted + 1)
                        .with("coords", list(&o.values)),
                )
            } else if projective {
                let p: ProjectivePoint = x.parse()?;
                Rendered::one(Record::new().with("norm", metric::norm_proj(&p)))
            } else {
                let p: Point = x.parse()?;
                Rendered::one(Record::new().with("norm", metric::norm(&p)))
            }
        }
        Command::Segment { x, y, mode } => {
            let s = segment::segment(&x, &y, mode)?;
            let mut records = vec![Record::new()
                .with("mode", s.mode)
                .with("apex", &s.apex)
                .with("length", s.chain_length())];
            records.extend(s.vertices.iter().map(|v| Record::new().with("vertex", v)));
            Rendered::many(records)
        }
        Command::Length(p) => {
            let line = Polyline::new(point_list(p)?)?;
            Rendered::one(Record::new().with("length", geodesy::polyline_length(&line)))
        }
        Command::CircleLength {
            radius,
            tol: curve_tol,
            center,
        } => {
            if !(radius > 0.0 && radius.is_finite()) {
                return Err(Error::InvalidRadius(radius).into());
            }
            let center = match center {
                Some(c) => {
                    Error::check_dims(2, c.dim())?;
                    [c[0], c[1]]
                }
                None => [0.0, 0.0],
            };
            let c = geodesy::Circle { center, radius };
            let len = geodesy::curve_length(&c, geodesy::CurveLengthOptions::with_tol(curve_tol))?;
            Rendered::one(Record::new().with("length", len))
        }
        Command::GeodesicCheck(p) => {
            let line = Polyline::new(point_list(p)?)?;
            Rendered::one(
                Record::new()
                    .with("geodesic", geodesy::is_geodesic(&line, tol)?)
                    .with("length", line.length())
                    .with("dist", metric::dist(line.first(), line.last())?),
            )
        }
        Command::Between { x, z, y } => {
            Rendered::one(Record::new().with("between", geodesy::is_between(&x, &z, &y, tol)?))
        }
        Command::Hull {
            points,
            pair,
            depth,
            samples,
        } => {
            let pts = point_list(points)?;
            if let Some(depth) = depth {
                let out = geodesy::hull_iterate_oracle(&pts, depth, samples, ctx.seed)?;
                Rendered::many(out.iter().map(|p| Record::new().with("point", p)).collect())
            } else if pair {
                let [x, y] = pts.as_slice() else {
                    return Err(CliError::Usage("--pair takes exactly two points".into()));
                };
                region_rendered(&geodesy::pair_hull(x, y)?, tol)
            } else {
                region_rendered(&geodesy::hull(&pts)?, tol)
            }
        }
        Command::RegionContains {
            input,
            lower,
            upper,
            diff,
            point,
        } => {
            let region = if let Some(path) = input {
                geodesy::hull(&parse_points(&read_points(&path)?)?)?
            } else {
                let (Some(lower), Some(upper)) = (lower, upper) else {
                    return Err(CliError::Usage(
                        "give --input or both --lower and --upper".into(),
                    ));
                };
                let n = lower.dim();
                Error::check_dims(n, upper.dim())?;
                let mut system =
                    HalfSpaceSystem::from_box(lower.into_coords(), upper.into_coords());
                for d in &diff {
                    let v = parse_floats(d)?;
                    let bad = || CliError::Usage(format!("--diff {d:?}: expected i,j,value"));
                    let [i, j, value] = v.as_slice() else {
                        return Err(bad());
                    };
                    let (i, j) = (*i as usize, *j as usize);
                    if i == 0
                        || j == 0
                        || i > n
                        || j > n
                        || i == j
                        || i as f64 != v[0]
                        || j as f64 != v[1]
                    {
                        return Err(bad());
                    }
                    system.diff_lb[i - 1][j - 1] = *value;
                }
                if !geodesy::is_tropically_geodesic(&system, tol) {
                    let mut rec = Record::new().with("geodesic", false);
                    if point.is_some() {
                        rec.push("contains", false);
                    }
                    return Ok(Rendered::one(rec));
                }
                GeodesicRegion::new(&system, tol)?
            };
            let mut rec = Record::new().with("geodesic", true);
            if let Some(p) = point {
                rec.push("contains", region.contains(&p, tol)?);
            }
            Rendered::one(rec)
        }
        Command::Classify2d { bounds, sweep } => match sweep {
            Some(samples) => {
                let h = geodesy::classify_sweep(samples, ctx.seed, ctx.exec, tol);
                let mut records = vec![Record::new()
                    .with("samples", samples)
                    .with("distinct_types", h.distinct_types())
                    .with("types_by_edges_3_4_5_6", list(&h.types_by_edge_count()))
                    .with("points", h.points)
                    .with("segments", h.segments)
                    .with("empty", h.empty)
                    .with("anomalies", h.anomalies)];
                for t in geodesy::Shape2DType::all() {
                    records.push(
                        Record::new()
                            .with("id", t.canonical_id())
                            .with("edges", t.edge_count())
                            .with("count", h.by_id[t.canonical_id()]),
                    );
                }
                Rendered {
                    failed: h.anomalies > 0,
                    ..Rendered::many(records)
                }
            }
            None => {
                let b = bounds;
                let get = |v: Option<f64>| v.expect("required by the parser");
                let r = geodesy::planar_region(
                    (get(b.a), get(b.a2)),
                    (get(b.b), get(b.b2)),
                    (get(b.c), get(b.c2)),
                    tol,
                )?;
                let rec = match geodesy::classify2d(&r, tol)? {
                    Shape2D::Point => Record::new().with("shape", "point"),
                    Shape2D::Segment { direction } => Record::new()
                        .with("shape", "segment")
                        .with("direction", list(&direction)),
                    Shape2D::Polygon(t) => Record::new()
                        .with("shape", "polygon")
                        .with("id", t.canonical_id())
                        .with("edges", t.edge_count())
                        .with("present", t),
                };
                Rendered::one(rec)
            }
        },
        Command::Ball(b) => execute_ball(b, ctx)?,
        Command::Sphere(s) => execute_sphere(s, ctx)?,
        Command::Honeycomb(h) => execute_honeycomb(h, ctx)?,
    })
}

fn execute_ball(cmd: BallCmd, ctx: &Ctx) -> CliResult<Rendered> {
    let tol = ctx.tol;
    Ok(match cmd {
        BallCmd::Contains { ball: b, point } => {
            let spec = b.ball(point.dim())?;
            Rendered::one(Record::new().with("contains", ball::contains(&spec, &point, tol)?))
        }
        BallCmd::Hrep { ball: b, dim } => {
            let n = dim
                .or(b.center.as_ref().map(Point::dim))
                .expect("required by the parser");
            region_rendered(&ball::hrep(&b.ball(n)?), tol)
        }
        BallCmd::Vertices { dim } => {
            check_ball_dim(dim)?;
            Rendered::many(
                ball::vertices(dim)
                    .map(|v| Record::new().with("vertex", v))
                    .collect(),
            )
        }
        BallCmd::Facets { dim, point } => match point {
            Some(p) => {
                let fs = ball::facet_of(&p, tol)?;
                Rendered::many(fs.iter().map(|f| Record::new().with("facet", f)).collect())
            }
            None => {
                let n = dim.expect("required by the parser");
                check_ball_dim(n)?;
                Rendered::many(
                    ball::facets(n)
                        .iter()
                        .map(|f| Record::new().with("facet", f))
                        .collect(),
                )
            }
        },
        BallCmd::Opposite { facet } => {
            Rendered::one(Record::new().with("facet", ball::opposite(facet)))
        }
        BallCmd::Diametral { ball: b, p, q } => {
            let spec = b.ball(p.dim())?;
            Rendered::one(
                Record::new().with("diametral", ball::is_diametral_pair(&spec, &p, &q, tol)?),
            )
        }
        BallCmd::Decompose { point } => {
            let a = ball::minkowski_coeffs(&point, tol)?;
            Rendered::one(Record::new().with("coeffs", list(a.coeffs())))
        }
        BallCmd::Orthant { point } => {
            let js: Vec<usize> = ball::orthant_of(&point, tol)
                .iter()
                .map(|j| j + 1)
                .collect();
            Rendered::one(Record::new().with("hypercubes", list(&js)))
        }
        BallCmd::Generators { point } => {
            let c = ball::generator_coeffs(&point, tol)?;
            Rendered::one(Record::new().with("coeffs", list(c.coeffs())))
        }
        BallCmd::Eval {
            coeffs,
            generators,
            mode,
        } => {
            let c = parse_floats(&coeffs)?;
            let gens = match generators {
                Some(path) => parse_points(&read_points(&path)?)?,
                None => {
                    if c.len() < 2 {
                        return Err(Error::TooFewCoordinates { min: 2 }.into());
                    }
                    ball::unit_ball_generators(c.len() - 1)
                }
            };
            let p = ball::eval_trop_combination(&c, &gens, mode)?;
            Rendered::one(Record::new().with("point", p))
        }
        BallCmd::Presentations { dim, samples } => {
            check_ball_dim(dim)?;
            let r = ball::check_presentations(dim, samples, ctx.seed, ctx.exec, tol);
            let mut rec = Record::new()
                .with("samples", r.samples)
                .with("inside", r.inside)
                .with("disagreements", r.disagreements);
            if let Some(p) = &r.first_disagreement {
                rec.push("first_disagreement", p);
            }
            Rendered {
                failed: r.disagreements > 0,
                ..Rendered::one(rec)
            }
        }
    })
}

fn check_ball_dim(n: usize) -> CliResult<()> {
    if n == 0 {
        Err(Error::TooFewCoordinates { min: 1 }.into())
    } else if n > 30 {
        Err(Error::DimensionTooLarge { dim: n, max: 30 }.into())
    } else {
        Ok(())
    }
}

fn execute_sphere(cmd: SphereCmd, ctx: &Ctx) -> CliResult<Rendered> {
    let tol = ctx.tol;
    Ok(match cmd {
        SphereCmd::Poles { point } => {
            let (up, down) = ball::pole_distances(&point, tol)?;
            Rendered::one(Record::new().with("d_plus", up).with("d_minus", down))
        }
        SphereCmd::Distance { ball: b, x, y } => {
            let spec = b.ball(x.dim())?;
            Rendered::one(
                Record::new().with("distance", ball::intrinsic_distance_2d(&spec, &x, &y, tol)?),
            )
        }
        SphereCmd::Angle { at, v1, v2 } => Rendered::one(
            Record::new()
                .with("angle", ball::angle_2d(&at, &v1, &v2, tol)?)
                .with("line_angle", ball::line_angle_2d(&at, &v1, &v2, tol)?),
        ),
    })
}

fn center_of(s: &str) -> CliResult<LatticeCenter> {
    Ok(LatticeCenter::new(parse_ints(s)?)?)
}

fn execute_honeycomb(cmd: HoneycombCmd, ctx: &Ctx) -> CliResult<Rendered> {
    let tol = ctx.tol;
    Ok(match cmd {
        HoneycombCmd::InLattice { center } => Rendered::one(
            Record::new().with("in_lattice", honeycomb::in_lattice(&parse_ints(&center)?)),
        ),
        HoneycombCmd::Locate { point, bruteforce } => {
            if bruteforce {
                let cs = honeycomb::locate_bruteforce(&point, tol)?;
                Rendered::many(cs.iter().map(|c| Record::new().with("center", c)).collect())
            } else {
                let r = honeycomb::locate(&point, tol)?;
                let all: Vec<String> = r.all_centers.iter().map(|c| c.to_string()).collect();
                Rendered::one(
                    Record::new()
                        .with("center", &r.primary_center)
                        .with("status", r.status)
                        .with("distance", r.distance)
                        .with("all_centers", all.join(";")),
                )
            }
        }
        HoneycombCmd::Neighbors { center } => {
            let nb = honeycomb::neighbors(&center_of(&center)?, tol)?;
            Rendered::many(
                nb.iter()
                    .map(|c| Record::new().with("neighbor", c))
                    .collect(),
            )
        }
        HoneycombCmd::Verify {
            dim,
            samples,
            half_width,
        } => {
            let r = honeycomb::verify_tiling(dim, half_width, samples, ctx.seed, ctx.exec, tol)?;
            let mut rec = Record::new()
                .with("dim", dim)
                .with("samples", r.samples)
                .with("interior", r.interior)
                .with("boundary", r.boundary)
                .with("mismatches", r.mismatches);
            if let Some(p) = &r.first_mismatch {
                rec.push("first_mismatch", p);
            }
            Rendered {
                failed: r.mismatches > 0,
                ..Rendered::one(rec)
            }
        }
        HoneycombCmd::Basis { dim } => {
            if dim == 0 {
                return Err(Error::TooFewCoordinates { min: 1 }.into());
            }
            let mut records: Vec<Record> = honeycomb::lattice_basis(dim)
                .iter()
                .map(|v| Record::new().with("vector", list(v)))
                .collect();
            if dim == 2 {
                let hex = honeycomb::hexagonal_basis();
                debug_assert!(honeycomb::same_lattice(&hex, &honeycomb::lattice_basis(2)));
                records.extend(hex.iter().map(|v| Record::new().with("hexagonal", list(v))));
            }
            Rendered::many(records)
        }
        HoneycombCmd::Plot2d { half_width, out } => {
            if !(half_width > 0.0 && half_width.is_finite()) {
                return Err(Error::InvalidRadius(half_width).into());
            }
            let rings = honeycomb::hexagon_rings(half_width);
            let svg = honeycomb::rings_to_svg(&rings, half_width);
            let csv = honeycomb::rings_to_csv(&rings);
            if let Some(path) = out {
                let body = if ctx.format == Format::Csv {
                    &csv
                } else {
                    &svg
                };
                fs::write(path, body)?;
                return Ok(Rendered {
                    text: Some(String::new()),
                    csv: Some(String::new()),
                    svg: Some(String::new()),
                    ..Rendered::default()
                });
            }
            let records = rings
                .iter()
                .map(|(c, ring)| {
                    let pts: Vec<String> = ring.iter().map(|[x, y]| format!("{x},{y}")).collect();
                    Record::new().with("center", c).with("ring", pts.join(";"))
                })
                .collect();
            Rendered {
                text: Some(svg.clone()),
                csv: Some(csv),
                svg: Some(svg),
                ..Rendered::many(records)
            }
        }
    })
}
