use std::fmt::Write;

use super::{in_lattice, LatticeCenter};

const HEXAGON: [[f64; 2]; 6] = [
    [1.0, 0.0],
    [1.0, 1.0],
    [0.0, 1.0],
    [-1.0, 0.0],
    [-1.0, -1.0],
    [0.0, -1.0],
];

/// Every planar tile meeting `[-w, w]²`, as its center and vertex ring.
pub fn hexagon_rings(w: f64) -> Vec<(LatticeCenter, [[f64; 2]; 6])> {
    let reach = (w + 1.0).floor() as i64;
    let mut out = Vec::new();
    for x in -reach..=reach {
        for y in -reach..=reach {
            let c = [x, y];
            if !in_lattice(&c) {
                continue;
            }
            // bounding boxes overlap
            if (x.abs() as f64) < w + 1.0 && (y.abs() as f64) < w + 1.0 {
                let ring = HEXAGON.map(|[a, b]| [x as f64 + a, y as f64 + b]);
                out.push((LatticeCenter(c.to_vec()), ring));
            }
        }
    }
    out
}

/// One line per tile: `cx,cy,x1,y1,…,x6,y6`.
pub fn rings_to_csv(rings: &[(LatticeCenter, [[f64; 2]; 6])]) -> String {
    let mut s = String::from("cx,cy,x1,y1,x2,y2,x3,y3,x4,y4,x5,y5,x6,y6\n");
    for (c, ring) in rings {
        s.push_str(&c.to_string());
        for [x, y] in ring {
            write!(s, ",{x},{y}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// SVG with one path per tile, clipped to `[-w, w]²`. The y axis points up.
pub fn rings_to_svg(rings: &[(LatticeCenter, [[f64; 2]; 6])], w: f64) -> String {
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="600">"#,
        -w,
        -w,
        2.0 * w,
        2.0 * w
    )
    .unwrap();
    writeln!(
        s,
        r#"<defs><clipPath id="box"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
        -w,
        -w,
        2.0 * w,
        2.0 * w
    )
    .unwrap();
    writeln!(
        s,
        r#"<g clip-path="url(#box)" transform="scale(1,-1)" fill="none" stroke="black" stroke-width="{}">"#,
        w / 200.0
    )
    .unwrap();
    for (c, ring) in rings {
        let d: Vec<String> = ring.iter().map(|[x, y]| format!("{x},{y}")).collect();
        writeln!(s, r#"<path data-center="{c}" d="M{}Z"/>"#, d.join(" L")).unwrap();
        let [cx, cy] = [c.coords()[0], c.coords()[1]];
        writeln!(
            s,
            r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="black"/>"#,
            w / 100.0
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}
