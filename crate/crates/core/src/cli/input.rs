use std::fs;
use std::io::{self, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::point::Point;

/// Parse a point list: one comma-separated point per line, `#` starts a
/// comment, blank lines are skipped.
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p: Point = line
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
        out.push(p);
    }
    Ok(out)
}

/// Read a point list from a file, or from standard input for `-`.
pub fn read_points(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("invalid integer {t:?} in {s:?}")))
        })
        .collect()
}

pub fn parse_floats(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("invalid number {t:?} in {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_files() {
        let pts = parse_points("# simplex\n0,0,0\n\n1,0,0  # first\n 1,1,0\n").unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[1].coords(), &[1.0, 0.0, 0.0]);
        let e = parse_points("0,0\nx,1\n").unwrap_err();
        assert!(e.to_string().contains("line 2"));
    }

    #[test]
    fn integer_lists() {
        assert_eq!(parse_ints("1,-1").unwrap(), vec![1, -1]);
        assert!(parse_ints("1,0.5").is_err());
        assert_eq!(parse_floats("1.5,-2").unwrap(), vec![1.5, -2.0]);
    }
}
