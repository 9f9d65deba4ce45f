//! JSON polytope files: `{"dim": 3, "vertices": [[0, 0, 0], [1, "1/2", 0], …]}`.
//!
//! Each coordinate is either a JSON integer or a string holding an integer
//! or a fraction `"a/b"`.

use std::fmt::Write as _;
use std::path::Path;

use fine_core::arith::{Int, RatVector, Rational};
use fine_core::polyhedra::Polytope;
use serde::{Deserialize, Serialize};

/// Largest polytope dimension accepted from files.
pub const MAX_FILE_DIM: usize = 4;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FileError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension error: {0}")]
    Dimension(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<Vec<Coordinate>>,
}

/// Parses `"a"` or `"a/b"` with `b ≠ 0`.
pub fn parse_rational(s: &str) -> Result<Rational, FileError> {
    let bad = || FileError::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Int = num.parse().map_err(|_| bad())?;
    let den: Int = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::from_parts_signed(num, den))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_int() {
        r.numerator().to_string()
    } else {
        format!("{}/{}", r.numerator(), r.denominator())
    }
}

/// `(a,b,…)` with entries formatted by [`format_rational`].
pub fn format_point(p: &RatVector) -> String {
    let mut s = String::from("(");
    for (i, v) in p.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "{}", format_rational(v)).expect("writing to a string");
    }
    s.push(')');
    s
}

impl Coordinate {
    fn to_rational(&self) -> Result<Rational, FileError> {
        match self {
            Coordinate::Int(v) => Ok(Rational::from(*v)),
            Coordinate::Text(s) => parse_rational(s),
        }
    }

    fn from_rational(r: &Rational) -> Self {
        if r.is_int() {
            if let Ok(v) = i64::try_from(r.numerator()) {
                return Coordinate::Int(v);
            }
        }
        Coordinate::Text(format_rational(r))
    }
}

impl PolytopeFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let file: PolytopeFile = serde_json::from_str(text).map_err(|e| FileError::Parse(e.to_string()))?;
        file.check_shape()?;
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, FileError> {
        let text = std::fs::read_to_string(path).map_err(|e| FileError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn check_shape(&self) -> Result<(), FileError> {
        if !(1..=MAX_FILE_DIM).contains(&self.dim) {
            return Err(FileError::Dimension(format!("dim {} outside 1..={MAX_FILE_DIM}", self.dim)));
        }
        if self.vertices.is_empty() {
            return Err(FileError::Parse("no vertices".into()));
        }
        for (i, row) in self.vertices.iter().enumerate() {
            if row.len() != self.dim {
                return Err(FileError::Dimension(format!("row {i} has {} entries, expected {}", row.len(), self.dim)));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polytope files serialize")
    }

    /// The convex hull of the listed points.
    pub fn to_polytope(&self) -> Result<Polytope, FileError> {
        self.check_shape()?;
        let pts: Vec<RatVector> = self
            .vertices
            .iter()
            .map(|row| {
                let entries = row.iter().map(Coordinate::to_rational).collect::<Result<Vec<_>, _>>()?;
                RatVector::new(entries).map_err(|e| FileError::Dimension(e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        Polytope::convex_hull(&pts).map_err(|e| FileError::Dimension(e.to_string()))
    }

    pub fn from_polytope(p: &Polytope) -> Self {
        Self {
            dim: p.ambient_dim(),
            vertices: p.vertices().iter().map(|v| v.iter().map(Coordinate::from_rational).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_coordinates() {
        let f = PolytopeFile::parse(r#"{"dim": 2, "vertices": [[0, 0], ["3/2", 0], [0, "-4/6"]]}"#).unwrap();
        let p = f.to_polytope().unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert!(p.vertices().iter().any(|v| v[1] == fine_core::arith::rat(-2, 3)));
    }

    #[test]
    fn round_trip() {
        let text = r#"{"dim":2,"vertices":[[0,"1/2"],[3,0],["99999999999999999999",1]]}"#;
        let f = PolytopeFile::parse(text).unwrap();
        assert_eq!(PolytopeFile::parse(&f.to_json()).unwrap(), f);
        let p = f.to_polytope().unwrap();
        let g = PolytopeFile::from_polytope(&p);
        assert_eq!(g.to_polytope().unwrap(), p);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(PolytopeFile::parse(r#"{"dim": 2, "vertices": [[0, 0, 1]]}"#), Err(FileError::Dimension(_))));
        assert!(matches!(PolytopeFile::parse(r#"{"dim": 7, "vertices": [[0]]}"#), Err(FileError::Dimension(_))));
        assert!(matches!(
            PolytopeFile::parse(r#"{"dim": 2, "vertices": [[0, "1/0"]]}"#).unwrap().to_polytope(),
            Err(FileError::Parse(_))
        ));
        assert!(matches!(PolytopeFile::parse("not json"), Err(FileError::Parse(_))));
        assert!(matches!(PolytopeFile::parse(r#"{"dim": 2, "vertices": [[0, 1.5]]}"#), Err(FileError::Parse(_))));
    }

    #[test]
    fn formats() {
        assert_eq!(format_rational(&fine_core::arith::rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&fine_core::arith::rat(4, 2)), "2");
        assert_eq!(parse_rational(" 7 / 6 ").unwrap(), fine_core::arith::rat(7, 6));
        assert!(parse_rational("x").is_err());
    }
}
