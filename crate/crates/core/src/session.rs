//! Session files: a ring, an optional grading and named objects.
//!
//! ```text
//! # comments run to the end of the line
//! ring QQ[x,y]
//! grading [[1,1]]
//! ideal I = x^2, x*y, y^3, x - y^2
//! points P = (0,1); (0,2); (0,3)
//! matrix A = gfield GF(7) rank 2 support (1,0; 0,1) | rowdeg (0,0) | coldeg (0,0) | row 3*e(0,0)
//! ```
//!
//! Declarations are one per line, and a name must be declared before use.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gradedfield::{format_matrix, parse_matrix, HomogeneousMatrix};
use crate::harness::PointConfiguration;
use crate::ideal::Ideal;
use crate::parse::{format_grading, parse_generators, parse_grading, parse_ring};
use crate::ring::{GradingMap, RingSpec};
use crate::scalar::Field;

#[derive(Clone, Debug, Default)]
pub struct SessionFile {
    pub ring: Option<Arc<RingSpec>>,
    pub grading: Option<GradingMap>,
    pub ideals: Vec<(String, Ideal)>,
    pub points: Vec<(String, PointConfiguration)>,
    pub matrices: Vec<(String, HomogeneousMatrix)>,
}

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position,
            message: format!("line {line}: {message}"),
        },
        Error::Usage(m) => Error::Usage(format!("line {line}: {m}")),
        Error::Input(m) => Error::Input(format!("line {line}: {m}")),
        Error::Precondition(m) => Error::Precondition(format!("line {line}: {m}")),
        Error::Dimension(m) => Error::Dimension(format!("line {line}: {m}")),
        Error::DivisionByZero => Error::Input(format!("line {line}: division by zero")),
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl SessionFile {
    pub fn parse(text: &str) -> Result<SessionFile> {
        let mut session = SessionFile::default();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            session.declare(line).map_err(|e| at_line(index + 1, e))?;
        }
        Ok(session)
    }

    fn declare(&mut self, line: &str) -> Result<()> {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "ring" => {
                if self.ring.is_some() {
                    return Err(Error::Input("ring declared twice".into()));
                }
                self.ring = Some(parse_ring(rest)?);
            }
            "grading" => {
                let ring = self.require_ring("grading")?;
                self.grading = Some(parse_grading(rest, ring.nvars())?);
            }
            "ideal" | "points" | "matrix" => {
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::parse(1, format!("expected `{keyword} NAME = ...`")))?;
                let name = name.trim();
                if !valid_name(name) {
                    return Err(Error::parse(1, format!("invalid name `{name}`")));
                }
                if self.is_declared(name) {
                    return Err(Error::Input(format!("`{name}` declared twice")));
                }
                let body = body.trim();
                match keyword {
                    "ideal" => {
                        let ring = self.require_ring("ideal")?;
                        let ideal = Ideal::new(&ring, parse_generators(body, &ring)?)?;
                        self.ideals.push((name.to_string(), ideal));
                    }
                    "points" => {
                        let field = self.ring.as_ref().map_or(Field::Rational, |r| r.field());
                        self.points
                            .push((name.to_string(), PointConfiguration::parse(body, field)?));
                    }
                    _ => {
                        let m = parse_matrix(body)?;
                        m.validate()?;
                        self.matrices.push((name.to_string(), m));
                    }
                }
            }
            other => return Err(Error::parse(1, format!("unknown declaration `{other}`"))),
        }
        Ok(())
    }

    fn require_ring(&self, what: &str) -> Result<Arc<RingSpec>> {
        self.ring
            .clone()
            .ok_or_else(|| Error::Input(format!("{what} declared before the ring")))
    }

    fn is_declared(&self, name: &str) -> bool {
        self.ideals.iter().any(|(n, _)| n == name)
            || self.points.iter().any(|(n, _)| n == name)
            || self.matrices.iter().any(|(n, _)| n == name)
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn point_configuration(&self, name: &str) -> Option<&PointConfiguration> {
        self.points.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn matrix(&self, name: &str) -> Option<&HomogeneousMatrix> {
        self.matrices
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
    }
}

impl PartialEq for SessionFile {
    fn eq(&self, other: &Self) -> bool {
        let same_ideals = self.ideals.len() == other.ideals.len()
            && self
                .ideals
                .iter()
                .zip(&other.ideals)
                .all(|((a, i), (b, j))| a == b && i.generators() == j.generators());
        self.ring == other.ring
            && self.grading == other.grading
            && same_ideals
            && self.points == other.points
            && self.matrices == other.matrices
    }
}

impl fmt::Display for SessionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.ring {
            writeln!(f, "ring {r}")?;
        }
        if let Some(g) = &self.grading {
            writeln!(f, "grading {}", format_grading(g))?;
        }
        for (name, i) in &self.ideals {
            writeln!(f, "ideal {name} = {i}")?;
        }
        for (name, p) in &self.points {
            writeln!(f, "points {name} = {p}")?;
        }
        for (name, m) in &self.matrices {
            writeln!(
                f,
                "matrix {name} = {}",
                format_matrix(m).replace('\n', " | ")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# worked examples
ring QQ[x,y]
grading [[1,1]]
ideal I = x^2, x*y, y^3, x - y^2   # not graded
ideal J = x^4, x^2*y^2, y^4, x^3*y - x*y^3
points P = (0,1); (0,2); (1/2,-3)
matrix A = gfield GF(7) rank 2 support (1,0; 0,1) | rowdeg (0,0); (1,0) | coldeg (0,0) | row 1*e(0,0) | row 3*e(1,0)
";

    #[test]
    fn parses_every_declaration() {
        let s = SessionFile::parse(SAMPLE).unwrap();
        assert_eq!(s.ring.as_ref().unwrap().to_string(), "QQ[x,y]");
        assert_eq!(s.ideal("I").unwrap().generators().len(), 4);
        assert_eq!(s.point_configuration("P").unwrap().len(), 3);
        assert_eq!(s.matrix("A").unwrap().rows(), 2);
        assert!(s.ideal("K").is_none());
    }

    #[test]
    fn round_trip() {
        let s = SessionFile::parse(SAMPLE).unwrap();
        let printed = s.to_string();
        let again = SessionFile::parse(&printed).unwrap();
        assert_eq!(again, s);
        assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn errors_name_the_line() {
        let err = SessionFile::parse("ideal I = x").unwrap_err();
        assert!(matches!(err, Error::Input(ref m) if m.starts_with("line 1")));
        let err = SessionFile::parse("ring QQ[x]\nideal I = x\nideal I = x^2").unwrap_err();
        assert!(matches!(err, Error::Input(ref m) if m.starts_with("line 3")));
        let err = SessionFile::parse("ring QQ[x]\nideal I = x +").unwrap_err();
        assert!(matches!(err, Error::Parse { ref message, .. } if message.starts_with("line 2")));
        assert!(SessionFile::parse("ring QQ[x]\nfoo bar").is_err());
    }
}
