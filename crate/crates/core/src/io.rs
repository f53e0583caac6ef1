//! Line-oriented text formats.
//!
//! | file    | record                      |
//! |---------|-----------------------------|
//! | region  | `F <a> <b> <U\|D>`          |
//! | `.rdist`| `V <a> <b> <D0\|D1\|D2>`     |
//! | `.pdist`| `F <a> <b> <U\|D> <0\|1>`    |
//! | `.pzl`  | `F <a> <b> <U\|D> <X\|Y\|Z>` |
//!
//! Blank lines and lines starting with `#` are skipped. A key appearing twice
//! is an error. Writers emit records in ascending key order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::distributions::{Parity, ParityDistribution, RootDistribution};
use crate::lattice::{AxialPoint, Direction, Face, Orientation, Region};
use crate::linkgraph::Label;
use crate::pauli::PauliLabelling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate record for {key}")]
    Duplicate { line: usize, key: String },
}

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn expect_shape(line: usize, tokens: &[&str], tag: &str, len: usize) -> Result<(), FormatError> {
    if tokens[0] != tag {
        return Err(syntax(line, format!("expected record tag `{tag}`, found `{}`", tokens[0])));
    }
    if tokens.len() != len {
        return Err(syntax(line, format!("expected {len} fields, found {}", tokens.len())));
    }
    Ok(())
}

fn int(line: usize, s: &str) -> Result<i32, FormatError> {
    s.parse().map_err(|_| syntax(line, format!("`{s}` is not an integer")))
}

fn face(line: usize, tokens: &[&str]) -> Result<Face, FormatError> {
    let a = int(line, tokens[1])?;
    let b = int(line, tokens[2])?;
    let orientation: Orientation = tokens[3]
        .parse()
        .map_err(|_| syntax(line, format!("`{}` is not an orientation (U or D)", tokens[3])))?;
    Ok(Face { a, b, orientation })
}

pub fn parse_region(text: &str) -> Result<Region, FormatError> {
    let mut faces = BTreeSet::new();
    for (line, tokens) in records(text) {
        expect_shape(line, &tokens, "F", 4)?;
        let f = face(line, &tokens)?;
        if !faces.insert(f) {
            return Err(FormatError::Duplicate { line, key: f.to_string() });
        }
    }
    Ok(Region::new(faces))
}

pub fn write_region(region: &Region) -> String {
    let mut out = String::new();
    for f in region.faces() {
        let _ = writeln!(out, "F {} {} {}", f.a, f.b, f.orientation.symbol());
    }
    out
}

pub fn parse_root_distribution(text: &str) -> Result<RootDistribution, FormatError> {
    let mut delta = RootDistribution::new();
    for (line, tokens) in records(text) {
        expect_shape(line, &tokens, "V", 4)?;
        let p = AxialPoint::new(int(line, tokens[1])?, int(line, tokens[2])?);
        let d: Direction = tokens[3]
            .parse()
            .map_err(|_| syntax(line, format!("`{}` is not a direction (D0, D1 or D2)", tokens[3])))?;
        if delta.set(p, d).is_some() {
            return Err(FormatError::Duplicate { line, key: p.to_string() });
        }
    }
    Ok(delta)
}

pub fn write_root_distribution(delta: &RootDistribution) -> String {
    let mut out = String::new();
    for (p, d) in delta.iter() {
        let _ = writeln!(out, "V {} {} {}", p.a, p.b, d);
    }
    out
}

pub fn parse_parity(text: &str) -> Result<ParityDistribution, FormatError> {
    let mut parity = ParityDistribution::new();
    for (line, tokens) in records(text) {
        expect_shape(line, &tokens, "F", 5)?;
        let f = face(line, &tokens)?;
        let p = match tokens[4] {
            "0" => Parity::Even,
            "1" => Parity::Odd,
            other => return Err(syntax(line, format!("`{other}` is not a parity (0 or 1)"))),
        };
        if parity.set(f, p).is_some() {
            return Err(FormatError::Duplicate { line, key: f.to_string() });
        }
    }
    Ok(parity)
}

pub fn write_parity(parity: &ParityDistribution) -> String {
    let mut out = String::new();
    for (f, p) in parity.iter() {
        let _ = writeln!(out, "F {} {} {} {}", f.a, f.b, f.orientation.symbol(), p);
    }
    out
}

pub fn parse_labelling(text: &str) -> Result<PauliLabelling, FormatError> {
    let mut labels = PauliLabelling::new();
    for (line, tokens) in records(text) {
        expect_shape(line, &tokens, "F", 5)?;
        let f = face(line, &tokens)?;
        let l: Label = tokens[4].parse().map_err(|e: String| syntax(line, e))?;
        if labels.set(f, l).is_some() {
            return Err(FormatError::Duplicate { line, key: f.to_string() });
        }
    }
    Ok(labels)
}

pub fn write_labelling(labels: &PauliLabelling) -> String {
    let mut out = String::new();
    for (f, l) in labels.iter() {
        let _ = writeln!(out, "F {} {} {} {}", f.a, f.b, f.orientation.symbol(), l);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let r = parse_region("# header\n\nF 0 0 U\n  F -1 2 D  \n").unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&Face::down(-1, 2)));
    }

    #[test]
    fn duplicates_are_rejected() {
        let err = parse_root_distribution("V 0 0 D0\nV 0 0 D1\n").unwrap_err();
        assert_eq!(err, FormatError::Duplicate { line: 2, key: "(0,0)".into() });
        assert!(matches!(parse_parity("F 0 0 U 0\nF 0 0 U 1\n"), Err(FormatError::Duplicate { .. })));
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(parse_region("F 0 0 X\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_parity("F 0 0 U 2\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse_root_distribution("V 0 x D0\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse_labelling("F 0 0 U W\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse_region("V 0 0 U\n"), Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn writers_sort_records() {
        let r = Region::new([Face::down(1, 0), Face::up(1, 0), Face::up(0, 5)]);
        assert_eq!(write_region(&r), "F 0 5 U\nF 1 0 U\nF 1 0 D\n");
    }
}
