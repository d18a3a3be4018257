//! The structure text format.
//!
//! ```text
//! # P2, the directed path with two arcs
//! type 2
//! vertices 3
//! rel 0: 0 1 ; 1 2
//! ```
//!
//! `#` starts a comment, blank lines are ignored. The first two content
//! lines are `type` and `vertices`; every following line is a `rel` line.
//! Repeated `rel` lines for one kind are unioned and duplicate tuples dropped.

use std::fmt;
use std::str::FromStr;

use super::{Signature, Structure};
use crate::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected {what}, found `{token}`")))
}

pub fn parse(text: &str) -> Result<Structure> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, line) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `type` line"))?;
    let mut words = line.split_whitespace();
    if words.next() != Some("type") {
        return Err(parse_error(line_no, "first line must be `type <a1> <a2> ...`"));
    }
    let arities = words
        .map(|w| parse_number(line_no, w, "an arity"))
        .collect::<Result<Vec<_>>>()?;
    let sig = Signature::new(arities).map_err(|e| parse_error(line_no, e.to_string()))?;

    let (line_no, line) = lines
        .next()
        .ok_or_else(|| parse_error(line_no + 1, "missing `vertices` line"))?;
    let n = match line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["vertices", count] => parse_number(line_no, count, "a vertex count")?,
        _ => return Err(parse_error(line_no, "second line must be `vertices <n>`")),
    };

    let mut rels: Vec<Vec<Vec<usize>>> = vec![Vec::new(); sig.kinds()];
    for (line_no, line) in lines {
        let rest = line
            .strip_prefix("rel")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| parse_error(line_no, "expected `rel <kind>: <tuples>`"))?;
        let (kind, tuples) = rest
            .split_once(':')
            .ok_or_else(|| parse_error(line_no, "missing `:` after the relation kind"))?;
        let kind = parse_number(line_no, kind.trim(), "a relation kind")?;
        if kind >= sig.kinds() {
            return Err(parse_error(
                line_no,
                format!("relation kind {kind} not in a type with {} kinds", sig.kinds()),
            ));
        }
        for tuple in tuples.split(';') {
            let tuple = tuple.trim();
            if tuple.is_empty() {
                continue;
            }
            let entries = tuple
                .split_whitespace()
                .map(|w| parse_number(line_no, w, "a vertex index"))
                .collect::<Result<Vec<_>>>()?;
            rels[kind].push(entries);
        }
    }
    Structure::new(sig, n, rels)
}

impl FromStr for Structure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type {}", self.sig())?;
        writeln!(f, "vertices {}", self.n())?;
        for (kind, rel) in self.relations().iter().enumerate() {
            if rel.is_empty() {
                continue;
            }
            write!(f, "rel {kind}:")?;
            for (i, t) in rel.iter().enumerate() {
                f.write_str(if i == 0 { " " } else { " ; " })?;
                for (j, v) in t.iter().enumerate() {
                    if j > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{v}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_example() {
        let s = parse("type 2\nvertices 3\nrel 0: 0 1 ; 1 2\n").unwrap();
        assert_eq!(s, Structure::digraph(3, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn comments_blank_lines_and_repeated_kinds() {
        let text = "# header\n\ntype 2 3   # two kinds\nvertices 3\nrel 0: 0 1\nrel 1: 0 1 2\nrel 0: 1 2 ; 0 1\n";
        let s = parse(text).unwrap();
        assert_eq!(s.relation(0), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(s.relation(1), &[vec![0, 1, 2]]);
    }

    #[test]
    fn serialization_is_stable() {
        let s = parse("type 2\nvertices 3\nrel 0: 1 2 ; 0 1\n").unwrap();
        assert_eq!(s.to_text(), "type 2\nvertices 3\nrel 0: 0 1 ; 1 2\n");
        assert_eq!(parse(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse("type 2\nvertices 2\n\nrel 0: 0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = parse("type 2\nvertices 2\nrel 1: 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse("vertices 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn validation_errors_pass_through() {
        assert_eq!(parse("type 2\nvertices 0\n"), Err(Error::EmptyBaseSet));
        assert!(matches!(
            parse("type 3\nvertices 2\nrel 0: 0 1\n"),
            Err(Error::ArityMismatch { .. })
        ));
    }
}
