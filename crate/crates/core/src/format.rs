//! Plain-text digraph format.
//!
//! ```text
//! # comment lines start with '#'
//! 3
//! 0 4
//! 3 0
//! ```
//!
//! The first non-comment line holds `a`; every further non-empty line is one arc
//! `u v` (decimal, single space) under the fixed numbering. Duplicate arcs are
//! rejected. [`write_digraph`] emits arcs sorted by `(u, v)` with a trailing newline.

use thiserror::Error;

use crate::digraph::{BipartiteDigraph, Digraph, GraphError, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input: expected the partite set size on the first line")]
    MissingHeader,
    #[error("line {line}: expected a single positive integer, found {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected \"u v\", found {text:?}")]
    BadArc { line: usize, text: String },
    #[error("line {line}: duplicate arc {u}->{v}")]
    DuplicateArc { line: usize, u: usize, v: usize },
    #[error("line {line}: {source}")]
    InvalidArc {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("{0}")]
    Graph(#[from] GraphError),
}

impl ParseError {
    /// 1-based line number the error refers to, when there is one.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::BadHeader { line, .. }
            | ParseError::BadArc { line, .. }
            | ParseError::DuplicateArc { line, .. }
            | ParseError::InvalidArc { line, .. } => Some(*line),
            _ => None,
        }
    }
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_digraph(text: &str) -> Result<BipartiteDigraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let a = parse_index(header)
        .filter(|&a| a > 0)
        .ok_or_else(|| ParseError::BadHeader { line: header_line, text: header.to_string() })?;
    // Validates `a` before any arc so that range errors below are meaningful.
    BipartiteDigraph::new(a, std::iter::empty())?;

    let mut arcs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines {
        let bad = || ParseError::BadArc { line, text: l.to_string() };
        let (u, v) = l.split_once(' ').ok_or_else(bad)?;
        let (u, v) = (parse_index(u).ok_or_else(bad)?, parse_index(v).ok_or_else(bad)?);
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateArc { line, u, v });
        }
        BipartiteDigraph::new(a, [(VertexId(u), VertexId(v))])
            .map_err(|source| ParseError::InvalidArc { line, source })?;
        arcs.push((VertexId(u), VertexId(v)));
    }
    Ok(BipartiteDigraph::new(a, arcs)?)
}

pub fn write_digraph(d: &BipartiteDigraph) -> String {
    let mut out = format!("{}\n", d.part_size());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{} {}\n", u.0, v.0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cycle_with_comments() {
        let text = "# C6\n3\n3 0\n0 4\n\n4 1\n1 5\n# mid\n5 2\n2 3";
        let d = parse_digraph(text).unwrap();
        assert_eq!(d, BipartiteDigraph::cycle(3).unwrap());
        assert_eq!(write_digraph(&d), "3\n0 4\n1 5\n2 3\n3 0\n4 1\n5 2\n");
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_digraph("3\n3 x\n").unwrap_err();
        assert_eq!(err.line(), Some(2));
        assert!(err.to_string().starts_with("line 2:"));
        assert_eq!(parse_digraph("3\n0  3\n").unwrap_err().line(), Some(2));
        assert_eq!(parse_digraph("3\n0 3 1\n").unwrap_err().line(), Some(2));
        assert_eq!(parse_digraph("3\n-1 3\n").unwrap_err().line(), Some(2));
    }

    #[test]
    fn header_errors() {
        assert_eq!(parse_digraph(""), Err(ParseError::MissingHeader));
        assert_eq!(parse_digraph("# only\n"), Err(ParseError::MissingHeader));
        assert_eq!(parse_digraph("0\n").unwrap_err().line(), Some(1));
        assert_eq!(parse_digraph("3 3\n").unwrap_err().line(), Some(1));
        assert!(matches!(parse_digraph("40\n"), Err(ParseError::Graph(GraphError::TooLarge(80)))));
    }

    #[test]
    fn arc_level_errors() {
        assert_eq!(parse_digraph("3\n0 3\n0 3\n"), Err(ParseError::DuplicateArc { line: 3, u: 0, v: 3 }));
        assert_eq!(
            parse_digraph("2\n0 1\n"),
            Err(ParseError::InvalidArc { line: 2, source: GraphError::SamePartiteSet(0, 1) })
        );
        assert_eq!(
            parse_digraph("2\n0 9\n"),
            Err(ParseError::InvalidArc { line: 2, source: GraphError::OutOfRange(0, 9) })
        );
    }

    #[test]
    fn empty_arc_list() {
        let d = parse_digraph("4\n").unwrap();
        assert_eq!(d.arc_count(), 0);
        assert_eq!(write_digraph(&d), "4\n");
    }
}
