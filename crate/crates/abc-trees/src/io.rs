//! Plain-text serialization of trees.
//!
//! Format: line 1 holds the vertex count `n`; each of the next `n − 1` lines
//! holds one edge as two 0-based vertex ids separated by a space. Output is
//! byte-exact: edges in sorted order, one trailing newline.

use crate::error::{Error, Result};
use crate::graph::tree::Tree;

/// Parse a tree from the text format. Trailing blank lines are tolerated;
/// anything else out of place reports the 1-based line number.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing vertex count"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| err(1, format!("invalid vertex count {header:?}")))?;
    if n == 0 {
        return Err(err(1, "vertex count must be at least 1"));
    }

    let mut edges = Vec::with_capacity(n - 1);
    let mut trailing_blank: Option<usize> = None;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            trailing_blank.get_or_insert(lineno);
            continue;
        }
        if let Some(blank) = trailing_blank {
            return Err(err(blank, "blank line before the last edge"));
        }
        if edges.len() == n - 1 {
            return Err(err(lineno, format!("unexpected extra line {line:?}")));
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(err(lineno, format!("expected \"u v\", got {line:?}"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| err(lineno, format!("invalid vertex id {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| err(lineno, format!("invalid vertex id {v:?}")))?;
        edges.push((u, v));
    }
    if edges.len() != n - 1 {
        return Err(err(
            text.lines().count(),
            format!("expected {} edges, found {}", n - 1, edges.len()),
        ));
    }
    Tree::new(n, edges)
}

/// Render a tree in the text format (sorted edges, trailing newline).
pub fn format_tree(t: &Tree) -> String {
    let mut out = format!("{}\n", t.n());
    for &(u, v) in t.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t = Tree::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let text = format_tree(&t);
        assert_eq!(text, "5\n0 1\n1 2\n1 3\n3 4\n");
        let back = parse_tree(&text).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn single_vertex() {
        assert_eq!(parse_tree("1\n").unwrap().n(), 1);
        assert_eq!(format_tree(&parse_tree("1").unwrap()), "1\n");
    }

    #[test]
    fn tolerates_trailing_blank_lines() {
        let t = parse_tree("2\n0 1\n\n\n").unwrap();
        assert_eq!(t.n(), 2);
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("", 1),
            ("x\n0 1\n", 1),
            ("3\n0 1\n0 two\n", 3),
            ("3\n0 1\n0 2 9\n", 3),
            ("2\n0 1\n1 0\n", 3),
            ("4\n0 1\n1 2\n", 3), // missing an edge
        ];
        for (text, want_line) in cases {
            match parse_tree(text) {
                Err(Error::Parse { line, .. }) => {
                    assert_eq!(line, want_line, "input {text:?}")
                }
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn structural_errors_pass_through() {
        // Valid syntax, invalid tree: disconnected.
        assert!(matches!(
            parse_tree("4\n0 1\n2 3\n0 1\n"),
            Err(Error::InvalidGraph(_))
        ));
    }
}
