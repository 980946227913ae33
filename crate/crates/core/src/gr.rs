//! Reading and writing the PACE `.gr` text format.
//!
//! ```text
//! c optional comment
//! p tw <n> <m>
//! <u> <v>
//! ```
//!
//! Vertices are 1-based in the file and 0-based in memory.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let err = |line: usize, message: String| Error::Parse { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(err(line_no, "duplicate header".into()));
            }
            if tokens.len() != 4 || tokens[1] != "tw" {
                return Err(err(line_no, format!("malformed header {line:?}, expected `p tw <n> <m>`")));
            }
            let n = number(tokens[2]).ok_or_else(|| err(line_no, format!("bad vertex count {:?}", tokens[2])))?;
            let m = number(tokens[3]).ok_or_else(|| err(line_no, format!("bad edge count {:?}", tokens[3])))?;
            if n > MAX_VERTICES {
                return Err(err(line_no, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
            }
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or_else(|| err(line_no, "edge before `p tw` header".into()))?;
        if tokens.len() != 2 {
            return Err(err(line_no, format!("expected `<u> <v>`, got {line:?}")));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            let v = number(tok).ok_or_else(|| err(line_no, format!("bad vertex {tok:?}")))?;
            if v == 0 || v > n {
                return Err(err(line_no, format!("vertex {v} out of range 1..={n}")));
            }
            *slot = v - 1;
        }
        if ends[0] == ends[1] {
            return Err(err(line_no, format!("self-loop on vertex {}", ends[0] + 1)));
        }
        edges.push((ends[0], ends[1]));
    }

    let (n, m) = header.ok_or_else(|| err(0, "missing `p tw <n> <m>` header".into()))?;
    if edges.len() != m {
        return Err(err(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

fn number(tok: &str) -> Option<usize> {
    tok.parse().ok()
}

/// Serializes `g` with `u < v` edges in ascending order.
pub fn write_gr(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p tw {} {}", g.bound(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Family;
    use proptest::prelude::*;

    #[test]
    fn parses_path() {
        let g = parse_gr("p tw 3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g, Family::Path(3).generate().unwrap());
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let g = parse_gr("c hello\n\np tw 2 1\nc edge\n1 2\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn collapses_duplicates() {
        let g = parse_gr("p tw 2 2\n1 2\n2 1\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_self_loop_with_line() {
        match parse_gr("p tw 2 1\n1 1\n") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("p td 3 2\n", 1),
            ("p tw x 2\n", 1),
            ("1 2\n", 1),
            ("p tw 3 1\n1 4\n", 2),
            ("p tw 3 1\n1 2 3\n", 2),
            ("p tw 3 1\n0 2\n", 2),
            ("p tw 3 1\np tw 3 1\n", 2),
            ("p tw 3 2\n1 2\n", 0),
            ("", 0),
        ];
        for (text, want) in cases {
            match parse_gr(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn writer_is_sorted() {
        let g = Family::Cycle(4).generate().unwrap();
        assert_eq!(write_gr(&g), "p tw 4 4\n1 2\n1 4\n2 3\n3 4\n");
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..30, prob in 0.0f64..1.0, seed in any::<u64>()) {
            let g = Family::Gnp { n, prob, seed }.generate().unwrap();
            prop_assert_eq!(parse_gr(&write_gr(&g)).unwrap(), g);
        }
    }
}
