//! Graph file formats. Edge lists are read and written; DIMACS and graph6
//! are read-only.
//!
//! Edge list: one `u v` pair per line, 0-based, whitespace separated. `#`
//! starts a comment. A `# n=<count>` comment fixes the vertex count so that
//! trailing isolated vertices survive a round trip; without it the count is
//! one more than the largest id.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Edgelist,
    Dimacs,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "dimacs" => Ok(Format::Dimacs),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Graph6 => parse_graph6(text),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Re-tags a graph construction error with the offending line.
fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::InvalidInput(msg) => parse_err(line, msg),
        Error::VertexOutOfRange { vertex, n } => parse_err(line, format!("vertex {vertex} out of range (n = {n})")),
        other => other,
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(pos) => (&raw[..pos], Some(&raw[pos + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.trim().strip_prefix("n=") {
                let n = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count {rest:?}")))?;
                declared_n = Some(n);
            }
        }
        let mut fields = body.split_whitespace();
        let Some(a) = fields.next() else { continue };
        let b = fields.next().ok_or_else(|| parse_err(line_no, "expected two vertex ids"))?;
        if fields.next().is_some() {
            return Err(parse_err(line_no, "trailing fields after edge"));
        }
        let u = a.parse::<usize>().map_err(|_| parse_err(line_no, format!("bad vertex id {a:?}")))?;
        let v = b.parse::<usize>().map_err(|_| parse_err(line_no, format!("bad vertex id {b:?}")))?;
        edges.push((line_no, u, v));
    }
    let implied = edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < implied => return Err(parse_err(0, format!("declared n={n} but ids reach {}", implied - 1))),
        Some(n) => n,
        None => implied,
    };
    let mut g = Graph::new(n);
    for (line, u, v) in edges {
        g.add_edge(u, v).map_err(|e| at_line(line, e))?;
    }
    Ok(g)
}

/// DIMACS `p edge n m` / `e u v` with 1-based ids.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(parse_err(line_no, "duplicate problem line"));
                }
                let _kind = fields.next().ok_or_else(|| parse_err(line_no, "missing problem kind"))?;
                let n = fields
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(line_no, "missing vertex count"))?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let graph = g.as_mut().ok_or_else(|| parse_err(line_no, "edge before problem line"))?;
                let mut id = || -> Result<usize> {
                    let v = fields
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| parse_err(line_no, "expected two vertex ids"))?;
                    v.checked_sub(1).ok_or_else(|| parse_err(line_no, "DIMACS ids are 1-based"))
                };
                let u = id()?;
                let v = id()?;
                graph.add_edge(u, v).map_err(|e| at_line(line_no, e))?;
            }
            Some(other) => return Err(parse_err(line_no, format!("unknown line kind {other:?}"))),
        }
    }
    g.ok_or_else(|| parse_err(0, "no problem line"))
}

/// graph6, first non-empty line only. The optional `>>graph6<<` header is skipped.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).ok_or_else(|| parse_err(0, "empty graph6 input"))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(parse_err(1, format!("byte {b} outside graph6 range")))
            }
        })
        .collect::<Result<_>>()?;
    let (n, rest) = match bytes.first() {
        None => return Err(parse_err(1, "missing vertex count")),
        Some(&63) => {
            if bytes.get(1) == Some(&63) {
                if bytes.len() < 8 {
                    return Err(parse_err(1, "truncated vertex count"));
                }
                let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | b as usize);
                (n, &bytes[8..])
            } else {
                if bytes.len() < 4 {
                    return Err(parse_err(1, "truncated vertex count"));
                }
                let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | b as usize);
                (n, &bytes[4..])
            }
        }
        Some(&b) => (b as usize, &bytes[1..]),
    };
    let needed_bits = n * n.saturating_sub(1) / 2;
    if rest.len() * 6 < needed_bits {
        return Err(parse_err(1, "truncated adjacency data"));
    }
    let bit = |k: usize| (rest[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v).map_err(|e| at_line(1, e))?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Canonical edge list: `# n=<count>` header, then edges with `u < v` in
/// lexicographic order.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgelist_basic() {
        let g = parse_edgelist("# a comment\n0 1\n1 2 # trailing\n\n2 0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn edgelist_rejects_self_loop() {
        let err = parse_edgelist("0 1\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn edgelist_rejects_duplicate_and_garbage() {
        assert!(parse_edgelist("0 1\n1 0\n").is_err());
        assert!(parse_edgelist("0 x\n").is_err());
        assert!(parse_edgelist("0\n").is_err());
        assert!(parse_edgelist("0 1 2\n").is_err());
        assert!(parse_edgelist("# n=2\n0 4\n").is_err());
    }

    #[test]
    fn edgelist_header_keeps_isolated_vertices() {
        let g = parse_edgelist("# n=5\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn dimacs_basic() {
        let g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(0, 2));
        assert!(parse_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // C5 and the Petersen graph.
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.m(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let petersen = parse_graph6(">>graph6<<IheA@GUAo").unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.m(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
    }

    #[test]
    fn graph6_rejects_truncated() {
        assert!(parse_graph6("D").is_err());
        assert!(parse_graph6("").is_err());
    }
}
