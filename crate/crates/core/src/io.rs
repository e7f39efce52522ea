//! Edgelist and graph6 readers and writers.
//!
//! Edgelist: the first non-comment line holds `n`; every further line is an
//! edge `u v` with 1-based vertices. `#` starts a comment anywhere on a line.
//!
//! graph6: the standard short form (`n <= 62`), optionally prefixed with the
//! `>>graph6<<` header.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count expressible in the one-byte graph6 size field.
pub const GRAPH6_MAX_N: usize = 62;

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Edgelist,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "graph6" => Ok(Format::Graph6),
            other => Err(Error::InvalidArgument(format!("unknown format '{other}'"))),
        }
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::Edgelist => Ok(to_edgelist(g)),
        Format::Graph6 => to_graph6(g).map(|mut s| {
            s.push('\n');
            s
        }),
    }
}

pub fn parse_edgelist(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("expected a non-negative integer, found '{s}'") })
        };
        match graph.as_mut() {
            None => {
                if fields.len() != 1 {
                    return Err(Error::Parse { line, msg: "expected the vertex count alone".into() });
                }
                let n = parse(fields[0])?;
                if n == 0 {
                    return Err(Error::EmptyGraph);
                }
                graph = Some(Graph::empty(n)?);
            }
            Some(g) => {
                if fields.len() != 2 {
                    return Err(Error::Parse { line, msg: format!("expected 'u v', found '{content}'") });
                }
                let (u, v) = (parse(fields[0])?, parse(fields[1])?);
                for w in [u, v] {
                    if w == 0 || w > g.n() {
                        return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
                    }
                }
                g.try_add_edge(u - 1, v - 1)?;
            }
        }
    }
    graph.ok_or(Error::Parse { line: 0, msg: "missing vertex count".into() })
}

/// `n` on the first line, then one `u v` line per edge (1-based, `u < v`,
/// lexicographic).
pub fn to_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text.trim_ascii();
    if let Some(rest) = bytes.strip_prefix(GRAPH6_HEADER) {
        bytes = rest;
    }
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if first == 126 {
        return Err(Error::Graph6(format!("only graphs with n <= {GRAPH6_MAX_N} are supported")));
    }
    if !(63..126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first}")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for n={n}, found {}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("invalid data byte {byte}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!("only graphs with n <= {GRAPH6_MAX_N} are supported")));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgelist_examples() {
        let p3 = parse_edgelist(b"3\n1 2\n2 3").unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());
        let k1 = parse_edgelist(b"1").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let commented = parse_edgelist(b"# header\n\n3 # n\n1 2 # e\n  2 3\n").unwrap();
        assert_eq!(commented, p3);
    }

    #[test]
    fn edgelist_errors() {
        assert_eq!(parse_edgelist(b"0"), Err(Error::EmptyGraph));
        assert_eq!(
            parse_edgelist(b"3\n1 4"),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(parse_edgelist(b"3\n0 1"), Err(Error::VertexOutOfRange { vertex: 0, n: 3 }));
        assert_eq!(parse_edgelist(b"3\n1 2\n2 1"), Err(Error::DuplicateEdge { u: 1, v: 2 }));
        assert!(matches!(parse_edgelist(b"3\n1 2 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edgelist(b"3\n1 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edgelist(b"# nothing\n"), Err(Error::Parse { .. })));
        assert_eq!(parse_edgelist(b"2\n2 2"), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn graph6_star() {
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
        assert_eq!(parse_graph6(b">>graph6<<D?{\n").unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6(b"").is_err());
        assert_eq!(parse_graph6(b"?"), Err(Error::EmptyGraph));
        assert!(parse_graph6(b"~??~").is_err());
        assert!(parse_graph6(b"D?").is_err());
        assert!(parse_graph6(b"D?{{").is_err());
        assert!(to_graph6(&Graph::empty(63).unwrap()).is_err());
    }
}
