//! Reading graphs from files and from the compact tokens accepted by
//! `bei construct`.

use std::fs;
use std::io::Read;

use bei_core::io::{parse_edgelist, parse_graph, parse_graph6, Format};
use bei_core::{Error, Graph, Result};

/// Reads a graph file (`-` for stdin). Without an explicit format an
/// edgelist is tried first, then graph6.
pub fn read_graph(path: &str, format: Option<Format>) -> Result<Graph> {
    let bytes = if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Error::InvalidArgument(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read(path).map_err(|e| Error::InvalidArgument(format!("{path}: {e}")))?
    };
    match format {
        Some(f) => parse_graph(&bytes, f),
        None => parse_edgelist(&bytes).or_else(|edgelist_err| parse_graph6(&bytes).map_err(|_| edgelist_err)),
    }
}

fn number(s: &str, token: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::InvalidArgument(format!("bad graph token {token:?}")))
}

/// Parses `K4`, `P5`, `C6`, `E3` (edgeless), `K2,3` (complete
/// multipartite) and `A+B` (disjoint union). Anything else is read as a
/// graph file.
pub fn parse_token(token: &str, format: Option<Format>) -> Result<Graph> {
    if token.contains('+') {
        let parts = token.split('+').map(|t| parse_token(t, format)).collect::<Result<Vec<_>>>()?;
        return Graph::disjoint_union(&parts);
    }
    let mut chars = token.chars();
    let head = chars.next();
    let rest = chars.as_str();
    let named = !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit() || c == ',');
    match head {
        Some('K') if named && rest.contains(',') => {
            let parts = rest.split(',').map(|p| number(p, token)).collect::<Result<Vec<_>>>()?;
            Graph::complete_multipartite(&parts)
        }
        Some(c @ ('K' | 'P' | 'C' | 'E')) if named && !rest.contains(',') => {
            let n = number(rest, token)?;
            match c {
                'K' => Graph::complete(n),
                'P' => Graph::path(n),
                'C' => Graph::cycle(n),
                _ => Graph::edgeless(n),
            }
        }
        _ => read_graph(token, format),
    }
}
