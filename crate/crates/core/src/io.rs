//! graph6 encoding and the JSON edge-list input forms.

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeListJson, Graph, Hypergraph};
use crate::vertex_set::{VertexSet, MAX_UNIVERSE};

/// Encodes a graph in the standard graph6 format (no `>>graph6<<` header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n_vertices();
    let mut out = String::new();
    // n <= 64 always fits the one-byte size field (n <= 62) or the 4-byte form.
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decodes one graph6 line. `line_no` is used for error positions.
pub fn parse_graph6(text: &str, line_no: usize) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(line_no, 1, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                line_no,
                i + 1,
                format!("invalid graph6 byte {b:#04x}"),
            ));
        }
    }
    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::parse(line_no, 2, "unsupported graph6 size field"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_UNIVERSE {
        return Err(Error::parse(
            line_no,
            1,
            format!("{n} vertices exceeds the 64-vertex limit"),
        ));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let needed = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != needed {
        return Err(Error::parse(
            line_no,
            body_start + body.len().min(needed) + 1,
            format!(
                "expected {needed} data bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if nbits % 6 != 0 {
        let last = body[needed - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::parse(
                line_no,
                body_start + needed,
                "nonzero padding bits",
            ));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Parses a hypergraph from the JSON edge-list form.
pub fn parse_hypergraph_json(text: &str) -> Result<Hypergraph> {
    let j: EdgeListJson = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    Hypergraph::try_from(j)
}

/// Parses a graph from the JSON edge-list form; every edge must have two vertices.
pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let j: EdgeListJson = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    if let Some(e) = j.edges.iter().find(|e| e.len() != 2) {
        return Err(Error::InvalidParameter(format!(
            "graph edge {e:?} must have two vertices"
        )));
    }
    Graph::from_hypergraph(Hypergraph::try_from(j)?)
}

/// Accepts either graph6 or JSON; JSON is recognised by a leading `{`.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with('{') {
        parse_graph_json(t)
    } else {
        parse_graph6(t, 1)
    }
}

/// Parses a graph6 stream, one graph per nonblank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim(), i + 1))
        .collect()
}

pub fn graph_to_json(g: &Graph) -> EdgeListJson {
    EdgeListJson::from(g.hypergraph())
}

fn json_error(e: &serde_json::Error) -> Error {
    Error::parse(e.line(), e.column(), e.to_string())
}
