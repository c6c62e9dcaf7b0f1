//! graph6 (short form) and plain edge-list I/O.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const BIAS: u8 = 63;
const MAX_SHORT_N: usize = 62;

/// Parses one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored. Only the short form (`n <= 62`) is supported.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    let (&first, body) = s.split_first().ok_or_else(|| Error::MalformedGraph6("empty input".into()))?;
    if first == 126 {
        return Err(Error::UnsupportedLongForm);
    }
    if !(BIAS..126).contains(&first) {
        return Err(Error::MalformedGraph6(format!("invalid header byte {first}")));
    }
    let n = (first - BIAS) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut values = Vec::with_capacity(expected);
    for &byte in body {
        if !(BIAS..=126).contains(&byte) {
            return Err(Error::MalformedGraph6(format!("invalid data byte {byte}")));
        }
        values.push(byte - BIAS);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                b.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Encodes a graph in graph6 short form.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_N {
        return Err(Error::UnsupportedLongForm);
    }
    let mut out = vec![n as u8 + BIAS];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}

/// Parses an edge list: one `u v` pair per line (0-based), `#` starts a
/// comment, blank lines are ignored, and the first non-comment line may be
/// `n=<count>` to declare isolated vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::EdgeList { line: line_no, msg };
        if let Some(count) = line.strip_prefix("n=") {
            if seen_content {
                return Err(err("`n=` must be the first non-comment line".into()));
            }
            declared = Some(count.trim().parse().map_err(|_| err(format!("bad vertex count `{count}`")))?);
            seen_content = true;
            continue;
        }
        seen_content = true;
        let mut parts = line.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = parts.next().ok_or_else(|| err("expected two endpoints".into()))?;
            tok.parse().map_err(|_| err(format!("bad vertex `{tok}`")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if parts.next().is_some() {
            return Err(err("trailing tokens after edge".into()));
        }
        edges.push((u, v, line_no));
    }
    let max_vertex = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < max_vertex => {
            let line = edges.iter().find(|&&(u, v, _)| u.max(v) >= n).map_or(0, |e| e.2);
            return Err(Error::EdgeList { line, msg: format!("endpoint out of range for n={n}") });
        }
        Some(n) => n,
        None => max_vertex,
    };
    let mut b = GraphBuilder::new(n);
    for (u, v, line) in edges {
        b.add_edge(u, v).map_err(|e| Error::EdgeList { line, msg: e.to_string() })?;
    }
    Ok(b.build())
}

/// Writes `n=<count>` followed by one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
