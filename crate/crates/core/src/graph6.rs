//! graph6 encoding and a plain edge-list text format.
//!
//! graph6 packs the upper triangle column by column (x_{0,1}, x_{0,2},
//! x_{1,2}, x_{0,3}, ...) into 6-bit groups offset by 63.  The edge-list
//! format is line based: optional `#` comments, one leading line holding
//! the vertex count, then one `u v` pair per line with 0-based labels.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn g6_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

/// Parses one graph6 string.  Leading `>>graph6<<` headers and surrounding
/// whitespace are accepted.
pub fn parse_graph6(input: &str) -> Result<Graph> {
    let mut s = input.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty graph6 string"));
    }
    let pos: usize;
    let n: usize = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            let mut v: u64 = 0;
            for i in 2..8 {
                let b = *bytes
                    .get(i)
                    .ok_or_else(|| g6_err(i, "truncated 36-bit vertex count"))?;
                if !(63..=126).contains(&b) {
                    return Err(g6_err(i, format!("byte {b} outside graph6 range")));
                }
                v = (v << 6) | u64::from(b - 63);
            }
            pos = 8;
            usize::try_from(v).map_err(|_| g6_err(2, "vertex count overflows usize"))?
        } else {
            let mut v: u32 = 0;
            for i in 1..4 {
                let b = *bytes
                    .get(i)
                    .ok_or_else(|| g6_err(i, "truncated 18-bit vertex count"))?;
                if !(63..=126).contains(&b) {
                    return Err(g6_err(i, format!("byte {b} outside graph6 range")));
                }
                v = (v << 6) | u32::from(b - 63);
            }
            pos = 4;
            v as usize
        }
    } else {
        let b = bytes[0];
        if !(63..=125).contains(&b) {
            return Err(g6_err(0, format!("byte {b} is not a graph6 vertex count")));
        }
        pos = 1;
        (b - 63) as usize
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() - pos != byte_count {
        return Err(g6_err(
            pos,
            format!(
                "expected {byte_count} payload bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut bits = Vec::with_capacity(byte_count * 6);
    for (i, &b) in bytes[pos..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(pos + i, format!("byte {b} outside graph6 range")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                g.set_edge(u, v, true);
            }
            idx += 1;
        }
    }
    if bits[idx..].iter().any(|&b| b) {
        return Err(g6_err(pos + idx / 6, "nonzero padding bits"));
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for &b in chunk {
            v = (v << 1) | u8::from(b);
        }
        out.push(v + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the line-based edge-list format.
pub fn parse_edge_list(input: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                let count_field = match fields.as_slice() {
                    [one] => one,
                    ["n", one] => one,
                    _ => {
                        return Err(Error::EdgeList {
                            line: lineno + 1,
                            msg: "first line must hold the vertex count".into(),
                        })
                    }
                };
                n = Some(count_field.parse().map_err(|_| Error::EdgeList {
                    line: lineno + 1,
                    msg: format!("invalid vertex count {count_field:?}"),
                })?);
            }
            Some(limit) => {
                if fields.len() != 2 {
                    return Err(Error::EdgeList {
                        line: lineno + 1,
                        msg: format!("expected `u v`, found {line:?}"),
                    });
                }
                let mut pair = [0usize; 2];
                for (slot, f) in pair.iter_mut().zip(&fields) {
                    *slot = f.parse().map_err(|_| Error::EdgeList {
                        line: lineno + 1,
                        msg: format!("invalid vertex label {f:?}"),
                    })?;
                }
                let (u, v) = (pair[0], pair[1]);
                if u >= limit || v >= limit {
                    return Err(Error::EdgeList {
                        line: lineno + 1,
                        msg: format!("edge ({u}, {v}) out of range for {limit} vertices"),
                    });
                }
                if u == v {
                    return Err(Error::EdgeList {
                        line: lineno + 1,
                        msg: format!("loop at vertex {u} rejected"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    match n {
        Some(n) => Graph::with_edges(n, &edges),
        None => Err(Error::EdgeList {
            line: 0,
            msg: "no vertex count line found".into(),
        }),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# {} vertices, {} edges\n{}\n", g.n(), g.num_edges(), g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Accepts either format: content whose first meaningful line is a comment
/// or a bare integer is treated as an edge list, anything else as graph6.
pub fn parse_auto(input: &str) -> Result<Graph> {
    let first = input
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let looks_like_edge_list = first.starts_with('#')
        || first.chars().all(|c| c.is_ascii_digit())
        || (first.starts_with("n ") && first.len() > 2);
    if looks_like_edge_list && !first.is_empty() {
        parse_edge_list(input)
    } else {
        parse_graph6(input)
    }
}
