//! graph6 and plain edge-list text formats.
//!
//! graph6 is the short form only: one size byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), …`, six bits per byte, most significant
//! bit first, zero-padded, each byte offset by 63.

use super::{bit, Graph};
use crate::error::{Error, Result};

pub const GRAPH6_MAX_ORDER: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::CapacityExceeded {
            what: "graph6 order",
            limit: GRAPH6_MAX_ORDER as u64,
            requested: n as u64,
        });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes one graph6 record. A single trailing newline is accepted.
pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    let s = input.strip_suffix(b"\n").unwrap_or(input);
    let s = s.strip_suffix(b"\r").unwrap_or(s);
    let parse = |offset: usize, message: String| Error::Parse { offset, message };
    let &first = s.first().ok_or_else(|| parse(0, "empty graph6 string".into()))?;
    if first == 126 {
        return Err(Error::CapacityExceeded {
            what: "graph6 order",
            limit: GRAPH6_MAX_ORDER as u64,
            requested: 63,
        });
    }
    if !(63..126).contains(&first) {
        return Err(parse(0, format!("size byte {first} outside 63..=125")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(parse(0, "graph of order 0".into()));
    }
    let expected = 1 + body_len(n);
    if s.len() != expected {
        return Err(parse(
            s.len().min(expected),
            format!("expected {expected} bytes for order {n}, found {}", s.len()),
        ));
    }
    let mut rows = vec![0u64; n];
    let total_bits = n * (n - 1) / 2;
    let mut k = 0;
    for (offset, &byte) in s.iter().enumerate().skip(1) {
        if !(63..=126).contains(&byte) {
            return Err(parse(offset, format!("byte {byte} outside 63..=126")));
        }
        let bits = byte - 63;
        for shift in (0..6).rev() {
            let set = bits >> shift & 1 == 1;
            if k >= total_bits {
                if set {
                    return Err(parse(offset, "nonzero padding bit".into()));
                }
                continue;
            }
            if set {
                let (i, j) = edge_of_index(k);
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Position `k` of the column-order upper triangle as `(i, j)`, `i < j`.
pub(crate) fn edge_of_index(k: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// `"n m"` header followed by `m` lines `"u v"`, 0-based.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            lines.push((offset, line.trim()));
        }
        offset += line.len();
    }
    let err = |offset: usize, message: String| Error::Parse { offset, message };
    let mut it = lines.into_iter();
    let (off, header) = it.next().ok_or_else(|| err(0, "missing \"n m\" header".into()))?;
    let (n, m) = two_numbers(header).ok_or_else(|| err(off, format!("bad header {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (off, line) = it
            .next()
            .ok_or_else(|| err(text.len(), format!("expected {m} edge lines, found {}", edges.len())))?;
        let (u, v) = two_numbers(line).ok_or_else(|| err(off, format!("bad edge line {line:?}")))?;
        if u >= n || v >= n || u == v {
            return Err(err(off, format!("edge ({u}, {v}) invalid for order {n}")));
        }
        edges.push((u, v));
    }
    if let Some((off, line)) = it.next() {
        return Err(err(off, format!("unexpected trailing line {line:?}")));
    }
    Graph::from_edges(n, &edges).map_err(|e| err(0, e.to_string()))
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace().map(str::parse::<usize>);
    let a = parts.next()?.ok()?;
    let b = parts.next()?.ok()?;
    parts.next().is_none().then_some((a, b))
}
