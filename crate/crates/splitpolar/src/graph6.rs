//! graph6 text encoding for graphs of order at most 62.
//!
//! One byte `n + 63`, then the upper-triangle bits x(0,1), x(0,2), x(1,2),
//! x(0,3), ... packed big-endian into 6-bit groups, zero-padded, each group
//! offset by 63 to land in the printable range.

use crate::graph::{Graph, MAX_VERTICES};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#x} at position {pos} outside the printable graph6 range")]
    BadByte { byte: u8, pos: usize },
    #[error("order {0} not supported (multi-byte graph6 headers)")]
    UnsupportedOrder(usize),
    #[error("body has {got} bytes, expected {want}")]
    BadLength { got: usize, want: usize },
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = vec![(n + 63) as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::BadByte {
            byte: first,
            pos: 0,
        }
        .into());
    }
    if first == 126 {
        // '~' introduces the multi-byte header for n > 62
        return Err(Graph6Error::UnsupportedOrder(63).into());
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != want {
        return Err(Graph6Error::BadLength {
            got: body.len(),
            want,
        }
        .into());
    }
    for (pos, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { byte: b, pos: pos + 1 }.into());
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
