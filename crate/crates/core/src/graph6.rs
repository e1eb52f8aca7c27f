//! graph6 encoding, bit-exact with the format used by nauty and friends.
//!
//! Layout: a size header (`63 + n` for `n ≤ 62`, otherwise `~` followed by
//! three 6-bit groups), then the upper triangle of the adjacency matrix in
//! column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), …`) packed six bits
//! per byte, most significant bit first, zero padded, offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is not a graph6 character")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed size header")]
    MalformedLength,
    #[error("graph6 declares {0} vertices; supported range is 1..={MAX_VERTICES}")]
    UnsupportedOrder(usize),
    #[error("body has {found} bytes, expected {expected}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the graph body")]
    TrailingGarbage(usize),
    #[error("padding bits in the last byte are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset,
            byte: bytes[offset],
        });
    }
    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        // `~~` introduces the 36-bit form, which never fits in 64 vertices.
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Graph6Error::MalformedLength);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        // The long form is only legal when the short form cannot be used.
        if n <= 62 {
            return Err(Graph6Error::MalformedLength);
        }
        (n, 4)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let body = &bytes[header..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage(body.len() - expected));
    }

    let bits = n * (n - 1) / 2;
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows)?)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
        decode_graph6(s.as_bytes())
    }
}
