//! graph6 short-form encoding (n <= 62), bit-exact.
//!
//! Layout: byte 0 is `n + 63`; the upper triangle is listed column-major —
//! x(0,1), x(0,2), x(1,2), x(0,3), ... — packed 6 bits per byte, first bit
//! most significant, each 6-bit group offset by 63. The bit string is padded
//! with zeros to a multiple of 6; nonzero padding is rejected.

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count representable in graph6 short form.
pub const MAX_GRAPH6_N: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,

    #[error("byte 0x{byte:02x} at offset {offset} outside graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },

    #[error("long-form graph6 (n > 62) is not supported")]
    LongForm,

    #[error("expected {expected} edge bytes for n = {n}, found {found}")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },

    #[error("nonzero padding bit in byte at offset {offset}")]
    TrailingBits { offset: usize },

    #[error("graph on {n} vertices exceeds the graph6 short-form limit of 62")]
    TooLarge { n: usize },
}

fn edge_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn edge_bytes(n: usize) -> usize {
    edge_bits(n).div_ceil(6)
}

/// Decodes a graph6 short-form string.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let &first = bytes.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::ByteOutOfRange {
            offset: 0,
            byte: first,
        });
    }
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (first - 63) as usize;
    let body = &bytes[1..];
    let expected = edge_bytes(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange {
                offset: 1 + i,
                byte: b,
            });
        }
    }

    let total_bits = edge_bits(n);
    let mut g = Graph::empty(n);
    let mut bit_idx = 0usize;
    'pairs: for v in 1..n {
        for u in 0..v {
            let byte = body[bit_idx / 6] - 63;
            if (byte >> (5 - bit_idx % 6)) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit_idx += 1;
            if bit_idx == total_bits {
                break 'pairs;
            }
        }
    }
    // padding bits must be zero
    for pad in total_bits..expected * 6 {
        let byte = body[pad / 6] - 63;
        if (byte >> (5 - pad % 6)) & 1 == 1 {
            return Err(Graph6Error::TrailingBits {
                offset: 1 + pad / 6,
            });
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 short form; fails for `n > 62`.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}
