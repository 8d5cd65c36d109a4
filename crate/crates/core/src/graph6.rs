//! graph6 encoding for graphs on at most 62 vertices.
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits
//! per byte, most significant bit first, each byte offset by 63. Padding bits
//! must be zero.

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count expressible with the single-byte size header.
pub const MAX_GRAPH6_VERTICES: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("size header at offset {offset} requires more than {MAX_GRAPH6_VERTICES} vertices")]
    UnsupportedSize { offset: usize },
    #[error("expected {expected} payload bytes, found {found} (offset {offset})")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("unexpected trailing byte at offset {offset}")]
    Trailing { offset: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    Padding { offset: usize },
    #[error("graph has {0} vertices; graph6 support is capped at {MAX_GRAPH6_VERTICES}")]
    TooLarge(usize),
}

impl Graph6Error {
    /// Byte offset in the input line where decoding failed, if applicable.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            Graph6Error::OutOfRange { offset, .. }
            | Graph6Error::UnsupportedSize { offset }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::Trailing { offset }
            | Graph6Error::Padding { offset } => Some(offset),
            Graph6Error::Empty | Graph6Error::TooLarge(_) => None,
        }
    }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut line = text;
    while let Some((&last, rest)) = line.split_last() {
        if last == b'\n' || last == b'\r' {
            line = rest;
        } else {
            break;
        }
    }
    let base = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let line = &line[base..];
    let (&size, payload) = line.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&size) {
        return Err(Graph6Error::OutOfRange {
            offset: base,
            byte: size,
        });
    }
    if size == 126 {
        return Err(Graph6Error::UnsupportedSize { offset: base });
    }
    let n = (size - 63) as usize;
    let expected = payload_len(n);
    for (i, &b) in payload.iter().enumerate().take(expected) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::OutOfRange {
                offset: base + 1 + i,
                byte: b,
            });
        }
    }
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: base + 1 + payload.len(),
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::Trailing {
            offset: base + 1 + expected,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if expected > 0 && (bits..expected * 6).any(bit) {
        return Err(Graph6Error::Padding {
            offset: base + expected,
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 payload describes a simple graph"))
}

/// Encodes `g` as a graph6 line without a trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
    }

    #[test]
    fn k2() {
        // '_' = 95 = 63 + 0b100000: the single bit for (0,1) is set.
        let g = parse_graph6(b"A_\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(write_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn star_on_five_vertices() {
        // "D?{": payload 000000 111100; bits 6..=9 are (0,4),(1,4),(2,4),(3,4).
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(parse_graph6(b">>graph6<<A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(b" "),
            Err(Graph6Error::OutOfRange { offset: 0, byte: b' ' })
        );
        assert_eq!(
            parse_graph6(b"D?"),
            Err(Graph6Error::Truncated {
                offset: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(parse_graph6(b"A_?"), Err(Graph6Error::Trailing { offset: 2 }));
        assert_eq!(parse_graph6(b"A`"), Err(Graph6Error::Padding { offset: 1 }));
        assert_eq!(
            parse_graph6(b"D?\x7f"),
            Err(Graph6Error::OutOfRange { offset: 2, byte: 0x7f })
        );
        assert_eq!(parse_graph6(b"~??"), Err(Graph6Error::UnsupportedSize { offset: 0 }));
        assert_eq!(write_graph6(&Graph::empty(63)), Err(Graph6Error::TooLarge(63)));
    }
}
