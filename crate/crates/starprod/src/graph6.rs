//! graph6 codec (the standard single-line ASCII format for undirected
//! graphs). Supports orders up to 258047, which covers everything this
//! toolkit constructs.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_MARKER: u8 = 126;

/// Decodes a graph6 line.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(Error::Parse(format!(
            "invalid graph6 byte 0x{bad:02x}"
        )));
    }
    let (n, mut pos) = decode_order(bytes)?;
    if n == 0 {
        return Err(Error::Parse("graph6 order 0 is not supported".into()));
    }
    let bit_count = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut pair_iter = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    while bit_index < bit_count {
        let byte = *bytes
            .get(pos)
            .ok_or_else(|| Error::Parse("truncated graph6 bit field".into()))?
            - OFFSET;
        pos += 1;
        for shift in (0..6).rev() {
            if bit_index >= bit_count {
                break;
            }
            let (u, v) = pair_iter.next().expect("pair iterator tracks bit count");
            if (byte >> shift) & 1 == 1 {
                edges.push((u, v));
            }
            bit_index += 1;
        }
    }
    if pos != bytes.len() {
        return Err(Error::Parse("trailing bytes after graph6 bit field".into()));
    }
    Graph::new(n, edges)
}

/// Canonical graph6 encoding.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(&mut out, n);
    let mut current = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            current <<= 1;
            if g.has_edge(u, v) {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(current + OFFSET);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        current <<= 6 - filled;
        out.push(current + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != LONG_MARKER {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == LONG_MARKER {
        return Err(Error::Parse("graph6 orders above 258047 unsupported".into()));
    }
    if bytes.len() < 4 {
        return Err(Error::Parse("truncated graph6 order field".into()));
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        n = (n << 6) | (b - OFFSET) as usize;
    }
    Ok((n, 4))
}

fn encode_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        assert!(n <= 258_047, "graph too large for 3-byte graph6 order");
        out.push(LONG_MARKER);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
}
