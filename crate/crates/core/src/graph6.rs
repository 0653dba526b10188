//! graph6 text codec (standard bit packing, single-byte sizes n <= 62).

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_MAX: usize = 62;

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > G6_MAX {
        return Err(Error::Graph6(format!("only n <= {G6_MAX} supported, got {n}")));
    }
    let mut out = vec![(n as u8) + 63];
    let mut bits: u8 = 0;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(bits + 63);
                bits = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((bits << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable bytes"))
}

/// Decodes a graph6 string.
pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if bytes[0] == 126 {
        return Err(Error::Graph6("multi-byte sizes (n > 62) not supported".into()));
    }
    if bytes[0] < 63 || bytes[0] > 63 + G6_MAX as u8 {
        return Err(Error::Graph6(format!("bad size byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {expect} bytes for n = {n}, got {}",
            bytes.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("byte {byte} out of range")));
            }
            let bit = (byte - 63) >> (5 - idx % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, &edges)
}
