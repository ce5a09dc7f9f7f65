//! graph6 text codec, bit-exact per the published format: the order byte is
//! `n + 63`, then the upper triangle of the adjacency matrix in column-major
//! order, packed big-endian into 6-bit chunks offset by 63.
//!
//! Only the short form (order <= 62) is supported; that covers everything
//! this workbench handles.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OverCap(n, MAX_GRAPH6_ORDER));
    }
    let mut out = String::new();
    out.push((n as u8 + OFFSET) as char);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut chunk: u8 = 0;
    let mut filled = 0;
    let mut emitted = 0;
    for v in 2..=n {
        for u in 1..v {
            chunk = (chunk << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((chunk + OFFSET) as char);
                chunk = 0;
                filled = 0;
                emitted += 6;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push((chunk + OFFSET) as char);
        emitted += 6;
    }
    debug_assert!(emitted >= nbits && emitted - nbits < 6);
    Ok(out)
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if bytes[0] == b'~' {
        return Err(Error::Graph6(
            "long-form headers (order > 62) are not supported".into(),
        ));
    }
    if bytes[0] < OFFSET || bytes[0] > OFFSET + 62 {
        return Err(Error::Graph6(format!(
            "invalid order byte {:#04x}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {expect} data bytes for order {n}, found {}",
            data.len()
        )));
    }
    let mut values = Vec::with_capacity(data.len());
    for &b in data {
        if !(OFFSET..=OFFSET + 63).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b:#04x}")));
        }
        values.push(b - OFFSET);
    }
    let bit = |i: usize| -> bool { values[i / 6] >> (5 - i % 6) & 1 != 0 };
    let mut g = Graph::empty(n);
    let mut pos = 0;
    for v in 2..=n {
        for u in 1..v {
            if bit(pos) {
                g.add_edge(u, v);
            }
            pos += 1;
        }
    }
    for i in pos..expect * 6 {
        if bit(i) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
