//! graph6 text format: one graph per line, printable bytes 63..=126.
//!
//! Header is `63 + n` for `n < 63`, or `126` followed by three 6-bit groups
//! for larger orders. The body packs the upper triangle column-wise, pairs
//! ordered (0,1), (0,2), (1,2), (0,3), ..., six bits per byte, first pair in
//! the most significant bit.

use crate::graph::Graph;
use crate::Error;

const OFFSET: u8 = 63;
/// Orders beyond the toolkit's scope are rejected early.
const MAX_N: usize = 100_000;

/// Parses a single graph6 line. A leading `>>graph6<<` marker is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0usize;
    if bytes.starts_with(b">>graph6<<") {
        bytes = &bytes[10..];
        base = 10;
    }
    if bytes.is_empty() {
        return Err(Error::Graph6 { offset: base, reason: "empty input" });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6 { offset: base + i, reason: "byte outside graph6 range 63..=126" });
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, 1)
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let mut v = 0usize;
        for &b in &bytes[1..4] {
            v = (v << 6) | (b - OFFSET) as usize;
        }
        (v, 4)
    } else {
        return Err(Error::Graph6 { offset: base, reason: "unsupported or truncated size header" });
    };
    if n > MAX_N {
        return Err(Error::Graph6 { offset: base, reason: "graph order too large" });
    }
    let pair_count = n * n.saturating_sub(1) / 2;
    let body_len = pair_count.div_ceil(6);
    if bytes.len() < header_len + body_len {
        return Err(Error::Graph6 { offset: base + bytes.len(), reason: "truncated bitstream" });
    }
    if bytes.len() > header_len + body_len {
        return Err(Error::Graph6 { offset: base + header_len + body_len, reason: "trailing bytes after bitstream" });
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n as u32 {
        for i in 0..j {
            let byte = bytes[header_len + pos / 6] - OFFSET;
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    // padding bits must be zero
    for extra in pair_count..body_len * 6 {
        let byte = bytes[header_len + extra / 6] - OFFSET;
        if (byte >> (5 - extra % 6)) & 1 == 1 {
            return Err(Error::Graph6 { offset: base + header_len + extra / 6, reason: "nonzero padding bit" });
        }
    }
    Graph::new(n as u32, &edges)
}

/// Writes the canonical graph6 line (no trailing newline) for the graph as
/// labeled. Deterministic: identical graphs produce identical strings.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n() as usize;
    let mut out = Vec::new();
    if n < 63 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        out.push(OFFSET + ((n >> 12) & 63) as u8);
        out.push(OFFSET + ((n >> 6) & 63) as u8);
        out.push(OFFSET + (n & 63) as u8);
    }
    let pair_count = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; pair_count.div_ceil(6)];
    let mut pos = 0usize;
    for j in 1..n as u32 {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    out.extend(body.into_iter().map(|b| b + OFFSET));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_k2() {
        // 'A' = 63 + 2, '_' = 63 + 0b100000: single pair (0,1) present.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn c4_round_trip() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = write_graph6(&c4);
        let back = parse_graph6(&text).unwrap();
        assert!(back == c4);
    }

    #[test]
    fn prefix_marker_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().m(), 1);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, reason: "empty input" })
        );
        // 'D' announces 5 vertices (10 pair bits = 2 body bytes), body truncated
        match parse_graph6("D?") {
            Err(Error::Graph6 { reason: "truncated bitstream", .. }) => {}
            other => panic!("expected truncation error, got {other:?}"),
        }
        match parse_graph6("A_~") {
            Err(Error::Graph6 { reason: "trailing bytes after bitstream", offset: 2 }) => {}
            other => panic!("expected trailing-byte error, got {other:?}"),
        }
        match parse_graph6("A\u{7f}") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("expected range error, got {other:?}"),
        }
    }

    #[test]
    fn big_header_round_trip() {
        // 70-vertex empty graph exercises the 4-byte header.
        let g = Graph::new(70, &[]).unwrap();
        let text = write_graph6(&g);
        assert_eq!(text.as_bytes()[0], 126);
        let back = parse_graph6(&text).unwrap();
        assert_eq!(back.n(), 70);
        assert_eq!(back.m(), 0);
    }
}
