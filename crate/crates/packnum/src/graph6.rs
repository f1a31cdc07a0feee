//! graph6 encoding: one printable line per graph.
//!
//! Layout: an order header, then the upper triangle of the adjacency
//! matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
//! big-endian into 6-bit groups, each group offset by 63.  Orders up to
//! 62 use a single header byte; larger orders use the extended headers
//! introduced by byte 126.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order accepted by this implementation.
pub const MAX_ORDER: usize = 1 << 18;

const OFFSET: u8 = 63;
const EXTENDED: u8 = 126;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#x} at position {pos} outside graph6 range")]
    BadChar { byte: u8, pos: usize },
    #[error("graph6 line for order {n} needs {expected} body chars, found {found}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in final group")]
    NonzeroPadding,
    #[error("order 0 not supported")]
    OrderZero,
    #[error("order {0} exceeds supported maximum {MAX_ORDER}")]
    TooLarge(usize),
    #[error("truncated order header")]
    TruncatedHeader,
}

/// Decodes one graph6 line.  A leading `>>graph6<<` marker is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut vals = Vec::with_capacity(bytes.len());
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=EXTENDED).contains(&b) {
            return Err(Graph6Error::BadChar { byte: b, pos });
        }
        vals.push(b - OFFSET);
    }
    let (n, header_len) = decode_order(&vals)?;
    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let found = vals.len() - header_len;
    if found != expected {
        return Err(Graph6Error::BadLength { n, expected, found });
    }
    let body = &vals[header_len..];
    let mut g = Graph::empty(n);
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            if body[pos / 6] >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if body[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut vals = encode_order(n);
    let bits = n * (n - 1) / 2;
    let mut acc = 0u8;
    let mut filled = 0u8;
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                vals.push(acc);
                acc = 0;
                filled = 0;
            }
            pos += 1;
        }
    }
    debug_assert_eq!(pos, bits);
    if filled > 0 {
        vals.push(acc << (6 - filled));
    }
    Ok(vals.into_iter().map(|v| (v + OFFSET) as char).collect())
}

/// Parses every line of a graph6 stream, skipping blank lines and the
/// optional `>>graph6<<` header line.  Errors carry 1-based line numbers.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        out.push(parse_graph6(line).map_err(|e| (idx + 1, e))?);
    }
    Ok(out)
}

fn decode_order(vals: &[u8]) -> Result<(usize, usize), Graph6Error> {
    match vals {
        [] => Err(Graph6Error::TruncatedHeader),
        [v, ..] if *v < 63 => Ok((*v as usize, 1)),
        [_, rest @ ..] => match rest {
            [v, ..] if *v < 63 => {
                if rest.len() < 3 {
                    return Err(Graph6Error::TruncatedHeader);
                }
                let n = rest[..3].iter().fold(0usize, |a, &v| a << 6 | v as usize);
                Ok((n, 4))
            }
            [_, tail @ ..] => {
                if tail.len() < 6 {
                    return Err(Graph6Error::TruncatedHeader);
                }
                let n = tail[..6].iter().fold(0usize, |a, &v| a << 6 | v as usize);
                Ok((n, 8))
            }
            [] => Err(Graph6Error::TruncatedHeader),
        },
    }
}

fn encode_order(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8]
    } else if n <= 258_047 {
        vec![
            63,
            (n >> 12 & 63) as u8,
            (n >> 6 & 63) as u8,
            (n & 63) as u8,
        ]
    } else {
        let mut v = vec![63, 63];
        for shift in (0..6).rev() {
            v.push((n >> (shift * 6) & 63) as u8);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn hand_decoded_singletons() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert!(k2.has_edge(0, 1));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!(e2.edge_count(), 0);
    }

    #[test]
    fn hand_encoded_small_graphs() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&k3).unwrap(), "Bw");
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(emit_graph6(&k4).unwrap(), "C~");
        assert_eq!(emit_graph6(&cycle(5)).unwrap(), "Dhc");
        assert_eq!(emit_graph6(&Graph::empty(1)).unwrap(), "@");
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(emit_graph6(&k2).unwrap(), "A_");
    }

    #[test]
    fn round_trip_small() {
        for g in [
            Graph::empty(1),
            Graph::empty(7),
            cycle(5),
            cycle(6),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        ] {
            let line = emit_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&line).unwrap(), g);
        }
    }

    #[test]
    fn round_trip_extended_header() {
        let g = Graph::from_edges(63, &[(0, 62), (10, 20)]).unwrap();
        let line = emit_graph6(&g).unwrap();
        assert_eq!(line.as_bytes()[0], 126);
        assert_eq!(&line[..4], "~??~");
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn order_header_forms() {
        assert_eq!(encode_order(62), vec![62]);
        assert_eq!(encode_order(63), vec![63, 0, 0, 63]);
        assert_eq!(encode_order(258_047), vec![63, 62, 63, 63]);
        assert_eq!(encode_order(258_048), vec![63, 63, 0, 0, 0, 63, 0, 0]);
        for n in [1, 62, 63, 100, 258_047, 258_048, MAX_ORDER] {
            let enc = encode_order(n);
            assert_eq!(decode_order(&enc).unwrap(), (n, enc.len()));
        }
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::OrderZero));
        assert!(matches!(
            parse_graph6("A"),
            Err(Graph6Error::BadLength { n: 2, expected: 1, found: 0 })
        ));
        assert!(matches!(
            parse_graph6("A_%"),
            Err(Graph6Error::BadChar { byte: b'%', pos: 2 })
        ));
        // C_5 body with a nonzero padding bit in the last group.
        assert!(matches!(parse_graph6("Dhd"), Err(Graph6Error::NonzeroPadding)));
        // Order 2^18 + 1 in the 36-bit header form.
        assert_eq!(parse_graph6("~~??@??@"), Err(Graph6Error::TooLarge(262_145)));
    }

    #[test]
    fn line_stream_skips_header_and_blanks() {
        let text = ">>graph6<<\n@\n\nA_\n";
        let gs = parse_graph6_lines(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].edge_count(), 1);
        let err = parse_graph6_lines("@\nZZZZZZZZZZ~~\n").unwrap_err();
        assert_eq!(err.0, 2);
    }
}
