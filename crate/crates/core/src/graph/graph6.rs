//! graph6 codec.
//!
//! Size header is one byte `n + 63` for `n <= 62`; parsing also accepts the
//! four-byte `~` form for 63 and 64 vertices. Adjacency bits follow the
//! upper triangle column by column (`(i, j)`, `i < j`, ordered by `j` then
//! `i`), six bits per byte, most significant first, zero padded.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Optional header line some tools emit before graph6 data.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

/// Decodes one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!(
            "byte {} at offset {pos} outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(malformed("eight-byte size header exceeds the 64-vertex cap"));
        }
        if bytes.len() < 4 {
            return Err(malformed("truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
        if n < 63 {
            return Err(malformed(format!("non-canonical long header for n={n}")));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(malformed(format!("{n} vertices exceeds the 64-vertex cap")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "n={n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Encodes `g`; only single-byte headers (`n <= 62`) are produced.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Unencodable(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + BIAS);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Parses a multi-line graph6 document, skipping blank lines and a
/// leading header.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != GRAPH6_HEADER)
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent decoder: expands every byte to bits with string
    /// formatting, then walks the column-major upper triangle.
    fn reference_decode(s: &str) -> Vec<(usize, usize)> {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: String = b[1..]
            .iter()
            .map(|&c| format!("{:06b}", c - 63))
            .collect();
        let bits = bits.as_bytes();
        let mut edges = vec![];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] == b'1' {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges
    }

    #[test]
    fn k1_is_header_only() {
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn k2_packs_one_bit() {
        let s = encode_graph6(&Graph::complete(2)).unwrap();
        assert_eq!(s, "A_");
        assert_eq!(reference_decode(&s), vec![(0, 1)]);
    }

    #[test]
    fn d_question_brace_round_trips() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), reference_decode("D?{"));
        assert_eq!(encode_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn k3_literal() {
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        // One data byte is the right length for three vertices.
        assert_eq!(parse_graph6("B_").unwrap(), Graph::from_edges(3, &[(0, 1)]).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "B", "B__", "A", "D?", "D?{?", "A`", "B\u{7f}", "A\t_"] {
            assert!(
                matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))),
                "{bad:?} accepted"
            );
        }
        // 65 vertices via the long header, and a non-canonical long header
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(Error::MalformedGraph6(_))
        ));
        assert!(parse_graph6("~??A").is_err());
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
        let gs = parse_graph6_lines(">>graph6<<\nA_\n\nBw\n").unwrap();
        assert_eq!(gs, vec![Graph::complete(2), Graph::complete(3)]);
    }

    #[test]
    fn long_header_for_64_vertices() {
        let g = Graph::cycle(64);
        // 64 = 000000 000001 000000 across three six-bit groups
        let s = format!("~{}{}{}", 63u8 as char, 64u8 as char, 63u8 as char);
        let nbits: usize = 64 * 63 / 2;
        let mut bits = vec![0u8; nbits.div_ceil(6) * 6];
        let mut k = 0;
        for j in 1..64 {
            for i in 0..j {
                bits[k] = g.has_edge(i, j) as u8;
                k += 1;
            }
        }
        let body: String = bits
            .chunks(6)
            .map(|c| (c.iter().fold(0u8, |a, &b| a << 1 | b) + 63) as char)
            .collect();
        let parsed = parse_graph6(&(s + &body)).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(encode_graph6(&g), Err(Error::Unencodable(64)));
    }
}
