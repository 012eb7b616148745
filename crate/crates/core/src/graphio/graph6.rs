//! graph6: the order as one byte `n + 63`, then the upper triangle in
//! column order (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte,
//! each byte offset by 63, zero-padded.

use std::io::BufRead;

use super::GraphIoError;
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Largest order expressible with the single-byte header.
pub const MAX_GRAPH6_ORDER: usize = 62;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn write_graph6(g: &Graph) -> Result<String, GraphIoError> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(GraphIoError::OrderTooLarge(n));
    }
    let mut out = String::with_capacity(1 + payload_len(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(line: &str) -> Result<Graph, GraphIoError> {
    let line = line
        .strip_suffix('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(GraphIoError::BadHeader("empty line".into()));
    };
    if header == b'~' {
        return Err(GraphIoError::BadHeader(
            "multi-byte order headers (n > 62) are not supported".into(),
        ));
    }
    if !(63..=126).contains(&header) {
        return Err(GraphIoError::BadHeader(format!(
            "order byte {header:#04x} is outside the graph6 alphabet"
        )));
    }
    let n = (header - 63) as usize;
    let expected = payload_len(n);
    let payload = &bytes[1..];
    for (k, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphIoError::InvalidCharacter {
                byte: b,
                position: k + 1,
            });
        }
    }
    if payload.len() < expected {
        return Err(GraphIoError::TruncatedPayload {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(GraphIoError::TrailingGarbage(payload.len() - expected));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - bits;
    if pad > 0 && (payload[expected - 1] - 63) & ((1u8 << pad) - 1) != 0 {
        return Err(GraphIoError::NonCanonicalPadding);
    }
    let mut rows = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows))
}

/// One graph per non-empty line.
pub fn read_graph6_stream<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<Graph, GraphIoError>> {
    reader.lines().filter_map(|line| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(l.trim_end())),
        Err(e) => Some(Err(GraphIoError::MalformedLine {
            line: 0,
            reason: e.to_string(),
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, cycle, wl8};

    /// Reference encoder built directly from the bit-string description:
    /// materialize the full bit vector, pad to a multiple of six, then chunk.
    fn reference_encode(g: &Graph) -> String {
        let n = g.order();
        let mut bits: Vec<u8> = Vec::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(if g.edges().contains(&(i, j)) { 1 } else { 0 });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(0);
        }
        let mut s = String::new();
        s.push(char::from(63 + n as u8));
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b);
            s.push(char::from(63 + v));
        }
        s
    }

    #[test]
    fn pinned_examples() {
        assert_eq!(reference_encode(&complete(2)), "A_");
        assert_eq!(reference_encode(&complete(3)), "Bw");
        assert_eq!(write_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(write_graph6(&complete(3)).unwrap(), "Bw");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("Bw\n").unwrap(), complete(3));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn error_cases() {
        assert_eq!(
            parse_graph6("A"),
            Err(GraphIoError::TruncatedPayload { expected: 1, found: 0 })
        );
        assert_eq!(parse_graph6("A__"), Err(GraphIoError::TrailingGarbage(1)));
        // 'A' + 0b100001: the five pad bits must be zero.
        assert_eq!(parse_graph6("A`"), Err(GraphIoError::NonCanonicalPadding));
        assert!(matches!(parse_graph6(""), Err(GraphIoError::BadHeader(_))));
        assert!(matches!(parse_graph6("~?@I"), Err(GraphIoError::BadHeader(_))));
        assert!(matches!(parse_graph6(" A"), Err(GraphIoError::BadHeader(_))));
        assert!(matches!(
            parse_graph6("A "),
            Err(GraphIoError::InvalidCharacter { byte: b' ', position: 1 })
        ));
        assert_eq!(
            write_graph6(&Graph::empty(63)),
            Err(GraphIoError::OrderTooLarge(63))
        );
        assert!(write_graph6(&Graph::empty(62)).is_ok());
    }

    #[test]
    fn agrees_with_reference_encoder() {
        for g in [cycle(5), wl8(), complete(9), cycle(62), Graph::empty(7)] {
            let s = write_graph6(&g).unwrap();
            assert_eq!(s, reference_encode(&g));
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn stream_reading() {
        let text = "A_\n\nBw\r\nA\n";
        let got: Vec<_> = read_graph6_stream(text.as_bytes()).collect();
        assert_eq!(got.len(), 3);
        assert_eq!(got[0].as_ref().unwrap(), &complete(2));
        assert_eq!(got[1].as_ref().unwrap(), &complete(3));
        assert!(got[2].is_err());
    }
}
