//! graph6 encoding: an order header followed by the column-major upper
//! triangle of the adjacency matrix in 6-bit groups, each offset by 63.

use super::{Graph, GraphError, MAX_ORDER};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated graph6 string: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at offset {0}")]
    Trailing(usize),
    #[error("order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("nonzero padding bits in final group")]
    Padding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. A single trailing newline and an optional
/// `>>graph6<<` header are accepted.
pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == 126 {
            // 8-byte header form, only used for orders beyond 258047.
            return Err(Graph6Error::OrderTooLarge(usize::MAX));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let header_len = bytes.len() - body.len();
    let bits = n * n.saturating_sub(1) / 2;
    let groups = bits.div_ceil(6);
    if body.len() < groups {
        return Err(Graph6Error::Truncated {
            expected: header_len + groups,
            found: bytes.len(),
        });
    }
    if body.len() > groups {
        return Err(Graph6Error::Trailing(header_len + groups));
    }
    let pad = groups * 6 - bits;
    if pad > 0 && (body[groups - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::Padding);
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[idx / 6] - 63;
            if (group >> (5 - idx % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_and_empty_pair() {
        assert_eq!(graph6_decode("A_").unwrap(), Graph::complete(2).unwrap());
        let e = graph6_decode("A?").unwrap();
        assert_eq!((e.order(), e.size()), (2, 0));
        assert!(!e.is_connected());
        assert_eq!(graph6_encode(&Graph::complete(2).unwrap()), "A_");
    }

    #[test]
    fn known_strings() {
        // P_4 as 0-1-2-3, and K_4.
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(graph6_encode(&p4), "Ch");
        assert_eq!(graph6_encode(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(graph6_encode(&Graph::complete(5).unwrap()), "D~{");
    }

    #[test]
    fn long_header_for_order_63_and_64() {
        for n in [62, 63, 64] {
            let g = Graph::complete(n).unwrap();
            let s = graph6_encode(&g);
            assert_eq!(s.starts_with('~'), n > 62);
            assert_eq!(graph6_decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn newline_and_header_accepted() {
        assert_eq!(graph6_decode("A_\n").unwrap().size(), 1);
        assert_eq!(graph6_decode("A_\r\n").unwrap().size(), 1);
        assert_eq!(graph6_decode(">>graph6<<A_").unwrap().size(), 1);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(graph6_decode(""), Err(Graph6Error::Empty));
        assert_eq!(
            graph6_decode("A\x7f"),
            Err(Graph6Error::BadByte {
                offset: 1,
                byte: 0x7f
            })
        );
        assert_eq!(
            graph6_decode("C"),
            Err(Graph6Error::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(graph6_decode("A__"), Err(Graph6Error::Trailing(2)));
        assert_eq!(graph6_decode("A@"), Err(Graph6Error::Padding));
        assert!(matches!(
            graph6_decode("~?@@"),
            Err(Graph6Error::OrderTooLarge(65))
        ));
        assert!(matches!(graph6_decode("?"), Err(Graph6Error::Graph(_))));
        assert!(matches!(
            graph6_decode("~~"),
            Err(Graph6Error::Truncated { .. })
        ));
    }
}
