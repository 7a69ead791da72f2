//! graph6 encoding: a size header `N(n)` followed by the upper triangle of
//! the adjacency matrix, column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, GraphError};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn size_header(n: usize) -> Vec<u8> {
    if n < 63 {
        vec![n as u8 + BIAS]
    } else if n < 258_048 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
        out
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = size_header(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.is_adjacent(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` prefix are accepted. Padding bits in the final byte are
/// ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, offset) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (line, 0),
    };
    let bytes = body.as_bytes();

    let mut data = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6Format {
                offset: offset + i,
                byte: b,
            });
        }
        data.push(b - BIAS);
    }

    let (n, rest) = match data.as_slice() {
        [] => {
            return Err(GraphError::Graph6Length {
                expected: 1,
                found: 0,
            })
        }
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(GraphError::Graph6Length {
                    expected: 8,
                    found: data.len(),
                });
            }
            let n = rest[..6].iter().fold(0usize, |a, &b| (a << 6) | b as usize);
            (n, &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::Graph6Length {
                    expected: 4,
                    found: data.len(),
                });
            }
            let n = rest[..3].iter().fold(0usize, |a, &b| (a << 6) | b as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => (*first as usize, rest),
    };

    if n == 0 {
        return Err(GraphError::Empty);
    }
    let bits = n as u128 * (n as u128 - 1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() as u128 != expected {
        return Err(GraphError::Graph6Length {
            expected: usize::try_from(expected).unwrap_or(usize::MAX),
            found: rest.len(),
        });
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
