//! graph6 reader and writer.
//!
//! Header `N(n)` is one byte `n + 63` for `n <= 62`, or `126` followed by
//! three 6-bit bytes for larger `n`. The upper triangle follows column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte, each byte
//! offset by 63 and the last one zero-padded.

use super::Graph;
use crate::error::{Error, Result};
use crate::MAX_VARS;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte 0x{b:02x} outside the printable range 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(err(1, "eight-byte size header is not supported"));
        }
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VARS {
        return Err(Error::TooManyVertices(n));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < needed {
        return Err(err(bytes.len(), format!("expected {needed} adjacency bytes, found {}", body.len())));
    }
    if body.len() > needed {
        return Err(err(pos + needed, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u + 1, v + 1)?;
            }
            k += 1;
        }
    }
    pos += needed;
    if bits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u + 1, v + 1) as u8;
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
