//! graph6 codec.
//!
//! Size header: `n + 63` as one byte for `n ≤ 62`, otherwise `~` followed by
//! three 6-bit big-endian groups. Payload: the upper triangle in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), …`), six bits per byte offset by 63, padded
//! with zero bits.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_VERTICES};

pub fn emit(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.rows()[j];
        for i in 0..j {
            acc = (acc << 1) | (row >> i & 1) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let six = |b: u8| -> Result<usize, Graph6Error> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(Graph6Error::InvalidByte(b))
        }
    };
    let (n, payload) = if bytes[0] != b'~' {
        (six(bytes[0])?, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        if bytes[1] == b'~' {
            // 36-bit form; far outside the supported range either way
            if bytes.len() < 8 {
                return Err(Graph6Error::BadHeader);
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | six(b)?;
            }
            if n <= 258_047 {
                return Err(Graph6Error::BadHeader);
            }
            return Err(Graph6Error::TooLarge(n));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | six(b)?;
        }
        if n <= 62 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(Graph6Error::WrongLength { expected, got: payload.len() });
    }
    let mut rows = vec![0u64; n];
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = six(payload[pos / 6])?;
            if chunk >> (5 - pos % 6) & 1 == 1 {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            pos += 1;
        }
    }
    if let Some(&last) = payload.last() {
        let pad = expected * 6 - bits;
        if six(last)? & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}
