//! graph6 encoding: a size prefix followed by the upper-triangle adjacency
//! bits in column order, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! per byte with an offset of 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const OFFSET: u8 = 63;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
}

/// Encodes from a vertex count and an adjacency predicate on `0..n`.
pub fn encode_with(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> String {
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Encodes a graph with its vertices taken in name order.
///
/// ```
/// use nci::{enumerate::graph6, Graph};
/// let g = Graph::from_pairs([("a", "c"), ("a", "e"), ("b", "d"), ("d", "e")]).unwrap();
/// assert_eq!(graph6::encode(&g), "DQc");
/// ```
pub fn encode(g: &Graph) -> String {
    let order: Vec<&VertexId> = g.vertices().iter().collect();
    encode_with(order.len(), |i, j| g.has_edge(order[i], order[j]))
}

fn decode_size(bytes: &[u8]) -> Option<(usize, usize)> {
    let val = |b: u8| (OFFSET..=126).contains(&b).then(|| (b - OFFSET) as usize);
    match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            let n = rest[..6].iter().try_fold(0, |acc, &b| Some(acc << 6 | val(b)?))?;
            Some((n, 8))
        }
        [126, rest @ ..] if rest.len() >= 3 => {
            let n = rest[..3].iter().try_fold(0, |acc, &b| Some(acc << 6 | val(b)?))?;
            Some((n, 4))
        }
        [b, ..] if *b < 126 => Some((val(*b)?, 1)),
        _ => None,
    }
}

/// Vertex `i` of a decoded graph is named `v{i+1}`, zero-padded so that name
/// order matches index order.
pub fn vertex_name(i: usize, n: usize) -> VertexId {
    let width = n.to_string().len();
    VertexId::new(format!("v{:0width$}", i + 1)).expect("valid name")
}

/// Decodes a single graph6 string. An optional `>>graph6<<` header is
/// accepted.
pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |m: &str| Error::parse(1, format!("invalid graph6: {m}"));
    let (n, start) = decode_size(bytes).ok_or_else(|| bad("size prefix"))?;
    let body = &bytes[start..];
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad("wrong body length"));
    }
    if body.iter().any(|&b| !(OFFSET..=126).contains(&b)) {
        return Err(bad("byte out of range"));
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding"));
    }
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(vertex_name(i, n));
    }
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(vertex_name(i, n), vertex_name(j, n))?;
            }
            k += 1;
        }
    }
    Ok(g)
}
