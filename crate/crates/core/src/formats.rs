//! Text encodings of graphs: graph6 and a plain edge-list format.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based vertex indices. Everything after a `#` on a line is ignored.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes a single graph6 record (optional `>>graph6<<` header, trailing
/// whitespace ignored). Non-zero padding bits are rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let base = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = text[base..].trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(base + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }

    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(parse_err(base + bytes.len(), "truncated 8-byte vertex count"));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(base + bytes.len(), "truncated 4-byte vertex count"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != nchars {
        let offset = base + body_start + body.len().min(nchars);
        return Err(parse_err(
            offset,
            format!("expected {nchars} data bytes for {n} vertices, found {}", body.len()),
        ));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let sextet = (body[k / 6] - 63) as u64;
            if (sextet >> (5 - k % 6)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = (body[nchars - 1] - 63) as u64;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + body_start + nchars - 1, "non-zero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` in canonical graph6 form (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut lines = Vec::new();
    for raw in text.split_inclusive('\n') {
        let content = raw.split('#').next().unwrap_or("");
        if !content.trim().is_empty() {
            lines.push((offset, content));
        }
        offset += raw.len();
    }
    let mut it = lines.into_iter();
    let (hoff, header) = it.next().ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let [n, m] = parse_pair(hoff, header)?;
    let mut edges = Vec::with_capacity(m);
    for (off, line) in it.by_ref() {
        edges.push(parse_pair(off, line)?);
    }
    if edges.len() != m {
        return Err(parse_err(
            text.len(),
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|[a, b]| (a, b)).collect();
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(offset: usize, line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(offset, format!("expected two integers, found {:?}", line.trim())));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(offset, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Renders `g` in the edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (a, b) in g.edges() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k1_and_star() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode_graph6(&g), "D?{");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<D?{\n").unwrap();
        assert_eq!(encode_graph6(&g), "D?{");
    }

    #[test]
    fn rejects_bad_padding() {
        // "D?{" has two padding bits; "D?|" sets the lowest one.
        match parse_graph6("D?|") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_wrong_length_and_range() {
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?{?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D ?{"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn large_vertex_counts() {
        let g = Graph::cycle(64).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        // 100 vertices: well-formed header, but over the cap
        assert_eq!(parse_graph6("~?@c"), Err(Error::TooManyVertices(100)));
    }

    #[test]
    fn edge_list_roundtrip_and_comments() {
        let text = "# two triangles\n5 6\n0 1\n0 2 # spoke\n1 2\n0 3\n0 4\n3 4\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::triangle_star(2).unwrap());
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { offset: 4, .. })));
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(Error::InvalidEdge(1)));
        assert!(matches!(parse_edge_list("3 1\n0 7\n"), Err(Error::IndexOutOfRange { .. })));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<u64>(), n).prop_map(move |rows| {
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        if (rows[j] >> i) & 1 == 1 {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::from_edge_list(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_roundtrip(g in arb_graph(64)) {
            let s = encode_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(encode_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
