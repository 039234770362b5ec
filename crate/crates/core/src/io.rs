//! graph6 and plain edge-list encodings.
//!
//! graph6 is McKay's printable encoding: a size header followed by the upper
//! triangle of the adjacency matrix, column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed big-endian into 6-bit groups
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (OFFSET..=LONG).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(malformed(format!("byte {b:#04x} outside the printable range 63..=126")))
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| malformed("empty line"))?;
    if first != LONG {
        return Ok((sextet(first)? as usize, 1));
    }
    let (start, groups) = if bytes.get(1) == Some(&LONG) { (2, 6) } else { (1, 3) };
    let digits = bytes
        .get(start..start + groups)
        .ok_or_else(|| malformed("truncated size header"))?;
    let mut n = 0usize;
    for &b in digits {
        n = (n << 6) | sextet(b)? as usize;
    }
    Ok((n, start + groups))
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted; anything else outside the encoding is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, header_len) = read_size(bytes)?;
    let body = &bytes[header_len..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(malformed(format!(
            "truncated payload: {} bytes for n = {n}, expected {expected}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(malformed(format!(
            "payload too long: {} bytes for n = {n}, expected {expected}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for &b in body {
        let s = sextet(b)?;
        for bit in (0..6).rev() {
            if k == bit_count {
                break 'outer;
            }
            if s >> bit & 1 == 1 {
                let (i, j) = triangle_position(k);
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Maps a column-major upper-triangle index to `(i, j)` with `i < j`.
fn triangle_position(k: usize) -> (usize, usize) {
    // column j holds indices j(j-1)/2 .. j(j+1)/2
    let mut j = (((8 * k + 1) as f64).sqrt() as usize + 1) / 2;
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// Edge-list text: a line `n m` followed by `m` lines `u v`.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList(format!("expected `{what}`, got `{line}`"))),
    }
}

/// Parses every edge-list graph in `text`. Blank lines between graphs are
/// ignored.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut graphs = Vec::new();
    while let Some(head) = lines.next() {
        let (n, m) = parse_pair(head, "n m")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::EdgeList(format!("expected {m} edges after `{head}`")))?;
            edges.push(parse_pair(line, "u v")?);
        }
        graphs.push(Graph::from_edges(n, &edges)?);
    }
    Ok(graphs)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graphs = parse_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        k => Err(Error::EdgeList(format!("expected one graph, found {k}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn decodes_known_lines() {
        // expected edge sets were produced with networkx.from_graph6_bytes
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("Cr").unwrap().edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(
            parse_graph6("DQc").unwrap().edges(),
            vec![(0, 2), (0, 4), (1, 3), (3, 4)]
        );
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2));
    }

    #[test]
    fn encodes_known_graphs() {
        assert_eq!(write_graph6(&cycle(5)), "Dhc");
        assert_eq!(write_graph6(&path(4)), "Ch");
        assert_eq!(write_graph6(&complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Crr"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C "), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6(_))));
    }

    #[test]
    fn long_header_round_trip() {
        let g = cycle(70);
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], LONG);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn triangle_positions() {
        let mut k = 0;
        for j in 1..40 {
            for i in 0..j {
                assert_eq!(triangle_position(k), (i, j));
                k += 1;
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(4);
        let text = write_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        let two = format!("{text}\n{}", write_edge_list(&path(3)));
        assert_eq!(parse_edge_lists(&two).unwrap().len(), 2);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("2 1\n0 0\n").is_err());
    }
}
