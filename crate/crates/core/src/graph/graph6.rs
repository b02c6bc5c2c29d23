use super::{CubicGraph, GraphError};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let six = |b: u8| -> Result<usize, GraphError> {
        if (63..=126).contains(&b) {
            Ok(usize::from(b - 63))
        } else {
            Err(malformed(format!("byte {b} outside the printable range 63..=126")))
        }
    };
    match bytes {
        [] => Err(malformed("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 36-bit vertex count"));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | six(b)?;
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 18-bit vertex count"));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | six(b)?;
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((six(*b)?, rest)),
    }
}

/// Decodes one graph6 line (optional `>>graph6<<` header) into the list of
/// upper-triangle edges, without any degree check.
pub(crate) fn decode_simple(text: &str) -> Result<(usize, Vec<(usize, usize)>), GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if line.starts_with(':') || line.starts_with(';') {
        return Err(malformed("sparse6/digraph6 input is not supported"));
    }
    let (n, body) = decode_order(line.as_bytes())?;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() != needed {
        return Err(malformed(format!(
            "expected {needed} adjacency bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(malformed(format!("byte {byte} outside the printable range 63..=126")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

/// Parses a graph6 line into a cubic graph.
pub fn parse_graph6(text: &str) -> Result<CubicGraph, GraphError> {
    let (n, edges) = decode_simple(text)?;
    CubicGraph::from_edges(n, &edges)
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes a simple cubic graph as a header-less graph6 line.
pub fn to_graph6(g: &CubicGraph) -> Result<String, GraphError> {
    if let Some(w) = g.edges().windows(2).find(|w| w[0] == w[1]) {
        return Err(GraphError::NotSimple(w[0].0, w[0].1));
    }
    let n = g.n();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adj[i * n + j]);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Bit-by-bit decoder written directly from the format description, kept
    /// separate from the production decoder.
    fn reference_adjacency(line: &str) -> (usize, Vec<Vec<bool>>) {
        let bytes: Vec<u32> = line.bytes().map(|b| u32::from(b) - 63).collect();
        assert!(bytes[0] < 63, "reference decoder handles n <= 62 only");
        let n = bytes[0] as usize;
        let mut bits = Vec::new();
        for &b in &bytes[1..] {
            for k in (0..6).rev() {
                bits.push(b >> k & 1 == 1);
            }
        }
        let mut adj = vec![vec![false; n]; n];
        let mut idx = 0;
        for j in 0..n {
            for i in 0..j {
                adj[i][j] = bits[idx];
                adj[j][i] = bits[idx];
                idx += 1;
            }
        }
        (n, adj)
    }

    fn adjacency(g: &CubicGraph) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; g.n()]; g.n()];
        for &(u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    #[test]
    fn k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        let (n, adj) = reference_adjacency("C~");
        assert_eq!(n, 4);
        assert_eq!(adjacency(&g), adj);
        assert_eq!(to_graph6(&g).unwrap(), "C~");
    }

    #[test]
    fn petersen() {
        let line = "IheA@GUAo";
        let g = parse_graph6(line).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert_eq!(adjacency(&g), reference_adjacency(line).1);
        assert_eq!(g, generators::petersen());
        assert_eq!(to_graph6(&generators::petersen()).unwrap(), line);
    }

    #[test]
    fn header_is_optional() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g, generators::k4());
    }

    #[test]
    fn four_cycle_is_not_cubic() {
        // C4: edges 01, 12, 23, 03.
        let line = to_line(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(matches!(
            parse_graph6(&line),
            Err(GraphError::NotCubic { degree: 2, .. })
        ));
    }

    fn to_line(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)));
            }
        }
        let mut s = vec![n as u8 + 63];
        for chunk in bits.chunks(6) {
            let mut b = 0u8;
            for k in 0..6 {
                b = (b << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
            }
            s.push(b + 63);
        }
        String::from_utf8(s).unwrap()
    }

    #[test]
    fn theta_cannot_be_encoded() {
        assert!(matches!(
            to_graph6(&generators::theta()),
            Err(GraphError::NotSimple(0, 1))
        ));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("C~~"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("C"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("C\u{7f}"), Err(GraphError::MalformedGraph6(_))));
    }

    #[test]
    fn long_vertex_count_round_trips() {
        // A prism on 64 vertices needs the 4-byte order prefix.
        let g = generators::prism(32).unwrap();
        let line = to_graph6(&g).unwrap();
        assert_eq!(line.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn random_graphs_round_trip() {
        for seed in 0..1000u64 {
            let n = 4 + 2 * (seed as usize % 9);
            let g = generators::random_bridgeless_cubic(n, seed).unwrap();
            let line = to_graph6(&g).unwrap();
            let back = parse_graph6(&line).unwrap();
            assert_eq!(adjacency(&back), adjacency(&g));
            assert_eq!(reference_adjacency(&line).1, adjacency(&g));
        }
    }
}
