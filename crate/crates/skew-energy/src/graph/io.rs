//! Text formats: graph6 for undirected graphs, an arc-list format for
//! oriented graphs.

use super::{Graph, OrientedGraph};
use crate::error::{Error, Result};

/// Encodes a graph in graph6 format (orders up to 62).
///
/// The bit string runs over the upper triangle column by column:
/// `(0,1), (0,2), (1,2), (0,3), ...`, padded with zeros to a multiple of
/// six; each 6-bit group is emitted as its value plus 63.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::InvalidParameter(format!(
            "graph6 writer handles n <= 62, got {n}"
        )));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line (orders up to 62; the optional `>>graph6<<`
/// header is accepted).
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim().trim_start_matches(">>graph6<<");
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty graph6 line".into(),
        });
    }
    if !(63..=126).contains(&bytes[0]) || bytes[0] == 126 {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("unsupported graph6 order byte {}", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let need_bits = n * n.saturating_sub(1) / 2;
    let need_bytes = need_bits.div_ceil(6);
    if bytes.len() != 1 + need_bytes {
        return Err(Error::Parse {
            pos: bytes.len().min(1 + need_bytes),
            msg: format!(
                "graph6 line for n = {n} needs {} data bytes, got {}",
                need_bytes,
                bytes.len() - 1
            ),
        });
    }
    let mut bits = Vec::with_capacity(need_bytes * 6);
    for (idx, &b) in bytes[1..].iter().enumerate() {
        if !(63..127).contains(&b) {
            return Err(Error::Parse {
                pos: 1 + idx,
                msg: format!("byte {b} out of graph6 range"),
            });
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, edges)
}

/// Writes an oriented graph as an arc list: first line `n m`, then one
/// line `i j` per arc `i -> j`, in sorted-edge order.
pub fn to_arc_list(og: &OrientedGraph) -> String {
    let mut out = format!("{} {}\n", og.n(), og.m());
    for k in 0..og.m() {
        let (t, h) = og.arc(k);
        out.push_str(&format!("{t} {h}\n"));
    }
    out
}

/// Parses the arc-list format produced by [`to_arc_list`].
pub fn from_arc_list(text: &str) -> Result<OrientedGraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (pos, header) = lines.next().ok_or(Error::Parse {
        pos: 0,
        msg: "missing `n m` header line".into(),
    })?;
    let mut parts = header.split_whitespace();
    let parse_num = |s: Option<&str>, pos: usize, what: &str| -> Result<usize> {
        s.ok_or(Error::Parse {
            pos,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            pos,
            msg: format!("{what} is not a number"),
        })
    };
    let n = parse_num(parts.next(), pos, "vertex count")?;
    let m = parse_num(parts.next(), pos, "arc count")?;
    let mut arcs = Vec::with_capacity(m);
    for _ in 0..m {
        let (pos, line) = lines.next().ok_or(Error::Parse {
            pos: pos + arcs.len() + 1,
            msg: format!("expected {m} arc lines, found {}", arcs.len()),
        })?;
        let mut parts = line.split_whitespace();
        let t = parse_num(parts.next(), pos, "arc tail")?;
        let h = parse_num(parts.next(), pos, "arc head")?;
        arcs.push((t, h));
    }
    if let Some((pos, _)) = lines.next() {
        return Err(Error::Parse {
            pos,
            msg: "trailing content after arc list".into(),
        });
    }
    OrientedGraph::from_arcs(n, &arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        let p2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(to_graph6(&p2).unwrap(), "A_");
        let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn graph6_round_trip() {
        let graphs = [
            Graph::empty(0),
            Graph::empty(1),
            Graph::empty(7),
            Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap(),
            Graph::new(9, (0..9).map(|v| (v, (v + 1) % 9))).unwrap(),
        ];
        for g in graphs {
            let enc = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn graph6_rejects_short_lines() {
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("").is_err());
    }

    #[test]
    fn arc_list_round_trip() {
        let og = OrientedGraph::from_arcs(4, &[(1, 0), (1, 2), (3, 2), (0, 3)]).unwrap();
        let text = to_arc_list(&og);
        assert_eq!(text, "4 4\n1 0\n0 3\n1 2\n3 2\n");
        assert_eq!(from_arc_list(&text).unwrap(), og);
    }

    #[test]
    fn arc_list_parse_errors_carry_positions() {
        match from_arc_list("3 2\n0 1\n") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
