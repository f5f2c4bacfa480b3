//! graph6 and edge-list codecs, plus graph6 corpus files.
//!
//! Only the single-byte graph6 size header is supported, so graph6 words
//! describe at most 62 vertices. Edge lists have no size limit.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const GRAPH6_MAX_N: usize = 62;
const BIAS: u8 = 63;

/// Upper-triangle pairs in graph6 bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
fn upper_triangle(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (offset, word) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = word.as_bytes();
    let err = |at: usize, reason: String| Error::Graph6 {
        offset: offset + at,
        reason,
    };

    let Some(&size_byte) = bytes.first() else {
        return Err(err(0, "missing size byte".into()));
    };
    if !(BIAS..=126).contains(&size_byte) {
        return Err(err(0, format!("byte {size_byte} outside 63..126")));
    }
    let n = (size_byte - BIAS) as usize;
    if n > GRAPH6_MAX_N {
        return Err(err(0, "multi-byte size headers are not supported".into()));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!("expected {expected} bytes for n={n}, found {}", bytes.len()),
        ));
    }
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(BIAS..=126).contains(&b) {
            return Err(err(i, format!("byte {b} outside 63..126")));
        }
    }

    let bit_at = |k: usize| {
        let b = bytes[1 + k / 6] - BIAS;
        (b >> (5 - k % 6)) & 1 == 1
    };
    for k in bits..(expected - 1) * 6 {
        if bit_at(k) {
            return Err(err(1 + k / 6, "nonzero padding bits".into()));
        }
    }

    let mut g = Graph::empty(n);
    for (k, (i, j)) in upper_triangle(n).enumerate() {
        if bit_at(k) {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// Canonical graph6 word for `g`, without header.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::UnsupportedSize(n));
    }
    let mut out = vec![n as u8 + BIAS];
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in upper_triangle(n) {
        acc = (acc << 1) | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + BIAS);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses `n <count>` followed by one `u v` pair per line. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing `n <count>` header".into(),
    })?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count.parse::<usize>().map_err(|e| Error::EdgeList {
            line: header_line,
            reason: format!("bad vertex count: {e}"),
        })?,
        _ => {
            return Err(Error::EdgeList {
                line: header_line,
                reason: "expected `n <count>` header".into(),
            })
        }
    };

    let mut g = Graph::empty(n);
    for (line, body) in lines {
        let ends: Vec<_> = body.split_whitespace().collect();
        let [u, v] = ends.as_slice() else {
            return Err(Error::EdgeList {
                line,
                reason: format!("expected `u v`, got {body:?}"),
            });
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::EdgeList {
                line,
                reason: format!("bad vertex {s:?}: {e}"),
            })
        };
        g.add_edge(parse(u)?, parse(v)?)?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a corpus: one graph6 word per line, blank lines and `#` comments skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(strip_comment)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

/// Guesses the format: an edge list starts with an `n <count>` line.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(strip_comment)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.split_whitespace().next() == Some("n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn known_words() {
        let k3 = Family::Complete(3).build().unwrap();
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(parse_graph6("Bw").unwrap(), k3);
        assert_eq!(parse_graph6("Bg").unwrap(), p3);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(emit_graph6(&k3).unwrap(), "Bw");
        assert_eq!(emit_graph6(&p3).unwrap(), "Bg");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(emit_graph6(&Family::Paw.build().unwrap()).unwrap(), "C{");
        assert_eq!(
            emit_graph6(&Family::CompleteTimesK2(3).build().unwrap()).unwrap(),
            "E{Sw"
        );
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), parse_graph6("Bw").unwrap());
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert_eq!(
            parse_graph6("B"),
            Err(Error::Graph6 {
                offset: 1,
                reason: "expected 2 bytes for n=3, found 1".into()
            })
        );
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("B "), Err(Error::Graph6 { offset: 1, .. })));
        // 'x' = 57: low bits are padding for n = 3
        assert!(matches!(parse_graph6("Bx"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~??"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(
            parse_graph6(">>graph6<<B"),
            Err(Error::Graph6 { offset: 11, .. })
        ));
    }

    #[test]
    fn emit_rejects_large_graphs() {
        assert_eq!(emit_graph6(&Graph::empty(63)), Err(Error::UnsupportedSize(63)));
        assert!(emit_graph6(&Graph::empty(62)).is_ok());
    }

    #[test]
    fn edge_lists() {
        let p3 = parse_edge_list("n 3\n0 1\n1 2").unwrap();
        assert_eq!(p3, Family::Path(3).build().unwrap());
        let paw = parse_edge_list("n 4\n0 1\n0 2\n1 2\n0 3").unwrap();
        assert_eq!(paw, Family::Paw.build().unwrap());
        let k2 = parse_edge_list("# comment\nn 2\n0 1\n0 1  # dup\n").unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(parse_edge_list("n 3\n1 1"), Err(Error::SelfLoop(1)));
        assert_eq!(parse_edge_list("n 3\n0 3"), Err(Error::VertexRange { vertex: 3, n: 3 }));
        assert!(matches!(parse_edge_list("0 1"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert_eq!(parse_edge_list(&emit_edge_list(&paw)).unwrap(), paw);
    }

    #[test]
    fn format_detection_and_corpus() {
        assert!(looks_like_edge_list("# x\n\nn 3\n0 1"));
        assert!(!looks_like_edge_list("Bw\n"));
        let corpus = parse_corpus("# two graphs\nBw\n\nBg # path\n").unwrap();
        assert_eq!(corpus.len(), 2);
    }
}
