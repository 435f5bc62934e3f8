//! Text formats: whitespace edge lists and graph6.
//!
//! Edge lists hold one `u v` pair per line. `#` starts a comment, blank
//! lines are ignored and `vertex <name>` declares a vertex that may have no
//! edges. Vertices are indexed in order of first appearance.
//!
//! graph6 stores the upper triangle of the adjacency matrix column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte, each
//! byte offset by 63, after a size prefix.

use std::collections::HashSet;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut known: HashSet<String> = HashSet::new();
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut seen: HashSet<(String, String)> = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        if tokens.len() != 2 {
            return Err(err(format!(
                "expected two vertex names, found {} tokens",
                tokens.len()
            )));
        }
        let mut declare = |name: &str| {
            if known.insert(name.to_string()) {
                names.push(name.to_string());
            }
        };
        if tokens[0] == "vertex" {
            declare(tokens[1]);
            continue;
        }
        let (a, b) = (tokens[0], tokens[1]);
        if a == b {
            return Err(err(Error::LoopRejected(a.to_string()).to_string()));
        }
        let key = if a < b { (a, b) } else { (b, a) };
        if !seen.insert((key.0.to_string(), key.1.to_string())) {
            return Err(err(
                Error::DuplicateEdge(a.to_string(), b.to_string()).to_string()
            ));
        }
        declare(a);
        declare(b);
        pairs.push((a.to_string(), b.to_string()));
    }
    Graph::build(&names, &pairs).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })
}

/// Inverse of [`parse_edge_list`]: the shortest prefix of the vertex order
/// that is needed to reproduce the indices is written as `vertex` lines,
/// then edges follow in id order.
pub fn to_edge_list(g: &Graph) -> String {
    let n = g.vertex_count();
    let declared = (0..=n)
        .find(|&k| appearance_order(g, k).eq(0..n))
        .unwrap_or(n);
    let mut out = String::new();
    for v in 0..declared {
        out.push_str(&format!("vertex {}\n", g.name(v)));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.name(u), g.name(v)));
    }
    out
}

/// Index order [`parse_edge_list`] assigns when vertices `0..k` are
/// declared up front and the rest appear through the edges.
fn appearance_order(g: &Graph, k: usize) -> impl Iterator<Item = usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order: Vec<usize> = (0..k).collect();
    order.iter().for_each(|&v| seen[v] = true);
    for &(u, v) in g.edges() {
        for x in [u, v] {
            if !seen[x] {
                seen[x] = true;
                order.push(x);
            }
        }
    }
    order.into_iter()
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
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

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 record. Vertices are named `0..n`.
pub fn parse_graph6(record: &str) -> Result<Graph> {
    parse_graph6_record(record, 0)
}

fn parse_graph6_record(record: &str, index: usize) -> Result<Graph> {
    let err = |message: &str| Error::Graph6 {
        record: index,
        message: message.to_string(),
    };
    let text = record.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(err("byte outside the printable graph6 range"));
    }
    let sixes = |slice: &[u8]| slice.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(err("empty record")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (sixes(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (sixes(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(err("truncated size prefix")),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(err(&format!(
            "expected {} adjacency bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(err("non-zero padding bits"));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::numbered(n, &pairs)
}

/// Reads graph6 records, one per non-blank line. Errors carry the 0-based
/// record index.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .filter(|line| !matches!(line, Ok(l) if l.trim().is_empty()))
        .enumerate()
        .map(|(i, line)| match line {
            Ok(l) => parse_graph6_record(l.trim(), i),
            Err(e) => Err(Error::Graph6 {
                record: i,
                message: e.to_string(),
            }),
        })
}
