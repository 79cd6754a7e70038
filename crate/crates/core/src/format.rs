//! Text formats: graph6, the plain edge list (`n` then `u v` per line),
//! and the one-record-per-line files used for colorings, masks and partitions.

use crate::error::{Error, Result};
use crate::graph::{BooleanMask, Graph, VertexColoring};

const MAX_GRAPH6_N: usize = 1 << 18;

fn encode_n(n: usize, out: &mut Vec<u8>) {
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

/// Encodes `g` in graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    let err = |msg: &str| Error::Graph6(msg.to_string());
    if s.is_empty() {
        return Err(err("empty input"));
    }
    if s[0] == b':' || s[0] == b'&' {
        return Err(err("sparse6/digraph6 input is not graph6"));
    }
    if let Some(&c) = s.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(Error::Graph6(format!("byte {c:#04x} outside the printable range")));
    }
    let sixes = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = if s[0] != 126 {
        ((s[0] - 63) as usize, &s[1..])
    } else if s.len() >= 2 && s[1] == 126 {
        if s.len() < 8 {
            return Err(err("truncated 8-byte vertex count"));
        }
        (sixes(&s[2..8]), &s[8..])
    } else {
        if s.len() < 4 {
            return Err(err("truncated 4-byte vertex count"));
        }
        (sixes(&s[1..4]), &s[4..])
    };
    if n > MAX_GRAPH6_N {
        return Err(Error::Graph6(format!("{n} vertices exceeds the supported maximum")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} edge bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (body[need - 1] - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Writes the edge-list format: vertex count, then one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::EdgeList(format!("bad vertex count {header:?}")))?;
    let mut pairs = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => pairs.push((u, v)),
            _ => return Err(Error::EdgeList(format!("bad edge line {line:?}"))),
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Accepts either format: a first line holding a single integer means edge list.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.parse::<usize>().is_ok() {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

/// Every graph6 line of a corpus file; blank lines and `#` comments are skipped.
pub fn parse_graph6_lines(text: &str) -> Vec<(String, Result<Graph>)> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| (l.to_string(), parse_graph6(l)))
        .collect()
}

fn per_vertex_values(text: &str, n: usize, what: &str) -> Result<Vec<i64>> {
    let mut values = vec![None; n];
    let bad = |msg: String| Error::InstanceMismatch(format!("{what}: {msg}"));
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    for (idx, line) in lines.iter().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        // "vertex value" or just "value" on line `vertex`.
        let (v, val) = match toks.as_slice() {
            [val] => (idx, *val),
            [v, val] => (v.parse::<usize>().map_err(|_| bad(format!("bad vertex {v:?}")))?, *val),
            _ => return Err(bad(format!("bad line {line:?}"))),
        };
        if v >= n {
            return Err(bad(format!("vertex {v} out of range")));
        }
        values[v] = Some(val.parse::<i64>().map_err(|_| bad(format!("bad value {val:?}")))?);
    }
    values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| bad(format!("vertex {v} missing"))))
        .collect()
}

/// Coloring file: one `vertex color` (or bare `color`) per line.
pub fn parse_coloring(text: &str, n: usize) -> Result<VertexColoring> {
    Ok(VertexColoring::from_values(&per_vertex_values(text, n, "coloring")?))
}

/// Mask file: one `vertex 0|1` (or bare `0|1`) per line.
pub fn parse_mask(text: &str, n: usize) -> Result<BooleanMask> {
    let vals = per_vertex_values(text, n, "mask")?;
    if let Some(bad) = vals.iter().find(|&&x| x != 0 && x != 1) {
        return Err(Error::InstanceMismatch(format!("mask value {bad} is not 0 or 1")));
    }
    Ok(BooleanMask::new(vals.into_iter().map(|x| x == 1).collect()))
}

/// Partition file: one cell per line, space-separated vertex ids.
pub fn parse_cells(text: &str) -> Result<Vec<Vec<usize>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::NotAPartition(format!("bad vertex {t:?}")))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small_examples() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        let g = parse_graph6("D?{").unwrap();
        // Reference codec (networkx) decodes this as the star with center 4.
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
        assert_eq!(to_graph6(&Graph::path(4)), "Ch");
        assert_eq!(parse_graph6(">>graph6<<Ch\n").unwrap(), Graph::path(4));
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(parse_graph6("D?").is_err(), "truncated");
        assert!(parse_graph6("D?{?").is_err(), "too long");
        assert!(parse_graph6("").is_err());
        // P4 is "Ch"; 'C' + 6 bits leaves no padding, try n=3 with padding set
        assert!(parse_graph6("B@").is_err(), "padding bits must be zero");
        assert!(parse_graph6(":Fa@x^").is_err());
        assert!(parse_graph6("~").is_err());
    }

    #[test]
    fn graph6_long_header() {
        let g = Graph::cycle(70);
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@EhCGGC@"), "prefix from the reference codec");
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph_auto("3\n0 1\n").unwrap().edge_count(), 1);
        assert_eq!(parse_graph_auto("Ch\n").unwrap(), Graph::path(4));
        assert!(parse_edge_list("3\n0 1 2\n").is_err());
        assert!(parse_edge_list("2\n0 5\n").is_err());
    }

    #[test]
    fn coloring_and_mask_files() {
        let c = parse_coloring("0 5\n1 5\n2 9\n", 3).unwrap();
        assert_eq!(c.colors(), &[0, 0, 1]);
        let m = parse_mask("1\n0\n1\n", 3).unwrap();
        assert_eq!(m.as_slice(), &[true, false, true]);
        assert!(parse_mask("2\n0\n1\n", 3).is_err());
        assert!(parse_coloring("0 1\n", 2).is_err());
    }

    proptest::proptest! {
        #[test]
        fn graph6_round_trip(seed in 0u64..5000, n in 0usize..=50, density in 0.0f64..1.0) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut pairs = Vec::new();
            for j in 1..n { for i in 0..j { if rng.gen_bool(density) { pairs.push((i, j)); } } }
            let g = Graph::from_edge_list(n, &pairs).unwrap();
            let s = to_graph6(&g);
            proptest::prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
