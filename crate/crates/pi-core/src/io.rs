//! Plain-text graph and order files.
//!
//! Both formats share one shape: a header line `n m`, then exactly `m`
//! lines `u v` with 0-based ids. For graphs a line is an undirected edge;
//! for orders it states `u < v` and the listed relation must already be
//! transitively closed. Blank lines and `#` comments are skipped anywhere;
//! reported line numbers refer to the original text.

use crate::error::Error;
use crate::graph::Graph;
use crate::order::StrictOrder;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_id(line: usize, token: &str, n: usize) -> Result<usize, Error> {
    let id: usize = token
        .parse()
        .map_err(|_| parse_err(line, format!("expected a vertex id, found {token:?}")))?;
    if id >= n {
        return Err(parse_err(line, format!("id {id} out of range for n = {n}")));
    }
    Ok(id)
}

/// Pairs tagged with their 1-based source line, after the shared header and
/// shape checks.
fn parse_pair_file(text: &str) -> Result<(usize, Vec<(usize, (usize, usize))>), Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(parse_err(header_line, "header must be \"n m\""));
    };
    let n: usize = n
        .parse()
        .map_err(|_| parse_err(header_line, format!("bad vertex count {n:?}")))?;
    let m: usize = m
        .parse()
        .map_err(|_| parse_err(header_line, format!("bad pair count {m:?}")))?;
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let Some((line, l)) = lines.next() else {
            return Err(parse_err(
                text.lines().count() + 1,
                format!("expected {m} pair lines, found {}", pairs.len()),
            ));
        };
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(parse_err(line, "expected a line \"u v\""));
        };
        pairs.push((line, (parse_id(line, u, n)?, parse_id(line, v, n)?)));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "trailing content after the last pair"));
    }
    Ok((n, pairs))
}

/// Parses an undirected graph. Duplicate edges collapse; self-loops are
/// rejected.
pub fn parse_graph(text: &str) -> Result<Graph, Error> {
    let (n, pairs) = parse_pair_file(text)?;
    let mut g = Graph::new(n);
    for (line, (u, v)) in pairs {
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Parses a strict order; the listed pairs must form one (irreflexive,
/// antisymmetric, transitively closed) or the validation error passes
/// through.
pub fn parse_order(text: &str) -> Result<StrictOrder, Error> {
    let (n, pairs) = parse_pair_file(text)?;
    let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(_, p)| p).collect();
    StrictOrder::new(n, &pairs)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn format_order(p: &StrictOrder) -> String {
    let mut out = format!("{} {}\n", p.n(), p.size());
    for (u, v) in p.pairs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
