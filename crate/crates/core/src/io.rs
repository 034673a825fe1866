//! Reading and writing graphs.
//!
//! The text format is a header line `n m` followed by `m` lines `u v` with
//! 0-based vertex ids. Blank lines and lines starting with `#` or `c` are
//! skipped. JSON input is `{"n": .., "edges": [[u, v], ..]}`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses either format, choosing JSON when the first non-blank character
/// is `{`.
pub fn parse_graph(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_json(input: &str) -> Result<Graph> {
    serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

pub fn parse_text(input: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') || text.starts_with('c') {
            continue;
        }
        let err = |msg: String| Error::Parse { line, msg };
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two integers, found {:?}", text)));
        }
        let a: usize = fields[0].parse().map_err(|_| err(format!("{:?} is not a vertex id", fields[0])))?;
        let b: usize = fields[1].parse().map_err(|_| err(format!("{:?} is not a vertex id", fields[1])))?;
        let Some((n, m)) = header else {
            header = Some((a, b));
            continue;
        };
        if edges.len() == m {
            return Err(err(format!("more than the {m} edges announced in the header")));
        }
        for v in [a, b] {
            if v >= n {
                return Err(err(format!("vertex {v} out of range for {n} vertices")));
            }
        }
        if a == b {
            return Err(err(format!("self-loop at {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(err(format!("duplicate edge {a}-{b}")));
        }
        edges.push((a, b));
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: input.lines().count().max(1),
            msg: "missing header `n m`".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: input.lines().count().max(1),
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Canonical text form: header, then edges in sorted order.
pub fn to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs serialise")
}
