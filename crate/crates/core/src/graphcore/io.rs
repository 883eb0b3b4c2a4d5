use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::Graph;
use crate::error::{Error, Result};

/// Reads a graph file: `n m` header, then `m` lines `u v`.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, path)
}

/// Parses graph text; `path` is only used in error messages.
pub fn parse_graph(text: &str, path: &Path) -> Result<Graph> {
    let perr = |line: usize, msg: String| Error::Parse { path: PathBuf::from(path), line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(perr(line_no, format!("expected two integers, found {:?}", body)));
        }
        let parse = |s: &str| s.parse::<usize>().map_err(|e| perr(line_no, format!("{s:?}: {e}")));
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a == b {
                    return Err(Error::LoopRejected { path: PathBuf::from(path), line: line_no });
                }
                for w in [a, b] {
                    if w >= n {
                        return Err(Error::VertexOutOfRange { vertex: w, n });
                    }
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| perr(0, "missing \"n m\" header".into()))?;
    if edges.len() != m {
        return Err(perr(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

/// Canonical text form: header then lexicographically sorted edges.
pub fn render_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<()> {
    std::fs::write(path, render_graph(g))?;
    Ok(())
}
