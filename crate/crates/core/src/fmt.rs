//! Text formats: edge lists, rotation systems, colorings.
//!
//! - edge list: one `u v` pair per line, whitespace separated, 0-indexed,
//!   `#` starts a comment;
//! - rotation system: one `v: n1 n2 ... nk` line per vertex, neighbors in
//!   cyclic order;
//! - coloring: one `u v color` triple per line, color 0 meaning uncolored.

use std::fmt::Write as _;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parse the edge-list format. The vertex count is one past the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_v = 0usize;
    let mut any = false;
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>, i: usize| -> Result<usize> {
            tok.ok_or(Error::Parse {
                line: i + 1,
                message: "expected two vertex ids".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: i + 1,
                message: "vertex ids must be nonnegative integers".into(),
            })
        };
        let u = parse(it.next(), i)?;
        let v = parse(it.next(), i)?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: i + 1,
                message: "trailing tokens after the vertex pair".into(),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("self-loop at {u}"),
            });
        }
        max_v = max_v.max(u).max(v);
        any = true;
        edges.push((u, v));
    }
    let n = if any { max_v + 1 } else { 0 };
    let mut g = Graph::new(n);
    for (idx, &(u, v)) in edges.iter().enumerate() {
        g.add_edge(u, v).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# vertices {} edges {}",
        g.vertex_count(),
        g.edge_count()
    );
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

/// Parse the rotation-system format against a known graph size. Missing
/// vertices get empty rotations (validation happens downstream).
pub fn parse_rotation(text: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut rot = vec![Vec::new(); n];
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or(Error::Parse {
            line: i + 1,
            message: "expected `v: n1 n2 ...`".into(),
        })?;
        let v: usize = head.trim().parse().map_err(|_| Error::Parse {
            line: i + 1,
            message: "bad vertex id".into(),
        })?;
        if v >= n {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("vertex {v} out of range"),
            });
        }
        let mut nbrs = Vec::new();
        for tok in rest.split_whitespace() {
            nbrs.push(tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: "bad neighbor id".into(),
            })?);
        }
        rot[v] = nbrs;
    }
    Ok(rot)
}

pub fn write_rotation(rotation: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (v, nbrs) in rotation.iter().enumerate() {
        let list: Vec<String> = nbrs.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{v}: {}", list.join(" "));
    }
    out
}

/// Parse the coloring format into an `EdgeColoring` over `palette`. Edges
/// must exist in the graph; color 0 leaves the edge uncolored.
pub fn parse_coloring(text: &str, g: &Graph, palette: usize) -> Result<EdgeColoring> {
    let mut c = EdgeColoring::new(palette);
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::Parse {
                line: i + 1,
                message: "expected `u v color`".into(),
            });
        }
        let nums: Vec<usize> = toks
            .iter()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: "bad number".into(),
                })
            })
            .collect::<Result<_>>()?;
        let (u, v, col) = (nums[0], nums[1], nums[2]);
        if u == v || u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("no edge {u} {v} in the graph"),
            });
        }
        if col == 0 {
            continue;
        }
        c.set(EdgeId::new(u, v), col).map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
    }
    Ok(c)
}

/// Write all edges with their colors (0 for uncolored), sorted by edge.
pub fn write_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# palette {}", c.palette());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.lo(), e.hi(), c.get(e).unwrap_or(0));
    }
    out
}
