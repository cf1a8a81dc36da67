//! Edge colorings, validity checks and alternating-path primitives.
//!
//! A coloring maps edges to colors `1..=k` and may be partial while under
//! construction. Color 0 is reserved for "uncolored" in serialized form.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// A partial or total edge coloring over the palette `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    palette: usize,
    assign: BTreeMap<EdgeId, usize>,
}

impl EdgeColoring {
    pub fn new(palette: usize) -> Self {
        EdgeColoring {
            palette,
            assign: BTreeMap::new(),
        }
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn get(&self, e: EdgeId) -> Option<usize> {
        self.assign.get(&e).copied()
    }

    pub fn set(&mut self, e: EdgeId, color: usize) -> Result<()> {
        if color == 0 || color > self.palette {
            return Err(Error::ColorOutOfRange {
                edge: e,
                color,
                palette: self.palette,
            });
        }
        self.assign.insert(e, color);
        Ok(())
    }

    pub fn unset(&mut self, e: EdgeId) {
        self.assign.remove(&e);
    }

    pub fn colored_count(&self) -> usize {
        self.assign.len()
    }

    pub fn is_total(&self, g: &Graph) -> bool {
        g.edges().all(|e| self.assign.contains_key(&e))
    }

    pub fn first_uncolored(&self, g: &Graph) -> Option<EdgeId> {
        g.edges().find(|e| !self.assign.contains_key(e))
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, usize)> + '_ {
        self.assign.iter().map(|(&e, &c)| (e, c))
    }

    pub fn colors_used(&self) -> BTreeSet<usize> {
        self.assign.values().copied().collect()
    }

    /// The edge at `v` colored `color`, if any; for proper colorings it is
    /// unique.
    pub fn edge_at(&self, g: &Graph, v: usize, color: usize) -> Option<EdgeId> {
        g.neighbors(v)
            .map(|w| EdgeId::new(v, w))
            .find(|&e| self.get(e) == Some(color))
    }
}

/// A failed validity check, with a witness that re-checks against the
/// coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two edges of equal color meet at `vertex`.
    Proper {
        vertex: usize,
        edges: (EdgeId, EdgeId),
        color: usize,
    },
    /// A cycle colored with exactly two colors.
    Bichromatic {
        cycle: Vec<usize>,
        colors: (usize, usize),
    },
}

impl Violation {
    /// Re-evaluate the witness against a coloring.
    pub fn verify(&self, g: &Graph, c: &EdgeColoring) -> bool {
        match self {
            Violation::Proper {
                vertex,
                edges: (e1, e2),
                color,
            } => {
                e1 != e2
                    && e1.touches(*vertex)
                    && e2.touches(*vertex)
                    && g.contains(*e1)
                    && g.contains(*e2)
                    && c.get(*e1) == Some(*color)
                    && c.get(*e2) == Some(*color)
            }
            Violation::Bichromatic {
                cycle,
                colors: (a, b),
            } => {
                if cycle.len() < 3 || a == b {
                    return false;
                }
                let mut seen = BTreeSet::new();
                for i in 0..cycle.len() {
                    let u = cycle[i];
                    let v = cycle[(i + 1) % cycle.len()];
                    if u == v || !seen.insert(u) || !g.has_edge(u, v) {
                        return false;
                    }
                    match c.get(EdgeId::new(u, v)) {
                        Some(x) if x == *a || x == *b => {}
                        _ => return false,
                    }
                }
                true
            }
        }
    }
}

/// C(v): the set of colors on colored edges incident at `v`.
pub fn color_set(g: &Graph, c: &EdgeColoring, v: usize) -> BTreeSet<usize> {
    g.neighbors(v)
        .filter_map(|w| c.get(EdgeId::new(v, w)))
        .collect()
}

/// Check properness of a total coloring; the first conflict (by vertex, then
/// edge order) is returned as a witness.
pub fn check_proper(g: &Graph, c: &EdgeColoring) -> Result<Option<Violation>> {
    if let Some(e) = c.first_uncolored(g) {
        return Err(Error::PartialColoring(e));
    }
    Ok(proper_conflict(g, c))
}

/// Properness scan that tolerates partial colorings; used internally.
fn proper_conflict(g: &Graph, c: &EdgeColoring) -> Option<Violation> {
    for v in 0..g.vertex_count() {
        let mut by_color: BTreeMap<usize, EdgeId> = BTreeMap::new();
        for w in g.neighbors(v) {
            let e = EdgeId::new(v, w);
            if let Some(color) = c.get(e) {
                if let Some(&prev) = by_color.get(&color) {
                    return Some(Violation::Proper {
                        vertex: v,
                        edges: (prev, e),
                        color,
                    });
                }
                by_color.insert(color, e);
            }
        }
    }
    None
}

/// Scan unordered color pairs in lexicographic order and return the first
/// bichromatic cycle, as a vertex cycle plus its two colors.
///
/// Requires a total, proper coloring.
pub fn find_bichromatic_cycle(
    g: &Graph,
    c: &EdgeColoring,
) -> Result<Option<(Vec<usize>, usize, usize)>> {
    if let Some(e) = c.first_uncolored(g) {
        return Err(Error::PartialColoring(e));
    }
    if let Some(Violation::Proper {
        vertex,
        edges,
        color,
    }) = proper_conflict(g, c)
    {
        return Err(Error::ImproperColoring {
            vertex,
            e1: edges.0,
            e2: edges.1,
            color,
        });
    }
    let palette = c.palette();
    for a in 1..=palette {
        for b in (a + 1)..=palette {
            if let Some(cycle) = pair_cycle(g, c, a, b) {
                return Ok(Some((cycle, a, b)));
            }
        }
    }
    Ok(None)
}

/// Find a cycle in the subgraph of edges colored `a` or `b`. In a proper
/// coloring that subgraph has maximum degree 2, so components are paths and
/// cycles; the cycle containing the smallest vertex is reported, starting at
/// that vertex and moving toward its smaller pair-neighbor.
fn pair_cycle(g: &Graph, c: &EdgeColoring, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let pair_nbrs = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .filter(|&w| {
                let col = c.get(EdgeId::new(v, w));
                col == Some(a) || col == Some(b)
            })
            .collect()
    };
    let mut visited = vec![false; n];
    for s in 0..n {
        if visited[s] {
            continue;
        }
        let nbrs = pair_nbrs(s);
        if nbrs.is_empty() {
            continue;
        }
        // walk one direction to an end or back to s
        let mut cycle = vec![s];
        visited[s] = true;
        let mut prev = s;
        let mut cur = nbrs[0];
        let mut closed = false;
        while cur != s {
            visited[cur] = true;
            cycle.push(cur);
            let next: Vec<usize> = pair_nbrs(cur).into_iter().filter(|&w| w != prev).collect();
            match next.first() {
                Some(&w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if cur == s && cycle.len() >= 3 {
            closed = true;
        }
        if closed {
            return Some(cycle);
        }
        // mark the other direction of a path component as visited too
        if nbrs.len() == 2 {
            let mut prev = s;
            let mut cur = nbrs[1];
            while !visited[cur] {
                visited[cur] = true;
                let next: Vec<usize> = pair_nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                match next.first() {
                    Some(&w) => {
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
        }
    }
    None
}

/// Full acyclicity check: proper and no bichromatic cycle. `None` means the
/// coloring is acyclic.
pub fn check_acyclic(g: &Graph, c: &EdgeColoring) -> Result<Option<Violation>> {
    if let Some(v) = check_proper(g, c)? {
        return Ok(Some(v));
    }
    Ok(
        find_bichromatic_cycle(g, c)?.map(|(cycle, a, b)| Violation::Bichromatic {
            cycle,
            colors: (a, b),
        }),
    )
}

/// The unique maximal path from `u` whose edges alternate colors `a` and `b`,
/// as a vertex list starting at `u` (just `[u]` if neither color occurs
/// there).
///
/// Requires a proper coloring and at most one of `a`, `b` present at `u`;
/// otherwise the walk start is ambiguous and an error is returned.
pub fn maximal_ab_path(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    a: usize,
    b: usize,
) -> Result<Vec<usize>> {
    assert_ne!(a, b, "alternating path needs two distinct colors");
    let cu = color_set(g, c, u);
    match (cu.contains(&a), cu.contains(&b)) {
        (true, true) => Err(Error::AmbiguousPathStart { vertex: u, a, b }),
        (false, false) => Ok(vec![u]),
        (true, false) => Ok(walk(g, c, u, a, b)),
        (false, true) => Ok(walk(g, c, u, b, a)),
    }
}

/// Follow the alternating walk from `u` starting with color `first`.
fn walk(g: &Graph, c: &EdgeColoring, u: usize, first: usize, second: usize) -> Vec<usize> {
    let mut path = vec![u];
    let mut cur = u;
    let mut want = first;
    let mut prev: Option<EdgeId> = None;
    loop {
        let next = g
            .neighbors(cur)
            .map(|w| EdgeId::new(cur, w))
            .find(|&e| Some(e) != prev && c.get(e) == Some(want));
        match next {
            Some(e) => {
                let w = e.other(cur);
                if path.contains(&w) {
                    // properness caps every vertex at one a-edge and one
                    // b-edge, so a revisit can only close the walk back at
                    // its start: the coloring carries an (a,b)-cycle
                    debug_assert_eq!(w, u);
                    return path;
                }
                path.push(w);
                cur = w;
                prev = Some(e);
                want = if want == first { second } else { first };
            }
            None => return path,
        }
    }
}

/// Does an (a,b)-alternating path join `u` and `w`?
pub fn exists_ab_path(g: &Graph, c: &EdgeColoring, u: usize, w: usize, a: usize, b: usize) -> bool {
    if u == w {
        return true;
    }
    let cu = color_set(g, c, u);
    (cu.contains(&a) && walk(g, c, u, a, b).contains(&w))
        || (cu.contains(&b) && walk(g, c, u, b, a).contains(&w))
}

/// B_i: the colors `j != i` such that an (i,j)-alternating path joins `u_s`
/// and `v_t`.
pub fn b_set(g: &Graph, c: &EdgeColoring, u_s: usize, v_t: usize, i: usize) -> BTreeSet<usize> {
    (1..=c.palette())
        .filter(|&j| j != i && exists_ab_path(g, c, u_s, v_t, i, j))
        .collect()
}

/// Exchange colors `a` and `b` on the (a,b)-component containing `u`.
/// Properness is preserved; if `u` touches neither color this is the
/// identity.
pub fn kempe_swap(g: &Graph, c: &EdgeColoring, u: usize, a: usize, b: usize) -> EdgeColoring {
    let mut out = c.clone();
    if a == b {
        return out;
    }
    let mut comp_edges: BTreeSet<EdgeId> = BTreeSet::new();
    let mut seen: BTreeSet<usize> = [u].into();
    let mut queue: VecDeque<usize> = [u].into();
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            let e = EdgeId::new(v, w);
            let col = c.get(e);
            if col == Some(a) || col == Some(b) {
                comp_edges.insert(e);
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    for e in comp_edges {
        let col = c.get(e).unwrap();
        let swapped = if col == a { b } else { a };
        out.set(e, swapped).expect("swap stays in palette");
    }
    out
}
