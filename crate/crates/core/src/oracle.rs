//! Brute-force ground truth for the acyclic chromatic index.
//!
//! Backtracking over edges in descending endpoint-degree order, pruning on
//! properness and on bichromatic-cycle closure at every assignment, with
//! canonical-color symmetry breaking. Intended for desk-scale graphs; the
//! budget makes runaway searches a reported outcome rather than a hang.

use std::time::Instant;

use crate::coloring::{check_acyclic, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Caps on a single oracle search.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Maximum color-assignment attempts.
    pub max_nodes: u64,
    /// Optional wall-clock cap. Time-capped runs near the limit are not
    /// deterministic across machines; node caps are.
    pub max_seconds: Option<f64>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_nodes: 50_000_000,
            max_seconds: None,
        }
    }
}

impl OracleBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        OracleBudget {
            max_nodes,
            max_seconds: None,
        }
    }

    pub fn unlimited() -> Self {
        OracleBudget {
            max_nodes: u64::MAX,
            max_seconds: None,
        }
    }
}

/// Outcome of one `exists` probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Colorable(EdgeColoring),
    NotColorable,
    BudgetExceeded,
}

/// Outcome of an index search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexOutcome {
    /// The exact index plus a witness coloring.
    Index(usize, EdgeColoring),
    BudgetExceeded,
}

struct Search {
    k: usize,
    /// edge i -> endpoints
    ends: Vec<(usize, usize)>,
    /// vertex -> (slot per color 1..=k) -> other endpoint + 1, 0 if free
    slot: Vec<Vec<u32>>,
    color: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<(Instant, f64)>,
    out_of_budget: bool,
}

impl Search {
    fn new(g: &Graph, k: usize, budget: OracleBudget) -> Self {
        // densest endpoints first, ties by edge id
        let mut edges: Vec<EdgeId> = g.edges().collect();
        edges.sort_by_key(|e| (std::cmp::Reverse(g.degree(e.lo()) + g.degree(e.hi())), *e));
        let ends = edges.iter().map(|e| e.endpoints()).collect();
        Search {
            k,
            ends,
            slot: vec![vec![0u32; k + 1]; g.vertex_count()],
            color: vec![0; edges.len()],
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.max_seconds.map(|s| (Instant::now(), s)),
            out_of_budget: false,
        }
    }

    fn budget_ok(&mut self) -> bool {
        if self.out_of_budget {
            return false;
        }
        if self.nodes > self.max_nodes {
            self.out_of_budget = true;
            return false;
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some((start, cap)) = self.deadline {
                if start.elapsed().as_secs_f64() > cap {
                    self.out_of_budget = true;
                    return false;
                }
            }
        }
        true
    }

    /// Would coloring edge (u,v) with `c` close a bichromatic cycle? The
    /// cycle must alternate c with a color `a` present at both endpoints:
    /// walk from v alternating a, c, ... and see whether it comes back to u.
    fn closes_cycle(&self, u: usize, v: usize, c: usize) -> bool {
        for a in 1..=self.k {
            if a == c || self.slot[u][a] == 0 || self.slot[v][a] == 0 {
                continue;
            }
            let mut cur = v;
            let mut want = a;
            loop {
                let nxt = self.slot[cur][want];
                if nxt == 0 {
                    break;
                }
                let nxt = (nxt - 1) as usize;
                if nxt == u {
                    if want == a {
                        return true;
                    }
                    break;
                }
                cur = nxt;
                want = if want == a { c } else { a };
            }
        }
        false
    }

    fn solve(&mut self, i: usize, max_used: usize) -> bool {
        if i == self.ends.len() {
            return true;
        }
        let (u, v) = self.ends[i];
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            self.nodes += 1;
            if !self.budget_ok() {
                return false;
            }
            if self.slot[u][c] != 0 || self.slot[v][c] != 0 {
                continue;
            }
            if self.closes_cycle(u, v, c) {
                continue;
            }
            self.slot[u][c] = v as u32 + 1;
            self.slot[v][c] = u as u32 + 1;
            self.color[i] = c;
            if self.solve(i + 1, max_used.max(c)) {
                return true;
            }
            self.slot[u][c] = 0;
            self.slot[v][c] = 0;
            self.color[i] = 0;
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Decide whether `g` has an acyclic edge coloring with `k` colors.
///
/// A witness returned here always passes [`check_acyclic`].
pub fn exists_acyclic_coloring(g: &Graph, k: usize, budget: OracleBudget) -> OracleOutcome {
    assert!(k >= 1, "palette must have at least one color");
    if g.edge_count() == 0 {
        return OracleOutcome::Colorable(EdgeColoring::new(k));
    }
    let mut s = Search::new(g, k, budget);
    let solved = s.solve(0, 0);
    if solved {
        let mut c = EdgeColoring::new(k);
        let colors = s.color.clone();
        for (i, &(u, v)) in s.ends.iter().enumerate() {
            c.set(EdgeId::new(u, v), colors[i]).expect("palette");
        }
        debug_assert_eq!(check_acyclic(g, &c).unwrap(), None);
        OracleOutcome::Colorable(c)
    } else if s.out_of_budget {
        OracleOutcome::BudgetExceeded
    } else {
        OracleOutcome::NotColorable
    }
}

/// a'(G): the smallest k admitting an acyclic edge coloring, searched upward
/// from the lower bound Delta. An edgeless graph has index 0.
pub fn acyclic_chromatic_index(g: &Graph, budget: OracleBudget) -> Result<IndexOutcome> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(IndexOutcome::Index(0, EdgeColoring::new(1)));
    }
    let delta = g.max_degree()?;
    for k in delta..=g.edge_count() {
        match exists_acyclic_coloring(g, k, budget) {
            OracleOutcome::Colorable(c) => return Ok(IndexOutcome::Index(k, c)),
            OracleOutcome::NotColorable => continue,
            OracleOutcome::BudgetExceeded => return Ok(IndexOutcome::BudgetExceeded),
        }
    }
    unreachable!("distinct colors on all edges are always acyclic")
}
