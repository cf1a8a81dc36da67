//! Deterministic generators for planar test graphs.
//!
//! All randomness flows through `ChaCha8Rng` seeded from a caller-supplied
//! `u64`, so corpora are byte-reproducible across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::embed::PlaneEmbedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A stacked (Apollonian) triangulation on `n >= 3` vertices: start from a
/// triangle and repeatedly insert a vertex into a uniformly chosen triangular
/// face, joining it to the three corners. Maximal planar and 2-connected.
pub fn stacked_triangulation(n: usize, seed: u64) -> Result<(Graph, PlaneEmbedding)> {
    if n < 3 {
        return Err(Error::Parse {
            line: 0,
            message: format!("stacked triangulation needs n >= 3, got {n}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    g.add_edge(0, 1)?;
    g.add_edge(1, 2)?;
    g.add_edge(0, 2)?;
    // Oriented faces; both sides of the starting triangle are faces.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [2, 1, 0]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        g.add_edge(v, a)?;
        g.add_edge(v, b)?;
        g.add_edge(v, c)?;
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    let rotation = rotation_from_faces(n, &faces);
    let emb = PlaneEmbedding::from_rotation(g.clone(), rotation)?;
    Ok((g, emb))
}

/// Build a rotation system from a complete set of oriented triangular faces.
fn rotation_from_faces(n: usize, faces: &[[usize; 3]]) -> Vec<Vec<usize>> {
    use std::collections::BTreeMap;
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for f in faces {
        let k = f.len();
        for t in 0..k {
            let u = f[t];
            let v = f[(t + 1) % k];
            let x = f[(t + 2) % k];
            succ[v].insert(u, x);
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for succ_v in &succ {
        let deg = succ_v.len();
        let mut rot = Vec::with_capacity(deg);
        if deg > 0 {
            let start = *succ_v.keys().next().unwrap();
            let mut cur = start;
            for _ in 0..deg {
                rot.push(cur);
                cur = succ_v[&cur];
            }
        }
        rotation.push(rot);
    }
    rotation
}

/// The named graphs understood by [`named`].
pub fn named_list() -> Vec<String> {
    let mut names: Vec<String> = vec![
        "K3".into(),
        "K4".into(),
        "cube".into(),
        "octahedron".into(),
        "icosahedron".into(),
        "dodecahedron".into(),
    ];
    for n in [4, 5, 6, 7, 10] {
        names.push(format!("C{n}"));
    }
    for n in [5, 6, 8] {
        names.push(format!("W{n}"));
    }
    names.push("grid3x3".into());
    names.push("grid3x4".into());
    names
}

/// Canonical constructions: `K3`, `K4`, `C<n>`, `W<n>` (hub plus n-cycle),
/// `cube`, `octahedron`, `icosahedron`, `dodecahedron`, `grid<m>x<n>`.
pub fn named(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownName(name.to_string());
    match name {
        "K3" => complete(3),
        "K4" => complete(4),
        "cube" => {
            let mut g = Graph::new(8);
            for u in 0..8usize {
                for bit in 0..3 {
                    let v = u ^ (1 << bit);
                    if u < v {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Ok(g)
        }
        "octahedron" => {
            // all pairs except the three antipodal ones
            let mut g = Graph::new(6);
            for u in 0..6 {
                for v in (u + 1)..6 {
                    if u + v != 5 {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Ok(g)
        }
        "icosahedron" => {
            // two apexes, two pentagonal rings forming an antiprism
            let mut g = Graph::new(12);
            for i in 0..5 {
                let a = 1 + i;
                let a_next = 1 + (i + 1) % 5;
                let b = 6 + i;
                let b_next = 6 + (i + 1) % 5;
                g.add_edge(0, a)?;
                g.add_edge(a, a_next)?;
                g.add_edge(a, b)?;
                g.add_edge(a, b_next)?;
                g.add_edge(b, b_next)?;
                g.add_edge(11, b)?;
            }
            Ok(g)
        }
        "dodecahedron" => {
            // generalized Petersen graph GP(10, 2)
            let mut g = Graph::new(20);
            for i in 0..10 {
                g.add_edge(i, (i + 1) % 10)?;
                g.add_edge(i, 10 + i)?;
                g.add_edge(10 + i, 10 + (i + 2) % 10)?;
            }
            Ok(g)
        }
        _ => {
            if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
                if n < 3 {
                    return Err(unknown());
                }
                return cycle(n);
            }
            if let Some(n) = name.strip_prefix('W').and_then(|s| s.parse::<usize>().ok()) {
                if n < 3 {
                    return Err(unknown());
                }
                // hub 0 plus an n-cycle 1..=n
                let mut g = Graph::new(n + 1);
                for i in 0..n {
                    let a = 1 + i;
                    g.add_edge(0, a)?;
                    g.add_edge(a, 1 + (i + 1) % n)?;
                }
                return Ok(g);
            }
            if let Some(dims) = name.strip_prefix("grid") {
                if let Some((m, n)) = dims.split_once('x') {
                    if let (Ok(m), Ok(n)) = (m.parse::<usize>(), n.parse::<usize>()) {
                        if m >= 1 && n >= 1 {
                            let at = |r: usize, c: usize| r * n + c;
                            let mut g = Graph::new(m * n);
                            for r in 0..m {
                                for c in 0..n {
                                    if c + 1 < n {
                                        g.add_edge(at(r, c), at(r, c + 1))?;
                                    }
                                    if r + 1 < m {
                                        g.add_edge(at(r, c), at(r + 1, c))?;
                                    }
                                }
                            }
                            return Ok(g);
                        }
                    }
                }
                return Err(unknown());
            }
            Err(unknown())
        }
    }
}

fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

fn cycle(n: usize) -> Result<Graph> {
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g)
}

/// Subdivide each edge independently with probability `p`. Planarity is
/// preserved; new vertices get the next free ids in edge order.
pub fn thin(g: &Graph, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = g.edges().collect();
    let chosen: Vec<bool> = edges.iter().map(|_| rng.gen_bool(p)).collect();
    let extra = chosen.iter().filter(|&&b| b).count();
    let mut out = Graph::new(g.vertex_count() + extra);
    let mut next = g.vertex_count();
    for (e, &sub) in edges.iter().zip(&chosen) {
        if sub {
            out.add_edge(e.lo(), next).expect("thin edge");
            out.add_edge(next, e.hi()).expect("thin edge");
            next += 1;
        } else {
            out.add_edge(e.lo(), e.hi()).expect("thin edge");
        }
    }
    out
}

/// One line of the corpus manifest.
#[derive(Debug, Clone, Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub seed: u64,
}

impl ManifestEntry {
    pub fn describe(name: &str, g: &Graph, seed: u64) -> Self {
        ManifestEntry {
            name: name.to_string(),
            n: g.vertex_count(),
            m: g.edge_count(),
            delta: g.max_degree().unwrap_or(0),
            seed,
        }
    }
}
