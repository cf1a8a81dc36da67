//! Combinatorial planar embeddings.
//!
//! An embedding is a rotation system: a cyclic order of neighbors around
//! every vertex. Faces are derived by dart tracing, and an embedding is
//! accepted exactly when the face count satisfies Euler's formula, so the
//! same validation covers both computed and user-supplied rotations.
//!
//! The embedding produced by [`PlaneEmbedding::embed`] is algorithm-dependent
//! and not canonical; all face-based reports are relative to the returned
//! rotation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// A face, as the cyclic sequence of darts along its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<(usize, usize)>,
}

impl Face {
    /// Face degree: boundary length, with cut edges counted twice.
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// Distinct vertices on the boundary, ascending.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.boundary.iter().map(|&(u, _)| u).collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.boundary.iter().any(|&(u, _)| u == v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneEmbedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    dart_face: BTreeMap<(usize, usize), usize>,
}

impl PlaneEmbedding {
    /// Compute a planar embedding of a connected graph, or report that none
    /// exists.
    pub fn embed(g: &Graph) -> Result<Self> {
        if g.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.vertex_count();
        if n >= 3 && g.edge_count() > 3 * n - 6 {
            return Err(Error::NotPlanar);
        }
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
        for block in g.blocks() {
            if block.len() == 1 {
                let e = block[0];
                rotation[e.lo()].push(e.hi());
                rotation[e.hi()].push(e.lo());
            } else {
                for (v, rot) in dmp_block(&block)? {
                    rotation[v].extend(rot);
                }
            }
        }
        Self::from_rotation(g.clone(), rotation)
    }

    /// Validate an explicit rotation system: every incident edge must appear
    /// exactly once per vertex, and the traced faces must satisfy Euler's
    /// formula.
    pub fn from_rotation(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        if rotation.len() != n {
            return Err(Error::InvalidRotation {
                vertex: rotation.len().min(n),
                reason: format!("{} rotation lists for {} vertices", rotation.len(), n),
            });
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let nbrs: Vec<usize> = graph.neighbors(v).collect();
            if sorted != nbrs || rot.len() != nbrs.len() {
                return Err(Error::InvalidRotation {
                    vertex: v,
                    reason: "rotation is not a permutation of the neighbor set".into(),
                });
            }
        }

        let faces = trace_faces(&graph, &rotation);
        let f = faces.len();
        if n + f != graph.edge_count() + 2 {
            return Err(Error::NotPlanar);
        }
        let mut dart_face = BTreeMap::new();
        for (i, face) in faces.iter().enumerate() {
            for &d in &face.boundary {
                dart_face.insert(d, i);
            }
        }
        Ok(PlaneEmbedding {
            graph,
            rotation,
            faces,
            dart_face,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn face_degree(&self, i: usize) -> usize {
        self.faces[i].degree()
    }

    /// The face lying to the left of the dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Result<usize> {
        self.dart_face
            .get(&(u, v))
            .copied()
            .ok_or(Error::MissingEdge(EdgeId::new(u, v)))
    }

    /// The two faces bounded by an edge, by dart. They coincide exactly when
    /// the edge is a cut edge.
    pub fn faces_of_edge(&self, e: EdgeId) -> Result<(usize, usize)> {
        let f1 = self.face_of_dart(e.lo(), e.hi())?;
        let f2 = self.face_of_dart(e.hi(), e.lo())?;
        Ok((f1, f2))
    }

    /// Distinct faces incident with `v`, ascending.
    pub fn incident_faces(&self, v: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &w in self.graph.neighbor_set(v) {
            if let Some(&f) = self.dart_face.get(&(v, w)) {
                out.insert(f);
            }
            if let Some(&f) = self.dart_face.get(&(w, v)) {
                out.insert(f);
            }
        }
        out
    }

    /// m_3(v): the number of 3-faces incident with `v`.
    pub fn incident_3faces(&self, v: usize) -> usize {
        self.incident_faces(v)
            .into_iter()
            .filter(|&f| self.faces[f].degree() == 3)
            .count()
    }

    /// m_3(uv): the number of 3-faces among the faces of an edge.
    pub fn incident_3faces_of_edge(&self, e: EdgeId) -> Result<usize> {
        let (f1, f2) = self.faces_of_edge(e)?;
        let mut set = BTreeSet::new();
        set.insert(f1);
        set.insert(f2);
        Ok(set
            .into_iter()
            .filter(|&f| self.faces[f].degree() == 3)
            .count())
    }
}

/// Trace the dart orbits of a rotation system.
///
/// The successor of the dart `u -> v` leaves `v` towards the neighbor that
/// follows `u` in `rotation[v]`. For a connected graph with no edges (a
/// single vertex) the one face of the plane is reported with an empty
/// boundary.
fn trace_faces(graph: &Graph, rotation: &[Vec<usize>]) -> Vec<Face> {
    let n = graph.vertex_count();
    if graph.edge_count() == 0 {
        return vec![Face { boundary: vec![] }];
    }
    let mut pos: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for (v, rot) in rotation.iter().enumerate() {
        for (i, &w) in rot.iter().enumerate() {
            pos[v].insert(w, i);
        }
    }
    let mut darts: Vec<(usize, usize)> = Vec::with_capacity(2 * graph.edge_count());
    for e in graph.edges() {
        darts.push((e.lo(), e.hi()));
        darts.push((e.hi(), e.lo()));
    }
    darts.sort_unstable();
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for &start in &darts {
        if used.contains(&start) {
            continue;
        }
        let mut boundary = Vec::new();
        let mut d = start;
        loop {
            boundary.push(d);
            used.insert(d);
            let (u, v) = d;
            let i = pos[v][&u];
            let w = rotation[v][(i + 1) % rotation[v].len()];
            d = (v, w);
            if d == start {
                break;
            }
        }
        faces.push(Face { boundary });
    }
    faces
}

/// One fragment of the not-yet-embedded part of a block.
enum FragmentKind {
    Chord(EdgeId),
    Component(Vec<usize>),
}

struct Fragment {
    attach: BTreeSet<usize>,
    kind: FragmentKind,
}

/// Demoucron-Malgrange-Pertuiset planarity testing and embedding for one
/// 2-connected block. Returns the rotation lists of the block's vertices, or
/// `NotPlanar`.
fn dmp_block(block: &[EdgeId]) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for e in block {
        adj.entry(e.lo()).or_default().insert(e.hi());
        adj.entry(e.hi()).or_default().insert(e.lo());
    }

    let cycle = initial_cycle(&adj);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut embedded: BTreeSet<EdgeId> = BTreeSet::new();
    let mut on_emb: BTreeSet<usize> = cycle.iter().copied().collect();
    for i in 0..cycle.len() {
        embedded.insert(EdgeId::new(cycle[i], cycle[(i + 1) % cycle.len()]));
    }

    while embedded.len() < block.len() {
        let fragments = fragments_of(&adj, &embedded, &on_emb);
        debug_assert!(!fragments.is_empty());

        let face_verts: Vec<BTreeSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|frag| {
                (0..faces.len())
                    .filter(|&i| frag.attach.is_subset(&face_verts[i]))
                    .collect()
            })
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return Err(Error::NotPlanar);
        }
        let pick = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let face_idx = admissible[pick][0];
        let frag = &fragments[pick];

        let path = alpha_path(&adj, frag);
        split_face(&mut faces, face_idx, &path);
        for w in path.windows(2) {
            embedded.insert(EdgeId::new(w[0], w[1]));
        }
        for &v in &path[1..path.len() - 1] {
            on_emb.insert(v);
        }
    }

    // Recover the rotation from the oriented face set: in each face cycle
    // ... u v x ..., the neighbor of v following u is x.
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in &faces {
        let k = f.len();
        for t in 0..k {
            let u = f[t];
            let v = f[(t + 1) % k];
            let x = f[(t + 2) % k];
            succ.insert((v, u), x);
        }
    }
    let mut out = Vec::new();
    for (&v, nbrs) in &adj {
        let deg = nbrs.len();
        let start = *nbrs.iter().next().unwrap();
        let mut rot = Vec::with_capacity(deg);
        let mut cur = start;
        for _ in 0..deg {
            rot.push(cur);
            cur = succ[&(v, cur)];
        }
        debug_assert_eq!(cur, start, "rotation at {v} does not close");
        out.push((v, rot));
    }
    Ok(out)
}

/// Any cycle of a 2-connected block, found by DFS back edge.
fn initial_cycle(adj: &BTreeMap<usize, BTreeSet<usize>>) -> Vec<usize> {
    struct Frame {
        v: usize,
        parent: usize,
        nbrs: Vec<usize>,
        i: usize,
    }
    let root = *adj.keys().next().unwrap();
    let mut visited: BTreeSet<usize> = [root].into();
    let mut on_path: BTreeSet<usize> = [root].into();
    let mut stack = vec![Frame {
        v: root,
        parent: usize::MAX,
        nbrs: adj[&root].iter().copied().collect(),
        i: 0,
    }];
    loop {
        let frame = stack.last_mut().expect("2-connected block without a cycle");
        let v = frame.v;
        if frame.i < frame.nbrs.len() {
            let w = frame.nbrs[frame.i];
            frame.i += 1;
            if w == frame.parent {
                continue;
            }
            if on_path.contains(&w) {
                let i = stack.iter().position(|f| f.v == w).unwrap();
                return stack[i..].iter().map(|f| f.v).collect();
            }
            if visited.contains(&w) {
                continue;
            }
            visited.insert(w);
            on_path.insert(w);
            stack.push(Frame {
                v: w,
                parent: v,
                nbrs: adj[&w].iter().copied().collect(),
                i: 0,
            });
        } else {
            let f = stack.pop().unwrap();
            on_path.remove(&f.v);
        }
    }
}

fn fragments_of(
    adj: &BTreeMap<usize, BTreeSet<usize>>,
    embedded: &BTreeSet<EdgeId>,
    on_emb: &BTreeSet<usize>,
) -> Vec<Fragment> {
    let mut frags = Vec::new();
    // Chords: unembedded edges with both ends on the embedding.
    for (&u, nbrs) in adj {
        for &v in nbrs {
            if u < v && on_emb.contains(&u) && on_emb.contains(&v) {
                let e = EdgeId::new(u, v);
                if !embedded.contains(&e) {
                    frags.push(Fragment {
                        attach: [u, v].into(),
                        kind: FragmentKind::Chord(e),
                    });
                }
            }
        }
    }
    // Components of the unembedded vertices, with their contact vertices.
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &s in adj.keys() {
        if on_emb.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        let mut attach = BTreeSet::new();
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if on_emb.contains(&w) {
                    attach.insert(w);
                } else if !seen.contains(&w) {
                    seen.insert(w);
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        frags.push(Fragment {
            attach,
            kind: FragmentKind::Component(comp),
        });
    }
    frags
}

/// A path through the fragment between two attachment vertices.
fn alpha_path(adj: &BTreeMap<usize, BTreeSet<usize>>, frag: &Fragment) -> Vec<usize> {
    match &frag.kind {
        FragmentKind::Chord(e) => vec![e.lo(), e.hi()],
        FragmentKind::Component(comp) => {
            let inside: BTreeSet<usize> = comp.iter().copied().collect();
            let a1 = *frag.attach.iter().next().unwrap();
            let targets: BTreeSet<usize> = frag.attach.iter().copied().skip(1).collect();
            let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
            let mut queue: std::collections::VecDeque<usize> = Default::default();
            for &w in &adj[&a1] {
                if inside.contains(&w) && !parent.contains_key(&w) {
                    parent.insert(w, a1);
                    queue.push_back(w);
                }
            }
            while let Some(v) = queue.pop_front() {
                if let Some(&t) = adj[&v].iter().find(|w| targets.contains(w)) {
                    let mut path = vec![t, v];
                    let mut cur = v;
                    while parent[&cur] != a1 {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.push(a1);
                    path.reverse();
                    return path;
                }
                for &w in &adj[&v] {
                    if inside.contains(&w) && !parent.contains_key(&w) {
                        parent.insert(w, v);
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragment with unreachable second attachment")
        }
    }
}

/// Split the oriented face `faces[idx]` along `path`, whose endpoints lie on
/// the face and whose interior is new.
fn split_face(faces: &mut Vec<Vec<usize>>, idx: usize, path: &[usize]) {
    let boundary = faces[idx].clone();
    let k = boundary.len();
    let a1 = path[0];
    let a2 = *path.last().unwrap();
    let i = boundary.iter().position(|&v| v == a1).unwrap();
    let j = boundary.iter().position(|&v| v == a2).unwrap();
    let interior = &path[1..path.len() - 1];

    // arc from a1 to a2 following the face orientation
    let mut arc1 = Vec::new();
    let mut t = i;
    loop {
        arc1.push(boundary[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    // arc from a2 back to a1
    let mut arc2 = Vec::new();
    let mut t = j;
    loop {
        arc2.push(boundary[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }

    let mut f1 = arc1;
    f1.extend(interior.iter().rev().copied());
    let mut f2 = arc2;
    f2.extend(interior.iter().copied());
    faces[idx] = f1;
    faces.push(f2);
}
