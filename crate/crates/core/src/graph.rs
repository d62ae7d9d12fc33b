//! Simple undirected graphs over `0..n` with bitset adjacency, plus the
//! path and hole primitives shared by every detector.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A set of vertices with constant-time membership.
pub type VertexSet = FixedBitSet;

const NONE: usize = usize::MAX;

/// A finite simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: (0..n).map(|_| VertexSet::with_capacity(n)).collect(), m: 0 }
    }

    /// Builds a graph, rejecting self-loops, repeated edges and ids `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidInput(format!("duplicate edge {u} {v}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::with_capacity(self.n())
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of<I: IntoIterator<Item = Vertex>>(&self, vs: I) -> VertexSet {
        let mut s = self.empty_set();
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[X]`: every vertex in `X` or adjacent to a member of `X`.
    pub fn closed_neighborhood_of_set(&self, xs: &VertexSet) -> VertexSet {
        let mut s = xs.clone();
        self.extend_closed_neighborhood(&mut s, xs.ones());
        s
    }

    /// `acc ∪= N[v]` for every `v` in `vs`.
    pub fn extend_closed_neighborhood<I: IntoIterator<Item = Vertex>>(&self, acc: &mut VertexSet, vs: I) {
        for v in vs {
            acc.insert(v);
            acc.union_with(&self.adj[v]);
        }
    }

    /// The subgraph induced on `keep`, relabelled to `0..keep.len()` in
    /// increasing id order. Returns the graph and the old id of each new vertex.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.ones().collect();
        let mut new_id = vec![NONE; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].ones() {
                if new_id[w] != NONE && new_id[w] > i {
                    g.add_edge(i, new_id[w]).expect("induced subgraph of a simple graph is simple");
                }
            }
        }
        (g, old)
    }
}

/// A path given by its vertex sequence. The length is the number of edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path(Vec<Vertex>);

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Path(vertices)
    }

    pub fn trivial(v: Vertex) -> Self {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Consecutive vertices adjacent, all vertices distinct and in range.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = g.empty_set();
        for &v in &self.0 {
            if seen.put(v) {
                return false;
            }
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// A path of `g` with no edges between non-consecutive vertices.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        if !self.is_path_in(g) {
            return false;
        }
        let set = g.set_of(self.0.iter().copied());
        let k = self.0.len();
        self.0.iter().enumerate().all(|(i, &v)| {
            let expected = usize::from(i > 0) + usize::from(i + 1 < k);
            g.neighbors(v).intersection_count(&set) == expected
        })
    }
}

/// An induced cycle of length at least four, stored in canonical rotation:
/// smallest vertex first, then its smaller neighbour on the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hole(Vec<Vertex>);

impl Hole {
    /// Validates `seq` as a hole of `g` and canonicalises it.
    pub fn new(g: &Graph, seq: &[Vertex]) -> Option<Hole> {
        is_hole(g, seq).then(|| Hole(canonical_rotation(seq)))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of edges, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// The `i`-th vertex, indices taken cyclically.
    pub fn at(&self, i: usize) -> Vertex {
        self.0[i % self.0.len()]
    }

    pub fn vertex_set(&self, g: &Graph) -> VertexSet {
        g.set_of(self.0.iter().copied())
    }

    /// Ordering used for every "shortest recorded hole" reduction:
    /// length first, then the canonical vertex sequence.
    pub fn key(&self) -> (usize, &[Vertex]) {
        (self.0.len(), &self.0)
    }
}

/// Rotates and possibly reverses a cyclic sequence so that the minimum vertex
/// comes first and the smaller of its two cyclic neighbours second.
pub fn canonical_rotation(seq: &[Vertex]) -> Vec<Vertex> {
    let k = seq.len();
    if k == 0 {
        return Vec::new();
    }
    let start = (0..k).min_by_key(|&i| seq[i]).unwrap();
    let next = seq[(start + 1) % k];
    let prev = seq[(start + k - 1) % k];
    if next <= prev {
        (0..k).map(|i| seq[(start + i) % k]).collect()
    } else {
        (0..k).map(|i| seq[(start + k - i) % k]).collect()
    }
}

/// True iff `seq` lists at least four distinct vertices forming an induced
/// cycle of `g` in cyclic order.
pub fn is_hole(g: &Graph, seq: &[Vertex]) -> bool {
    let k = seq.len();
    if k < 4 || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut set = g.empty_set();
    for &v in seq {
        if set.put(v) {
            return false;
        }
    }
    (0..k).all(|i| g.has_edge(seq[i], seq[(i + 1) % k]))
        && seq.iter().all(|&v| g.neighbors(v).intersection_count(&set) == 2)
}

/// True iff `seq` is an odd hole of `g`.
pub fn is_odd_hole(g: &Graph, seq: &[Vertex]) -> bool {
    seq.len() % 2 == 1 && is_hole(g, seq)
}

/// `d_C(u, v)`: the shorter of the two arcs of `hole` between `u` and `v`.
pub fn hole_distance(hole: &Hole, u: Vertex, v: Vertex) -> Result<usize> {
    let pu = hole.position(u).ok_or_else(|| Error::InvalidInput(format!("vertex {u} is not on the hole")))?;
    let pv = hole.position(v).ok_or_else(|| Error::InvalidInput(format!("vertex {v} is not on the hole")))?;
    let d = pu.abs_diff(pv);
    Ok(d.min(hole.len() - d))
}

/// Shortest-path tree from one source in which only the source and vertices
/// outside `forbidden` may be passed through. Forbidden vertices can still be
/// reached as endpoints.
///
/// Vertices are discovered layer by layer, and every vertex records the
/// smallest-id predecessor in the previous layer, so the path to each target
/// is a canonical representative among all shortest ones.
#[derive(Clone, Debug)]
pub struct BfsTree {
    source: Vertex,
    pred: Vec<Vertex>,
    dist: Vec<u32>,
}

impl BfsTree {
    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn dist(&self, t: Vertex) -> Option<usize> {
        (self.dist[t] != u32::MAX).then_some(self.dist[t] as usize)
    }

    pub fn reached(&self, t: Vertex) -> bool {
        self.dist[t] != u32::MAX
    }

    /// Path from the source to `t`.
    pub fn path_to(&self, t: Vertex) -> Option<Path> {
        if !self.reached(t) {
            return None;
        }
        let mut out = Vec::with_capacity(self.dist[t] as usize + 1);
        let mut x = t;
        out.push(x);
        while x != self.source {
            x = self.pred[x];
            out.push(x);
        }
        out.reverse();
        Some(Path(out))
    }

    /// Writes the path from `t` back to the source into `out` (target first).
    pub fn path_from_target(&self, t: Vertex, out: &mut Vec<Vertex>) -> bool {
        out.clear();
        if !self.reached(t) {
            return false;
        }
        let mut x = t;
        out.push(x);
        while x != self.source {
            x = self.pred[x];
            out.push(x);
        }
        true
    }
}

/// Layered BFS from `s`. Only the source and non-forbidden vertices are
/// expanded; `alive`, when given, restricts the graph to an induced subgraph.
/// Stops early once `stop_at` is reached.
pub fn bfs_tree(
    g: &Graph,
    s: Vertex,
    forbidden: Option<&VertexSet>,
    alive: Option<&VertexSet>,
    stop_at: Option<Vertex>,
) -> BfsTree {
    let n = g.n();
    let mut pred = vec![NONE; n];
    let mut dist = vec![u32::MAX; n];
    dist[s] = 0;
    pred[s] = s;
    let mut visited = g.empty_set();
    visited.insert(s);
    let mut frontier = g.empty_set();
    frontier.insert(s);
    let mut next = g.empty_set();
    let mut depth = 0u32;
    if stop_at == Some(s) {
        return BfsTree { source: s, pred, dist };
    }
    loop {
        // Frontier vertices that may be passed through.
        if let Some(f) = forbidden {
            let keep_source = frontier.contains(s);
            frontier.difference_with(f);
            if keep_source {
                frontier.insert(s);
            }
        }
        next.clear();
        for u in frontier.ones() {
            next.union_with(&g.adj[u]);
        }
        next.difference_with(&visited);
        if let Some(a) = alive {
            next.intersect_with(a);
        }
        if next.is_clear() {
            break;
        }
        depth += 1;
        let mut done = false;
        for w in next.ones() {
            let p = frontier.intersection(&g.adj[w]).next().expect("discovered vertex has a frontier neighbour");
            pred[w] = p;
            dist[w] = depth;
            if stop_at == Some(w) {
                done = true;
            }
        }
        if done {
            break;
        }
        visited.union_with(&next);
        std::mem::swap(&mut frontier, &mut next);
    }
    BfsTree { source: s, pred, dist }
}

/// A shortest `s`–`t` path whose interior avoids `forbidden_interior`.
/// The ends themselves may lie in the forbidden set.
pub fn shortest_path_avoiding(g: &Graph, s: Vertex, t: Vertex, forbidden_interior: &VertexSet) -> Result<Option<Path>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidInput("path ends must be distinct".into()));
    }
    Ok(bfs_tree(g, s, Some(forbidden_interior), None, Some(t)).path_to(t))
}
