//! Exponential ground truth: exhaustive odd-hole and pyramid searches, plus
//! the instance generators in [`generate`].

pub mod generate;
pub mod lemmas;

use crate::detect::{Detection, DetectorTag};
use crate::error::{Error, Result};
use crate::graph::{canonical_rotation, Graph, Hole, Vertex, VertexSet};
use crate::structure::{check_pyramid, GreatPyramidWitness, PyramidWitness};

pub use generate::{generate, Family, Instance, InstanceSpec, Planted, PlantedArcs};

/// Default vertex bound for [`brute_shortest_odd_hole`].
pub const DEFAULT_ORACLE_GUARD: usize = 16;

/// Default vertex bound for [`brute_find_pyramids`].
pub const DEFAULT_PYRAMID_GUARD: usize = 14;

/// Vertex bound for [`subset_shortest_odd_hole`].
pub const SUBSET_ORACLE_LIMIT: usize = 9;

/// Shortest odd hole by exhaustive search, refusing graphs above
/// [`DEFAULT_ORACLE_GUARD`] vertices.
pub fn brute_shortest_odd_hole(g: &Graph) -> Result<Detection> {
    if g.n() > DEFAULT_ORACLE_GUARD {
        return Err(Error::SizeGuard { what: "oracle", n: g.n(), limit: DEFAULT_ORACLE_GUARD });
    }
    Ok(brute_shortest_odd_hole_unguarded(g))
}

/// [`brute_shortest_odd_hole`] without the size guard.
pub fn brute_shortest_odd_hole_unguarded(g: &Graph) -> Detection {
    let mut search = HoleSearch::new(g, false);
    search.run();
    match search.best.into_iter().next() {
        Some(hole) => Detection::Found { hole, detector: DetectorTag::Oracle },
        None => Detection::Failure,
    }
}

/// Every shortest odd hole, in increasing canonical order.
pub fn all_shortest_odd_holes(g: &Graph) -> Vec<Hole> {
    let mut search = HoleSearch::new(g, true);
    search.run();
    let mut holes = search.best;
    holes.sort_by(|a, b| a.key().cmp(&b.key()));
    holes.dedup();
    holes
}

/// DFS over induced paths `s = p0, p1, ..., pk` with every vertex larger
/// than `s`. A new vertex adjacent to `s` closes a hole and is not extended.
struct HoleSearch<'g> {
    g: &'g Graph,
    collect_all: bool,
    best_len: usize,
    best: Vec<Hole>,
    path: Vec<Vertex>,
}

impl<'g> HoleSearch<'g> {
    fn new(g: &'g Graph, collect_all: bool) -> Self {
        HoleSearch { g, collect_all, best_len: usize::MAX, best: Vec::new(), path: Vec::new() }
    }

    fn run(&mut self) {
        let g = self.g;
        for s in g.vertices() {
            for p1 in g.neighbors(s).ones().filter(|&x| x > s) {
                self.path.clear();
                self.path.extend([s, p1]);
                // vertices that may not join: closed nbhd of the path minus
                // the last vertex's open neighbourhood; s's neighbours are
                // handled separately since they close the cycle.
                let mut blocked = g.empty_set();
                blocked.insert_range(..s + 1);
                blocked.insert(p1);
                self.extend(&blocked);
            }
        }
    }

    fn record(&mut self, seq: &[Vertex]) {
        let len = seq.len();
        if len.is_multiple_of(2) || len < 5 || len > self.best_len {
            return;
        }
        let hole = Hole::new(self.g, seq).expect("closed induced path is a hole");
        if len < self.best_len {
            self.best_len = len;
            self.best.clear();
            self.best.push(hole);
        } else if self.collect_all {
            self.best.push(hole);
        } else if hole.key() < self.best[0].key() {
            self.best[0] = hole;
        }
    }

    fn extend(&mut self, blocked: &VertexSet) {
        let g = self.g;
        let s = self.path[0];
        let last = *self.path.last().unwrap();
        // closing yields a cycle of path.len() + 1 vertices
        if self.path.len() + 1 > self.best_len {
            return;
        }
        for x in g.neighbors(last).ones() {
            if blocked.contains(x) {
                continue;
            }
            self.path.push(x);
            if g.has_edge(x, s) {
                if self.path.len() >= 4 {
                    let seq = self.path.clone();
                    self.record(&seq);
                }
            } else {
                let mut next = blocked.clone();
                next.union_with(g.neighbors(last));
                next.insert(x);
                self.extend(&next);
            }
            self.path.pop();
        }
    }
}

/// Shortest odd hole by trying every vertex subset, for `n ≤ 9`. Shares no
/// code with the DFS oracle beyond the final rotation.
pub fn subset_shortest_odd_hole(g: &Graph) -> Result<Option<Vec<Vertex>>> {
    let n = g.n();
    if n > SUBSET_ORACLE_LIMIT {
        return Err(Error::SizeGuard { what: "subset oracle", n, limit: SUBSET_ORACLE_LIMIT });
    }
    let adj: Vec<u32> = (0..n).map(|v| (0..n).filter(|&u| g.has_edge(u, v)).fold(0u32, |m, u| m | (1 << u))).collect();
    let mut best: Option<Vec<Vertex>> = None;
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 5 || k.is_multiple_of(2) {
            continue;
        }
        if let Some(b) = &best {
            if k > b.len() {
                continue;
            }
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if members.iter().any(|&v| (adj[v] & mask).count_ones() != 2) {
            continue;
        }
        // walk the 2-regular induced subgraph; it is a hole iff connected
        let mut order = vec![members[0]];
        let mut prev = usize::MAX;
        let mut cur = members[0];
        loop {
            let nbrs = adj[cur] & mask;
            let next = (0..n).find(|&u| nbrs & (1 << u) != 0 && u != prev).unwrap();
            if next == members[0] {
                break;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() != k {
            continue;
        }
        let cand = canonical_rotation(&order);
        let better = match &best {
            None => true,
            Some(b) => (cand.len(), &cand) < (b.len(), b),
        };
        if better {
            best = Some(cand);
        }
    }
    Ok(best)
}

/// Induced paths from `from` to `to` whose interior avoids `avoid`.
fn induced_paths(g: &Graph, from: Vertex, to: Vertex, avoid: &VertexSet) -> Vec<Vec<Vertex>> {
    fn go(
        g: &Graph,
        to: Vertex,
        avoid: &VertexSet,
        path: &mut Vec<Vertex>,
        blocked: &VertexSet,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let last = *path.last().unwrap();
        if g.has_edge(last, to) {
            path.push(to);
            out.push(path.clone());
            path.pop();
            return;
        }
        for x in g.neighbors(last).ones() {
            if blocked.contains(x) || avoid.contains(x) || x == to {
                continue;
            }
            let mut next = blocked.clone();
            next.union_with(g.neighbors(last));
            next.insert(last);
            path.push(x);
            go(g, to, avoid, path, &next, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut path = vec![from];
    let mut blocked = g.empty_set();
    blocked.insert(from);
    go(g, to, avoid, &mut path, &blocked, &mut out);
    out
}

/// Every pyramid, once per apex, unordered base and path triple, with
/// `base` sorted increasingly. Refuses graphs above
/// [`DEFAULT_PYRAMID_GUARD`] vertices.
pub fn brute_find_pyramids(g: &Graph) -> Result<Vec<PyramidWitness>> {
    if g.n() > DEFAULT_PYRAMID_GUARD {
        return Err(Error::SizeGuard { what: "pyramid search", n: g.n(), limit: DEFAULT_PYRAMID_GUARD });
    }
    Ok(brute_find_pyramids_unguarded(g))
}

pub fn brute_find_pyramids_unguarded(g: &Graph) -> Vec<PyramidWitness> {
    let mut out = Vec::new();
    for b0 in g.vertices() {
        for b1 in g.neighbors(b0).ones().filter(|&x| x > b0) {
            for b2 in g.neighbors(b0).intersection(g.neighbors(b1)).filter(|&x| x > b1) {
                let base = [b0, b1, b2];
                for a in g.vertices().filter(|a| !base.contains(a)) {
                    let per_leg: Vec<Vec<Vec<Vertex>>> = (0..3)
                        .map(|i| {
                            let mut avoid = g.empty_set();
                            for j in (0..3).filter(|&j| j != i) {
                                g.extend_closed_neighborhood(&mut avoid, [base[j]]);
                            }
                            if g.has_edge(a, base[i]) {
                                vec![vec![a, base[i]]]
                            } else {
                                induced_paths(g, a, base[i], &avoid)
                            }
                        })
                        .collect();
                    for p0 in &per_leg[0] {
                        for p1 in &per_leg[1] {
                            for p2 in &per_leg[2] {
                                let w = PyramidWitness { apex: a, base, paths: [p0.clone(), p1.clone(), p2.clone()] };
                                if check_pyramid(g, &w).is_ok() {
                                    out.push(w);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every great pyramid given the shortest odd-hole length: each pyramid is
/// reported once per admissible choice of short path, and once per order of
/// the two long paths.
pub fn great_pyramids(pyramids: &[PyramidWitness], shortest: usize) -> Vec<GreatPyramidWitness> {
    let mut out = Vec::new();
    for p in pyramids {
        let len = |i: usize| p.paths[i].len() - 1;
        for short in 0..3 {
            let (i, j) = match short {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            if len(short) >= len(i) || len(short) >= len(j) || len(i) + len(j) + 1 != shortest {
                continue;
            }
            for (x, y) in [(i, j), (j, i)] {
                out.push(GreatPyramidWitness {
                    pyramid: PyramidWitness {
                        apex: p.apex,
                        base: [p.base[x], p.base[y], p.base[short]],
                        paths: [p.paths[x].clone(), p.paths[y].clone(), p.paths[short].clone()],
                    },
                });
            }
        }
    }
    out
}

/// Great pyramids of minimum height.
pub fn optimal_great_pyramids(pyramids: &[PyramidWitness], shortest: usize) -> Vec<GreatPyramidWitness> {
    let all = great_pyramids(pyramids, shortest);
    let Some(h) = all.iter().map(|w| w.height()).min() else { return all };
    all.into_iter().filter(|w| w.height() == h).collect()
}
