//! The no-great-pyramid branch: the clean-hole test and the two cleaning
//! wrappers that run it on `G \ X` for a family of deleted sets `X`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::detect::{Detection, DetectorTag, Recorder};
use crate::graph::{bfs_tree, Graph, Vertex, VertexSet};

/// Which construction produced a cleaning set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Empty,
    /// `X = (N(c2) ∪ N(c3)) \ {c1..c4}` for an induced path `c1-c2-c3-c4`.
    Heavy4Path,
    /// `N[{v,v1,v2}] \ {v1,v2,v3,v4}` for an edge `v1v2` and `v` adjacent to it.
    List5Tuple,
    /// `N[w]`.
    Singleton,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleaningSet {
    pub vertices: VertexSet,
    pub provenance: Provenance,
}

/// Clean-hole test on the subgraph induced by `alive`.
///
/// Takes one canonical shortest path `P(u,v)` per pair (rooted at the
/// smaller id) and checks every triple `u < v < w` whose three paths close
/// an odd cycle; the shortest induced one is returned. Hole vertices are
/// ids of `g`.
pub fn test_clean_within(g: &Graph, alive: &VertexSet) -> Detection {
    let verts: Vec<Vertex> = alive.ones().collect();
    let k = verts.len();
    if k < 5 {
        return Detection::Failure;
    }
    // trees[i] roots at verts[i]
    let trees: Vec<_> = verts.iter().map(|&s| bfs_tree(g, s, None, Some(alive), None)).collect();
    let dist = |i: usize, j: usize| trees[i].dist(verts[j]);

    let mut rec = Recorder::new();
    let mut seq: Vec<Vertex> = Vec::new();
    let mut tmp: Vec<Vertex> = Vec::new();
    let mut on_cycle = g.empty_set();
    for i in 0..k {
        for j in i + 1..k {
            let Some(dij) = dist(i, j) else { continue };
            for l in j + 1..k {
                let (Some(djl), Some(dil)) = (dist(j, l), dist(i, l)) else { continue };
                let total = dij + djl + dil;
                if total % 2 == 0 || total < 5 || total > rec.bound() {
                    continue;
                }
                // P(u,v): u -> v, P(v,w): v -> w, P(u,w) reversed: w -> u.
                seq.clear();
                trees[i].path_from_target(verts[j], &mut tmp);
                seq.extend(tmp.iter().rev()); // u .. v
                trees[j].path_from_target(verts[l], &mut tmp);
                seq.extend(tmp.iter().rev().skip(1)); // .. w
                trees[i].path_from_target(verts[l], &mut tmp);
                seq.extend(&tmp[1..tmp.len() - 1]); // strictly between w and u
                if seq.len() != total {
                    continue;
                }
                on_cycle.clear();
                let mut distinct = true;
                for &x in &seq {
                    if on_cycle.put(x) {
                        distinct = false;
                        break;
                    }
                }
                if !distinct {
                    continue;
                }
                if seq.iter().all(|&x| g.neighbors(x).intersection_count(&on_cycle) == 2) {
                    rec.offer(g, &seq);
                }
            }
        }
    }
    rec.finish(DetectorTag::NoGreatPyramid)
}

pub fn test_clean(g: &Graph) -> Detection {
    test_clean_within(g, &g.full_set())
}

/// Induced paths `c1-c2-c3-c4`, each listed once (`c1 < c4`).
pub fn induced_four_paths(g: &Graph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for c2 in g.vertices() {
        for c3 in g.neighbors(c2).ones() {
            for c1 in g.neighbors(c2).ones() {
                if c1 == c3 || g.has_edge(c1, c3) {
                    continue;
                }
                for c4 in g.neighbors(c3).ones() {
                    if c4 == c2 || c4 <= c1 || g.has_edge(c4, c2) || g.has_edge(c4, c1) {
                        continue;
                    }
                    out.push([c1, c2, c3, c4]);
                }
            }
        }
    }
    out
}

/// Deleted sets used by [`test_cleanable`], deduplicated, in first-seen order.
pub fn heavy_cleaning_sets(g: &Graph) -> Vec<CleaningSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for [c1, c2, c3, c4] in induced_four_paths(g) {
        let mut x = g.neighbors(c2).clone();
        x.union_with(g.neighbors(c3));
        for c in [c1, c2, c3, c4] {
            x.remove(c);
        }
        if seen.insert(x.clone()) {
            out.push(CleaningSet { vertices: x, provenance: Provenance::Heavy4Path });
        }
    }
    if out.is_empty() {
        out.push(CleaningSet { vertices: g.empty_set(), provenance: Provenance::Empty });
    }
    out
}

fn run_clean_over(g: &Graph, sets: &[CleaningSet]) -> Detection {
    let mut best = Detection::Failure;
    let mut alive = g.empty_set();
    for set in sets {
        alive.clear();
        alive.insert_range(..);
        alive.difference_with(&set.vertices);
        let found = test_clean_within(g, &alive);
        best = best.min(found);
    }
    best
}

/// Runs the clean-hole test after deleting, for every induced path
/// `c1-c2-c3-c4`, the vertices other than `c1..c4` adjacent to `c2` or `c3`.
/// Graphs with no induced four-vertex path are tested as they are.
pub fn test_cleanable(g: &Graph) -> Detection {
    run_clean_over(g, &heavy_cleaning_sets(g))
}

/// The cleaning list: the empty set, every `N[w]`, and every
/// `N[{v,v1,v2}] \ {v1,v2,v3,v4}` with `v1v2` an edge, `v` adjacent to `v1`
/// or `v2`, and `v3, v4 ∈ N[{v,v1,v2}]`. Duplicates are dropped.
pub fn cleaning_list(g: &Graph) -> Vec<CleaningSet> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut out = Vec::new();
    let mut push = |set: VertexSet, provenance: Provenance, out: &mut Vec<CleaningSet>| {
        if seen.insert(set.clone()) {
            out.push(CleaningSet { vertices: set, provenance });
        }
    };
    push(g.empty_set(), Provenance::Empty, &mut out);
    for w in g.vertices() {
        push(g.closed_neighborhood(w), Provenance::Singleton, &mut out);
    }
    let mut base = g.empty_set();
    for (v1, v2) in g.edges() {
        let mut around = g.neighbors(v1).clone();
        around.union_with(g.neighbors(v2));
        for v in around.ones() {
            base.clear();
            g.extend_closed_neighborhood(&mut base, [v, v1, v2]);
            base.remove(v1);
            base.remove(v2);
            // v3, v4 range over N[{v,v1,v2}]; only those still in `base`
            // change the set.
            let rest: Vec<Vertex> = base.ones().collect();
            push(base.clone(), Provenance::List5Tuple, &mut out);
            for (i, &x) in rest.iter().enumerate() {
                let mut one = base.clone();
                one.remove(x);
                push(one.clone(), Provenance::List5Tuple, &mut out);
                for &y in &rest[i + 1..] {
                    let mut two = one.clone();
                    two.remove(y);
                    push(two, Provenance::List5Tuple, &mut out);
                }
            }
        }
    }
    out
}

/// Runs the clean-hole test on `G \ X` for every `X` in the cleaning list.
pub fn no_heavy_clean(g: &Graph) -> Detection {
    run_clean_over(g, &cleaning_list(g))
}

/// Shorter of [`test_cleanable`] and [`no_heavy_clean`].
pub fn no_great_pyramid_solver(g: &Graph) -> Detection {
    test_cleanable(g).min(no_heavy_clean(g))
}
