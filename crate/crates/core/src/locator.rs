//! Great-pyramid branch: guess apex, base triangle, three markers on the
//! second path and a five-tuple describing a set `Y` that swallows the big
//! majors; then rebuild the pyramid's paths one shortest path at a time.
//!
//! Path names follow the replacement lemmas: `Q3` replaces the short path,
//! `R2'`, `C2'`, `D2'`, `S2'` are consecutive pieces of the second path
//! (apex to `c2`, `c2` to `m2`, `m2` to `d2`, `d2` to `b2`) and `Q1`
//! replaces the first path.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::detect::{Detection, DetectorTag, Recorder};
use crate::error::{Error, Result};
use crate::graph::{bfs_tree, BfsTree, Graph, Hole, Path, Vertex, VertexSet};

/// Default vertex bound for full enumeration.
pub const DEFAULT_LOCATOR_GUARD: usize = 10;

/// Environment variable overriding [`DEFAULT_LOCATOR_GUARD`].
pub const LOCATOR_GUARD_ENV: &str = "ODDHOLE_LOCATOR_GUARD";

/// The twelve guessed vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Vertex; 12]", into = "[Vertex; 12]")]
pub struct Tuple12 {
    pub a: Vertex,
    pub b1: Vertex,
    pub b2: Vertex,
    pub b3: Vertex,
    pub c2: Vertex,
    pub d2: Vertex,
    pub m2: Vertex,
    pub v: Vertex,
    pub v1: Vertex,
    pub v2: Vertex,
    pub v3: Vertex,
    pub v4: Vertex,
}

impl From<[Vertex; 12]> for Tuple12 {
    fn from(t: [Vertex; 12]) -> Self {
        let [a, b1, b2, b3, c2, d2, m2, v, v1, v2, v3, v4] = t;
        Tuple12 { a, b1, b2, b3, c2, d2, m2, v, v1, v2, v3, v4 }
    }
}

impl From<Tuple12> for [Vertex; 12] {
    fn from(t: Tuple12) -> Self {
        [t.a, t.b1, t.b2, t.b3, t.c2, t.d2, t.m2, t.v, t.v1, t.v2, t.v3, t.v4]
    }
}

impl Tuple12 {
    /// One JSON array of twelve ids.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("array of integers serializes")
    }

    /// JSON lines, one tuple per non-empty line.
    pub fn parse_lines(text: &str) -> Result<Vec<Tuple12>> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str::<Tuple12>(l).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })
            })
            .collect()
    }

    /// Range, distinctness of `a, b1, b2, b3`, and the base triangle.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for v in <[Vertex; 12]>::from(*self) {
            g.check_vertex(v)?;
        }
        let named = [self.a, self.b1, self.b2, self.b3];
        for i in 0..4 {
            for j in i + 1..4 {
                if named[i] == named[j] {
                    return Err(Error::InvalidInput("a, b1, b2, b3 must be distinct".into()));
                }
            }
        }
        if !(g.has_edge(self.b1, self.b2) && g.has_edge(self.b2, self.b3) && g.has_edge(self.b1, self.b3)) {
            return Err(Error::InvalidInput("b1, b2, b3 must be pairwise adjacent".into()));
        }
        Ok(())
    }

    /// `N[b1] ∪ (N[{v,v1,v2}] \ {v1,v2,v3,v4})`.
    pub fn y_set(&self, g: &Graph) -> VertexSet {
        let mut y = g.empty_set();
        g.extend_closed_neighborhood(&mut y, [self.v, self.v1, self.v2]);
        for x in [self.v1, self.v2, self.v3, self.v4] {
            y.remove(x);
        }
        g.extend_closed_neighborhood(&mut y, [self.b1]);
        y
    }
}

/// Step at which a tuple was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Q3,
    R2,
    S2,
    C2,
    D2,
    Q1,
    /// The assembled cycle is not an odd hole.
    Cycle,
}

/// Everything the per-tuple body built, for inspection.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocatorTrace {
    pub q3: Option<Path>,
    pub r2: Option<Path>,
    pub s2: Option<Path>,
    pub c2: Option<Path>,
    pub d2: Option<Path>,
    pub q1: Option<Path>,
    pub hole: Option<Hole>,
    pub rejected: Option<Stage>,
}

fn union(a: &VertexSet, b: &VertexSet) -> VertexSet {
    let mut out = a.clone();
    out.union_with(b);
    out
}

/// Shortest `s`–`t` path with interior outside `forbidden`; the trivial
/// path when `s == t`.
fn shortest(g: &Graph, s: Vertex, t: Vertex, forbidden: &VertexSet) -> Option<Path> {
    bfs_tree(g, s, Some(forbidden), None, Some(t)).path_to(t)
}

/// Concatenates paths that share their joining ends.
fn chain(parts: &[&[Vertex]]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = parts[0].to_vec();
    for p in &parts[1..] {
        out.extend_from_slice(&p[1..]);
    }
    out
}

/// Runs the per-tuple body and records every intermediate path.
pub fn locate_traced(g: &Graph, t: &Tuple12) -> Result<LocatorTrace> {
    t.validate(g)?;
    let mut tr = LocatorTrace::default();
    let y = t.y_set(g);

    let x1 = union(&y, &g.closed_neighborhood(t.b2));
    let Some(q3) = shortest(g, t.a, t.b3, &x1) else {
        tr.rejected = Some(Stage::Q3);
        return Ok(tr);
    };

    let mut x2 = y.clone();
    g.extend_closed_neighborhood(&mut x2, q3.vertices()[1..].iter().copied());
    let mut x3 = y.clone();
    g.extend_closed_neighborhood(&mut x3, q3.vertices().iter().copied());
    tr.q3 = Some(q3);

    let Some(r2) = shortest(g, t.a, t.c2, &x2) else {
        tr.rejected = Some(Stage::R2);
        return Ok(tr);
    };
    tr.r2 = Some(r2);
    // S2', C2', D2' are rooted at b2 and m2 so that the full enumeration,
    // which grows one tree per root, picks the same paths.
    let Some(s2) = shortest(g, t.b2, t.d2, &x2).map(|p| p.reversed()) else {
        tr.rejected = Some(Stage::S2);
        return Ok(tr);
    };
    tr.s2 = Some(s2);
    let Some(c2) = shortest(g, t.m2, t.c2, &x3).map(|p| p.reversed()) else {
        tr.rejected = Some(Stage::C2);
        return Ok(tr);
    };
    tr.c2 = Some(c2);
    let Some(d2) = shortest(g, t.m2, t.d2, &x3) else {
        tr.rejected = Some(Stage::D2);
        return Ok(tr);
    };
    tr.d2 = Some(d2);

    // a .. c2 .. m2 .. d2 .. b2
    let q2 = chain(&[
        tr.r2.as_ref().unwrap().vertices(),
        tr.c2.as_ref().unwrap().vertices(),
        tr.d2.as_ref().unwrap().vertices(),
        tr.s2.as_ref().unwrap().vertices(),
    ]);
    let q3 = tr.q3.as_ref().unwrap().vertices();
    let mut x4 = g.empty_set();
    g.extend_closed_neighborhood(&mut x4, q2[1..].iter().chain(&q3[1..]).copied());
    let Some(q1) = shortest(g, t.a, t.b1, &x4) else {
        tr.rejected = Some(Stage::Q1);
        return Ok(tr);
    };

    // a .. Q1 .. b1, b2 .. Q2 reversed .. (before a)
    let mut seq = q1.vertices().to_vec();
    seq.extend(q2[1..].iter().rev());
    tr.q1 = Some(q1);
    if g.has_edge(t.b1, t.b2) && crate::graph::is_odd_hole(g, &seq) {
        tr.hole = Hole::new(g, &seq);
    } else {
        tr.rejected = Some(Stage::Cycle);
    }
    Ok(tr)
}

/// The hole built from one tuple, if the body accepts it.
pub fn locate_from_tuple(g: &Graph, t: &Tuple12) -> Result<Option<Hole>> {
    Ok(locate_traced(g, t)?.hole)
}

/// How [`find_great_pyramid`] obtains tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocatorMode {
    /// Every tuple surviving the pruning, for graphs within `guard` vertices.
    Full { guard: usize },
    /// Only the given tuples.
    Hinted(Vec<Tuple12>),
}

impl LocatorMode {
    /// Full mode with the guard read from the environment, falling back to
    /// [`DEFAULT_LOCATOR_GUARD`].
    pub fn full_from_env() -> Self {
        let guard = std::env::var(LOCATOR_GUARD_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&g: &usize| g > 0)
            .unwrap_or(DEFAULT_LOCATOR_GUARD);
        LocatorMode::Full { guard }
    }
}

/// Shortest hole over all tuples.
pub fn find_great_pyramid(g: &Graph, mode: &LocatorMode) -> Result<Detection> {
    find_great_pyramid_bounded(g, mode, usize::MAX)
}

/// As [`find_great_pyramid`] but only records holes of length at most
/// `bound`. The pipeline passes its best length so far.
pub fn find_great_pyramid_bounded(g: &Graph, mode: &LocatorMode, bound: usize) -> Result<Detection> {
    match mode {
        LocatorMode::Hinted(tuples) => {
            let mut rec = Recorder::new();
            for t in tuples {
                if let Some(h) = locate_from_tuple(g, t)? {
                    if h.len() <= bound {
                        rec.offer_hole(h);
                    }
                }
            }
            Ok(rec.finish(DetectorTag::GreatPyramid))
        }
        LocatorMode::Full { guard } => {
            // no triangle, no tuple: nothing to refuse
            if !has_triangle(g) {
                return Ok(Detection::Failure);
            }
            if g.n() > *guard {
                return Err(Error::SizeGuard { what: "full great-pyramid enumeration", n: g.n(), limit: *guard });
            }
            Ok(full_enumeration(g, bound))
        }
    }
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| g.neighbors(u).intersection_count(g.neighbors(v)) > 0)
}

/// Distinct `Y` sets over the pruned five-tuples for a fixed `b1`: `N[b1]`
/// itself, and for each edge `v1v2` and `v` adjacent to it, `N[b1]` plus
/// `N[{v,v1,v2}] \ {v1,v2}` less at most two further vertices.
pub fn y_sets(g: &Graph, b1: Vertex) -> Vec<VertexSet> {
    let nb1 = g.closed_neighborhood(b1);
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut out = Vec::new();
    seen.insert(nb1.clone());
    out.push(nb1.clone());
    let mut base = g.empty_set();
    for (v1, v2) in g.edges() {
        let mut around = g.neighbors(v1).clone();
        around.union_with(g.neighbors(v2));
        for v in around.ones() {
            base.clear();
            g.extend_closed_neighborhood(&mut base, [v, v1, v2]);
            base.remove(v1);
            base.remove(v2);
            // removing v3 or v4 inside N[b1] changes nothing
            base.difference_with(&nb1);
            let extra: Vec<Vertex> = base.ones().collect();
            let mut push = |drop: &[Vertex]| {
                let mut y = nb1.clone();
                y.union_with(&base);
                for &d in drop {
                    y.remove(d);
                }
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            };
            push(&[]);
            for (i, &x) in extra.iter().enumerate() {
                push(&[x]);
                for &z in &extra[i + 1..] {
                    push(&[x, z]);
                }
            }
        }
    }
    out
}

fn full_enumeration(g: &Graph, bound: usize) -> Detection {
    let mut rec = Recorder::new();
    let limit = |rec: &Recorder| rec.bound().min(bound);
    let mut scratch = Scratch::default();
    for b1 in g.vertices() {
        let ys = y_sets(g, b1);
        let nb1 = g.closed_neighborhood(b1);
        for b2 in g.neighbors(b1).ones() {
            let nb2 = g.closed_neighborhood(b2);
            let apexes: Vec<Vertex> = g.vertices().filter(|&a| !nb1.contains(a) && !nb2.contains(a)).collect();
            if apexes.is_empty() {
                continue;
            }
            for b3 in g.neighbors(b1).intersection(g.neighbors(b2)) {
                for &a in &apexes {
                    if a == b3 {
                        continue;
                    }
                    for y in &ys {
                        let cap = limit(&rec);
                        body_all_markers(g, a, b1, b2, b3, y, &nb2, cap, &mut rec, &mut scratch);
                    }
                }
            }
        }
    }
    rec.finish(DetectorTag::GreatPyramid)
}

#[derive(Default)]
struct Scratch {
    q2: Vec<Vertex>,
    tmp: Vec<Vertex>,
    seq: Vec<Vertex>,
}

/// The per-tuple body for fixed `(a, b1, b2, b3, Y)`, run for every choice
/// of `c2, d2, m2` at once: one tree from `a`, one from `b2`, one per `m2`.
#[allow(clippy::too_many_arguments)]
fn body_all_markers(
    g: &Graph,
    a: Vertex,
    b1: Vertex,
    b2: Vertex,
    b3: Vertex,
    y: &VertexSet,
    nb2: &VertexSet,
    cap: usize,
    rec: &mut Recorder,
    s: &mut Scratch,
) {
    let x1 = union(y, nb2);
    let q3tree = bfs_tree(g, a, Some(&x1), None, Some(b3));
    let Some(l3) = q3tree.dist(b3) else { return };
    // ℓ1, ℓ2 ≥ ℓ3 + 1 on any pyramid this tuple could describe
    if 2 * l3 + 3 > cap {
        return;
    }
    let mut q3 = Vec::new();
    q3tree.path_from_target(b3, &mut q3); // b3 .. a
    let mut x2 = y.clone();
    g.extend_closed_neighborhood(&mut x2, q3[..q3.len() - 1].iter().copied());
    let mut x3 = x2.clone();
    g.extend_closed_neighborhood(&mut x3, [a]);

    let rtree = bfs_tree(g, a, Some(&x2), None, None);
    let stree = bfs_tree(g, b2, Some(&x2), None, None);
    let markers: Vec<Vertex> = g.vertices().filter(|&x| !x2.contains(x) && x != a).collect();
    let cs: Vec<Vertex> = markers.iter().copied().filter(|&c| rtree.reached(c)).collect();
    let ds: Vec<Vertex> = markers.iter().copied().filter(|&d| stree.reached(d)).collect();
    if cs.is_empty() || ds.is_empty() {
        return;
    }
    let mut on_q2 = g.empty_set();
    let mut x4 = g.empty_set();
    for &m2 in &markers {
        let mtree = bfs_tree(g, m2, Some(&x3), None, None);
        for &c2 in &cs {
            let Some(lc) = mtree.dist(c2) else { continue };
            let lr = rtree.dist(c2).unwrap();
            for &d2 in &ds {
                if c2 == d2 && m2 != c2 {
                    continue;
                }
                let Some(ld) = mtree.dist(d2) else { continue };
                let l2 = lr + lc + ld + stree.dist(d2).unwrap();
                if l2 + 3 > cap.min(rec.bound()) {
                    continue;
                }
                if !assemble_q2(&rtree, &mtree, &stree, c2, d2, &mut s.q2, &mut s.tmp, &mut on_q2) {
                    continue;
                }
                if on_q2.contains(b1) || q3.iter().any(|&x| on_q2.contains(x) && x != a) {
                    continue;
                }
                x4.clear();
                g.extend_closed_neighborhood(&mut x4, s.q2[1..].iter().chain(&q3[..q3.len() - 1]).copied());
                let q1tree = bfs_tree(g, a, Some(&x4), None, Some(b1));
                let Some(l1) = q1tree.dist(b1) else { continue };
                let total = l1 + l2 + 1;
                if total.is_multiple_of(2) || total > cap.min(rec.bound()) {
                    continue;
                }
                q1tree.path_from_target(b1, &mut s.tmp); // b1 .. a
                s.seq.clear();
                s.seq.extend(s.tmp.iter().rev()); // a .. b1
                s.seq.extend(s.q2[1..].iter().rev()); // b2 .. (after a)
                rec.offer(g, &s.seq);
            }
        }
    }
}

/// Writes `R2' + C2' + D2' + S2'` (a to b2) into `q2`; false if a vertex
/// repeats.
#[allow(clippy::too_many_arguments)]
fn assemble_q2(
    rtree: &BfsTree,
    mtree: &BfsTree,
    stree: &BfsTree,
    c2: Vertex,
    d2: Vertex,
    q2: &mut Vec<Vertex>,
    tmp: &mut Vec<Vertex>,
    seen: &mut VertexSet,
) -> bool {
    q2.clear();
    rtree.path_from_target(c2, tmp); // c2 .. a
    q2.extend(tmp.iter().rev()); // a .. c2
    mtree.path_from_target(c2, tmp); // c2 .. m2
    q2.extend(&tmp[1..]); // .. m2
    mtree.path_from_target(d2, tmp); // d2 .. m2
    q2.extend(tmp.iter().rev().skip(1)); // .. d2
    stree.path_from_target(d2, tmp); // d2 .. b2
    q2.extend(&tmp[1..]); // .. b2
    seen.clear();
    q2.iter().all(|&x| !seen.put(x))
}
