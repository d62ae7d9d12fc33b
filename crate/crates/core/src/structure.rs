//! Structural predicates relative to a hole `C`, and validators for the
//! pyramid, jewel and great-pyramid configurations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{hole_distance, Graph, Hole, Path, Vertex};

/// How a vertex off `C` relates to `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MajorClass {
    NotMajor,
    /// No three consecutive vertices of `C` contain all of the vertex's
    /// neighbours on `C`. `big` iff it has at least four of them.
    Major {
        neighbor_count: usize,
        big: bool,
    },
}

impl MajorClass {
    pub fn is_major(self) -> bool {
        matches!(self, MajorClass::Major { .. })
    }

    pub fn is_big(self) -> bool {
        matches!(self, MajorClass::Major { big: true, .. })
    }
}

/// Positions on `hole` of the neighbours of `v`, in increasing order.
pub fn hole_neighbor_positions(g: &Graph, hole: &Hole, v: Vertex) -> Vec<usize> {
    hole.vertices().iter().enumerate().filter(|&(_, &c)| g.has_edge(v, c)).map(|(i, _)| i).collect()
}

pub fn classify_major(g: &Graph, hole: &Hole, v: Vertex) -> Result<MajorClass> {
    g.check_vertex(v)?;
    if hole.contains(v) {
        return Err(Error::InvalidInput(format!("vertex {v} lies on the hole")));
    }
    let pos = hole_neighbor_positions(g, hole, v);
    let k = hole.len();
    let fits_in_three = (0..k).any(|start| pos.iter().all(|&p| (p + k - start) % k <= 2));
    if fits_in_three {
        Ok(MajorClass::NotMajor)
    } else {
        Ok(MajorClass::Major { neighbor_count: pos.len(), big: pos.len() >= 4 })
    }
}

/// All vertices off `hole` that are big `C`-major.
pub fn big_majors(g: &Graph, hole: &Hole) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| !hole.contains(v))
        .filter(|&v| classify_major(g, hole, v).map(MajorClass::is_big).unwrap_or(false))
        .collect()
}

/// True iff `path` is shorter than both arcs of `hole` between its ends and
/// carries no big `C`-major vertex.
pub fn is_shortcut(g: &Graph, hole: &Hole, path: &Path) -> Result<bool> {
    if !path.is_path_in(g) || path.vertices().len() < 2 {
        return Err(Error::InvalidInput("not a path of the graph".into()));
    }
    let (u, v) = (path.first(), path.last());
    if !hole.contains(u) || !hole.contains(v) {
        return Err(Error::InvalidInput("shortcut ends must lie on the hole".into()));
    }
    if g.has_edge(u, v) {
        return Err(Error::InvalidInput("shortcut ends must be nonadjacent".into()));
    }
    if path.len() >= hole_distance(hole, u, v)? {
        return Ok(false);
    }
    for &x in path.vertices() {
        if !hole.contains(x) && classify_major(g, hole, x)?.is_big() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Apex, triangle base and the three constituent paths; `paths[i]` runs
/// from the apex to `base[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidWitness {
    pub apex: Vertex,
    pub base: [Vertex; 3],
    pub paths: [Vec<Vertex>; 3],
}

/// The first condition a claimed configuration violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Defect {
    VertexOutOfRange,
    NotDistinct,
    BaseTriangle,
    PathEnds,
    NotAPath,
    NotInduced,
    PathsOverlap,
    TooShort,
    CrossEdge,
    MissingEdge,
    ForbiddenEdge,
    InteriorNeighbor,
    NotShortestOddHole,
    HeightNotSmaller,
    EvenLength,
    NotAHole,
}

impl Defect {
    pub fn reason(self) -> &'static str {
        match self {
            Defect::VertexOutOfRange => "vertex out of range",
            Defect::NotDistinct => "named vertices not distinct",
            Defect::BaseTriangle => "base triangle",
            Defect::PathEnds => "path ends",
            Defect::NotAPath => "not a path",
            Defect::NotInduced => "path not induced",
            Defect::PathsOverlap => "paths overlap",
            Defect::TooShort => "fewer than two paths of length at least two",
            Defect::CrossEdge => "edge between constituent paths",
            Defect::MissingEdge => "required edge missing",
            Defect::ForbiddenEdge => "required nonedge present",
            Defect::InteriorNeighbor => "neighbour in path interior",
            Defect::NotShortestOddHole => "long paths do not form a shortest odd hole",
            Defect::HeightNotSmaller => "height not strictly smaller",
            Defect::EvenLength => "even length",
            Defect::NotAHole => "not a hole",
        }
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.reason())
    }
}

fn in_range(g: &Graph, vs: impl IntoIterator<Item = Vertex>) -> bool {
    vs.into_iter().all(|v| v < g.n())
}

pub fn check_pyramid(g: &Graph, w: &PyramidWitness) -> Result<(), Defect> {
    let a = w.apex;
    let b = w.base;
    if !in_range(g, [a, b[0], b[1], b[2]]) || !w.paths.iter().all(|p| in_range(g, p.iter().copied())) {
        return Err(Defect::VertexOutOfRange);
    }
    let named = [a, b[0], b[1], b[2]];
    for i in 0..4 {
        for j in i + 1..4 {
            if named[i] == named[j] {
                return Err(Defect::NotDistinct);
            }
        }
    }
    if !(g.has_edge(b[0], b[1]) && g.has_edge(b[1], b[2]) && g.has_edge(b[0], b[2])) {
        return Err(Defect::BaseTriangle);
    }
    for (p, &end) in w.paths.iter().zip(&b) {
        if p.first() != Some(&a) || p.last() != Some(&end) {
            return Err(Defect::PathEnds);
        }
        let path = Path::new(p.clone());
        if !path.is_path_in(g) {
            return Err(Defect::NotAPath);
        }
        if !path.is_induced_in(g) {
            return Err(Defect::NotInduced);
        }
    }
    let rest: Vec<_> = w.paths.iter().map(|p| g.set_of(p[1..].iter().copied())).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            if !rest[i].is_disjoint(&rest[j]) {
                return Err(Defect::PathsOverlap);
            }
        }
    }
    if w.paths.iter().filter(|p| p.len() >= 3).count() < 2 {
        return Err(Defect::TooShort);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            for &x in &w.paths[i][1..] {
                for &y in &w.paths[j][1..] {
                    if g.has_edge(x, y) && !(x == b[i] && y == b[j]) {
                        return Err(Defect::CrossEdge);
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn verify_pyramid(g: &Graph, w: &PyramidWitness) -> bool {
    check_pyramid(g, w).is_ok()
}

/// The ring `v1..v5` and a path `P` from `v1` to `v4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JewelWitness {
    pub ring: [Vertex; 5],
    pub path: Vec<Vertex>,
}

pub fn check_jewel(g: &Graph, w: &JewelWitness) -> Result<(), Defect> {
    let [v1, v2, v3, v4, v5] = w.ring;
    if !in_range(g, w.ring) || !in_range(g, w.path.iter().copied()) {
        return Err(Defect::VertexOutOfRange);
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if w.ring[i] == w.ring[j] {
                return Err(Defect::NotDistinct);
            }
        }
    }
    if ![(v1, v2), (v2, v3), (v3, v4), (v4, v5), (v5, v1)].iter().all(|&(x, y)| g.has_edge(x, y)) {
        return Err(Defect::MissingEdge);
    }
    if [(v1, v3), (v2, v4), (v1, v4)].iter().any(|&(x, y)| g.has_edge(x, y)) {
        return Err(Defect::ForbiddenEdge);
    }
    let path = Path::new(w.path.clone());
    if w.path.first() != Some(&v1) || w.path.last() != Some(&v4) {
        return Err(Defect::PathEnds);
    }
    if !path.is_path_in(g) {
        return Err(Defect::NotAPath);
    }
    for &x in path.interior() {
        if [v2, v3, v5].contains(&x) {
            return Err(Defect::PathsOverlap);
        }
        if [v2, v3, v5].iter().any(|&y| g.has_edge(x, y)) {
            return Err(Defect::InteriorNeighbor);
        }
    }
    Ok(())
}

pub fn verify_jewel(g: &Graph, w: &JewelWitness) -> bool {
    check_jewel(g, w).is_ok()
}

/// An odd hole is jewelled if either
/// - some four consecutive hole vertices `c1-c2-c4-c5` have ends with a
///   common neighbour `c3` anywhere in the graph, or
/// - some three consecutive hole vertices `c1-c3-c5` admit `c2, c4` off the
///   hole with `c1-c2-c4-c5` an induced path.
pub fn is_jewelled(g: &Graph, hole: &Hole) -> bool {
    let k = hole.len();
    if k < 5 {
        return false;
    }
    for i in 0..k {
        // Both orientations of a four-vertex subpath share the same ends.
        let c1 = hole.at(i);
        let c5 = hole.at(i + 3);
        if g.neighbors(c1).intersection_count(g.neighbors(c5)) > 0 {
            return true;
        }
    }
    let on_hole = hole.vertex_set(g);
    for i in 0..k {
        let c1 = hole.at(i);
        let c5 = hole.at(i + 2);
        for c2 in g.neighbors(c1).ones() {
            if on_hole.contains(c2) || g.has_edge(c2, c5) {
                continue;
            }
            for c4 in g.neighbors(c2).ones() {
                if on_hole.contains(c4) || g.has_edge(c4, c1) {
                    continue;
                }
                if g.has_edge(c4, c5) {
                    return true;
                }
            }
        }
    }
    false
}

/// A pyramid whose first two paths close a shortest odd hole and whose third
/// path (the height) is strictly shorter than both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreatPyramidWitness {
    pub pyramid: PyramidWitness,
}

impl GreatPyramidWitness {
    pub fn lengths(&self) -> [usize; 3] {
        self.pyramid.paths.clone().map(|p| p.len().saturating_sub(1))
    }

    pub fn height(&self) -> usize {
        self.lengths()[2]
    }

    /// `V(P3) \ {apex}`.
    pub fn heart(&self) -> &[Vertex] {
        &self.pyramid.paths[2][1..]
    }

    /// The hole `a-P1-b1-b2-P2-a`.
    pub fn hole_sequence(&self) -> Vec<Vertex> {
        let p = &self.pyramid.paths;
        let mut seq = p[0].clone();
        seq.extend(p[1][1..].iter().rev());
        seq
    }
}

pub fn check_great_pyramid(g: &Graph, w: &GreatPyramidWitness, shortest_odd_hole_length: usize) -> Result<(), Defect> {
    check_pyramid(g, &w.pyramid)?;
    let [l1, l2, l3] = w.lengths();
    let hole_len = l1 + l2 + 1;
    if hole_len % 2 == 0 {
        return Err(Defect::EvenLength);
    }
    if hole_len != shortest_odd_hole_length {
        return Err(Defect::NotShortestOddHole);
    }
    if l3 >= l1 || l3 >= l2 {
        return Err(Defect::HeightNotSmaller);
    }
    Ok(())
}

pub fn verify_great_pyramid(g: &Graph, w: &GreatPyramidWitness, shortest_odd_hole_length: usize) -> bool {
    check_great_pyramid(g, w, shortest_odd_hole_length).is_ok()
}

/// Odd-hole witness check: the sequence must be an induced cycle of odd length.
pub fn check_odd_hole(g: &Graph, seq: &[Vertex]) -> Result<(), Defect> {
    if !in_range(g, seq.iter().copied()) {
        return Err(Defect::VertexOutOfRange);
    }
    if !crate::graph::is_hole(g, seq) {
        return Err(Defect::NotAHole);
    }
    if seq.len().is_multiple_of(2) {
        return Err(Defect::EvenLength);
    }
    Ok(())
}
