//! Detector outcomes and the two cheap detectors: exhaustive 5-hole search
//! and the shortest jewelled odd hole.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{bfs_tree, is_odd_hole, Graph, Hole, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetectorTag {
    FiveHole,
    Jewel,
    GreatPyramid,
    NoGreatPyramid,
    Oracle,
}

impl DetectorTag {
    pub fn as_str(self) -> &'static str {
        match self {
            DetectorTag::FiveHole => "five_hole",
            DetectorTag::Jewel => "jewel",
            DetectorTag::GreatPyramid => "great_pyramid",
            DetectorTag::NoGreatPyramid => "no_great_pyramid",
            DetectorTag::Oracle => "oracle",
        }
    }
}

impl fmt::Display for DetectorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DetectorTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "five_hole" => Ok(DetectorTag::FiveHole),
            "jewel" => Ok(DetectorTag::Jewel),
            "great_pyramid" => Ok(DetectorTag::GreatPyramid),
            "no_great_pyramid" => Ok(DetectorTag::NoGreatPyramid),
            "oracle" => Ok(DetectorTag::Oracle),
            other => Err(Error::InvalidInput(format!("unknown detector {other:?}"))),
        }
    }
}

/// Outcome of one detector: an odd hole of the input, or failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    Found { hole: Hole, detector: DetectorTag },
    Failure,
}

impl Detection {
    pub fn hole(&self) -> Option<&Hole> {
        match self {
            Detection::Found { hole, .. } => Some(hole),
            Detection::Failure => None,
        }
    }

    pub fn detector(&self) -> Option<DetectorTag> {
        match self {
            Detection::Found { detector, .. } => Some(*detector),
            Detection::Failure => None,
        }
    }

    pub fn length(&self) -> Option<usize> {
        self.hole().map(Hole::len)
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Detection::Found { .. })
    }

    /// The shorter of two detections under the (length, canonical sequence)
    /// order; `self` wins ties.
    pub fn min(self, other: Detection) -> Detection {
        match (&self, &other) {
            (_, Detection::Failure) => self,
            (Detection::Failure, _) => other,
            (Detection::Found { hole: a, .. }, Detection::Found { hole: b, .. }) => {
                if b.key() < a.key() {
                    other
                } else {
                    self
                }
            }
        }
    }
}

/// Keeps the shortest odd hole offered so far.
#[derive(Debug, Default, Clone)]
pub(crate) struct Recorder {
    best: Option<Hole>,
}

impl Recorder {
    pub fn new() -> Self {
        Recorder { best: None }
    }

    /// Length of the current best, or `usize::MAX`.
    pub fn bound(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, Hole::len)
    }

    /// Records `seq` if it is an odd hole of `g` beating the current best.
    pub fn offer(&mut self, g: &Graph, seq: &[Vertex]) -> bool {
        if seq.len() > self.bound() || !is_odd_hole(g, seq) {
            return false;
        }
        let hole = Hole::new(g, seq).expect("validated above");
        self.offer_hole(hole)
    }

    pub fn offer_hole(&mut self, hole: Hole) -> bool {
        match &self.best {
            Some(b) if b.key() <= hole.key() => false,
            _ => {
                self.best = Some(hole);
                true
            }
        }
    }

    pub fn finish(self, detector: DetectorTag) -> Detection {
        match self.best {
            Some(hole) => Detection::Found { hole, detector },
            None => Detection::Failure,
        }
    }
}

/// Finds the lexicographically first 5-hole in canonical rotation.
///
/// Enumerates `c0 < c1, c2, c3, c4` with `c1 < c4` along neighbourhoods
/// rather than raw 5-tuples.
pub fn find_5hole(g: &Graph) -> Detection {
    for c0 in g.vertices() {
        let n0 = g.neighbors(c0);
        for c1 in n0.ones().filter(|&x| x > c0) {
            for c2 in g.neighbors(c1).ones() {
                if c2 <= c0 || n0.contains(c2) {
                    continue;
                }
                for c3 in g.neighbors(c2).ones() {
                    if c3 <= c0 || c3 == c1 || n0.contains(c3) || g.has_edge(c3, c1) {
                        continue;
                    }
                    let c4 = n0
                        .intersection(g.neighbors(c3))
                        .find(|&c4| c4 > c1 && !g.has_edge(c4, c1) && !g.has_edge(c4, c2));
                    if let Some(c4) = c4 {
                        let seq = [c0, c1, c2, c3, c4];
                        let hole = Hole::new(g, &seq).expect("5-hole by construction");
                        return Detection::Found { hole, detector: DetectorTag::FiveHole };
                    }
                }
            }
        }
    }
    Detection::Failure
}

/// Shortest jewelled odd hole.
///
/// For each induced path `c1-c2-c4-c5` and each common neighbour `c3` of
/// `c1, c5`, takes a shortest `c1`–`c5` path `P` whose interior has no
/// neighbour of `c2`, `c3` or `c4`, and closes it into an odd cycle:
/// through `c2, c4` when `P` is even, through `c3` when `P` is odd. Each
/// closure is checked to be an odd hole before it is recorded.
pub fn find_jewelled(g: &Graph) -> Detection {
    let mut rec = Recorder::new();
    let mut forbidden = g.empty_set();
    let mut back = Vec::new();
    let mut seq = Vec::new();
    for c1 in g.vertices() {
        let n1 = g.neighbors(c1);
        for c2 in n1.ones() {
            for c4 in g.neighbors(c2).ones() {
                if c4 == c1 || n1.contains(c4) {
                    continue;
                }
                for c5 in g.neighbors(c4).ones() {
                    if c5 == c2 || c5 == c1 || n1.contains(c5) || g.has_edge(c5, c2) {
                        continue;
                    }
                    for c3 in n1.intersection(g.neighbors(c5)) {
                        forbidden.clear();
                        forbidden.union_with(g.neighbors(c2));
                        forbidden.union_with(g.neighbors(c3));
                        forbidden.union_with(g.neighbors(c4));
                        let tree = bfs_tree(g, c5, Some(&forbidden), None, Some(c1));
                        let Some(plen) = tree.dist(c1) else { continue };
                        let closure_len = if plen % 2 == 0 { plen + 3 } else { plen + 2 };
                        if closure_len > rec.bound() {
                            continue;
                        }
                        // back = c1, ..., c5 (P read from c1 towards c5).
                        tree.path_from_target(c1, &mut back);
                        seq.clear();
                        if plen % 2 == 0 {
                            seq.extend([c2, c4]);
                        } else {
                            seq.push(c3);
                        }
                        // seq continues c5 .. P .. c1, closing at c2 or c3.
                        seq.extend(back.iter().rev());
                        rec.offer(g, &seq);
                    }
                }
            }
        }
    }
    rec.finish(DetectorTag::Jewel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::cycle;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Graph::from_edges(a + b, edges).unwrap()
    }

    #[test]
    fn five_hole_examples() {
        let d = find_5hole(&cycle(5));
        assert_eq!(d.hole().unwrap().vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(d.detector(), Some(DetectorTag::FiveHole));
        assert_eq!(find_5hole(&cycle(7)), Detection::Failure);
        assert_eq!(find_5hole(&petersen()).length(), Some(5));
        assert_eq!(find_5hole(&complete_bipartite(3, 3)), Detection::Failure);
    }

    #[test]
    fn five_hole_is_lexicographically_first() {
        // Two disjoint 5-holes, second listed first in the edge order.
        let mut edges: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, (i + 1) % 5)));
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(find_5hole(&g).hole().unwrap().vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn jewelled_examples() {
        assert_eq!(find_jewelled(&cycle(7)), Detection::Failure);
        assert_eq!(find_jewelled(&complete_bipartite(3, 4)), Detection::Failure);
        let d = find_jewelled(&cycle(5));
        assert_eq!(d.length(), Some(5));
    }

    #[test]
    fn jewel_with_long_path() {
        // Ring 0..4 with v5 = 4 adjacent to 1 and 2; P = 0-5-6-7-3 (length 4).
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1), (4, 2), (0, 5), (5, 6), (6, 7), (7, 3)],
        )
        .unwrap();
        // Odd holes: 0-1-2-3-7-6-5 (7) and 0-4-3-7-6-5 is even (6).
        let d = find_jewelled(&g);
        assert_eq!(d.length(), Some(7));
        assert!(is_odd_hole(&g, d.hole().unwrap().vertices()));
    }

    #[test]
    fn detection_min_prefers_shorter_then_lexicographic() {
        let g = cycle(5);
        let a = Detection::Found { hole: Hole::new(&g, &[0, 1, 2, 3, 4]).unwrap(), detector: DetectorTag::Jewel };
        assert_eq!(a.clone().min(Detection::Failure), a);
        assert_eq!(Detection::Failure.min(a.clone()), a);
    }
}
