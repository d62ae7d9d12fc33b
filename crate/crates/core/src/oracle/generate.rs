//! Deterministic instance families: cycles, planted pyramids and jewels,
//! `G(n, p)`, and holes with prescribed major vertices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::locator::Tuple12;
use crate::structure::{check_jewel, check_odd_hole, check_pyramid, JewelWitness, PyramidWitness};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Cycle {
        k: usize,
    },
    /// Apex joined to a triangle by paths of lengths `l1, l2, l3`, plus
    /// `ambient` extra vertices that create no new odd hole.
    PlantedPyramid {
        l1: usize,
        l2: usize,
        l3: usize,
        ambient: usize,
    },
    /// Jewel ring plus a `v1`–`v4` path of length `p_len`.
    PlantedJewel {
        p_len: usize,
        ambient: usize,
    },
    Random {
        n: usize,
        p: f64,
    },
    /// A hole of length `hole_len` plus one vertex per entry of `majors`,
    /// adjacent to the listed hole positions. The extra vertices form a
    /// clique when `clique` is set and a stable set otherwise.
    PlantedMajor {
        hole_len: usize,
        majors: Vec<Vec<usize>>,
        #[serde(default)]
        clique: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        InstanceSpec { family, seed }
    }
}

/// Lengths of the pieces the locator rebuilds, on the planted pyramid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedArcs {
    pub q3: usize,
    pub r2: usize,
    pub c2: usize,
    pub d2: usize,
    pub s2: usize,
}

/// The structure a generator planted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Planted {
    Pyramid { witness: PyramidWitness, tuple: Tuple12, arcs: PlantedArcs },
    Jewel { witness: JewelWitness },
    Hole { hole: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub graph: Graph,
    pub planted: Option<Planted>,
    /// Shortest odd-hole length implied by the construction, where known.
    pub expected_min: Option<usize>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// Builds the instance described by `spec`. Pure in `spec`.
pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (graph, planted, expected_min) = match &spec.family {
        Family::Cycle { k } => cycle(*k)?,
        Family::PlantedPyramid { l1, l2, l3, ambient } => planted_pyramid(*l1, *l2, *l3, *ambient, &mut rng)?,
        Family::PlantedJewel { p_len, ambient } => planted_jewel(*p_len, *ambient, &mut rng)?,
        Family::Random { n, p } => (random(*n, *p, &mut rng)?, None, None),
        Family::PlantedMajor { hole_len, majors, clique } => planted_major(*hole_len, majors, *clique)?,
    };
    Ok(Instance { spec: spec.clone(), graph, planted, expected_min })
}

type Built = (Graph, Option<Planted>, Option<usize>);

fn cycle(k: usize) -> Result<Built> {
    if k < 3 {
        return Err(bad("cycle needs k >= 3"));
    }
    let g = Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))?;
    let expected = (k >= 5 && k % 2 == 1).then_some(k);
    let planted = expected.map(|_| Planted::Hole { hole: (0..k).collect() });
    Ok((g, planted, expected))
}

/// `G(n, p)`: each pair `u < v` in lexicographic order is an edge with
/// probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn random(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(bad(format!("edge probability {p} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Adds `count` vertices that each create no new odd hole: pendants,
/// triangle ears on an existing edge, or false twins of a vertex from
/// `twinnable` (which must have two nonadjacent neighbours).
fn add_ambient(
    edges: &mut Vec<(Vertex, Vertex)>,
    n: &mut usize,
    count: usize,
    twinnable: &[Vertex],
    rng: &mut ChaCha8Rng,
) {
    let base_n = *n;
    let base_edges = edges.clone();
    for _ in 0..count {
        let x = *n;
        *n += 1;
        let kind = rng.gen_range(0..if twinnable.is_empty() { 2 } else { 3 });
        match kind {
            0 => {
                let u = rng.gen_range(0..base_n);
                edges.push((u, x));
            }
            1 => {
                let &(u, v) = base_edges.choose(rng).expect("base graph has edges");
                edges.push((u, x));
                edges.push((v, x));
            }
            _ => {
                let &t = twinnable.choose(rng).unwrap();
                for &(u, v) in &base_edges {
                    if u == t {
                        edges.push((v, x));
                    } else if v == t {
                        edges.push((u, x));
                    }
                }
            }
        }
    }
}

fn planted_pyramid(l1: usize, l2: usize, l3: usize, ambient: usize, rng: &mut ChaCha8Rng) -> Result<Built> {
    if l3 == 0 || l3 >= l1 || l3 >= l2 {
        return Err(bad(format!("height {l3} must be positive and below both {l1} and {l2}")));
    }
    if l1 % 2 != l2 % 2 || l3 % 2 == l1 % 2 {
        return Err(bad("l1, l2 must share a parity and l3 must have the other one"));
    }
    // a = 0, b1 = 1, b2 = 2, b3 = 3, then the interiors of P1, P2, P3
    let mut n = 4;
    let mut edges = vec![(1, 2), (2, 3), (1, 3)];
    let mut paths: [Vec<Vertex>; 3] = Default::default();
    let mut interiors = Vec::new();
    for (i, &len) in [l1, l2, l3].iter().enumerate() {
        let mut p = vec![0];
        for _ in 1..len {
            p.push(n);
            if i < 2 {
                interiors.push(n);
            }
            n += 1;
        }
        p.push(i + 1);
        for w in p.windows(2) {
            edges.push((w[0], w[1]));
        }
        paths[i] = p;
    }
    add_ambient(&mut edges, &mut n, ambient, &interiors, rng);
    let g = Graph::from_edges(n, edges)?;
    let witness = PyramidWitness { apex: 0, base: [1, 2, 3], paths };
    check_pyramid(&g, &witness).map_err(|d| bad(format!("planted pyramid failed its check: {}", d.reason())))?;

    let p2 = &witness.paths[1];
    let mid = l2.div_ceil(2);
    let (ci, di) = if l2 >= 2 * l3 { (l3, l2 - l3) } else { (mid, mid) };
    let tuple = Tuple12::from([0, 1, 2, 3, p2[ci], p2[di], p2[mid], 1, 1, 1, 1, 1]);
    let arcs = PlantedArcs { q3: l3, r2: ci, c2: mid - ci, d2: di - mid, s2: l2 - di };
    Ok((g, Some(Planted::Pyramid { witness, tuple, arcs }), Some(l1 + l2 + 1)))
}

fn planted_jewel(p_len: usize, ambient: usize, rng: &mut ChaCha8Rng) -> Result<Built> {
    if p_len < 2 {
        return Err(bad("jewel path needs length >= 2"));
    }
    // ring v1..v5 = 0..4, v5 also adjacent to v2 and v3
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1), (4, 2)];
    let mut path = vec![0];
    let mut n = 5;
    for _ in 1..p_len {
        path.push(n);
        n += 1;
    }
    path.push(3);
    for w in path.windows(2) {
        edges.push((w[0], w[1]));
    }
    add_ambient(&mut edges, &mut n, ambient, &[], rng);
    let g = Graph::from_edges(n, edges)?;
    let witness = JewelWitness { ring: [0, 1, 2, 3, 4], path };
    check_jewel(&g, &witness).map_err(|d| bad(format!("planted jewel failed its check: {}", d.reason())))?;
    let expected = if p_len.is_multiple_of(2) { p_len + 3 } else { p_len + 2 };
    Ok((g, Some(Planted::Jewel { witness }), Some(expected)))
}

fn planted_major(hole_len: usize, majors: &[Vec<usize>], clique: bool) -> Result<Built> {
    if hole_len < 4 {
        return Err(bad("hole needs length >= 4"));
    }
    let mut edges: Vec<_> = (0..hole_len).map(|i| (i, (i + 1) % hole_len)).collect();
    for (j, ps) in majors.iter().enumerate() {
        let x = hole_len + j;
        let mut seen = Vec::new();
        for &p in ps {
            if p >= hole_len || seen.contains(&p) {
                return Err(bad(format!("bad hole position {p}")));
            }
            seen.push(p);
            edges.push((p, x));
        }
        if clique {
            for k in 0..j {
                edges.push((hole_len + k, x));
            }
        }
    }
    let g = Graph::from_edges(hole_len + majors.len(), edges)?;
    let hole: Vec<Vertex> = (0..hole_len).collect();
    let planted = check_odd_hole(&g, &hole).is_ok().then_some(Planted::Hole { hole });
    Ok((g, planted, None))
}
