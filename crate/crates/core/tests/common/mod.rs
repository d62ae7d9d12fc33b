//! Instance corpora shared by the integration tests.
#![allow(dead_code)]

use oddhole::oracle::generate::random_graph;
use oddhole::oracle::{generate, Family, InstanceSpec};
use oddhole::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cycle(k: usize) -> Graph {
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// `C_k` plus `n - k` vertices joined to everything with probability `p`.
pub fn cycle_plus_noise(k: usize, n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for u in 0..n {
        for v in (u + 1).max(k)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Adds `extra` vertices, each adjacent to a random subset of the existing
/// vertices of size `lo..=hi`.
pub fn add_random_vertices(g: &Graph, extra: usize, lo: usize, hi: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    let pool: Vec<usize> = (0..n).collect();
    for j in 0..extra {
        let x = n + j;
        let size = rng.gen_range(lo..=hi).min(n);
        for &u in pool.choose_multiple(rng, size) {
            edges.push((u, x));
        }
    }
    Graph::from_edges(n + extra, edges).unwrap()
}

/// Mixed corpus for the structural checks: holes with random majors,
/// sparse random graphs, noisy cycles and planted pyramids with an extra
/// vertex. All graphs have at most `max_n` vertices.
pub fn lemma_instance(i: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e44a + i);
    match i % 5 {
        0 | 1 => {
            let k = [9usize, 11, 13][rng.gen_range(0..3)].min(max_n - 1 - max_n.is_multiple_of(2) as usize);
            let extra = rng.gen_range(1..=(max_n - k).min(2));
            let majors = (0..extra).map(|_| proper_major_positions(k, &mut rng)).collect();
            let spec = InstanceSpec::new(Family::PlantedMajor { hole_len: k, majors, clique: rng.gen_bool(0.5) }, i);
            generate(&spec).unwrap().graph
        }
        2 => {
            let n = rng.gen_range(8..=max_n);
            random_graph(n, [0.15, 0.2, 0.25][rng.gen_range(0..3)], i).unwrap()
        }
        3 => {
            let k = [7, 9, 11][rng.gen_range(0..3)];
            let n = rng.gen_range(k + 1..=max_n);
            cycle_plus_noise(k, n, 0.35, i)
        }
        _ => {
            let (l1, l2, l3) = [(3, 3, 2), (4, 4, 3), (5, 3, 2), (4, 4, 1)][rng.gen_range(0..4)];
            let base =
                generate(&InstanceSpec::new(Family::PlantedPyramid { l1, l2, l3, ambient: 0 }, i)).unwrap().graph;
            let room = max_n - base.n();
            add_random_vertices(&base, rng.gen_range(1..=room.clamp(1, 2)), 2, 5, &mut rng)
        }
    }
}

/// Hole positions with one adjacent pair and even gaps elsewhere, the gaps
/// next to the pair at least 4. Such a vertex closes no odd hole shorter
/// than `k` and no jewel with the hole.
pub fn proper_major_positions(k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut gaps = vec![4];
    let mut left = k - 9;
    while left > 0 {
        let g = if left <= 4 { left } else { 2 * rng.gen_range(1..=2) };
        gaps.push(g);
        left -= g;
    }
    gaps.shuffle(rng);
    gaps.insert(0, 1);
    gaps.insert(1, 4);
    let mut at = rng.gen_range(0..k);
    let mut pos = Vec::new();
    for g in gaps {
        pos.push(at % k);
        at += g;
    }
    pos
}
