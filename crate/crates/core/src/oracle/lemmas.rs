//! Brute-force checks of the structural facts about majors and great
//! pyramids that the detectors rely on. Each check takes a shortest odd hole
//! (or a great pyramid) found by the oracle and returns a description of the
//! first violation. Callers are responsible for the stated preconditions.

use crate::graph::{bfs_tree, hole_distance, Graph, Hole, Vertex};
use crate::structure::{big_majors, classify_major, is_jewelled, GreatPyramidWitness, MajorClass};

pub type Check = Result<(), String>;

fn positions(g: &Graph, c: &Hole, v: Vertex) -> Vec<usize> {
    (0..c.len()).filter(|&i| g.has_edge(v, c.at(i))).collect()
}

fn adjacent_pairs(c: &Hole, pos: &[usize]) -> usize {
    let k = c.len();
    let mut count = 0;
    for (i, &p) in pos.iter().enumerate() {
        for &q in &pos[i + 1..] {
            let d = q - p;
            if d == 1 || d == k - 1 {
                count += 1;
            }
        }
    }
    count
}

/// A major with at most three hole neighbours has exactly three, exactly
/// one pair adjacent; one with exactly four has exactly one adjacent pair
/// unless the hole is jewelled.
pub fn check_not_big(g: &Graph, c: &Hole) -> Check {
    let jewelled = is_jewelled(g, c);
    for v in g.vertices().filter(|&v| !c.contains(v)) {
        let MajorClass::Major { neighbor_count, .. } = classify_major(g, c, v).expect("v is off the hole") else {
            continue;
        };
        let pos = positions(g, c, v);
        let pairs = adjacent_pairs(c, &pos);
        if neighbor_count <= 3 && (neighbor_count != 3 || pairs != 1) {
            return Err(format!("major {v} has hole neighbours {pos:?} on {:?}", c.vertices()));
        }
        if neighbor_count == 4 && pairs != 1 && !jewelled {
            return Err(format!("major {v} with four neighbours {pos:?}, {pairs} adjacent pairs, hole not jewelled"));
        }
    }
    Ok(())
}

/// Induced paths between nonadjacent big majors with interior on the hole
/// have even length. Requires: no shortest odd hole is jewelled.
pub fn check_even_major_paths(g: &Graph, c: &Hole) -> Check {
    let big = big_majors(g, c);
    let k = c.len();
    for (i, &x) in big.iter().enumerate() {
        for &y in &big[i + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            // interior = arc of `len` consecutive hole vertices from `start`
            for start in 0..k {
                for len in 1..k {
                    let arc: Vec<Vertex> = (0..len).map(|j| c.at(start + j)).collect();
                    let first = arc[0];
                    let last = arc[len - 1];
                    let ok_x = g.has_edge(x, first) && arc[1..].iter().all(|&a| !g.has_edge(x, a));
                    let ok_y = g.has_edge(y, last) && arc[..len - 1].iter().all(|&a| !g.has_edge(y, a));
                    if ok_x && ok_y && (len + 1) % 2 == 1 {
                        return Err(format!(
                            "odd induced path {x} - {arc:?} - {y} between big majors on {:?}",
                            c.vertices()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// For each big major `x0`, the set of `x0` and all big majors
/// nonadjacent to it is covered by the ends of one hole edge. Subsets of a
/// covered set are covered, so this is the only set per `x0` worth testing.
/// Requires: no 5-hole, no shortest odd hole jewelled.
pub fn check_covering_edge(g: &Graph, c: &Hole) -> Check {
    let big = big_majors(g, c);
    for &x0 in &big {
        let set: Vec<Vertex> = big.iter().copied().filter(|&x| x == x0 || !g.has_edge(x, x0)).collect();
        let covered = (0..c.len()).any(|i| {
            let (u, v) = (c.at(i), c.at(i + 1));
            set.iter().all(|&x| g.has_edge(x, u) || g.has_edge(x, v))
        });
        if !covered {
            return Err(format!("no hole edge covers {set:?} on {:?}", c.vertices()));
        }
    }
    Ok(())
}

/// Every stable set of big majors has a common neighbour on the hole.
/// Requires: no shortest odd hole is jewelled.
pub fn check_stable_common_neighbor(g: &Graph, c: &Hole) -> Check {
    let big = big_majors(g, c);
    if big.len() > 20 {
        return Err("too many big majors to enumerate".into());
    }
    for mask in 1u32..(1 << big.len()) {
        let set: Vec<Vertex> = (0..big.len()).filter(|&i| mask & (1 << i) != 0).map(|i| big[i]).collect();
        let stable = set.iter().enumerate().all(|(i, &x)| set[i + 1..].iter().all(|&y| !g.has_edge(x, y)));
        if !stable {
            continue;
        }
        if !c.vertices().iter().any(|&h| set.iter().all(|&x| g.has_edge(x, h))) {
            return Err(format!("stable big majors {set:?} have no common neighbour on {:?}", c.vertices()));
        }
    }
    Ok(())
}

/// Every major of a great pyramid has two base neighbours or one of the
/// admissible types.
pub fn check_pyramid_majors(g: &Graph, w: &GreatPyramidWitness) -> Check {
    let p = &w.pyramid;
    let hole = Hole::new(g, &w.hole_sequence()).ok_or("pyramid paths do not close a hole")?;
    let nbrs_in = |v: Vertex, vs: &[Vertex]| vs.iter().copied().filter(|&x| g.has_edge(v, x)).collect::<Vec<_>>();
    for v in big_majors(g, &hole) {
        if nbrs_in(v, &p.base).len() >= 2 {
            continue;
        }
        let has_type = |i: usize, j: usize| {
            let k = 3 - i - j;
            let ni = nbrs_in(v, &p.paths[i][1..]);
            let nj = nbrs_in(v, &p.paths[j]);
            let nk = nbrs_in(v, &p.paths[k][1..]);
            ni.len() >= 3 && nj.len() == 2 && g.has_edge(nj[0], nj[1]) && nk.is_empty()
        };
        if ![(0, 1), (1, 0), (0, 2), (1, 2)].iter().any(|&(i, j)| has_type(i, j)) {
            return Err(format!("major {v} of pyramid with apex {} has no admissible type", p.apex));
        }
    }
    Ok(())
}

/// No shortest odd hole has a shortcut of length at most `height`: for
/// nonadjacent hole vertices `u, v`, every path avoiding big majors is at
/// least as long as the shorter arc or longer than `height`.
pub fn check_no_short_shortcut(g: &Graph, c: &Hole, height: usize) -> Check {
    let mut forbidden = g.empty_set();
    for x in big_majors(g, c) {
        forbidden.insert(x);
    }
    let mut alive = g.full_set();
    alive.difference_with(&forbidden);
    for &u in c.vertices() {
        let tree = bfs_tree(g, u, None, Some(&alive), None);
        for &v in c.vertices() {
            if u >= v || g.has_edge(u, v) {
                continue;
            }
            let arc = hole_distance(c, u, v).expect("both on the hole");
            if let Some(d) = tree.dist(v) {
                if d < arc && d <= height {
                    return Err(format!("shortcut of length {d} between {u} and {v} (arc {arc}, height {height})"));
                }
            }
        }
    }
    Ok(())
}
