//! Brute-force structural checks on C13 with two twin big majors.
//!
//!     cargo run --release --example lemmas

use oddhole::oracle::lemmas::{
    check_covering_edge, check_even_major_paths, check_not_big, check_stable_common_neighbor,
};
use oddhole::oracle::{all_shortest_odd_holes, generate, Family, InstanceSpec};
use oddhole::structure::{big_majors, is_jewelled};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let family = Family::PlantedMajor { hole_len: 13, majors: vec![vec![0, 1, 5, 9], vec![0, 1, 5, 9]], clique: false };
    let inst = generate(&InstanceSpec::new(family, 0))?;
    let g = &inst.graph;
    for h in all_shortest_odd_holes(g) {
        println!("hole {:?}", h.vertices());
        println!("  big majors {:?}, jewelled {}", big_majors(g, &h), is_jewelled(g, &h));
        println!("  majors: {:?}", check_not_big(g, &h));
        println!("  even major paths: {:?}", check_even_major_paths(g, &h));
        println!("  covering edge: {:?}", check_covering_edge(g, &h));
        println!("  stable common neighbour: {:?}", check_stable_common_neighbor(g, &h));
    }
    Ok(())
}
