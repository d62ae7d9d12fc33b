//! Plants a jewel and finds the jewelled hole.
//!
//!     cargo run --example jewel -- [path length]

use oddhole::oracle::{all_shortest_odd_holes, generate, Family, InstanceSpec, Planted};
use oddhole::structure::is_jewelled;
use oddhole::{find_5hole, find_jewelled};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p_len = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let inst = generate(&InstanceSpec::new(Family::PlantedJewel { p_len, ambient: 2 }, 3))?;
    let Some(Planted::Jewel { witness }) = &inst.planted else { unreachable!() };
    println!("ring {:?}, path {:?}", witness.ring, witness.path);
    println!("5-hole: {:?}", find_5hole(&inst.graph).hole().map(|h| h.vertices().to_vec()));
    let d = find_jewelled(&inst.graph);
    println!("jewel detector: {:?} (expected length {:?})", d.hole().map(|h| h.vertices().to_vec()), inst.expected_min);
    for h in all_shortest_odd_holes(&inst.graph) {
        println!("shortest hole {:?} jewelled: {}", h.vertices(), is_jewelled(&inst.graph, &h));
    }
    Ok(())
}
