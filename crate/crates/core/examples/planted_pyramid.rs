//! Plants a great pyramid, then rebuilds its hole from the locator tuple
//! and shows the pieces the locator found.
//!
//!     cargo run --example planted_pyramid -- [l1 l2 l3 [ambient]]

use oddhole::locator::locate_traced;
use oddhole::oracle::{brute_shortest_odd_hole, generate, Family, InstanceSpec, Planted};
use oddhole::{find_great_pyramid, LocatorMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (l1, l2, l3) = match args[..] {
        [a, b, c, ..] => (a, b, c),
        _ => (5, 5, 2),
    };
    let ambient = args.get(3).copied().unwrap_or(2);
    let inst = generate(&InstanceSpec::new(Family::PlantedPyramid { l1, l2, l3, ambient }, 1))?;
    let Some(Planted::Pyramid { witness, tuple, arcs }) = &inst.planted else { unreachable!() };
    println!("n = {}, m = {}", inst.graph.n(), inst.graph.m());
    println!("apex {} base {:?}", witness.apex, witness.base);
    for (i, p) in witness.paths.iter().enumerate() {
        println!("P{} = {:?}", i + 1, p);
    }
    println!("tuple {}", tuple.to_json_line());

    let trace = locate_traced(&inst.graph, tuple)?;
    let show = |name: &str, p: &Option<oddhole::Path>| match p {
        Some(p) => println!("{name:>3}: {:?} (length {})", p.vertices(), p.len()),
        None => println!("{name:>3}: -"),
    };
    show("Q3", &trace.q3);
    show("R2", &trace.r2);
    show("C2", &trace.c2);
    show("D2", &trace.d2);
    show("S2", &trace.s2);
    show("Q1", &trace.q1);
    println!("planted arc lengths {arcs:?}");
    match (&trace.hole, trace.rejected) {
        (Some(h), _) => println!("hole {:?} (length {})", h.vertices(), h.len()),
        (None, stage) => println!("rejected at {stage:?}"),
    }

    let hinted = find_great_pyramid(&inst.graph, &LocatorMode::Hinted(vec![*tuple]))?;
    let oracle = brute_shortest_odd_hole(&inst.graph)?;
    println!("hinted locator {:?}, oracle {:?}", hinted.length(), oracle.length());
    Ok(())
}
