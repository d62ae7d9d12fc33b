//! Writes a generated instance and its sidecar, then checks the witness
//! against the graph and against a copy with a base edge removed.
//!
//!     cargo run --example witness_check

use oddhole::io::{parse_edgelist, write_edgelist};
use oddhole::oracle::{generate, Family, InstanceSpec};
use oddhole::report::{Sidecar, Witness};
use oddhole::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inst = generate(&InstanceSpec::new(Family::PlantedPyramid { l1: 3, l2: 3, l3: 2, ambient: 1 }, 5))?;
    let edges = write_edgelist(&inst.graph);
    let sidecar = Sidecar::from_instance(&inst).to_json();
    println!("{edges}");
    println!("{sidecar}");

    let g = parse_edgelist(&edges)?;
    let w = Witness::from_json(&sidecar)?;
    println!("original: {:?}", w.check(&g).map_err(|d| d.reason()));

    let doctored = Graph::from_edges(g.n(), g.edges().filter(|&e| e != (1, 2)))?;
    println!("without edge 1-2: {:?}", w.check(&doctored).map_err(|d| d.reason()));
    Ok(())
}
