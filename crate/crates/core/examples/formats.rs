//! Reads the same graph from edge list, DIMACS and graph6 text.
//!
//!     cargo run --example formats

use oddhole::io::{parse, write_edgelist, Format};
use oddhole::shortest_odd_hole;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        (Format::Edgelist, "# n=5\n0 1\n1 2\n2 3\n3 4\n4 0\n"),
        (Format::Dimacs, "c the 5-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n"),
        (Format::Graph6, "Dhc\n"),
    ];
    for (format, text) in inputs {
        let g = parse(text, format)?;
        let r = shortest_odd_hole(&g)?;
        println!("{format:?}: n={} m={} shortest odd hole {:?}", g.n(), g.m(), r.hole().map(|h| h.vertices().to_vec()));
    }
    let g = parse(inputs[0].1, Format::Edgelist)?;
    print!("{}", write_edgelist(&g));
    Ok(())
}
