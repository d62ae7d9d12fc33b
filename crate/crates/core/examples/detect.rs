//! Shortest odd hole of a graph file, or of a small built-in graph.
//!
//!     cargo run --example detect -- graph.txt [edgelist|dimacs|graph6]

use oddhole::io::{parse, Format};
use oddhole::report::Report;
use oddhole::{shortest_odd_hole, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => {
            let format: Format = args.next().as_deref().unwrap_or("edgelist").parse()?;
            parse(&std::fs::read_to_string(path)?, format)?
        }
        None => {
            // C9 with a chord that leaves a 7-hole and an even hole
            let mut edges: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
            edges.push((0, 6));
            Graph::from_edges(9, edges)?
        }
    };
    let result = shortest_odd_hole(&g)?;
    print!("{}", Report::from_pipeline(&g, &result).to_text());
    Ok(())
}
