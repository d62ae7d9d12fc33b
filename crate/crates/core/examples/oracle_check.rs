//! Compares the pipeline with the exhaustive oracle on random graphs.
//!
//!     cargo run --release --example oracle_check -- [count] [max_n]

use oddhole::oracle::brute_shortest_odd_hole;
use oddhole::oracle::generate::random_graph;
use oddhole::{shortest_odd_hole_with, LocatorMode, PipelineConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let count: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(300);
    let max_n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(12);
    let cfg = PipelineConfig { locator: LocatorMode::Full { guard: max_n }, ..PipelineConfig::default() };
    let mut with_hole = 0;
    for seed in 0..count {
        let n = 6 + seed as usize % (max_n - 5);
        let p = [0.2, 0.35, 0.5][seed as usize % 3];
        let g = random_graph(n, p, seed)?;
        let got = shortest_odd_hole_with(&g, &cfg)?;
        let want = brute_shortest_odd_hole(&g)?;
        if got.min_length() != want.length() {
            eprintln!("seed {seed}: pipeline {:?}, oracle {:?}", got.min_length(), want.length());
            std::process::exit(1);
        }
        with_hole += want.is_found() as usize;
    }
    println!("{count} graphs agree ({with_hole} with an odd hole)");
    Ok(())
}
