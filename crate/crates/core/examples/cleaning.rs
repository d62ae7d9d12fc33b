//! The clean-hole machinery on an odd hole with a major vertex attached.
//!
//!     cargo run --release --example cleaning

use oddhole::cleaning::{cleaning_list, heavy_cleaning_sets, no_great_pyramid_solver, test_clean, Provenance};
use oddhole::oracle::{generate, Family, InstanceSpec};
use oddhole::structure::big_majors;
use oddhole::Hole;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C11 plus a vertex on hole positions 0, 1, 5 and 7
    let family = Family::PlantedMajor { hole_len: 11, majors: vec![vec![0, 1, 5, 7]], clique: false };
    let inst = generate(&InstanceSpec::new(family, 0))?;
    let g = &inst.graph;
    let hole = Hole::new(g, &(0..11).collect::<Vec<_>>()).expect("planted hole");
    println!("big majors of the planted hole: {:?}", big_majors(g, &hole));
    println!("test_clean on the whole graph: {:?}", test_clean(g).length());

    let heavy = heavy_cleaning_sets(g);
    let list = cleaning_list(g);
    let count = |p: Provenance| list.iter().filter(|c| c.provenance == p).count();
    println!("{} sets from induced 4-paths", heavy.len());
    println!(
        "cleaning list: {} sets ({} singleton, {} from 5-tuples)",
        list.len(),
        count(Provenance::Singleton),
        count(Provenance::List5Tuple)
    );
    let d = no_great_pyramid_solver(g);
    println!("solver: {:?} from {:?}", d.hole().map(|h| h.vertices().to_vec()), d.detector());
    Ok(())
}
