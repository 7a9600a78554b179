//! Little hybrid paths as perfect matchings: crossings, nesting queries,
//! and the matching-level flatten and slide.
//!
//! ```bash
//! cargo run --example matchings
//! ```

use hybrid_paths::evolve::evolve_step;
use hybrid_paths::matching::{
    crossing_outer_vertices, matching_evolve_step, matching_to_path, path_to_matching,
};
use hybrid_paths::{Flavor, HybridMatching, LatticePath};

fn main() {
    // vertex v of the matching corresponds to unit position v of the path
    let path = LatticePath::parse("UHHUDHHD").unwrap();
    let m = path_to_matching(&path).unwrap();
    println!("{path}  <->  {m}");
    println!("back: {}", matching_to_path(&m).unwrap());

    // special downsteps become special edges, marked *
    let path = LatticePath::parse("UUdUUUDDdD").unwrap();
    let m = path_to_matching(&path).unwrap();
    println!("{path}  <->  {m}");
    println!();

    // each horizontal step is a crossing with adjacent middle vertices;
    // wider crossings never appear
    let path = LatticePath::parse("UUDHHUHHDUUDDD").unwrap();
    let m = path_to_matching(&path).unwrap();
    println!("{path}");
    println!("  crossings: {:?}", m.k_distant_crossings(1));
    println!("  2-distant crossings: {:?}", m.k_distant_crossings(2));
    println!(
        "  outer vertices of the crossing at unit 4: {:?}",
        crossing_outer_vertices(&path, 4).unwrap()
    );
    println!();

    // nesting and the transitive left endpoint
    let m = HybridMatching::parse("(1,5),(2,3),(4,7),(6,8)").unwrap();
    println!("in {m}:");
    println!(
        "  immediately nesting (2,3): {:?}",
        m.immediately_nesting_edge((2, 3)).unwrap()
    );
    println!(
        "  transitive left endpoint of (6,8): {}",
        m.transitive_left_endpoint((6, 8)).unwrap()
    );
    println!();

    // the evolve map acts on matchings directly and commutes with the
    // path-side map
    let path = LatticePath::parse("UUUHHDdD").unwrap();
    let before = path_to_matching(&path).unwrap();
    let via_matching = matching_evolve_step(&before).unwrap();
    let via_path = path_to_matching(&evolve_step(&path, Flavor::Little).unwrap()).unwrap();
    println!("{before}");
    println!("  evolves to {via_matching}");
    println!(
        "  same through the path route: {}",
        via_matching == via_path
    );
}
