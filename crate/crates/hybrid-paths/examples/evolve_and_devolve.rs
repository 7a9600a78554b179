//! The evolve map: flatten and slide special downsteps into horizontal
//! steps, one at a time, and reverse the process by identifying the
//! last-added horizontal step.
//!
//! ```bash
//! cargo run --example evolve_and_devolve
//! ```

use hybrid_paths::evolve::{
    devolve_full, devolve_step, evolve_full, evolve_step, is_hybrid, last_added_horizontal,
};
use hybrid_paths::{Flavor, LatticePath};

fn main() {
    // an odd-special Dyck path evolves into a big Schröder path
    let start = LatticePath::parse("UUUdDd").unwrap();
    let trace = evolve_full(&start, Flavor::Big).unwrap();
    println!("start: {start}");
    for (t, snapshot) in trace.snapshots.iter().enumerate() {
        println!("  after application {}: {snapshot}", t + 1);
    }
    println!("final: {}", trace.final_path());
    // each application's horizontal step, located in the final path
    println!(
        "creation order -> final unit positions: {:?}",
        trace.creation_order
    );
    println!("trace JSON: {}", trace.to_json());
    println!();

    // one application at a time: a flatten and a slide
    let flatten = evolve_step(&LatticePath::parse("Ud").unwrap(), Flavor::Big).unwrap();
    println!("Ud flattens to {flatten}");
    let slide = evolve_step(&LatticePath::parse("UUDd").unwrap(), Flavor::Big).unwrap();
    println!("UUDd slides to {slide}");
    println!();

    // the inverse depends on the flavor: the same Schröder path devolves
    // differently under the little and big lineages
    let path = LatticePath::parse("UHHD").unwrap();
    println!(
        "UHHD devolves to {} (little) and {} (big)",
        devolve_step(&path, Flavor::Little).unwrap(),
        devolve_step(&path, Flavor::Big).unwrap(),
    );

    // the key to reversibility: which horizontal step came last
    let mixed = LatticePath::parse("UHHHHD").unwrap();
    println!(
        "last-added horizontal of {mixed} (big) is at unit {}",
        last_added_horizontal(&mixed, Flavor::Big).unwrap()
    );

    // full devolution recovers the special Dyck path
    let end = LatticePath::parse("HHHH").unwrap();
    println!(
        "HHHH devolves fully to {}",
        devolve_full(&end, Flavor::Big).unwrap()
    );

    // hybrid paths are everything the closure passes through; HHUd is one
    // even though it is neither a Schröder path nor a special Dyck path
    let odd_one = LatticePath::parse("HHUd").unwrap();
    println!(
        "HHUd: big hybrid {} / little hybrid {}",
        is_hybrid(&odd_one, Flavor::Big),
        is_hybrid(&odd_one, Flavor::Little),
    );
}
