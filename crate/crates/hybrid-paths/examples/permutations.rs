//! 231-avoiding permutations from evolution order, and the append/lift
//! construction that realizes every one of them.
//!
//! ```bash
//! cargo run --example permutations
//! ```

use hybrid_paths::evolve::evolve_full;
use hybrid_paths::permutation::{
    all_231_avoiders, build_esdp, build_osdp, extract_permutation, good_insertion_positions,
    length_distribution,
};
use hybrid_paths::{Flavor, LatticePath, Permutation};

fn main() {
    // track the order in which horizontal steps appear: entry i is the
    // time the i-th horizontal step (left to right) was created
    for tokens in ["UdUd", "UUUdDd"] {
        let start = LatticePath::parse(tokens).unwrap();
        let perm = extract_permutation(&start, Flavor::Big).unwrap();
        let trace = evolve_full(&start, Flavor::Big).unwrap();
        println!("{tokens} -> {} writes down {perm}", trace.final_path());
    }
    println!();

    // the reverse construction: append for a trailing maximum, lift
    // otherwise
    for text in ["1", "12", "21", "132", "15324"] {
        let q = Permutation::parse(text).unwrap();
        let path = build_osdp(&q).unwrap();
        let back = extract_permutation(&path, Flavor::Big).unwrap();
        println!("{text} -> {path} (round trip: {back})");
    }
    let q = Permutation::parse("21").unwrap();
    println!("even-special variant of 21: {}", build_esdp(&q).unwrap());
    println!();

    // where the next value may be inserted without creating a 231
    let q = Permutation::parse("132").unwrap();
    println!(
        "positions for inserting 4 into 132 (end excluded): {:?}",
        good_insertion_positions(&q).unwrap()
    );

    // the permutations of size n, generated without filtering
    println!("|S_5(231)| = {}", all_231_avoiders(5).len());
    println!();

    // path lengths over all of S_n(231), printed as a polynomial in q
    for n in 1..=6 {
        println!("n = {n}: {}", length_distribution(n));
    }
}
