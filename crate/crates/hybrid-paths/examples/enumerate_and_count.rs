//! Exhaustive generation of every path family, with closed-form
//! cross-checks and the hybrid lower bound.
//!
//! ```bash
//! cargo run --example enumerate_and_count
//! ```

use hybrid_paths::enumerate::{
    bound_check, count, generate, CountMode, PathClassQuery, PathFamily,
};
use hybrid_paths::evolve::is_hybrid;
use hybrid_paths::Flavor;

fn main() {
    // all little hybrid paths of length 4
    let paths = generate(&PathClassQuery::new(PathFamily::LittleHybrid, 4)).unwrap();
    println!("little hybrids of length 4:");
    for path in &paths {
        println!("  {path} (membership: {})", is_hybrid(path, Flavor::Little));
    }
    println!();

    // refined queries: even-special Dyck paths of length 8 with 2 specials
    let q = PathClassQuery::new(PathFamily::Esdp, 8).with_specials(2);
    println!(
        "even-special length 8 with 2 specials: {} paths (closed form {})",
        count(&q, CountMode::Exhaustive).unwrap(),
        count(&q, CountMode::ClosedForm).unwrap(),
    );
    println!();

    // hybrid counts for both flavors, exhaustively
    print!("{:<14}", "length:");
    for len in (0..=14).step_by(2) {
        print!("{len:>6}");
    }
    println!();
    for family in [PathFamily::LittleHybrid, PathFamily::BigHybrid] {
        print!("{:<14}", format!("{}:", family.name()));
        for len in (0..=14).step_by(2) {
            let n = count(&PathClassQuery::new(family, len), CountMode::Exhaustive).unwrap();
            print!("{n:>6}");
        }
        println!();
    }
    println!();

    // Schröder paths and special Dyck paths are both hybrid, overlapping
    // only in the Dyck paths, so the hybrid count clears 2S - C
    for n in 1..=5 {
        let r = bound_check(n);
        println!(
            "length {:>2}: {} big hybrids >= {} (strict: {})",
            2 * n,
            r.hybrid_count,
            r.lower_bound,
            r.strict
        );
    }
}
