//! Exact generating functions over the rationals: the Schröder series,
//! the hybrid-path series computed two independent ways, and the counting
//! identities.
//!
//! ```bash
//! cargo run --example generating_functions
//! ```

use hybrid_paths::series::{
    catalan, check_identity, esdp_count, hybrid_count_weighted, length_gf_closed, little_schroeder,
    narayana, osdp_count, pascal_catalan_factor, GfCatalog, Identity,
};
use hybrid_paths::Flavor;

fn main() {
    // classic numbers, exactly
    println!(
        "Catalan:         {:?}",
        (0..8).map(catalan).collect::<Vec<_>>()
    );
    println!(
        "little Schröder: {:?}",
        (0..8).map(little_schroeder).collect::<Vec<_>>()
    );
    println!(
        "Narayana row 5:  {:?}",
        (0..5).map(|k| narayana(5, k).unwrap()).collect::<Vec<_>>()
    );
    println!();

    // the catalog computes every named series to one order and refuses to
    // exist if any dual computation disagrees
    let catalog = GfCatalog::new(12).unwrap();
    println!("R = {}", catalog.r.truncate(5));
    println!("s = {}", catalog.s.truncate(8));
    println!("L = {}", catalog.little_hybrid.truncate(8));
    println!("B = {}", catalog.big_hybrid.truncate(8));
    println!("shared factor = {}", pascal_catalan_factor(5).unwrap());
    println!();

    // special Dyck triangles: closed binomial forms
    println!(
        "even-special row 4: {:?}",
        (0..=4)
            .map(|j| esdp_count(4, j).unwrap())
            .collect::<Vec<_>>()
    );
    println!(
        "odd-special row 4:  {:?}",
        (0..=4)
            .map(|j| osdp_count(4, j).unwrap())
            .collect::<Vec<_>>()
    );
    println!(
        "weighted hybrid totals at length 4: little {}, big {}",
        hybrid_count_weighted(Flavor::Little, 2),
        hybrid_count_weighted(Flavor::Big, 2),
    );
    println!();

    // identity checks, each comparing two independent computations
    for identity in [
        Identity::LittleSchroederNarayana,
        Identity::BigSchroederNarayana,
        Identity::EsdpClosedForm,
        Identity::OsdpClosedForm,
    ] {
        let report = check_identity(identity, 10).unwrap();
        println!(
            "{}: {}",
            identity.name(),
            if report.pass() { "PASS" } else { "FAIL" }
        );
    }

    // the aggregated path-length series in q
    println!();
    println!("length series: {}", length_gf_closed(13).unwrap());
}
