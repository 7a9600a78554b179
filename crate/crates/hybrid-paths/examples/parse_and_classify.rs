//! Parse token strings, classify paths, query matching steps, and draw
//! height profiles.
//!
//! ```bash
//! cargo run --example parse_and_classify
//! ```

use hybrid_paths::render::{ascii, svg};
use hybrid_paths::LatticePath;

fn main() {
    // U = upstep, D = downstep, d = special downstep, HH = double
    // horizontal step (two x-units wide)
    let path = LatticePath::parse("UUDHHUHHDUUDDD").unwrap();
    println!("path:    {path}");
    println!("steps:   {}", path.step_count());
    println!("length:  {} x-units", path.unit_len());
    println!();
    println!("{}", ascii(&path));
    println!();

    let class = path.classify();
    println!("little Schröder: {}", class.is_little_schroeder);
    println!("big Schröder:    {}", class.is_big_schroeder);

    // the horizontal step at units 4-5 matches the downstep at unit 14,
    // which in turn matches the upstep at unit 1
    println!("match of step 4:  {}", path.match_step(4).unwrap());
    println!("match of step 14: {}", path.match_step(14).unwrap());

    // special downsteps leaving from even vs odd height
    for tokens in ["UUdD", "UUDd"] {
        let p = LatticePath::parse(tokens).unwrap();
        let c = p.classify();
        println!(
            "{tokens}: even-special {} / odd-special {}",
            c.is_esdp, c.is_osdp
        );
    }

    // peaks and ravines of a Dyck path
    let dyck = LatticePath::parse("UDUUDD").unwrap();
    let (peaks, ravines) = dyck.peaks_and_ravines().unwrap();
    println!("{dyck}: {peaks} peaks, {ravines} ravines");

    // SVG output draws special downsteps dashed
    let drawing = svg(&LatticePath::parse("UUdD").unwrap());
    println!("svg output: {} bytes", drawing.len());
}
