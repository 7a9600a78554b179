//! Lattice paths with special downsteps and double horizontal steps, and
//! the bijections that connect them.
//!
//! The crate revolves around four families of objects and the maps between
//! them:
//!
//! * **Paths** ([`path`]): Dyck paths whose downsteps from even (or odd)
//!   height may carry a *special* mark, and little/big Schröder paths with
//!   double horizontal steps.
//! * **Evolution** ([`evolve`]): the flatten/slide map that consumes
//!   special downsteps one at a time, turning an even-special Dyck path
//!   into a little Schröder path (and an odd-special one into a big
//!   Schröder path), together with its inverse and the *hybrid paths* the
//!   closure passes through.
//! * **Matchings** ([`matching`]): little hybrid paths viewed as perfect
//!   matchings with special edges; 2-distant noncrossing matchings
//!   correspond to little Schröder paths, and the evolve map acts on them
//!   by swapping tails and re-anchoring crossings.
//! * **Permutations** ([`permutation`]): the order in which evolution
//!   creates horizontal steps spells out a 231-avoiding permutation, and
//!   the append/lift construction recovers a path from any such
//!   permutation.
//!
//! Exact generating-function machinery ([`fps`], [`series`]) and
//! exhaustive generators ([`enumerate`]) close the loop: every count is
//! available from a closed form, from a truncated power series over the
//! rationals, and from brute-force enumeration, and the verification
//! suites ([`verify`]) insist that all routes agree.
//!
//! ```
//! use hybrid_paths::evolve::{evolve_full, Flavor};
//! use hybrid_paths::path::LatticePath;
//!
//! let start = LatticePath::parse("UUUdDd").unwrap();
//! let trace = evolve_full(&start, Flavor::Big).unwrap();
//! assert_eq!(trace.final_path().tokens(), "UHHHHD");
//! ```
//!
//! The `hybrid-paths` binary exposes the same operations as subcommands;
//! run `hybrid-paths --help` or see the `examples/` directory.

pub mod cli;
pub mod enumerate;
mod error;
pub mod evolve;
pub mod fps;
pub mod matching;
pub mod path;
pub mod permutation;
pub mod render;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use evolve::{EvolutionTrace, Flavor};
pub use fps::FormalPowerSeries;
pub use matching::HybridMatching;
pub use path::{LatticePath, PathClass, Step};
pub use permutation::Permutation;
