//! Property-based round-trip checks over randomly built paths and series.

use proptest::prelude::*;

use hybrid_paths::evolve::{devolve_full, evolve_full, evolve_step, Flavor};
use hybrid_paths::fps::FormalPowerSeries;
use hybrid_paths::matching::{matching_evolve_step, matching_to_path, path_to_matching};
use hybrid_paths::path::{LatticePath, Step};
use hybrid_paths::permutation::extract_permutation;

/// Deterministically builds a valid path from a byte seed, choosing among
/// the steps `allow` permits at the current height; the prefix is always
/// closable inside the remaining budget, and the walk is closed with
/// ordinary downsteps at the end.
fn build_path(seed: &[u8], allow: impl Fn(i64) -> Vec<Step>) -> LatticePath {
    let budget = 2 * seed.len();
    let mut steps = Vec::new();
    let mut height = 0i64;
    let mut remaining = budget;
    for &b in seed {
        let choices: Vec<Step> = allow(height)
            .into_iter()
            .filter(|s| {
                let w = s.unit_len();
                if w > remaining {
                    return false;
                }
                let h = height + s.height_delta();
                h >= 0 && h <= (remaining - w) as i64
            })
            .collect();
        if choices.is_empty() {
            break;
        }
        let s = choices[b as usize % choices.len()];
        remaining -= s.unit_len();
        height += s.height_delta();
        steps.push(s);
    }
    while height > 0 {
        steps.push(Step::Down);
        height -= 1;
    }
    LatticePath::new(steps).unwrap()
}

fn any_mix(height: i64) -> Vec<Step> {
    let mut v = vec![Step::Up, Step::Horiz];
    if height > 0 {
        v.push(Step::Down);
        v.push(Step::SpecialDown);
    }
    v
}

fn esdp_steps(height: i64) -> Vec<Step> {
    let mut v = vec![Step::Up];
    if height > 0 {
        v.push(Step::Down);
        if height % 2 == 0 {
            v.push(Step::SpecialDown);
        }
    }
    v
}

fn osdp_steps(height: i64) -> Vec<Step> {
    let mut v = vec![Step::Up];
    if height > 0 {
        v.push(Step::Down);
        if height % 2 == 1 {
            v.push(Step::SpecialDown);
        }
    }
    v
}

proptest! {
    #[test]
    fn tokens_round_trip(seed in proptest::collection::vec(any::<u8>(), 0..24)) {
        let path = build_path(&seed, any_mix);
        prop_assert_eq!(LatticePath::parse(&path.tokens()).unwrap(), path);
    }

    #[test]
    fn match_step_involution(seed in proptest::collection::vec(any::<u8>(), 0..24)) {
        let path = build_path(&seed, any_mix);
        for (i, &s) in path.steps().iter().enumerate() {
            if s == Step::Horiz {
                continue;
            }
            let pos = path.unit_pos_of(i);
            let m = path.match_step(pos).unwrap();
            prop_assert_eq!(path.match_step(m).unwrap(), pos);
        }
    }

    #[test]
    fn little_evolution_round_trip(seed in proptest::collection::vec(any::<u8>(), 0..20)) {
        let start = build_path(&seed, esdp_steps);
        prop_assume!(start.classify().is_esdp);
        let trace = evolve_full(&start, Flavor::Little).unwrap();
        let end = trace.final_path();
        prop_assert!(end.classify().is_little_schroeder);
        prop_assert_eq!(end.horiz_count(), start.special_count());
        prop_assert!(extract_permutation(&start, Flavor::Little).unwrap().avoids_231());
        prop_assert_eq!(devolve_full(end, Flavor::Little).unwrap(), start);
    }

    #[test]
    fn big_evolution_round_trip(seed in proptest::collection::vec(any::<u8>(), 0..20)) {
        let start = build_path(&seed, osdp_steps);
        prop_assume!(start.classify().is_osdp);
        let trace = evolve_full(&start, Flavor::Big).unwrap();
        let end = trace.final_path();
        prop_assert!(end.classify().is_big_schroeder);
        prop_assert_eq!(end.horiz_count(), start.special_count());
        prop_assert!(extract_permutation(&start, Flavor::Big).unwrap().avoids_231());
        prop_assert_eq!(devolve_full(end, Flavor::Big).unwrap(), start);
    }

    #[test]
    fn matching_round_trip_and_commutation(
        seed in proptest::collection::vec(any::<u8>(), 0..16),
        evolve_steps in 0usize..6,
    ) {
        // a random little hybrid: evolve a random even-special Dyck path
        // part of the way
        let mut path = build_path(&seed, esdp_steps);
        for _ in 0..evolve_steps.min(path.special_count()) {
            path = evolve_step(&path, Flavor::Little).unwrap();
        }
        let m = path_to_matching(&path).unwrap();
        prop_assert_eq!(matching_to_path(&m).unwrap(), path.clone());
        prop_assert!(m.k_distant_crossings(2).is_empty());
        prop_assert_eq!(m.k_distant_crossings(1).len(), path.horiz_count());
        if path.special_count() > 0 {
            let via_path = path_to_matching(&evolve_step(&path, Flavor::Little).unwrap()).unwrap();
            let via_matching = matching_evolve_step(&m).unwrap();
            prop_assert_eq!(via_path, via_matching);
        }
    }

    #[test]
    fn series_division_inverts_multiplication(
        a in proptest::collection::vec(-9i64..10, 1..6),
        mut b in proptest::collection::vec(-9i64..10, 1..6),
    ) {
        if b[0] == 0 {
            b[0] = 1;
        }
        let order = 10;
        let fa = FormalPowerSeries::from_int_poly(&a, order);
        let fb = FormalPowerSeries::from_int_poly(&b, order);
        let q = fa.div(&fb).unwrap();
        prop_assert_eq!(&q * &fb, fa);
    }

    #[test]
    fn series_sqrt_of_square(a in proptest::collection::vec(-6i64..7, 1..5)) {
        let mut a = a;
        if a[0] <= 0 {
            a[0] = 1;
        }
        let fa = FormalPowerSeries::from_int_poly(&a, 9);
        let square = &fa * &fa;
        prop_assert_eq!(square.sqrt().unwrap(), fa);
    }
}
