//! Invariant suites behind `hybrid-paths verify`. Each suite bundles the
//! cross-checks for one module; `Suite::Examples` replays every worked
//! example from the module documentation as a one-line check.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::enumerate::{self, CountMode, PathClassQuery, PathFamily};
use crate::error::Error;
use crate::evolve::{
    devolve_full, devolve_step, evolve_full, evolve_full_tagged, evolve_step, is_hybrid,
    last_added_horizontal, Flavor,
};
use crate::fps::FormalPowerSeries;
use crate::matching::{
    crossing_outer_vertices, matching_evolve_step, matching_to_path, path_to_matching,
    HybridMatching,
};
use crate::path::{LatticePath, Step};
use crate::permutation::{
    all_231_avoiders, build_esdp, build_osdp, extract_permutation, good_insertion_positions,
    horiz_order_precedes, length_distribution, Permutation,
};
use crate::series::{
    self, big_schroeder, catalan, check_identity, esdp_count, esdp_count_narayana_sum,
    hybrid_count_weighted, little_schroeder, narayana, osdp_count, osdp_count_narayana_sum,
    GfCatalog, Identity,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Paths,
    Evolve,
    Matchings,
    Permutations,
    Series,
    Identities,
    Enumerate,
    Conjecture,
    Examples,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        vec![
            Suite::Paths,
            Suite::Evolve,
            Suite::Matchings,
            Suite::Permutations,
            Suite::Series,
            Suite::Identities,
            Suite::Enumerate,
            Suite::Conjecture,
            Suite::Examples,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Paths => "paths",
            Suite::Evolve => "evolve",
            Suite::Matchings => "matchings",
            Suite::Permutations => "permutations",
            Suite::Series => "series",
            Suite::Identities => "identities",
            Suite::Enumerate => "enumerate",
            Suite::Conjecture => "conjecture",
            Suite::Examples => "examples",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::all().into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl SuiteOutcome {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Bound for exhaustive path sweeps, in x-units.
    pub max_length: usize,
    /// Bound for the conjecture suite (permutation size).
    pub conjecture_n: usize,
    /// Worker threads for independent sub-tasks.
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_length: 12,
            conjecture_n: 8,
            threads: 1,
        }
    }
}

struct Checker {
    checks: Vec<CheckResult>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: Vec::new() }
    }

    fn check(&mut self, name: &str, run: impl FnOnce() -> Result<(), String>) {
        let (pass, detail) = match run() {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            pass,
            detail,
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, expected: T) {
        let pass = got == expected;
        let detail = if pass {
            String::new()
        } else {
            format!("expected {expected:?}, got {got:?}")
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            pass,
            detail,
        });
    }
}

fn p(s: &str) -> LatticePath {
    LatticePath::parse(s).expect("literal path")
}

fn hybrids(flavor: Flavor, len: usize) -> Vec<LatticePath> {
    let family = match flavor {
        Flavor::Little => PathFamily::LittleHybrid,
        Flavor::Big => PathFamily::BigHybrid,
    };
    enumerate::generate(&PathClassQuery::new(family, len).with_cap(len.max(22)))
        .expect("closure generation")
}

fn even_lengths(max: usize) -> impl Iterator<Item = usize> {
    (0..=max).filter(|l| l % 2 == 0)
}

fn run_paths(opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();
    let sweep = opts.max_length.min(10);

    c.check("token-round-trip", || {
        for path in enumerate::all_paths_up_to(sweep) {
            let text = path.tokens();
            let back = LatticePath::parse(&text).map_err(|e| e.to_string())?;
            if back != path {
                return Err(format!("{text} does not round-trip"));
            }
        }
        Ok(())
    });
    c.check("match-step-involution", || {
        for path in enumerate::all_paths_up_to(sweep) {
            for (i, &s) in path.steps().iter().enumerate() {
                if s == Step::Horiz {
                    continue;
                }
                let pos = path.unit_pos_of(i);
                let m = path.match_step(pos).map_err(|e| e.to_string())?;
                if path.match_step(m) != Ok(pos) {
                    return Err(format!("{path}: match of match of {pos} is not {pos}"));
                }
            }
        }
        Ok(())
    });
    c.check("classify-implications", || {
        for path in enumerate::all_paths_up_to(sweep) {
            let cl = path.classify();
            if cl.is_dyck
                && !(cl.is_esdp && cl.is_osdp && cl.is_little_schroeder && cl.is_big_schroeder)
            {
                return Err(format!("{path}: Dyck must imply every class"));
            }
            if cl.is_little_schroeder && !cl.is_big_schroeder {
                return Err(format!("{path}: little Schröder must imply big"));
            }
        }
        Ok(())
    });
    c.check("ravine-doubling-gives-little-schroeder", || {
        for n in 1..=10usize {
            let mut total = BigUint::ZERO;
            for path in enumerate::generate(&PathClassQuery::new(PathFamily::Dyck, 2 * n)).unwrap()
            {
                let (_, ravines) = path.peaks_and_ravines().unwrap();
                total += BigUint::one() << ravines;
            }
            if total != little_schroeder(n) {
                return Err(format!("n = {n}: {total} != {}", little_schroeder(n)));
            }
        }
        Ok(())
    });
    c.check("ravine-census-is-narayana", || {
        for n in 1..=8usize {
            let mut census: BTreeMap<usize, BigUint> = BTreeMap::new();
            for path in enumerate::generate(&PathClassQuery::new(PathFamily::Dyck, 2 * n)).unwrap()
            {
                let (_, ravines) = path.peaks_and_ravines().unwrap();
                *census.entry(ravines).or_default() += BigUint::one();
            }
            for k in 0..n {
                if census.get(&k).cloned().unwrap_or_default() != narayana(n, k).unwrap() {
                    return Err(format!("n = {n}, k = {k}"));
                }
            }
        }
        Ok(())
    });
    SuiteOutcome {
        suite: Suite::Paths,
        checks: c.checks,
    }
}

fn run_evolve(opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();
    let sweep = opts.max_length;

    c.check("round-trips-and-conservation", || {
        for flavor in [Flavor::Little, Flavor::Big] {
            for len in even_lengths(sweep) {
                for path in hybrids(flavor, len) {
                    if path.horiz_count() > 0 {
                        let prev = devolve_step(&path, flavor).map_err(|e| e.to_string())?;
                        if evolve_step(&prev, flavor) != Ok(path.clone()) {
                            return Err(format!("evolve(devolve({path})) != {path}"));
                        }
                    }
                    if path.special_count() > 0 {
                        let next = evolve_step(&path, flavor).map_err(|e| e.to_string())?;
                        if devolve_step(&next, flavor) != Ok(path.clone()) {
                            return Err(format!("devolve(evolve({path})) != {path}"));
                        }
                        if next.special_count() + next.horiz_count()
                            != path.special_count() + path.horiz_count()
                            || next.unit_len() != path.unit_len()
                        {
                            return Err(format!("{path}: conservation violated"));
                        }
                    }
                }
            }
        }
        Ok(())
    });
    c.check("level-bijectivity", || {
        for flavor in [Flavor::Little, Flavor::Big] {
            for len in even_lengths(sweep) {
                let mut buckets: BTreeMap<(usize, usize), BTreeSet<String>> = BTreeMap::new();
                for path in hybrids(flavor, len) {
                    buckets
                        .entry((path.special_count(), path.horiz_count()))
                        .or_default()
                        .insert(path.tokens());
                }
                for (&(j, k), bucket) in &buckets {
                    if j == 0 {
                        continue;
                    }
                    let mut images = BTreeSet::new();
                    for tokens in bucket {
                        let img = evolve_step(&p(tokens), flavor).map_err(|e| e.to_string())?;
                        if !images.insert(img.tokens()) {
                            return Err(format!("duplicate image at ({j},{k})"));
                        }
                    }
                    let target = buckets.get(&(j - 1, k + 1)).cloned().unwrap_or_default();
                    if images != target {
                        return Err(format!(
                            "length {len} ({j},{k}): image has {} paths, level ({},{}) has {}",
                            images.len(),
                            j - 1,
                            k + 1,
                            target.len()
                        ));
                    }
                }
            }
        }
        Ok(())
    });
    c.check("full-evolution-image-census", || {
        for (flavor, start_family, end_family) in [
            (
                Flavor::Little,
                PathFamily::Esdp,
                PathFamily::LittleSchroeder,
            ),
            (Flavor::Big, PathFamily::Osdp, PathFamily::BigSchroeder),
        ] {
            for len in even_lengths(sweep.min(14)) {
                let starts = enumerate::generate(&PathClassQuery::new(start_family, len)).unwrap();
                let mut images: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
                for start in &starts {
                    let trace = evolve_full(start, flavor).map_err(|e| e.to_string())?;
                    let end = trace.final_path();
                    if end.horiz_count() != start.special_count() {
                        return Err(format!("{start}: horizontal count not preserved"));
                    }
                    if !images
                        .entry(end.horiz_count())
                        .or_default()
                        .insert(end.tokens())
                    {
                        return Err(format!("{start}: duplicate image {end}"));
                    }
                }
                for (k, image_set) in images {
                    let target: BTreeSet<String> = enumerate::generate(
                        &PathClassQuery::new(end_family, len).with_horizontals(k),
                    )
                    .unwrap()
                    .into_iter()
                    .map(|q| q.tokens())
                    .collect();
                    if image_set != target {
                        return Err(format!(
                            "length {len}, {k} horizontals: image != Schröder set"
                        ));
                    }
                }
            }
        }
        Ok(())
    });
    c.check("full-devolution-inverts", || {
        for (flavor, end_family) in [
            (Flavor::Little, PathFamily::LittleSchroeder),
            (Flavor::Big, PathFamily::BigSchroeder),
        ] {
            for len in even_lengths(sweep) {
                for end in enumerate::generate(&PathClassQuery::new(end_family, len)).unwrap() {
                    let start = devolve_full(&end, flavor).map_err(|e| e.to_string())?;
                    let trace = evolve_full(&start, flavor).map_err(|e| e.to_string())?;
                    if trace.final_path() != &end {
                        return Err(format!("{end}: devolve/evolve round trip failed"));
                    }
                }
            }
        }
        Ok(())
    });
    SuiteOutcome {
        suite: Suite::Evolve,
        checks: c.checks,
    }
}

fn run_matchings(opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();
    let sweep = opts.max_length;

    c.check("path-matching-round-trip", || {
        for len in even_lengths(sweep) {
            for path in hybrids(Flavor::Little, len) {
                let m = path_to_matching(&path).map_err(|e| e.to_string())?;
                if matching_to_path(&m) != Ok(path.clone()) {
                    return Err(format!("{path} does not round-trip"));
                }
            }
        }
        Ok(())
    });
    c.check("schroeder-matchings-are-2-distant-noncrossing", || {
        for len in even_lengths((sweep + 2).min(14)) {
            for path in
                enumerate::generate(&PathClassQuery::new(PathFamily::LittleSchroeder, len)).unwrap()
            {
                let m = path_to_matching(&path).map_err(|e| e.to_string())?;
                if !m.k_distant_crossings(2).is_empty() {
                    return Err(format!("{path}: 2-distant crossing present"));
                }
                if m.k_distant_crossings(1).len() != path.horiz_count() {
                    return Err(format!("{path}: crossing count != horizontal count"));
                }
            }
        }
        Ok(())
    });
    c.check("evolve-commutes-with-matchings", || {
        for len in even_lengths(sweep) {
            for path in hybrids(Flavor::Little, len) {
                if path.special_count() == 0 {
                    continue;
                }
                let via_path = path_to_matching(&evolve_step(&path, Flavor::Little).unwrap())
                    .map_err(|e| e.to_string())?;
                let via_matching = matching_evolve_step(&path_to_matching(&path).unwrap())
                    .map_err(|e| e.to_string())?;
                if via_path != via_matching {
                    return Err(format!("{path}: the two evolve routes disagree"));
                }
            }
        }
        Ok(())
    });
    c.check("crossing-outer-vertices-agree-with-edges", || {
        for len in even_lengths(sweep) {
            for path in hybrids(Flavor::Little, len) {
                let m = path_to_matching(&path).unwrap();
                let units = path.unit_positions();
                for (i, &s) in path.steps().iter().enumerate() {
                    if s != Step::Horiz {
                        continue;
                    }
                    let v = units[i];
                    let (lo, ro) = crossing_outer_vertices(&path, v).map_err(|e| e.to_string())?;
                    if m.partner(v + 1) != lo || m.partner(v) != ro {
                        return Err(format!("{path}: outer vertices at {v} disagree"));
                    }
                }
            }
        }
        Ok(())
    });
    SuiteOutcome {
        suite: Suite::Matchings,
        checks: c.checks,
    }
}

fn run_permutations(opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();
    let sweep = opts.max_length;

    c.check("extracted-permutations-avoid-231", || {
        for (family, flavor) in [
            (PathFamily::Esdp, Flavor::Little),
            (PathFamily::Osdp, Flavor::Big),
        ] {
            for len in even_lengths(sweep) {
                for start in enumerate::generate(&PathClassQuery::new(family, len)).unwrap() {
                    if !extract_permutation(&start, flavor)
                        .map_err(|e| e.to_string())?
                        .avoids_231()
                    {
                        return Err(format!("{start}: extracted permutation contains 231"));
                    }
                }
            }
        }
        Ok(())
    });
    c.check("build-then-extract-is-identity", || {
        for n in 0..=7usize {
            for q in all_231_avoiders(n) {
                let osdp = build_osdp(&q).map_err(|e| e.to_string())?;
                if extract_permutation(&osdp, Flavor::Big) != Ok(q.clone()) {
                    return Err(format!("{q}: odd-special round trip failed"));
                }
                let esdp = build_esdp(&q).map_err(|e| e.to_string())?;
                if extract_permutation(&esdp, Flavor::Little) != Ok(q.clone()) {
                    return Err(format!("{q}: even-special round trip failed"));
                }
            }
        }
        Ok(())
    });
    c.check("special-on-axis-iff-prefix-complete", || {
        for n in 1..=7usize {
            for q in all_231_avoiders(n) {
                let path = build_osdp(&q).unwrap();
                let heights = path.heights_before();
                let mut k = 0usize;
                for (i, &s) in path.steps().iter().enumerate() {
                    if s != Step::SpecialDown {
                        continue;
                    }
                    k += 1;
                    let on_axis = heights[i] == 1;
                    let complete = (1..=k).all(|v| q.entries()[..k].contains(&v));
                    if on_axis != complete {
                        return Err(format!("{q}: special {k} breaks the axis rule"));
                    }
                }
            }
        }
        Ok(())
    });
    c.check("creation-order-rule-matches-replay", || {
        for flavor in [Flavor::Little, Flavor::Big] {
            for len in even_lengths(sweep) {
                for path in hybrids(flavor, len) {
                    if path.special_count() < 2 {
                        continue;
                    }
                    let snapshots = evolve_full_tagged(&path, flavor).unwrap();
                    let last = snapshots.last().unwrap();
                    let final_path =
                        LatticePath::new(last.iter().map(|&(s, _)| s).collect()).unwrap();
                    let units = final_path.unit_positions();
                    let mut final_pos: BTreeMap<u32, usize> = BTreeMap::new();
                    for (i, &(s, tag)) in last.iter().enumerate() {
                        if s == Step::Horiz && tag > 0 {
                            final_pos.insert(tag, units[i]);
                        }
                    }
                    let specials: Vec<usize> = path
                        .steps()
                        .iter()
                        .enumerate()
                        .filter(|&(_, &s)| s == Step::SpecialDown)
                        .map(|(i, _)| path.unit_pos_of(i))
                        .collect();
                    for (ra, &a) in specials.iter().enumerate() {
                        for (rb, &b) in specials.iter().enumerate().skip(ra + 1) {
                            let observed =
                                final_pos[&((rb + 1) as u32)] < final_pos[&((ra + 1) as u32)];
                            let predicted =
                                horiz_order_precedes(&path, a, b).map_err(|e| e.to_string())?;
                            if observed != predicted {
                                return Err(format!(
                                    "{path}: specials at {a},{b} predicted {predicted}"
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });
    SuiteOutcome {
        suite: Suite::Permutations,
        checks: c.checks,
    }
}

fn run_series(_opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();
    const ORDER: usize = 30;

    c.check("catalog-cross-checks-at-order-30", || {
        // construction itself enforces: both hybrid routes agree, the
        // special Dyck series equal the Schröder series, coefficients are
        // nonnegative integers
        let catalog = GfCatalog::new(ORDER).map_err(|e| e.to_string())?;
        let one = FormalPowerSeries::one(ORDER);
        let x = FormalPowerSeries::x(ORDER);
        let rr = &catalog.r * &catalog.r;
        if rr != FormalPowerSeries::from_int_poly(&[1, -6, 1], ORDER) {
            return Err("R^2 != 1 - 6x + x^2".into());
        }
        if &catalog.s * &(&(&one + &x) + &catalog.r)
            != FormalPowerSeries::from_int_poly(&[2], ORDER)
        {
            return Err("s (1 + x + R) != 2".into());
        }
        let two_s_minus_one = &catalog.s.scale(&BigRational::from_integer(2.into())) - &one;
        if catalog.big_s != two_s_minus_one {
            return Err("S != 2s - 1".into());
        }
        Ok(())
    });
    c.check("sqrt-squares-back", || {
        for poly in [
            vec![1i64, 2, 3, 4],
            vec![4, -4, 1],
            vec![9, 0, 0, 1],
            vec![1, -2, -1, -2, 1],
        ] {
            let a = FormalPowerSeries::from_int_poly(&poly, 16);
            let r = a.sqrt().map_err(|e| e.to_string())?;
            if &r * &r != a {
                return Err(format!("sqrt of {poly:?} does not square back"));
            }
        }
        Ok(())
    });
    c.check("special-dyck-dual-forms", || {
        for n in 1..=12usize {
            for j in 0..=n {
                if esdp_count(n, j) != esdp_count_narayana_sum(n, j) {
                    return Err(format!("even-special n {n} j {j}"));
                }
                if osdp_count(n, j) != osdp_count_narayana_sum(n, j) {
                    return Err(format!("odd-special n {n} j {j}"));
                }
            }
        }
        Ok(())
    });
    c.check("hybrid-coefficients-equal-weighted-sums", || {
        let catalog = GfCatalog::new(ORDER).unwrap();
        for n in 0..ORDER {
            let little = BigRational::from_integer(hybrid_count_weighted(Flavor::Little, n).into());
            let big = BigRational::from_integer(hybrid_count_weighted(Flavor::Big, n).into());
            if catalog.little_hybrid.coeff(n) != &little || catalog.big_hybrid.coeff(n) != &big {
                return Err(format!("n = {n}"));
            }
        }
        Ok(())
    });
    SuiteOutcome {
        suite: Suite::Series,
        checks: c.checks,
    }
}

fn run_identities(opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();

    for (identity, n_max) in [
        (Identity::LittleSchroederNarayana, 10),
        (Identity::BigSchroederNarayana, 10),
        (Identity::EsdpClosedForm, 12),
        (Identity::OsdpClosedForm, 12),
    ] {
        c.check(identity.name(), || {
            let report = check_identity(identity, n_max).map_err(|e| e.to_string())?;
            if report.pass() {
                Ok(())
            } else {
                let bad: Vec<usize> = report
                    .results
                    .iter()
                    .filter(|&&(_, ok)| !ok)
                    .map(|&(n, _)| n)
                    .collect();
                Err(format!("failing parameters {bad:?}"))
            }
        });
    }
    c.check("weighted-sums-equal-closure-counts", || {
        let n_max = (opts.max_length / 2).clamp(2, 8);
        for flavor in [Flavor::Little, Flavor::Big] {
            for n in 0..=n_max {
                let closure = BigUint::from(hybrids(flavor, 2 * n).len());
                if closure != hybrid_count_weighted(flavor, n) {
                    return Err(format!("{flavor} n = {n}"));
                }
            }
        }
        Ok(())
    });
    SuiteOutcome {
        suite: Suite::Identities,
        checks: c.checks,
    }
}

fn run_enumerate(_opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();

    c.check("three-route-agreement-up-to-length-16", || {
        let catalog = GfCatalog::new(9).map_err(|e| e.to_string())?;
        for flavor in [Flavor::Little, Flavor::Big] {
            for n in 0..=8usize {
                let closure = BigUint::from(hybrids(flavor, 2 * n).len());
                let weighted = hybrid_count_weighted(flavor, n);
                let series = match flavor {
                    Flavor::Little => &catalog.little_hybrid,
                    Flavor::Big => &catalog.big_hybrid,
                };
                let coeff = BigRational::from_integer(closure.clone().into());
                if closure != weighted || series.coeff(n) != &coeff {
                    return Err(format!("{flavor} length {}", 2 * n));
                }
            }
        }
        Ok(())
    });
    c.check("closure-is-duplicate-free-and-hybrid", || {
        for (flavor, family) in [
            (Flavor::Little, PathFamily::LittleHybrid),
            (Flavor::Big, PathFamily::BigHybrid),
        ] {
            for len in even_lengths(12) {
                let paths = enumerate::generate(&PathClassQuery::new(family, len)).unwrap();
                let set: BTreeSet<String> = paths.iter().map(|q| q.tokens()).collect();
                if set.len() != paths.len() {
                    return Err(format!("{flavor} length {len}: duplicates"));
                }
                for path in &paths {
                    if !is_hybrid(path, flavor) {
                        return Err(format!("{path} fails membership"));
                    }
                }
            }
        }
        Ok(())
    });
    c.check("special-refinements-match-closed-forms", || {
        for n in 1..=8usize {
            for j in 0..=n {
                let esdp = enumerate::count(
                    &PathClassQuery::new(PathFamily::Esdp, 2 * n).with_specials(j),
                    CountMode::Exhaustive,
                )
                .unwrap();
                if esdp != esdp_count(n, j).unwrap() {
                    return Err(format!("even-special n {n} j {j}"));
                }
                let osdp = enumerate::count(
                    &PathClassQuery::new(PathFamily::Osdp, 2 * n).with_specials(j),
                    CountMode::Exhaustive,
                )
                .unwrap();
                if osdp != osdp_count(n, j).unwrap() {
                    return Err(format!("odd-special n {n} j {j}"));
                }
            }
        }
        Ok(())
    });
    c.check("family-counts-match-classic-numbers", || {
        for n in 0..=9usize {
            let dyck = enumerate::count(
                &PathClassQuery::new(PathFamily::Dyck, 2 * n),
                CountMode::Exhaustive,
            )
            .unwrap();
            if dyck != catalan(n) {
                return Err(format!("Dyck n = {n}"));
            }
            let little = enumerate::count(
                &PathClassQuery::new(PathFamily::LittleSchroeder, 2 * n),
                CountMode::Exhaustive,
            )
            .unwrap();
            if little != little_schroeder(n) {
                return Err(format!("little Schröder n = {n}"));
            }
            let big = enumerate::count(
                &PathClassQuery::new(PathFamily::BigSchroeder, 2 * n),
                CountMode::Exhaustive,
            )
            .unwrap();
            if big != big_schroeder(n) {
                return Err(format!("big Schröder n = {n}"));
            }
        }
        Ok(())
    });
    c.check("hybrid-lower-bound", || {
        for n in 1..=8usize {
            let report = enumerate::bound_check(n);
            if !report.holds || (n >= 2 && !report.strict) {
                return Err(format!("n = {n}: {report:?}"));
            }
        }
        Ok(())
    });
    SuiteOutcome {
        suite: Suite::Enumerate,
        checks: c.checks,
    }
}

fn run_conjecture(opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();
    let n_max = opts.conjecture_n;

    // observed agreement at each size; no general claim is made
    for n in 1..=n_max {
        c.check(&format!("length-rows-are-narayana-n{n}"), || {
            let dist = length_distribution(n);
            let mut expected: BTreeMap<usize, BigUint> = BTreeMap::new();
            for k in 0..n {
                expected.insert(2 * n + 2 * k, narayana(n, k).unwrap());
            }
            let got: BTreeMap<usize, BigUint> = dist
                .counts
                .iter()
                .map(|(&len, &count)| (len, BigUint::from(count)))
                .collect();
            if got != expected {
                return Err(format!("n = {n}: distribution is not the Narayana row"));
            }
            Ok(())
        });
    }
    c.check("aggregate-length-series-matches-closed-form", || {
        // one size beyond the row check pins all coefficients through
        // q^(2 n_max + 3); with the default bound that covers q^18
        let report =
            check_identity(Identity::PathLengthSeries, n_max + 1).map_err(|e| e.to_string())?;
        if report.pass() {
            Ok(())
        } else {
            let bad: Vec<usize> = report
                .results
                .iter()
                .filter(|&&(_, ok)| !ok)
                .map(|&(q, _)| q)
                .collect();
            Err(format!("failing powers {bad:?}"))
        }
    });
    SuiteOutcome {
        suite: Suite::Conjecture,
        checks: c.checks,
    }
}

fn run_examples(_opts: &VerifyOptions) -> SuiteOutcome {
    let mut c = Checker::new();

    // paths
    c.eq("parse-mixed", p("UUDHHUHHDUUDDD").step_count(), 12);
    c.eq("parse-mixed-length", p("UUDHHUHHDUUDDD").unit_len(), 14);
    c.eq(
        "parse-empty",
        LatticePath::parse("").unwrap(),
        LatticePath::empty(),
    );
    c.eq(
        "parse-lone-h",
        LatticePath::parse("UH"),
        Err(Error::OddHorizontalRun),
    );
    c.eq("tokens-empty", LatticePath::empty().tokens(), String::new());
    c.eq("tokens-ud", p("Ud").tokens(), "Ud".to_string());
    c.eq("tokens-uudd", p("UUdD").tokens(), "UUdD".to_string());
    c.check("classify-even-special", || {
        let cl = p("UUdD").classify();
        if cl.is_esdp && !cl.is_osdp {
            Ok(())
        } else {
            Err("UUdD".into())
        }
    });
    c.check("classify-odd-special", || {
        let cl = p("UUDd").classify();
        if cl.is_osdp && !cl.is_esdp {
            Ok(())
        } else {
            Err("UUDd".into())
        }
    });
    c.check("classify-axis-horizontal", || {
        let cl = p("HHUD").classify();
        if cl.is_big_schroeder && !cl.is_little_schroeder {
            Ok(())
        } else {
            Err("HHUD".into())
        }
    });
    c.eq(
        "match-horizontal",
        p("UUDHHUHHDUUDDD").match_step(4),
        Ok(14),
    );
    c.eq("match-downstep", p("UUDHHUHHDUUDDD").match_step(14), Ok(1));
    c.eq("match-peak", p("UD").match_step(1), Ok(2));
    c.eq("peaks-udud", p("UDUD").peaks_and_ravines(), Ok((2, 1)));
    c.eq("peaks-uudd", p("UUDD").peaks_and_ravines(), Ok((1, 0)));

    // evolve
    c.eq(
        "flatten-peak",
        evolve_step(&p("Ud"), Flavor::Big),
        Ok(p("HH")),
    );
    c.eq(
        "slide-empty-subpath",
        evolve_step(&p("UUDd"), Flavor::Big),
        Ok(p("UHHD")),
    );
    c.eq(
        "slide-carries-horizontal",
        evolve_step(&p("UUHHDd"), Flavor::Big),
        Ok(p("UHHHHD")),
    );
    c.eq(
        "last-added-hill",
        last_added_horizontal(&p("UUHHDd"), Flavor::Big),
        Ok(3),
    );
    c.eq(
        "last-added-sole",
        last_added_horizontal(&p("HH"), Flavor::Big),
        Ok(1),
    );
    c.eq(
        "last-added-slide",
        last_added_horizontal(&p("UHHHHD"), Flavor::Big),
        Ok(2),
    );
    c.eq(
        "devolve-little",
        devolve_step(&p("UHHD"), Flavor::Little),
        Ok(p("UUdD")),
    );
    c.eq(
        "devolve-big",
        devolve_step(&p("UHHD"), Flavor::Big),
        Ok(p("UUDd")),
    );
    c.eq(
        "devolve-flatten",
        devolve_step(&p("HH"), Flavor::Big),
        Ok(p("Ud")),
    );
    c.check("evolve-full-flatten", || {
        let t = evolve_full(&p("UUdD"), Flavor::Little).map_err(|e| e.to_string())?;
        if t.final_path() == &p("UHHD") && t.applications() == 1 {
            Ok(())
        } else {
            Err(format!("{t:?}"))
        }
    });
    c.check("evolve-full-forward-order", || {
        let t = evolve_full(&p("UdUd"), Flavor::Big).map_err(|e| e.to_string())?;
        if t.final_path() == &p("HHHH") && t.creation_order == vec![1, 3] {
            Ok(())
        } else {
            Err(format!("{t:?}"))
        }
    });
    c.check("evolve-full-backward-order", || {
        let t = evolve_full(&p("UUUdDd"), Flavor::Big).map_err(|e| e.to_string())?;
        if t.final_path() == &p("UHHHHD") && t.creation_order == vec![4, 2] {
            Ok(())
        } else {
            Err(format!("{t:?}"))
        }
    });
    c.eq(
        "devolve-full-little",
        devolve_full(&p("UHHD"), Flavor::Little),
        Ok(p("UUdD")),
    );
    c.eq(
        "devolve-full-big",
        devolve_full(&p("HHHH"), Flavor::Big),
        Ok(p("UdUd")),
    );
    c.eq(
        "devolve-full-fixed-point",
        devolve_full(&p("UUdD"), Flavor::Little),
        Ok(p("UUdD")),
    );
    c.eq(
        "hybrid-axis-special-big",
        is_hybrid(&p("HHUd"), Flavor::Big),
        true,
    );
    c.eq(
        "hybrid-axis-special-little",
        is_hybrid(&p("HHUd"), Flavor::Little),
        false,
    );
    c.eq(
        "hybrid-dyck-both",
        is_hybrid(&p("UUDD"), Flavor::Little) && is_hybrid(&p("UUDD"), Flavor::Big),
        true,
    );

    // matchings
    c.check("crossing-distance-3", || {
        let m = HybridMatching::parse("(1,2),(3,4),(5,7),(6,11),(8,12),(9,10)").unwrap();
        let three = m.k_distant_crossings(3);
        if three.len() == 1
            && three[0].left_edge == (6, 11)
            && three[0].right_edge == (8, 12)
            && three[0].distance == 3
        {
            Ok(())
        } else {
            Err(format!("{three:?}"))
        }
    });
    c.check("crossing-distance-1", || {
        let m = HybridMatching::parse("(1,3),(2,4)").unwrap();
        let one = m.k_distant_crossings(1);
        if one.len() == 1 && one[0].distance == 1 {
            Ok(())
        } else {
            Err(format!("{one:?}"))
        }
    });
    c.check("noncrossing-has-no-crossings", || {
        let m = HybridMatching::parse("(1,6),(2,3),(4,5)").unwrap();
        for k in 1..5 {
            if !m.k_distant_crossings(k).is_empty() {
                return Err(format!("k = {k}"));
            }
        }
        Ok(())
    });
    c.eq(
        "matching-of-two-crossings",
        path_to_matching(&p("UHHUDHHD")).unwrap(),
        HybridMatching::parse("(1,3),(2,7),(4,5),(6,8)").unwrap(),
    );
    c.eq(
        "matching-with-special-edges",
        path_to_matching(&p("UUdUUUDDdD")).unwrap(),
        HybridMatching::parse("(1,10),(2,3)*,(4,9)*,(5,8),(6,7)").unwrap(),
    );
    c.eq(
        "matching-of-long-path",
        path_to_matching(&p("UUDHHUHHDUUDDD")).unwrap(),
        HybridMatching::parse("(1,5),(2,3),(4,14),(6,8),(7,9),(10,13),(11,12)").unwrap(),
    );
    c.eq(
        "path-of-two-crossings",
        matching_to_path(&HybridMatching::parse("(1,3),(2,7),(4,5),(6,8)").unwrap()),
        Ok(p("UHHUDHHD")),
    );
    c.eq(
        "path-of-single-edge",
        matching_to_path(&HybridMatching::parse("(1,2)").unwrap()),
        Ok(p("UD")),
    );
    c.eq(
        "path-of-adjacent-crossing",
        matching_to_path(&HybridMatching::parse("(1,3),(2,4)").unwrap()),
        Ok(p("UHHD")),
    );
    c.check("immediately-nesting", || {
        let m = HybridMatching::parse("(1,10),(2,3),(4,9),(5,8),(6,7)").unwrap();
        let nest = m
            .immediately_nesting_edge((5, 8))
            .map_err(|e| e.to_string())?;
        match nest {
            Some(e) if (e.left, e.right) == (4, 9) => {}
            other => return Err(format!("{other:?}")),
        }
        if m.immediately_nesting_edge((1, 10)).unwrap().is_some() {
            return Err("outermost edge has a nest".into());
        }
        let m = HybridMatching::parse("(1,2),(3,4)").unwrap();
        if m.immediately_nesting_edge((3, 4)).unwrap().is_some() {
            return Err("side-by-side edge has a nest".into());
        }
        Ok(())
    });
    c.check("transitive-left-endpoint", || {
        let m = HybridMatching::parse("(1,5),(2,3),(4,7),(6,8)").unwrap();
        if m.transitive_left_endpoint((6, 8)) != Ok(1) {
            return Err("(6,8)".into());
        }
        if m.transitive_left_endpoint((2, 3)) != Ok(2) {
            return Err("(2,3)".into());
        }
        if m.transitive_left_endpoint((4, 7)) != Ok(1) {
            return Err("(4,7)".into());
        }
        Ok(())
    });
    c.eq(
        "matching-flatten-swaps-tails",
        matching_evolve_step(&HybridMatching::parse("(1,4),(2,3)*").unwrap()),
        Ok(HybridMatching::parse("(1,3),(2,4)").unwrap()),
    );
    c.eq(
        "matching-evolve-smallest-right",
        matching_evolve_step(&HybridMatching::parse("(1,10),(2,3)*,(4,9)*,(5,8),(6,7)").unwrap()),
        Ok(HybridMatching::parse("(1,3),(2,10),(4,9)*,(5,8),(6,7)").unwrap()),
    );
    c.eq(
        "matching-evolve-needs-special",
        matching_evolve_step(&HybridMatching::parse("(1,2),(3,4)").unwrap()),
        Err(Error::NoSpecialEdge),
    );
    c.eq(
        "outer-vertices-far",
        crossing_outer_vertices(&p("UUDHHUHHDUUDDD"), 4),
        Ok((1, 14)),
    );
    c.eq(
        "outer-vertices-via-horizontal",
        crossing_outer_vertices(&p("UHHUDHHD"), 2).map(|(_, r)| r),
        Ok(7),
    );
    c.eq(
        "outer-vertices-simple",
        crossing_outer_vertices(&p("UHHD"), 2),
        Ok((1, 4)),
    );

    // permutations
    c.eq(
        "contains-231",
        Permutation::parse("12584367").unwrap().avoids_231(),
        false,
    );
    c.eq(
        "decreasing-avoids",
        Permutation::parse("321").unwrap().avoids_231(),
        true,
    );
    c.eq("avoider-count-s4", all_231_avoiders(4).len(), 14);
    c.eq(
        "extract-two-flattens",
        extract_permutation(&p("UdUd"), Flavor::Big),
        Ok(Permutation::parse("12").unwrap()),
    );
    c.eq(
        "extract-flatten-slide",
        extract_permutation(&p("UUUdDd"), Flavor::Big),
        Ok(Permutation::parse("21").unwrap()),
    );
    c.eq(
        "extract-empty",
        extract_permutation(&LatticePath::empty(), Flavor::Big),
        Ok(Permutation::empty()),
    );
    c.eq(
        "good-insertions-132",
        good_insertion_positions(&Permutation::parse("132").unwrap()),
        Ok(vec![0, 1]),
    );
    c.eq(
        "good-insertions-1",
        good_insertion_positions(&Permutation::parse("1").unwrap()),
        Ok(vec![0]),
    );
    c.eq(
        "good-insertions-12",
        good_insertion_positions(&Permutation::parse("12").unwrap()),
        Ok(vec![0, 1]),
    );
    c.eq(
        "build-single",
        build_osdp(&Permutation::parse("1").unwrap()),
        Ok(p("Ud")),
    );
    c.eq(
        "build-appends",
        build_osdp(&Permutation::parse("12").unwrap()),
        Ok(p("UdUd")),
    );
    c.eq(
        "build-lifts",
        build_osdp(&Permutation::parse("21").unwrap()),
        Ok(p("UUUdDd")),
    );
    c.eq(
        "build-even-single",
        build_esdp(&Permutation::parse("1").unwrap()),
        Ok(p("UUdD")),
    );
    c.eq(
        "build-even-empty",
        build_esdp(&Permutation::empty()),
        Ok(p("UD")),
    );
    c.eq(
        "build-even-lifts",
        build_esdp(&Permutation::parse("21").unwrap()),
        Ok(p("UUUUdDdD")),
    );
    c.eq(
        "lengths-n3",
        length_distribution(3).counts,
        BTreeMap::from([(6, 1), (8, 3), (10, 1)]),
    );
    c.eq(
        "lengths-n4",
        length_distribution(4).counts,
        BTreeMap::from([(8, 1), (10, 6), (12, 6), (14, 1)]),
    );
    c.eq(
        "lengths-n1",
        length_distribution(1).counts,
        BTreeMap::from([(2, 1)]),
    );
    c.eq(
        "order-rule-slide",
        horiz_order_precedes(&p("UUUdDd"), 4, 6),
        Ok(true),
    );
    c.eq(
        "order-rule-flatten",
        horiz_order_precedes(&p("UdUd"), 2, 4),
        Ok(false),
    );
    c.eq(
        "order-rule-upstep",
        horiz_order_precedes(&p("UUdDUd"), 3, 6),
        Ok(false),
    );

    // series
    c.check("conjugate-product", || {
        let a = FormalPowerSeries::from_int_poly(&[1, 1], 4);
        let b = FormalPowerSeries::from_int_poly(&[1, -1], 4);
        if &a * &b == FormalPowerSeries::from_int_poly(&[1, 0, -1, 0], 4) {
            Ok(())
        } else {
            Err("(1+x)(1-x)".into())
        }
    });
    c.check("geometric-series", || {
        let quotient = FormalPowerSeries::one(5)
            .div(&FormalPowerSeries::from_int_poly(&[1, -1], 5))
            .unwrap();
        if quotient == FormalPowerSeries::from_int_poly(&[1, 1, 1, 1, 1], 5) {
            Ok(())
        } else {
            Err("1/(1-x)".into())
        }
    });
    c.check("schroeder-denominator-product", || {
        let catalog = GfCatalog::new(12).unwrap();
        let one = FormalPowerSeries::one(12);
        let x = FormalPowerSeries::x(12);
        if &catalog.s * &(&(&one + &x) + &catalog.r) == FormalPowerSeries::from_int_poly(&[2], 12) {
            Ok(())
        } else {
            Err("s (1 + x + R) != 2".into())
        }
    });
    c.check("sqrt-examples", || {
        let one = FormalPowerSeries::one(6);
        if one.sqrt() != Ok(one.clone()) {
            return Err("sqrt(1)".into());
        }
        let sq = FormalPowerSeries::from_int_poly(&[1, 2, 1], 6);
        if sq.sqrt() != Ok(FormalPowerSeries::from_int_poly(&[1, 1], 6)) {
            return Err("sqrt((1+x)^2)".into());
        }
        let r = FormalPowerSeries::from_int_poly(&[1, -6, 1], 8)
            .sqrt()
            .unwrap();
        if &r * &r != FormalPowerSeries::from_int_poly(&[1, -6, 1], 8) {
            return Err("R^2".into());
        }
        if r.truncate(4) != FormalPowerSeries::from_int_poly(&[1, -3, -4, -12], 4) {
            return Err("R expansion".into());
        }
        Ok(())
    });
    c.check("schroeder-numbers", || {
        let little: Vec<u64> = vec![1, 1, 3, 11, 45, 197];
        let big: Vec<u64> = vec![1, 2, 6, 22, 90, 394];
        for n in 0..6 {
            if little_schroeder(n) != BigUint::from(little[n]) {
                return Err(format!("little {n}"));
            }
            if big_schroeder(n) != BigUint::from(big[n]) {
                return Err(format!("big {n}"));
            }
        }
        Ok(())
    });
    c.eq("narayana-4-1", narayana(4, 1), Ok(BigUint::from(6u32)));
    c.check("special-dyck-rows", || {
        if esdp_count(2, 0) != Ok(BigUint::from(2u32))
            || esdp_count(2, 1) != Ok(BigUint::from(1u32))
        {
            return Err("even-special row 2".into());
        }
        let row: Vec<BigUint> = (0..=2).map(|j| osdp_count(2, j).unwrap()).collect();
        if row != vec![2u32.into(), 3u32.into(), 1u32.into()] {
            return Err("odd-special row 2".into());
        }
        Ok(())
    });
    c.check("special-totals-are-schroeder", || {
        for n in 1..=10usize {
            let total: BigUint = (0..=n).map(|j| esdp_count(n, j).unwrap()).sum();
            if total != little_schroeder(n) {
                return Err(format!("n = {n}"));
            }
        }
        Ok(())
    });
    c.check("hybrid-series-reference-values", || {
        let catalog = GfCatalog::new(8).unwrap();
        let little = [1u64, 1, 4, 18, 87, 439, 2278, 12052];
        let big = [1u64, 3, 11, 47, 219, 1075, 5459, 28383];
        for n in 0..8 {
            if catalog.little_hybrid.coeff(n)
                != &BigRational::from_integer(BigUint::from(little[n]).into())
            {
                return Err(format!("little n = {n}"));
            }
            if catalog.big_hybrid.coeff(n)
                != &BigRational::from_integer(BigUint::from(big[n]).into())
            {
                return Err(format!("big n = {n}"));
            }
        }
        Ok(())
    });
    c.check("pascal-catalan-factor", || {
        let f = series::pascal_catalan_factor(5).unwrap();
        let expected = [1u64, 2, 7, 30, 141];
        for n in 0..5 {
            if f.coeff(n) != &BigRational::from_integer(BigUint::from(expected[n]).into()) {
                return Err(format!("n = {n}"));
            }
        }
        Ok(())
    });
    c.check("weighted-hybrid-examples", || {
        if hybrid_count_weighted(Flavor::Little, 2) != BigUint::from(4u32) {
            return Err("little n = 2".into());
        }
        if hybrid_count_weighted(Flavor::Big, 2) != BigUint::from(11u32) {
            return Err("big n = 2".into());
        }
        if hybrid_count_weighted(Flavor::Big, 0) != BigUint::one() {
            return Err("big n = 0".into());
        }
        Ok(())
    });
    c.check("identity-spot-checks", || {
        if !check_identity(Identity::LittleSchroederNarayana, 10)
            .unwrap()
            .pass()
        {
            return Err("little Schröder sum, n <= 10".into());
        }
        if !check_identity(Identity::EsdpClosedForm, 8).unwrap().pass() {
            return Err("even-special closed form, n <= 8".into());
        }
        if !check_identity(Identity::PathLengthSeries, 9)
            .unwrap()
            .pass()
        {
            return Err("aggregate length series through q^18".into());
        }
        Ok(())
    });

    // enumerate
    c.check("little-hybrids-length-4", || {
        let got: Vec<String> =
            enumerate::generate(&PathClassQuery::new(PathFamily::LittleHybrid, 4))
                .unwrap()
                .iter()
                .map(|q| q.tokens())
                .collect();
        if got == ["UDUD", "UHHD", "UUDD", "UUdD"] {
            Ok(())
        } else {
            Err(format!("{got:?}"))
        }
    });
    c.check("big-hybrids-length-4", || {
        let got = enumerate::generate(&PathClassQuery::new(PathFamily::BigHybrid, 4)).unwrap();
        if got.len() == 11 && got.iter().any(|q| q.tokens() == "HHUd") {
            Ok(())
        } else {
            Err(format!("{} paths", got.len()))
        }
    });
    c.check("even-special-length-4", || {
        let got: Vec<String> = enumerate::generate(&PathClassQuery::new(PathFamily::Esdp, 4))
            .unwrap()
            .iter()
            .map(|q| q.tokens())
            .collect();
        if got == ["UDUD", "UUDD", "UUdD"] {
            Ok(())
        } else {
            Err(format!("{got:?}"))
        }
    });
    c.check("hybrid-reference-row", || {
        let little = [1usize, 1, 4, 18, 87, 439, 2278, 12052];
        let big = [1usize, 3, 11, 47, 219, 1075, 5459, 28383];
        for n in 0..8 {
            if hybrids(Flavor::Little, 2 * n).len() != little[n] {
                return Err(format!("little length {}", 2 * n));
            }
            if hybrids(Flavor::Big, 2 * n).len() != big[n] {
                return Err(format!("big length {}", 2 * n));
            }
        }
        Ok(())
    });
    c.check("bound-check-rows", || {
        for (n, strict) in [(1usize, false), (2, true), (3, true)] {
            let r = enumerate::bound_check(n);
            if !r.holds || r.strict != strict {
                return Err(format!("n = {n}: {r:?}"));
            }
        }
        Ok(())
    });

    SuiteOutcome {
        suite: Suite::Examples,
        checks: c.checks,
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteOutcome {
    match suite {
        Suite::Paths => run_paths(opts),
        Suite::Evolve => run_evolve(opts),
        Suite::Matchings => run_matchings(opts),
        Suite::Permutations => run_permutations(opts),
        Suite::Series => run_series(opts),
        Suite::Identities => run_identities(opts),
        Suite::Enumerate => run_enumerate(opts),
        Suite::Conjecture => run_conjecture(opts),
        Suite::Examples => run_examples(opts),
    }
}

/// Runs suites, fanning out over `opts.threads` workers; results come back
/// in input order.
pub fn run_suites(suites: &[Suite], opts: &VerifyOptions) -> Vec<SuiteOutcome> {
    let workers = opts.threads.max(1).min(suites.len().max(1));
    if workers <= 1 {
        return suites.iter().map(|&s| run_suite(s, opts)).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<SuiteOutcome>>> = Mutex::new(vec![None; suites.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= suites.len() {
                    break;
                }
                let outcome = run_suite(suites[i], opts);
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|o| o.expect("every suite ran"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_suite_passes() {
        let outcome = run_suite(Suite::Examples, &VerifyOptions::default());
        for check in &outcome.checks {
            assert!(check.pass, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn quick_suites_pass_at_reduced_bounds() {
        let opts = VerifyOptions {
            max_length: 8,
            conjecture_n: 5,
            threads: 2,
        };
        let outcomes = run_suites(
            &[
                Suite::Paths,
                Suite::Evolve,
                Suite::Matchings,
                Suite::Permutations,
                Suite::Conjecture,
            ],
            &opts,
        );
        for outcome in outcomes {
            for check in &outcome.checks {
                assert!(
                    check.pass,
                    "{} / {}: {}",
                    outcome.suite.name(),
                    check.name,
                    check.detail
                );
            }
        }
    }
}
