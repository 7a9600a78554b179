//! The evolve/devolve bijections between special Dyck paths and Schröder
//! paths.
//!
//! A *hybrid path* mixes special downsteps and horizontal steps: the little
//! hybrids are the closure of even-special Dyck paths under [`evolve_step`],
//! the big hybrids the closure of odd-special Dyck paths. One application of
//! the map consumes the leftmost special downstep and creates one horizontal
//! step, either by *flattening* (the special is preceded by an upstep: the
//! pair becomes a horizontal step) or by *sliding* (the special is preceded
//! by a downstep `d`: the upstep matching `d` becomes a horizontal step, the
//! subpath between is carried along one level lower, `d` disappears and the
//! special is demoted to an ordinary downstep).
//!
//! The inverse direction hinges on identifying which horizontal step was
//! created last; [`last_added_horizontal`] implements that identification by
//! repeatedly partitioning the path into blocks around horizontal steps and
//! their matching downsteps. [`devolve_step`] then reverses one application
//! and [`is_hybrid`] recognizes closure membership by devolving to
//! exhaustion.
//!
//! Running the map to exhaustion ([`evolve_full`]) turns an even-special
//! Dyck path into a little Schröder path and an odd-special Dyck path into a
//! big Schröder path, special steps becoming horizontal steps one for one;
//! the order in which the horizontal steps appear is recorded in an
//! [`EvolutionTrace`].

use std::fmt;

use crate::error::{Error, Result};
use crate::path::{heights_before_in, match_idx_in, LatticePath, Step};

/// Which lineage a hybrid path belongs to: `Little` paths descend from
/// even-special Dyck paths, `Big` paths from odd-special ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Little,
    Big,
}

impl Flavor {
    /// Height parity (mod 2) that special downsteps leave from, which is
    /// also the parity at which slides create horizontal steps.
    fn special_parity(self) -> i64 {
        match self {
            Flavor::Little => 0,
            Flavor::Big => 1,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Little => "little",
            Flavor::Big => "big",
        })
    }
}

/// Cheap necessary conditions for hybrid membership: special downsteps
/// leave from heights of the flavor's parity (slides never change a
/// surviving special's height, so the parity of the starting Dyck path is
/// preserved), and little hybrids never acquire a horizontal step on the
/// x-axis.
pub(crate) fn flavor_shape_ok(steps: &[Step], flavor: Flavor) -> bool {
    let heights = heights_before_in(steps);
    for (i, &s) in steps.iter().enumerate() {
        match s {
            Step::SpecialDown => {
                if heights[i].rem_euclid(2) != flavor.special_parity() {
                    return false;
                }
            }
            Step::Horiz => {
                if flavor == Flavor::Little && heights[i] == 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

/// Steps paired with a tag used to follow a horizontal step through later
/// slides. Specials start out tagged with their left-to-right rank; the
/// horizontal step created when a special is consumed inherits its tag.
type Tagged = (Step, u32);

fn evolve_tagged(steps: &[Tagged], flavor: Flavor) -> Result<Vec<Tagged>> {
    let bare: Vec<Step> = steps.iter().map(|&(s, _)| s).collect();
    let Some(s_idx) = bare.iter().position(|&s| s == Step::SpecialDown) else {
        return Ok(steps.to_vec());
    };
    if s_idx == 0 {
        return Err(Error::NotHybrid(flavor));
    }
    let tag = steps[s_idx].1;
    match bare[s_idx - 1] {
        Step::Up => {
            // flatten: the upstep and the special become one horizontal step
            let mut out = steps[..s_idx - 1].to_vec();
            out.push((Step::Horiz, tag));
            out.extend_from_slice(&steps[s_idx + 1..]);
            Ok(out)
        }
        Step::Down => {
            // slide: the upstep matching the preceding downstep becomes the
            // horizontal step; the enclosed subpath follows it one level
            // lower; the special is demoted
            let d_idx = s_idx - 1;
            let u_idx = match_idx_in(&bare, d_idx).ok_or(Error::NotHybrid(flavor))?;
            let mut out = steps[..u_idx].to_vec();
            out.push((Step::Horiz, tag));
            out.extend_from_slice(&steps[u_idx + 1..d_idx]);
            out.push((Step::Down, 0));
            out.extend_from_slice(&steps[s_idx + 1..]);
            Ok(out)
        }
        _ => Err(Error::NotHybrid(flavor)),
    }
}

/// One application of the evolve map. A path without special downsteps is
/// returned unchanged; otherwise the leftmost special is flattened or slid,
/// giving a path with one fewer special and one more horizontal step of the
/// same length.
pub fn evolve_step(path: &LatticePath, flavor: Flavor) -> Result<LatticePath> {
    if !flavor_shape_ok(path.steps(), flavor) {
        return Err(Error::NotHybrid(flavor));
    }
    let tagged: Vec<Tagged> = path.steps().iter().map(|&s| (s, 0)).collect();
    let out = evolve_tagged(&tagged, flavor)?;
    LatticePath::new(out.into_iter().map(|(s, _)| s).collect())
        .map_err(|_| Error::NotHybrid(flavor))
}

/// Identification of the most recently created horizontal step inside
/// `steps[range]`, which must be a subpath starting and ending at the same
/// height with its interior never below it. Returns a step index.
fn identify_last_added(
    steps: &[Step],
    heights: &[i64],
    range: std::ops::Range<usize>,
    flavor: Flavor,
) -> Option<usize> {
    // Partition into blocks: maximal runs of non-horizontal steps, runs of
    // horizontal steps on the x-axis, and [horizontal step ..= its matching
    // downstep]. A horizontal step right of another one's matching downstep
    // was created later, so the last-added step is in the rightmost block
    // that contains a horizontal step.
    let mut active: Option<std::ops::Range<usize>> = None;
    let mut i = range.start;
    while i < range.end {
        if steps[i] == Step::Horiz {
            if heights[i] == 0 {
                let mut j = i;
                while j < range.end && steps[j] == Step::Horiz {
                    j += 1;
                }
                active = Some(i..j);
                i = j;
            } else {
                let m = match_idx_in(steps, i)?;
                active = Some(i..m + 1);
                i = m + 1;
            }
        } else {
            i += 1;
        }
    }
    let block = active?;
    let start = block.start;
    let g = heights[start];

    // Horizontal steps on the x-axis only ever come from flattens, which
    // append left to right: take the rightmost one in the block.
    if g == 0 {
        return (block.clone()).rev().find(|&j| steps[j] == Step::Horiz);
    }
    // At slide parity the block's leading horizontal step is the newest:
    // repeated slides prepend at the block head.
    if g.rem_euclid(2) == flavor.special_parity() {
        return Some(start);
    }
    // Flatten parity: split the block interior into valleys (runs of
    // horizontal steps at the base height) and hills (an upstep through its
    // matching downstep), and look at the rightmost part with a horizontal
    // step: the rightmost step of a valley, or recurse into a hill.
    let interior_end = block.end - 1; // excludes the block's closing downstep
    let mut second: Option<(std::ops::Range<usize>, bool)> = None; // (range, is_hill)
    let mut j = start;
    while j < interior_end {
        if steps[j] == Step::Horiz && heights[j] == g {
            let mut k = j;
            while k < interior_end && steps[k] == Step::Horiz && heights[k] == g {
                k += 1;
            }
            second = Some((j..k, false));
            j = k;
        } else if steps[j] == Step::Up && heights[j] == g {
            let m = match_idx_in(steps, j)?;
            if (j..m + 1).any(|t| steps[t] == Step::Horiz) {
                second = Some((j..m + 1, true));
            }
            j = m + 1;
        } else {
            // unreachable for well-formed blocks
            j += 1;
        }
    }
    match second? {
        (valley, false) => valley.rev().find(|&j| steps[j] == Step::Horiz),
        (hill, true) => identify_last_added(steps, heights, hill, flavor),
    }
}

/// Unit position of the horizontal step that the evolve map created last.
pub fn last_added_horizontal(path: &LatticePath, flavor: Flavor) -> Result<usize> {
    if path.horiz_count() == 0 {
        return Err(Error::NoHorizontal);
    }
    let heights = path.heights_before();
    let idx = identify_last_added(path.steps(), &heights, 0..path.step_count(), flavor)
        .ok_or(Error::NotHybrid(flavor))?;
    Ok(path.unit_pos_of(idx))
}

/// The two mechanical reversals of an evolve application at the horizontal
/// step `h_idx`: un-flatten always exists; un-slide needs a matching
/// ordinary downstep.
fn reversal_candidates(steps: &[Step], h_idx: usize) -> Vec<(Vec<Step>, usize)> {
    let mut out = Vec::new();
    // un-flatten: the horizontal step becomes an upstep + special downstep
    let mut cand = steps[..h_idx].to_vec();
    cand.push(Step::Up);
    cand.push(Step::SpecialDown);
    cand.extend_from_slice(&steps[h_idx + 1..]);
    out.push((cand, h_idx + 1));
    // un-slide: the horizontal step becomes an upstep, the subpath up to the
    // matching downstep is raised back, an ordinary downstep is inserted
    // after it and the matching downstep is promoted to special
    if let Some(m) = match_idx_in(steps, h_idx) {
        if steps[m] == Step::Down {
            let mut cand = steps[..h_idx].to_vec();
            cand.push(Step::Up);
            cand.extend_from_slice(&steps[h_idx + 1..m]);
            cand.push(Step::Down);
            cand.push(Step::SpecialDown);
            cand.extend_from_slice(&steps[m + 1..]);
            out.push((cand, m + 1));
        }
    }
    out
}

/// Reverses one application of the evolve map: identifies the last-added
/// horizontal step, builds the un-flatten and un-slide candidates, and
/// returns the one whose reinstated special is the leftmost special, which
/// evolves forward to the input, and which has the flavor's shape.
pub fn devolve_step(path: &LatticePath, flavor: Flavor) -> Result<LatticePath> {
    if path.horiz_count() == 0 {
        return Err(Error::NoHorizontal);
    }
    if !flavor_shape_ok(path.steps(), flavor) {
        return Err(Error::NotHybrid(flavor));
    }
    let heights = path.heights_before();
    let h_idx = identify_last_added(path.steps(), &heights, 0..path.step_count(), flavor)
        .ok_or(Error::NotHybrid(flavor))?;

    let mut survivor = None;
    for (cand, special_idx) in reversal_candidates(path.steps(), h_idx) {
        let first_special = cand.iter().position(|&s| s == Step::SpecialDown);
        if first_special != Some(special_idx) {
            continue;
        }
        if !flavor_shape_ok(&cand, flavor) {
            continue;
        }
        let Ok(cand_path) = LatticePath::new(cand) else {
            continue;
        };
        match evolve_step(&cand_path, flavor) {
            Ok(forward) if forward == *path => {}
            _ => continue,
        }
        // The un-flatten and un-slide candidates reinstate specials at
        // heights of opposite parity, so at most one passes the shape test.
        debug_assert!(survivor.is_none());
        survivor = Some(cand_path);
    }
    survivor.ok_or(Error::NotHybrid(flavor))
}

/// Closure membership: a path with no horizontal step is hybrid exactly
/// when it is an even-special (little) or odd-special (big) Dyck path;
/// otherwise it is hybrid exactly when one devolve step succeeds and lands
/// on a hybrid path.
pub fn is_hybrid(path: &LatticePath, flavor: Flavor) -> bool {
    if !flavor_shape_ok(path.steps(), flavor) {
        return false;
    }
    if path.horiz_count() == 0 {
        let c = path.classify();
        return match flavor {
            Flavor::Little => c.is_esdp,
            Flavor::Big => c.is_osdp,
        };
    }
    match devolve_step(path, flavor) {
        Ok(prev) => is_hybrid(&prev, flavor),
        Err(_) => false,
    }
}

/// Record of one full evolution: the starting special Dyck path, the path
/// after each application, and where each application's horizontal step
/// ended up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolutionTrace {
    pub flavor: Flavor,
    pub start: LatticePath,
    /// Path after each application; the last one is a Schröder path.
    pub snapshots: Vec<LatticePath>,
    /// `creation_order[t]` is the unit position, in the final path, of the
    /// horizontal step created by application `t+1`.
    pub creation_order: Vec<usize>,
}

impl EvolutionTrace {
    pub fn final_path(&self) -> &LatticePath {
        self.snapshots.last().unwrap_or(&self.start)
    }

    pub fn applications(&self) -> usize {
        self.snapshots.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "flavor": self.flavor.to_string(),
            "start": self.start.tokens(),
            "snapshots": self.snapshots.iter().map(|p| p.tokens()).collect::<Vec<_>>(),
            "creation_order": self.creation_order,
        })
    }
}

/// Tagged evolution to exhaustion; exposed for the test suites that need
/// per-snapshot step identities.
pub(crate) fn evolve_full_tagged(start: &LatticePath, flavor: Flavor) -> Result<Vec<Vec<Tagged>>> {
    let mut current: Vec<Tagged> = {
        let mut rank = 0u32;
        start
            .steps()
            .iter()
            .map(|&s| {
                if s == Step::SpecialDown {
                    rank += 1;
                    (s, rank)
                } else {
                    (s, 0)
                }
            })
            .collect()
    };
    let mut snapshots = Vec::new();
    while current.iter().any(|&(s, _)| s == Step::SpecialDown) {
        current = evolve_tagged(&current, flavor)?;
        snapshots.push(current.clone());
    }
    Ok(snapshots)
}

/// Evolves an even-special (little) or odd-special (big) Dyck path to
/// exhaustion, producing a Schröder path of the same length whose
/// horizontal steps correspond one for one to the start's special steps.
pub fn evolve_full(start: &LatticePath, flavor: Flavor) -> Result<EvolutionTrace> {
    let c = start.classify();
    let ok = match flavor {
        Flavor::Little => c.is_esdp,
        Flavor::Big => c.is_osdp,
    };
    if !ok {
        return Err(Error::WrongStartClass(flavor));
    }
    let tagged_snapshots = evolve_full_tagged(start, flavor)?;
    let snapshots: Vec<LatticePath> = tagged_snapshots
        .iter()
        .map(|ts| {
            LatticePath::new(ts.iter().map(|&(s, _)| s).collect())
                .expect("evolve preserves path validity")
        })
        .collect();
    let k = start.special_count();
    let mut creation_order = vec![0usize; k];
    if let Some(final_tagged) = tagged_snapshots.last() {
        let final_path = snapshots.last().unwrap();
        let units = final_path.unit_positions();
        for (i, &(s, tag)) in final_tagged.iter().enumerate() {
            if s == Step::Horiz && tag > 0 {
                creation_order[(tag - 1) as usize] = units[i];
            }
        }
    }
    Ok(EvolutionTrace {
        flavor,
        start: start.clone(),
        snapshots,
        creation_order,
    })
}

/// Devolves a hybrid path until no horizontal step remains, recovering the
/// even-special (little) or odd-special (big) Dyck path it evolved from.
pub fn devolve_full(path: &LatticePath, flavor: Flavor) -> Result<LatticePath> {
    let mut current = path.clone();
    while current.horiz_count() > 0 {
        current = devolve_step(&current, flavor)?;
    }
    let c = current.classify();
    let ok = match flavor {
        Flavor::Little => c.is_esdp,
        Flavor::Big => c.is_osdp,
    };
    if !ok {
        return Err(Error::NotHybrid(flavor));
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{generate, PathClassQuery, PathFamily};

    fn p(s: &str) -> LatticePath {
        LatticePath::parse(s).unwrap()
    }

    #[test]
    fn flatten_a_peak() {
        assert_eq!(evolve_step(&p("Ud"), Flavor::Big).unwrap(), p("HH"));
    }

    #[test]
    fn slide_with_empty_subpath() {
        assert_eq!(evolve_step(&p("UUDd"), Flavor::Big).unwrap(), p("UHHD"));
    }

    #[test]
    fn slide_carries_existing_horizontal() {
        assert_eq!(evolve_step(&p("UUHHDd"), Flavor::Big).unwrap(), p("UHHHHD"));
    }

    #[test]
    fn evolve_without_specials_is_identity() {
        for s in ["", "UD", "UHHD", "HHHH"] {
            assert_eq!(evolve_step(&p(s), Flavor::Big).unwrap(), p(s));
        }
    }

    #[test]
    fn evolve_rejects_wrong_parity() {
        assert_eq!(
            evolve_step(&p("UUdD"), Flavor::Big),
            Err(Error::NotHybrid(Flavor::Big))
        );
        assert_eq!(
            evolve_step(&p("UUDd"), Flavor::Little),
            Err(Error::NotHybrid(Flavor::Little))
        );
    }

    #[test]
    fn last_added_in_a_hill() {
        // treated as a standalone path, the single horizontal step is found
        // through the valley/hill partition
        assert_eq!(last_added_horizontal(&p("UUHHDd"), Flavor::Big).unwrap(), 3);
    }

    #[test]
    fn last_added_only_candidate() {
        assert_eq!(last_added_horizontal(&p("HH"), Flavor::Big).unwrap(), 1);
    }

    #[test]
    fn last_added_after_slide_is_leftmost() {
        // forward: UUUdDd --flatten--> UUHHDd --slide--> UHHHHD, so the
        // first horizontal step of UHHHHD is the newer one
        assert_eq!(last_added_horizontal(&p("UHHHHD"), Flavor::Big).unwrap(), 2);
    }

    #[test]
    fn last_added_needs_a_horizontal() {
        assert_eq!(
            last_added_horizontal(&p("UUdD"), Flavor::Little),
            Err(Error::NoHorizontal)
        );
    }

    #[test]
    fn devolve_depends_on_flavor() {
        assert_eq!(devolve_step(&p("UHHD"), Flavor::Little).unwrap(), p("UUdD"));
        assert_eq!(devolve_step(&p("UHHD"), Flavor::Big).unwrap(), p("UUDd"));
        assert_eq!(devolve_step(&p("HH"), Flavor::Big).unwrap(), p("Ud"));
    }

    #[test]
    fn evolve_full_single_flatten() {
        let trace = evolve_full(&p("UUdD"), Flavor::Little).unwrap();
        assert_eq!(trace.final_path(), &p("UHHD"));
        assert_eq!(trace.applications(), 1);
        assert_eq!(trace.creation_order, vec![2]);
    }

    #[test]
    fn evolve_full_two_flattens_move_forward() {
        let trace = evolve_full(&p("UdUd"), Flavor::Big).unwrap();
        assert_eq!(trace.final_path(), &p("HHHH"));
        assert_eq!(trace.creation_order, vec![1, 3]);
    }

    #[test]
    fn evolve_full_slide_moves_backward() {
        let trace = evolve_full(&p("UUUdDd"), Flavor::Big).unwrap();
        assert_eq!(trace.final_path(), &p("UHHHHD"));
        assert_eq!(trace.snapshots, vec![p("UUHHDd"), p("UHHHHD")]);
        // the first application's horizontal step ends up at unit 4, the
        // second application's at unit 2
        assert_eq!(trace.creation_order, vec![4, 2]);
    }

    #[test]
    fn evolve_full_rejects_wrong_start() {
        assert_eq!(
            evolve_full(&p("UUdD"), Flavor::Big),
            Err(Error::WrongStartClass(Flavor::Big))
        );
        assert_eq!(
            evolve_full(&p("UHHD"), Flavor::Little),
            Err(Error::WrongStartClass(Flavor::Little))
        );
    }

    #[test]
    fn devolve_full_inverts_small_examples() {
        assert_eq!(devolve_full(&p("UHHD"), Flavor::Little).unwrap(), p("UUdD"));
        assert_eq!(devolve_full(&p("HHHH"), Flavor::Big).unwrap(), p("UdUd"));
        assert_eq!(devolve_full(&p("UUdD"), Flavor::Little).unwrap(), p("UUdD"));
    }

    #[test]
    fn hybrid_membership() {
        assert!(is_hybrid(&p("HHUd"), Flavor::Big));
        assert!(!is_hybrid(&p("HHUd"), Flavor::Little));
        assert!(is_hybrid(&p("UUDD"), Flavor::Big));
        assert!(is_hybrid(&p("UUDD"), Flavor::Little));
    }

    #[test]
    fn trace_serializes_to_json() {
        let trace = evolve_full(&p("UUUdDd"), Flavor::Big).unwrap();
        let v = trace.to_json();
        assert_eq!(v["flavor"], "big");
        assert_eq!(v["start"], "UUUdDd");
        assert_eq!(v["snapshots"][1], "UHHHHD");
        assert_eq!(v["creation_order"][0], 4);
    }

    /// Independent straight-line re-implementation of one evolve
    /// application, working on raw token characters with its own balance
    /// counting. Used as an oracle against the main implementation.
    fn naive_evolve(tokens: &str) -> Option<String> {
        let chars: Vec<char> = tokens.chars().collect();
        let s = chars.iter().position(|&c| c == 'd')?;
        match chars.get(s.wrapping_sub(1))? {
            'U' => {
                let mut out: String = chars[..s - 1].iter().collect();
                out.push_str("HH");
                out.extend(&chars[s + 1..]);
                Some(out)
            }
            'D' => {
                let d = s - 1;
                let mut depth = 0i64;
                let mut u = None;
                for j in (0..d).rev() {
                    match chars[j] {
                        'D' | 'd' => depth += 1,
                        'U' => {
                            if depth == 0 {
                                u = Some(j);
                                break;
                            }
                            depth -= 1;
                        }
                        _ => {}
                    }
                }
                let u = u?;
                let mut out: String = chars[..u].iter().collect();
                out.push_str("HH");
                out.extend(&chars[u + 1..d]);
                out.push('D');
                out.extend(&chars[s + 1..]);
                Some(out)
            }
            _ => None,
        }
    }

    #[test]
    fn evolve_agrees_with_naive_reimplementation() {
        for flavor in [Flavor::Little, Flavor::Big] {
            let family = match flavor {
                Flavor::Little => PathFamily::LittleHybrid,
                Flavor::Big => PathFamily::BigHybrid,
            };
            for len in (2..=10).step_by(2) {
                for path in generate(&PathClassQuery::new(family, len)).unwrap() {
                    if path.special_count() == 0 {
                        continue;
                    }
                    let expected = naive_evolve(&path.tokens()).unwrap();
                    let got = evolve_step(&path, flavor).unwrap();
                    assert_eq!(got.tokens(), expected, "path {path}");
                }
            }
        }
    }

    #[test]
    fn last_added_agrees_with_replay() {
        for flavor in [Flavor::Little, Flavor::Big] {
            let family = match flavor {
                Flavor::Little => PathFamily::Esdp,
                Flavor::Big => PathFamily::Osdp,
            };
            for len in (2..=10).step_by(2) {
                for start in generate(&PathClassQuery::new(family, len)).unwrap() {
                    let snapshots = evolve_full_tagged(&start, flavor).unwrap();
                    for (t, tagged) in snapshots.iter().enumerate() {
                        let steps: Vec<Step> = tagged.iter().map(|&(s, _)| s).collect();
                        let snap = LatticePath::new(steps).unwrap();
                        let created = tagged
                            .iter()
                            .position(|&(s, tag)| s == Step::Horiz && tag == (t + 1) as u32)
                            .unwrap();
                        assert_eq!(
                            last_added_horizontal(&snap, flavor).unwrap(),
                            snap.unit_pos_of(created),
                            "start {start}, application {}",
                            t + 1
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hybrid_membership_matches_closure_exactly() {
        // both directions: everything in the closure is accepted, and
        // every other valid path of the same length is rejected
        use std::collections::HashSet;
        for flavor in [Flavor::Little, Flavor::Big] {
            let family = match flavor {
                Flavor::Little => PathFamily::LittleHybrid,
                Flavor::Big => PathFamily::BigHybrid,
            };
            let mut closure: HashSet<String> = HashSet::new();
            for len in (0..=8).step_by(2) {
                for path in generate(&PathClassQuery::new(family, len)).unwrap() {
                    closure.insert(path.tokens());
                }
            }
            for path in crate::enumerate::all_paths_up_to(8) {
                assert_eq!(
                    is_hybrid(&path, flavor),
                    closure.contains(&path.tokens()),
                    "{path} ({flavor})"
                );
            }
        }
    }

    #[test]
    fn trace_invariants_hold() {
        for flavor in [Flavor::Little, Flavor::Big] {
            let family = match flavor {
                Flavor::Little => PathFamily::Esdp,
                Flavor::Big => PathFamily::Osdp,
            };
            for len in (0..=10).step_by(2) {
                for start in generate(&PathClassQuery::new(family, len)).unwrap() {
                    let trace = evolve_full(&start, flavor).unwrap();
                    assert_eq!(trace.applications(), start.special_count());
                    assert_eq!(trace.final_path().special_count(), 0);
                    let weight = start.special_count() + start.horiz_count();
                    for snap in &trace.snapshots {
                        assert_eq!(snap.special_count() + snap.horiz_count(), weight);
                        assert_eq!(snap.unit_len(), start.unit_len());
                    }
                    // creation_order addresses each horizontal step of the
                    // final path exactly once
                    let mut positions = trace.creation_order.clone();
                    positions.sort_unstable();
                    let horiz_units: Vec<usize> = trace
                        .final_path()
                        .steps()
                        .iter()
                        .enumerate()
                        .filter(|&(_, &s)| s == Step::Horiz)
                        .map(|(i, _)| trace.final_path().unit_pos_of(i))
                        .collect();
                    assert_eq!(positions, horiz_units, "{start}");
                }
            }
        }
    }

    #[test]
    fn round_trips_on_all_small_hybrids() {
        for flavor in [Flavor::Little, Flavor::Big] {
            let family = match flavor {
                Flavor::Little => PathFamily::LittleHybrid,
                Flavor::Big => PathFamily::BigHybrid,
            };
            for len in (2..=10).step_by(2) {
                for path in generate(&PathClassQuery::new(family, len)).unwrap() {
                    if path.horiz_count() > 0 {
                        let prev = devolve_step(&path, flavor).unwrap();
                        assert_eq!(evolve_step(&prev, flavor).unwrap(), path);
                    }
                    if path.special_count() > 0 {
                        let next = evolve_step(&path, flavor).unwrap();
                        assert_eq!(devolve_step(&next, flavor).unwrap(), path);
                        // conservation of specials + horizontals and length
                        assert_eq!(
                            next.special_count() + next.horiz_count(),
                            path.special_count() + path.horiz_count()
                        );
                        assert_eq!(next.unit_len(), path.unit_len());
                    }
                }
            }
        }
    }
}
