//! 231-avoiding permutations and their correspondence with special Dyck
//! paths: evolving a path records a permutation through the order its
//! horizontal steps appear, and every 231-avoiding permutation arises that
//! way via the append/lift construction.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::evolve::{evolve_full, Flavor};
use crate::path::{LatticePath, Step};

/// A permutation of 1..=n in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidPermutation(format!("{entries:?}")));
            }
            seen[e] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn empty() -> Self {
        Permutation {
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// No indices i < j < k with `p[k] < p[i] < p[j]`.
    pub fn avoids_231(&self) -> bool {
        // stack scan: walking left to right, maintain the decreasing stack
        // of candidates for the "2"; a value smaller than a popped "2" that
        // had a larger successor completes the pattern
        let mut stack: Vec<usize> = Vec::new(); // candidate "2" values
        let mut best_two = 0usize; // largest "2" already followed by a bigger "3"
        for &v in &self.entries {
            if v < best_two {
                return false;
            }
            while let Some(&top) = stack.last() {
                if top < v {
                    stack.pop();
                    best_two = best_two.max(top);
                } else {
                    break;
                }
            }
            stack.push(v);
        }
        true
    }

    /// Parses a digit string (n <= 9) or a comma-separated list.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Permutation::empty());
        }
        let entries: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(text.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(text.to_string()))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

/// The permutation an evolution writes down: entry i is the application
/// time at which the i-th horizontal step (left to right) of the final
/// Schröder path was created.
pub fn extract_permutation(start: &LatticePath, flavor: Flavor) -> Result<Permutation> {
    let trace = evolve_full(start, flavor)?;
    let mut by_position: Vec<(usize, usize)> = trace
        .creation_order
        .iter()
        .enumerate()
        .map(|(t, &pos)| (pos, t + 1))
        .collect();
    by_position.sort();
    Permutation::new(by_position.into_iter().map(|(_, t)| t).collect())
}

/// Positions after which n may be inserted into a 231-avoiding permutation
/// of 1..=n-1 while staying 231-avoiding, the end excluded: exactly the k
/// whose prefix of length k is a permutation of 1..=k.
pub fn good_insertion_positions(p: &Permutation) -> Result<Vec<usize>> {
    if !p.avoids_231() {
        return Err(Error::Not231Avoiding);
    }
    let n = p.len() + 1;
    let mut out = Vec::new();
    let mut max_seen = 0usize;
    for k in 0..n.saturating_sub(1) {
        if k > 0 {
            max_seen = max_seen.max(p.entries()[k - 1]);
        }
        if max_seen == k {
            out.push(k);
        }
    }
    Ok(out)
}

/// Builds the odd-special Dyck path whose evolution writes down `p`: if n
/// is last, append `Ud` to the path for the rest; otherwise lift the path
/// for p-without-n at the point after its k-th special step (k = number of
/// entries before n), wrapping the tail in `UU ... Dd`.
pub fn build_osdp(p: &Permutation) -> Result<LatticePath> {
    if !p.avoids_231() {
        return Err(Error::Not231Avoiding);
    }
    fn rec(entries: &[usize]) -> Vec<Step> {
        let n = entries.len();
        if n == 0 {
            return Vec::new();
        }
        let pos = entries.iter().position(|&e| e == n).unwrap();
        let rest: Vec<usize> = entries.iter().copied().filter(|&e| e != n).collect();
        let mut path = rec(&rest);
        if pos == n - 1 {
            path.push(Step::Up);
            path.push(Step::SpecialDown);
            return path;
        }
        // split after the pos-th special step; that point is on the x-axis
        let split = if pos == 0 {
            0
        } else {
            let mut specials = 0;
            let mut idx = 0;
            for (i, &s) in path.iter().enumerate() {
                if s == Step::SpecialDown {
                    specials += 1;
                    if specials == pos {
                        idx = i + 1;
                        break;
                    }
                }
            }
            idx
        };
        debug_assert_eq!(
            crate::path::heights_before_in(&path)
                .get(split)
                .copied()
                .unwrap_or(0),
            0,
            "lift point must sit on the x-axis"
        );
        let mut out = path[..split].to_vec();
        out.push(Step::Up);
        out.push(Step::Up);
        out.extend_from_slice(&path[split..]);
        out.push(Step::Down);
        out.push(Step::SpecialDown);
        out
    }
    LatticePath::new(rec(p.entries()))
}

/// The even-special counterpart: the odd-special path sandwiched between an
/// upstep and an ordinary downstep.
pub fn build_esdp(p: &Permutation) -> Result<LatticePath> {
    let inner = build_osdp(p)?;
    let mut steps = vec![Step::Up];
    steps.extend_from_slice(inner.steps());
    steps.push(Step::Down);
    LatticePath::new(steps)
}

/// All 231-avoiding permutations of 1..=n, generated by the good-insertion
/// recursion (plus insertion at the end, which is always safe), not by
/// filtering all of S_n.
pub fn all_231_avoiders(n: usize) -> Vec<Permutation> {
    let mut current = vec![Permutation::empty()];
    for m in 1..=n {
        let mut next = Vec::new();
        for p in &current {
            let positions = good_insertion_positions(p).expect("generated avoiders stay valid");
            for k in positions.into_iter().chain([m - 1]) {
                let mut entries = p.entries().to_vec();
                entries.insert(k, m);
                next.push(Permutation { entries });
            }
        }
        current = next;
    }
    current
}

/// Distribution of `build_osdp` path lengths over all of S_n(231).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthDistribution {
    pub n: usize,
    /// path length (x-units) -> number of permutations
    pub counts: BTreeMap<usize, u64>,
}

impl LengthDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.values().map(|&c| BigUint::from(c)).sum()
    }
}

impl fmt::Display for LengthDistribution {
    /// Polynomial in q with descending exponents, e.g.
    /// `q^14 + 6q^12 + 6q^10 + q^8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&len, &count) in self.counts.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if count == 1 {
                String::new()
            } else {
                count.to_string()
            };
            match len {
                0 => write!(
                    f,
                    "{}",
                    if count == 1 {
                        "1".into()
                    } else {
                        coeff.clone()
                    }
                )?,
                1 => write!(f, "{coeff}q")?,
                _ => write!(f, "{coeff}q^{len}")?,
            }
        }
        Ok(())
    }
}

/// Tabulates path lengths without materializing the paths: an append adds
/// 2 units, a lift adds 4.
pub fn length_distribution(n: usize) -> LengthDistribution {
    // state: (permutation, pathlen so far)
    let mut current: Vec<(Permutation, usize)> = vec![(Permutation::empty(), 0)];
    for m in 1..=n {
        let mut next = Vec::new();
        for (p, len) in &current {
            let positions = good_insertion_positions(p).expect("generated avoiders stay valid");
            for k in positions {
                let mut entries = p.entries().to_vec();
                entries.insert(k, m);
                next.push((Permutation { entries }, len + 4));
            }
            let mut entries = p.entries().to_vec();
            entries.push(m);
            next.push((Permutation { entries }, len + 2));
        }
        current = next;
    }
    let mut counts = BTreeMap::new();
    for (_, len) in current {
        *counts.entry(len).or_insert(0u64) += 1;
    }
    LengthDistribution { n, counts }
}

/// Whether the horizontal step for special step `b` will be created to the
/// left of the one for special step `a` (unit positions, `a` left of `b`):
/// true exactly when `b` follows a downstep whose matching upstep lies left
/// of `a`.
pub fn horiz_order_precedes(path: &LatticePath, a: usize, b: usize) -> Result<bool> {
    let a_idx = path.step_at_unit(a)?;
    let b_idx = path.step_at_unit(b)?;
    if path.steps()[a_idx] != Step::SpecialDown {
        return Err(Error::NotSpecial(a));
    }
    if path.steps()[b_idx] != Step::SpecialDown {
        return Err(Error::NotSpecial(b));
    }
    if b_idx == 0 {
        return Ok(false);
    }
    if path.steps()[b_idx - 1] != Step::Down {
        return Ok(false);
    }
    let u = path.match_step_idx(b_idx - 1)?;
    Ok(u < a_idx)
}
