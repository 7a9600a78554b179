//! Lattice paths built from upsteps, downsteps (ordinary or special), and
//! double horizontal steps.
//!
//! A path is written with the tokens `U` (upstep), `D` (ordinary downstep),
//! `d` (special downstep) and `HH` (double horizontal step, two x-units
//! wide). Valid paths start and end on the x-axis and never dip below it.
//!
//! Positions into a path are *unit positions*: 1-based x-coordinates, so a
//! horizontal step occupies two consecutive unit positions and is addressed
//! by the first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    SpecialDown,
    /// Double horizontal step, occupying two unit x-positions.
    Horiz,
}

impl Step {
    /// Width in x-units.
    pub fn unit_len(self) -> usize {
        match self {
            Step::Horiz => 2,
            _ => 1,
        }
    }

    /// Change in height.
    pub fn height_delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down | Step::SpecialDown => -1,
            Step::Horiz => 0,
        }
    }

    pub fn is_down(self) -> bool {
        matches!(self, Step::Down | Step::SpecialDown)
    }

    pub fn token(self) -> &'static str {
        match self {
            Step::Up => "U",
            Step::Down => "D",
            Step::SpecialDown => "d",
            Step::Horiz => "HH",
        }
    }
}

/// A lattice path from the x-axis back to the x-axis, never negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    /// Builds a path, validating the height profile.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        let mut unit = 0usize;
        for &s in &steps {
            unit += s.unit_len();
            height += s.height_delta();
            if height < 0 {
                return Err(Error::NegativeHeight(unit));
            }
        }
        if height != 0 {
            return Err(Error::NonzeroFinalHeight(height));
        }
        Ok(LatticePath { steps })
    }

    pub fn empty() -> Self {
        LatticePath { steps: Vec::new() }
    }

    /// Parses a token string over `{U, D, d, H}`. Whitespace is ignored;
    /// every maximal run of `H` must have even length and each `HH` pair
    /// becomes one horizontal step.
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut pending_h = false;
        for c in text.chars() {
            if c.is_whitespace() {
                continue;
            }
            if c == 'H' {
                if pending_h {
                    steps.push(Step::Horiz);
                    pending_h = false;
                } else {
                    pending_h = true;
                }
                continue;
            }
            if pending_h {
                return Err(Error::OddHorizontalRun);
            }
            match c {
                'U' => steps.push(Step::Up),
                'D' => steps.push(Step::Down),
                'd' => steps.push(Step::SpecialDown),
                other => return Err(Error::UnknownToken(other)),
            }
        }
        if pending_h {
            return Err(Error::OddHorizontalRun);
        }
        LatticePath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Length in x-units (horizontal steps count 2).
    pub fn unit_len(&self) -> usize {
        self.steps.iter().map(|s| s.unit_len()).sum()
    }

    pub fn special_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| **s == Step::SpecialDown)
            .count()
    }

    pub fn horiz_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Horiz).count()
    }

    /// Token rendering; round-trips through [`LatticePath::parse`].
    pub fn tokens(&self) -> String {
        self.steps.iter().map(|s| s.token()).collect()
    }

    /// Height before each step (same indexing as `steps`).
    pub fn heights_before(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut h = 0i64;
        for &s in &self.steps {
            out.push(h);
            h += s.height_delta();
        }
        out
    }

    pub fn max_height(&self) -> i64 {
        let mut h = 0i64;
        let mut max = 0i64;
        for &s in &self.steps {
            h += s.height_delta();
            max = max.max(h);
        }
        max
    }

    /// First unit position (1-based) of each step.
    pub fn unit_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut pos = 1usize;
        for &s in &self.steps {
            out.push(pos);
            pos += s.unit_len();
        }
        out
    }

    /// Step index addressed by a unit position. The second half of a
    /// horizontal step is not addressable.
    pub fn step_at_unit(&self, unit_pos: usize) -> Result<usize> {
        let mut pos = 1usize;
        for (i, &s) in self.steps.iter().enumerate() {
            if pos == unit_pos {
                return Ok(i);
            }
            pos += s.unit_len();
            if pos > unit_pos {
                break;
            }
        }
        Err(Error::InvalidPosition(unit_pos))
    }

    pub fn unit_pos_of(&self, step_idx: usize) -> usize {
        self.steps[..step_idx]
            .iter()
            .map(|s| s.unit_len())
            .sum::<usize>()
            + 1
    }

    /// Step index of the step matching the step at `from` (a step index,
    /// not a unit position): first-return pairing for an upstep, the
    /// symmetric rule for a downstep, and for a horizontal step at
    /// positive height the leftmost downstep to its right leaving from the
    /// same height.
    pub(crate) fn match_step_idx(&self, from: usize) -> Result<usize> {
        match_idx_in(&self.steps, from).ok_or_else(|| Error::NoMatch(self.unit_pos_of(from)))
    }

    /// Unit position of the step matching the step at `unit_pos`.
    ///
    /// An upstep matches the first downstep to its right that leaves from
    /// the height the upstep ends at; a downstep matches the symmetric
    /// upstep to its left; a horizontal step at positive height matches
    /// the leftmost downstep to its right leaving from the same height.
    /// A horizontal step on the x-axis has no match.
    pub fn match_step(&self, unit_pos: usize) -> Result<usize> {
        let idx = self.step_at_unit(unit_pos)?;
        let m = self.match_step_idx(idx)?;
        Ok(self.unit_pos_of(m))
    }

    /// Peak and ravine counts of a Dyck path. A peak is an upstep
    /// immediately followed by a downstep; a ravine is a downstep
    /// immediately followed by an upstep.
    pub fn peaks_and_ravines(&self) -> Result<(usize, usize)> {
        if !self.classify().is_dyck {
            return Err(Error::NotDyck);
        }
        let mut peaks = 0;
        let mut ravines = 0;
        for w in self.steps.windows(2) {
            match (w[0], w[1]) {
                (Step::Up, Step::Down) => peaks += 1,
                (Step::Down, Step::Up) => ravines += 1,
                _ => {}
            }
        }
        Ok((peaks, ravines))
    }

    /// Membership flags for the basic path classes.
    pub fn classify(&self) -> PathClass {
        let heights = self.heights_before();
        let mut has_horiz = false;
        let mut has_special = false;
        let mut special_even = true;
        let mut special_odd = true;
        let mut horiz_at_zero = false;
        for (i, &s) in self.steps.iter().enumerate() {
            match s {
                Step::Horiz => {
                    has_horiz = true;
                    if heights[i] == 0 {
                        horiz_at_zero = true;
                    }
                }
                Step::SpecialDown => {
                    has_special = true;
                    if heights[i] % 2 == 0 {
                        special_odd = false;
                    } else {
                        special_even = false;
                    }
                }
                _ => {}
            }
        }
        PathClass {
            is_dyck: !has_horiz && !has_special,
            is_esdp: !has_horiz && special_even,
            is_osdp: !has_horiz && special_odd,
            is_little_schroeder: !has_special && !horiz_at_zero,
            is_big_schroeder: !has_special,
        }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticePath::parse(s)
    }
}

/// Height before each step of a raw step slice.
pub(crate) fn heights_before_in(steps: &[Step]) -> Vec<i64> {
    let mut out = Vec::with_capacity(steps.len());
    let mut h = 0i64;
    for &s in steps {
        out.push(h);
        h += s.height_delta();
    }
    out
}

/// Matching-step lookup on a raw step slice; `None` when no match exists.
pub(crate) fn match_idx_in(steps: &[Step], from: usize) -> Option<usize> {
    let heights = heights_before_in(steps);
    match steps[from] {
        Step::Up => {
            let target = heights[from] + 1; // height the upstep ends at
            (from + 1..steps.len()).find(|&j| steps[j].is_down() && heights[j] == target)
        }
        Step::Down | Step::SpecialDown => {
            let target = heights[from]; // height the downstep leaves from
            (0..from)
                .rev()
                .find(|&j| steps[j] == Step::Up && heights[j] + 1 == target)
        }
        Step::Horiz => {
            let target = heights[from];
            if target == 0 {
                return None;
            }
            (from + 1..steps.len()).find(|&j| steps[j].is_down() && heights[j] == target)
        }
    }
}

/// Classification of a path into the basic families. The hybrid families
/// are recognized separately in [`crate::evolve::is_hybrid`] because their
/// definition is the closure under the evolve map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathClass {
    /// Only upsteps and ordinary downsteps.
    pub is_dyck: bool,
    /// No horizontal step; every special downstep leaves from even height.
    pub is_esdp: bool,
    /// No horizontal step; every special downstep leaves from odd height.
    pub is_osdp: bool,
    /// No special downstep and no horizontal step at height zero.
    pub is_little_schroeder: bool,
    /// No special downstep.
    pub is_big_schroeder: bool,
}
