//! Exhaustive generators for every path family, and the closure
//! construction of hybrid paths. These are the counting oracles the rest of
//! the crate is verified against.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::evolve::{evolve_step, Flavor};
use crate::path::{LatticePath, Step};
use crate::series;

/// Default cap on generated path length, in x-units.
pub const DEFAULT_LENGTH_CAP: usize = 22;

/// The path families the generator knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathFamily {
    Dyck,
    Esdp,
    Osdp,
    LittleSchroeder,
    BigSchroeder,
    LittleHybrid,
    BigHybrid,
}

impl PathFamily {
    pub fn name(self) -> &'static str {
        match self {
            PathFamily::Dyck => "dyck",
            PathFamily::Esdp => "esdp",
            PathFamily::Osdp => "osdp",
            PathFamily::LittleSchroeder => "little-schroeder",
            PathFamily::BigSchroeder => "big-schroeder",
            PathFamily::LittleHybrid => "little-hybrid",
            PathFamily::BigHybrid => "big-hybrid",
        }
    }
}

/// A generation request: family, exact length in x-units, and optional
/// refinements by special-step or horizontal-step count.
#[derive(Debug, Clone)]
pub struct PathClassQuery {
    pub family: PathFamily,
    pub length: usize,
    /// Keep only paths with exactly this many special downsteps.
    pub specials: Option<usize>,
    /// Keep only paths with exactly this many horizontal steps.
    pub horizontals: Option<usize>,
    /// Length cap; queries beyond it are refused.
    pub cap: usize,
}

impl PathClassQuery {
    pub fn new(family: PathFamily, length: usize) -> Self {
        PathClassQuery {
            family,
            length,
            specials: None,
            horizontals: None,
            cap: DEFAULT_LENGTH_CAP,
        }
    }

    pub fn with_specials(mut self, j: usize) -> Self {
        self.specials = Some(j);
        self
    }

    pub fn with_horizontals(mut self, k: usize) -> Self {
        self.horizontals = Some(k);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

/// Step choices available while backtracking over a direct family.
fn step_choices(family: PathFamily, height: i64) -> Vec<Step> {
    let mut out = vec![Step::Up];
    if height > 0 {
        out.push(Step::Down);
    }
    match family {
        PathFamily::Dyck => {}
        PathFamily::Esdp => {
            if height > 0 && height % 2 == 0 {
                out.push(Step::SpecialDown);
            }
        }
        PathFamily::Osdp => {
            if height % 2 == 1 {
                out.push(Step::SpecialDown);
            }
        }
        PathFamily::LittleSchroeder => {
            if height > 0 {
                out.push(Step::Horiz);
            }
        }
        PathFamily::BigSchroeder => out.push(Step::Horiz),
        PathFamily::LittleHybrid | PathFamily::BigHybrid => unreachable!(),
    }
    out
}

fn backtrack(
    family: PathFamily,
    remaining: usize,
    height: i64,
    stack: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
) {
    if remaining == 0 {
        if height == 0 {
            out.push(LatticePath::new(stack.clone()).expect("backtracking keeps paths valid"));
        }
        return;
    }
    for step in step_choices(family, height) {
        let w = step.unit_len();
        if w > remaining {
            continue;
        }
        let h = height + step.height_delta();
        // must still be able to come back down
        if h > (remaining - w) as i64 {
            continue;
        }
        stack.push(step);
        backtrack(family, remaining - w, h, stack, out);
        stack.pop();
    }
}

/// All hybrid paths of one length: every even/odd-special Dyck path of that
/// length together with everything its evolution passes through. The evolve
/// map is injective level by level, so chains never merge, but distinct
/// starts can still be deduplicated defensively through the hash set.
fn closure(flavor: Flavor, length: usize, cap: usize) -> Result<Vec<LatticePath>> {
    let family = match flavor {
        Flavor::Little => PathFamily::Esdp,
        Flavor::Big => PathFamily::Osdp,
    };
    let starts = generate(&PathClassQuery::new(family, length).with_cap(cap))?;
    let mut seen: HashSet<String> = HashSet::new();
    let mut out = Vec::new();
    for start in starts {
        let mut current = start;
        loop {
            if seen.insert(current.tokens()) {
                out.push(current.clone());
            }
            if current.special_count() == 0 {
                break;
            }
            current = evolve_step(&current, flavor).expect("closure inputs are hybrid");
        }
    }
    Ok(out)
}

/// All distinct paths of the queried class, sorted by token string.
pub fn generate(query: &PathClassQuery) -> Result<Vec<LatticePath>> {
    if query.length > query.cap {
        return Err(Error::LengthTooLarge(query.length, query.cap));
    }
    let mut paths = match query.family {
        PathFamily::LittleHybrid => closure(Flavor::Little, query.length, query.cap)?,
        PathFamily::BigHybrid => closure(Flavor::Big, query.length, query.cap)?,
        direct => {
            let mut out = Vec::new();
            backtrack(direct, query.length, 0, &mut Vec::new(), &mut out);
            out
        }
    };
    if let Some(j) = query.specials {
        paths.retain(|p| p.special_count() == j);
    }
    if let Some(k) = query.horizontals {
        paths.retain(|p| p.horiz_count() == k);
    }
    paths.sort_by_key(|p| p.tokens());
    Ok(paths)
}

/// How [`count`] obtains its number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Materialize the paths and count them.
    Exhaustive,
    /// Use a closed form or finite sum where one exists.
    ClosedForm,
}

/// Number of paths matching the query. `ClosedForm` is available for the
/// unrefined families and for ESDPs/OSDPs refined by special count and
/// Schröder paths refined by horizontal count; both modes agree wherever
/// both apply.
pub fn count(query: &PathClassQuery, mode: CountMode) -> Result<BigUint> {
    match mode {
        CountMode::Exhaustive => Ok(BigUint::from(generate(query)?.len())),
        CountMode::ClosedForm => {
            if query.length % 2 != 0 {
                return Ok(BigUint::ZERO);
            }
            let n = query.length / 2;
            match (query.family, query.specials, query.horizontals) {
                (PathFamily::Dyck, None, None) => Ok(series::catalan(n)),
                (PathFamily::Esdp, j, None) => match j {
                    None => Ok(series::little_schroeder(n)),
                    Some(j) => {
                        if n == 0 {
                            Ok(if j == 0 {
                                BigUint::from(1u32)
                            } else {
                                BigUint::ZERO
                            })
                        } else {
                            series::esdp_count(n, j)
                        }
                    }
                },
                (PathFamily::Osdp, j, None) => match j {
                    None => Ok(series::big_schroeder(n)),
                    Some(j) => {
                        if n == 0 {
                            Ok(if j == 0 {
                                BigUint::from(1u32)
                            } else {
                                BigUint::ZERO
                            })
                        } else {
                            series::osdp_count(n, j)
                        }
                    }
                },
                // evolution preserves the special/horizontal count, so the
                // refined Schröder counts coincide with the refined special
                // Dyck counts
                (PathFamily::LittleSchroeder, None, k) => match k {
                    None => Ok(series::little_schroeder(n)),
                    Some(k) => {
                        if n == 0 {
                            Ok(if k == 0 {
                                BigUint::from(1u32)
                            } else {
                                BigUint::ZERO
                            })
                        } else {
                            series::esdp_count(n, k)
                        }
                    }
                },
                (PathFamily::BigSchroeder, None, k) => match k {
                    None => Ok(series::big_schroeder(n)),
                    Some(k) => {
                        if n == 0 {
                            Ok(if k == 0 {
                                BigUint::from(1u32)
                            } else {
                                BigUint::ZERO
                            })
                        } else {
                            series::osdp_count(n, k)
                        }
                    }
                },
                (PathFamily::LittleHybrid, None, None) => {
                    Ok(series::hybrid_count_weighted(Flavor::Little, n))
                }
                (PathFamily::BigHybrid, None, None) => {
                    Ok(series::hybrid_count_weighted(Flavor::Big, n))
                }
                _ => Err(Error::OutOfRange(format!(
                    "no closed form for {} with those refinements",
                    query.family.name()
                ))),
            }
        }
    }
}

/// Outcome of the lower-bound sanity check on big hybrid counts: Schröder
/// paths and odd-special Dyck paths are both big hybrids and share only the
/// Dyck paths, so there are at least `2*S(n) - C(n)` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub hybrid_count: BigUint,
    pub lower_bound: BigUint,
    pub holds: bool,
    pub strict: bool,
}

pub fn bound_check(n: usize) -> BoundReport {
    let hybrid_count = series::hybrid_count_weighted(Flavor::Big, n);
    let lower_bound = BigUint::from(2u32) * series::big_schroeder(n) - series::catalan(n);
    BoundReport {
        n,
        holds: hybrid_count >= lower_bound,
        strict: hybrid_count > lower_bound,
        hybrid_count,
        lower_bound,
    }
}

/// Every valid path (any mix of step kinds) of each even length up to
/// `max_len`; used by exhaustive invariant sweeps.
pub(crate) fn all_paths_up_to(max_len: usize) -> Vec<LatticePath> {
    fn rec(remaining: usize, height: i64, stack: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if remaining == 0 {
            if height == 0 {
                out.push(LatticePath::new(stack.clone()).unwrap());
            }
            return;
        }
        for step in [Step::Up, Step::Down, Step::SpecialDown, Step::Horiz] {
            let w = step.unit_len();
            if w > remaining {
                continue;
            }
            let h = height + step.height_delta();
            if h < 0 || h > (remaining - w) as i64 {
                continue;
            }
            stack.push(step);
            rec(remaining - w, h, stack, out);
            stack.pop();
        }
    }
    let mut out = vec![LatticePath::empty()];
    for len in (2..=max_len).step_by(2) {
        rec(len, 0, &mut Vec::new(), &mut out);
    }
    out
}
