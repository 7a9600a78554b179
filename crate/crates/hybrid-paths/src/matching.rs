//! Perfect matchings with special edges, k-distant crossings, and the
//! correspondence with little hybrid paths.
//!
//! Vertices are 1-indexed. A little hybrid path of length 2n maps onto a
//! matching of 1..=2n vertex for vertex: upsteps open an edge, downsteps
//! close the most recent open one (special downsteps give special edges),
//! and a horizontal step's two vertices close-then-open, producing the
//! adjacent-middle crossings characteristic of 2-distant noncrossing
//! matchings. [`matching_evolve_step`] mirrors one application of the
//! path-side evolve map directly on the matching.

use std::fmt;

use crate::error::{Error, Result};
use crate::evolve::{is_hybrid, Flavor};
use crate::path::{LatticePath, Step};

/// An edge of a matching; `special` marks it as coming from a special
/// downstep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub left: usize,
    pub right: usize,
    pub special: bool,
}

impl Edge {
    /// Strict containment: self's span strictly contains the other's.
    pub fn nests(&self, other: &Edge) -> bool {
        self.left < other.left && other.right < self.right
    }
}

/// A pair of crossing edges `(i1, j1)`, `(i2, j2)` with
/// `i1 < i2 < j1 < j2`; the distance is `j1 - i2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingPair {
    pub left_edge: (usize, usize),
    pub right_edge: (usize, usize),
    pub distance: usize,
}

/// A perfect matching of 1..=2n with a distinguished set of special edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HybridMatching {
    /// partner[v] for v in 1..=2n (index 0 unused).
    partner: Vec<usize>,
    /// special[v] for the right endpoint v of a special edge.
    special: Vec<bool>,
}

impl HybridMatching {
    /// Builds a matching from edge pairs; specials are listed separately
    /// and must appear among the edges.
    pub fn new(edges: &[(usize, usize)], special_edges: &[(usize, usize)]) -> Result<Self> {
        let n_vertices = 2 * edges.len();
        let mut partner = vec![0usize; n_vertices + 1];
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n_vertices || b > n_vertices {
                return Err(Error::InvalidMatching(format!("edge ({a},{b})")));
            }
            if partner[a] != 0 || partner[b] != 0 {
                return Err(Error::InvalidMatching(format!(
                    "vertex reused by edge ({a},{b})"
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        let mut special = vec![false; n_vertices + 1];
        for &(a, b) in special_edges {
            let (lo, hi) = (a.min(b), a.max(b));
            if hi == 0 || hi > n_vertices || partner[lo] != hi {
                return Err(Error::InvalidMatching(format!(
                    "special edge ({a},{b}) is not in the matching"
                )));
            }
            special[hi] = true;
        }
        Ok(HybridMatching { partner, special })
    }

    pub fn n_vertices(&self) -> usize {
        self.partner.len() - 1
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    /// The edge covering vertex v.
    pub fn edge_of(&self, v: usize) -> Edge {
        let w = self.partner[v];
        let (left, right) = (v.min(w), v.max(w));
        Edge {
            left,
            right,
            special: self.special[right],
        }
    }

    /// Edges sorted by left endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        (1..=self.n_vertices())
            .filter(|&v| v < self.partner[v])
            .map(|v| self.edge_of(v))
            .collect()
    }

    pub fn special_edges(&self) -> Vec<Edge> {
        self.edges().into_iter().filter(|e| e.special).collect()
    }

    /// All crossing pairs at distance >= k, ascending by left endpoints.
    pub fn k_distant_crossings(&self, k: usize) -> Vec<CrossingPair> {
        let edges = self.edges();
        let mut out = Vec::new();
        for (i, e1) in edges.iter().enumerate() {
            for e2 in &edges[i + 1..] {
                if e1.left < e2.left && e2.left < e1.right && e1.right < e2.right {
                    let distance = e1.right - e2.left;
                    if distance >= k {
                        out.push(CrossingPair {
                            left_edge: (e1.left, e1.right),
                            right_edge: (e2.left, e2.right),
                            distance,
                        });
                    }
                }
            }
        }
        out
    }

    /// The nesting edge of `e` that every other nesting edge also nests;
    /// `None` when nothing nests `e`.
    pub fn immediately_nesting_edge(&self, e: (usize, usize)) -> Result<Option<Edge>> {
        let edge = self.checked_edge(e)?;
        let nesters: Vec<Edge> = self
            .edges()
            .into_iter()
            .filter(|f| f.nests(&edge))
            .collect();
        Ok(nesters
            .iter()
            .find(|a| nesters.iter().all(|b| b == *a || b.nests(a)))
            .copied())
    }

    /// Left endpoint of `e`, hopping to the crossing's left edge while `e`
    /// is the right edge of an adjacent-middle crossing.
    pub fn transitive_left_endpoint(&self, e: (usize, usize)) -> Result<usize> {
        let mut edge = self.checked_edge(e)?;
        loop {
            let mid = edge.left + 1;
            if mid < edge.right && mid <= self.n_vertices() {
                let neighbor = self.edge_of(mid);
                if neighbor.right == mid && neighbor.left < edge.left {
                    edge = neighbor;
                    continue;
                }
            }
            return Ok(edge.left);
        }
    }

    fn checked_edge(&self, e: (usize, usize)) -> Result<Edge> {
        let (lo, hi) = (e.0.min(e.1), e.0.max(e.1));
        if lo == 0 || hi > self.n_vertices() || self.partner[lo] != hi {
            return Err(Error::InvalidMatching(format!(
                "edge ({},{}) is not in the matching",
                e.0, e.1
            )));
        }
        Ok(self.edge_of(lo))
    }

    /// Text format: comma-separated pairs with `*` marking special edges,
    /// e.g. `(1,10),(2,3)*,(4,9)*,(5,8),(6,7)`.
    pub fn to_text(&self) -> String {
        self.edges()
            .iter()
            .map(|e| {
                format!(
                    "({},{}){}",
                    e.left,
                    e.right,
                    if e.special { "*" } else { "" }
                )
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut edges = Vec::new();
        let mut specials = Vec::new();
        if !text.is_empty() {
            let mut rest = text.as_str();
            loop {
                let Some(stripped) = rest.strip_prefix('(') else {
                    return Err(Error::InvalidMatching(text.clone()));
                };
                let Some(close) = stripped.find(')') else {
                    return Err(Error::InvalidMatching(text.clone()));
                };
                let body = &stripped[..close];
                let mut parts = body.split(',');
                let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(Error::InvalidMatching(text.clone()));
                };
                let a: usize = a
                    .parse()
                    .map_err(|_| Error::InvalidMatching(text.clone()))?;
                let b: usize = b
                    .parse()
                    .map_err(|_| Error::InvalidMatching(text.clone()))?;
                edges.push((a, b));
                rest = &stripped[close + 1..];
                if let Some(r) = rest.strip_prefix('*') {
                    specials.push((a, b));
                    rest = r;
                } else if let Some(r) = rest.strip_prefix('★') {
                    specials.push((a, b));
                    rest = r;
                }
                match rest.strip_prefix(',') {
                    Some(r) => rest = r,
                    None if rest.is_empty() => break,
                    None => return Err(Error::InvalidMatching(text.clone())),
                }
            }
        }
        HybridMatching::new(&edges, &specials)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n_vertices": self.n_vertices(),
            "edges": self.edges().iter().map(|e| vec![e.left, e.right]).collect::<Vec<_>>(),
            "special": self
                .edges()
                .iter()
                .filter(|e| e.special)
                .map(|e| vec![e.left, e.right])
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for HybridMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Converts a little hybrid path to its matching by the stack scan
/// described in the module docs.
pub fn path_to_matching(path: &LatticePath) -> Result<HybridMatching> {
    if !is_hybrid(path, Flavor::Little) {
        return Err(Error::NotLittleHybrid);
    }
    let mut edges = Vec::new();
    let mut specials = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut v = 1usize;
    for &s in path.steps() {
        match s {
            Step::Up => {
                stack.push(v);
                v += 1;
            }
            Step::Down | Step::SpecialDown => {
                let u = stack.pop().expect("valid paths never pop empty");
                edges.push((u, v));
                if s == Step::SpecialDown {
                    specials.push((u, v));
                }
                v += 1;
            }
            Step::Horiz => {
                // second vertex closes the top edge, first vertex opens
                let u = stack
                    .pop()
                    .expect("little hybrids keep horizontals off the axis");
                edges.push((u, v + 1));
                stack.push(v);
                v += 2;
            }
        }
    }
    HybridMatching::new(&edges, &specials)
}

/// Converts a 2-distant noncrossing matching back to a little hybrid path:
/// left endpoints become upsteps, right endpoints downsteps (special for
/// special edges), except that the two adjacent middle vertices of each
/// crossing become one horizontal step.
pub fn matching_to_path(m: &HybridMatching) -> Result<LatticePath> {
    if let Some(pair) = m.k_distant_crossings(2).first() {
        return Err(Error::HasKDistantCrossing(pair.distance));
    }
    let n = m.n_vertices();
    let mut steps = Vec::new();
    let mut v = 1usize;
    while v <= n {
        let e = m.edge_of(v);
        if e.left == v {
            // crossing with adjacent middles: v opens while v+1 closes a
            // different edge from further left
            if v < n {
                let f = m.edge_of(v + 1);
                if f.right == v + 1 && f != e {
                    // crossing edges come from horizontal steps and can
                    // never be special
                    if e.special || f.special {
                        return Err(Error::NotLittleHybrid);
                    }
                    steps.push(Step::Horiz);
                    v += 2;
                    continue;
                }
            }
            steps.push(Step::Up);
        } else {
            steps.push(if e.special {
                Step::SpecialDown
            } else {
                Step::Down
            });
        }
        v += 1;
    }
    let path = LatticePath::new(steps).map_err(|_| Error::NotLittleHybrid)?;
    if !is_hybrid(&path, Flavor::Little) {
        return Err(Error::NotLittleHybrid);
    }
    Ok(path)
}

/// One application of the evolve map carried out directly on the matching.
/// Acts on the special edge with the smallest right endpoint (the
/// counterpart of the leftmost special step). An adjacent special edge
/// (c, c+1) swaps tails with its immediately nesting edge (a, b), giving
/// (c, b) and (a, c+1); a non-adjacent special edge (a, b) slides by
/// re-anchoring at the transitive left endpoint c of the edge at b-1:
/// (a, b) becomes (a, c+1), the chain end at b-1 moves to b, and every
/// half-edge on vertices c+1..=b-2 shifts right by one.
pub fn matching_evolve_step(m: &HybridMatching) -> Result<HybridMatching> {
    let path = matching_to_path(m)?;
    let _ = path; // membership check only; the action below is native
    let special = m
        .special_edges()
        .into_iter()
        .min_by_key(|e| e.right)
        .ok_or(Error::NoSpecialEdge)?;

    if special.right == special.left + 1 {
        // flatten analogue: swap tails with the immediately nesting edge
        let nest = m
            .immediately_nesting_edge((special.left, special.right))?
            .ok_or(Error::NotLittleHybrid)?;
        let (c, a, b) = (special.left, nest.left, nest.right);
        let mut edges = Vec::new();
        let mut specials = Vec::new();
        for e in m.edges() {
            let (l, r, sp) = if (e.left, e.right) == (c, c + 1) {
                (a, c + 1, false)
            } else if (e.left, e.right) == (a, b) {
                (c, b, e.special)
            } else {
                (e.left, e.right, e.special)
            };
            edges.push((l, r));
            if sp {
                specials.push((l, r));
            }
        }
        return HybridMatching::new(&edges, &specials);
    }

    // slide analogue
    let (a, b) = (special.left, special.right);
    let chain_end = m.edge_of(b - 1);
    if chain_end.right != b - 1 {
        return Err(Error::NotLittleHybrid);
    }
    let c = m.transitive_left_endpoint((chain_end.left, chain_end.right))?;
    let shift = |v: usize| -> usize {
        if v == b - 1 {
            b
        } else if (c + 1..b - 1).contains(&v) {
            v + 1
        } else {
            v
        }
    };
    let mut edges = Vec::new();
    let mut specials = Vec::new();
    for e in m.edges() {
        let (l, r, sp) = if (e.left, e.right) == (a, b) {
            (a, c + 1, false)
        } else {
            let (x, y) = (shift(e.left), shift(e.right));
            (x.min(y), x.max(y), e.special)
        };
        edges.push((l, r));
        if sp {
            specials.push((l, r));
        }
    }
    HybridMatching::new(&edges, &specials)
}

/// The outer two vertices of the adjacent-middle crossing produced by the
/// horizontal step at `horiz_pos` (a unit position): the right outer vertex
/// is the second vertex of the leftmost horizontal step at the same height
/// between it and its matching downstep, or that downstep's vertex;
/// symmetrically on the left with the matching upstep.
pub fn crossing_outer_vertices(path: &LatticePath, horiz_pos: usize) -> Result<(usize, usize)> {
    let h_idx = path.step_at_unit(horiz_pos)?;
    if path.steps()[h_idx] != Step::Horiz {
        return Err(Error::NotHoriz(horiz_pos));
    }
    let heights = path.heights_before();
    let units = path.unit_positions();
    let g = heights[h_idx];
    let d_idx = path.match_step_idx(h_idx)?;
    let u_idx = path.match_step_idx(d_idx)?;

    let right_outer = (h_idx + 1..d_idx)
        .find(|&j| path.steps()[j] == Step::Horiz && heights[j] == g)
        .map(|j| units[j] + 1) // second vertex of that horizontal step
        .unwrap_or(units[d_idx]);
    let left_outer = (u_idx + 1..h_idx)
        .rev()
        .find(|&j| path.steps()[j] == Step::Horiz && heights[j] == g)
        .map(|j| units[j]) // first vertex of that horizontal step
        .unwrap_or(units[u_idx]);
    Ok((left_outer, right_outer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{generate, PathClassQuery, PathFamily};
    use crate::evolve::evolve_step;

    fn p(s: &str) -> LatticePath {
        LatticePath::parse(s).unwrap()
    }

    fn m(s: &str) -> HybridMatching {
        HybridMatching::parse(s).unwrap()
    }

    #[test]
    fn crossings_by_distance() {
        let big = m("(1,2),(3,4),(5,7),(6,11),(8,12),(9,10)");
        let three = big.k_distant_crossings(3);
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].left_edge, (6, 11));
        assert_eq!(three[0].right_edge, (8, 12));
        assert_eq!(three[0].distance, 3);

        let small = m("(1,3),(2,4)");
        let one = small.k_distant_crossings(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].distance, 1);

        // noncrossing matchings have no k-distant crossings at all
        let nc = m("(1,6),(2,3),(4,5)");
        for k in 1..4 {
            assert!(nc.k_distant_crossings(k).is_empty());
        }
    }

    #[test]
    fn crossing_order_is_by_left_endpoints() {
        let mm = m("(1,3),(2,5),(4,7),(6,8)");
        let pairs = mm.k_distant_crossings(1);
        let lefts: Vec<_> = pairs
            .iter()
            .map(|c| (c.left_edge.0, c.right_edge.0))
            .collect();
        let mut sorted = lefts.clone();
        sorted.sort();
        assert_eq!(lefts, sorted);
    }

    #[test]
    fn path_to_matching_examples() {
        assert_eq!(
            path_to_matching(&p("UHHUDHHD")).unwrap(),
            m("(1,3),(2,7),(4,5),(6,8)")
        );
        assert_eq!(
            path_to_matching(&p("UUdUUUDDdD")).unwrap(),
            m("(1,10),(2,3)*,(4,9)*,(5,8),(6,7)")
        );
        assert_eq!(
            path_to_matching(&p("UUDHHUHHDUUDDD")).unwrap(),
            m("(1,5),(2,3),(4,14),(6,8),(7,9),(10,13),(11,12)")
        );
    }

    #[test]
    fn path_to_matching_rejects_big_only_paths() {
        assert_eq!(path_to_matching(&p("HHUd")), Err(Error::NotLittleHybrid));
        assert_eq!(path_to_matching(&p("UUDd")), Err(Error::NotLittleHybrid));
    }

    #[test]
    fn matching_to_path_examples() {
        assert_eq!(
            matching_to_path(&m("(1,3),(2,7),(4,5),(6,8)")).unwrap(),
            p("UHHUDHHD")
        );
        assert_eq!(matching_to_path(&m("(1,2)")).unwrap(), p("UD"));
        // the adjacent crossing pair on four vertices is one horizontal step
        assert_eq!(matching_to_path(&m("(1,3),(2,4)")).unwrap(), p("UHHD"));
    }

    #[test]
    fn matching_to_path_rejects_wide_crossings() {
        assert_eq!(
            matching_to_path(&m("(1,4),(2,5),(3,6)")),
            Err(Error::HasKDistantCrossing(2))
        );
    }

    #[test]
    fn matching_to_path_rejects_special_crossing_edges() {
        // crossing edges come from horizontal steps, never from special
        // downsteps
        assert_eq!(
            matching_to_path(&m("(1,3)*,(2,4)")),
            Err(Error::NotLittleHybrid)
        );
        assert_eq!(
            matching_to_path(&m("(1,3),(2,4)*")),
            Err(Error::NotLittleHybrid)
        );
    }

    #[test]
    fn immediately_nesting_examples() {
        let mm = m("(1,10),(2,3),(4,9),(5,8),(6,7)");
        assert_eq!(
            mm.immediately_nesting_edge((5, 8)).unwrap(),
            Some(Edge {
                left: 4,
                right: 9,
                special: false
            })
        );
        assert_eq!(mm.immediately_nesting_edge((1, 10)).unwrap(), None);
        let mm = m("(1,2),(3,4)");
        assert_eq!(mm.immediately_nesting_edge((3, 4)).unwrap(), None);
    }

    #[test]
    fn transitive_left_endpoint_examples() {
        let mm = m("(1,5),(2,3),(4,7),(6,8)");
        assert_eq!(mm.transitive_left_endpoint((6, 8)).unwrap(), 1);
        assert_eq!(mm.transitive_left_endpoint((2, 3)).unwrap(), 2);
        assert_eq!(mm.transitive_left_endpoint((4, 7)).unwrap(), 1);
    }

    #[test]
    fn matching_flatten_swaps_tails() {
        let before = m("(1,4),(2,3)*");
        let after = matching_evolve_step(&before).unwrap();
        assert_eq!(after, m("(1,3),(2,4)"));
        // commutes with the path-side flatten
        assert_eq!(
            after,
            path_to_matching(&evolve_step(&p("UUdD"), Flavor::Little).unwrap()).unwrap()
        );
    }

    #[test]
    fn matching_evolve_picks_smallest_right_endpoint() {
        let before = m("(1,10),(2,3)*,(4,9)*,(5,8),(6,7)");
        let after = matching_evolve_step(&before).unwrap();
        // the (2,3) special is consumed first; (4,9) stays special
        assert_eq!(after, m("(1,3),(2,10),(4,9)*,(5,8),(6,7)"));
    }

    #[test]
    fn matching_slide_follows_crossing_chain() {
        // UUUHHDdD slides into UUHHHHDD; vertex-wise the chain from the
        // transitive left endpoint 3 to vertex 6 re-anchors at 7
        let before = path_to_matching(&p("UUUHHDdD")).unwrap();
        assert_eq!(before, m("(1,8),(2,7)*,(3,5),(4,6)"));
        let after = matching_evolve_step(&before).unwrap();
        assert_eq!(after, m("(1,8),(2,4),(3,6),(5,7)"));
        assert_eq!(
            after,
            path_to_matching(&evolve_step(&p("UUUHHDdD"), Flavor::Little).unwrap()).unwrap()
        );
    }

    #[test]
    fn matching_evolve_needs_a_special() {
        assert_eq!(
            matching_evolve_step(&m("(1,2),(3,4)")),
            Err(Error::NoSpecialEdge)
        );
    }

    #[test]
    fn crossing_outer_vertex_examples() {
        assert_eq!(
            crossing_outer_vertices(&p("UUDHHUHHDUUDDD"), 4).unwrap(),
            (1, 14)
        );
        assert_eq!(crossing_outer_vertices(&p("UHHUDHHD"), 2).unwrap().1, 7);
        assert_eq!(crossing_outer_vertices(&p("UHHD"), 2).unwrap(), (1, 4));
        assert_eq!(
            crossing_outer_vertices(&p("UHHD"), 1),
            Err(Error::NotHoriz(1))
        );
    }

    #[test]
    fn round_trip_on_all_small_little_hybrids() {
        for len in (0..=10).step_by(2) {
            for path in generate(&PathClassQuery::new(PathFamily::LittleHybrid, len)).unwrap() {
                let mm = path_to_matching(&path).unwrap();
                assert_eq!(matching_to_path(&mm).unwrap(), path, "{path}");
                // matchings of little hybrids are 2-distant noncrossing and
                // have one adjacent crossing per horizontal step
                assert!(mm.k_distant_crossings(2).is_empty());
                assert_eq!(mm.k_distant_crossings(1).len(), path.horiz_count());
            }
        }
    }

    #[test]
    fn evolve_commutes_with_matchings() {
        for len in (2..=10).step_by(2) {
            for path in generate(&PathClassQuery::new(PathFamily::LittleHybrid, len)).unwrap() {
                if path.special_count() == 0 {
                    continue;
                }
                let via_path =
                    path_to_matching(&evolve_step(&path, Flavor::Little).unwrap()).unwrap();
                let via_matching = matching_evolve_step(&path_to_matching(&path).unwrap()).unwrap();
                assert_eq!(via_path, via_matching, "{path}");
            }
        }
    }

    #[test]
    fn outer_vertices_agree_with_matching_edges() {
        for len in (2..=10).step_by(2) {
            for path in generate(&PathClassQuery::new(PathFamily::LittleHybrid, len)).unwrap() {
                let mm = path_to_matching(&path).unwrap();
                let units = path.unit_positions();
                for (i, &s) in path.steps().iter().enumerate() {
                    if s != Step::Horiz {
                        continue;
                    }
                    let (lo, ro) = crossing_outer_vertices(&path, units[i]).unwrap();
                    // the horizontal step's vertices v, v+1 pair with the
                    // outer vertices: (lo, v+1) and (v, ro) are edges
                    let v = units[i];
                    assert_eq!(mm.partner(v + 1), lo, "{path} at {v}");
                    assert_eq!(mm.partner(v), ro, "{path} at {v}");
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["", "(1,2)", "(1,10),(2,3)*,(4,9)*,(5,8),(6,7)"] {
            assert_eq!(m(s).to_text(), s);
        }
        // star glyph also accepted on input
        assert_eq!(m("(1,4)★,(2,3)"), m("(1,4)*,(2,3)"));
        assert!(HybridMatching::parse("(1,2),(2,3)").is_err());
        assert!(HybridMatching::parse("(1,3)").is_err());
        assert!(HybridMatching::parse("nonsense").is_err());
    }
}
