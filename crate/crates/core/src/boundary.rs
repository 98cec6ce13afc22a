//! Graph-side certificates for features of the Bowditch boundary: parabolic
//! cut points, non-parabolic cut pairs, peripheral splittings, splittings
//! over two-ended subgroups and Sierpinski carpets.

use crate::classify::check_standing_assumptions;
use crate::graph::{SeparatingSuspension, SimplicialGraph, VertexSet};
use crate::planar::PlanarComplex;
use crate::relhyp::{verify_caprace, PeripheralCollection};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundaryError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no induced subgraph of the member separates the graph")]
    NoSeparatingSubgraph,
    #[error("standing assumptions violated: {0}")]
    StandingAssumptionsViolated(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    Yes,
    No,
    Indeterminate,
}

/// Verdict on non-parabolic cut pairs. `Yes` carries a separating complete
/// subgraph suspension whose poles share no member; `Indeterminate` carries
/// the first separating suspension found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPairVerdict {
    pub status: TriState,
    pub witness: Option<SeparatingSuspension>,
}

/// A splitting `Γ = Γ1 ∪ Γ2` relative to the peripheral collection, together
/// with the separating subgraph `L` of the member it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralSplitting {
    pub gamma1: VertexSet,
    pub gamma2: VertexSet,
    pub separator: VertexSet,
}

/// Connected, not complete, and no separating clique.
pub fn is_one_ended(g: &SimplicialGraph) -> bool {
    g.vertex_count() > 0 && g.is_connected() && !g.is_complete() && !g.has_separating_clique().unwrap_or(true)
}

/// Largest member for which separating subsets are searched exhaustively.
pub const MEMBER_SEARCH_LIMIT: usize = 24;

fn check_preconditions(g: &SimplicialGraph, coll: &PeripheralCollection) -> Result<(), BoundaryError> {
    if !is_one_ended(g) {
        return Err(BoundaryError::PreconditionViolated("graph is not one-ended".into()));
    }
    for (i, m) in coll.members.iter().enumerate() {
        if m.is_empty() || !m.is_subset(g.vertex_set()) {
            return Err(BoundaryError::PreconditionViolated(format!("member {i} is not a subgraph")));
        }
        if m.len() > MEMBER_SEARCH_LIMIT {
            return Err(BoundaryError::PreconditionViolated(format!(
                "member {} exceeds the search limit of {MEMBER_SEARCH_LIMIT} vertices",
                g.fmt_set(m)
            )));
        }
        if !is_one_ended(&g.restrict(m)) {
            return Err(BoundaryError::PreconditionViolated(format!("member {} is not one-ended", g.fmt_set(m))));
        }
    }
    let bad = verify_caprace(g, coll).map_err(|e| BoundaryError::PreconditionViolated(e.to_string()))?;
    if let Some(v) = bad.first() {
        return Err(BoundaryError::PreconditionViolated(format!("Caprace condition {}", v.describe(g))));
    }
    Ok(())
}

/// The least subset of `member` (by size, then lexicographically) that
/// separates `g`. Searches all `2^|member|` subsets in the worst case, after
/// first trying the whole member.
pub fn least_separating_subset(g: &SimplicialGraph, member: &VertexSet) -> Option<VertexSet> {
    let verts = member.to_vec();
    assert!(verts.len() <= MEMBER_SEARCH_LIMIT, "member too large for subset search");
    let mut masks: Vec<u64> = (1..1u64 << verts.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    masks.into_iter().map(|m| subset(g, &verts, m)).find(|s| g.separates_lenient(s))
}

fn subset(g: &SimplicialGraph, verts: &[usize], mask: u64) -> VertexSet {
    g.set_of(verts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v))
}

fn has_separating_subset(g: &SimplicialGraph, member: &VertexSet) -> bool {
    g.separates_lenient(member) || least_separating_subset(g, member).is_some()
}

/// Indices of the members some induced subgraph of which separates `g`.
pub fn parabolic_cut_points(g: &SimplicialGraph, coll: &PeripheralCollection) -> Result<Vec<usize>, BoundaryError> {
    check_preconditions(g, coll)?;
    Ok((0..coll.len()).filter(|&i| has_separating_subset(g, &coll.members[i])).collect())
}

/// Splits `g` relative to the collection over a subgraph of member `j0`.
pub fn peripheral_splitting(
    g: &SimplicialGraph,
    coll: &PeripheralCollection,
    j0: usize,
) -> Result<PeripheralSplitting, BoundaryError> {
    check_preconditions(g, coll)?;
    let member = coll
        .members
        .get(j0)
        .ok_or_else(|| BoundaryError::PreconditionViolated(format!("no member {j0}")))?;
    let l = least_separating_subset(g, member).ok_or(BoundaryError::NoSeparatingSubgraph)?;
    let comps = g.remove_vertices(&l).components();
    let first = comps
        .iter()
        .position(|c| !c.is_subset(member))
        .ok_or_else(|| BoundaryError::PreconditionViolated("member is the whole graph".into()))?;
    let gamma1 = l.union(&comps[first]);
    let mut gamma2 = l.union(member);
    for (i, c) in comps.iter().enumerate() {
        if i != first {
            gamma2.union_with(c);
        }
    }
    let s = PeripheralSplitting { gamma1, gamma2, separator: l };
    let bad = splitting_violations(g, coll, j0, &s);
    assert!(bad.is_empty(), "peripheral splitting postconditions failed: {bad:?}");
    Ok(s)
}

/// Checks the three postconditions of a peripheral splitting.
pub fn splitting_violations(
    g: &SimplicialGraph,
    coll: &PeripheralCollection,
    j0: usize,
    s: &PeripheralSplitting,
) -> Vec<String> {
    let mut out = Vec::new();
    let all = g.vertex_set();
    if &s.gamma1 == all || &s.gamma2 == all {
        out.push("a side is the whole graph".to_string());
    }
    if &s.gamma1.union(&s.gamma2) != all {
        out.push("sides do not cover the graph".to_string());
    }
    for (a, b) in g.edges() {
        let inside = |x: &VertexSet| x.contains(a) && x.contains(b);
        if !inside(&s.gamma1) && !inside(&s.gamma2) {
            out.push(format!("edge {}-{} in neither side", g.label(a), g.label(b)));
        }
    }
    if !s.gamma1.intersection(&s.gamma2).is_subset(&coll.members[j0]) {
        out.push("sides meet outside the member".to_string());
    }
    for m in &coll.members {
        if !m.is_subset(&s.gamma1) && !m.is_subset(&s.gamma2) {
            out.push(format!("member {} lies in neither side", g.fmt_set(m)));
        }
    }
    out
}

pub fn nonparabolic_cut_pair(g: &SimplicialGraph, coll: &PeripheralCollection) -> Result<CutPairVerdict, BoundaryError> {
    check_preconditions(g, coll)?;
    let seps = g
        .separating_complete_subgraph_suspensions()
        .map_err(|e| BoundaryError::PreconditionViolated(e.to_string()))?;
    let shared = |s: &SeparatingSuspension| {
        coll.members.iter().any(|m| m.contains(s.poles.0) && m.contains(s.poles.1))
    };
    if let Some(w) = most_balanced(g, seps.iter().filter(|s| !shared(s))) {
        return Ok(CutPairVerdict { status: TriState::Yes, witness: Some(w.clone()) });
    }
    Ok(match most_balanced(g, seps.iter()) {
        Some(w) => CutPairVerdict { status: TriState::Indeterminate, witness: Some(w.clone()) },
        None => CutPairVerdict { status: TriState::No, witness: None },
    })
}

/// The witness whose smallest complementary component is largest, ties
/// going to the earliest. A pair cutting off one degree-two vertex is
/// valid but uninformative.
fn most_balanced<'a>(
    g: &SimplicialGraph,
    seps: impl Iterator<Item = &'a SeparatingSuspension>,
) -> Option<&'a SeparatingSuspension> {
    let smallest_side = |s: &SeparatingSuspension| {
        let mut cut = g.set_of(s.clique.iter().copied());
        cut.insert(s.poles.0);
        cut.insert(s.poles.1);
        g.remove_vertices(&cut).components().iter().map(|c| c.len()).min().unwrap_or(0)
    };
    let mut best: Option<(&SeparatingSuspension, usize)> = None;
    for s in seps {
        let k = smallest_side(s);
        if best.is_none_or(|(_, b)| k > b) {
            best = Some((s, k));
        }
    }
    best.map(|(s, _)| s)
}

/// True iff the 1-skeleton has a cut pair or a separating induced path of
/// length two.
pub fn splits_over_2ended(delta: &PlanarComplex) -> Result<bool, BoundaryError> {
    let g = delta.graph();
    if g.is_complete() {
        return Err(BoundaryError::PreconditionViolated("complex is a simplex".into()));
    }
    if !g.is_connected() {
        return Err(BoundaryError::PreconditionViolated("complex is disconnected".into()));
    }
    if delta.has_separating_vertex_or_edge() {
        return Err(BoundaryError::PreconditionViolated("complex has a separating vertex or edge".into()));
    }
    let pre = |e: crate::graph::GraphError| BoundaryError::PreconditionViolated(e.to_string());
    Ok(!g.cut_pairs().map_err(pre)?.is_empty() || !g.separating_induced_paths_len2().map_err(pre)?.is_empty())
}

/// Induced 4-cycles whose vertex sets separate the 1-skeleton.
pub fn separating_induced_4cycles(g: &SimplicialGraph) -> Vec<crate::graph::FourCycle> {
    g.enumerate_induced_4cycles()
        .into_iter()
        .filter(|c| g.separates_lenient(&c.to_set(g.universe())))
        .collect()
}

pub fn sierpinski_carpet(delta: &PlanarComplex) -> Result<bool, BoundaryError> {
    check_standing_assumptions(delta).map_err(|v| BoundaryError::StandingAssumptionsViolated(v.to_string()))?;
    let big_region = delta.regions().iter().any(|r| r.boundary_is_cycle && r.boundary_len >= 5);
    if !big_region {
        return Ok(false);
    }
    Ok(separating_induced_4cycles(delta.graph()).is_empty() && !splits_over_2ended(delta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph;
    use crate::planar::flag_planar_complex;
    use crate::planar::tests::{octahedron, prism};
    use crate::relhyp::minimal_peripheral_structure;

    fn afirst_g2() -> SimplicialGraph {
        graph(
            "b1-b2 b2-b3 b3-b4 b4-b1 b2-b5 b4-b5 b6-b7 b7-b8 b8-b9 b9-b6 b7-b10 b9-b10 \
             b1-b6 b2-b7 b3-b8 b4-b9",
        )
    }

    fn asecond_g2() -> SimplicialGraph {
        graph(
            "o1-o2 o2-o3 o3-o4 o4-o5 o5-o1 i1-i2 i2-i3 i3-i4 i4-i5 i5-i1 \
             o1-i1 o2-i2 o3-i3 o4-i4 o5-i5 o2-p p-q q-o4",
        )
    }

    #[test]
    fn one_endedness() {
        assert!(is_one_ended(&graph("a-b b-c c-d d-a")));
        assert!(!is_one_ended(&graph("a-b b-c")));
        assert!(!is_one_ended(&graph("a-b b-c c-a")));
    }

    #[test]
    fn gadget_members_give_cut_points() {
        let g = afirst_g2();
        let coll = minimal_peripheral_structure(&g).unwrap().unwrap();
        let cut = parabolic_cut_points(&g, &coll).unwrap();
        let sets: Vec<Vec<String>> = cut.iter().map(|&i| g.labels_of(&coll.members[i])).collect();
        assert_eq!(sets, vec![vec!["b1", "b2", "b3", "b4", "b5"], vec!["b10", "b6", "b7", "b8", "b9"]]);
        let s = peripheral_splitting(&g, &coll, cut[0]).unwrap();
        assert!(splitting_violations(&g, &coll, cut[0], &s).is_empty());
        let square = (0..coll.len()).find(|i| !cut.contains(i)).unwrap();
        assert_eq!(peripheral_splitting(&g, &coll, square), Err(BoundaryError::NoSeparatingSubgraph));
    }

    #[test]
    fn cut_pair_verdicts() {
        let g = asecond_g2();
        let coll = minimal_peripheral_structure(&g).unwrap().unwrap();
        let v = nonparabolic_cut_pair(&g, &coll).unwrap();
        assert_eq!(v.status, TriState::Yes);
        let w = v.witness.unwrap();
        assert_eq!((g.label(w.poles.0), g.label(w.poles.1), w.clique.len()), ("o2", "o4", 0));
        let p = prism();
        let coll = minimal_peripheral_structure(p.graph()).unwrap().unwrap();
        assert_eq!(nonparabolic_cut_pair(p.graph(), &coll).unwrap().status, TriState::No);
        assert!(parabolic_cut_points(p.graph(), &coll).unwrap().is_empty());
    }

    #[test]
    fn poles_in_a_common_square_are_indeterminate() {
        let g = graph(
            "o1-o2 o2-o3 o3-o4 o4-o5 o5-o1 i1-i2 i2-i3 i3-i4 i4-i5 i5-i1 \
             o1-i1 o2-i2 o3-i3 o4-i4 o5-i5 x-o1 x-i5",
        );
        let coll = minimal_peripheral_structure(&g).unwrap().unwrap();
        assert_eq!(nonparabolic_cut_pair(&g, &coll).unwrap().status, TriState::Indeterminate);
    }

    #[test]
    fn carpet_and_two_ended_splittings() {
        let p = prism();
        assert_eq!(sierpinski_carpet(&p), Ok(true));
        assert_eq!(splits_over_2ended(&p), Ok(false));
        assert_eq!(sierpinski_carpet(&octahedron()), Ok(false));
        let a2 = flag_planar_complex(&asecond_g2()).unwrap();
        assert_eq!(splits_over_2ended(&a2), Ok(true));
        assert_eq!(sierpinski_carpet(&a2), Ok(false));
    }
}
