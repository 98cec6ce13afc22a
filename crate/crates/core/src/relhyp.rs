//! Peripheral structures, the Caprace conditions and divergence classes.

use crate::decomp::{split, DecompError, SplitOrder};
use crate::graph::{FourCycle, SimplicialGraph, VertexSet};
use crate::planar::PlanarComplex;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelhypError {
    #[error("member {0} is not an induced subgraph of the host graph")]
    NotInducedMember(usize),
    #[error("closure member {0} is neither a square nor CFS")]
    ClosureNotThick(String),
    #[error("Caprace verification failed: {0}")]
    CapraceVerificationFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Decomp(#[from] DecompError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MemberTag {
    Square,
    Cfs,
    Other,
}

/// Induced subgraphs of a host graph, stored as sorted vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralCollection {
    pub members: Vec<VertexSet>,
    pub tags: Vec<MemberTag>,
    pub minimality_certified: bool,
}

impl PeripheralCollection {
    /// Sorts and deduplicates `members` and tags each one.
    pub fn new(g: &SimplicialGraph, mut members: Vec<VertexSet>) -> Self {
        members.sort();
        members.dedup();
        let tags = members.iter().map(|m| tag(g, m)).collect();
        PeripheralCollection { members, tags, minimality_certified: false }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self, g: &SimplicialGraph) -> Vec<Vec<String>> {
        self.members.iter().map(|m| g.labels_of(m)).collect()
    }
}

fn tag(g: &SimplicialGraph, m: &VertexSet) -> MemberTag {
    let sub = g.restrict(m);
    if sub.vertex_count() == 4 && sub.is_long_cycle() {
        MemberTag::Square
    } else if sub.is_cfs() {
        MemberTag::Cfs
    } else {
        MemberTag::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CapraceViolation {
    /// Condition (1): an induced 4-cycle lies in no member.
    UncoveredSquare(FourCycle),
    /// Condition (2): two members meet in a non-clique.
    NonCliqueIntersection { members: (usize, usize), intersection: VertexSet },
    /// Condition (3): a vertex outside a member commutes with two of its
    /// non-adjacent vertices.
    NotClosed { member: usize, vertex: usize, pair: (usize, usize) },
}

impl CapraceViolation {
    pub fn condition(&self) -> u8 {
        match self {
            CapraceViolation::UncoveredSquare(_) => 1,
            CapraceViolation::NonCliqueIntersection { .. } => 2,
            CapraceViolation::NotClosed { .. } => 3,
        }
    }

    pub fn describe(&self, g: &SimplicialGraph) -> String {
        match self {
            CapraceViolation::UncoveredSquare(c) => format!("(1) square {} lies in no member", c.display(g)),
            CapraceViolation::NonCliqueIntersection { members, intersection } => format!(
                "(2) members {} and {} meet in non-clique {}",
                members.0,
                members.1,
                g.fmt_set(intersection)
            ),
            CapraceViolation::NotClosed { member, vertex, pair } => format!(
                "(3) {} is adjacent to non-adjacent {} and {} of member {}",
                g.label(*vertex),
                g.label(pair.0),
                g.label(pair.1),
                member
            ),
        }
    }
}

fn nonadjacent_pair_in(g: &SimplicialGraph, s: &VertexSet) -> Option<(usize, usize)> {
    let vs = s.to_vec();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if !g.adjacent(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Every violation of the three Caprace conditions.
pub fn verify_caprace(g: &SimplicialGraph, coll: &PeripheralCollection) -> Result<Vec<CapraceViolation>, RelhypError> {
    for (i, m) in coll.members.iter().enumerate() {
        if m.is_empty() || m.capacity() != g.universe() || !m.is_subset(g.vertex_set()) {
            return Err(RelhypError::NotInducedMember(i));
        }
    }
    let mut out = Vec::new();
    for c in g.enumerate_induced_4cycles() {
        let s = c.to_set(g.universe());
        if !coll.members.iter().any(|m| s.is_subset(m)) {
            out.push(CapraceViolation::UncoveredSquare(c));
        }
    }
    for (i, a) in coll.members.iter().enumerate() {
        for (j, b) in coll.members.iter().enumerate().skip(i + 1) {
            let meet = a.intersection(b);
            if !g.is_clique(&meet) {
                out.push(CapraceViolation::NonCliqueIntersection { members: (i, j), intersection: meet });
            }
        }
    }
    for (i, m) in coll.members.iter().enumerate() {
        for v in g.vertices().filter(|&v| !m.contains(v)) {
            let inside = g.neighbors(v).intersection(m);
            if let Some(pair) = nonadjacent_pair_in(g, &inside) {
                out.push(CapraceViolation::NotClosed { member: i, vertex: v, pair });
            }
        }
    }
    Ok(out)
}

/// Grows the seeds to a fixpoint: members meeting in a non-clique are merged
/// and every vertex adjacent to two non-adjacent vertices of a member joins
/// it.
pub fn closure(g: &SimplicialGraph, seeds: Vec<VertexSet>) -> Vec<VertexSet> {
    let mut members = seeds;
    loop {
        let mut changed = false;
        for m in members.iter_mut() {
            for v in g.vertices() {
                if !m.contains(v) && nonadjacent_pair_in(g, &g.neighbors(v).intersection(m)).is_some() {
                    m.insert(v);
                    changed = true;
                }
            }
        }
        let mut merged: Vec<VertexSet> = Vec::new();
        for m in members {
            let mut cur = m;
            loop {
                let hit = merged.iter().position(|x| !g.is_clique(&x.intersection(&cur)));
                match hit {
                    Some(k) => {
                        cur.union_with(&merged.swap_remove(k));
                        changed = true;
                    }
                    None => break,
                }
            }
            if !merged.contains(&cur) {
                merged.push(cur);
            }
        }
        members = merged;
        if !changed {
            break;
        }
    }
    members.sort();
    members.dedup();
    members
}

/// The minimal peripheral structure, or `None` when the closure engulfs the
/// whole graph and the graph is CFS (so the group is thick).
///
/// A graph without induced 4-cycles yields the empty collection.
pub fn minimal_peripheral_structure(g: &SimplicialGraph) -> Result<Option<PeripheralCollection>, RelhypError> {
    let seeds = g.enumerate_induced_4cycles().iter().map(|c| c.to_set(g.universe())).collect();
    let members = closure(g, seeds);
    if members.iter().any(|m| m == g.vertex_set()) {
        return if g.is_cfs() {
            Ok(None)
        } else {
            Err(RelhypError::ClosureNotThick(g.fmt_set(g.vertex_set())))
        };
    }
    let mut coll = PeripheralCollection::new(g, members);
    if let Some(i) = coll.tags.iter().position(|t| *t == MemberTag::Other) {
        return Err(RelhypError::ClosureNotThick(g.fmt_set(&coll.members[i])));
    }
    certify(g, &mut coll)?;
    Ok(Some(coll))
}

fn certify(g: &SimplicialGraph, coll: &mut PeripheralCollection) -> Result<(), RelhypError> {
    let bad = verify_caprace(g, coll)?;
    if let Some(v) = bad.first() {
        return Err(RelhypError::CapraceVerificationFailed(v.describe(g)));
    }
    coll.minimality_certified = true;
    Ok(())
}

/// The peripheral structure of a planar flag complex, read off from its
/// decomposition along strongly separating 4-cycles: unions over maximal
/// connected groups of special pieces, plus the induced 4-cycles outside
/// them. `None` when the special pieces cover the whole complex.
pub fn planar_peripheral_structure(delta: &PlanarComplex) -> Result<Option<PeripheralCollection>, RelhypError> {
    let g = delta.graph();
    let (pieces, edges) = split(delta, SplitOrder::Least, false)?;
    let special: Vec<bool> = pieces.iter().map(|p| p.complex.special_kind().is_some() && p.complex.is_prime()).collect();
    let mut group: Vec<usize> = (0..pieces.len()).collect();
    // pieces number at most a few dozen, so relabel until stable
    loop {
        let mut changed = false;
        for &(a, b, _) in &edges {
            if special[a] && special[b] && group[a] != group[b] {
                let m = group[a].min(group[b]);
                let old = group[a].max(group[b]);
                group.iter_mut().filter(|x| **x == old).for_each(|x| *x = m);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut members: Vec<VertexSet> = Vec::new();
    for root in 0..pieces.len() {
        if !special[root] || group[root] != root {
            continue;
        }
        let mut u = g.empty_set();
        for (i, p) in pieces.iter().enumerate() {
            if group[i] == root {
                u.union_with(&p.vertices);
            }
        }
        members.push(u);
    }
    if members.iter().any(|m| m == g.vertex_set()) {
        return Ok(None);
    }
    for c in g.enumerate_induced_4cycles() {
        let s = c.to_set(g.universe());
        if !members.iter().any(|m| s.is_subset(m)) {
            members.push(s);
        }
    }
    let mut coll = PeripheralCollection::new(g, members);
    if coll.tags.contains(&MemberTag::Other) {
        return Err(RelhypError::CapraceVerificationFailed("member neither square nor CFS".into()));
    }
    certify(g, &mut coll)?;
    Ok(Some(coll))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DivergenceClass {
    Linear,
    Quadratic,
    Exponential,
    UnknownPolynomial,
}

/// Linear iff a join of two graphs of diameter at least 2; otherwise
/// quadratic iff CFS; otherwise exponential when the group is planar or has
/// a certified relatively hyperbolic structure (hyperbolic included).
pub fn divergence_class(g: &SimplicialGraph, planar_hint: Option<&PlanarComplex>) -> Result<DivergenceClass, RelhypError> {
    if !g.is_connected() {
        return Err(RelhypError::HypothesisViolated("graph is disconnected".into()));
    }
    if g.is_complete() {
        return Err(RelhypError::HypothesisViolated("graph is complete".into()));
    }
    if g.has_separating_clique().map_err(|e| RelhypError::HypothesisViolated(e.to_string()))? {
        return Err(RelhypError::HypothesisViolated("graph has a separating clique".into()));
    }
    if g.is_join_of_two_diam_ge2() {
        return Ok(DivergenceClass::Linear);
    }
    if g.is_cfs() {
        return Ok(DivergenceClass::Quadratic);
    }
    if planar_hint.is_some() {
        return Ok(DivergenceClass::Exponential);
    }
    Ok(match minimal_peripheral_structure(g) {
        Ok(Some(_)) => DivergenceClass::Exponential,
        _ => DivergenceClass::UnknownPolynomial,
    })
}
