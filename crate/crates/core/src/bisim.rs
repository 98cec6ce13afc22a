//! Two-colored graphs, weak coverings and bisimilarity.
//!
//! Minimal quotients come from coarsest partition refinement: start from the
//! color classes and split until block-mates see the same set of neighbor
//! blocks. A block containing an edge becomes a vertex with a loop.

use crate::decomp::{visual_decomposition_tree, Color, DecompError, VisualDecompositionTree};
use crate::planar::PlanarComplex;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BisimError {
    #[error("vertex {0} has no image")]
    PartialMap(usize),
    #[error("edge endpoint {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("input {input} violates hypothesis: {clause}")]
    HypothesisViolated { input: usize, clause: String },
}

/// A graph with black and white vertices. Loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoredGraph {
    pub names: Vec<String>,
    pub colors: Vec<Color>,
    adj: Vec<BTreeSet<usize>>,
}

impl TwoColoredGraph {
    pub fn new(names: Vec<String>, colors: Vec<Color>, edges: &[(usize, usize)]) -> Result<Self, BisimError> {
        assert_eq!(names.len(), colors.len(), "one name per vertex");
        let n = colors.len();
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(BisimError::EdgeOutOfRange(x));
                }
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(TwoColoredGraph { names, colors, adj })
    }

    /// Vertices named `v0`, `v1`, ...
    pub fn unnamed(colors: Vec<Color>, edges: &[(usize, usize)]) -> Result<Self, BisimError> {
        let names = (0..colors.len()).map(|i| format!("v{i}")).collect();
        Self::new(names, colors, edges)
    }

    pub fn from_tree(t: &VisualDecompositionTree) -> Self {
        let names = t
            .nodes
            .iter()
            .map(|n| n.complex.graph().labels_of(&n.vertices).join(","))
            .collect();
        let colors = t.nodes.iter().map(|n| n.color).collect();
        let edges: Vec<(usize, usize)> = t.edges.iter().map(|&(a, b, _)| (a, b)).collect();
        Self::new(names, colors, &edges).expect("tree edges are in range")
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adj[v].contains(&v)
    }

    /// Edges `(a, b)` with `a <= b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&b| b >= a).map(|&b| (a, b)));
        }
        out
    }
}

/// True iff `f` is a color-preserving homomorphism from `g` to `h` under
/// which every edge at `f(v)` lifts to an edge at `v`.
pub fn is_weak_covering(f: &[Option<usize>], g: &TwoColoredGraph, h: &TwoColoredGraph) -> Result<bool, BisimError> {
    let mut img = Vec::with_capacity(g.len());
    for v in 0..g.len() {
        match f.get(v).copied().flatten() {
            Some(x) if x < h.len() => img.push(x),
            _ => return Err(BisimError::PartialMap(v)),
        }
    }
    for v in 0..g.len() {
        if g.colors[v] != h.colors[img[v]] {
            return Ok(false);
        }
        if g.neighbors(v).iter().any(|&w| !h.adjacent(img[v], img[w])) {
            return Ok(false);
        }
        let lifted: BTreeSet<usize> = g.neighbors(v).iter().map(|&w| img[w]).collect();
        if h.neighbors(img[v]) != &lifted {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimal quotient and the projection onto it.
pub fn minimal_quotient_with_projection(g: &TwoColoredGraph) -> (TwoColoredGraph, Vec<usize>) {
    let n = g.len();
    let mut block: Vec<usize> = g.colors.iter().map(|c| *c as usize).collect();
    let mut count = renumber(&mut block);
    loop {
        let sigs: Vec<(usize, BTreeSet<usize>)> =
            (0..n).map(|v| (block[v], g.neighbors(v).iter().map(|&w| block[w]).collect())).collect();
        let mut ids: BTreeMap<&(usize, BTreeSet<usize>), usize> = BTreeMap::new();
        let mut next: Vec<usize> = sigs
            .iter()
            .map(|s| {
                let k = ids.len();
                *ids.entry(s).or_insert(k)
            })
            .collect();
        let new_count = renumber(&mut next);
        block = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    let mut colors = vec![Color::Black; count];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    let mut edges = BTreeSet::new();
    for v in 0..n {
        colors[block[v]] = g.colors[v];
        members[block[v]].push(v);
        for &w in g.neighbors(v) {
            edges.insert((block[v].min(block[w]), block[v].max(block[w])));
        }
    }
    let names = members
        .iter()
        .map(|m| m.iter().map(|&v| g.names[v].as_str()).collect::<Vec<_>>().join("+"))
        .collect();
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let q = TwoColoredGraph::new(names, colors, &edges).expect("blocks are in range");
    (q, block)
}

/// Block ids in order of first appearance; returns the number of blocks.
fn renumber(block: &mut [usize]) -> usize {
    let mut map = BTreeMap::new();
    for b in block.iter_mut() {
        let k = map.len();
        *b = *map.entry(*b).or_insert(k);
    }
    map.len()
}

/// The minimal two-colored graph weakly covered by `g`.
pub fn minimal_quotient(g: &TwoColoredGraph) -> TwoColoredGraph {
    let (q, proj) = minimal_quotient_with_projection(g);
    let f: Vec<Option<usize>> = proj.into_iter().map(Some).collect();
    assert!(
        is_weak_covering(&f, g, &q).expect("projection is total"),
        "quotient projection must be a weak covering"
    );
    q
}

/// Color- and loop-preserving isomorphism test by backtracking.
pub fn isomorphic(a: &TwoColoredGraph, b: &TwoColoredGraph) -> bool {
    if a.len() != b.len() || a.edges().len() != b.edges().len() {
        return false;
    }
    let profile = |g: &TwoColoredGraph, v: usize| (g.colors[v], g.neighbors(v).len(), g.has_loop(v));
    let mut pa: Vec<_> = (0..a.len()).map(|v| profile(a, v)).collect();
    let mut pb: Vec<_> = (0..b.len()).map(|v| profile(b, v)).collect();
    pa.sort();
    pb.sort();
    if pa != pb {
        return false;
    }
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    extend_iso(a, b, 0, &mut map, &mut used)
}

fn extend_iso(a: &TwoColoredGraph, b: &TwoColoredGraph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.len() {
        return true;
    }
    for x in 0..b.len() {
        if used[x]
            || a.colors[v] != b.colors[x]
            || a.neighbors(v).len() != b.neighbors(x).len()
            || a.has_loop(v) != b.has_loop(x)
        {
            continue;
        }
        let consistent = (0..v).all(|u| a.adjacent(u, v) == b.adjacent(map[u], x));
        if consistent {
            map[v] = x;
            used[x] = true;
            if extend_iso(a, b, v + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
    }
    map[v] = usize::MAX;
    false
}

/// True iff both graphs weakly cover a common two-colored graph.
pub fn bisimilar(g: &TwoColoredGraph, h: &TwoColoredGraph) -> bool {
    isomorphic(&minimal_quotient(g), &minimal_quotient(h))
}

fn tree_for(delta: &PlanarComplex, input: usize) -> Result<VisualDecompositionTree, BisimError> {
    visual_decomposition_tree(delta).map_err(|e| {
        let clause = match e {
            DecompError::StandingAssumptionsViolated(s) => format!("standing assumptions: {s}"),
            DecompError::IsJoin => "1-skeleton is a join".into(),
            DecompError::NotCFS => "1-skeleton is not CFS".into(),
            other => other.to_string(),
        };
        BisimError::HypothesisViolated { input, clause }
    })
}

/// Decides quasi-isometry of two groups of the graph-manifold subtype by
/// bisimilarity of their visual decomposition trees.
#[allow(non_snake_case)]
pub fn qi_equivalent_A2(delta: &PlanarComplex, delta_prime: &PlanarComplex) -> Result<bool, BisimError> {
    let t1 = tree_for(delta, 1)?;
    let t2 = tree_for(delta_prime, 2)?;
    Ok(bisimilar(&TwoColoredGraph::from_tree(&t1), &TwoColoredGraph::from_tree(&t2)))
}

/// True iff every vertex of the visual decomposition tree is black.
pub fn qi_to_raag(delta: &PlanarComplex) -> Result<bool, BisimError> {
    let t = tree_for(delta, 1)?;
    Ok(t.nodes.iter().all(|n| n.color == Color::Black))
}
