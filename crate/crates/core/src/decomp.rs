//! Prime decomposition trees and two-colored visual decomposition trees.
//!
//! The prime tree is built by splitting along strongly separating induced
//! 4-cycles until every piece is prime. When all pieces are special, its
//! edges are colored red or blue, red components are collapsed, and each
//! resulting node gets a weight (region-bounding squares of its piece) and a
//! color (black iff the weight exceeds the degree).

use crate::classify::check_standing_assumptions;
use crate::graph::{FourCycle, VertexSet};
use crate::planar::{PlanarComplex, PlanarError, SpecialKind};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("standing assumptions violated: {0}")]
    StandingAssumptionsViolated(String),
    #[error("vertex complex {0} is not special")]
    NonSpecialVertexComplex(String),
    #[error("1-skeleton is not CFS")]
    NotCFS,
    #[error("1-skeleton is a join")]
    IsJoin,
    #[error("decomposition invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Planar(#[from] PlanarError),
}

/// Which strongly separating cycle to split along first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitOrder {
    Least,
    Greatest,
}

#[derive(Clone, Debug)]
pub struct PrimeNode {
    pub vertices: VertexSet,
    pub complex: PlanarComplex,
}

/// Tree of prime pieces. Edges carry the 4-cycle along which the two
/// adjacent pieces meet. Nodes are sorted by vertex set.
#[derive(Clone, Debug)]
pub struct PrimeTree {
    pub nodes: Vec<PrimeNode>,
    pub edges: Vec<(usize, usize, FourCycle)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

#[derive(Clone, Debug)]
pub struct VdtNode {
    pub vertices: VertexSet,
    pub complex: PlanarComplex,
    pub poles: (usize, usize),
    /// The broken line whose suspension is the node complex.
    pub line: VertexSet,
    pub weight: usize,
    pub degree: usize,
    pub color: Color,
    /// Indices of the prime-tree nodes collapsed into this node.
    pub absorbed: Vec<usize>,
}

/// The two-colored visual decomposition tree.
#[derive(Clone, Debug)]
pub struct VisualDecompositionTree {
    pub nodes: Vec<VdtNode>,
    pub edges: Vec<(usize, usize, FourCycle)>,
}

impl PrimeTree {
    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b, _)| a == i || b == i).count()
    }

    /// Checks the structural invariants against the source complex and
    /// returns a description of each violation.
    pub fn violations(&self, delta: &PlanarComplex) -> Vec<String> {
        let g = delta.graph();
        let mut out = Vec::new();
        let mut union = g.empty_set();
        for (i, n) in self.nodes.iter().enumerate() {
            union.union_with(&n.vertices);
            if !n.complex.is_prime() {
                out.push(format!("node {} is not prime", g.fmt_set(&n.vertices)));
            }
            if self.nodes[i + 1..].iter().any(|m| m.vertices == n.vertices) {
                out.push(format!("node {} repeated", g.fmt_set(&n.vertices)));
            }
        }
        if &union != g.vertex_set() {
            out.push("node vertex sets do not cover the complex".into());
        }
        for (a, b) in g.edges() {
            if !self.nodes.iter().any(|n| n.vertices.contains(a) && n.vertices.contains(b)) {
                out.push(format!("edge {}-{} in no node", g.label(a), g.label(b)));
            }
        }
        if self.edges.len() + 1 != self.nodes.len() {
            out.push("edge count is not node count minus one".into());
        }
        for (k, &(a, b, cyc)) in self.edges.iter().enumerate() {
            let meet = self.nodes[a].vertices.intersection(&self.nodes[b].vertices);
            if meet != cyc.to_set(g.universe()) {
                out.push(format!("adjacent nodes meet in {} not {}", g.fmt_set(&meet), cyc.display(g)));
            }
            if self.edges[k + 1..].iter().any(|e| e.2 == cyc) {
                out.push(format!("edge cycle {} repeated", cyc.display(g)));
            }
        }
        for r in delta.regions() {
            let lifted = self.nodes.iter().any(|n| n.complex.regions().iter().any(|s| s.boundary == r.boundary));
            if !lifted {
                out.push(format!("region {:?} is a region of no piece", g.labels_of(&g.set_of(r.boundary.clone()))));
            }
        }
        out
    }
}

impl VisualDecompositionTree {
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            let g = n.complex.graph();
            if n.weight < n.degree {
                out.push(format!("node {i}: weight {} below degree {}", n.weight, n.degree));
            }
            if (n.color == Color::Black) != (n.weight > n.degree) {
                out.push(format!("node {i}: color disagrees with weight and degree"));
            }
            let line = g.restrict(&n.line);
            if !line.is_broken_line().unwrap_or(false) || line.is_path_of_length_two() {
                out.push(format!("node {i}: base is not an admissible broken line"));
            }
        }
        for &(a, b, cyc) in &self.edges {
            for (x, y) in [(a, b), (b, a)] {
                let nx = &self.nodes[x];
                if !nx.complex.bounds_region(&cyc).unwrap_or(false) {
                    out.push(format!("edge cycle does not bound a region in node {x}"));
                }
                let (p, q) = nx.poles;
                if !self.nodes[y].line.contains(p) || !self.nodes[y].line.contains(q) {
                    out.push(format!("poles of node {x} are not on the line of node {y}"));
                }
            }
        }
        out
    }
}

/// Prime decomposition tree, splitting along the least strongly separating
/// cycle first.
pub fn prime_decomposition_tree(delta: &PlanarComplex) -> Result<PrimeTree, DecompError> {
    prime_decomposition_tree_ordered(delta, SplitOrder::Least)
}

pub fn prime_decomposition_tree_ordered(delta: &PlanarComplex, order: SplitOrder) -> Result<PrimeTree, DecompError> {
    check_standing_assumptions(delta).map_err(|v| DecompError::StandingAssumptionsViolated(v.to_string()))?;
    let (nodes, edges) = split(delta, order, true)?;
    let mut idx: Vec<usize> = (0..nodes.len()).collect();
    idx.sort_by(|&a, &b| nodes[a].vertices.cmp(&nodes[b].vertices));
    let mut pos = vec![0; nodes.len()];
    for (new, &old) in idx.iter().enumerate() {
        pos[old] = new;
    }
    let mut edges: Vec<(usize, usize, FourCycle)> = edges
        .into_iter()
        .map(|(a, b, c)| {
            let (a, b) = (pos[a], pos[b]);
            (a.min(b), a.max(b), c)
        })
        .collect();
    edges.sort();
    let mut slots: Vec<Option<PrimeNode>> = nodes.into_iter().map(Some).collect();
    let nodes = idx.iter().map(|&i| slots[i].take().expect("each node moved once")).collect();
    let tree = PrimeTree { nodes, edges };
    let bad = tree.violations(delta);
    if let Some(first) = bad.into_iter().next() {
        return Err(DecompError::InvariantViolated(first));
    }
    Ok(tree)
}

pub(crate) type Pieces = (Vec<PrimeNode>, Vec<(usize, usize, FourCycle)>);

/// Recursive splitting. With `require_prime` unset, leaves are any pieces
/// without a strongly separating cycle.
pub(crate) fn split(delta: &PlanarComplex, order: SplitOrder, require_prime: bool) -> Result<Pieces, DecompError> {
    let cycles = delta.strongly_separating_4cycles();
    let chosen = match order {
        SplitOrder::Least => cycles.first(),
        SplitOrder::Greatest => cycles.last(),
    };
    let Some(&sigma) = chosen else {
        let g = delta.graph();
        if require_prime && !delta.is_prime() {
            return Err(DecompError::InvariantViolated(format!("piece {} is not prime", g.fmt_set(g.vertex_set()))));
        }
        let node = PrimeNode { vertices: g.vertex_set().clone(), complex: delta.clone() };
        return Ok((vec![node], Vec::new()));
    };
    let (d1, d2) = delta.strong_visual_decomposition(&sigma)?;
    let (mut n1, mut e1) = split(&d1, order, require_prime)?;
    let (n2, e2) = split(&d2, order, require_prime)?;
    let a = holder_of(&n1, &sigma, delta)?;
    let b = holder_of(&n2, &sigma, delta)?;
    let off = n1.len();
    n1.extend(n2);
    e1.extend(e2.into_iter().map(|(x, y, c)| (x + off, y + off, c)));
    e1.push((a, b + off, sigma));
    Ok((n1, e1))
}

/// The unique piece in which the splitting cycle bounds a region.
fn holder_of(nodes: &[PrimeNode], sigma: &FourCycle, delta: &PlanarComplex) -> Result<usize, DecompError> {
    let hits: Vec<usize> = (0..nodes.len())
        .filter(|&i| nodes[i].complex.graph().contains(sigma.vertices()[0]))
        .filter(|&i| {
            FourCycle::is_induced_in(sigma.vertices(), nodes[i].complex.graph())
                && nodes[i].complex.bounds_region(sigma).unwrap_or(false)
        })
        .collect();
    match hits.as_slice() {
        [i] => Ok(*i),
        _ => Err(DecompError::InvariantViolated(format!(
            "cycle {} bounds a region in {} pieces",
            sigma.display(delta.graph()),
            hits.len()
        ))),
    }
}

fn special_or_err(n: &PrimeNode) -> Result<SpecialKind, DecompError> {
    n.complex
        .special_kind()
        .ok_or_else(|| DecompError::NonSpecialVertexComplex(n.complex.graph().fmt_set(&n.vertices)))
}

/// Red iff an endpoint is the suspension of a path of length two or both
/// endpoints have the same suspension points.
pub fn color_tree_edges(tree: &PrimeTree) -> Result<Vec<EdgeColor>, DecompError> {
    let kinds = tree.nodes.iter().map(special_or_err).collect::<Result<Vec<_>, _>>()?;
    let poles: Vec<Option<(usize, usize)>> = tree
        .nodes
        .iter()
        .map(|n| n.complex.graph().suspension_form().map(|s| s.poles))
        .collect();
    Ok(tree
        .edges
        .iter()
        .map(|&(a, b, _)| {
            let p3 = kinds[a] == SpecialKind::PathOfLengthTwo || kinds[b] == SpecialKind::PathOfLengthTwo;
            if p3 || poles[a] == poles[b] {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            }
        })
        .collect())
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

pub fn visual_decomposition_tree(delta: &PlanarComplex) -> Result<VisualDecompositionTree, DecompError> {
    check_standing_assumptions(delta).map_err(|v| DecompError::StandingAssumptionsViolated(v.to_string()))?;
    let g = delta.graph();
    if g.is_join() {
        return Err(DecompError::IsJoin);
    }
    if !g.is_cfs() {
        return Err(DecompError::NotCFS);
    }
    let tree = prime_decomposition_tree(delta)?;
    vdt_from_prime_tree(delta, &tree)
}

/// Collapses red components of a prime tree and weighs and colors the result.
pub fn vdt_from_prime_tree(delta: &PlanarComplex, tree: &PrimeTree) -> Result<VisualDecompositionTree, DecompError> {
    let colors = color_tree_edges(tree)?;
    let n = tree.nodes.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for (&(a, b, _), c) in tree.edges.iter().zip(&colors) {
        if *c == EdgeColor::Red {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if group_of[r] == usize::MAX {
            group_of[r] = groups.len();
            groups.push(Vec::new());
        }
        group_of[i] = group_of[r];
        groups[group_of[i]].push(i);
    }
    let mut edges: Vec<(usize, usize, FourCycle)> = tree
        .edges
        .iter()
        .zip(&colors)
        .filter(|(_, c)| **c == EdgeColor::Blue)
        .map(|(&(a, b, cyc), _)| {
            let (x, y) = (group_of[a], group_of[b]);
            (x.min(y), x.max(y), cyc)
        })
        .collect();
    edges.sort();

    let g = delta.graph();
    let mut nodes = Vec::with_capacity(groups.len());
    for (gi, members) in groups.iter().enumerate() {
        let mut vertices = g.empty_set();
        for &m in members {
            vertices.union_with(&tree.nodes[m].vertices);
        }
        let complex = delta.subcomplex(&vertices)?;
        let cg = complex.graph();
        let form = cg
            .suspension_forms()
            .into_iter()
            .find(|s| {
                let line = cg.restrict(&s.base);
                line.is_broken_line().unwrap_or(false) && !line.is_path_of_length_two()
            })
            .ok_or_else(|| {
                DecompError::InvariantViolated(format!(
                    "collapsed node {} is not the suspension of a broken line",
                    g.fmt_set(&vertices)
                ))
            })?;
        let weight = cg
            .enumerate_induced_4cycles()
            .iter()
            .filter(|c| complex.bounds_region(c).unwrap_or(false))
            .count();
        let degree = edges.iter().filter(|&&(a, b, _)| a == gi || b == gi).count();
        let color = if weight > degree { Color::Black } else { Color::White };
        nodes.push(VdtNode {
            vertices,
            complex,
            poles: form.poles,
            line: form.base,
            weight,
            degree,
            color,
            absorbed: members.clone(),
        });
    }
    let vdt = VisualDecompositionTree { nodes, edges };
    if let Some(first) = vdt.violations().into_iter().next() {
        return Err(DecompError::InvariantViolated(first));
    }
    Ok(vdt)
}
