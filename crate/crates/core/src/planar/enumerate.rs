//! Exhaustive enumeration of planar rotation systems for small graphs.

use super::embedding::Embedding;
use super::PlanarError;
use crate::graph::SimplicialGraph;
use std::collections::{BTreeSet, HashMap, VecDeque};

/// Largest graph for which embeddings are enumerated.
pub const ENUMERATION_VERTEX_LIMIT: usize = 14;

/// Default cap on search nodes visited during one enumeration.
pub const DEFAULT_SEARCH_BUDGET: usize = 2_000_000;

/// All planar embeddings of a connected graph, one per reflection pair, sorted.
///
/// Rotations are assigned vertex by vertex in breadth-first order. A partial
/// assignment is abandoned when the closed faces plus the open face chains
/// cannot reach the face count required by Euler's formula.
pub fn enumerate_embeddings(g: &SimplicialGraph, budget: usize) -> Result<Vec<Embedding>, PlanarError> {
    let n = g.vertex_count();
    if n > ENUMERATION_VERTEX_LIMIT {
        return Err(PlanarError::EmbeddingSearchExceeded { vertices: n, limit: ENUMERATION_VERTEX_LIMIT });
    }
    if !g.is_connected() {
        return Err(PlanarError::Graph(crate::graph::GraphError::Disconnected));
    }
    let order = bfs_order(g);
    let darts: Vec<(usize, usize)> = g.edges().iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let dart_index: HashMap<(usize, usize), usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let target = (g.edge_count() + 2).saturating_sub(n);
    let mut search = Search {
        g,
        order,
        darts,
        dart_index,
        target,
        rotation: vec![Vec::new(); g.universe()],
        assigned: vec![false; g.universe()],
        found: BTreeSet::new(),
        nodes: 0,
        budget,
    };
    search.go(0)?;
    Ok(search.found.into_iter().collect())
}

struct Search<'a> {
    g: &'a SimplicialGraph,
    order: Vec<usize>,
    darts: Vec<(usize, usize)>,
    dart_index: HashMap<(usize, usize), usize>,
    target: usize,
    rotation: Vec<Vec<usize>>,
    assigned: Vec<bool>,
    found: BTreeSet<Embedding>,
    nodes: usize,
    budget: usize,
}

impl Search<'_> {
    fn go(&mut self, k: usize) -> Result<(), PlanarError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(PlanarError::EmbeddingSearchExceeded {
                vertices: self.g.vertex_count(),
                limit: ENUMERATION_VERTEX_LIMIT,
            });
        }
        if !self.feasible() {
            return Ok(());
        }
        if k == self.order.len() {
            let e = Embedding::from_rotation(self.rotation.clone());
            let r = e.reflect();
            self.found.insert(e.min(r));
            return Ok(());
        }
        let v = self.order[k];
        let nbrs: Vec<usize> = self.g.neighbors(v).iter().collect();
        self.assigned[v] = true;
        for order in cyclic_orders(&nbrs) {
            self.rotation[v] = order;
            self.go(k + 1)?;
        }
        self.assigned[v] = false;
        self.rotation[v].clear();
        Ok(())
    }

    fn next(&self, d: usize) -> Option<usize> {
        let (x, y) = self.darts[d];
        if !self.assigned[y] {
            return None;
        }
        let r = &self.rotation[y];
        let i = r.iter().position(|&w| w == x)?;
        let z = r[(i + 1) % r.len()];
        self.dart_index.get(&(y, z)).copied()
    }

    fn feasible(&self) -> bool {
        let m = self.darts.len();
        let next: Vec<Option<usize>> = (0..m).map(|d| self.next(d)).collect();
        let open = next.iter().filter(|x| x.is_none()).count();
        let mut seen = vec![false; m];
        let mut closed = 0;
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut d = s;
            let mut ok = true;
            loop {
                seen[d] = true;
                match next[d] {
                    Some(nd) if nd == s => break,
                    Some(nd) if !seen[nd] => d = nd,
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                closed += 1;
            }
        }
        closed + open >= self.target
    }
}

fn bfs_order(g: &SimplicialGraph) -> Vec<usize> {
    let Some(start) = g.vertices().next() else { return Vec::new() };
    let mut seen = g.set_of([start]);
    let mut out = Vec::new();
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        out.push(v);
        for w in g.neighbors(v).iter() {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    out
}

/// Every cyclic order of `items`, each starting with `items[0]`.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut o = vec![items[0]];
        o.extend_from_slice(p);
        out.push(o);
    });
    out
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}
