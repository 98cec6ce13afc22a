//! Finite simple graphs with labeled vertices.
//!
//! Every graph carries the label universe it was built from. Induced
//! subgraphs keep that universe, so vertex indices mean the same thing in a
//! graph and in all of its subgraphs. Labels are sorted at construction, which
//! makes index order and label order coincide.

mod joins;
mod separation;
mod set;
mod squares;

pub use joins::Suspension;
pub use separation::SeparatingSuspension;
pub use set::VertexSet;
pub use squares::{FourCycle, SquareGraph};

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("vertex `{0}` is not in the graph")]
    UnknownVertex(String),
    #[error("the separating set is the whole vertex set")]
    SIsWholeGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    CompleteGraph,
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// A finite simple graph: the defining graph of a right-angled Coxeter group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialGraph {
    labels: Arc<Vec<String>>,
    present: VertexSet,
    adj: Vec<VertexSet>,
}

impl SimplicialGraph {
    /// Builds a graph from vertex labels and labeled edges.
    ///
    /// Repeated edges are merged. Labels are sorted, so two calls with the
    /// same label set and edge set produce equal values.
    pub fn build<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        for l in labels {
            if !seen.insert(l.as_ref()) {
                return Err(GraphError::DuplicateVertex(l.as_ref().to_string()));
            }
        }
        let mut sorted: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        sorted.sort();
        let n = sorted.len();
        let index = |l: &str| sorted.binary_search_by(|x| x.as_str().cmp(l)).ok();
        let mut adj = vec![VertexSet::new(n); n];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = index(a).ok_or_else(|| GraphError::UnknownEndpoint(a.to_string()))?;
            let ib = index(b).ok_or_else(|| GraphError::UnknownEndpoint(b.to_string()))?;
            if ia == ib {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            adj[ia].insert(ib);
            adj[ib].insert(ia);
        }
        Ok(SimplicialGraph { labels: Arc::new(sorted), present: VertexSet::full(n), adj })
    }

    /// Builds a graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self, GraphError> {
        let labels: BTreeSet<&str> =
            edges.iter().flat_map(|(a, b)| [a.as_ref(), b.as_ref()]).collect();
        let labels: Vec<&str> = labels.into_iter().collect();
        let edges: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_ref(), b.as_ref())).collect();
        Self::build(&labels, &edges)
    }

    /// Size of the label universe (not the number of present vertices).
    pub fn universe(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn all_labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of a present vertex with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels
            .binary_search_by(|x| x.as_str().cmp(label))
            .ok()
            .filter(|&i| self.present.contains(i))
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.present
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.present.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.present.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.present.contains(v)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.present.contains(u) && self.adj[u].contains(v)
    }

    /// Neighbors of a present vertex.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.universe())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, items: I) -> VertexSet {
        VertexSet::from_iter_with(self.universe(), items)
    }

    /// Resolves labels to a vertex set of this graph.
    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet, GraphError> {
        let mut s = self.empty_set();
        for l in labels {
            let v = self
                .index_of(l.as_ref())
                .ok_or_else(|| GraphError::UnknownVertex(l.as_ref().to_string()))?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn labels_of(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    fn check_subset(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.capacity() != self.universe() {
            return Err(GraphError::UnknownVertex(format!("{s:?}")));
        }
        match s.difference(&self.present).first() {
            Some(v) => Err(GraphError::UnknownVertex(self.labels[v].clone())),
            None => Ok(()),
        }
    }

    /// The subgraph induced on `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Self, GraphError> {
        self.check_subset(s)?;
        Ok(self.restrict(s))
    }

    /// Induced subgraph without the subset check; `s` is intersected with the
    /// present vertices.
    pub(crate) fn restrict(&self, s: &VertexSet) -> Self {
        let present = self.present.intersection(s);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, nb)| if present.contains(v) { nb.intersection(&present) } else { VertexSet::new(self.universe()) })
            .collect();
        SimplicialGraph { labels: Arc::clone(&self.labels), present, adj }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// The subgraph induced on the complement of `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Self {
        self.restrict(&self.present.difference(s))
    }

    /// Connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = self.empty_set();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.adj[v].iter() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff removing `s` leaves at least two components.
    pub fn separates(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_subset(s)?;
        if s.len() == self.vertex_count() {
            return Err(GraphError::SIsWholeGraph);
        }
        Ok(self.remove_vertices(s).components().len() >= 2)
    }

    /// Like [`separates`](Self::separates) but false for the whole vertex set.
    pub(crate) fn separates_lenient(&self, s: &VertexSet) -> bool {
        let rest = self.present.difference(s);
        !rest.is_empty() && self.restrict(&rest).components().len() >= 2
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(&self.present)
    }

    /// All non-empty cliques, sorted.
    pub fn cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for v in self.vertices() {
            let cand: VertexSet = self.set_of(self.adj[v].iter().filter(|&w| w > v));
            self.extend_cliques(self.set_of([v]), cand, &mut out);
        }
        out.sort();
        out
    }

    fn extend_cliques(&self, current: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current.clone());
        for w in cand.iter() {
            let mut next = current.clone();
            next.insert(w);
            let rest = self.set_of(cand.iter().filter(|&x| x > w && self.adj[w].contains(x)));
            self.extend_cliques(next, rest, out);
        }
    }

    /// All 3-cliques as sorted index triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for c in self.adj[a].intersection(&self.adj[b]).iter().filter(|&c| c > b) {
                out.push([a, b, c]);
            }
        }
        out.sort();
        out
    }

    /// A 4-clique, if one exists.
    pub fn find_k4(&self) -> Option<[usize; 4]> {
        for [a, b, c] in self.triangles() {
            let common = self.adj[a].intersection(&self.adj[b]).intersection(&self.adj[c]);
            let found = common.iter().find(|&d| d > c);
            if let Some(d) = found {
                return Some([a, b, c, d]);
            }
        }
        None
    }

    /// True iff some clique separates the graph.
    pub fn has_separating_clique(&self) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.is_complete() {
            return Err(GraphError::CompleteGraph);
        }
        Ok(self.cliques().iter().any(|c| self.separates_lenient(c)))
    }

    /// Graph diameter; `None` when disconnected.
    pub fn diameter(&self) -> Result<Option<usize>, GraphError> {
        if self.present.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let mut best = 0;
        for s in self.vertices() {
            let dist = self.bfs_distances(s);
            for v in self.vertices() {
                match dist[v] {
                    Some(d) => best = best.max(d),
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(best))
    }

    pub(crate) fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.universe()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for w in self.adj[v].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Complement graph on the same vertices.
    pub fn complement(&self) -> Self {
        let adj = (0..self.universe())
            .map(|v| {
                if self.present.contains(v) {
                    let mut nb = self.present.difference(&self.adj[v]);
                    nb.remove(v);
                    nb
                } else {
                    self.empty_set()
                }
            })
            .collect();
        SimplicialGraph { labels: Arc::clone(&self.labels), present: self.present.clone(), adj }
    }

    /// Shortest path inside the vertex set `within`, from `s` to any vertex of `targets`.
    pub(crate) fn shortest_path(&self, s: usize, targets: &VertexSet, within: &VertexSet) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.universe()];
        let mut seen = self.empty_set();
        seen.insert(s);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v != s && targets.contains(v) {
                let mut path = vec![v];
                let mut cur = v;
                while cur != s {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[v].iter() {
                if (within.contains(w) || targets.contains(w)) && seen.insert(w) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Human-readable rendering of a vertex set, e.g. `{a1,a2}`.
    pub fn fmt_set(&self, s: &VertexSet) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }
}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.edges().iter().map(|&(a, b)| format!("{}-{}", self.label(a), self.label(b))).collect();
        write!(f, "Graph(V={:?}, E=[{}])", self.labels_of(&self.present), edges.join(", "))
    }
}
