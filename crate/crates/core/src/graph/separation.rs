//! Cut pairs, separating paths and separating complete subgraph suspensions.

use super::{GraphError, SimplicialGraph, VertexSet};

/// Poles `u`, `v` (non-adjacent) and a clique of common neighbors whose
/// union separates the graph. An empty clique is a cut pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeparatingSuspension {
    pub poles: (usize, usize),
    pub clique: Vec<usize>,
}

impl SeparatingSuspension {
    pub fn vertex_set(&self, g: &SimplicialGraph) -> VertexSet {
        let mut s = g.set_of(self.clique.iter().copied());
        s.insert(self.poles.0);
        s.insert(self.poles.1);
        s
    }
}

impl SimplicialGraph {
    fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    fn nonadjacent_pairs(&self) -> Vec<(usize, usize)> {
        let vs: Vec<usize> = self.vertices().collect();
        let mut out = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-adjacent separating pairs, sorted.
    pub fn cut_pairs(&self) -> Result<Vec<(usize, usize)>, GraphError> {
        self.require_connected()?;
        Ok(self
            .nonadjacent_pairs()
            .into_iter()
            .filter(|&(u, v)| self.separates_lenient(&self.set_of([u, v])))
            .collect())
    }

    /// Induced paths `a - m - b` whose three vertices separate, as `(a, m, b)`
    /// with `a < b`, sorted.
    pub fn separating_induced_paths_len2(&self) -> Result<Vec<(usize, usize, usize)>, GraphError> {
        self.require_connected()?;
        let mut out = Vec::new();
        for (a, b) in self.nonadjacent_pairs() {
            for m in self.neighbors(a).intersection(self.neighbors(b)).iter() {
                if self.separates_lenient(&self.set_of([a, m, b])) {
                    out.push((a, m, b));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Every separating complete subgraph suspension, sorted.
    pub fn separating_complete_subgraph_suspensions(
        &self,
    ) -> Result<Vec<SeparatingSuspension>, GraphError> {
        self.require_connected()?;
        let mut out = Vec::new();
        for (u, v) in self.nonadjacent_pairs() {
            let common = self.neighbors(u).intersection(self.neighbors(v));
            let mut cliques = vec![self.empty_set()];
            cliques.extend(self.restrict(&common).cliques());
            for c in cliques {
                let mut s = c.clone();
                s.insert(u);
                s.insert(v);
                if self.separates_lenient(&s) {
                    out.push(SeparatingSuspension { poles: (u, v), clique: c.to_vec() });
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::tests::{c4, graph};
    use crate::graph::GraphError;

    #[test]
    fn c4_cut_pairs() {
        let g = c4();
        assert_eq!(g.cut_pairs().unwrap(), vec![(0, 2), (1, 3)]);
        let s = g.separating_complete_subgraph_suspensions().unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|x| x.clique.is_empty()));
        assert_eq!(graph("a-b c-d").cut_pairs(), Err(GraphError::Disconnected));
    }

    #[test]
    fn bowtie_of_squares_has_separating_path() {
        // two squares a-m-b-x and a-m-b-y glued along the path a-m-b,
        // plus a third branch z hanging off a and b
        let g = graph("a-m m-b b-x x-a a-y y-b a-z z-b");
        let paths = g.separating_induced_paths_len2().unwrap();
        assert!(!paths.is_empty());
        assert!(graph("a-b a-c a-d b-c b-d c-d").separating_induced_paths_len2().unwrap().is_empty());
    }
}
