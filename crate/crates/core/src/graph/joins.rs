//! Joins, suspensions and broken lines.

use super::{GraphError, SimplicialGraph, VertexSet};

/// A decomposition `G = base * {u, v}` with `u`, `v` non-adjacent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Suspension {
    pub poles: (usize, usize),
    pub base: VertexSet,
}

impl SimplicialGraph {
    /// Maximal join decomposition: one factor per component of the complement.
    pub fn join_factors(&self) -> Vec<SimplicialGraph> {
        self.complement().components().iter().map(|c| self.restrict(c)).collect()
    }

    pub fn is_join(&self) -> bool {
        self.join_factors().len() >= 2
    }

    /// True iff the join factors split into two groups whose joins both have
    /// diameter at least 2, counting a disconnected group as infinite.
    ///
    /// A group with two or more factors has diameter at most 2 and reaches 2
    /// exactly when it is not complete. A factor with two or more vertices is
    /// never complete, so the test reduces to counting such factors.
    pub fn is_join_of_two_diam_ge2(&self) -> bool {
        self.join_factors().iter().filter(|f| f.vertex_count() >= 2).count() >= 2
    }

    /// Every suspension decomposition, ordered by pole pair.
    pub fn suspension_forms(&self) -> Vec<Suspension> {
        let n = self.vertex_count();
        let dominating: Vec<usize> =
            self.vertices().filter(|&v| self.degree(v) + 2 >= n).collect();
        let mut out = Vec::new();
        for (i, &u) in dominating.iter().enumerate() {
            for &v in &dominating[i + 1..] {
                if self.adjacent(u, v) || n < 3 {
                    continue;
                }
                let mut base = self.vertex_set().clone();
                base.remove(u);
                base.remove(v);
                if base.is_subset(self.neighbors(u)) && base.is_subset(self.neighbors(v)) {
                    out.push(Suspension { poles: (u, v), base });
                }
            }
        }
        out
    }

    /// The suspension decomposition with the least pole pair.
    pub fn suspension_form(&self) -> Option<Suspension> {
        self.suspension_forms().into_iter().next()
    }

    /// True iff the graph is a disjoint union of points and paths.
    pub fn is_broken_line(&self) -> Result<bool, GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let acyclic = self.edge_count() + self.components().len() == self.vertex_count();
        Ok(acyclic && self.vertices().all(|v| self.degree(v) <= 2))
    }

    /// True iff the graph is a path on three vertices.
    pub fn is_path_of_length_two(&self) -> bool {
        self.vertex_count() == 3 && self.edge_count() == 2 && self.is_connected()
    }

    /// True iff the graph is a cycle of length at least 4.
    pub fn is_long_cycle(&self) -> bool {
        self.vertex_count() >= 4
            && self.is_connected()
            && self.vertices().all(|v| self.degree(v) == 2)
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::tests::{c4, graph};

    fn octahedron() -> crate::graph::SimplicialGraph {
        graph("a-b b-c c-d d-a x-a x-b x-c x-d y-a y-b y-c y-d")
    }

    #[test]
    fn join_factors_examples() {
        let oct = octahedron();
        let sizes: Vec<usize> = oct.join_factors().iter().map(|f| f.vertex_count()).collect();
        assert_eq!(sizes, vec![2, 2, 2]);
        assert!(oct.is_join_of_two_diam_ge2());
        let c5 = graph("a-b b-c c-d d-e e-a");
        assert_eq!(c5.join_factors().len(), 1);
        assert!(!c5.is_join_of_two_diam_ge2());
        assert_eq!(graph("a-b").join_factors().len(), 2);
        assert!(!graph("a-b").is_join_of_two_diam_ge2());
        assert!(c4().is_join_of_two_diam_ge2());
    }

    #[test]
    fn suspension_examples() {
        let oct = octahedron();
        let s = oct.suspension_form().unwrap();
        assert_eq!((oct.label(s.poles.0), oct.label(s.poles.1)), ("a", "c"));
        assert_eq!(oct.labels_of(&s.base), ["b", "d", "x", "y"]);
        let g = c4();
        let s = g.suspension_form().unwrap();
        assert_eq!(s.poles, (0, 2));
        assert_eq!(g.labels_of(&s.base), ["b", "d"]);
        assert!(graph("a-b b-c c-d d-e e-a").suspension_form().is_none());
    }

    #[test]
    fn broken_lines() {
        let g = graph("a-b b-c");
        assert!(g.is_broken_line().unwrap());
        assert!(g.is_path_of_length_two());
        let pts = g.restrict(&g.set_of([0, 2]));
        assert!(pts.is_broken_line().unwrap());
        assert!(!c4().is_broken_line().unwrap());
        assert!(g.restrict(&g.empty_set()).is_broken_line().is_err());
        assert!(c4().is_long_cycle());
    }
}
