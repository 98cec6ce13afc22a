//! Induced 4-cycles, the square graph and the CFS test.

use super::{SimplicialGraph, VertexSet};
use std::collections::VecDeque;

/// An induced 4-cycle stored in canonical rotation: the first vertex is the
/// least one and the second is less than the fourth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FourCycle([usize; 4]);

impl FourCycle {
    /// Canonicalizes a cyclic sequence of four distinct vertices.
    pub fn new(cyc: [usize; 4]) -> Self {
        let i = (0..4).min_by_key(|&i| cyc[i]).unwrap_or(0);
        let r = [cyc[i], cyc[(i + 1) % 4], cyc[(i + 2) % 4], cyc[(i + 3) % 4]];
        if r[1] < r[3] {
            FourCycle(r)
        } else {
            FourCycle([r[0], r[3], r[2], r[1]])
        }
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.0
    }

    /// The two pairs of opposite vertices.
    pub fn diagonals(&self) -> [(usize, usize); 2] {
        let [a, b, c, d] = self.0;
        [(a.min(c), a.max(c)), (b.min(d), b.max(d))]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn to_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_iter_with(universe, self.0)
    }

    /// True iff `cyc` is an induced 4-cycle of `g`.
    pub fn is_induced_in(cyc: [usize; 4], g: &SimplicialGraph) -> bool {
        let [a, b, c, d] = cyc;
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| cyc[i] != cyc[j]));
        distinct
            && cyc.iter().all(|&v| g.contains(v))
            && g.adjacent(a, b)
            && g.adjacent(b, c)
            && g.adjacent(c, d)
            && g.adjacent(d, a)
            && !g.adjacent(a, c)
            && !g.adjacent(b, d)
    }

    pub fn labels(&self, g: &SimplicialGraph) -> [String; 4] {
        self.0.map(|v| g.label(v).to_string())
    }

    pub fn display(&self, g: &SimplicialGraph) -> String {
        format!("({})", self.labels(g).join(","))
    }
}

/// The square graph: vertices are induced 4-cycles, adjacent when they share
/// two vertices that are non-adjacent in the base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareGraph {
    pub cycles: Vec<FourCycle>,
    pub adjacency: Vec<Vec<usize>>,
}

impl SquareGraph {
    /// Connected components as lists of indices into `cycles`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.cycles.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            while let Some(i) = queue.pop_front() {
                comp.push(i);
                for &j in &self.adjacency[i] {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }
}

impl SimplicialGraph {
    /// All induced 4-cycles, sorted.
    ///
    /// For the least vertex `a` of a cycle, its opposite vertex `c` is a
    /// non-neighbor and the other two vertices are a non-adjacent pair of
    /// common neighbors.
    pub fn enumerate_induced_4cycles(&self) -> Vec<FourCycle> {
        let mut out = Vec::new();
        for a in self.vertices() {
            for c in self.vertices().filter(|&c| c > a && !self.adjacent(a, c)) {
                let common: Vec<usize> =
                    self.neighbors(a).intersection(self.neighbors(c)).iter().filter(|&x| x > a).collect();
                for (i, &b) in common.iter().enumerate() {
                    for &d in &common[i + 1..] {
                        if !self.adjacent(b, d) {
                            out.push(FourCycle([a, b, c, d]));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn has_induced_4cycle(&self) -> bool {
        !self.enumerate_induced_4cycles().is_empty()
    }

    pub fn square_graph(&self) -> SquareGraph {
        let cycles = self.enumerate_induced_4cycles();
        let n = cycles.len();
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if self.share_nonadjacent_pair(&cycles[i], &cycles[j]) {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        SquareGraph { cycles, adjacency }
    }

    fn share_nonadjacent_pair(&self, x: &FourCycle, y: &FourCycle) -> bool {
        let shared: Vec<usize> = x.0.iter().copied().filter(|v| y.contains(*v)).collect();
        shared
            .iter()
            .enumerate()
            .any(|(i, &u)| shared[i + 1..].iter().any(|&v| !self.adjacent(u, v)))
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let n = self.vertex_count();
        self.set_of(self.vertices().filter(|&v| self.degree(v) + 1 == n))
    }

    /// True iff the graph is `Ω * K` with `K` a clique and some component of
    /// the square graph of `Ω` covering every vertex of `Ω`.
    ///
    /// Universal vertices cannot lie on an induced 4-cycle, so `K` is taken
    /// to be all of them.
    pub fn is_cfs(&self) -> bool {
        let k = self.universal_vertices();
        let omega = self.vertex_set().difference(&k);
        if omega.is_empty() {
            return false;
        }
        let sq = self.square_graph();
        sq.components().iter().any(|comp| {
            let mut support = self.empty_set();
            for &i in comp {
                for v in sq.cycles[i].vertices() {
                    support.insert(v);
                }
            }
            support == omega
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::tests::{c4, graph};

    #[test]
    fn canonical_rotation() {
        use super::FourCycle;
        let a = FourCycle::new([3, 1, 0, 2]);
        assert_eq!(a.vertices(), [0, 1, 3, 2]);
        assert_eq!(FourCycle::new([0, 2, 3, 1]), a);
    }

    #[test]
    fn c4_and_k4() {
        let g = c4();
        let cycles = g.enumerate_induced_4cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].labels(&g), ["a", "b", "c", "d"].map(String::from));
        assert!(graph("a-b a-c a-d b-c b-d c-d").enumerate_induced_4cycles().is_empty());
        let sq = g.square_graph();
        assert_eq!(sq.cycles.len(), 1);
        assert!(sq.adjacency[0].is_empty());
    }

    #[test]
    fn k23_square_graph_is_triangle() {
        let g = graph("n-x n-y n-z s-x s-y s-z");
        let sq = g.square_graph();
        assert_eq!(sq.cycles.len(), 3);
        assert!(sq.adjacency.iter().all(|a| a.len() == 2));
        assert!(g.is_cfs());
    }

    #[test]
    fn cfs_cases() {
        assert!(c4().is_cfs());
        assert!(!graph("a-b b-c c-d d-e e-a").is_cfs());
        let cone = graph("a-b b-c c-d d-a x-a x-b x-c x-d");
        assert!(cone.is_cfs());
        assert!(!graph("a-b b-c a-c").is_cfs());
    }
}
