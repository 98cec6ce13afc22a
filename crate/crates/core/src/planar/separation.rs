//! Sides of induced 4-cycles, strong separation, primes and special primes.

use super::embedding::canonical_walk;
use super::{PlanarComplex, PlanarError};
use crate::graph::{FourCycle, VertexSet};
use serde::Serialize;

/// The three special prime shapes: suspensions of a 3-vertex triangle-free graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialKind {
    ThreePoints,
    EdgeAndPoint,
    PathOfLengthTwo,
}

/// Whether an induced 4-cycle strongly separates in every planar embedding
/// of the 1-skeleton, in none, or depending on the embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleInvariance {
    Always,
    Never,
    Depends,
}

impl PlanarComplex {
    fn require_induced(&self, cyc: &FourCycle) -> Result<(), PlanarError> {
        if FourCycle::is_induced_in(cyc.vertices(), self.graph()) {
            Ok(())
        } else {
            Err(PlanarError::NotInducedFourCycle(format!("{:?}", cyc.vertices())))
        }
    }

    /// Vertices of the complex lying on each side of the cycle's curve.
    pub fn cycle_sides(&self, cyc: &FourCycle) -> Result<[VertexSet; 2], PlanarError> {
        self.require_induced(cyc)?;
        let g = self.graph();
        let c = cyc.vertices();
        let mut side_of = vec![None; g.universe()];
        for i in 0..4 {
            let (v, next, prev) = (c[i], c[(i + 1) % 4], c[(i + 3) % 4]);
            let rot = self.embedding().rotation(v);
            let start = rot.iter().position(|&w| w == prev).expect("cycle edge in rotation");
            let mut side = 0;
            for k in 1..rot.len() {
                let w = rot[(start + k) % rot.len()];
                if w == next {
                    side = 1;
                    continue;
                }
                side_of[w] = Some(side);
            }
        }
        let cycle_set = cyc.to_set(g.universe());
        let rest = g.remove_vertices(&cycle_set);
        let mut sides = [g.empty_set(), g.empty_set()];
        for comp in rest.components() {
            let labels: Vec<usize> = comp
                .iter()
                .filter(|&w| !g.neighbors(w).is_disjoint(&cycle_set))
                .filter_map(|w| side_of[w])
                .collect();
            let s = labels.first().copied().unwrap_or(0);
            debug_assert!(labels.iter().all(|&x| x == s), "component on both sides of a Jordan curve");
            sides[s].union_with(&comp);
        }
        Ok(sides)
    }

    /// True iff the complex has vertices on both sides of the cycle.
    pub fn strongly_separates(&self, cyc: &FourCycle) -> Result<bool, PlanarError> {
        let [a, b] = self.cycle_sides(cyc)?;
        Ok(!a.is_empty() && !b.is_empty())
    }

    /// True iff the cycle is the boundary walk of a region.
    pub fn bounds_region(&self, cyc: &FourCycle) -> Result<bool, PlanarError> {
        self.require_induced(cyc)?;
        let v = cyc.vertices();
        let fwd = canonical_walk(&v);
        let rev = canonical_walk(&[v[3], v[2], v[1], v[0]]);
        Ok(self.regions().iter().any(|r| r.boundary == fwd || r.boundary == rev))
    }

    pub fn strongly_separating_4cycles(&self) -> Vec<FourCycle> {
        self.graph()
            .enumerate_induced_4cycles()
            .into_iter()
            .filter(|c| self.strongly_separates(c).unwrap_or(false))
            .collect()
    }

    /// Splits along a strongly separating cycle. The first piece is the one
    /// containing the least vertex off the cycle.
    pub fn strong_visual_decomposition(
        &self,
        cyc: &FourCycle,
    ) -> Result<(PlanarComplex, PlanarComplex), PlanarError> {
        let [a, b] = self.cycle_sides(cyc)?;
        if a.is_empty() || b.is_empty() {
            return Err(PlanarError::NotStronglySeparating(cyc.display(self.graph())));
        }
        let cycle_set = cyc.to_set(self.graph().universe());
        let (first, second) = if a.first() < b.first() { (a, b) } else { (b, a) };
        let p1 = self.subcomplex(&first.union(&cycle_set))?;
        let p2 = self.subcomplex(&second.union(&cycle_set))?;
        Ok((p1, p2))
    }

    /// Connected, no separating vertex or edge, not a 4-cycle but containing
    /// one, and no strongly separating induced 4-cycle.
    pub fn is_prime(&self) -> bool {
        let g = self.graph();
        if !g.is_connected() || self.has_separating_vertex_or_edge() {
            return false;
        }
        let is_square = g.vertex_count() == 4 && g.is_long_cycle();
        !is_square && g.has_induced_4cycle() && self.strongly_separating_4cycles().is_empty()
    }

    pub fn has_separating_vertex_or_edge(&self) -> bool {
        let g = self.graph();
        g.vertices().any(|v| g.separates_lenient(&g.set_of([v])))
            || g.edges().iter().any(|&(a, b)| g.separates_lenient(&g.set_of([a, b])))
    }

    /// Shape test for the three special primes (primality not checked).
    pub fn special_kind(&self) -> Option<SpecialKind> {
        let g = self.graph();
        if g.vertex_count() != 5 {
            return None;
        }
        g.suspension_forms().into_iter().find_map(|s| match g.restrict(&s.base).edge_count() {
            0 => Some(SpecialKind::ThreePoints),
            1 => Some(SpecialKind::EdgeAndPoint),
            2 => Some(SpecialKind::PathOfLengthTwo),
            _ => None,
        })
    }

    pub fn is_special_prime(&self) -> Result<bool, PlanarError> {
        if !self.is_prime() {
            return Err(PlanarError::NotPrime);
        }
        Ok(self.special_kind().is_some())
    }

    /// Classifies each induced 4-cycle by whether its strong separation
    /// depends on the embedding, using bridge overlaps: two bridges of the
    /// cycle are forced to opposite sides exactly when they overlap.
    pub fn strong_separation_invariance(&self) -> Vec<(FourCycle, CycleInvariance)> {
        let g = self.graph();
        g.enumerate_induced_4cycles()
            .into_iter()
            .map(|cyc| {
                let c = cyc.vertices();
                let cycle_set = cyc.to_set(g.universe());
                let attachments: Vec<[bool; 4]> = g
                    .remove_vertices(&cycle_set)
                    .components()
                    .iter()
                    .map(|comp| {
                        let mut at = [false; 4];
                        for w in comp.iter() {
                            for (i, &ci) in c.iter().enumerate() {
                                at[i] |= g.adjacent(w, ci);
                            }
                        }
                        at
                    })
                    .collect();
                let verdict = if attachments.len() <= 1 {
                    CycleInvariance::Never
                } else if attachments
                    .iter()
                    .enumerate()
                    .any(|(i, x)| attachments[i + 1..].iter().any(|y| bridges_overlap(x, y)))
                {
                    CycleInvariance::Always
                } else {
                    CycleInvariance::Depends
                };
                (cyc, verdict)
            })
            .collect()
    }
}

/// Bridges of a 4-cycle overlap when they share three attachment vertices or
/// have interleaving attachment pairs.
fn bridges_overlap(x: &[bool; 4], y: &[bool; 4]) -> bool {
    let common = (0..4).filter(|&i| x[i] && y[i]).count();
    // on a 4-cycle the only interleaving pattern is opposite corners against
    // the other opposite corners
    let skew = |p: &[bool; 4], q: &[bool; 4]| p[0] && p[2] && q[1] && q[3];
    common >= 3 || skew(x, y) || skew(y, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph;
    use crate::planar::flag_planar_complex;
    use crate::planar::tests::{octahedron, prism};

    #[test]
    fn octahedron_all_squares_strongly_separate() {
        let oct = octahedron();
        assert_eq!(oct.strongly_separating_4cycles().len(), 3);
        assert!(oct.strong_separation_invariance().iter().all(|(_, v)| *v == CycleInvariance::Always));
    }

    #[test]
    fn prism_is_prime_and_not_special() {
        let p = prism();
        assert!(p.strongly_separating_4cycles().is_empty());
        assert!(p.is_prime());
        assert_eq!(p.is_special_prime(), Ok(false));
        let sq = p.graph().enumerate_induced_4cycles()[0];
        assert!(matches!(p.strong_visual_decomposition(&sq), Err(PlanarError::NotStronglySeparating(_))));
        assert!(p.bounds_region(&sq).unwrap());
    }

    #[test]
    fn c4_bounds_region_on_both_sides() {
        let c = flag_planar_complex(&graph("a-b b-c c-d d-a")).unwrap();
        let sq = c.graph().enumerate_induced_4cycles()[0];
        assert!(c.bounds_region(&sq).unwrap());
        assert!(!c.strongly_separates(&sq).unwrap());
        assert!(!c.is_prime());
    }

    #[test]
    fn special_shapes() {
        let k23 = flag_planar_complex(&graph("n-x n-y n-z s-x s-y s-z")).unwrap();
        assert_eq!(k23.special_kind(), Some(SpecialKind::ThreePoints));
        assert_eq!(k23.is_special_prime(), Ok(true));
        let ep = flag_planar_complex(&graph("n-a n-c n-e s-a s-c s-e a-c")).unwrap();
        assert_eq!(ep.special_kind(), Some(SpecialKind::EdgeAndPoint));
        assert_eq!(ep.is_special_prime(), Ok(true));
        let p3 = flag_planar_complex(&graph("n-a n-c n-e s-a s-c s-e a-c c-e")).unwrap();
        assert_eq!(p3.special_kind(), Some(SpecialKind::PathOfLengthTwo));
        assert_eq!(p3.is_special_prime(), Ok(true));
    }

    #[test]
    fn k24_split_depends_on_embedding() {
        let g = graph("n-a n-b n-c n-d s-a s-b s-c s-d");
        let c = flag_planar_complex(&g).unwrap();
        let inv = c.strong_separation_invariance();
        assert!(inv.iter().all(|(_, v)| *v == CycleInvariance::Depends));
        let ss = c.strongly_separating_4cycles();
        assert_eq!(ss.len(), 2);
        let (p1, p2) = c.strong_visual_decomposition(&ss[0]).unwrap();
        assert_eq!((p1.graph().vertex_count(), p2.graph().vertex_count()), (5, 5));
    }
}
