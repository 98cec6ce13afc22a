//! Flag complexes embedded in the 2-sphere.
//!
//! A [`PlanarComplex`] is the flag complex of a graph together with a rotation
//! system in which every 3-cycle bounds a face, so that all 2-simplices can be
//! filled. The faces left unfilled are the regions of the complement.

pub mod embedding;
pub mod enumerate;
mod flag;
mod separation;

pub use embedding::{canonical_embedding, is_three_connected, Embedding};
pub use enumerate::{enumerate_embeddings, DEFAULT_SEARCH_BUDGET, ENUMERATION_VERTEX_LIMIT};
pub use separation::{CycleInvariance, SpecialKind};

use crate::graph::{GraphError, SimplicialGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanarError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph contains a 4-clique {0:?}")]
    ContainsK4([String; 4]),
    #[error("3-cycle {0:?} cannot bound a face in any embedding")]
    TriangleNotFillable([String; 3]),
    #[error("embedding search exceeded: {vertices} vertices (limit {limit}) or search budget")]
    EmbeddingSearchExceeded { vertices: usize, limit: usize },
    #[error("{0} is not an induced 4-cycle")]
    NotInducedFourCycle(String),
    #[error("complex is not prime")]
    NotPrime,
    #[error("4-cycle {0} does not strongly separate")]
    NotStronglySeparating(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A complementary region of the embedded complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Region {
    /// Face walk as a cyclic vertex sequence.
    pub boundary: Vec<usize>,
    pub boundary_is_cycle: bool,
    pub boundary_len: usize,
}

impl Region {
    fn from_walk(boundary: Vec<usize>) -> Self {
        let mut sorted = boundary.clone();
        sorted.sort();
        sorted.dedup();
        Region { boundary_is_cycle: sorted.len() == boundary.len(), boundary_len: boundary.len(), boundary }
    }

    /// True iff the boundary is a simple cycle of length `n`.
    pub fn is_cycle_of_len(&self, n: usize) -> bool {
        self.boundary_is_cycle && self.boundary_len == n
    }
}

/// A planar flag complex with a fixed sphere embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarComplex {
    graph: SimplicialGraph,
    embedding: Embedding,
    faces: Vec<Vec<usize>>,
    triangles: Vec<[usize; 3]>,
    regions: Vec<Region>,
}

impl PlanarComplex {
    /// Builds the complex from a graph and a rotation system, checking the
    /// Euler formula and that every 3-clique bounds a face.
    pub fn from_embedding(graph: SimplicialGraph, embedding: Embedding) -> Result<Self, PlanarError> {
        if let Some(k) = graph.find_k4() {
            return Err(PlanarError::ContainsK4(k.map(|v| graph.label(v).to_string())));
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected.into());
        }
        let faces = embedding.faces(&graph);
        if graph.vertex_count() + faces.len() != graph.edge_count() + 2 {
            return Err(PlanarError::NotPlanar);
        }
        let triangles = graph.triangles();
        let mut filled = vec![false; faces.len()];
        for t in &triangles {
            let hit = (0..faces.len()).find(|&i| !filled[i] && is_triangle_face(&faces[i], t));
            match hit {
                Some(i) => filled[i] = true,
                None => {
                    return Err(PlanarError::TriangleNotFillable(t.map(|v| graph.label(v).to_string())))
                }
            }
        }
        let regions = faces
            .iter()
            .zip(&filled)
            .filter(|(_, &f)| !f)
            .map(|(w, _)| Region::from_walk(w.clone()))
            .collect();
        Ok(PlanarComplex { graph, embedding, faces, triangles, regions })
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    /// All face walks of the embedding, filled or not.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    /// True iff the complex is the whole sphere.
    pub fn is_sphere(&self) -> bool {
        self.regions.is_empty()
    }

    /// The subcomplex induced on `keep` with the restricted embedding.
    pub fn subcomplex(&self, keep: &crate::graph::VertexSet) -> Result<PlanarComplex, PlanarError> {
        let g = self.graph.induced_subgraph(keep)?;
        PlanarComplex::from_embedding(g, self.embedding.restrict(keep))
    }

    /// The same graph with a different rotation system.
    pub fn with_embedding(&self, embedding: Embedding) -> Result<PlanarComplex, PlanarError> {
        PlanarComplex::from_embedding(self.graph.clone(), embedding)
    }
}

fn is_triangle_face(walk: &[usize], t: &[usize; 3]) -> bool {
    walk.len() == 3 && t.iter().all(|v| walk.contains(v))
}

/// Builds the planar flag complex of `g`.
///
/// The canonical embedding is used when every 3-cycle already bounds a face
/// in it. Otherwise each block is re-embedded with its triangles forced to
/// be faces, and the blocks are glued at cut vertices away from triangle
/// corners.
pub fn flag_planar_complex(g: &SimplicialGraph) -> Result<PlanarComplex, PlanarError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    if let Some(k) = g.find_k4() {
        return Err(PlanarError::ContainsK4(k.map(|v| g.label(v).to_string())));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let emb = canonical_embedding(g)?;
    match PlanarComplex::from_embedding(g.clone(), emb) {
        Err(PlanarError::TriangleNotFillable(_)) => {
            PlanarComplex::from_embedding(g.clone(), flag::triangle_face_embedding(g)?)
        }
        other => other,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::tests::graph;

    pub fn octahedron() -> PlanarComplex {
        flag_planar_complex(&graph("a-b b-c c-d d-a x-a x-b x-c x-d y-a y-b y-c y-d")).unwrap()
    }

    pub fn prism() -> PlanarComplex {
        flag_planar_complex(&graph(
            "o1-o2 o2-o3 o3-o4 o4-o5 o5-o1 i1-i2 i2-i3 i3-i4 i4-i5 i5-i1 o1-i1 o2-i2 o3-i3 o4-i4 o5-i5",
        ))
        .unwrap()
    }

    #[test]
    fn octahedron_is_sphere() {
        let oct = octahedron();
        assert!(oct.is_sphere());
        assert_eq!(oct.triangles().len(), 8);
        assert_eq!(oct.faces().len(), 8);
    }

    #[test]
    fn prism_regions() {
        let p = prism();
        assert!(p.triangles().is_empty());
        assert_eq!(p.faces().len(), 7);
        assert_eq!(p.regions().len(), 7);
        assert_eq!(p.regions().iter().filter(|r| r.is_cycle_of_len(5)).count(), 2);
        assert_eq!(p.regions().iter().filter(|r| r.is_cycle_of_len(4)).count(), 5);
    }

    #[test]
    fn k5_and_k4_rejected() {
        let k5 = graph("a-b a-c a-d a-e b-c b-d b-e c-d c-e d-e");
        assert!(matches!(flag_planar_complex(&k5), Err(PlanarError::ContainsK4(_))));
        let k33 = graph("a-x a-y a-z b-x b-y b-z c-x c-y c-z");
        assert_eq!(flag_planar_complex(&k33), Err(PlanarError::NotPlanar));
    }

    #[test]
    fn separating_triangle_is_rejected() {
        // two bridges each attached to all of a, b, c must sit on opposite sides
        let g = graph("a-b b-c c-a x-a x-b x-y y-c p-a p-b p-q q-c");
        assert!(matches!(flag_planar_complex(&g), Err(PlanarError::TriangleNotFillable(_))));
    }

    #[test]
    fn separating_triangle_with_movable_bridges_is_filled() {
        // two bridges on different edges of abc can be put on the same side
        let g = graph("a-b b-c c-a a-p p-q q-b b-r r-s s-c");
        let c = flag_planar_complex(&g).unwrap();
        assert_eq!(c.triangles().len(), 1);
    }
}
