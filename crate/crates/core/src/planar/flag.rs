//! Embeddings in which every 3-cycle bounds a face.
//!
//! Each block is embedded through an auxiliary graph: every edge is
//! subdivided and every triangle gets a hub joined to its three corners and
//! three subdivision vertices. The hub and its six neighbors form a wheel,
//! which has only one embedding up to reflection, so the triangle's side
//! containing the hub holds nothing else. Dropping the added vertices leaves
//! an embedding of the block with all its triangles as faces.
//!
//! Blocks are then glued at cut vertices. A block can be inserted at `v`
//! only through an angle that is not the corner of a triangle face, and the
//! number of such angles at `v` is `deg(v)` minus the number of triangles at
//! `v`, whatever the block embedding.

use super::embedding::{blocks, canonical_embedding, Embedding};
use super::PlanarError;
use crate::graph::SimplicialGraph;
use std::collections::{HashMap, HashSet};

/// A block rotation together with its triangle corners.
struct BlockRotation {
    rotation: HashMap<usize, Vec<usize>>,
    /// `(v, u)`: the angle at `v` from `u` to its successor is a triangle face.
    corners: HashSet<(usize, usize)>,
}

fn triangle_labels(g: &SimplicialGraph, t: [usize; 3]) -> PlanarError {
    PlanarError::TriangleNotFillable(t.map(|v| g.label(v).to_string()))
}

fn embed_block(g: &SimplicialGraph, sub: &SimplicialGraph) -> Result<BlockRotation, PlanarError> {
    let edges = sub.edges();
    if edges.len() == 1 {
        let (a, b) = edges[0];
        return Ok(BlockRotation {
            rotation: HashMap::from([(a, vec![b]), (b, vec![a])]),
            corners: HashSet::new(),
        });
    }
    let triangles = sub.triangles();
    let vname = |v: usize| format!("v{v:05}");
    let mname = |a: usize, b: usize| format!("m{:05}_{:05}", a.min(b), a.max(b));
    let mut aux_edges = Vec::new();
    for &(a, b) in &edges {
        aux_edges.push((vname(a), mname(a, b)));
        aux_edges.push((mname(a, b), vname(b)));
    }
    for (i, &[a, b, c]) in triangles.iter().enumerate() {
        let hub = format!("t{i:05}");
        for x in [vname(a), vname(b), vname(c), mname(a, b), mname(b, c), mname(a, c)] {
            aux_edges.push((hub.clone(), x));
        }
    }
    let aux = SimplicialGraph::from_edges(&aux_edges).expect("auxiliary labels are well formed");
    let emb = match canonical_embedding(&aux) {
        Ok(e) => e,
        Err(PlanarError::NotPlanar) => return Err(triangle_labels(g, triangles[0])),
        Err(e) => return Err(e),
    };
    let mut rotation = HashMap::new();
    for v in sub.vertices() {
        let av = aux.index_of(&vname(v)).expect("block vertex in auxiliary graph");
        let r: Vec<usize> = emb
            .rotation(av)
            .iter()
            .filter_map(|&x| {
                let l = aux.label(x);
                l.strip_prefix('m').map(|rest| {
                    let (a, b) = rest.split_once('_').expect("subdivision label");
                    let (a, b): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
                    if a == v {
                        b
                    } else {
                        a
                    }
                })
            })
            .collect();
        rotation.insert(v, r);
    }

    let mut full = vec![Vec::new(); g.universe()];
    for (&v, r) in &rotation {
        full[v] = r.clone();
    }
    let block_emb = Embedding::from_rotation(full);
    let mut corners = HashSet::new();
    let mut filled: HashSet<[usize; 3]> = HashSet::new();
    for face in block_emb.faces(sub) {
        if face.len() != 3 {
            continue;
        }
        let mut key = [face[0], face[1], face[2]];
        key.sort_unstable();
        if !filled.insert(key) {
            continue;
        }
        // The face walk x -> y -> z uses the angle (x, succ_y(x)) at y.
        for i in 0..3 {
            corners.insert((face[(i + 1) % 3], face[i]));
        }
    }
    if filled.len() != triangles.len() {
        let t = triangles.iter().find(|t| !filled.contains(*t)).copied().unwrap_or(triangles[0]);
        return Err(triangle_labels(g, t));
    }
    Ok(BlockRotation { rotation, corners })
}

fn free_angle(rotation: &[usize], v: usize, corners: &HashSet<(usize, usize)>) -> Option<usize> {
    (0..rotation.len()).find(|&i| !corners.contains(&(v, rotation[i])))
}

/// An embedding of the connected K4-free graph `g` in which every triangle
/// bounds a face, or the first obstruction found.
pub(crate) fn triangle_face_embedding(g: &SimplicialGraph) -> Result<Embedding, PlanarError> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.universe()];
    let mut corners: HashSet<(usize, usize)> = HashSet::new();
    for block in blocks(g) {
        let sub = g.restrict(&block);
        let br = embed_block(g, &sub)?;
        for v in block.iter() {
            let r = &br.rotation[&v];
            if rotation[v].is_empty() {
                rotation[v] = r.clone();
                continue;
            }
            let stuck = || {
                let t = g.triangles().into_iter().find(|t| t.contains(&v)).expect("a full angle lies in a triangle");
                triangle_labels(g, t)
            };
            let i = free_angle(&rotation[v], v, &corners).ok_or_else(stuck)?;
            let j = free_angle(r, v, &br.corners).ok_or_else(stuck)?;
            // Block order from q = succ(p) around to p, placed after u.
            let inserted: Vec<usize> = (1..=r.len()).map(|k| r[(j + k) % r.len()]).collect();
            rotation[v].splice(i + 1..i + 1, inserted);
        }
        corners.extend(br.corners);
    }
    Ok(Embedding::from_rotation(rotation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph;
    use crate::planar::PlanarComplex;

    fn complex(edges: &str) -> Result<PlanarComplex, PlanarError> {
        let g = graph(edges);
        let e = triangle_face_embedding(&g)?;
        PlanarComplex::from_embedding(g, e)
    }

    #[test]
    fn octahedron_has_all_triangles_as_faces() {
        let c = complex("a-b b-c c-d d-a x-a x-b x-c x-d y-a y-b y-c y-d").unwrap();
        assert!(c.is_sphere());
    }

    #[test]
    fn triangles_sharing_a_cut_vertex_leave_one_region() {
        let c = complex("a-b b-c c-a c-d d-e e-c").unwrap();
        assert_eq!(c.triangles().len(), 2);
        assert_eq!(c.regions().len(), 1);
    }

    #[test]
    fn adjacent_triangles_and_squares() {
        let c = complex("a-b b-c c-a a-p p-b c-q q-r r-a b-s s-t t-c").unwrap();
        assert_eq!(c.triangles().len(), 2);
    }

    #[test]
    fn cut_vertex_surrounded_by_triangles_is_rejected() {
        // Every angle at a in the octahedron is a triangle corner.
        let r = complex("a-b b-c c-d d-a x-a x-b x-c x-d y-a y-b y-c y-d a-z");
        assert!(matches!(r, Err(PlanarError::TriangleNotFillable(_))));
    }
}
