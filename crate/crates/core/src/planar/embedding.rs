//! Rotation systems, face tracing and the canonical planar embedding.
//!
//! Faces are traced with the rule: the dart after `x -> y` is
//! `y -> succ_y(x)`, where `succ_y(x)` follows `x` in the cyclic order at `y`.
//! A face is recorded as the sequence of dart tails, rotated to its
//! lexicographically least starting point.

use super::PlanarError;
use crate::graph::{SimplicialGraph, VertexSet};
use std::collections::{HashMap, HashSet};

/// A rotation system: the cyclic order of neighbors around each vertex.
///
/// Indexed by the graph's label universe. Each cyclic order starts at the
/// least neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn from_rotation(mut rotation: Vec<Vec<usize>>) -> Self {
        for r in &mut rotation {
            canonical_start(r);
        }
        Embedding { rotation }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// The neighbor after `u` in the cyclic order at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = r.iter().position(|&x| x == u).expect("dart not in rotation");
        r[(i + 1) % r.len()]
    }

    /// Mirror image: every cyclic order reversed.
    pub fn reflect(&self) -> Self {
        Embedding::from_rotation(
            self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect(),
        )
    }

    /// Restriction to an induced subgraph: drops every neighbor outside `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Self {
        Embedding::from_rotation(
            self.rotation
                .iter()
                .enumerate()
                .map(|(v, r)| {
                    if keep.contains(v) {
                        r.iter().copied().filter(|&w| keep.contains(w)).collect()
                    } else {
                        Vec::new()
                    }
                })
                .collect(),
        )
    }

    /// Traces all faces of the embedded graph `g`, sorted.
    pub fn faces(&self, g: &SimplicialGraph) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        for v in g.vertices() {
            if self.rotation[v].is_empty() {
                out.push(vec![v]);
            }
        }
        for (a, b) in g.edges() {
            for start in [(a, b), (b, a)] {
                if seen.contains(&start) {
                    continue;
                }
                let mut walk = Vec::new();
                let mut dart = start;
                loop {
                    seen.insert(dart);
                    walk.push(dart.0);
                    dart = (dart.1, self.succ(dart.1, dart.0));
                    if dart == start {
                        break;
                    }
                }
                out.push(canonical_walk(&walk));
            }
        }
        out.sort();
        out
    }

    /// Rotation restricted to present vertices, as label lists.
    pub fn labelled(&self, g: &SimplicialGraph) -> Vec<(String, Vec<String>)> {
        g.vertices()
            .map(|v| {
                (g.label(v).to_string(), self.rotation[v].iter().map(|&w| g.label(w).to_string()).collect())
            })
            .collect()
    }
}

fn canonical_start(r: &mut [usize]) {
    if let Some(i) = (0..r.len()).min_by_key(|&i| r[i]) {
        r.rotate_left(i);
    }
}

/// Rotates a cyclic walk to its lexicographically least rotation.
pub fn canonical_walk(walk: &[usize]) -> Vec<usize> {
    let n = walk.len();
    (0..n)
        .map(|i| walk[i..].iter().chain(&walk[..i]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Computes a deterministic planar embedding of a connected graph.
///
/// Each biconnected block is embedded by path addition: start from a cycle,
/// then repeatedly embed a path of some bridge into a face that contains all
/// of the bridge's attachment vertices, preferring bridges with a single such
/// face. At cut vertices the block rotations are concatenated.
pub fn canonical_embedding(g: &SimplicialGraph) -> Result<Embedding, PlanarError> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Err(PlanarError::NotPlanar);
    }
    let mut rotation = vec![Vec::new(); g.universe()];
    for block in blocks(g) {
        let sub = g.restrict(&block);
        let block_rot = if sub.edge_count() == 1 {
            let (a, b) = sub.edges()[0];
            let mut r = vec![Vec::new(); g.universe()];
            r[a].push(b);
            r[b].push(a);
            r
        } else {
            embed_biconnected(&sub)?
        };
        for v in block.iter() {
            let mut r = block_rot[v].clone();
            canonical_start(&mut r);
            rotation[v].extend(r);
        }
    }
    Ok(Embedding { rotation: rotation.into_iter().map(|mut r| { canonical_start(&mut r); r }).collect() })
}

/// Vertex sets of the biconnected blocks, in order of discovery from the
/// least vertex. Isolated vertices form no block.
pub fn blocks(g: &SimplicialGraph) -> Vec<VertexSet> {
    struct State<'a> {
        g: &'a SimplicialGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<VertexSet>,
    }
    fn dfs(st: &mut State, v: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[v] = st.time;
        st.low[v] = st.time;
        let nbrs: Vec<usize> = st.g.neighbors(v).iter().collect();
        for w in nbrs {
            if Some(w) == parent {
                continue;
            }
            if st.disc[w] == 0 {
                st.stack.push((v, w));
                dfs(st, w, Some(v));
                st.low[v] = st.low[v].min(st.low[w]);
                if st.low[w] >= st.disc[v] {
                    let mut block = st.g.empty_set();
                    while let Some((a, b)) = st.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if st.disc[w] < st.disc[v] {
                st.stack.push((v, w));
                st.low[v] = st.low[v].min(st.disc[w]);
            }
        }
    }
    let mut st = State {
        g,
        disc: vec![0; g.universe()],
        low: vec![0; g.universe()],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in g.vertices() {
        if st.disc[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.out
}

struct Fragment {
    contacts: Vec<usize>,
    /// Empty for a single-edge fragment.
    inner: VertexSet,
}

fn embed_biconnected(h: &SimplicialGraph) -> Result<Vec<Vec<usize>>, PlanarError> {
    let u = h.vertices().next().expect("non-empty block");
    let w = h.neighbors(u).first().expect("block vertex has a neighbor");
    // shortest w..u path avoiding the edge u-w closes the first cycle
    let mut others = h.vertex_set().clone();
    others.remove(u);
    let without_edge = {
        let mut s = h.clone();
        s.remove_edge(u, w);
        s
    };
    let path = without_edge
        .shortest_path(w, &h.set_of([u]), &others)
        .ok_or(PlanarError::NotPlanar)?;
    let cycle: Vec<usize> = path.clone();
    let mut embedded_v = h.set_of(cycle.iter().copied());
    let mut embedded_e: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_e.insert((a.min(b), a.max(b)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let total = h.edge_count();

    while embedded_e.len() < total {
        let mut fragments = Vec::new();
        for (a, b) in h.edges() {
            if embedded_v.contains(a) && embedded_v.contains(b) && !embedded_e.contains(&(a, b)) {
                fragments.push(Fragment { contacts: vec![a, b], inner: h.empty_set() });
            }
        }
        let rest = h.remove_vertices(&embedded_v);
        for comp in rest.components() {
            let mut contacts = h.empty_set();
            for v in comp.iter() {
                contacts.union_with(&h.neighbors(v).intersection(&embedded_v));
            }
            fragments.push(Fragment { contacts: contacts.to_vec(), inner: comp });
        }
        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|f| {
                (0..faces.len())
                    .filter(|&i| f.contacts.iter().all(|c| faces[i].contains(c)))
                    .collect()
            })
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return Err(PlanarError::NotPlanar);
        }
        let pick = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let face_idx = admissible[pick][0];
        let frag = &fragments[pick];
        let path = fragment_path(h, frag);
        for &v in &path {
            embedded_v.insert(v);
        }
        for win in path.windows(2) {
            embedded_e.insert((win[0].min(win[1]), win[0].max(win[1])));
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    rotation_from_faces(h, &faces)
}

/// A path through the fragment between its least contact and another contact.
fn fragment_path(h: &SimplicialGraph, frag: &Fragment) -> Vec<usize> {
    if frag.inner.is_empty() {
        return frag.contacts.clone();
    }
    let start = frag.contacts[0];
    let targets = h.set_of(frag.contacts[1..].iter().copied());
    // search from the start contact through inner vertices only
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for x in h.neighbors(start).intersection(&frag.inner).iter() {
        prev.insert(x, start);
        queue.push_back(x);
    }
    while let Some(v) = queue.pop_front() {
        if let Some(t) = h.neighbors(v).intersection(&targets).first() {
            let mut path = vec![t, v];
            let mut cur = v;
            while let Some(&p) = prev.get(&cur) {
                path.push(p);
                if p == start {
                    break;
                }
                cur = p;
            }
            path.reverse();
            return path;
        }
        for x in h.neighbors(v).intersection(&frag.inner).iter() {
            if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(x) {
                e.insert(v);
                queue.push_back(x);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two contacts")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = face.len();
    let (p0, pr) = (path[0], path[path.len() - 1]);
    let i = face.iter().position(|&x| x == p0).expect("contact on face");
    let j = face.iter().position(|&x| x == pr).expect("contact on face");
    let interior = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut k = i;
    loop {
        f1.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % m;
    }
    f1.extend(interior.iter().rev());
    let mut f2 = Vec::new();
    let mut k = j;
    loop {
        f2.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % m;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

fn rotation_from_faces(h: &SimplicialGraph, faces: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, PlanarError> {
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for f in faces {
        let m = f.len();
        for i in 0..m {
            let (x, y, z) = (f[(i + m - 1) % m], f[i], f[(i + 1) % m]);
            succ.insert((y, x), z);
        }
    }
    let mut rotation = vec![Vec::new(); h.universe()];
    for y in h.vertices() {
        let first = h.neighbors(y).first().expect("block vertex has neighbors");
        let mut r = vec![first];
        let mut cur = first;
        loop {
            cur = *succ.get(&(y, cur)).ok_or(PlanarError::NotPlanar)?;
            if cur == first {
                break;
            }
            r.push(cur);
            if r.len() > h.degree(y) {
                return Err(PlanarError::NotPlanar);
            }
        }
        if r.len() != h.degree(y) {
            return Err(PlanarError::NotPlanar);
        }
        rotation[y] = r;
    }
    Ok(rotation)
}

/// True iff the graph stays connected after deleting any two vertices.
pub fn is_three_connected(g: &SimplicialGraph) -> bool {
    let n = g.vertex_count();
    if n < 4 || !g.is_connected() {
        return false;
    }
    let vs: Vec<usize> = g.vertices().collect();
    for (i, &a) in vs.iter().enumerate() {
        if g.separates_lenient(&g.set_of([a])) {
            return false;
        }
        for &b in &vs[i + 1..] {
            if g.separates_lenient(&g.set_of([a, b])) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph;

    fn euler_ok(g: &SimplicialGraph) -> bool {
        let e = canonical_embedding(g).unwrap();
        let f = e.faces(g).len();
        g.vertex_count() + f == g.edge_count() + 2
    }

    #[test]
    fn embeds_small_planar_graphs() {
        assert!(euler_ok(&graph("a-b b-c c-d d-a")));
        assert!(euler_ok(&graph("a-b b-c c-d d-a x-a x-b x-c x-d y-a y-b y-c y-d")));
        assert!(euler_ok(&graph("a-b b-c c-a c-d d-e e-c")));
        assert!(euler_ok(&graph("a-b b-c c-d")));
        // cube
        assert!(euler_ok(&graph("a-b b-c c-d d-a e-f f-g g-h h-e a-e b-f c-g d-h")));
    }

    #[test]
    fn rejects_k5_and_k33() {
        let k5 = graph("a-b a-c a-d a-e b-c b-d b-e c-d c-e d-e");
        assert_eq!(canonical_embedding(&k5), Err(PlanarError::NotPlanar));
        let k33 = graph("a-x a-y a-z b-x b-y b-z c-x c-y c-z");
        assert_eq!(canonical_embedding(&k33), Err(PlanarError::NotPlanar));
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = graph("a-b b-c c-a c-d d-e e-c");
        assert_eq!(blocks(&g).len(), 2);
        assert!(!is_three_connected(&g));
        let k4 = graph("a-b a-c a-d b-c b-d c-d");
        assert!(is_three_connected(&k4));
    }
}
