//! Shared generators and brute-force oracles for the integration tests.
//!
//! The oracles here deliberately avoid the library's own algorithms: they
//! work from adjacency alone, by exhaustive enumeration.

#![allow(dead_code)]

use itertools::Itertools;
use racg::bisim::TwoColoredGraph;
use racg::{flag_planar_complex, Color, PlanarComplex, SimplicialGraph};
use rand::Rng;
use std::collections::{BTreeSet, HashSet};

pub fn label(i: usize) -> String {
    format!("x{i:02}")
}

/// Graph on vertices `x00..` with the given edges; ids equal indices.
pub fn graph_from(n: usize, edges: &[(usize, usize)]) -> SimplicialGraph {
    let labels: Vec<String> = (0..n).map(label).collect();
    let e: Vec<(String, String)> = edges.iter().map(|&(a, b)| (label(a), label(b))).collect();
    SimplicialGraph::build(&labels, &e).expect("valid graph")
}

/// Adjacency matrix of a graph, indexed by position in its vertex list.
pub fn matrix(g: &SimplicialGraph) -> (Vec<usize>, Vec<Vec<bool>>) {
    let vs: Vec<usize> = g.vertices().collect();
    let m = vs.iter().map(|&a| vs.iter().map(|&b| a != b && g.adjacent(a, b)).collect()).collect();
    (vs, m)
}

pub fn random_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimplicialGraph {
    let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    graph_from(n, &edges)
}

#[derive(Clone, Copy, Debug)]
pub enum Style {
    /// Vertices attached to two or three face vertices, and random chords.
    General,
    /// Mostly degree-two vertices across 4-faces, giving square-rich
    /// complexes; occasional chords and triangles.
    Squares,
}

/// Grows a planar graph by splitting faces of a combinatorial embedding,
/// so the result is planar by construction. Faces are kept as simple cycles.
pub fn random_planar_edges<R: Rng>(rng: &mut R, n: usize, style: Style) -> Vec<(usize, usize)> {
    let start = match style {
        Style::General => rng.gen_range(3..=5.min(n.max(3))),
        Style::Squares => 4.min(n.max(3)),
    };
    let mut faces: Vec<Vec<usize>> = vec![(0..start).collect(), (0..start).rev().collect()];
    let mut edges: BTreeSet<(usize, usize)> = (0..start).map(|i| ordered(i, (i + 1) % start)).collect();
    let mut count = start;
    let chords = match style {
        Style::General => rng.gen_range(0..=n / 2),
        Style::Squares => rng.gen_range(0..=2),
    };
    let mut chords_left = chords;
    let mut guard = 0;
    while (count < n || chords_left > 0) && guard < 10_000 {
        guard += 1;
        let add_vertex = count < n && (chords_left == 0 || rng.gen_bool(0.75));
        let fi = rng.gen_range(0..faces.len());
        let f = faces[fi].clone();
        let len = f.len();
        if add_vertex {
            let picks: Vec<usize> = match style {
                Style::Squares if len >= 4 && rng.gen_bool(0.9) => {
                    let i = rng.gen_range(0..len);
                    let j = (i + rng.gen_range(2..=len - 2)) % len;
                    let mut p = vec![i, j];
                    p.sort();
                    p
                }
                _ => {
                    // three corners of a triangular face would span a K4
                    let k = if len == 3 { 2 } else { rng.gen_range(2..=3) };
                    let mut p: Vec<usize> = rand::seq::index::sample(rng, len, k).into_vec();
                    p.sort();
                    p
                }
            };
            let x = count;
            count += 1;
            for &p in &picks {
                edges.insert(ordered(x, f[p]));
            }
            faces.swap_remove(fi);
            for (j, &p) in picks.iter().enumerate() {
                let q = picks[(j + 1) % picks.len()];
                let mut face = vec![x];
                let mut i = p;
                loop {
                    face.push(f[i]);
                    if i == q {
                        break;
                    }
                    i = (i + 1) % len;
                }
                faces.push(face);
            }
        } else {
            if len < 4 {
                continue;
            }
            let i = rng.gen_range(0..len);
            let j = (i + rng.gen_range(2..=len - 2)) % len;
            let (i, j) = (i.min(j), i.max(j));
            if edges.contains(&ordered(f[i], f[j])) {
                continue;
            }
            edges.insert(ordered(f[i], f[j]));
            faces.swap_remove(fi);
            faces.push(f[i..=j].to_vec());
            faces.push(f[j..].iter().chain(&f[..=i]).copied().collect());
            chords_left -= 1;
        }
    }
    edges.into_iter().collect()
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// A random planar flag complex with `n` vertices, retrying until the
/// generated graph is a flag complex with a sphere embedding.
pub fn random_planar_complex<R: Rng>(rng: &mut R, n: usize, style: Style) -> PlanarComplex {
    loop {
        let edges = random_planar_edges(rng, n, style);
        if let Ok(d) = flag_planar_complex(&graph_from(n, &edges)) {
            return d;
        }
    }
}

/// Vertex sets of induced 4-cycles, from all 4-subsets: a 4-set spans an
/// induced 4-cycle iff its induced subgraph is 2-regular.
pub fn squares_oracle(g: &SimplicialGraph) -> BTreeSet<Vec<usize>> {
    let vs: Vec<usize> = g.vertices().collect();
    vs.iter()
        .copied()
        .combinations(4)
        .filter(|s| s.iter().all(|&a| s.iter().filter(|&&b| b != a && g.adjacent(a, b)).count() == 2))
        .collect()
}

/// Connected components of the graph with `removed` deleted, by
/// union-find over the adjacency matrix.
pub fn components_oracle(g: &SimplicialGraph, removed: &[usize]) -> usize {
    let vs: Vec<usize> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let mut parent: Vec<usize> = (0..vs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, j) in (0..vs.len()).tuple_combinations() {
        if g.adjacent(vs[i], vs[j]) {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    (0..vs.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// True iff some bipartition `A | B` has every `A`-`B` edge and neither
/// side complete (a graph has diameter at most one iff it is complete).
pub fn join_of_two_diam_ge2_oracle(g: &SimplicialGraph) -> bool {
    let vs: Vec<usize> = g.vertices().collect();
    let n = vs.len();
    if n < 4 {
        return false;
    }
    let complete = |s: &[usize]| s.iter().tuple_combinations().all(|(&a, &b)| g.adjacent(a, b));
    (1u32..(1 << (n - 1))).any(|mask| {
        let (a, b): (Vec<usize>, Vec<usize>) = vs.iter().enumerate().partition_map(|(i, &v)| {
            if mask >> i & 1 == 1 {
                itertools::Either::Left(v)
            } else {
                itertools::Either::Right(v)
            }
        });
        a.iter().all(|&x| b.iter().all(|&y| g.adjacent(x, y))) && !complete(&a) && !complete(&b)
    })
}

/// True iff the vertex set splits as a join of two non-empty parts.
pub fn is_join_oracle(g: &SimplicialGraph) -> bool {
    let vs: Vec<usize> = g.vertices().collect();
    let n = vs.len();
    n >= 2
        && (1u32..(1 << (n - 1))).any(|mask| {
            let side = |i: usize| mask >> i & 1 == 1;
            (0..n).tuple_combinations().all(|(i, j)| side(i) == side(j) || g.adjacent(vs[i], vs[j]))
        })
}

/// Constructed from squares, from the brute-force square list: the vertices
/// adjacent to everything form the clique factor, and some class of squares
/// connected by shared diagonals covers the rest.
pub fn cfs_oracle(g: &SimplicialGraph) -> bool {
    let vs: Vec<usize> = g.vertices().collect();
    let universal: Vec<usize> = vs.iter().copied().filter(|&v| vs.iter().all(|&w| w == v || g.adjacent(v, w))).collect();
    let omega: BTreeSet<usize> = vs.iter().copied().filter(|v| !universal.contains(v)).collect();
    if omega.is_empty() {
        return false;
    }
    let sq: Vec<Vec<usize>> = squares_oracle(g).into_iter().collect();
    let diagonals = |s: &[usize]| -> Vec<(usize, usize)> {
        s.iter().copied().tuple_combinations().filter(|&(a, b)| !g.adjacent(a, b)).collect()
    };
    let mut seen = vec![false; sq.len()];
    for start in 0..sq.len() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut cover = BTreeSet::new();
        while let Some(i) = stack.pop() {
            cover.extend(sq[i].iter().copied());
            let di = diagonals(&sq[i]);
            for j in 0..sq.len() {
                if !seen[j] && diagonals(&sq[j]).iter().any(|d| di.contains(d)) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if cover == omega {
            return true;
        }
    }
    false
}

/// Every non-empty `S` inside the member whose removal disconnects `g`.
pub fn member_has_separating_subset(g: &SimplicialGraph, member: &[usize]) -> bool {
    (1..=member.len()).any(|k| member.iter().copied().combinations(k).any(|s| components_oracle(g, &s) >= 2))
}

/// Canonical form of a colored graph with loops, minimizing the encoding
/// over all vertex permutations.
pub fn colored_canonical(g: &TwoColoredGraph) -> (Vec<bool>, Vec<bool>) {
    let n = g.len();
    (0..n)
        .permutations(n)
        .map(|p| {
            let colors: Vec<bool> = p.iter().map(|&v| g.colors[v] == Color::Black).collect();
            let adj: Vec<bool> =
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| g.adjacent(p[i], p[j])).collect();
            (colors, adj)
        })
        .min()
        .unwrap_or_default()
}

/// All set partitions of `0..n`, as block indices per element.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            go(n, cur, blocks.max(b + 1), out);
            cur.pop();
        }
    }
    go(n, &mut cur, 0, &mut out);
    out
}

/// Canonical forms of every colored graph that `g` weakly covers through
/// the quotient by some vertex partition. A weak covering onto a connected
/// graph is onto and its target is the quotient by its fibres, so this is
/// every possible target up to isomorphism.
pub fn weakly_covered_targets(g: &TwoColoredGraph) -> HashSet<(Vec<bool>, Vec<bool>)> {
    let n = g.len();
    let mut out = HashSet::new();
    for part in set_partitions(n) {
        let k = part.iter().max().map_or(0, |m| m + 1);
        let mut colors = vec![None; k];
        let mut ok = true;
        for v in 0..n {
            match colors[part[v]] {
                None => colors[part[v]] = Some(g.colors[v]),
                Some(c) if c != g.colors[v] => ok = false,
                _ => {}
            }
        }
        if !ok {
            continue;
        }
        let mut qedges = BTreeSet::new();
        for v in 0..n {
            for &w in g.neighbors(v) {
                qedges.insert(ordered(part[v], part[w]));
            }
        }
        // edge lifting at every vertex
        let lifts = (0..n).all(|v| {
            let images: BTreeSet<usize> = g.neighbors(v).iter().map(|&w| part[w]).collect();
            (0..k).all(|b| !qedges.contains(&ordered(part[v], b)) || images.contains(&b))
        });
        if !lifts {
            continue;
        }
        let q = TwoColoredGraph::unnamed(
            colors.into_iter().map(|c| c.expect("every block is non-empty")).collect(),
            &qedges.into_iter().collect::<Vec<_>>(),
        )
        .expect("quotient edges in range");
        out.insert(colored_canonical(&q));
    }
    out
}

pub fn common_weak_cover_oracle(a: &TwoColoredGraph, b: &TwoColoredGraph) -> bool {
    let ta = weakly_covered_targets(a);
    weakly_covered_targets(b).iter().any(|t| ta.contains(t))
}

/// Every tree on `1..=max_n` vertices up to isomorphism, as edge lists,
/// from Prüfer sequences.
pub fn trees_up_to_iso(max_n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = vec![(1, vec![])];
    if max_n >= 2 {
        out.push((2, vec![(0, 1)]));
    }
    for n in 3..=max_n {
        let mut seen = HashSet::new();
        for seq in (0..n - 2).map(|_| 0..n).multi_cartesian_product() {
            let edges = prufer_decode(n, &seq);
            let t = TwoColoredGraph::unnamed(vec![Color::White; n], &edges).expect("tree");
            if seen.insert(colored_canonical(&t)) {
                out.push((n, edges));
            }
        }
    }
    out
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push(ordered(leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push(ordered(last[0], last[1]));
    edges
}

/// Every 2-coloring of every tree with at most `max_n` vertices, up to
/// isomorphism of colored trees.
pub fn colored_trees_up_to_iso(max_n: usize) -> Vec<TwoColoredGraph> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (n, edges) in trees_up_to_iso(max_n) {
        for mask in 0u32..(1 << n) {
            let colors = (0..n).map(|i| if mask >> i & 1 == 1 { Color::Black } else { Color::White }).collect();
            let t = TwoColoredGraph::unnamed(colors, &edges).expect("tree");
            if seen.insert(colored_canonical(&t)) {
                out.push(t);
            }
        }
    }
    out
}

/// A random connected colored graph on `n` vertices: a random spanning tree
/// plus extra edges, optionally with loops.
pub fn random_colored<R: Rng>(rng: &mut R, n: usize, extra: f64, loops: bool) -> TwoColoredGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for (a, b) in (0..n).tuple_combinations() {
        if rng.gen_bool(extra) {
            edges.push((a, b));
        }
    }
    if loops {
        for v in 0..n {
            if rng.gen_bool(0.15) {
                edges.push((v, v));
            }
        }
    }
    let colors = (0..n).map(|_| if rng.gen_bool(0.5) { Color::Black } else { Color::White }).collect();
    TwoColoredGraph::unnamed(colors, &edges).expect("edges in range")
}

/// Connected planar flag complexes with at most `max_n` vertices, one per
/// isomorphism class of 1-skeleton. Grown one vertex at a time: every
/// connected graph has a vertex whose removal keeps it connected, and
/// planar flag complexes are closed under taking connected full subcomplexes.
pub fn all_planar_flag_complexes(max_n: usize) -> Vec<PlanarComplex> {
    let mut level: Vec<(usize, Vec<(usize, usize)>)> = vec![(1, vec![])];
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, edges) in &level {
            for mask in 1u32..(1 << (n - 1)) {
                let mut e = edges.clone();
                e.extend((0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                let g = graph_from(n, &e);
                if g.find_k4().is_some() || !seen.insert(graph_canonical(n, &e)) {
                    continue;
                }
                if let Ok(delta) = flag_planar_complex(&g) {
                    next.push((n, e));
                    out.push(delta);
                }
            }
        }
        level = next;
    }
    out
}

/// Canonical adjacency string under color refinement: vertices are first
/// split into cells by iterated neighbourhood signatures, then only
/// permutations respecting the cell order are tried.
pub fn graph_canonical(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut color: Vec<usize> = vec![0; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = (0..n).filter(|&w| adj[v][w]).map(|w| color[w]).collect();
                s.sort();
                (color[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let ranks: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let new: Vec<usize> = sigs.iter().map(|s| ranks.binary_search(&s).expect("present")).collect();
        let stable = new.iter().collect::<BTreeSet<_>>().len() == color.iter().collect::<BTreeSet<_>>().len();
        color = new;
        if stable {
            break;
        }
    }
    let k = color.iter().max().map_or(0, |m| m + 1);
    let cells: Vec<Vec<usize>> = (0..k).map(|c| (0..n).filter(|&v| color[v] == c).collect()).collect();
    let mut best: Option<Vec<bool>> = None;
    for choice in cells.iter().map(|c| c.iter().copied().permutations(c.len())).multi_cartesian_product() {
        let order: Vec<usize> = choice.into_iter().flatten().collect();
        let code: Vec<bool> = (0..n).tuple_combinations().map(|(i, j)| adj[order[i]][order[j]]).collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    let mut out: Vec<bool> = Vec::new();
    for c in &cells {
        out.extend(std::iter::repeat(true).take(c.len()));
        out.push(false);
    }
    out.extend(best.unwrap_or_default());
    out
}
