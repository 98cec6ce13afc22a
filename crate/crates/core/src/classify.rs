//! Standing assumptions, type and subtype assignment, and full reports.

use crate::boundary::{
    is_one_ended, nonparabolic_cut_pair, parabolic_cut_points, separating_induced_4cycles, sierpinski_carpet,
    splits_over_2ended, TriState,
};
use crate::decomp::{visual_decomposition_tree, Color, VisualDecompositionTree};
use crate::planar::{
    enumerate_embeddings, is_three_connected, CycleInvariance, PlanarComplex, PlanarError, DEFAULT_SEARCH_BUDGET,
};
use crate::relhyp::{
    divergence_class, minimal_peripheral_structure, planar_peripheral_structure, DivergenceClass, MemberTag,
    PeripheralCollection,
};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// A failed standing assumption: the clause number and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandingViolation {
    pub clause: u8,
    pub reason: String,
}

impl fmt::Display for StandingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clause ({}): {}", self.clause, self.reason)
    }
}

/// Clause (1): connected, no separating vertex or edge, some induced
/// 4-cycle. Clause (2): neither a 4-cycle nor the cone on one.
pub fn check_standing_assumptions(delta: &PlanarComplex) -> Result<(), StandingViolation> {
    let g = delta.graph();
    let fail = |clause, reason: &str| Err(StandingViolation { clause, reason: reason.to_string() });
    if !g.is_connected() {
        return fail(1, "complex is disconnected");
    }
    if g.vertices().any(|v| g.separates_lenient(&g.set_of([v]))) {
        return fail(1, "complex has a separating vertex");
    }
    if g.edges().iter().any(|&(a, b)| g.separates_lenient(&g.set_of([a, b]))) {
        return fail(1, "complex has a separating edge");
    }
    if !g.has_induced_4cycle() {
        return fail(1, "complex has no induced 4-cycle");
    }
    if g.vertex_count() == 4 && g.is_long_cycle() {
        return fail(2, "complex is a 4-cycle");
    }
    if is_cone_of_square(delta) {
        return fail(2, "complex is the cone on a 4-cycle");
    }
    Ok(())
}

fn is_cone_of_square(delta: &PlanarComplex) -> bool {
    let g = delta.graph();
    g.vertex_count() == 5
        && g.vertices().any(|v| {
            g.degree(v) == 4 && {
                let rest = g.remove_vertices(&g.set_of([v]));
                rest.is_long_cycle()
            }
        })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("standing assumptions violated: {0}")]
    StandingAssumptionsViolated(StandingViolation),
    #[error("no type can be assigned: {0}")]
    TypeUnassigned(StandingViolation),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TypeAB {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Subtype {
    #[serde(rename = "A.1")]
    A1,
    #[serde(rename = "A.2")]
    A2,
    #[serde(rename = "A.3")]
    A3,
    #[serde(rename = "A.4")]
    A4,
    #[serde(rename = "B.1")]
    B1,
    #[serde(rename = "B.2")]
    B2,
    #[serde(rename = "B.3")]
    B3,
}

impl fmt::Display for Subtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Subtype::A1 => "A.1",
            Subtype::A2 => "A.2",
            Subtype::A3 => "A.3",
            Subtype::A4 => "A.4",
            Subtype::B1 => "B.1",
            Subtype::B2 => "B.2",
            Subtype::B3 => "B.3",
        };
        f.write_str(s)
    }
}

/// Type A iff the complex is the whole sphere or every region is bounded by
/// a 4-cycle.
pub fn type_ab(delta: &PlanarComplex) -> Result<TypeAB, ClassifyError> {
    check_standing_assumptions(delta).map_err(ClassifyError::StandingAssumptionsViolated)?;
    if delta.is_sphere() || delta.regions().iter().all(|r| r.is_cycle_of_len(4)) {
        Ok(TypeAB::A)
    } else {
        Ok(TypeAB::B)
    }
}

/// True iff some suspension decomposition has a cycle of length at least 4
/// or a broken line as its base.
pub fn is_suspension_of_cycle_or_broken_line(delta: &PlanarComplex) -> bool {
    let g = delta.graph();
    g.suspension_forms().iter().any(|s| {
        let base = g.restrict(&s.base);
        base.is_long_cycle() || base.is_broken_line().unwrap_or(false)
    })
}

pub fn subtype(delta: &PlanarComplex) -> Result<Subtype, ClassifyError> {
    let t = type_ab(delta).map_err(|e| match e {
        ClassifyError::StandingAssumptionsViolated(v) | ClassifyError::TypeUnassigned(v) => {
            ClassifyError::TypeUnassigned(v)
        }
    })?;
    let g = delta.graph();
    let separating_square = !separating_induced_4cycles(g).is_empty();
    Ok(match t {
        TypeAB::A => {
            if is_suspension_of_cycle_or_broken_line(delta) {
                Subtype::A1
            } else if g.is_cfs() {
                Subtype::A2
            } else if !separating_square {
                Subtype::A3
            } else {
                Subtype::A4
            }
        }
        TypeAB::B => {
            let two_ended = !g.cut_pairs().unwrap_or_default().is_empty()
                || !g.separating_induced_paths_len2().unwrap_or_default().is_empty();
            if two_ended {
                Subtype::B2
            } else if !separating_square {
                Subtype::B1
            } else {
                Subtype::B3
            }
        }
    })
}

/// Outcome of one pipeline stage: a value, or the reason it was not run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Stage<T> {
    Computed { value: T },
    Skipped { reason: String },
}

impl<T> Stage<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Stage::Computed { value } => Some(value),
            Stage::Skipped { .. } => None,
        }
    }

    fn from_result<E: fmt::Display>(r: Result<T, E>) -> Self {
        match r {
            Ok(value) => Stage::Computed { value },
            Err(e) => Stage::Skipped { reason: e.to_string() },
        }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Stage::Skipped { reason: reason.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandingReport {
    pub passed: bool,
    pub clause: Option<u8>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberReport {
    pub vertices: Vec<String>,
    pub tag: MemberTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeripheralReport {
    /// True when no proper peripheral structure exists.
    pub thick: bool,
    pub members: Vec<MemberReport>,
    pub minimality_certified: bool,
    pub agrees_with_closure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub poles: [String; 2],
    pub clique: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutPairReport {
    pub status: TriState,
    pub witness: Option<WitnessReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryFeatures {
    pub one_ended: bool,
    pub cut_point_peripherals: Stage<Vec<usize>>,
    pub nonparabolic_cut_pair: Stage<CutPairReport>,
    pub splits_over_2ended: Stage<bool>,
    pub sierpinski_carpet: Stage<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeNodeReport {
    pub vertices: Vec<String>,
    pub poles: [String; 2],
    pub line: Vec<String>,
    pub weight: usize,
    pub degree: usize,
    pub color: Color,
    pub absorbed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEdgeReport {
    pub nodes: [usize; 2],
    pub cycle: [String; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeReport {
    pub nodes: Vec<TreeNodeReport>,
    pub edges: Vec<TreeEdgeReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QiReport {
    pub raag: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleNote {
    pub cycle: [String; 4],
    pub invariance: CycleInvariance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationNote {
    /// Embeddings up to reflection in which every 3-cycle bounds a face.
    pub embeddings: usize,
    pub strongly_separating_invariant: bool,
    pub subtype_invariant: bool,
    /// Subtypes seen across embeddings, sorted.
    pub subtypes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingNote {
    pub rotation: Vec<(String, Vec<String>)>,
    pub three_connected: bool,
    pub cycles: Vec<CycleNote>,
    pub enumeration: Option<Stage<EnumerationNote>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub schema: u32,
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: usize,
    pub standing: StandingReport,
    #[serde(rename = "type")]
    pub type_ab: Option<TypeAB>,
    pub subtype: Option<Subtype>,
    pub divergence: Stage<DivergenceClass>,
    pub peripheral: Stage<PeripheralReport>,
    pub boundary: BoundaryFeatures,
    pub tree: Stage<TreeReport>,
    pub qi: Stage<QiReport>,
    pub embedding_note: EmbeddingNote,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    pub name: Option<String>,
    /// Enumerate all embeddings (small graphs only) and record whether the
    /// verdicts depend on the embedding.
    pub embedding_check: bool,
}

pub fn full_report(delta: &PlanarComplex) -> ClassificationReport {
    full_report_with(delta, &ReportOptions::default())
}

pub fn full_report_with(delta: &PlanarComplex, opts: &ReportOptions) -> ClassificationReport {
    let g = delta.graph();
    let standing = check_standing_assumptions(delta);
    let standing_report = match &standing {
        Ok(()) => StandingReport { passed: true, clause: None, reason: None },
        Err(v) => StandingReport { passed: false, clause: Some(v.clause), reason: Some(v.reason.clone()) },
    };
    let type_ab = type_ab(delta).ok();
    let subtype = subtype(delta).ok();
    let divergence = Stage::from_result(divergence_class(g, Some(delta)));
    let structure = planar_peripheral_structure(delta);
    let peripheral = Stage::from_result(structure.clone().map(|s| {
        let closure = minimal_peripheral_structure(g).ok();
        let agrees = closure.as_ref().map(|c| c.as_ref().map(|x| &x.members)) == Some(s.as_ref().map(|x| &x.members));
        match &s {
            None => PeripheralReport { thick: true, members: Vec::new(), minimality_certified: true, agrees_with_closure: agrees },
            Some(c) => PeripheralReport {
                thick: false,
                members: c
                    .members
                    .iter()
                    .zip(&c.tags)
                    .map(|(m, t)| MemberReport { vertices: g.labels_of(m), tag: *t })
                    .collect(),
                minimality_certified: c.minimality_certified,
                agrees_with_closure: agrees,
            },
        }
    }));
    let boundary = boundary_features(delta, structure.ok().flatten().as_ref(), standing.is_ok());
    let tree = match (&standing, subtype) {
        (Err(v), _) => Stage::skipped(format!("standing assumptions violated: {v}")),
        (Ok(()), _) if g.is_join() => Stage::skipped("1-skeleton is a join"),
        (Ok(()), _) if !g.is_cfs() => Stage::skipped("1-skeleton is not CFS"),
        _ => Stage::from_result(visual_decomposition_tree(delta).map(|t| tree_report(delta, &t))),
    };
    let qi = match tree.value() {
        Some(t) => Stage::Computed { value: QiReport { raag: t.nodes.iter().all(|n| n.color == Color::Black) } },
        None => Stage::skipped("no visual decomposition tree"),
    };
    let embedding_note = embedding_note(delta, opts.embedding_check);
    ClassificationReport {
        schema: 1,
        name: opts.name.clone(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        standing: standing_report,
        type_ab,
        subtype,
        divergence,
        peripheral,
        boundary,
        tree,
        qi,
        embedding_note,
    }
}

fn labels2(g: &crate::graph::SimplicialGraph, p: (usize, usize)) -> [String; 2] {
    [g.label(p.0).to_string(), g.label(p.1).to_string()]
}

/// Boundary features; stages needing a peripheral structure are skipped
/// when none is available.
pub fn boundary_features(delta: &PlanarComplex, coll: Option<&PeripheralCollection>, standing: bool) -> BoundaryFeatures {
    let g = delta.graph();
    let no_structure = "no proper peripheral structure";
    let cut_point_peripherals = match coll {
        Some(c) => Stage::from_result(parabolic_cut_points(g, c)),
        None => Stage::skipped(no_structure),
    };
    let nonparabolic = match coll {
        Some(c) => Stage::from_result(nonparabolic_cut_pair(g, c).map(|v| CutPairReport {
            status: v.status,
            witness: v.witness.map(|w| WitnessReport {
                poles: labels2(g, w.poles),
                clique: w.clique.iter().map(|&x| g.label(x).to_string()).collect(),
            }),
        })),
        None => Stage::skipped(no_structure),
    };
    let sierpinski = if standing {
        Stage::from_result(sierpinski_carpet(delta))
    } else {
        Stage::skipped("standing assumptions violated")
    };
    BoundaryFeatures {
        one_ended: is_one_ended(g),
        cut_point_peripherals,
        nonparabolic_cut_pair: nonparabolic,
        splits_over_2ended: Stage::from_result(splits_over_2ended(delta)),
        sierpinski_carpet: sierpinski,
    }
}

pub fn tree_report(delta: &PlanarComplex, t: &VisualDecompositionTree) -> TreeReport {
    let g = delta.graph();
    TreeReport {
        nodes: t
            .nodes
            .iter()
            .map(|n| TreeNodeReport {
                vertices: g.labels_of(&n.vertices),
                poles: labels2(g, n.poles),
                line: g.labels_of(&n.line),
                weight: n.weight,
                degree: n.degree,
                color: n.color,
                absorbed: n.absorbed.len(),
            })
            .collect(),
        edges: t
            .edges
            .iter()
            .map(|&(a, b, c)| TreeEdgeReport { nodes: [a, b], cycle: c.labels(g) })
            .collect(),
    }
}

fn embedding_note(delta: &PlanarComplex, check: bool) -> EmbeddingNote {
    let g = delta.graph();
    let cycles = delta
        .strong_separation_invariance()
        .into_iter()
        .map(|(c, invariance)| CycleNote { cycle: c.labels(g), invariance })
        .collect();
    let enumeration = check.then(|| Stage::from_result(enumeration_note(delta)));
    EmbeddingNote {
        rotation: delta.embedding().labelled(g),
        three_connected: is_three_connected(g),
        cycles,
        enumeration,
    }
}

fn enumeration_note(delta: &PlanarComplex) -> Result<EnumerationNote, PlanarError> {
    let base = delta.strongly_separating_4cycles();
    let mut count = 0;
    let mut invariant = true;
    let mut subtypes = BTreeSet::new();
    for e in enumerate_embeddings(delta.graph(), DEFAULT_SEARCH_BUDGET)? {
        let Ok(c) = delta.with_embedding(e) else { continue };
        count += 1;
        invariant &= c.strongly_separating_4cycles() == base;
        subtypes.insert(subtype(&c).map(|s| s.to_string()).unwrap_or_else(|_| "unassigned".into()));
    }
    Ok(EnumerationNote {
        embeddings: count,
        strongly_separating_invariant: invariant,
        subtype_invariant: subtypes.len() <= 1,
        subtypes: subtypes.into_iter().collect(),
    })
}

/// Human-readable summary of a report.
pub fn render_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    if let Some(n) = &r.name {
        line(format!("name: {n}"));
    }
    line(format!("vertices: {}, edges: {}", r.vertices, r.edges));
    match &r.standing.reason {
        None => line("standing assumptions: pass".into()),
        Some(reason) => line(format!("standing assumptions: fail, clause ({}) {reason}", r.standing.clause.unwrap_or(0))),
    }
    let ty = r.type_ab.map(|t| format!("{t:?}")).unwrap_or_else(|| "excluded".into());
    let sub = r.subtype.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
    line(format!("type: {ty}, subtype: {sub}"));
    line(format!("divergence: {}", stage_text(&r.divergence, |d| format!("{d:?}").to_lowercase())));
    line(format!(
        "peripheral: {}",
        stage_text(&r.peripheral, |p| if p.thick {
            "none (thick)".into()
        } else if p.members.is_empty() {
            "empty (hyperbolic)".into()
        } else {
            p.members.iter().map(|m| format!("{{{}}}", m.vertices.join(","))).collect::<Vec<_>>().join(" ")
        })
    ));
    let b = &r.boundary;
    line(format!("one-ended: {}", b.one_ended));
    line(format!(
        "parabolic cut points: {}",
        stage_text(&b.cut_point_peripherals, |v| {
            let members = match &r.peripheral {
                Stage::Computed { value } => &value.members,
                Stage::Skipped { .. } => return format!("{v:?}"),
            };
            let named: Vec<String> = v
                .iter()
                .map(|&i| members.get(i).map(|m| format!("{{{}}}", m.vertices.join(","))).unwrap_or_else(|| i.to_string()))
                .collect();
            if named.is_empty() { "none".into() } else { named.join(" ") }
        })
    ));
    line(format!(
        "non-parabolic cut pair: {}",
        stage_text(&b.nonparabolic_cut_pair, |c| match &c.witness {
            Some(w) => format!("{:?} poles {{{}}} clique {{{}}}", c.status, w.poles.join(","), w.clique.join(",")),
            None => format!("{:?}", c.status),
        }
        .to_lowercase())
    ));
    line(format!("splits over 2-ended: {}", stage_text(&b.splits_over_2ended, |v| v.to_string())));
    line(format!("sierpinski carpet: {}", stage_text(&b.sierpinski_carpet, |v| v.to_string())));
    line(format!(
        "tree: {}",
        stage_text(&r.tree, |t| t
            .nodes
            .iter()
            .map(|n| format!("{{{}}} w={} deg={} {:?}", n.vertices.join(","), n.weight, n.degree, n.color).to_lowercase())
            .collect::<Vec<_>>()
            .join("; "))
    ));
    line(format!("qi to raag: {}", stage_text(&r.qi, |q| q.raag.to_string())));
    out
}

fn stage_text<T>(s: &Stage<T>, f: impl Fn(&T) -> String) -> String {
    match s {
        Stage::Computed { value } => f(value),
        Stage::Skipped { reason } => format!("skipped ({reason})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::tests::{nice_delta, nice_delta_prime};
    use crate::graph::tests::graph;
    use crate::planar::flag_planar_complex;
    use crate::planar::tests::{octahedron, prism};

    fn complex(edges: &str) -> PlanarComplex {
        flag_planar_complex(&graph(edges)).unwrap()
    }

    #[test]
    fn standing_clauses() {
        assert_eq!(check_standing_assumptions(&complex("a-b b-c c-d d-a")).unwrap_err().clause, 2);
        assert_eq!(check_standing_assumptions(&complex("a-b b-c c-d d-e e-a")).unwrap_err().clause, 1);
        assert_eq!(check_standing_assumptions(&complex("a-b b-c c-d d-a x-a x-b x-c x-d")).unwrap_err().clause, 2);
        assert_eq!(check_standing_assumptions(&prism()), Ok(()));
    }

    #[test]
    fn types_and_subtypes() {
        assert_eq!(type_ab(&octahedron()), Ok(TypeAB::A));
        assert_eq!(subtype(&octahedron()), Ok(Subtype::A1));
        assert_eq!(subtype(&nice_delta()), Ok(Subtype::A2));
        assert_eq!(subtype(&nice_delta_prime()), Ok(Subtype::A2));
        assert_eq!(type_ab(&prism()), Ok(TypeAB::B));
        assert_eq!(subtype(&prism()), Ok(Subtype::B1));
        assert!(matches!(subtype(&complex("a-b b-c c-d d-a")), Err(ClassifyError::TypeUnassigned(_))));
    }

    #[test]
    fn report_for_niceexample() {
        let r = full_report(&nice_delta());
        assert_eq!(r.subtype, Some(Subtype::A2));
        assert_eq!(r.divergence.value(), Some(&DivergenceClass::Quadratic));
        let t = r.tree.value().unwrap();
        let mut colors: Vec<Color> = t.nodes.iter().map(|n| n.color).collect();
        colors.sort();
        assert_eq!(colors, vec![Color::Black, Color::Black, Color::Black, Color::White]);
        assert_eq!(r.qi.value(), Some(&QiReport { raag: false }));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["subtype"], "A.2");
        assert_eq!(json["divergence"]["value"], "quadratic");
    }

    #[test]
    fn report_for_prism() {
        let r = full_report_with(&prism(), &ReportOptions { name: None, embedding_check: true });
        assert_eq!(r.subtype, Some(Subtype::B1));
        assert_eq!(r.divergence.value(), Some(&DivergenceClass::Exponential));
        assert_eq!(r.boundary.sierpinski_carpet.value(), Some(&true));
        assert!(r.peripheral.value().unwrap().agrees_with_closure);
        let e = r.embedding_note.enumeration.unwrap();
        assert_eq!(e.value().unwrap().embeddings, 1);
        assert!(matches!(r.tree, Stage::Skipped { .. }));
    }
}
