//! The built-in fixture corpus, compiled into the library.

use crate::bisim::TwoColoredGraph;
use crate::graph::SimplicialGraph;
use crate::io::{parse_colored, parse_input, Format};

/// `(name, format, contents)` for every graph fixture.
pub const GRAPHS: &[(&str, Format, &str)] = &[
    ("fig_afirst_g1", Format::EdgeList, include_str!("../fixtures/fig_afirst_g1.txt")),
    ("fig_afirst_g2", Format::EdgeList, include_str!("../fixtures/fig_afirst_g2.txt")),
    ("fig_afirst_g3", Format::EdgeList, include_str!("../fixtures/fig_afirst_g3.txt")),
    ("fig_asecond_g1", Format::EdgeList, include_str!("../fixtures/fig_asecond_g1.txt")),
    ("fig_asecond_g2", Format::Json, include_str!("../fixtures/fig_asecond_g2.json")),
    ("fig_aprime_a1", Format::EdgeList, include_str!("../fixtures/fig_aprime_a1.txt")),
    ("fig_aprime_a2", Format::EdgeList, include_str!("../fixtures/fig_aprime_a2.txt")),
    ("fig_aprime_a3", Format::EdgeList, include_str!("../fixtures/fig_aprime_a3.txt")),
    ("fig_aprime_a4", Format::EdgeList, include_str!("../fixtures/fig_aprime_a4.txt")),
    ("fig_bprime_b1", Format::EdgeList, include_str!("../fixtures/fig_bprime_b1.txt")),
    ("fig_bprime_b2", Format::EdgeList, include_str!("../fixtures/fig_bprime_b2.txt")),
    ("fig_bprime_b3", Format::EdgeList, include_str!("../fixtures/fig_bprime_b3.txt")),
    ("fig_special_three_points", Format::EdgeList, include_str!("../fixtures/fig_special_three_points.txt")),
    ("fig_special_edge_point", Format::EdgeList, include_str!("../fixtures/fig_special_edge_point.txt")),
    ("fig_special_path", Format::EdgeList, include_str!("../fixtures/fig_special_path.txt")),
    ("fig_afifthf_delta", Format::Json, include_str!("../fixtures/fig_afifthf_delta.json")),
    ("fig_afifthf_delta_prime", Format::Json, include_str!("../fixtures/fig_afifthf_delta_prime.json")),
    ("c4", Format::EdgeList, include_str!("../fixtures/c4.txt")),
    ("c5", Format::EdgeList, include_str!("../fixtures/c5.txt")),
    ("octahedron", Format::Dot, include_str!("../fixtures/octahedron.dot")),
];

/// `(name, contents)` for the two-colored tree fixtures.
pub const TREES: &[(&str, &str)] =
    &[("tr", include_str!("../fixtures/tr.json")), ("tr_prime", include_str!("../fixtures/tr_prime.json"))];

/// The named graph fixture. Panics on an unknown name.
pub fn graph(name: &str) -> SimplicialGraph {
    let (_, format, text) = GRAPHS
        .iter()
        .find(|(n, _, _)| *n == name)
        .unwrap_or_else(|| panic!("unknown fixture {name}"));
    parse_input(text.as_bytes(), *format).expect("fixtures parse")
}

/// The named two-colored tree fixture. Panics on an unknown name.
pub fn tree(name: &str) -> TwoColoredGraph {
    let (_, text) = TREES.iter().find(|(n, _)| *n == name).unwrap_or_else(|| panic!("unknown fixture {name}"));
    parse_colored(text).expect("fixtures parse")
}

/// Every graph fixture, parsed.
pub fn all_graphs() -> Vec<(&'static str, SimplicialGraph)> {
    GRAPHS.iter().map(|(n, _, _)| (*n, graph(n))).collect()
}
