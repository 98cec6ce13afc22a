//! Input parsing and output serialization.
//!
//! Three graph formats are read: an edge list (one edge per line, `#`
//! comments, `v <label>` for isolated vertices), JSON
//! (`{"vertices": [...], "edges": [[a, b], ...], "name": ...}`) and a subset
//! of DOT (undirected node and edge statements; attributes are ignored).
//! Two-colored graphs are read from JSON with `nodes` carrying an `id` and a
//! `color`.

use crate::bisim::TwoColoredGraph;
use crate::decomp::{Color, VisualDecompositionTree};
use crate::graph::{GraphError, SimplicialGraph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: expected {expected}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
}

impl ParseError {
    fn new(line: usize, column: usize, expected: impl Into<String>) -> Self {
        ParseError { line, column, expected: expected.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[value(name = "edgelist")]
    EdgeList,
    Json,
    Dot,
}

impl Format {
    /// Guesses the format from a file extension; anything unknown is an
    /// edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("dot") | Some("gv") => Format::Dot,
            _ => Format::EdgeList,
        }
    }
}

/// A parsed graph description before validation. Edges remember where they
/// were written so that graph errors can be reported with a position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub format: Format,
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    positions: Vec<(usize, usize)>,
}

impl InputDocument {
    fn new(format: Format) -> Self {
        InputDocument { format, name: None, vertices: Vec::new(), edges: Vec::new(), positions: Vec::new() }
    }

    fn push_edge(&mut self, a: String, b: String, pos: (usize, usize)) {
        self.edges.push((a, b));
        self.positions.push(pos);
    }

    pub fn to_graph(&self) -> Result<SimplicialGraph, ParseError> {
        let mut labels = self.vertices.clone();
        for (a, b) in &self.edges {
            labels.push(a.clone());
            labels.push(b.clone());
        }
        labels.sort();
        labels.dedup();
        let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        SimplicialGraph::build(&labels, &edges).map_err(|e| {
            let at = match &e {
                GraphError::SelfLoop(l) => self.edges.iter().position(|(a, b)| a == l && b == l),
                _ => None,
            };
            let (line, column) = at.map(|i| self.positions[i]).unwrap_or((1, 1));
            ParseError::new(line, column, format!("a simple graph ({e})"))
        })
    }
}

pub fn parse_document(text: &str, format: Format) -> Result<InputDocument, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Json => parse_json(text),
        Format::Dot => parse_dot(text),
    }
}

pub fn parse_input(bytes: &[u8], format: Format) -> Result<SimplicialGraph, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let before = &bytes[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        ParseError::new(line, column, "UTF-8 text")
    })?;
    parse_document(text, format)?.to_graph()
}

fn parse_edge_list(text: &str) -> Result<InputDocument, ParseError> {
    let mut doc = InputDocument::new(Format::EdgeList);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut rest = line;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let column = line.len() - rest.len() + start + 1;
            tokens.push((&tail[..len], column));
            rest = &tail[len..];
        }
        match tokens.as_slice() {
            [] => {}
            [("v", _), (label, _)] => doc.vertices.push(label.to_string()),
            [(a, col), (b, _)] => doc.push_edge(a.to_string(), b.to_string(), (i + 1, *col)),
            [(_, col)] => return Err(ParseError::new(i + 1, *col, "two vertex labels")),
            [_, _, (_, col), ..] => return Err(ParseError::new(i + 1, *col, "end of line after two labels")),
        }
    }
    Ok(doc)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    name: Option<String>,
    #[serde(default)]
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

fn json_error(e: serde_json::Error, what: &str) -> ParseError {
    let msg = e.to_string();
    let detail = msg.split(" at line").next().unwrap_or(&msg).to_string();
    ParseError::new(e.line(), e.column(), format!("{what} ({detail})"))
}

fn parse_json(text: &str) -> Result<InputDocument, ParseError> {
    let j: JsonGraph = serde_json::from_str(text).map_err(|e| json_error(e, "a graph object"))?;
    let mut doc = InputDocument::new(Format::Json);
    doc.name = j.name;
    doc.vertices = j.vertices;
    for (a, b) in j.edges {
        doc.push_edge(a, b, (1, 1));
    }
    Ok(doc)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Id(String),
    Punct(&'static str),
}

fn dot_tokens(text: &str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c.is_whitespace() {
            advance(c, &mut line, &mut col);
            i += 1;
        } else if c == '/' && chars.get(i + 1) == Some(&'/') || c == '#' && col == 1 {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
                col += 1;
            }
        } else if c == '/' && chars.get(i + 1) == Some(&'*') {
            i += 2;
            col += 2;
            while i < chars.len() && !(chars[i] == '*' && chars.get(i + 1) == Some(&'/')) {
                advance(chars[i], &mut line, &mut col);
                i += 1;
            }
            if i >= chars.len() {
                return Err(ParseError::new(l0, c0, "end of comment"));
            }
            i += 2;
            col += 2;
        } else if c == '-' && chars.get(i + 1) == Some(&'-') {
            out.push((Tok::Punct("--"), l0, c0));
            i += 2;
            col += 2;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            return Err(ParseError::new(l0, c0, "undirected edge '--'"));
        } else if "{}[];,=".contains(c) {
            let p = match c {
                '{' => "{",
                '}' => "}",
                '[' => "[",
                ']' => "]",
                ';' => ";",
                ',' => ",",
                _ => "=",
            };
            out.push((Tok::Punct(p), l0, c0));
            i += 1;
            col += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            col += 1;
            loop {
                match chars.get(i) {
                    None => return Err(ParseError::new(l0, c0, "closing quote")),
                    Some('"') => break,
                    Some('\\') if chars.get(i + 1) == Some(&'"') => {
                        s.push('"');
                        i += 2;
                        col += 2;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(ch, &mut line, &mut col);
                        i += 1;
                    }
                }
            }
            i += 1;
            col += 1;
            out.push((Tok::Id(s), l0, c0));
        } else if c.is_alphanumeric() || c == '_' || c == '.' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            out.push((Tok::Id(s), l0, c0));
        } else {
            return Err(ParseError::new(l0, c0, "an identifier or DOT punctuation"));
        }
    }
    Ok(out)
}

fn parse_dot(text: &str) -> Result<InputDocument, ParseError> {
    let toks = dot_tokens(text)?;
    let mut doc = InputDocument::new(Format::Dot);
    let end = toks.last().map(|t| (t.1, t.2 + 1)).unwrap_or((1, 1));
    let at = |k: usize| toks.get(k).map(|t| (t.1, t.2)).unwrap_or(end);
    let err = |k: usize, what: &str| {
        let (l, c) = at(k);
        ParseError::new(l, c, what)
    };
    let is_kw = |k: usize, kw: &str| matches!(toks.get(k), Some((Tok::Id(s), _, _)) if s.eq_ignore_ascii_case(kw));
    let mut k = 0;
    if is_kw(k, "strict") {
        k += 1;
    }
    if is_kw(k, "digraph") {
        return Err(err(k, "an undirected 'graph'"));
    }
    if !is_kw(k, "graph") {
        return Err(err(k, "'graph'"));
    }
    k += 1;
    if let Some((Tok::Id(name), _, _)) = toks.get(k) {
        doc.name = Some(name.clone());
        k += 1;
    }
    if toks.get(k).map(|t| &t.0) != Some(&Tok::Punct("{")) {
        return Err(err(k, "'{'"));
    }
    k += 1;
    loop {
        match toks.get(k).map(|t| &t.0) {
            None => return Err(err(k, "'}'")),
            Some(Tok::Punct("}")) => {
                k += 1;
                break;
            }
            Some(Tok::Punct(";")) | Some(Tok::Punct(",")) => k += 1,
            Some(Tok::Punct("{")) => return Err(err(k, "a node or edge statement (subgraphs are not supported)")),
            Some(Tok::Id(s)) if s.eq_ignore_ascii_case("subgraph") => {
                return Err(err(k, "a node or edge statement (subgraphs are not supported)"))
            }
            Some(Tok::Id(s))
                if ["node", "edge", "graph"].iter().any(|kw| s.eq_ignore_ascii_case(kw))
                    && toks.get(k + 1).map(|t| &t.0) == Some(&Tok::Punct("[")) =>
            {
                k = skip_attrs(&toks, k + 1).ok_or_else(|| err(k + 1, "']'"))?;
            }
            Some(Tok::Id(first)) => {
                if toks.get(k + 1).map(|t| &t.0) == Some(&Tok::Punct("=")) {
                    match toks.get(k + 2) {
                        Some((Tok::Id(_), _, _)) => {
                            k += 3;
                            continue;
                        }
                        _ => return Err(err(k + 2, "an attribute value")),
                    }
                }
                let mut chain = vec![(first.clone(), at(k))];
                k += 1;
                while toks.get(k).map(|t| &t.0) == Some(&Tok::Punct("--")) {
                    match toks.get(k + 1) {
                        Some((Tok::Id(s), l, c)) => chain.push((s.clone(), (*l, *c))),
                        _ => return Err(err(k + 1, "a node identifier after '--'")),
                    }
                    k += 2;
                }
                if toks.get(k).map(|t| &t.0) == Some(&Tok::Punct("[")) {
                    k = skip_attrs(&toks, k).ok_or_else(|| err(k, "']'"))?;
                }
                if chain.len() == 1 {
                    doc.vertices.push(chain[0].0.clone());
                }
                for w in chain.windows(2) {
                    doc.push_edge(w[0].0.clone(), w[1].0.clone(), w[0].1);
                }
            }
            Some(_) => return Err(err(k, "a node or edge statement")),
        }
    }
    if k < toks.len() {
        return Err(err(k, "end of input"));
    }
    Ok(doc)
}

/// Index just past the `]` closing the attribute list opened at `k`.
fn skip_attrs(toks: &[(Tok, usize, usize)], k: usize) -> Option<usize> {
    let close = toks[k..].iter().position(|t| t.0 == Tok::Punct("]"))?;
    Some(k + close + 1)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn edge_labels(g: &SimplicialGraph) -> Vec<(String, String)> {
    g.edges().into_iter().map(|(a, b)| (g.label(a).to_string(), g.label(b).to_string())).collect()
}

fn isolated(g: &SimplicialGraph) -> Vec<String> {
    g.vertices().filter(|&v| g.degree(v) == 0).map(|v| g.label(v).to_string()).collect()
}

pub fn to_edge_list(g: &SimplicialGraph) -> String {
    let mut out = String::new();
    for v in isolated(g) {
        let _ = writeln!(out, "v {v}");
    }
    for (a, b) in edge_labels(g) {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

#[derive(Serialize)]
struct JsonGraphOut<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'a str>,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn to_json(g: &SimplicialGraph, name: Option<&str>) -> String {
    let j = JsonGraphOut {
        name,
        vertices: g.vertices().map(|v| g.label(v).to_string()).collect(),
        edges: edge_labels(g),
    };
    serde_json::to_string_pretty(&j).expect("graph serializes")
}

pub fn to_dot(g: &SimplicialGraph, name: Option<&str>) -> String {
    let mut out = format!("graph {} {{\n", quote(name.unwrap_or("G")));
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(g.label(v)));
    }
    for (a, b) in edge_labels(g) {
        let _ = writeln!(out, "  {} -- {};", quote(&a), quote(&b));
    }
    out.push_str("}\n");
    out
}

pub fn serialize(g: &SimplicialGraph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Json => to_json(g, None),
        Format::Dot => to_dot(g, None),
    }
}

fn color_name(c: Color) -> &'static str {
    match c {
        Color::Black => "black",
        Color::White => "white",
    }
}

/// Node label used in tree exports: `v:{vertices}|w=weight|deg=degree|color`.
pub fn tree_node_label(t: &VisualDecompositionTree, i: usize) -> String {
    let n = &t.nodes[i];
    let g = n.complex.graph();
    format!("v:{{{}}}|w={}|deg={}|{}", g.labels_of(&n.vertices).join(","), n.weight, n.degree, color_name(n.color))
}

pub fn tree_to_dot(t: &VisualDecompositionTree) -> String {
    let mut out = String::from("graph T_r {\n");
    for (i, n) in t.nodes.iter().enumerate() {
        let fill = color_name(n.color);
        let font = if n.color == Color::Black { "white" } else { "black" };
        let _ = writeln!(
            out,
            "  t{i} [label={}, style=filled, fillcolor={fill}, fontcolor={font}];",
            quote(&tree_node_label(t, i))
        );
    }
    for &(a, b, c) in &t.edges {
        let g = t.nodes[a].complex.graph();
        let _ = writeln!(out, "  t{a} -- t{b} [label={}];", quote(&c.display(g)));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct TreeNodeJson {
    id: String,
    color: Color,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    poles: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TreeEdgeJson {
    Pair(String, String),
    Object { source: String, target: String, cycle: Option<Vec<String>> },
}

#[derive(Serialize, Deserialize)]
struct ColoredJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    nodes: Vec<TreeNodeJson>,
    edges: Vec<TreeEdgeJson>,
}

pub fn tree_to_json(t: &VisualDecompositionTree) -> String {
    let nodes = t
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let g = n.complex.graph();
            TreeNodeJson {
                id: format!("t{i}"),
                color: n.color,
                label: Some(tree_node_label(t, i)),
                vertices: g.labels_of(&n.vertices),
                poles: Some([g.label(n.poles.0).to_string(), g.label(n.poles.1).to_string()]),
                weight: Some(n.weight),
                degree: Some(n.degree),
            }
        })
        .collect();
    let edges = t
        .edges
        .iter()
        .map(|&(a, b, c)| TreeEdgeJson::Object {
            source: format!("t{a}"),
            target: format!("t{b}"),
            cycle: Some(c.labels(t.nodes[a].complex.graph()).to_vec()),
        })
        .collect();
    serde_json::to_string_pretty(&ColoredJson { name: None, nodes, edges }).expect("tree serializes")
}

/// Reads a two-colored graph: `{"nodes": [{"id", "color"}], "edges": [...]}`
/// with edges as `[source, target]` pairs or `{source, target}` objects.
pub fn parse_colored(text: &str) -> Result<TwoColoredGraph, ParseError> {
    let j: ColoredJson = serde_json::from_str(text).map_err(|e| json_error(e, "a two-colored graph object"))?;
    let mut index = BTreeMap::new();
    for (i, n) in j.nodes.iter().enumerate() {
        if index.insert(n.id.clone(), i).is_some() {
            return Err(ParseError::new(1, 1, format!("distinct node ids (\"{}\" repeated)", n.id)));
        }
    }
    let mut edges = Vec::new();
    for e in &j.edges {
        let (s, t) = match e {
            TreeEdgeJson::Pair(s, t) => (s, t),
            TreeEdgeJson::Object { source, target, .. } => (source, target),
        };
        let look = |x: &String| {
            index.get(x).copied().ok_or_else(|| ParseError::new(1, 1, format!("a declared node id (\"{x}\" is unknown)")))
        };
        edges.push((look(s)?, look(t)?));
    }
    let names = j.nodes.iter().map(|n| n.id.clone()).collect();
    let colors = j.nodes.iter().map(|n| n.color).collect();
    Ok(TwoColoredGraph::new(names, colors, &edges).expect("edge ids resolved"))
}

pub fn colored_to_dot(g: &TwoColoredGraph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for v in 0..g.len() {
        let fill = color_name(g.colors[v]);
        let font = if g.colors[v] == Color::Black { "white" } else { "black" };
        let _ = writeln!(
            out,
            "  q{v} [label={}, style=filled, fillcolor={fill}, fontcolor={font}];",
            quote(&g.names[v])
        );
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  q{a} -- q{b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
pub struct ColoredGraphOut {
    pub nodes: Vec<(String, Color)>,
    pub edges: Vec<(usize, usize)>,
}

pub fn colored_summary(g: &TwoColoredGraph) -> ColoredGraphOut {
    ColoredGraphOut {
        nodes: g.names.iter().cloned().zip(g.colors.iter().copied()).collect(),
        edges: g.edges(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::graph;

    #[test]
    fn edge_list_and_isolated_vertices() {
        let g = parse_input(b"a b\nb c # comment\n\nv z\n", Format::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        let e = parse_input(b"a b\nc\n", Format::EdgeList).unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = parse_input(b"a b c\n", Format::EdgeList).unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_input(b"a b\n  x x\n", Format::EdgeList).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }

    #[test]
    fn json_input() {
        let g = parse_input(br#"{"vertices":["a","b"],"edges":[["a","b"]]}"#, Format::Json).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let e = parse_input(b"{\"edges\": [[\"a\"]]}", Format::Json).unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn dot_subset() {
        let g = parse_input(b"strict graph G { a -- b -- c [color=red]; d; node [shape=box]; rankdir=LR }", Format::Dot)
            .unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 2));
        assert!(parse_input(b"digraph { a -> b }", Format::Dot).is_err());
        let e = parse_input(b"graph {\n  a -- ;\n}", Format::Dot).unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
    }

    #[test]
    fn round_trips() {
        let g = graph("a-b b-c c-a c-d");
        for f in [Format::EdgeList, Format::Json, Format::Dot] {
            assert_eq!(parse_input(serialize(&g, f).as_bytes(), f).unwrap(), g);
        }
    }

    #[test]
    fn colored_input() {
        let t = parse_colored(r#"{"nodes":[{"id":"x","color":"white"},{"id":"y","color":"black"}],"edges":[["x","y"]]}"#)
            .unwrap();
        assert_eq!(t.len(), 2);
        assert!(parse_colored(r#"{"nodes":[{"id":"x","color":"white"}],"edges":[["x","y"]]}"#).is_err());
    }
}
