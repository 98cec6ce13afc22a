//! Read a graph in one format and write it in the others.

use racg::io::{parse_input, serialize, Format};
use racg::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(path) => parse_input(&std::fs::read(&path)?, Format::from_path(path.as_ref()))?,
        None => fixtures::graph("fig_aprime_a1"),
    };
    for format in [Format::EdgeList, Format::Json, Format::Dot] {
        let text = serialize(&g, format);
        println!("--- {format:?} ---\n{text}");
        assert_eq!(parse_input(text.as_bytes(), format)?, g);
    }
    Ok(())
}
