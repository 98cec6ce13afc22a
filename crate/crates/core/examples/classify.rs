//! Classify a planar flag complex and print the text report.
//!
//! ```text
//! cargo run --example classify                 # built-in fixtures
//! cargo run --example classify -- graph.txt    # your own edge list
//! ```

use racg::classify::{full_report, render_text};
use racg::io::{parse_input, Format};
use racg::{fixtures, flag_planar_complex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs: Vec<(String, racg::SimplicialGraph)> = match std::env::args().nth(1) {
        Some(path) => {
            let bytes = std::fs::read(&path)?;
            let g = parse_input(&bytes, Format::from_path(path.as_ref()))?;
            vec![(path, g)]
        }
        None => ["fig_afifthf_delta", "fig_aprime_a1", "fig_bprime_b1", "fig_bprime_b3"]
            .iter()
            .map(|n| (n.to_string(), fixtures::graph(n)))
            .collect(),
    };
    for (name, g) in inputs {
        println!("== {name} ==");
        let delta = flag_planar_complex(&g)?;
        print!("{}", render_text(&full_report(&delta)));
        println!();
    }
    Ok(())
}
