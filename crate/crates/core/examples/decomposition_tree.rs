//! Build visual decomposition trees and compare them up to bisimilarity.

use racg::bisim::{bisimilar, minimal_quotient, qi_equivalent_A2, TwoColoredGraph};
use racg::io::{colored_to_dot, tree_to_dot};
use racg::{fixtures, flag_planar_complex, visual_decomposition_tree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let delta = flag_planar_complex(&fixtures::graph("fig_afifthf_delta"))?;
    let delta_prime = flag_planar_complex(&fixtures::graph("fig_afifthf_delta_prime"))?;

    let t = visual_decomposition_tree(&delta)?;
    let t_prime = visual_decomposition_tree(&delta_prime)?;
    print!("{}", tree_to_dot(&t));
    print!("{}", tree_to_dot(&t_prime));

    let (c, c_prime) = (TwoColoredGraph::from_tree(&t), TwoColoredGraph::from_tree(&t_prime));
    print!("{}", colored_to_dot(&minimal_quotient(&c), "quotient"));
    print!("{}", colored_to_dot(&minimal_quotient(&c_prime), "quotient_prime"));
    println!("bisimilar: {}", bisimilar(&c, &c_prime));
    println!("quasi-isometric: {}", qi_equivalent_A2(&delta, &delta_prime)?);
    Ok(())
}
