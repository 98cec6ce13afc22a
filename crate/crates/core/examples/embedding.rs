//! Planar embeddings: rotation systems, faces, regions, and whether
//! strong separation of each square depends on the embedding.

use racg::planar::{enumerate_embeddings, is_three_connected, DEFAULT_SEARCH_BUDGET};
use racg::{fixtures, flag_planar_complex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::graph("fig_afifthf_delta");
    let delta = flag_planar_complex(&g)?;
    for (v, around) in delta.embedding().labelled(&g) {
        println!("{v}: {}", around.join(" "));
    }
    println!("3-connected: {}", is_three_connected(&g));
    println!("faces: {}, triangles: {}, regions: {}", delta.faces().len(), delta.triangles().len(), delta.regions().len());
    for (cyc, inv) in delta.strong_separation_invariance() {
        println!("{} strongly separates: {} ({inv:?})", cyc.display(&g), delta.strongly_separates(&cyc)?);
    }
    println!("embeddings up to reflection: {}", enumerate_embeddings(&g, DEFAULT_SEARCH_BUDGET)?.len());
    Ok(())
}
