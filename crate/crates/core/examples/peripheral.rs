//! Minimal peripheral structures, computed by closure and by the planar
//! decomposition, then checked against the Caprace conditions.

use racg::{fixtures, flag_planar_complex, minimal_peripheral_structure, planar_peripheral_structure, verify_caprace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["fig_afirst_g1", "fig_aprime_a3", "fig_bprime_b1", "fig_bprime_b3", "fig_afifthf_delta"] {
        let g = fixtures::graph(name);
        println!("== {name} ==");
        match minimal_peripheral_structure(&g)? {
            None => println!("closure: thick, no proper structure"),
            Some(coll) => {
                for (m, tag) in coll.members.iter().zip(&coll.tags) {
                    println!("closure member {} ({tag:?})", g.fmt_set(m));
                }
                println!("caprace violations: {}", verify_caprace(&g, &coll)?.len());
            }
        }
        if let Ok(delta) = flag_planar_complex(&g) {
            let planar = planar_peripheral_structure(&delta)?;
            let closure = minimal_peripheral_structure(&g)?;
            println!("planar route agrees: {}", planar.map(|c| c.members) == closure.map(|c| c.members));
        }
    }
    Ok(())
}
