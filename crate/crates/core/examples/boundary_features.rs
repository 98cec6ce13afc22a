//! Boundary features: cut points, cut pairs, splittings, carpets.

use racg::boundary::{nonparabolic_cut_pair, parabolic_cut_points, splits_over_2ended};
use racg::{fixtures, flag_planar_complex, is_one_ended, minimal_peripheral_structure, sierpinski_carpet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["fig_afirst_g2", "fig_asecond_g1", "fig_asecond_g2", "fig_bprime_b2", "fig_aprime_a3"] {
        let g = fixtures::graph(name);
        println!("== {name} ==");
        println!("one-ended: {}", is_one_ended(&g));
        if let Some(coll) = minimal_peripheral_structure(&g)? {
            match parabolic_cut_points(&g, &coll) {
                Ok(ms) => {
                    for i in ms {
                        println!("cut point at member {}", g.fmt_set(&coll.members[i]));
                    }
                }
                Err(e) => println!("cut points: {e}"),
            }
            match nonparabolic_cut_pair(&g, &coll) {
                Ok(v) => println!("non-parabolic cut pair: {:?}", v.status),
                Err(e) => println!("non-parabolic cut pair: {e}"),
            }
        }
        if let Ok(delta) = flag_planar_complex(&g) {
            println!("splits over 2-ended: {:?}", splits_over_2ended(&delta));
            println!("sierpinski carpet: {:?}", sierpinski_carpet(&delta));
        }
    }
    Ok(())
}
