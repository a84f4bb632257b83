//! Sen's test on three choice functions that agree on pairs.

use irr::{is_rationalizable, GroundSet, QuasiChoice};

fn main() -> irr::Result<()> {
    let g = GroundSet::new(["x", "y", "z"])?.shared();
    let pairs = "[x] y, [x] z, [y] z";
    for grand in ["[x] y z", "x [y] z", "x y [z]"] {
        let c = QuasiChoice::from_notation(g.clone(), &format!("{pairs}, {grand}"))?;
        let verdict = is_rationalizable(&c);
        println!("{c}");
        match &verdict.rationalizer {
            Some(r) => println!("  rationalized by {r}"),
            None => {
                for w in &verdict.alpha.witnesses {
                    let (s, l) = (g.format_menu(w.smaller), g.format_menu(w.larger));
                    println!(
                        "  alpha fails: {} chosen from {l} but not from {s}",
                        g.name(w.item)
                    );
                }
                for w in &verdict.gamma.witnesses {
                    let (a, b) = (g.format_menu(w.first), g.format_menu(w.second));
                    println!(
                        "  gamma fails: {} chosen from {a} and {b} but not their union",
                        g.name(w.item)
                    );
                }
            }
        }
    }
    Ok(())
}
