//! Klamler's distance against the rational metric, with the rational
//! localizations that drive the latter.

use irr::{delta_distance, rat_distance, rational_localization, GroundSet, QuasiChoice};

fn main() -> irr::Result<()> {
    let g = GroundSet::new(["x", "y", "z"])?.shared();
    let c1 = QuasiChoice::from_notation(g.clone(), "[x] y, [x] z, [y] z, [x] y z")?;
    let c2 = QuasiChoice::from_notation(g.clone(), "[x] y, [x] z, [y] z, x [y] z")?;
    let c3 = QuasiChoice::from_notation(g.clone(), "[x] y, [x] z, [y] z, x y [z]")?;
    for (name, c) in [("c2", &c2), ("c3", &c3)] {
        println!(
            "c1 vs {name}: d_delta = {}, d_rat = {}",
            delta_distance(&c1, c)?.value,
            rat_distance(&c1, c)?.value
        );
    }

    let c2p = QuasiChoice::from_notation(g.clone(), "x [y], [x] z, [y] z, x [y] z")?;
    for base in ["xy", "xz", "yz", "xyz"] {
        let a = g.menu(base)?;
        println!(
            "{:<8} {:<46} {}",
            g.format_menu(a),
            rational_localization(&c2, a)?.render(&g),
            rational_localization(&c2p, a)?.render(&g)
        );
    }
    let report = rat_distance(&c2, &c2p)?;
    for (base, part) in &report.breakdown {
        println!(
            "d_rat(c2, c2') gets {part} from base {}",
            g.format_menu(*base)
        );
    }
    println!("d_rat(c2, c2') = {}", report.value);
    Ok(())
}
