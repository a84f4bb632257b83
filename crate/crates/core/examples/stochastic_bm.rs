//! Block-Marschak polynomials and the negativity vector of a stochastic
//! choice function that fails the random utility model.

use irr::rational::format_rational;
use irr::stochastic::{bm_table, is_monotonic};
use irr::{is_rum, negativity_vector, StochasticChoice};

fn main() -> irr::Result<()> {
    let p = StochasticChoice::from_json(include_str!("../fixtures/table1_p1.json"))?;
    let g = p.ground().clone();
    let table = bm_table(&p);
    for m in g.nonempty_menus() {
        let cells: Vec<String> = m
            .items()
            .map(|a| {
                format!(
                    "q({}) = {}",
                    g.name(a),
                    format_rational(table.get(a, m).unwrap())
                )
            })
            .collect();
        println!("{:<10} {}", g.format_menu(m), cells.join("  "));
    }
    let v: Vec<String> = negativity_vector(&p)
        .values
        .iter()
        .map(format_rational)
        .collect();
    println!("negativity vector: ({})", v.join(", "));
    println!(
        "RUM: {}, monotonic: {}",
        is_rum(&p).rum,
        is_monotonic(&p).monotonic
    );
    Ok(())
}
