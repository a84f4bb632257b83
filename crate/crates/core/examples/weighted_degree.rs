//! Weighted degrees on four alternatives: each rational choice is
//! discounted by the desirability class of its revealed preference.

use irr::choice::ChoiceCorrespondence;
use irr::dataset::parse_quasi_choice;
use irr::rational::format_rational;
use irr::{weighted_irr_degree, WeightingMap};

const CHOICES: [(&str, &str); 4] = [
    ("c1", include_str!("../fixtures/ex3_2_c1.json")),
    ("c2", include_str!("../fixtures/ex3_2_c2.json")),
    ("c3", include_str!("../fixtures/ex3_2_c3.json")),
    ("c4", include_str!("../fixtures/ex3_2_c4.json")),
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let linear = WeightingMap::from_strs(
        ["0.6", "0.7", "0.8", "0.9", "1", "1.1", "1.2", "1.3", "1.4"],
        "0",
    )?;
    let prime = WeightingMap::from_json(include_str!("../fixtures/weights_prime.json"))?;
    for (label, w) in [("w", &linear), ("w'", &prime)] {
        println!("{label}:");
        for (name, text) in CHOICES {
            let c = ChoiceCorrespondence::new(parse_quasi_choice(text, false)?)?;
            let report = weighted_irr_degree(&c, w)?;
            let best = report.first_minimizer();
            let class = best
                .class
                .as_ref()
                .map(|c| c.to_string())
                .unwrap_or_default();
            println!(
                "  {name}: {}  (distance {}, {class})",
                format_rational(&report.degree),
                best.distance
            );
        }
    }
    Ok(())
}
