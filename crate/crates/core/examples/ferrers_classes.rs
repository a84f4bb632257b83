//! Ferrers properties and desirability classes of a few familiar
//! relation types on four alternatives.

use irr::ferrers::{desirability_class_with, ferrers_satisfaction, ClassificationBasis};
use irr::{BinaryRelation, GroundSet};

fn main() -> irr::Result<()> {
    let g = GroundSet::new(["x", "y", "z", "w"])?.shared();
    let relations = [
        ("linear order", "x>y, x>z, x>w, y>z, y>w, z>w"),
        ("semiorder", "x>z, x>w, y>w, z>w"),
        ("chain of three beside a loner", "x>y, y>z, x>z"),
        ("two disjoint pairs", "x>y, z>w"),
        ("intransitive", "x>y, y>z"),
    ];
    for (label, spec) in relations {
        let r = BinaryRelation::parse(g.clone(), spec)?;
        let props: Vec<String> = ferrers_satisfaction(&r)?
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("{label}: {r}");
        println!("  satisfies {}", props.join(" "));
        println!(
            "  {}",
            desirability_class_with(&r, ClassificationBasis::Characterized)?
        );
        println!(
            "  full lattice: {}",
            desirability_class_with(&r, ClassificationBasis::FullLattice)?
        );
    }
    Ok(())
}
