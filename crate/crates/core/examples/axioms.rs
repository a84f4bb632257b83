//! Auditing metrics against Klamler's axioms, including a user-defined
//! metric wrapped in `FnMetric`.

use irr::axioms::{check_klamler_axioms, AxiomInstances};
use irr::metrics::{delta_distance, FnMetric, Metric};
use irr::sampling::seeded_rng;
use irr::{ChoiceMetric, GroundSet};

fn main() -> irr::Result<()> {
    let doubled = FnMetric::new("2*delta", |a, b| {
        2 * delta_distance(a, b).expect("same ground").value
    });
    let metrics: [&dyn ChoiceMetric; 3] = [&Metric::Delta, &Metric::Rat, &doubled];
    let g = GroundSet::new(["x", "y", "z"])?.shared();
    let instances = AxiomInstances::sampled(g, 200, &mut seeded_rng(7));
    for metric in metrics {
        let report = check_klamler_axioms(metric, &instances)?;
        println!("{}:", report.metric);
        for r in &report.results {
            match &r.counterexample {
                None => println!("  {:<4} pass ({} checked)", r.axiom.label(), r.checked),
                Some(c) => println!("  {:<4} FAIL {}", r.axiom.label(), c.detail),
            }
        }
    }
    Ok(())
}
