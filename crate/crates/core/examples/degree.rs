//! Degrees of irrationality against the rationalizable quasi-choices,
//! with the closest rational behavior found by the search.

use irr::metrics::Metric;
use irr::{irr_degree, BenchmarkKind, GroundSet, QuasiChoice};

fn main() -> irr::Result<()> {
    let g = GroundSet::new(["x", "y", "z"])?.shared();
    let choices = [
        "[x] y, [x] z, [y] z, [x] y z",
        "[x] y, [x] z, [y] z, x [y] z",
        "[x] y, [x] z, [y] z, x y [z]",
    ];
    for notation in choices {
        let c = QuasiChoice::from_notation(g.clone(), notation)?;
        println!("{c}");
        for metric in [Metric::Delta, Metric::Rat] {
            let report = irr_degree(&c, &metric, BenchmarkKind::Quasi)?;
            println!(
                "  irr_{metric} = {}, {} minimizer(s), e.g. {}",
                report.degree,
                report.minimizers.len(),
                report.first_minimizer().choice
            );
        }
    }
    Ok(())
}
