//! Total variation and Kullback-Leibler distances from the uniform
//! function, next to the negativity-vector preorder.

use irr::rational::format_rational;
use irr::stochastic::{compare_irrationality, kl_divergence, total_variation};
use irr::{negativity_vector, StochasticChoice};

fn main() -> irr::Result<()> {
    let p = StochasticChoice::from_json(include_str!("../fixtures/ex5_3_p.json"))?;
    let others = [
        (
            "p1",
            StochasticChoice::from_json(include_str!("../fixtures/ex5_3_p1.json"))?,
        ),
        (
            "p2",
            StochasticChoice::from_json(include_str!("../fixtures/ex5_3_p2.json"))?,
        ),
        (
            "p3",
            StochasticChoice::from_json(include_str!("../fixtures/ex5_4_p3.json"))?,
        ),
    ];
    for (name, q) in &others {
        let v: Vec<String> = negativity_vector(q)
            .values
            .iter()
            .map(format_rational)
            .collect();
        println!(
            "{name}: tv = {}, KL({name} || p) = {}, v = ({})",
            format_rational(&total_variation(&p, q)?),
            kl_divergence(q, &p)?,
            v.join(", ")
        );
    }
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            let (a, b) = (&others[i], &others[j]);
            println!(
                "{} vs {}: {:?}",
                a.0,
                b.0,
                compare_irrationality(&a.1, &b.1)?
            );
        }
    }
    Ok(())
}
