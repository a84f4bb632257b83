//! Fixture loading and brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use irr::dataset::{parse_quasi_choice, parse_stochastic};
use irr::ground::{GroundSet, Menu, Permutation};
use irr::rational::parse_rational;
use irr::{BinaryRelation, QuasiChoice, Rational, StochasticChoice};
use num_bigint::BigInt;
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn choice(name: &str) -> QuasiChoice {
    parse_quasi_choice(&fixture_text(name), false).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn stochastic(name: &str) -> StochasticChoice {
    parse_stochastic(&fixture_text(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn q(text: &str) -> Rational {
    parse_rational(text).unwrap()
}

pub fn ground(n: usize) -> Arc<GroundSet> {
    GroundSet::with_size(n).unwrap().shared()
}

/// Every binary relation over `ground`, self-loops included.
pub fn all_relations(ground: &Arc<GroundSet>) -> impl Iterator<Item = BinaryRelation> + '_ {
    let n = ground.len();
    (0u64..1 << (n * n)).map(move |bits| {
        let pairs = (0..n * n)
            .filter(|k| bits >> k & 1 == 1)
            .map(|k| (k / n, k % n));
        BinaryRelation::from_pairs(ground.clone(), pairs).unwrap()
    })
}

/// Maximal elements computed straight from the definition.
pub fn naive_max(rel: &BinaryRelation, menu: Menu) -> Menu {
    menu.items()
        .filter(|&x| !menu.items().any(|a| rel.holds(a, x)))
        .fold(Menu::EMPTY, Menu::with)
}

pub fn naive_induced(rel: &BinaryRelation) -> Vec<Menu> {
    rel.ground()
        .all_menus()
        .map(|m| naive_max(rel, m))
        .collect()
}

/// A random full-domain stochastic choice with weights 1..=9 per item,
/// normalized menu by menu. Usually not RUM.
pub fn random_stochastic<R: Rng + ?Sized>(
    ground: &Arc<GroundSet>,
    rng: &mut R,
) -> StochasticChoice {
    let n = ground.len();
    let mut weights = vec![0i64; n << n];
    for w in weights.iter_mut() {
        *w = rng.gen_range(1..=9);
    }
    StochasticChoice::from_fn(ground.clone(), |a, m| {
        let total: i64 = m.items().map(|b| weights[m.index() * n + b]).sum();
        Rational::new(
            BigInt::from(weights[m.index() * n + a]),
            BigInt::from(total),
        )
    })
    .unwrap()
}

/// `∃σ ∀x: v(x) ≤ w(σ(x))` by trying every permutation.
pub fn brute_force_dominated(v: &[Rational], w: &[Rational]) -> bool {
    Permutation::all(v.len()).any(|s| (0..v.len()).all(|x| v[x] <= w[s.apply(x)]))
}
