//! Seeded random generators for choices, relations and stochastic data.
//!
//! Everything takes a caller-supplied `Rng`; [`seeded_rng`] gives the
//! reproducible generator the CLI uses for `--seed`.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::choice::QuasiChoice;
use crate::ground::{GroundSet, Menu, Permutation};
use crate::rational::Rational;
use crate::relation::BinaryRelation;
use crate::stochastic::LinearOrder;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset<R: Rng + ?Sized>(menu: Menu, rng: &mut R) -> Menu {
    Menu(rng.gen::<u32>() & menu.bits())
}

/// Uniform over all quasi-choices: each menu picks a uniform subset.
pub fn random_quasi_choice<R: Rng + ?Sized>(ground: &Arc<GroundSet>, rng: &mut R) -> QuasiChoice {
    QuasiChoice::from_fn(ground.clone(), |m| random_subset(m, rng)).expect("subsets are valid")
}

/// Uniform over choice correspondences (nonempty subsets on nonempty menus).
pub fn random_choice_correspondence<R: Rng + ?Sized>(
    ground: &Arc<GroundSet>,
    rng: &mut R,
) -> QuasiChoice {
    QuasiChoice::from_fn(ground.clone(), |m| loop {
        let s = random_subset(m, rng);
        if m.is_empty() || !s.is_empty() {
            break s;
        }
    })
    .expect("subsets are valid")
}

/// Each ordered pair (diagonal included) is present with probability 1/2.
pub fn random_relation<R: Rng + ?Sized>(ground: &Arc<GroundSet>, rng: &mut R) -> BinaryRelation {
    let full = ground.full_menu();
    BinaryRelation::from_rows(
        ground.clone(),
        (0..ground.len())
            .map(|_| random_subset(full, rng))
            .collect(),
    )
}

/// An asymmetric acyclic relation: a random DAG oriented along a random
/// linear order, each forward edge present with probability 1/2.
pub fn random_asymmetric_acyclic_relation<R: Rng + ?Sized>(
    ground: &Arc<GroundSet>,
    rng: &mut R,
) -> BinaryRelation {
    let order = random_permutation(ground.len(), rng);
    let ranking = order.image();
    let mut rel = BinaryRelation::empty(ground.clone());
    for (i, &a) in ranking.iter().enumerate() {
        for &b in &ranking[i + 1..] {
            if rng.gen_bool(0.5) {
                rel.insert(a, b);
            }
        }
    }
    rel
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::new(image).expect("shuffle is a bijection")
}

/// A distribution over `support` distinct random linear orders with random
/// positive weights (integers 1..=9, normalized), exact.
pub fn random_order_distribution<R: Rng + ?Sized>(
    n: usize,
    support: usize,
    rng: &mut R,
) -> Vec<(LinearOrder, Rational)> {
    let mut orders: Vec<LinearOrder> = LinearOrder::all(n).collect();
    orders.shuffle(rng);
    orders.truncate(support.clamp(1, orders.len()));
    let weights: Vec<i64> = orders.iter().map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    orders
        .into_iter()
        .zip(weights)
        .map(|(o, w)| (o, Rational::new(BigInt::from(w), BigInt::from(total))))
        .collect()
}

/// A random nonnegative vector with entries in tenths from 0 to `max_tenths`.
pub fn random_tenths_vector<R: Rng + ?Sized>(
    n: usize,
    max_tenths: i64,
    rng: &mut R,
) -> Vec<Rational> {
    (0..n)
        .map(|_| {
            Rational::new(
                BigInt::from(rng.gen_range(0..=max_tenths)),
                BigInt::from(10),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ferrers::relation_profile;

    #[test]
    fn generators_respect_their_contracts() {
        let g = GroundSet::with_size(4).unwrap().shared();
        let mut rng = seeded_rng(1);
        for _ in 0..50 {
            assert!(random_choice_correspondence(&g, &mut rng).is_decisive());
            let r = relation_profile(&random_asymmetric_acyclic_relation(&g, &mut rng));
            assert!(r.asymmetric && r.acyclic);
            let dist = random_order_distribution(4, 5, &mut rng);
            let total: Rational = dist.iter().map(|(_, w)| w.clone()).sum();
            assert_eq!(total, crate::rational::integer(1));
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let g = GroundSet::with_size(3).unwrap().shared();
        let a = random_quasi_choice(&g, &mut seeded_rng(9));
        let b = random_quasi_choice(&g, &mut seeded_rng(9));
        assert_eq!(a, b);
    }
}
