//! Test harness for Klamler's axioms on a metric over quasi-choices.
//!
//! The harness is generic over [`ChoiceMetric`]. Each axiom is evaluated on
//! a finite [`AxiomInstances`] set and reported with the first
//! counterexample found (in instance order, so reports are reproducible).
//!
//! * A0.1, A0.2 on pairs; A0.3 and A1 on triples.
//! * A2 on pairs against every permutation of the ground set.
//! * A3 on pairs: the pair's disagreement menus are transplanted onto other
//!   backgrounds from the pool and the distance must not move. Elementary
//!   decomposability is reported as its own line.
//! * A4′ on pairs disagreeing on exactly one menu `T`, for every `S ⊆ T`.
//! * A5′ constructively: for every pool member and menu, some one-item
//!   toggle must be at distance 1.

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::choice::QuasiChoice;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Menu, Permutation};
use crate::metrics::{characteristic_metric, is_between, ChoiceMetric};
use crate::sampling::random_quasi_choice;

/// The audited properties, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "A0.1")]
    A0_1,
    #[serde(rename = "A0.2")]
    A0_2,
    #[serde(rename = "A0.3")]
    A0_3,
    A1,
    A2,
    A3,
    #[serde(rename = "A4'")]
    A4Prime,
    #[serde(rename = "A5'")]
    A5Prime,
    #[serde(rename = "ED")]
    ElementaryDecomposability,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::A0_1,
        Axiom::A0_2,
        Axiom::A0_3,
        Axiom::A1,
        Axiom::A2,
        Axiom::A3,
        Axiom::A4Prime,
        Axiom::A5Prime,
        Axiom::ElementaryDecomposability,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::A0_1 => "A0.1",
            Axiom::A0_2 => "A0.2",
            Axiom::A0_3 => "A0.3",
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::A3 => "A3",
            Axiom::A4Prime => "A4'",
            Axiom::A5Prime => "A5'",
            Axiom::ElementaryDecomposability => "ED",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Quasi-choices involved in a failure plus a one-line explanation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub choices: Vec<QuasiChoice>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.detail)?;
        for (i, c) in self.choices.iter().enumerate() {
            write!(f, "\n    C{}: {}", i + 1, c)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    /// Number of instances evaluated.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub metric: String,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn get(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }
}

/// A pool of quasi-choices plus the pairs and triples (as pool indices) on
/// which the relational axioms are evaluated.
#[derive(Clone, Debug)]
pub struct AxiomInstances {
    pub ground: Arc<GroundSet>,
    pub pool: Vec<QuasiChoice>,
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
}

/// Largest pool for which [`AxiomInstances::exhaustive`] builds all triples.
const EXHAUSTIVE_TRIPLE_POOL: usize = 64;
/// Backgrounds tried per pair for the A3 transplant check.
const A3_BACKGROUNDS: usize = 8;

impl AxiomInstances {
    pub fn new(ground: Arc<GroundSet>) -> Self {
        AxiomInstances {
            ground,
            pool: Vec::new(),
            pairs: Vec::new(),
            triples: Vec::new(),
        }
    }

    pub fn push(&mut self, choice: QuasiChoice) -> Result<usize> {
        if **choice.ground() != *self.ground {
            return Err(Error::GroundMismatch);
        }
        self.pool.push(choice);
        Ok(self.pool.len() - 1)
    }

    pub fn add_pair(&mut self, a: QuasiChoice, b: QuasiChoice) -> Result<()> {
        let i = self.push(a)?;
        let j = self.push(b)?;
        self.pairs.push((i, j));
        Ok(())
    }

    pub fn add_triple(&mut self, a: QuasiChoice, b: QuasiChoice, c: QuasiChoice) -> Result<()> {
        let i = self.push(a)?;
        let j = self.push(b)?;
        let k = self.push(c)?;
        self.triples.push((i, j, k));
        Ok(())
    }

    /// Every quasi-choice over `ground` with all ordered pairs and triples.
    /// Only ground sets with two alternatives are small enough.
    pub fn exhaustive(ground: Arc<GroundSet>) -> Result<Self> {
        let n = ground.len();
        let cells: usize = ground.nonempty_menus().map(|m| m.len()).sum();
        let size = 1usize << cells;
        if size > EXHAUSTIVE_TRIPLE_POOL {
            return Err(Error::GroundSetTooLarge { size: n, cap: 2 });
        }
        let menus: Vec<Menu> = ground.nonempty_menus().collect();
        let mut pool = Vec::with_capacity(size);
        for code in 0..size {
            let mut table = vec![Menu::EMPTY; 1 << n];
            let mut shift = 0;
            for &m in &menus {
                // spread the next |m| code bits over the items of m
                let mut chosen = Menu::EMPTY;
                for (k, item) in m.items().enumerate() {
                    if code >> (shift + k) & 1 == 1 {
                        chosen = chosen.with(item);
                    }
                }
                shift += m.len();
                table[m.index()] = chosen;
            }
            pool.push(QuasiChoice::from_table(ground.clone(), table)?);
        }
        let pairs = (0..size)
            .flat_map(|i| (0..size).map(move |j| (i, j)))
            .collect();
        let triples = (0..size)
            .flat_map(|i| (0..size).flat_map(move |j| (0..size).map(move |k| (i, j, k))))
            .collect();
        Ok(AxiomInstances {
            ground,
            pool,
            pairs,
            triples,
        })
    }

    /// `count` random pairs and `count` random triples. Half the pairs differ
    /// on a single menu and half the triples are betweenness triples, since
    /// uniform sampling almost never produces either.
    pub fn sampled<R: Rng + ?Sized>(ground: Arc<GroundSet>, count: usize, rng: &mut R) -> Self {
        let mut inst = AxiomInstances::new(ground.clone());
        let menus: Vec<Menu> = ground.nonempty_menus().collect();
        for k in 0..count {
            let a = random_quasi_choice(&ground, rng);
            let b = if k % 2 == 0 {
                random_quasi_choice(&ground, rng)
            } else {
                let m = *menus.choose(rng).expect("ground set is nonempty");
                let sub = random_submenu(m, rng);
                a.with_choice(m, sub).expect("submenu of the menu")
            };
            inst.add_pair(a, b).expect("same ground");
        }
        for k in 0..count {
            let a = random_quasi_choice(&ground, rng);
            let c = random_quasi_choice(&ground, rng);
            let b = if k % 2 == 0 {
                random_quasi_choice(&ground, rng)
            } else {
                QuasiChoice::from_fn(ground.clone(), |m| {
                    let lo = a.get(m).intersection(c.get(m));
                    let hi = a.get(m).union(c.get(m));
                    lo.union(random_submenu(hi, rng))
                })
                .expect("between choices are valid")
            };
            inst.add_triple(a, b, c).expect("same ground");
        }
        inst
    }
}

fn random_submenu<R: Rng + ?Sized>(menu: Menu, rng: &mut R) -> Menu {
    menu.items()
        .filter(|_| rng.gen_bool(0.5))
        .fold(Menu::EMPTY, Menu::with)
}

/// Evaluates every [`Axiom`] for `metric` on `instances`.
pub fn check_klamler_axioms(
    metric: &dyn ChoiceMetric,
    instances: &AxiomInstances,
) -> Result<AxiomReport> {
    let d = |a: &QuasiChoice, b: &QuasiChoice| metric.distance(a, b);
    let pool = &instances.pool;
    let pairs = &instances.pairs;
    let triples = &instances.triples;

    let a01 = first_failure(pairs, |&(i, j)| {
        let v = d(&pool[i], &pool[j])?;
        let equal = pool[i] == pool[j];
        Ok(((v == 0) != equal).then(|| Counterexample {
            choices: vec![pool[i].clone(), pool[j].clone()],
            detail: format!(
                "d = {v} but the choices are {}",
                if equal { "equal" } else { "distinct" }
            ),
        }))
    })?;

    let a02 = first_failure(pairs, |&(i, j)| {
        let ab = d(&pool[i], &pool[j])?;
        let ba = d(&pool[j], &pool[i])?;
        Ok((ab != ba).then(|| Counterexample {
            choices: vec![pool[i].clone(), pool[j].clone()],
            detail: format!("d(C1,C2) = {ab} but d(C2,C1) = {ba}"),
        }))
    })?;

    let a03 = first_failure(triples, |&(i, j, k)| {
        let (ab, bc, ac) = (
            d(&pool[i], &pool[j])?,
            d(&pool[j], &pool[k])?,
            d(&pool[i], &pool[k])?,
        );
        Ok((ab + bc < ac).then(|| Counterexample {
            choices: vec![pool[i].clone(), pool[j].clone(), pool[k].clone()],
            detail: format!("d(C1,C2) + d(C2,C3) = {ab} + {bc} < {ac} = d(C1,C3)"),
        }))
    })?;

    let a1 = first_failure(triples, |&(i, j, k)| {
        let (ab, bc, ac) = (
            d(&pool[i], &pool[j])?,
            d(&pool[j], &pool[k])?,
            d(&pool[i], &pool[k])?,
        );
        let between = is_between(&pool[i], &pool[j], &pool[k])?;
        Ok((between != (ab + bc == ac)).then(|| Counterexample {
            choices: vec![pool[i].clone(), pool[j].clone(), pool[k].clone()],
            detail: format!(
                "C2 is {}between C1 and C3, but d(C1,C2) + d(C2,C3) = {ab} + {bc} = {} {} {ac} = d(C1,C3)",
                if between { "" } else { "not " },
                ab + bc,
                if ab + bc == ac { "=" } else { "≠" },
            ),
        }))
    })?;

    let perms: Vec<Permutation> = Permutation::all(instances.ground.len()).collect();
    let a2 = first_failure(pairs, |&(i, j)| {
        let base = d(&pool[i], &pool[j])?;
        for sigma in &perms {
            let (pa, pb) = (pool[i].permuted(sigma), pool[j].permuted(sigma));
            let moved = d(&pa, &pb)?;
            if moved != base {
                return Ok(Some(Counterexample {
                    choices: vec![pool[i].clone(), pool[j].clone(), pa, pb],
                    detail: format!(
                        "relabeling by {:?} changes the distance from {base} to {moved}",
                        sigma.image()
                    ),
                }));
            }
        }
        Ok(None)
    })?;

    let backgrounds: Vec<&QuasiChoice> = pool.iter().take(A3_BACKGROUNDS).collect();
    let a3 = first_failure(pairs, |&(i, j)| {
        let (c, c2) = (&pool[i], &pool[j]);
        let differ: Vec<Menu> = c
            .ground()
            .nonempty_menus()
            .filter(|&m| c.get(m) != c2.get(m))
            .collect();
        if differ.is_empty() {
            return Ok(None);
        }
        let base = d(c, c2)?;
        for bg in &backgrounds {
            let transplant = |src: &QuasiChoice| {
                QuasiChoice::from_fn(c.ground().clone(), |m| {
                    if differ.contains(&m) {
                        src.get(m)
                    } else {
                        bg.get(m)
                    }
                })
            };
            let (e, e2) = (transplant(c)?, transplant(c2)?);
            let moved = d(&e, &e2)?;
            if moved != base {
                return Ok(Some(Counterexample {
                    choices: vec![c.clone(), c2.clone(), e, e2],
                    detail: format!(
                        "C1,C2 and C3,C4 agree on the disagreement menus {} yet d(C1,C2) = {base} and d(C3,C4) = {moved}",
                        format_menus(c.ground(), &differ)
                    ),
                }));
            }
        }
        Ok(None)
    })?;

    let a4 = first_failure(pairs, |&(i, j)| {
        let (c, c2) = (&pool[i], &pool[j]);
        let mut differ = c
            .ground()
            .nonempty_menus()
            .filter(|&m| c.get(m) != c2.get(m));
        let (Some(t), None) = (differ.next(), differ.next()) else {
            return Ok(None);
        };
        let base = d(c, c2)?;
        for s in t.subsets() {
            let e = c.with_choice(t, c.get(t).symmetric_difference(s))?;
            let e2 = c2.with_choice(t, c2.get(t).symmetric_difference(s))?;
            let moved = d(&e, &e2)?;
            if moved != base {
                return Ok(Some(Counterexample {
                    choices: vec![c.clone(), c2.clone(), e, e2],
                    detail: format!(
                        "translating by {} on {} changes the distance from {base} to {moved}",
                        c.ground().format_menu(s),
                        c.ground().format_menu(t)
                    ),
                }));
            }
        }
        Ok(None)
    })?;

    let singles: Vec<usize> = (0..pool.len()).collect();
    let a5 = first_failure(&singles, |&i| {
        let c = &pool[i];
        for m in c.ground().nonempty_menus() {
            let mut found = false;
            for item in m.items() {
                let toggled = c.get(m).symmetric_difference(Menu::singleton(item));
                if d(c, &c.with_choice(m, toggled)?)? == 1 {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(Some(Counterexample {
                    choices: vec![c.clone()],
                    detail: format!(
                        "no one-item change on {} is at distance 1",
                        c.ground().format_menu(m)
                    ),
                }));
            }
        }
        Ok(None)
    })?;

    let ed = first_failure(pairs, |&(i, j)| {
        let (c, c2) = (&pool[i], &pool[j]);
        let whole = d(c, c2)?;
        let mut parts = 0;
        for m in c.ground().nonempty_menus() {
            parts += characteristic_metric(metric, c.ground(), m, c.get(m), c2.get(m))?;
        }
        Ok((whole != parts).then(|| Counterexample {
            choices: vec![c.clone(), c2.clone()],
            detail: format!("d(C1,C2) = {whole} but the characteristic metrics sum to {parts}"),
        }))
    })?;

    let results = [
        (Axiom::A0_1, pairs.len(), a01),
        (Axiom::A0_2, pairs.len(), a02),
        (Axiom::A0_3, triples.len(), a03),
        (Axiom::A1, triples.len(), a1),
        (Axiom::A2, pairs.len(), a2),
        (Axiom::A3, pairs.len(), a3),
        (Axiom::A4Prime, pairs.len(), a4),
        (Axiom::A5Prime, pool.len(), a5),
        (Axiom::ElementaryDecomposability, pairs.len(), ed),
    ]
    .into_iter()
    .map(|(axiom, checked, counterexample)| AxiomResult {
        axiom,
        checked,
        counterexample,
    })
    .collect();
    Ok(AxiomReport {
        metric: metric.name().to_string(),
        results,
    })
}

fn format_menus(ground: &GroundSet, menus: &[Menu]) -> String {
    menus
        .iter()
        .map(|&m| ground.format_menu(m))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The counterexample of the earliest failing instance, if any.
fn first_failure<T, F>(items: &[T], check: F) -> Result<Option<Counterexample>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Counterexample>> + Sync,
{
    items
        .par_iter()
        .map(&check)
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()
        .map(Option::flatten)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::Metric;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exhaustive_pool_has_every_quasi_choice() {
        let g = GroundSet::with_size(2).unwrap().shared();
        let inst = AxiomInstances::exhaustive(g).unwrap();
        assert_eq!(inst.pool.len(), 16);
        let distinct: std::collections::BTreeSet<Vec<Menu>> =
            inst.pool.iter().map(|c| c.table().to_vec()).collect();
        assert_eq!(distinct.len(), 16);
        assert_eq!(inst.triples.len(), 16 * 16 * 16);
    }

    #[test]
    fn exhaustive_refuses_three_alternatives() {
        let g = GroundSet::with_size(3).unwrap().shared();
        assert!(AxiomInstances::exhaustive(g).is_err());
    }

    #[test]
    fn delta_passes_on_two_alternatives() {
        let g = GroundSet::with_size(2).unwrap().shared();
        let report =
            check_klamler_axioms(&Metric::Delta, &AxiomInstances::exhaustive(g).unwrap()).unwrap();
        for r in &report.results {
            assert!(
                r.passed(),
                "{}: {}",
                r.axiom,
                r.counterexample.as_ref().unwrap()
            );
        }
    }

    #[test]
    fn a_broken_metric_is_caught() {
        let g = GroundSet::with_size(2).unwrap().shared();
        let inst = AxiomInstances::exhaustive(g).unwrap();
        let doubled =
            crate::metrics::FnMetric::new("double", |a: &QuasiChoice, b: &QuasiChoice| {
                2 * Metric::Delta.distance(a, b).unwrap()
            });
        let report = check_klamler_axioms(&doubled, &inst).unwrap();
        assert!(!report.get(Axiom::A5Prime).passed());
        assert!(report.get(Axiom::A0_1).passed());
        assert!(report.get(Axiom::A1).passed());
    }

    #[test]
    fn sampled_instances_are_reproducible() {
        let g = GroundSet::with_size(3).unwrap().shared();
        let a = AxiomInstances::sampled(g.clone(), 20, &mut ChaCha8Rng::seed_from_u64(7));
        let b = AxiomInstances::sampled(g, 20, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a.pool, b.pool);
        assert_eq!(a.pairs.len(), 20);
        assert_eq!(a.triples.len(), 20);
    }
}
