//! Stochastic choice functions and their irrationality.
//!
//! A stochastic choice function assigns each nonempty menu a probability
//! distribution over its items. Its Block–Marschak polynomials are
//!
//! ```text
//! q(a, T) = Σ_{T ⊆ U ⊆ X} (−1)^{|U∖T|} p(a, U)
//! ```
//!
//! and by Falmagne's theorem the function is a random utility model exactly
//! when all of them are nonnegative. The negativity vector sums the negative
//! polynomials per item; comparing sorted negativity vectors gives the
//! permutation-invariant preorder `≾*`.
//!
//! All probabilities are exact rationals. Only the KL divergence is a float.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::choice::QuasiChoice;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Menu, Permutation};
use crate::rational::{format_rational, parse_rational, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StochasticChoice {
    ground: Arc<GroundSet>,
    /// `p[menu.index() * n + item]`; zero whenever `item ∉ menu`.
    p: Vec<Rational>,
}

impl StochasticChoice {
    /// Builds and validates `p` from `f(item, menu)`, called for every
    /// nonempty menu and every item in it.
    pub fn from_fn<F>(ground: Arc<GroundSet>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, Menu) -> Rational,
    {
        let n = ground.len();
        let mut p = vec![Rational::zero(); n << n];
        for m in ground.nonempty_menus() {
            for a in m.items() {
                p[m.index() * n + a] = f(a, m);
            }
        }
        let sc = StochasticChoice { ground, p };
        sc.validate()?;
        Ok(sc)
    }

    /// A choice function (one item per nonempty menu) as a 0/1 stochastic
    /// function.
    pub fn from_choice_function(choice: &QuasiChoice) -> Result<Self> {
        if !choice.is_choice_function() {
            return Err(Error::PreconditionViolated(
                "a choice function picks exactly one item from every nonempty menu".into(),
            ));
        }
        StochasticChoice::from_fn(choice.ground().clone(), |a, m| {
            if choice.get(m).contains(a) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    fn validate(&self) -> Result<()> {
        let g = &self.ground;
        for m in g.nonempty_menus() {
            let mut sum = Rational::zero();
            for a in 0..g.len() {
                let v = self.get(a, m);
                if !m.contains(a) {
                    if !v.is_zero() {
                        return Err(Error::ProbabilityOutsideMenu {
                            item: g.name(a).to_string(),
                            menu: g.format_menu(m),
                        });
                    }
                    continue;
                }
                if v.is_negative() || *v > Rational::one() {
                    return Err(Error::ProbabilityOutOfRange {
                        item: g.name(a).to_string(),
                        menu: g.format_menu(m),
                        value: format_rational(v),
                    });
                }
                sum += v;
            }
            if !sum.is_one() {
                return Err(Error::ProbabilitySum {
                    menu: g.format_menu(m),
                    sum: format_rational(&sum),
                });
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// `p(item, menu)`; zero when `item ∉ menu`.
    pub fn get(&self, item: usize, menu: Menu) -> &Rational {
        &self.p[menu.index() * self.ground.len() + item]
    }

    fn same_ground(&self, other: &StochasticChoice) -> Result<()> {
        if *self.ground == *other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// Parses `{"alternatives": [...], "p": {"x,y": {"x": "0.5", "y": "0.5"}, ...}}`.
    /// Every nonempty menu must be present with every one of its items.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: StochasticFile = serde_json::from_str(text).map_err(|e| {
            Error::PreconditionViolated(format!("malformed stochastic choice file: {e}"))
        })?;
        StochasticChoice::from_file(file)
    }

    pub(crate) fn from_file(file: StochasticFile) -> Result<Self> {
        let ground = GroundSet::new(file.alternatives)?.shared();
        let mut given: BTreeMap<Menu, BTreeMap<usize, Rational>> = BTreeMap::new();
        for (key, row) in &file.p {
            let menu = ground.menu(key)?;
            if menu.is_empty() {
                return Err(Error::PreconditionViolated(format!(
                    "empty menu key `{key}`"
                )));
            }
            let mut parsed = BTreeMap::new();
            for (name, value) in row {
                let a = ground.index_of(name)?;
                if !menu.contains(a) {
                    return Err(Error::ItemNotInMenu {
                        item: name.clone(),
                        menu: ground.format_menu(menu),
                    });
                }
                parsed.insert(a, parse_rational(value)?);
            }
            if given.insert(menu, parsed).is_some() {
                return Err(Error::PreconditionViolated(format!(
                    "menu {} is listed twice",
                    ground.format_menu(menu)
                )));
            }
        }
        for m in ground.nonempty_menus() {
            let Some(row) = given.get(&m) else {
                return Err(Error::PreconditionViolated(format!(
                    "menu {} is missing; probabilities are required on every nonempty menu",
                    ground.format_menu(m)
                )));
            };
            if let Some(a) = m.items().find(|a| !row.contains_key(a)) {
                return Err(Error::PreconditionViolated(format!(
                    "item {} has no probability in menu {}",
                    ground.name(a),
                    ground.format_menu(m)
                )));
            }
        }
        StochasticChoice::from_fn(ground, |a, m| given[&m][&a].clone())
    }

    pub(crate) fn to_file(&self) -> StochasticFile {
        let g = &self.ground;
        StochasticFile {
            alternatives: g.names().to_vec(),
            p: g.nonempty_menus()
                .map(|m| {
                    let row = m
                        .items()
                        .map(|a| (g.name(a).to_string(), format_rational(self.get(a, m))))
                        .collect();
                    (g.menu_key(m), row)
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plain strings serialize")
    }
}

/// On-disk layout; maps keep insertion order so emitted files list menus
/// canonically.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct StochasticFile {
    pub alternatives: Vec<String>,
    pub p: IndexMap<String, IndexMap<String, String>>,
}

/// A strict ranking of the alternatives, best first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    ranking: Vec<usize>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<usize>) -> Result<Self> {
        Permutation::new(ranking.clone())?;
        Ok(LinearOrder { ranking })
    }

    pub fn from_names<S: AsRef<str>>(ground: &GroundSet, names: &[S]) -> Result<Self> {
        if names.len() != ground.len() {
            return Err(Error::NotABijection(format!(
                "a linear order must rank all {} alternatives",
                ground.len()
            )));
        }
        let ranking = names
            .iter()
            .map(|s| ground.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(ranking)
    }

    /// All `n!` orders.
    pub fn all(n: usize) -> impl Iterator<Item = LinearOrder> {
        Permutation::all(n).map(|p| LinearOrder {
            ranking: p.image().to_vec(),
        })
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    /// The best item of a nonempty menu.
    pub fn top(&self, menu: Menu) -> Option<usize> {
        self.ranking.iter().copied().find(|&a| menu.contains(a))
    }
}

/// The random utility model of a distribution over linear orders.
pub fn sample_rum(
    ground: &Arc<GroundSet>,
    distribution: &[(LinearOrder, Rational)],
) -> Result<StochasticChoice> {
    let mut total = Rational::zero();
    for (order, weight) in distribution {
        if order.ranking.len() != ground.len() {
            return Err(Error::NotADistribution(format!(
                "order {:?} does not rank {} alternatives",
                order.ranking,
                ground.len()
            )));
        }
        if weight.is_negative() {
            return Err(Error::NotADistribution(format!(
                "negative weight {}",
                format_rational(weight)
            )));
        }
        total += weight;
    }
    if !total.is_one() {
        return Err(Error::NotADistribution(format!(
            "weights sum to {}",
            format_rational(&total)
        )));
    }
    let n = ground.len();
    let mut p = vec![Rational::zero(); n << n];
    for m in ground.nonempty_menus() {
        for (order, weight) in distribution {
            let top = order.top(m).expect("menu is nonempty");
            p[m.index() * n + top] += weight;
        }
    }
    let sc = StochasticChoice {
        ground: ground.clone(),
        p,
    };
    debug_assert!(sc.validate().is_ok());
    Ok(sc)
}

/// `q(a, T)`, summing over supersets of `T`.
pub fn bm_polynomial(p: &StochasticChoice, item: usize, menu: Menu) -> Result<Rational> {
    if menu.is_empty() || !menu.contains(item) {
        return Err(Error::ItemNotInMenu {
            item: p.ground.name(item.min(p.ground.len() - 1)).to_string(),
            menu: p.ground.format_menu(menu),
        });
    }
    let full = p.ground.full_menu();
    let mut q = Rational::zero();
    for u in menu.supersets_within(full) {
        let term = p.get(item, u);
        if u.difference(menu).len() % 2 == 0 {
            q += term;
        } else {
            q -= term;
        }
    }
    Ok(q)
}

/// All Block–Marschak polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmTable {
    ground: Arc<GroundSet>,
    /// Keyed by `(item, menu)` with `item ∈ menu`.
    pub entries: BTreeMap<(usize, Menu), Rational>,
}

impl BmTable {
    pub fn get(&self, item: usize, menu: Menu) -> Option<&Rational> {
        self.entries.get(&(item, menu))
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// Entries below zero, in `(item, menu)` order.
    pub fn negative(&self) -> Vec<(usize, Menu, Rational)> {
        self.entries
            .iter()
            .filter(|(_, q)| q.is_negative())
            .map(|(&(a, m), q)| (a, m, q.clone()))
            .collect()
    }
}

pub fn bm_table(p: &StochasticChoice) -> BmTable {
    let mut entries = BTreeMap::new();
    for m in p.ground.nonempty_menus() {
        for a in m.items() {
            entries.insert((a, m), bm_polynomial(p, a, m).expect("a is in m"));
        }
    }
    BmTable {
        ground: p.ground.clone(),
        entries,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RumCheck {
    pub rum: bool,
    /// `(item, menu, q)` for every negative polynomial.
    pub negative: Vec<(usize, Menu, Rational)>,
}

pub fn is_rum(p: &StochasticChoice) -> RumCheck {
    let negative = bm_table(p).negative();
    RumCheck {
        rum: negative.is_empty(),
        negative,
    }
}

/// Per-item absolute sum of the negative BM polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativityVector {
    pub values: Vec<Rational>,
}

impl NegativityVector {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Sum of all entries.
    pub fn total(&self) -> Rational {
        self.values.iter().cloned().sum()
    }
}

pub fn negativity_vector(p: &StochasticChoice) -> NegativityVector {
    let mut values = vec![Rational::zero(); p.ground.len()];
    for (a, _, q) in bm_table(p).negative() {
        values[a] -= q;
    }
    NegativityVector { values }
}

/// Outcome of comparing two functions under `≾*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreorderVerdict {
    /// `p ≾* p′` via `forward` and `p′ ≾* p` via `backward`.
    EquallyIrrational {
        forward: Permutation,
        backward: Permutation,
    },
    /// `p ≺* p′`; `witness` maps each item of `p` to a dominating item of `p′`.
    LeftLess {
        witness: Permutation,
    },
    /// `p′ ≺* p`; `witness` maps each item of `p′` to a dominating item of `p`.
    RightLess {
        witness: Permutation,
    },
    Incomparable,
}

/// A permutation `σ` with `v(x) ≤ w(σ(x))` for every `x`, if any exists.
/// Matching the `k`-th smallest entry of `v` to the `k`-th smallest of `w`
/// works whenever any matching does.
pub fn dominating_permutation(v: &[Rational], w: &[Rational]) -> Option<Permutation> {
    if v.len() != w.len() {
        return None;
    }
    let sorted = |x: &[Rational]| {
        let mut idx: Vec<usize> = (0..x.len()).collect();
        idx.sort_by(|&i, &j| x[i].cmp(&x[j]).then(i.cmp(&j)));
        idx
    };
    let (sv, sw) = (sorted(v), sorted(w));
    let mut image = vec![0; v.len()];
    for (&i, &j) in sv.iter().zip(&sw) {
        if v[i] > w[j] {
            return None;
        }
        image[i] = j;
    }
    Some(Permutation::new(image).expect("matching is a bijection"))
}

pub fn compare_vectors(v: &NegativityVector, w: &NegativityVector) -> PreorderVerdict {
    match (
        dominating_permutation(&v.values, &w.values),
        dominating_permutation(&w.values, &v.values),
    ) {
        (Some(forward), Some(backward)) => PreorderVerdict::EquallyIrrational { forward, backward },
        (Some(witness), None) => PreorderVerdict::LeftLess { witness },
        (None, Some(witness)) => PreorderVerdict::RightLess { witness },
        (None, None) => PreorderVerdict::Incomparable,
    }
}

pub fn compare_irrationality(
    p: &StochasticChoice,
    q: &StochasticChoice,
) -> Result<PreorderVerdict> {
    p.same_ground(q)?;
    Ok(compare_vectors(
        &negativity_vector(p),
        &negativity_vector(q),
    ))
}

/// `p̃(σ(x), σ(A)) = p(x, A)`.
pub fn apply_permutation(p: &StochasticChoice, sigma: &Permutation) -> Result<StochasticChoice> {
    if sigma.len() != p.ground.len() {
        return Err(Error::NotABijection(format!(
            "{:?} does not act on {} alternatives",
            sigma.image(),
            p.ground.len()
        )));
    }
    let inv = sigma.inverse();
    StochasticChoice::from_fn(p.ground.clone(), |a, m| {
        p.get(inv.apply(a), inv.apply_menu(m)).clone()
    })
}

/// A permutation `σ` with `p(x, A) = q(σ(x), σ(A))` everywhere, if any.
pub fn are_isomorphic(p: &StochasticChoice, q: &StochasticChoice) -> Result<Option<Permutation>> {
    p.same_ground(q)?;
    let g = &p.ground;
    Ok(Permutation::all(g.len()).find(|sigma| {
        g.nonempty_menus().all(|m| {
            m.items()
                .all(|a| p.get(a, m) == q.get(sigma.apply(a), sigma.apply_menu(m)))
        })
    }))
}

/// `sup |p(a, A) − q(a, A)|` over `a ∈ A`.
pub fn total_variation(p: &StochasticChoice, q: &StochasticChoice) -> Result<Rational> {
    p.same_ground(q)?;
    let g = &p.ground;
    Ok(g.nonempty_menus()
        .flat_map(|m| m.items().map(move |a| (a, m)))
        .map(|(a, m)| (p.get(a, m) - q.get(a, m)).abs())
        .max()
        .unwrap_or_else(Rational::zero))
}

/// A KL divergence value; `Infinite` orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Divergence {
    Finite(f64),
    Infinite,
}

impl Divergence {
    pub fn finite(self) -> Option<f64> {
        match self {
            Divergence::Finite(v) => Some(v),
            Divergence::Infinite => None,
        }
    }

    /// `Less` when `self` is smaller by more than `margin`, `Equal` when the
    /// two finite values are within `margin`.
    pub fn compare_with_margin(self, other: Divergence, margin: f64) -> Ordering {
        match (self, other) {
            (Divergence::Finite(a), Divergence::Finite(b)) if (a - b).abs() <= margin => {
                Ordering::Equal
            }
            (Divergence::Finite(a), Divergence::Finite(b)) => a.total_cmp(&b),
            (Divergence::Finite(_), Divergence::Infinite) => Ordering::Less,
            (Divergence::Infinite, Divergence::Finite(_)) => Ordering::Greater,
            (Divergence::Infinite, Divergence::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Divergence::Finite(v) => write!(f, "{}", format_significant(*v, 12)),
            Divergence::Infinite => f.write_str("inf"),
        }
    }
}

/// `v` rounded to `digits` significant digits, trailing zeros dropped.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let s = format!("{:.*e}", digits - 1, v);
    let parsed: f64 = s.parse().expect("formatted float parses");
    format!("{parsed}")
}

/// `Σ p(a,A) log(p(a,A) / q(a,A))` over `a ∈ A`, natural log, with
/// `0 · log(0/q) = 0` and `+∞` when `p > 0 = q`.
pub fn kl_divergence(p: &StochasticChoice, q: &StochasticChoice) -> Result<Divergence> {
    p.same_ground(q)?;
    let mut total = 0.0;
    for m in p.ground.nonempty_menus() {
        for a in m.items() {
            let (pa, qa) = (p.get(a, m), q.get(a, m));
            if pa.is_zero() {
                continue;
            }
            if qa.is_zero() {
                return Ok(Divergence::Infinite);
            }
            // the ratio is exact, so only one rounding enters per term
            total += to_f64(pa) * to_f64(&(pa / qa)).ln();
        }
    }
    Ok(Divergence::Finite(total))
}

/// `p(x, B) > p(x, A)` for some `x ∈ A ⊆ B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RegularityViolation {
    pub item: usize,
    pub smaller: Menu,
    pub larger: Menu,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityCheck {
    pub monotonic: bool,
    pub witnesses: Vec<RegularityViolation>,
}

/// Regularity: `A ⊆ B` implies `p(x, B) ≤ p(x, A)` for every `x ∈ A`.
pub fn is_monotonic(p: &StochasticChoice) -> MonotonicityCheck {
    let full = p.ground.full_menu();
    let mut witnesses = Vec::new();
    for a in p.ground.nonempty_menus() {
        for b in a.supersets_within(full).filter(|&b| b != a) {
            for x in a.items() {
                if p.get(x, b) > p.get(x, a) {
                    witnesses.push(RegularityViolation {
                        item: x,
                        smaller: a,
                        larger: b,
                    });
                }
            }
        }
    }
    MonotonicityCheck {
        monotonic: witnesses.is_empty(),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rational};

    fn uniform(n: usize) -> StochasticChoice {
        let g = GroundSet::with_size(n).unwrap().shared();
        StochasticChoice::from_fn(g, |_, m| rational(1, m.len() as i64)).unwrap()
    }

    #[test]
    fn uniform_is_rum_and_regular() {
        let p = uniform(3);
        assert!(is_rum(&p).rum);
        assert!(negativity_vector(&p).is_zero());
        assert!(is_monotonic(&p).monotonic);
    }

    #[test]
    fn uniform_over_orders_is_uniform() {
        let g = GroundSet::with_size(3).unwrap().shared();
        let dist: Vec<_> = LinearOrder::all(3).map(|o| (o, rational(1, 6))).collect();
        assert_eq!(sample_rum(&g, &dist).unwrap(), uniform(3));
    }

    #[test]
    fn point_mass_is_deterministic() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap().shared();
        let order = LinearOrder::from_names(&g, &["x", "y", "z"]).unwrap();
        let p = sample_rum(&g, &[(order, integer(1))]).unwrap();
        let c1 = QuasiChoice::from_notation(g.clone(), "[x] y, [x] z, [y] z, [x] y z").unwrap();
        assert_eq!(p, StochasticChoice::from_choice_function(&c1).unwrap());
    }

    #[test]
    fn bad_distributions_are_rejected() {
        let g = GroundSet::with_size(2).unwrap().shared();
        let o = LinearOrder::new(vec![0, 1]).unwrap();
        assert!(matches!(
            sample_rum(&g, &[(o.clone(), rational(1, 2))]),
            Err(Error::NotADistribution(_))
        ));
        assert!(matches!(
            sample_rum(&g, &[(o.clone(), integer(2)), (o, integer(-1))]),
            Err(Error::NotADistribution(_))
        ));
    }

    #[test]
    fn validation_reports_the_broken_menu() {
        let g = GroundSet::with_size(2).unwrap().shared();
        let err = StochasticChoice::from_fn(g.clone(), |_, m| {
            if m.len() == 2 {
                rational(1, 3)
            } else {
                integer(1)
            }
        });
        assert!(matches!(err, Err(Error::ProbabilitySum { .. })));
        let err = StochasticChoice::from_fn(g, |a, m| match (m.len(), a) {
            (2, 0) => integer(2),
            (2, _) => integer(-1),
            _ => integer(1),
        });
        assert!(matches!(err, Err(Error::ProbabilityOutOfRange { .. })));
    }

    #[test]
    fn bm_requires_membership() {
        let p = uniform(3);
        assert!(matches!(
            bm_polynomial(&p, 0, Menu(0b110)),
            Err(Error::ItemNotInMenu { .. })
        ));
        let full = p.ground().full_menu();
        assert_eq!(bm_polynomial(&p, 1, full).unwrap(), *p.get(1, full));
    }

    #[test]
    fn dominance_by_sorting() {
        let v = [rational(2, 10), integer(0), integer(0)];
        let w = [rational(3, 10), integer(0), rational(1, 10)];
        let sigma = dominating_permutation(&v, &w).unwrap();
        for x in 0..3 {
            assert!(v[x] <= w[sigma.apply(x)]);
        }
        assert!(dominating_permutation(&w, &v).is_none());
        let verdict = compare_vectors(
            &NegativityVector { values: v.to_vec() },
            &NegativityVector { values: w.to_vec() },
        );
        assert!(matches!(verdict, PreorderVerdict::LeftLess { .. }));
    }

    #[test]
    fn json_round_trip() {
        let p = uniform(3);
        let text = p.to_json();
        assert_eq!(StochasticChoice::from_json(&text).unwrap(), p);
        assert_eq!(StochasticChoice::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn missing_menus_are_rejected() {
        let text =
            r#"{"alternatives": ["x","y"], "p": {"x": {"x": "1"}, "x,y": {"x": "1", "y": "0"}}}"#;
        assert!(StochasticChoice::from_json(text).is_err());
        let text = r#"{"alternatives": ["x","y"], "p": {"x": {"x": "1"}, "y": {"y": "1"}, "x,y": {"x": "1"}}}"#;
        assert!(StochasticChoice::from_json(text).is_err());
    }

    #[test]
    fn kl_conventions() {
        let p = uniform(2);
        assert_eq!(kl_divergence(&p, &p).unwrap(), Divergence::Finite(0.0));
        let g = p.ground().clone();
        let det = StochasticChoice::from_fn(g, |a, m| {
            if m.items().next() == Some(a) {
                integer(1)
            } else {
                integer(0)
            }
        })
        .unwrap();
        assert_eq!(kl_divergence(&p, &det).unwrap(), Divergence::Infinite);
        assert!(matches!(kl_divergence(&det, &p).unwrap(), Divergence::Finite(v) if v > 0.0));
        assert!(Divergence::Finite(1e300) < Divergence::Infinite);
    }
}
