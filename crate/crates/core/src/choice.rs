//! Deterministic choice behavior: quasi-choices, choice correspondences,
//! the consistency axioms α and γ, and rationalizability.
//!
//! A quasi-choice maps every menu to a subset of it and may be empty-valued
//! on nonempty menus; a choice correspondence never is. Rationalizability of
//! a quasi-choice means `C(A) = max(A, →)` for some arbitrary relation `→`,
//! and holds exactly when α and γ both hold.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Menu, Permutation};
use crate::relation::{max_set_rows, BinaryRelation};

/// A total map from the menus of a ground set to choice sets, stored as a
/// dense table indexed by menu bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiChoice {
    ground: Arc<GroundSet>,
    table: Arc<[Menu]>,
}

impl QuasiChoice {
    pub fn from_table(ground: Arc<GroundSet>, table: Vec<Menu>) -> Result<Self> {
        validate_table(&ground, &table)?;
        Ok(QuasiChoice {
            ground,
            table: table.into(),
        })
    }

    pub(crate) fn from_table_unchecked(ground: Arc<GroundSet>, table: Arc<[Menu]>) -> Self {
        debug_assert!(validate_table(&ground, &table).is_ok());
        QuasiChoice { ground, table }
    }

    /// Builds a quasi-choice from an explicit function on menus.
    pub fn from_fn<F>(ground: Arc<GroundSet>, mut f: F) -> Result<Self>
    where
        F: FnMut(Menu) -> Menu,
    {
        let table = ground
            .all_menus()
            .map(|m| if m.is_empty() { m } else { f(m) })
            .collect();
        QuasiChoice::from_table(ground, table)
    }

    /// Parses bracket notation: menus separated by `,`, items by whitespace,
    /// chosen items in brackets. `"[x] y, [x] z, [y] z, x [y] z"` is the
    /// choice function picking `x` from `{x,y}`, `x` from `{x,z}`, `y` from
    /// `{y,z}` and `y` from `{x,y,z}`.
    ///
    /// Singletons that are not listed choose themselves. Every other
    /// nonempty menu must be listed.
    pub fn from_notation(ground: Arc<GroundSet>, notation: &str) -> Result<Self> {
        let n = ground.len();
        let mut table: Vec<Option<Menu>> = vec![None; 1 << n];
        table[0] = Some(Menu::EMPTY);
        for token in notation.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (menu, chosen) = parse_notation_token(&ground, token)?;
            table[menu.index()] = Some(chosen);
        }
        let mut dense = Vec::with_capacity(1 << n);
        for (bits, entry) in table.into_iter().enumerate() {
            let menu = Menu(bits as u32);
            dense.push(match entry {
                Some(chosen) => chosen,
                None if menu.len() == 1 => menu,
                None => {
                    return Err(Error::PreconditionViolated(format!(
                        "menu {} is not listed",
                        ground.format_menu(menu)
                    )))
                }
            });
        }
        QuasiChoice::from_table(ground, dense)
    }

    /// The elementary quasi-choice `C_{S↦T}`: `S` goes to `T`, everything
    /// else to the empty set.
    pub fn elementary(ground: Arc<GroundSet>, menu: Menu, choice: Menu) -> Result<Self> {
        if !choice.is_subset(menu) {
            return Err(Error::NotASubset(
                ground.format_menu(choice),
                ground.format_menu(menu),
            ));
        }
        if !menu.is_subset(ground.full_menu()) {
            return Err(Error::NotASubset(
                format!("{menu}"),
                ground.format_menu(ground.full_menu()),
            ));
        }
        let mut table = vec![Menu::EMPTY; ground.menu_count()];
        table[menu.index()] = choice;
        QuasiChoice::from_table(ground, table)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// The choice set of `menu`.
    pub fn get(&self, menu: Menu) -> Menu {
        self.table[menu.index()]
    }

    pub fn table(&self) -> &[Menu] {
        &self.table
    }

    /// Copy with a single menu's choice set replaced.
    pub fn with_choice(&self, menu: Menu, choice: Menu) -> Result<QuasiChoice> {
        let mut table = self.table.to_vec();
        table[menu.index()] = choice;
        QuasiChoice::from_table(self.ground.clone(), table)
    }

    pub fn is_decisive(&self) -> bool {
        self.ground
            .nonempty_menus()
            .all(|m| !self.get(m).is_empty())
    }

    /// `C(A) ⊆ A` for every menu `A` and every item chosen is a singleton
    /// pick: a choice function.
    pub fn is_choice_function(&self) -> bool {
        self.ground.nonempty_menus().all(|m| self.get(m).len() == 1)
    }

    pub fn same_ground(&self, other: &QuasiChoice) -> Result<()> {
        if Arc::ptr_eq(&self.ground, &other.ground) || self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// Relabels alternatives: the result chooses `σ(C(A))` from `σ(A)`.
    pub fn permuted(&self, sigma: &Permutation) -> QuasiChoice {
        let mut table = vec![Menu::EMPTY; self.table.len()];
        for menu in self.ground.all_menus() {
            table[sigma.apply_menu(menu).index()] = sigma.apply_menu(self.get(menu));
        }
        QuasiChoice {
            ground: self.ground.clone(),
            table: table.into(),
        }
    }

    /// Bracket rendering of one menu, e.g. `x [y] z`.
    pub fn format_menu_choice(&self, menu: Menu) -> String {
        format_choice(&self.ground, menu, self.get(menu))
    }
}

pub(crate) fn format_choice(ground: &GroundSet, menu: Menu, chosen: Menu) -> String {
    let items: Vec<String> = menu
        .items()
        .map(|i| {
            if chosen.contains(i) {
                format!("[{}]", ground.name(i))
            } else {
                ground.name(i).to_string()
            }
        })
        .collect();
    items.join(" ")
}

fn parse_notation_token(ground: &GroundSet, token: &str) -> Result<(Menu, Menu)> {
    let mut menu = Menu::EMPTY;
    let mut chosen = Menu::EMPTY;
    for word in token.split_whitespace() {
        let (name, picked) = match word.strip_prefix('[').and_then(|w| w.strip_suffix(']')) {
            Some(inner) => (inner, true),
            None => (word, false),
        };
        let i = ground.index_of(name)?;
        menu = menu.with(i);
        if picked {
            chosen = chosen.with(i);
        }
    }
    Ok((menu, chosen))
}

fn validate_table(ground: &GroundSet, table: &[Menu]) -> Result<()> {
    if table.len() != ground.menu_count() {
        return Err(Error::TableSize {
            expected: ground.menu_count(),
            got: table.len(),
        });
    }
    if !table[0].is_empty() {
        return Err(Error::NonEmptyChoiceOfEmptyMenu);
    }
    for menu in ground.all_menus() {
        let chosen = table[menu.index()];
        if !chosen.is_subset(menu) {
            return Err(Error::ChoiceOutsideMenu {
                menu: ground.format_menu(menu),
                choice: ground.format_menu(chosen),
            });
        }
    }
    Ok(())
}

impl fmt::Display for QuasiChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ground
            .nonempty_menus()
            .map(|m| self.format_menu_choice(m))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// A quasi-choice that is nonempty on every nonempty menu.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChoiceCorrespondence(QuasiChoice);

impl ChoiceCorrespondence {
    pub fn new(choice: QuasiChoice) -> Result<Self> {
        if let Some(menu) = choice
            .ground
            .nonempty_menus()
            .find(|&m| choice.get(m).is_empty())
        {
            return Err(Error::NotDecisive(choice.ground.format_menu(menu)));
        }
        Ok(ChoiceCorrespondence(choice))
    }

    pub fn as_quasi(&self) -> &QuasiChoice {
        &self.0
    }

    pub fn into_quasi(self) -> QuasiChoice {
        self.0
    }
}

impl TryFrom<QuasiChoice> for ChoiceCorrespondence {
    type Error = Error;

    fn try_from(choice: QuasiChoice) -> Result<Self> {
        ChoiceCorrespondence::new(choice)
    }
}

impl std::ops::Deref for ChoiceCorrespondence {
    type Target = QuasiChoice;

    fn deref(&self) -> &QuasiChoice {
        &self.0
    }
}

impl fmt::Display for ChoiceCorrespondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `table(A) = max(A, rel)` for every menu.
pub fn induced_quasi_choice(rel: &BinaryRelation) -> QuasiChoice {
    let ground = rel.ground().clone();
    let table: Vec<Menu> = ground
        .all_menus()
        .map(|m| max_set_rows(rel.rows(), m))
        .collect();
    QuasiChoice {
        ground,
        table: table.into(),
    }
}

pub(crate) fn induced_table(n: usize, rows: &[Menu]) -> Vec<Menu> {
    crate::ground::all_menus(n)
        .map(|m| max_set_rows(rows, m))
        .collect()
}

/// `x ∈ C(larger)`, `x ∈ smaller ⊆ larger`, but `x ∉ C(smaller)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaViolation {
    pub item: usize,
    pub smaller: Menu,
    pub larger: Menu,
}

/// `x ∈ C(first) ∩ C(second)` but `x ∉ C(first ∪ second)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaViolation {
    pub item: usize,
    pub first: Menu,
    pub second: Menu,
}

/// Outcome of an axiom scan with every violation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck<W> {
    pub witnesses: Vec<W>,
}

impl<W> AxiomCheck<W> {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Standard contraction consistency. Witnesses are ordered by
/// `(larger, smaller, item)` ascending.
pub fn satisfies_alpha(choice: &QuasiChoice) -> AxiomCheck<AlphaViolation> {
    let mut witnesses = Vec::new();
    for larger in choice.ground.nonempty_menus() {
        let chosen = choice.get(larger);
        if chosen.is_empty() {
            continue;
        }
        for smaller in larger.subsets() {
            // items chosen from `larger` that are offered in `smaller` but dropped there
            let dropped = chosen.intersection(smaller).difference(choice.get(smaller));
            for item in dropped.items() {
                witnesses.push(AlphaViolation {
                    item,
                    smaller,
                    larger,
                });
            }
        }
    }
    AxiomCheck { witnesses }
}

/// Standard expansion consistency, scanned over unordered menu pairs with
/// `first < second` by bitmask.
pub fn satisfies_gamma(choice: &QuasiChoice) -> AxiomCheck<GammaViolation> {
    let mut witnesses = Vec::new();
    let menus: Vec<Menu> = choice.ground.nonempty_menus().collect();
    for (i, &first) in menus.iter().enumerate() {
        let c_first = choice.get(first);
        if c_first.is_empty() {
            continue;
        }
        for &second in &menus[i + 1..] {
            let common = c_first.intersection(choice.get(second));
            let lost = common.difference(choice.get(first.union(second)));
            for item in lost.items() {
                witnesses.push(GammaViolation {
                    item,
                    first,
                    second,
                });
            }
        }
    }
    AxiomCheck { witnesses }
}

/// Result of the α ∧ γ rationalizability test.
#[derive(Clone, Debug)]
pub struct Rationalizability {
    pub alpha: AxiomCheck<AlphaViolation>,
    pub gamma: AxiomCheck<GammaViolation>,
    /// Present exactly when both axioms hold.
    pub rationalizer: Option<BinaryRelation>,
}

impl Rationalizability {
    pub fn is_rationalizable(&self) -> bool {
        self.rationalizer.is_some()
    }
}

/// Decides rationalizability via α ∧ γ and, when it holds, returns the
/// pairwise rationalizer `a → x` iff `x ∉ C({a, x})` (for `a = x`, iff
/// `x ∉ C({x})`). The rationalizer is re-induced and compared as a
/// self-check.
pub fn is_rationalizable(choice: &QuasiChoice) -> Rationalizability {
    let alpha = satisfies_alpha(choice);
    let gamma = satisfies_gamma(choice);
    let rationalizer = if alpha.holds() && gamma.holds() {
        let rel = pairwise_relation(choice);
        let reinduced = induced_quasi_choice(&rel);
        assert_eq!(
            reinduced.table(),
            choice.table(),
            "pairwise rationalizer failed to re-induce a quasi-choice satisfying alpha and gamma"
        );
        Some(rel)
    } else {
        None
    };
    Rationalizability {
        alpha,
        gamma,
        rationalizer,
    }
}

fn pairwise_relation(choice: &QuasiChoice) -> BinaryRelation {
    let n = choice.n();
    let mut rows = vec![Menu::EMPTY; n];
    for (a, row) in rows.iter_mut().enumerate() {
        for x in 0..n {
            let pair = Menu::singleton(a).with(x);
            if !choice.get(pair).contains(x) {
                *row = row.with(x);
            }
        }
    }
    BinaryRelation::from_rows(choice.ground.clone(), rows)
}

/// The asymmetric preference revealed by a rationalizable choice:
/// `x ≻ y` iff `c({x, y}) = {x}`.
pub fn revealed_preference(choice: &ChoiceCorrespondence) -> Result<BinaryRelation> {
    if !is_rationalizable(choice).is_rationalizable() {
        return Err(Error::NotRationalizable);
    }
    Ok(revealed_pairs(choice))
}

pub(crate) fn revealed_pairs(choice: &QuasiChoice) -> BinaryRelation {
    let n = choice.n();
    let mut rows = vec![Menu::EMPTY; n];
    for (x, row) in rows.iter_mut().enumerate() {
        for y in 0..n {
            if x != y && choice.get(Menu::singleton(x).with(y)) == Menu::singleton(x) {
                *row = row.with(y);
            }
        }
    }
    BinaryRelation::from_rows(choice.ground.clone(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Arc<GroundSet> {
        GroundSet::new(["x", "y", "z"]).unwrap().shared()
    }

    fn q(g: &Arc<GroundSet>, s: &str) -> QuasiChoice {
        QuasiChoice::from_notation(g.clone(), s).unwrap()
    }

    #[test]
    fn induced_from_linear_order() {
        let g = xyz();
        let rel = BinaryRelation::parse(g.clone(), "x>y, x>z, y>z").unwrap();
        let c1 = q(&g, "[x] y, [x] z, [y] z, [x] y z");
        assert_eq!(induced_quasi_choice(&rel), c1);
    }

    #[test]
    fn induced_from_empty_relation_is_identity() {
        let g = xyz();
        let c = induced_quasi_choice(&BinaryRelation::empty(g.clone()));
        for m in g.all_menus() {
            assert_eq!(c.get(m), m);
        }
    }

    #[test]
    fn alpha_witness_for_second_best_pick() {
        let g = xyz();
        let c2 = q(&g, "[x] y, [x] z, [y] z, x [y] z");
        let alpha = satisfies_alpha(&c2);
        assert_eq!(
            alpha.witnesses,
            vec![AlphaViolation {
                item: 1,
                smaller: g.menu("xy").unwrap(),
                larger: g.full_menu(),
            }]
        );
    }

    #[test]
    fn full_indifference_is_consistent() {
        let g = xyz();
        let all = QuasiChoice::from_fn(g, |m| m).unwrap();
        assert!(satisfies_alpha(&all).holds());
        assert!(satisfies_gamma(&all).holds());
        let rev = revealed_preference(&ChoiceCorrespondence::new(all).unwrap()).unwrap();
        assert!(rev.is_empty());
    }

    #[test]
    fn two_cycle_quasi_choice_is_rationalizable() {
        // C({x,y}) = ∅ needs x→y and y→x
        let g = GroundSet::new(["x", "y"]).unwrap().shared();
        let c = q(&g, "x y");
        let r = is_rationalizable(&c);
        let rel = r.rationalizer.expect("rationalizable");
        assert!(rel.holds(0, 1) && rel.holds(1, 0));
    }

    #[test]
    fn revealed_preference_rejects_irrational_choice() {
        let g = xyz();
        let c2 = ChoiceCorrespondence::new(q(&g, "[x] y, [x] z, [y] z, x [y] z")).unwrap();
        assert_eq!(revealed_preference(&c2), Err(Error::NotRationalizable));
    }

    #[test]
    fn decisiveness_is_checked() {
        let g = xyz();
        let c = q(&g, "x y, [x] z, [y] z, [x] y z");
        assert!(matches!(
            ChoiceCorrespondence::new(c),
            Err(Error::NotDecisive(_))
        ));
    }

    #[test]
    fn notation_requires_every_nonsingleton_menu() {
        let g = xyz();
        assert!(QuasiChoice::from_notation(g.clone(), "[x] y").is_err());
        assert!(QuasiChoice::from_notation(g, "[x] y, [x] z, [y] z, [w] x y z").is_err());
    }

    #[test]
    fn display_uses_brackets() {
        let g = xyz();
        let c = q(&g, "[x] y, [x] z, [y] z, x [y] z");
        assert_eq!(c.to_string(), "[x], [y], [x] y, [z], [x] z, [y] z, x [y] z");
    }

    #[test]
    fn elementary_requires_subset() {
        let g = xyz();
        let s = g.menu("xy").unwrap();
        let e = QuasiChoice::elementary(g.clone(), s, g.menu("x").unwrap()).unwrap();
        for m in g.all_menus() {
            let expected = if m == s {
                g.menu("x").unwrap()
            } else {
                Menu::EMPTY
            };
            assert_eq!(e.get(m), expected);
        }
        assert!(matches!(
            QuasiChoice::elementary(g.clone(), s, g.menu("z").unwrap()),
            Err(Error::NotASubset(..))
        ));
    }
}
