//! Structural predicates on relations, canonical completion, the
//! `(m,n)`-Ferrers properties and the nine desirability classes built on
//! them.
//!
//! For an asymmetric acyclic `≻`, the canonical completion `≿` adds every
//! incomparable pair (including the diagonal). `≻` is `(m,n)`-Ferrers when
//! for all `≿`-chains `x₁ ≿ … ≿ x_m` and `y₁ ≿ … ≿ y_n` (repetitions
//! allowed) either `x₁ ≿ y_n` or `y₁ ≿ x_m`. Some familiar cases:
//!
//! | property | relation type |
//! |----------|---------------|
//! | (3,3) | weak order |
//! | (3,1) ∧ (2,2) | semiorder |
//! | (2,2) | interval order |
//! | (3,1) | semitransitive |
//! | (2,1) | transitive |

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::Menu;
use crate::relation::BinaryRelation;

/// The `(m, n)` parameter pair of a Ferrers property, `m ≥ n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FerrersProperty {
    pub m: usize,
    pub n: usize,
}

impl FerrersProperty {
    pub const fn new(m: usize, n: usize) -> Self {
        FerrersProperty { m, n }
    }
}

impl fmt::Display for FerrersProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

const fn fp(m: usize, n: usize) -> FerrersProperty {
    FerrersProperty::new(m, n)
}

/// The nine properties that appear in the desirability lattice.
pub const TRACKED: [FerrersProperty; 9] = [
    fp(1, 1),
    fp(2, 1),
    fp(2, 2),
    fp(3, 1),
    fp(3, 2),
    fp(4, 1),
    fp(4, 2),
    fp(5, 1),
    fp(3, 3),
];

/// Properties whose relation type is pinned down by a classical
/// characterization (acyclic, transitive, interval order, semitransitive,
/// weak order).
pub const CHARACTERIZED: [FerrersProperty; 5] = [fp(1, 1), fp(2, 1), fp(2, 2), fp(3, 1), fp(3, 3)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationProfile {
    pub asymmetric: bool,
    pub irreflexive: bool,
    pub acyclic: bool,
    pub transitive: bool,
    pub negatively_transitive: bool,
    /// Only filled for asymmetric acyclic relations.
    pub ferrers: Option<BTreeMap<FerrersProperty, bool>>,
}

pub fn relation_profile(rel: &BinaryRelation) -> RelationProfile {
    let rows = rel.rows();
    let asymmetric = is_asymmetric_rows(rows);
    let acyclic = is_acyclic_rows(rows);
    let ferrers = (asymmetric && acyclic).then(|| {
        TRACKED
            .iter()
            .map(|&p| (p, ferrers_rows(rows, p.m, p.n)))
            .collect()
    });
    RelationProfile {
        asymmetric,
        irreflexive: (0..rows.len()).all(|x| !rows[x].contains(x)),
        acyclic,
        transitive: is_transitive_rows(rows),
        negatively_transitive: is_negatively_transitive_rows(rows),
        ferrers,
    }
}

fn is_asymmetric_rows(rows: &[Menu]) -> bool {
    (0..rows.len()).all(|x| rows[x].items().all(|y| !rows[y].contains(x)))
}

fn is_transitive_rows(rows: &[Menu]) -> bool {
    (0..rows.len()).all(|x| rows[x].items().all(|y| rows[y].is_subset(rows[x])))
}

fn is_negatively_transitive_rows(rows: &[Menu]) -> bool {
    let n = rows.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            rows[x].contains(y) || (0..n).all(|z| rows[y].contains(z) || !rows[x].contains(z))
        })
    })
}

/// No directed cycle of any length, self-loops and 2-cycles included.
pub(crate) fn is_acyclic_rows(rows: &[Menu]) -> bool {
    let mut reach = rows.to_vec();
    for k in 0..reach.len() {
        let via = reach[k];
        for row in reach.iter_mut() {
            if row.contains(k) {
                *row = row.union(via);
            }
        }
    }
    (0..reach.len()).all(|x| !reach[x].contains(x))
}

fn require_asymmetric_acyclic(rel: &BinaryRelation) -> Result<()> {
    let rows = rel.rows();
    if !is_asymmetric_rows(rows) {
        return Err(Error::PreconditionViolated(format!(
            "{rel} is not asymmetric"
        )));
    }
    if !is_acyclic_rows(rows) {
        return Err(Error::PreconditionViolated(format!("{rel} is not acyclic")));
    }
    Ok(())
}

/// `≿ = ≻ ∪ {(x, y) : x, y incomparable}`, reflexive and complete.
pub fn canonical_completion(rel: &BinaryRelation) -> Result<BinaryRelation> {
    require_asymmetric_acyclic(rel)?;
    Ok(BinaryRelation::from_rows(
        rel.ground().clone(),
        completion_rows(rel.rows()),
    ))
}

fn completion_rows(rows: &[Menu]) -> Vec<Menu> {
    let n = rows.len();
    (0..n)
        .map(|x| {
            (0..n).fold(Menu::EMPTY, |acc, y| {
                if rows[x].contains(y) || !rows[y].contains(x) {
                    acc.with(y)
                } else {
                    acc
                }
            })
        })
        .collect()
}

/// Whether an asymmetric acyclic relation is `(m, n)`-Ferrers.
pub fn is_mn_ferrers(rel: &BinaryRelation, m: usize, n: usize) -> Result<bool> {
    if n < 1 || m < n {
        return Err(Error::InvalidFerrersParameters { m, n });
    }
    require_asymmetric_acyclic(rel)?;
    Ok(ferrers_rows(rel.rows(), m, n))
}

/// Only chain endpoints matter: `≿` is reflexive, so a chain of length `k`
/// from `a` can end exactly at the items reachable from `a` in at most
/// `k - 1` steps.
fn ferrers_rows(rows: &[Menu], m: usize, n: usize) -> bool {
    let weak = completion_rows(rows);
    let ends_m = chain_ends(&weak, m);
    let ends_n = chain_ends(&weak, n);
    let size = rows.len();
    for x_first in 0..size {
        for y_first in 0..size {
            // x_m with ¬(y₁ ≿ x_m)
            let bad_x_last = ends_m[x_first].difference(weak[y_first]);
            if bad_x_last.is_empty() {
                continue;
            }
            // y_n with ¬(x₁ ≿ y_n)
            let bad_y_last = ends_n[y_first].difference(weak[x_first]);
            if !bad_y_last.is_empty() {
                return false;
            }
        }
    }
    true
}

fn chain_ends(weak: &[Menu], length: usize) -> Vec<Menu> {
    let mut ends: Vec<Menu> = (0..weak.len()).map(Menu::singleton).collect();
    for _ in 1..length {
        ends = ends
            .iter()
            .map(|e| e.items().fold(*e, |acc, y| acc.union(weak[y])))
            .collect();
    }
    ends
}

/// Which Ferrers properties feed the desirability table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassificationBasis {
    /// Only [`CHARACTERIZED`]: weak orders land in class 1, semiorders in 6,
    /// interval orders and semitransitive relations in 7, other transitive
    /// relations in 8, intransitive ones in 9.
    #[default]
    Characterized,
    /// All nine [`TRACKED`] properties.
    FullLattice,
}

/// A position 1 (most desirable) to 9 in the desirability ranking.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DesirabilityClass {
    pub index: u8,
    /// The lattice node matched, e.g. `(4,1) & (3,2)`.
    pub node: String,
}

impl DesirabilityClass {
    /// The relation type of the node, when it has a common name.
    pub fn description(&self) -> Option<&'static str> {
        node_name(&self.node)
    }
}

impl fmt::Display for DesirabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match node_name(&self.node) {
            Some(name) => write!(f, "class {} {} ({})", self.index, self.node, name),
            None => write!(f, "class {} {}", self.index, self.node),
        }
    }
}

fn node_name(node: &str) -> Option<&'static str> {
    Some(match node {
        "(3,3)" => "weak order",
        "(4,1) & (3,2)" => "strong semiorder",
        "(3,2)" => "strong interval order",
        "(3,1) & (2,2)" => "semiorder",
        "(2,2)" => "interval order",
        "(3,1)" => "semitransitive",
        "(2,1)" => "transitive",
        "(1,1)" => "intransitive",
        _ => return None,
    })
}

/// Ferrers satisfaction set over [`TRACKED`].
pub fn ferrers_satisfaction(rel: &BinaryRelation) -> Result<Vec<FerrersProperty>> {
    require_asymmetric_acyclic(rel)?;
    Ok(TRACKED
        .iter()
        .copied()
        .filter(|p| ferrers_rows(rel.rows(), p.m, p.n))
        .collect())
}

pub fn desirability_class(rel: &BinaryRelation) -> Result<DesirabilityClass> {
    desirability_class_with(rel, ClassificationBasis::default())
}

pub fn desirability_class_with(
    rel: &BinaryRelation,
    basis: ClassificationBasis,
) -> Result<DesirabilityClass> {
    let satisfied = ferrers_satisfaction(rel)?;
    Ok(classify(&satisfied, basis))
}

/// Top-down lattice table: the first row whose node is satisfied wins.
pub fn classify(satisfied: &[FerrersProperty], basis: ClassificationBasis) -> DesirabilityClass {
    let has = |m, n| {
        let p = fp(m, n);
        satisfied.contains(&p)
            && (basis == ClassificationBasis::FullLattice || CHARACTERIZED.contains(&p))
    };
    let (index, node) = if has(3, 3) {
        (1, "(3,3)")
    } else if has(4, 2) {
        (2, "(4,2)")
    } else if has(5, 1) && has(3, 2) {
        (3, "(5,1) & (3,2)")
    } else if has(5, 1) && has(2, 2) {
        (4, "(5,1) & (2,2)")
    } else if has(4, 1) && has(3, 2) {
        (4, "(4,1) & (3,2)")
    } else if has(5, 1) {
        (5, "(5,1)")
    } else if has(3, 2) {
        (5, "(3,2)")
    } else if has(4, 1) && has(2, 2) {
        (5, "(4,1) & (2,2)")
    } else if has(4, 1) {
        (6, "(4,1)")
    } else if has(3, 1) && has(2, 2) {
        (6, "(3,1) & (2,2)")
    } else if has(3, 1) {
        (7, "(3,1)")
    } else if has(2, 2) {
        (7, "(2,2)")
    } else if has(2, 1) {
        (8, "(2,1)")
    } else {
        (9, "(1,1)")
    };
    DesirabilityClass {
        index,
        node: node.to_string(),
    }
}
