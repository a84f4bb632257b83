//! Arbitrary binary relations over a ground set and their maximal elements.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Menu, Permutation};

/// A binary relation over a ground set. No structural property is imposed:
/// reflexive pairs and 2-cycles are legal and model indecisive behavior.
///
/// Stored row-wise: `rows[a]` is the set of `x` with `a → x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    ground: Arc<GroundSet>,
    rows: Vec<Menu>,
}

impl BinaryRelation {
    pub fn empty(ground: Arc<GroundSet>) -> Self {
        let n = ground.len();
        BinaryRelation {
            ground,
            rows: vec![Menu::EMPTY; n],
        }
    }

    /// Relation from index pairs `(a, x)` meaning `a → x`.
    pub fn from_pairs<I>(ground: Arc<GroundSet>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = BinaryRelation::empty(ground);
        for (a, x) in pairs {
            let n = rel.ground.len();
            if a >= n || x >= n {
                return Err(Error::UnknownAlternative(format!("index {}", a.max(x))));
            }
            rel.rows[a] = rel.rows[a].with(x);
        }
        Ok(rel)
    }

    /// Relation from named pairs.
    pub fn from_named_pairs<I, S>(ground: Arc<GroundSet>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let indexed = pairs
            .into_iter()
            .map(|(a, x)| Ok((ground.index_of(a.as_ref())?, ground.index_of(x.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        BinaryRelation::from_pairs(ground, indexed)
    }

    /// Parses `"x>y, y>z"`.
    pub fn parse(ground: Arc<GroundSet>, spec: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, x) = part
                .split_once('>')
                .ok_or_else(|| Error::UnknownAlternative(part.to_string()))?;
            pairs.push((a.trim().to_string(), x.trim().to_string()));
        }
        BinaryRelation::from_named_pairs(ground, pairs)
    }

    pub(crate) fn from_rows(ground: Arc<GroundSet>, rows: Vec<Menu>) -> Self {
        debug_assert_eq!(rows.len(), ground.len());
        BinaryRelation { ground, rows }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn rows(&self) -> &[Menu] {
        &self.rows
    }

    pub fn holds(&self, a: usize, x: usize) -> bool {
        self.rows[a].contains(x)
    }

    /// Ordered pairs `(a, x)` with `a → x`, by ascending `a` then `x`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.items().map(move |x| (a, x)))
    }

    pub fn insert(&mut self, a: usize, x: usize) {
        self.rows[a] = self.rows[a].with(x);
    }

    /// `{x ∈ menu : a → x for no a ∈ menu}`. Self-loops exclude their item.
    pub fn max_set(&self, menu: Menu) -> Menu {
        max_set_rows(&self.rows, menu)
    }

    /// Relabels by `σ`: `σ(a) → σ(x)` iff `a → x`.
    pub fn permuted(&self, sigma: &Permutation) -> BinaryRelation {
        let mut rows = vec![Menu::EMPTY; self.rows.len()];
        for (a, x) in self.pairs() {
            let pa = sigma.apply(a);
            rows[pa] = rows[pa].with(sigma.apply(x));
        }
        BinaryRelation {
            ground: self.ground.clone(),
            rows,
        }
    }
}

pub(crate) fn max_set_rows(rows: &[Menu], menu: Menu) -> Menu {
    let dominated = menu.items().fold(Menu::EMPTY, |acc, a| acc.union(rows[a]));
    menu.difference(dominated)
}

impl fmt::Display for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .map(|(a, x)| format!("{}>{}", self.ground.name(a), self.ground.name(x)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
