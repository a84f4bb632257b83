//! Ground sets, menus and permutations of alternatives.
//!
//! A [`Menu`] is a bitmask over the alternative indices of a [`GroundSet`],
//! in the order the alternatives were declared. Every iteration in this crate
//! runs over menus by ascending bitmask, which keeps all results
//! deterministic.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest ground set representable by the dense tables used throughout.
pub const MAX_ALTERNATIVES: usize = 16;

/// A finite, ordered set of named alternatives with at least two members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(Error::TooFewAlternatives(names.len()));
        }
        if names.len() > MAX_ALTERNATIVES {
            return Err(Error::GroundSetTooLarge {
                size: names.len(),
                cap: MAX_ALTERNATIVES,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || matches!(c, ',' | '[' | ']' | '>'))
            {
                return Err(Error::InvalidAlternativeName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateAlternative(name.clone()));
            }
        }
        Ok(GroundSet { names })
    }

    /// Ground set `{a, b, c, ...}` with single-letter names, or `x1..xn`
    /// past 26 alternatives.
    pub fn with_size(n: usize) -> Result<Self> {
        if n <= 26 {
            GroundSet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            GroundSet::new((1..=n).map(|i| format!("x{i}")))
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownAlternative(name.to_string()))
    }

    /// Number of menus, including the empty one.
    pub fn menu_count(&self) -> usize {
        1 << self.len()
    }

    pub fn full_menu(&self) -> Menu {
        Menu::full(self.len())
    }

    /// Every menu, the empty one first, by ascending bitmask.
    pub fn all_menus(&self) -> impl Iterator<Item = Menu> {
        all_menus(self.len())
    }

    /// The nonempty menus, by ascending bitmask.
    pub fn nonempty_menus(&self) -> impl Iterator<Item = Menu> {
        all_menus(self.len()).skip(1)
    }

    pub fn menu_from_names<I, S>(&self, names: I) -> Result<Menu>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut menu = Menu::EMPTY;
        for name in names {
            menu = menu.with(self.index_of(name.as_ref())?);
        }
        Ok(menu)
    }

    /// Parses compact notation such as `"xyz"` when every name is one
    /// character, or comma-separated names otherwise.
    pub fn menu(&self, spec: &str) -> Result<Menu> {
        if spec.contains(',') || self.names.iter().any(|n| n.chars().count() != 1) {
            self.menu_from_names(spec.split(',').map(str::trim).filter(|s| !s.is_empty()))
        } else {
            self.menu_from_names(spec.chars().map(|c| c.to_string()))
        }
    }

    pub fn format_menu(&self, menu: Menu) -> String {
        let items: Vec<&str> = menu.items().map(|i| self.name(i)).collect();
        format!("{{{}}}", items.join(","))
    }

    /// Canonical comma-joined key, as used by the JSON dataset formats.
    pub fn menu_key(&self, menu: Menu) -> String {
        let items: Vec<&str> = menu.items().map(|i| self.name(i)).collect();
        items.join(",")
    }

    pub fn shared(self) -> Arc<GroundSet> {
        Arc::new(self)
    }
}

/// All `2^n` menus over `n` alternatives, by ascending bitmask.
pub fn all_menus(n: usize) -> impl Iterator<Item = Menu> {
    (0u32..(1u32 << n)).map(Menu)
}

/// A subset of a ground set, stored as a bitmask over alternative indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Menu(pub u32);

impl Menu {
    pub const EMPTY: Menu = Menu(0);

    pub fn full(n: usize) -> Menu {
        Menu((1u32 << n) - 1)
    }

    pub fn singleton(item: usize) -> Menu {
        Menu(1 << item)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, item: usize) -> bool {
        self.0 >> item & 1 == 1
    }

    pub fn with(self, item: usize) -> Menu {
        Menu(self.0 | 1 << item)
    }

    pub fn without(self, item: usize) -> Menu {
        Menu(self.0 & !(1 << item))
    }

    pub fn union(self, other: Menu) -> Menu {
        Menu(self.0 | other.0)
    }

    pub fn intersection(self, other: Menu) -> Menu {
        Menu(self.0 & other.0)
    }

    pub fn difference(self, other: Menu) -> Menu {
        Menu(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Menu) -> Menu {
        Menu(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Menu) -> bool {
        self.0 & !other.0 == 0
    }

    /// Item indices in ascending order.
    pub fn items(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// Every subset of this menu (the empty one included), ascending.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every superset of this menu inside `universe`, ascending.
    pub fn supersets_within(self, universe: Menu) -> impl Iterator<Item = Menu> {
        let base = self;
        universe
            .difference(self)
            .subsets()
            .map(move |extra| base.union(extra))
    }
}

/// Ascending enumeration of the subsets of a bitmask.
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Menu;

    fn next(&mut self) -> Option<Menu> {
        let current = self.next?;
        self.next = if current == self.mask {
            None
        } else {
            // next subset of `mask` in increasing numeric order
            Some((current.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Menu(current))
    }
}

impl fmt::Display for Menu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.items().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A bijection on alternative indices: `image[i]` is where `i` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n || seen[j] {
                return Err(Error::NotABijection(format!("{image:?}")));
            }
            seen[j] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// All `n!` permutations in lexicographic order of their image vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..n).permutations(n).map(|image| Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, item: usize) -> usize {
        self.image[item]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply_menu(&self, menu: Menu) -> Menu {
        menu.items()
            .fold(Menu::EMPTY, |acc, i| acc.with(self.image[i]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { image: inv }
    }
}
