//! Enumeration of the rational benchmarks.
//!
//! The quasi benchmark is every quasi-choice induced by some relation on
//! `X` (all `2^(n²)` relations are tried and deduplicated). The decisive
//! benchmark is every choice correspondence induced by an asymmetric acyclic
//! relation, paired with that relation.
//!
//! Benchmarks depend only on `n`, so they are computed once per size and
//! shared for the rest of the process.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::choice::{induced_table, QuasiChoice};
use crate::error::{Error, Result};
use crate::ferrers::is_acyclic_rows;
use crate::ground::{GroundSet, Menu};
use crate::relation::BinaryRelation;

/// Default cap on the ground set size for enumeration-based operations.
pub const DEFAULT_MAX_N: usize = 4;
/// The cap can be raised through `IRR_MAX_N` up to this value.
pub const HARD_MAX_N: usize = 6;
pub const MAX_N_ENV: &str = "IRR_MAX_N";

/// The enumeration cap currently in force: `IRR_MAX_N` if set and valid,
/// clamped to [`HARD_MAX_N`], else [`DEFAULT_MAX_N`].
pub fn max_ground_size() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.clamp(2, HARD_MAX_N))
        .unwrap_or(DEFAULT_MAX_N)
}

pub fn check_size(n: usize, cap: usize) -> Result<()> {
    if n > cap.min(HARD_MAX_N) {
        Err(Error::GroundSetTooLarge {
            size: n,
            cap: cap.min(HARD_MAX_N),
        })
    } else {
        Ok(())
    }
}

/// Which rational family a degree is measured against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchmarkKind {
    /// All rationalizable quasi-choices.
    Quasi,
    /// All choice correspondences rationalized by an asymmetric acyclic
    /// relation.
    Decisive,
}

impl std::fmt::Display for BenchmarkKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BenchmarkKind::Quasi => "quasi",
            BenchmarkKind::Decisive => "decisive",
        })
    }
}

type Table = Arc<[Menu]>;

struct DecisiveEntry {
    table: Table,
    rows: Vec<Menu>,
}

fn quasi_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Table>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Table>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn decisive_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<DecisiveEntry>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<DecisiveEntry>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn quasi_tables(n: usize) -> Arc<Vec<Table>> {
    if let Some(hit) = quasi_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let cells = n * n;
    let mut seen: BTreeSet<Vec<Menu>> = BTreeSet::new();
    let mut rows = vec![Menu::EMPTY; n];
    for code in 0u64..(1u64 << cells) {
        for (a, row) in rows.iter_mut().enumerate() {
            *row = Menu(((code >> (a * n)) & ((1 << n) - 1)) as u32);
        }
        seen.insert(induced_table(n, &rows));
    }
    let tables: Arc<Vec<Table>> = Arc::new(seen.into_iter().map(Into::into).collect());
    quasi_cache().lock().unwrap().insert(n, tables.clone());
    tables
}

fn decisive_entries(n: usize) -> Arc<Vec<DecisiveEntry>> {
    if let Some(hit) = decisive_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut entries = Vec::new();
    let total = 3u64.pow(pairs.len() as u32);
    for mut code in 0..total {
        let mut rows = vec![Menu::EMPTY; n];
        for &(i, j) in &pairs {
            match code % 3 {
                1 => rows[i] = rows[i].with(j),
                2 => rows[j] = rows[j].with(i),
                _ => {}
            }
            code /= 3;
        }
        if !is_acyclic_rows(&rows) {
            continue;
        }
        entries.push(DecisiveEntry {
            table: induced_table(n, &rows).into(),
            rows,
        });
    }
    // the induced map determines the asymmetric relation, so there are no
    // duplicates; sorting gives the canonical order
    entries.sort_by(|a, b| a.table.cmp(&b.table));
    debug_assert!(entries.windows(2).all(|w| w[0].table != w[1].table));
    let entries = Arc::new(entries);
    decisive_cache().lock().unwrap().insert(n, entries.clone());
    entries
}

/// Every rationalizable quasi-choice over `ground`, ordered by canonical
/// table encoding. Subject to [`max_ground_size`].
pub fn enumerate_rational_quasi_choices(ground: &Arc<GroundSet>) -> Result<Vec<QuasiChoice>> {
    enumerate_rational_quasi_choices_capped(ground, max_ground_size())
}

pub fn enumerate_rational_quasi_choices_capped(
    ground: &Arc<GroundSet>,
    cap: usize,
) -> Result<Vec<QuasiChoice>> {
    check_size(ground.len(), cap)?;
    Ok(quasi_tables(ground.len())
        .iter()
        .map(|t| QuasiChoice::from_table_unchecked(ground.clone(), t.clone()))
        .collect())
}

/// Every choice correspondence rationalizable by an asymmetric acyclic
/// relation, with its revealed preference, ordered by table encoding.
pub fn enumerate_rational_choices(
    ground: &Arc<GroundSet>,
) -> Result<Vec<(QuasiChoice, BinaryRelation)>> {
    enumerate_rational_choices_capped(ground, max_ground_size())
}

pub fn enumerate_rational_choices_capped(
    ground: &Arc<GroundSet>,
    cap: usize,
) -> Result<Vec<(QuasiChoice, BinaryRelation)>> {
    check_size(ground.len(), cap)?;
    Ok(decisive_entries(ground.len())
        .iter()
        .map(|e| {
            (
                QuasiChoice::from_table_unchecked(ground.clone(), e.table.clone()),
                BinaryRelation::from_rows(ground.clone(), e.rows.clone()),
            )
        })
        .collect())
}
