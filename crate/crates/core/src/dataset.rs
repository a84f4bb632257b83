//! JSON file formats for deterministic choices and relations.
//!
//! ```json
//! {"alternatives": ["x", "y", "z"],
//!  "choices": {"x": ["x"], "x,y": ["x"], "x,y,z": ["y", "z"]}}
//! ```
//!
//! ```json
//! {"alternatives": ["x", "y", "z"], "pairs": [["x", "y"], ["y", "z"]]}
//! ```
//!
//! Errors carry the line and column of the offending key where one exists.
//! Stochastic files are handled in [`crate::stochastic`].

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::choice::QuasiChoice;
use crate::error::Error;
use crate::ground::{GroundSet, Menu};
use crate::relation::BinaryRelation;
use crate::stochastic::StochasticChoice;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct DatasetError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl DatasetError {
    fn at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
        DatasetError {
            line,
            column,
            message: message.into(),
        }
    }

    fn from_json(e: serde_json::Error) -> Self {
        DatasetError {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// Byte offset of `"key"` used as an object key (followed by `:`), searching
/// from `from`. Falls back to `from`.
fn locate_key(text: &str, key: &str, from: usize) -> usize {
    let needle = serde_json::to_string(key).expect("strings serialize");
    let mut start = from;
    while let Some(pos) = text[start..].find(&needle) {
        let at = start + pos;
        let rest = text[at + needle.len()..].trim_start();
        if rest.starts_with(':') {
            return at;
        }
        start = at + needle.len();
    }
    from
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeterministicDataset {
    pub alternatives: Vec<String>,
    /// Menu key (comma-joined names) to the chosen names.
    pub choices: IndexMap<String, Vec<String>>,
}

impl DeterministicDataset {
    /// Canonical dataset: every nonempty menu in ascending order, keys and
    /// chosen names in declared order.
    pub fn from_quasi_choice(choice: &QuasiChoice) -> Self {
        let g = choice.ground();
        DeterministicDataset {
            alternatives: g.names().to_vec(),
            choices: g
                .nonempty_menus()
                .map(|m| {
                    let chosen = choice
                        .get(m)
                        .items()
                        .map(|a| g.name(a).to_string())
                        .collect();
                    (g.menu_key(m), chosen)
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Parses a deterministic dataset. Menus missing from `choices` are an
/// error unless `default_empty`, in which case they choose nothing.
pub fn parse_quasi_choice(text: &str, default_empty: bool) -> Result<QuasiChoice, DatasetError> {
    let data: DeterministicDataset = serde_json::from_str(text).map_err(DatasetError::from_json)?;
    let ground = ground_at(text, &data.alternatives)?;
    let choices_at = locate_key(text, "choices", 0);
    let mut table: Vec<Option<Menu>> = vec![None; ground.menu_count()];
    table[0] = Some(Menu::EMPTY);
    for (key, chosen) in &data.choices {
        let at = locate_key(text, key, choices_at);
        let menu = ground
            .menu(key)
            .map_err(|e| DatasetError::at(text, at, format!("menu key `{key}`: {e}")))?;
        if menu.is_empty() {
            return Err(DatasetError::at(
                text,
                at,
                format!("empty menu key `{key}`"),
            ));
        }
        let picked = ground
            .menu_from_names(chosen)
            .map_err(|e| DatasetError::at(text, at, format!("menu `{key}`: {e}")))?;
        if picked.len() != chosen.len() {
            return Err(DatasetError::at(
                text,
                at,
                format!("menu `{key}` lists a chosen item twice"),
            ));
        }
        if !picked.is_subset(menu) {
            let err = Error::ChoiceOutsideMenu {
                menu: ground.format_menu(menu),
                choice: ground.format_menu(picked),
            };
            return Err(DatasetError::at(text, at, err.to_string()));
        }
        if table[menu.index()].replace(picked).is_some() {
            return Err(DatasetError::at(
                text,
                at,
                format!("menu {} is listed twice", ground.format_menu(menu)),
            ));
        }
    }
    let mut full = Vec::with_capacity(table.len());
    for (i, entry) in table.into_iter().enumerate() {
        match entry {
            Some(m) => full.push(m),
            None if default_empty => full.push(Menu::EMPTY),
            None => {
                return Err(DatasetError::at(
                    text,
                    choices_at,
                    format!(
                        "menu {} is missing (pass --default-empty to treat missing menus as choosing nothing)",
                        ground.format_menu(Menu(i as u32))
                    ),
                ))
            }
        }
    }
    QuasiChoice::from_table(ground, full)
        .map_err(|e| DatasetError::at(text, choices_at, e.to_string()))
}

fn ground_at(text: &str, names: &[String]) -> Result<Arc<GroundSet>, DatasetError> {
    GroundSet::new(names.iter().cloned())
        .map(GroundSet::shared)
        .map_err(|e| DatasetError::at(text, locate_key(text, "alternatives", 0), e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub alternatives: Vec<String>,
    pub pairs: Vec<[String; 2]>,
}

pub fn parse_relation(text: &str) -> Result<BinaryRelation, DatasetError> {
    let data: RelationFile = serde_json::from_str(text).map_err(DatasetError::from_json)?;
    let ground = ground_at(text, &data.alternatives)?;
    let pairs_at = locate_key(text, "pairs", 0);
    BinaryRelation::from_named_pairs(
        ground,
        data.pairs.iter().map(|[a, b]| (a.as_str(), b.as_str())),
    )
    .map_err(|e| DatasetError::at(text, pairs_at, e.to_string()))
}

/// Parses a stochastic choice file; see [`StochasticChoice::from_json`].
pub fn parse_stochastic(text: &str) -> Result<StochasticChoice, DatasetError> {
    let file = serde_json::from_str(text).map_err(DatasetError::from_json)?;
    let p_at = locate_key(text, "p", 0);
    StochasticChoice::from_file(file).map_err(|e| {
        let at = match &e {
            Error::ProbabilitySum { menu, .. } | Error::ProbabilityOutOfRange { menu, .. } => {
                locate_key(text, &menu_key_of(menu), p_at)
            }
            _ => p_at,
        };
        DatasetError::at(text, at, e.to_string())
    })
}

/// `{x,y}` to `x,y`.
fn menu_key_of(formatted: &str) -> String {
    formatted
        .trim_start_matches('{')
        .trim_end_matches('}')
        .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const C1: &str = r#"{
  "alternatives": ["x", "y", "z"],
  "choices": {
    "x": ["x"], "y": ["y"], "z": ["z"],
    "x,y": ["x"], "x,z": ["x"], "y,z": ["y"],
    "x,y,z": ["x"]
  }
}"#;

    #[test]
    fn parses_and_round_trips() {
        let c = parse_quasi_choice(C1, false).unwrap();
        assert_eq!(c.to_string(), "[x], [y], [x] y, [z], [x] z, [y] z, [x] y z");
        let canonical = DeterministicDataset::from_quasi_choice(&c).to_json();
        assert_eq!(parse_quasi_choice(&canonical, false).unwrap(), c);
    }

    #[test]
    fn missing_menus_need_the_flag() {
        let text = r#"{"alternatives": ["x", "y"], "choices": {"x,y": ["x"]}}"#;
        let err = parse_quasi_choice(text, false).unwrap_err();
        assert!(err.message.contains("missing"), "{err}");
        let c = parse_quasi_choice(text, true).unwrap();
        assert!(c.get(Menu(0b01)).is_empty());
    }

    #[test]
    fn errors_point_at_the_key() {
        let text = "{\n  \"alternatives\": [\"x\", \"y\"],\n  \"choices\": {\n    \"x\": [\"x\"],\n    \"x,q\": [\"x\"]\n  }\n}";
        let err = parse_quasi_choice(text, true).unwrap_err();
        assert_eq!((err.line, err.column), (5, 5));
        let text = "{\"alternatives\": [\"x\", \"y\"],\n \"choices\": {\"x\": [\"y\"]}}";
        let err = parse_quasi_choice(text, true).unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_quasi_choice("{\"alternatives\": [\"x\"\n", true).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn relation_files() {
        let text = r#"{"alternatives": ["x", "y", "z"], "pairs": [["x", "y"], ["y", "z"]]}"#;
        assert_eq!(parse_relation(text).unwrap().to_string(), "{x>y, y>z}");
        let bad = r#"{"alternatives": ["x", "y"], "pairs": [["x", "w"]]}"#;
        assert!(parse_relation(bad).is_err());
    }
}
