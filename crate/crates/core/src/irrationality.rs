//! Degrees of irrationality.
//!
//! The degree of a quasi-choice `C` with respect to a metric `ρ` is the
//! minimum of `ρ(C, D)` over the rational benchmark. The weighted index of a
//! choice correspondence `c` is the minimum over the decisive benchmark of
//! `w(i_r) · d_rat(c, r)`, where `i_r` is the desirability class of the
//! relation rationalizing `r`.
//!
//! Candidates are scored in parallel and reduced in benchmark order, so the
//! result does not depend on the thread count.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::benchmark::{
    enumerate_rational_choices, enumerate_rational_quasi_choices, BenchmarkKind,
};
use crate::choice::{ChoiceCorrespondence, QuasiChoice};
use crate::error::{Error, Result};
use crate::ferrers::{desirability_class_with, ClassificationBasis, DesirabilityClass};
use crate::metrics::{ChoiceMetric, Metric};
use crate::rational::{format_rational, integer, parse_rational, Rational};
use crate::relation::BinaryRelation;

/// A weight for each of the nine desirability classes plus the
/// discrimination threshold `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightingMap {
    weights: [Rational; 9],
    epsilon: Rational,
}

/// The clause of feasibility a weighting map breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightViolation {
    OutOfRange {
        class: u8,
        weight: Rational,
    },
    NotMonotone {
        lower: u8,
        higher: u8,
    },
    Average {
        average: Rational,
        epsilon: Rational,
    },
    EpsilonOutOfRange(Rational),
}

impl fmt::Display for WeightViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightViolation::OutOfRange { class, weight } => write!(
                f,
                "w({class}) = {} is outside the open interval (0,2)",
                format_rational(weight)
            ),
            WeightViolation::NotMonotone { lower, higher } => {
                write!(f, "w({lower}) > w({higher}) breaks monotonicity")
            }
            WeightViolation::Average { average, epsilon } => write!(
                f,
                "average weight {} is more than epsilon = {} away from 1",
                format_rational(average),
                format_rational(epsilon)
            ),
            WeightViolation::EpsilonOutOfRange(e) => {
                write!(f, "epsilon = {} is outside [0,1)", format_rational(e))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WeightingFile {
    weights: BTreeMap<String, String>,
    epsilon: String,
}

impl WeightingMap {
    /// Builds the map without checking feasibility; see [`Self::validate`].
    pub fn new(weights: [Rational; 9], epsilon: Rational) -> Self {
        WeightingMap { weights, epsilon }
    }

    /// `w ≡ 1`, `ε = 0`.
    pub fn uniform() -> Self {
        WeightingMap::new(std::array::from_fn(|_| integer(1)), integer(0))
    }

    /// Parses decimal or fraction strings, class 1 first.
    pub fn from_strs(weights: [&str; 9], epsilon: &str) -> Result<Self> {
        let mut parsed: [Rational; 9] = std::array::from_fn(|_| integer(0));
        for (slot, text) in parsed.iter_mut().zip(weights) {
            *slot = parse_rational(text)?;
        }
        Ok(WeightingMap::new(parsed, parse_rational(epsilon)?))
    }

    /// Weight of class `class` (1 to 9).
    pub fn weight(&self, class: u8) -> &Rational {
        &self.weights[usize::from(class) - 1]
    }

    pub fn weights(&self) -> &[Rational; 9] {
        &self.weights
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    /// `{"weights": {"1": "0.6", …, "9": "1.4"}, "epsilon": "0.5"}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: WeightingFile = serde_json::from_str(text)
            .map_err(|e| Error::InfeasibleWeightingMap(format!("malformed weighting file: {e}")))?;
        let mut weights: [Rational; 9] = std::array::from_fn(|_| integer(0));
        for (key, value) in &file.weights {
            let class: usize = key
                .parse()
                .ok()
                .filter(|k| (1..=9).contains(k))
                .ok_or_else(|| Error::InfeasibleWeightingMap(format!("unknown class `{key}`")))?;
            weights[class - 1] = parse_rational(value)?;
        }
        for class in 1..=9 {
            if !file.weights.contains_key(&class.to_string()) {
                return Err(Error::InfeasibleWeightingMap(format!(
                    "missing weight for class {class}"
                )));
            }
        }
        Ok(WeightingMap::new(weights, parse_rational(&file.epsilon)?))
    }

    pub fn to_json(&self) -> String {
        let file = WeightingFile {
            weights: (1..=9u8)
                .map(|c| (c.to_string(), format_rational(self.weight(c))))
                .collect(),
            epsilon: format_rational(&self.epsilon),
        };
        serde_json::to_string_pretty(&file).expect("plain strings serialize")
    }

    /// Checks range, monotonicity and the average property. Returns the
    /// first violated clause.
    #[allow(clippy::result_large_err)]
    pub fn validate(&self) -> Result<(), WeightViolation> {
        let two = integer(2);
        if self.epsilon.is_negative() || self.epsilon >= integer(1) {
            return Err(WeightViolation::EpsilonOutOfRange(self.epsilon.clone()));
        }
        for (i, w) in self.weights.iter().enumerate() {
            if !w.is_positive() || *w >= two {
                return Err(WeightViolation::OutOfRange {
                    class: i as u8 + 1,
                    weight: w.clone(),
                });
            }
        }
        for i in 0..8 {
            if self.weights[i] > self.weights[i + 1] {
                return Err(WeightViolation::NotMonotone {
                    lower: i as u8 + 1,
                    higher: i as u8 + 2,
                });
            }
        }
        let average = self.weights.iter().cloned().sum::<Rational>() / integer(9);
        if (&average - Rational::one()).abs() > self.epsilon {
            return Err(WeightViolation::Average {
                average,
                epsilon: self.epsilon.clone(),
            });
        }
        Ok(())
    }
}

#[allow(clippy::result_large_err)]
pub fn validate_weighting_map(w: &WeightingMap) -> Result<(), WeightViolation> {
    w.validate()
}

/// One benchmark member attaining the minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimizer {
    pub choice: QuasiChoice,
    /// Unweighted metric value.
    pub distance: u64,
    /// Rationalizing relation and its class; decisive benchmark only.
    pub relation: Option<BinaryRelation>,
    pub class: Option<DesirabilityClass>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: Rational,
    /// In benchmark order, so the first entry has the smallest encoding.
    pub minimizers: Vec<Minimizer>,
    pub benchmark_kind: BenchmarkKind,
    pub benchmark_size: usize,
}

impl DegreeReport {
    pub fn first_minimizer(&self) -> &Minimizer {
        &self.minimizers[0]
    }

    pub fn is_minimizer(&self, choice: &QuasiChoice) -> bool {
        self.minimizers.iter().any(|m| m.choice == *choice)
    }
}

/// Scores every candidate and keeps the indices attaining the minimum.
fn argmin<T, F>(candidates: &[T], score: F) -> Result<(Rational, Vec<usize>)>
where
    T: Sync,
    F: Fn(&T) -> Result<Rational> + Sync + Send,
{
    let scores: Vec<Rational> = candidates.par_iter().map(score).collect::<Result<_>>()?;
    let best = scores
        .iter()
        .min()
        .cloned()
        .expect("benchmarks are never empty");
    let hits = scores
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == best)
        .map(|(i, _)| i)
        .collect();
    Ok((best, hits))
}

/// Exact degree of `choice` against the chosen benchmark.
pub fn irr_degree(
    choice: &QuasiChoice,
    metric: &dyn ChoiceMetric,
    benchmark: BenchmarkKind,
) -> Result<DegreeReport> {
    let (candidates, relations): (Vec<QuasiChoice>, Vec<Option<BinaryRelation>>) = match benchmark {
        BenchmarkKind::Quasi => {
            let all = enumerate_rational_quasi_choices(choice.ground())?;
            let n = all.len();
            (all, vec![None; n])
        }
        BenchmarkKind::Decisive => enumerate_rational_choices(choice.ground())?
            .into_iter()
            .map(|(c, r)| (c, Some(r)))
            .unzip(),
    };
    let distances: Vec<u64> = candidates
        .par_iter()
        .map(|d| metric.distance(choice, d))
        .collect::<Result<_>>()?;
    let (degree, hits) = argmin(&distances, |&v| Ok(Rational::from_integer(v.into())))?;
    let minimizers = hits
        .into_iter()
        .map(|i| Minimizer {
            choice: candidates[i].clone(),
            distance: distances[i],
            relation: relations[i].clone(),
            class: None,
        })
        .collect();
    Ok(DegreeReport {
        degree,
        minimizers,
        benchmark_kind: benchmark,
        benchmark_size: candidates.len(),
    })
}

/// Weighted index over the decisive benchmark with the default
/// classification basis.
pub fn weighted_irr_degree(
    choice: &ChoiceCorrespondence,
    w: &WeightingMap,
) -> Result<DegreeReport> {
    weighted_irr_degree_with(choice, w, ClassificationBasis::default())
}

pub fn weighted_irr_degree_with(
    choice: &ChoiceCorrespondence,
    w: &WeightingMap,
    basis: ClassificationBasis,
) -> Result<DegreeReport> {
    w.validate()
        .map_err(|v| Error::InfeasibleWeightingMap(v.to_string()))?;
    let choice = choice.as_quasi();
    let benchmark = enumerate_rational_choices(choice.ground())?;
    let scored: Vec<(u64, DesirabilityClass)> = benchmark
        .par_iter()
        .map(|(d, r)| {
            Ok((
                Metric::Rat.distance(choice, d)?,
                desirability_class_with(r, basis)?,
            ))
        })
        .collect::<Result<_>>()?;
    let (degree, hits) = argmin(&scored, |(dist, class)| {
        Ok(w.weight(class.index).clone() * Rational::from_integer((*dist).into()))
    })?;
    let minimizers = hits
        .into_iter()
        .map(|i| Minimizer {
            choice: benchmark[i].0.clone(),
            distance: scored[i].0,
            relation: Some(benchmark[i].1.clone()),
            class: Some(scored[i].1.clone()),
        })
        .collect();
    Ok(DegreeReport {
        degree,
        minimizers,
        benchmark_kind: BenchmarkKind::Decisive,
        benchmark_size: benchmark.len(),
    })
}
