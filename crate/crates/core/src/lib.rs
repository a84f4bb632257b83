//! Measuring the irrationality of choice behaviour.
//!
//! Deterministic choice is modelled as a [`QuasiChoice`]: a map from every
//! menu `S ⊆ X` to a subset `C(S) ⊆ S`, possibly empty. The crate provides
//!
//! * rationalizability checks (Sen's α and γ) and revealed preference,
//! * Klamler's metric and the rational metric, plus an axiom harness,
//! * degrees of irrationality against enumerated rational benchmarks,
//!   optionally weighted by the Ferrers desirability class of the rationalizer,
//! * stochastic choice: Block–Marschak polynomials, the RUM test, the
//!   negativity preorder and the reference distances.
//!
//! Ground sets are small: enumeration-based operations are capped at
//! [`benchmark::DEFAULT_MAX_N`] alternatives unless `IRR_MAX_N` says
//! otherwise.
//!
//! ```
//! use irr::metrics::Metric;
//! use irr::{irr_degree, BenchmarkKind, GroundSet, QuasiChoice};
//!
//! let g = GroundSet::new(["x", "y", "z"])?.shared();
//! let c = QuasiChoice::from_notation(g, "[x] y, [x] z, [y] z, x y [z]")?;
//! let report = irr_degree(&c, &Metric::Rat, BenchmarkKind::Quasi)?;
//! assert_eq!(report.degree.to_string(), "3");
//! # Ok::<(), irr::Error>(())
//! ```

pub mod axioms;
pub mod benchmark;
pub mod choice;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod ferrers;
pub mod ground;
pub mod irrationality;
pub mod metrics;
pub mod rational;
pub mod relation;
pub mod sampling;
pub mod stochastic;

pub use benchmark::{
    enumerate_rational_choices, enumerate_rational_quasi_choices, max_ground_size, BenchmarkKind,
};
pub use choice::{
    induced_quasi_choice, is_rationalizable, revealed_preference, satisfies_alpha, satisfies_gamma,
    ChoiceCorrespondence, QuasiChoice, Rationalizability,
};
pub use error::{Error, Result};
pub use ferrers::{
    canonical_completion, desirability_class, is_mn_ferrers, ClassificationBasis,
    DesirabilityClass, FerrersProperty,
};
pub use ground::{GroundSet, Menu, Permutation};
pub use irrationality::{irr_degree, weighted_irr_degree, DegreeReport, WeightingMap};
pub use metrics::{delta_distance, rat_distance, rational_localization, ChoiceMetric, Metric};
pub use rational::Rational;
pub use relation::BinaryRelation;
pub use stochastic::{bm_polynomial, is_rum, negativity_vector, StochasticChoice};
