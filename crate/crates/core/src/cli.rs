//! Command-line interface behind the `irr` binary.
//!
//! Every subcommand reads JSON files (see [`crate::dataset`] and
//! [`crate::stochastic`]), computes a typed report and prints it as text or,
//! with `--output json`, as pretty JSON with every number an exact string.
//!
//! Exit codes: 0 success, 2 input error, 3 ground set over the enumeration
//! cap.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::axioms::{check_klamler_axioms, AxiomInstances};
use crate::benchmark::{
    enumerate_rational_choices, enumerate_rational_quasi_choices, max_ground_size, BenchmarkKind,
};
use crate::choice::{is_rationalizable, ChoiceCorrespondence, QuasiChoice};
use crate::dataset::{parse_quasi_choice, parse_relation, parse_stochastic, DatasetError};
use crate::error::Error;
use crate::ferrers::{desirability_class_with, relation_profile, ClassificationBasis};
use crate::ground::{GroundSet, Menu};
use crate::irrationality::{irr_degree, weighted_irr_degree_with, Minimizer, WeightingMap};
use crate::metrics::Metric;
use crate::rational::format_rational;
use crate::relation::BinaryRelation;
use crate::sampling::seeded_rng;
use crate::stochastic::{
    bm_table, compare_irrationality, is_monotonic, is_rum, kl_divergence, negativity_vector,
    total_variation, PreorderVerdict, StochasticChoice,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "irr",
    version,
    about = "Degrees of irrationality for choice behavior"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub output: OutputFormat,
    /// Worker threads for enumeration-heavy commands (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub parallelism: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Delta,
    Rat,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::Delta => Metric::Delta,
            MetricArg::Rat => Metric::Rat,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchmarkArg {
    Quasi,
    Decisive,
}

impl From<BenchmarkArg> for BenchmarkKind {
    fn from(b: BenchmarkArg) -> BenchmarkKind {
        match b {
            BenchmarkArg::Quasi => BenchmarkKind::Quasi,
            BenchmarkArg::Decisive => BenchmarkKind::Decisive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Characterized,
    FullLattice,
}

impl From<BasisArg> for ClassificationBasis {
    fn from(b: BasisArg) -> ClassificationBasis {
        match b {
            BasisArg::Characterized => ClassificationBasis::Characterized,
            BasisArg::FullLattice => ClassificationBasis::FullLattice,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sen's alpha and gamma, rationalizability and the revealed preference.
    Check {
        file: PathBuf,
        /// Treat menus missing from the dataset as choosing nothing.
        #[arg(long)]
        default_empty: bool,
        #[arg(long, value_enum, default_value_t = BasisArg::Characterized)]
        basis: BasisArg,
    },
    /// Distance between two deterministic datasets.
    Distance {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum)]
        metric: MetricArg,
        #[arg(long)]
        default_empty: bool,
    },
    /// Degree of irrationality of one or more datasets.
    Degree {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum)]
        metric: MetricArg,
        #[arg(long, value_enum, default_value_t = BenchmarkArg::Quasi)]
        benchmark: BenchmarkArg,
        /// Weighting map; requires `--metric rat --benchmark decisive`.
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Characterized)]
        basis: BasisArg,
        #[arg(long)]
        default_empty: bool,
    },
    /// Structural profile, Ferrers properties and desirability class.
    ClassifyRelation { file: PathBuf },
    /// Block-Marschak table of a stochastic choice function.
    Bm { file: PathBuf },
    /// Random utility test with every negative polynomial.
    RumCheck { file: PathBuf },
    /// Irrationality preorder and reference distances between two
    /// stochastic choice functions.
    CompareStochastic {
        first: PathBuf,
        second: PathBuf,
        /// Display names; by default the file stem after its last `_`.
        #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"])]
        labels: Option<Vec<String>>,
    },
    /// Audit a metric against Klamler's axioms.
    Axioms {
        #[arg(long, value_enum)]
        metric: MetricArg,
        /// Ground set size; 2 is exhaustive, larger sizes are sampled.
        #[arg(short = 'n', default_value_t = 3)]
        size: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List a rational benchmark.
    Enumerate {
        #[arg(long, value_enum)]
        benchmark: BenchmarkArg,
        #[arg(short = 'n')]
        size: usize,
        /// Print only the number of members.
        #[arg(long)]
        count_only: bool,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GroundSetTooLarge { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn located(path: &Path) -> impl Fn(DatasetError) -> CliError + '_ {
    move |e| {
        CliError::input(format!(
            "{}:{}:{}: {}",
            path.display(),
            e.line,
            e.column,
            e.message
        ))
    }
}

fn load_choice(path: &Path, default_empty: bool) -> CliResult<QuasiChoice> {
    parse_quasi_choice(&read(path)?, default_empty).map_err(located(path))
}

fn load_relation(path: &Path) -> CliResult<BinaryRelation> {
    parse_relation(&read(path)?).map_err(located(path))
}

fn load_stochastic(path: &Path) -> CliResult<StochasticChoice> {
    parse_stochastic(&read(path)?).map_err(located(path))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn short_label(path: &Path) -> String {
    let s = stem(path);
    s.rsplit('_').next().unwrap_or(&s).to_string()
}

fn pairs_of(rel: &BinaryRelation) -> Vec<[String; 2]> {
    let g = rel.ground();
    rel.pairs()
        .map(|(a, b)| [g.name(a).to_string(), g.name(b).to_string()])
        .collect()
}

fn vector_text(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

// ---------------------------------------------------------------- reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub index: u8,
    pub node: String,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub alternatives: Vec<String>,
    pub decisive: bool,
    /// `(item, smaller, larger)` rendered as `y, {x,y} ⊆ {x,y,z}`.
    pub alpha_violations: Vec<String>,
    /// `(item, first, second)` rendered as `x, {x,y} ∪ {x,z}`.
    pub gamma_violations: Vec<String>,
    pub rationalizable: bool,
    pub rationalizer: Option<Vec<[String; 2]>>,
    pub revealed_preference: Option<Vec<[String; 2]>>,
    pub class: Option<ClassInfo>,
}

impl CheckReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let verdict = |w: &[String]| {
            if w.is_empty() {
                "PASS".to_string()
            } else {
                let items: Vec<String> = w.iter().map(|v| format!("({v})")).collect();
                format!("FAIL {}", items.join("; "))
            }
        };
        let _ = writeln!(s, "alternatives: {}", self.alternatives.join(", "));
        let _ = writeln!(s, "decisive: {}", yes_no(self.decisive));
        let _ = writeln!(s, "alpha: {}", verdict(&self.alpha_violations));
        let _ = writeln!(s, "gamma: {}", verdict(&self.gamma_violations));
        match (&self.rationalizable, &self.class) {
            (true, Some(class)) => {
                let _ = writeln!(s, "rationalizable: YES; class {}", class.index);
            }
            (true, None) => {
                let _ = writeln!(s, "rationalizable: YES");
            }
            (false, _) => {
                let _ = writeln!(s, "rationalizable: NO");
            }
        }
        if let Some(r) = &self.rationalizer {
            let _ = writeln!(s, "rationalizer: {}", pairs_text(r));
        }
        if let Some(r) = &self.revealed_preference {
            let _ = writeln!(s, "revealed preference: {}", pairs_text(r));
        }
        if let Some(c) = &self.class {
            let _ = writeln!(
                s,
                "desirability: class {} {} ({})",
                c.index, c.node, c.description
            );
        }
        s
    }
}

fn pairs_text(pairs: &[[String; 2]]) -> String {
    let parts: Vec<String> = pairs.iter().map(|[a, b]| format!("{a}>{b}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn class_info(class: &crate::ferrers::DesirabilityClass) -> ClassInfo {
    ClassInfo {
        index: class.index,
        node: class.node.clone(),
        description: class.description().unwrap_or_default().to_string(),
    }
}

pub fn check_report(choice: &QuasiChoice, basis: ClassificationBasis) -> CheckReport {
    let g = choice.ground();
    let result = is_rationalizable(choice);
    let alpha_violations = result
        .alpha
        .witnesses
        .iter()
        .map(|w| {
            format!(
                "{}, {} ⊆ {}",
                g.name(w.item),
                g.format_menu(w.smaller),
                g.format_menu(w.larger)
            )
        })
        .collect();
    let gamma_violations = result
        .gamma
        .witnesses
        .iter()
        .map(|w| {
            format!(
                "{}, {} ∪ {}",
                g.name(w.item),
                g.format_menu(w.first),
                g.format_menu(w.second)
            )
        })
        .collect();
    let decisive = choice.is_decisive();
    let (revealed, class) = match (&result.rationalizer, decisive) {
        (Some(_), true) => {
            let cc = ChoiceCorrespondence::new(choice.clone()).expect("decisive");
            let rel = crate::choice::revealed_preference(&cc).expect("rationalizable");
            let class = desirability_class_with(&rel, basis)
                .ok()
                .map(|c| class_info(&c));
            (Some(pairs_of(&rel)), class)
        }
        _ => (None, None),
    };
    CheckReport {
        alternatives: g.names().to_vec(),
        decisive,
        alpha_violations,
        gamma_violations,
        rationalizable: result.is_rationalizable(),
        rationalizer: result.rationalizer.as_ref().map(pairs_of),
        revealed_preference: revealed,
        class,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub metric: String,
    pub value: String,
    /// Nonzero contributions keyed by menu (delta) or base menu (rat).
    pub breakdown: IndexMap<String, String>,
}

impl DistanceReport {
    fn text(&self) -> String {
        let mut s = format!("metric: {}\ndistance: {}\n", self.metric, self.value);
        for (k, v) in &self.breakdown {
            let _ = writeln!(s, "  {{{k}}}: {v}");
        }
        s
    }
}

pub fn distance_report(
    a: &QuasiChoice,
    b: &QuasiChoice,
    metric: Metric,
) -> Result<DistanceReport, Error> {
    let r = metric.report(a, b)?;
    let g = a.ground();
    Ok(DistanceReport {
        metric: metric.to_string(),
        value: r.value.to_string(),
        breakdown: r
            .breakdown
            .iter()
            .map(|(&m, v)| (g.menu_key(m), v.to_string()))
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizerEntry {
    /// Bracket notation of the benchmark member.
    pub choice: String,
    pub distance: String,
    pub relation: Option<Vec<[String; 2]>>,
    pub class: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub dataset: String,
    pub degree: String,
    pub minimizers: Vec<MinimizerEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub metric: String,
    pub benchmark: String,
    pub benchmark_size: String,
    pub weighted: bool,
    pub results: Vec<DegreeEntry>,
}

impl DegreeSummary {
    fn text(&self) -> String {
        let mut s = format!(
            "metric: {}{}\nbenchmark: {} ({} members)\n",
            self.metric,
            if self.weighted { " (weighted)" } else { "" },
            self.benchmark,
            self.benchmark_size
        );
        for e in &self.results {
            let _ = writeln!(s, "{}: {}", e.dataset, e.degree);
            let _ = writeln!(s, "  minimizers ({}):", e.minimizers.len());
            for m in &e.minimizers {
                let mut line = format!("    {}  [distance {}", m.choice, m.distance);
                if let Some(c) = m.class {
                    let _ = write!(line, ", class {c}");
                }
                line.push(']');
                let _ = writeln!(s, "{line}");
            }
        }
        s
    }
}

fn minimizer_entry(m: &Minimizer) -> MinimizerEntry {
    MinimizerEntry {
        choice: m.choice.to_string(),
        distance: m.distance.to_string(),
        relation: m.relation.as_ref().map(pairs_of),
        class: m.class.as_ref().map(|c| c.index),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub relation: Vec<[String; 2]>,
    pub asymmetric: bool,
    pub irreflexive: bool,
    pub acyclic: bool,
    pub transitive: bool,
    pub negatively_transitive: bool,
    /// `(m,n)` to satisfaction; empty unless asymmetric and acyclic.
    pub ferrers: IndexMap<String, bool>,
    pub class: Option<ClassInfo>,
    pub class_full_lattice: Option<ClassInfo>,
}

impl ClassifyReport {
    fn text(&self) -> String {
        let mut s = format!("relation: {}\n", pairs_text(&self.relation));
        for (k, v) in [
            ("asymmetric", self.asymmetric),
            ("irreflexive", self.irreflexive),
            ("acyclic", self.acyclic),
            ("transitive", self.transitive),
            ("negatively transitive", self.negatively_transitive),
        ] {
            let _ = writeln!(s, "{k}: {}", yes_no(v));
        }
        for (k, v) in &self.ferrers {
            let _ = writeln!(s, "{k}-Ferrers: {}", yes_no(*v));
        }
        if let Some(c) = &self.class {
            let _ = writeln!(s, "class: {} {} ({})", c.index, c.node, c.description);
        }
        if let Some(c) = &self.class_full_lattice {
            let _ = writeln!(s, "class (full lattice): {} {}", c.index, c.node);
        }
        s
    }
}

pub fn classify_report(rel: &BinaryRelation) -> ClassifyReport {
    let profile = relation_profile(rel);
    let class = |basis| {
        desirability_class_with(rel, basis)
            .ok()
            .map(|c| class_info(&c))
    };
    ClassifyReport {
        relation: pairs_of(rel),
        asymmetric: profile.asymmetric,
        irreflexive: profile.irreflexive,
        acyclic: profile.acyclic,
        transitive: profile.transitive,
        negatively_transitive: profile.negatively_transitive,
        ferrers: profile
            .ferrers
            .unwrap_or_default()
            .into_iter()
            .map(|(p, v)| (p.to_string(), v))
            .collect(),
        class: class(ClassificationBasis::Characterized),
        class_full_lattice: class(ClassificationBasis::FullLattice),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeEntry {
    pub item: String,
    pub menu: String,
    pub q: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BmReport {
    pub alternatives: Vec<String>,
    /// Menu key to item to probability.
    pub p: IndexMap<String, IndexMap<String, String>>,
    /// Menu key to item to Block-Marschak polynomial.
    pub q: IndexMap<String, IndexMap<String, String>>,
    pub negative: Vec<NegativeEntry>,
    pub negativity_vector: IndexMap<String, String>,
    pub rum: bool,
    pub monotonic: bool,
    /// Regularity failures rendered as `x: {x,w} ⊆ {x,y,w}`.
    pub regularity_violations: Vec<String>,
}

/// Singletons first, then pairs and so on; lexicographic within a size.
fn table_order(g: &GroundSet) -> Vec<Menu> {
    let mut menus: Vec<Menu> = g.nonempty_menus().collect();
    menus.sort_by_cached_key(|m| (m.len(), m.items().collect::<Vec<_>>()));
    menus
}

pub fn bm_report(p: &StochasticChoice) -> BmReport {
    let g = p.ground();
    let table = bm_table(p);
    let row = |m: Menu, f: &dyn Fn(usize) -> String| -> IndexMap<String, String> {
        m.items().map(|a| (g.name(a).to_string(), f(a))).collect()
    };
    let mono = is_monotonic(p);
    let menus = table_order(g);
    let negative: Vec<NegativeEntry> = table
        .negative()
        .into_iter()
        .map(|(a, m, q)| NegativeEntry {
            item: g.name(a).to_string(),
            menu: g.menu_key(m),
            q: format_rational(&q),
        })
        .collect();
    BmReport {
        alternatives: g.names().to_vec(),
        p: menus
            .iter()
            .map(|&m| (g.menu_key(m), row(m, &|a| format_rational(p.get(a, m)))))
            .collect(),
        q: menus
            .iter()
            .map(|&m| {
                (
                    g.menu_key(m),
                    row(m, &|a| format_rational(table.get(a, m).expect("a ∈ m"))),
                )
            })
            .collect(),
        rum: negative.is_empty(),
        negative,
        negativity_vector: negativity_vector(p)
            .values
            .iter()
            .enumerate()
            .map(|(a, v)| (g.name(a).to_string(), format_rational(v)))
            .collect(),
        monotonic: mono.monotonic,
        regularity_violations: mono
            .witnesses
            .iter()
            .map(|w| {
                format!(
                    "{}: {} ⊆ {}",
                    g.name(w.item),
                    g.format_menu(w.smaller),
                    g.format_menu(w.larger)
                )
            })
            .collect(),
    }
}

impl BmReport {
    fn rum_line(&self) -> String {
        if self.rum {
            "RUM: YES".to_string()
        } else {
            let n = self.negative.len();
            format!(
                "RUM: NO ({n} negative polynomial{})",
                if n == 1 { "" } else { "s" }
            )
        }
    }

    fn vector_line(&self) -> String {
        let v: Vec<String> = self.negativity_vector.values().cloned().collect();
        format!("negativity vector: {}", vector_text(&v))
    }

    /// Menus as rows; probability columns then `q` columns. Negative
    /// polynomials carry a trailing `*`.
    fn table_text(&self) -> String {
        let mut header = vec!["menu".to_string()];
        header.extend(self.alternatives.iter().cloned());
        header.extend(self.alternatives.iter().map(|a| format!("q_{a}")));
        let mut rows = vec![header];
        for (key, probs) in &self.p {
            let qs = &self.q[key];
            let mut row = vec![format!("{{{key}}}")];
            row.extend(
                self.alternatives
                    .iter()
                    .map(|a| probs.get(a).cloned().unwrap_or_default()),
            );
            row.extend(self.alternatives.iter().map(|a| match qs.get(a) {
                Some(v) if v.starts_with('-') => format!("{v}*"),
                Some(v) => v.clone(),
                None => String::new(),
            }));
            rows.push(row);
        }
        let cols = rows[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut s = String::new();
        for r in &rows {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (cell, &w))| {
                    if i == 0 {
                        format!("{cell:<w$}")
                    } else {
                        format!("{cell:>w$}")
                    }
                })
                .collect();
            let line = cells.join("  ");
            let _ = writeln!(s, "{}", line.trim_end());
        }
        s
    }

    fn text(&self) -> String {
        format!(
            "{}{}\n{}\nmonotonic: {}\n",
            self.table_text(),
            self.vector_line(),
            self.rum_line(),
            yes_no(self.monotonic)
        )
    }

    fn rum_text(&self) -> String {
        let mut s = format!("{}\n", self.rum_line());
        for e in &self.negative {
            let _ = writeln!(s, "  q({}, {{{}}}) = {}", e.item, e.menu, e.q);
        }
        let _ = writeln!(s, "{}", self.vector_line());
        let _ = writeln!(s, "monotonic: {}", yes_no(self.monotonic));
        for v in &self.regularity_violations {
            let _ = writeln!(s, "  {v}");
        }
        s
    }
}

/// The `rum-check` JSON report: the BM report without the full tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RumReport {
    pub rum: bool,
    pub negative: Vec<NegativeEntry>,
    pub negativity_vector: IndexMap<String, String>,
    pub monotonic: bool,
    pub regularity_violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub first: String,
    pub second: String,
    pub first_vector: IndexMap<String, String>,
    pub second_vector: IndexMap<String, String>,
    /// One of `equally irrational`, `first less irrational`,
    /// `second less irrational`, `incomparable`.
    pub verdict: String,
    pub statement: String,
    /// Image of each alternative under the witness permutation(s).
    pub witnesses: Vec<Vec<String>>,
    pub total_variation: String,
    pub kl_first_second: String,
    pub kl_second_first: String,
}

impl CompareReport {
    fn text(&self) -> String {
        let v =
            |m: &IndexMap<String, String>| vector_text(&m.values().cloned().collect::<Vec<_>>());
        format!(
            "v({}) = {}\nv({}) = {}\n{}\ntotal variation: {}\nKL({} || {}): {}\nKL({} || {}): {}\n",
            self.first,
            v(&self.first_vector),
            self.second,
            v(&self.second_vector),
            self.statement,
            self.total_variation,
            self.first,
            self.second,
            self.kl_first_second,
            self.second,
            self.first,
            self.kl_second_first
        )
    }
}

pub fn compare_report(
    p: &StochasticChoice,
    q: &StochasticChoice,
    labels: [&str; 2],
) -> Result<CompareReport, Error> {
    let g = p.ground();
    let [a, b] = labels;
    let verdict = compare_irrationality(p, q)?;
    let image = |sigma: &crate::ground::Permutation| -> Vec<String> {
        (0..g.len())
            .map(|x| g.name(sigma.apply(x)).to_string())
            .collect()
    };
    let (kind, statement, witnesses) = match &verdict {
        PreorderVerdict::EquallyIrrational { forward, backward } => (
            "equally irrational",
            format!("{a} and {b} equally irrational"),
            vec![image(forward), image(backward)],
        ),
        PreorderVerdict::LeftLess { witness } => (
            "first less irrational",
            format!("{a} strictly less irrational than {b}"),
            vec![image(witness)],
        ),
        PreorderVerdict::RightLess { witness } => (
            "second less irrational",
            format!("{b} strictly less irrational than {a}"),
            vec![image(witness)],
        ),
        PreorderVerdict::Incomparable => (
            "incomparable",
            format!("{a} and {b} incomparably irrational"),
            vec![],
        ),
    };
    let vector = |s: &StochasticChoice| -> IndexMap<String, String> {
        negativity_vector(s)
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| (g.name(i).to_string(), format_rational(v)))
            .collect()
    };
    Ok(CompareReport {
        first: a.to_string(),
        second: b.to_string(),
        first_vector: vector(p),
        second_vector: vector(q),
        verdict: kind.to_string(),
        statement,
        witnesses,
        total_variation: format_rational(&total_variation(p, q)?),
        kl_first_second: kl_divergence(p, q)?.to_string(),
        kl_second_first: kl_divergence(q, p)?.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomLine {
    pub axiom: String,
    pub checked: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomsSummary {
    pub metric: String,
    pub alternatives: String,
    pub instances: String,
    pub seed: Option<String>,
    pub results: Vec<AxiomLine>,
}

impl AxiomsSummary {
    fn text(&self) -> String {
        let mut s = format!(
            "metric: {}\ninstances: {} on {} alternatives{}\n",
            self.metric,
            self.instances,
            self.alternatives,
            self.seed
                .as_ref()
                .map(|s| format!(" (seed {s})"))
                .unwrap_or_default()
        );
        for r in &self.results {
            let _ = writeln!(
                s,
                "{:<5} {} ({} checked)",
                r.axiom,
                if r.passed { "PASS" } else { "FAIL" },
                r.checked
            );
            if let Some(c) = &r.counterexample {
                for line in c.lines() {
                    let _ = writeln!(s, "      {line}");
                }
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub benchmark: String,
    pub alternatives: Vec<String>,
    pub count: String,
    pub members: Vec<String>,
    /// Rationalizing relations, decisive benchmark only.
    pub relations: Option<Vec<Vec<[String; 2]>>>,
}

impl EnumerateReport {
    fn text(&self) -> String {
        let mut s = format!(
            "benchmark: {} on {{{}}}\ncount: {}\n",
            self.benchmark,
            self.alternatives.join(","),
            self.count
        );
        for (i, m) in self.members.iter().enumerate() {
            match &self.relations {
                Some(r) => {
                    let _ = writeln!(s, "{m}  by {}", pairs_text(&r[i]));
                }
                None => {
                    let _ = writeln!(s, "{m}");
                }
            }
        }
        s
    }
}

// --------------------------------------------------------------- dispatch

enum Rendered {
    Text(String),
    Json(String),
}

fn render<T: Serialize>(
    format: OutputFormat,
    report: &T,
    text: impl FnOnce(&T) -> String,
) -> Rendered {
    match format {
        OutputFormat::Text => Rendered::Text(text(report)),
        OutputFormat::Json => Rendered::Json(to_json(report)),
    }
}

/// Pretty JSON as emitted by the CLI.
pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports are plain data")
}

fn execute(cli: &Cli) -> CliResult<Rendered> {
    let out = cli.output;
    match &cli.command {
        Command::Check {
            file,
            default_empty,
            basis,
        } => {
            let c = load_choice(file, *default_empty)?;
            Ok(render(
                out,
                &check_report(&c, (*basis).into()),
                CheckReport::text,
            ))
        }
        Command::Distance {
            first,
            second,
            metric,
            default_empty,
        } => {
            let a = load_choice(first, *default_empty)?;
            let b = load_choice(second, *default_empty)?;
            if a.ground() != b.ground() {
                return Err(CliError::input(format!(
                    "{} and {} have different alternatives",
                    first.display(),
                    second.display()
                )));
            }
            Ok(render(
                out,
                &distance_report(&a, &b, (*metric).into())?,
                DistanceReport::text,
            ))
        }
        Command::Degree {
            files,
            metric,
            benchmark,
            weights,
            basis,
            default_empty,
        } => {
            let weights = match weights {
                Some(path) => {
                    if *metric != MetricArg::Rat || *benchmark != BenchmarkArg::Decisive {
                        return Err(CliError::input(
                            "--weights requires --metric rat --benchmark decisive",
                        ));
                    }
                    let w = WeightingMap::from_json(&read(path)?)
                        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                    w.validate().map_err(|v| {
                        CliError::input(format!(
                            "{}: infeasible weighting map: {v}",
                            path.display()
                        ))
                    })?;
                    Some(w)
                }
                None => None,
            };
            let mut results = Vec::new();
            let mut size = 0;
            for path in files {
                let c = load_choice(path, *default_empty)?;
                let report = match &weights {
                    Some(w) => {
                        let cc = ChoiceCorrespondence::new(c).map_err(|e| {
                            CliError::input(format!(
                                "{}: weighted degrees need a decisive choice: {e}",
                                path.display()
                            ))
                        })?;
                        weighted_irr_degree_with(&cc, w, (*basis).into())?
                    }
                    None => irr_degree(&c, &Metric::from(*metric), (*benchmark).into())?,
                };
                size = report.benchmark_size;
                results.push(DegreeEntry {
                    dataset: stem(path),
                    degree: format_rational(&report.degree),
                    minimizers: report.minimizers.iter().map(minimizer_entry).collect(),
                });
            }
            let summary = DegreeSummary {
                metric: Metric::from(*metric).to_string(),
                benchmark: BenchmarkKind::from(*benchmark).to_string(),
                benchmark_size: size.to_string(),
                weighted: weights.is_some(),
                results,
            };
            Ok(render(out, &summary, DegreeSummary::text))
        }
        Command::ClassifyRelation { file } => {
            let rel = load_relation(file)?;
            Ok(render(out, &classify_report(&rel), ClassifyReport::text))
        }
        Command::Bm { file } => {
            let p = load_stochastic(file)?;
            Ok(render(out, &bm_report(&p), BmReport::text))
        }
        Command::RumCheck { file } => {
            let p = load_stochastic(file)?;
            let full = bm_report(&p);
            let text = full.rum_text();
            let check = is_rum(&p);
            debug_assert_eq!(check.rum, full.rum);
            let report = RumReport {
                rum: full.rum,
                negative: full.negative,
                negativity_vector: full.negativity_vector,
                monotonic: full.monotonic,
                regularity_violations: full.regularity_violations,
            };
            Ok(render(out, &report, |_| text))
        }
        Command::CompareStochastic {
            first,
            second,
            labels,
        } => {
            let p = load_stochastic(first)?;
            let q = load_stochastic(second)?;
            if p.ground() != q.ground() {
                return Err(CliError::input(format!(
                    "{} and {} have different alternatives",
                    first.display(),
                    second.display()
                )));
            }
            let (la, lb) = match labels {
                Some(l) => (l[0].clone(), l[1].clone()),
                None => (short_label(first), short_label(second)),
            };
            let report = compare_report(&p, &q, [&la, &lb])?;
            Ok(render(out, &report, CompareReport::text))
        }
        Command::Axioms {
            metric,
            size,
            samples,
            seed,
        } => {
            crate::benchmark::check_size(*size, max_ground_size())?;
            let ground = GroundSet::with_size(*size)?.shared();
            let (instances, label, seed) = if *size == 2 {
                (
                    AxiomInstances::exhaustive(ground)?,
                    "exhaustive".to_string(),
                    None,
                )
            } else {
                let mut rng = seeded_rng(*seed);
                (
                    AxiomInstances::sampled(ground, *samples, &mut rng),
                    format!("{samples} sampled pairs and triples"),
                    Some(seed.to_string()),
                )
            };
            let metric = Metric::from(*metric);
            let report = check_klamler_axioms(&metric, &instances)?;
            let summary = AxiomsSummary {
                metric: metric.to_string(),
                alternatives: size.to_string(),
                instances: label,
                seed,
                results: report
                    .results
                    .iter()
                    .map(|r| AxiomLine {
                        axiom: r.axiom.to_string(),
                        checked: r.checked.to_string(),
                        passed: r.passed(),
                        counterexample: r.counterexample.as_ref().map(|c| c.to_string()),
                    })
                    .collect(),
            };
            Ok(render(out, &summary, AxiomsSummary::text))
        }
        Command::Enumerate {
            benchmark,
            size,
            count_only,
        } => {
            crate::benchmark::check_size(*size, max_ground_size())?;
            let ground = GroundSet::with_size(*size)?.shared();
            let (members, relations) = match benchmark {
                BenchmarkArg::Quasi => (enumerate_rational_quasi_choices(&ground)?, None),
                BenchmarkArg::Decisive => {
                    let (c, r): (Vec<_>, Vec<_>) =
                        enumerate_rational_choices(&ground)?.into_iter().unzip();
                    (c, Some(r))
                }
            };
            let count = members.len();
            let report = EnumerateReport {
                benchmark: BenchmarkKind::from(*benchmark).to_string(),
                alternatives: ground.names().to_vec(),
                count: count.to_string(),
                members: if *count_only {
                    vec![]
                } else {
                    members.iter().map(|c| c.to_string()).collect()
                },
                relations: relations
                    .filter(|_| !count_only)
                    .map(|r| r.iter().map(pairs_of).collect()),
            };
            Ok(render(out, &report, EnumerateReport::text))
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    let result = if cli.parallelism > 0 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(cli.parallelism)
            .build()
        {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(CliError::input(format!(
                "cannot start {} threads: {e}",
                cli.parallelism
            ))),
        }
    } else {
        execute(&cli)
    };
    match result {
        Ok(Rendered::Text(s)) => {
            let _ = write!(stdout, "{s}");
            EXIT_OK
        }
        Ok(Rendered::Json(s)) => {
            let _ = writeln!(stdout, "{s}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}
