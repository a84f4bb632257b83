//! Acceptance criteria 1 to 10, run as one target that prints a pass/fail
//! line per criterion. Expected values are the reference numbers; the
//! property suites of criterion 10 compare against brute-force oracles.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use irr::axioms::{check_klamler_axioms, AxiomInstances};
use irr::choice::ChoiceCorrespondence;
use irr::ferrers::{is_mn_ferrers, relation_profile, TRACKED};
use irr::ground::Menu;
use irr::irrationality::weighted_irr_degree;
use irr::metrics::Metric;
use irr::rational::{format_rational, rational};
use irr::sampling::{
    random_asymmetric_acyclic_relation, random_order_distribution, random_permutation,
    random_quasi_choice, random_tenths_vector, seeded_rng,
};
use irr::stochastic::{
    apply_permutation, bm_table, compare_irrationality, dominating_permutation, is_monotonic,
    kl_divergence, sample_rum, total_variation, Divergence, PreorderVerdict,
};
use irr::{
    delta_distance, irr_degree, is_rationalizable, negativity_vector, rat_distance,
    rational_localization, BenchmarkKind, QuasiChoice, Rational, StochasticChoice, WeightingMap,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn delta(a: &str, b: &str) -> u64 {
    delta_distance(&choice(a), &choice(b)).unwrap().value
}

fn rat(a: &str, b: &str) -> u64 {
    rat_distance(&choice(a), &choice(b)).unwrap().value
}

fn degree(name: &str, metric: Metric) -> irr::DegreeReport {
    irr_degree(&choice(name), &metric, BenchmarkKind::Quasi).unwrap()
}

fn criterion_1() -> Outcome {
    let (d2, d3) = (delta("ex3_1_c1", "ex3_1_c2"), delta("ex3_1_c1", "ex3_1_c3"));
    ensure!(
        (d2, d3) == (2, 2),
        "d_delta(c1,c2), d_delta(c1,c3) = {d2}, {d3}"
    );
    Ok("d_delta(c1,c2) = d_delta(c1,c3) = 2".into())
}

fn criterion_2() -> Outcome {
    let ds: Vec<u64> = ["ex3_2_c2", "ex3_2_c3", "ex3_2_c4"]
        .iter()
        .map(|c| delta("ex3_2_c1", c))
        .collect();
    ensure!(ds == [4, 4, 4], "d_delta(c1, c2..c4) = {ds:?}");
    Ok("d_delta(c1,c2) = d_delta(c1,c3) = d_delta(c1,c4) = 4".into())
}

/// Rows of the localization table, each as the set of bracket-notation
/// entries over the nonempty subsets of the base menu.
const LOCALIZATION_ROWS: [(&str, &str, &str); 4] = [
    ("xy", "[x], [y], [x] y", "[x], [y], x [y]"),
    ("xz", "[x], [z], [x] z", "[x], [z], [x] z"),
    ("yz", "[y], [z], [y] z", "[y], [z], [y] z"),
    (
        "xyz",
        "[x], [y], [z], x [y], [x] z, [y] z, x [y] z",
        "[x], [y], [z], x [y], [x] z, [y] z, x [y] z",
    ),
];

fn entries(rendered: &str) -> BTreeSet<String> {
    rendered.split(", ").map(str::to_string).collect()
}

fn criterion_3() -> Outcome {
    let c2 = choice("ex3_1_c2");
    let c2p = choice("ex3_3_c2prime");
    let g = c2.ground().clone();
    for (base, left, right) in LOCALIZATION_ROWS {
        let a = g.menu(base).unwrap();
        let got_l = rational_localization(&c2, a).unwrap().render(&g);
        let got_r = rational_localization(&c2p, a).unwrap().render(&g);
        ensure!(entries(&got_l) == entries(left), "(c2)_{base}: {got_l}");
        ensure!(entries(&got_r) == entries(right), "(c2')_{base}: {got_r}");
    }
    let d = rat("ex3_1_c2", "ex3_3_c2prime");
    ensure!(d == 2, "d_rat(c2,c2') = {d}");
    Ok("localization table matches row for row; d_rat(c2,c2') = 2".into())
}

fn criterion_4() -> Outcome {
    let (cc2, cc1, c1c2) = (
        rat("remark_a1_C", "remark_a1_C2"),
        rat("remark_a1_C", "remark_a1_C1"),
        rat("remark_a1_C1", "remark_a1_C2"),
    );
    ensure!(
        irr::metrics::is_between(
            &choice("remark_a1_C"),
            &choice("remark_a1_C1"),
            &choice("remark_a1_C2")
        )
        .unwrap(),
        "C' is not between C and C''"
    );
    ensure!(
        (cc2, cc1, c1c2) == (10, 8, 4),
        "A1: {cc2} vs {cc1} + {c1c2}"
    );
    let (c, dd) = (
        rat("remark_a3_C", "remark_a3_Cp"),
        rat("remark_a3_D", "remark_a3_Dp"),
    );
    ensure!(
        (c, dd) == (1, 2),
        "A3: d_rat(C,C') = {c}, d_rat(D,D') = {dd}"
    );
    let (cp, tilde) = (
        rat("remark_a4_C", "remark_a4_Cp"),
        rat("remark_a4_Ct", "remark_a4_Ctp"),
    );
    ensure!(
        (cp, tilde) == (8, 6),
        "A4': d_rat(C,C') = {cp}, d_rat(Ct,Ct') = {tilde}"
    );
    Ok("A1: 10 vs 8 + 4; A3: 1 vs 2; A4': 8 vs 6".into())
}

fn criterion_5() -> Outcome {
    let names = ["ex3_1_c1", "ex3_1_c2", "ex3_1_c3"];
    let d: Vec<Rational> = names
        .iter()
        .map(|c| degree(c, Metric::Delta).degree)
        .collect();
    let r: Vec<_> = names.iter().map(|c| degree(c, Metric::Rat)).collect();
    let rd: Vec<Rational> = r.iter().map(|x| x.degree.clone()).collect();
    ensure!(
        d == [rational(0, 1), rational(2, 1), rational(2, 1)],
        "irr_delta = {d:?}"
    );
    ensure!(
        rd == [rational(0, 1), rational(2, 1), rational(3, 1)],
        "irr_rat = {rd:?}"
    );
    ensure!(
        r[1].is_minimizer(&choice("ex3_3_c2prime")),
        "c2' is not an argmin for c2"
    );
    ensure!(
        r[2].is_minimizer(&choice("ex4_2_c3prime")),
        "c3' is not an argmin for c3"
    );
    Ok("irr_delta = (0,2,2), irr_rat = (0,2,3); c2' and c3' are minimizers".into())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let names = ["ex3_2_c1", "ex3_2_c2", "ex3_2_c3", "ex3_2_c4"];
    let d: Vec<String> = names
        .iter()
        .map(|c| format_rational(&degree(c, Metric::Delta).degree))
        .collect();
    let r: Vec<String> = names
        .iter()
        .map(|c| format_rational(&degree(c, Metric::Rat).degree))
        .collect();
    let elapsed = start.elapsed();
    ensure!(
        d[1..] == ["4", "4", "4"],
        "irr_delta(c2..c4) = {:?}",
        &d[1..]
    );
    ensure!(r == ["0", "6", "16", "19"], "irr_rat = {r:?}");
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!(
        "irr_delta = 4 for c2..c4, irr_rat = (0,6,16,19) in {elapsed:.2?}"
    ))
}

fn criterion_7() -> Outcome {
    let names = ["ex3_2_c1", "ex3_2_c2", "ex3_2_c3", "ex3_2_c4"];
    let run = |weights: &str| -> Vec<Rational> {
        let w = WeightingMap::from_json(&fixture_text(weights)).unwrap();
        names
            .iter()
            .map(|c| {
                let c = ChoiceCorrespondence::new(choice(c)).unwrap();
                weighted_irr_degree(&c, &w).unwrap().degree
            })
            .collect()
    };
    let w = run("weights_linear");
    let wp = run("weights_prime");
    let expect_w = [q("0"), q("5.4"), q("12"), q("13.2")];
    let expect_wp = [q("0"), q("6.6"), q("16"), q("17.6")];
    ensure!(w == expect_w, "w: {w:?}");
    ensure!(wp == expect_wp, "w': {wp:?}");
    Ok("w: (0, 5.4, 12, 13.2); w': (0, 6.6, 16, 17.6)".into())
}

/// `(menu, [(item, p, q)])` rows of the two reference tables.
type TableRows = [(
    &'static str,
    &'static [(&'static str, &'static str, &'static str)],
); 15];

const TABLE_1: TableRows = [
    ("x", &[("x", "1", "0.5")]),
    ("y", &[("y", "1", "-0.1")]),
    ("z", &[("z", "1", "0.1")]),
    ("w", &[("w", "1", "0.5")]),
    ("xy", &[("x", "0.5", "-0.4"), ("y", "0.5", "0.3")]),
    ("xz", &[("x", "0.4", "-0.2"), ("z", "0.6", "0.2")]),
    ("xw", &[("x", "0.9", "0.2"), ("w", "0.1", "0")]),
    ("yz", &[("y", "0.5", "0"), ("z", "0.5", "0.2")]),
    ("yw", &[("y", "0.7", "0.4"), ("w", "0.3", "0.1")]),
    ("zw", &[("z", "0.6", "-0.1"), ("w", "0.4", "0.3")]),
    (
        "xyz",
        &[
            ("x", "0.6", "0.2"),
            ("y", "0.3", "0.1"),
            ("z", "0.1", "-0.1"),
        ],
    ),
    (
        "xyw",
        &[("x", "0.7", "0.3"), ("y", "0.1", "-0.1"), ("w", "0.2", "0")],
    ),
    (
        "xzw",
        &[("x", "0.4", "0"), ("z", "0.5", "0.3"), ("w", "0.1", "-0.1")],
    ),
    (
        "yzw",
        &[("y", "0.4", "0.2"), ("z", "0.4", "0.2"), ("w", "0.2", "0")],
    ),
    (
        "xyzw",
        &[
            ("x", "0.4", "0.4"),
            ("y", "0.2", "0.2"),
            ("z", "0.2", "0.2"),
            ("w", "0.2", "0.2"),
        ],
    ),
];

const TABLE_2: TableRows = [
    ("x", &[("x", "1", "0.2")]),
    ("y", &[("y", "1", "0.2")]),
    ("z", &[("z", "1", "0.1")]),
    ("w", &[("w", "1", "0.5")]),
    ("xy", &[("x", "0.6", "0"), ("y", "0.4", "0.1")]),
    ("xz", &[("x", "0.5", "0"), ("z", "0.5", "0.1")]),
    ("xw", &[("x", "0.8", "0.2"), ("w", "0.2", "0")]),
    ("yz", &[("y", "0.4", "-0.1"), ("z", "0.6", "0.2")]),
    ("yw", &[("y", "0.7", "0.3"), ("w", "0.3", "0")]),
    ("zw", &[("z", "0.6", "0"), ("w", "0.4", "0.2")]),
    (
        "xyz",
        &[("x", "0.5", "0"), ("y", "0.3", "0.1"), ("z", "0.2", "0")],
    ),
    (
        "xyw",
        &[("x", "0.6", "0.1"), ("y", "0.2", "0"), ("w", "0.2", "0.1")],
    ),
    (
        "xzw",
        &[("x", "0.5", "0"), ("z", "0.4", "0.2"), ("w", "0.1", "0")],
    ),
    (
        "yzw",
        &[
            ("y", "0.4", "0.2"),
            ("z", "0.4", "0.2"),
            ("w", "0.2", "0.1"),
        ],
    ),
    (
        "xyzw",
        &[
            ("x", "0.5", "0.5"),
            ("y", "0.2", "0.2"),
            ("z", "0.2", "0.2"),
            ("w", "0.1", "0.1"),
        ],
    ),
];

/// Number of matching entries (probabilities and polynomials) of `p`
/// against a reference table.
fn check_table(p: &StochasticChoice, rows: &TableRows) -> Result<usize, String> {
    let g = p.ground();
    let table = bm_table(p);
    let mut matched = 0;
    for (menu, cells) in rows {
        let m = g.menu(menu).unwrap();
        ensure!(
            cells.len() == m.len(),
            "row {menu} has {} cells",
            cells.len()
        );
        for (item, prob, poly) in cells.iter() {
            let a = g.index_of(item).unwrap();
            ensure!(
                *p.get(a, m) == q(prob),
                "p({item}, {menu}) = {}",
                format_rational(p.get(a, m))
            );
            let got = table.get(a, m).unwrap();
            ensure!(
                *got == q(poly),
                "q({item}, {menu}) = {} (expected {poly})",
                format_rational(got)
            );
            matched += 2;
        }
    }
    Ok(matched)
}

fn criterion_8() -> Outcome {
    let p1 = stochastic("table1_p1");
    let p2 = stochastic("table2_p2");
    let n1 = check_table(&p1, &TABLE_1)?;
    let n2 = check_table(&p2, &TABLE_2)?;
    ensure!((n1, n2) == (64, 64), "matched {n1} and {n2} entries");
    let v1 = negativity_vector(&p1).values;
    let v2 = negativity_vector(&p2).values;
    ensure!(
        v1 == [q("0.6"), q("0.2"), q("0.2"), q("0.1")],
        "v_p1 = {v1:?}"
    );
    ensure!(v2 == [q("0"), q("0.1"), q("0"), q("0")], "v_p2 = {v2:?}");
    let verdict = compare_irrationality(&p2, &p1).unwrap();
    ensure!(
        matches!(verdict, PreorderVerdict::LeftLess { .. }),
        "p2 vs p1: {verdict:?}"
    );
    ensure!(is_monotonic(&p2).monotonic, "p2 is not monotonic");
    ensure!(!irr::is_rum(&p2).rum, "p2 is RUM");
    Ok("64 + 64 table entries; v_p1 = (0.6,0.2,0.2,0.1), v_p2 = (0,0.1,0,0); p2 <* p1; p2 monotonic, not RUM".into())
}

fn criterion_9() -> Outcome {
    let p = stochastic("ex5_3_p");
    let p1 = stochastic("ex5_3_p1");
    let p2 = stochastic("ex5_3_p2");
    let p3 = stochastic("ex5_4_p3");
    let (t1, t2) = (
        total_variation(&p, &p1).unwrap(),
        total_variation(&p, &p2).unwrap(),
    );
    ensure!(
        t1 == rational(4, 15) && t2 == rational(4, 15),
        "delta = {t1}, {t2}"
    );
    let kl = |x: &StochasticChoice| kl_divergence(x, &p).unwrap();
    let (k1, k2, k3) = (kl(&p1), kl(&p2), kl(&p3));
    let less = |a: Divergence, b: Divergence| a.compare_with_margin(b, 1e-9).is_lt();
    ensure!(
        less(k1, k3) && less(k3, k2),
        "KL: p1 {k1}, p3 {k3}, p2 {k2}"
    );
    let v3 = negativity_vector(&p3).values;
    let expected = [q("0.03"), q("0.03"), q("0.03")];
    ensure!(
        v3 == expected,
        "v_p3 = ({}) exactly, not (0.03,0.03,0.03); delta = 4/15 and KL ordering hold",
        v3.iter().map(format_rational).collect::<Vec<_>>().join(",")
    );
    Ok("delta(p,p1) = delta(p,p2) = 4/15; KL p1 < p3 < p2; v_p3 = (0.03,0.03,0.03)".into())
}

/// (a) Sen oracle against brute-force relation enumeration.
fn suite_sen() -> Outcome {
    let mut rng = seeded_rng(10);
    let mut checked = 0;
    for n in [2, 3] {
        let g = ground(n);
        let induced: HashSet<Vec<Menu>> = all_relations(&g).map(|r| naive_induced(&r)).collect();
        let cases: Vec<QuasiChoice> = if n == 2 {
            // a subset for each of {x}, {y} and {x,y}: 2 * 2 * 4 tables
            (0..16u32)
                .map(|code| {
                    let table = vec![Menu::EMPTY, Menu(code & 1), Menu(code & 2), Menu(code >> 2)];
                    QuasiChoice::from_table(g.clone(), table).unwrap()
                })
                .collect()
        } else {
            (0..1000)
                .map(|_| random_quasi_choice(&g, &mut rng))
                .collect()
        };
        for c in &cases {
            let expected = induced.contains(c.table());
            ensure!(
                is_rationalizable(c).is_rationalizable() == expected,
                "disagrees on {c}"
            );
            checked += 1;
        }
    }
    Ok(format!("(a) {checked} quasi-choices"))
}

/// (b) d_delta passes the Klamler axioms.
fn suite_delta_axioms() -> Outcome {
    let exhaustive = AxiomInstances::exhaustive(ground(2)).unwrap();
    let sampled = AxiomInstances::sampled(ground(3), 500, &mut seeded_rng(11));
    for instances in [&exhaustive, &sampled] {
        let report = check_klamler_axioms(&Metric::Delta, instances).unwrap();
        if let Some(r) = report.results.iter().find(|r| !r.passed()) {
            return Err(format!(
                "{}: {}",
                r.axiom.label(),
                r.counterexample.as_ref().unwrap()
            ));
        }
    }
    Ok("(b) exhaustive n=2 and 500 sampled n=3".into())
}

/// (c) Mixtures of linear orders are RUM.
fn suite_falmagne() -> Outcome {
    let mut rng = seeded_rng(12);
    for n in [3, 4] {
        let g = ground(n);
        for _ in 0..200 {
            let support = 1 + (rand::Rng::gen_range(&mut rng, 0..6));
            let dist = random_order_distribution(n, support, &mut rng);
            let p = sample_rum(&g, &dist).unwrap();
            ensure!(irr::is_rum(&p).rum, "mixture at n={n} not RUM");
        }
    }
    Ok("(c) 200 mixtures each at n=3,4".into())
}

fn ferrers_monotone(rel: &irr::BinaryRelation) -> Result<(), String> {
    let sat: BTreeMap<_, bool> = TRACKED
        .iter()
        .map(|p| (*p, is_mn_ferrers(rel, p.m, p.n).unwrap()))
        .collect();
    for (hi, &h) in &sat {
        for (lo, &l) in &sat {
            if hi.m >= lo.m && hi.n >= lo.n && h && !l {
                return Err(format!("{rel}: {hi} holds but {lo} fails"));
            }
        }
    }
    Ok(())
}

/// (d) Ferrers satisfaction is monotone in (m,n).
fn suite_ferrers() -> Outcome {
    let g3 = ground(3);
    let mut exhaustive = 0;
    for rel in all_relations(&g3) {
        let profile = relation_profile(&rel);
        if profile.asymmetric && profile.acyclic {
            ferrers_monotone(&rel)?;
            exhaustive += 1;
        }
    }
    let g4 = ground(4);
    let mut rng = seeded_rng(13);
    for _ in 0..500 {
        ferrers_monotone(&random_asymmetric_acyclic_relation(&g4, &mut rng))?;
    }
    Ok(format!("(d) {exhaustive} relations at n=3, 500 at n=4"))
}

/// (e) Relabeling permutes the negativity vector.
fn suite_equivariance() -> Outcome {
    let mut rng = seeded_rng(14);
    for i in 0..100 {
        let n = 2 + i % 3;
        let g = ground(n);
        let p = random_stochastic(&g, &mut rng);
        let sigma = random_permutation(n, &mut rng);
        let v = negativity_vector(&p).values;
        let w = negativity_vector(&apply_permutation(&p, &sigma).unwrap()).values;
        ensure!(
            (0..n).all(|x| v[x] == w[sigma.apply(x)]),
            "v = {v:?}, permuted {w:?}"
        );
    }
    Ok("(e) 100 pairs".into())
}

/// (f) Sorted matching agrees with the existential definition.
fn suite_preorder() -> Outcome {
    let mut rng = seeded_rng(15);
    for i in 0..1000 {
        let n = 1 + i % 5;
        let v = random_tenths_vector(n, 4, &mut rng);
        let w = random_tenths_vector(n, 4, &mut rng);
        let fast = dominating_permutation(&v, &w);
        ensure!(
            fast.is_some() == brute_force_dominated(&v, &w),
            "disagree on {v:?} vs {w:?}"
        );
        if let Some(s) = fast {
            ensure!(
                (0..n).all(|x| v[x] <= w[s.apply(x)]),
                "bad witness for {v:?} vs {w:?}"
            );
        }
    }
    Ok("(f) 1000 vector pairs".into())
}

fn criterion_10() -> Outcome {
    let suites: [fn() -> Outcome; 6] = [
        suite_sen,
        suite_delta_axioms,
        suite_falmagne,
        suite_ferrers,
        suite_equivariance,
        suite_preorder,
    ];
    let mut done = Vec::new();
    for suite in suites {
        done.push(suite()?);
    }
    Ok(done.join("; "))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u8, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = Vec::new();
    // Written straight to stderr so the lines show even when the harness
    // captures output of passing tests.
    let mut err = std::io::stderr();
    for (n, run) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        let line = match &outcome {
            Ok(detail) => format!("criterion {n}: PASS  {detail}"),
            Err(why) => format!("criterion {n}: FAIL  {why}"),
        };
        let _ = writeln!(err, "{line}");
        if outcome.is_err() {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
