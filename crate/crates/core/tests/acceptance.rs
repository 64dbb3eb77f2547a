//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use rainbow_roman::catalog::{enumerate_graphs, labeled_graphs, sample_graphs, scan, Sample};
use rainbow_roman::constructions::{add_c4, gap_instance, star_link};
use rainbow_roman::graph::named;
use rainbow_roman::hereditary::{hereditary_equality_direct, in_gk_direct, is_free, Family};
use rainbow_roman::reduction::{build_reduction, random_cnf, verify_reduction, CnfFormula};
use rainbow_roman::structure::audit_extremal;
use rainbow_roman::transfer::{rainbow_to_roman, roman_to_rainbow};
use rainbow_roman::{
    gamma_r2, gamma_roman, is_2rainbow_dominating, is_roman_dominating, Graph, RainbowAssignment, RomanAssignment,
};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

struct Solved {
    graph: Graph,
    r2: usize,
    roman: usize,
    r2_witness: RainbowAssignment,
    roman_witness: RomanAssignment,
}

fn labeled_up_to_six() -> Vec<Graph> {
    (0..=6).flat_map(|n| labeled_graphs(n).unwrap()).collect()
}

/// Every labelled graph of order at most 6 plus 10,000 order-8 samples.
fn sandwich_corpus() -> Vec<Solved> {
    let mut graphs = labeled_up_to_six();
    graphs.extend(sample_graphs(Sample { order: 8, count: 10_000, seed: 2024 }).unwrap());
    graphs
        .into_iter()
        .map(|graph| {
            let r2 = gamma_r2(&graph).unwrap();
            let roman = gamma_roman(&graph).unwrap();
            Solved { r2: r2.value, roman: roman.value, r2_witness: r2.witness, roman_witness: roman.witness, graph }
        })
        .collect()
}

fn sandwich(corpus: &[Solved]) -> Verdict {
    let violations = corpus.iter().filter(|s| !(s.r2 <= s.roman && s.roman <= 3 * s.r2 / 2)).count();
    verdict(violations == 0, format!("{} graphs, {violations} violations", corpus.len()))
}

fn conversions(corpus: &[Solved]) -> Verdict {
    let violations = corpus
        .iter()
        .filter(|s| {
            let f = roman_to_rainbow(&s.graph, &s.roman_witness).unwrap();
            let g = rainbow_to_roman(&s.graph, &s.r2_witness).unwrap();
            let forward = is_2rainbow_dominating(&s.graph, &f).unwrap() && f.weight() == s.roman;
            let backward = is_roman_dominating(&s.graph, &g).unwrap() && g.weight() <= 3 * s.r2 / 2;
            !(forward && backward)
        })
        .count();
    verdict(violations == 0, format!("{} graphs, {violations} violations", corpus.len()))
}

fn known_values() -> Verdict {
    let k2_k1 = named::complete(2).disjoint_union(&named::complete(1)).unwrap();
    let cases = [
        ("K1", named::complete(1), (1, 1)),
        ("co-K2", named::empty(2), (2, 2)),
        ("co-K3", named::empty(3), (3, 3)),
        ("K2+K1", k2_k1, (3, 3)),
        ("C4", named::cycle(4), (2, 3)),
        ("P5", named::path(5), (3, 4)),
        ("C5", named::cycle(5), (3, 4)),
    ];
    let mut wrong = Vec::new();
    for (name, g, expected) in cases {
        let solved = (gamma_r2(&g).unwrap().value, gamma_roman(&g).unwrap().value);
        let naive = (naive_gamma_r2(&g), naive_gamma_roman(&g));
        if solved != expected || naive != expected {
            wrong.push(format!("{name}: solver {solved:?}, enumeration {naive:?}"));
        }
    }
    verdict(wrong.is_empty(), if wrong.is_empty() { "7 graphs".to_owned() } else { wrong.join("; ") })
}

/// Clause lists over `num_vars` variables without complementary pairs.
fn clauses_over(num_vars: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << num_vars {
        let vars: Vec<i32> = (1..=num_vars as i32).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        for signs in 0u32..1 << vars.len() {
            out.push(vars.iter().enumerate().map(|(i, &v)| if signs >> i & 1 == 1 { -v } else { v }).collect());
        }
    }
    out
}

fn uses_all(num_vars: usize, clauses: &[Vec<i32>]) -> bool {
    (1..=num_vars as u32).all(|v| clauses.iter().flatten().any(|lit| lit.unsigned_abs() == v))
}

/// All one-variable formulas (clause multisets) and all two-variable
/// formulas (distinct clauses, both variables used) with two or three
/// clauses, then 40 seeded random 3-CNFs using every variable.
fn reduction_fixture() -> Vec<(usize, Vec<Vec<i32>>)> {
    let mut fixture = Vec::new();
    let one = clauses_over(1);
    for m in 2..=3 {
        let mut picks = vec![0usize; m];
        loop {
            fixture.push((1, picks.iter().map(|&i| one[i].clone()).collect()));
            let Some(pos) = (0..m).rev().find(|&i| picks[i] + 1 < one.len()) else { break };
            picks[pos] += 1;
            for j in pos + 1..m {
                picks[j] = picks[pos];
            }
        }
    }
    let two = clauses_over(2);
    let mut two_var = Vec::new();
    for a in 0..two.len() {
        for b in a + 1..two.len() {
            two_var.push(vec![two[a].clone(), two[b].clone()]);
            for c in b + 1..two.len() {
                two_var.push(vec![two[a].clone(), two[b].clone(), two[c].clone()]);
            }
        }
    }
    fixture.extend(two_var.into_iter().filter(|f| uses_all(2, f)).map(|f| (2, f)));
    let mut rng = rng(4096);
    let mut drawn = 0;
    while drawn < 40 {
        let n = 3 + drawn % 2;
        let m = 2 + drawn % 5;
        let f = random_cnf(&mut rng, n, m, 3);
        let clauses: Vec<Vec<i32>> = f.clauses().iter().map(|c| c.iter().map(|l| l.value()).collect()).collect();
        if uses_all(n, &clauses) {
            fixture.push((n, clauses));
            drawn += 1;
        }
    }
    fixture
}

fn reduction() -> Verdict {
    let fixture = reduction_fixture();
    let mut bad = Vec::new();
    let (mut sat, mut unsat) = (0, 0);
    for (n, clauses) in &fixture {
        let formula = CnfFormula::new(*n, clauses.clone()).unwrap();
        let gadget = build_reduction(&formula).unwrap();
        let g = &gadget.graph;
        let report = verify_reduction(&formula).unwrap();
        let satisfiable = naive_satisfiable(*n, clauses);
        let target = 2 * n + 2;
        let extracted_ok = report.assignment.as_ref().is_none_or(|a| {
            clauses.iter().all(|c| c.iter().any(|&lit| a[lit.unsigned_abs() as usize - 1] == (lit > 0)))
        });
        let ok = g.order() == 4 * n + clauses.len() + 3
            && g.is_connected()
            && g.is_k4_free()
            && report.gamma_r2 == target
            && (report.gamma_roman == target || report.gamma_roman == target + 1)
            && (report.gamma_roman == target) == satisfiable
            && report.assignment.is_some() == satisfiable
            && extracted_ok
            && report.consistent;
        if satisfiable {
            sat += 1;
        } else {
            unsat += 1;
        }
        if !ok {
            bad.push(format!("{clauses:?}"));
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{} formulas ({sat} sat, {unsat} unsat), {} inconsistencies{}",
            fixture.len(),
            bad.len(),
            bad.iter().map(|f| format!(" {f}")).collect::<String>()
        ),
    )
}

fn hereditary_equality(graphs: &[Graph]) -> Verdict {
    let family = Family::equality_obstructions();
    let mismatches =
        graphs.iter().filter(|g| hereditary_equality_direct(g).unwrap() != is_free(g, &family).unwrap()).count();
    verdict(mismatches == 0, format!("{} graphs, {mismatches} mismatches", graphs.len()))
}

fn g3_membership(graphs: &[Graph]) -> Verdict {
    let family = Family::g3_obstructions();
    let mismatches = graphs.iter().filter(|g| in_gk_direct(g, 3).unwrap() != is_free(g, &family).unwrap()).count();
    let mut checked = 0;
    let mut wrong = 0;
    for n in 0..=7 {
        for g in enumerate_graphs(n, true, false).unwrap() {
            if !g.is_complete() && is_free(&g, &family).unwrap() {
                checked += 1;
                wrong += usize::from(gamma_r2(&g).unwrap().value != 2);
            }
        }
    }
    verdict(
        mismatches == 0 && wrong == 0,
        format!(
            "{} graphs, {mismatches} mismatches; {checked} non-complete free classes up to order 7, {wrong} with γ_r2 != 2",
            graphs.len()
        ),
    )
}

fn audits(corpus: &[Solved]) -> Verdict {
    let mut graphs: Vec<&Graph> = corpus.iter().filter(|s| s.graph.order() <= 6).map(|s| &s.graph).collect();
    let samples: Vec<Graph> = [Sample { order: 7, count: 3000, seed: 77 }, Sample { order: 8, count: 3000, seed: 88 }]
        .into_iter()
        .flat_map(|s| sample_graphs(s).unwrap())
        .collect();
    graphs.extend(samples.iter());
    let (mut extremal, mut functions, mut failures) = (0, 0, 0);
    for g in graphs {
        let Ok(audit) = audit_extremal(g) else { continue };
        extremal += 1;
        functions += audit.len();
        failures += audit.iter().filter(|a| !a.properties.all()).count();
    }
    verdict(
        failures == 0 && extremal > 0,
        format!("{extremal} extremal graphs, {functions} minimum functions, {failures} failures"),
    )
}

fn constructions() -> Verdict {
    let mut rng = rng(808);
    let mut bad = 0;
    for i in 0..100 {
        let g = random_graph(&mut rng, i % 7);
        let h = add_c4(&g).unwrap();
        let ok = gamma_r2(&h).unwrap().value == gamma_r2(&g).unwrap().value + 2
            && gamma_roman(&h).unwrap().value == gamma_roman(&g).unwrap().value + 3;
        bad += usize::from(!ok);
    }
    let mut linked = 0;
    while linked < 100 {
        let g = random_graph(&mut rng, 2 + linked % 5);
        if g.is_connected() {
            continue;
        }
        linked += 1;
        let h = star_link(&g).unwrap();
        let ok = h.is_connected()
            && gamma_r2(&h).unwrap().value == gamma_r2(&g).unwrap().value + 2
            && gamma_roman(&h).unwrap().value == gamma_roman(&g).unwrap().value + 2;
        bad += usize::from(!ok);
    }
    let mut gaps = Vec::new();
    for k in 0..=4 {
        let ok = match gap_instance(k) {
            Ok((g, check)) => {
                g.is_connected()
                    && g.is_k4_free()
                    && gamma_roman(&g).unwrap().value - gamma_r2(&g).unwrap().value == k
                    && check.gap == k
            }
            Err(_) => false,
        };
        gaps.push(ok);
    }
    let gap_ok = gaps.iter().all(|&ok| ok);
    verdict(bad == 0 && gap_ok, format!("200 random graphs, {bad} wrong shifts; gap instances 0..=4 ok: {gap_ok}"))
}

fn determinism() -> Verdict {
    let samples = [Sample { order: 8, count: 300, seed: 42 }, Sample { order: 7, count: 100, seed: 7 }];
    let a = scan(5, &samples).unwrap().to_jsonl();
    let b = scan(5, &samples).unwrap().to_jsonl();
    let other = scan(5, &[Sample { order: 8, count: 300, seed: 43 }, samples[1]]).unwrap().to_jsonl();
    verdict(a == b && a != other, format!("{} bytes, identical: {}, seed-sensitive: {}", a.len(), a == b, a != other))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut all_ok = true;
    let mut report = |index: usize, name: &str, run: &mut dyn FnMut() -> Verdict| {
        let t = Instant::now();
        let v = run();
        all_ok &= v.ok;
        println!(
            "criterion {index} [{name}]: {} ({}; {:.1}s)",
            if v.ok { "PASS" } else { "FAIL" },
            v.detail,
            t.elapsed().as_secs_f64()
        );
    };

    let corpus = sandwich_corpus();
    let labeled = labeled_up_to_six();
    report(1, "sandwich bounds", &mut || sandwich(&corpus));
    report(2, "conversion contracts", &mut || conversions(&corpus));
    report(3, "known values", &mut known_values);
    report(4, "reduction equivalence", &mut reduction);
    report(5, "hereditary equality", &mut || hereditary_equality(&labeled));
    report(6, "G_3 membership", &mut || g3_membership(&labeled));
    report(7, "extremal audit", &mut || audits(&corpus));
    report(8, "constructions", &mut constructions);
    report(9, "determinism", &mut determinism);

    println!("acceptance: {} in {:.1}s", if all_ok { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
